use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pentads::contragredient::{matrix_from_json, MatrixFile};
use pentads::fixtures::run_fixtures;
use pentads::graded::DEFAULT_MAX_DIM;
use pentads::realize::{derived_realization_with_limit, RealizationCertificate};
use pentads::sl2fd::compare_report_with_limit;
use pentads::{
    contragredient_local, ctilde_minor, expand_with_limit, realize_full_km, realize_invertible, realize_symmetrizable,
    reduced_local, sl2fd_local, CartanPentad, DimensionTable, Error, FDIndexSet, QMatrix, RealizationMode,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pentads", version, about = "Graded Lie algebras from pentads of Cartan type and Cartan matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartan matrix Γ·ᵗD·A·D of a pentad.
    Cartan {
        #[arg(long)]
        pentad: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Expand a local Lie algebra and print per-degree dimensions.
    Expand {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build a pentad whose Lie algebra realizes the given matrix.
    Realize {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Cutoff for the derived-algebra dimensions in `derived` mode.
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Print rank D, rank C, dim Z, dim Δ and symmetry of a pentad.
    Structure {
        #[arg(long)]
        pentad: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Truncations of the sl₂ algebra on finite-dimensional modules.
    Sl2fd {
        /// Index set such as "(-1),(1,0),(2,0)".
        #[arg(long)]
        indices: String,
        #[arg(long, conflicts_with_all = ["expand", "compare"])]
        minor: bool,
        #[arg(long, value_name = "N", conflicts_with = "compare")]
        expand: Option<usize>,
        #[arg(long, value_name = "N")]
        compare: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the built-in worked examples and report pass/fail.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    #[arg(long)]
    pentad: Option<PathBuf>,
    /// Contragredient algebra G(C).
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Reduced contragredient algebra G′(C).
    #[arg(long)]
    reduced_matrix: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Invertible,
    Symmetrizable,
    FullKm,
    Derived,
}

enum Failure {
    Lib(Error),
    Io(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::Parse(_)) | Failure::Io(_) => 2,
            Failure::Lib(Error::DimensionLimit { .. }) => 3,
            Failure::Lib(_) | Failure::Failed(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) | Failure::Failed(m) => m.clone(),
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))
}

fn read_pentad(path: &Path) -> Result<CartanPentad, Failure> {
    Ok(CartanPentad::from_json(&read(path)?)?)
}

fn read_matrix(path: &Path) -> Result<QMatrix, Failure> {
    Ok(matrix_from_json(&read(path)?)?)
}

fn max_dim() -> Result<usize, Failure> {
    match std::env::var("PENTAD_MAX_DIM") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Lib(Error::Parse(format!("PENTAD_MAX_DIM must be a positive integer, got {v:?}")))),
        Err(_) => Ok(DEFAULT_MAX_DIM),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn matrix_output(m: &QMatrix, format: Format) -> String {
    let rows = m.to_string_rows();
    match format {
        Format::Json => pretty(&serde_json::to_value(MatrixFile::from_matrix(m)).expect("serializable")),
        Format::Csv => rows.iter().map(|r| r.join(",") + "\n").collect(),
        Format::Table => {
            let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
            rows.iter()
                .map(|r| {
                    let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
                    cells.join("  ") + "\n"
                })
                .collect()
        }
    }
}

fn table_output(t: &DimensionTable, format: Format) -> String {
    match format {
        Format::Json => pretty(&t.to_json()),
        Format::Csv => t.to_csv(),
        Format::Table => t.to_table(),
    }
}

fn key_values(pairs: &[(&str, String)], format: Format) -> String {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> = pairs
                .iter()
                .map(|(k, v)| {
                    let parsed = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.clone()));
                    (k.to_string(), parsed)
                })
                .collect();
            pretty(&Value::Object(map))
        }
        Format::Csv => {
            let mut out = String::from("key,value\n");
            for (k, v) in pairs {
                let _ = writeln!(out, "{k},{v}");
            }
            out
        }
        Format::Table => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            pairs.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
        }
    }
}

fn certificate_json(cert: &RealizationCertificate) -> Value {
    let mut v = cert.to_json();
    v["holds"] = json!(cert.holds());
    v
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Cartan { pentad, format } => Ok(matrix_output(&read_pentad(&pentad)?.cartan_matrix(), format)),
        Command::Expand {
            source,
            max_degree,
            format,
        } => {
            let local = if let Some(p) = source.pentad {
                read_pentad(&p)?.local_algebra()
            } else if let Some(p) = source.matrix {
                contragredient_local(&read_matrix(&p)?)?
            } else {
                let p = source.reduced_matrix.expect("clap requires one source");
                reduced_local(&read_matrix(&p)?)?
            };
            let algebra = expand_with_limit(&local, max_degree, max_dim()?)?;
            Ok(table_output(&algebra.dimension_table(), format))
        }
        Command::Realize {
            matrix,
            mode,
            max_degree,
        } => {
            let c = read_matrix(&matrix)?;
            let (tag, pentad) = match mode {
                Mode::Invertible => (RealizationMode::Invertible, realize_invertible(&c)?),
                Mode::Symmetrizable => (RealizationMode::Symmetrizable, realize_symmetrizable(&c)?),
                Mode::FullKm | Mode::Derived => {
                    let tag = if matches!(mode, Mode::Derived) {
                        RealizationMode::Derived
                    } else {
                        RealizationMode::FullKm
                    };
                    (tag, realize_full_km(&c)?.0)
                }
            };
            let cert = RealizationCertificate::new(tag, &pentad, &c);
            let mut out = json!({
                "pentad": pentad.to_json(),
                "certificate": certificate_json(&cert),
            });
            if matches!(mode, Mode::Derived) {
                let dims = derived_realization_with_limit(&c, max_degree, max_dim()?)?;
                let degrees: serde_json::Map<String, Value> =
                    dims.iter().map(|(d, n)| (d.to_string(), json!(n))).collect();
                out["derived_dims"] = Value::Object(degrees);
            }
            Ok(pretty(&out))
        }
        Command::Structure { pentad, format } => {
            let s = read_pentad(&pentad)?.structure_summary();
            Ok(key_values(
                &[
                    ("rank_D", s.rank_d.to_string()),
                    ("rank_C", s.rank_c.to_string()),
                    ("dim_Z", s.dim_z.to_string()),
                    ("dim_Delta", s.dim_delta.to_string()),
                    ("symmetric", s.symmetric.to_string()),
                ],
                format,
            ))
        }
        Command::Sl2fd {
            indices,
            minor,
            expand,
            compare,
            format,
        } => {
            let m: FDIndexSet = indices.parse()?;
            if let Some(n) = compare {
                let report = compare_report_with_limit(&m, n, max_dim()?)?;
                let text = match format {
                    Format::Json => pretty(&report.to_json()),
                    _ => key_values(
                        &[
                            ("indices", report.indices.clone()),
                            ("cutoff", report.cutoff.to_string()),
                            ("dims_agree", report.dims_agree.to_string()),
                            ("phi_is_homomorphism", report.phi_is_homomorphism.to_string()),
                            ("kernel_is_center", report.kernel_is_center.to_string()),
                            ("kernel_equation_holds", report.kernel_equation_holds.to_string()),
                            ("agree", report.holds().to_string()),
                        ],
                        format,
                    ),
                };
                if report.holds() {
                    Ok(text)
                } else {
                    print!("{text}");
                    Err(Failure::Failed(format!("truncation {m} does not match its reduced contragredient algebra")))
                }
            } else if let Some(n) = expand {
                let algebra = expand_with_limit(&sl2fd_local(&m), n, max_dim()?)?;
                Ok(table_output(&algebra.dimension_table(), format))
            } else {
                let _ = minor;
                Ok(matrix_output(&ctilde_minor(&m), format))
            }
        }
        Command::VerifyPaper { format } => {
            let results = run_fixtures();
            let failed = results.iter().filter(|r| !r.passed).count();
            let text = match format {
                Format::Json => pretty(&json!({
                    "fixtures": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    "failed": failed,
                })),
                Format::Csv => {
                    let mut out = String::from("fixture,passed\n");
                    for r in &results {
                        let _ = writeln!(out, "{},{}", r.name, r.passed);
                    }
                    out
                }
                Format::Table => {
                    let mut out = String::new();
                    for r in &results {
                        let _ = writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name);
                    }
                    let _ = writeln!(out, "{} of {} fixtures passed", results.len() - failed, results.len());
                    out
                }
            };
            if failed == 0 {
                Ok(text)
            } else {
                print!("{text}");
                Err(Failure::Failed(format!("{failed} fixture(s) failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}
