//! Finite truncations of the graded Lie algebra attached to `sl₂` acting on
//! countably many copies of every finite-dimensional irreducible module.
//!
//! An index is either `-1` (the adjoint copy, generators `x, y`) or a pair
//! `(i, j)`: the `j`-th copy of the `(i+1)`-dimensional irreducible, whose
//! lowest and highest weight vectors give generators `e⁻_{i,j}` in degree 1
//! and `e⁺_{i,j}` in degree -1.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::contragredient::{contragredient_local, reduced_local};
use crate::error::{Error, Result};
use crate::exactq::{q, qf, span_rank, QMatrix, QVector, Rational};
use crate::graded::{expand_with_limit, DimensionTable, DEFAULT_MAX_DIM};
use crate::local::{local_hom_check, HomCheck, LocalLieAlgebra, LocalMap};
use crate::pentad::CartanPentad;

/// Largest `i` or `j` accepted by the index-set parser.
pub const MAX_INDEX: u64 = 1_000_000;

/// The derived order puts `Minus` before every pair and compares pairs
/// lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FDIndex {
    Minus,
    Pair(u64, u64),
}

impl FDIndex {
    /// The `sl₂`-weight `i` of a pair; `None` for `-1`.
    pub fn weight(&self) -> Option<u64> {
        match self {
            FDIndex::Minus => None,
            FDIndex::Pair(i, _) => Some(*i),
        }
    }
}

impl fmt::Display for FDIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FDIndex::Minus => write!(f, "(-1)"),
            FDIndex::Pair(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// A nonempty, sorted, duplicate-free finite set of indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDIndexSet(Vec<FDIndex>);

impl FDIndexSet {
    pub fn new(mut indices: Vec<FDIndex>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidIndexSet("index set must be nonempty".into()));
        }
        indices.sort();
        indices.dedup();
        Ok(Self(indices))
    }

    pub fn indices(&self) -> &[FDIndex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_minus(&self) -> bool {
        self.0.first() == Some(&FDIndex::Minus)
    }

    /// Whether `-1` is absent and every pair has `i = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.0.iter().all(|a| a.weight() == Some(0))
    }
}

impl fmt::Display for FDIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_component(s: &str, whole: &str) -> Result<u64> {
    let v: u64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad index component {s:?} in {whole:?}")))?;
    if v > MAX_INDEX {
        return Err(Error::InvalidIndexSet(format!("index component {v} exceeds {MAX_INDEX}")));
    }
    Ok(v)
}

impl FromStr for FDIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("index {s:?} must be parenthesized")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        match parts.as_slice() {
            [one] if one.trim() == "-1" => Ok(FDIndex::Minus),
            [i, j] => Ok(FDIndex::Pair(parse_component(i, s)?, parse_component(j, s)?)),
            _ => Err(Error::Parse(format!("index {s:?} must be (-1) or (i,j)"))),
        }
    }
}

/// Parses `"(-1),(1,0),(2,0)"`.
impl FromStr for FDIndexSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed index in {s:?}")))?;
            out.push(rest[..=close].parse()?);
            rest = rest[close + 1..].trim_start();
            if let Some(tail) = rest.strip_prefix(',') {
                rest = tail.trim_start();
                if rest.is_empty() {
                    return Err(Error::Parse(format!("trailing comma in {s:?}")));
                }
            } else if !rest.is_empty() {
                return Err(Error::Parse(format!("expected ',' in {s:?}")));
            }
        }
        let n = out.len();
        let set = FDIndexSet::new(out)?;
        if set.len() != n {
            return Err(Error::InvalidIndexSet(format!("duplicate index in {s:?}")));
        }
        Ok(set)
    }
}

/// `d̃_α`: 2 for `-1`, `-i` for `(i, j)`.
pub fn dtilde_entry(alpha: FDIndex) -> Rational {
    match alpha {
        FDIndex::Minus => q(2),
        FDIndex::Pair(i, _) => -Rational::from_integer(i.into()),
    }
}

/// `C̃_αβ = d̃_α·d̃_β/2`, written out case by case.
pub fn ctilde_entry(alpha: FDIndex, beta: FDIndex) -> Rational {
    use FDIndex::*;
    match (alpha, beta) {
        (Minus, Minus) => q(2),
        (Minus, Pair(i, _)) | (Pair(i, _), Minus) => -Rational::from_integer(i.into()),
        (Pair(i, _), Pair(k, _)) => Rational::new((i as i128 * k as i128).into(), 2.into()),
    }
}

pub fn ctilde_minor(m: &FDIndexSet) -> QMatrix {
    let idx = m.indices();
    let mut c = QMatrix::zeros(idx.len(), idx.len());
    for (a, &alpha) in idx.iter().enumerate() {
        for (b, &beta) in idx.iter().enumerate() {
            c[(a, b)] = ctilde_entry(alpha, beta);
        }
    }
    c
}

/// `(1, |M|; [[1/8]], D̃|_M, 4·I)`.
pub fn sl2fd_pentad(m: &FDIndexSet) -> CartanPentad {
    let row: QVector = m.indices().iter().map(|&a| dtilde_entry(a)).collect();
    let d = QMatrix::from_rows(&[row]).expect("one row");
    CartanPentad::new(QMatrix::diagonal(&[qf(1, 8)]), d, vec![q(4); m.len()])
        .expect("[[1/8]] and 4·I are invertible")
}

fn generator_labels(m: &FDIndexSet, adjoint: &str, sign: &str) -> Vec<String> {
    m.indices()
        .iter()
        .map(|a| match a {
            FDIndex::Minus => adjoint.to_owned(),
            FDIndex::Pair(i, j) => format!("e{sign}_{i},{j}"),
        })
        .collect()
}

/// Local part with degree 1 spanned by `x` and `e⁻_{i,j}`, degree 0 by `h`,
/// degree -1 by `y` and `e⁺_{i,j}`:
/// `[h, x] = 2x`, `[h, e⁻] = -i e⁻`, `[h, y] = -2y`, `[h, e⁺] = i e⁺`,
/// `[x, y] = h`, `[e⁻_{i,j}, e⁺_{i,j}] = (-i/2) h`, all other pairings zero.
pub fn sl2fd_local(m: &FDIndexSet) -> LocalLieAlgebra {
    let n = m.len();
    let mut local = LocalLieAlgebra::new(
        generator_labels(m, "y", "+"),
        vec!["h".into()],
        generator_labels(m, "x", "-"),
    );
    for (b, &beta) in m.indices().iter().enumerate() {
        let w = dtilde_entry(beta);
        if w.is_zero() {
            continue;
        }
        let mut up = vec![Rational::zero(); n];
        up[b] = w.clone();
        local.set_pos_action(0, b, up);
        let mut down = vec![Rational::zero(); n];
        down[b] = -w.clone();
        local.set_neg_action(0, b, down);
        local.set_pairing(b, b, vec![w / q(2)]);
    }
    local
}

/// The map from the local part of `G(C̃^M)` onto `sl2fd_local(M)` with
/// `e_α ↦ x, e⁻`, `f_α ↦ y, e⁺`, `h_α ↦ (d̃_α/2)·h`, and a basis of its
/// kernel (which lives in degree 0).
pub fn phi_map(m: &FDIndexSet) -> (LocalMap, Vec<QVector>) {
    let n = m.len();
    let row: QVector = m.indices().iter().map(|&a| dtilde_entry(a) / q(2)).collect();
    let zero = QMatrix::from_rows(&[row]).expect("one row");
    let kernel = zero.nullspace();
    let map = LocalMap {
        neg: QMatrix::identity(n),
        zero,
        pos: QMatrix::identity(n),
    };
    (map, kernel)
}

/// `s₋₁ + Σ (-i/2)·s_{(i,j)} = 0`.
pub fn satisfies_kernel_equation(m: &FDIndexSet, s: &[Rational]) -> bool {
    let total: Rational = m
        .indices()
        .iter()
        .zip(s)
        .map(|(&a, x)| match a {
            FDIndex::Minus => x.clone(),
            FDIndex::Pair(i, _) => x * qf(-(i as i64), 2),
        })
        .sum();
    total.is_zero()
}

fn same_span(a: &[QVector], b: &[QVector]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let both: Vec<QVector> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&both) == ra
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub indices: String,
    pub cutoff: usize,
    pub sl2fd_dims: DimensionTable,
    pub reduced_dims: DimensionTable,
    pub dims_agree: bool,
    pub phi_is_homomorphism: bool,
    pub kernel_is_center: bool,
    pub kernel_equation_holds: bool,
}

impl Comparison {
    pub fn holds(&self) -> bool {
        self.dims_agree && self.phi_is_homomorphism && self.kernel_is_center && self.kernel_equation_holds
    }

    pub fn to_json(&self) -> Value {
        json!({
            "indices": self.indices,
            "cutoff": self.cutoff,
            "agree": self.holds(),
            "dims_agree": self.dims_agree,
            "phi_is_homomorphism": self.phi_is_homomorphism,
            "kernel_is_center": self.kernel_is_center,
            "kernel_equation_holds": self.kernel_equation_holds,
            "sl2fd": self.sl2fd_dims.to_json(),
            "reduced": self.reduced_dims.to_json(),
        })
    }
}

/// Expands `sl2fd_local(M)` and the reduced contragredient local of `C̃^M`
/// to `cutoff` and compares them degree by degree, together with the checks
/// on [`phi_map`].
pub fn compare_report(m: &FDIndexSet, cutoff: usize) -> Result<Comparison> {
    compare_report_with_limit(m, cutoff, DEFAULT_MAX_DIM)
}

pub fn compare_report_with_limit(m: &FDIndexSet, cutoff: usize, limit: usize) -> Result<Comparison> {
    if m.is_degenerate() {
        return Err(Error::DegenerateIndexSet);
    }
    if cutoff == 0 {
        return Err(Error::ZeroCutoff);
    }
    let c = ctilde_minor(m);
    let target = sl2fd_local(m);
    let sl2fd_dims = expand_with_limit(&target, cutoff, limit)?.dimension_table();
    let reduced_dims = expand_with_limit(&reduced_local(&c)?, cutoff, limit)?.dimension_table();

    let source = contragredient_local(&c)?;
    let (map, kernel) = phi_map(m);
    let (phi_is_homomorphism, kernel_is_center) = match local_hom_check(&source, &target, &map)? {
        HomCheck::Homomorphism(k) => {
            let center = expand_with_limit(&source, 1, limit)?.degree0_center();
            let only_degree_zero = k.neg.is_empty() && k.pos.is_empty();
            (true, only_degree_zero && same_span(&k.zero, &kernel) && same_span(&kernel, &center))
        }
        HomCheck::Mismatch(_) => (false, false),
    };
    let kernel_equation_holds =
        kernel.len() + 1 == m.len() && kernel.iter().all(|s| satisfies_kernel_equation(m, s));

    Ok(Comparison {
        indices: m.to_string(),
        cutoff,
        dims_agree: sl2fd_dims.dims == reduced_dims.dims,
        sl2fd_dims,
        reduced_dims,
        phi_is_homomorphism,
        kernel_is_center,
        kernel_equation_holds,
    })
}

pub fn compare_with_reduced(m: &FDIndexSet, cutoff: usize) -> Result<bool> {
    Ok(compare_report(m, cutoff)?.holds())
}
