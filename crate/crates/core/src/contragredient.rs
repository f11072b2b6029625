//! Local parts of contragredient Lie algebras `G(C)` and their reductions
//! `G′(C) = G(C)/Z`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactq::{unit_vector, zero_vector, QMatrix, QVector};
use crate::local::LocalLieAlgebra;

/// On-disk form of a square matrix, e.g. `{"C": [["2","-2"],["-2","2"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixFile {
    #[serde(rename = "C")]
    pub c: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_matrix(c: &QMatrix) -> Self {
        Self { c: c.to_string_rows() }
    }

    pub fn to_matrix(&self) -> Result<QMatrix> {
        QMatrix::from_string_rows(&self.c)
    }
}

pub fn matrix_from_json(text: &str) -> Result<QMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.to_matrix()
}

fn require_square(c: &QMatrix) -> Result<()> {
    if c.is_square() {
        Ok(())
    } else {
        Err(Error::NotSquare {
            rows: c.rows(),
            cols: c.cols(),
        })
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// `[h_α, e_β] = C_αβ e_β`, `[h_α, f_β] = -C_αβ f_β`, `[e_α, f_β] = δ_αβ h_α`.
pub fn contragredient_local(c: &QMatrix) -> Result<LocalLieAlgebra> {
    require_square(c)?;
    let n = c.rows();
    let mut local = LocalLieAlgebra::new(labels("f", n), labels("h", n), labels("e", n));
    set_weights(&mut local, c, &(0..n).collect::<Vec<_>>());
    for a in 0..n {
        local.set_pairing(a, a, unit_vector(n, a));
    }
    Ok(local)
}

fn set_weights(local: &mut LocalLieAlgebra, c: &QMatrix, rows: &[usize]) {
    let n = c.cols();
    for (slot, &a) in rows.iter().enumerate() {
        for b in 0..n {
            let w = &c[(a, b)];
            if w.is_zero() {
                continue;
            }
            let mut up = zero_vector(n);
            up[b] = w.clone();
            local.set_pos_action(slot, b, up);
            let mut down = zero_vector(n);
            down[b] = -w.clone();
            local.set_neg_action(slot, b, down);
        }
    }
}

/// Indices of the first maximal linearly independent set of rows of `c`.
pub fn pivot_rows(c: &QMatrix) -> Vec<usize> {
    c.transpose().rref().pivots
}

/// The center of `G(C)` in closed form: coefficient vectors `c` with
/// `Σ_α c_α C_αβ = 0` for all `β`, i.e. the left kernel of `C`.
pub fn center_closed_form(c: &QMatrix) -> Result<Vec<QVector>> {
    require_square(c)?;
    Ok(c.left_nullspace())
}

/// Local part of `G′(C)`: degree zero is `span{h_α}` modulo the left kernel
/// of `C`, with basis the images of `h_p` for the pivot rows `p`.
pub fn reduced_local(c: &QMatrix) -> Result<LocalLieAlgebra> {
    require_square(c)?;
    let n = c.rows();
    let pivots = pivot_rows(c);
    let l = pivots.len();
    let mut local = LocalLieAlgebra::new(
        labels("f", n),
        pivots.iter().map(|p| format!("h{}", p + 1)).collect(),
        labels("e", n),
    );
    set_weights(&mut local, c, &pivots);
    // h_β ≡ Σ_p x_p h_p exactly when row β of C is Σ_p x_p (row p of C).
    let basis_rows = c.select_rows(&pivots).transpose();
    for b in 0..n {
        let coords = match pivots.iter().position(|&p| p == b) {
            Some(slot) => unit_vector(l, slot),
            None => basis_rows
                .solve(c.row(b))
                .expect("every row lies in the span of the pivot rows"),
        };
        local.set_pairing(b, b, coords);
    }
    Ok(local)
}
