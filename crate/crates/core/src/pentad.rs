//! Pentads of Cartan type `(r, n; A, D, Γ)`.
//!
//! `A` is an invertible `r x r` matrix, `D` an `r x n` matrix and `Γ` an
//! invertible diagonal `n x n` matrix, stored as its diagonal. The local
//! algebra has `G₀ = ℚ^r` (abelian, basis `ε_i`), `G₁ = span{e_j}` and
//! `G₋₁ = span{f_j}` with `[ε_i, e_j] = d_ij e_j`, `[ε_i, f_j] = -d_ij f_j`
//! and `[e_i, f_j] = δ_ij h_i`, where `h_i` is the i-th row of `Γ·Dᵗ·A`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactq::{format_rational, parse_rational, QMatrix, QVector, Rational};
use crate::local::LocalLieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanPentad {
    a: QMatrix,
    d: QMatrix,
    gamma: QVector,
    /// `(A⁻¹)ᵗ`, the Gram matrix of `B_A`.
    form: QMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructureSummary {
    #[serde(rename = "rank_D")]
    pub rank_d: usize,
    #[serde(rename = "rank_C")]
    pub rank_c: usize,
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    #[serde(rename = "dim_Delta")]
    pub dim_delta: usize,
    pub symmetric: bool,
}

/// On-disk form: rationals as `"p/q"` strings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PentadFile {
    pub r: usize,
    pub n: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "D")]
    pub d: Vec<Vec<String>>,
    #[serde(rename = "Gamma")]
    pub gamma: Vec<String>,
}

impl CartanPentad {
    pub fn new(a: QMatrix, d: QMatrix, gamma: QVector) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::InvalidPentad(format!(
                "A must be square, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        let r = a.rows();
        if d.rows() != r {
            return Err(Error::InvalidPentad(format!("D must have r = {r} rows, got {}", d.rows())));
        }
        if gamma.len() != d.cols() {
            return Err(Error::InvalidPentad(format!(
                "Gamma must have n = {} entries, got {}",
                d.cols(),
                gamma.len()
            )));
        }
        if let Some(i) = gamma.iter().position(Zero::is_zero) {
            return Err(Error::InvalidPentad(format!(
                "Gamma must be invertible, entry {} is zero",
                i + 1
            )));
        }
        let form = match a.inverse() {
            Ok(inv) => inv.transpose(),
            Err(Error::SingularMatrix { rank, order }) => {
                return Err(Error::InvalidPentad(format!(
                    "A must be invertible, has rank {rank} < {order}"
                )))
            }
            Err(e) => return Err(e),
        };
        Ok(Self { a, d, gamma, form })
    }

    pub fn r(&self) -> usize {
        self.a.rows()
    }

    pub fn n(&self) -> usize {
        self.d.cols()
    }

    pub fn a(&self) -> &QMatrix {
        &self.a
    }

    pub fn d(&self) -> &QMatrix {
        &self.d
    }

    pub fn gamma(&self) -> &[Rational] {
        &self.gamma
    }

    /// `Γ·Dᵗ·A`, whose rows are the coroots.
    pub fn coroot_matrix(&self) -> QMatrix {
        QMatrix::diagonal(&self.gamma)
            .mul(&self.d.transpose())
            .and_then(|m| m.mul(&self.a))
            .expect("validated shapes")
    }

    /// `C(A, D, Γ) = Γ·Dᵗ·A·D`.
    pub fn cartan_matrix(&self) -> QMatrix {
        self.coroot_matrix().mul(&self.d).expect("validated shapes")
    }

    /// `h_i = [e_i, f_i]` in the basis `ε_1, …, ε_r`.
    pub fn coroots(&self) -> Vec<QVector> {
        self.coroot_matrix().row_vectors()
    }

    /// `B_A(x, y) = x · (A⁻¹)ᵗ · y`.
    pub fn bilinear_form(&self, x: &[Rational], y: &[Rational]) -> Rational {
        crate::exactq::dot(&self.form.vec_mul(x), y)
    }

    pub fn local_algebra(&self) -> LocalLieAlgebra {
        let (r, n) = (self.r(), self.n());
        let mut local = LocalLieAlgebra::new(
            (1..=n).map(|j| format!("f{j}")).collect(),
            (1..=r).map(|i| format!("eps{i}")).collect(),
            (1..=n).map(|j| format!("e{j}")).collect(),
        );
        for i in 0..r {
            for j in 0..n {
                let weight = &self.d[(i, j)];
                if weight.is_zero() {
                    continue;
                }
                let mut up = crate::exactq::zero_vector(n);
                up[j] = weight.clone();
                local.set_pos_action(i, j, up);
                let mut down = crate::exactq::zero_vector(n);
                down[j] = -weight.clone();
                local.set_neg_action(i, j, down);
            }
        }
        for (i, h) in self.coroots().into_iter().enumerate() {
            local.set_pairing(i, i, h);
        }
        local
    }

    pub fn structure_summary(&self) -> StructureSummary {
        let rank_d = self.d.rank();
        let rank_c = self.cartan_matrix().rank();
        StructureSummary {
            rank_d,
            rank_c,
            dim_z: rank_d - rank_c,
            dim_delta: self.r() - rank_d,
            symmetric: self.a.is_symmetric(),
        }
    }

    pub fn to_file(&self) -> PentadFile {
        PentadFile {
            r: self.r(),
            n: self.n(),
            a: self.a.to_string_rows(),
            d: self.d.to_string_rows(),
            gamma: self.gamma.iter().map(format_rational).collect(),
        }
    }

    pub fn from_file(file: &PentadFile) -> Result<Self> {
        let (r, n) = (file.r, file.n);
        let a = if r == 0 {
            QMatrix::zeros(0, 0)
        } else {
            QMatrix::from_string_rows(&file.a)?
        };
        let d = if r == 0 {
            QMatrix::zeros(0, n)
        } else {
            QMatrix::from_string_rows(&file.d)?
        };
        let d = if n == 0 { QMatrix::zeros(r, 0) } else { d };
        if (a.rows(), a.cols()) != (r, r) {
            return Err(Error::InvalidPentad(format!(
                "A is {}x{}, expected {r}x{r}",
                a.rows(),
                a.cols()
            )));
        }
        if (d.rows(), d.cols()) != (r, n) {
            return Err(Error::InvalidPentad(format!(
                "D is {}x{}, expected {r}x{n}",
                d.rows(),
                d.cols()
            )));
        }
        let gamma = file
            .gamma
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<QVector>>()?;
        Self::new(a, d, gamma)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PentadFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_file()).expect("plain data")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::expand;
    use crate::{q, qf};
    use proptest::prelude::*;

    /// The `(3, 2)` pentad realizing the affine Kac-Moody algebra of
    /// `[[2,-2],[-2,2]]`.
    fn affine_km() -> CartanPentad {
        CartanPentad::new(
            QMatrix::from_rows(&[
                vec![qf(1, 8), q(0), q(0)],
                vec![q(0), q(0), q(1)],
                vec![q(0), q(1), q(0)],
            ])
            .unwrap(),
            QMatrix::from_i64(&[&[2, -2], &[0, 0], &[0, 1]]),
            vec![q(4), q(4)],
        )
        .unwrap()
    }

    fn one_dim(d: &[i64], gamma: &[i64]) -> CartanPentad {
        CartanPentad::new(
            QMatrix::from_rows(&[vec![qf(1, 8)]]).unwrap(),
            QMatrix::from_i64(&[d]),
            gamma.iter().map(|&g| q(g)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cartan_matrix_of_affine_pentad() {
        assert_eq!(affine_km().cartan_matrix(), QMatrix::from_i64(&[&[2, -2], &[-2, 2]]));
    }

    #[test]
    fn cartan_matrix_of_sl2_representation_pentad() {
        let c = one_dim(&[2, -3], &[4, 4]).cartan_matrix();
        let expected = QMatrix::from_rows(&[vec![q(2), q(-3)], vec![q(-3), qf(9, 2)]]).unwrap();
        assert_eq!(c, expected);
    }

    #[test]
    fn zero_d_gives_zero_cartan_and_coroots() {
        let p = CartanPentad::new(QMatrix::identity(2), QMatrix::zeros(2, 3), vec![q(1); 3]).unwrap();
        assert!(p.cartan_matrix().is_zero());
        assert!(p.coroots().iter().all(|h| h.iter().all(Zero::is_zero)));
        let s = p.structure_summary();
        assert_eq!((s.dim_z, s.dim_delta), (0, 2));
        assert!(p.local_algebra().validate().is_empty());
    }

    #[test]
    fn coroots_of_affine_pentad() {
        let p = affine_km();
        assert_eq!(p.coroots(), vec![vec![q(1), q(0), q(0)], vec![q(-1), q(4), q(0)]]);
    }

    #[test]
    fn sl2_coroot_and_killing_normalization() {
        let p = one_dim(&[2], &[4]);
        assert_eq!(p.coroots(), vec![vec![q(1)]]);
        assert_eq!(p.bilinear_form(&[q(1)], &[q(1)]), q(8));
        assert_eq!(p.bilinear_form(&[q(0)], &[q(1)]), q(0));
    }

    #[test]
    fn identity_form_is_dot_product() {
        let p = CartanPentad::new(QMatrix::identity(2), QMatrix::zeros(2, 0), vec![]).unwrap();
        assert_eq!(p.bilinear_form(&[q(1), q(2)], &[q(3), q(4)]), q(11));
    }

    #[test]
    fn sl2_local_triple() {
        let l = one_dim(&[2], &[4]).local_algebra();
        assert_eq!(l.pos_action(0).column(0), vec![q(2)]);
        assert_eq!(l.neg_action(0).column(0), vec![q(-2)]);
        assert_eq!(l.pairing(0, 0), &vec![q(1)]);
        assert!(l.validate().is_empty());
    }

    #[test]
    fn off_diagonal_pairings_vanish() {
        let l = affine_km().local_algebra();
        assert!(l.pairing(0, 1).iter().all(Zero::is_zero));
        assert!(l.pairing(1, 0).iter().all(Zero::is_zero));
    }

    #[test]
    fn structure_summary_of_affine_pentad() {
        let s = affine_km().structure_summary();
        assert_eq!(
            s,
            StructureSummary {
                rank_d: 2,
                rank_c: 1,
                dim_z: 1,
                dim_delta: 1,
                symmetric: true
            }
        );
    }

    #[test]
    fn invertible_cartan_with_identity_d() {
        let c = QMatrix::from_i64(&[&[2, -1], &[-1, 2]]);
        let p = CartanPentad::new(c, QMatrix::identity(2), vec![q(1), q(1)]).unwrap();
        let s = p.structure_summary();
        assert_eq!((s.dim_z, s.dim_delta), (0, 0));
    }

    #[test]
    fn construction_rejects_bad_data() {
        let err = CartanPentad::new(QMatrix::zeros(1, 1), QMatrix::zeros(1, 1), vec![q(1)]).unwrap_err();
        assert!(err.to_string().contains("A must be invertible"));
        let err = CartanPentad::new(QMatrix::identity(1), QMatrix::zeros(1, 1), vec![q(0)]).unwrap_err();
        assert!(err.to_string().contains("Gamma must be invertible"));
        let err = CartanPentad::new(QMatrix::identity(2), QMatrix::zeros(1, 1), vec![q(1)]).unwrap_err();
        assert!(matches!(err, Error::InvalidPentad(_)));
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"r": 3, "n": 2, "A": [["1/8","0","0"],["0","0","1"],["0","1","0"]], "D": [["2","-2"],["0","0"],["0","1"]], "Gamma": ["4","4"]}"#;
        let p = CartanPentad::from_json(text).unwrap();
        assert_eq!(p, affine_km());
        assert_eq!(CartanPentad::from_file(&p.to_file()).unwrap(), p);
    }

    #[test]
    fn affine_pentad_expansion_keeps_three_dim_degree_zero() {
        let ga = expand(&affine_km().local_algebra(), 4).unwrap();
        let t = ga.dimension_table();
        assert_eq!(t.get(0), 3);
        assert_eq!((t.get(1), t.get(2), t.get(3), t.get(4)), (2, 1, 2, 1));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-3i64..=3, 1i64..=3).prop_map(|(n, d)| qf(n, d))
    }

    fn pentad() -> impl Strategy<Value = CartanPentad> {
        (1usize..4, 1usize..4).prop_flat_map(|(r, n)| {
            (
                proptest::collection::vec(small(), r * r),
                proptest::collection::vec(small(), r * n),
                proptest::collection::vec((1i64..=4, any::<bool>()), n),
            )
                .prop_filter_map("A must be invertible", move |(a, d, g)| {
                    let a = QMatrix::from_row_major(r, r, a).unwrap();
                    let d = QMatrix::from_row_major(r, n, d).unwrap();
                    let gamma = g.into_iter().map(|(x, neg)| if neg { q(-x) } else { q(x) }).collect();
                    CartanPentad::new(a, d, gamma).ok()
                })
        })
    }

    proptest! {
        #[test]
        fn cartan_entries_match_coroot_action(p in pentad()) {
            let c = p.cartan_matrix();
            let hs = p.coroots();
            for i in 0..p.n() {
                for j in 0..p.n() {
                    prop_assert_eq!(&c[(i, j)], &crate::exactq::dot(&hs[i], &p.d().column(j)));
                }
            }
        }

        #[test]
        fn coroots_pair_with_weights(p in pentad()) {
            let hs = p.coroots();
            for k in 0..p.r() {
                let eps = crate::exactq::unit_vector(p.r(), k);
                for i in 0..p.n() {
                    prop_assert_eq!(p.bilinear_form(&eps, &hs[i]), &p.gamma()[i] * &p.d()[(k, i)]);
                }
            }
        }

        #[test]
        fn coroot_span_has_rank_of_d(p in pentad()) {
            prop_assert_eq!(crate::exactq::span_rank(&p.coroots()), p.d().rank());
        }

        #[test]
        fn local_algebra_satisfies_axioms(p in pentad()) {
            prop_assert!(p.local_algebra().validate().is_empty());
            let s = p.structure_summary();
            prop_assert!(s.rank_c <= s.rank_d && s.rank_d <= p.r().min(p.n()));
        }
    }
}
