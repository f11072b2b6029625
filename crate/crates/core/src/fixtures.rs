//! Worked examples with known answers, runnable as a regression suite.

use num_traits::Zero;
use serde_json::{json, Value};

use crate::exactq::{q, qf, QMatrix, Rational};
use crate::graded::expand;
use crate::pentad::CartanPentad;
use crate::sl2fd::{ctilde_entry, ctilde_minor, dtilde_entry, sl2fd_local, FDIndex, FDIndexSet};
use crate::{realize_full_km, reduced_local};

/// `(3, 2; A, D, 4·I)` realizing the Kac-Moody algebra of the affine `A₁`
/// matrix `[[2,-2],[-2,2]]`.
pub fn affine_km_pentad() -> CartanPentad {
    let a = QMatrix::from_rows(&[vec![qf(1, 8), q(0), q(0)], vec![q(0), q(0), q(1)], vec![q(0), q(1), q(0)]])
        .expect("square");
    let d = QMatrix::from_i64(&[&[2, -2], &[0, 0], &[0, 1]]);
    CartanPentad::new(a, d, vec![q(4), q(4)]).expect("valid pentad")
}

/// `(1, 2; [[1/8]], [2, -n], 4·I)`, the pentad of `sl₂` with its
/// `(n+1)`-dimensional irreducible module.
pub fn sl2_module_pentad(n: i64) -> CartanPentad {
    CartanPentad::new(
        QMatrix::diagonal(&[qf(1, 8)]),
        QMatrix::from_i64(&[&[2, -n]]),
        vec![q(4), q(4)],
    )
    .expect("valid pentad")
}

pub fn affine_cartan() -> QMatrix {
    QMatrix::from_i64(&[&[2, -2], &[-2, 2]])
}

/// Degree 0 of dimension `zero`, then 2 in odd and 1 in even degrees on both sides.
fn loop_pattern(table: &crate::DimensionTable, cutoff: i64, zero: usize) -> bool {
    table.get(0) == zero
        && (1..=cutoff).all(|k| {
            let expected = if k % 2 == 1 { 2 } else { 1 };
            table.get(k) == expected && table.get(-k) == expected
        })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureResult {
    pub name: &'static str,
    pub passed: bool,
}

impl FixtureResult {
    pub fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed })
    }
}

fn set(s: &str) -> FDIndexSet {
    s.parse().expect("fixture index set")
}

type NamedCheck = (&'static str, Box<dyn Fn() -> bool>);

pub fn run_fixtures() -> Vec<FixtureResult> {
    let checks: Vec<NamedCheck> = vec![
        (
            "affine_km_pentad_cartan_matrix",
            Box::new(|| affine_km_pentad().cartan_matrix() == affine_cartan()),
        ),
        (
            "sl2_module_pentad_cartan_matrix_n1_to_6",
            Box::new(|| {
                (1..=6).all(|n| {
                    let expected = QMatrix::from_rows(&[vec![q(2), q(-n)], vec![q(-n), qf(n * n, 2)]]).unwrap();
                    sl2_module_pentad(n).cartan_matrix() == expected
                })
            }),
        ),
        (
            "killing_normalization_h_h_is_8",
            Box::new(|| {
                let p = CartanPentad::new(QMatrix::diagonal(&[qf(1, 8)]), QMatrix::from_i64(&[&[2]]), vec![q(4)]).unwrap();
                p.bilinear_form(&[q(1)], &[q(1)]) == q(8)
            }),
        ),
        (
            "sl2_triple_from_one_by_one_pentad",
            Box::new(|| {
                let p = CartanPentad::new(QMatrix::diagonal(&[qf(1, 8)]), QMatrix::from_i64(&[&[2]]), vec![q(4)]).unwrap();
                let l = p.local_algebra();
                l.pos_action(0).column(0) == vec![q(2)]
                    && l.neg_action(0).column(0) == vec![q(-2)]
                    && l.pairing(0, 0) == &vec![q(1)]
                    && expand(&l, 4).map(|g| g.dimension_table().total() == 3).unwrap_or(false)
            }),
        ),
        (
            "affine_km_pentad_structure_summary",
            Box::new(|| {
                let s = affine_km_pentad().structure_summary();
                (s.rank_d, s.rank_c, s.dim_z, s.dim_delta) == (2, 1, 1, 1)
            }),
        ),
        (
            "affine_km_pentad_expansion_is_loop_plus_k_plus_d",
            Box::new(|| {
                expand(&affine_km_pentad().local_algebra(), 8)
                    .map(|g| loop_pattern(&g.dimension_table(), 8, 3))
                    .unwrap_or(false)
            }),
        ),
        (
            "affine_reduced_contragredient_is_loop_algebra",
            Box::new(|| {
                reduced_local(&affine_cartan())
                    .and_then(|l| expand(&l, 8))
                    .map(|g| loop_pattern(&g.dimension_table(), 8, 1))
                    .unwrap_or(false)
            }),
        ),
        (
            "affine_sl2_module_pentad_is_loop_algebra",
            Box::new(|| {
                expand(&sl2_module_pentad(2).local_algebra(), 8)
                    .map(|g| loop_pattern(&g.dimension_table(), 8, 1))
                    .unwrap_or(false)
            }),
        ),
        (
            "affine_full_km_realization_is_loop_plus_k_plus_d",
            Box::new(|| {
                realize_full_km(&affine_cartan())
                    .and_then(|(p, _)| expand(&p.local_algebra(), 8))
                    .map(|g| loop_pattern(&g.dimension_table(), 8, 3))
                    .unwrap_or(false)
            }),
        ),
        (
            "dtilde_entries",
            Box::new(|| {
                dtilde_entry(FDIndex::Minus) == q(2)
                    && dtilde_entry(FDIndex::Pair(0, 5)).is_zero()
                    && dtilde_entry(FDIndex::Pair(3, 0)) == q(-3)
            }),
        ),
        (
            "ctilde_entries",
            Box::new(|| {
                ctilde_entry(FDIndex::Minus, FDIndex::Minus) == q(2)
                    && ctilde_entry(FDIndex::Pair(1, 0), FDIndex::Pair(1, 0)) == qf(1, 2)
                    && ctilde_entry(FDIndex::Pair(2, 0), FDIndex::Pair(3, 7)) == q(3)
            }),
        ),
        (
            "ctilde_minors",
            Box::new(|| {
                ctilde_minor(&set("(-1),(1,0)"))
                    == QMatrix::from_rows(&[vec![q(2), q(-1)], vec![q(-1), qf(1, 2)]]).unwrap()
                    && ctilde_minor(&set("(0,0)")) == QMatrix::zeros(1, 1)
            }),
        ),
        (
            "sl2fd_local_adjoint_is_sl2_triple",
            Box::new(|| {
                let l = sl2fd_local(&set("(-1)"));
                l.pos_action(0).column(0) == vec![q(2)]
                    && l.neg_action(0).column(0) == vec![q(-2)]
                    && l.pairing(0, 0) == &vec![q(1)]
            }),
        ),
        (
            "sl2fd_local_adjoint_module_brackets",
            Box::new(|| {
                let l = sl2fd_local(&set("(-1),(2,0)"));
                l.pos_action(0).column(1) == vec![q(0), q(-2)] && l.pairing(1, 1) == &vec![q(-1)]
            }),
        ),
        (
            "sl2fd_local_weight_zero_is_abelian",
            Box::new(|| {
                let l = sl2fd_local(&set("(0,3)"));
                l.pos_action(0).is_zero()
                    && l.neg_action(0).is_zero()
                    && l.pairing(0, 0).iter().all(Rational::is_zero)
            }),
        ),
    ];
    checks
        .into_iter()
        .map(|(name, check)| FixtureResult { name, passed: check() })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        let results = run_fixtures();
        assert!(results.len() >= 15);
        for r in &results {
            assert!(r.passed, "{}", r.name);
        }
    }

    #[test]
    fn sl2_module_n3() {
        assert_eq!(
            sl2_module_pentad(3).cartan_matrix(),
            QMatrix::from_rows(&[vec![q(2), q(-3)], vec![q(-3), qf(9, 2)]]).unwrap()
        );
    }
}
