//! Pentads of Cartan type whose Lie algebras are contragredient and
//! Kac-Moody algebras of a given square matrix `C`.
//!
//! * invertible `C`: `(n, n; C, I, I)` gives `G(C) = G′(C)`;
//! * symmetrizable `C = Γ·S`: `(l, n; Q, P₁, Γ)` with `S = P₁ᵗ·Q·P₁` gives
//!   `G′(C)` through a symmetric form;
//! * any `C` of rank `l`: `(2n-l, n; A, [I; 0], I)` with `A` an invertible
//!   border completion of `C` gives the Kac-Moody algebra `g(C)`, whose
//!   derived algebra is `G(C)`.

use std::collections::{BTreeMap, VecDeque};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactq::{span_rank, QMatrix, QVector, Rational};
use crate::graded::{expand_with_limit, DEFAULT_MAX_DIM};
use crate::pentad::CartanPentad;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RealizationMode {
    Invertible,
    Symmetrizable,
    FullKm,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizationCertificate {
    pub mode: RealizationMode,
    #[serde(skip)]
    pub pentad: CartanPentad,
    pub cartan_round_trip: bool,
    pub coroots_independent: bool,
    /// `rank D = n`.
    pub alpha_independent: bool,
    #[serde(rename = "rank_D")]
    pub rank_d: usize,
    #[serde(rename = "rank_C")]
    pub rank_c: usize,
    pub n: usize,
    pub dim0: usize,
}

impl RealizationCertificate {
    pub fn new(mode: RealizationMode, pentad: &CartanPentad, c: &QMatrix) -> Self {
        let n = pentad.n();
        let rank_d = pentad.d().rank();
        Self {
            mode,
            pentad: pentad.clone(),
            cartan_round_trip: pentad.cartan_matrix() == *c,
            coroots_independent: span_rank(&pentad.coroots()) == n,
            alpha_independent: rank_d == n,
            rank_d,
            rank_c: c.rank(),
            n,
            dim0: pentad.r(),
        }
    }

    /// Whether every check that `mode` promises holds.
    pub fn holds(&self) -> bool {
        match self.mode {
            RealizationMode::FullKm | RealizationMode::Derived => {
                self.cartan_round_trip
                    && self.coroots_independent
                    && self.alpha_independent
                    && self.dim0 == 2 * self.n - self.rank_c
            }
            RealizationMode::Invertible => self.cartan_round_trip && self.dim0 == self.n,
            RealizationMode::Symmetrizable => self.cartan_round_trip && self.dim0 == self.rank_c,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
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

/// `(n, n; C, I, I)` for invertible `C`.
pub fn realize_invertible(c: &QMatrix) -> Result<CartanPentad> {
    require_square(c)?;
    let n = c.rows();
    let rank = c.rank();
    if rank < n {
        return Err(Error::SingularMatrix { rank, order: n });
    }
    CartanPentad::new(c.clone(), QMatrix::identity(n), vec![Rational::one(); n])
}

/// Writes `C = Γ·S` with `Γ` invertible diagonal and `S` symmetric.
///
/// Γ is propagated along a spanning forest of the graph with an edge between
/// `i` and `j` whenever `C_ij ≠ 0`, starting from `γ = 1` at the smallest
/// index of each component, and then checked on every edge.
pub fn symmetrize(c: &QMatrix) -> Result<(QVector, QMatrix)> {
    require_square(c)?;
    let n = c.rows();
    for i in 0..n {
        for j in i + 1..n {
            if c[(i, j)].is_zero() != c[(j, i)].is_zero() {
                return Err(Error::NotSymmetrizable(format!(
                    "C[{}][{}] and C[{}][{}] must be zero together",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }

    let mut gamma: Vec<Option<Rational>> = vec![None; n];
    for root in 0..n {
        if gamma[root].is_some() {
            continue;
        }
        gamma[root] = Some(Rational::one());
        let mut queue = VecDeque::from([root]);
        while let Some(i) = queue.pop_front() {
            let gi = gamma[i].clone().expect("visited");
            for j in 0..n {
                if j == i || c[(i, j)].is_zero() || gamma[j].is_some() {
                    continue;
                }
                gamma[j] = Some(&gi * &c[(j, i)] / &c[(i, j)]);
                queue.push_back(j);
            }
        }
    }
    let gamma: QVector = gamma.into_iter().map(|g| g.expect("every vertex reached")).collect();

    let mut s = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            s[(i, j)] = &c[(i, j)] / &gamma[i];
        }
    }
    if !s.is_symmetric() {
        return Err(Error::NotSymmetrizable("inconsistent ratios around a cycle".into()));
    }
    Ok((gamma, s))
}

/// `(l, n; Q, P₁, Γ)` where `C = Γ·S` and `S = P₁ᵗ·Q·P₁` with `Q` symmetric
/// invertible.
pub fn realize_symmetrizable(c: &QMatrix) -> Result<CartanPentad> {
    let (gamma, s) = symmetrize(c)?;
    let (p1, q) = s.decompose_symmetric()?;
    CartanPentad::new(q, p1, gamma)
}

/// Greedily picks standard basis vectors that extend the column space of `m`
/// to the whole space.
fn completing_basis_indices(m: &QMatrix) -> Result<Vec<usize>> {
    let n = m.rows();
    let augmented = m.hstack(&QMatrix::identity(n))?;
    Ok(augmented
        .rref()
        .pivots
        .into_iter()
        .filter(|&p| p >= m.cols())
        .map(|p| p - m.cols())
        .collect())
}

/// `A = [[C, A₁₂], [A₂₁, 0]]` of order `2n - l`, where the columns of `A₁₂`
/// (rows of `A₂₁`) are the first standard basis vectors completing the
/// column space (row space) of `C`.
pub fn complete_to_invertible(c: &QMatrix) -> Result<QMatrix> {
    require_square(c)?;
    let n = c.rows();
    let cols = completing_basis_indices(c)?;
    let rows = completing_basis_indices(&c.transpose())?;
    let k = cols.len();
    if rows.len() != k {
        return Err(Error::CompletionFailed);
    }
    let mut a = QMatrix::zeros(n + k, n + k);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = c[(i, j)].clone();
        }
    }
    for (slot, &i) in cols.iter().enumerate() {
        a[(i, n + slot)] = Rational::one();
    }
    for (slot, &j) in rows.iter().enumerate() {
        a[(n + slot, j)] = Rational::one();
    }
    if a.determinant()?.is_zero() {
        return Err(Error::CompletionFailed);
    }
    Ok(a)
}

/// `(2n - l, n; A, [I; 0], I)` realizing the Kac-Moody algebra `g(C)`.
pub fn realize_full_km(c: &QMatrix) -> Result<(CartanPentad, RealizationCertificate)> {
    let a = complete_to_invertible(c)?;
    let (n, r) = (c.rows(), a.rows());
    let d = QMatrix::identity(n).vstack(&QMatrix::zeros(r - n, n))?;
    let pentad = CartanPentad::new(a, d, vec![Rational::one(); n])?;
    let certificate = RealizationCertificate::new(RealizationMode::FullKm, &pentad, c);
    Ok((pentad, certificate))
}

/// Per-degree dimensions of the derived algebra of the Kac-Moody
/// realization, up to `cutoff`.
pub fn derived_realization(c: &QMatrix, cutoff: usize) -> Result<BTreeMap<i64, usize>> {
    derived_realization_with_limit(c, cutoff, DEFAULT_MAX_DIM)
}

pub fn derived_realization_with_limit(c: &QMatrix, cutoff: usize, limit: usize) -> Result<BTreeMap<i64, usize>> {
    let (pentad, _) = realize_full_km(c)?;
    expand_with_limit(&pentad.local_algebra(), cutoff, limit)?.derived_dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contragredient::contragredient_local;
    use crate::graded::expand;
    use crate::{q, qf};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_i64(rows)
    }

    #[test]
    fn invertible_realizations() {
        let p = realize_invertible(&m(&[&[2]])).unwrap();
        assert_eq!(p.a(), &m(&[&[2]]));
        assert_eq!(p.d(), &m(&[&[1]]));
        assert_eq!(p.gamma(), &[q(1)]);
        assert_eq!(expand(&p.local_algebra(), 3).unwrap().dimension_table().total(), 3);

        let p = realize_invertible(&m(&[&[2, -1], &[-1, 2]])).unwrap();
        assert_eq!(expand(&p.local_algebra(), 4).unwrap().dimension_table().total(), 8);

        assert_eq!(
            realize_invertible(&m(&[&[2, -2], &[-2, 2]])),
            Err(Error::SingularMatrix { rank: 1, order: 2 })
        );
    }

    #[test]
    fn symmetrize_examples() {
        let c = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(symmetrize(&c).unwrap(), (vec![q(1), q(1)], c));

        let (gamma, s) = symmetrize(&m(&[&[2, -1], &[-2, 2]])).unwrap();
        assert_eq!(gamma, vec![q(1), q(2)]);
        assert_eq!(s, m(&[&[2, -1], &[-1, 1]]));

        let err = symmetrize(&m(&[&[2, -1, 0], &[0, 2, -1], &[-1, 0, 2]])).unwrap_err();
        assert!(matches!(err, Error::NotSymmetrizable(_)));
    }

    #[test]
    fn cycle_inconsistency_is_not_symmetrizable() {
        // Products of ratios around the triangle differ: 1·1·2 ≠ 1.
        let c = m(&[&[2, -1, -1], &[-1, 2, -1], &[-2, -1, 2]]);
        assert!(matches!(symmetrize(&c), Err(Error::NotSymmetrizable(_))));
    }

    #[test]
    fn symmetrizable_affine() {
        let c = m(&[&[2, -2], &[-2, 2]]);
        let p = realize_symmetrizable(&c).unwrap();
        assert_eq!((p.r(), p.n()), (1, 2));
        assert!(p.a().is_symmetric());
        assert_eq!(p.cartan_matrix(), c);
        let s = p.structure_summary();
        assert_eq!((s.dim_z, s.dim_delta), (0, 0));
    }

    #[test]
    fn symmetrizable_non_symmetric() {
        let c = m(&[&[2, -1], &[-2, 2]]);
        let p = realize_symmetrizable(&c).unwrap();
        assert_eq!(p.gamma(), &[q(1), q(2)]);
        assert_eq!(p.cartan_matrix(), c);
        let a = expand(&p.local_algebra(), 5).unwrap().dimension_table();
        let b = expand(&realize_invertible(&c).unwrap().local_algebra(), 5)
            .unwrap()
            .dimension_table();
        assert_eq!(a, b);
    }

    #[test]
    fn symmetric_invertible_uses_full_rank() {
        let c = m(&[&[2, -1], &[-1, 2]]);
        let p = realize_symmetrizable(&c).unwrap();
        assert_eq!(p.r(), 2);
        assert_eq!(p.d().rank(), 2);
    }

    #[test]
    fn completions() {
        let c = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(complete_to_invertible(&c).unwrap(), c);
        let a = complete_to_invertible(&m(&[&[2, -2], &[-2, 2]])).unwrap();
        assert_eq!(a, m(&[&[2, -2, 1], &[-2, 2, 0], &[1, 0, 0]]));
        assert_eq!(a.determinant().unwrap(), q(-2));
        assert_eq!(complete_to_invertible(&m(&[&[0]])).unwrap(), m(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn full_km_affine() {
        let c = m(&[&[2, -2], &[-2, 2]]);
        let (p, cert) = realize_full_km(&c).unwrap();
        assert_eq!(p.r(), 3);
        assert!(cert.holds());
        let s = p.structure_summary();
        assert_eq!((s.dim_z, s.dim_delta), (1, 1));
        let t = expand(&p.local_algebra(), 6).unwrap().dimension_table();
        assert_eq!(t.get(0), 3);
        for k in 1..=6i64 {
            let expected = if k % 2 == 1 { 2 } else { 1 };
            assert_eq!((t.get(k), t.get(-k)), (expected, expected));
        }
    }

    #[test]
    fn full_km_zero_matrix() {
        let (p, cert) = realize_full_km(&m(&[&[0]])).unwrap();
        assert_eq!(p.r(), 2);
        assert!(cert.holds());
        let t = expand(&p.local_algebra(), 3).unwrap().dimension_table();
        assert_eq!((t.get(-2), t.get(-1), t.get(0), t.get(1), t.get(2)), (0, 1, 2, 1, 0));
        assert_eq!(derived_realization(&m(&[&[0]]), 3).unwrap()[&0], 1);
    }

    #[test]
    fn full_km_invertible_matches_invertible_realization() {
        let c = QMatrix::from_rows(&[vec![q(2), qf(-1, 2)], vec![q(-3), q(2)]]).unwrap();
        let (p, cert) = realize_full_km(&c).unwrap();
        assert!(cert.holds());
        assert_eq!(p.r(), 2);
        let a = expand(&p.local_algebra(), 4).unwrap().dimension_table();
        let b = expand(&realize_invertible(&c).unwrap().local_algebra(), 4)
            .unwrap()
            .dimension_table();
        assert_eq!(a, b);
    }

    #[test]
    fn derived_affine_matches_contragredient() {
        let c = m(&[&[2, -2], &[-2, 2]]);
        let derived = derived_realization(&c, 6).unwrap();
        let g = expand(&contragredient_local(&c).unwrap(), 6).unwrap().dimension_table();
        assert_eq!(derived[&0], 2);
        assert_eq!(derived, g.dims);
    }

    #[test]
    fn certificate_json_shape() {
        let (_, cert) = realize_full_km(&m(&[&[2, -2], &[-2, 2]])).unwrap();
        let v = cert.to_json();
        assert_eq!(v["mode"], "full_km");
        assert_eq!(v["cartan_round_trip"], true);
        assert_eq!(v["rank_D"], 2);
        assert_eq!(v["dim0"], 3);
    }
}
