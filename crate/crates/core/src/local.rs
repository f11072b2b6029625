//! Local Lie algebras `G₋₁ ⊕ G₀ ⊕ G₁`.
//!
//! Only the brackets whose degrees sum into `{-1, 0, 1}` are stored:
//! `[G₀,G₀]`, `[G₀,G₁]`, `[G₀,G₋₁]` and `[G₁,G₋₁]`. The reversed orders
//! follow from antisymmetry.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactq::{axpy, is_zero_vector, negated, span_rank, unit_vector, zero_vector, QMatrix, QVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalLieAlgebra {
    neg_labels: Vec<String>,
    zero_labels: Vec<String>,
    pos_labels: Vec<String>,
    /// `zero_bracket[a][b] = [x_a, x_b]`.
    zero_bracket: Vec<Vec<QVector>>,
    /// Column `j` of `pos_action[a]` is `[x_a, e_j]`.
    pos_action: Vec<QMatrix>,
    /// Column `j` of `neg_action[a]` is `[x_a, f_j]`.
    neg_action: Vec<QMatrix>,
    /// `pairing[i][j] = [e_i, f_j]`.
    pairing: Vec<Vec<QVector>>,
}

impl LocalLieAlgebra {
    /// An abelian local algebra with the given basis labels; brackets are
    /// filled in with the setters.
    pub fn new(neg_labels: Vec<String>, zero_labels: Vec<String>, pos_labels: Vec<String>) -> Self {
        let (n_neg, n_zero, n_pos) = (neg_labels.len(), zero_labels.len(), pos_labels.len());
        Self {
            zero_bracket: vec![vec![zero_vector(n_zero); n_zero]; n_zero],
            pos_action: vec![QMatrix::zeros(n_pos, n_pos); n_zero],
            neg_action: vec![QMatrix::zeros(n_neg, n_neg); n_zero],
            pairing: vec![vec![zero_vector(n_zero); n_neg]; n_pos],
            neg_labels,
            zero_labels,
            pos_labels,
        }
    }

    pub fn dim_neg(&self) -> usize {
        self.neg_labels.len()
    }

    pub fn dim_zero(&self) -> usize {
        self.zero_labels.len()
    }

    pub fn dim_pos(&self) -> usize {
        self.pos_labels.len()
    }

    pub fn neg_labels(&self) -> &[String] {
        &self.neg_labels
    }

    pub fn zero_labels(&self) -> &[String] {
        &self.zero_labels
    }

    pub fn pos_labels(&self) -> &[String] {
        &self.pos_labels
    }

    /// Sets `[x_a, x_b]` only; the caller supplies `[x_b, x_a]` as well.
    pub fn set_zero_bracket(&mut self, a: usize, b: usize, value: QVector) {
        assert_eq!(value.len(), self.dim_zero());
        self.zero_bracket[a][b] = value;
    }

    /// Sets `[x_a, e_j]`.
    pub fn set_pos_action(&mut self, a: usize, j: usize, value: QVector) {
        assert_eq!(value.len(), self.dim_pos());
        for (i, x) in value.into_iter().enumerate() {
            self.pos_action[a][(i, j)] = x;
        }
    }

    /// Sets `[x_a, f_j]`.
    pub fn set_neg_action(&mut self, a: usize, j: usize, value: QVector) {
        assert_eq!(value.len(), self.dim_neg());
        for (i, x) in value.into_iter().enumerate() {
            self.neg_action[a][(i, j)] = x;
        }
    }

    /// Sets `[e_i, f_j]`.
    pub fn set_pairing(&mut self, i: usize, j: usize, value: QVector) {
        assert_eq!(value.len(), self.dim_zero());
        self.pairing[i][j] = value;
    }

    pub fn zero_bracket(&self, a: usize, b: usize) -> &QVector {
        &self.zero_bracket[a][b]
    }

    pub fn pos_action(&self, a: usize) -> &QMatrix {
        &self.pos_action[a]
    }

    pub fn neg_action(&self, a: usize) -> &QMatrix {
        &self.neg_action[a]
    }

    pub fn pairing(&self, i: usize, j: usize) -> &QVector {
        &self.pairing[i][j]
    }

    /// `[x, y]` for `x, y ∈ G₀`.
    pub fn bracket_zero(&self, x: &[crate::Rational], y: &[crate::Rational]) -> QVector {
        let mut out = zero_vector(self.dim_zero());
        for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(xa * yb), &self.zero_bracket[a][b]);
            }
        }
        out
    }

    /// Matrix of `ad(x)` on `G₁` for `x ∈ G₀`.
    pub fn pos_action_of(&self, x: &[crate::Rational]) -> QMatrix {
        combine(&self.pos_action, x, self.dim_pos())
    }

    /// Matrix of `ad(x)` on `G₋₁` for `x ∈ G₀`.
    pub fn neg_action_of(&self, x: &[crate::Rational]) -> QMatrix {
        combine(&self.neg_action, x, self.dim_neg())
    }

    /// `[e, f]` for `e ∈ G₁`, `f ∈ G₋₁`.
    pub fn pair(&self, e: &[crate::Rational], f: &[crate::Rational]) -> QVector {
        let mut out = zero_vector(self.dim_zero());
        for (i, ei) in e.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, fj) in f.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                axpy(&mut out, &(ei * fj), &self.pairing[i][j]);
            }
        }
        out
    }

    /// The same Lie algebra with the grading reversed: `G₁` and `G₋₁`
    /// swap roles and `[f, e] = -[e, f]`.
    pub fn mirrored(&self) -> Self {
        let (n_neg, n_pos) = (self.dim_neg(), self.dim_pos());
        let pairing = (0..n_neg)
            .map(|j| (0..n_pos).map(|i| negated(&self.pairing[i][j])).collect())
            .collect();
        Self {
            neg_labels: self.pos_labels.clone(),
            zero_labels: self.zero_labels.clone(),
            pos_labels: self.neg_labels.clone(),
            zero_bracket: self.zero_bracket.clone(),
            pos_action: self.neg_action.clone(),
            neg_action: self.pos_action.clone(),
            pairing,
        }
    }

    /// Checks antisymmetry on `G₀` and every Jacobi identity whose brackets
    /// stay inside the local part. An empty report means the axioms hold.
    pub fn validate(&self) -> Vec<String> {
        let mut report = Vec::new();
        let n0 = self.dim_zero();
        let zl = &self.zero_labels;

        for a in 0..n0 {
            for b in a..n0 {
                let sum: QVector = self.zero_bracket[a][b]
                    .iter()
                    .zip(&self.zero_bracket[b][a])
                    .map(|(x, y)| x + y)
                    .collect();
                if !is_zero_vector(&sum) {
                    report.push(format!("antisymmetry fails for [{}, {}]", zl[a], zl[b]));
                }
            }
        }

        let basis0 = |a: usize| unit_vector(n0, a);
        for a in 0..n0 {
            for b in a + 1..n0 {
                for c in b + 1..n0 {
                    let (xa, xb, xc) = (basis0(a), basis0(b), basis0(c));
                    let mut sum = self.bracket_zero(&xa, &self.bracket_zero(&xb, &xc));
                    axpy(&mut sum, &crate::q(1), &self.bracket_zero(&xb, &self.bracket_zero(&xc, &xa)));
                    axpy(&mut sum, &crate::q(1), &self.bracket_zero(&xc, &self.bracket_zero(&xa, &xb)));
                    if !is_zero_vector(&sum) {
                        report.push(format!("Jacobi fails for ({}, {}, {})", zl[a], zl[b], zl[c]));
                    }
                }
            }
        }

        // ad is a representation of G₀ on G₁ and on G₋₁
        for a in 0..n0 {
            for b in a + 1..n0 {
                let ab = self.bracket_zero(&basis0(a), &basis0(b));
                for (side, actions, labels) in [
                    ("G1", &self.pos_action, &self.pos_labels),
                    ("G-1", &self.neg_action, &self.neg_labels),
                ] {
                    if labels.is_empty() {
                        continue;
                    }
                    let commutator = actions[a]
                        .mul(&actions[b])
                        .and_then(|x| x.sub(&actions[b].mul(&actions[a])?))
                        .expect("square actions");
                    if commutator != combine(actions, &ab, labels.len()) {
                        report.push(format!(
                            "Jacobi fails for ({}, {}, {side}): ad[x,y] != [ad x, ad y]",
                            zl[a], zl[b]
                        ));
                    }
                }
            }
        }

        // [a,[e,f]] = [[a,e],f] + [e,[a,f]]
        for a in 0..n0 {
            for i in 0..self.dim_pos() {
                for j in 0..self.dim_neg() {
                    let lhs = self.bracket_zero(&basis0(a), &self.pairing[i][j]);
                    let ae = self.pos_action[a].column(i);
                    let af = self.neg_action[a].column(j);
                    let mut rhs = self.pair(&ae, &unit_vector(self.dim_neg(), j));
                    axpy(&mut rhs, &crate::q(1), &self.pair(&unit_vector(self.dim_pos(), i), &af));
                    if lhs != rhs {
                        report.push(format!(
                            "Jacobi fails for ({}, {}, {})",
                            zl[a], self.pos_labels[i], self.neg_labels[j]
                        ));
                    }
                }
            }
        }
        report
    }
}

fn combine(matrices: &[QMatrix], coeffs: &[crate::Rational], dim: usize) -> QMatrix {
    let mut out = QMatrix::zeros(dim, dim);
    for (m, c) in matrices.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&m.scale(c)).expect("equal shapes");
        }
    }
    out
}

/// A degree-preserving linear map between local algebras. Each matrix maps
/// source coordinates (columns) to target coordinates (rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMap {
    pub neg: QMatrix,
    pub zero: QMatrix,
    pub pos: QMatrix,
}

/// Kernel of a [`LocalMap`], one basis per degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LocalKernel {
    pub neg: Vec<QVector>,
    pub zero: Vec<QVector>,
    pub pos: Vec<QVector>,
}

impl LocalKernel {
    pub fn is_trivial(&self) -> bool {
        self.neg.is_empty() && self.zero.is_empty() && self.pos.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.neg.len() + self.zero.len() + self.pos.len()
    }
}

/// The first basis pair on which a map fails to preserve brackets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchReport {
    pub left: String,
    pub right: String,
    /// `φ([x, y])`
    pub image_of_bracket: QVector,
    /// `[φ(x), φ(y)]`
    pub bracket_of_images: QVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomCheck {
    Homomorphism(LocalKernel),
    Mismatch(MismatchReport),
}

/// Checks that `map` preserves every local bracket from `src` to `dst` and
/// returns its kernel, or the first violated pair.
pub fn local_hom_check(src: &LocalLieAlgebra, dst: &LocalLieAlgebra, map: &LocalMap) -> Result<HomCheck> {
    for (name, m, rows, cols) in [
        ("degree -1", &map.neg, dst.dim_neg(), src.dim_neg()),
        ("degree 0", &map.zero, dst.dim_zero(), src.dim_zero()),
        ("degree 1", &map.pos, dst.dim_pos(), src.dim_pos()),
    ] {
        if m.rows() != rows || m.cols() != cols {
            return Err(Error::DimensionMismatch(format!(
                "{name} map is {}x{}, expected {rows}x{cols}",
                m.rows(),
                m.cols()
            )));
        }
    }

    let mismatch = |left: &str, right: &str, image_of_bracket: QVector, bracket_of_images: QVector| {
        HomCheck::Mismatch(MismatchReport {
            left: left.to_owned(),
            right: right.to_owned(),
            image_of_bracket,
            bracket_of_images,
        })
    };

    for a in 0..src.dim_zero() {
        let phi_a = map.zero.column(a);
        for b in 0..src.dim_zero() {
            let lhs = map.zero.mul_vec(src.zero_bracket(a, b));
            let rhs = dst.bracket_zero(&phi_a, &map.zero.column(b));
            if lhs != rhs {
                return Ok(mismatch(&src.zero_labels[a], &src.zero_labels[b], lhs, rhs));
            }
        }
        let act = dst.pos_action_of(&phi_a);
        for j in 0..src.dim_pos() {
            let lhs = map.pos.mul_vec(&src.pos_action(a).column(j));
            let rhs = act.mul_vec(&map.pos.column(j));
            if lhs != rhs {
                return Ok(mismatch(&src.zero_labels[a], &src.pos_labels[j], lhs, rhs));
            }
        }
        let act = dst.neg_action_of(&phi_a);
        for j in 0..src.dim_neg() {
            let lhs = map.neg.mul_vec(&src.neg_action(a).column(j));
            let rhs = act.mul_vec(&map.neg.column(j));
            if lhs != rhs {
                return Ok(mismatch(&src.zero_labels[a], &src.neg_labels[j], lhs, rhs));
            }
        }
    }
    for i in 0..src.dim_pos() {
        for j in 0..src.dim_neg() {
            let lhs = map.zero.mul_vec(src.pairing(i, j));
            let rhs = dst.pair(&map.pos.column(i), &map.neg.column(j));
            if lhs != rhs {
                return Ok(mismatch(&src.pos_labels[i], &src.neg_labels[j], lhs, rhs));
            }
        }
    }

    Ok(HomCheck::Homomorphism(LocalKernel {
        neg: map.neg.nullspace(),
        zero: map.zero.nullspace(),
        pos: map.pos.nullspace(),
    }))
}

/// Whether a map between locals of equal dimensions is bijective in every degree.
pub fn is_bijective(map: &LocalMap) -> bool {
    [&map.neg, &map.zero, &map.pos]
        .iter()
        .all(|m| m.is_square() && span_rank(&m.row_vectors()) == m.rows())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::{q, Rational};

    pub(crate) fn labels(prefix: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{prefix}{i}")).collect()
    }

    /// `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = scale·h`, `[h,f] = neg_weight·f`.
    pub(crate) fn sl2_like(pair_scale: i64, neg_weight: i64) -> LocalLieAlgebra {
        let mut l = LocalLieAlgebra::new(vec!["f".into()], vec!["h".into()], vec!["e".into()]);
        l.set_pos_action(0, 0, vec![q(2)]);
        l.set_neg_action(0, 0, vec![q(neg_weight)]);
        l.set_pairing(0, 0, vec![q(pair_scale)]);
        l
    }

    pub(crate) fn sl2() -> LocalLieAlgebra {
        sl2_like(1, -2)
    }

    #[test]
    fn sl2_triple_is_valid() {
        assert!(sl2().validate().is_empty());
    }

    #[test]
    fn rescaled_pairing_is_still_a_lie_algebra() {
        // [e,f] = 2h with [h,e] = 2e is sl2 with e rescaled by 2.
        assert!(sl2_like(2, -2).validate().is_empty());
    }

    #[test]
    fn inconsistent_weights_violate_jacobi() {
        // [h,[e,f]] = 0 but [[h,e],f] + [e,[h,f]] = 2h - 3h.
        let report = sl2_like(1, -3).validate();
        assert_eq!(report.len(), 1);
        assert!(report[0].contains("(h, e, f)"));
    }

    #[test]
    fn abelian_is_valid() {
        let l = LocalLieAlgebra::new(labels("f", 2), labels("h", 3), labels("e", 2));
        assert!(l.validate().is_empty());
    }

    #[test]
    fn non_antisymmetric_zero_bracket_is_reported() {
        let mut l = LocalLieAlgebra::new(vec![], labels("h", 2), vec![]);
        l.set_zero_bracket(0, 1, vec![q(1), q(0)]);
        let report = l.validate();
        assert!(report.iter().any(|r| r.contains("antisymmetry")));
    }

    #[test]
    fn mirror_twice_is_identity() {
        let l = sl2();
        assert_eq!(l.mirrored().mirrored(), l);
        assert_eq!(l.mirrored().pairing(0, 0), &vec![q(-1)]);
    }

    fn identity_map(l: &LocalLieAlgebra) -> LocalMap {
        LocalMap {
            neg: QMatrix::identity(l.dim_neg()),
            zero: QMatrix::identity(l.dim_zero()),
            pos: QMatrix::identity(l.dim_pos()),
        }
    }

    #[test]
    fn identity_is_injective_homomorphism() {
        let l = sl2();
        match local_hom_check(&l, &l, &identity_map(&l)).unwrap() {
            HomCheck::Homomorphism(k) => assert!(k.is_trivial()),
            HomCheck::Mismatch(m) => panic!("unexpected mismatch {m:?}"),
        }
    }

    #[test]
    fn scaling_e_only_breaks_the_pairing() {
        let l = sl2();
        let mut map = identity_map(&l);
        map.pos = QMatrix::from_rows(&[vec![q(2)]]).unwrap();
        match local_hom_check(&l, &l, &map).unwrap() {
            HomCheck::Mismatch(m) => {
                assert_eq!((m.left.as_str(), m.right.as_str()), ("e", "f"));
                assert_eq!(m.image_of_bracket, vec![q(1)]);
                assert_eq!(m.bracket_of_images, vec![q(2)]);
            }
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn wrong_shape_is_dimension_mismatch() {
        let l = sl2();
        let mut map = identity_map(&l);
        map.zero = QMatrix::identity(2);
        assert!(matches!(local_hom_check(&l, &l, &map), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn bracket_helpers_are_bilinear() {
        let l = sl2();
        let two: Rational = q(2);
        assert_eq!(l.pair(&[two.clone()], &[q(3)]), vec![q(6)]);
        assert_eq!(l.pos_action_of(&[two]).column(0), vec![q(4)]);
    }
}
