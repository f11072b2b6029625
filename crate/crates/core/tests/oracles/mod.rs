//! Dimension tables computed without the graded engine.

use std::collections::{BTreeMap, BTreeSet};

/// `ℂ[t, t⁻¹] ⊗ sl₂` graded by `deg(e⊗tᵐ) = 2m+1`, `deg(h⊗tᵐ) = 2m`,
/// `deg(f⊗tᵐ) = 2m-1`, plus `extra_zero` additional degree-0 elements.
pub fn loop_algebra_dims(cutoff: i64, extra_zero: usize) -> BTreeMap<i64, usize> {
    let mut dims: BTreeMap<i64, usize> = (-cutoff..=cutoff).map(|k| (k, 0)).collect();
    let span = cutoff / 2 + 2;
    for m in -span..=span {
        for degree in [2 * m + 1, 2 * m, 2 * m - 1] {
            if let Some(d) = dims.get_mut(&degree) {
                *d += 1;
            }
        }
    }
    *dims.get_mut(&0).unwrap() += extra_zero;
    dims
}

/// Positive roots of a finite-type Cartan matrix with `[h_i, e_j] = c[i][j] e_j`,
/// grown by `α_i`-strings: `β + α_i` is a root iff `p - β(h_i) > 0`, where
/// `p` is the length of the string below `β`.
pub fn positive_roots(c: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = c.len();
    let simple = |i: usize| -> Vec<i64> { (0..n).map(|j| i64::from(i == j)).collect() };
    let mut roots: BTreeSet<Vec<i64>> = (0..n).map(simple).collect();
    let mut layer: Vec<Vec<i64>> = roots.iter().cloned().collect();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| beta[j] * c[i][j]).sum();
                let mut p = 0;
                let mut below = beta.clone();
                loop {
                    below[i] -= 1;
                    if roots.contains(&below) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if roots.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        layer = next;
    }
    roots
}

/// Root-space dimensions by height plus the Cartan subalgebra in degree 0.
pub fn finite_type_dims(c: &[Vec<i64>], cutoff: i64) -> BTreeMap<i64, usize> {
    let mut dims: BTreeMap<i64, usize> = (-cutoff..=cutoff).map(|k| (k, 0)).collect();
    *dims.get_mut(&0).unwrap() = c.len();
    for root in positive_roots(c) {
        let height: i64 = root.iter().sum();
        if height <= cutoff {
            *dims.get_mut(&height).unwrap() += 1;
            *dims.get_mut(&-height).unwrap() += 1;
        }
    }
    dims
}

#[test]
fn oracle_self_checks() {
    assert_eq!(positive_roots(&[vec![2, -1], vec![-1, 2]]).len(), 3);
    assert_eq!(positive_roots(&[vec![2, -1], vec![-2, 2]]).len(), 4);
    assert_eq!(positive_roots(&[vec![2, -1], vec![-3, 2]]).len(), 6);
    assert_eq!(positive_roots(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]).len(), 6);
    let l = loop_algebra_dims(4, 0);
    assert_eq!((l[&0], l[&1], l[&2], l[&-3]), (1, 2, 1, 2));
}
