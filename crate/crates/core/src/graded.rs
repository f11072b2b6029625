//! Degreewise expansion of a local Lie algebra into its minimal graded Lie
//! algebra.
//!
//! For `k ≥ 1` the component `V_{k+1}` is the image of
//!
//! ```text
//! T_k : V_k ⊗ G₁ → Hom(G₋₁, V_k),   T_k(u⊗e)(f) = [u,[e,f]] + [[u,f],e]
//! ```
//!
//! and the basis of `V_{k+1}` is the set of pivot tensors `u_p ⊗ e_q` of the
//! reduced row echelon form of `T_k`, so every basis vector of degree `k+1`
//! is literally `[u_p, e_q]`. The negative side is the positive side of the
//! mirrored local algebra.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::exactq::{axpy, format_rational, is_zero_vector, negated, span_rank, unit_vector, zero_vector, QMatrix, QVector};
use crate::local::LocalLieAlgebra;

/// Basis size cap used when no explicit limit is given.
pub const DEFAULT_MAX_DIM: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Level {
    pub(crate) dim: usize,
    /// `action[a]` is `ad(x_a)` restricted to this level.
    pub(crate) action: Vec<QMatrix>,
    /// Column `p * n_opp + g` is `[v_p, g]` in the level below (or in `G₀`).
    pub(crate) lower: QMatrix,
    /// Basis vector `p` equals `[u_{section[p].0}, g_{section[p].1}]`.
    /// Empty on the first level.
    pub(crate) section: Vec<(usize, usize)>,
    /// Column `p * n_gen + g` is `[v_p, g]` in the level above; `None` at
    /// the cutoff.
    pub(crate) raise: Option<QMatrix>,
}

/// One side of the expansion, built from a local algebra oriented so that
/// its `G₁` generates this side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Tower {
    pub(crate) local: LocalLieAlgebra,
    /// `levels[k - 1]` holds `V_k`. Levels past an exhausted component are
    /// not stored.
    pub(crate) levels: Vec<Level>,
    pub(crate) exhausted: bool,
}

impl Tower {
    fn n_gen(&self) -> usize {
        self.local.dim_pos()
    }

    fn n_opp(&self) -> usize {
        self.local.dim_neg()
    }

    fn level(&self, k: usize) -> Option<&Level> {
        self.levels.get(k - 1)
    }

    fn dim(&self, k: usize) -> usize {
        self.level(k).map_or(0, |l| l.dim)
    }

    fn first_level(local: &LocalLieAlgebra) -> Level {
        let (n_gen, n_opp) = (local.dim_pos(), local.dim_neg());
        let columns: Vec<QVector> = (0..n_gen)
            .flat_map(|p| (0..n_opp).map(move |g| (p, g)))
            .map(|(p, g)| local.pairing(p, g).clone())
            .collect();
        Level {
            dim: n_gen,
            action: (0..local.dim_zero()).map(|a| local.pos_action(a).clone()).collect(),
            lower: QMatrix::from_columns(local.dim_zero(), &columns).expect("pairing lengths"),
            section: Vec::new(),
            raise: None,
        }
    }

    /// `[w, g]` for `w` in level `k` (level 0 meaning `G₀`) and `g` a
    /// generator; lands in level `k + 1`.
    fn raise_vec(&self, k: usize, w: &[crate::Rational], g: usize) -> QVector {
        if k == 0 {
            return self.local.pos_action_of(w).column(g);
        }
        let level = &self.levels[k - 1];
        let raise = level.raise.as_ref().expect("raise requested past cutoff");
        let mut out = zero_vector(raise.rows());
        let n_gen = self.n_gen();
        for (u, c) in w.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &raise.column(u * n_gen + g));
            }
        }
        out
    }

    /// `T_k` as a matrix with rows `(f, w)` and columns `(u, e)`.
    fn transfer(&self, k: usize) -> QMatrix {
        let level = &self.levels[k - 1];
        let (n_gen, n_opp, dim) = (self.n_gen(), self.n_opp(), level.dim);
        let rho: Vec<Vec<QMatrix>> = (0..n_gen)
            .map(|e| {
                (0..n_opp)
                    .map(|f| combine(&level.action, self.local.pairing(e, f), dim))
                    .collect()
            })
            .collect();
        let mut t = QMatrix::zeros(n_opp * dim, dim * n_gen);
        for u in 0..dim {
            for e in 0..n_gen {
                let col = u * n_gen + e;
                for f in 0..n_opp {
                    // [u,[e,f]] = -ρ([e,f]) u
                    let mut value = negated(&rho[e][f].column(u));
                    let below = level.lower.column(u * n_opp + f);
                    axpy(&mut value, &crate::q(1), &self.raise_vec(k - 1, &below, e));
                    for (w, x) in value.into_iter().enumerate() {
                        t[(f * dim + w, col)] = x;
                    }
                }
            }
        }
        t
    }

    /// `ad(x_a)` on `V_k ⊗ G₁`, columns and rows indexed by `(u, e)`.
    fn tensor_action(&self, k: usize, a: usize) -> QMatrix {
        let level = &self.levels[k - 1];
        let (n_gen, dim) = (self.n_gen(), level.dim);
        let on_gen = self.local.pos_action(a);
        let mut m = QMatrix::zeros(dim * n_gen, dim * n_gen);
        for u in 0..dim {
            for e in 0..n_gen {
                let col = u * n_gen + e;
                for w in 0..dim {
                    m[(w * n_gen + e, col)] += &level.action[a][(w, u)];
                }
                for e2 in 0..n_gen {
                    m[(u * n_gen + e2, col)] += &on_gen[(e2, e)];
                }
            }
        }
        m
    }

    fn build(local: LocalLieAlgebra, cutoff: usize, limit: usize, total: &mut usize) -> Result<Self> {
        let first = Self::first_level(&local);
        *total += first.dim;
        if *total > limit {
            return Err(Error::DimensionLimit { limit });
        }
        let exhausted = first.dim == 0;
        let mut tower = Self {
            local,
            levels: vec![first],
            exhausted,
        };
        if exhausted {
            return Ok(tower);
        }
        let (n_gen, n_opp) = (tower.n_gen(), tower.n_opp());
        for k in 1..cutoff {
            let t = tower.transfer(k);
            let rref = t.rref();
            let dim_k = tower.levels[k - 1].dim;
            let next_dim = rref.rank();
            *total += next_dim;
            if *total > limit {
                return Err(Error::DimensionLimit { limit });
            }
            let rows: Vec<usize> = (0..next_dim).collect();
            let raise = rref.reduced.select_rows(&rows);
            tower.levels[k - 1].raise = Some(raise.clone());
            if next_dim == 0 {
                tower.exhausted = true;
                break;
            }

            let section: Vec<(usize, usize)> = rref.pivots.iter().map(|&c| (c / n_gen, c % n_gen)).collect();
            let mut lower = QMatrix::zeros(dim_k, next_dim * n_opp);
            for (p, &c) in rref.pivots.iter().enumerate() {
                for f in 0..n_opp {
                    for w in 0..dim_k {
                        lower[(w, p * n_opp + f)] = t[(f * dim_k + w, c)].clone();
                    }
                }
            }
            let action = (0..tower.local.dim_zero())
                .map(|a| {
                    let on_tensors = tower.tensor_action(k, a);
                    let columns: Vec<QVector> = rref
                        .pivots
                        .iter()
                        .map(|&c| sparse_mul(&raise, &on_tensors, c))
                        .collect();
                    QMatrix::from_columns(next_dim, &columns).expect("square action")
                })
                .collect();
            tower.levels.push(Level {
                dim: next_dim,
                action,
                lower,
                section,
                raise: None,
            });
        }
        Ok(tower)
    }
}

/// `m · b[:, col]`, touching only the nonzero entries of that column.
fn sparse_mul(m: &QMatrix, b: &QMatrix, col: usize) -> QVector {
    let mut out = zero_vector(m.rows());
    for j in 0..b.rows() {
        let x = &b[(j, col)];
        if x.is_zero() {
            continue;
        }
        for (i, o) in out.iter_mut().enumerate() {
            let y = &m[(i, j)];
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
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

/// An element of a single graded component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    pub degree: i64,
    pub coords: QVector,
}

impl GradedElement {
    pub fn new(degree: i64, coords: QVector) -> Self {
        Self { degree, coords }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.coords)
    }
}

/// Per-degree dimensions of an expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub dims: BTreeMap<i64, usize>,
    pub terminated_pos: bool,
    pub terminated_neg: bool,
}

impl DimensionTable {
    pub fn get(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn to_json(&self) -> Value {
        let degrees: Map<String, Value> = self.dims.iter().map(|(d, n)| (d.to_string(), json!(n))).collect();
        json!({
            "degrees": degrees,
            "terminated_pos": self.terminated_pos,
            "terminated_neg": self.terminated_neg,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("degree,dim\n");
        for (d, n) in &self.dims {
            out.push_str(&format!("{d},{n}\n"));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let mut out = String::from("degree  dim\n");
        for (d, n) in &self.dims {
            out.push_str(&format!("{d:>6}  {n}\n"));
        }
        out.push_str(&format!(
            "terminated: positive={} negative={}\n",
            self.terminated_pos, self.terminated_neg
        ));
        out
    }
}

type Table = Arc<Vec<QVector>>;

/// The minimal graded Lie algebra of a local algebra, computed for degrees
/// `|k| ≤ cutoff`.
#[derive(Debug)]
pub struct GradedAlgebra {
    cutoff: usize,
    pub(crate) pos: Tower,
    pub(crate) neg: Tower,
    cache: Mutex<HashMap<(i64, i64), Table>>,
}

impl Clone for GradedAlgebra {
    fn clone(&self) -> Self {
        Self {
            cutoff: self.cutoff,
            pos: self.pos.clone(),
            neg: self.neg.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.cutoff == other.cutoff && self.pos == other.pos && self.neg == other.neg
    }
}

/// Expands `local` up to degree `cutoff` on both sides.
pub fn expand(local: &LocalLieAlgebra, cutoff: usize) -> Result<GradedAlgebra> {
    expand_with_limit(local, cutoff, DEFAULT_MAX_DIM)
}

/// As [`expand`], failing with [`Error::DimensionLimit`] once the total basis
/// size exceeds `limit`.
pub fn expand_with_limit(local: &LocalLieAlgebra, cutoff: usize, limit: usize) -> Result<GradedAlgebra> {
    if cutoff == 0 {
        return Err(Error::ZeroCutoff);
    }
    let report = local.validate();
    if !report.is_empty() {
        return Err(Error::InvalidLocal(report));
    }
    let mut total = local.dim_zero();
    if total > limit {
        return Err(Error::DimensionLimit { limit });
    }
    let pos = Tower::build(local.clone(), cutoff, limit, &mut total)?;
    let neg = Tower::build(local.mirrored(), cutoff, limit, &mut total)?;
    Ok(GradedAlgebra::from_towers(cutoff, pos, neg))
}

fn sign(d: i64) -> i64 {
    if d > 0 {
        1
    } else {
        -1
    }
}

impl GradedAlgebra {
    pub(crate) fn from_towers(cutoff: usize, pos: Tower, neg: Tower) -> Self {
        Self {
            cutoff,
            pos,
            neg,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn local(&self) -> &LocalLieAlgebra {
        &self.pos.local
    }

    pub fn terminated_pos(&self) -> bool {
        self.pos.exhausted
    }

    pub fn terminated_neg(&self) -> bool {
        self.neg.exhausted
    }

    fn check_range(&self, degree: i64) -> Result<()> {
        if degree.unsigned_abs() as usize > self.cutoff {
            return Err(Error::OutOfRange {
                degree,
                cutoff: self.cutoff,
            });
        }
        Ok(())
    }

    fn tower(&self, degree: i64) -> &Tower {
        if degree > 0 {
            &self.pos
        } else {
            &self.neg
        }
    }

    pub fn dim(&self, degree: i64) -> Result<usize> {
        self.check_range(degree)?;
        Ok(self.dim_unchecked(degree))
    }

    fn dim_unchecked(&self, degree: i64) -> usize {
        if degree == 0 {
            self.local().dim_zero()
        } else {
            self.tower(degree).dim(degree.unsigned_abs() as usize)
        }
    }

    pub fn dimension_table(&self) -> DimensionTable {
        let n = self.cutoff as i64;
        DimensionTable {
            dims: (-n..=n).map(|d| (d, self.dim_unchecked(d))).collect(),
            terminated_pos: self.pos.exhausted,
            terminated_neg: self.neg.exhausted,
        }
    }

    /// For a basis vector of degree `k` with `|k| ≥ 2`, the pair
    /// `(p, q)` such that it equals `[u_p, g_q]` with `u_p` of degree
    /// `k ∓ 1` and `g_q` a generator of degree `±1`.
    pub fn section(&self, degree: i64, index: usize) -> Result<(usize, usize)> {
        self.check_range(degree)?;
        let level = self
            .tower(degree)
            .level(degree.unsigned_abs() as usize)
            .filter(|_| degree.abs() >= 2)
            .ok_or(Error::OutOfRange {
                degree,
                cutoff: self.cutoff,
            })?;
        level.section.get(index).copied().ok_or(Error::OutOfRange {
            degree,
            cutoff: self.cutoff,
        })
    }

    /// Matrix of `ad(x)` on `V_degree` for `x ∈ V₀`.
    pub fn degree_zero_action(&self, x: &[crate::Rational], degree: i64) -> Result<QMatrix> {
        self.check_range(degree)?;
        let dim = self.dim_unchecked(degree);
        Ok(match degree {
            0 => {
                let n = self.local().dim_zero();
                let columns: Vec<QVector> = (0..n)
                    .map(|b| self.local().bracket_zero(x, &unit_vector(n, b)))
                    .collect();
                QMatrix::from_columns(n, &columns).expect("square")
            }
            d => match self.tower(d).level(d.unsigned_abs() as usize) {
                Some(level) => combine(&level.action, x, dim),
                None => QMatrix::zeros(0, 0),
            },
        })
    }

    /// `[v, g]` for `v ∈ V_degree` and `g` the `gen`-th generator of degree
    /// `dir ∈ {1, -1}`.
    fn gen_bracket(&self, degree: i64, v: &[crate::Rational], gen: usize, dir: i64) -> Result<QVector> {
        let target = degree + dir;
        self.check_range(target)?;
        let target_dim = self.dim_unchecked(target);
        if degree == 0 {
            let local = self.local();
            return Ok(if dir > 0 {
                local.pos_action_of(v).column(gen)
            } else {
                local.neg_action_of(v).column(gen)
            });
        }
        let tower = self.tower(degree);
        let k = degree.unsigned_abs() as usize;
        let Some(level) = tower.level(k) else {
            return Ok(zero_vector(target_dim));
        };
        let mut out = zero_vector(target_dim);
        if sign(degree) == dir {
            let raise = level.raise.as_ref().ok_or(Error::OutOfRange {
                degree: target,
                cutoff: self.cutoff,
            })?;
            let n_gen = tower.n_gen();
            for (u, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, c, &raise.column(u * n_gen + gen));
            }
        } else {
            let n_opp = tower.n_opp();
            for (u, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, c, &level.lower.column(u * n_opp + gen));
            }
        }
        Ok(out)
    }

    /// All brackets `[x_i, y_j]` of basis vectors, row-major in `(i, j)`.
    pub fn bracket_table(&self, d1: i64, d2: i64) -> Result<Arc<Vec<QVector>>> {
        self.check_range(d1)?;
        self.check_range(d2)?;
        self.check_range(d1 + d2)?;
        if let Some(t) = self.cache.lock().expect("cache lock").get(&(d1, d2)) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.compute_table(d1, d2)?);
        self.cache
            .lock()
            .expect("cache lock")
            .insert((d1, d2), Arc::clone(&table));
        Ok(table)
    }

    fn transposed_negative(&self, d1: i64, d2: i64) -> Result<Vec<QVector>> {
        let swapped = self.bracket_table(d2, d1)?;
        let (n1, n2) = (self.dim_unchecked(d1), self.dim_unchecked(d2));
        Ok((0..n1)
            .flat_map(|i| (0..n2).map(move |j| (i, j)))
            .map(|(i, j)| negated(&swapped[j * n1 + i]))
            .collect())
    }

    fn compute_table(&self, d1: i64, d2: i64) -> Result<Vec<QVector>> {
        let (n1, n2) = (self.dim_unchecked(d1), self.dim_unchecked(d2));
        if n1 == 0 || n2 == 0 {
            return Ok(Vec::new());
        }
        let basis1 = |i: usize| unit_vector(n1, i);
        let mut out = Vec::with_capacity(n1 * n2);

        if d1 == 0 && d2 == 0 {
            let local = self.local();
            for a in 0..n1 {
                for b in 0..n2 {
                    out.push(local.zero_bracket(a, b).clone());
                }
            }
            return Ok(out);
        }
        if d1 == 0 {
            for a in 0..n1 {
                let m = self.degree_zero_action(&basis1(a), d2)?;
                for j in 0..n2 {
                    out.push(m.column(j));
                }
            }
            return Ok(out);
        }
        if d2 == 0 || d1.abs() < d2.abs() {
            return self.transposed_negative(d1, d2);
        }
        if d2.abs() == 1 {
            for i in 0..n1 {
                for j in 0..n2 {
                    out.push(self.gen_bracket(d1, &basis1(i), j, d2)?);
                }
            }
            return Ok(out);
        }

        // 2 ≤ |d2| ≤ |d1|: y_j = [u_p, g_q], so
        // [x, y_j] = [[x, u_p], g_q] + [u_p, [x, g_q]].
        let dir = sign(d2);
        let inner = d2 - dir;
        let level = self
            .tower(d2)
            .level(d2.unsigned_abs() as usize)
            .expect("nonzero dimension implies a stored level");
        let left = self.bracket_table(d1, inner)?;
        let n_inner = self.dim_unchecked(inner);
        let shifted = d1 + dir;
        let right = self.bracket_table(inner, shifted)?;
        let n_shifted = self.dim_unchecked(shifted);
        for i in 0..n1 {
            let x = basis1(i);
            for &(p, g) in &level.section {
                let mut value = self.gen_bracket(d1 + inner, &left[i * n_inner + p], g, dir)?;
                let xg = self.gen_bracket(d1, &x, g, dir)?;
                for (c, coeff) in xg.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    axpy(&mut value, coeff, &right[p * n_shifted + c]);
                }
                out.push(value);
            }
        }
        Ok(out)
    }

    /// `[x, y]` for homogeneous elements.
    pub fn bracket(&self, x: &GradedElement, y: &GradedElement) -> Result<GradedElement> {
        let degree = x.degree + y.degree;
        let table = self.bracket_table(x.degree, y.degree)?;
        let (n1, n2) = (self.dim_unchecked(x.degree), self.dim_unchecked(y.degree));
        if x.coords.len() != n1 || y.coords.len() != n2 {
            return Err(Error::DimensionMismatch(format!(
                "element lengths ({}, {}) do not match component dimensions ({n1}, {n2})",
                x.coords.len(),
                y.coords.len()
            )));
        }
        let mut out = zero_vector(self.dim_unchecked(degree));
        for (i, a) in x.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.coords.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                axpy(&mut out, &(a * b), &table[i * n2 + j]);
            }
        }
        Ok(GradedElement::new(degree, out))
    }

    /// Basis of `{z ∈ V₀ : [z, V₁] = 0 and [z, V₋₁] = 0}`.
    pub fn degree0_center(&self) -> Vec<QVector> {
        let local = self.local();
        let n0 = local.dim_zero();
        let mut rows: Vec<QVector> = Vec::new();
        for (dim, pick) in [(local.dim_pos(), true), (local.dim_neg(), false)] {
            for j in 0..dim {
                for i in 0..dim {
                    rows.push(
                        (0..n0)
                            .map(|a| {
                                let m = if pick { local.pos_action(a) } else { local.neg_action(a) };
                                m[(i, j)].clone()
                            })
                            .collect(),
                    );
                }
            }
        }
        if rows.is_empty() {
            return (0..n0).map(|a| unit_vector(n0, a)).collect();
        }
        QMatrix::from_rows(&rows).expect("uniform rows").nullspace()
    }

    /// Dimension of the span of all `[V_a, V_b]` with `a + b = k`, for every
    /// `|k| ≤ cutoff`.
    pub fn derived_dims(&self) -> Result<BTreeMap<i64, usize>> {
        let n = self.cutoff as i64;
        let mut dims = BTreeMap::new();
        for k in -n..=n {
            let mut images: Vec<QVector> = Vec::new();
            for a in -n..=n {
                let b = k - a;
                if b.abs() > n || a > b {
                    continue;
                }
                images.extend(
                    self.bracket_table(a, b)?
                        .iter()
                        .filter(|v| !is_zero_vector(v))
                        .cloned(),
                );
            }
            dims.insert(k, span_rank(&images));
        }
        Ok(dims)
    }

    /// Transitivity on every constructed degree `|k| ≥ 2`: no nonzero
    /// element is annihilated by all generators of the opposite sign.
    pub fn check_transitive(&self) -> bool {
        [&self.pos, &self.neg].iter().all(|tower| {
            let n_opp = tower.n_opp();
            tower.levels.iter().skip(1).all(|level| {
                let below = level.lower.rows();
                let mut stacked = QMatrix::zeros(n_opp * below, level.dim);
                for p in 0..level.dim {
                    for g in 0..n_opp {
                        for w in 0..below {
                            stacked[(g * below + w, p)] = level.lower[(w, p * n_opp + g)].clone();
                        }
                    }
                }
                stacked.rank() == level.dim
            })
        })
    }

    /// Recomputes `T_k` for `1 ≤ |k| < cutoff`; the sign of `k` picks the
    /// side. Rows are indexed `(f, w)` and columns `(u, e)`.
    pub fn transfer_matrix(&self, k: i64) -> Result<QMatrix> {
        self.tower_level_below_cutoff(k)?;
        Ok(self.tower(k).transfer(k.unsigned_abs() as usize))
    }

    /// `ad(x_a)` on `V_k ⊗ G_{±1}` in the column order of [`Self::transfer_matrix`].
    pub fn tensor_action(&self, k: i64, a: usize) -> Result<QMatrix> {
        self.tower_level_below_cutoff(k)?;
        Ok(self.tower(k).tensor_action(k.unsigned_abs() as usize, a))
    }

    fn tower_level_below_cutoff(&self, k: i64) -> Result<()> {
        let out = Error::OutOfRange {
            degree: k,
            cutoff: self.cutoff,
        };
        if k == 0 || k.unsigned_abs() as usize >= self.cutoff {
            return Err(out);
        }
        self.tower(k).level(k.unsigned_abs() as usize).map(|_| ()).ok_or(out)
    }

    /// Deterministic dump of every stored structure constant.
    pub fn structure_json(&self) -> Value {
        fn matrix(m: &QMatrix) -> Value {
            json!(m.to_string_rows())
        }
        fn tower(t: &Tower) -> Value {
            Value::Array(
                t.levels
                    .iter()
                    .map(|l| {
                        json!({
                            "dim": l.dim,
                            "section": l.section,
                            "lower": matrix(&l.lower),
                            "raise": l.raise.as_ref().map(matrix),
                            "action": l.action.iter().map(matrix).collect::<Vec<_>>(),
                        })
                    })
                    .collect(),
            )
        }
        let zero: Vec<Vec<Vec<String>>> = {
            let l = self.local();
            (0..l.dim_zero())
                .map(|a| {
                    (0..l.dim_zero())
                        .map(|b| l.zero_bracket(a, b).iter().map(format_rational).collect())
                        .collect()
                })
                .collect()
        };
        json!({
            "cutoff": self.cutoff,
            "degree_zero": zero,
            "positive": tower(&self.pos),
            "negative": tower(&self.neg),
        })
    }
}
