//! Exact rational feasibility, hull membership, separation and halfspace depth.
//!
//! [`lp_feasible`] runs a phase-one simplex over `BigRational` with Bland's
//! rule. Every answer is a certificate: a point that satisfies all rows, or
//! Farkas multipliers that combine the rows into `0 ≤ c` with `c < 0`.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Point, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    #[serde(with = "rational::serde_vec")]
    pub coeffs: Vec<Rational>,
    pub rel: Relation,
    #[serde(with = "rational::serde_rational")]
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Self {
        Self { coeffs, rel, rhs }
    }

    pub fn holds_at(&self, x: &[Rational]) -> bool {
        let lhs = rational::dot(&self.coeffs, x);
        match self.rel {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Rows over free (sign-unrestricted) variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub rows: Vec<Constraint>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("row {row} has {found} coefficients, system has {expected} variables")]
    DimensionMismatch { row: usize, expected: usize, found: usize },
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("points have inconsistent dimensions")]
    InconsistentDimension,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        Self { num_vars, rows: Vec::new() }
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) {
        self.rows.push(Constraint::new(coeffs, rel, rhs));
    }

    /// Adds `x_var ≥ 0`.
    pub fn push_nonneg(&mut self, var: usize) {
        let mut c = vec![Rational::zero(); self.num_vars];
        c[var] = rational::one();
        self.push(c, Relation::Ge, Rational::zero());
    }

    pub fn validate(&self) -> Result<(), LpError> {
        for (i, r) in self.rows.iter().enumerate() {
            if r.coeffs.len() != self.num_vars {
                return Err(LpError::DimensionMismatch {
                    row: i,
                    expected: self.num_vars,
                    found: r.coeffs.len(),
                });
            }
        }
        Ok(())
    }
}

/// Exact feasibility witness or Farkas infeasibility certificate.
///
/// Multipliers refer to each row rewritten in `≤` form (`≥` rows negated);
/// they are nonnegative on inequality rows and free on equality rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RationalCertificate {
    Feasible {
        #[serde(with = "rational::serde_vec")]
        point: Vec<Rational>,
    },
    Infeasible {
        #[serde(with = "rational::serde_vec")]
        multipliers: Vec<Rational>,
    },
}

impl RationalCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, RationalCertificate::Feasible { .. })
    }

    pub fn point(&self) -> Option<&[Rational]> {
        match self {
            RationalCertificate::Feasible { point } => Some(point),
            RationalCertificate::Infeasible { .. } => None,
        }
    }

    /// Re-checks the certificate against `sys` by exact substitution.
    pub fn verify(&self, sys: &LinearSystem) -> bool {
        match self {
            RationalCertificate::Feasible { point } => {
                point.len() == sys.num_vars && sys.rows.iter().all(|r| r.holds_at(point))
            }
            RationalCertificate::Infeasible { multipliers } => {
                if multipliers.len() != sys.rows.len() {
                    return false;
                }
                let mut combo = vec![Rational::zero(); sys.num_vars];
                let mut rhs = Rational::zero();
                for (y, row) in multipliers.iter().zip(&sys.rows) {
                    let sign = match row.rel {
                        Relation::Le => rational::one(),
                        Relation::Ge => -rational::one(),
                        Relation::Eq => rational::one(),
                    };
                    if row.rel != Relation::Eq && y.is_negative() {
                        return false;
                    }
                    let w = y * &sign;
                    for (c, a) in combo.iter_mut().zip(&row.coeffs) {
                        *c += &w * a;
                    }
                    rhs += &w * &row.rhs;
                }
                combo.iter().all(Zero::is_zero) && rhs.is_negative()
            }
        }
    }
}

/// Decides feasibility of `sys` exactly.
pub fn lp_feasible(sys: &LinearSystem) -> Result<RationalCertificate, LpError> {
    sys.validate()?;
    Ok(PhaseOne::build(sys).run())
}

/// Dense phase-one tableau.
///
/// Columns: `x⁺` (n), `x⁻` (n), one slack per inequality row, one artificial
/// per row. Rows are flipped so every right-hand side is nonnegative.
struct PhaseOne {
    n: usize,
    m: usize,
    width: usize,
    art_start: usize,
    // row flips relative to the `≤`-normalized row
    flips: Vec<bool>,
    tab: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl PhaseOne {
    fn build(sys: &LinearSystem) -> Self {
        let n = sys.num_vars;
        let m = sys.rows.len();
        let slack_rows: Vec<usize> =
            (0..m).filter(|&i| sys.rows[i].rel != Relation::Eq).collect();
        let slack_start = 2 * n;
        let art_start = slack_start + slack_rows.len();
        let width = art_start + m;

        let mut tab = vec![vec![Rational::zero(); width]; m];
        let mut rhs = vec![Rational::zero(); m];
        let mut flips = vec![false; m];
        for (i, row) in sys.rows.iter().enumerate() {
            let sign = if row.rel == Relation::Ge { -rational::one() } else { rational::one() };
            for (j, a) in row.coeffs.iter().enumerate() {
                tab[i][j] = a * &sign;
                tab[i][n + j] = -(a * &sign);
            }
            rhs[i] = &row.rhs * &sign;
        }
        for (k, &i) in slack_rows.iter().enumerate() {
            tab[i][slack_start + k] = rational::one();
        }
        for i in 0..m {
            if rhs[i].is_negative() {
                flips[i] = true;
                for v in tab[i].iter_mut() {
                    *v = -v.clone();
                }
                rhs[i] = -rhs[i].clone();
            }
            tab[i][art_start + i] = rational::one();
        }

        // Reduced costs of `min Σ art` with the artificial basis.
        let mut cost = vec![Rational::zero(); width];
        for j in 0..art_start {
            let s = rational::sum(tab.iter().map(|r| &r[j]));
            cost[j] = -s;
        }
        let basis = (0..m).map(|i| art_start + i).collect();
        Self { n, m, width, art_start, flips, tab, rhs, cost, basis }
    }

    fn objective(&self) -> Rational {
        rational::sum(
            self.basis
                .iter()
                .zip(&self.rhs)
                .filter(|(&b, _)| b >= self.art_start)
                .map(|(_, r)| r),
        )
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.tab[row][col].clone();
        if p != rational::one() {
            for v in self.tab[row].iter_mut() {
                *v /= &p;
            }
            self.rhs[row] /= &p;
        }
        let pivot_row = self.tab[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.m {
            if i == row || self.tab[i][col].is_zero() {
                continue;
            }
            let f = self.tab[i][col].clone();
            for (v, pv) in self.tab[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
            self.rhs[i] -= &f * &pivot_rhs;
        }
        if !self.cost[col].is_zero() {
            let f = self.cost[col].clone();
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    fn run(mut self) -> RationalCertificate {
        // Bland: lowest-index entering column, lowest-index leaving variable on ties.
        while let Some(col) = (0..self.width).find(|&j| self.cost[j].is_negative()) {
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.m {
                if !self.tab[i][col].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.tab[i][col];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // Phase one is bounded below by zero, so a leaving row always exists.
            let (row, _) = best.expect("phase-one objective is bounded");
            self.pivot(row, col);
        }

        if self.objective().is_zero() {
            let mut values = vec![Rational::zero(); self.width];
            for (i, &b) in self.basis.iter().enumerate() {
                values[b] = self.rhs[i].clone();
            }
            let point = (0..self.n).map(|j| &values[j] - &values[self.n + j]).collect();
            RationalCertificate::Feasible { point }
        } else {
            // Dual of phase one: y_i = 1 - reduced cost of artificial i.
            let multipliers = (0..self.m)
                .map(|i| {
                    let y = rational::one() - &self.cost[self.art_start + i];
                    let u = if self.flips[i] { -y } else { y };
                    -u
                })
                .collect();
            RationalCertificate::Infeasible { multipliers }
        }
    }
}

/// Affine functional `x ↦ normal·x + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineFunctional {
    #[serde(with = "rational::serde_vec")]
    pub normal: Vec<Rational>,
    #[serde(with = "rational::serde_rational")]
    pub offset: Rational,
}

impl AffineFunctional {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        rational::dot(&self.normal, x) + &self.offset
    }

    /// Positive rescaling so that the value at `x` is `target` (same sign required).
    pub fn normalized_at(&self, x: &[Rational], target: &Rational) -> Option<Self> {
        let v = self.eval(x);
        if v.is_zero() || v.is_negative() != target.is_negative() {
            return None;
        }
        let f = target / v;
        Some(Self {
            normal: self.normal.iter().map(|a| a * &f).collect(),
            offset: &self.offset * &f,
        })
    }
}

/// Outcome of a hull membership query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HullCertificate {
    /// Convex weights reproducing the query point.
    Inside {
        #[serde(with = "rational::serde_vec")]
        weights: Vec<Rational>,
    },
    /// Functional negative at the query point and nonnegative on every generator.
    Outside { functional: AffineFunctional },
}

impl HullCertificate {
    pub fn is_inside(&self) -> bool {
        matches!(self, HullCertificate::Inside { .. })
    }

    pub fn verify(&self, q: &[Rational], pts: &[Point]) -> bool {
        match self {
            HullCertificate::Inside { weights } => {
                weights.len() == pts.len()
                    && weights.iter().all(|w| !w.is_negative())
                    && rational::sum(weights) == rational::one()
                    && combine(weights, pts).as_slice() == q
            }
            HullCertificate::Outside { functional } => {
                functional.eval(q).is_negative()
                    && pts.iter().all(|p| !functional.eval(p).is_negative())
            }
        }
    }
}

fn check_points(pts: &[Point]) -> Result<usize, LpError> {
    let first = pts.first().ok_or(LpError::EmptyPointSet)?;
    let d = first.len();
    if pts.iter().any(|p| p.len() != d) {
        return Err(LpError::InconsistentDimension);
    }
    Ok(d)
}

/// `Σ w_j p_j`.
pub fn combine(weights: &[Rational], pts: &[Point]) -> Point {
    let d = pts.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); d];
    for (w, p) in weights.iter().zip(pts) {
        if w.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(p) {
            *o += w * x;
        }
    }
    out
}

/// Convex-combination system `λ ≥ 0, Σλ = 1, Σ λ_j p_j = q` over variables λ.
fn hull_system(q: &[Rational], pts: &[Point]) -> LinearSystem {
    let k = pts.len();
    let mut sys = LinearSystem::new(k);
    for j in 0..k {
        sys.push_nonneg(j);
    }
    sys.push(vec![rational::one(); k], Relation::Eq, rational::one());
    for (c, qc) in q.iter().enumerate() {
        sys.push(pts.iter().map(|p| p[c].clone()).collect(), Relation::Eq, qc.clone());
    }
    sys
}

/// Exact membership of `q` in the convex hull of `pts`.
pub fn in_hull(q: &[Rational], pts: &[Point]) -> Result<HullCertificate, LpError> {
    let d = check_points(pts)?;
    if q.len() != d {
        return Err(LpError::InconsistentDimension);
    }
    let sys = hull_system(q, pts);
    match lp_feasible(&sys)? {
        RationalCertificate::Feasible { point } => Ok(HullCertificate::Inside { weights: point }),
        RationalCertificate::Infeasible { multipliers } => {
            // Rows: k nonnegativity rows (as -λ ≤ 0), the sum row, then d coordinate rows.
            // Σ_c w_c p_c + w_0 equals the nonnegativity multiplier at each generator.
            let k = pts.len();
            let offset = multipliers[k].clone();
            let normal = multipliers[k + 1..].to_vec();
            Ok(HullCertificate::Outside { functional: AffineFunctional { normal, offset } })
        }
    }
}

/// Why two hulls could not be separated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonPoint {
    #[serde(with = "rational::serde_vec")]
    pub point: Point,
    #[serde(with = "rational::serde_vec")]
    pub k_weights: Vec<Rational>,
    #[serde(with = "rational::serde_vec")]
    pub q_weights: Vec<Rational>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparationError {
    #[error("hulls intersect")]
    HullsIntersect(Box<CommonPoint>),
    #[error(transparent)]
    Lp(#[from] LpError),
}

/// Affine `z` with `z(basepoint) = -1`, `z < 0` on `hull(k_pts)` and `z > 0`
/// on `hull(q_pts)`.
///
/// Strictness is obtained by asking for a unit margin on both sides; any
/// strictly separating functional scales to one.
pub fn separate(
    k_pts: &[Point],
    q_pts: &[Point],
    basepoint: &[Rational],
) -> Result<AffineFunctional, SeparationError> {
    let d = check_points(k_pts)?;
    if check_points(q_pts)? != d || basepoint.len() != d {
        return Err(LpError::InconsistentDimension.into());
    }
    // Variables: normal (d), offset.
    let mut sys = LinearSystem::new(d + 1);
    for p in k_pts {
        let mut c = p.clone();
        c.push(rational::one());
        sys.push(c, Relation::Le, -rational::one());
    }
    for p in q_pts {
        let mut c = p.clone();
        c.push(rational::one());
        sys.push(c, Relation::Ge, rational::one());
    }
    match lp_feasible(&sys)? {
        RationalCertificate::Feasible { point } => {
            let f = AffineFunctional { normal: point[..d].to_vec(), offset: point[d].clone() };
            // basepoint ∈ hull(K) so f(basepoint) ≤ -1.
            f.normalized_at(basepoint, &-rational::one()).ok_or_else(|| {
                SeparationError::Lp(LpError::Degenerate("basepoint outside hull of K".into()))
            })
        }
        RationalCertificate::Infeasible { multipliers } => {
            let (yk, yq) = multipliers.split_at(k_pts.len());
            let s = rational::sum(yk);
            let k_weights: Vec<Rational> = yk.iter().map(|y| y / &s).collect();
            let q_weights: Vec<Rational> = yq.iter().map(|y| y / &s).collect();
            let point = combine(&k_weights, k_pts);
            Err(SeparationError::HullsIntersect(Box::new(CommonPoint { point, k_weights, q_weights })))
        }
    }
}

/// Checks the sign conditions of a separating functional on all generators.
pub fn verify_separation(
    z: &AffineFunctional,
    k_pts: &[Point],
    q_pts: &[Point],
    basepoint: &[Rational],
) -> bool {
    z.eval(basepoint) == -rational::one()
        && k_pts.iter().all(|p| z.eval(p).is_negative())
        && q_pts.iter().all(|p| z.eval(p).is_positive())
}

/// A point of `hull(a) ∩ hull(b)` with its convex weights on both sides, if any.
pub fn hull_intersection(a: &[Point], b: &[Point]) -> Result<Option<CommonPoint>, LpError> {
    let d = check_points(a)?;
    if check_points(b)? != d {
        return Err(LpError::InconsistentDimension);
    }
    let (ka, kb) = (a.len(), b.len());
    let mut sys = LinearSystem::new(ka + kb);
    for j in 0..ka + kb {
        sys.push_nonneg(j);
    }
    let ones = |range: std::ops::Range<usize>| -> Vec<Rational> {
        (0..ka + kb).map(|j| if range.contains(&j) { rational::one() } else { rational::zero() }).collect()
    };
    sys.push(ones(0..ka), Relation::Eq, rational::one());
    sys.push(ones(ka..ka + kb), Relation::Eq, rational::one());
    for c in 0..d {
        let row = a.iter().map(|p| p[c].clone()).chain(b.iter().map(|p| -&p[c])).collect();
        sys.push(row, Relation::Eq, rational::zero());
    }
    Ok(match lp_feasible(&sys)? {
        RationalCertificate::Feasible { point } => {
            let (k_weights, q_weights) = (point[..ka].to_vec(), point[ka..].to_vec());
            Some(CommonPoint { point: combine(&k_weights, a), k_weights, q_weights })
        }
        RationalCertificate::Infeasible { .. } => None,
    })
}

impl CommonPoint {
    /// Checks that both weight vectors are convex and produce `point`.
    pub fn verify(&self, a: &[Point], b: &[Point]) -> bool {
        let convex = |w: &[Rational], n: usize| {
            w.len() == n && w.iter().all(|x| !x.is_negative()) && rational::sum(w) == rational::one()
        };
        convex(&self.k_weights, a.len())
            && convex(&self.q_weights, b.len())
            && combine(&self.k_weights, a) == self.point
            && combine(&self.q_weights, b) == self.point
    }
}

/// Minimum number of `config` points in a closed halfspace containing `q`.
///
/// The minimum is attained on an open cell of the central arrangement
/// `{u : u·(p - q) = 0}`. Every cell has a facet on some hyperplane
/// `(p_j - q)^⊥`, so the search recurses into each hyperplane with the
/// remaining vectors projected onto it.
pub fn halfspace_depth(q: &[Rational], config: &[Point]) -> Result<usize, LpError> {
    let d = check_points(config)?;
    if q.len() != d {
        return Err(LpError::InconsistentDimension);
    }
    if d == 0 || d > 3 {
        return Err(LpError::Degenerate(format!("dimension {d} outside 1..=3")));
    }
    let mut at_q = 0;
    let mut dirs = Vec::new();
    for p in config {
        let w: Point = p.iter().zip(q).map(|(a, b)| a - b).collect();
        if w.iter().all(Zero::is_zero) {
            at_q += 1;
        } else {
            dirs.push(w);
        }
    }
    Ok(at_q + min_open_cell(&dirs))
}

fn min_open_cell(dirs: &[Point]) -> usize {
    let nonzero: Vec<&Point> = dirs.iter().filter(|w| w.iter().any(|x| !x.is_zero())).collect();
    let Some(first) = nonzero.first() else { return 0 };
    if nonzero.iter().all(|w| parallel(w, first)) {
        let pos = nonzero.iter().filter(|w| rational::dot(w, first).is_positive()).count();
        return pos.min(nonzero.len() - pos);
    }
    let mut best = usize::MAX;
    for (j, wj) in nonzero.iter().enumerate() {
        // Skip hyperplanes already handled through an earlier parallel vector.
        if nonzero[..j].iter().any(|w| parallel(w, wj)) {
            continue;
        }
        let norm = rational::dot(wj, wj);
        let mut on_line_pos = 0;
        let mut on_line_neg = 0;
        let mut projected = Vec::new();
        for w in &nonzero {
            if parallel(w, wj) {
                if rational::dot(w, wj).is_positive() {
                    on_line_pos += 1;
                } else {
                    on_line_neg += 1;
                }
            } else {
                let f = rational::dot(w, wj) / &norm;
                projected.push(w.iter().zip(wj.iter()).map(|(a, b)| a - &f * b).collect());
            }
        }
        let rest = min_open_cell(&projected);
        best = best.min(rest + on_line_pos.min(on_line_neg));
    }
    best
}

fn parallel(a: &[Rational], b: &[Rational]) -> bool {
    // |a·b|² = |a|²|b|² iff a and b are parallel.
    let ab = rational::dot(a, b);
    &ab * &ab == rational::dot(a, a) * rational::dot(b, b)
}
