//! Slow reference procedures used to cross-check the main algorithms.

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::lp::{Constraint, LinearSystem, Relation};
use crate::rational::{self, Point, Rational};

/// Solves `rows · x = rhs` by elimination, setting free variables to 0.
/// Returns `None` when the rows are dependent or the system is inconsistent.
fn solve_independent(rows: &[&Constraint], n: usize) -> Option<Point> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|c| {
            let mut r = c.coeffs.clone();
            r.push(c.rhs.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = rational::one() / &m[r][col];
        m[r].iter_mut().for_each(|x| *x *= &inv);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x -= &f * y);
            }
        }
        pivots.push(col);
        r += 1;
    }
    if r < m.len() {
        return None;
    }
    let mut x = vec![rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = m[i][n].clone();
    }
    Some(x)
}

fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let pivot = m[r].clone();
        for row in m.iter_mut().skip(r + 1) {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                row.iter_mut().zip(&pivot).for_each(|(x, y)| *x -= &f * y);
            }
        }
        r += 1;
    }
    r
}

/// Feasibility by enumerating minimal faces: a nonempty polyhedron contains
/// the affine space cut out by some `rank(A)` independent tight constraints,
/// so it suffices to test one solution of each such choice.
pub fn feasible_by_enumeration(sys: &LinearSystem) -> bool {
    let n = sys.num_vars;
    let all = &sys.rows;
    let full_rank = rank(&all.iter().map(|c| c.coeffs.clone()).collect::<Vec<_>>());
    let holds = |x: &Point| all.iter().all(|c| c.holds_at(x));
    let equalities: Vec<&Constraint> = all.iter().filter(|c| c.rel == Relation::Eq).collect();
    let inequalities: Vec<&Constraint> = all.iter().filter(|c| c.rel != Relation::Eq).collect();
    let eq_rank = rank(&equalities.iter().map(|c| c.coeffs.clone()).collect::<Vec<_>>());
    // Equalities are tight everywhere; reduce them to an independent subset first.
    let mut base: Vec<&Constraint> = Vec::new();
    for c in &equalities {
        let mut trial: Vec<Vec<Rational>> = base.iter().map(|b| b.coeffs.clone()).collect();
        trial.push(c.coeffs.clone());
        if rank(&trial) == base.len() + 1 {
            base.push(c);
        }
    }
    debug_assert_eq!(base.len(), eq_rank);
    let extra = full_rank - eq_rank;
    inequalities.iter().combinations(extra).any(|choice| {
        let rows: Vec<&Constraint> = base.iter().copied().chain(choice.into_iter().copied()).collect();
        solve_independent(&rows, n).is_some_and(|x| holds(&x))
    })
}

/// Planar halfplane depth of `q` by sweeping the critical directions.
///
/// The count of points in the closed halfplane `{x : u·(x − q) ≥ 0}` is
/// constant on the open arcs between directions orthogonal to some
/// `p − q`, and each arc is reached by rotating a critical direction
/// slightly either way.
pub fn planar_depth(q: &[Rational], config: &[Point]) -> usize {
    let w: Vec<Point> = config.iter().map(|p| vec![&p[0] - &q[0], &p[1] - &q[1]]).collect();
    let at_q = w.iter().filter(|v| v.iter().all(Zero::is_zero)).count();
    let rest: Vec<&Point> = w.iter().filter(|v| v.iter().any(|x| !x.is_zero())).collect();
    if rest.is_empty() {
        return at_q;
    }
    let mut best = usize::MAX;
    for v in &rest {
        for sign in [1i64, -1] {
            let s = rational::int(sign);
            // u ⟂ v, and t is u rotated by a quarter turn.
            let u = vec![-&v[1] * &s, &v[0] * &s];
            let t = vec![-u[1].clone(), u[0].clone()];
            for side in [1i64, -1] {
                let side = rational::int(side);
                let count = rest
                    .iter()
                    .filter(|x| {
                        let a = rational::dot(&u, x);
                        if a.is_zero() {
                            (rational::dot(&t, x) * &side).is_positive()
                        } else {
                            a.is_positive()
                        }
                    })
                    .count();
                best = best.min(count);
            }
        }
    }
    at_q + best
}
