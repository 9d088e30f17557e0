//! Centerpoints, central points of PL maps, colorful Helly and Bárány's dual theorem.

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{probe_table, FactorParams};
use crate::grid::GridBase;
use crate::lp::{
    halfspace_depth, lp_feasible, separate, AffineFunctional, CommonPoint, Constraint, LinearSystem, LpError,
    RationalCertificate, Relation, SeparationError,
};
use crate::rational::{self, nullspace, rref, Point, Rational};
use crate::sections::DisjointFamily;

/// A hypothesis of a convexity theorem that fails on the given input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The ambient dimension is not below the number of colors (or `r·dim F ≥ m`).
    DimensionTooLarge { dim: usize, colors: usize },
    EmptyColorfulIntersection { tuple: Vec<usize> },
    ColorfulHullMeetsK { tuple: Vec<usize>, common: CommonPoint },
    /// No nonzero vector is a nonnegative combination of every part of this color.
    NoCommonDirection { color: usize },
    /// The origin lies in the hull of a colorful choice from one part.
    ColorfulHullContainsZero {
        part: usize,
        tuple: Vec<usize>,
        #[serde(with = "rational::serde_vec")]
        weights: Vec<Rational>,
    },
    /// The target dimension of a map is not below the multiplicity bound.
    TargetTooLarge { dim: usize, bound: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConvexError {
    #[error("hypothesis violated: {0:?}")]
    Violation(Box<Violation>),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("no conclusion found although the hypotheses hold")]
    NoConclusion,
}

impl From<Violation> for ConvexError {
    fn from(v: Violation) -> Self {
        ConvexError::Violation(Box::new(v))
    }
}

fn dimension_of(points: &[Point]) -> Result<usize, ConvexError> {
    let d = points.first().ok_or(LpError::EmptyPointSet)?.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(LpError::InconsistentDimension.into());
    }
    Ok(d)
}

/// A point of depth at least `⌈N/(d+1)⌉`, with its exact depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Centerpoint {
    #[serde(with = "rational::serde_vec")]
    pub point: Point,
    pub depth: usize,
    pub target: usize,
}

/// Exact centerpoint of at most a few dozen points in dimension 1–3.
///
/// The deep region is cut out by the closed halfspaces bounded by
/// hyperplanes through `d` of the points that contain at least
/// `N − target + 1` of them. Degenerate configurations are reduced to their
/// affine hull, and any point the halfspace system misses is recovered from
/// the intersection of the hulls of all `(N − target + 1)`-subsets.
pub fn centerpoint(config: &[Point]) -> Result<Centerpoint, ConvexError> {
    let d = dimension_of(config)?;
    if d == 0 || d > 3 {
        return Err(ConvexError::Input(format!("dimension {d} outside 1..=3")));
    }
    let n = config.len();
    let target = n.div_ceil(d + 1);
    let point = deep_point(config, target)?;
    let depth = halfspace_depth(&point, config)?;
    if depth < target {
        return Err(ConvexError::NoConclusion);
    }
    Ok(Centerpoint { point, depth, target })
}

fn deep_point(config: &[Point], target: usize) -> Result<Point, ConvexError> {
    let d = config[0].len();
    let n = config.len();
    let origin = &config[0];
    let diffs: Vec<Point> = config.iter().map(|p| p.iter().zip(origin).map(|(a, b)| a - b).collect()).collect();
    let mut span = diffs.clone();
    let rank = rref(&mut span).len();
    if rank == 0 {
        return Ok(origin.clone());
    }
    if rank < d {
        // Coordinates in a basis of the affine hull; depth is unchanged by the restriction.
        let basis: Vec<Point> = span[..rank].to_vec();
        let pivots: Vec<usize> = (0..rank).map(|i| basis[i].iter().position(|x| !x.is_zero()).unwrap()).collect();
        let local: Vec<Point> = diffs.iter().map(|v| pivots.iter().map(|&p| v[p].clone()).collect()).collect();
        let inner = deep_point(&local, target)?;
        let mut out = origin.clone();
        for (coef, b) in inner.iter().zip(&basis) {
            for (o, x) in out.iter_mut().zip(b) {
                *o += coef * x;
            }
        }
        return Ok(out);
    }
    let need = n - target + 1;
    let mut sys = LinearSystem::new(d);
    let mut seen = std::collections::HashSet::new();
    for subset in (0..n).combinations(d) {
        let rows: Vec<Point> = subset[1..]
            .iter()
            .map(|&i| config[i].iter().zip(&config[subset[0]]).map(|(a, b)| a - b).collect())
            .collect();
        let normals = if rows.is_empty() { vec![vec![rational::one()]] } else { nullspace(&rows, d) };
        if normals.len() != 1 {
            continue;
        }
        let a = &normals[0];
        let b = rational::dot(a, &config[subset[0]]);
        for sign in [1i64, -1] {
            let s = rational::int(sign);
            let inside = config.iter().filter(|p| (rational::dot(a, p) - &b) * &s >= rational::zero()).count();
            if inside >= need {
                let coeffs: Vec<Rational> = a.iter().map(|x| x * &s).collect();
                let rhs = &b * &s;
                if seen.insert((coeffs.clone(), rhs.clone())) {
                    sys.push(coeffs, Relation::Ge, rhs);
                }
            }
        }
    }
    if let RationalCertificate::Feasible { point } = lp_feasible(&sys)? {
        if halfspace_depth(&point, config)? >= target {
            return Ok(point);
        }
    }
    subset_hull_point(config, need)
}

/// A point in the hull of every `size`-subset of `config`.
fn subset_hull_point(config: &[Point], size: usize) -> Result<Point, ConvexError> {
    let d = config[0].len();
    let subsets: Vec<Vec<usize>> = (0..config.len()).combinations(size).collect();
    let vars = d + subsets.len() * size;
    let mut sys = LinearSystem::new(vars);
    for (k, s) in subsets.iter().enumerate() {
        let off = d + k * size;
        let mut sum = vec![rational::zero(); vars];
        for j in 0..size {
            sys.push_nonneg(off + j);
            sum[off + j] = rational::one();
        }
        sys.push(sum, Relation::Eq, rational::one());
        for c in 0..d {
            let mut row = vec![rational::zero(); vars];
            row[c] = -rational::one();
            for (j, &i) in s.iter().enumerate() {
                row[off + j] = config[i][c].clone();
            }
            sys.push(row, Relation::Eq, rational::zero());
        }
    }
    match lp_feasible(&sys)? {
        RationalCertificate::Feasible { point } => Ok(point[..d].to_vec()),
        RationalCertificate::Infeasible { .. } => Err(ConvexError::NoConclusion),
    }
}

/// Values at the subdivision points of a grid base; extended over each cell.
#[derive(Clone, Debug)]
pub struct PlMap {
    base: GridBase,
    values: Vec<Point>,
}

impl PlMap {
    pub fn new(base: GridBase, values: Vec<Point>) -> Result<Self, ConvexError> {
        if values.len() != base.num_points() {
            return Err(ConvexError::Input(format!("{} values for {} points", values.len(), base.num_points())));
        }
        dimension_of(&values)?;
        Ok(Self { base, values })
    }

    /// Samples `f` at every subdivision point.
    pub fn from_fn<F: Fn(&[Point]) -> Point>(base: GridBase, f: F) -> Result<Self, ConvexError> {
        let values = (0..base.num_points()).map(|p| f(&base.point(p))).collect();
        Self::new(base, values)
    }

    pub fn base(&self) -> &GridBase {
        &self.base
    }

    pub fn target_dim(&self) -> usize {
        self.values[0].len()
    }
}

/// Point near every probed image, found among the values at subdivision points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralPointReport {
    pub factor: Option<usize>,
    #[serde(with = "rational::serde_vec")]
    pub point: Point,
    /// Largest sup-norm diameter of the image of a cell.
    #[serde(with = "rational::serde_rational")]
    pub epsilon: Rational,
    /// Distance bound checked against every probe: twice `epsilon`.
    #[serde(with = "rational::serde_rational")]
    pub tolerance: Rational,
    pub resolution: usize,
    /// Sup-norm distance from the point to each probed image, in probe order.
    #[serde(with = "rational::serde_vec")]
    pub distances: Vec<Rational>,
}

/// For some factor `l`, a point within `2ε` of `g(… × Δ_T × …)` for every
/// probe `T` of that factor, where `ε` bounds the image diameter of a cell.
pub fn central_point_check(
    g: &PlMap,
    params: &[FactorParams],
    probes: &[Vec<DisjointFamily>],
) -> Result<CentralPointReport, ConvexError> {
    let base = &g.base;
    let bound: usize = params.iter().map(|p| p.n).sum();
    if g.target_dim() >= bound {
        return Err(Violation::TargetTooLarge { dim: g.target_dim(), bound }.into());
    }
    if params.len() != base.factors().len() || probes.len() != params.len() {
        return Err(ConvexError::Input("parameters and probes must match the factors".into()));
    }
    for (f, p) in base.factors().iter().zip(params) {
        if f.simplex_size() != p.d * p.n + 1 {
            return Err(ConvexError::Input("factor sizes must equal d·n + 1".into()));
        }
    }
    let corners: Vec<Vec<usize>> = (0..base.num_cells()).map(|c| base.cell_corner_ids(c)).collect();
    let epsilon = corners
        .iter()
        .flat_map(|cs| cs.iter().tuple_combinations().map(|(&a, &b)| rational::linf_distance(&g.values[a], &g.values[b])))
        .max()
        .unwrap_or_else(rational::zero);
    let tolerance = &epsilon * rational::int(2);
    let candidates: Vec<usize> = (0..g.values.len()).unique_by(|&p| g.values[p].clone()).collect();

    for (l, factor) in base.factors().iter().enumerate() {
        let table = probe_table(factor, &probes[l]);
        let images: Vec<Vec<usize>> = table
            .iter()
            .map(|meets| {
                (0..base.num_cells())
                    .filter(|&c| meets.get(base.decode(c)[l]))
                    .flat_map(|c| corners[c].iter().copied())
                    .sorted()
                    .dedup()
                    .collect()
            })
            .collect();
        for &cand in &candidates {
            let z = &g.values[cand];
            let mut distances = Vec::with_capacity(images.len());
            for img in &images {
                let dist = img.iter().map(|&p| rational::linf_distance(z, &g.values[p])).min();
                match dist {
                    Some(dist) if dist <= tolerance => distances.push(dist),
                    _ => break,
                }
            }
            if distances.len() == images.len() {
                return Ok(CentralPointReport {
                    factor: Some(l),
                    point: z.clone(),
                    epsilon,
                    tolerance,
                    resolution: base.spec().resolution,
                    distances,
                });
            }
        }
    }
    Ok(CentralPointReport {
        factor: None,
        point: Vec::new(),
        epsilon,
        tolerance,
        resolution: base.spec().resolution,
        distances: Vec::new(),
    })
}

/// Convex set given by generators or by inequalities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConvexSet {
    Hull {
        #[serde(with = "rational::serde_points")]
        points: Vec<Point>,
    },
    Halfspaces { rows: Vec<Constraint> },
}

/// A common point of all the given sets, if one exists.
pub fn common_point(sets: &[&ConvexSet], dim: usize) -> Result<Option<Point>, ConvexError> {
    let extra: usize = sets.iter().map(|s| if let ConvexSet::Hull { points } = s { points.len() } else { 0 }).sum();
    let vars = dim + extra;
    let mut sys = LinearSystem::new(vars);
    let mut off = dim;
    for s in sets {
        match s {
            ConvexSet::Hull { points } => {
                if points.is_empty() {
                    return Ok(None);
                }
                if dimension_of(points)? != dim {
                    return Err(LpError::InconsistentDimension.into());
                }
                let mut sum = vec![rational::zero(); vars];
                for j in 0..points.len() {
                    sys.push_nonneg(off + j);
                    sum[off + j] = rational::one();
                }
                sys.push(sum, Relation::Eq, rational::one());
                for c in 0..dim {
                    let mut row = vec![rational::zero(); vars];
                    row[c] = -rational::one();
                    for (j, p) in points.iter().enumerate() {
                        row[off + j] = p[c].clone();
                    }
                    sys.push(row, Relation::Eq, rational::zero());
                }
                off += points.len();
            }
            ConvexSet::Halfspaces { rows } => {
                for r in rows {
                    if r.coeffs.len() != dim {
                        return Err(LpError::InconsistentDimension.into());
                    }
                    let mut coeffs = r.coeffs.clone();
                    coeffs.resize(vars, rational::zero());
                    sys.push(coeffs, r.rel, r.rhs.clone());
                }
            }
        }
    }
    Ok(lp_feasible(&sys)?.point().map(|p| p[..dim].to_vec()))
}

/// Color classes of convex sets in a space of dimension `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HellyInstance {
    pub dim: usize,
    pub classes: Vec<Vec<ConvexSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HellyWitness {
    pub color: usize,
    #[serde(with = "rational::serde_points")]
    pub colorful_points: Vec<Point>,
    #[serde(with = "rational::serde_vec")]
    pub point: Point,
}

fn colorful_tuples(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> {
    sizes.iter().map(|&s| 0..s).multi_cartesian_product()
}

/// If every colorful choice of sets meets and `dim < m`, some color class has a common point.
pub fn colorful_helly(inst: &HellyInstance) -> Result<HellyWitness, ConvexError> {
    let m = inst.classes.len();
    if m == 0 || inst.classes.iter().any(Vec::is_empty) {
        return Err(ConvexError::Input("every color needs at least one set".into()));
    }
    if inst.dim >= m {
        return Err(Violation::DimensionTooLarge { dim: inst.dim, colors: m }.into());
    }
    let sizes: Vec<usize> = inst.classes.iter().map(Vec::len).collect();
    let mut colorful_points = Vec::new();
    for tuple in colorful_tuples(&sizes) {
        let sets: Vec<&ConvexSet> = tuple.iter().enumerate().map(|(l, &v)| &inst.classes[l][v]).collect();
        match common_point(&sets, inst.dim)? {
            Some(z) => colorful_points.push(z),
            None => return Err(Violation::EmptyColorfulIntersection { tuple }.into()),
        }
    }
    for (color, class) in inst.classes.iter().enumerate() {
        let sets: Vec<&ConvexSet> = class.iter().collect();
        if let Some(point) = common_point(&sets, inst.dim)? {
            return Ok(HellyWitness { color, colorful_points, point });
        }
    }
    Err(ConvexError::NoConclusion)
}

/// Checks that the point lies in every set of the witnessed color.
pub fn verify_helly(inst: &HellyInstance, w: &HellyWitness) -> bool {
    let Some(class) = inst.classes.get(w.color) else { return false };
    class.iter().all(|s| match s {
        ConvexSet::Hull { points } => crate::lp::in_hull(&w.point, points).is_ok_and(|c| c.is_inside() && c.verify(&w.point, points)),
        ConvexSet::Halfspaces { rows } => rows.iter().all(|r| r.holds_at(&w.point)),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorfulSeparation {
    pub tuple: Vec<usize>,
    pub functional: AffineFunctional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaranyWitness {
    pub color: usize,
    /// Strictly negative on K, strictly positive on the class, −1 at the basepoint.
    pub functional: AffineFunctional,
    pub colorful: Vec<ColorfulSeparation>,
}

/// If every colorful hull misses `K` and `dim < m`, some class hull misses `K`.
pub fn barany_dual(k: &[Point], classes: &[Vec<Point>]) -> Result<BaranyWitness, ConvexError> {
    let dim = dimension_of(k)?;
    let m = classes.len();
    if m == 0 || classes.iter().any(Vec::is_empty) {
        return Err(ConvexError::Input("every color needs at least one point".into()));
    }
    for class in classes {
        if dimension_of(class)? != dim {
            return Err(LpError::InconsistentDimension.into());
        }
    }
    if dim >= m {
        return Err(Violation::DimensionTooLarge { dim, colors: m }.into());
    }
    let basepoint = &k[0];
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let mut colorful = Vec::new();
    for tuple in colorful_tuples(&sizes) {
        let pts: Vec<Point> = tuple.iter().enumerate().map(|(l, &v)| classes[l][v].clone()).collect();
        match separate(k, &pts, basepoint) {
            Ok(functional) => colorful.push(ColorfulSeparation { tuple, functional }),
            Err(SeparationError::HullsIntersect(common)) => {
                return Err(Violation::ColorfulHullMeetsK { tuple, common: *common }.into())
            }
            Err(SeparationError::Lp(e)) => return Err(e.into()),
        }
    }
    for (color, class) in classes.iter().enumerate() {
        match separate(k, class, basepoint) {
            Ok(functional) => return Ok(BaranyWitness { color, functional, colorful }),
            Err(SeparationError::HullsIntersect(_)) => continue,
            Err(SeparationError::Lp(e)) => return Err(e.into()),
        }
    }
    Err(ConvexError::NoConclusion)
}

/// Sign check of the witnessed functional on all generators.
pub fn verify_barany(k: &[Point], classes: &[Vec<Point>], w: &BaranyWitness) -> bool {
    classes.get(w.color).is_some_and(|class| crate::lp::verify_separation(&w.functional, k, class, &k[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::BaseSpec;
    use crate::rational::{frac, int, point_from_ints};
    use crate::sections::sample_sd;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(xs: &[&[i64]]) -> Vec<Point> {
        xs.iter().map(|x| point_from_ints(x)).collect()
    }

    #[test]
    fn centerpoint_small_cases() {
        let one = pts(&[&[3, 4]]);
        assert_eq!(centerpoint(&one).unwrap().point, one[0]);
        let tri = pts(&[&[0, 0], &[4, 0], &[0, 4]]);
        let c = centerpoint(&tri).unwrap();
        assert!(c.depth >= 1 && c.target == 1);
        let line = pts(&[&[0], &[5], &[1], &[9], &[2]]);
        let c = centerpoint(&line).unwrap();
        assert_eq!(c.target, 3);
        assert_eq!(c.point, point_from_ints(&[2]));
        // Collinear points in the plane go through the affine hull.
        let flat = pts(&[&[0, 0], &[1, 1], &[2, 2], &[3, 3], &[7, 7]]);
        let c = centerpoint(&flat).unwrap();
        assert!(c.depth >= c.target);
    }

    #[test]
    fn centerpoint_random_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..5 {
            let config: Vec<Point> = (0..12).map(|_| point_from_ints(&[rng.gen_range(-20..=20), rng.gen_range(-20..=20)])).collect();
            let c = centerpoint(&config).unwrap();
            assert!(halfspace_depth(&c.point, &config).unwrap() >= 4);
        }
    }

    #[test]
    fn subset_hull_fallback_agrees() {
        let config = pts(&[&[0, 0], &[6, 0], &[0, 6], &[6, 6], &[3, 1]]);
        let q = subset_hull_point(&config, config.len() - 2 + 1).unwrap();
        assert!(halfspace_depth(&q, &config).unwrap() >= 2);
    }

    #[test]
    fn central_point_constant_and_projection() {
        let base = GridBase::simplex(3, 6).unwrap();
        let params = [FactorParams { d: 1, n: 2 }];
        let probes = vec![sample_sd(3, 1, 10, 1).unwrap()];
        let constant = PlMap::from_fn(base.clone(), |_| vec![frac(2, 3)]).unwrap();
        let r = central_point_check(&constant, &params, &probes).unwrap();
        assert_eq!(r.point, vec![frac(2, 3)]);
        assert_eq!(r.epsilon, int(0));
        let proj = PlMap::from_fn(base, |x| vec![x[0][0].clone()]).unwrap();
        let r = central_point_check(&proj, &params, &probes).unwrap();
        assert_eq!(r.factor, Some(0));
        assert!(r.distances.iter().all(|d| *d <= r.tolerance));
        let too_big = PlMap::from_fn(GridBase::simplex(3, 2).unwrap(), |_| vec![int(0), int(0)]).unwrap();
        assert!(matches!(central_point_check(&too_big, &params, &probes), Err(ConvexError::Violation(_))));
    }

    #[test]
    fn central_point_matches_diagonal_crossing() {
        // Affine map from Δ³ sending the vertices to the corners of a square.
        let corners = pts(&[&[0, 0], &[4, 0], &[4, 4], &[0, 4]]);
        let base = GridBase::new(BaseSpec { simplex_sizes: vec![4], resolution: 6 }).unwrap();
        let g = PlMap::from_fn(base, |x| {
            (0..2).map(|c| rational::sum(x[0].iter().zip(&corners).map(|(t, p)| t * &p[c]).collect::<Vec<_>>().iter())).collect()
        })
        .unwrap();
        let params = [FactorParams { d: 1, n: 3 }];
        let probes = vec![sample_sd(4, 1, 5, 2).unwrap()];
        let r = central_point_check(&g, &params, &probes).unwrap();
        let centre = point_from_ints(&[2, 2]);
        assert!(rational::linf_distance(&r.point, &centre) <= &r.epsilon * int(4));
    }

    fn interval(a: i64, b: i64) -> ConvexSet {
        ConvexSet::Hull { points: pts(&[&[a], &[b]]) }
    }

    #[test]
    fn helly_on_the_line() {
        let inst = HellyInstance {
            dim: 1,
            classes: vec![vec![interval(0, 1), interval(2, 3)], vec![interval(0, 3), interval(0, 3)]],
        };
        let w = colorful_helly(&inst).unwrap();
        assert_eq!(w.color, 1);
        assert!(verify_helly(&inst, &w));
        assert_eq!(w.colorful_points.len(), 4);

        let same = HellyInstance { dim: 1, classes: vec![vec![interval(0, 2); 2]; 2] };
        assert!(verify_helly(&same, &colorful_helly(&same).unwrap()));

        let broken = HellyInstance { dim: 1, classes: vec![vec![interval(0, 1)], vec![interval(5, 6)]] };
        match colorful_helly(&broken) {
            Err(ConvexError::Violation(v)) => assert_eq!(*v, Violation::EmptyColorfulIntersection { tuple: vec![0, 0] }),
            other => panic!("{other:?}"),
        }
        let high = HellyInstance { dim: 2, classes: vec![vec![interval(0, 1)]; 2] };
        assert!(matches!(colorful_helly(&high), Err(ConvexError::Violation(_))));
    }

    #[test]
    fn helly_with_halfspaces() {
        let half = |c: i64, rel: Relation, rhs: i64| ConvexSet::Halfspaces { rows: vec![Constraint::new(vec![int(c)], rel, int(rhs))] };
        let inst = HellyInstance {
            dim: 1,
            classes: vec![vec![half(1, Relation::Ge, 0), half(1, Relation::Le, 5)], vec![interval(1, 2), interval(3, 4)]],
        };
        let w = colorful_helly(&inst).unwrap();
        assert_eq!(w.color, 0);
        assert!(verify_helly(&inst, &w));
    }

    #[test]
    fn barany_on_the_line() {
        let k = pts(&[&[0]]);
        let classes = vec![pts(&[&[1], &[2]]), pts(&[&[3], &[4]])];
        let w = barany_dual(&k, &classes).unwrap();
        assert_eq!(w.color, 0);
        assert!(verify_barany(&k, &classes, &w));
        assert!(w.functional.eval(&k[0]) < int(0));

        let bad = vec![pts(&[&[-1], &[2]]), pts(&[&[1], &[3]])];
        match barany_dual(&k, &bad) {
            Err(ConvexError::Violation(v)) => match *v {
                Violation::ColorfulHullMeetsK { tuple, common } => {
                    assert_eq!(tuple, vec![0, 0]);
                    assert_eq!(common.point, point_from_ints(&[0]));
                }
                other => panic!("{other:?}"),
            },
            other => panic!("{other:?}"),
        }
    }
}
