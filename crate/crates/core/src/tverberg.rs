//! Tverberg-type partitions: the tensor lift to a colorful problem and a direct partition search.

use itertools::Itertools;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::convex::{barany_dual, ConvexError, Violation};
use crate::lp::{in_hull, lp_feasible, HullCertificate, LinearSystem, LpError, Relation};
use crate::rational::{self, Point, Rational};

/// Generator set `φ_{l,s}(V_{l,s})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointSet(#[serde(with = "rational::serde_points")] pub Vec<Point>);

/// `sets[l][s]` lists the images of `V_{l,s}` in `F = ℚ^dim`, for `s = 0..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergInstance {
    pub r: usize,
    pub dim: usize,
    pub sets: Vec<Vec<PointSet>>,
    /// Linear form equal to 1 on every generator.
    #[serde(default, with = "optional_vec")]
    pub alpha: Option<Vec<Rational>>,
}

mod optional_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
        v.as_ref().map(|v| v.iter().map(rational::format).collect::<Vec<_>>()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<Rational>>, D::Error> {
        let raw: Option<Vec<String>> = Option::deserialize(d)?;
        raw.map(|v| v.iter().map(|x| rational::parse(x).map_err(serde::de::Error::custom)).collect())
            .transpose()
    }
}

impl TverbergInstance {
    /// Classical instance: every `V_{l,s}` is one point, the same for all `s`.
    pub fn from_points(points: &[Point], r: usize, alpha: Option<Vec<Rational>>) -> Result<Self, ConvexError> {
        let dim = points.first().map_or(0, Vec::len);
        let sets = points.iter().map(|p| vec![PointSet(vec![p.clone()]); r + 1]).collect();
        let inst = Self { r, dim, sets, alpha };
        inst.validate()?;
        Ok(inst)
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn set(&self, l: usize, s: usize) -> &[Point] {
        &self.sets[l][s].0
    }

    pub fn validate(&self) -> Result<(), ConvexError> {
        let bad = |msg: &str| Err(ConvexError::Input(msg.into()));
        if self.sets.is_empty() || self.dim == 0 {
            return bad("need at least one index and positive dimension");
        }
        for row in &self.sets {
            if row.len() != self.r + 1 {
                return bad("every index needs r + 1 generator sets");
            }
            for set in row {
                if set.0.is_empty() {
                    return bad("generator sets must be nonempty");
                }
                if set.0.iter().any(|p| p.len() != self.dim) {
                    return Err(LpError::InconsistentDimension.into());
                }
            }
        }
        if let Some(a) = &self.alpha {
            if a.len() != self.dim {
                return Err(LpError::InconsistentDimension.into());
            }
            if self.sets.iter().flatten().flat_map(|s| &s.0).any(|p| rational::dot(a, p) != rational::one()) {
                return bad("alpha must equal 1 on every generator");
            }
        }
        Ok(())
    }

    /// `true` when `φ_{l,s}` does not depend on `s`.
    pub fn is_symmetric(&self) -> bool {
        self.sets.iter().all(|row| row.iter().all_equal())
    }
}

/// Partition `(I_s)`, chosen generators and coefficients with a common value `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergWitness {
    pub parts: Vec<Vec<usize>>,
    /// Index into `V_{i,s}` for the part `s` containing `i`.
    pub choices: Vec<usize>,
    #[serde(with = "rational::serde_vec")]
    pub lambdas: Vec<Rational>,
    #[serde(with = "rational::serde_vec")]
    pub common: Point,
}

impl TverbergWitness {
    pub fn part_of(&self, i: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(&i))
    }
}

/// Exact re-check of every condition a witness asserts.
pub fn verify_witness(inst: &TverbergInstance, w: &TverbergWitness) -> bool {
    let m = inst.m();
    if w.parts.len() != inst.r + 1 || w.choices.len() != m || w.lambdas.len() != m || w.common.len() != inst.dim {
        return false;
    }
    let mut seen = vec![false; m];
    for part in &w.parts {
        if part.is_empty() {
            return false;
        }
        for &i in part {
            if i >= m || std::mem::replace(&mut seen[i], true) {
                return false;
            }
        }
    }
    if !seen.iter().all(|&x| x) || w.lambdas.iter().any(Signed::is_negative) || w.common.iter().all(Zero::is_zero) {
        return false;
    }
    for (s, part) in w.parts.iter().enumerate() {
        let mut acc = vec![rational::zero(); inst.dim];
        for &i in part {
            let Some(p) = inst.set(i, s).get(w.choices[i]) else { return false };
            for (a, x) in acc.iter_mut().zip(p) {
                *a += &w.lambdas[i] * x;
            }
        }
        if acc != w.common {
            return false;
        }
        if inst.alpha.is_some() && rational::sum(part.iter().map(|&i| &w.lambdas[i])) != rational::one() {
            return false;
        }
    }
    inst.alpha.as_ref().is_none_or(|a| rational::dot(a, &w.common) == rational::one())
}

/// Colorful data over `E = L_r ⊗ F` whose colorful hulls through 0 are Tverberg partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedInstance {
    pub dim: usize,
    #[serde(with = "rational::serde_points")]
    pub k: Vec<Point>,
    pub classes: Vec<PointSet>,
    /// `(s, v)` for each lifted generator of each class.
    pub origin: Vec<Vec<(usize, usize)>>,
}

/// Coordinates of `[e_s] ⊗ x` in the basis `[e_1],…,[e_r]` of `L_r`, where `[e_0] = −Σ [e_s]`.
pub fn lift_vector(r: usize, s: usize, x: &[Rational]) -> Point {
    let d = x.len();
    let mut out = vec![rational::zero(); r * d];
    if s == 0 {
        for block in out.chunks_mut(d) {
            for (o, v) in block.iter_mut().zip(x) {
                *o = -v.clone();
            }
        }
    } else {
        out[(s - 1) * d..s * d].clone_from_slice(x);
    }
    out
}

pub fn sarkaria_lift(inst: &TverbergInstance) -> LiftedInstance {
    let dim = inst.r * inst.dim;
    let mut classes = Vec::with_capacity(inst.m());
    let mut origin = Vec::with_capacity(inst.m());
    for row in &inst.sets {
        let mut pts = Vec::new();
        let mut org = Vec::new();
        for (s, set) in row.iter().enumerate() {
            for (v, p) in set.0.iter().enumerate() {
                pts.push(lift_vector(inst.r, s, p));
                org.push((s, v));
            }
        }
        classes.push(PointSet(pts));
        origin.push(org);
    }
    LiftedInstance { dim, k: vec![vec![rational::zero(); dim]], classes, origin }
}

/// Reads off the partition from a colorful tuple of the lift whose hull contains 0.
fn witness_from_tuple(
    inst: &TverbergInstance,
    lift: &LiftedInstance,
    tuple: &[usize],
    weights: &[Rational],
) -> Result<TverbergWitness, ConvexError> {
    let mut parts = vec![Vec::new(); inst.r + 1];
    let mut choices = Vec::with_capacity(tuple.len());
    for (i, &t) in tuple.iter().enumerate() {
        let (s, v) = lift.origin[i][t];
        parts[s].push(i);
        choices.push(v);
    }
    let scale = rational::sum(parts[0].iter().map(|&i| &weights[i]));
    if scale.is_zero() {
        return Err(ConvexError::NoConclusion);
    }
    let lambdas: Vec<Rational> = weights.iter().map(|w| w / &scale).collect();
    let mut common = vec![rational::zero(); inst.dim];
    for &i in &parts[0] {
        for (c, x) in common.iter_mut().zip(&inst.set(i, 0)[choices[i]]) {
            *c += &lambdas[i] * x;
        }
    }
    Ok(TverbergWitness { parts, choices, lambdas, common })
}

/// Hypothesis (i): a nonzero vector in the cone of every `φ_{l,s}(V_{l,s})`.
fn common_direction(inst: &TverbergInstance, l: usize) -> Result<bool, ConvexError> {
    let d = inst.dim;
    let sizes: Vec<usize> = inst.sets[l].iter().map(|s| s.0.len()).collect();
    let vars = d + sizes.iter().sum::<usize>();
    let mut base = LinearSystem::new(vars);
    let mut off = d;
    for (s, &size) in sizes.iter().enumerate() {
        for c in 0..d {
            let mut row = vec![rational::zero(); vars];
            row[c] = -rational::one();
            for (j, p) in inst.set(l, s).iter().enumerate() {
                row[off + j] = p[c].clone();
            }
            base.push(row, Relation::Eq, rational::zero());
        }
        for j in 0..size {
            base.push_nonneg(off + j);
        }
        off += size;
    }
    let normalizations: Vec<Vec<Rational>> = match &inst.alpha {
        Some(a) => vec![a.clone()],
        None => (0..d)
            .flat_map(|c| {
                [1i64, -1].map(|sign| {
                    let mut e = vec![rational::zero(); d];
                    e[c] = rational::int(sign);
                    e
                })
            })
            .collect(),
    };
    for n in normalizations {
        let mut sys = base.clone();
        let mut row = n;
        row.resize(vars, rational::zero());
        sys.push(row, Relation::Eq, rational::one());
        if lp_feasible(&sys)?.is_feasible() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Checks hypotheses (i) and (ii), naming the first failure.
pub fn check_hypotheses(inst: &TverbergInstance) -> Result<(), ConvexError> {
    inst.validate()?;
    for l in 0..inst.m() {
        if !common_direction(inst, l)? {
            return Err(Violation::NoCommonDirection { color: l }.into());
        }
    }
    let origin = vec![rational::zero(); inst.dim];
    for s in 0..=inst.r {
        let sizes: Vec<usize> = (0..inst.m()).map(|l| inst.set(l, s).len()).collect();
        for tuple in sizes.iter().map(|&n| 0..n).multi_cartesian_product() {
            let pts: Vec<Point> = tuple.iter().enumerate().map(|(l, &v)| inst.set(l, s)[v].clone()).collect();
            if let HullCertificate::Inside { weights } = in_hull(&origin, &pts)? {
                return Err(Violation::ColorfulHullContainsZero { part: s, tuple, weights }.into());
            }
        }
    }
    Ok(())
}

/// Proof route: Bárány's dual theorem on the lift with `K = {0}`. Below the
/// dimension bound the same colorful search runs without the theorem.
pub fn sarkaria_search(inst: &TverbergInstance) -> Result<Option<TverbergWitness>, ConvexError> {
    let lift = sarkaria_lift(inst);
    let classes: Vec<Vec<Point>> = lift.classes.iter().map(|c| c.0.clone()).collect();
    if lift.dim < inst.m() {
        return match barany_dual(&lift.k, &classes) {
            Err(ConvexError::Violation(v)) => match *v {
                Violation::ColorfulHullMeetsK { tuple, common } => {
                    witness_from_tuple(inst, &lift, &tuple, &common.q_weights).map(Some)
                }
                other => Err(other.into()),
            },
            // A class hull missing 0 contradicts hypothesis (i).
            Ok(_) => Ok(None),
            Err(e) => Err(e),
        };
    }
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    let tuples: Vec<Vec<usize>> = sizes.iter().map(|&n| 0..n).multi_cartesian_product().collect();
    let found = tuples.par_iter().find_map_first(|tuple| {
        let pts: Vec<Point> = tuple.iter().enumerate().map(|(l, &v)| classes[l][v].clone()).collect();
        match in_hull(&lift.k[0], &pts) {
            Ok(HullCertificate::Inside { weights }) => Some(Ok((tuple.clone(), weights))),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        }
    });
    match found {
        None => Ok(None),
        Some(Err(e)) => Err(e.into()),
        Some(Ok((tuple, weights))) => witness_from_tuple(inst, &lift, &tuple, &weights).map(Some),
    }
}

/// Labelled partitions of `0..m` into `parts` nonempty blocks, or unlabelled
/// ones (blocks in order of least element) when `labelled` is false.
pub fn enumerate_partitions(m: usize, parts: usize, labelled: bool) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    if parts == 0 || parts > m {
        return out;
    }
    let mut labels = vec![0usize; m];
    fn rec(i: usize, used: usize, parts: usize, labelled: bool, labels: &mut [usize], out: &mut Vec<Vec<Vec<usize>>>) {
        let m = labels.len();
        if i == m {
            if used == parts {
                let mut blocks = vec![Vec::new(); parts];
                for (j, &b) in labels.iter().enumerate() {
                    blocks[b].push(j);
                }
                if blocks.iter().all(|b| !b.is_empty()) {
                    out.push(blocks);
                }
            }
            return;
        }
        let limit = if labelled { parts } else { (used + 1).min(parts) };
        for b in 0..limit {
            labels[i] = b;
            rec(i + 1, used.max(b + 1), parts, labelled, labels, out);
        }
    }
    rec(0, 0, parts, labelled, &mut labels, &mut out);
    let signature = |p: &Vec<Vec<usize>>| p.iter().map(Vec::len).sorted_by(|a, b| b.cmp(a)).collect::<Vec<_>>();
    out.sort_by(|a, b| signature(a).cmp(&signature(b)).then_with(|| a.cmp(b)));
    out
}

/// LP for a fixed partition and generator choice: `λ ≥ 0`, free `c`, `Σ_{I_0} λ = 1`.
fn partition_lp(
    inst: &TverbergInstance,
    parts: &[Vec<usize>],
    choices: &[usize],
) -> Result<Option<TverbergWitness>, LpError> {
    let (m, d) = (inst.m(), inst.dim);
    let vars = d + m;
    let mut sys = LinearSystem::new(vars);
    for i in 0..m {
        sys.push_nonneg(d + i);
    }
    for (s, part) in parts.iter().enumerate() {
        for c in 0..d {
            let mut row = vec![rational::zero(); vars];
            row[c] = -rational::one();
            for &i in part {
                row[d + i] = inst.set(i, s)[choices[i]][c].clone();
            }
            sys.push(row, Relation::Eq, rational::zero());
        }
    }
    let mut norm = vec![rational::zero(); vars];
    for &i in &parts[0] {
        norm[d + i] = rational::one();
    }
    sys.push(norm, Relation::Eq, rational::one());
    Ok(lp_feasible(&sys)?.point().map(|x| TverbergWitness {
        parts: parts.to_vec(),
        choices: choices.to_vec(),
        lambdas: x[d..].to_vec(),
        common: x[..d].to_vec(),
    }))
}

/// Direct route: every partition and generator choice, in signature order, checked by LP.
pub fn brute_force_search(inst: &TverbergInstance) -> Result<Option<TverbergWitness>, ConvexError> {
    inst.validate()?;
    let partitions = enumerate_partitions(inst.m(), inst.r + 1, !inst.is_symmetric());
    let found = partitions.par_iter().find_map_first(|parts| {
        let mut part_of = vec![0; inst.m()];
        for (s, p) in parts.iter().enumerate() {
            for &i in p {
                part_of[i] = s;
            }
        }
        let ranges = (0..inst.m()).map(|i| 0..inst.set(i, part_of[i]).len());
        for choices in ranges.multi_cartesian_product() {
            match partition_lp(inst, parts, &choices) {
                Ok(Some(w)) if w.common.iter().any(|x| !x.is_zero()) => return Some(Ok(w)),
                Ok(_) => continue,
                Err(e) => return Some(Err(e)),
            }
        }
        None
    });
    found.transpose().map_err(Into::into)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergReport {
    /// Whether `r · dim F < m`, so the theorem guarantees a witness.
    pub theorem_applies: bool,
    pub sarkaria: Option<TverbergWitness>,
    pub brute_force: Option<TverbergWitness>,
    pub paths_agree: bool,
}

impl TverbergReport {
    pub fn witness(&self) -> Option<&TverbergWitness> {
        self.sarkaria.as_ref().or(self.brute_force.as_ref())
    }
}

fn run_both(inst: &TverbergInstance) -> Result<TverbergReport, ConvexError> {
    let sarkaria = sarkaria_search(inst)?;
    let brute_force = brute_force_search(inst)?;
    for w in sarkaria.iter().chain(&brute_force) {
        if !verify_witness(inst, w) {
            return Err(ConvexError::NoConclusion);
        }
    }
    Ok(TverbergReport {
        theorem_applies: inst.r * inst.dim < inst.m(),
        paths_agree: sarkaria.is_some() == brute_force.is_some(),
        sarkaria,
        brute_force,
    })
}

/// Checks both hypotheses and the dimension bound, then runs both search routes.
pub fn generalized_tverberg(inst: &TverbergInstance) -> Result<TverbergReport, ConvexError> {
    check_hypotheses(inst)?;
    if inst.r * inst.dim >= inst.m() {
        return Err(Violation::DimensionTooLarge { dim: inst.r * inst.dim, colors: inst.m() }.into());
    }
    run_both(inst)
}

/// Appends a coordinate 1 to each point.
pub fn homogenize(points: &[Point]) -> Vec<Point> {
    points
        .iter()
        .map(|p| {
            let mut q = p.clone();
            q.push(rational::one());
            q
        })
        .collect()
}

/// Partition into `r + 1` parts with intersecting hulls. Below `r(d+1)+1`
/// points the search still runs and may come back empty.
pub fn tverberg_partition(points: &[Point], r: usize) -> Result<TverbergReport, ConvexError> {
    let d = points.first().ok_or(LpError::EmptyPointSet)?.len();
    let lifted = homogenize(points);
    let mut alpha = vec![rational::zero(); d + 1];
    alpha[d] = rational::one();
    let inst = TverbergInstance::from_points(&lifted, r, Some(alpha))?;
    if inst.r * inst.dim < inst.m() {
        generalized_tverberg(&inst)
    } else {
        run_both(&inst)
    }
}

/// The common point in the original coordinates.
pub fn affine_point(w: &TverbergWitness) -> Point {
    w.common[..w.common.len() - 1].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, point_from_ints};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pts(xs: &[&[i64]]) -> Vec<Point> {
        xs.iter().map(|x| point_from_ints(x)).collect()
    }

    #[test]
    fn lift_coordinates() {
        let x = point_from_ints(&[2, 5]);
        assert_eq!(lift_vector(1, 0, &x), point_from_ints(&[-2, -5]));
        assert_eq!(lift_vector(1, 1, &x), x);
        assert_eq!(lift_vector(2, 2, &x), point_from_ints(&[0, 0, 2, 5]));
        let total = (0..3).map(|s| lift_vector(2, s, &x)).fold(vec![int(0); 4], |acc, v| {
            acc.iter().zip(&v).map(|(a, b)| a + b).collect()
        });
        assert!(total.iter().all(Zero::is_zero));
    }

    #[test]
    fn partition_counts() {
        assert_eq!(enumerate_partitions(4, 2, false).len(), 7);
        assert_eq!(enumerate_partitions(4, 2, true).len(), 14);
        assert_eq!(enumerate_partitions(7, 3, false).len(), 301);
        let first = &enumerate_partitions(4, 2, false)[0];
        assert_eq!(first.iter().map(Vec::len).collect::<Vec<_>>(), vec![2, 2]);
    }

    #[test]
    fn three_points_on_a_line() {
        let rep = tverberg_partition(&pts(&[&[0], &[2], &[1]]), 1).unwrap();
        assert!(rep.theorem_applies && rep.paths_agree);
        let w = rep.brute_force.as_ref().unwrap();
        assert_eq!(affine_point(w), point_from_ints(&[1]));
        assert!(w.parts.contains(&vec![2]));
        assert_eq!(affine_point(rep.sarkaria.as_ref().unwrap()), point_from_ints(&[1]));
    }

    #[test]
    fn triangle_with_interior_point() {
        let config = pts(&[&[0, 0], &[6, 0], &[0, 6], &[1, 1]]);
        let rep = tverberg_partition(&config, 1).unwrap();
        for w in [rep.sarkaria.as_ref().unwrap(), rep.brute_force.as_ref().unwrap()] {
            assert_eq!(affine_point(w), point_from_ints(&[1, 1]));
            assert!(w.parts.contains(&vec![3]));
        }
    }

    #[test]
    fn equal_points() {
        let config = vec![point_from_ints(&[3, -1]); 4];
        let rep = tverberg_partition(&config, 2).unwrap();
        let w = rep.witness().unwrap();
        assert_eq!(affine_point(w), point_from_ints(&[3, -1]));
    }

    #[test]
    fn seven_points_three_parts() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let config: Vec<Point> = (0..7).map(|_| point_from_ints(&[rng.gen_range(-9..=9), rng.gen_range(-9..=9)])).collect();
        let rep = tverberg_partition(&config, 2).unwrap();
        assert!(rep.paths_agree);
        let w = rep.brute_force.unwrap();
        assert_eq!(w.parts.len(), 3);
        for (s, part) in w.parts.iter().enumerate() {
            let members: Vec<Point> = part.iter().map(|&i| config[i].clone()).collect();
            assert!(in_hull(&affine_point(&w), &members).unwrap().is_inside(), "part {s}");
        }
    }

    #[test]
    fn below_threshold_may_fail() {
        // Three vertices of a triangle have no Radon partition.
        let rep = tverberg_partition(&pts(&[&[0, 0], &[1, 0], &[0, 1]]), 1).unwrap();
        assert!(!rep.theorem_applies);
        assert!(rep.witness().is_none() && rep.paths_agree);
    }

    #[test]
    fn hypothesis_violations() {
        let mut inst = TverbergInstance::from_points(&pts(&[&[1], &[-1], &[2]]), 1, None).unwrap();
        match check_hypotheses(&inst) {
            Err(ConvexError::Violation(v)) => assert!(matches!(*v, Violation::ColorfulHullContainsZero { part: 0, .. })),
            other => panic!("{other:?}"),
        }
        inst.sets[0][1] = PointSet(vec![point_from_ints(&[-1])]);
        inst.sets[0][0] = PointSet(vec![point_from_ints(&[1])]);
        match check_hypotheses(&inst) {
            Err(ConvexError::Violation(v)) => assert_eq!(*v, Violation::NoCommonDirection { color: 0 }),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn colored_instance_both_routes() {
        // Two generators per set on the line x = 1, no symmetry in s.
        let set = |a: i64, b: i64| PointSet(pts(&[&[a, 1], &[b, 1]]));
        let inst = TverbergInstance {
            r: 1,
            dim: 2,
            sets: vec![vec![set(0, 3), set(2, 5)], vec![set(1, 4), set(-1, 2)], vec![set(3, 6), set(0, 4)]],
            alpha: Some(vec![int(0), int(1)]),
        };
        let rep = generalized_tverberg(&inst).unwrap();
        assert!(rep.paths_agree);
        let mut split = inst.clone();
        split.sets[0] = vec![set(0, 1), set(4, 5)];
        match generalized_tverberg(&split) {
            Err(ConvexError::Violation(v)) => assert_eq!(*v, Violation::NoCommonDirection { color: 0 }),
            other => panic!("{other:?}"),
        }
        assert!(verify_witness(&inst, rep.sarkaria.as_ref().unwrap()));
        assert!(verify_witness(&inst, rep.brute_force.as_ref().unwrap()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lift_kernel(a in proptest::collection::vec(-9i64..=9, 2), b in proptest::collection::vec(-9i64..=9, 2), r in 1usize..=3) {
            let a = point_from_ints(&a);
            let b = point_from_ints(&b);
            let add = |x: Point, y: Point| -> Point { x.iter().zip(&y).map(|(p, q)| p + q).collect() };
            let constant = (0..=r).map(|s| lift_vector(r, s, &a)).reduce(add).unwrap();
            prop_assert!(constant.iter().all(Zero::is_zero));
            prop_assert_eq!(constant.len(), r * 2);
            let mixed = (0..=r).map(|s| lift_vector(r, s, if s == r { &b } else { &a })).reduce(add).unwrap();
            prop_assert_eq!(mixed.iter().all(Zero::is_zero), a == b);
        }

        #[test]
        fn radon_always_found(coords in proptest::collection::vec(-12i64..=12, 8)) {
            let config: Vec<Point> = coords.chunks(2).map(point_from_ints).collect();
            let rep = tverberg_partition(&config, 1).unwrap();
            prop_assert!(rep.paths_agree);
            let w = rep.witness().unwrap();
            prop_assert!(verify_witness(&TverbergInstance::from_points(&homogenize(&config), 1, Some(vec![int(0), int(0), int(1)])).unwrap(), w));
        }
    }
}
