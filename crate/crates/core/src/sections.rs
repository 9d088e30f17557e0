//! Points of the simplex Δ(V) and of P(ℝ[V]), the square map between them,
//! sections of d·H cut out by disjoint-support families, and gluing of local
//! sections over a partition of unity.
//!
//! `V` is always `0..n`. Anything deciding zero or membership is exact;
//! float vectors only render section values.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SectionError {
    #[error("weights must be nonnegative and sum to 1")]
    NotProbability,
    #[error("projective point has all coordinates zero")]
    ZeroVector,
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("family members must be nonempty and have pairwise disjoint supports")]
    OverlappingSupports,
    #[error("codimension {d} outside 0..{n}")]
    CodimensionOutOfRange { d: usize, n: usize },
    #[error("{positive} partition functions are positive, more than the bound {bound}")]
    MultiplicityExceeded { positive: usize, bound: usize },
    #[error("local section {set} of summand {summand} vanishes inside its own set")]
    LocalSectionVanishes { set: usize, summand: usize },
}

/// Point of Δ(V): exact nonnegative weights summing to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector {
    #[serde(with = "rational::serde_vec")]
    weights: Vec<Rational>,
}

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self, SectionError> {
        if weights.is_empty() || weights.iter().any(Signed::is_negative) || rational::sum(&weights) != rational::one() {
            return Err(SectionError::NotProbability);
        }
        Ok(Self { weights })
    }

    /// Normalizes nonnegative integer masses.
    pub fn from_masses(masses: &[i64]) -> Result<Self, SectionError> {
        let total: i64 = masses.iter().sum();
        if total <= 0 || masses.iter().any(|&m| m < 0) {
            return Err(SectionError::NotProbability);
        }
        Self::new(masses.iter().map(|&m| rational::frac(m, total)).collect())
    }

    pub fn vertex(n: usize, v: usize) -> Self {
        let mut w = vec![rational::zero(); n];
        w[v] = rational::one();
        Self { weights: w }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| !self.weights[v].is_zero()).collect()
    }
}

/// Line in ℝ[V] with a canonical integer representative: coprime
/// coordinates, first nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    pub fn new(coords: &[Rational]) -> Result<Self, SectionError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(SectionError::ZeroVector);
        }
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = coords.iter().map(|c| (c * &lcm).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let first_negative = ints.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
        for c in &mut ints {
            *c = &*c / &gcd;
            if first_negative {
                *c = -&*c;
            }
        }
        Ok(Self { coords: ints })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, SectionError> {
        Self::new(&rational::point_from_ints(coords))
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    fn as_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|c| rational::to_f64(&Rational::from_integer(c.clone()))).collect()
    }
}

/// `[t] ↦ (t_v² / Σ t_w²)_v`.
pub fn pi_v(p: &ProjectivePoint) -> WeightVector {
    let squares: Vec<BigInt> = p.coords.iter().map(|c| c * c).collect();
    let total: BigInt = squares.iter().sum();
    WeightVector { weights: squares.into_iter().map(|s| Rational::new(s, total.clone())).collect() }
}

/// `t ↦ (√t_v)_v`, a unit vector with nonnegative entries.
pub fn sigma_v(t: &WeightVector) -> Vec<f64> {
    t.weights.iter().map(|w| rational::to_f64(w).sqrt()).collect()
}

/// Element of S_d(V): weight vectors with pairwise disjoint supports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointFamily {
    n: usize,
    members: Vec<WeightVector>,
}

impl DisjointFamily {
    pub fn new(n: usize, members: Vec<WeightVector>) -> Result<Self, SectionError> {
        if members.is_empty() || members.len() > n {
            return Err(SectionError::OverlappingSupports);
        }
        let mut used = vec![false; n];
        for m in &members {
            if m.len() != n {
                return Err(SectionError::DimensionMismatch { expected: n, found: m.len() });
            }
            for v in m.support() {
                if std::mem::replace(&mut used[v], true) {
                    return Err(SectionError::OverlappingSupports);
                }
            }
        }
        Ok(Self { n, members })
    }

    pub fn members(&self) -> &[WeightVector] {
        &self.members
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn codim(&self) -> usize {
        self.n - self.members.len()
    }

    /// Orthonormal basis of the complement of span σ_V(T), in a fixed order.
    fn complement_basis(&self) -> Vec<Vec<f64>> {
        let mut covered = vec![false; self.n];
        let mut basis = Vec::with_capacity(self.codim());
        for m in &self.members {
            let s = m.support();
            let mut block: Vec<Vec<f64>> = vec![sigma_v(m)];
            for &v in &s {
                let mut e = vec![0.0; self.n];
                e[v] = 1.0;
                for b in &block {
                    let proj: f64 = e.iter().zip(b).map(|(x, y)| x * y).sum();
                    e.iter_mut().zip(b).for_each(|(x, y)| *x -= proj * y);
                }
                let norm = e.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm > 1e-9 && block.len() < s.len() {
                    e.iter_mut().for_each(|x| *x /= norm);
                    block.push(e);
                }
            }
            basis.extend(block.into_iter().skip(1));
            for v in s {
                covered[v] = true;
            }
        }
        for v in (0..self.n).filter(|&v| !covered[v]) {
            let mut e = vec![0.0; self.n];
            e[v] = 1.0;
            basis.push(e);
        }
        basis
    }
}

/// Value of the section s_T at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct SectionValue {
    /// Coordinates in ℝ^d of the component orthogonal to span σ_V(T).
    pub value: Vec<f64>,
    /// Exact decision of `value = 0`.
    pub is_zero: bool,
}

/// Exact test for whether a vector with the given squared coordinates and
/// signs lies in span σ_V(T).
pub fn in_span_of_family(family: &DisjointFamily, squares: &[Rational], signs: &[i8]) -> bool {
    let mut covered = vec![false; family.n];
    for m in &family.members {
        let s = m.support();
        let nonzero: Vec<usize> = s.iter().copied().filter(|&v| !squares[v].is_zero()).collect();
        if !nonzero.is_empty() {
            if nonzero.len() != s.len() || !nonzero.iter().map(|&v| signs[v]).all_equal() {
                return false;
            }
            let ratio = &squares[s[0]] / &m.weights[s[0]];
            if s.iter().any(|&v| &squares[v] / &m.weights[v] != ratio) {
                return false;
            }
        }
        for v in s {
            covered[v] = true;
        }
    }
    (0..family.n).all(|v| covered[v] || squares[v].is_zero())
}

pub fn section_s_t(family: &DisjointFamily, p: &ProjectivePoint) -> Result<SectionValue, SectionError> {
    if p.len() != family.n {
        return Err(SectionError::DimensionMismatch { expected: family.n, found: p.len() });
    }
    let x = p.as_f64();
    let value = family
        .complement_basis()
        .iter()
        .map(|b| b.iter().zip(&x).map(|(u, v)| u * v).sum())
        .collect();
    let squares: Vec<Rational> = p.coords.iter().map(|c| Rational::from_integer(c * c)).collect();
    let signs: Vec<i8> = p
        .coords
        .iter()
        .map(|c| if c.is_positive() { 1 } else if c.is_negative() { -1 } else { 0 })
        .collect();
    Ok(SectionValue { value, is_zero: in_span_of_family(family, &squares, &signs) })
}

/// Finite probe set of S_d(V): every vertex family plus `count` random ones.
pub fn sample_sd(n: usize, d: usize, count: usize, seed: u64) -> Result<Vec<DisjointFamily>, SectionError> {
    if n == 0 || d >= n {
        return Err(SectionError::CodimensionOutOfRange { d, n });
    }
    let blocks = n - d;
    let mut out: Vec<DisjointFamily> = (0..n)
        .combinations(blocks)
        .map(|vs| DisjointFamily { n, members: vs.into_iter().map(|v| WeightVector::vertex(n, v)).collect() })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let size = rng.gen_range(blocks..=n);
        let mut verts: Vec<usize> = (0..n).collect();
        verts.shuffle(&mut rng);
        verts.truncate(size);
        // First `blocks` vertices seed the blocks; the rest join random blocks.
        let mut parts: Vec<Vec<usize>> = verts[..blocks].iter().map(|&v| vec![v]).collect();
        for &v in &verts[blocks..] {
            let b = rng.gen_range(0..blocks);
            parts[b].push(v);
        }
        let members = parts
            .into_iter()
            .map(|part| {
                let mut masses = vec![0i64; n];
                for v in part {
                    masses[v] = rng.gen_range(1..=9);
                }
                WeightVector::from_masses(&masses).expect("positive masses")
            })
            .collect();
        out.push(DisjointFamily { n, members });
    }
    Ok(out)
}

/// The argmax set of a partition of unity at a point and the refined sets containing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PalaisRefinement {
    /// Indices attaining the maximum value.
    pub argmax: Vec<usize>,
    /// Every J with x ∈ U_J, smallest first.
    pub member_of: Vec<Vec<usize>>,
    /// Whether more than `n` values are positive.
    pub exceeds_bound: bool,
}

impl PalaisRefinement {
    pub fn contains(&self, j: &[usize]) -> bool {
        let sorted: Vec<usize> = j.iter().copied().sorted().collect();
        self.member_of.contains(&sorted)
    }
}

/// `x ∈ U_J` iff every φ_j (j ∈ J) is positive and exceeds every φ_i (i ∉ J).
pub fn in_refined_set(phis: &[Rational], j: &[usize]) -> bool {
    if j.is_empty() {
        return false;
    }
    let Some(low) = j.iter().map(|&i| &phis[i]).min() else { return false };
    low.is_positive() && (0..phis.len()).filter(|i| !j.contains(i)).all(|i| &phis[i] < low)
}

fn check_probability(phis: &[Rational]) -> Result<(), SectionError> {
    if phis.is_empty() || phis.iter().any(Signed::is_negative) || rational::sum(phis) != rational::one() {
        return Err(SectionError::NotProbability);
    }
    Ok(())
}

pub fn palais_refine(phis: &[Rational], n: usize) -> Result<PalaisRefinement, SectionError> {
    check_probability(phis)?;
    let max = phis.iter().max().expect("nonempty");
    let argmax = (0..phis.len()).filter(|&i| &phis[i] == max).collect();
    // Only top-k sets can contain x; ties inside a prefix are allowed, a tie across its boundary is not.
    let order: Vec<usize> = (0..phis.len()).sorted_by(|&a, &b| phis[b].cmp(&phis[a]).then(a.cmp(&b))).collect();
    let mut member_of = Vec::new();
    for k in 1..=phis.len() {
        let top: Vec<usize> = order[..k].iter().copied().sorted().collect();
        if in_refined_set(phis, &top) {
            member_of.push(top);
        }
    }
    let positive = phis.iter().filter(|p| p.is_positive()).count();
    Ok(PalaisRefinement { argmax, member_of, exceeds_bound: positive > n })
}

/// Subordinate partition of unity on the refined cover: ψ_J is the normalized
/// product of φ_j and (φ_j − φ_i)⁺ over j ∈ J, i ∉ J.
pub fn refined_partition(phis: &[Rational]) -> Result<BTreeMap<Vec<usize>, Rational>, SectionError> {
    let refinement = palais_refine(phis, phis.len())?;
    let bumps: Vec<(Vec<usize>, Rational)> = refinement
        .member_of
        .into_iter()
        .map(|j| {
            let mut b = rational::one();
            for &a in &j {
                b *= &phis[a];
                for i in (0..phis.len()).filter(|i| !j.contains(i)) {
                    b *= &phis[a] - &phis[i];
                }
            }
            (j, b)
        })
        .collect();
    let total = rational::sum(bumps.iter().map(|(_, b)| b));
    Ok(bumps.into_iter().map(|(j, b)| (j, b / &total)).collect())
}

/// Exact partition of unity on a space of points `X`.
pub trait PartitionOfUnity<X> {
    fn len(&self) -> usize;
    fn values(&self, x: &X) -> Vec<Rational>;
}

/// Local section of one summand on a point, as a fibre vector.
pub type LocalSection<'a, X> = Box<dyn Fn(&X) -> Vec<f64> + Send + Sync + 'a>;

/// Global section `(s_1(x), …, s_n(x))` glued from local sections
/// `local[i][k]` of summand `k` that do not vanish on the support of φ_i.
pub fn glue_sections<X, P: PartitionOfUnity<X>>(
    pou: &P,
    local: &[Vec<LocalSection<'_, X>>],
    n: usize,
    x: &X,
) -> Result<Vec<Vec<f64>>, SectionError> {
    let phis = pou.values(x);
    check_probability(&phis)?;
    let positive = phis.iter().filter(|p| p.is_positive()).count();
    if positive > n {
        return Err(SectionError::MultiplicityExceeded { positive, bound: n });
    }
    let psi = refined_partition(&phis)?;
    let mut out: Vec<Option<Vec<f64>>> = vec![None; n];
    for (j, weight) in psi {
        let k = j.len();
        let i = j[0];
        let s = (local[i][k - 1])(x);
        if s.iter().all(|&c| c == 0.0) {
            return Err(SectionError::LocalSectionVanishes { set: i, summand: k });
        }
        let w = rational::to_f64(&weight);
        let slot = out[k - 1].get_or_insert_with(|| vec![0.0; s.len()]);
        slot.iter_mut().zip(&s).for_each(|(a, b)| *a += w * b);
    }
    Ok(out
        .into_iter()
        .enumerate()
        .map(|(k, v)| v.unwrap_or_else(|| vec![0.0; (local[0][k])(x).len()]))
        .collect())
}

/// Two-arc cover of RP¹ with φ_1 ∝ (2|t₀| − |t₁|)⁺ and φ_2 ∝ (2|t₁| − |t₀|)⁺.
#[derive(Clone, Copy, Debug, Default)]
pub struct CircleArcs;

impl PartitionOfUnity<ProjectivePoint> for CircleArcs {
    fn len(&self) -> usize {
        2
    }

    fn values(&self, x: &ProjectivePoint) -> Vec<Rational> {
        let a = x.coords[0].abs();
        let b = x.coords[1].abs();
        let h1 = (BigInt::from(2) * &a - &b).max(BigInt::zero());
        let h2 = (BigInt::from(2) * &b - &a).max(BigInt::zero());
        let total = &h1 + &h2;
        vec![Rational::new(h1, total.clone()), Rational::new(h2, total)]
    }
}

/// One sampled point of the RP¹ gluing demonstration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GluedSample {
    pub angle: f64,
    pub t0: String,
    pub t1: String,
    pub norms: Vec<f64>,
}

/// Glues the local sections `t ↦ t_i` of H ⊕ H over the two-arc cover at
/// `samples` points of the circle of radius 10⁶.
pub fn rp1_gluing_demo(samples: usize) -> Result<Vec<GluedSample>, SectionError> {
    let coordinate = |i: usize| -> LocalSection<'static, ProjectivePoint> {
        Box::new(move |p: &ProjectivePoint| vec![rational::to_f64(&Rational::from_integer(p.coords[i].clone()))])
    };
    let local = vec![vec![coordinate(0), coordinate(0)], vec![coordinate(1), coordinate(1)]];
    (0..samples)
        .map(|s| {
            let angle = std::f64::consts::TAU * s as f64 / samples as f64;
            let (c, si) = (1e6 * angle.cos(), 1e6 * angle.sin());
            let p = ProjectivePoint::from_ints(&[c.round() as i64, si.round() as i64])?;
            let values = glue_sections(&CircleArcs, &local, 2, &p)?;
            let norms = values.iter().map(|v| v.iter().map(|x| x * x).sum::<f64>().sqrt()).collect();
            Ok(GluedSample { angle, t0: p.coords[0].to_string(), t1: p.coords[1].to_string(), norms })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::in_hull;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    fn wv(xs: &[(i64, i64)]) -> WeightVector {
        WeightVector::new(xs.iter().map(|&(p, q)| frac(p, q)).collect()).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_v(&ProjectivePoint::from_ints(&[0, 1, 0]).unwrap()), WeightVector::vertex(3, 1));
        assert_eq!(pi_v(&ProjectivePoint::from_ints(&[1, 1, 1]).unwrap()), wv(&[(1, 3), (1, 3), (1, 3)]));
        assert_eq!(pi_v(&ProjectivePoint::from_ints(&[1, 2, 2]).unwrap()), wv(&[(1, 9), (4, 9), (4, 9)]));
        assert_eq!(ProjectivePoint::from_ints(&[0, 0]), Err(SectionError::ZeroVector));
    }

    #[test]
    fn canonical_representative() {
        let a = ProjectivePoint::new(&[frac(-1, 2), frac(3, 4)]).unwrap();
        assert_eq!(a.coords(), &[BigInt::from(2), BigInt::from(-3)]);
        assert_eq!(a, ProjectivePoint::from_ints(&[-4, 6]).unwrap());
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_v(&WeightVector::vertex(2, 1)), vec![0.0, 1.0]);
        let s = sigma_v(&wv(&[(1, 4), (3, 4)]));
        assert!((s[0] - 0.5).abs() < 1e-12 && (s[1] - 3f64.sqrt() / 2.0).abs() < 1e-12);
        // Round trip through squares recovered exactly from t.
        let t = wv(&[(1, 4), (3, 4)]);
        let family = DisjointFamily::new(2, vec![t.clone()]).unwrap();
        assert!(in_span_of_family(&family, t.weights(), &[1, 1]));
    }

    #[test]
    fn section_examples() {
        let tau = wv(&[(1, 5), (4, 5), (0, 1)]);
        let family = DisjointFamily::new(3, vec![tau]).unwrap();
        assert_eq!(family.codim(), 2);
        let on = section_s_t(&family, &ProjectivePoint::from_ints(&[1, 2, 0]).unwrap()).unwrap();
        assert!(on.is_zero);
        assert!(on.value.iter().all(|v| v.abs() < 1e-9));
        let off = section_s_t(&family, &ProjectivePoint::from_ints(&[0, 0, 7]).unwrap()).unwrap();
        assert!(!off.is_zero);
        let norm: f64 = off.value.iter().map(|x| x * x).sum::<f64>().sqrt();
        assert!((norm - 1.0).abs() < 1e-9);
        let wrong_sign = section_s_t(&family, &ProjectivePoint::from_ints(&[1, -2, 0]).unwrap()).unwrap();
        assert!(!wrong_sign.is_zero);
        assert!(wrong_sign.value.iter().any(|v| v.abs() > 1e-6));
        assert!(DisjointFamily::new(2, vec![wv(&[(1, 2), (1, 2)]), WeightVector::vertex(2, 0)]).is_err());
    }

    #[test]
    fn section_is_odd() {
        let family = sample_sd(4, 2, 5, 3).unwrap().pop().unwrap();
        let p = ProjectivePoint::from_ints(&[3, -1, 4, 1]).unwrap();
        let v = section_s_t(&family, &p).unwrap().value;
        let basis = family.complement_basis();
        let neg: Vec<f64> =
            basis.iter().map(|b| b.iter().zip([-3.0, 1.0, -4.0, -1.0]).map(|(u, x)| u * x).sum()).collect();
        for (a, b) in v.iter().zip(&neg) {
            assert!((a + b).abs() < 1e-9);
        }
    }

    #[test]
    fn zero_set_matches_hull_on_grid() {
        let res = 64i64;
        let families = [
            DisjointFamily::new(3, vec![WeightVector::vertex(3, 0), WeightVector::vertex(3, 1)]).unwrap(),
            DisjointFamily::new(3, vec![WeightVector::vertex(3, 0), wv(&[(0, 1), (1, 2), (1, 2)])]).unwrap(),
        ];
        for family in families {
            let hull: Vec<Vec<Rational>> = family.members().iter().map(|m| m.weights().to_vec()).collect();
            let mut zeros = Vec::new();
            for a in 0..=res {
                for b in 0..=res - a {
                    let t: Vec<Rational> = [a, b, res - a - b].iter().map(|&x| frac(x, res)).collect();
                    let inside = in_hull(&t, &hull).unwrap().is_inside();
                    let zero = in_span_of_family(&family, &t, &[1, 1, 1]);
                    assert_eq!(zero, inside, "grid point {t:?}");
                    if zero {
                        zeros.push(t);
                    }
                }
            }
            // Every point of the hull is near a zero found on the grid.
            for s in 0..=res {
                let q: Vec<Rational> = (0..3)
                    .map(|v| frac(s, res) * &hull[0][v] + frac(res - s, res) * &hull[1][v])
                    .collect();
                let near = zeros.iter().map(|z| rational::linf_distance(z, &q)).min().unwrap();
                assert!(near <= frac(2, res));
            }
        }
    }

    #[test]
    fn sampled_families() {
        let fams = sample_sd(3, 2, 4, 11).unwrap();
        assert!(fams[..3].iter().all(|f| f.members().len() == 1 && f.members()[0].support().len() == 1));
        let edges = sample_sd(3, 1, 0, 0).unwrap();
        let supports: Vec<Vec<usize>> =
            edges.iter().map(|f| f.members().iter().flat_map(|m| m.support()).sorted().collect()).collect();
        assert_eq!(supports, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(sample_sd(5, 2, 20, 9).unwrap(), sample_sd(5, 2, 20, 9).unwrap());
        assert!(sample_sd(3, 3, 1, 0).is_err());
    }

    #[test]
    fn palais_examples() {
        let r = palais_refine(&[frac(1, 2), frac(3, 10), frac(1, 5)], 3).unwrap();
        assert_eq!(r.argmax, vec![0]);
        let r = palais_refine(&[frac(2, 5), frac(2, 5), frac(1, 5)], 3).unwrap();
        assert_eq!(r.argmax, vec![0, 1]);
        assert!(r.contains(&[0, 1]));
        assert!(!r.contains(&[0]) && !r.contains(&[1]));
        assert!(palais_refine(&[frac(1, 2)], 1).is_err());
    }

    #[test]
    fn gluing_collapses() {
        struct One;
        impl PartitionOfUnity<()> for One {
            fn len(&self) -> usize {
                1
            }
            fn values(&self, _: &()) -> Vec<Rational> {
                vec![int(1)]
            }
        }
        let local: Vec<Vec<LocalSection<()>>> = vec![vec![Box::new(|_: &()| vec![2.0, -1.0])]];
        assert_eq!(glue_sections(&One, &local, 1, &()).unwrap(), vec![vec![2.0, -1.0]]);
    }

    #[test]
    fn rp1_demo_nowhere_zero() {
        let samples = rp1_gluing_demo(2000).unwrap();
        assert!(samples.iter().all(|s| s.norms.iter().any(|&n| n > 0.0)));
    }

    proptest! {
        #[test]
        fn pi_is_scale_invariant(xs in proptest::collection::vec(-20i64..20, 3), p in 1i64..30, q in 1i64..30, neg in any::<bool>()) {
            prop_assume!(xs.iter().any(|&x| x != 0));
            let lam = if neg { frac(-p, q) } else { frac(p, q) };
            let a = ProjectivePoint::from_ints(&xs).unwrap();
            let scaled: Vec<Rational> = xs.iter().map(|&x| int(x) * &lam).collect();
            prop_assert_eq!(pi_v(&a), pi_v(&ProjectivePoint::new(&scaled).unwrap()));
        }

        #[test]
        fn zero_predicate_matches_hull(seed in any::<u64>(), xs in proptest::collection::vec(0i64..4, 4)) {
            prop_assume!(xs.iter().any(|&x| x != 0));
            let p = ProjectivePoint::from_ints(&xs).unwrap();
            let t = pi_v(&p);
            for family in sample_sd(4, 2, 6, seed).unwrap() {
                let hull: Vec<Vec<Rational>> = family.members().iter().map(|m| m.weights().to_vec()).collect();
                let inside = in_hull(t.weights(), &hull).unwrap().is_inside();
                prop_assert_eq!(section_s_t(&family, &p).unwrap().is_zero, inside);
            }
        }

        #[test]
        fn refined_sets_cover_and_separate(masses in proptest::collection::vec(0i64..6, 4)) {
            prop_assume!(masses.iter().any(|&m| m > 0));
            let phis = WeightVector::from_masses(&masses).unwrap().weights().to_vec();
            let r = palais_refine(&phis, 4).unwrap();
            prop_assert!(r.contains(&r.argmax));
            for k in 1..=4 {
                let hits = (0..4).combinations(k).filter(|j| in_refined_set(&phis, j)).count();
                prop_assert!(hits <= 1);
            }
            let psi = refined_partition(&phis).unwrap();
            prop_assert_eq!(rational::sum(psi.values()), rational::one());
            for (j, w) in &psi {
                prop_assert!(!w.is_positive() || in_refined_set(&phis, j));
            }
        }
    }
}
