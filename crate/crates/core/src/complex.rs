//! Finite simplicial complexes and their mod-2 cochain algebra.
//!
//! Vertices are `usize` ids; the numeric order of ids is the total vertex
//! order used by cup products and by the staircase product triangulation.
//! Cochains are packed [`BitVec`]s indexed by the complex's k-simplices in
//! lexicographic order.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use thiserror::Error;

use crate::gf2::{self, BitVec, EchelonBasis, Solution};

/// Sorted vertex tuple.
pub type Simplex = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("facet list is empty")]
    NoFacets,
    #[error("facet {0:?} is empty")]
    EmptyFacet(Vec<usize>),
    #[error("facet {0:?} repeats a vertex")]
    DuplicateVertex(Vec<usize>),
    #[error("degree {degree} outside 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },
    #[error("{0:?} is not a simplex of the complex")]
    UnknownSimplex(Simplex),
    #[error("cochain has {found} values, complex has {expected} simplices of degree {degree}")]
    CochainShape { degree: usize, expected: usize, found: usize },
    #[error("cochain of degree {0} is not a cocycle")]
    NotCocycle(usize),
    #[error("simplex {0:?} of the candidate subcomplex is missing from the ambient complex")]
    NotSubcomplex(Simplex),
    #[error("projective space of dimension {n} needs {needed} top simplices, budget is {budget}")]
    TooLarge { n: usize, needed: usize, budget: usize },
    #[error("invalid double cover: {0}")]
    InvalidCover(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    // by dimension, each list sorted lexicographically
    simplices: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `facets`.
    pub fn from_facets<F: AsRef<[usize]>>(facets: &[F]) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::NoFacets);
        }
        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        for f in facets {
            let f = f.as_ref();
            if f.is_empty() {
                return Err(ComplexError::EmptyFacet(f.to_vec()));
            }
            let sorted: Simplex = f.iter().copied().sorted().collect();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::DuplicateVertex(f.to_vec()));
            }
            if by_dim.len() < sorted.len() {
                by_dim.resize_with(sorted.len(), BTreeSet::new);
            }
            if by_dim[sorted.len() - 1].contains(&sorted) {
                continue;
            }
            for mask in 1u64..(1u64 << sorted.len()) {
                let face: Simplex =
                    (0..sorted.len()).filter(|i| mask >> i & 1 == 1).map(|i| sorted[i]).collect();
                by_dim[face.len() - 1].insert(face);
            }
        }
        let simplices: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let index = simplices
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let vertices = simplices[0].iter().map(|s| s[0]).collect();
        Ok(Self { vertices, simplices, index })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    /// k-simplices in lexicographic order; empty beyond the dimension.
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        self.index.get(s.len().checked_sub(1)?)?.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.index_of(s).is_some()
    }

    /// Maximal simplices.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in 0..=self.dim() {
            for s in self.simplices(k) {
                let covered = self.simplices(k + 1).iter().any(|t| is_face(s, t));
                if !covered {
                    out.push(s.clone());
                }
            }
        }
        out
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> Result<(), ComplexError> {
        for list in &self.simplices {
            for s in list {
                if !other.contains(s) {
                    return Err(ComplexError::NotSubcomplex(s.clone()));
                }
            }
        }
        Ok(())
    }

    /// Columns of δ^k: for each k-simplex, the indicator of its (k+1)-cofaces.
    pub fn coboundary_columns(&self, k: usize) -> Vec<BitVec> {
        let rows = self.count(k + 1);
        let mut cols = vec![BitVec::zeros(rows); self.count(k)];
        for (r, s) in self.simplices(k + 1).iter().enumerate() {
            for face in boundary_faces(s) {
                let c = self.index_of(&face).expect("complex is downward closed");
                cols[c].set(r, true);
            }
        }
        cols
    }
}

fn is_face(small: &[usize], big: &[usize]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

/// Codimension-one faces of a sorted simplex.
pub fn boundary_faces(s: &[usize]) -> impl Iterator<Item = Simplex> + '_ {
    (0..s.len()).filter(move |_| s.len() > 1).map(move |i| {
        let mut f = s.to_vec();
        f.remove(i);
        f
    })
}

/// GF(2)-valued cochain; bit `j` is the value on the j-th k-simplex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Cochain {
    degree: usize,
    values: BitVec,
}

impl Gf2Cochain {
    pub fn zero(k: &SimplicialComplex, degree: usize) -> Self {
        Self { degree, values: BitVec::zeros(k.count(degree)) }
    }

    pub fn from_values(k: &SimplicialComplex, degree: usize, values: BitVec) -> Result<Self, ComplexError> {
        if values.len() != k.count(degree) {
            return Err(ComplexError::CochainShape {
                degree,
                expected: k.count(degree),
                found: values.len(),
            });
        }
        Ok(Self { degree, values })
    }

    /// Cochain equal to 1 exactly on the listed simplices.
    pub fn from_support<S: AsRef<[usize]>>(
        k: &SimplicialComplex,
        degree: usize,
        support: &[S],
    ) -> Result<Self, ComplexError> {
        let mut values = BitVec::zeros(k.count(degree));
        for s in support {
            let sorted: Simplex = s.as_ref().iter().copied().sorted().collect();
            if sorted.len() != degree + 1 {
                return Err(ComplexError::UnknownSimplex(sorted));
            }
            let i = k.index_of(&sorted).ok_or(ComplexError::UnknownSimplex(sorted))?;
            values.set(i, true);
        }
        Ok(Self { degree, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &BitVec {
        &self.values
    }

    pub fn value_at(&self, k: &SimplicialComplex, s: &[usize]) -> bool {
        k.index_of(s).is_some_and(|i| s.len() == self.degree + 1 && self.values.get(i))
    }

    pub fn support(&self, k: &SimplicialComplex) -> Vec<Simplex> {
        self.values.iter_ones().map(|i| k.simplices(self.degree)[i].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_zero()
    }

    pub fn add(&self, other: &Gf2Cochain) -> Gf2Cochain {
        assert_eq!(self.degree, other.degree, "adding cochains of different degrees");
        let mut values = self.values.clone();
        values.xor_assign(&other.values);
        Self { degree: self.degree, values }
    }

    fn check_shape(&self, k: &SimplicialComplex) -> Result<(), ComplexError> {
        if self.values.len() != k.count(self.degree) {
            return Err(ComplexError::CochainShape {
                degree: self.degree,
                expected: k.count(self.degree),
                found: self.values.len(),
            });
        }
        Ok(())
    }
}

pub fn coboundary(k: &SimplicialComplex, c: &Gf2Cochain) -> Result<Gf2Cochain, ComplexError> {
    c.check_shape(k)?;
    let cols = k.coboundary_columns(c.degree);
    let values = gf2::apply(k.count(c.degree + 1), &cols, &c.values);
    Ok(Gf2Cochain { degree: c.degree + 1, values })
}

pub fn is_cocycle(k: &SimplicialComplex, c: &Gf2Cochain) -> Result<bool, ComplexError> {
    Ok(coboundary(k, c)?.is_zero())
}

#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub betti: usize,
    pub basis: Vec<Gf2Cochain>,
}

/// `dim H^k(K; Z/2)` together with cocycle representatives of a basis.
pub fn cohomology_basis(k: &SimplicialComplex, degree: usize) -> Result<CohomologyBasis, ComplexError> {
    if degree > k.dim() {
        return Err(ComplexError::DegreeOutOfRange { degree, dim: k.dim() });
    }
    let n = k.count(degree);
    let cocycles = gf2::nullspace(k.count(degree + 1), &k.coboundary_columns(degree));
    let boundaries = if degree == 0 { Vec::new() } else { k.coboundary_columns(degree - 1) };
    let mut span = EchelonBasis::new(n, boundaries.len() + cocycles.len());
    for b in &boundaries {
        span.insert(b);
    }
    let mut basis = Vec::new();
    for z in cocycles {
        if span.insert(&z).is_none() {
            basis.push(Gf2Cochain { degree, values: z });
        }
    }
    Ok(CohomologyBasis { betti: basis.len(), basis })
}

/// Mod-2 Betti numbers in every degree.
pub fn betti_numbers(k: &SimplicialComplex) -> Vec<usize> {
    (0..=k.dim())
        .map(|d| cohomology_basis(k, d).expect("degree in range").betti)
        .collect()
}

/// Ordered Alexander–Whitney product: front p-face of `a` times back q-face of `b`.
///
/// Products landing above the dimension of `k` are the zero cochain with no entries.
pub fn cup_product(k: &SimplicialComplex, a: &Gf2Cochain, b: &Gf2Cochain) -> Result<Gf2Cochain, ComplexError> {
    a.check_shape(k)?;
    b.check_shape(k)?;
    let (p, q) = (a.degree, b.degree);
    let degree = p + q;
    let mut values = BitVec::zeros(k.count(degree));
    for (i, s) in k.simplices(degree).iter().enumerate() {
        let front = k.index_of(&s[..=p]).expect("front face present");
        if !a.values.get(front) {
            continue;
        }
        let back = k.index_of(&s[p..]).expect("back face present");
        if b.values.get(back) {
            values.set(i, true);
        }
    }
    Ok(Gf2Cochain { degree, values })
}

/// Result of asking whether a cocycle cobounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoboundaryTest {
    /// `c = δ(primitive)`.
    Coboundary { primitive: Gf2Cochain },
    /// A k-cycle `z` (δᵀz = 0 on (k-1)-cochains) with `⟨c, z⟩ = 1`.
    Essential { cycle: BitVec },
}

impl CoboundaryTest {
    pub fn is_coboundary(&self) -> bool {
        matches!(self, CoboundaryTest::Coboundary { .. })
    }

    /// Re-checks the certificate against `c`.
    pub fn verify(&self, k: &SimplicialComplex, c: &Gf2Cochain) -> bool {
        match self {
            CoboundaryTest::Coboundary { primitive } => {
                coboundary(k, primitive).map(|d| &d == c).unwrap_or(false)
            }
            CoboundaryTest::Essential { cycle } => {
                if cycle.len() != k.count(c.degree) || !cycle.dot(&c.values) {
                    return false;
                }
                c.degree == 0
                    || k.coboundary_columns(c.degree - 1).iter().all(|col| !col.dot(cycle))
            }
        }
    }
}

/// Decides whether the cocycle `c` is a coboundary, with a certificate either way.
pub fn is_coboundary(k: &SimplicialComplex, c: &Gf2Cochain) -> Result<CoboundaryTest, ComplexError> {
    if !is_cocycle(k, c)? {
        return Err(ComplexError::NotCocycle(c.degree));
    }
    let cols = if c.degree == 0 { Vec::new() } else { k.coboundary_columns(c.degree - 1) };
    Ok(match gf2::solve(k.count(c.degree), &cols, &c.values) {
        Solution::Solved(x) => CoboundaryTest::Coboundary {
            primitive: Gf2Cochain { degree: c.degree.saturating_sub(1), values: x },
        },
        Solution::Obstructed(y) => CoboundaryTest::Essential { cycle: y },
    })
}

/// Values of `c` on the simplices of the subcomplex `a`.
pub fn restrict_cochain(
    k: &SimplicialComplex,
    a: &SimplicialComplex,
    c: &Gf2Cochain,
) -> Result<Gf2Cochain, ComplexError> {
    c.check_shape(k)?;
    a.is_subcomplex_of(k)?;
    let mut values = BitVec::zeros(a.count(c.degree));
    for (i, s) in a.simplices(c.degree).iter().enumerate() {
        if c.values.get(k.index_of(s).expect("checked subcomplex")) {
            values.set(i, true);
        }
    }
    Ok(Gf2Cochain { degree: c.degree, values })
}

/// Vertex map between complexes, assumed simplicial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    pub vertex_map: HashMap<usize, usize>,
}

impl SimplicialMap {
    pub fn image(&self, s: &[usize]) -> Simplex {
        s.iter().map(|v| self.vertex_map[v]).sorted().dedup().collect()
    }

    /// `(f*c)(σ) = c(f(σ))` when `f` is injective on σ, else 0.
    pub fn pullback(
        &self,
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        c: &Gf2Cochain,
    ) -> Result<Gf2Cochain, ComplexError> {
        c.check_shape(target)?;
        let mut values = BitVec::zeros(source.count(c.degree));
        for (i, s) in source.simplices(c.degree).iter().enumerate() {
            let img = self.image(s);
            if img.len() != s.len() {
                continue;
            }
            let j = target.index_of(&img).ok_or_else(|| ComplexError::UnknownSimplex(img.clone()))?;
            if c.values.get(j) {
                values.set(i, true);
            }
        }
        Ok(Gf2Cochain { degree: c.degree, values })
    }
}

/// `K × L` with its projections.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    pub complex: SimplicialComplex,
    /// Product vertex id → (vertex of K, vertex of L).
    pub pairs: Vec<(usize, usize)>,
    pub first: SimplicialMap,
    pub second: SimplicialMap,
}

/// Staircase triangulation of `|K| × |L|`.
///
/// Product vertices are pairs ordered lexicographically; simplices are the
/// chains of pairs that increase weakly in both coordinates, with both
/// projections simplices of the factors.
pub fn product_complex(k: &SimplicialComplex, l: &SimplicialComplex) -> ProductComplex {
    let pairs: Vec<(usize, usize)> =
        k.vertices().iter().flat_map(|&a| l.vertices().iter().map(move |&b| (a, b))).collect();
    let id: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut facets = Vec::new();
    for sigma in k.facets() {
        for tau in l.facets() {
            let (p, q) = (sigma.len() - 1, tau.len() - 1);
            // A monotone lattice path picks which p of the p+q steps move in K.
            for k_steps in (0..p + q).combinations(p) {
                let (mut i, mut j) = (0, 0);
                let mut facet = vec![id[&(sigma[0], tau[0])]];
                for step in 0..p + q {
                    if k_steps.contains(&step) {
                        i += 1;
                    } else {
                        j += 1;
                    }
                    facet.push(id[&(sigma[i], tau[j])]);
                }
                facets.push(facet);
            }
        }
    }
    let complex = SimplicialComplex::from_facets(&facets).expect("nonempty product");
    let first = SimplicialMap { vertex_map: pairs.iter().enumerate().map(|(i, p)| (i, p.0)).collect() };
    let second = SimplicialMap { vertex_map: pairs.iter().enumerate().map(|(i, p)| (i, p.1)).collect() };
    ProductComplex { complex, pairs, first, second }
}

/// Antipodal double cover of a triangulated projective space.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    pub source: SimplicialComplex,
    pub target: SimplicialComplex,
    pub vertex_map: SimplicialMap,
    pub deck: HashMap<usize, usize>,
}

impl QuotientMap {
    pub fn validate(&self) -> Result<(), ComplexError> {
        let bad = |m: String| Err(ComplexError::InvalidCover(m));
        for &v in self.source.vertices() {
            let Some(&w) = self.deck.get(&v) else { return bad(format!("deck undefined at {v}")) };
            if w == v {
                return bad(format!("deck fixes vertex {v}"));
            }
            if self.deck.get(&w) != Some(&v) {
                return bad(format!("deck is not an involution at {v}"));
            }
            if self.vertex_map.vertex_map.get(&v) != self.vertex_map.vertex_map.get(&w) {
                return bad(format!("vertex map separates {v} and its antipode"));
            }
        }
        let mut fibres: HashMap<usize, usize> = HashMap::new();
        for &v in self.source.vertices() {
            *fibres.entry(self.vertex_map.vertex_map[&v]).or_default() += 1;
        }
        if fibres.len() != self.target.vertices().len() || fibres.values().any(|&c| c != 2) {
            return bad("vertex map is not exactly two-to-one onto the target".into());
        }
        for d in 0..=self.source.dim() {
            for s in self.source.simplices(d) {
                let anti: Simplex = s.iter().map(|v| self.deck[v]).sorted().collect();
                if !self.source.contains(&anti) {
                    return bad(format!("deck image of {s:?} is not a simplex"));
                }
                if anti == *s {
                    return bad(format!("simplex {s:?} is deck-invariant"));
                }
                let img = self.vertex_map.image(s);
                if img.len() != s.len() || !self.target.contains(&img) {
                    return bad(format!("image of {s:?} is not a target simplex of equal dimension"));
                }
            }
            if self.source.count(d) != 2 * self.target.count(d) {
                return bad(format!("simplex count in degree {d} does not halve"));
            }
        }
        Ok(())
    }

    /// Pullback of a target cochain to the sphere.
    pub fn pullback(&self, c: &Gf2Cochain) -> Result<Gf2Cochain, ComplexError> {
        self.vertex_map.pullback(&self.source, &self.target, c)
    }
}

/// Default cap on top simplices of the sphere used by [`projective_space`].
pub const PROJECTIVE_TOP_SIMPLEX_BUDGET: usize = 10_000;

/// RP^n as the antipodal quotient of the barycentric subdivision of the
/// boundary of the (n+1)-dimensional cross-polytope.
pub fn projective_space(n: usize) -> Result<(SimplicialComplex, QuotientMap), ComplexError> {
    projective_space_with_budget(n, PROJECTIVE_TOP_SIMPLEX_BUDGET)
}

pub fn projective_space_with_budget(
    n: usize,
    budget: usize,
) -> Result<(SimplicialComplex, QuotientMap), ComplexError> {
    if n == 0 {
        return Err(ComplexError::DegreeOutOfRange { degree: 0, dim: 0 });
    }
    let coords = n + 1;
    let needed = (1usize << coords) * (1..=coords).product::<usize>();
    if needed > budget {
        return Err(ComplexError::TooLarge { n, needed, budget });
    }
    // Faces of the cross-polytope are nonzero sign vectors; ids follow the
    // lexicographic order with -1 < 0 < 1.
    let faces: Vec<Vec<i8>> = (0..coords)
        .map(|_| [-1i8, 0, 1])
        .multi_cartesian_product()
        .filter(|s| s.iter().any(|&x| x != 0))
        .collect();
    let id: HashMap<Vec<i8>, usize> = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();

    let mut facets = Vec::with_capacity(needed);
    for signs in (0..coords).map(|_| [-1i8, 1]).multi_cartesian_product() {
        for order in (0..coords).permutations(coords) {
            let mut face = vec![0i8; coords];
            let mut flag = Vec::with_capacity(coords);
            for &c in &order {
                face[c] = signs[c];
                flag.push(id[&face]);
            }
            facets.push(flag);
        }
    }
    let sphere = SimplicialComplex::from_facets(&facets)?;

    let deck: HashMap<usize, usize> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (i, id[&f.iter().map(|x| -x).collect::<Vec<_>>()]))
        .collect();
    // Orbits ranked by their least member.
    let mut reps: Vec<usize> = (0..faces.len()).filter(|&i| i < deck[&i]).collect();
    reps.sort_unstable();
    let rank: HashMap<usize, usize> = reps.iter().enumerate().map(|(r, &v)| (v, r)).collect();
    let vertex_map: HashMap<usize, usize> =
        (0..faces.len()).map(|i| (i, rank[&i.min(deck[&i])])).collect();
    let vertex_map = SimplicialMap { vertex_map };
    let target_facets: Vec<Simplex> = sphere.facets().iter().map(|f| vertex_map.image(f)).collect();
    let target = SimplicialComplex::from_facets(&target_facets)?;
    let cover = QuotientMap { source: sphere, target: target.clone(), vertex_map, deck };
    cover.validate()?;
    Ok((target, cover))
}

/// The six-vertex projective plane.
pub fn minimal_rp2() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[
        [0, 1, 2],
        [0, 2, 3],
        [0, 3, 4],
        [0, 4, 5],
        [0, 5, 1],
        [1, 2, 4],
        [2, 3, 5],
        [3, 4, 1],
        [4, 5, 2],
        [5, 1, 3],
    ])
    .expect("static facet list")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn circle() -> SimplicialComplex {
        SimplicialComplex::from_facets(&[[0, 1], [1, 2], [0, 2]]).unwrap()
    }

    #[test]
    fn build_examples() {
        let pt = SimplicialComplex::from_facets(&[[0]]).unwrap();
        assert_eq!(pt.f_vector(), vec![1]);
        assert_eq!(pt.dim(), 0);
        assert_eq!(circle().f_vector(), vec![3, 3]);
        assert_eq!(minimal_rp2().f_vector(), vec![6, 15, 10]);
        assert_eq!(SimplicialComplex::from_facets::<[usize; 1]>(&[]), Err(ComplexError::NoFacets));
        assert!(matches!(
            SimplicialComplex::from_facets(&[[1, 1]]),
            Err(ComplexError::DuplicateVertex(_))
        ));
    }

    #[test]
    fn betti_examples() {
        let pt = SimplicialComplex::from_facets(&[[0]]).unwrap();
        assert_eq!(betti_numbers(&pt), vec![1]);
        assert_eq!(betti_numbers(&circle()), vec![1, 1]);
        assert_eq!(betti_numbers(&minimal_rp2()), vec![1, 1, 1]);
        assert!(matches!(cohomology_basis(&pt, 1), Err(ComplexError::DegreeOutOfRange { .. })));
    }

    #[test]
    fn rp2_square_is_essential() {
        let k = minimal_rp2();
        let a = &cohomology_basis(&k, 1).unwrap().basis[0];
        let sq = cup_product(&k, a, a).unwrap();
        assert!(is_cocycle(&k, &sq).unwrap());
        let t = is_coboundary(&k, &sq).unwrap();
        assert!(!t.is_coboundary());
        assert!(t.verify(&k, &sq));
    }

    #[test]
    fn circle_square_lands_above_dimension() {
        let k = circle();
        let a = &cohomology_basis(&k, 1).unwrap().basis[0];
        let sq = cup_product(&k, a, a).unwrap();
        assert_eq!(sq.degree(), 2);
        assert!(sq.is_zero());
        let zero = Gf2Cochain::zero(&k, 0);
        assert!(cup_product(&k, a, &zero).unwrap().is_zero());
    }

    #[test]
    fn coboundary_tests() {
        let k = circle();
        let z = Gf2Cochain::zero(&k, 1);
        match is_coboundary(&k, &z).unwrap() {
            CoboundaryTest::Coboundary { primitive } => assert!(primitive.is_zero()),
            other => panic!("{other:?}"),
        }
        let g = Gf2Cochain::from_support(&k, 1, &[[0, 1]]).unwrap();
        let t = is_coboundary(&k, &g).unwrap();
        assert!(!t.is_coboundary() && t.verify(&k, &g));
        let u = Gf2Cochain::from_support(&k, 0, &[[1]]).unwrap();
        let du = coboundary(&k, &u).unwrap();
        let t = is_coboundary(&k, &du).unwrap();
        assert!(t.is_coboundary() && t.verify(&k, &du));
        let not_cocycle = Gf2Cochain::from_support(&minimal_rp2(), 1, &[[0, 1]]).unwrap();
        assert_eq!(
            is_coboundary(&minimal_rp2(), &not_cocycle),
            Err(ComplexError::NotCocycle(1))
        );
    }

    #[test]
    fn restriction_examples() {
        let k = minimal_rp2();
        let a = &cohomology_basis(&k, 1).unwrap().basis[0];
        assert_eq!(&restrict_cochain(&k, &k, a).unwrap(), a);
        let vertex = SimplicialComplex::from_facets(&[[3]]).unwrap();
        let r = restrict_cochain(&k, &vertex, a).unwrap();
        assert_eq!(r.degree(), 1);
        assert_eq!(r.values().len(), 0);
        // Closed star of vertex 0 is a disk.
        let star = SimplicialComplex::from_facets(&[[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1]]).unwrap();
        let r = restrict_cochain(&k, &star, a).unwrap();
        assert!(is_coboundary(&star, &r).unwrap().is_coboundary());
        let foreign = SimplicialComplex::from_facets(&[[0, 9]]).unwrap();
        assert!(matches!(restrict_cochain(&k, &foreign, a), Err(ComplexError::NotSubcomplex(_))));
    }

    #[test]
    fn product_examples() {
        let edge = SimplicialComplex::from_facets(&[[0, 1]]).unwrap();
        let sq = product_complex(&edge, &edge);
        assert_eq!(sq.complex.f_vector(), vec![4, 5, 2]);
        assert_eq!(sq.complex.euler_characteristic(), 1);
        let torus = product_complex(&circle(), &circle());
        assert_eq!(betti_numbers(&torus.complex), vec![1, 2, 1]);
    }

    #[test]
    fn projective_spaces() {
        let (rp1, cover) = projective_space(1).unwrap();
        assert_eq!(rp1.euler_characteristic(), 0);
        assert_eq!(betti_numbers(&rp1), vec![1, 1]);
        assert!(cover.deck.iter().all(|(a, b)| a != b));
        let (rp2, cover) = projective_space(2).unwrap();
        assert_eq!(rp2.euler_characteristic(), 1);
        assert_eq!(betti_numbers(&rp2), vec![1, 1, 1]);
        cover.validate().unwrap();
        let g = &cohomology_basis(&rp2, 1).unwrap().basis[0];
        let up = cover.pullback(g).unwrap();
        assert!(is_cocycle(&cover.source, &up).unwrap());
        assert!(matches!(projective_space_with_budget(3, 100), Err(ComplexError::TooLarge { .. })));
    }

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(proptest::collection::btree_set(0usize..6, 1..4), 1..6).prop_map(|fs| {
            let facets: Vec<Vec<usize>> = fs.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_facets(&facets).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn delta_squared_vanishes(k in random_complex(), seed in any::<u64>()) {
            for d in 0..k.dim() {
                let bits = BitVec::from_ones(k.count(d), (0..k.count(d)).filter(|i| (seed >> (i % 64)) & 1 == 1));
                let c = Gf2Cochain::from_values(&k, d, bits).unwrap();
                let dd = coboundary(&k, &coboundary(&k, &c).unwrap()).unwrap();
                prop_assert!(dd.is_zero());
            }
        }

        #[test]
        fn euler_characteristic_multiplies(k in random_complex(), l in random_complex()) {
            let p = product_complex(&k, &l);
            prop_assert_eq!(p.complex.euler_characteristic(), k.euler_characteristic() * l.euler_characteristic());
        }

        #[test]
        fn cup_is_well_defined_on_classes(seed in any::<u64>()) {
            let k = minimal_rp2();
            let a = cohomology_basis(&k, 1).unwrap().basis[0].clone();
            let u = BitVec::from_ones(6, (0..6).filter(|i| (seed >> i) & 1 == 1));
            let du = coboundary(&k, &Gf2Cochain::from_values(&k, 0, u).unwrap()).unwrap();
            let a2 = a.add(&du);
            let x = cup_product(&k, &a, &a).unwrap();
            let y = cup_product(&k, &a2, &a).unwrap();
            prop_assert!(is_cocycle(&k, &y).unwrap());
            prop_assert!(is_coboundary(&k, &x.add(&y)).unwrap().is_coboundary());
        }
    }
}
