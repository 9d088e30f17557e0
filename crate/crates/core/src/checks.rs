//! Certificate-producing checkers for KKM-type covering statements.
//!
//! A set "meets" a probe simplex Δ_T when one of its closed cells (projected
//! to the relevant factor) intersects hull(T); each positive answer in a
//! witness carries the exact common point with convex weights on both sides.

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{cup_product, is_coboundary, is_cocycle, restrict_cochain, CoboundaryTest, Gf2Cochain, SimplicialComplex};
use crate::covers::{multiplicity, subcomplex_multiplicity, CoverError, GridCover};
use crate::gf2::{BitVec, EchelonBasis};
use crate::grid::{GridBase, SimplexGrid};
use crate::lp::{hull_intersection, CommonPoint};
use crate::rational::{self, nullspace, Point, Rational};
use crate::sections::{in_span_of_family, sample_sd, DisjointFamily};

/// Per-factor codimension `d` and multiplicity share `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorParams {
    pub d: usize,
    pub n: usize,
}

/// How the probe families were drawn; recorded in every report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sampling {
    pub seed: u64,
    pub random_probes: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Witness,
    Counterexample,
    Inconclusive,
}

/// Common point of a cell and a probe simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionCertificate {
    pub probe: usize,
    pub cell: usize,
    pub common: CommonPoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Set meeting every probe, or `None` for a complement component.
    pub label: Option<String>,
    pub factor: usize,
    /// Cells of the complement component, when that branch applies.
    pub component: Option<Vec<usize>>,
    pub certificates: Vec<IntersectionCertificate>,
}

/// A candidate that missed a probe.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Miss {
    pub label: Option<String>,
    pub factor: usize,
    pub probe: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub kind: String,
    pub verdict: Verdict,
    pub params: Vec<FactorParams>,
    pub complement_codim: Option<usize>,
    pub resolution: usize,
    pub seed: u64,
    pub random_probes: usize,
    pub multiplicity: usize,
    pub bound: usize,
    pub hypothesis_holds: bool,
    /// Probe families per factor; the complement probes come last for the strengthened check.
    pub probes: Vec<Vec<DisjointFamily>>,
    pub witness: Option<Witness>,
    pub misses: Vec<Miss>,
}

impl CheckReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Witness => 0,
            _ => 1,
        }
    }
}

/// Seeded probe families for each factor.
pub fn default_probes(
    base: &GridBase,
    params: &[FactorParams],
    random: usize,
    seed: u64,
) -> Result<Vec<Vec<DisjointFamily>>, CoverError> {
    base.factors()
        .iter()
        .zip(params)
        .enumerate()
        .map(|(l, (f, p))| {
            sample_sd(f.simplex_size(), p.d, random, seed.wrapping_add(l as u64))
                .map_err(|e| CoverError::ParameterMismatch(e.to_string()))
        })
        .collect()
}

fn family_points(family: &DisjointFamily) -> Vec<Point> {
    family.members().iter().map(|m| m.weights().to_vec()).collect()
}

/// Functionals constant on the affine hull of a probe, with their values there.
struct ProbeShadow {
    family: DisjointFamily,
    points: Vec<Point>,
    levels: Vec<(Point, Rational)>,
}

impl ProbeShadow {
    fn new(family: &DisjointFamily) -> Self {
        let points = family_points(family);
        let n = family.ambient();
        let diffs: Vec<Point> =
            points[1..].iter().map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect()).collect();
        let normals = if diffs.is_empty() { unit_vectors(n) } else { nullspace(&diffs, n) };
        let levels = normals
            .into_iter()
            .map(|nu| {
                let c = rational::dot(&nu, &points[0]);
                (nu, c)
            })
            .collect();
        Self { family: family.clone(), points, levels }
    }

    fn meets(&self, grid: &SimplexGrid, cell: usize) -> bool {
        let pts = grid.cell_points(cell);
        // A cell strictly on one side of a level set of the probe's hull misses it.
        let separated = self.levels.iter().any(|(nu, c)| {
            let (lo, hi) = pts.iter().map(|p| rational::dot(nu, p)).minmax().into_option().expect("cells have corners");
            &hi < c || c < &lo
        });
        if separated {
            return false;
        }
        let ones = vec![1i8; grid.simplex_size()];
        if pts.iter().any(|p| in_span_of_family(&self.family, p, &ones)) {
            return true;
        }
        hull_intersection(&pts, &self.points).expect("consistent dimensions").is_some()
    }
}

fn unit_vectors(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { rational::one() } else { rational::zero() }).collect())
        .collect()
}

/// Exact test whether a closed cell meets Δ_T.
pub fn cell_meets(grid: &SimplexGrid, cell: usize, family: &DisjointFamily) -> bool {
    ProbeShadow::new(family).meets(grid, cell)
}

/// For each probe, the cells of `grid` meeting it.
pub fn probe_table(grid: &SimplexGrid, probes: &[DisjointFamily]) -> Vec<BitVec> {
    probes
        .par_iter()
        .map(|f| {
            let shadow = ProbeShadow::new(f);
            BitVec::from_ones(grid.num_cells(), (0..grid.num_cells()).filter(|&c| shadow.meets(grid, c)))
        })
        .collect()
}

fn certificate(grid: &SimplexGrid, cell: usize, probe: usize, family: &DisjointFamily) -> IntersectionCertificate {
    let common = hull_intersection(&grid.cell_points(cell), &family_points(family))
        .expect("consistent dimensions")
        .expect("cell was recorded as meeting the probe");
    IntersectionCertificate { probe, cell, common }
}

/// First probe missed by the cell set, or the meeting cell per probe.
fn scan(cells: &[usize], table: &[BitVec]) -> Result<Vec<usize>, usize> {
    table
        .iter()
        .enumerate()
        .map(|(p, meets)| cells.iter().copied().find(|&c| meets.get(c)).ok_or(p))
        .collect()
}

fn validate_params(base: &GridBase, params: &[FactorParams], extra: usize) -> Result<(), CoverError> {
    if params.len() != base.factors().len() {
        return Err(CoverError::ParameterMismatch(format!(
            "{} parameter pairs for {} factors",
            params.len(),
            base.factors().len()
        )));
    }
    for (l, (f, p)) in base.factors().iter().zip(params).enumerate() {
        if f.simplex_size() != p.d * p.n + extra + 1 {
            return Err(CoverError::ParameterMismatch(format!(
                "factor {l} has {} vertices, expected d·n + {} = {}",
                f.simplex_size(),
                extra + 1,
                p.d * p.n + extra + 1
            )));
        }
    }
    Ok(())
}

fn validate_probes(base: &GridBase, probes: &[Vec<DisjointFamily>], codims: &[usize]) -> Result<(), CoverError> {
    if probes.len() != codims.len() {
        return Err(CoverError::ParameterMismatch("probe lists do not match factors".into()));
    }
    for (l, (list, &d)) in probes.iter().zip(codims).enumerate() {
        let size = base.factors()[l.min(base.factors().len() - 1)].simplex_size();
        if let Some(bad) = list.iter().position(|f| f.ambient() != size || f.codim() != d) {
            return Err(CoverError::ParameterMismatch(format!("probe {bad} of list {l} has the wrong shape")));
        }
    }
    Ok(())
}

/// Search for a set whose projection to some factor meets every probe of that factor.
pub fn lebesgue_check(
    cover: &GridCover,
    params: &[FactorParams],
    probes: Vec<Vec<DisjointFamily>>,
    sampling: Sampling,
) -> Result<CheckReport, CoverError> {
    let base = cover.base();
    validate_params(base, params, 0)?;
    validate_probes(base, &probes, &params.iter().map(|p| p.d).collect::<Vec<_>>())?;
    cover.require_covering()?;
    let bound: usize = params.iter().map(|p| p.n).sum();
    let mult = multiplicity(cover);
    let tables: Vec<Vec<BitVec>> = base.factors().iter().zip(&probes).map(|(f, ps)| probe_table(f, ps)).collect();

    let mut witness = None;
    let mut misses = Vec::new();
    'search: for label in cover.labels() {
        for (l, table) in tables.iter().enumerate() {
            match scan(&cover.projection(label, l), table) {
                Ok(cells) => {
                    let grid = &base.factors()[l];
                    let certificates = cells
                        .iter()
                        .enumerate()
                        .map(|(p, &c)| certificate(grid, c, p, &probes[l][p]))
                        .collect();
                    witness = Some(Witness { label: Some(label.to_string()), factor: l, component: None, certificates });
                    break 'search;
                }
                Err(p) => misses.push(Miss { label: Some(label.to_string()), factor: l, probe: p }),
            }
        }
    }
    let hypothesis_holds = mult <= bound;
    Ok(CheckReport {
        kind: if params.len() == 1 { "kkm" } else { "lebesgue" }.into(),
        verdict: verdict(witness.is_some(), hypothesis_holds),
        params: params.to_vec(),
        complement_codim: None,
        resolution: base.spec().resolution,
        seed: sampling.seed,
        random_probes: sampling.random_probes,
        multiplicity: mult,
        bound,
        hypothesis_holds,
        probes,
        misses: if witness.is_some() { Vec::new() } else { misses },
        witness,
    })
}

fn verdict(found: bool, hypothesis_holds: bool) -> Verdict {
    match (found, hypothesis_holds) {
        (true, _) => Verdict::Witness,
        (false, false) => Verdict::Counterexample,
        (false, true) => Verdict::Inconclusive,
    }
}

/// Single-simplex case: some set meets every probe Δ_T.
pub fn kkm_check(
    cover: &GridCover,
    d: usize,
    n: usize,
    probes: Vec<DisjointFamily>,
    sampling: Sampling,
) -> Result<CheckReport, CoverError> {
    if cover.base().factors().len() != 1 {
        return Err(CoverError::ParameterMismatch("kkm needs a single simplex".into()));
    }
    lebesgue_check(cover, &[FactorParams { d, n }], vec![probes], sampling)
}

/// Either a set meets every codimension-`d` probe, or a connected component
/// of the uncovered region meets every codimension-`r` probe.
pub fn strengthened_kkm_check(
    sets: &GridCover,
    d: usize,
    n: usize,
    r: usize,
    probes_d: Vec<DisjointFamily>,
    probes_r: Vec<DisjointFamily>,
    sampling: Sampling,
) -> Result<CheckReport, CoverError> {
    let base = sets.base();
    if base.factors().len() != 1 {
        return Err(CoverError::ParameterMismatch("strengthened check needs a single simplex".into()));
    }
    let params = [FactorParams { d, n }];
    validate_params(base, &params, r)?;
    let probes = vec![probes_d, probes_r];
    validate_probes(base, &probes, &[d, r])?;
    let grid = &base.factors()[0];
    let mult = multiplicity(sets);
    let table_d = probe_table(grid, &probes[0]);
    let table_r = probe_table(grid, &probes[1]);

    let mut witness = None;
    let mut misses = Vec::new();
    for label in sets.labels() {
        match scan(sets.cells_of(label), &table_d) {
            Ok(cells) => {
                let certificates =
                    cells.iter().enumerate().map(|(p, &c)| certificate(grid, c, p, &probes[0][p])).collect();
                witness = Some(Witness { label: Some(label.to_string()), factor: 0, component: None, certificates });
                break;
            }
            Err(p) => misses.push(Miss { label: Some(label.to_string()), factor: 0, probe: p }),
        }
    }
    if witness.is_none() {
        for comp in sets.complement_components() {
            match scan(&comp, &table_r) {
                Ok(cells) => {
                    let certificates =
                        cells.iter().enumerate().map(|(p, &c)| certificate(grid, c, p, &probes[1][p])).collect();
                    witness = Some(Witness { label: None, factor: 0, component: Some(comp), certificates });
                    break;
                }
                Err(p) => misses.push(Miss { label: None, factor: 0, probe: p }),
            }
        }
    }
    let hypothesis_holds = mult <= n;
    Ok(CheckReport {
        kind: "skkm".into(),
        verdict: verdict(witness.is_some(), hypothesis_holds),
        params: params.to_vec(),
        complement_codim: Some(r),
        resolution: base.spec().resolution,
        seed: sampling.seed,
        random_probes: sampling.random_probes,
        multiplicity: mult,
        bound: n,
        hypothesis_holds,
        probes,
        misses: if witness.is_some() { Vec::new() } else { misses },
        witness,
    })
}

/// Re-checks a report's witness against the cover without solving any LP.
pub fn verify_report(report: &CheckReport, cover: &GridCover) -> Result<(), String> {
    let Some(w) = &report.witness else {
        return if report.verdict == Verdict::Witness { Err("witness verdict without witness".into()) } else { Ok(()) };
    };
    let base = cover.base();
    if report.resolution != base.spec().resolution {
        return Err("report resolution differs from the cover".into());
    }
    let grid = base.factors().get(w.factor).ok_or("witness factor out of range")?;
    let (allowed, list) = match (&w.label, &w.component) {
        (Some(label), None) => (cover.projection(label, w.factor), &report.probes[w.factor]),
        (None, Some(comp)) => {
            let free = cover.uncovered();
            if comp.iter().any(|c| free.binary_search(c).is_err()) {
                return Err("component contains covered cells".into());
            }
            (comp.clone(), report.probes.last().ok_or("missing complement probes")?)
        }
        _ => return Err("witness must name exactly one of a label or a component".into()),
    };
    if w.certificates.len() != list.len() {
        return Err(format!("{} certificates for {} probes", w.certificates.len(), list.len()));
    }
    for (p, cert) in w.certificates.iter().enumerate() {
        if cert.probe != p {
            return Err(format!("certificate {p} refers to probe {}", cert.probe));
        }
        if allowed.binary_search(&cert.cell).is_err() || cert.cell >= grid.num_cells() {
            return Err(format!("certificate {p} uses cell {} outside the witness", cert.cell));
        }
        if !cert.common.verify(&grid.cell_points(cert.cell), &family_points(&list[p])) {
            return Err(format!("certificate {p} does not reproduce its common point"));
        }
    }
    Ok(())
}

/// Outcome of the cup-product vanishing test on a cover by subcomplexes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CupVanishing {
    /// Every class restricts to zero on every part; `product = δ primitive`.
    Vanishes { product: Gf2Cochain, primitive: Gf2Cochain },
    /// Class `class` does not vanish on part `part`; `cycle` pairs to 1 with the restriction.
    RestrictionNonzero { part: usize, class: usize, cycle: BitVec },
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CupVanishingError {
    #[error(transparent)]
    Cover(#[from] CoverError),
    #[error(transparent)]
    Complex(#[from] crate::complex::ComplexError),
    #[error("no classes given")]
    NoClasses,
    #[error("all restrictions vanish but the product does not cobound")]
    ProductDoesNotVanish,
}

/// If each `classes[k]` restricts to a coboundary on each part, the product
/// of all classes cobounds; otherwise the first part and class that fail.
pub fn cup_vanishing_check(
    k: &SimplicialComplex,
    parts: &[SimplicialComplex],
    classes: &[Gf2Cochain],
) -> Result<CupVanishing, CupVanishingError> {
    if classes.is_empty() {
        return Err(CupVanishingError::NoClasses);
    }
    let found = subcomplex_multiplicity(k, parts)?;
    if found > classes.len() {
        return Err(CoverError::MultiplicityExceeded { found, bound: classes.len() }.into());
    }
    for c in classes {
        if !is_cocycle(k, c)? {
            return Err(crate::complex::ComplexError::NotCocycle(c.degree()).into());
        }
    }
    for (i, a) in parts.iter().enumerate() {
        for (j, c) in classes.iter().enumerate() {
            let r = restrict_cochain(k, a, c)?;
            if let CoboundaryTest::Essential { cycle } = is_coboundary(a, &r)? {
                return Ok(CupVanishing::RestrictionNonzero { part: i, class: j, cycle });
            }
        }
    }
    let mut product = classes[0].clone();
    for c in &classes[1..] {
        product = cup_product(k, &product, c)?;
    }
    if product.degree() > k.dim() {
        let primitive = Gf2Cochain::zero(k, product.degree() - 1);
        return Ok(CupVanishing::Vanishes { product, primitive });
    }
    match is_coboundary(k, &product)? {
        CoboundaryTest::Coboundary { primitive } => Ok(CupVanishing::Vanishes { product, primitive }),
        CoboundaryTest::Essential { .. } => Err(CupVanishingError::ProductDoesNotVanish),
    }
}

/// Re-checks a non-vanishing certificate: the cycle is a cycle of the part
/// and pairs to 1 with the restricted class.
pub fn verify_restriction_certificate(
    k: &SimplicialComplex,
    part: &SimplicialComplex,
    class: &Gf2Cochain,
    cycle: &BitVec,
) -> bool {
    let Ok(r) = restrict_cochain(k, part, class) else { return false };
    CoboundaryTest::Essential { cycle: cycle.clone() }.verify(part, &r)
}

/// Rank of a list of cocycles modulo coboundaries, used to sanity-check class inputs.
pub fn class_rank(k: &SimplicialComplex, classes: &[Gf2Cochain]) -> usize {
    let Some(first) = classes.first() else { return 0 };
    let deg = first.degree();
    let boundaries = if deg == 0 { Vec::new() } else { k.coboundary_columns(deg - 1) };
    let mut span = EchelonBasis::new(k.count(deg), boundaries.len() + classes.len());
    for b in &boundaries {
        span.insert(b);
    }
    classes.iter().filter(|c| span.insert(c.values()).is_none()).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundles::hopf_cocycle;
    use crate::complex::{cohomology_basis, minimal_rp2, projective_space};
    use crate::covers::{brick_cover, halves_cover, random_subcomplex_cover, vertex_star_cover};
    use crate::grid::BaseSpec;
    use crate::rational::frac;
    use crate::sections::WeightVector;
    use std::collections::BTreeMap;

    fn probes(base: &GridBase, params: &[FactorParams], random: usize) -> Vec<Vec<DisjointFamily>> {
        default_probes(base, params, random, 5).unwrap()
    }

    #[test]
    fn halves_have_a_witness() {
        let cover = halves_cover(8).unwrap();
        let p = probes(cover.base(), &[FactorParams { d: 1, n: 2 }], 20);
        let report = kkm_check(&cover, 1, 2, p.into_iter().next().unwrap(), Sampling { seed: 5, random_probes: 20 }).unwrap();
        assert_eq!(report.verdict, Verdict::Witness);
        assert_eq!(report.multiplicity, 2);
        verify_report(&report, &cover).unwrap();
        let mut tampered = report.clone();
        tampered.witness.as_mut().unwrap().certificates[0].common.point[0] += frac(1, 7);
        assert!(verify_report(&tampered, &cover).is_err());
    }

    #[test]
    fn whole_simplex_is_a_witness() {
        let base = GridBase::simplex(3, 4).unwrap();
        let cover = GridCover::new(base.clone(), BTreeMap::from([("all".into(), (0..16).collect())])).unwrap();
        let p = probes(&base, &[FactorParams { d: 1, n: 2 }], 5);
        let report = kkm_check(&cover, 1, 2, p.into_iter().next().unwrap(), Sampling { seed: 5, random_probes: 5 }).unwrap();
        assert_eq!(report.witness.unwrap().label.as_deref(), Some("all"));
    }

    #[test]
    fn vertex_stars_have_no_witness() {
        let cover = vertex_star_cover(3, 6).unwrap();
        let p = probes(cover.base(), &[FactorParams { d: 1, n: 2 }], 0);
        let report = kkm_check(&cover, 1, 2, p.into_iter().next().unwrap(), Sampling { seed: 5, random_probes: 0 }).unwrap();
        assert_eq!(report.verdict, Verdict::Counterexample);
        assert!(!report.hypothesis_holds);
        assert_eq!(report.exit_code(), 1);
        // Each star misses exactly the opposite edge.
        for m in &report.misses {
            let star: usize = m.label.as_ref().unwrap()[1..].parse().unwrap();
            let family = &report.probes[0][m.probe];
            let supp: Vec<usize> = family.members().iter().flat_map(|f| f.support()).collect();
            assert!(!supp.contains(&star));
        }
    }

    #[test]
    fn parameter_mismatch_rejected() {
        let cover = halves_cover(4).unwrap();
        assert!(matches!(kkm_check(&cover, 1, 1, Vec::new(), Sampling::default()), Err(CoverError::ParameterMismatch(_))));
    }

    #[test]
    fn square_covers() {
        let base = GridBase::new(BaseSpec { simplex_sizes: vec![2, 2], resolution: 16 }).unwrap();
        let params = [FactorParams { d: 1, n: 1 }, FactorParams { d: 1, n: 1 }];
        let bricks = brick_cover(16, 4, 4).unwrap();
        let report = lebesgue_check(&bricks, &params, probes(&base, &params, 10), Sampling { seed: 5, random_probes: 10 }).unwrap();
        assert_eq!(report.verdict, Verdict::Counterexample);
        assert_eq!(report.multiplicity, 3);
        let single = GridCover::new(base.clone(), BTreeMap::from([("x".into(), (0..256).collect())])).unwrap();
        let report = lebesgue_check(&single, &params, probes(&base, &params, 10), Sampling { seed: 5, random_probes: 10 }).unwrap();
        assert_eq!(report.verdict, Verdict::Witness);
        verify_report(&report, &single).unwrap();
    }

    #[test]
    fn strengthened_branches() {
        let base = GridBase::simplex(3, 8).unwrap();
        let corner = GridCover::from_centroids(base.clone(), &["b".to_string()], |x| {
            if x[0][2] >= frac(3, 4) { vec![0] } else { vec![] }
        })
        .unwrap();
        let pd = sample_sd(3, 1, 10, 1).unwrap();
        let pr = sample_sd(3, 1, 10, 2).unwrap();
        let report = strengthened_kkm_check(&corner, 1, 1, 1, pd.clone(), pr.clone(), Sampling { seed: 1, random_probes: 10 }).unwrap();
        assert_eq!(report.verdict, Verdict::Witness);
        let w = report.witness.as_ref().unwrap();
        assert!(w.label.is_none() && w.component.is_some());
        verify_report(&report, &corner).unwrap();

        let whole = GridCover::new(base, BTreeMap::from([("all".into(), (0..64).collect())])).unwrap();
        let report = strengthened_kkm_check(&whole, 1, 1, 1, pd, pr, Sampling { seed: 1, random_probes: 10 }).unwrap();
        assert_eq!(report.witness.unwrap().label.as_deref(), Some("all"));

        let kkm_base = GridBase::simplex(3, 4).unwrap();
        let halves = halves_cover(4).unwrap();
        let p0 = sample_sd(3, 0, 3, 3).unwrap();
        let pd = sample_sd(3, 1, 5, 3).unwrap();
        assert_eq!(kkm_base.num_cells(), 16);
        let report = strengthened_kkm_check(&halves, 1, 2, 0, pd, p0, Sampling { seed: 3, random_probes: 5 }).unwrap();
        assert!(report.witness.unwrap().label.is_some());
    }

    #[test]
    fn probe_meeting_matches_vertex_test() {
        let grid = SimplexGrid::new(3, 4).unwrap();
        let edge = DisjointFamily::new(3, vec![WeightVector::vertex(3, 0), WeightVector::vertex(3, 1)]).unwrap();
        let table = probe_table(&grid, &[edge]);
        // Cells meeting the edge t_2 = 0 are exactly those with a corner on it.
        for c in 0..grid.num_cells() {
            let touches = grid.cell_points(c).iter().any(|p| p[2] == crate::rational::zero());
            assert_eq!(table[0].get(c), touches);
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(12))]
        #[test]
        fn filtered_meeting_matches_lp(seed in 0u64..1000, d in 1usize..=2) {
            let grid = SimplexGrid::new(4, 3).unwrap();
            for family in sample_sd(4, d, 3, seed).unwrap().iter().skip(4) {
                let table = probe_table(&grid, std::slice::from_ref(family));
                for c in 0..grid.num_cells() {
                    let lp = hull_intersection(&grid.cell_points(c), &family_points(family)).unwrap().is_some();
                    proptest::prop_assert_eq!(table[0].get(c), lp);
                }
            }
        }
    }

    #[test]
    fn cup_vanishing_examples() {
        // Two disjoint circles, one class vanishing on the whole complex.
        let k = SimplicialComplex::from_facets(&[[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5]]).unwrap();
        let zero = Gf2Cochain::zero(&k, 1);
        assert!(matches!(cup_vanishing_check(&k, &[k.clone()], &[zero]).unwrap(), CupVanishing::Vanishes { .. }));

        // Circle, generator squared, cover by two contractible arcs.
        let circle = SimplicialComplex::from_facets(&[[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let g = cohomology_basis(&circle, 1).unwrap().basis[0].clone();
        let a = SimplicialComplex::from_facets(&[[0, 1], [1, 2]]).unwrap();
        let b = SimplicialComplex::from_facets(&[[2, 3], [0, 3]]).unwrap();
        match cup_vanishing_check(&circle, &[a, b], &[g.clone(), g]).unwrap() {
            CupVanishing::Vanishes { product, primitive } => {
                assert!(product.is_zero());
                assert_eq!(primitive.degree(), 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hopf_square_obstructs_every_two_part_cover() {
        for (rp2, h) in [
            {
                let (k, cover) = projective_space(2).unwrap();
                let h = hopf_cocycle(&k, &cover).unwrap().edge_signs().clone();
                (k, h)
            },
            {
                let k = minimal_rp2();
                let h = cohomology_basis(&k, 1).unwrap().basis[0].clone();
                (k, h)
            },
        ] {
            for seed in 0..8 {
                let parts = random_subcomplex_cover(&rp2, 2, seed).unwrap();
                match cup_vanishing_check(&rp2, &parts, &[h.clone(), h.clone()]).unwrap() {
                    CupVanishing::RestrictionNonzero { part, class, cycle } => {
                        assert!(verify_restriction_certificate(&rp2, &parts[part], &[&h, &h][class], &cycle));
                    }
                    other => panic!("seed {seed}: {other:?}"),
                }
            }
            assert_eq!(class_rank(&rp2, &[h]), 1);
        }
    }
}
