//! End-to-end acceptance suite: nine property checks with exact certificates and time limits.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bundles::{euler_class_product, hopf_cocycle};
use crate::checks::{
    cup_vanishing_check, default_probes, kkm_check, lebesgue_check, verify_report, verify_restriction_certificate,
    CupVanishing, FactorParams, Sampling, Verdict,
};
use crate::complex::{betti_numbers, cohomology_basis, product_complex, projective_space, Gf2Cochain, SimplicialComplex};
use crate::convex::{barany_dual, centerpoint, colorful_helly, common_point, verify_barany, verify_helly, ConvexError, ConvexSet, HellyInstance, Violation};
use crate::covers::{random_grid_cover, random_subcomplex_cover, vertex_star_cover, GridCover};
use crate::grid::{BaseSpec, GridBase};
use crate::lp::{lp_feasible, LinearSystem, Relation};
use crate::oracle::{feasible_by_enumeration, planar_depth};
use crate::rational::{self, point_from_ints, Point};
use crate::sections::{in_refined_set, rp1_gluing_demo, CircleArcs, PartitionOfUnity, ProjectivePoint};
use crate::tverberg::{affine_point, tverberg_partition};

#[derive(Clone, Debug, Default)]
pub struct AcceptanceConfig {
    pub seed: u64,
    /// Replaces the generated triangulation of RP² in the cohomology and cup-product criteria.
    pub rp2: Option<SimplicialComplex>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: u64,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {}. {} ({:.2}s / {}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.seconds,
            self.limit_seconds,
            self.detail
        )
    }
}

type Check = fn(&AcceptanceConfig) -> Result<String, String>;

pub const CRITERIA: [(&str, u64, Check); 9] = [
    ("projective space cohomology", 60, projective_cohomology),
    ("Euler class powers", 60, euler_powers),
    ("cup product obstruction on RP2", 120, cup_obstruction),
    ("section gluing on RP1", 60, section_gluing),
    ("KKM and Lebesgue witnesses", 600, kkm_lebesgue),
    ("centerpoints", 60, centerpoints),
    ("Tverberg partitions", 600, tverberg),
    ("colorful Helly and Barany dual", 300, helly_barany),
    ("exact LP engine", 60, lp_engine),
];

pub fn run_criterion(id: usize, cfg: &AcceptanceConfig) -> CriterionResult {
    let (name, limit, check) = CRITERIA[id - 1];
    let start = Instant::now();
    let outcome = check(cfg);
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(limit);
    let (passed, mut detail) = match outcome {
        Ok(d) => (in_time, d),
        Err(d) => (false, d),
    };
    if !in_time {
        detail.push_str(" (time limit exceeded)");
    }
    CriterionResult { id, name, passed, detail, seconds: elapsed.as_secs_f64(), limit_seconds: limit }
}

pub fn run_all(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    (1..=CRITERIA.len()).map(|id| run_criterion(id, cfg)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rp2_with_class(cfg: &AcceptanceConfig) -> Result<(SimplicialComplex, Gf2Cochain), String> {
    match &cfg.rp2 {
        Some(k) => {
            let basis = cohomology_basis(k, 1).map_err(|e| e.to_string())?;
            let h = basis.basis.first().cloned().ok_or("supplied RP2 has no degree-1 class")?;
            Ok((k.clone(), h))
        }
        None => {
            let (k, cover) = projective_space(2).map_err(|e| e.to_string())?;
            let h = hopf_cocycle(&k, &cover).map_err(|e| e.to_string())?.edge_signs().clone();
            Ok((k, h))
        }
    }
}

fn projective_cohomology(cfg: &AcceptanceConfig) -> Result<String, String> {
    let mut found = Vec::new();
    for n in 1..=3 {
        let k = match (&cfg.rp2, n) {
            (Some(k), 2) => k.clone(),
            _ => projective_space(n).map_err(|e| e.to_string())?.0,
        };
        let betti = betti_numbers(&k);
        ensure(betti == vec![1; n + 1] && k.dim() == n, || format!("RP{n}: Betti numbers {betti:?}"))?;
        found.push(format!("RP{n} {betti:?}"));
    }
    Ok(found.join(", "))
}

fn euler_powers(_: &AcceptanceConfig) -> Result<String, String> {
    for n in 1..=3 {
        let (k, cover) = projective_space(n).map_err(|e| e.to_string())?;
        let h = hopf_cocycle(&k, &cover).map_err(|e| e.to_string())?;
        for e in 1..=n + 1 {
            let report = euler_class_product(&[(&h, e)]).map_err(|e| e.to_string())?;
            ensure(report.nonzero == (e <= n), || format!("RP{n}: e(H)^{e} nonzero = {}", report.nonzero))?;
        }
    }
    let (rp1, cover) = projective_space(1).map_err(|e| e.to_string())?;
    let h = hopf_cocycle(&rp1, &cover).map_err(|e| e.to_string())?;
    let p = product_complex(&rp1, &rp1);
    let h1 = h.pullback(&p.complex, &p.first).map_err(|e| e.to_string())?;
    let h2 = h.pullback(&p.complex, &p.second).map_err(|e| e.to_string())?;
    let mixed = euler_class_product(&[(&h1, 1), (&h2, 1)]).map_err(|e| e.to_string())?;
    ensure(mixed.nonzero, || "e(H1)e(H2) vanishes on RP1 x RP1".into())?;
    Ok("e(H)^k nonzero exactly for k <= n (n = 1, 2, 3); e(H1)e(H2) nonzero on RP1 x RP1".into())
}

fn cup_obstruction(cfg: &AcceptanceConfig) -> Result<String, String> {
    let (k, h) = rp2_with_class(cfg)?;
    ensure(
        square_nonzero(&k, &h)?,
        || "square of the degree-1 class vanishes on RP2".into(),
    )?;
    for i in 0..50u64 {
        let seed = cfg.seed.wrapping_add(i);
        let parts = random_subcomplex_cover(&k, 2, seed).map_err(|e| e.to_string())?;
        match cup_vanishing_check(&k, &parts, &[h.clone(), h.clone()]).map_err(|e| e.to_string())? {
            CupVanishing::RestrictionNonzero { part, cycle, .. } => ensure(
                verify_restriction_certificate(&k, &parts[part], &h, &cycle),
                || format!("seed {seed}: restriction certificate does not verify"),
            )?,
            CupVanishing::Vanishes { .. } => return Err(format!("seed {seed}: every restriction vanished")),
        }
    }
    Ok("50 covers, each with a certified nonzero restriction".into())
}

fn square_nonzero(k: &SimplicialComplex, h: &Gf2Cochain) -> Result<bool, String> {
    let sq = crate::complex::cup_product(k, h, h).map_err(|e| e.to_string())?;
    Ok(!crate::complex::is_coboundary(k, &sq).map_err(|e| e.to_string())?.is_coboundary())
}

fn section_gluing(_: &AcceptanceConfig) -> Result<String, String> {
    let samples = rp1_gluing_demo(10_000).map_err(|e| e.to_string())?;
    let mut low = f64::INFINITY;
    for s in &samples {
        let coords = [s.t0.parse::<i64>(), s.t1.parse::<i64>()];
        let [Ok(a), Ok(b)] = coords else { return Err("unparsable sample".into()) };
        let p = ProjectivePoint::from_ints(&[a, b]).map_err(|e| e.to_string())?;
        let phis = CircleArcs.values(&p);
        for size in 1..=2 {
            let members = (0..2).combinations(size).filter(|j| in_refined_set(&phis, j)).count();
            ensure(members <= 1, || format!("refined sets of size {size} overlap at angle {}", s.angle))?;
        }
        low = low.min(s.norms.iter().copied().fold(0.0, f64::max));
    }
    ensure(low > 1e-9, || format!("glued section vanishes: min max norm {low:e}"))?;
    Ok(format!("min over 10000 samples of max_k |s_k| = {low:.3e}; refined sets disjoint"))
}

fn check_cover(cover: &GridCover, params: &[FactorParams], seed: u64, expect_witness: bool) -> Result<(), String> {
    let base = cover.base();
    let probes = default_probes(base, params, 100, seed).map_err(|e| e.to_string())?;
    let sampling = Sampling { seed, random_probes: 100 };
    let report = if params.len() == 1 {
        let probes = probes.into_iter().next().unwrap_or_default();
        kkm_check(cover, params[0].d, params[0].n, probes, sampling)
    } else {
        lebesgue_check(cover, params, probes, sampling)
    }
    .map_err(|e| e.to_string())?;
    if expect_witness {
        ensure(report.verdict == Verdict::Witness, || format!("seed {seed}: verdict {:?}", report.verdict))?;
        verify_report(&report, cover).map_err(|e| format!("seed {seed}: {e}"))
    } else {
        ensure(report.witness.is_none(), || format!("control seed {seed}: unexpected witness"))
    }
}

fn kkm_lebesgue(cfg: &AcceptanceConfig) -> Result<String, String> {
    let triangle = GridBase::simplex(3, 16).map_err(|e| e.to_string())?;
    let square = GridBase::new(BaseSpec { simplex_sizes: vec![2, 2], resolution: 16 }).map_err(|e| e.to_string())?;
    for i in 0..25u64 {
        let seed = cfg.seed.wrapping_add(i);
        let cover = random_grid_cover(triangle.clone(), 2, seed).map_err(|e| e.to_string())?;
        check_cover(&cover, &[FactorParams { d: 1, n: 2 }], seed, true)?;
        let cover = random_grid_cover(square.clone(), 2, seed).map_err(|e| e.to_string())?;
        check_cover(&cover, &[FactorParams { d: 1, n: 1 }, FactorParams { d: 1, n: 1 }], seed, true)?;
    }
    let control = vertex_star_cover(3, 16).map_err(|e| e.to_string())?;
    check_cover(&control, &[FactorParams { d: 1, n: 2 }], cfg.seed, false)?;
    Ok("50 covers with certified witnesses; vertex-star control has none".into())
}

fn random_points(rng: &mut ChaCha8Rng, count: usize, dim: usize, range: i64) -> Vec<Point> {
    (0..count)
        .map(|_| point_from_ints(&(0..dim).map(|_| rng.gen_range(-range..=range)).collect::<Vec<_>>()))
        .collect()
}

/// One to three random points.
fn some_points(rng: &mut ChaCha8Rng, dim: usize, range: i64) -> Vec<Point> {
    let count = rng.gen_range(1..=3);
    random_points(rng, count, dim, range)
}

fn centerpoints(cfg: &AcceptanceConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut depths = Vec::new();
    for i in 0..20 {
        let config = random_points(&mut rng, 12, 2, 50);
        let c = centerpoint(&config).map_err(|e| format!("config {i}: {e}"))?;
        let depth = planar_depth(&c.point, &config);
        ensure(depth >= 4, || format!("config {i}: depth {depth}"))?;
        depths.push(depth);
    }
    Ok(format!("20 configs, oracle depths {depths:?}"))
}

fn tverberg(cfg: &AcceptanceConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let run = |config: &[Point], r: usize, require: bool| -> Result<bool, String> {
        let rep = tverberg_partition(config, r).map_err(|e| e.to_string())?;
        ensure(rep.paths_agree, || format!("search routes disagree on {config:?}, r = {r}"))?;
        if require {
            let w = rep.witness().ok_or_else(|| format!("no partition for {config:?}, r = {r}"))?;
            let c = affine_point(w);
            for part in &w.parts {
                let members: Vec<Point> = part.iter().map(|&i| config[i].clone()).collect();
                let cert = crate::lp::in_hull(&c, &members).map_err(|e| e.to_string())?;
                ensure(cert.is_inside() && cert.verify(&c, &members), || "common point outside a part".into())?;
            }
        }
        Ok(rep.witness().is_some())
    };
    for _ in 0..20 {
        run(&random_points(&mut rng, 7, 2, 9), 2, true)?;
        run(&random_points(&mut rng, 4, 2, 9), 1, true)?;
    }
    let mut swept = 0;
    let mut below_found = 0;
    for d in 1..=2usize {
        for r in 1..=2usize {
            for m in r * (d + 1)..=9 {
                let threshold = m > r * (d + 1);
                if m > r * (d + 1) + 2 && !(d == 2 && r == 2) {
                    continue;
                }
                let found = run(&random_points(&mut rng, m, d, 6), r, threshold)?;
                swept += 1;
                if !threshold && found {
                    below_found += 1;
                }
            }
        }
    }
    Ok(format!(
        "20 seven-point and 20 four-point configs solved; routes agree on {swept} sweep instances ({below_found} below threshold solvable)"
    ))
}

fn random_hull(rng: &mut ChaCha8Rng, dim: usize, shared: Option<&Point>) -> ConvexSet {
    let mut points = some_points(rng, dim, 8);
    if let Some(z) = shared {
        points.push(z.clone());
    }
    ConvexSet::Hull { points }
}

fn helly_barany(cfg: &AcceptanceConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (mut helly_ok, mut helly_bad, mut barany_ok, mut barany_bad) = (0, 0, 0, 0);
    while helly_ok < 50 || helly_bad < 10 {
        let dim = rng.gen_range(1..=2);
        let m = dim + 1;
        let shared = random_points(&mut rng, 1, dim, 4).remove(0);
        let classes: Vec<Vec<ConvexSet>> = (0..m)
            .map(|_| {
                (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let z = rng.gen_bool(0.6).then_some(&shared);
                        random_hull(&mut rng, dim, z)
                    })
                    .collect()
            })
            .collect();
        let inst = HellyInstance { dim, classes };
        match colorful_helly(&inst) {
            Ok(w) => {
                ensure(verify_helly(&inst, &w), || "Helly witness does not verify".into())?;
                helly_ok += 1;
            }
            Err(ConvexError::Violation(v)) => match *v {
                Violation::EmptyColorfulIntersection { tuple } => {
                    let sets: Vec<&ConvexSet> = tuple.iter().enumerate().map(|(l, &v)| &inst.classes[l][v]).collect();
                    let empty = common_point(&sets, dim).map_err(|e| e.to_string())?.is_none();
                    ensure(empty, || format!("reported tuple {tuple:?} does intersect"))?;
                    helly_bad += 1;
                }
                other => return Err(format!("unexpected violation {other:?}")),
            },
            Err(e) => return Err(format!("Helly instance failed: {e}")),
        }
    }
    while barany_ok < 50 || barany_bad < 10 {
        let dim = rng.gen_range(1..=2);
        let m = dim + 1;
        let k = some_points(&mut rng, dim, 3);
        let classes: Vec<Vec<Point>> = (0..m).map(|_| some_points(&mut rng, dim, 12)).collect();
        match barany_dual(&k, &classes) {
            Ok(w) => {
                ensure(verify_barany(&k, &classes, &w), || "Barany functional fails the sign check".into())?;
                barany_ok += 1;
            }
            Err(ConvexError::Violation(v)) => match *v {
                Violation::ColorfulHullMeetsK { tuple, common } => {
                    let pts: Vec<Point> = tuple.iter().enumerate().map(|(l, &v)| classes[l][v].clone()).collect();
                    ensure(common.verify(&k, &pts), || format!("common point for {tuple:?} does not verify"))?;
                    barany_bad += 1;
                }
                other => return Err(format!("unexpected violation {other:?}")),
            },
            Err(e) => return Err(format!("Barany instance failed: {e}")),
        }
    }
    Ok(format!(
        "{helly_ok} Helly and {barany_ok} Barany conclusions certified; {helly_bad} and {barany_bad} violations certified"
    ))
}

fn lp_engine(cfg: &AcceptanceConfig) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut tally = BTreeMap::from([(true, 0), (false, 0)]);
    for i in 0..200 {
        let n = rng.gen_range(1..=6);
        let rows = rng.gen_range(1..=12);
        let mut sys = LinearSystem::new(n);
        for _ in 0..rows {
            if rng.gen_bool(0.25) {
                sys.push_nonneg(rng.gen_range(0..n));
                continue;
            }
            let coeffs = (0..n).map(|_| rational::int(rng.gen_range(-4..=4))).collect();
            let rel = [Relation::Le, Relation::Eq, Relation::Ge][rng.gen_range(0..3)];
            sys.push(coeffs, rel, rational::frac(rng.gen_range(-12..=12), rng.gen_range(1..=3)));
        }
        let cert = lp_feasible(&sys).map_err(|e| e.to_string())?;
        let expected = feasible_by_enumeration(&sys);
        ensure(cert.is_feasible() == expected, || format!("system {i}: simplex {} vs oracle {expected}", cert.is_feasible()))?;
        ensure(cert.verify(&sys), || format!("system {i}: certificate does not verify"))?;
        *tally.get_mut(&expected).expect("both keys present") += 1;
    }
    Ok(format!("200 systems match the oracle ({} feasible, {} infeasible)", tally[&true], tally[&false]))
}
