//! Closed covers of subdivided simplices (and products) by unions of cells.
//!
//! Multiplicity is counted pointwise: a point lies in a set when some closed
//! cell of the set contains it, and the count is maximal at subdivision
//! points, so it is evaluated there.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Simplex, SimplicialComplex};
use crate::grid::{BaseSpec, GridBase, GridError};
use crate::rational::{self, Point, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("cell {cell} of set {label:?} is outside 0..{cells}")]
    CellOutOfRange { label: String, cell: usize, cells: usize },
    #[error("cover has no sets")]
    NoSets,
    #[error("sets miss {0} cells of the base")]
    NotCovering(usize),
    #[error("multiplicity {found} exceeds the bound {bound}")]
    MultiplicityExceeded { found: usize, bound: usize },
    #[error("parameters do not match the base: {0}")]
    ParameterMismatch(String),
}

/// Cover file layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFile {
    pub base: BaseSpec,
    pub sets: BTreeMap<String, Vec<usize>>,
}

/// Labelled unions of closed cells of a grid base.
#[derive(Clone, Debug)]
pub struct GridCover {
    base: GridBase,
    sets: BTreeMap<String, Vec<usize>>,
}

impl GridCover {
    /// Sorts and deduplicates the cell lists. The sets need not cover the base.
    pub fn new(base: GridBase, sets: BTreeMap<String, Vec<usize>>) -> Result<Self, CoverError> {
        if sets.is_empty() {
            return Err(CoverError::NoSets);
        }
        let cells = base.num_cells();
        let mut clean = BTreeMap::new();
        for (label, mut list) in sets {
            if let Some(&bad) = list.iter().find(|&&c| c >= cells) {
                return Err(CoverError::CellOutOfRange { label, cell: bad, cells });
            }
            list.sort_unstable();
            list.dedup();
            clean.insert(label, list);
        }
        Ok(Self { base, sets: clean })
    }

    pub fn from_file(file: CoverFile) -> Result<Self, CoverError> {
        Self::new(GridBase::new(file.base)?, file.sets)
    }

    pub fn to_file(&self) -> CoverFile {
        CoverFile { base: self.base.spec().clone(), sets: self.sets.clone() }
    }

    /// Assigns each cell to the labels chosen by `f` at its factor centroids.
    pub fn from_centroids<F>(base: GridBase, labels: &[String], f: F) -> Result<Self, CoverError>
    where
        F: Fn(&[Point]) -> Vec<usize>,
    {
        let mut sets: BTreeMap<String, Vec<usize>> = labels.iter().map(|l| (l.clone(), Vec::new())).collect();
        for c in 0..base.num_cells() {
            for i in f(&base.centroid(c)) {
                sets.get_mut(&labels[i]).expect("label index in range").push(c);
            }
        }
        sets.retain(|_, v| !v.is_empty());
        Self::new(base, sets)
    }

    pub fn base(&self) -> &GridBase {
        &self.base
    }

    pub fn sets(&self) -> &BTreeMap<String, Vec<usize>> {
        &self.sets
    }

    pub fn labels(&self) -> Vec<&str> {
        self.sets.keys().map(String::as_str).collect()
    }

    pub fn cells_of(&self, label: &str) -> &[usize] {
        self.sets.get(label).map_or(&[], Vec::as_slice)
    }

    /// Cells in no set, ascending.
    pub fn uncovered(&self) -> Vec<usize> {
        let mut covered = vec![false; self.base.num_cells()];
        for list in self.sets.values() {
            for &c in list {
                covered[c] = true;
            }
        }
        (0..covered.len()).filter(|&c| !covered[c]).collect()
    }

    pub fn require_covering(&self) -> Result<(), CoverError> {
        match self.uncovered().len() {
            0 => Ok(()),
            missing => Err(CoverError::NotCovering(missing)),
        }
    }

    /// Factor-`l` cells met by the projection of a set.
    pub fn projection(&self, label: &str, l: usize) -> Vec<usize> {
        self.cells_of(label).iter().map(|&c| self.base.decode(c)[l]).sorted().dedup().collect()
    }

    /// Number of sets containing each product subdivision point.
    pub fn point_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.base.num_points()];
        for list in self.sets.values() {
            let mut seen = vec![false; counts.len()];
            for &c in list {
                for p in self.base.cell_corner_ids(c) {
                    seen[p] = true;
                }
            }
            for (n, s) in counts.iter_mut().zip(seen) {
                *n += s as usize;
            }
        }
        counts
    }

    /// Connected components of the uncovered cells under facet adjacency.
    pub fn complement_components(&self) -> Vec<Vec<usize>> {
        let free: BTreeSet<usize> = self.uncovered().into_iter().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &free {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(c) = stack.pop() {
                for nb in self.base.neighbors(c) {
                    if free.contains(&nb) && seen.insert(nb) {
                        comp.push(nb);
                        stack.push(nb);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Largest number of sets sharing a point.
pub fn multiplicity(cover: &GridCover) -> usize {
    cover.point_counts().into_iter().max().unwrap_or(0)
}

/// Open cover obtained from a closed one: `U_i` is the set of points whose
/// top-weight face in their carrier cell lies in `A_i`.
///
/// `A_i ⊆ U_i ⊆` open star of `A_i`, and the labels at any point are those
/// of one face, so the multiplicity does not grow.
#[derive(Clone, Debug)]
pub struct FattenedCover<'a> {
    closed: &'a GridCover,
}

pub fn fatten_cover(cover: &GridCover, n: usize) -> Result<FattenedCover<'_>, CoverError> {
    cover.require_covering()?;
    let found = multiplicity(cover);
    if found > n {
        return Err(CoverError::MultiplicityExceeded { found, bound: n });
    }
    Ok(FattenedCover { closed: cover })
}

impl FattenedCover<'_> {
    /// Labels of the open sets containing a point given by factor coordinates.
    pub fn labels_at(&self, x: &[Point]) -> Result<Vec<String>, CoverError> {
        let base = self.closed.base();
        let (cell, weights) = base.locate(x)?;
        let parts = base.decode(cell);
        let top: Vec<Vec<usize>> = parts
            .iter()
            .zip(&weights)
            .zip(base.factors())
            .map(|((&c, w), f)| {
                let max = w.iter().max().expect("nonempty cell");
                f.cell(c).iter().zip(w).filter(|(_, x)| *x == max).map(|(&p, _)| p).collect()
            })
            .collect();
        Ok(self.labels_on_face(&top))
    }

    fn labels_on_face(&self, face: &[Vec<usize>]) -> Vec<String> {
        let base = self.closed.base();
        self.closed
            .sets()
            .iter()
            .filter(|(_, cells)| {
                cells.iter().any(|&c| {
                    base.decode(c)
                        .iter()
                        .zip(face)
                        .zip(base.factors())
                        .all(|((&fc, pts), f)| pts.iter().all(|p| f.cell(fc).contains(p)))
                })
            })
            .map(|(l, _)| l.clone())
            .collect()
    }

    /// Multiplicity by exhaustive evaluation at the barycenter of every face of every cell.
    pub fn multiplicity(&self) -> usize {
        let base = self.closed.base();
        let mut best = 0;
        for c in 0..base.num_cells() {
            let parts = base.decode(c);
            let faces = parts
                .iter()
                .zip(base.factors())
                .map(|(&fc, f)| f.cell(fc).iter().copied().powerset().filter(|s| !s.is_empty()).collect::<Vec<_>>())
                .multi_cartesian_product();
            for face in faces {
                let x: Vec<Point> = face
                    .iter()
                    .zip(base.factors())
                    .map(|(pts, f)| {
                        let corners: Vec<Point> = pts.iter().map(|&p| f.point(p)).collect();
                        let w = rational::frac(1, pts.len() as i64);
                        (0..f.simplex_size()).map(|v| rational::sum(corners.iter().map(|c| &c[v])) * &w).collect()
                    })
                    .collect();
                let labels = self.labels_at(&x).expect("face barycenter lies in the base");
                best = best.max(labels.len());
            }
        }
        best
    }
}

/// Open thickening of a cover of a complex by subcomplexes: for each part,
/// the simplices of the complex lying in it. A point belongs to part `i`
/// when its top-weight face is one of these.
pub fn fatten_subcomplex_cover(
    k: &SimplicialComplex,
    parts: &[SimplicialComplex],
    n: usize,
) -> Result<Vec<Vec<Simplex>>, CoverError> {
    let found = subcomplex_multiplicity(k, parts)?;
    if found > n {
        return Err(CoverError::MultiplicityExceeded { found, bound: n });
    }
    Ok(parts
        .iter()
        .map(|a| (0..=k.dim()).flat_map(|d| k.simplices(d).iter().filter(|s| a.contains(s)).cloned()).collect())
        .collect())
}

/// Largest number of parts sharing a vertex; checks that the parts are
/// subcomplexes whose union is the whole complex.
pub fn subcomplex_multiplicity(k: &SimplicialComplex, parts: &[SimplicialComplex]) -> Result<usize, CoverError> {
    if parts.is_empty() {
        return Err(CoverError::NoSets);
    }
    for a in parts {
        a.is_subcomplex_of(k)?;
    }
    let missing = k.facets().iter().filter(|f| !parts.iter().any(|a| a.contains(f))).count();
    if missing > 0 {
        return Err(CoverError::NotCovering(missing));
    }
    Ok(k.vertices().iter().map(|v| parts.iter().filter(|a| a.contains(&[*v])).count()).max().unwrap_or(0))
}

/// Rows of bricks on Δ¹×Δ¹, each row shifted by half a brick.
pub fn brick_cover(resolution: usize, width: usize, height: usize) -> Result<GridCover, CoverError> {
    let base = GridBase::new(BaseSpec { simplex_sizes: vec![2, 2], resolution })?;
    let mut sets: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for i in 0..resolution {
        for j in 0..resolution {
            let row = j / height;
            let shift = (row % 2) * (width / 2);
            let brick = (i + shift) / width;
            sets.entry(format!("r{row}b{brick}")).or_default().push(base.encode(&[i, j]));
        }
    }
    GridCover::new(base, sets)
}

/// Closed vertex stars `{t : t_v ≥ 1/#V}` of Δ(V), assigned by cell centroid.
pub fn vertex_star_cover(vertices: usize, resolution: usize) -> Result<GridCover, CoverError> {
    let labels: Vec<String> = (0..vertices).map(|v| format!("v{v}")).collect();
    let third = rational::frac(1, vertices as i64);
    GridCover::from_centroids(GridBase::simplex(vertices, resolution)?, &labels, |x| {
        (0..vertices).filter(|&v| x[0][v] >= third).collect()
    })
}

/// Δ² split by `t_0 ≥ t_1` at the cell centroid.
pub fn halves_cover(resolution: usize) -> Result<GridCover, CoverError> {
    let labels = vec!["left".to_string(), "right".to_string()];
    GridCover::from_centroids(GridBase::simplex(3, resolution)?, &labels, |x| {
        vec![if x[0][0] >= x[0][1] { 0 } else { 1 }]
    })
}

/// Seeded cover by 2–4 stripes of a random linear functional, each stripe
/// optionally grown into its neighbours, with multiplicity at most `bound`.
pub fn random_grid_cover(base: GridBase, bound: usize, seed: u64) -> Result<GridCover, CoverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dims: usize = base.spec().simplex_sizes.iter().sum();
    let cells = base.num_cells();
    let centroids: Vec<Point> = (0..cells).map(|c| base.centroid(c).concat()).collect();
    for attempt in 0..200 {
        let w: Vec<Rational> = (0..dims).map(|_| rational::int(rng.gen_range(-6..=6))).collect();
        let values: Vec<Rational> = centroids.iter().map(|p| rational::dot(&w, p)).collect();
        let (lo, hi) = (values.iter().min().unwrap().clone(), values.iter().max().unwrap().clone());
        if lo == hi {
            continue;
        }
        let stripes = if attempt > 150 { 2 } else { rng.gen_range(2..=4) };
        let mut cuts: Vec<Rational> = (1..stripes)
            .map(|_| &lo + (&hi - &lo) * rational::frac(rng.gen_range(1..100), 100))
            .collect();
        cuts.sort();
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); stripes];
        for (c, v) in values.iter().enumerate() {
            sets[cuts.iter().filter(|cut| v >= *cut).count()].insert(c);
        }
        for s in &mut sets {
            if rng.gen_bool(0.5) {
                let grown: Vec<usize> = s.iter().flat_map(|&c| base.neighbors(c)).filter(|_| rng.gen_bool(0.5)).collect();
                s.extend(grown);
            }
        }
        let map: BTreeMap<String, Vec<usize>> = sets
            .into_iter()
            .filter(|s| !s.is_empty())
            .enumerate()
            .map(|(i, s)| (i.to_string(), s.into_iter().collect()))
            .collect();
        let cover = GridCover::new(base.clone(), map)?;
        if multiplicity(&cover) <= bound {
            return Ok(cover);
        }
    }
    // A two-set cover never exceeds multiplicity 2.
    let half = cells / 2;
    let sets = BTreeMap::from([("0".to_string(), (0..half).collect()), ("1".to_string(), (half..cells).collect())]);
    GridCover::new(base, sets)
}

/// Seeded cover of a complex by 2 or 3 subcomplexes (closures of facet
/// groups, sometimes overlapping) with vertex multiplicity at most `bound`.
pub fn random_subcomplex_cover(
    k: &SimplicialComplex,
    bound: usize,
    seed: u64,
) -> Result<Vec<SimplicialComplex>, CoverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let facets = k.facets();
    let build = |groups: Vec<Vec<Simplex>>| -> Result<Vec<SimplicialComplex>, CoverError> {
        groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .map(|g| SimplicialComplex::from_facets(&g).map_err(CoverError::from))
            .collect()
    };
    for _ in 0..500 {
        let parts = rng.gen_range(2..=3);
        let mut groups: Vec<Vec<Simplex>> = vec![Vec::new(); parts];
        for f in &facets {
            groups[rng.gen_range(0..parts)].push(f.clone());
            if rng.gen_bool(0.15) {
                groups[rng.gen_range(0..parts)].push(f.clone());
            }
        }
        let cover = build(groups)?;
        if subcomplex_multiplicity(k, &cover)? <= bound {
            return Ok(cover);
        }
    }
    let split = facets.len() / 2;
    build(vec![facets[..split].to_vec(), facets[split..].to_vec()])
}
