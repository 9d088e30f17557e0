//! Edgewise subdivisions of simplices and products of them.
//!
//! A point of the subdivision of Δ(V) at resolution `N` is a composition
//! `a` of `N` into `#V` parts, standing for the weights `a / N`. In the
//! cumulative coordinates `y_j = a_j + … + a_k` the simplex becomes the
//! order region `N ≥ y_1 ≥ … ≥ y_k ≥ 0`, and the cells are the Kuhn
//! simplices of the unit cube lattice lying in that region.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Point, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("a simplex needs at least one vertex")]
    EmptySimplex,
    #[error("resolution must be positive")]
    ZeroResolution,
    #[error("product has no factors")]
    NoFactors,
    #[error("{0} cells exceed the cell budget")]
    TooManyCells(usize),
    #[error("point does not lie in the simplex: {0}")]
    NotInSimplex(String),
}

/// Upper bound on the number of cells of any base.
pub const CELL_BUDGET: usize = 1 << 20;

#[derive(Clone, Debug)]
pub struct SimplexGrid {
    vertices: usize,
    resolution: usize,
    points: Vec<Vec<u32>>,
    point_index: HashMap<Vec<u32>, usize>,
    cells: Vec<Vec<usize>>,
    cell_index: HashMap<Vec<usize>, usize>,
    neighbors: Vec<Vec<usize>>,
}

impl SimplexGrid {
    /// Subdivision of the simplex on `vertices` vertices into `N^(vertices-1)` cells.
    pub fn new(vertices: usize, resolution: usize) -> Result<Self, GridError> {
        if vertices == 0 {
            return Err(GridError::EmptySimplex);
        }
        if resolution == 0 {
            return Err(GridError::ZeroResolution);
        }
        let k = vertices - 1;
        let count = resolution.checked_pow(k as u32).unwrap_or(usize::MAX);
        if count > CELL_BUDGET {
            return Err(GridError::TooManyCells(count));
        }
        let n = resolution as u32;
        let points: Vec<Vec<u32>> = compositions(n, vertices);
        let point_index: HashMap<Vec<u32>, usize> =
            points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

        let mut cells = Vec::with_capacity(count);
        for base in non_increasing(k, n - 1) {
            for perm in (0..k).permutations(k) {
                // Equal neighbouring coordinates must be raised in order to stay in the region.
                let ok = (0..k.saturating_sub(1)).all(|j| {
                    base[j] != base[j + 1]
                        || perm.iter().position(|&x| x == j) < perm.iter().position(|&x| x == j + 1)
                });
                if !ok {
                    continue;
                }
                let mut y = base.clone();
                let mut cell = vec![point_index[&from_cumulative(&y, n)]];
                for &j in &perm {
                    y[j] += 1;
                    cell.push(point_index[&from_cumulative(&y, n)]);
                }
                cells.push(cell);
            }
        }

        let mut by_facet: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (c, cell) in cells.iter().enumerate() {
            if cell.len() < 2 {
                continue;
            }
            for skip in 0..cell.len() {
                let facet: Vec<usize> =
                    cell.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).sorted().collect();
                by_facet.entry(facet).or_default().push(c);
            }
        }
        let mut neighbors = vec![Vec::new(); cells.len()];
        for cs in by_facet.values() {
            for &a in cs {
                for &b in cs {
                    if a != b {
                        neighbors[a].push(b);
                    }
                }
            }
        }
        for nb in &mut neighbors {
            nb.sort_unstable();
            nb.dedup();
        }
        let cell_index = cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Ok(Self { vertices, resolution, points, point_index, cells, cell_index, neighbors })
    }

    pub fn simplex_size(&self) -> usize {
        self.vertices
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Lattice masses of a subdivision point.
    pub fn point_masses(&self, p: usize) -> &[u32] {
        &self.points[p]
    }

    pub fn point_id(&self, masses: &[u32]) -> Option<usize> {
        self.point_index.get(masses).copied()
    }

    /// Barycentric coordinates of a subdivision point.
    pub fn point(&self, p: usize) -> Point {
        let n = self.resolution as i64;
        self.points[p].iter().map(|&a| rational::frac(a as i64, n)).collect()
    }

    /// Point ids of a cell, in path order.
    pub fn cell(&self, c: usize) -> &[usize] {
        &self.cells[c]
    }

    pub fn cell_points(&self, c: usize) -> Vec<Point> {
        self.cells[c].iter().map(|&p| self.point(p)).collect()
    }

    pub fn centroid(&self, c: usize) -> Point {
        let pts = self.cell_points(c);
        let w = rational::frac(1, pts.len() as i64);
        (0..self.vertices).map(|v| rational::sum(pts.iter().map(|p| &p[v])) * &w).collect()
    }

    /// Cells sharing a codimension-one face with `c`.
    pub fn neighbors(&self, c: usize) -> &[usize] {
        &self.neighbors[c]
    }

    /// Cell containing `t` and the barycentric weights of `t` on its points.
    pub fn locate(&self, t: &[Rational]) -> Result<(usize, Vec<Rational>), GridError> {
        if t.len() != self.vertices
            || t.iter().any(|x| x < &rational::zero())
            || rational::sum(t) != rational::one()
        {
            return Err(GridError::NotInSimplex(format!("{t:?}")));
        }
        let k = self.vertices - 1;
        if k == 0 {
            return Ok((0, vec![rational::one()]));
        }
        let n = Rational::from_integer(BigInt::from(self.resolution));
        // Scaled cumulative coordinates y_j, j = 1..=k.
        let y: Vec<Rational> = (1..=k).map(|j| rational::sum(&t[j..]) * &n).collect();
        let base: Vec<u32> = y
            .iter()
            .map(|v| v.floor().to_integer().to_u32().unwrap_or(0).min(self.resolution as u32 - 1))
            .collect();
        let frac: Vec<Rational> =
            y.iter().zip(&base).map(|(v, &b)| v - Rational::from_integer(BigInt::from(b))).collect();
        let perm: Vec<usize> = (0..k).sorted_by(|&a, &b| frac[b].cmp(&frac[a]).then(a.cmp(&b))).collect();
        let mut cur = base.clone();
        let mut ids = vec![self.point_index[&from_cumulative(&cur, self.resolution as u32)]];
        for &j in &perm {
            cur[j] += 1;
            ids.push(self.point_index[&from_cumulative(&cur, self.resolution as u32)]);
        }
        let c = self
            .cell_index
            .get(&ids)
            .copied()
            .ok_or_else(|| GridError::NotInSimplex(format!("{t:?}")))?;
        let mut w = Vec::with_capacity(k + 1);
        w.push(rational::one() - &frac[perm[0]]);
        for i in 1..k {
            w.push(&frac[perm[i - 1]] - &frac[perm[i]]);
        }
        w.push(frac[perm[k - 1]].clone());
        Ok((c, w))
    }
}

fn compositions(n: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            compositions(n - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn non_increasing(len: usize, max: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    (0..=max)
        .flat_map(|first| {
            non_increasing(len - 1, first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Masses from cumulative coordinates `y_1 ≥ … ≥ y_k`.
fn from_cumulative(y: &[u32], n: u32) -> Vec<u32> {
    let k = y.len();
    let mut a = Vec::with_capacity(k + 1);
    a.push(n - y.first().copied().unwrap_or(0));
    for j in 0..k {
        a.push(y[j] - y.get(j + 1).copied().unwrap_or(0));
    }
    a
}

/// Shape of a grid base, as stored in cover files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseSpec {
    pub simplex_sizes: Vec<usize>,
    pub resolution: usize,
}

/// Product of subdivided simplices; product cells are tuples of factor
/// cells with mixed-radix ids, factor 0 most significant.
#[derive(Clone, Debug)]
pub struct GridBase {
    factors: Vec<SimplexGrid>,
    spec: BaseSpec,
}

impl GridBase {
    pub fn new(spec: BaseSpec) -> Result<Self, GridError> {
        if spec.simplex_sizes.is_empty() {
            return Err(GridError::NoFactors);
        }
        let factors: Vec<SimplexGrid> = spec
            .simplex_sizes
            .iter()
            .map(|&v| SimplexGrid::new(v, spec.resolution))
            .collect::<Result<_, _>>()?;
        let total = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.num_cells())).unwrap_or(usize::MAX);
        if total > CELL_BUDGET {
            return Err(GridError::TooManyCells(total));
        }
        Ok(Self { factors, spec })
    }

    pub fn simplex(vertices: usize, resolution: usize) -> Result<Self, GridError> {
        Self::new(BaseSpec { simplex_sizes: vec![vertices], resolution })
    }

    pub fn spec(&self) -> &BaseSpec {
        &self.spec
    }

    pub fn factors(&self) -> &[SimplexGrid] {
        &self.factors
    }

    pub fn num_cells(&self) -> usize {
        self.factors.iter().map(SimplexGrid::num_cells).product()
    }

    pub fn num_points(&self) -> usize {
        self.factors.iter().map(SimplexGrid::num_points).product()
    }

    pub fn decode(&self, mut id: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (l, f) in self.factors.iter().enumerate().rev() {
            out[l] = id % f.num_cells();
            id /= f.num_cells();
        }
        out
    }

    pub fn encode(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.factors).fold(0, |acc, (&c, f)| acc * f.num_cells() + c)
    }

    /// Product point id from factor point ids.
    pub fn encode_point(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.factors).fold(0, |acc, (&p, f)| acc * f.num_points() + p)
    }

    pub fn decode_point(&self, mut id: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (l, f) in self.factors.iter().enumerate().rev() {
            out[l] = id % f.num_points();
            id /= f.num_points();
        }
        out
    }

    /// Factor coordinates of a product point.
    pub fn point(&self, id: usize) -> Vec<Point> {
        self.decode_point(id).iter().zip(&self.factors).map(|(&p, f)| f.point(p)).collect()
    }

    /// Product point ids of the corners of a product cell.
    pub fn cell_corner_ids(&self, id: usize) -> Vec<usize> {
        let parts = self.decode(id);
        parts
            .iter()
            .zip(&self.factors)
            .map(|(&c, f)| f.cell(c).to_vec())
            .multi_cartesian_product()
            .map(|corner| self.encode_point(&corner))
            .collect()
    }

    /// Product cells sharing a codimension-one face with `id`.
    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let parts = self.decode(id);
        let mut out = Vec::new();
        for (l, f) in self.factors.iter().enumerate() {
            for &nb in f.neighbors(parts[l]) {
                let mut q = parts.clone();
                q[l] = nb;
                out.push(self.encode(&q));
            }
        }
        out.sort_unstable();
        out
    }

    /// Concatenated factor centroids.
    pub fn centroid(&self, id: usize) -> Vec<Point> {
        self.decode(id).iter().zip(&self.factors).map(|(&c, f)| f.centroid(c)).collect()
    }

    /// Cell containing a point given by its factor coordinates, with
    /// barycentric weights on each factor cell.
    pub fn locate(&self, x: &[Point]) -> Result<(usize, Vec<Vec<Rational>>), GridError> {
        if x.len() != self.factors.len() {
            return Err(GridError::NotInSimplex(format!("{} factors expected", self.factors.len())));
        }
        let mut parts = Vec::new();
        let mut weights = Vec::new();
        for (f, t) in self.factors.iter().zip(x) {
            let (c, w) = f.locate(t)?;
            parts.push(c);
            weights.push(w);
        }
        Ok((self.encode(&parts), weights))
    }
}

/// Whether `t` is zero in every coordinate listed.
pub fn vanishes_on(t: &[Rational], coords: &[usize]) -> bool {
    coords.iter().all(|&v| t[v].is_zero())
}
