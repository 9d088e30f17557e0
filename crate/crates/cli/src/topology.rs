use std::path::Path;

use kkmforge::bundles::{euler_class_product, hopf_cocycle};
use kkmforge::checks::{cup_vanishing_check, verify_restriction_certificate, CupVanishing};
use kkmforge::complex::{
    betti_numbers, coboundary, cohomology_basis, cup_product, product_complex, projective_space, Gf2Cochain,
    Simplex, SimplicialComplex,
};
use serde::{Deserialize, Serialize};

use crate::io::{read_json, CmdResult, Failure, Outcome};

#[derive(Deserialize)]
pub struct ComplexFile {
    pub facets: Vec<Simplex>,
}

pub fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    let file: ComplexFile = read_json(path)?;
    complex_from(&file.facets)
}

fn complex_from(facets: &[Simplex]) -> Result<SimplicialComplex, Failure> {
    SimplicialComplex::from_facets(facets).map_err(|e| Failure::Input(format!("complex: {e}")))
}

#[derive(Serialize)]
struct CohomologyReport {
    vertices: usize,
    f_vector: Vec<usize>,
    euler_characteristic: i64,
    betti: Vec<usize>,
    representatives: Vec<DegreeBasis>,
}

#[derive(Serialize)]
struct DegreeBasis {
    degree: usize,
    classes: Vec<Vec<Simplex>>,
}

pub fn cohomology(path: &Path, degree: Option<usize>) -> CmdResult {
    let k = load_complex(path)?;
    let degrees: Vec<usize> = match degree {
        Some(d) if d > k.dim() => return Err(Failure::Input(format!("degree {d} above dimension {}", k.dim()))),
        Some(d) => vec![d],
        None => (0..=k.dim()).collect(),
    };
    let representatives = degrees
        .iter()
        .map(|&d| {
            let basis = cohomology_basis(&k, d).map_err(Failure::input)?;
            Ok(DegreeBasis { degree: d, classes: basis.basis.iter().map(|c| c.support(&k)).collect() })
        })
        .collect::<Result<_, Failure>>()?;
    Outcome::new(
        0,
        CohomologyReport {
            vertices: k.vertices().len(),
            f_vector: k.f_vector(),
            euler_characteristic: k.euler_characteristic(),
            betti: betti_numbers(&k),
            representatives,
        },
    )
}

#[derive(Serialize)]
struct EulerReport {
    dims: Vec<usize>,
    exponents: Vec<usize>,
    degree: usize,
    nonzero: bool,
    class_support_size: usize,
}

/// Cup power of the Hopf classes on a product of at most two projective spaces.
pub fn euler(dims: &[usize], exponents: &[usize]) -> CmdResult {
    if dims.is_empty() || dims.len() > 2 || dims.len() != exponents.len() {
        return Err(Failure::Input("give one or two dimensions, each with an exponent".into()));
    }
    let spaces: Vec<_> = dims.iter().map(|&n| projective_space(n).map_err(Failure::input)).collect::<Result<_, _>>()?;
    let bundles: Vec<_> =
        spaces.iter().map(|(k, c)| hopf_cocycle(k, c).map_err(Failure::input)).collect::<Result<_, _>>()?;
    let report = if bundles.len() == 1 {
        euler_class_product(&[(&bundles[0], exponents[0])]).map_err(Failure::input)?
    } else {
        let p = product_complex(&spaces[0].0, &spaces[1].0);
        let h1 = bundles[0].pullback(&p.complex, &p.first).map_err(Failure::input)?;
        let h2 = bundles[1].pullback(&p.complex, &p.second).map_err(Failure::input)?;
        euler_class_product(&[(&h1, exponents[0]), (&h2, exponents[1])]).map_err(Failure::input)?
    };
    Outcome::new(
        0,
        EulerReport {
            dims: dims.to_vec(),
            exponents: exponents.to_vec(),
            degree: report.degree,
            nonzero: report.nonzero,
            class_support_size: report.class.values().count_ones(),
        },
    )
}

#[derive(Deserialize)]
struct ClassFile {
    degree: usize,
    support: Vec<Simplex>,
}

#[derive(Deserialize)]
struct CupVanishFile {
    complex: Vec<Simplex>,
    parts: Vec<Vec<Simplex>>,
    classes: Vec<ClassFile>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CupVanishReport {
    Vanishes { product: Vec<Simplex>, primitive: Vec<Simplex> },
    RestrictionNonzero { part: usize, class: usize, cycle: Vec<Simplex> },
}

struct CupVanishInput {
    k: SimplicialComplex,
    parts: Vec<SimplicialComplex>,
    classes: Vec<Gf2Cochain>,
}

fn load_cupvanish(path: &Path) -> Result<CupVanishInput, Failure> {
    let file: CupVanishFile = read_json(path)?;
    let k = complex_from(&file.complex)?;
    let parts = file.parts.iter().map(|p| complex_from(p)).collect::<Result<_, _>>()?;
    let classes = file
        .classes
        .iter()
        .map(|c| Gf2Cochain::from_support(&k, c.degree, &c.support).map_err(Failure::input))
        .collect::<Result<_, _>>()?;
    Ok(CupVanishInput { k, parts, classes })
}

pub fn cupvanish(path: &Path) -> CmdResult {
    let CupVanishInput { k, parts, classes } = load_cupvanish(path)?;
    match cup_vanishing_check(&k, &parts, &classes).map_err(Failure::input)? {
        CupVanishing::Vanishes { product, primitive } => Outcome::new(
            0,
            CupVanishReport::Vanishes { product: product.support(&k), primitive: primitive.support(&k) },
        ),
        CupVanishing::RestrictionNonzero { part, class, cycle } => {
            let degree = classes[class].degree();
            let simplices = parts[part].simplices(degree);
            let cycle = cycle.iter_ones().map(|i| simplices[i].clone()).collect();
            Outcome::new(1, CupVanishReport::RestrictionNonzero { part, class, cycle })
        }
    }
}

pub fn verify_cupvanish(path: &Path, report: &CupVanishReport) -> Result<bool, Failure> {
    let CupVanishInput { k, parts, classes } = load_cupvanish(path)?;
    Ok(match report {
        CupVanishReport::Vanishes { product, primitive } => {
            let mut expected = classes[0].clone();
            for c in &classes[1..] {
                expected = cup_product(&k, &expected, c).map_err(Failure::input)?;
            }
            let Some(degree) = expected.degree().checked_sub(1) else { return Ok(false) };
            let claimed = Gf2Cochain::from_support(&k, expected.degree(), product).map_err(Failure::input)?;
            let primitive = Gf2Cochain::from_support(&k, degree, primitive).map_err(Failure::input)?;
            claimed == expected && coboundary(&k, &primitive).map_err(Failure::input)? == expected
        }
        CupVanishReport::RestrictionNonzero { part, class, cycle } => {
            let (Some(p), Some(c)) = (parts.get(*part), classes.get(*class)) else { return Ok(false) };
            let simplices = p.simplices(c.degree());
            let mut bits = kkmforge::gf2::BitVec::zeros(simplices.len());
            for s in cycle {
                match simplices.iter().position(|t| t == s) {
                    Some(i) => bits.set(i, true),
                    None => return Ok(false),
                }
            }
            verify_restriction_certificate(&k, p, c, &bits)
        }
    })
}
