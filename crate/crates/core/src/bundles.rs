//! Real line bundles as GF(2) edge cocycles and mod-2 Euler classes of their sums.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{
    cup_product, is_coboundary, is_cocycle, ComplexError, Gf2Cochain, QuotientMap, SimplicialComplex,
    SimplicialMap,
};
use crate::gf2::BitVec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("edge signs must be a degree-1 cochain, got degree {0}")]
    WrongDegree(usize),
    #[error("factors live on different complexes")]
    MismatchedComplexes,
    #[error("cover does not double cover the given complex: {0}")]
    BadCover(String),
}

/// Transition data of a line bundle: edge `uv` has sign 1 when the fibre flips along it.
#[derive(Clone, Debug)]
pub struct LineBundleCocycle<'a> {
    complex: &'a SimplicialComplex,
    edge_signs: Gf2Cochain,
}

impl<'a> LineBundleCocycle<'a> {
    pub fn new(complex: &'a SimplicialComplex, edge_signs: Gf2Cochain) -> Result<Self, BundleError> {
        if edge_signs.degree() != 1 {
            return Err(BundleError::WrongDegree(edge_signs.degree()));
        }
        if !is_cocycle(complex, &edge_signs)? {
            return Err(ComplexError::NotCocycle(1).into());
        }
        Ok(Self { complex, edge_signs })
    }

    pub fn trivial(complex: &'a SimplicialComplex) -> Self {
        Self { complex, edge_signs: Gf2Cochain::zero(complex, 1) }
    }

    pub fn complex(&self) -> &'a SimplicialComplex {
        self.complex
    }

    pub fn edge_signs(&self) -> &Gf2Cochain {
        &self.edge_signs
    }

    /// Pulls the bundle back along `map : source → self.complex`.
    pub fn pullback<'b>(
        &self,
        source: &'b SimplicialComplex,
        map: &SimplicialMap,
    ) -> Result<LineBundleCocycle<'b>, BundleError> {
        let signs = map.pullback(source, self.complex, &self.edge_signs)?;
        LineBundleCocycle::new(source, signs)
    }
}

/// Tautological line bundle of a projective space, read off from its double cover.
pub fn hopf_cocycle<'a>(
    rpn: &'a SimplicialComplex,
    cover: &QuotientMap,
) -> Result<LineBundleCocycle<'a>, BundleError> {
    cover.validate()?;
    if cover.target != *rpn {
        return Err(BundleError::BadCover("cover target differs from the complex".into()));
    }
    let mut lift: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in cover.source.vertices() {
        lift.entry(cover.vertex_map.vertex_map[&v]).or_insert(v);
    }
    let edges = rpn.simplices(1);
    let mut signs = BitVec::zeros(edges.len());
    for (i, e) in edges.iter().enumerate() {
        let (a, b) = (lift[&e[0]], lift[&e[1]]);
        if !cover.source.contains(&[a.min(b), a.max(b)]) {
            signs.set(i, true);
        }
    }
    LineBundleCocycle::new(rpn, Gf2Cochain::from_values(rpn, 1, signs)?)
}

/// A degree-k cochain with its cohomological nonvanishing decided.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub cochain: Gf2Cochain,
    pub nonzero: bool,
}

/// First Stiefel–Whitney class.
pub fn w1(bundle: &LineBundleCocycle) -> CohomologyClass {
    let nonzero = !is_coboundary(bundle.complex, &bundle.edge_signs)
        .expect("bundle signs are a cocycle")
        .is_coboundary();
    CohomologyClass { cochain: bundle.edge_signs.clone(), nonzero }
}

#[derive(Clone, Debug)]
pub struct EulerClassReport {
    pub class: Gf2Cochain,
    pub degree: usize,
    pub nonzero: bool,
    pub factorization: Vec<(Gf2Cochain, usize)>,
}

/// Mod-2 Euler class of `⊕ exponent·L` as the product of `w1(L)^exponent`.
pub fn euler_class_product(factors: &[(&LineBundleCocycle, usize)]) -> Result<EulerClassReport, BundleError> {
    let Some(first) = factors.first() else {
        return Err(BundleError::MismatchedComplexes);
    };
    let k = first.0.complex;
    if factors.iter().any(|(b, _)| !std::ptr::eq(b.complex, k) && b.complex != k) {
        return Err(BundleError::MismatchedComplexes);
    }
    let degree: usize = factors.iter().map(|(_, e)| e).sum();
    let factorization = factors.iter().map(|(b, e)| (b.edge_signs.clone(), *e)).collect();
    if degree > k.dim() {
        return Ok(EulerClassReport { class: Gf2Cochain::zero(k, degree), degree, nonzero: false, factorization });
    }
    let unit = BitVec::from_ones(k.count(0), 0..k.count(0));
    let mut class = Gf2Cochain::from_values(k, 0, unit)?;
    for (b, e) in factors {
        for _ in 0..*e {
            class = cup_product(k, &class, &b.edge_signs)?;
        }
    }
    let nonzero = !is_coboundary(k, &class)?.is_coboundary();
    Ok(EulerClassReport { class, degree, nonzero, factorization })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{coboundary, product_complex, projective_space};
    use proptest::prelude::*;

    #[test]
    fn hopf_on_rp1_is_essential() {
        let (rp1, cover) = projective_space(1).unwrap();
        let h = hopf_cocycle(&rp1, &cover).unwrap();
        assert!(w1(&h).nonzero);
        let up = cover.pullback(h.edge_signs()).unwrap();
        assert!(is_coboundary(&cover.source, &up).unwrap().is_coboundary());
    }

    #[test]
    fn trivial_bundle_has_zero_class() {
        let (rp2, _) = projective_space(2).unwrap();
        assert!(!w1(&LineBundleCocycle::trivial(&rp2)).nonzero);
    }

    #[test]
    fn hopf_powers_on_rp2() {
        let (rp2, cover) = projective_space(2).unwrap();
        let h = hopf_cocycle(&rp2, &cover).unwrap();
        for (e, expect) in [(1, true), (2, true), (3, false)] {
            let r = euler_class_product(&[(&h, e)]).unwrap();
            assert_eq!(r.degree, e);
            assert_eq!(r.nonzero, expect, "power {e}");
        }
    }

    #[test]
    fn product_of_projective_lines() {
        let (rp1, cover) = projective_space(1).unwrap();
        let h = hopf_cocycle(&rp1, &cover).unwrap();
        let p = product_complex(&rp1, &rp1);
        let h1 = h.pullback(&p.complex, &p.first).unwrap();
        let h2 = h.pullback(&p.complex, &p.second).unwrap();
        assert!(euler_class_product(&[(&h1, 1), (&h2, 1)]).unwrap().nonzero);
        assert!(!euler_class_product(&[(&h1, 2)]).unwrap().nonzero);
        let ab = euler_class_product(&[(&h1, 1), (&h2, 1)]).unwrap().class;
        let ba = euler_class_product(&[(&h2, 1), (&h1, 1)]).unwrap().class;
        assert!(is_coboundary(&p.complex, &ab.add(&ba)).unwrap().is_coboundary());
    }

    #[test]
    fn mismatched_complexes_rejected() {
        let (rp1, c1) = projective_space(1).unwrap();
        let (rp2, c2) = projective_space(2).unwrap();
        let a = hopf_cocycle(&rp1, &c1).unwrap();
        let b = hopf_cocycle(&rp2, &c2).unwrap();
        assert_eq!(euler_class_product(&[(&a, 1), (&b, 1)]).unwrap_err(), BundleError::MismatchedComplexes);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn w1_ignores_coboundary_perturbation(seed in any::<u64>()) {
            let (rp2, cover) = projective_space(2).unwrap();
            let h = hopf_cocycle(&rp2, &cover).unwrap();
            let n = rp2.count(0);
            let u = BitVec::from_ones(n, (0..n).filter(|i| (seed.rotate_left(*i as u32 * 7) >> 3) & 1 == 1));
            let du = coboundary(&rp2, &Gf2Cochain::from_values(&rp2, 0, u).unwrap()).unwrap();
            let h2 = LineBundleCocycle::new(&rp2, h.edge_signs().add(&du)).unwrap();
            prop_assert!(w1(&h2).nonzero);
            prop_assert!(euler_class_product(&[(&h2, 2)]).unwrap().nonzero);
        }
    }
}
