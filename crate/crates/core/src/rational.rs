//! Exact rationals and their `"p/q"` string encoding.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

/// Rational point in some coordinate space.
pub type Point = Vec<Rational>;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed rational {0:?}: expected \"p/q\" or an integer")]
pub struct ParseRationalError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn parse(s: &str) -> Result<Rational, ParseRationalError> {
    let t = s.trim();
    let bad = || ParseRationalError(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => BigInt::from_str(t).map(Rational::from_integer).map_err(|_| bad()),
    }
}

/// Canonical `"p/q"` form; integers print without a denominator.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators and denominators: scale both down together.
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n.max(d) - 1000).max(0) as usize;
        let nn = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let dd = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        nn / dd
    })
}

/// Nearest rational with denominator `den`.
pub fn from_f64_rounded(x: f64, den: i64) -> Rational {
    frac((x * den as f64).round() as i64, den)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    assert_eq!(a.len(), b.len(), "dot of mismatched lengths");
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(it: I) -> Rational {
    it.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

pub fn linf_distance(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).max().unwrap_or_else(Rational::zero)
}

pub fn point_from_ints(xs: &[i64]) -> Point {
    xs.iter().map(|&x| int(x)).collect()
}

/// Serde adapter: one rational as a string.
/// Reduced row echelon form; returns pivot columns.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![zero(); cols];
            x[free] = one();
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = -m[i][free].clone();
            }
            x
        })
        .collect()
}

pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = RawRational::deserialize(d)?;
        raw.into_rational().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: a vector of rationals as strings.
pub mod serde_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(format).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<RawRational>::deserialize(d)?;
        raw.into_iter().map(|r| r.into_rational().map_err(serde::de::Error::custom)).collect()
    }
}

/// Serde adapter: a list of points.
pub mod serde_points {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[Point], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<Vec<String>> = v.iter().map(|p| p.iter().map(format).collect()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Point>, D::Error> {
        let raw = Vec::<Vec<RawRational>>::deserialize(d)?;
        raw.into_iter()
            .map(|p| {
                p.into_iter()
                    .map(|r| r.into_rational().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Accepts either `"p/q"` strings or JSON integers on input.
#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Str(String),
    Int(i64),
}

impl RawRational {
    fn into_rational(self) -> Result<Rational, ParseRationalError> {
        match self {
            RawRational::Str(s) => parse(&s),
            RawRational::Int(i) => Ok(int(i)),
        }
    }
}
