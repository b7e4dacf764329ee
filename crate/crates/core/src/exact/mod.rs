//! Exact arithmetic: rationals, quadratic extensions, projective points on
//! the line, integer matrices (Smith/Hermite forms, kernels) and an exact
//! simplex used for positive-combination feasibility.

mod lp;
mod matrix;
mod projpoint;
mod quadext;

pub use lp::{solve_positive_combination, LinearProgram, LpOutcome, StiemkeAlternative};
pub use matrix::{hermite_normal_form, integer_kernel, smith_normal_form, IntMatrix, Smith};
pub use projpoint::ProjPoint;
pub use quadext::{quadratic_roots, squarefree_decompose, Field, QuadExt};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"`, `"p"` or `"-inf"`-free rational strings.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Input(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// `"p/q"`, or a bare integer when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest k >= 1 such that k * v is integral.
pub fn order_from_vertex(v: &[Rational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom())).abs()
}

/// Componentwise primitive integer vector on the same ray as `v` (zero stays zero).
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let den = order_from_vertex(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
    primitive(&ints)
}

/// Divides out the gcd of the entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
