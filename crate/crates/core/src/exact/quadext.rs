use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Rational};
use crate::error::{Error, Result};

/// The field a scalar lives in: Q itself or Q(sqrt d) for square-free d != 0, 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Sqrt(BigInt),
}

impl Field {
    /// The smallest field containing both, if there is one we support.
    pub fn join(&self, other: &Field) -> Result<Field> {
        match (self, other) {
            (Field::Rational, f) | (f, Field::Rational) => Ok(f.clone()),
            (Field::Sqrt(d), Field::Sqrt(e)) if d == e => Ok(self.clone()),
            (Field::Sqrt(d), Field::Sqrt(e)) => Err(Error::MixedExtension(d.to_string(), e.to_string())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Sqrt(d) => write!(f, "Q(sqrt({d}))"),
        }
    }
}

/// `a + b*sqrt(d)`. Canonical: `b == 0` forces the rational field, so equal
/// values compare equal componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    field: Field,
}

impl QuadExt {
    pub fn rational(a: Rational) -> Self {
        QuadExt { a, b: Rational::zero(), field: Field::Rational }
    }

    /// Builds `a + b*sqrt(d)`; `d` must be square-free and not 0 or 1.
    pub fn new(a: Rational, b: Rational, d: BigInt) -> Result<Self> {
        let (s, core) = squarefree_decompose(&d);
        if d.is_zero() || !s.is_one() || core.is_one() {
            return Err(Error::Input(format!("{d} is not a square-free non-square")));
        }
        Ok(Self::canonical(a, b, Field::Sqrt(d)))
    }

    fn canonical(a: Rational, b: Rational, field: Field) -> Self {
        if b.is_zero() {
            QuadExt::rational(a)
        } else {
            QuadExt { a, b, field }
        }
    }

    pub fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }

    pub fn one() -> Self {
        QuadExt::rational(Rational::one())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn d(&self) -> BigInt {
        match &self.field {
            Field::Rational => BigInt::zero(),
            Field::Sqrt(d) => d.clone(),
        }
    }

    pub fn checked_add(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let field = self.field.join(&rhs.field)?;
        Ok(Self::canonical(&self.a + &rhs.a, &self.b + &rhs.b, field))
    }

    pub fn checked_sub(&self, rhs: &QuadExt) -> Result<QuadExt> {
        self.checked_add(&rhs.neg())
    }

    pub fn checked_mul(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let field = self.field.join(&rhs.field)?;
        let d = Rational::from_integer(match &field {
            Field::Rational => BigInt::zero(),
            Field::Sqrt(d) => d.clone(),
        });
        let a = &self.a * &rhs.a + &self.b * &rhs.b * d;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::canonical(a, b, field))
    }

    /// Multiplicative inverse via the conjugate; `None` for zero.
    pub fn inverse(&self) -> Option<QuadExt> {
        if self.is_zero() {
            return None;
        }
        let norm = self.norm();
        Some(Self::canonical(&self.a / &norm, -&self.b / &norm, self.field.clone()))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<QuadExt> {
        let inv = rhs.inverse().ok_or_else(|| Error::Input("division by zero".into()))?;
        self.checked_mul(&inv)
    }

    /// `a^2 - d b^2`, the field norm down to Q.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.d())
    }

    pub fn neg(&self) -> QuadExt {
        Self::canonical(-&self.a, -&self.b, self.field.clone())
    }

    pub fn scale(&self, k: &Rational) -> QuadExt {
        Self::canonical(&self.a * k, &self.b * k, self.field.clone())
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Field::Rational => write!(f, "{}", format_rational(&self.a)),
            Field::Sqrt(d) => {
                if !self.a.is_zero() {
                    write!(f, "{} ", format_rational(&self.a))?;
                    write!(f, "{} ", if self.b.is_negative() { "-" } else { "+" })?;
                } else if self.b.is_negative() {
                    write!(f, "-")?;
                }
                let b = self.b.abs();
                if b.is_one() {
                    write!(f, "sqrt({d})")
                } else {
                    write!(f, "{}*sqrt({d})", format_rational(&b))
                }
            }
        }
    }
}

/// Writes `n = s^2 * d` with `d` square-free (sign carried by `d`), by trial division.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let mut rest = n.abs();
    let mut s = BigInt::one();
    let mut d = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while rest.is_multiple_of(&p) {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            s *= p.pow(e / 2);
            if e % 2 == 1 {
                d *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    d *= rest;
    (s, d)
}

/// Roots of `a t^2 + b t + c` over Q or a single quadratic extension.
///
/// Two roots are returned for a genuine quadratic (equal when the discriminant
/// vanishes), ordered with the positive multiple of `sqrt d` first. When
/// `a = 0` the single root of the linear equation is returned.
pub fn quadratic_roots(a: &Rational, b: &Rational, c: &Rational) -> Result<Vec<QuadExt>> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() {
                Err(Error::Input("zero polynomial has no well-defined roots".into()))
            } else {
                Err(Error::NoRoot)
            };
        }
        return Ok(vec![QuadExt::rational(-c / b)]);
    }
    let disc = b * b - Rational::from_integer(BigInt::from(4)) * a * c;
    let two_a = a * Rational::from_integer(BigInt::from(2));
    let centre = -b / &two_a;
    if disc.is_zero() {
        return Ok(vec![QuadExt::rational(centre.clone()), QuadExt::rational(centre)]);
    }
    // disc = p/q = (p q) / q^2 and p q = s^2 d
    let (s, d) = squarefree_decompose(&(disc.numer() * disc.denom()));
    let mut coeff = Rational::new(s, disc.denom().clone()) / &two_a;
    if coeff.is_negative() {
        coeff = -coeff;
    }
    if d.is_one() {
        return Ok(vec![QuadExt::rational(&centre + &coeff), QuadExt::rational(&centre - &coeff)]);
    }
    let field = Field::Sqrt(d);
    Ok(vec![
        QuadExt::canonical(centre.clone(), coeff.clone(), field.clone()),
        QuadExt::canonical(centre, -coeff, field),
    ])
}
