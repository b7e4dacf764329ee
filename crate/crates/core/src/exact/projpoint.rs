use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::{Field, QuadExt, Rational};
use crate::error::{Error, Result};

/// A point `(x : y)` of the projective line over Q or one quadratic extension.
///
/// Stored canonically with the last nonzero coordinate equal to 1, so derived
/// equality and hashing are projective equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint {
    x: QuadExt,
    y: QuadExt,
}

impl ProjPoint {
    pub fn new(x: QuadExt, y: QuadExt) -> Result<Self> {
        x.field().join(y.field())?;
        if y.is_zero() {
            if x.is_zero() {
                return Err(Error::Input("(0 : 0) is not a projective point".into()));
            }
            return Ok(Self::infinity());
        }
        let x = x.checked_div(&y)?;
        Ok(ProjPoint { x, y: QuadExt::one() })
    }

    pub fn from_rationals(x: Rational, y: Rational) -> Result<Self> {
        Self::new(x.into(), y.into())
    }

    /// The affine point `(t : 1)`.
    pub fn affine(t: QuadExt) -> Self {
        ProjPoint { x: t, y: QuadExt::one() }
    }

    pub fn rational(t: Rational) -> Self {
        Self::affine(t.into())
    }

    pub fn infinity() -> Self {
        ProjPoint { x: QuadExt::one(), y: QuadExt::zero() }
    }

    pub fn is_infinity(&self) -> bool {
        self.y.is_zero()
    }

    pub fn x(&self) -> &QuadExt {
        &self.x
    }

    pub fn y(&self) -> &QuadExt {
        &self.y
    }

    /// Affine coordinate `x / y`, or `None` at infinity.
    pub fn coordinate(&self) -> Option<&QuadExt> {
        (!self.is_infinity()).then_some(&self.x)
    }

    pub fn field(&self) -> &Field {
        self.x.field()
    }

    pub fn is_rational(&self) -> bool {
        *self.field() == Field::Rational
    }

    /// Image under `(x : y) -> (a x + b y : c x + d y)`.
    ///
    /// Returns `None` when the matrix kills the point (singular matrix).
    pub fn transform(&self, m: &[[Rational; 2]; 2]) -> Option<ProjPoint> {
        let row = |r: &[Rational; 2]| {
            self.x.scale(&r[0]).checked_add(&self.y.scale(&r[1])).expect("coordinates share a field")
        };
        ProjPoint::new(row(&m[0]), row(&m[1])).ok()
    }

    fn sort_key(&self) -> (bool, &Field, &Rational, &Rational) {
        (self.is_infinity(), self.x.field(), self.x.rational_part(), self.x.irrational_part())
    }
}

impl PartialOrd for ProjPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjPoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "(1:0)")
        } else if self.x.as_rational().is_some_and(|r| r.is_zero()) {
            write!(f, "(0:1)")
        } else {
            write!(f, "({}:1)", self.x)
        }
    }
}

impl Default for ProjPoint {
    fn default() -> Self {
        ProjPoint::rational(Rational::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use num_bigint::BigInt;

    #[test]
    fn projective_equality() {
        let p = ProjPoint::from_rationals(int(2), int(4)).unwrap();
        assert_eq!(p, ProjPoint::rational(rat(1, 2)));
        let q = ProjPoint::from_rationals(int(-3), int(0)).unwrap();
        assert_eq!(q, ProjPoint::infinity());
        assert!(ProjPoint::from_rationals(int(0), int(0)).is_err());
    }

    #[test]
    fn irrational_never_equals_rational() {
        let i = QuadExt::new(int(0), int(1), BigInt::from(-1)).unwrap();
        let p = ProjPoint::affine(i);
        assert_ne!(p, ProjPoint::rational(int(0)));
        assert!(!p.is_rational());
        let j = QuadExt::new(int(0), int(1), BigInt::from(-2)).unwrap();
        assert_ne!(p, ProjPoint::affine(j));
    }

    #[test]
    fn transform_by_inversion() {
        let inv = [[int(0), int(1)], [int(1), int(0)]];
        let p = ProjPoint::rational(int(2));
        assert_eq!(p.transform(&inv).unwrap(), ProjPoint::rational(rat(1, 2)));
        assert_eq!(ProjPoint::rational(int(0)).transform(&inv).unwrap(), ProjPoint::infinity());
    }

    proptest::proptest! {
        #[test]
        fn canonicalisation_is_idempotent(x in -5i64..5, y in -5i64..5, k in 1i64..5, b in -3i64..3) {
            proptest::prop_assume!(x != 0 || y != 0);
            let xq = if b == 0 { QuadExt::rational(int(x)) } else {
                QuadExt::new(int(x), int(b), BigInt::from(5)).unwrap()
            };
            let p = ProjPoint::new(xq.clone(), QuadExt::rational(int(y))).unwrap();
            let again = ProjPoint::new(p.x().clone(), p.y().clone()).unwrap();
            proptest::prop_assert_eq!(&p, &again);
            // scaling both coordinates gives the same point
            let scaled = ProjPoint::new(xq.scale(&int(k)), QuadExt::rational(int(y * k))).unwrap();
            proptest::prop_assert_eq!(&p, &scaled);
            // symmetric and reflexive
            proptest::prop_assert_eq!(&scaled, &p);
        }
    }
}
