//! Exact arithmetic in real quadratic fields Q(√d).
//!
//! A [`QScalar`] stores `a + b·√d` with arbitrary-precision rational `a`, `b`.
//! The discriminant `d` travels with every value; `d = 0` encodes a pure
//! rational, which is compatible with any field. Combining two values with
//! different nonzero `d` is a caller bug and panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QScalar {
    a: BigRational,
    b: BigRational,
    d: u32,
}

impl QScalar {
    /// Canonical constructor: a pure rational is always tagged `d = 0`.
    pub fn new(a: BigRational, b: BigRational, d: u32) -> Self {
        if b.is_zero() || d == 0 {
            QScalar {
                a,
                b: BigRational::zero(),
                d: 0,
            }
        } else {
            QScalar { a, b, d }
        }
    }

    pub fn rational(a: BigRational) -> Self {
        Self::new(a, BigRational::zero(), 0)
    }

    pub fn from_int(v: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The value √d.
    pub fn sqrt_of(d: u32) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rat_part(&self) -> &BigRational {
        &self.a
    }

    pub fn irr_part(&self) -> &BigRational {
        &self.b
    }

    pub fn field(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    /// Exact integer extraction; `None` if the value is not a rational integer.
    pub fn to_bigint(&self) -> Option<BigInt> {
        if self.d != 0 || !self.a.is_integer() {
            return None;
        }
        Some(self.a.to_integer())
    }

    fn join_field(&self, other: &Self) -> u32 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixed quadratic fields: sqrt({x}) vs sqrt({y})"),
        }
    }

    /// Field compatibility as a recoverable error, for public matrix entry points.
    pub fn check_same_field(&self, other: &Self) -> Result<(), Error> {
        match (self.d, other.d) {
            (0, _) | (_, 0) => Ok(()),
            (x, y) if x == y => Ok(()),
            (x, y) => Err(Error::MixedField(x, y)),
        }
    }

    /// Galois conjugate a - b√d.
    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone(), self.d)
    }

    /// Exact multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        // 1/(a + b√d) = (a - b√d) / (a² - d·b²)
        let d = BigRational::from_integer(BigInt::from(self.d));
        let norm = &self.a * &self.a - d * &self.b * &self.b;
        assert!(!norm.is_zero(), "field norm vanished; d must be non-square");
        Self::new(&self.a / &norm, -&self.b / &norm, self.d)
    }

    /// Exact sign: -1, 0, or +1 of the real number a + b√d.
    pub fn signum(&self) -> i32 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a² against d·b².
        let d = BigRational::from_integer(BigInt::from(self.d));
        let lhs = &self.a * &self.a;
        let rhs = d * &self.b * &self.b;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().expect("rational out of f64 range");
        let b = self.b.to_f64().expect("rational out of f64 range");
        a + b * (self.d as f64).sqrt()
    }
}

fn rat_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.clone() - other.clone();
        match diff.signum() {
            x if x < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for QScalar {
    type Output = QScalar;
    fn add(self, rhs: QScalar) -> QScalar {
        let d = self.join_field(&rhs);
        QScalar::new(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for QScalar {
    type Output = QScalar;
    fn sub(self, rhs: QScalar) -> QScalar {
        let d = self.join_field(&rhs);
        QScalar::new(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Mul for QScalar {
    type Output = QScalar;
    fn mul(self, rhs: QScalar) -> QScalar {
        let d = self.join_field(&rhs);
        let dq = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + dq * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QScalar::new(a, b, d)
    }
}

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::new(-self.a, -self.b, self.d)
    }
}

impl<'a> Add<&'a QScalar> for QScalar {
    type Output = QScalar;
    fn add(self, rhs: &'a QScalar) -> QScalar {
        self + rhs.clone()
    }
}

impl<'a> Mul<&'a QScalar> for QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &'a QScalar) -> QScalar {
        self * rhs.clone()
    }
}

impl fmt::Debug for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt({})", self.b, self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn canonical_rational_drops_d() {
        let x = QScalar::new(q(3, 2), BigRational::zero(), 5);
        assert_eq!(x.field(), 0);
        assert_eq!(x, QScalar::from_ratio(3, 2));
    }

    #[test]
    fn golden_ratio_inverse() {
        // φ = (1+√5)/2, φ⁻¹ = φ - 1
        let phi = QScalar::new(q(1, 2), q(1, 2), 5);
        let inv = phi.inv();
        assert_eq!(inv, phi.clone() - QScalar::one());
        assert_eq!(phi * inv, QScalar::one());
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 3 - 2√2 > 0 since 9 > 8
        let x = QScalar::from_int(3) - QScalar::from_int(2) * QScalar::sqrt_of(2);
        assert_eq!(x.signum(), 1);
        // 1 - √2 < 0
        let y = QScalar::one() - QScalar::sqrt_of(2);
        assert_eq!(y.signum(), -1);
        assert!(y < x);
    }

    #[test]
    #[should_panic(expected = "mixed quadratic fields")]
    fn mixed_fields_panic() {
        let _ = QScalar::sqrt_of(2) + QScalar::sqrt_of(5);
    }

    #[test]
    fn mixed_field_error_surface() {
        assert!(QScalar::sqrt_of(2)
            .check_same_field(&QScalar::sqrt_of(5))
            .is_err());
        assert!(QScalar::sqrt_of(2)
            .check_same_field(&QScalar::one())
            .is_ok());
    }

    fn arb_scalar(d: u32) -> impl Strategy<Value = QScalar> {
        (-20i64..20, 1i64..8, -20i64..20, 1i64..8)
            .prop_map(move |(an, ad, bn, bd)| QScalar::new(q(an, ad), q(bn, bd), d))
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(5), y in arb_scalar(5), z in arb_scalar(5)) {
            let assoc_l = (x.clone() + y.clone()) + z.clone();
            let assoc_r = x.clone() + (y.clone() + z.clone());
            prop_assert_eq!(assoc_l, assoc_r);
            let dist_l = x.clone() * (y.clone() + z.clone());
            let dist_r = x.clone() * y.clone() + x.clone() * z.clone();
            prop_assert_eq!(dist_l, dist_r);
            if !x.is_zero() {
                prop_assert_eq!(x.clone() * x.inv(), QScalar::one());
            }
        }
    }
}
