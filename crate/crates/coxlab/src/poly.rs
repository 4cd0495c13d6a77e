//! Integer polynomials with big coefficients, stored constant-term first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>, // index = degree, no trailing zeros
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Multiply by t^k.
    pub fn shift(&self, k: usize) -> Self {
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// (t + a)^n expanded.
    pub fn linear_power(a: i64, n: usize) -> Self {
        let mut p = IntPolynomial::from_i64(&[1]);
        let lin = IntPolynomial::from_i64(&[a, 1]);
        for _ in 0..n {
            p = p.mul(&lin);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact division by (t - r); panics if r is not a root.
    fn deflate(&self, r: &BigInt) -> Self {
        // Synthetic division from the top coefficient down.
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry = &self.coeffs[i] + r * &carry;
            out[i - 1] = carry.clone();
        }
        let rem = &self.coeffs[0] + r * carry;
        assert!(rem.is_zero(), "deflate called with a non-root");
        Self::new(out)
    }

    /// The multiset of integer roots, with multiplicity. Errors unless the
    /// polynomial splits completely over the integers.
    pub fn integer_roots(&self) -> Result<Vec<BigInt>> {
        if self.is_zero() {
            return Err(Error::NonIntegerRoots("zero polynomial".into()));
        }
        let mut p = self.clone();
        let mut roots = Vec::new();
        // Strip zero roots first.
        while p.coeffs.len() > 1 && p.coeffs[0].is_zero() {
            roots.push(BigInt::zero());
            p = Self::new(p.coeffs[1..].to_vec());
        }
        while p.degree() > 0 {
            let c0 = p.coeffs[0].abs();
            let mut found = None;
            'search: for d in divisors(&c0) {
                for cand in [d.clone(), -d] {
                    if p.eval(&cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
            match found {
                Some(r) => {
                    p = p.deflate(&r);
                    roots.push(r);
                }
                None => {
                    return Err(Error::NonIntegerRoots(format!("{self}")));
                }
            }
        }
        roots.sort();
        Ok(roots)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(n.is_positive());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::from(1);
    loop {
        let dsq = &d * &d;
        if dsq > *n {
            break;
        }
        if n.is_multiple_of(&d) {
            small.push(d.clone());
            if dsq != *n {
                large.push(n / &d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Display for IntPolynomial {
    /// Renders like "t^3 + 12 t^2 + 48 t + 64".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() && !(first && deg == 0) {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let one = mag == BigInt::from(1);
            match deg {
                0 => write!(f, "{mag}")?,
                1 => {
                    if one {
                        write!(f, "t")?
                    } else {
                        write!(f, "{mag} t")?
                    }
                }
                _ => {
                    if one {
                        write!(f, "t^{deg}")?
                    } else {
                        write!(f, "{mag} t^{deg}")?
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_factored_quadratic() {
        // t² - 3t + 2 = (t-1)(t-2)
        let p = IntPolynomial::from_i64(&[2, -3, 1]);
        let roots = p.integer_roots().unwrap();
        assert_eq!(roots, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn irreducible_quadratic_errors() {
        let p = IntPolynomial::from_i64(&[1, 0, 1]); // t² + 1
        assert!(matches!(p.integer_roots(), Err(Error::NonIntegerRoots(_))));
    }

    #[test]
    fn repeated_and_zero_roots() {
        // t²(t+3)² = t⁴ + 6t³ + 9t²
        let p = IntPolynomial::from_i64(&[0, 0, 9, 6, 1]);
        let roots = p.integer_roots().unwrap();
        assert_eq!(
            roots,
            vec![
                BigInt::from(-3),
                BigInt::from(-3),
                BigInt::from(0),
                BigInt::from(0)
            ]
        );
    }

    #[test]
    fn display_matches_convention() {
        let p = IntPolynomial::from_i64(&[64, 48, 12, 1]);
        assert_eq!(p.to_string(), "t^3 + 12 t^2 + 48 t + 64");
    }

    #[test]
    fn canonical_degree() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
    }
}
