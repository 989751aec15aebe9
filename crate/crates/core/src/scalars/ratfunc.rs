//! The field Q(q) of rational functions in the deformation parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use crate::error::AlgebraError;

/// An exact element of Q(q), kept in canonical form `q^shift * num / den` where
/// neither `num` nor `den` is divisible by `q`, the two are coprime in Z[q]
/// (content included) and `den` has a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
    shift: i32,
}

impl Scalar {
    pub fn zero() -> Self {
        Self { num: IntPoly::zero(), den: IntPoly::one(), shift: 0 }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: IntPoly::constant(c), den: IntPoly::one(), shift: 0 }
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Self { num: IntPoly::one(), den: IntPoly::one(), shift: k }
    }

    /// `c * q^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self { num: IntPoly::constant(BigInt::from(c)), den: IntPoly::one(), shift: k }
    }

    /// The Laurent polynomial `sum_i coeffs[i] * q^(low + i)`.
    pub fn laurent(low: i32, coeffs: &[i64]) -> Self {
        Self::from_parts(IntPoly::from_i64s(coeffs), IntPoly::one(), low)
    }

    /// Quantum integer `[n] = (q^n - q^-n) / (q - q^-1)`.
    pub fn qint(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let a = n.unsigned_abs() as i32;
        // q^{-(a-1)} (1 + q^2 + ... + q^{2(a-1)})
        let mut coeffs = vec![0i64; 2 * (a as usize - 1) + 1];
        for i in 0..a as usize {
            coeffs[2 * i] = 1;
        }
        let v = Self::laurent(-(a - 1), &coeffs);
        if n < 0 {
            -v
        } else {
            v
        }
    }

    /// `q - q^-1`.
    pub fn q_minus_q_inv() -> Self {
        Self::laurent(-1, &[-1, 0, 1])
    }

    pub fn from_parts(num: IntPoly, den: IntPoly, shift: i32) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let vn = num.valuation();
        let vd = den.valuation();
        let mut num = num.shift_down(vn);
        let mut den = den.shift_down(vd);
        let shift = shift + vn as i32 - vd as i32;
        if !den.is_one() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
            if den.lead().unwrap().is_negative() {
                num = num.neg();
                den = den.neg();
            }
        }
        Self { num, den, shift }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in Z[q, q^-1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    /// If the value is `c * q^k` for an integer `c`, returns `(c, k)`.
    pub fn as_monomial(&self) -> Option<(BigInt, i32)> {
        if self.den.is_one() && self.num.coeffs().len() == 1 {
            Some((self.num.coeffs()[0].clone(), self.shift))
        } else {
            None
        }
    }

    /// If the value is `±q^k`, returns `(sign, k)`.
    pub fn as_signed_q_power(&self) -> Option<(i8, i32)> {
        let (c, k) = self.as_monomial()?;
        if c.is_one() {
            Some((1, k))
        } else if (-c).is_one() {
            Some((-1, k))
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ if self.is_zero() => Some(BigInt::zero()),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::from_parts(self.den.clone(), self.num.clone(), -self.shift))
    }

    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The field automorphism `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let rev = |p: &IntPoly| IntPoly::from_coeffs(p.coeffs().iter().rev().cloned().collect());
        let dn = self.num.degree().unwrap() as i32;
        let dd = self.den.degree().unwrap() as i32;
        Self::from_parts(rev(&self.num), rev(&self.den), -self.shift - dn + dd)
    }

    /// Evaluate at an integer point `q = x` (x must not be a pole or zero).
    pub fn eval_rational(&self, x: i64) -> Option<num_rational::BigRational> {
        let d = self.den.eval_i64(x);
        if d.is_zero() || (x == 0 && !self.is_zero()) {
            return None;
        }
        let n = self.num.eval_i64(x);
        let mut r = num_rational::BigRational::new(n, d);
        let xq = num_rational::BigRational::from_integer(BigInt::from(x));
        for _ in 0..self.shift.unsigned_abs() {
            r = if self.shift > 0 { r * &xq } else { r / &xq };
        }
        Some(r)
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = self.num.shift_up((self.shift - s) as usize);
        let b = other.num.shift_up((other.shift - s) as usize);
        if self.den == other.den {
            return Self::from_parts(a.add(&b), self.den.clone(), s);
        }
        let num = a.mul(&other.den).add(&b.mul(&self.den));
        Self::from_parts(num, self.den.mul(&other.den), s)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let shift = self.shift + other.shift;
        if self.den.is_one() && other.den.is_one() {
            return Self { num: self.num.mul(&other.num), den: IntPoly::one(), shift };
        }
        Self::from_parts(self.num.mul(&other.num), self.den.mul(&other.den), shift)
    }

    fn fmt_laurent(f: &mut fmt::Formatter<'_>, p: &IntPoly, shift: i32) -> fmt::Result {
        let mut first = true;
        for (i, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = shift + i as i32;
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "{}", q_power(e))?,
                (_, false) => write!(f, "{a}*{}", q_power(e))?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn q_power(e: i32) -> String {
    if e == 1 {
        "q".to_string()
    } else {
        format!("q^{e}")
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return Self::fmt_laurent(f, &self.num, self.shift);
        }
        write!(f, "(")?;
        Self::fmt_laurent(f, &self.num, self.shift.max(0))?;
        write!(f, ")/(")?;
        Self::fmt_laurent(f, &self.den, (-self.shift).max(0))?;
        write!(f, ")")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.add_impl(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.add_impl(&-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.mul_impl(rhs)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self.add_impl(&rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self.add_impl(&-&rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self.mul_impl(&rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone(), shift: self.shift }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert_eq!(Scalar::qint(0), Scalar::zero());
        assert_eq!(Scalar::qint(1), Scalar::one());
        assert_eq!(Scalar::qint(2), Scalar::laurent(-1, &[1, 0, 1]));
        assert_eq!(Scalar::qint(-3), -Scalar::qint(3));
    }

    #[test]
    fn qint_matches_defining_quotient() {
        for n in -6..=6 {
            let lhs = (Scalar::q_pow(n as i32) - Scalar::q_pow(-n as i32)).div(&Scalar::q_minus_q_inv()).unwrap();
            assert_eq!(lhs, Scalar::qint(n));
        }
    }

    #[test]
    fn field_examples() {
        let d = Scalar::q_minus_q_inv();
        assert_eq!(&d * &d.inv().unwrap(), Scalar::one());
        let s = Scalar::qint(2);
        assert_eq!(s.invert_q(), s);
        let a = Scalar::laurent(0, &[1, 1]).div(&Scalar::laurent(0, &[1, -1])).unwrap();
        let b = Scalar::laurent(0, &[1, 1]).div(&Scalar::laurent(0, &[-1, 1])).unwrap();
        assert!((a + b).is_zero());
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert!(matches!(Scalar::one().div(&Scalar::zero()), Err(AlgebraError::DivisionByZero)));
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 - 1)/(q - 1) == q + 1, and 2q/(4q^2) == 1/(2q)
        let a = Scalar::laurent(0, &[-1, 0, 1]).div(&Scalar::laurent(0, &[-1, 1])).unwrap();
        assert_eq!(a, Scalar::laurent(0, &[1, 1]));
        let b = Scalar::monomial(2, 1).div(&Scalar::monomial(4, 2)).unwrap();
        let c = Scalar::one().div(&Scalar::monomial(2, 1)).unwrap();
        assert_eq!(b, c);
    }

    #[test]
    fn invert_q_is_involutive_automorphism() {
        let a = Scalar::laurent(-2, &[3, 0, -1, 5]).div(&Scalar::laurent(1, &[1, 2])).unwrap();
        let b = Scalar::qint(3);
        assert_eq!(a.invert_q().invert_q(), a);
        assert_eq!((&a * &b).invert_q(), &a.invert_q() * &b.invert_q());
        assert_eq!((&a + &b).invert_q(), &a.invert_q() + &b.invert_q());
    }
}
