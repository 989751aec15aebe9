//! A small field abstraction so module and linear-algebra code runs both at
//! generic `q` and at a root of unity.

use std::fmt;

use super::cyclotomic::{CyclotomicField, CyclotomicScalar};
use super::ratfunc::Scalar;
use crate::error::AlgebraError;

#[allow(clippy::wrong_self_convention)]
pub trait Field: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, c: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// The image of `q^k`.
    fn q_pow(&self, k: i64) -> Self::Elem;
    /// The image of a generic-q scalar.
    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem, AlgebraError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, e: i64) -> Result<Self::Elem, AlgebraError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }
}

/// Q(q) with `q` generic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalFunctions;

impl Field for RationalFunctions {
    type Elem = Scalar;

    fn zero(&self) -> Scalar {
        Scalar::zero()
    }
    fn one(&self) -> Scalar {
        Scalar::one()
    }
    fn from_int(&self, c: i64) -> Scalar {
        Scalar::from_int(c)
    }
    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a + b
    }
    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a - b
    }
    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        a * b
    }
    fn neg(&self, a: &Scalar) -> Scalar {
        -a
    }
    fn inv(&self, a: &Scalar) -> Result<Scalar, AlgebraError> {
        a.inv()
    }
    fn is_zero(&self, a: &Scalar) -> bool {
        a.is_zero()
    }
    fn q_pow(&self, k: i64) -> Scalar {
        Scalar::q_pow(k as i32)
    }
    fn from_scalar(&self, s: &Scalar) -> Result<Scalar, AlgebraError> {
        Ok(s.clone())
    }
}

impl Field for CyclotomicField {
    type Elem = CyclotomicScalar;

    fn zero(&self) -> CyclotomicScalar {
        CyclotomicField::zero(self)
    }
    fn one(&self) -> CyclotomicScalar {
        CyclotomicField::one(self)
    }
    fn from_int(&self, c: i64) -> CyclotomicScalar {
        CyclotomicField::from_int(self, c)
    }
    fn add(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        CyclotomicField::add(self, a, b)
    }
    fn sub(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        CyclotomicField::sub(self, a, b)
    }
    fn mul(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        CyclotomicField::mul(self, a, b)
    }
    fn neg(&self, a: &CyclotomicScalar) -> CyclotomicScalar {
        CyclotomicField::neg(self, a)
    }
    fn inv(&self, a: &CyclotomicScalar) -> Result<CyclotomicScalar, AlgebraError> {
        CyclotomicField::inv(self, a)
    }
    fn is_zero(&self, a: &CyclotomicScalar) -> bool {
        a.is_zero()
    }
    fn q_pow(&self, k: i64) -> CyclotomicScalar {
        self.eta_pow(k)
    }
    fn from_scalar(&self, s: &Scalar) -> Result<CyclotomicScalar, AlgebraError> {
        self.specialize(s)
    }
}
