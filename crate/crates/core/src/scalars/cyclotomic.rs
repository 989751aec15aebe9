//! The cyclotomic field Q(eta) = Q[q]/(Phi_l), eta a primitive l-th root of unity.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::ratfunc::Scalar;
use crate::error::AlgebraError;

/// Residue of a polynomial modulo `Phi_l`, coefficients low degree first,
/// length strictly below `deg Phi_l` and trimmed.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CyclotomicScalar {
    coeffs: Vec<BigRational>,
}

impl CyclotomicScalar {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn trimmed(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }
}

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
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
            let a_str = if a.is_integer() { a.to_integer().to_string() } else { format!("({a})") };
            match i {
                0 => write!(f, "{a_str}")?,
                1 if a.is_one() => write!(f, "q")?,
                _ if a.is_one() => write!(f, "q^{i}")?,
                1 => write!(f, "{a_str}*q")?,
                _ => write!(f, "{a_str}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Arithmetic context for `Q(eta)`; `q` in specialized expressions denotes `eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    l: u32,
    /// Monic minimal polynomial Phi_l, low degree first.
    phi: Vec<BigRational>,
}

/// The l-th cyclotomic polynomial over Z.
pub fn cyclotomic_polynomial(l: u32) -> IntPoly {
    let mut p = IntPoly::monomial(BigInt::one(), l as usize).sub(&IntPoly::one());
    for d in 1..l {
        if l.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic_polynomial(d)).expect("Phi_d divides q^l - 1");
        }
    }
    p
}

impl CyclotomicField {
    /// Requires `l` odd and at least 3.
    pub fn new(l: u32) -> Result<Self, AlgebraError> {
        if l < 3 || l.is_multiple_of(2) {
            return Err(AlgebraError::InvalidRootOrder(l));
        }
        let phi = cyclotomic_polynomial(l).coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect();
        Ok(Self { l, phi })
    }

    pub fn order(&self) -> u32 {
        self.l
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> CyclotomicScalar {
        CyclotomicScalar::default()
    }

    pub fn one(&self) -> CyclotomicScalar {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> CyclotomicScalar {
        self.from_rational(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(&self, c: BigRational) -> CyclotomicScalar {
        CyclotomicScalar::trimmed(vec![c])
    }

    /// `eta^k` for any integer k.
    pub fn eta_pow(&self, k: i64) -> CyclotomicScalar {
        let e = k.rem_euclid(self.l as i64) as usize;
        let mut c = vec![BigRational::zero(); e + 1];
        c[e] = BigRational::one();
        self.reduce(c)
    }

    fn reduce(&self, mut c: Vec<BigRational>) -> CyclotomicScalar {
        let d = self.degree();
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let off = c.len() - d;
            for (i, p) in self.phi[..d].iter().enumerate() {
                c[off + i] -= &top * p;
            }
        }
        CyclotomicScalar::trimmed(c)
    }

    pub fn add(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = BigRational::zero();
        let c = (0..n).map(|i| a.coeffs.get(i).unwrap_or(&z) + b.coeffs.get(i).unwrap_or(&z)).collect();
        CyclotomicScalar::trimmed(c)
    }

    pub fn neg(&self, a: &CyclotomicScalar) -> CyclotomicScalar {
        CyclotomicScalar { coeffs: a.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> CyclotomicScalar {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut c = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        self.reduce(c)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[q].
    pub fn inv(&self, a: &CyclotomicScalar) -> Result<CyclotomicScalar, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // invariant: r0 = s0 * a (mod phi), r1 = s1 * a (mod phi)
        let mut r0 = self.phi.clone();
        let mut s0: Vec<BigRational> = Vec::new();
        let mut r1 = a.coeffs.clone();
        let mut s1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1[0].clone();
        debug_assert!(!c.is_zero(), "Phi_l is irreducible");
        let inv_c = c.recip();
        Ok(self.reduce(s1.iter().map(|x| x * &inv_c).collect()))
    }

    pub fn div(&self, a: &CyclotomicScalar, b: &CyclotomicScalar) -> Result<CyclotomicScalar, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &CyclotomicScalar, e: i64) -> Result<CyclotomicScalar, AlgebraError> {
        let base = if e < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.one();
        for _ in 0..e.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    fn int_poly(&self, p: &IntPoly) -> CyclotomicScalar {
        self.reduce(p.coeffs().iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Image of a rational function under `q -> eta`. Fails exactly when the
    /// denominator vanishes at `eta`.
    pub fn specialize(&self, s: &Scalar) -> Result<CyclotomicScalar, AlgebraError> {
        if s.is_zero() {
            return Ok(self.zero());
        }
        let den = self.int_poly(s.denominator());
        if den.is_zero() {
            return Err(AlgebraError::DenominatorVanishesAtRoot { l: self.l });
        }
        let num = self.mul(&self.int_poly(s.numerator()), &self.eta_pow(s.shift() as i64));
        self.div(&num, &den)
    }

    /// Quantum integer `[n]` at `eta`.
    pub fn qint(&self, n: i64) -> CyclotomicScalar {
        self.specialize(&Scalar::qint(n)).expect("[n] is a Laurent polynomial")
    }
}

fn poly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let z = BigRational::zero();
    poly_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    poly_trim(c)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = poly_trim(a.to_vec());
    let db = b.len() - 1;
    let lb = b[db].clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigRational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lb;
        for (i, y) in b.iter().enumerate() {
            r[k + i] -= &c * y;
        }
        quot[k] = c;
        r = poly_trim(r);
    }
    (poly_trim(quot), r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(5), IntPoly::from_i64s(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), IntPoly::from_i64s(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15).degree(), Some(8));
    }

    #[test]
    fn specialization_examples() {
        let k3 = CyclotomicField::new(3).unwrap();
        assert_eq!(k3.specialize(&Scalar::q_pow(3)).unwrap(), k3.one());
        assert!(k3.specialize(&Scalar::laurent(0, &[1, 1, 1])).unwrap().is_zero());
        let k5 = CyclotomicField::new(5).unwrap();
        assert!(k5.specialize(&Scalar::qint(5)).unwrap().is_zero());
        assert!(!k5.specialize(&Scalar::qint(4)).unwrap().is_zero());
    }

    #[test]
    fn vanishing_denominator_is_rejected() {
        let k3 = CyclotomicField::new(3).unwrap();
        let s = Scalar::one().div(&Scalar::laurent(0, &[1, 1, 1])).unwrap();
        assert!(matches!(k3.specialize(&s), Err(AlgebraError::DenominatorVanishesAtRoot { l: 3 })));
    }

    #[test]
    fn even_or_small_orders_rejected() {
        assert!(CyclotomicField::new(4).is_err());
        assert!(CyclotomicField::new(1).is_err());
    }

    #[test]
    fn inverses() {
        let k = CyclotomicField::new(7).unwrap();
        for e in 1..7 {
            let x = k.add(&k.eta_pow(e), &k.from_int(2));
            let y = k.inv(&x).unwrap();
            assert_eq!(k.mul(&x, &y), k.one());
        }
    }

    #[test]
    fn specialization_is_a_ring_map() {
        let k = CyclotomicField::new(5).unwrap();
        let a = Scalar::qint(3).div(&Scalar::laurent(0, &[2, 1])).unwrap();
        let b = Scalar::laurent(-2, &[1, -1, 4]);
        let (sa, sb) = (k.specialize(&a).unwrap(), k.specialize(&b).unwrap());
        assert_eq!(k.specialize(&(&a * &b)).unwrap(), k.mul(&sa, &sb));
        assert_eq!(k.specialize(&(&a + &b)).unwrap(), k.add(&sa, &sb));
    }
}
