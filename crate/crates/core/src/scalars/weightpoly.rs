//! Laurent polynomials in commuting weight indeterminates `t_1..t_N` over Q(q).
//!
//! `t_s` stands for the value of a symbolic character on `K_s`. Characters are
//! monomials, so every quantity evaluated on them stays a Laurent polynomial in
//! the `t`'s and no multivariate gcd is needed.

use std::collections::BTreeMap;
use std::fmt;

use super::ratfunc::Scalar;
use crate::error::AlgebraError;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeightPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, Scalar>,
}

impl WeightPoly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    /// `c * t^exps`.
    pub fn monomial(exps: Vec<i32>, c: Scalar) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The indeterminate `t_s` (0-based index).
    pub fn var(nvars: usize, s: usize) -> Self {
        let mut e = vec![0; nvars];
        e[s] = 1;
        Self::monomial(e, Scalar::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value as a plain scalar if no indeterminate occurs.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, exps: Vec<i32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.nvars = self.nvars.max(other.nvars);
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars.max(other.nvars));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Division, supported when the divisor is a single monomial `c * t^e`.
    pub fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if other.terms.len() != 1 {
            return Err(AlgebraError::UnsupportedDivision(other.to_string()));
        }
        let (e, c) = other.terms.iter().next().unwrap();
        let inv = Self::monomial(e.iter().map(|x| -x).collect(), c.inv()?);
        Ok(self.mul(&inv))
    }

    pub fn pow(&self, k: i32) -> Result<Self, AlgebraError> {
        let base = if k < 0 { Self::one(self.nvars).div(self)? } else { self.clone() };
        let mut acc = Self::one(self.nvars);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// The ring map `q -> q^-1`, `t_s -> t_s^-1`.
    pub fn invert(&self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|x| -x).collect(), c.invert_q());
        }
        out
    }
}

impl fmt::Display for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(s, &x)| if x == 1 { format!("t{}", s + 1) } else { format!("t{}^{}", s + 1, x) })
                .collect();
            if vars.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeightPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_is_involution() {
        let t1 = WeightPoly::var(2, 0);
        let t2 = WeightPoly::var(2, 1);
        let p = t1.mul(&t2.pow(-2).unwrap()).scale(&Scalar::qint(3)).add(&WeightPoly::constant(2, Scalar::q_pow(2)));
        assert_eq!(p.invert().invert(), p);
        assert_eq!(t1.invert(), t1.pow(-1).unwrap());
    }

    #[test]
    fn monomial_division_only() {
        let t1 = WeightPoly::var(1, 0);
        let one = WeightPoly::one(1);
        assert_eq!(t1.div(&t1).unwrap(), one);
        assert!(matches!(one.div(&t1.add(&one)), Err(AlgebraError::UnsupportedDivision(_))));
    }
}
