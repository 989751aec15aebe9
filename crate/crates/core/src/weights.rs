//! Integral weights, the invariant form, `ρ`, and evaluation of torus
//! elements at weights and characters.

use crate::error::{AlgebraError, Result};
use crate::pbw::Element;
use crate::scalars::{Field, Scalar, WeightPoly};
use crate::signature::{Root, Signature};

/// Integral weight `Σ λ_s ε_s`.
pub type Weight = Vec<i64>;

/// `(a, b) = Σ_s ±a_s b_s`, `+` on the first `m` coordinates.
pub fn bilinear(sig: &Signature, a: &[i64], b: &[i64]) -> i64 {
    (1..=sig.rank()).map(|s| sig.form_sign(s) * a[s - 1] * b[s - 1]).sum()
}

pub fn epsilon(sig: &Signature, s: usize) -> Weight {
    let mut w = vec![0; sig.rank()];
    w[s - 1] = 1;
    w
}

/// `ε_i − ε_j` as a coordinate vector.
pub fn root_weight(sig: &Signature, r: Root) -> Weight {
    let mut w = vec![0; sig.rank()];
    w[r.i - 1] += 1;
    w[r.j - 1] -= 1;
    w
}

/// `2ρ = Σ_{even α>0} α − Σ_{odd α>0} α`.
pub fn rho_doubled(sig: &Signature) -> Weight {
    let mut w = vec![0; sig.rank()];
    for r in sig.roots() {
        let sign = if sig.is_odd(*r) { -1 } else { 1 };
        w[r.i - 1] += sign;
        w[r.j - 1] -= sign;
    }
    w
}

/// `(ρ, ε_i − ε_j)`, always an integer.
pub fn rho_pairing(sig: &Signature, r: Root) -> i64 {
    let twice = bilinear(sig, &rho_doubled(sig), &root_weight(sig, r));
    debug_assert_eq!(twice % 2, 0);
    twice / 2
}

/// Dominance for the even part: `λ_i ≥ λ_{i+1}` for every `i ≠ m`.
pub fn is_even_dominant(sig: &Signature, lam: &[i64]) -> bool {
    (1..sig.rank()).filter(|&i| i != sig.m()).all(|i| lam[i - 1] >= lam[i])
}

pub fn check_weight(sig: &Signature, lam: &[i64]) -> Result<()> {
    if lam.len() != sig.rank() {
        return Err(AlgebraError::IndexOutOfRange(format!("weight has {} coordinates, expected {}", lam.len(), sig.rank())));
    }
    Ok(())
}

/// A character of the torus: the values `λ(K_s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Character<E> {
    pub values: Vec<E>,
}

impl<E: Clone> Character<E> {
    /// `λ(K_s) = q_s^{λ_s}` for an integral weight.
    pub fn integral<F: Field<Elem = E>>(field: &F, sig: &Signature, lam: &[i64]) -> Self {
        let values = (1..=sig.rank()).map(|s| field.q_pow(i64::from(sig.q_exp(s)) * lam[s - 1])).collect();
        Self { values }
    }

    /// `λ(K^μ) = Π λ(K_s)^{μ_s}`.
    pub fn eval<F: Field<Elem = E>>(&self, field: &F, mu: &[i32]) -> Result<E> {
        let mut acc = field.one();
        for (v, &e) in self.values.iter().zip(mu) {
            if e != 0 {
                acc = field.mul(&acc, &field.pow(v, i64::from(e))?);
            }
        }
        Ok(acc)
    }

    /// Value of a torus element `Σ c_μ K^μ`.
    pub fn eval_torus<F: Field<Elem = E>>(&self, field: &F, x: &Element) -> Result<E> {
        let mut acc = field.zero();
        for (m, c) in x.terms() {
            if !m.is_torus() {
                return Err(AlgebraError::NotAScalar);
            }
            acc = field.add(&acc, &field.mul(&field.from_scalar(c)?, &self.eval(field, &m.k)?));
        }
        Ok(acc)
    }
}

/// `λ(K^μ) = q^{(λ, μ)}` for integral `λ`.
pub fn evaluate(sig: &Signature, lam: &[i64], mu: &[i32]) -> Scalar {
    let mu: Vec<i64> = mu.iter().map(|&x| i64::from(x)).collect();
    Scalar::q_pow(bilinear(sig, lam, &mu) as i32)
}

/// Substitutes `K_s ↦ t_s`, where `t_s` stands for `λ(K_s)` of an
/// indeterminate weight.
pub fn eval_symbolic(sig: &Signature, x: &Element) -> Result<WeightPoly> {
    let mut acc = WeightPoly::zero(sig.rank());
    for (m, c) in x.terms() {
        if !m.is_torus() {
            return Err(AlgebraError::WeightIndeterminateInAlgebra);
        }
        acc = acc.add(&WeightPoly::monomial(m.k.clone(), c.clone()));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn form_values() {
        let sig = Signature::new(1, 1).unwrap();
        assert_eq!(bilinear(&sig, &[1, 0], &[1, 0]), 1);
        assert_eq!(bilinear(&sig, &[0, 1], &[0, 1]), -1);
        assert_eq!(bilinear(&sig, &[1, -1], &[1, -1]), 0);
    }

    #[test]
    fn rho_values() {
        let s11 = Signature::new(1, 1).unwrap();
        assert_eq!(rho_pairing(&s11, Root::new(1, 2)), 0);
        let s21 = Signature::new(2, 1).unwrap();
        assert_eq!(rho_doubled(&s21), vec![0, -2, 2]);
        assert_eq!(rho_pairing(&s21, Root::new(1, 3)), 1);
        assert_eq!(rho_pairing(&s21, Root::new(2, 3)), 0);
        for (m, n) in [(3, 2), (2, 3), (4, 1)] {
            let sig = Signature::new(m, n).unwrap();
            for i in 1..m {
                assert_eq!(rho_pairing(&sig, Root::new(i, i + 1)), 1);
            }
        }
    }

    #[test]
    fn evaluation_matches_form() {
        let sig = Signature::new(1, 1).unwrap();
        assert_eq!(evaluate(&sig, &[1, 0], &[1, -1]), Scalar::q_pow(1));
        assert_eq!(evaluate(&sig, &[0, 0], &[3, 2]), Scalar::one());
        let f = crate::scalars::RationalFunctions;
        for lam in [[2i64, -1], [0, 3], [-2, 5]] {
            let ch = Character::integral(&f, &sig, &lam);
            for mu in [[1i32, 0], [0, 1], [2, -3]] {
                assert_eq!(ch.eval(&f, &mu).unwrap(), evaluate(&sig, &lam, &mu));
            }
        }
    }

    #[test]
    fn dominance_ignores_odd_simple_root() {
        let sig = Signature::new(2, 2).unwrap();
        assert!(is_even_dominant(&sig, &[1, 0, 5, -2]));
        assert!(!is_even_dominant(&sig, &[0, 1, 0, 0]));
        assert!(!is_even_dominant(&sig, &[0, 0, 0, 1]));
    }
}
