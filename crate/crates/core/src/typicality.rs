//! The typicality polynomial, computed two ways: by straightening
//! `E_{I₁} F_{I₁}` and keeping its torus part, and as the closed product of
//! quantum integers over the odd positive roots.

use serde::Serialize;

use crate::error::Result;
use crate::pbw::{Element, Engine, Kind};
use crate::scalars::{Field, Scalar, WeightPoly};
use crate::signature::{Root, Signature};
use crate::weights::{bilinear, rho_pairing, root_weight, Character};

/// Torus part of the normal form of `E_{I₁} F_{I₁}`.
pub fn extract_f_direct(eng: &Engine) -> Result<Element> {
    let full = eng.multiply(&eng.big_odd_product(Kind::E)?, &eng.big_odd_product(Kind::F)?)?;
    let mut out = Element::zero();
    for (m, c) in full.terms() {
        if m.e.is_empty() && m.f.is_empty() {
            out.add_term(m.clone(), c.clone());
        }
    }
    Ok(out)
}

/// Terms of `E_{I₁} F_{I₁}` that are neither pure torus nor of the
/// form `F·K·E` with both sides nonempty: must be empty.
pub fn shape_defects(eng: &Engine) -> Result<Vec<String>> {
    let full = eng.multiply(&eng.big_odd_product(Kind::E)?, &eng.big_odd_product(Kind::F)?)?;
    let sig = eng.sig();
    Ok(full
        .terms()
        .filter(|(m, _)| m.e.is_empty() != m.f.is_empty() || m.weight(sig).iter().any(|&w| w != 0))
        .map(|(m, c)| format!("{c} at {m:?}"))
        .collect())
}

/// The linear forms `(λ + ρ, ε_i − ε_j)` over the odd positive roots.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TypicalityFactor {
    pub root: (usize, usize),
    pub value: i64,
}

pub fn factors(sig: &Signature, lam: &[i64]) -> Vec<TypicalityFactor> {
    sig.odd_roots()
        .into_iter()
        .map(|r| TypicalityFactor { root: (r.i, r.j), value: bilinear(sig, lam, &root_weight(sig, r)) + rho_pairing(sig, r) })
        .collect()
}

/// `Π [(λ + ρ, ε_i − ε_j)]` for integral `λ`.
pub fn f_closed(sig: &Signature, lam: &[i64]) -> Scalar {
    factors(sig, lam).iter().fold(Scalar::one(), |acc, f| acc * Scalar::qint(f.value))
}

/// `Π ((λ+ρ)(K_ij) − (λ+ρ)(K_ij)^{-1}) / (q − q^{-1})` with `λ(K_s) = t_s`.
pub fn f_closed_symbolic(sig: &Signature) -> Result<WeightPoly> {
    let nv = sig.rank();
    let denom = Scalar::q_minus_q_inv().inv()?;
    let mut acc = WeightPoly::one(nv);
    for r in sig.odd_roots() {
        let rho = rho_pairing(sig, r) as i32;
        let mut up = vec![0; nv];
        up[r.i - 1] = 1;
        up[r.j - 1] = -1;
        let down: Vec<i32> = up.iter().map(|x| -x).collect();
        let factor = WeightPoly::monomial(up, Scalar::q_pow(rho)).sub(&WeightPoly::monomial(down, Scalar::q_pow(-rho)));
        acc = acc.mul(&factor.scale(&denom));
    }
    Ok(acc)
}

/// `f(λ)` for an arbitrary character, in any field.
pub fn f_at_character<F: Field>(field: &F, sig: &Signature, ch: &Character<F::Elem>) -> Result<F::Elem> {
    let denom = field.sub(&field.q_pow(1), &field.q_pow(-1));
    let mut acc = field.one();
    for r in sig.odd_roots() {
        let mut mu = vec![0; sig.rank()];
        mu[r.i - 1] = 1;
        mu[r.j - 1] = -1;
        let x = field.mul(&ch.eval(field, &mu)?, &field.q_pow(rho_pairing(sig, r)));
        let num = field.sub(&x, &field.inv(&x)?);
        acc = field.mul(&acc, &field.div(&num, &denom)?);
    }
    Ok(acc)
}

pub fn is_typical(sig: &Signature, lam: &[i64]) -> bool {
    factors(sig, lam).iter().all(|f| f.value != 0)
}

/// For each `i ≤ m`, the normal form of `E_{i,m+n} F_{>(i,m+n)}` has a
/// nonempty raising part in every term, so it kills a highest-weight vector.
pub fn top_row_kills_highest(eng: &Engine) -> Result<Vec<(usize, bool)>> {
    let sig = eng.sig();
    let last = sig.rank();
    (1..=sig.m())
        .map(|i| {
            let x = Root::new(i, last);
            let p = eng.multiply(&eng.e(i, last)?, &eng.odd_product(Kind::F, &sig.odd_above(x))?)?;
            let ok = p.terms().all(|(m, _)| !m.e.is_empty());
            Ok((i, ok))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RationalFunctions;
    use crate::weights::eval_symbolic;

    #[test]
    fn rank_one_one_direct() {
        let eng = Engine::for_rank(1, 1).unwrap();
        let f = extract_f_direct(&eng).unwrap();
        let want = eng.k_vec(&[1, -1]).sub(&eng.k_vec(&[-1, 1])).scale(&Scalar::q_minus_q_inv().inv().unwrap());
        assert_eq!(f, want);
    }

    #[test]
    fn closed_examples() {
        let s11 = Signature::new(1, 1).unwrap();
        assert_eq!(f_closed(&s11, &[2, 1]), Scalar::qint(3));
        assert!(f_closed(&s11, &[1, -1]).is_zero());
        assert!(is_typical(&s11, &[1, 0]));
        let s21 = Signature::new(2, 1).unwrap();
        assert!(f_closed(&s21, &[0, 0, 0]).is_zero());
        assert_eq!(f_closed(&s21, &[2, 1, 0]), Scalar::qint(3) * Scalar::qint(1));
    }

    #[test]
    fn direct_matches_closed_small() {
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let eng = Engine::for_rank(m, n).unwrap();
            let direct = eval_symbolic(eng.sig(), &extract_f_direct(&eng).unwrap()).unwrap();
            assert_eq!(direct, f_closed_symbolic(eng.sig()).unwrap(), "({m},{n})");
            assert!(shape_defects(&eng).unwrap().is_empty());
        }
    }

    #[test]
    fn character_evaluation_matches_integral() {
        let sig = Signature::new(2, 1).unwrap();
        let f = RationalFunctions;
        for lam in [[1i64, 0, 0], [3, 1, -2], [0, 0, 1]] {
            let ch = Character::integral(&f, &sig, &lam);
            assert_eq!(f_at_character(&f, &sig, &ch).unwrap(), f_closed(&sig, &lam));
        }
    }
}
