//! Commutation rules between pairs of root vectors of the same kind.
//!
//! `lowering_swap(a, b)` returns `(c, extra)` with
//! `F_a F_b = c · F_b F_a + Σ extra`; the raising rules are its image under the
//! anti-automorphism exchanging `E` and `F` and inverting `q`.

use crate::scalars::Scalar;
use crate::signature::{Root, Signature};

use super::element::Letter;

/// A scalar multiple of a word.
pub type Word = (Scalar, Vec<Letter>);

pub struct SwapRule {
    pub coeff: Scalar,
    pub extra: Vec<Word>,
}

fn sign(p: u8) -> Scalar {
    if p.is_multiple_of(2) {
        Scalar::one()
    } else {
        Scalar::from_int(-1)
    }
}

fn qs(sig: &Signature, s: usize, e: i32) -> Scalar {
    Scalar::q_pow(sig.q_exp(s) * e)
}

fn f(sig: &Signature, i: usize, j: usize) -> Letter {
    Letter::F(sig.id_of(Root::new(i, j)))
}

/// `F_a F_b = c F_b F_a + extra` for distinct roots `a`, `b`.
pub fn lowering_swap(sig: &Signature, a: Root, b: Root) -> SwapRule {
    debug_assert_ne!(a, b);
    let (pa, pb) = (sig.parity(a), sig.parity(b));
    let koszul = sign(pa * pb);
    let (i, j, s, t) = (a.i, a.j, b.i, b.j);
    let plain = |coeff| SwapRule { coeff, extra: Vec::new() };
    if i == s {
        // common start: F_ij F_it = σ q_i^{±1} F_it F_ij, + when j < t
        return plain(&koszul * &qs(sig, i, if j < t { 1 } else { -1 }));
    }
    if j == t {
        // common end: F_ij F_sj = σ q_j^{±1} F_sj F_ij, + when i < s
        return plain(&koszul * &qs(sig, j, if i < s { 1 } else { -1 }));
    }
    if j == s {
        // F_ij F_jt = q_j^-1 F_jt F_ij - q_j^-1 F_it
        let c = qs(sig, j, -1);
        return SwapRule { coeff: c.clone(), extra: vec![(-&c, vec![f(sig, i, t)])] };
    }
    if t == i {
        // F_ij F_si = q_i F_si F_ij + F_sj
        return SwapRule { coeff: qs(sig, i, 1), extra: vec![(Scalar::one(), vec![f(sig, s, j)])] };
    }
    if j < s || t < i {
        return plain(koszul);
    }
    if (i < s && t < j) || (s < i && j < t) {
        return plain(koszul);
    }
    if s < j && i < s && j < t {
        // a = (i,j), b = (s,t), i < s < j < t
        let d = sig.q_diff(j);
        return SwapRule { coeff: koszul.clone(), extra: vec![(&koszul * &d, vec![f(sig, s, j), f(sig, i, t)])] };
    }
    // a = (i,j), b = (s,t), s < i < t < j: F_a F_b = σ F_b F_a − (q_t − q_t^-1) F_it F_sj
    debug_assert!(s < i && i < t && t < j);
    let d = sig.q_diff(t);
    SwapRule { coeff: koszul, extra: vec![(-&d, vec![f(sig, i, t), f(sig, s, j)])] }
}

/// `E_a E_b = c E_b E_a + extra`, the image of `lowering_swap(b, a)`.
pub fn raising_swap(sig: &Signature, a: Root, b: Root) -> SwapRule {
    let low = lowering_swap(sig, b, a);
    let extra = low
        .extra
        .into_iter()
        .map(|(c, w)| {
            let w = w
                .into_iter()
                .rev()
                .map(|l| match l {
                    Letter::F(r) => Letter::E(r),
                    other => other,
                })
                .collect();
            (c.invert_q(), w)
        })
        .collect();
    SwapRule { coeff: low.coeff.invert_q(), extra }
}
