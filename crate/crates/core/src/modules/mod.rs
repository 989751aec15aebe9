//! Finite-dimensional weight modules: the simple even-part module `M(λ)`, the
//! Kac module `K(λ) = N_{-1} ⊗ M(λ)`, singular vectors and fixed points.
//!
//! Every module here is a quotient of `U^- v` for a highest weight vector
//! `v`: a basis vector is represented by a lowering word `F_J F^s`, and a
//! generator acts by straightening `g F_J F^s`, dropping terms with a raising
//! part, evaluating the torus part at the character and projecting the even
//! lowering part to the simple quotient.

mod even;

use std::collections::BTreeMap;

pub use even::{Depth, EvenQuotient, WeightSpace};

use crate::error::{AlgebraError, Result};
use crate::linalg::{identity, is_zero_matrix, kernel, mat_add, mat_mul, mat_scale, zeros, Matrix};
use crate::pbw::{Element, Engine, Letter, Monomial};
use crate::scalars::{Field, Scalar};
use crate::signature::RootId;
use crate::weights::{is_even_dominant, Character, Weight};

/// Vectors grouped by weight.
pub type WeightedVectors<E> = Vec<(Weight, Vec<Vec<E>>)>;

pub const DEFAULT_MAX_DIM: usize = 4096;

/// How the highest weight vector is specified.
pub struct HighestWeight<E> {
    pub character: Character<E>,
    /// Integral label of the top weight, used only to tag weight spaces.
    pub label: Weight,
    /// Root-of-unity truncation `l` (even exponents `≥ l` vanish).
    pub truncation: Option<u32>,
}

/// One basis vector: the lowering word `F_J F^s` applied to `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub odd: Vec<RootId>,
    pub even: Vec<RootId>,
    pub weight: Weight,
    pub parity: u8,
}

pub struct WeightModule<F: Field> {
    pub field: F,
    pub basis: Vec<BasisVector>,
    matrices: BTreeMap<Letter, Matrix<F::Elem>>,
}

impl<F: Field + Clone> WeightModule<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of a single letter; `K` letters may carry any exponent.
    pub fn letter(&self, l: Letter) -> Result<Matrix<F::Elem>> {
        if let Letter::K(s, e) = l {
            let base = &self.matrices[&Letter::K(s, 1)];
            let f = &self.field;
            let n = self.dim();
            let mut m = zeros(f, n, n);
            for i in 0..n {
                m.set(i, i, f.pow(base.get(i, i), i64::from(e))?);
            }
            return Ok(m);
        }
        self.matrices.get(&l).cloned().ok_or_else(|| AlgebraError::IndexOutOfRange(format!("{l:?}")))
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, x: &Element) -> Result<Matrix<F::Elem>> {
        let f = &self.field;
        let n = self.dim();
        let mut out = zeros(f, n, n);
        for (m, c) in x.terms() {
            let mut acc = identity(f, n);
            for l in m.letters() {
                acc = mat_mul(f, &acc, &self.letter(l)?);
            }
            out = mat_add(f, &out, &mat_scale(f, &f.from_scalar(c)?, &acc));
        }
        Ok(out)
    }

    fn indices_of_weight(&self, w: &[i64]) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.basis[i].weight == w).collect()
    }

    pub fn weights(&self) -> Vec<Weight> {
        let mut ws: Vec<Weight> = self.basis.iter().map(|b| b.weight.clone()).collect();
        ws.sort();
        ws.dedup();
        ws
    }

    /// Joint kernel of the given letters, restricted weight space by weight space.
    pub fn joint_kernel(&self, letters: &[Letter]) -> Result<WeightedVectors<F::Elem>> {
        let f = &self.field;
        let mats = letters.iter().map(|&l| self.letter(l)).collect::<Result<Vec<_>>>()?;
        let n = self.dim();
        let mut out = Vec::new();
        for w in self.weights() {
            let cols = self.indices_of_weight(&w);
            let stacked = Matrix::from_fn(n * mats.len().max(1), cols.len(), |r, c| {
                if mats.is_empty() {
                    f.zero()
                } else {
                    mats[r / n].get(r % n, cols[c]).clone()
                }
            });
            let ker = kernel(f, &stacked)?;
            if ker.is_empty() {
                continue;
            }
            let full = ker
                .into_iter()
                .map(|v| {
                    let mut x = vec![f.zero(); n];
                    for (k, &i) in cols.iter().enumerate() {
                        x[i] = v[k].clone();
                    }
                    x
                })
                .collect();
            out.push((w, full));
        }
        Ok(out)
    }

    fn simple_raising(&self, eng: &Engine) -> Vec<Letter> {
        let sig = eng.sig();
        sig.simple_roots().map(|r| Letter::E(sig.id_of(r))).collect()
    }

    /// Vectors killed by every simple raising generator, per weight.
    pub fn singular_vectors(&self, eng: &Engine) -> Result<WeightedVectors<F::Elem>> {
        self.joint_kernel(&self.simple_raising(eng))
    }

    /// Simple iff the singular vectors are exactly the highest weight line.
    pub fn is_simple_bruteforce(&self, eng: &Engine) -> Result<bool> {
        let sv = self.singular_vectors(eng)?;
        Ok(sv.iter().map(|(_, b)| b.len()).sum::<usize>() == 1)
    }

    /// Joint kernel of all odd raising root vectors.
    pub fn odd_fixed_points(&self, eng: &Engine) -> Result<WeightedVectors<F::Elem>> {
        let sig = eng.sig();
        let letters: Vec<Letter> = sig.odd_roots().into_iter().map(|r| Letter::E(sig.id_of(r))).collect();
        self.joint_kernel(&letters)
    }

    pub fn is_zero(&self, m: &Matrix<F::Elem>) -> bool {
        is_zero_matrix(&self.field, m)
    }
}

/// Builds `M(λ)` (`with_odd = false`) or `K(λ)` (`with_odd = true`).
pub fn build<F: Field + Clone>(
    eng: &Engine,
    field: &F,
    hw: HighestWeight<F::Elem>,
    with_odd: bool,
    max_dim: usize,
) -> Result<WeightModule<F>> {
    let sig = eng.sig();
    let rank = sig.rank();
    let mut quotient = EvenQuotient::new(eng, field, hw.character.clone(), hw.truncation);
    let depths = quotient.enumerate(max_dim)?;

    let odd_sets: Vec<Vec<RootId>> = if with_odd {
        let odd: Vec<RootId> = sig.odd_roots().into_iter().map(|r| sig.id_of(r)).collect();
        (0u32..1 << odd.len())
            .map(|mask| {
                let mut s: Vec<RootId> = (0..odd.len()).filter(|b| mask >> b & 1 == 1).map(|b| odd[b]).collect();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect()
    } else {
        vec![Vec::new()]
    };

    let mut basis = Vec::new();
    // (odd set, depth) -> first basis index of that block
    let mut offsets: BTreeMap<(Vec<RootId>, Depth), usize> = BTreeMap::new();
    for j in &odd_sets {
        for d in &depths {
            let ws = quotient.space(d)?;
            offsets.insert((j.clone(), d.clone()), basis.len());
            for &b in &ws.basis {
                let even = ws.words[b].clone();
                let mono = Monomial { f: j.iter().chain(&even).copied().collect(), k: vec![0; rank], e: Vec::new() };
                let rel = mono.weight(sig);
                basis.push(BasisVector {
                    odd: j.clone(),
                    even,
                    weight: hw.label.iter().zip(&rel).map(|(a, b)| a + b).collect(),
                    parity: (j.len() % 2) as u8,
                });
            }
        }
    }
    let n = basis.len();
    if n > max_dim {
        return Err(AlgebraError::ModuleTooLarge(n));
    }

    let mut letters: Vec<Letter> = Vec::new();
    for id in 0..sig.roots().len() {
        letters.push(Letter::E(id));
        letters.push(Letter::F(id));
    }
    letters.extend((0..rank).map(|s| Letter::K(s, 1)));

    let mut matrices = BTreeMap::new();
    for &l in &letters {
        let mut m = zeros(field, n, n);
        let g = eng.word(&[l])?;
        for (col, bv) in basis.iter().enumerate() {
            let rep = Element::monomial(
                Monomial { f: bv.odd.iter().chain(&bv.even).copied().collect(), k: vec![0; rank], e: Vec::new() },
                Scalar::one(),
            );
            let prod = eng.multiply(&g, &rep)?;
            for (mono, c) in prod.terms() {
                if !mono.e.is_empty() {
                    continue;
                }
                let split = mono.f.iter().position(|&r| !sig.is_odd(sig.root(r))).unwrap_or(mono.f.len());
                let (odd, even) = mono.f.split_at(split);
                if let Some(l) = hw.truncation {
                    if even.iter().any(|r| even.iter().filter(|x| *x == r).count() >= l as usize) {
                        continue;
                    }
                }
                let key_depth: Depth =
                    Monomial { f: even.to_vec(), k: vec![0; rank], e: Vec::new() }.weight(sig).iter().map(|x| -x).collect();
                let Some(&off) = offsets.get(&(odd.to_vec(), key_depth.clone())) else {
                    continue;
                };
                let ws = quotient.space(&key_depth)?;
                let Some(&widx) = ws.index.get(even) else {
                    continue;
                };
                let val = field.mul(&field.from_scalar(c)?, &hw.character.eval(field, &mono.k)?);
                for r in 0..ws.dim() {
                    let p = ws.projection.get(r, widx);
                    if field.is_zero(p) {
                        continue;
                    }
                    let cur = m.get(off + r, col).clone();
                    m.set(off + r, col, field.add(&cur, &field.mul(&val, p)));
                }
            }
        }
        matrices.insert(l, m);
    }
    Ok(WeightModule { field: field.clone(), basis, matrices })
}

/// `M(λ)` at generic `q` for an even-dominant integral weight.
pub fn build_simple_even(eng: &Engine, lam: &[i64]) -> Result<WeightModule<crate::scalars::RationalFunctions>> {
    build_generic(eng, lam, false, DEFAULT_MAX_DIM)
}

/// `K(λ)` at generic `q` for an even-dominant integral weight.
pub fn build_kac(eng: &Engine, lam: &[i64]) -> Result<WeightModule<crate::scalars::RationalFunctions>> {
    build_generic(eng, lam, true, DEFAULT_MAX_DIM)
}

/// `K(λ)`, failing with `ModuleTooLarge` beyond `max_dim` basis vectors.
pub fn build_kac_bounded(eng: &Engine, lam: &[i64], max_dim: usize) -> Result<WeightModule<crate::scalars::RationalFunctions>> {
    build_generic(eng, lam, true, max_dim)
}

fn build_generic(eng: &Engine, lam: &[i64], with_odd: bool, max_dim: usize) -> Result<WeightModule<crate::scalars::RationalFunctions>> {
    let sig = eng.sig();
    crate::weights::check_weight(sig, lam)?;
    if !is_even_dominant(sig, lam) {
        return Err(AlgebraError::NonDominantWeight(format!("{lam:?}")));
    }
    let field = crate::scalars::RationalFunctions;
    let hw = HighestWeight { character: Character::integral(&field, sig, lam), label: lam.to_vec(), truncation: None };
    build(eng, &field, hw, with_odd, max_dim)
}

#[cfg(test)]
mod tests;
