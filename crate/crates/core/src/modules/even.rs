//! The simple quotient of the even-part Verma module, one weight space at a
//! time.
//!
//! A vector `x = u·v` of the Verma module lies in the maximal submodule iff
//! no raising monomial carries it back to the highest weight line, so on the
//! weight space of depth `β` the quotient is the row space of the pairing
//! matrix `G[a, b] = ⟨v, E^a F^b v⟩`. Fixing pivot rows `R` and columns `S`,
//! the class of `x` has coordinates `G_{RS}^{-1} G_R x` in the basis
//! `{F^s v : s ∈ S}`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{AlgebraError, Result};
use crate::linalg::{rref, Matrix};
use crate::pbw::{Element, Engine, Monomial};
use crate::scalars::Field;
use crate::signature::RootId;
use crate::weights::Character;

/// Depth below the highest weight, as an `ε`-coordinate vector `λ − ν`.
pub type Depth = Vec<i64>;

pub struct WeightSpace<E> {
    /// Even lowering words (root ids non-increasing) spanning the Verma space.
    pub words: Vec<Vec<RootId>>,
    pub index: HashMap<Vec<RootId>, usize>,
    /// `dim × words.len()`: quotient coordinates of each Verma word.
    pub projection: Matrix<E>,
    /// Indices into `words` of the chosen basis representatives.
    pub basis: Vec<usize>,
}

impl<E> WeightSpace<E> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub struct EvenQuotient<'a, F: Field> {
    eng: &'a Engine,
    field: &'a F,
    ch: Character<F::Elem>,
    /// Root-of-unity truncation: even exponents must stay below `l`.
    truncation: Option<u32>,
    spaces: BTreeMap<Depth, WeightSpace<F::Elem>>,
}

impl<'a, F: Field> EvenQuotient<'a, F> {
    pub fn new(eng: &'a Engine, field: &'a F, ch: Character<F::Elem>, truncation: Option<u32>) -> Self {
        Self { eng, field, ch, truncation, spaces: BTreeMap::new() }
    }

    pub fn character(&self) -> &Character<F::Elem> {
        &self.ch
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    fn even_ids(&self) -> Vec<RootId> {
        let sig = self.eng.sig();
        sig.even_roots().map(|r| sig.id_of(r)).collect()
    }

    /// Multisets of even positive roots summing to `depth`, as multiplicity vectors.
    fn partitions(&self, depth: &[i64]) -> Vec<Vec<u32>> {
        let sig = self.eng.sig();
        let ids = self.even_ids();
        let cap = self.truncation.map(|l| l - 1).unwrap_or(u32::MAX);
        // simple-root coordinates: b_k = β_1 + … + β_k
        let mut b: Vec<i64> = depth
            .iter()
            .scan(0, |acc, x| {
                *acc += x;
                Some(*acc)
            })
            .collect();
        if b.iter().any(|&x| x < 0) || b[sig.rank() - 1] != 0 {
            return Vec::new();
        }
        let spans: Vec<(usize, usize)> = ids
            .iter()
            .map(|&id| {
                let r = sig.root(id);
                (r.i - 1, r.j - 1)
            })
            .collect();
        let mut out = Vec::new();
        let mut mult = vec![0u32; ids.len()];
        fn go(k: usize, b: &mut Vec<i64>, spans: &[(usize, usize)], cap: u32, mult: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if k == spans.len() {
                if b.iter().all(|&x| x == 0) {
                    out.push(mult.clone());
                }
                return;
            }
            let (lo, hi) = spans[k];
            let mut taken = 0;
            loop {
                go(k + 1, b, spans, cap, mult, out);
                if taken == cap || (lo..hi).any(|t| b[t] == 0) {
                    break;
                }
                (lo..hi).for_each(|t| b[t] -= 1);
                taken += 1;
                mult[k] = taken;
            }
            (lo..hi).for_each(|t| b[t] += i64::from(taken));
            mult[k] = 0;
        }
        go(0, &mut b, &spans, cap, &mut mult, &mut out);
        out
    }

    fn words_for(&self, mult: &[u32], raising: bool) -> Vec<RootId> {
        let ids = self.even_ids();
        let mut w: Vec<RootId> = Vec::new();
        for (k, &c) in mult.iter().enumerate() {
            w.extend(std::iter::repeat_n(ids[k], c as usize));
        }
        w.sort_unstable();
        if !raising {
            w.reverse();
        }
        w
    }

    /// `⟨v, x v⟩`: the torus part of `x` evaluated at the character.
    fn highest_coefficient(&self, x: &Element) -> Result<F::Elem> {
        let mut acc = self.field.zero();
        for (m, c) in x.terms() {
            if m.is_torus() {
                let v = self.field.mul(&self.field.from_scalar(c)?, &self.ch.eval(self.field, &m.k)?);
                acc = self.field.add(&acc, &v);
            }
        }
        Ok(acc)
    }

    pub fn space(&mut self, depth: &[i64]) -> Result<&WeightSpace<F::Elem>> {
        if !self.spaces.contains_key(depth) {
            let ws = self.compute(depth)?;
            self.spaces.insert(depth.to_vec(), ws);
        }
        Ok(&self.spaces[depth])
    }

    fn compute(&self, depth: &[i64]) -> Result<WeightSpace<F::Elem>> {
        let f = self.field;
        let rank = self.eng.rank();
        let parts = self.partitions(depth);
        let lowering: Vec<Vec<RootId>> = parts.iter().map(|p| self.words_for(p, false)).collect();
        let raising: Vec<Vec<RootId>> = parts.iter().map(|p| self.words_for(p, true)).collect();
        let n = lowering.len();
        let mut g = Matrix::filled(n, n, f.zero());
        for (a, ew) in raising.iter().enumerate() {
            let e = Element::monomial(Monomial { f: Vec::new(), k: vec![0; rank], e: ew.clone() }, crate::Scalar::one());
            for (b, fw) in lowering.iter().enumerate() {
                let fm = Element::monomial(Monomial { f: fw.clone(), k: vec![0; rank], e: Vec::new() }, crate::Scalar::one());
                g.set(a, b, self.highest_coefficient(&self.eng.multiply(&e, &fm)?)?);
            }
        }
        // independent rows of G span its row space; their rref is G_{RS}^{-1} G_R
        let mut gt = Matrix::from_fn(n, n, |r, c| g.get(c, r).clone());
        let rows = rref(f, &mut gt)?;
        let mut a = Matrix::from_fn(rows.len(), n, |r, c| g.get(rows[r], c).clone());
        let basis = rref(f, &mut a)?;
        debug_assert_eq!(basis.len(), rows.len());
        let index = lowering.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(WeightSpace { words: lowering, index, projection: a, basis })
    }

    /// All nonzero weight spaces, found level by level along simple roots.
    pub fn enumerate(&mut self, max_dim: usize) -> Result<Vec<Depth>> {
        let sig = self.eng.sig().clone();
        let simple: Vec<Depth> = sig.simple_roots().filter(|r| !sig.is_odd(*r)).map(|r| crate::weights::root_weight(&sig, r)).collect();
        let mut found = vec![vec![0i64; sig.rank()]];
        let mut frontier = found.clone();
        let mut total = self.space(&found[0])?.dim();
        while !frontier.is_empty() {
            let mut next: Vec<Depth> = Vec::new();
            for d in &frontier {
                for a in &simple {
                    let nd: Depth = d.iter().zip(a).map(|(x, y)| x + y).collect();
                    if next.contains(&nd) {
                        continue;
                    }
                    if self.space(&nd)?.dim() > 0 {
                        total += self.space(&nd)?.dim();
                        if total > max_dim {
                            return Err(AlgebraError::ModuleTooLarge(total));
                        }
                        next.push(nd);
                    }
                }
            }
            found.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(found)
    }
}
