//! Rank data for `gl(m|n)`: positive roots, parities, the `q_i` convention and
//! the orders used to arrange PBW monomials.
//!
//! Indices are 1-based throughout, as are the pairs `(i, j)` with `i < j`
//! labelling the root `ε_i − ε_j`. A root is odd iff `i ≤ m < j`.
//!
//! Two orders are used:
//! * the *block order* on all positive roots: even roots before odd ones,
//!   lexicographic inside each block;
//! * the *odd order* on odd roots: `(i,j) ≺ (s,t)` iff `j > t`, or `j = t` and
//!   `i < s`.
//!
//! Raising factors of a PBW monomial are arranged by the [`Signature::roots`]
//! sequence (even roots in block order, then odd roots in reversed odd order);
//! lowering factors use the reverse of that sequence.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalars::Scalar;

/// A positive root `ε_i − ε_j`, `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub const fn new(i: usize, j: usize) -> Self {
        Self { i, j }
    }

    pub fn height(&self) -> usize {
        self.j - self.i
    }

    pub fn is_simple(&self) -> bool {
        self.j == self.i + 1
    }
}

impl std::fmt::Display for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

/// Position of a root in [`Signature::roots`].
pub type RootId = usize;

#[derive(Clone, Debug)]
pub struct Signature {
    m: usize,
    n: usize,
    roots: Vec<Root>,
    ids: HashMap<Root, RootId>,
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.n == other.n
    }
}

impl Eq for Signature {}

impl Signature {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(AlgebraError::InvalidSignature { m, n });
        }
        let rank = m + n;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for i in 1..=rank {
            for j in i + 1..=rank {
                if i <= m && j > m {
                    odd.push(Root::new(i, j));
                } else {
                    even.push(Root::new(i, j));
                }
            }
        }
        let mut sig = Self { m, n, roots: Vec::new(), ids: HashMap::new() };
        even.sort_by(|a, b| sig.cmp_block(*a, *b));
        odd.sort_by(|a, b| sig.cmp_odd(*b, *a));
        sig.roots = even.into_iter().chain(odd).collect();
        sig.ids = sig.roots.iter().enumerate().map(|(k, r)| (*r, k)).collect();
        Ok(sig)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `m + n`, the number of `K` generators.
    pub fn rank(&self) -> usize {
        self.m + self.n
    }

    /// All positive roots in raising-factor order.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, id: RootId) -> Root {
        self.roots[id]
    }

    pub fn root_id(&self, i: usize, j: usize) -> Result<RootId> {
        self.check_pair(i, j)?;
        Ok(self.ids[&Root::new(i, j)])
    }

    pub fn id_of(&self, r: Root) -> RootId {
        self.ids[&r]
    }

    pub fn check_index(&self, s: usize) -> Result<()> {
        if s == 0 || s > self.rank() {
            return Err(AlgebraError::IndexOutOfRange(format!("index {s} outside 1..={}", self.rank())));
        }
        Ok(())
    }

    pub fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        if i >= j {
            return Err(AlgebraError::BadRootIndices { i, j, reason: "need i < j".into() });
        }
        if i == 0 || j > self.rank() {
            return Err(AlgebraError::BadRootIndices { i, j, reason: format!("indices must lie in 1..={}", self.rank()) });
        }
        Ok(())
    }

    pub fn is_odd(&self, r: Root) -> bool {
        r.i <= self.m && r.j > self.m
    }

    /// Parity of a root as 0/1.
    pub fn parity(&self, r: Root) -> u8 {
        u8::from(self.is_odd(r))
    }

    /// Exponent `e` with `q_s = q^e`.
    pub fn q_exp(&self, s: usize) -> i32 {
        if s <= self.m {
            1
        } else {
            -1
        }
    }

    /// `q_s`: `q` for `s ≤ m`, `q^-1` otherwise.
    pub fn q_sub(&self, s: usize) -> Result<Scalar> {
        self.check_index(s)?;
        Ok(Scalar::q_pow(self.q_exp(s)))
    }

    /// `q_s − q_s^{-1}`.
    pub fn q_diff(&self, s: usize) -> Scalar {
        let e = self.q_exp(s);
        Scalar::q_pow(e) - Scalar::q_pow(-e)
    }

    /// Sign of `(ε_s, ε_s)`.
    pub fn form_sign(&self, s: usize) -> i64 {
        if s <= self.m {
            1
        } else {
            -1
        }
    }

    pub fn even_roots(&self) -> impl Iterator<Item = Root> + '_ {
        self.roots.iter().copied().filter(|r| !self.is_odd(*r))
    }

    /// Odd roots in the odd order (smallest first).
    pub fn odd_roots(&self) -> Vec<Root> {
        let mut v: Vec<Root> = self.roots.iter().copied().filter(|r| self.is_odd(*r)).collect();
        v.reverse();
        v
    }

    pub fn simple_roots(&self) -> impl Iterator<Item = Root> {
        (1..self.rank()).map(|i| Root::new(i, i + 1))
    }

    /// The block order: even before odd, lexicographic within a block.
    pub fn cmp_block(&self, a: Root, b: Root) -> Ordering {
        self.is_odd(a).cmp(&self.is_odd(b)).then((a.i, a.j).cmp(&(b.i, b.j)))
    }

    /// The odd order on odd roots: `(i,j) ≺ (s,t)` iff `j > t`, or `j = t` and `i < s`.
    pub fn cmp_odd(&self, a: Root, b: Root) -> Ordering {
        b.j.cmp(&a.j).then(a.i.cmp(&b.i))
    }

    /// Comparison of lowering factors in the block order: reverse of the raising one.
    pub fn cmp_block_lowering(&self, a: Root, b: Root) -> Ordering {
        self.cmp_block(b, a)
    }

    /// Odd roots strictly above `x` in the odd order.
    pub fn odd_above(&self, x: Root) -> Vec<Root> {
        self.odd_roots().into_iter().filter(|r| self.cmp_odd(*r, x) == Ordering::Greater).collect()
    }

    pub fn odd_at_or_above(&self, x: Root) -> Vec<Root> {
        self.odd_roots().into_iter().filter(|r| self.cmp_odd(*r, x) != Ordering::Less).collect()
    }

    pub fn odd_below(&self, x: Root) -> Vec<Root> {
        self.odd_roots().into_iter().filter(|r| self.cmp_odd(*r, x) == Ordering::Less).collect()
    }

    pub fn odd_at_or_below(&self, x: Root) -> Vec<Root> {
        self.odd_roots().into_iter().filter(|r| self.cmp_odd(*r, x) != Ordering::Greater).collect()
    }

    /// Odd roots strictly between `a` and `b`.
    pub fn odd_between(&self, a: Root, b: Root) -> Vec<Root> {
        self.odd_roots().into_iter().filter(|r| self.cmp_odd(*r, a) == Ordering::Greater && self.cmp_odd(*r, b) == Ordering::Less).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_sub_convention() {
        let s = Signature::new(2, 1).unwrap();
        assert_eq!(s.q_sub(1).unwrap(), Scalar::q_pow(1));
        assert_eq!(s.q_sub(2).unwrap(), Scalar::q_pow(1));
        assert_eq!(s.q_sub(3).unwrap(), Scalar::q_pow(-1));
        assert!(s.q_sub(4).is_err());
        let s = Signature::new(1, 1).unwrap();
        assert_eq!(s.q_sub(1).unwrap(), Scalar::q_pow(1));
    }

    #[test]
    fn rejects_empty_blocks() {
        assert!(Signature::new(0, 2).is_err());
        assert!(Signature::new(2, 0).is_err());
    }

    #[test]
    fn block_order_examples() {
        let s = Signature::new(2, 1).unwrap();
        assert_eq!(s.cmp_block(Root::new(1, 2), Root::new(1, 3)), Ordering::Less);
        assert_eq!(s.cmp_block(Root::new(1, 3), Root::new(2, 3)), Ordering::Less);
        assert_eq!(s.cmp_block_lowering(Root::new(1, 3), Root::new(2, 3)), Ordering::Greater);
    }

    #[test]
    fn odd_order_examples() {
        let s = Signature::new(2, 2).unwrap();
        let odd = s.odd_roots();
        assert_eq!(odd, vec![Root::new(1, 4), Root::new(2, 4), Root::new(1, 3), Root::new(2, 3)]);
        for (m, n) in [(1, 1), (2, 1), (1, 3), (3, 2)] {
            let s = Signature::new(m, n).unwrap();
            let odd = s.odd_roots();
            assert_eq!(odd.first(), Some(&Root::new(1, m + n)));
            assert_eq!(odd.last(), Some(&Root::new(m, m + 1)));
        }
    }

    #[test]
    fn counts() {
        let s = Signature::new(3, 2).unwrap();
        assert_eq!(s.odd_roots().len(), 6);
        assert_eq!(s.even_roots().count(), 3 + 1);
        assert_eq!(s.roots().len(), 10);
    }

    #[test]
    fn orders_are_total_and_intervals_partition() {
        for m in 1..=4 {
            for n in 1..=4 {
                let s = Signature::new(m, n).unwrap();
                let all = s.roots().to_vec();
                for &a in &all {
                    for &b in &all {
                        let ab = s.cmp_block(a, b);
                        assert_eq!(ab, s.cmp_block(b, a).reverse());
                        assert_eq!(ab == Ordering::Equal, a == b);
                        for &c in &all {
                            if ab == Ordering::Less && s.cmp_block(b, c) == Ordering::Less {
                                assert_eq!(s.cmp_block(a, c), Ordering::Less);
                            }
                        }
                    }
                }
                let odd = s.odd_roots();
                for &a in &odd {
                    for &b in &odd {
                        assert_eq!(s.cmp_odd(a, b), s.cmp_odd(b, a).reverse());
                        assert_eq!(s.cmp_odd(a, b) == Ordering::Equal, a == b);
                        for &c in &odd {
                            if s.cmp_odd(a, b) == Ordering::Less && s.cmp_odd(b, c) == Ordering::Less {
                                assert_eq!(s.cmp_odd(a, c), Ordering::Less);
                            }
                        }
                    }
                    let below = s.odd_below(a);
                    let above = s.odd_above(a);
                    assert_eq!(below.len() + 1 + above.len(), odd.len());
                    let mut joined = below.clone();
                    joined.push(a);
                    joined.extend(above);
                    assert_eq!(joined, odd);
                    assert_eq!(s.odd_at_or_below(a).len(), below.len() + 1);
                    assert_eq!(s.odd_at_or_above(a).len(), odd.len() - below.len());
                }
            }
        }
    }
}
