use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::Scalar;
use crate::signature::{RootId, Signature};

/// One letter of a word in the algebra. `K(s, e)` is `K_s^e` with `s` 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    F(RootId),
    K(usize, i32),
    E(RootId),
}

/// A PBW monomial `F_… · K^μ · E_…`.
///
/// `f` lists lowering factors left to right (root ids non-increasing), `e`
/// raising factors left to right (root ids non-decreasing). Even root vectors
/// may repeat; odd ones occur at most once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub f: Vec<RootId>,
    pub k: Vec<i32>,
    pub e: Vec<RootId>,
}

impl Monomial {
    pub fn identity(rank: usize) -> Self {
        Self { f: Vec::new(), k: vec![0; rank], e: Vec::new() }
    }

    pub fn is_identity(&self) -> bool {
        self.f.is_empty() && self.e.is_empty() && self.k.iter().all(|&x| x == 0)
    }

    /// True for a pure `K^μ` monomial.
    pub fn is_torus(&self) -> bool {
        self.f.is_empty() && self.e.is_empty()
    }

    pub fn letters(&self) -> Vec<Letter> {
        let mut out: Vec<Letter> = self.f.iter().map(|&r| Letter::F(r)).collect();
        out.extend(self.k.iter().enumerate().filter(|(_, &x)| x != 0).map(|(s, &x)| Letter::K(s, x)));
        out.extend(self.e.iter().map(|&r| Letter::E(r)));
        out
    }

    pub fn parity(&self, sig: &Signature) -> u8 {
        let odd = self.f.iter().chain(&self.e).filter(|&&r| sig.is_odd(sig.root(r))).count();
        (odd % 2) as u8
    }

    /// `U^0`-conjugation weight in the `ε` basis.
    pub fn weight(&self, sig: &Signature) -> Vec<i64> {
        let mut w = vec![0i64; sig.rank()];
        for &r in &self.e {
            let root = sig.root(r);
            w[root.i - 1] += 1;
            w[root.j - 1] -= 1;
        }
        for &r in &self.f {
            let root = sig.root(r);
            w[root.i - 1] -= 1;
            w[root.j - 1] += 1;
        }
        w
    }
}

/// A finite linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(Monomial::identity(rank), Scalar::one())
    }

    pub fn scalar(rank: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::identity(rank), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_coefficients(&self, f: impl Fn(&Scalar) -> Scalar) -> Element {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Parity if every term has the same one (zero counts as even).
    pub fn parity(&self, sig: &Signature) -> Option<u8> {
        let mut it = self.terms.keys().map(|m| m.parity(sig));
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    /// Splits into even and odd parts.
    pub fn split_parity(&self, sig: &Signature) -> [Element; 2] {
        let mut out = [Element::zero(), Element::zero()];
        for (m, c) in &self.terms {
            out[m.parity(sig) as usize].add_term(m.clone(), c.clone());
        }
        out
    }

    /// The coefficient if `self` is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_identity().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Renders in the expression syntax understood by the parser.
    pub fn display<'a>(&'a self, sig: &'a Signature) -> ElementDisplay<'a> {
        ElementDisplay { el: self, sig }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m, c.to_string()))).finish()
    }
}

pub struct ElementDisplay<'a> {
    el: &'a Element,
    sig: &'a Signature,
}

impl ElementDisplay<'_> {
    fn root_run(&self, kind: char, ids: &[RootId], parts: &mut Vec<String>) {
        let mut k = 0;
        while k < ids.len() {
            let mut run = 1;
            while k + run < ids.len() && ids[k + run] == ids[k] {
                run += 1;
            }
            let r = self.sig.root(ids[k]);
            if run == 1 {
                parts.push(format!("{kind}[{r}]"));
            } else {
                parts.push(format!("{kind}[{r}]^{run}"));
            }
            k += run;
        }
    }

    fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        self.root_run('F', &m.f, &mut parts);
        for (s, &x) in m.k.iter().enumerate() {
            match x {
                0 => {}
                1 => parts.push(format!("K[{}]", s + 1)),
                _ => parts.push(format!("K[{}]^{x}", s + 1)),
            }
        }
        self.root_run('E', &m.e, &mut parts);
        parts.join("*")
    }
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.el.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.el.terms.iter().enumerate() {
            let body = self.monomial_text(m);
            let (neg, mag) = match c.as_monomial() {
                Some((a, _)) if a < 0.into() => (true, -c),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let coef = if mag.as_monomial().is_some() { mag.to_string() } else { format!("({mag})") };
            match (body.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{coef}")?,
                (false, true) => write!(f, "{body}")?,
                (false, false) => write!(f, "{coef}*{body}")?,
            }
        }
        Ok(())
    }
}
