use std::cell::Cell;
use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, RwLock};

use crate::error::{AlgebraError, Result};
use crate::scalars::Scalar;
use crate::signature::{Root, RootId, Signature};

use super::element::{Element, Letter, Monomial};
use super::rules::{lowering_swap, raising_swap, SwapRule, Word};

/// Which family of root vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Kind {
    E,
    F,
}

const MAX_DEPTH: usize = 20_000;

thread_local! {
    static DEPTH: Cell<usize> = const { Cell::new(0) };
}

struct DepthGuard;

impl DepthGuard {
    fn enter() -> Result<Self> {
        DEPTH.with(|d| {
            let v = d.get() + 1;
            d.set(v);
            if v > MAX_DEPTH {
                d.set(v - 1);
                Err(AlgebraError::UnknownCommutationRule("straightening exceeded the recursion limit".into()))
            } else {
                Ok(DepthGuard)
            }
        })
    }
}

impl Drop for DepthGuard {
    fn drop(&mut self) {
        DEPTH.with(|d| d.set(d.get() - 1));
    }
}

/// The straightening engine for one signature.
///
/// Products are computed by appending one letter at a time to a normal
/// monomial and pushing it leftwards through the commutation rules. Results of
/// that step are memoized; the cross rules `[E_x, F_y]` are derived once at
/// construction from the simple-root relations.
pub struct Engine {
    sig: Signature,
    letter_cache: RwLock<HashMap<(Monomial, Letter), Element>>,
    cross: RwLock<HashMap<(RootId, RootId), Element>>,
    in_progress: Mutex<HashSet<(RootId, RootId)>>,
}

impl Engine {
    pub fn new(sig: Signature) -> Result<Self> {
        let engine = Self {
            sig,
            letter_cache: RwLock::new(HashMap::new()),
            cross: RwLock::new(HashMap::new()),
            in_progress: Mutex::new(HashSet::new()),
        };
        let mut pairs: Vec<(RootId, RootId)> = Vec::new();
        let nroots = engine.sig.roots().len();
        for x in 0..nroots {
            for y in 0..nroots {
                pairs.push((x, y));
            }
        }
        pairs.sort_by_key(|&(x, y)| engine.sig.root(x).height() + engine.sig.root(y).height());
        for (x, y) in pairs {
            engine.cross_rule(x, y)?;
        }
        Ok(engine)
    }

    pub fn for_rank(m: usize, n: usize) -> Result<Self> {
        Self::new(Signature::new(m, n)?)
    }

    pub fn sig(&self) -> &Signature {
        &self.sig
    }

    pub fn rank(&self) -> usize {
        self.sig.rank()
    }

    pub fn one(&self) -> Element {
        Element::one(self.rank())
    }

    pub fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(self.rank(), c)
    }

    /// Number of memoized single-letter products.
    pub fn cache_len(&self) -> usize {
        self.letter_cache.read().unwrap().len()
    }

    fn letter_monomial(&self, l: Letter) -> Monomial {
        let mut m = Monomial::identity(self.rank());
        match l {
            Letter::F(r) => m.f.push(r),
            Letter::E(r) => m.e.push(r),
            Letter::K(s, e) => m.k[s] = e,
        }
        m
    }

    /// The root vector `E_ij` or `F_ij` (a single PBW letter).
    pub fn root_element(&self, kind: Kind, i: usize, j: usize) -> Result<Element> {
        let r = self.sig.root_id(i, j)?;
        let l = match kind {
            Kind::E => Letter::E(r),
            Kind::F => Letter::F(r),
        };
        Ok(Element::monomial(self.letter_monomial(l), Scalar::one()))
    }

    pub fn e(&self, i: usize, j: usize) -> Result<Element> {
        self.root_element(Kind::E, i, j)
    }

    pub fn f(&self, i: usize, j: usize) -> Result<Element> {
        self.root_element(Kind::F, i, j)
    }

    /// `K_s^e`, `s` 1-based.
    pub fn k(&self, s: usize, e: i32) -> Result<Element> {
        self.sig.check_index(s)?;
        Ok(Element::monomial(self.letter_monomial(Letter::K(s - 1, e)), Scalar::one()))
    }

    /// `K^μ`.
    pub fn k_vec(&self, mu: &[i32]) -> Element {
        let mut m = Monomial::identity(self.rank());
        m.k.copy_from_slice(mu);
        Element::monomial(m, Scalar::one())
    }

    /// The recursive expansion `E_ij = E_ic E_cj − q_c^{-1} E_cj E_ic`
    /// (resp. `F_ij = −q_c F_ic F_cj + F_cj F_ic`), normal-formed. Without a
    /// splitting index this is the PBW letter itself.
    pub fn root_vector(&self, kind: Kind, i: usize, j: usize, c: Option<usize>) -> Result<Element> {
        self.sig.check_pair(i, j)?;
        let Some(c) = c else {
            return self.root_element(kind, i, j);
        };
        if !(i < c && c < j) {
            return Err(AlgebraError::BadRootIndices { i, j, reason: format!("splitting index {c} must lie strictly between") });
        }
        let left = self.root_vector(kind, i, c, (c > i + 1).then_some(c - 1))?;
        let right = self.root_vector(kind, c, j, (j > c + 1).then_some(j - 1))?;
        let lr = self.multiply(&left, &right)?;
        let rl = self.multiply(&right, &left)?;
        let qc = self.sig.q_sub(c)?;
        Ok(match kind {
            Kind::E => lr.sub(&rl.scale(&qc.inv()?)),
            Kind::F => rl.sub(&lr.scale(&qc)),
        })
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (mb, cb) in b.terms() {
            let letters = mb.letters();
            for (ma, ca) in a.terms() {
                let prod = self.mul_monomial_word(ma, &letters)?;
                out.add_scaled(&prod, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn multiply_all(&self, factors: &[Element]) -> Result<Element> {
        let mut acc = self.one();
        for x in factors {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    pub fn power(&self, a: &Element, n: u32) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, a)?;
        }
        Ok(acc)
    }

    /// `ab − (−1)^{|a||b|} ba`, distributed over parity components.
    pub fn super_commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        let mut out = Element::zero();
        let pa = a.split_parity(&self.sig);
        let pb = b.split_parity(&self.sig);
        for (i, x) in pa.iter().enumerate() {
            for (j, y) in pb.iter().enumerate() {
                if x.is_zero() || y.is_zero() {
                    continue;
                }
                let xy = self.multiply(x, y)?;
                let yx = self.multiply(y, x)?;
                out = out.add(&xy);
                if i * j == 1 {
                    out = out.add(&yx);
                } else {
                    out = out.sub(&yx);
                }
            }
        }
        Ok(out)
    }

    /// Product of the given odd root vectors, each taken in the odd order.
    /// Lowering factors follow the odd order; raising ones its reverse, so that
    /// the raising product is the anti-automorphic image of the lowering one.
    pub fn odd_product(&self, kind: Kind, set: &[Root]) -> Result<Element> {
        let mut roots: Vec<Root> = set.to_vec();
        roots.sort_by(|a, b| self.sig.cmp_odd(*a, *b));
        roots.dedup();
        if kind == Kind::E {
            roots.reverse();
        }
        let factors = roots.iter().map(|r| self.root_element(kind, r.i, r.j)).collect::<Result<Vec<_>>>()?;
        self.multiply_all(&factors)
    }

    /// `F_{I_1}` or `E_{I_1}`: the product over all odd roots.
    pub fn big_odd_product(&self, kind: Kind) -> Result<Element> {
        self.odd_product(kind, &self.sig.odd_roots())
    }

    /// Normal form of a word.
    pub fn word(&self, letters: &[Letter]) -> Result<Element> {
        self.mul_monomial_word(&Monomial::identity(self.rank()), letters)
    }

    fn mul_monomial_word(&self, m: &Monomial, letters: &[Letter]) -> Result<Element> {
        let mut acc = Element::monomial(m.clone(), Scalar::one());
        for &l in letters {
            let mut next = Element::zero();
            for (t, c) in acc.terms() {
                let p = self.mul_letter(t, l)?;
                next.add_scaled(&p, c);
            }
            acc = next;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    fn mul_element_word(&self, a: &Element, letters: &[Letter]) -> Result<Element> {
        let mut out = Element::zero();
        for (t, c) in a.terms() {
            out.add_scaled(&self.mul_monomial_word(t, letters)?, c);
        }
        Ok(out)
    }

    fn mul_monomial_element(&self, m: &Monomial, b: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (t, c) in b.terms() {
            out.add_scaled(&self.mul_monomial_word(m, &t.letters())?, c);
        }
        Ok(out)
    }

    fn apply_rule(&self, prefix: &Monomial, rule: SwapRule, first: Letter, second: Letter) -> Result<Element> {
        let mut out = self.mul_monomial_word(prefix, &[first, second])?.scale(&rule.coeff);
        for (c, w) in rule.extra {
            out.add_scaled(&self.mul_monomial_word(prefix, &w)?, &c);
        }
        Ok(out)
    }

    /// Normal form of `m · l` for a normal monomial `m`.
    fn mul_letter(&self, m: &Monomial, l: Letter) -> Result<Element> {
        if let Letter::K(s, e) = l {
            return Ok(self.mul_torus(m, s, e));
        }
        let key = (m.clone(), l);
        if let Some(hit) = self.letter_cache.read().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let _guard = DepthGuard::enter()?;
        let out = match l {
            Letter::E(r) => self.mul_raising(m, r)?,
            Letter::F(r) => self.mul_lowering(m, r)?,
            Letter::K(..) => unreachable!(),
        };
        self.letter_cache.write().unwrap().insert(key, out.clone());
        Ok(out)
    }

    fn mul_torus(&self, m: &Monomial, s: usize, e: i32) -> Element {
        let mut exp = 0;
        let qe = self.sig.q_exp(s + 1);
        for &x in &m.e {
            let r = self.sig.root(x);
            // E_x K_s^e = q_s^{-e(δ_si − δ_sj)} K_s^e E_x
            let d = i32::from(r.i == s + 1) - i32::from(r.j == s + 1);
            exp -= qe * e * d;
        }
        let mut out = m.clone();
        out.k[s] += e;
        Element::monomial(out, Scalar::q_pow(exp))
    }

    fn mul_raising(&self, m: &Monomial, r: RootId) -> Result<Element> {
        match m.e.last() {
            Some(&last) if last > r => {
                let mut prefix = m.clone();
                prefix.e.pop();
                let rule = raising_swap(&self.sig, self.sig.root(last), self.sig.root(r));
                self.apply_rule(&prefix, rule, Letter::E(r), Letter::E(last))
            }
            Some(&last) if last == r && self.sig.is_odd(self.sig.root(r)) => Ok(Element::zero()),
            _ => {
                let mut out = m.clone();
                out.e.push(r);
                Ok(Element::monomial(out, Scalar::one()))
            }
        }
    }

    fn mul_lowering(&self, m: &Monomial, r: RootId) -> Result<Element> {
        if let Some(&x) = m.e.last() {
            // E_x F_r = σ F_r E_x + [E_x, F_r]
            let mut prefix = m.clone();
            prefix.e.pop();
            let (rx, rr) = (self.sig.root(x), self.sig.root(r));
            let sigma = if self.sig.is_odd(rx) && self.sig.is_odd(rr) { Scalar::from_int(-1) } else { Scalar::one() };
            let moved = self.mul_letter(&prefix, Letter::F(r))?;
            let mut out = self.mul_element_word(&moved, &[Letter::E(x)])?.scale(&sigma);
            let cross = self.cross_rule(x, r)?;
            out = out.add(&self.mul_monomial_element(&prefix, &cross)?);
            return Ok(out);
        }
        if m.k.iter().any(|&x| x != 0) {
            // K^μ F_r = q^{…} F_r K^μ
            let root = self.sig.root(r);
            let mut exp = 0;
            for (s0, &k) in m.k.iter().enumerate() {
                let s = s0 + 1;
                let d = i32::from(root.i == s) - i32::from(root.j == s);
                exp -= self.sig.q_exp(s) * k * d;
            }
            let mut bare = m.clone();
            bare.k.iter_mut().for_each(|x| *x = 0);
            let moved = self.mul_letter(&bare, Letter::F(r))?;
            let mut out = Element::zero();
            let c = Scalar::q_pow(exp);
            for (t, coef) in moved.terms() {
                let mut t = t.clone();
                t.k.copy_from_slice(&m.k);
                out.add_term(t, coef * &c);
            }
            return Ok(out);
        }
        match m.f.last() {
            Some(&last) if last < r => {
                let mut prefix = m.clone();
                prefix.f.pop();
                let rule = lowering_swap(&self.sig, self.sig.root(last), self.sig.root(r));
                self.apply_rule(&prefix, rule, Letter::F(r), Letter::F(last))
            }
            Some(&last) if last == r && self.sig.is_odd(self.sig.root(r)) => Ok(Element::zero()),
            _ => {
                let mut out = m.clone();
                out.f.push(r);
                Ok(Element::monomial(out, Scalar::one()))
            }
        }
    }

    /// `[E_x, F_y]` in normal form, derived recursively from the simple-root
    /// relations and the defining expansions of the root vectors.
    pub fn cross_rule(&self, x: RootId, y: RootId) -> Result<Element> {
        if let Some(hit) = self.cross.read().unwrap().get(&(x, y)) {
            return Ok(hit.clone());
        }
        if !self.in_progress.lock().unwrap().insert((x, y)) {
            let (rx, ry) = (self.sig.root(x), self.sig.root(y));
            return Err(AlgebraError::UnknownCommutationRule(format!("[E_{{{rx}}}, F_{{{ry}}}] depends on itself")));
        }
        let result = self.derive_cross(x, y);
        self.in_progress.lock().unwrap().remove(&(x, y));
        let value = result?;
        self.cross.write().unwrap().insert((x, y), value.clone());
        Ok(value)
    }

    fn derive_cross(&self, x: RootId, y: RootId) -> Result<Element> {
        let sig = &self.sig;
        let (rx, ry) = (sig.root(x), sig.root(y));
        if rx.is_simple() && ry.is_simple() {
            if rx != ry {
                return Ok(Element::zero());
            }
            let k = rx.i;
            let mut plus = vec![0; self.rank()];
            plus[k - 1] = 1;
            plus[k] = -1;
            let minus: Vec<i32> = plus.iter().map(|v| -v).collect();
            let num = self.k_vec(&plus).sub(&self.k_vec(&minus));
            return Ok(num.scale(&sig.q_diff(k).inv()?));
        }
        let py = sig.parity(ry);
        if !rx.is_simple() {
            // E_x = E_ic E_cj − q_c^{-1} E_cj E_ic with c = j − 1
            let c = rx.j - 1;
            let a = sig.id_of(Root::new(rx.i, c));
            let b = sig.id_of(Root::new(c, rx.j));
            let term = |u: RootId, v: RootId| -> Result<Element> {
                // [E_u E_v, F] = E_u [E_v, F] + (−1)^{|v||F|} [E_u, F] E_v
                let pv = sig.parity(sig.root(v));
                let left = self.multiply(&self.letter_el(Letter::E(u)), &self.cross_rule(v, y)?)?;
                let right = self.mul_element_word(&self.cross_rule(u, y)?, &[Letter::E(v)])?;
                let s = if pv * py == 1 { Scalar::from_int(-1) } else { Scalar::one() };
                Ok(left.add(&right.scale(&s)))
            };
            let qc_inv = Scalar::q_pow(-sig.q_exp(c));
            return Ok(term(a, b)?.sub(&term(b, a)?.scale(&qc_inv)));
        }
        // x simple, y = (i,j) not: F_y = −q_c F_ic F_cj + F_cj F_ic, c = j − 1
        let c = ry.j - 1;
        let a = sig.id_of(Root::new(ry.i, c));
        let b = sig.id_of(Root::new(c, ry.j));
        let px = sig.parity(rx);
        let term = |u: RootId, v: RootId| -> Result<Element> {
            // [E, F_u F_v] = [E, F_u] F_v + (−1)^{|E||u|} F_u [E, F_v]
            let pu = sig.parity(sig.root(u));
            let left = self.mul_element_word(&self.cross_rule(x, u)?, &[Letter::F(v)])?;
            let right = self.multiply(&self.letter_el(Letter::F(u)), &self.cross_rule(x, v)?)?;
            let s = if px * pu == 1 { Scalar::from_int(-1) } else { Scalar::one() };
            Ok(left.add(&right.scale(&s)))
        };
        let qc = Scalar::q_pow(sig.q_exp(c));
        Ok(term(b, a)?.sub(&term(a, b)?.scale(&qc)))
    }

    fn letter_el(&self, l: Letter) -> Element {
        Element::monomial(self.letter_monomial(l), Scalar::one())
    }

    /// Normal form of a scalar-weighted list of words.
    pub fn words(&self, ws: &[Word]) -> Result<Element> {
        let mut out = Element::zero();
        for (c, w) in ws {
            out.add_scaled(&self.word(w)?, c);
        }
        Ok(out)
    }
}
