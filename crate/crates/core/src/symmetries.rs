//! The anti-automorphism `Ω`, the graded anti-automorphism `Ψ`, and the braid
//! automorphisms `T_i`, `T_i^{-1}` (`i ≠ m`).
//!
//! Maps are given on Chevalley generators; images of non-simple root vectors
//! are computed from the defining expansion `E_ij = E_ic E_cj − q_c^{-1} E_cj E_ic`
//! (and its lowering analogue) and memoized per application context.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::checks::Report;
use crate::error::{AlgebraError, Result};
use crate::pbw::{Element, Engine, Kind, Letter};
use crate::scalars::Scalar;
use crate::signature::Root;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraMap {
    Omega,
    Psi,
    T(usize),
    TInv(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Automorphism,
    AntiAutomorphism,
    GradedAntiAutomorphism,
}

impl AlgebraMap {
    pub fn flavor(self) -> Flavor {
        match self {
            Self::Omega => Flavor::AntiAutomorphism,
            Self::Psi => Flavor::GradedAntiAutomorphism,
            Self::T(_) | Self::TInv(_) => Flavor::Automorphism,
        }
    }

    /// Whether scalars are transformed by `q ↦ q^{-1}`.
    pub fn inverts_q(self) -> bool {
        matches!(self, Self::Omega | Self::Psi)
    }
}

impl fmt::Display for AlgebraMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Omega => write!(f, "Omega"),
            Self::Psi => write!(f, "Psi"),
            Self::T(i) => write!(f, "T[{i}]"),
            Self::TInv(i) => write!(f, "Tinv[{i}]"),
        }
    }
}

/// Applies one map, caching images of root-vector letters.
pub struct Applier<'a> {
    eng: &'a Engine,
    map: AlgebraMap,
    cache: HashMap<Letter, Element>,
}

impl<'a> Applier<'a> {
    pub fn new(eng: &'a Engine, map: AlgebraMap) -> Result<Self> {
        if let AlgebraMap::T(i) | AlgebraMap::TInv(i) = map {
            if i == 0 || i >= eng.rank() {
                return Err(AlgebraError::IndexOutOfRange(format!("braid index {i} outside 1..{}", eng.rank())));
            }
            if i == eng.sig().m() {
                return Err(AlgebraError::BraidAtOddRoot(i));
            }
        }
        Ok(Self { eng, map, cache: HashMap::new() })
    }

    fn coeff(&self, c: &Scalar) -> Scalar {
        if self.map.inverts_q() {
            c.invert_q()
        } else {
            c.clone()
        }
    }

    fn letter_parity(&self, l: Letter) -> u8 {
        match l {
            Letter::E(r) | Letter::F(r) => self.eng.sig().parity(self.eng.sig().root(r)),
            Letter::K(..) => 0,
        }
    }

    /// Image of the product `x_1 ⋯ x_k` given the images of the factors.
    fn combine(&self, images: &[Element], parities: &[u8]) -> Result<Element> {
        match self.map.flavor() {
            Flavor::Automorphism => self.eng.multiply_all(images),
            Flavor::AntiAutomorphism => {
                let rev: Vec<Element> = images.iter().rev().cloned().collect();
                self.eng.multiply_all(&rev)
            }
            Flavor::GradedAntiAutomorphism => {
                let rev: Vec<Element> = images.iter().rev().cloned().collect();
                let mut odd_pairs = 0u32;
                for a in 0..parities.len() {
                    for b in a + 1..parities.len() {
                        odd_pairs += u32::from(parities[a] * parities[b]);
                    }
                }
                let p = self.eng.multiply_all(&rev)?;
                Ok(if odd_pairs % 2 == 1 { p.neg() } else { p })
            }
        }
    }

    fn simple_image(&self, kind: Kind, i: usize) -> Result<Element> {
        let eng = self.eng;
        let sig = eng.sig();
        let e = |a: usize| eng.e(a, a + 1);
        let f = |a: usize| eng.f(a, a + 1);
        let k_alpha = |a: usize, sign: i32| {
            let mut mu = vec![0; eng.rank()];
            mu[a - 1] = sign;
            mu[a] = -sign;
            eng.k_vec(&mu)
        };
        let mul = |xs: &[Element]| eng.multiply_all(xs);
        Ok(match (self.map, kind) {
            (AlgebraMap::Omega, Kind::E) => f(i)?,
            (AlgebraMap::Omega, Kind::F) => e(i)?,
            (AlgebraMap::Psi, Kind::E) => e(i)?,
            (AlgebraMap::Psi, Kind::F) => f(i)?,
            (AlgebraMap::T(t), kind) | (AlgebraMap::TInv(t), kind) => {
                let inverse = matches!(self.map, AlgebraMap::TInv(_));
                let qt = sig.q_sub(t)?;
                let qt_inv = qt.inv()?;
                let (x, y) = match kind {
                    Kind::E => (e(t)?, e(i)?),
                    Kind::F => (f(t)?, f(i)?),
                };
                if i == t {
                    match (kind, inverse) {
                        (Kind::E, false) => mul(&[f(t)?, k_alpha(t, 1)])?.neg(),
                        (Kind::F, false) => mul(&[k_alpha(t, -1), e(t)?])?.neg(),
                        (Kind::E, true) => mul(&[k_alpha(t, -1), f(t)?])?.neg(),
                        (Kind::F, true) => mul(&[e(t)?, k_alpha(t, 1)])?.neg(),
                    }
                } else if i.abs_diff(t) > 1 {
                    y
                } else {
                    let xy = mul(&[x.clone(), y.clone()])?;
                    let yx = mul(&[y, x])?;
                    match (kind, inverse) {
                        // −E_t E_i + q_t^{-1} E_i E_t
                        (Kind::E, false) => yx.scale(&qt_inv).sub(&xy),
                        // −F_i F_t + q_t F_t F_i
                        (Kind::F, false) => xy.scale(&qt).sub(&yx),
                        // −E_i E_t + q_t^{-1} E_t E_i
                        (Kind::E, true) => xy.scale(&qt_inv).sub(&yx),
                        // −F_t F_i + q_t F_i F_t
                        (Kind::F, true) => yx.scale(&qt).sub(&xy),
                    }
                }
            }
        })
    }

    fn root_image(&mut self, kind: Kind, r: Root) -> Result<Element> {
        let id = self.eng.sig().id_of(r);
        let letter = match kind {
            Kind::E => Letter::E(id),
            Kind::F => Letter::F(id),
        };
        if let Some(hit) = self.cache.get(&letter) {
            return Ok(hit.clone());
        }
        let img = if r.is_simple() {
            self.simple_image(kind, r.i)?
        } else {
            let c = r.j - 1;
            let (a, b) = (Root::new(r.i, c), Root::new(c, r.j));
            let (ia, ib) = (self.root_image(kind, a)?, self.root_image(kind, b)?);
            let sig = self.eng.sig();
            let (pa, pb) = (sig.parity(a), sig.parity(b));
            let ab = self.combine(&[ia.clone(), ib.clone()], &[pa, pb])?;
            let ba = self.combine(&[ib, ia], &[pb, pa])?;
            let qc = Scalar::q_pow(sig.q_exp(c));
            match kind {
                // E_ab − q_c^{-1} E_ba
                Kind::E => ab.sub(&ba.scale(&self.coeff(&qc.inv()?))),
                // −q_c F_ab + F_ba
                Kind::F => ba.sub(&ab.scale(&self.coeff(&qc))),
            }
        };
        self.cache.insert(letter, img.clone());
        Ok(img)
    }

    fn letter_image(&mut self, l: Letter) -> Result<Element> {
        let sig = self.eng.sig();
        match l {
            Letter::E(r) => self.root_image(Kind::E, sig.root(r)),
            Letter::F(r) => self.root_image(Kind::F, sig.root(r)),
            Letter::K(s, e) => {
                let s1 = s + 1;
                let target = match self.map {
                    AlgebraMap::T(t) | AlgebraMap::TInv(t) if s1 == t => t + 1,
                    AlgebraMap::T(t) | AlgebraMap::TInv(t) if s1 == t + 1 => t,
                    _ => s1,
                };
                let e = if self.map == AlgebraMap::Omega { -e } else { e };
                self.eng.k(target, e)
            }
        }
    }

    pub fn apply(&mut self, x: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let letters = m.letters();
            let images = letters.iter().map(|&l| self.letter_image(l)).collect::<Result<Vec<_>>>()?;
            let parities: Vec<u8> = letters.iter().map(|&l| self.letter_parity(l)).collect();
            let img = self.combine(&images, &parities)?;
            out.add_scaled(&img, &self.coeff(c));
        }
        Ok(out)
    }
}

pub fn apply(eng: &Engine, map: AlgebraMap, x: &Element) -> Result<Element> {
    Applier::new(eng, map)?.apply(x)
}

/// Braid indices at which `T_i` is defined.
pub fn braid_indices(eng: &Engine) -> Vec<usize> {
    (1..eng.rank()).filter(|&i| i != eng.sig().m()).collect()
}

fn generators(eng: &Engine) -> Result<Vec<(String, Element)>> {
    let mut out = Vec::new();
    for i in 1..eng.rank() {
        out.push((format!("E[{},{}]", i, i + 1), eng.e(i, i + 1)?));
        out.push((format!("F[{},{}]", i, i + 1), eng.f(i, i + 1)?));
    }
    for s in 1..=eng.rank() {
        out.push((format!("K[{s}]"), eng.k(s, 1)?));
        out.push((format!("K[{s}]^-1"), eng.k(s, -1)?));
    }
    Ok(out)
}

/// Involutivity of `Ω`, `Ψ`, inverse pairs `T_i`/`T_i^{-1}`, the root-vector
/// images of `Ω` and `Ψ`, and the braid-composite formulas for root vectors.
pub fn symmetry_suite(eng: &Engine, extra: &[Element]) -> Result<Report> {
    let sig = eng.sig();
    let mut rep = Report::new(format!("symmetries ({},{})", sig.m(), sig.n()));
    let mut samples = generators(eng)?;
    for (k, x) in extra.iter().enumerate() {
        samples.push((format!("sample {k}"), x.clone()));
    }
    for map in [AlgebraMap::Omega, AlgebraMap::Psi] {
        let mut ap = Applier::new(eng, map)?;
        for (name, x) in &samples {
            let once = ap.apply(x)?;
            let twice = ap.apply(&once)?;
            rep.equal(eng, format!("{map}^2 ({name})"), &twice, x);
        }
    }
    for i in braid_indices(eng) {
        let mut t = Applier::new(eng, AlgebraMap::T(i))?;
        let mut ti = Applier::new(eng, AlgebraMap::TInv(i))?;
        for (name, x) in &samples {
            let a = t.apply(&ti.apply(x)?)?;
            rep.equal(eng, format!("T[{i}] Tinv[{i}] ({name})"), &a, x);
            let b = ti.apply(&t.apply(x)?)?;
            rep.equal(eng, format!("Tinv[{i}] T[{i}] ({name})"), &b, x);
        }
    }

    let mut omega = Applier::new(eng, AlgebraMap::Omega)?;
    let mut psi = Applier::new(eng, AlgebraMap::Psi)?;
    for r in sig.roots() {
        let (e, f) = (eng.e(r.i, r.j)?, eng.f(r.i, r.j)?);
        rep.equal(eng, format!("Omega(E[{r}]) = F[{r}]"), &omega.apply(&e)?, &f);
        for (label, x) in [("E", &e), ("F", &f)] {
            let img = psi.apply(x)?;
            let ok = q_power_multiple(&img, x);
            rep.record(format!("Psi({label}[{r}]) = ±q^z {label}[{r}]"), ok, (!ok).then(|| img.display(sig).to_string()));
        }
    }

    for r in sig.roots().iter().filter(|r| r.height() >= 2) {
        let (i, j) = (r.i, r.j);
        let sign = if (j - i - 1) % 2 == 1 { Scalar::from_int(-1) } else { Scalar::one() };
        for kind in [Kind::E, Kind::F] {
            let target = eng.root_element(kind, i, j)?;
            let label = if kind == Kind::E { "E" } else { "F" };
            // first composite: T_i T_{i+1} ⋯ T_{j−2} applied to the root vector at j−1
            let first: Vec<usize> = (i..=j - 2).collect();
            if first.iter().all(|&t| t != sig.m()) {
                let mut x = eng.root_element(kind, j - 1, j)?;
                for &t in first.iter().rev() {
                    x = apply(eng, AlgebraMap::T(t), &x)?;
                }
                rep.equal(eng, format!("{label}[{r}] via T[{i}..{}]", j - 2), &x.scale(&sign), &target);
            }
            // second composite: T^{-1}_{j−1} ⋯ T^{-1}_{i+1} applied to the root vector at i
            let second: Vec<usize> = (i + 1..=j - 1).rev().collect();
            if second.iter().all(|&t| t != sig.m()) {
                let mut x = eng.root_element(kind, i, i + 1)?;
                for &t in second.iter().rev() {
                    x = apply(eng, AlgebraMap::TInv(t), &x)?;
                }
                rep.equal(eng, format!("{label}[{r}] via Tinv[{}..{}]", j - 1, i + 1), &x.scale(&sign), &target);
            }
        }
    }
    Ok(rep)
}

fn q_power_multiple(img: &Element, x: &Element) -> bool {
    let (Some((mi, ci)), Some((mx, cx))) = (img.terms().next(), x.terms().next()) else {
        return false;
    };
    if img.len() != 1 || x.len() != 1 || mi != mx {
        return false;
    }
    ci.div(cx).ok().and_then(|r| r.as_signed_q_power()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_small_ranks() {
        for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
            let eng = Engine::for_rank(m, n).unwrap();
            let rep = symmetry_suite(&eng, &[]).unwrap();
            let bad: Vec<_> = rep.failures().map(|c| format!("{} {:?}", c.name, c.detail)).collect();
            assert!(bad.is_empty(), "({m},{n}): {bad:#?}");
        }
    }

    #[test]
    fn braid_at_odd_index_rejected() {
        let eng = Engine::for_rank(2, 1).unwrap();
        assert!(matches!(Applier::new(&eng, AlgebraMap::T(2)), Err(AlgebraError::BraidAtOddRoot(2))));
    }

    #[test]
    fn t1_sends_e23_to_minus_e13() {
        let eng = Engine::for_rank(2, 1).unwrap();
        let img = apply(&eng, AlgebraMap::T(1), &eng.e(2, 3).unwrap()).unwrap();
        assert_eq!(img, eng.e(1, 3).unwrap().neg());
    }
}
