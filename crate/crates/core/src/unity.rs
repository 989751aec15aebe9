//! Specialization at an odd root of unity `η` of order `l`: central
//! `l`-th powers, the reduced algebra `u_{η,χ}` for a central character `χ`
//! with `χ(E_ij^l) = 0`, its nilpotent even raising part, and Kac modules
//! over it.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checks::Report;
use crate::error::{AlgebraError, Result};
use crate::linalg::{kernel, rref, Matrix};
use crate::modules::{build, HighestWeight, WeightModule};
use crate::pbw::{Element, Engine, Letter, Monomial};
use crate::scalars::{CyclotomicField, CyclotomicScalar, Field};
use crate::signature::RootId;
use crate::weights::Character;

pub type SmallElement = BTreeMap<Monomial, CyclotomicScalar>;

/// Specializes every coefficient at `η`, dropping vanishing terms.
pub fn specialize(field: &CyclotomicField, x: &Element) -> Result<SmallElement> {
    let mut out = SmallElement::new();
    for (m, c) in x.terms() {
        let v = field.specialize(c)?;
        if !v.is_zero() {
            out.insert(m.clone(), v);
        }
    }
    Ok(out)
}

fn even_generators(eng: &Engine) -> Vec<(String, Element)> {
    let sig = eng.sig();
    let mut out = Vec::new();
    for r in sig.even_roots() {
        out.push((format!("E[{r}]"), eng.e(r.i, r.j).expect("valid root")));
        out.push((format!("F[{r}]"), eng.f(r.i, r.j).expect("valid root")));
    }
    out
}

/// `E_ij^l`, `F_ij^l` (even `(i,j)`) and `K_s^{±l}` commute with every
/// Chevalley generator after specialization.
pub fn centrality_check(eng: &Engine, l: u32) -> Result<Report> {
    let field = CyclotomicField::new(l)?;
    let sig = eng.sig();
    let mut rep = Report::new(format!("central l-th powers ({},{}) l={l}", sig.m(), sig.n()));
    let mut powers: Vec<(String, Element)> = Vec::new();
    for (name, g) in even_generators(eng) {
        powers.push((format!("{name}^{l}"), eng.power(&g, l)?));
    }
    for s in 1..=sig.rank() {
        powers.push((format!("K[{s}]^{l}"), eng.k(s, l as i32)?));
        powers.push((format!("K[{s}]^-{l}"), eng.k(s, -(l as i32))?));
    }
    let mut gens: Vec<(String, Element)> = Vec::new();
    for i in 1..sig.rank() {
        gens.push((format!("E[{},{}]", i, i + 1), eng.e(i, i + 1)?));
        gens.push((format!("F[{},{}]", i, i + 1), eng.f(i, i + 1)?));
    }
    for s in 1..=sig.rank() {
        gens.push((format!("K[{s}]"), eng.k(s, 1)?));
    }
    for (pn, p) in &powers {
        for (gn, g) in &gens {
            rep.attempt(format!("[{pn}, {gn}] = 0 at eta"), || {
                let c = eng.multiply(p, g)?.sub(&eng.multiply(g, p)?);
                let s = specialize(&field, &c)?;
                Ok((!s.is_empty()).then(|| format!("{} surviving terms", s.len())))
            });
        }
    }
    Ok(rep)
}

/// Central character data: `χ(F_ij^l)` for even roots, `χ(K_s^l)`;
/// `χ(E_ij^l) = 0`.
#[derive(Clone, Debug)]
pub struct CentralCharacter {
    pub y: BTreeMap<RootId, CyclotomicScalar>,
    pub z: Vec<CyclotomicScalar>,
}

impl CentralCharacter {
    /// The central character determined by a torus character, with `χ(y) = 0`.
    pub fn from_torus(field: &CyclotomicField, ch: &Character<CyclotomicScalar>, l: u32) -> Result<Self> {
        let z = ch.values.iter().map(|v| Field::pow(field, v, i64::from(l))).collect::<Result<Vec<_>>>()?;
        Ok(Self { y: BTreeMap::new(), z })
    }

    /// `χ(z_i z_j^{-1})² ≠ 1` for every odd positive root.
    pub fn separates_odd_roots(&self, field: &CyclotomicField, eng: &Engine) -> Result<bool> {
        for r in eng.sig().odd_roots() {
            let ratio = field.div(&self.z[r.i - 1], &self.z[r.j - 1])?;
            if field.mul(&ratio, &ratio) == field.one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The reduced algebra `u_{η,χ}`.
pub struct SmallAlgebra<'a> {
    pub eng: &'a Engine,
    pub field: CyclotomicField,
    pub chi: CentralCharacter,
}

impl<'a> SmallAlgebra<'a> {
    pub fn new(eng: &'a Engine, l: u32, chi: CentralCharacter) -> Result<Self> {
        let field = CyclotomicField::new(l)?;
        if chi.z.len() != eng.rank() {
            return Err(AlgebraError::IncompatibleCharacter(format!("{} torus values for rank {}", chi.z.len(), eng.rank())));
        }
        Ok(Self { eng, field, chi })
    }

    pub fn l(&self) -> u32 {
        self.field.order()
    }

    /// Pulls central `l`-th powers out of a PBW monomial and applies `χ`.
    pub fn reduce_monomial(&self, m: &Monomial) -> Result<Option<(Monomial, CyclotomicScalar)>> {
        let l = self.l() as usize;
        let f = &self.field;
        let mut coeff = f.one();
        let mut out = Monomial::identity(self.eng.rank());
        let mut fw = Vec::new();
        for run in m.f.chunk_by(|a, b| a == b) {
            if run.len() >= l {
                let y = self.chi.y.get(&run[0]).cloned().unwrap_or_else(|| f.zero());
                coeff = f.mul(&coeff, &Field::pow(f, &y, (run.len() / l) as i64)?);
            }
            fw.extend(std::iter::repeat_n(run[0], run.len() % l));
        }
        for run in m.e.chunk_by(|a, b| a == b) {
            if run.len() >= l {
                return Ok(None);
            }
        }
        for (s, &k) in m.k.iter().enumerate() {
            let (q, r) = (k.div_euclid(l as i32), k.rem_euclid(l as i32));
            coeff = f.mul(&coeff, &Field::pow(f, &self.chi.z[s], i64::from(q))?);
            out.k[s] = r;
        }
        if f.is_zero(&coeff) {
            return Ok(None);
        }
        out.f = fw;
        out.e = m.e.clone();
        Ok(Some((out, coeff)))
    }

    pub fn reduce(&self, x: &SmallElement) -> Result<SmallElement> {
        let f = &self.field;
        let mut out = SmallElement::new();
        for (m, c) in x {
            if let Some((rm, rc)) = self.reduce_monomial(m)? {
                let v = f.mul(c, &rc);
                let cur = out.remove(&rm).unwrap_or_else(|| f.zero());
                let s = f.add(&cur, &v);
                if !s.is_zero() {
                    out.insert(rm, s);
                }
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, a: &SmallElement, b: &SmallElement) -> Result<SmallElement> {
        let f = &self.field;
        let mut acc = SmallElement::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let p = self
                    .eng
                    .multiply(&Element::monomial(ma.clone(), crate::Scalar::one()), &Element::monomial(mb.clone(), crate::Scalar::one()))?;
                let c = f.mul(ca, cb);
                for (m, v) in self.reduce(&specialize(f, &p)?)? {
                    let cur = acc.remove(&m).unwrap_or_else(|| f.zero());
                    let s = f.add(&cur, &f.mul(&c, &v));
                    if !s.is_zero() {
                        acc.insert(m, s);
                    }
                }
            }
        }
        Ok(acc)
    }

    /// Reduced PBW monomials `F_I F_0^ψ K^μ E_0^ψ' E_I'` with exponents in `[0, l)`.
    pub fn basis(&self) -> Vec<Monomial> {
        let sig = self.eng.sig();
        let l = self.l() as usize;
        let rank = sig.rank();
        let odd: Vec<RootId> = sig.odd_roots().into_iter().map(|r| sig.id_of(r)).collect();
        let even: Vec<RootId> = sig.even_roots().map(|r| sig.id_of(r)).collect();
        let subsets: Vec<Vec<RootId>> = (0u32..1 << odd.len())
            .map(|mask| {
                let mut s: Vec<RootId> = (0..odd.len()).filter(|b| mask >> b & 1 == 1).map(|b| odd[b]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        let even_words: Vec<Vec<RootId>> = exponent_vectors(even.len(), l)
            .into_iter()
            .map(|ex| {
                let mut w: Vec<RootId> = Vec::new();
                for (k, &c) in ex.iter().enumerate() {
                    w.extend(std::iter::repeat_n(even[k], c));
                }
                w.sort_unstable();
                w
            })
            .collect();
        let tori = exponent_vectors(rank, l);
        let mut out = Vec::new();
        for fi in &subsets {
            for f0 in &even_words {
                let mut fw: Vec<RootId> = fi.iter().chain(f0).copied().collect();
                fw.sort_unstable_by(|a, b| b.cmp(a));
                for mu in &tori {
                    for e0 in &even_words {
                        for ei in &subsets {
                            let mut ew: Vec<RootId> = e0.iter().chain(ei).copied().collect();
                            ew.sort_unstable();
                            out.push(Monomial { f: fw.clone(), k: mu.iter().map(|&x| x as i32).collect(), e: ew });
                        }
                    }
                }
            }
        }
        out
    }

    /// `4^{mn} l^{2|I₀| + m + n}`.
    pub fn expected_dim(&self) -> u128 {
        let sig = self.eng.sig();
        let (m, n) = (sig.m() as u32, sig.n() as u32);
        let i0 = m * (m - 1) / 2 + n * (n - 1) / 2;
        4u128.pow(m * n) * u128::from(self.l()).pow(2 * i0 + m + n)
    }

    /// Reduced products of random basis triples associate, and land in the
    /// span of the basis.
    pub fn associativity_probe(&self, seed: u64, count: usize) -> Result<Report> {
        let basis = self.basis();
        let set: HashSet<&Monomial> = basis.iter().collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rep = Report::new("reduced algebra associativity");
        let one = |m: &Monomial| SmallElement::from([(m.clone(), self.field.one())]);
        for t in 0..count {
            let [a, b, c] = [0; 3].map(|_| one(&basis[rng.gen_range(0..basis.len())]));
            rep.attempt(format!("triple {t}"), || {
                let left = self.multiply(&self.multiply(&a, &b)?, &c)?;
                let right = self.multiply(&a, &self.multiply(&b, &c)?)?;
                if left != right {
                    return Ok(Some("(ab)c != a(bc)".into()));
                }
                Ok(left.keys().find(|m| !set.contains(m)).map(|m| format!("non-basis monomial {m:?}")))
            });
        }
        Ok(rep)
    }
}

fn exponent_vectors(len: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..l).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Smallest `N` with `B^N = 0`, where `B` is the augmentation ideal of the
/// even raising part with `E_ij^l = 0`.
pub fn b_chi_nilpotency(eng: &Engine, l: u32) -> Result<usize> {
    let field = CyclotomicField::new(l)?;
    let sig = eng.sig();
    let even: Vec<RootId> = sig.even_roots().map(|r| sig.id_of(r)).collect();
    let words: Vec<Vec<RootId>> = exponent_vectors(even.len(), l as usize)
        .into_iter()
        .filter(|ex| ex.iter().any(|&x| x > 0))
        .map(|ex| {
            let mut w: Vec<RootId> = Vec::new();
            for (k, &c) in ex.iter().enumerate() {
                w.extend(std::iter::repeat_n(even[k], c));
            }
            w.sort_unstable();
            w
        })
        .collect();
    if words.is_empty() {
        return Ok(1);
    }
    let index: BTreeMap<Vec<RootId>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let rank = eng.rank();
    let as_elem = |w: &[RootId]| Element::monomial(Monomial { f: Vec::new(), k: vec![0; rank], e: w.to_vec() }, crate::Scalar::one());
    let to_vec = |x: &Element| -> Result<Vec<CyclotomicScalar>> {
        let mut v = vec![field.zero(); words.len()];
        for (m, c) in x.terms() {
            if m.e.chunk_by(|a, b| a == b).any(|run| run.len() >= l as usize) {
                continue;
            }
            let i = index[&m.e];
            v[i] = field.add(&v[i], &field.specialize(c)?);
        }
        Ok(v)
    };
    let gens: Vec<Element> = words.iter().map(|w| as_elem(w)).collect();
    // current power as a list of basis vectors over the word basis
    let mut current: Vec<Vec<CyclotomicScalar>> = gens.iter().map(&to_vec).collect::<Result<_>>()?;
    let mut power = 1;
    loop {
        current = row_basis(&field, current)?;
        if current.is_empty() {
            return Ok(power);
        }
        let mut next = Vec::new();
        for g in &gens {
            for v in &current {
                let mut x = Element::zero();
                for (i, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        // lift: coefficients are integral combinations of eta powers
                        let lifted = lift(c);
                        x.add_scaled(&eng.multiply(g, &as_elem(&words[i]))?, &lifted);
                    }
                }
                next.push(to_vec(&x)?);
            }
        }
        current = next;
        power += 1;
    }
}

/// A generic-`q` scalar specializing to `c`.
fn lift(c: &CyclotomicScalar) -> crate::Scalar {
    let mut acc = crate::Scalar::zero();
    for (k, a) in c.coeffs().iter().enumerate() {
        let num = crate::Scalar::from_bigint(a.numer().clone());
        let den = crate::Scalar::from_bigint(a.denom().clone());
        acc = acc + num.div(&den).expect("nonzero denominator") * crate::Scalar::q_pow(k as i32);
    }
    acc
}

fn row_basis(field: &CyclotomicField, rows: Vec<Vec<CyclotomicScalar>>) -> Result<Vec<Vec<CyclotomicScalar>>> {
    if rows.is_empty() {
        return Ok(rows);
    }
    let n = rows[0].len();
    let mut m = Matrix::from_fn(rows.len(), n, |r, c| rows[r][c].clone());
    let piv = rref(field, &mut m)?;
    Ok((0..piv.len()).map(|r| m.row(r).to_vec()).collect())
}

/// Joint kernel of left multiplication by the odd raising root vectors on
/// the span of the `E_I`; returns the kernel basis and whether it is the
/// line through `E_{I₁}`.
pub fn regular_fixed_space<F: Field>(eng: &Engine, field: &F) -> Result<(usize, bool)> {
    let sig = eng.sig();
    let rank = eng.rank();
    let odd: Vec<RootId> = sig.odd_roots().into_iter().map(|r| sig.id_of(r)).collect();
    let words: Vec<Vec<RootId>> = (0u32..1 << odd.len())
        .map(|mask| {
            let mut s: Vec<RootId> = (0..odd.len()).filter(|b| mask >> b & 1 == 1).map(|b| odd[b]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    let index: BTreeMap<&Vec<RootId>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let n = words.len();
    let mut stacked = Matrix::filled(n * odd.len(), n, field.zero());
    for (k, &g) in odd.iter().enumerate() {
        let ge = eng.word(&[Letter::E(g)])?;
        for (col, w) in words.iter().enumerate() {
            let x = Element::monomial(Monomial { f: Vec::new(), k: vec![0; rank], e: w.clone() }, crate::Scalar::one());
            for (m, c) in eng.multiply(&ge, &x)?.terms() {
                debug_assert!(m.f.is_empty() && m.k.iter().all(|&x| x == 0));
                let row = k * n + index[&m.e];
                let v = field.add(stacked.get(row, col), &field.from_scalar(c)?);
                stacked.set(row, col, v);
            }
        }
    }
    let ker = kernel(field, &stacked)?;
    let top = index[&{
        let mut all = odd.clone();
        all.sort_unstable();
        all
    }];
    let is_top = ker.len() == 1 && ker[0].iter().enumerate().all(|(i, x)| (i == top) != field.is_zero(x));
    Ok((ker.len(), is_top))
}

/// `K(M)` over `u_{η,χ}` with `M` the simple quotient of the baby Verma
/// module of the given torus character (`χ(y) = 0`).
pub fn kac_unity(
    eng: &Engine,
    field: &CyclotomicField,
    ch: &Character<CyclotomicScalar>,
    chi: &CentralCharacter,
    max_dim: usize,
) -> Result<WeightModule<CyclotomicField>> {
    let l = field.order();
    for (s, v) in ch.values.iter().enumerate() {
        if Field::pow(field, v, i64::from(l))? != chi.z[s] {
            return Err(AlgebraError::IncompatibleCharacter(format!("lambda(K_{})^{l} != chi(z_{})", s + 1, s + 1)));
        }
    }
    let hw = HighestWeight { character: ch.clone(), label: vec![0; eng.rank()], truncation: Some(l) };
    build(eng, field, hw, true, max_dim)
}

/// Simple even-part module over `u_{η,χ}(g₀)` with the same data.
pub fn simple_even_unity(
    eng: &Engine,
    field: &CyclotomicField,
    ch: &Character<CyclotomicScalar>,
    max_dim: usize,
) -> Result<WeightModule<CyclotomicField>> {
    let hw = HighestWeight { character: ch.clone(), label: vec![0; eng.rank()], truncation: Some(field.order()) };
    build(eng, field, hw, false, max_dim)
}

/// `K(M)^{N₁⁺}` equals the copy `1 ⊗ M`: same dimension, and every fixed
/// vector is supported on basis vectors without odd lowering factors.
pub fn fixed_space_is_top(eng: &Engine, module: &WeightModule<CyclotomicField>, dim_m: usize) -> Result<bool> {
    let fixed = module.odd_fixed_points(eng)?;
    let total: usize = fixed.iter().map(|(_, b)| b.len()).sum();
    let supported =
        fixed.iter().flat_map(|(_, b)| b.iter()).all(|v| v.iter().enumerate().all(|(i, x)| x.is_zero() || module.basis[i].odd.is_empty()));
    Ok(total == dim_m && supported)
}

/// Both readings of the top-product test on the highest weight vector `v`:
/// whether `E_{I₁} F_{I₁} v ≠ 0` and whether `E_{I₁} E_{I₁} v ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct TopReadings {
    pub raise_lower_nonzero: bool,
    pub raise_raise_nonzero: bool,
}

pub fn top_readings(eng: &Engine, module: &WeightModule<CyclotomicField>) -> Result<TopReadings> {
    let f = &module.field;
    let top = module.basis.iter().position(|b| b.odd.is_empty() && b.even.is_empty()).expect("highest weight vector");
    let e = module.act(&eng.big_odd_product(crate::pbw::Kind::E)?)?;
    let fl = module.act(&eng.big_odd_product(crate::pbw::Kind::F)?)?;
    let column_nonzero = |m: &Matrix<CyclotomicScalar>| (0..m.rows()).any(|r| !f.is_zero(m.get(r, top)));
    Ok(TopReadings {
        raise_lower_nonzero: column_nonzero(&crate::linalg::mat_mul(f, &e, &fl)),
        raise_raise_nonzero: column_nonzero(&crate::linalg::mat_mul(f, &e, &e)),
    })
}

/// Character `λ(K_s) = c_s η^{a_s}`.
pub fn character(field: &CyclotomicField, data: &[(i64, i64)]) -> Character<CyclotomicScalar> {
    Character { values: data.iter().map(|&(c, a)| field.mul(&field.from_int(c), &field.eta_pow(a))).collect() }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_powers_small() {
        let eng = Engine::for_rank(2, 1).unwrap();
        let rep = centrality_check(&eng, 3).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn small_algebra_dimension() {
        let eng = Engine::for_rank(1, 1).unwrap();
        let f = CyclotomicField::new(3).unwrap();
        let chi = CentralCharacter { y: BTreeMap::new(), z: vec![f.one(), f.one()] };
        let u = SmallAlgebra::new(&eng, 3, chi).unwrap();
        let b = u.basis();
        assert_eq!(b.len() as u128, u.expected_dim());
        assert_eq!(b.len(), 36);
        assert!(u.associativity_probe(1, 20).unwrap().passed());
    }

    #[test]
    fn nilpotency_indices() {
        assert_eq!(b_chi_nilpotency(&Engine::for_rank(1, 1).unwrap(), 3).unwrap(), 1);
        assert_eq!(b_chi_nilpotency(&Engine::for_rank(2, 1).unwrap(), 3).unwrap(), 3);
        assert_eq!(b_chi_nilpotency(&Engine::for_rank(2, 2).unwrap(), 3).unwrap(), 5);
    }

    #[test]
    fn regular_fixed_line() {
        let f = CyclotomicField::new(3).unwrap();
        for (m, n) in [(1, 1), (2, 1), (2, 2)] {
            assert_eq!(regular_fixed_space(&Engine::for_rank(m, n).unwrap(), &f).unwrap(), (1, true));
        }
    }

    #[test]
    fn rank_one_kac_unity() {
        let eng = Engine::for_rank(1, 1).unwrap();
        let f = CyclotomicField::new(3).unwrap();
        for (a, b, simple) in [(1, 2, false), (1, 0, true), (0, 1, true), (2, 1, false)] {
            // λ(K_1) = η^a, λ(K_2) = η^{-b}: f = [a + b]_η
            let ch = character(&f, &[(1, a), (1, -b)]);
            let chi = CentralCharacter::from_torus(&f, &ch, 3).unwrap();
            let k = kac_unity(&eng, &f, &ch, &chi, 64).unwrap();
            assert_eq!(k.dim(), 2);
            assert_eq!(k.is_simple_bruteforce(&eng).unwrap(), simple, "a={a} b={b}");
        }
    }
}
