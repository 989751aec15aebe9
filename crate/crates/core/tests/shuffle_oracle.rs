//! Independent model of the positive part: the quantum shuffle algebra on
//! words in simple roots, braided by `χ(a, b) = (−1)^{p(a)p(b)} q^{(α_a, α_b)}`.
//! The subalgebra generated by single letters satisfies exactly the raising
//! relations, so every raising product computed by the engine must agree with
//! the shuffle product of the images.

use std::collections::BTreeMap;

use qsuper::{Element, Engine, Scalar, Signature};

type Word = Vec<usize>;

#[derive(Clone, Debug, PartialEq, Default)]
struct Sh(BTreeMap<Word, Scalar>);

impl Sh {
    fn letter(a: usize) -> Self {
        Sh(BTreeMap::from([(vec![a], Scalar::one())]))
    }

    fn unit() -> Self {
        Sh(BTreeMap::from([(vec![], Scalar::one())]))
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        let v = self.0.get(&w).cloned().unwrap_or_else(Scalar::zero) + c;
        if v.is_zero() {
            self.0.remove(&w);
        } else {
            self.0.insert(w, v);
        }
    }

    fn add_scaled(&mut self, other: &Sh, c: &Scalar) {
        for (w, x) in &other.0 {
            self.add_term(w.clone(), x * c);
        }
    }
}

struct Model {
    sig: Signature,
}

impl Model {
    fn form(&self, a: usize, b: usize) -> i32 {
        // (α_a, α_b) with α_a = ε_a − ε_{a+1}
        let coord = |x: usize| {
            let mut v = vec![0i32; self.sig.rank() + 1];
            v[x] += 1;
            v[x + 1] -= 1;
            v
        };
        let (u, v) = (coord(a), coord(b));
        (1..=self.sig.rank()).map(|s| self.sig.form_sign(s) as i32 * u[s] * v[s]).sum()
    }

    fn chi(&self, a: usize, b: usize) -> Scalar {
        let sign = if a == self.sig.m() && b == self.sig.m() { -1 } else { 1 };
        Scalar::q_pow(self.form(a, b)) * Scalar::from_int(sign)
    }

    fn shuffle_words(&self, u: &[usize], v: &[usize]) -> Sh {
        if u.is_empty() || v.is_empty() {
            let mut w = u.to_vec();
            w.extend_from_slice(v);
            return Sh(BTreeMap::from([(w, Scalar::one())]));
        }
        let mut out = Sh::default();
        for (w, c) in self.shuffle_words(&u[1..], v).0 {
            let mut nw = vec![u[0]];
            nw.extend(w);
            out.add_term(nw, c);
        }
        let factor = u.iter().fold(Scalar::one(), |acc, &a| acc * self.chi(v[0], a));
        for (w, c) in self.shuffle_words(u, &v[1..]).0 {
            let mut nw = vec![v[0]];
            nw.extend(w);
            out.add_term(nw, c * factor.clone());
        }
        out
    }

    fn mul(&self, x: &Sh, y: &Sh) -> Sh {
        let mut out = Sh::default();
        for (u, a) in &x.0 {
            for (v, b) in &y.0 {
                out.add_scaled(&self.shuffle_words(u, v), &(a * b));
            }
        }
        out
    }

    fn sub(&self, x: &Sh, y: &Sh) -> Sh {
        let mut out = x.clone();
        out.add_scaled(y, &Scalar::from_int(-1));
        out
    }

    /// `E_ij` via `E_ic E_cj − q_c^{-1} E_cj E_ic`.
    fn root(&self, i: usize, j: usize, c: Option<usize>) -> Sh {
        if j == i + 1 {
            return Sh::letter(i);
        }
        let c = c.unwrap_or(j - 1);
        let a = self.root(i, c, None);
        let b = self.root(c, j, None);
        let qc_inv = Scalar::q_pow(-self.sig.q_exp(c));
        let mut out = self.mul(&a, &b);
        out.add_scaled(&self.mul(&b, &a), &-qc_inv);
        out
    }

    /// Image of an engine element supported on raising monomials.
    fn image(&self, el: &Element) -> Sh {
        let mut out = Sh::default();
        for (m, c) in el.terms() {
            assert!(m.f.is_empty() && m.k.iter().all(|&x| x == 0), "non-raising term in {el:?}");
            let mut acc = Sh::unit();
            for &r in &m.e {
                let root = self.sig.root(r);
                acc = self.mul(&acc, &self.root(root.i, root.j, None));
            }
            out.add_scaled(&acc, c);
        }
        out
    }
}

const RANKS: [(usize, usize); 7] = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (3, 2)];

#[test]
fn model_satisfies_raising_relations() {
    for (m, n) in RANKS {
        let md = Model { sig: Signature::new(m, n).unwrap() };
        let r = m + n;
        let x = |i: usize| Sh::letter(i);
        assert!(md.mul(&x(m), &x(m)).0.is_empty());
        for i in 1..r {
            for j in 1..r {
                if i.abs_diff(j) > 1 {
                    assert_eq!(md.mul(&x(i), &x(j)), md.mul(&x(j), &x(i)));
                }
                if i.abs_diff(j) == 1 && i != m {
                    let a = md.mul(&md.mul(&x(i), &x(i)), &x(j));
                    let b = md.mul(&md.mul(&x(i), &x(j)), &x(i));
                    let c = md.mul(&md.mul(&x(j), &x(i)), &x(i));
                    let mut s = a;
                    s.add_scaled(&b, &-Scalar::qint(2));
                    s.add_scaled(&c, &Scalar::one());
                    assert!(s.0.is_empty(), "({m},{n}) Serre {i},{j}");
                }
            }
        }
        if m >= 2 && n >= 2 {
            // both factors odd: super-commutator is the anticommutator
            let big = md.root(m - 1, m + 2, None);
            let mut s = md.mul(&big, &x(m));
            s.add_scaled(&md.mul(&x(m), &big), &Scalar::one());
            assert!(s.0.is_empty(), "({m},{n}) odd four-term relation");
        }
    }
}

#[test]
fn model_root_vectors_independent_of_splitting() {
    for (m, n) in RANKS {
        let md = Model { sig: Signature::new(m, n).unwrap() };
        for i in 1..=m + n {
            for j in i + 2..=m + n {
                let base = md.root(i, j, None);
                for c in i + 1..j - 1 {
                    assert_eq!(md.root(i, j, Some(c)), base, "({m},{n}) E_{i}{j} split {c}");
                }
            }
        }
    }
}

#[test]
fn engine_raising_pairs_match_model() {
    for (m, n) in RANKS {
        let eng = Engine::for_rank(m, n).unwrap();
        let md = Model { sig: eng.sig().clone() };
        for a in eng.sig().roots() {
            for b in eng.sig().roots() {
                let prod = eng.multiply(&eng.e(a.i, a.j).unwrap(), &eng.e(b.i, b.j).unwrap()).unwrap();
                let want = md.mul(&md.root(a.i, a.j, None), &md.root(b.i, b.j, None));
                assert_eq!(md.image(&prod), want, "({m},{n}) E[{a}] E[{b}]");
            }
        }
    }
}

#[test]
fn engine_raising_triples_match_model() {
    for (m, n) in [(2, 2), (3, 1), (2, 3)] {
        let eng = Engine::for_rank(m, n).unwrap();
        let md = Model { sig: eng.sig().clone() };
        let roots = eng.sig().roots().to_vec();
        for a in &roots {
            for b in &roots {
                for c in &roots {
                    if (a.height() + b.height() + c.height()) > 5 {
                        continue;
                    }
                    let f = [a, b, c].map(|r| eng.e(r.i, r.j).unwrap());
                    let prod = eng.multiply_all(&f).unwrap();
                    let want = md.mul(&md.mul(&md.root(a.i, a.j, None), &md.root(b.i, b.j, None)), &md.root(c.i, c.j, None));
                    assert_eq!(md.image(&prod), want, "({m},{n}) E[{a}] E[{b}] E[{c}]");
                }
            }
        }
    }
}

#[test]
fn shared_endpoint_exponents_in_model() {
    // gl(3): E_12 E_13 = q E_13 E_12 and E_13 E_23 = q E_23 E_13
    let md = Model { sig: Signature::new(3, 1).unwrap() };
    let (e12, e13, e23) = (md.root(1, 2, None), md.root(1, 3, None), md.root(2, 3, None));
    let scaled = |x: Sh| Sh(x.0.into_iter().map(|(w, c)| (w, c * Scalar::q_pow(1))).collect());
    assert!(md.sub(&md.mul(&e12, &e13), &scaled(md.mul(&e13, &e12))).0.is_empty());
    assert!(md.sub(&md.mul(&e13, &e23), &scaled(md.mul(&e23, &e13))).0.is_empty());
}
