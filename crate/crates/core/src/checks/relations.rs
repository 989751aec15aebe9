use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Report;
use crate::error::Result;
use crate::pbw::{Element, Engine};
use crate::scalars::Scalar;

/// Every instance of the defining relations, for the Chevalley generators.
pub fn relation_suite(eng: &Engine) -> Result<Report> {
    let sig = eng.sig();
    let (m, r) = (sig.m(), sig.rank());
    let mut rep = Report::new(format!("defining relations ({},{})", sig.m(), sig.n()));
    let e = |i: usize| eng.e(i, i + 1);
    let f = |i: usize| eng.f(i, i + 1);
    let mul = |xs: &[&Element]| -> Result<Element> {
        let owned: Vec<Element> = xs.iter().map(|x| (*x).clone()).collect();
        eng.multiply_all(&owned)
    };

    for i in 1..=r {
        for j in 1..=r {
            let (ki, kj) = (eng.k(i, 1)?, eng.k(j, 1)?);
            rep.equal(eng, format!("K{i} K{j} = K{j} K{i}"), &mul(&[&ki, &kj])?, &mul(&[&kj, &ki])?);
        }
        rep.equal(eng, format!("K{i} K{i}^-1 = 1"), &mul(&[&eng.k(i, 1)?, &eng.k(i, -1)?])?, &eng.one());
        rep.equal(eng, format!("K{i}^-1 K{i} = 1"), &mul(&[&eng.k(i, -1)?, &eng.k(i, 1)?])?, &eng.one());
    }

    for s in 1..=r {
        for j in 1..r {
            let d = i32::from(s == j) - i32::from(s == j + 1);
            let c = Scalar::q_pow(sig.q_exp(s) * d);
            let (k, kinv) = (eng.k(s, 1)?, eng.k(s, -1)?);
            let lhs = mul(&[&k, &e(j)?, &kinv])?;
            rep.equal(eng, format!("K{s} E{j} K{s}^-1"), &lhs, &e(j)?.scale(&c));
            let lhs = mul(&[&k, &f(j)?, &kinv])?;
            rep.equal(eng, format!("K{s} F{j} K{s}^-1"), &lhs, &f(j)?.scale(&c.inv()?));
        }
    }

    for i in 1..r {
        for j in 1..r {
            let lhs = eng.super_commutator(&e(i)?, &f(j)?)?;
            let rhs = if i == j {
                let mut plus = vec![0; r];
                plus[i - 1] = 1;
                plus[i] = -1;
                let minus: Vec<i32> = plus.iter().map(|x| -x).collect();
                eng.k_vec(&plus).sub(&eng.k_vec(&minus)).scale(&sig.q_diff(i).inv()?)
            } else {
                Element::zero()
            };
            rep.equal(eng, format!("[E{i}, F{j}]"), &lhs, &rhs);
        }
    }

    rep.equal(eng, "E_m^2 = 0", &mul(&[&e(m)?, &e(m)?])?, &Element::zero());
    rep.equal(eng, "F_m^2 = 0", &mul(&[&f(m)?, &f(m)?])?, &Element::zero());

    for i in 1..r {
        for j in 1..r {
            if i.abs_diff(j) > 1 {
                rep.equal(eng, format!("E{i} E{j} = E{j} E{i}"), &mul(&[&e(i)?, &e(j)?])?, &mul(&[&e(j)?, &e(i)?])?);
                rep.equal(eng, format!("F{i} F{j} = F{j} F{i}"), &mul(&[&f(i)?, &f(j)?])?, &mul(&[&f(j)?, &f(i)?])?);
            }
        }
    }

    let two = Scalar::qint(2);
    for i in 1..r {
        for j in 1..r {
            if i.abs_diff(j) != 1 || i == m {
                continue;
            }
            for (label, g) in [("E", &e as &dyn Fn(usize) -> Result<Element>), ("F", &f)] {
                let (a, b) = (g(i)?, g(j)?);
                let lhs = mul(&[&a, &a, &b])?.sub(&mul(&[&a, &b, &a])?.scale(&two)).add(&mul(&[&b, &a, &a])?);
                rep.equal(eng, format!("Serre {label}{i}{label}{i}{label}{j}"), &lhs, &Element::zero());
            }
        }
    }

    if m >= 2 && sig.n() >= 2 {
        let lhs = eng.super_commutator(&eng.e(m - 1, m + 2)?, &e(m)?)?;
        rep.equal(eng, "[E_{m-1,m+2}, E_m] = 0", &lhs, &Element::zero());
        let lhs = eng.super_commutator(&eng.f(m - 1, m + 2)?, &f(m)?)?;
        rep.equal(eng, "[F_{m-1,m+2}, F_m] = 0", &lhs, &Element::zero());
    }
    Ok(rep)
}

/// `(ab)c = a(bc)` on random triples of generators and root vectors.
pub fn associativity_probe(eng: &Engine, seed: u64, count: usize) -> Result<Report> {
    let sig = eng.sig();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<(String, Element)> = Vec::new();
    for root in sig.roots() {
        pool.push((format!("E[{root}]"), eng.e(root.i, root.j)?));
        pool.push((format!("F[{root}]"), eng.f(root.i, root.j)?));
    }
    for s in 1..=sig.rank() {
        pool.push((format!("K[{s}]"), eng.k(s, 1)?));
        pool.push((format!("K[{s}]^-1"), eng.k(s, -1)?));
    }
    let mut rep = Report::new(format!("associativity ({},{}) seed {seed}", sig.m(), sig.n()));
    for _ in 0..count {
        let pick: Vec<usize> = (0..3).map(|_| rng.gen_range(0..pool.len())).collect();
        let (a, b, c) = (&pool[pick[0]], &pool[pick[1]], &pool[pick[2]]);
        let left = eng.multiply(&eng.multiply(&a.1, &b.1)?, &c.1)?;
        let right = eng.multiply(&a.1, &eng.multiply(&b.1, &c.1)?)?;
        rep.equal(eng, format!("({} {}) {}", a.0, b.0, c.0), &left, &right);
    }
    Ok(rep)
}
