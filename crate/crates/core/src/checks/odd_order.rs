use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Report;
use crate::error::Result;
use crate::pbw::{Engine, Kind};
use crate::signature::Root;

/// Annihilation and straightening laws for products of odd lowering root
/// vectors arranged by the odd order, plus integrality of straightening.
pub fn odd_order_suite(eng: &Engine, seed: u64) -> Result<Report> {
    let sig = eng.sig();
    let odd = sig.odd_roots();
    let mut rep = Report::new(format!("odd-order products ({},{})", sig.m(), sig.n()));
    let prod = |set: &[Root]| eng.odd_product(Kind::F, set);
    let f = |r: Root| eng.f(r.i, r.j);

    for &x in &odd {
        let at_or_above = prod(&sig.odd_at_or_above(x))?;
        let at_or_below = prod(&sig.odd_at_or_below(x))?;
        for &y in &odd {
            let cmp = sig.cmp_odd(y, x);
            if cmp != Ordering::Less {
                rep.attempt(format!("F[{y}] F_(>= {x}) = 0"), || {
                    let p = eng.multiply(&f(y)?, &at_or_above)?;
                    Ok((!p.is_zero()).then(|| p.display(sig).to_string()))
                });
            }
            if cmp != Ordering::Greater {
                rep.attempt(format!("F_(<= {x}) F[{y}] = 0"), || {
                    let p = eng.multiply(&at_or_below, &f(y)?)?;
                    Ok((!p.is_zero()).then(|| p.display(sig).to_string()))
                });
                rep.attempt(format!("F[{y}] F_(<= {x}) = 0"), || {
                    let p = eng.multiply(&f(y)?, &at_or_below)?;
                    Ok((!p.is_zero()).then(|| p.display(sig).to_string()))
                });
            }
        }
        rep.attempt(format!("F[{x}] F_(< {x}) = ±q^z F_(<= {x})"), || {
            let lhs = eng.multiply(&f(x)?, &prod(&sig.odd_below(x))?)?;
            Ok(unit_multiple_failure(&lhs, &at_or_below, sig))
        });
        rep.attempt(format!("F_(> {x}) F[{x}] = ±q^z F_(>= {x})"), || {
            let lhs = eng.multiply(&prod(&sig.odd_above(x))?, &f(x)?)?;
            Ok(unit_multiple_failure(&lhs, &at_or_above, sig))
        });
    }

    // arbitrary-order products land in the odd basis with Laurent coefficients
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words: Vec<Vec<Root>> = Vec::new();
    for &a in &odd {
        for &b in &odd {
            words.push(vec![a, b]);
        }
    }
    for len in 3..=odd.len() {
        for _ in 0..8 {
            let mut w = odd.clone();
            w.shuffle(&mut rng);
            w.truncate(len);
            words.push(w);
        }
    }
    for w in words {
        let label: Vec<String> = w.iter().map(|r| format!("F[{r}]")).collect();
        rep.attempt(format!("{} spans", label.join(" ")), || {
            let factors = w.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
            let p = eng.multiply_all(&factors)?;
            for (m, c) in p.terms() {
                let sorted = m.f.windows(2).all(|p| p[0] > p[1]);
                let basis = sorted && m.e.is_empty() && m.k.iter().all(|&x| x == 0);
                if !basis || !c.is_laurent() {
                    return Ok(Some(format!("term {c} at {m:?}")));
                }
            }
            Ok(None)
        });
    }
    Ok(rep)
}

fn unit_multiple_failure(lhs: &crate::pbw::Element, target: &crate::pbw::Element, sig: &crate::signature::Signature) -> Option<String> {
    let (Some((tm, tc)), Some((lm, lc))) = (single(target), single(lhs)) else {
        return Some(format!("not a single term: {}", lhs.display(sig)));
    };
    if tm != lm {
        return Some(format!("wrong monomial: {}", lhs.display(sig)));
    }
    let ratio = lc.div(tc).ok()?;
    ratio.as_signed_q_power().is_none().then(|| format!("ratio {ratio} is not ±q^z"))
}

fn single(e: &crate::pbw::Element) -> Option<(&crate::pbw::Monomial, &crate::scalars::Scalar)> {
    let mut it = e.terms();
    let first = it.next()?;
    it.next().is_none().then_some(first)
}
