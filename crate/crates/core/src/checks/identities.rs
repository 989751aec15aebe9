use super::Report;
use crate::error::Result;
use crate::pbw::{Element, Engine};
use crate::scalars::Scalar;
use crate::signature::Root;

fn parity_sign(odd: bool) -> Scalar {
    if odd {
        Scalar::from_int(-1)
    } else {
        Scalar::one()
    }
}

/// Commutation identities between root vectors: nilpotency, the diagonal
/// bracket, the q-commutation of root vectors sharing an endpoint, the mixed
/// brackets for chained roots, nested and crossing configurations.
pub fn identity_suite(eng: &Engine) -> Result<Report> {
    let sig = eng.sig();
    let r = sig.rank();
    let mut rep = Report::new(format!("root-vector identities ({},{})", sig.m(), sig.n()));
    let odd = |i: usize, j: usize| sig.is_odd(Root::new(i, j));
    let qs = |s: usize, e: i32| Scalar::q_pow(sig.q_exp(s) * e);
    let kk = |a: &[(usize, i32)]| {
        let mut mu = vec![0; r];
        for &(s, e) in a {
            mu[s - 1] += e;
        }
        eng.k_vec(&mu)
    };
    let mul = |xs: &[Element]| eng.multiply_all(xs);
    let br = |a: &Element, b: &Element| eng.super_commutator(a, b);

    for root in sig.roots() {
        let (i, j) = (root.i, root.j);
        let (e, f) = (eng.e(i, j)?, eng.f(i, j)?);
        if odd(i, j) {
            rep.equal(eng, format!("E[{i},{j}]^2 = 0"), &mul(&[e.clone(), e.clone()])?, &Element::zero());
            rep.equal(eng, format!("F[{i},{j}]^2 = 0"), &mul(&[f.clone(), f.clone()])?, &Element::zero());
        }
        let rhs = kk(&[(i, 1), (j, -1)]).sub(&kk(&[(i, -1), (j, 1)])).scale(&sig.q_diff(i).inv()?);
        rep.equal(eng, format!("[E[{i},{j}], F[{i},{j}]]"), &br(&e, &f)?, &rhs);
    }

    for a in 1..=r {
        for b in a + 1..=r {
            for c in b + 1..=r {
                shared_endpoint(eng, &mut rep, (a, b, c), -1)?;

                // chained brackets with c' < i < j written as (a, b, c)
                let (c0, i, j) = (a, b, c);
                let lhs = br(&eng.f(c0, j)?, &eng.e(c0, i)?)?;
                let rhs = mul(&[eng.f(i, j)?, kk(&[(c0, 1), (i, -1)])])?.scale(&qs(i, 1));
                rep.equal(eng, format!("[F[{c0},{j}], E[{c0},{i}]]"), &lhs, &rhs);
                let lhs = br(&eng.f(c0, i)?, &eng.e(c0, j)?)?;
                let rhs = mul(&[eng.e(i, j)?, kk(&[(c0, -1), (i, 1)])])?;
                rep.equal(eng, format!("[F[{c0},{i}], E[{c0},{j}]]"), &lhs, &rhs);
                let lhs = br(&eng.e(i, j)?, &eng.f(c0, j)?)?;
                let rhs = mul(&[eng.f(c0, i)?, kk(&[(i, -1), (j, 1)])])?;
                rep.equal(eng, format!("[E[{i},{j}], F[{c0},{j}]]"), &lhs, &rhs);
                let lhs = br(&eng.e(c0, j)?, &eng.f(i, j)?)?;
                let rhs = mul(&[eng.e(c0, i)?, kk(&[(i, 1), (j, -1)])])?.scale(&qs(i, -1));
                rep.equal(eng, format!("[E[{c0},{j}], F[{i},{j}]]"), &lhs, &rhs);
            }
        }
    }

    for i in 1..=r {
        for s in i + 1..=r {
            for j in s + 1..=r {
                for t in j + 1..=r {
                    // crossing i < s < j < t
                    let lhs = br(&eng.f(s, t)?, &eng.f(i, j)?)?;
                    let rhs = mul(&[eng.f(s, j)?, eng.f(i, t)?])?.scale(&-sig.q_diff(j));
                    rep.equal(eng, format!("[F[{s},{t}], F[{i},{j}]] crossing"), &lhs, &rhs);
                    let lhs = br(&eng.e(i, j)?, &eng.f(s, t)?)?;
                    let rhs = mul(&[kk(&[(s, 1), (j, -1)]), eng.f(j, t)?, eng.e(i, s)?])?.scale(&-sig.q_diff(j));
                    rep.equal(eng, format!("[E[{i},{j}], F[{s},{t}]] crossing"), &lhs, &rhs);
                    let lhs = br(&eng.e(s, t)?, &eng.f(i, j)?)?;
                    let rhs = mul(&[eng.f(i, s)?, eng.e(j, t)?, kk(&[(s, -1), (j, 1)])])?.scale(&sig.q_diff(j));
                    rep.equal(eng, format!("[E[{s},{t}], F[{i},{j}]] crossing"), &lhs, &rhs);

                    // nested: (i,t) contains (s,j)
                    let zero = Element::zero();
                    rep.equal(eng, format!("[F[{i},{t}], F[{s},{j}]] nested"), &br(&eng.f(i, t)?, &eng.f(s, j)?)?, &zero);
                    rep.equal(eng, format!("[E[{i},{t}], F[{s},{j}]] nested"), &br(&eng.e(i, t)?, &eng.f(s, j)?)?, &zero);
                    rep.equal(eng, format!("[F[{i},{t}], E[{s},{j}]] nested"), &br(&eng.f(i, t)?, &eng.e(s, j)?)?, &zero);
                }
            }
        }
    }
    Ok(rep)
}

/// Root vectors sharing an endpoint `a < b < c` q-commute:
/// `F_ac F_ab = ± q_a^{-e} F_ab F_ac` and `F_ac F_bc = ± q_c^{e} F_bc F_ac`,
/// with `e = 1` as derived from the root-vector definitions.
fn shared_endpoint(eng: &Engine, rep: &mut Report, (a, b, c): (usize, usize, usize), sign_of_exp: i32) -> Result<()> {
    let sig = eng.sig();
    let odd = |i: usize, j: usize| sig.is_odd(Root::new(i, j));
    let qs = |s: usize, e: i32| Scalar::q_pow(sig.q_exp(s) * e);
    let mul = |xs: &[Element]| eng.multiply_all(xs);
    let lhs = mul(&[eng.f(a, c)?, eng.f(a, b)?])?;
    let rhs = mul(&[eng.f(a, b)?, eng.f(a, c)?])?.scale(&(&parity_sign(odd(a, b)) * &qs(a, sign_of_exp)));
    rep.equal(eng, format!("F[{a},{c}] F[{a},{b}] common start"), &lhs, &rhs);
    let lhs = mul(&[eng.f(a, c)?, eng.f(b, c)?])?;
    let rhs = mul(&[eng.f(b, c)?, eng.f(a, c)?])?.scale(&(&parity_sign(odd(b, c)) * &qs(c, -sign_of_exp)));
    rep.equal(eng, format!("F[{a},{c}] F[{b},{c}] common end"), &lhs, &rhs);
    Ok(())
}

/// The shared-endpoint identities with the opposite exponent sign
/// (`F_ac F_ab = ± q_a F_ab F_ac`, `F_ac F_bc = ± q_c^{-1} F_bc F_ac`).
/// These do not hold; the suite exists to document that.
pub fn opposite_exponent_suite(eng: &Engine) -> Result<Report> {
    let sig = eng.sig();
    let r = sig.rank();
    let mut rep = Report::new(format!("shared-endpoint, opposite exponent ({},{})", sig.m(), sig.n()));
    for a in 1..=r {
        for b in a + 1..=r {
            for c in b + 1..=r {
                shared_endpoint(eng, &mut rep, (a, b, c), 1)?;
            }
        }
    }
    Ok(rep)
}
