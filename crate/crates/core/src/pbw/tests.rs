use super::*;
use crate::scalars::Scalar;

fn q(k: i32) -> Scalar {
    Scalar::q_pow(k)
}

#[test]
fn torus_inverse_and_conjugation() {
    let eng = Engine::for_rank(1, 1).unwrap();
    let p = eng.multiply(&eng.k(1, 1).unwrap(), &eng.k(1, -1).unwrap()).unwrap();
    assert_eq!(p, eng.one());
    let ke = eng.multiply(&eng.k(1, 1).unwrap(), &eng.e(1, 2).unwrap()).unwrap();
    let ek = eng.multiply(&eng.e(1, 2).unwrap(), &eng.k(1, 1).unwrap()).unwrap();
    assert_eq!(ke, ek.scale(&q(1)));
}

#[test]
fn odd_bracket_rank_one_one() {
    let eng = Engine::for_rank(1, 1).unwrap();
    let e = eng.e(1, 2).unwrap();
    let f = eng.f(1, 2).unwrap();
    let ef = eng.multiply(&e, &f).unwrap();
    let fe = eng.multiply(&f, &e).unwrap();
    let k = eng.k_vec(&[1, -1]).sub(&eng.k_vec(&[-1, 1])).scale(&Scalar::q_minus_q_inv().inv().unwrap());
    assert_eq!(ef, fe.neg().add(&k));
    assert!(eng.multiply(&e, &e).unwrap().is_zero());
}

#[test]
fn splitting_index_expansions() {
    let eng = Engine::for_rank(2, 1).unwrap();
    let e12 = eng.e(1, 2).unwrap();
    let e23 = eng.e(2, 3).unwrap();
    let want = eng.multiply(&e12, &e23).unwrap().sub(&eng.multiply(&e23, &e12).unwrap().scale(&q(-1)));
    assert_eq!(eng.root_vector(Kind::E, 1, 3, Some(2)).unwrap(), want);
    assert_eq!(want, eng.e(1, 3).unwrap());
    let f12 = eng.f(1, 2).unwrap();
    let f23 = eng.f(2, 3).unwrap();
    let want = eng.multiply(&f23, &f12).unwrap().sub(&eng.multiply(&f12, &f23).unwrap().scale(&q(1)));
    assert_eq!(want, eng.f(1, 3).unwrap());
}

#[test]
fn splitting_index_independence() {
    for (m, n) in [(2, 2), (3, 1), (1, 3), (2, 3)] {
        let eng = Engine::for_rank(m, n).unwrap();
        for i in 1..=m + n {
            for j in i + 2..=m + n {
                for c in i + 1..j {
                    for kind in [Kind::E, Kind::F] {
                        assert_eq!(
                            eng.root_vector(kind, i, j, Some(c)).unwrap(),
                            eng.root_vector(kind, i, j, None).unwrap(),
                            "({m},{n}) {kind:?}_{i}{j} split at {c}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn odd_squares_vanish() {
    let eng = Engine::for_rank(2, 2).unwrap();
    for r in eng.sig().odd_roots() {
        for kind in [Kind::E, Kind::F] {
            let x = eng.root_vector(kind, r.i, r.j, (r.height() > 1).then_some(r.j - 1)).unwrap();
            assert!(eng.multiply(&x, &x).unwrap().is_zero(), "{kind:?}_{r}");
        }
    }
}

#[test]
fn cross_bracket_on_full_odd_root() {
    let eng = Engine::for_rank(2, 1).unwrap();
    let br = eng.super_commutator(&eng.e(1, 3).unwrap(), &eng.f(1, 3).unwrap()).unwrap();
    let k = eng.k_vec(&[1, 0, -1]).sub(&eng.k_vec(&[-1, 0, 1])).scale(&Scalar::q_minus_q_inv().inv().unwrap());
    assert_eq!(br, k);
    assert!(eng.super_commutator(&eng.e(1, 2).unwrap(), &eng.f(2, 3).unwrap()).unwrap().is_zero());
}

#[test]
fn big_odd_products() {
    let eng = Engine::for_rank(1, 2).unwrap();
    let fi = eng.big_odd_product(Kind::F).unwrap();
    let want = eng.multiply(&eng.f(1, 3).unwrap(), &eng.f(1, 2).unwrap()).unwrap();
    assert_eq!(fi, want);
    assert_eq!(fi.len(), 1);
}

#[test]
fn display_is_readable() {
    let eng = Engine::for_rank(1, 1).unwrap();
    let ef = eng.multiply(&eng.e(1, 2).unwrap(), &eng.f(1, 2).unwrap()).unwrap();
    let s = ef.display(eng.sig()).to_string();
    assert!(s.contains("F[1,2]*E[1,2]"), "{s}");
}
