use super::*;
use crate::typicality::is_typical;

fn eng(m: usize, n: usize) -> Engine {
    Engine::for_rank(m, n).unwrap()
}

#[test]
fn even_dimensions() {
    let e11 = eng(1, 1);
    assert_eq!(build_simple_even(&e11, &[3, -2]).unwrap().dim(), 1);
    let e21 = eng(2, 1);
    assert_eq!(build_simple_even(&e21, &[1, 0, 0]).unwrap().dim(), 2);
    assert_eq!(build_simple_even(&e21, &[4, 4, 1]).unwrap().dim(), 1);
    assert_eq!(build_simple_even(&e21, &[3, 0, 1]).unwrap().dim(), 4);
    // gl3 adjoint: Weyl dimension 8
    let e31 = eng(3, 1);
    assert_eq!(build_simple_even(&e31, &[1, 0, -1, 0]).unwrap().dim(), 8);
    assert_eq!(build_simple_even(&e31, &[2, 0, 0, 0]).unwrap().dim(), 6);
    let e22 = eng(2, 2);
    assert_eq!(build_simple_even(&e22, &[1, 0, 2, 0]).unwrap().dim(), 6);
}

#[test]
fn non_dominant_rejected() {
    let e21 = eng(2, 1);
    assert!(matches!(build_simple_even(&e21, &[0, 1, 0]), Err(AlgebraError::NonDominantWeight(_))));
}

#[test]
fn kac_dimensions() {
    assert_eq!(build_kac(&eng(1, 1), &[1, 0]).unwrap().dim(), 2);
    assert_eq!(build_kac(&eng(2, 1), &[1, 0, 0]).unwrap().dim(), 8);
}

#[test]
fn kac_relations_as_matrices() {
    for (m, n, lam) in [(2, 1, vec![2, 0, 1]), (1, 2, vec![1, 2, 0]), (2, 2, vec![1, 0, 1, 0])] {
        let e = eng(m, n);
        let module = build_kac(&e, &lam).unwrap();
        let f = module.field;
        let r = e.rank();
        for i in 1..r {
            for j in 1..r {
                let ei = module.act(&e.e(i, i + 1).unwrap()).unwrap();
                let fj = module.act(&e.f(j, j + 1).unwrap()).unwrap();
                let ef = mat_mul(&f, &ei, &fj);
                let fe = mat_mul(&f, &fj, &ei);
                let odd = i == m && j == m;
                let lhs = if odd { mat_add(&f, &ef, &fe) } else { mat_add(&f, &ef, &mat_scale(&f, &Scalar::from_int(-1), &fe)) };
                let rhs = module.act(&e.super_commutator(&e.e(i, i + 1).unwrap(), &e.f(j, j + 1).unwrap()).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "({m},{n}) [E{i},F{j}]");
            }
        }
        let em = module.act(&e.e(m, m + 1).unwrap()).unwrap();
        assert!(module.is_zero(&mat_mul(&f, &em, &em)));
        let fm = module.act(&e.f(m, m + 1).unwrap()).unwrap();
        assert!(module.is_zero(&mat_mul(&f, &fm, &fm)));
    }
}

#[test]
fn simplicity_small_cases() {
    let e11 = eng(1, 1);
    assert!(build_kac(&e11, &[1, 0]).unwrap().is_simple_bruteforce(&e11).unwrap());
    let atyp = build_kac(&e11, &[1, -1]).unwrap();
    assert!(!atyp.is_simple_bruteforce(&e11).unwrap());
    assert_eq!(atyp.singular_vectors(&e11).unwrap().len(), 2);
    let e21 = eng(2, 1);
    assert!(!build_kac(&e21, &[1, 0, 0]).unwrap().is_simple_bruteforce(&e21).unwrap());
    for lam in [[2, 0, 1], [3, 1, -2], [1, 1, 0]] {
        let k = build_kac(&e21, &lam).unwrap();
        assert_eq!(k.is_simple_bruteforce(&e21).unwrap(), is_typical(e21.sig(), &lam), "{lam:?}");
    }
}
