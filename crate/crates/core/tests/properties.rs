use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qsuper::expr::{self, random_expr};
use qsuper::pbw::{Engine, Letter};
use qsuper::{CyclotomicField, Scalar};

fn laurent() -> impl Strategy<Value = Scalar> {
    (-3i32..3, prop::collection::vec(-4i64..5, 1..5)).prop_map(|(low, cs)| Scalar::laurent(low, &cs))
}

fn letter(m: usize, n: usize) -> impl Strategy<Value = Letter> {
    let rank = m + n;
    let roots = rank * (rank - 1) / 2;
    prop_oneof![(0..roots).prop_map(Letter::E), (0..roots).prop_map(Letter::F), (0..rank, -1i32..=1).prop_map(|(s, e)| Letter::K(s, e)),]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn specialization_is_multiplicative(a in laurent(), b in laurent(), l in prop::sample::select(vec![3u32, 5, 7])) {
        let f = CyclotomicField::new(l).unwrap();
        let lhs = f.specialize(&(a.clone() * b.clone())).unwrap();
        let rhs = f.mul(&f.specialize(&a).unwrap(), &f.specialize(&b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn products_are_associative(
        x in prop::collection::vec(letter(2, 1), 1..4),
        y in prop::collection::vec(letter(2, 1), 1..4),
        z in prop::collection::vec(letter(2, 1), 1..4),
    ) {
        let eng = Engine::for_rank(2, 1).unwrap();
        let (a, b, c) = (eng.word(&x).unwrap(), eng.word(&y).unwrap(), eng.word(&z).unwrap());
        let left = eng.multiply(&eng.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = eng.multiply(&a, &eng.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn printing_then_parsing_is_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_expr(&mut rng, 2, 2, 3);
        let printed = e.to_string();
        prop_assert_eq!(expr::parse(&printed).unwrap(), e);
    }
}
