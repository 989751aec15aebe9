//! Acceptance battery: one PASS/FAIL line per property family. Each family
//! runs the library battery entry and, where an independent oracle exists,
//! cross-checks it here with values computed from scratch.

use std::io::Write;
use std::time::Instant;

use qsuper::battery::{self, Outcome};
use qsuper::modules::build_kac;
use qsuper::pbw::{Element, Engine};
use qsuper::Scalar;

/// `[k] = (q^k − q^{-k}) / (q − q^{-1})`, built from field operations only.
fn quantum_int(k: i64) -> Scalar {
    let num = Scalar::q_pow(k as i32) - Scalar::q_pow(-k as i32);
    num.div(&(Scalar::q_pow(1) - Scalar::q_pow(-1))).unwrap()
}

/// `(λ + ρ, ε_i − ε_j)` for an odd root of gl(m|n), written out by hand:
/// `λ_i + λ_j + (m − i) − (j − m − 1)`.
fn odd_factor(m: usize, lam: &[i64], i: usize, j: usize) -> i64 {
    lam[i - 1] + lam[j - 1] + (m as i64 - i as i64) - (j as i64 - m as i64 - 1)
}

fn typicality_oracle(m: usize, n: usize, lam: &[i64]) -> Scalar {
    let mut acc = Scalar::one();
    for i in 1..=m {
        for j in m + 1..=m + n {
            acc = acc * quantum_int(odd_factor(m, lam, i, j));
        }
    }
    acc
}

/// Torus element evaluated at `λ(K_s) = q^{±λ_s}` (`+` on the first block).
fn eval_torus(m: usize, x: &Element, lam: &[i64]) -> Scalar {
    let mut acc = Scalar::zero();
    for (mono, c) in x.terms() {
        let e: i64 = mono.k.iter().enumerate().map(|(s, &k)| if s < m { lam[s] * i64::from(k) } else { -lam[s] * i64::from(k) }).sum();
        acc = acc + c.clone() * Scalar::q_pow(e as i32);
    }
    acc
}

/// Written straight to stdout so the report shows even when output is captured.
macro_rules! say {
    ($($t:tt)*) => {
        let _ = writeln!(std::io::stdout(), $($t)*);
    };
}

fn line(o: &Outcome, extra: &[String]) -> bool {
    let ok = o.passed && extra.is_empty();
    say!(
        "criterion {}: {} ({} checks, {} ms, budget {} ms) {}",
        o.id,
        if ok { "PASS" } else { "FAIL" },
        o.checks,
        o.millis,
        o.budget_millis,
        o.title
    );
    for n in &o.notes {
        say!("    note: {n}");
    }
    for f in o.failures.iter().chain(extra).take(20) {
        say!("    failure: {f}");
    }
    ok
}

fn oracle_typicality() -> Vec<String> {
    let mut bad = Vec::new();
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let eng = Engine::for_rank(m, n).unwrap();
        let direct = qsuper::typicality::extract_f_direct(&eng).unwrap();
        for seed in 0..12i64 {
            let lam: Vec<i64> = (0..m + n).map(|s| (seed * (s as i64 + 3) + s as i64) % 7 - 3).collect();
            if eval_torus(m, &direct, &lam) != typicality_oracle(m, n, &lam) {
                bad.push(format!("({m},{n}) {lam:?}: straightened f disagrees with hand product"));
            }
        }
    }
    bad
}

fn oracle_simplicity() -> Vec<String> {
    let mut bad = Vec::new();
    let e11 = Engine::for_rank(1, 1).unwrap();
    for a in -3..=3 {
        for b in -3..=3 {
            let simple = build_kac(&e11, &[a, b]).unwrap().is_simple_bruteforce(&e11).unwrap();
            if simple != (a + b != 0) {
                bad.push(format!("(1,1) [{a},{b}]: simple={simple}"));
            }
        }
    }
    let e21 = Engine::for_rank(2, 1).unwrap();
    for d in 0..=3 {
        for c in -3..=3 {
            let lam = [d, 0, c];
            let simple = build_kac(&e21, &lam).unwrap().is_simple_bruteforce(&e21).unwrap();
            if simple != ((lam[0] + c + 1) * (lam[1] + c) != 0) {
                bad.push(format!("(2,1) {lam:?}: simple={simple}"));
            }
        }
    }
    bad
}

/// Nilpotency index of the augmentation ideal of `k[x]/(x^l)`: the smallest
/// `N` with `x^N = 0`, found by multiplying out exponent sets.
fn truncated_one_generator_index(l: usize) -> usize {
    let mut ideal: Vec<usize> = (1..l).collect();
    let mut power = 1;
    while !ideal.is_empty() {
        ideal = ideal.iter().map(|a| a + 1).filter(|&a| a < l).collect();
        power += 1;
    }
    power
}

fn oracle_unity() -> Vec<String> {
    let mut bad = Vec::new();
    // (2,1): the even raising part is generated by E_12 alone
    if truncated_one_generator_index(3) != 3 {
        bad.push("one-generator oracle".into());
    }
    let got = qsuper::unity::b_chi_nilpotency(&Engine::for_rank(2, 1).unwrap(), 3).unwrap();
    if got != truncated_one_generator_index(3) {
        bad.push(format!("B_chi index {got} != oracle"));
    }
    bad
}

fn oracle_parser(seed: u64) -> Vec<String> {
    let a = battery::parser_corpus(seed, 1000).unwrap();
    let b = battery::parser_corpus(seed, 1000).unwrap();
    let c = battery::parser_corpus(seed + 1, 1000).unwrap();
    let mut bad = Vec::new();
    if a != b {
        bad.push("same seed produced different JSON".into());
    }
    if a == c {
        bad.push("different seeds produced identical JSON".into());
    }
    bad
}

#[test]
fn acceptance() {
    let seed = 20240601;
    let start = Instant::now();
    let mut all = true;
    for id in 1..=9u8 {
        let o = battery::run(id, seed).unwrap();
        let extra = match id {
            4 => oracle_typicality(),
            5 => oracle_simplicity(),
            7 => oracle_unity(),
            9 => oracle_parser(seed),
            _ => Vec::new(),
        };
        all &= line(&o, &extra);
    }
    say!("total {} ms", start.elapsed().as_millis());
    assert!(all, "acceptance battery failed");
}
