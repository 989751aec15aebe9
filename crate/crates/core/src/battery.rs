//! The full self-verification battery, one entry per property family.
//! Used by the `selftest` subcommand; the acceptance test drives the same
//! entry points and adds independent oracles on top.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::{identity_suite, odd_order_suite, opposite_exponent_suite, relation_suite, Report};
use crate::error::Result;
use crate::expr::{self, random_expr};
use crate::linalg::{mat_mul, mat_scale, Matrix};
use crate::modules::{build_kac, WeightModule};
use crate::pbw::{Engine, Kind};
use crate::scalars::{CyclotomicField, Field, RationalFunctions, Scalar};
use crate::symmetries::symmetry_suite;
use crate::typicality::{extract_f_direct, f_at_character, f_closed_symbolic, is_typical};
use crate::unity::{
    b_chi_nilpotency, centrality_check, character, fixed_space_is_top, kac_unity, regular_fixed_space, simple_even_unity, top_readings,
    CentralCharacter, SmallAlgebra,
};
use crate::weights::eval_symbolic;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<String>,
    /// Observations that do not affect the verdict.
    pub notes: Vec<String>,
    /// Wall-clock time; left out of JSON so output is reproducible.
    #[serde(skip)]
    pub millis: u128,
    pub budget_millis: u128,
}

struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checks: 0, failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn report(&mut self, rep: &Report) {
        self.checks += rep.len();
        for f in rep.failures() {
            self.failures.push(format!("{}: {} {}", rep.suite, f.name, f.detail.clone().unwrap_or_default()));
        }
    }
}

pub const TITLES: [&str; 9] = [
    "defining relations normal-form to zero (m+n <= 5)",
    "root-vector commutation identities (m,n <= 3); shared-endpoint pairs q-commute with q_s^-1; the q_s variant fails (see notes)",
    "odd-order annihilation and straightening (mn <= 6)",
    "typicality polynomial: straightened equals closed form",
    "Kac module simplicity equals typicality",
    "odd top product q-commutes with even lowering and commutes with even raising",
    "root-of-unity battery",
    "algebra maps: involutions, inverses, root-vector composites",
    "expression parser round-trip and deterministic output",
];

const BUDGET_MS: [u128; 9] = [60_000, 120_000, 600_000, 300_000, 600_000, 600_000, 600_000, 600_000, 600_000];

/// Runs criterion `id` (1..=9).
pub fn run(id: u8, seed: u64) -> Result<Outcome> {
    let start = Instant::now();
    let mut t = Tally::new();
    match id {
        1 => relations(&mut t)?,
        2 => identities(&mut t)?,
        3 => odd_order(&mut t, seed)?,
        4 => typicality(&mut t)?,
        5 => simplicity(&mut t)?,
        6 => top_product(&mut t)?,
        7 => unity(&mut t)?,
        8 => symmetries(&mut t, seed)?,
        9 => parser(&mut t, seed)?,
        _ => return Err(crate::AlgebraError::IndexOutOfRange(format!("criterion {id}"))),
    }
    let idx = usize::from(id - 1);
    let millis = start.elapsed().as_millis();
    let budget = BUDGET_MS[idx];
    if millis > budget {
        t.failures.push(format!("took {millis} ms, budget {budget} ms"));
    }
    Ok(Outcome {
        id,
        title: TITLES[idx].to_string(),
        passed: t.failures.is_empty(),
        checks: t.checks,
        failures: t.failures,
        notes: t.notes,
        millis,
        budget_millis: budget,
    })
}

pub fn run_all(seed: u64) -> Result<Vec<Outcome>> {
    (1..=9).map(|id| run(id, seed)).collect()
}

fn signatures(pred: impl Fn(usize, usize) -> bool, max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 1..=max {
            if pred(m, n) {
                out.push((m, n));
            }
        }
    }
    out
}

fn relations(t: &mut Tally) -> Result<()> {
    for (m, n) in signatures(|m, n| m + n <= 5, 4) {
        t.report(&relation_suite(&Engine::for_rank(m, n)?)?);
    }
    Ok(())
}

fn identities(t: &mut Tally) -> Result<()> {
    for (m, n) in signatures(|m, n| m <= 3 && n <= 3, 3) {
        let eng = Engine::for_rank(m, n)?;
        t.report(&identity_suite(&eng)?);
        let opp = opposite_exponent_suite(&eng)?;
        let failing = opp.failures().count();
        if failing > 0 {
            t.notes.push(format!(
                "({m},{n}): {failing}/{} shared-endpoint instances fail with the opposite exponent sign (q_s instead of q_s^-1)",
                opp.len()
            ));
        }
    }
    Ok(())
}

fn odd_order(t: &mut Tally, seed: u64) -> Result<()> {
    for (m, n) in signatures(|m, n| m * n <= 6, 6) {
        t.report(&odd_order_suite(&Engine::for_rank(m, n)?, seed)?);
    }
    Ok(())
}

fn typicality(t: &mut Tally) -> Result<()> {
    for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let eng = Engine::for_rank(m, n)?;
        let direct = eval_symbolic(eng.sig(), &extract_f_direct(&eng)?)?;
        let closed = f_closed_symbolic(eng.sig())?;
        t.check(direct.sub(&closed).is_zero(), || format!("({m},{n}): direct {direct} != closed {closed}"));
    }
    Ok(())
}

fn simplicity(t: &mut Tally) -> Result<()> {
    let mut cases: Vec<((usize, usize), Vec<i64>)> = Vec::new();
    for a in -3..=3 {
        for b in -3..=3 {
            cases.push(((1, 1), vec![a, b]));
        }
    }
    for d in 0..=3 {
        for c in -3..=3 {
            for b in -1..=1 {
                cases.push(((2, 1), vec![b + d, b, c]));
            }
        }
    }
    let engines = [Engine::for_rank(1, 1)?, Engine::for_rank(2, 1)?];
    for ((m, _), lam) in cases {
        let eng = &engines[m - 1];
        let simple = build_kac(eng, &lam)?.is_simple_bruteforce(eng)?;
        let typical = is_typical(eng.sig(), &lam);
        t.check(simple == typical, || format!("{lam:?}: simple={simple}, typical={typical}"));
    }
    Ok(())
}

type Signature = (usize, usize);

/// `A = c·B` for a signed power of `q`; returns the exponent and sign.
fn q_power_ratio(a: &Matrix<Scalar>, b: &Matrix<Scalar>) -> Option<(i8, i32)> {
    let f = RationalFunctions;
    let (rows, cols) = (b.rows(), b.cols());
    let pivot = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).find(|&(r, c)| !b.get(r, c).is_zero());
    let Some((r, c)) = pivot else {
        return (0..rows).all(|r| (0..cols).all(|c| a.get(r, c).is_zero())).then_some((1, 0));
    };
    let ratio = f.div(a.get(r, c), b.get(r, c)).ok()?;
    (mat_scale(&f, &ratio, b) == *a).then_some(())?;
    ratio.as_signed_q_power()
}

fn top_product(t: &mut Tally) -> Result<()> {
    let f = RationalFunctions;
    let cases: [(Signature, &[&[i64]]); 3] = [
        ((2, 1), &[&[2, 0, 1], &[1, 0, 0], &[1, 1, -1]]),
        ((1, 2), &[&[1, 2, 0], &[0, 0, 0], &[2, 1, 1]]),
        ((2, 2), &[&[1, 0, 1, 0], &[0, 0, 0, 0], &[2, 1, 0, -1]]),
    ];
    for ((m, n), lams) in cases {
        let eng = Engine::for_rank(m, n)?;
        let top = eng.big_odd_product(Kind::F)?;
        for lam in lams {
            let k: WeightModule<RationalFunctions> = build_kac(&eng, lam)?;
            let ft = k.act(&top)?;
            for r in eng.sig().even_roots() {
                let fr = k.act(&eng.f(r.i, r.j)?)?;
                let ratio = q_power_ratio(&mat_mul(&f, &fr, &ft), &mat_mul(&f, &ft, &fr));
                t.check(ratio.is_some_and(|(s, _)| s == 1), || format!("({m},{n}) {lam:?}: F[{r}] F_top vs F_top F[{r}]: {ratio:?}"));
                let er = k.act(&eng.e(r.i, r.j)?)?;
                t.check(mat_mul(&f, &er, &ft) == mat_mul(&f, &ft, &er), || {
                    format!("({m},{n}) {lam:?}: E[{r}] does not commute with F_top")
                });
            }
        }
    }
    Ok(())
}

fn unity(t: &mut Tally) -> Result<()> {
    for l in [3u32, 5] {
        let field = CyclotomicField::new(l)?;
        for (m, n) in [(1usize, 1usize), (2, 1)] {
            let eng = Engine::for_rank(m, n)?;
            let tag = format!("({m},{n}) l={l}");
            t.report(&centrality_check(&eng, l)?);

            let chi = CentralCharacter { y: Default::default(), z: vec![field.one(); m + n] };
            let u = SmallAlgebra::new(&eng, l, chi)?;
            let even = m * (m - 1) / 2 + n * (n - 1) / 2;
            let expected = 4u128.pow((m * n) as u32) * u128::from(l).pow((2 * even + m + n) as u32);
            let got = u.basis().len() as u128;
            t.check(got == expected && u.expected_dim() == expected, || format!("{tag}: basis size {got}, expected {expected}"));

            let (dim, is_top) = regular_fixed_space(&eng, &field)?;
            t.check(dim == 1 && is_top, || format!("{tag}: regular fixed space dim {dim}, spanned by E_I1: {is_top}"));

            let (mut total, mut atypical, mut raise_raise) = (0, 0, 0);
            for data in torus_samples(m + n, l as i64, 24) {
                let ch = character(&field, &data);
                let chi = CentralCharacter::from_torus(&field, &ch, l)?;
                let k = kac_unity(&eng, &field, &ch, &chi, 4096)?;
                let simple = k.is_simple_bruteforce(&eng)?;
                let typical = !field.is_zero(&f_at_character(&field, eng.sig(), &ch)?);
                t.check(simple == typical, || format!("{tag} {data:?}: simple={simple}, f!=0: {typical}"));
                let r = top_readings(&eng, &k)?;
                t.check(r.raise_lower_nonzero == typical, || format!("{tag} {data:?}: E_I1 F_I1 v != 0 is {}", r.raise_lower_nonzero));
                raise_raise += usize::from(r.raise_raise_nonzero);
                total += 1;
                atypical += usize::from(!typical);
            }
            t.notes.push(format!("{tag}: {total} (lambda, chi) pairs, {atypical} atypical"));
            t.notes.push(format!("{tag}: E_I1 E_I1 v != 0 for {raise_raise}/{total} pairs; E_I1 F_I1 v != 0 exactly when f != 0"));

            let mut separated = 0;
            for data in separated_samples(m + n, l as i64) {
                let ch = character(&field, &data);
                let chi = CentralCharacter::from_torus(&field, &ch, l)?;
                if !chi.separates_odd_roots(&field, &eng)? {
                    continue;
                }
                separated += 1;
                let k = kac_unity(&eng, &field, &ch, &chi, 4096)?;
                let dim_m = simple_even_unity(&eng, &field, &ch, 4096)?.dim();
                t.check(k.is_simple_bruteforce(&eng)?, || format!("{tag} {data:?}: K(M) not simple"));
                t.check(fixed_space_is_top(&eng, &k, dim_m)?, || format!("{tag} {data:?}: odd-fixed space is not M"));
            }
            t.check(separated >= 10, || format!("{tag}: only {separated} separating characters"));
        }
    }
    let idx = b_chi_nilpotency(&Engine::for_rank(2, 1)?, 3)?;
    t.check(idx == 3, || format!("B_chi nilpotency index at (2,1) l=3 is {idx}"));
    Ok(())
}

/// Characters `λ(K_s) = c_s η^{a_s}`: pure `η`-powers first, then a few
/// with a rational factor.
fn torus_samples(rank: usize, l: i64, count: usize) -> Vec<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    let mut code = 0i64;
    while out.len() < count {
        let data: Vec<(i64, i64)> = (0..rank)
            .map(|s| {
                let a = (code / l.pow(s as u32)) % l;
                let c = if out.len() % 5 == 4 { 2 + s as i64 } else { 1 };
                (c, if s % 2 == 0 { a } else { -a })
            })
            .collect();
        out.push(data);
        code += 1;
    }
    out
}

fn separated_samples(rank: usize, l: i64) -> Vec<Vec<(i64, i64)>> {
    const FACTORS: [i64; 6] = [1, 2, 3, 5, 7, 11];
    (0..12).map(|k| (0..rank).map(|s| (FACTORS[(k + 2 * s) % FACTORS.len()], (k as i64 + s as i64) % l)).collect()).collect()
}

fn symmetries(t: &mut Tally, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3)] {
        let eng = Engine::for_rank(m, n)?;
        let mut extra = Vec::new();
        while extra.len() < 20 {
            if let Ok(x) = expr::eval(&eng, &random_expr(&mut rng, m, n, 2)) {
                extra.push(x);
            }
        }
        t.report(&symmetry_suite(&eng, &extra)?);
    }
    Ok(())
}

/// Generated expressions and their normal forms, as JSON.
pub fn parser_corpus(seed: u64, count: usize) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let eng = Engine::for_rank(2, 1)?;
    let mut rows = Vec::new();
    for _ in 0..count {
        let e = random_expr(&mut rng, 2, 1, 3);
        let nf = expr::eval(&eng, &e).map(|x| x.display(eng.sig()).to_string()).unwrap_or_else(|err| format!("error: {err}"));
        rows.push((e.to_string(), e, nf));
    }
    serde_json::to_string(&rows).map_err(|e| crate::AlgebraError::Serialization(e.to_string()))
}

fn parser(t: &mut Tally, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigs = [(1, 1), (2, 1), (1, 2), (2, 2)];
    let engines: Vec<Engine> = sigs.iter().map(|&(m, n)| Engine::for_rank(m, n)).collect::<Result<_>>()?;
    for k in 0..1200 {
        let (m, n) = sigs[k % sigs.len()];
        let e = random_expr(&mut rng, m, n, 3);
        let printed = e.to_string();
        let reparsed = expr::parse(&printed);
        t.check(reparsed.as_ref() == Ok(&e), || format!("round-trip: {printed}"));
        let again = reparsed.map(|x| x.to_string());
        t.check(again.as_ref() == Ok(&printed), || format!("idempotence: {printed} -> {again:?}"));
        if k % 10 == 0 {
            let eng = &engines[k % sigs.len()];
            if let Ok(x) = expr::eval(eng, &e) {
                let shown = x.display(eng.sig()).to_string();
                let back = expr::parse(&shown).and_then(|p| expr::eval(eng, &p));
                t.check(back.as_ref() == Ok(&x), || format!("normal form does not re-parse: {shown}"));
            }
        }
    }
    let a = parser_corpus(seed, 200)?;
    let b = parser_corpus(seed, 200)?;
    t.check(a == b, || "JSON differs between runs with the same seed".into());
    Ok(())
}
