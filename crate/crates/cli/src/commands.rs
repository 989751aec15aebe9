use serde::Serialize;

use qsuper::battery;
use qsuper::checks::{associativity_probe, identity_suite, odd_order_suite, relation_suite, Report};
use qsuper::expr;
use qsuper::modules::build_kac_bounded;
use qsuper::typicality::{f_at_character, f_closed, f_closed_symbolic, factors, is_typical, TypicalityFactor};
use qsuper::unity::{
    b_chi_nilpotency, centrality_check, fixed_space_is_top, kac_unity, regular_fixed_space, simple_even_unity, specialize, top_readings,
    CentralCharacter, SmallAlgebra, TopReadings,
};
use qsuper::weights::Character;
use qsuper::{AlgebraError, CyclotomicField, Element, Engine, Field, Result};

use crate::Verdict;

/// Explicit bases above this size are not enumerated by `unity`.
const BASIS_LISTING_LIMIT: u128 = 200_000;

pub struct Output {
    pub json: bool,
}

impl Output {
    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            let s = serde_json::to_string_pretty(value).map_err(|e| AlgebraError::Serialization(e.to_string()))?;
            println!("{s}");
        } else {
            println!("{}", text());
        }
        Ok(())
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Ok
    } else {
        Verdict::Failed
    }
}

/// Comma-separated integers; `None` if any entry is a symbolic `?i`.
fn parse_weight(text: &str, rank: usize) -> Result<Option<Vec<i64>>> {
    let mut out = Vec::new();
    let mut pos = 0;
    let mut symbolic = false;
    for part in text.split(',') {
        let p = part.trim();
        if p.starts_with('?') {
            symbolic = true;
        } else {
            let v = p.parse::<i64>().map_err(|_| AlgebraError::Parse { pos, msg: format!("expected an integer, got {p:?}") })?;
            out.push(v);
        }
        pos += part.len() + 1;
    }
    let count = text.split(',').count();
    if count != rank {
        return Err(AlgebraError::IndexOutOfRange(format!("weight has {count} entries, rank is {rank}")));
    }
    Ok((!symbolic).then_some(out))
}

#[derive(Serialize)]
struct Term {
    monomial: String,
    coefficient: String,
}

#[derive(Serialize)]
struct NfReport {
    signature: (usize, usize),
    input: String,
    canonical: String,
    root_of_unity: Option<u32>,
    normal_form: String,
    terms: Vec<Term>,
}

pub fn nf(out: &Output, m: usize, n: usize, l: Option<u32>, text: &str) -> Result<Verdict> {
    let eng = Engine::for_rank(m, n)?;
    let sig = eng.sig();
    let parsed = expr::parse(text)?;
    let x = expr::eval(&eng, &parsed)?;
    let one = qsuper::Scalar::one();
    let terms: Vec<Term> = match l {
        None => x
            .terms()
            .map(|(mo, c)| Term {
                monomial: Element::monomial(mo.clone(), one.clone()).display(sig).to_string(),
                coefficient: c.to_string(),
            })
            .collect(),
        Some(l) => {
            let field = CyclotomicField::new(l)?;
            specialize(&field, &x)?
                .into_iter()
                .map(|(mo, c)| Term { monomial: Element::monomial(mo, one.clone()).display(sig).to_string(), coefficient: c.to_string() })
                .collect()
        }
    };
    let normal_form = match l {
        None => x.display(sig).to_string(),
        Some(_) if terms.is_empty() => "0".to_string(),
        Some(_) => terms.iter().map(|t| format!("({})*{}", t.coefficient, t.monomial)).collect::<Vec<_>>().join(" + "),
    };
    let rep = NfReport { signature: (m, n), input: text.to_string(), canonical: parsed.to_string(), root_of_unity: l, normal_form, terms };
    out.emit(&rep, || rep.normal_form.clone())?;
    Ok(Verdict::Ok)
}

#[derive(Serialize)]
struct SuiteReport {
    signature: (usize, usize),
    passed: bool,
    suites: Vec<Report>,
}

fn suites_text(suites: &[Report]) -> String {
    let mut s = String::new();
    for r in suites {
        let fails: Vec<_> = r.failures().collect();
        s += &format!("{}: {} checks, {} failures\n", r.suite, r.len(), fails.len());
        for f in fails {
            s += &format!("  FAIL {} {}\n", f.name, f.detail.clone().unwrap_or_default());
        }
    }
    s.trim_end().to_string()
}

pub fn relcheck(out: &Output, m: usize, n: usize, seed: u64) -> Result<Verdict> {
    let eng = Engine::for_rank(m, n)?;
    let suites = vec![relation_suite(&eng)?, identity_suite(&eng)?, odd_order_suite(&eng, seed)?, associativity_probe(&eng, seed, 200)?];
    let passed = suites.iter().all(Report::passed);
    let rep = SuiteReport { signature: (m, n), passed, suites };
    out.emit(&rep, || suites_text(&rep.suites))?;
    Ok(verdict(passed))
}

#[derive(Serialize)]
struct TypicalReport {
    signature: (usize, usize),
    weight: Option<Vec<i64>>,
    factors: Vec<TypicalityFactor>,
    f: String,
    typical: Option<bool>,
}

pub fn typical(out: &Output, m: usize, n: usize, weight: Option<&str>) -> Result<Verdict> {
    let eng = Engine::for_rank(m, n)?;
    let sig = eng.sig();
    let lam = match weight {
        Some(w) => parse_weight(w, sig.rank())?,
        None => None,
    };
    let rep = match &lam {
        Some(lam) => TypicalReport {
            signature: (m, n),
            weight: Some(lam.clone()),
            factors: factors(sig, lam),
            f: f_closed(sig, lam).to_string(),
            typical: Some(is_typical(sig, lam)),
        },
        None => {
            TypicalReport { signature: (m, n), weight: None, factors: Vec::new(), f: f_closed_symbolic(sig)?.to_string(), typical: None }
        }
    };
    out.emit(&rep, || match rep.typical {
        Some(t) => {
            let fs: Vec<String> = rep.factors.iter().map(|f| format!("[{}]", f.value)).collect();
            format!("factors: {}\nf = {}\nverdict: {}", fs.join(" "), rep.f, if t { "typical" } else { "atypical" })
        }
        None => format!("f = {}", rep.f),
    })?;
    Ok(Verdict::Ok)
}

#[derive(Serialize)]
struct Multiplicity {
    weight: Vec<i64>,
    dim: usize,
}

#[derive(Serialize)]
struct KacReport {
    signature: (usize, usize),
    weight: Vec<i64>,
    dimension: usize,
    weights: Vec<Multiplicity>,
    singular_vectors: Vec<Multiplicity>,
    simple: bool,
    factors: Vec<TypicalityFactor>,
    typical: bool,
    consistent: bool,
}

pub fn kac(out: &Output, m: usize, n: usize, weight: &str, max_dim: usize) -> Result<Verdict> {
    let eng = Engine::for_rank(m, n)?;
    let sig = eng.sig();
    let lam =
        parse_weight(weight, sig.rank())?.ok_or_else(|| AlgebraError::Parse { pos: 0, msg: "kac needs an integral weight".into() })?;
    let module = build_kac_bounded(&eng, &lam, max_dim)?;
    let weights = module
        .weights()
        .into_iter()
        .map(|w| {
            let dim = module.basis.iter().filter(|b| b.weight == w).count();
            Multiplicity { weight: w, dim }
        })
        .collect();
    let singular: Vec<Multiplicity> =
        module.singular_vectors(&eng)?.into_iter().map(|(w, b)| Multiplicity { weight: w, dim: b.len() }).collect();
    let simple = singular.iter().map(|s| s.dim).sum::<usize>() == 1;
    let typical = is_typical(sig, &lam);
    let rep = KacReport {
        signature: (m, n),
        weight: lam.clone(),
        dimension: module.dim(),
        weights,
        singular_vectors: singular,
        simple,
        factors: factors(sig, &lam),
        typical,
        consistent: simple == typical,
    };
    out.emit(&rep, || {
        let sv: Vec<String> = rep.singular_vectors.iter().map(|s| format!("{:?} x{}", s.weight, s.dim)).collect();
        format!(
            "dimension: {}\nweight spaces: {}\nsingular vectors: {}\nsimple: {}\ntypical: {}",
            rep.dimension,
            rep.weights.len(),
            sv.join(", "),
            rep.simple,
            rep.typical
        )
    })?;
    Ok(verdict(rep.consistent))
}

#[derive(Serialize)]
struct KacUnityReport {
    weight: Vec<i64>,
    chi_z: Vec<String>,
    dimension: usize,
    simple: bool,
    f: String,
    typical: bool,
    separates_odd_roots: bool,
    /// Only asserted when `χ` separates the odd roots.
    odd_fixed_space_is_top: bool,
    top_readings: TopReadings,
    consistent: bool,
}

#[derive(Serialize)]
struct UnityReport {
    signature: (usize, usize),
    l: u32,
    centrality: Report,
    small_algebra_dimension: String,
    explicit_basis_size: Option<usize>,
    regular_fixed_space_dim: usize,
    regular_fixed_space_is_top: bool,
    b_chi_nilpotency_index: usize,
    kac: Option<KacUnityReport>,
    passed: bool,
}

fn parse_scalar_list(text: &str, eng: &Engine, field: &CyclotomicField) -> Result<Vec<qsuper::CyclotomicScalar>> {
    text.split(',')
        .map(|p| {
            let x = expr::eval(eng, &expr::parse(p)?)?;
            let s = x.as_scalar().ok_or(AlgebraError::NotAScalar)?;
            field.specialize(&s)
        })
        .collect()
}

pub fn unity(out: &Output, m: usize, n: usize, l: u32, weight: Option<&str>, chi_z: Option<&str>, max_dim: usize) -> Result<Verdict> {
    let eng = Engine::for_rank(m, n)?;
    let sig = eng.sig();
    let field = CyclotomicField::new(l)?;
    let centrality = centrality_check(&eng, l)?;
    let trivial = CentralCharacter { y: Default::default(), z: vec![field.one(); sig.rank()] };
    let small = SmallAlgebra::new(&eng, l, trivial)?;
    let expected = small.expected_dim();
    let explicit = (expected <= BASIS_LISTING_LIMIT).then(|| small.basis().len());
    let (fixed_dim, fixed_top) = regular_fixed_space(&eng, &field)?;
    let nil = b_chi_nilpotency(&eng, l)?;

    let kac = match weight {
        None => None,
        Some(w) => {
            let lam =
                parse_weight(w, sig.rank())?.ok_or_else(|| AlgebraError::Parse { pos: 0, msg: "unity needs an integral weight".into() })?;
            let ch = Character::integral(&field, sig, &lam);
            let chi = CentralCharacter::from_torus(&field, &ch, l)?;
            if let Some(text) = chi_z {
                let given = parse_scalar_list(text, &eng, &field)?;
                if given != chi.z {
                    return Err(AlgebraError::IncompatibleCharacter(format!("chi(z) = {text} but lambda(K)^{l} differs")));
                }
            }
            let module = kac_unity(&eng, &field, &ch, &chi, max_dim)?;
            let simple = module.is_simple_bruteforce(&eng)?;
            let f = f_at_character(&field, sig, &ch)?;
            let typical = !field.is_zero(&f);
            let separates = chi.separates_odd_roots(&field, &eng)?;
            let dim_m = simple_even_unity(&eng, &field, &ch, max_dim)?.dim();
            let top = fixed_space_is_top(&eng, &module, dim_m)?;
            let readings = top_readings(&eng, &module)?;
            Some(KacUnityReport {
                weight: lam,
                chi_z: chi.z.iter().map(ToString::to_string).collect(),
                dimension: module.dim(),
                simple,
                f: f.to_string(),
                typical,
                separates_odd_roots: separates,
                odd_fixed_space_is_top: top,
                top_readings: readings,
                consistent: simple == typical && readings.raise_lower_nonzero == typical && (!separates || (simple && top)),
            })
        }
    };
    let passed = centrality.passed()
        && explicit.is_none_or(|b| b as u128 == expected)
        && fixed_dim == 1
        && fixed_top
        && kac.as_ref().is_none_or(|k| k.consistent);
    let rep = UnityReport {
        signature: (m, n),
        l,
        centrality,
        small_algebra_dimension: expected.to_string(),
        explicit_basis_size: explicit,
        regular_fixed_space_dim: fixed_dim,
        regular_fixed_space_is_top: fixed_top,
        b_chi_nilpotency_index: nil,
        kac,
        passed,
    };
    out.emit(&rep, || {
        let mut s = format!(
            "central l-th powers: {} checks, {} failures\ndim u: {} (explicit basis: {})\nregular fixed space: dim {}, spanned by E_I1: {}\nB_chi nilpotency index: {}",
            rep.centrality.len(),
            rep.centrality.failures().count(),
            rep.small_algebra_dimension,
            rep.explicit_basis_size.map_or("not listed".into(), |b| b.to_string()),
            rep.regular_fixed_space_dim,
            rep.regular_fixed_space_is_top,
            rep.b_chi_nilpotency_index
        );
        if let Some(k) = &rep.kac {
            s += &format!(
                "\nK(M): dim {}, simple {}, f = {}, separates odd roots {}, odd-fixed space is M {}",
                k.dimension, k.simple, k.f, k.separates_odd_roots, k.odd_fixed_space_is_top
            );
        }
        s
    })?;
    Ok(verdict(passed))
}

#[derive(Serialize)]
struct SelftestReport {
    seed: u64,
    passed: bool,
    criteria: Vec<battery::Outcome>,
}

pub fn selftest(out: &Output, only: Option<u8>, seed: u64) -> Result<Verdict> {
    let criteria = match only {
        Some(id) => vec![battery::run(id, seed)?],
        None => battery::run_all(seed)?,
    };
    let passed = criteria.iter().all(|c| c.passed);
    let rep = SelftestReport { seed, passed, criteria };
    out.emit(&rep, || {
        let mut s = String::new();
        for c in &rep.criteria {
            s += &format!("{} {}: {} ({} checks, {} ms)\n", if c.passed { "PASS" } else { "FAIL" }, c.id, c.title, c.checks, c.millis);
            for f in &c.failures {
                s += &format!("    failure: {f}\n");
            }
            for nt in &c.notes {
                s += &format!("    note: {nt}\n");
            }
        }
        s.trim_end().to_string()
    })?;
    Ok(verdict(passed))
}
