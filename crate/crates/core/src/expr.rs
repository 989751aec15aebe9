//! Surface syntax for algebra expressions.
//!
//! ```text
//! sum    ← ['-'] term (('+' | '-') term)*
//! term   ← factor (('*' | '/') factor)*
//! factor ← atom ('^' ['-'] int)?
//! atom   ← int | 'q' | E[i,j] | F[i,j] | K[s] | K^-1[s]
//!        | '[' sum ',' sum ']' | map '(' sum ')' | '(' sum ')'
//! map    ← Omega | Psi | T[i] | Tinv[i]
//! ```
//!
//! Whitespace is ignored. Division is only by scalar-valued expressions.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::pbw::{Element, Engine, Kind};
use crate::scalars::Scalar;
use crate::symmetries::{apply, AlgebraMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Expr {
    Int(u64),
    Q,
    Root {
        kind: Kind,
        i: usize,
        j: usize,
    },
    /// `K_s^{±1}`.
    Torus {
        s: usize,
        inverse: bool,
    },
    /// Signed terms; never a single positive term.
    Sum(Vec<(bool, Expr)>),
    /// Factors with a division flag; at least two factors.
    Product(Vec<(bool, Expr)>),
    Pow(Box<Expr>, i32),
    Bracket(Box<Expr>, Box<Expr>),
    Map(AlgebraMap, Box<Expr>),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let end = self.pos + kw.len();
        if self.src.get(self.pos..end) == Some(kw.as_bytes()) {
            let next = self.src.get(end).copied();
            if next.is_some_and(|c| c.is_ascii_alphanumeric()) {
                return false;
            }
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| AlgebraError::Parse { pos: start, msg: "integer too large".into() })
    }

    fn index(&mut self) -> Result<usize> {
        Ok(self.uint()? as usize)
    }

    fn bracket_indices(&mut self, two: bool) -> Result<(usize, usize)> {
        self.expect(b'[')?;
        let a = self.index()?;
        let b = if two {
            self.expect(b',')?;
            self.index()?
        } else {
            0
        };
        self.expect(b']')?;
        Ok((a, b))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let first_neg = self.eat(b'-');
        terms.push((first_neg, self.term()?));
        loop {
            if self.eat(b'+') {
                terms.push((false, self.term()?));
            } else if self.eat(b'-') {
                terms.push((true, self.term()?));
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr::Sum(terms))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![(false, self.factor()?)];
        loop {
            if self.eat(b'*') {
                factors.push((false, self.factor()?));
            } else if self.eat(b'/') {
                factors.push((true, self.factor()?));
            } else {
                break;
            }
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor").1);
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let v = self.uint()?;
            let v = i32::try_from(v).map_err(|_| AlgebraError::Parse { pos: self.pos, msg: "exponent too large".into() })?;
            return Ok(Expr::Pow(Box::new(base), if neg { -v } else { v }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(self.uint()?)),
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.sum()?;
                self.expect(b',')?;
                let b = self.sum()?;
                self.expect(b']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(_) => {
                if self.keyword("q") {
                    return Ok(Expr::Q);
                }
                if self.keyword("Omega") {
                    return self.map_arg(AlgebraMap::Omega);
                }
                if self.keyword("Psi") {
                    return self.map_arg(AlgebraMap::Psi);
                }
                if self.keyword("Tinv") {
                    let (i, _) = self.bracket_indices(false)?;
                    return self.map_arg(AlgebraMap::TInv(i));
                }
                if self.keyword("T") {
                    let (i, _) = self.bracket_indices(false)?;
                    return self.map_arg(AlgebraMap::T(i));
                }
                for (kw, kind) in [("E", Kind::E), ("F", Kind::F)] {
                    if self.keyword(kw) {
                        let (i, j) = self.bracket_indices(true)?;
                        return Ok(Expr::Root { kind, i, j });
                    }
                }
                if self.keyword("K") {
                    let save = self.pos;
                    if self.eat(b'^') {
                        if self.eat(b'-') && self.uint().ok() == Some(1) && self.peek() == Some(b'[') {
                            let (s, _) = self.bracket_indices(false)?;
                            return Ok(Expr::Torus { s, inverse: true });
                        }
                        self.pos = save;
                        return self.err("expected K[s] or K^-1[s]");
                    }
                    let (s, _) = self.bracket_indices(false)?;
                    return Ok(Expr::Torus { s, inverse: false });
                }
                self.err("unexpected character")
            }
        }
    }

    fn map_arg(&mut self, map: AlgebraMap) -> Result<Expr> {
        self.expect(b'(')?;
        let e = self.sum()?;
        self.expect(b')')?;
        Ok(Expr::Map(map, Box::new(e)))
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    fn is_atomic(&self) -> bool {
        matches!(self, Expr::Int(_) | Expr::Q | Expr::Root { .. } | Expr::Torus { .. } | Expr::Bracket(..) | Expr::Map(..))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => write!(f, "q"),
            Expr::Root { kind: Kind::E, i, j } => write!(f, "E[{i},{j}]"),
            Expr::Root { kind: Kind::F, i, j } => write!(f, "F[{i},{j}]"),
            Expr::Torus { s, inverse: false } => write!(f, "K[{s}]"),
            Expr::Torus { s, inverse: true } => write!(f, "K^-1[{s}]"),
            Expr::Sum(terms) => {
                for (k, (neg, t)) in terms.iter().enumerate() {
                    match (k, neg) {
                        (0, true) => write!(f, "-")?,
                        (0, false) => {}
                        (_, true) => write!(f, " - ")?,
                        (_, false) => write!(f, " + ")?,
                    }
                    if matches!(t, Expr::Sum(_)) {
                        write!(f, "({t})")?;
                    } else {
                        write!(f, "{t}")?;
                    }
                }
                Ok(())
            }
            Expr::Product(factors) => {
                for (k, (div, x)) in factors.iter().enumerate() {
                    if k > 0 {
                        write!(f, "{}", if *div { "/" } else { "*" })?;
                    }
                    if matches!(x, Expr::Sum(_) | Expr::Product(_)) {
                        write!(f, "({x})")?;
                    } else {
                        write!(f, "{x}")?;
                    }
                }
                Ok(())
            }
            Expr::Pow(base, e) => {
                if base.is_atomic() {
                    write!(f, "{base}^{e}")
                } else {
                    write!(f, "({base})^{e}")
                }
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            Expr::Map(m, x) => write!(f, "{m}({x})"),
        }
    }
}

/// Evaluates to a normal form.
pub fn eval(eng: &Engine, e: &Expr) -> Result<Element> {
    let sig = eng.sig();
    match e {
        Expr::Int(n) => Ok(eng.scalar(Scalar::from_int(*n as i64))),
        Expr::Q => Ok(eng.scalar(Scalar::q_pow(1))),
        Expr::Root { kind, i, j } => eng.root_element(*kind, *i, *j),
        Expr::Torus { s, inverse } => eng.k(*s, if *inverse { -1 } else { 1 }),
        Expr::Sum(terms) => {
            let mut acc = Element::zero();
            for (neg, t) in terms {
                let v = eval(eng, t)?;
                acc = if *neg { acc.sub(&v) } else { acc.add(&v) };
            }
            Ok(acc)
        }
        Expr::Product(factors) => {
            let mut acc = eng.one();
            for (div, x) in factors {
                let v = eval(eng, x)?;
                if *div {
                    let s = v.as_scalar().ok_or_else(|| AlgebraError::UnsupportedDivision("division by a non-scalar".into()))?;
                    acc = acc.scale(&s.inv()?);
                } else {
                    acc = eng.multiply(&acc, &v)?;
                }
            }
            Ok(acc)
        }
        Expr::Pow(base, n) => {
            let v = eval(eng, base)?;
            if *n >= 0 {
                return eng.power(&v, *n as u32);
            }
            let inv = invert_unit(eng, &v).ok_or(AlgebraError::InvalidExponent(i64::from(*n)))??;
            eng.power(&inv, n.unsigned_abs())
        }
        Expr::Bracket(a, b) => eng.super_commutator(&eval(eng, a)?, &eval(eng, b)?),
        Expr::Map(m, x) => {
            if let AlgebraMap::T(i) | AlgebraMap::TInv(i) = m {
                sig.check_index(*i)?;
            }
            apply(eng, *m, &eval(eng, x)?)
        }
    }
}

/// Inverse of a nonzero scalar or of a single torus monomial.
fn invert_unit(eng: &Engine, v: &Element) -> Option<Result<Element>> {
    let mut it = v.terms();
    match (it.next(), it.next()) {
        (Some((m, c)), None) if m.is_torus() => {
            let mu: Vec<i32> = m.k.iter().map(|x| -x).collect();
            Some(c.inv().map(|ci| eng.k_vec(&mu).scale(&ci)))
        }
        _ => None,
    }
}

/// Random well-formed expression over the generators of `U_q(gl(m|n))`.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, m: usize, n: usize, depth: u32) -> Expr {
    let rank = m + n;
    let leaf = |rng: &mut R| -> Expr {
        match rng.gen_range(0..5) {
            0 => Expr::Int(rng.gen_range(0..10)),
            1 => Expr::Q,
            2 | 3 => {
                let i = rng.gen_range(1..rank);
                let j = rng.gen_range(i + 1..=rank);
                Expr::Root { kind: if rng.gen_bool(0.5) { Kind::E } else { Kind::F }, i, j }
            }
            _ => Expr::Torus { s: rng.gen_range(1..=rank), inverse: rng.gen_bool(0.5) },
        }
    };
    if depth == 0 {
        return leaf(rng);
    }
    let sub = |rng: &mut R| -> Expr { random_expr(rng, m, n, depth - 1) };
    match rng.gen_range(0..7) {
        0 => {
            let k = rng.gen_range(1..4);
            let mut terms: Vec<(bool, Expr)> = (0..k).map(|_| (rng.gen_bool(0.4), sub(rng))).collect();
            if terms.len() == 1 {
                terms[0].0 = true;
            }
            Expr::Sum(terms)
        }
        1 => {
            let k = rng.gen_range(2..4);
            Expr::Product((0..k).map(|_| (false, sub(rng))).collect())
        }
        2 => Expr::Pow(Box::new(sub(rng)), rng.gen_range(0..3)),
        3 => Expr::Bracket(Box::new(sub(rng)), Box::new(sub(rng))),
        4 => {
            let maps = [AlgebraMap::Omega, AlgebraMap::Psi];
            Expr::Map(maps[rng.gen_range(0..2)], Box::new(sub(rng)))
        }
        _ => leaf(rng),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn parses_examples() {
        assert!(matches!(parse("E[1,2]*F[1,2]").unwrap(), Expr::Product(_)));
        assert!(matches!(parse("[E[1,3],F[1,3]]").unwrap(), Expr::Bracket(..)));
        assert_eq!(parse("K^-1[2]").unwrap(), Expr::Torus { s: 2, inverse: true });
        assert_eq!(parse(" q ^ -2 ").unwrap(), Expr::Pow(Box::new(Expr::Q), -2));
        assert!(matches!(parse("E[1,2] +"), Err(AlgebraError::Parse { pos: 8, .. })));
        assert!(matches!(parse("E[1 2]"), Err(AlgebraError::Parse { .. })));
        assert!(matches!(parse("X"), Err(AlgebraError::Parse { pos: 0, .. })));
    }

    #[test]
    fn omega_of_simple_is_lowering() {
        for (m, n) in [(1, 1), (2, 1), (2, 2)] {
            let eng = Engine::for_rank(m, n).unwrap();
            assert!(eval(&eng, &parse("Omega(E[1,2]) - F[1,2]").unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn normal_form_display_reparses() {
        let eng = Engine::for_rank(2, 1).unwrap();
        for src in ["E[1,2]*F[1,2]", "E[1,3]*F[1,3]*F[2,3]", "(q + 1)/(q^2 - 1)*K[1]*E[2,3]", "[E[1,3],F[1,3]]/(q - q^-1)"] {
            let x = eval(&eng, &parse(src).unwrap()).unwrap();
            let printed = x.display(eng.sig()).to_string();
            let back = eval(&eng, &parse(&printed).unwrap()).unwrap();
            assert_eq!(back, x, "{src} -> {printed}");
        }
    }

    #[test]
    fn print_parse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let e = random_expr(&mut rng, 2, 1, 3);
            let s = e.to_string();
            assert_eq!(parse(&s).unwrap(), e, "{s}");
        }
    }
}
