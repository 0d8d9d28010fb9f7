//! Boolean combinations of polynomial sign conditions, with a small
//! recursive-descent parser. Negations are pushed into the atoms while
//! parsing, so a parsed formula only contains atoms, `and` and `or`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Vars};
use crate::rational::{parse_rational, Rational, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
}

impl Relation {
    pub fn holds(self, s: Sign) -> bool {
        match self {
            Relation::Eq => s == Sign::Zero,
            Relation::Ne => s != Sign::Zero,
            Relation::Lt => s == Sign::Negative,
            Relation::Le => s != Sign::Positive,
            Relation::Gt => s == Sign::Positive,
            Relation::Ge => s != Sign::Negative,
        }
    }

    pub fn negate(self) -> Relation {
        match self {
            Relation::Eq => Relation::Ne,
            Relation::Ne => Relation::Eq,
            Relation::Lt => Relation::Ge,
            Relation::Le => Relation::Gt,
            Relation::Gt => Relation::Le,
            Relation::Ge => Relation::Lt,
        }
    }

    /// The relation after multiplying both sides by a negative number.
    pub fn flip(self) -> Relation {
        match self {
            Relation::Lt => Relation::Gt,
            Relation::Le => Relation::Ge,
            Relation::Gt => Relation::Lt,
            Relation::Ge => Relation::Le,
            r => r,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
        }
    }

    /// The relation requiring exactly this sign.
    pub fn of_sign(s: Sign) -> Relation {
        match s {
            Sign::Negative => Relation::Lt,
            Sign::Zero => Relation::Eq,
            Sign::Positive => Relation::Gt,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    /// `poly rel 0`
    Atom(Polynomial, Relation),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    pub fn atom(p: Polynomial, rel: Relation) -> Formula {
        Formula::Atom(p, rel)
    }

    pub fn and(mut parts: Vec<Formula>) -> Formula {
        if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::And(parts)
        }
    }

    pub fn or(mut parts: Vec<Formula>) -> Formula {
        if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Formula::Or(parts)
        }
    }

    pub fn negate(&self) -> Formula {
        match self {
            Formula::Atom(p, r) => Formula::Atom(p.clone(), r.negate()),
            Formula::And(fs) => Formula::Or(fs.iter().map(Formula::negate).collect()),
            Formula::Or(fs) => Formula::And(fs.iter().map(Formula::negate).collect()),
        }
    }

    pub fn vars(&self) -> Option<&Vars> {
        match self {
            Formula::Atom(p, _) => Some(p.vars()),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().find_map(Formula::vars),
        }
    }

    /// Atoms in left-to-right order.
    pub fn atoms(&self) -> Vec<(&Polynomial, Relation)> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<(&'a Polynomial, Relation)>) {
        match self {
            Formula::Atom(p, r) => out.push((p, *r)),
            Formula::And(fs) | Formula::Or(fs) => {
                for f in fs {
                    f.collect_atoms(out);
                }
            }
        }
    }

    /// Truth value given the sign of each atom polynomial.
    pub fn holds<F: FnMut(&Polynomial) -> Sign>(&self, sign_of: &mut F) -> bool {
        match self {
            Formula::Atom(p, r) => r.holds(sign_of(p)),
            Formula::And(fs) => fs.iter().all(|f| f.holds(sign_of)),
            Formula::Or(fs) => fs.iter().any(|f| f.holds(sign_of)),
        }
    }

    /// Exact truth value at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<bool> {
        let mut err = None;
        let v = self.holds(&mut |p: &Polynomial| match p.evaluate(point) {
            Ok(v) => Sign::of(&v),
            Err(e) => {
                err = Some(e);
                Sign::Zero
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(v),
        }
    }

    /// Applies `f` to every atom polynomial.
    pub fn map_polys<F: FnMut(&Polynomial) -> Result<Polynomial>>(&self, f: &mut F) -> Result<Formula> {
        Ok(match self {
            Formula::Atom(p, r) => Formula::Atom(f(p)?, *r),
            Formula::And(fs) => Formula::And(fs.iter().map(|g| g.map_polys(f)).collect::<Result<_>>()?),
            Formula::Or(fs) => Formula::Or(fs.iter().map(|g| g.map_polys(f)).collect::<Result<_>>()?),
        })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, fs: &[Formula], op: &str| -> fmt::Result {
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    write!(f, " {op} ")?;
                }
                match g {
                    Formula::Atom(..) => write!(f, "{g}")?,
                    _ => write!(f, "({g})")?,
                }
            }
            Ok(())
        };
        match self {
            Formula::Atom(p, r) => write!(f, "{p} {} 0", r.symbol()),
            Formula::And(fs) if fs.is_empty() => write!(f, "0 = 0"),
            Formula::Or(fs) if fs.is_empty() => write!(f, "1 = 0"),
            Formula::And(fs) => join(f, fs, "and"),
            Formula::Or(fs) => join(f, fs, "or"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Op(&'static str),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(s) | Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Op(s) => write!(f, "'{s}'"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

const OPS: [&str; 16] = [
    "<=", ">=", "!=", "==", "+", "-", "*", "/", "^", "(", ")", "<", ">", "=", "!", "\u{2260}",
];

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let start = (line, column);
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                s.push(chars[i]);
                i += 1;
                column += 1;
            }
            out.push(Token {
                tok: Tok::Num(s),
                line: start.0,
                column: start.1,
            });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                s.push(chars[i]);
                i += 1;
                column += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: start.0,
                column: start.1,
            });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        let op = OPS.iter().find(|op| rest.starts_with(**op));
        match op {
            Some(op) => {
                let n = op.chars().count();
                i += n;
                column += n;
                out.push(Token {
                    tok: Tok::Op(op),
                    line: start.0,
                    column: start.1,
                });
            }
            None => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

enum Fail {
    /// Recoverable: token index and what was expected there.
    At(usize, String),
    /// Not recoverable by backtracking.
    Fatal(Error),
}

type PResult<T> = std::result::Result<T, Fail>;

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a Vars,
    /// Farthest failure seen, for error reporting after backtracking.
    best: Option<(usize, String)>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn is_op(&self, op: &str) -> bool {
        matches!(self.peek(), Tok::Op(o) if *o == op)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s.eq_ignore_ascii_case(w))
    }

    fn fail<T>(&mut self, expected: &str) -> PResult<T> {
        let msg = format!("expected {expected}, found {}", self.peek());
        if self.best.as_ref().is_none_or(|(p, _)| self.pos >= *p) {
            self.best = Some((self.pos, msg.clone()));
        }
        Err(Fail::At(self.pos, msg))
    }

    fn expect_op(&mut self, op: &str) -> PResult<()> {
        if self.is_op(op) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("'{op}'"))
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut parts = vec![self.conj()?];
        while self.is_word("or") {
            self.pos += 1;
            parts.push(self.conj()?);
        }
        Ok(Formula::or(parts))
    }

    fn conj(&mut self) -> PResult<Formula> {
        let mut parts = vec![self.lit()?];
        while self.is_word("and") {
            self.pos += 1;
            parts.push(self.lit()?);
        }
        Ok(Formula::and(parts))
    }

    fn lit(&mut self) -> PResult<Formula> {
        if self.is_word("not") || self.is_op("!") {
            self.pos += 1;
            return Ok(self.lit()?.negate());
        }
        if self.is_op("(") {
            let save = self.pos;
            match self.atom() {
                Ok(a) => return Ok(a),
                Err(Fail::Fatal(e)) => return Err(Fail::Fatal(e)),
                Err(Fail::At(..)) => {}
            }
            self.pos = save + 1;
            let inner = self.formula()?;
            self.expect_op(")")?;
            return Ok(inner);
        }
        self.atom()
    }

    fn relation(&mut self) -> PResult<Relation> {
        let r = match self.peek() {
            Tok::Op("=") | Tok::Op("==") => Relation::Eq,
            Tok::Op("!=") | Tok::Op("\u{2260}") => Relation::Ne,
            Tok::Op("<") => Relation::Lt,
            Tok::Op("<=") => Relation::Le,
            Tok::Op(">") => Relation::Gt,
            Tok::Op(">=") => Relation::Ge,
            _ => return self.fail("a relation (=, !=, <, <=, >, >=)"),
        };
        self.pos += 1;
        Ok(r)
    }

    fn atom(&mut self) -> PResult<Formula> {
        let lhs = self.expr()?;
        let rel = self.relation()?;
        let rhs = self.expr()?;
        Ok(Formula::Atom(&lhs - &rhs, rel))
    }

    fn expr(&mut self) -> PResult<Polynomial> {
        let mut acc = if self.is_op("-") {
            self.pos += 1;
            -self.term()?
        } else {
            if self.is_op("+") {
                self.pos += 1;
            }
            self.term()?
        };
        loop {
            if self.is_op("+") {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.is_op("-") {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.is_op("*") {
                self.pos += 1;
                acc = &acc * &self.factor()?;
            } else if self.is_op("/") {
                self.pos += 1;
                let at = self.pos;
                let d = self.factor()?;
                match d.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                    Some(_) => {
                        self.pos = at;
                        return self.fail("a nonzero divisor");
                    }
                    None => {
                        self.pos = at;
                        return self.fail("a constant divisor");
                    }
                }
            } else if matches!(self.peek(), Tok::Ident(s) if !is_keyword(s)) || self.is_op("(") {
                // implicit product such as 2x or 3(x + 1)
                let save = self.pos;
                match self.factor() {
                    Ok(f) => acc = &acc * &f,
                    Err(Fail::Fatal(e)) => return Err(Fail::Fatal(e)),
                    Err(Fail::At(..)) => {
                        self.pos = save;
                        return Ok(acc);
                    }
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> PResult<Polynomial> {
        if self.is_op("-") {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.is_op("^") {
            self.pos += 1;
            let k = match self.peek().clone() {
                Tok::Num(s) if s.chars().all(|c| c.is_ascii_digit()) => s,
                _ => return self.fail("a nonnegative integer exponent"),
            };
            let k: u32 = match k.parse() {
                Ok(k) => k,
                Err(_) => return self.fail("a small integer exponent"),
            };
            self.pos += 1;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn base(&mut self) -> PResult<Polynomial> {
        match self.peek().clone() {
            Tok::Num(s) => {
                let v = match parse_rational(&s) {
                    Ok(v) => v,
                    Err(_) => return self.fail("a number"),
                };
                self.pos += 1;
                Ok(Polynomial::constant(self.vars, v))
            }
            Tok::Ident(name) if !is_keyword(&name) => {
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => {
                        self.pos += 1;
                        Ok(Polynomial::variable(self.vars, i))
                    }
                    None => Err(Fail::Fatal(Error::UnknownVariable(name))),
                }
            }
            Tok::Op("(") => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_op(")")?;
                Ok(e)
            }
            _ => self.fail("a number, variable or '('"),
        }
    }

    fn error(&self, fallback: (usize, String)) -> Error {
        let (pos, message) = match &self.best {
            Some((p, m)) if *p >= fallback.0 => (*p, m.clone()),
            _ => fallback,
        };
        let t = &self.toks[pos];
        Error::Syntax {
            line: t.line,
            column: t.column,
            message,
        }
    }
}

fn is_keyword(s: &str) -> bool {
    ["and", "or", "not"].iter().any(|k| s.eq_ignore_ascii_case(k))
}

/// Parses a formula over the declared variables.
pub fn parse_formula(text: &str, vars: &Vars) -> Result<Formula> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        vars,
        best: None,
    };
    match p.formula() {
        Ok(f) => {
            if p.peek() != &Tok::End {
                let msg = format!("expected 'and', 'or' or end of input, found {}", p.peek());
                return Err(p.error((p.pos, msg)));
            }
            Ok(f)
        }
        Err(Fail::Fatal(e)) => Err(e),
        Err(Fail::At(pos, msg)) => Err(p.error((pos, msg))),
    }
}

/// Parses a polynomial over the declared variables.
pub fn parse_polynomial(text: &str, vars: &Vars) -> Result<Polynomial> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
        vars,
        best: None,
    };
    match p.expr() {
        Ok(e) => {
            if p.peek() != &Tok::End {
                let msg = format!("expected an operator or end of input, found {}", p.peek());
                return Err(p.error((p.pos, msg)));
            }
            Ok(e)
        }
        Err(Fail::Fatal(e)) => Err(e),
        Err(Fail::At(pos, msg)) => Err(p.error((pos, msg))),
    }
}

/// A formula that always holds.
pub fn tautology(vars: &Vars) -> Formula {
    Formula::Atom(Polynomial::zero(vars), Relation::Eq)
}

/// A formula that never holds.
pub fn contradiction(vars: &Vars) -> Formula {
    Formula::Atom(Polynomial::constant(vars, Rational::one()), Relation::Eq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars_from;

    #[test]
    fn parse_examples() {
        let v = vars_from(&["x", "y"]);
        let f = parse_formula("x^2 + y^2 - 1 < 0", &v).unwrap();
        assert_eq!(f.to_string(), "x^2 + y^2 - 1 < 0");
        let f = parse_formula("x*y = 1 and x > 0", &v).unwrap();
        assert!(matches!(&f, Formula::And(parts) if parts.len() == 2));
        assert_eq!(f.to_string(), "x*y - 1 = 0 and x > 0");
        match parse_formula("x + * y", &v) {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_formula("x + z > 0", &v),
            Err(Error::UnknownVariable("z".into()))
        );
    }

    #[test]
    fn parentheses_and_negation() {
        let v = vars_from(&["x", "y"]);
        let f = parse_formula("(x^2 + y^2 < 1) or ((x - 3)^2 + y^2 < 1)", &v).unwrap();
        assert_eq!(f.to_string(), "x^2 + y^2 - 1 < 0 or x^2 + y^2 - 6*x + 8 < 0");
        let g = parse_formula("not (x > 0 and (y + 1)*2 <= 0)", &v).unwrap();
        assert_eq!(g.to_string(), "x <= 0 or 2*y + 2 > 0");
        let h = parse_formula("(x > 0 or y > 0) and x < 1", &v).unwrap();
        assert_eq!(h.to_string(), "(x > 0 or y > 0) and x - 1 < 0");
        assert_eq!(parse_formula(&h.to_string(), &v).unwrap(), h);
    }

    #[test]
    fn literals() {
        let v = vars_from(&["x"]);
        let f = parse_formula("3/2*x^2 + 0.25 >= 2x", &v).unwrap();
        assert_eq!(f.to_string(), "3/2*x^2 - 2*x + 1/4 >= 0");
        assert!(parse_formula("x / x > 0", &v).is_err());
        match parse_formula("x > 0\nand x <", &v) {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        let t = parse_formula("0 = 0", &v).unwrap();
        assert!(t.evaluate(&[Rational::from_integer(5.into())]).unwrap());
    }
}
