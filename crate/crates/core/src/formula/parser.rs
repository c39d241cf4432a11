use crate::error::{Error, Result};
use crate::int::Int;

use super::ast::{Formula, Term};

pub const DEFAULT_MAX_DEPTH: usize = 200;

const RESERVED: [&str; 7] = ["exists", "mod", "frac", "f", "fbar", "F", "G"];

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(Int),
    Ident(String),
    LParen,
    RParen,
    Plus,
    Minus,
    Less,
    LessEq,
    StarLess,
    Eq,
    NotEq,
    Bang,
    AndAnd,
    OrOr,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Less => "`<`".into(),
            Tok::LessEq => "`<=`".into(),
            Tok::StarLess => "`<*`".into(),
            Tok::Eq => "`=`".into(),
            Tok::NotEq => "`!=`".into(),
            Tok::Bang => "`!`".into(),
            Tok::AndAnd => "`&&`".into(),
            Tok::OrOr => "`||`".into(),
            Tok::Eof => "end of input".into(),
        }
    }

    fn is_comparison(&self) -> bool {
        matches!(self, Tok::Less | Tok::LessEq | Tok::StarLess | Tok::Eq | Tok::NotEq)
    }
}

struct Spanned {
    tok: Tok,
    offset: usize,
}

struct Failure {
    offset: usize,
    message: String,
}

type PResult<T> = std::result::Result<T, Failure>;

fn lex(src: &str) -> PResult<Vec<Spanned>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let two = |s: &str| src[i..].starts_with(s);
        let tok = if c.is_ascii_digit() {
            while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'_') {
                i += 1;
            }
            let text = &src[start..i];
            let v = Int::parse_decimal(text).map_err(|_| Failure {
                offset: start,
                message: format!("malformed integer `{text}`"),
            })?;
            out.push(Spanned {
                tok: Tok::Int(v),
                offset: start,
            });
            continue;
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(src[start..i].to_owned()),
                offset: start,
            });
            continue;
        } else if two("<=") {
            i += 2;
            Tok::LessEq
        } else if two("<*") {
            i += 2;
            Tok::StarLess
        } else if two("!=") {
            i += 2;
            Tok::NotEq
        } else if two("&&") {
            i += 2;
            Tok::AndAnd
        } else if two("||") {
            i += 2;
            Tok::OrOr
        } else {
            i += 1;
            match c {
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b'+' => Tok::Plus,
                b'-' => Tok::Minus,
                b'<' => Tok::Less,
                b'=' => Tok::Eq,
                b'!' => Tok::Bang,
                _ => {
                    let ch = src[start..].chars().next().unwrap_or('?');
                    return Err(Failure {
                        offset: start,
                        message: format!("unexpected character `{ch}`"),
                    });
                }
            }
        };
        out.push(Spanned { tok, offset: start });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        offset: src.len(),
    });
    Ok(out)
}

/// Recursive-descent parser for the formula language.
#[derive(Debug, Clone, Copy)]
pub struct Parser {
    pub max_depth: usize,
}

impl Default for Parser {
    fn default() -> Self {
        Parser {
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }
}

impl Parser {
    /// Parses a formula; free variables are allowed.
    pub fn parse(&self, src: &str) -> Result<Formula> {
        let toks = lex(src).map_err(|e| located(src, e))?;
        let mut st = State {
            toks,
            pos: 0,
            depth: 0,
            max_depth: self.max_depth,
        };
        let phi = st.formula().map_err(|e| located(src, e))?;
        st.expect(Tok::Eof).map_err(|e| located(src, e))?;
        Ok(phi)
    }

    /// Parses a sentence: the formula must have no free variables.
    pub fn parse_sentence(&self, src: &str) -> Result<Formula> {
        let phi = self.parse(src)?;
        match phi.free_vars().into_iter().next() {
            Some(v) => Err(Error::Unbound(v)),
            None => Ok(phi),
        }
    }

    pub fn parse_term(&self, src: &str) -> Result<Term> {
        let toks = lex(src).map_err(|e| located(src, e))?;
        let mut st = State {
            toks,
            pos: 0,
            depth: 0,
            max_depth: self.max_depth,
        };
        let t = st.term().map_err(|e| located(src, e))?;
        st.expect(Tok::Eof).map_err(|e| located(src, e))?;
        Ok(t)
    }
}

fn located(src: &str, e: Failure) -> Error {
    let before = &src[..e.offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    Error::Syntax {
        offset: e.offset,
        line,
        column,
        message: e.message,
    }
}

struct State {
    toks: Vec<Spanned>,
    pos: usize,
    depth: usize,
    max_depth: usize,
}

impl State {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(Failure {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        self.fail(format!("expected {wanted}, found {}", self.peek().describe()))
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&tok.describe())
        }
    }

    fn at_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == name)
    }

    fn enter(&mut self) -> PResult<()> {
        self.depth += 1;
        if self.depth > self.max_depth {
            return self.fail(format!("nesting deeper than {}", self.max_depth));
        }
        Ok(())
    }

    fn formula(&mut self) -> PResult<Formula> {
        let mut lhs = self.conj()?;
        while *self.peek() == Tok::OrOr {
            self.bump();
            let rhs = self.conj()?;
            lhs = Formula::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn conj(&mut self) -> PResult<Formula> {
        let mut lhs = self.unit()?;
        while *self.peek() == Tok::AndAnd {
            self.bump();
            let rhs = self.unit()?;
            lhs = Formula::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unit(&mut self) -> PResult<Formula> {
        self.enter()?;
        let out = self.unit_inner();
        self.depth -= 1;
        out
    }

    fn unit_inner(&mut self) -> PResult<Formula> {
        match self.peek() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::Not(Box::new(self.unit()?)))
            }
            Tok::LParen if !self.paren_opens_term() => {
                self.bump();
                let phi = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(phi)
            }
            Tok::Ident(s) if s == "exists" => {
                let at = self.offset();
                self.bump();
                let var = match self.peek().clone() {
                    Tok::Ident(v) if !RESERVED.contains(&v.as_str()) => {
                        self.bump();
                        v
                    }
                    _ => return self.unexpected("a variable name"),
                };
                self.expect(Tok::LParen)?;
                let body = self.formula()?;
                self.expect(Tok::RParen)?;
                Formula::exists(&var, body).map_err(|_| Failure {
                    offset: at,
                    message: format!(
                        "quantifier over `{var}` is unbounded: its body needs top-level conjuncts bounding `{var}` from below and above"
                    ),
                })
            }
            _ => self.atom(),
        }
    }

    // A parenthesis at unit level groups a term exactly when the token after
    // its matching `)` continues a term or a comparison.
    fn paren_opens_term(&self) -> bool {
        let mut level = 0usize;
        let mut k = 0;
        loop {
            match self.peek_at(k) {
                Tok::LParen => level += 1,
                Tok::RParen => {
                    level -= 1;
                    if level == 0 {
                        let next = self.peek_at(k + 1);
                        return next.is_comparison() || matches!(next, Tok::Plus | Tok::Minus);
                    }
                }
                Tok::Eof => return false,
                _ => {}
            }
            k += 1;
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        if self.at_ident("frac") {
            let a = self.frac_operand()?;
            self.expect(Tok::Less)?;
            if !self.at_ident("frac") {
                return self.unexpected("`frac(`");
            }
            let b = self.frac_operand()?;
            return Ok(Formula::FracLess(a, b));
        }
        let lhs = self.term()?;
        let op = self.peek().clone();
        if !op.is_comparison() {
            return self.unexpected("a comparison (`<`, `<=`, `=`, `!=`, `<*`)");
        }
        self.bump();
        let rhs_at = self.offset();
        let rhs = self.term()?;
        if op == Tok::Eq && self.at_ident("mod") {
            let residue = match rhs {
                Term::Const(v) => v,
                _ => {
                    return Err(Failure {
                        offset: rhs_at,
                        message: "congruence residue must be an integer literal".into(),
                    })
                }
            };
            self.bump();
            let modulus = match self.peek().clone() {
                Tok::Int(m) if m >= 2 => m,
                Tok::Int(_) => return self.fail("congruence modulus must be at least 2"),
                _ => return self.unexpected("an integer modulus"),
            };
            self.bump();
            return Ok(Formula::Congruent {
                term: lhs,
                residue,
                modulus,
            });
        }
        Ok(match op {
            Tok::Less => Formula::Less(lhs, rhs),
            Tok::LessEq => Formula::LessEq(lhs, rhs),
            Tok::StarLess => Formula::StarLess(lhs, rhs),
            Tok::Eq => Formula::Equal(lhs, rhs),
            Tok::NotEq => Formula::NotEqual(lhs, rhs),
            _ => unreachable!("comparison checked above"),
        })
    }

    fn frac_operand(&mut self) -> PResult<Term> {
        self.bump();
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(t)
    }

    fn term(&mut self) -> PResult<Term> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Term::Add(Box::new(lhs), Box::new(rhs));
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.unary()?;
                    lhs = Term::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> PResult<Term> {
        self.enter()?;
        let out = self.unary_inner();
        self.depth -= 1;
        out
    }

    fn unary_inner(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::Minus => {
                self.bump();
                if let Tok::Int(v) = self.peek().clone() {
                    self.bump();
                    return Ok(Term::Const(-v));
                }
                Ok(Term::Neg(Box::new(self.unary()?)))
            }
            Tok::Int(v) => {
                self.bump();
                Ok(Term::Const(v))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Ident(name) => {
                let wrap: Option<fn(Box<Term>) -> Term> = match name.as_str() {
                    "f" => Some(Term::Beatty),
                    "fbar" => Some(Term::BeattyBar),
                    "F" => Some(Term::FibFloor),
                    "G" => Some(Term::OddFibFloor),
                    _ => None,
                };
                if let Some(wrap) = wrap {
                    self.bump();
                    self.expect(Tok::LParen)?;
                    let arg = self.term()?;
                    self.expect(Tok::RParen)?;
                    return Ok(wrap(Box::new(arg)));
                }
                if RESERVED.contains(&name.as_str()) {
                    return self.fail(format!("reserved word `{name}` cannot be used as a term"));
                }
                self.bump();
                Ok(Term::Var(name))
            }
            _ => self.unexpected("a term"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<Formula> {
        Parser::default().parse(s)
    }

    fn b(t: Term) -> Box<Term> {
        Box::new(t)
    }

    fn syntax_offset(r: Result<Formula>) -> usize {
        match r {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn simple_atom() {
        assert_eq!(
            parse("f(3) = 4").unwrap(),
            Formula::Equal(Term::Beatty(b(Term::int(3))), Term::int(4))
        );
    }

    #[test]
    fn exists_shape() {
        let phi = parse("exists x (4 < x && x < 12 && frac(2) < frac(x))").unwrap();
        match phi {
            Formula::Exists {
                var,
                lower,
                upper,
                body,
            } => {
                assert_eq!(var, "x");
                assert_eq!(lower, Term::int(4));
                assert_eq!(upper, Term::int(12));
                assert_eq!(body.conjuncts().len(), 3);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inclusive_bounds_widen() {
        let phi = parse("exists y (y <= 9 && 2 <= y)").unwrap();
        let Formula::Exists { lower, upper, .. } = phi else {
            panic!()
        };
        assert_eq!(lower.to_string(), "2 - 1");
        assert_eq!(upper.to_string(), "9 + 1");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(syntax_offset(parse("f(")), 2);
        assert_eq!(syntax_offset(parse("x <")), 3);
        assert_eq!(syntax_offset(parse("x < 3 &&")), 8);
        assert_eq!(syntax_offset(parse("x # 3")), 2);
        match parse("x < 1 &&\n  y <") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 6)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unbounded_quantifier_rejected() {
        assert_eq!(syntax_offset(parse("exists x (f(x) = 3)")), 0);
        assert!(parse("exists x (0 < x || x < 3)").is_err());
        // a bound mentioning the variable is not a bound
        assert!(parse("exists x (x < x + 1 && 0 < x)").is_err());
    }

    #[test]
    fn sentences_reject_free_variables() {
        let p = Parser::default();
        assert_eq!(p.parse_sentence("x + 0 = x"), Err(Error::Unbound("x".into())));
        assert!(p.parse_sentence("exists x (0 < x && x < 3 && f(x) = 3)").is_ok());
        assert_eq!(
            p.parse_sentence("exists x (0 < x && x < y)"),
            Err(Error::Unbound("y".into()))
        );
    }

    #[test]
    fn literals_and_minus() {
        assert_eq!(parse("-5 < x").unwrap(), Formula::Less(Term::int(-5), Term::var("x")));
        assert_eq!(
            parse("x-5 < -(5)").unwrap(),
            Formula::Less(
                Term::Sub(b(Term::var("x")), b(Term::int(5))),
                Term::Neg(b(Term::int(5)))
            )
        );
        assert_eq!(
            parse("1_000 = x").unwrap(),
            Formula::Equal(Term::int(1000), Term::var("x"))
        );
        assert!(parse("1__0 = x").is_err());
        assert!(parse("10_ = x").is_err());
    }

    #[test]
    fn congruences() {
        assert_eq!(
            parse("x + 1 = -2 mod 7").unwrap(),
            Formula::Congruent {
                term: Term::Add(b(Term::var("x")), b(Term::int(1))),
                residue: Int::from(-2),
                modulus: Int::from(7),
            }
        );
        assert!(parse("x = 1 mod 1").is_err());
        assert!(parse("x = y mod 3").is_err());
        assert!(parse("x = 1 mod y").is_err());
    }

    #[test]
    fn parenthesised_terms_and_formulas() {
        assert_eq!(
            parse("(x + 1) < 3").unwrap(),
            Formula::Less(Term::Add(b(Term::var("x")), b(Term::int(1))), Term::int(3))
        );
        assert_eq!(parse("((x < 3))").unwrap(), parse("x < 3").unwrap());
        assert_eq!(
            parse("(x < 3 || y < 2) && z = 0").unwrap().to_string(),
            "(x < 3 || y < 2) && z = 0"
        );
        assert_eq!(parse("x - (y - z) = 0").unwrap().to_string(), "x - (y - z) = 0");
    }

    #[test]
    fn reserved_words() {
        assert!(parse("mod < 3").is_err());
        assert!(parse("exists f (0 < f && f < 2)").is_err());
        assert!(parse("f < 3").is_err());
        assert!(parse("F(x) <* G(x)").is_ok());
    }

    #[test]
    fn depth_limit() {
        let deep = format!("{}x < 1{}", "(".repeat(500), ")".repeat(500));
        assert!(parse(&deep).is_err());
        let p = Parser { max_depth: 1000 };
        assert!(p.parse(&deep).is_ok());
        let negs = format!("{}x = 0", "!".repeat(300));
        assert!(parse(&negs).is_err());
    }

    #[test]
    fn precedence() {
        // `&&` binds tighter than `||`; both associate to the left
        let phi = parse("a < 1 || b < 1 && c < 1 || d < 1").unwrap();
        let Formula::Or(lhs, _) = &phi else { panic!() };
        assert!(matches!(lhs.as_ref(), Formula::Or(_, r) if matches!(r.as_ref(), Formula::And(..))));
        assert_eq!(parse("!x < 1 && y < 1").unwrap().to_string(), "!x < 1 && y < 1");
        assert_eq!(
            parse("-f(x) + 1 = 0").unwrap(),
            Formula::Equal(
                Term::Add(b(Term::Neg(b(Term::Beatty(b(Term::var("x")))))), b(Term::int(1))),
                Term::int(0)
            )
        );
    }
}
