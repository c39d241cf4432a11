//! A first-order language over `⟨ℤ, <, +, f, F⟩` with bounded quantifiers.
//!
//! ```text
//! formula := disj ; disj := conj ('||' conj)* ; conj := unit ('&&' unit)*
//! unit    := '!' unit | '(' formula ')' | 'exists' IDENT '(' formula ')' | atom
//! atom    := term ('<' | '<=' | '=' | '!=' | '<*') term
//!          | 'frac(' term ')' '<' 'frac(' term ')'
//!          | term '=' INT 'mod' INT
//! term    := INT | IDENT | term '+' term | term '-' term | '-' term
//!          | 'f(' term ')' | 'fbar(' term ')' | 'F(' term ')' | 'G(' term ')'
//! ```
//!
//! A quantifier body must bound its variable on both sides through
//! top-level conjuncts; unbounded quantifiers are rejected by the parser.
//!
//! ```
//! use beatty_core::formula::{decide, parse_sentence};
//!
//! let phi = parse_sentence("exists x (4 < x && x < 12 && frac(2) < frac(x) && frac(x) < frac(1))")?;
//! assert!(decide(&phi)?);
//! # Ok::<(), beatty_core::Error>(())
//! ```

mod ast;
mod eval;
mod parser;

pub use ast::{Formula, Term};
pub use eval::{Env, Evaluator, DEFAULT_BUDGET};
pub use parser::{Parser, DEFAULT_MAX_DEPTH};

use crate::error::Result;

/// Parses a formula that may contain free variables.
pub fn parse(src: &str) -> Result<Formula> {
    Parser::default().parse(src)
}

/// Parses a formula and rejects free variables.
pub fn parse_sentence(src: &str) -> Result<Formula> {
    Parser::default().parse_sentence(src)
}

pub fn eval(phi: &Formula, env: &Env) -> Result<bool> {
    Evaluator::default().eval(phi, env)
}

pub fn decide(phi: &Formula) -> Result<bool> {
    Evaluator::default().decide(phi)
}

pub fn decide_box(phi: &Formula) -> Result<Option<bool>> {
    Evaluator::default().decide_box(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn leaf_term() -> impl Strategy<Value = Term> {
        prop_oneof![
            prop::sample::select(vec!["x", "y", "z1", "n_0"]).prop_map(Term::var),
            (-1000i64..1000).prop_map(Term::int),
        ]
    }

    fn term() -> impl Strategy<Value = Term> {
        leaf_term().prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::Add(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::Sub(Box::new(a), Box::new(b))),
                inner.clone().prop_map(|a| Term::Neg(Box::new(a))),
                inner.clone().prop_map(|a| Term::Beatty(Box::new(a))),
                inner.clone().prop_map(|a| Term::BeattyBar(Box::new(a))),
                inner.clone().prop_map(|a| Term::FibFloor(Box::new(a))),
                inner.prop_map(|a| Term::OddFibFloor(Box::new(a))),
            ]
        })
    }

    fn atom() -> impl Strategy<Value = Formula> {
        (0..7u8, term(), term(), -20i64..20, 2i64..30).prop_map(|(k, a, b, r, m)| match k {
            0 => Formula::Less(a, b),
            1 => Formula::LessEq(a, b),
            2 => Formula::Equal(a, b),
            3 => Formula::NotEqual(a, b),
            4 => Formula::StarLess(a, b),
            5 => Formula::FracLess(a, b),
            _ => Formula::Congruent {
                term: a,
                residue: r.into(),
                modulus: m.into(),
            },
        })
    }

    fn formula() -> impl Strategy<Value = Formula> {
        atom().prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(|a| Formula::Not(Box::new(a))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::And(Box::new(a), Box::new(b))),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::Or(Box::new(a), Box::new(b))),
                (term(), term(), inner).prop_map(|(lo, hi, body)| {
                    let lo = Formula::Less(lo, Term::var("q"));
                    let hi = Formula::Less(Term::var("q"), hi);
                    let body = Formula::And(Box::new(Formula::And(Box::new(lo), Box::new(hi))), Box::new(body));
                    Formula::exists("q", body)
                        .unwrap_or_else(|_| Formula::Not(Box::new(Formula::Less(Term::int(0), Term::int(1)))))
                }),
            ]
        })
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(phi in formula()) {
            let text = phi.to_string();
            prop_assert_eq!(parse(&text).unwrap(), phi, "{}", text);
        }

        #[test]
        fn star_less_agrees_with_frac_less(x in -5000i64..5000, y in -5000i64..5000) {
            let mut env = Env::new();
            env.insert("x".into(), x.into());
            env.insert("y".into(), y.into());
            let a = eval(&parse("x <* y").unwrap(), &env).unwrap();
            let b = eval(&parse("frac(x) < frac(y)").unwrap(), &env).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn formulas_are_shareable() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Formula>();
        assert_send_sync::<Evaluator>();
    }
}
