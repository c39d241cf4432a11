use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::int::Int;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Int),
    Add(Box<Term>, Box<Term>),
    Sub(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    /// `f(t)`
    Beatty(Box<Term>),
    /// `fbar(t)`
    BeattyBar(Box<Term>),
    /// `F(t)`
    FibFloor(Box<Term>),
    /// `G(t)`
    OddFibFloor(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Less(Term, Term),
    LessEq(Term, Term),
    Equal(Term, Term),
    NotEqual(Term, Term),
    /// `t1 <* t2`: `t1 ≠ t2 ∧ f(t2 − t1) = f(t2) − f(t1)`.
    StarLess(Term, Term),
    /// `frac(t1) < frac(t2)`
    FracLess(Term, Term),
    /// `term = residue mod modulus`; `modulus ≥ 2`.
    Congruent {
        term: Term,
        residue: Int,
        modulus: Int,
    },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    /// `∃ var ∈ (lower, upper). body`. The bounds never mention `var`.
    Exists {
        var: String,
        lower: Term,
        upper: Term,
        body: Box<Formula>,
    },
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_owned())
    }

    pub fn int(v: impl Into<Int>) -> Term {
        Term::Const(v.into())
    }

    pub fn mentions(&self, name: &str) -> bool {
        match self {
            Term::Var(v) => v == name,
            Term::Const(_) => false,
            Term::Add(a, b) | Term::Sub(a, b) => a.mentions(name) || b.mentions(name),
            Term::Neg(a) | Term::Beatty(a) | Term::BeattyBar(a) | Term::FibFloor(a) | Term::OddFibFloor(a) => {
                a.mentions(name)
            }
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Const(_) => {}
            Term::Add(a, b) | Term::Sub(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) | Term::Beatty(a) | Term::BeattyBar(a) | Term::FibFloor(a) | Term::OddFibFloor(a) => {
                a.collect_vars(out)
            }
        }
    }

    fn is_var(&self, name: &str) -> bool {
        matches!(self, Term::Var(v) if v == name)
    }

    fn is_additive(&self) -> bool {
        matches!(self, Term::Add(..) | Term::Sub(..))
    }
}

impl Formula {
    /// Builds a bounded existential, reading the bounds off the top-level
    /// conjuncts of `body` (`t < x`, `t <= x`, `x < t`, `x <= t` with `t`
    /// free of `x`). The first bound found on each side is used; the body
    /// keeps every conjunct, so any further bounds still constrain it.
    pub fn exists(var: &str, body: Formula) -> Result<Formula> {
        let mut lower = None;
        let mut upper = None;
        for c in body.conjuncts() {
            let (lo, hi) = c.bound_on(var);
            if lower.is_none() {
                lower = lo;
            }
            if upper.is_none() {
                upper = hi;
            }
        }
        match (lower, upper) {
            (Some(lower), Some(upper)) => Ok(Formula::Exists {
                var: var.to_owned(),
                lower,
                upper,
                body: Box::new(body),
            }),
            _ => Err(Error::Domain(format!(
                "quantifier over `{var}` needs a lower and an upper bound among its top-level conjuncts"
            ))),
        }
    }

    // Open bounds contributed by a single atom.
    fn bound_on(&self, var: &str) -> (Option<Term>, Option<Term>) {
        let (a, b, strict) = match self {
            Formula::Less(a, b) => (a, b, true),
            Formula::LessEq(a, b) => (a, b, false),
            _ => return (None, None),
        };
        let widen = |t: &Term, by: i64| {
            if strict {
                t.clone()
            } else if by < 0 {
                Term::Sub(Box::new(t.clone()), Box::new(Term::int(1)))
            } else {
                Term::Add(Box::new(t.clone()), Box::new(Term::int(1)))
            }
        };
        if b.is_var(var) && !a.mentions(var) {
            (Some(widen(a, -1)), None)
        } else if a.is_var(var) && !b.mentions(var) {
            (None, Some(widen(b, 1)))
        } else {
            (None, None)
        }
    }

    /// Top-level conjuncts, left to right.
    pub fn conjuncts(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                Formula::And(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                other => out.push(other),
            }
        }
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut out);
        out
    }

    fn collect_free(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Less(a, b)
            | Formula::LessEq(a, b)
            | Formula::Equal(a, b)
            | Formula::NotEqual(a, b)
            | Formula::StarLess(a, b)
            | Formula::FracLess(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Congruent { term, .. } => term.collect_vars(out),
            Formula::Not(a) => a.collect_free(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_free(out);
                b.collect_free(out);
            }
            Formula::Exists {
                var,
                lower,
                upper,
                body,
            } => {
                lower.collect_vars(out);
                upper.collect_vars(out);
                let mut inner = BTreeSet::new();
                body.collect_free(&mut inner);
                inner.remove(var);
                out.extend(inner);
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// Nesting depth of formula constructors.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Not(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Exists { body, .. } => 1 + body.depth(),
            _ => 1,
        }
    }
}

// Canonical rendering; `parse(render(φ)) == φ`.

impl fmt::Display for Term {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(out, "{v}"),
            Term::Const(c) => write!(out, "{c}"),
            Term::Add(a, b) => {
                write!(out, "{a} + ")?;
                right_operand(out, b)
            }
            Term::Sub(a, b) => {
                write!(out, "{a} - ")?;
                right_operand(out, b)
            }
            Term::Neg(a) => match a.as_ref() {
                // `-5` would read back as a literal
                Term::Const(c) if !c.is_negative() => write!(out, "-({c})"),
                t if t.is_additive() => write!(out, "-({t})"),
                t => write!(out, "-{t}"),
            },
            Term::Beatty(a) => write!(out, "f({a})"),
            Term::BeattyBar(a) => write!(out, "fbar({a})"),
            Term::FibFloor(a) => write!(out, "F({a})"),
            Term::OddFibFloor(a) => write!(out, "G({a})"),
        }
    }
}

fn right_operand(out: &mut fmt::Formatter<'_>, t: &Term) -> fmt::Result {
    if t.is_additive() {
        write!(out, "({t})")
    } else {
        write!(out, "{t}")
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Less(a, b) => write!(out, "{a} < {b}"),
            Formula::LessEq(a, b) => write!(out, "{a} <= {b}"),
            Formula::Equal(a, b) => write!(out, "{a} = {b}"),
            Formula::NotEqual(a, b) => write!(out, "{a} != {b}"),
            Formula::StarLess(a, b) => write!(out, "{a} <* {b}"),
            Formula::FracLess(a, b) => write!(out, "frac({a}) < frac({b})"),
            Formula::Congruent { term, residue, modulus } => write!(out, "{term} = {residue} mod {modulus}"),
            Formula::Not(a) => match a.as_ref() {
                inner @ (Formula::And(..) | Formula::Or(..)) => write!(out, "!({inner})"),
                inner => write!(out, "!{inner}"),
            },
            Formula::And(a, b) => {
                match a.as_ref() {
                    inner @ Formula::Or(..) => write!(out, "({inner})")?,
                    inner => write!(out, "{inner}")?,
                }
                write!(out, " && ")?;
                match b.as_ref() {
                    inner @ (Formula::And(..) | Formula::Or(..)) => write!(out, "({inner})"),
                    inner => write!(out, "{inner}"),
                }
            }
            Formula::Or(a, b) => {
                write!(out, "{a} || ")?;
                match b.as_ref() {
                    inner @ Formula::Or(..) => write!(out, "({inner})"),
                    inner => write!(out, "{inner}"),
                }
            }
            Formula::Exists { var, body, .. } => write!(out, "exists {var} ({body})"),
        }
    }
}
