use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::extrema::{Extrema, Interval};
use crate::fib::{fibfloor, g_func};
use crate::int::Int;
use crate::kernel::{beatty_f, fbar, frac_compare, star_less};

use super::ast::{Formula, Term};

/// Variable assignment.
pub type Env = BTreeMap<String, Int>;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Formula evaluator. `budget` caps the number of points a single
/// quantifier may enumerate; `fast_path` lets box-shaped quantifiers be
/// decided through [`Extrema`] instead.
#[derive(Debug, Clone, Copy)]
pub struct Evaluator {
    pub budget: u64,
    pub fast_path: bool,
    pub extrema: Extrema,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator {
            budget: DEFAULT_BUDGET,
            fast_path: true,
            extrema: Extrema::default(),
        }
    }
}

// Conjunct classes of a box-shaped body.
enum Piece {
    Above(Int),
    Below(Int),
    FracAbove(Int),
    FracBelow(Int),
    Closed(bool),
}

impl Evaluator {
    /// Pure enumeration, no fast path.
    pub fn enumerating() -> Evaluator {
        Evaluator {
            fast_path: false,
            ..Evaluator::default()
        }
    }

    pub fn eval_term(&self, t: &Term, env: &Env) -> Result<Int> {
        Ok(match t {
            Term::Var(v) => env.get(v).cloned().ok_or_else(|| Error::Unbound(v.clone()))?,
            Term::Const(c) => c.clone(),
            Term::Add(a, b) => self.eval_term(a, env)? + self.eval_term(b, env)?,
            Term::Sub(a, b) => self.eval_term(a, env)? - self.eval_term(b, env)?,
            Term::Neg(a) => -self.eval_term(a, env)?,
            Term::Beatty(a) => beatty_f(&self.eval_term(a, env)?),
            Term::BeattyBar(a) => fbar(&self.eval_term(a, env)?),
            Term::FibFloor(a) => {
                let v = self.eval_term(a, env)?;
                fibfloor(&v).map_err(|_| Error::Eval(format!("F({v}) is undefined below 1")))?
            }
            Term::OddFibFloor(a) => {
                let v = self.eval_term(a, env)?;
                g_func(&v).map_err(|_| Error::Eval(format!("G({v}) is undefined below 1")))?
            }
        })
    }

    pub fn eval(&self, phi: &Formula, env: &Env) -> Result<bool> {
        let pair =
            |a: &Term, b: &Term| -> Result<(Int, Int)> { Ok((self.eval_term(a, env)?, self.eval_term(b, env)?)) };
        Ok(match phi {
            Formula::Less(a, b) => {
                let (x, y) = pair(a, b)?;
                x < y
            }
            Formula::LessEq(a, b) => {
                let (x, y) = pair(a, b)?;
                x <= y
            }
            Formula::Equal(a, b) => {
                let (x, y) = pair(a, b)?;
                x == y
            }
            Formula::NotEqual(a, b) => {
                let (x, y) = pair(a, b)?;
                x != y
            }
            Formula::StarLess(a, b) => {
                let (x, y) = pair(a, b)?;
                star_less(&x, &y)
            }
            Formula::FracLess(a, b) => {
                let (x, y) = pair(a, b)?;
                frac_compare(&x, &y) == Ordering::Less
            }
            Formula::Congruent { term, residue, modulus } => {
                (self.eval_term(term, env)? - residue).mod_floor(modulus).is_zero()
            }
            Formula::Not(a) => !self.eval(a, env)?,
            Formula::And(a, b) => self.eval(a, env)? && self.eval(b, env)?,
            Formula::Or(a, b) => self.eval(a, env)? || self.eval(b, env)?,
            Formula::Exists {
                var,
                lower,
                upper,
                body,
            } => {
                if self.fast_path {
                    if let Some(v) = self.try_box(var, lower, upper, body, env) {
                        return Ok(v);
                    }
                }
                self.enumerate(var, lower, upper, body, env)?
            }
        })
    }

    fn enumerate(&self, var: &str, lower: &Term, upper: &Term, body: &Formula, env: &Env) -> Result<bool> {
        let lo = self.eval_term(lower, env)?;
        let hi = self.eval_term(upper, env)?;
        let count = &hi - &lo - 1;
        if !count.is_positive() {
            return Ok(false);
        }
        if count > Int::from(self.budget) {
            return Err(Error::Budget {
                requested: count,
                limit: self.budget,
            });
        }
        let mut inner = env.clone();
        let mut t = lo + 1;
        while t < hi {
            inner.insert(var.to_owned(), t.clone());
            if self.eval(body, &inner)? {
                return Ok(true);
            }
            t += 1;
        }
        Ok(false)
    }

    /// Decides a box-shaped sentence without enumeration: `∃x` whose body is
    /// a conjunction of bounds on `x`, at most one `frac(c) < frac(x)`, at
    /// most one `frac(x) < frac(d)` and closed atoms. `None` on any other
    /// shape.
    pub fn decide_box(&self, phi: &Formula) -> Result<Option<bool>> {
        if !phi.is_sentence() {
            return Ok(None);
        }
        Ok(match phi {
            Formula::Exists {
                var,
                lower,
                upper,
                body,
            } => self.try_box(var, lower, upper, body, &Env::new()),
            _ => None,
        })
    }

    /// Decides a sentence, using the box fast path wherever it applies.
    pub fn decide(&self, phi: &Formula) -> Result<bool> {
        if let Some(v) = phi.free_vars().into_iter().next() {
            return Err(Error::Unbound(v));
        }
        self.eval(phi, &Env::new())
    }

    // Any evaluation error falls back to enumeration, which then decides
    // whether the error is actually reached.
    fn try_box(&self, var: &str, lower: &Term, upper: &Term, body: &Formula, env: &Env) -> Option<bool> {
        let mut lo = self.closed_term(lower, var, env)?;
        let mut hi = self.closed_term(upper, var, env)?;
        let mut above = None;
        let mut below = None;
        let mut closed_ok = true;
        for c in body.conjuncts() {
            match self.classify(c, var, env)? {
                Piece::Above(t) => lo = lo.max(t),
                Piece::Below(t) => hi = hi.min(t),
                Piece::FracAbove(c) => {
                    if above.replace(c).is_some() {
                        return None;
                    }
                }
                Piece::FracBelow(d) => {
                    if below.replace(d).is_some() {
                        return None;
                    }
                }
                Piece::Closed(v) => closed_ok &= v,
            }
        }
        let Ok(iv) = Interval::new(lo, hi) else {
            return Some(false);
        };
        if !closed_ok {
            return Some(false);
        }
        let e = &self.extrema;
        Some(match (above, below) {
            (None, None) => true,
            (Some(c), None) => e.constrained_min(&iv, &c).is_some(),
            (None, Some(d)) => e.constrained_max(&iv, &d).is_some(),
            (Some(c), Some(d)) => e.exists_in_box(&iv, &c, &d),
        })
    }

    fn closed_term(&self, t: &Term, var: &str, env: &Env) -> Option<Int> {
        if t.mentions(var) {
            return None;
        }
        self.eval_term(t, env).ok()
    }

    fn classify(&self, c: &Formula, var: &str, env: &Env) -> Option<Piece> {
        let is_var = |t: &Term| matches!(t, Term::Var(v) if v == var);
        Some(match c {
            Formula::Less(a, b) if is_var(b) => Piece::Above(self.closed_term(a, var, env)?),
            Formula::LessEq(a, b) if is_var(b) => Piece::Above(self.closed_term(a, var, env)? - 1),
            Formula::Less(a, b) if is_var(a) => Piece::Below(self.closed_term(b, var, env)?),
            Formula::LessEq(a, b) if is_var(a) => Piece::Below(self.closed_term(b, var, env)? + 1),
            Formula::FracLess(a, b) if is_var(b) => Piece::FracAbove(self.closed_term(a, var, env)?),
            Formula::FracLess(a, b) if is_var(a) => Piece::FracBelow(self.closed_term(b, var, env)?),
            other => {
                if other.free_vars().contains(var) {
                    return None;
                }
                Piece::Closed(self.eval(other, env).ok()?)
            }
        })
    }
}
