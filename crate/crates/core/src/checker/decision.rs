//! The decision engine against pure enumeration.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::formula::{Evaluator, Parser};

use super::{sweep, CheckReport, CheckSpec};

/// A random sentence `∃x` over a box with bounds in `±bound`.
pub fn random_box_sentence(rng: &mut ChaCha8Rng, bound: i64) -> String {
    let mut v = || rng.gen_range(-bound..=bound);
    let (a, b, c, d) = (v(), v(), v(), v());
    let (lower, upper) = if a <= b { (a, b) } else { (b, a) };
    let mut parts = vec![
        if rng.gen() {
            format!("{lower} < x")
        } else {
            format!("{} <= x", lower + 1)
        },
        if rng.gen() {
            format!("x < {upper}")
        } else {
            format!("x <= {}", upper - 1)
        },
    ];
    match rng.gen_range(0..4) {
        0 => {}
        1 => parts.push(format!("frac({c}) < frac(x)")),
        2 => parts.push(format!("frac(x) < frac({d})")),
        _ => {
            parts.push(format!("frac({c}) < frac(x)"));
            parts.push(format!("frac(x) < frac({d})"));
        }
    }
    // conjunct order must not matter
    for i in (1..parts.len()).rev() {
        let j = rng.gen_range(0..=i);
        parts.swap(i, j);
    }
    format!("exists x ({})", parts.join(" && "))
}

/// A random sentence outside the box shape, still decidable by enumeration.
pub fn random_general_sentence(rng: &mut ChaCha8Rng, bound: i64) -> String {
    let lo = rng.gen_range(-bound..bound);
    let hi = lo + rng.gen_range(2..40);
    let k = rng.gen_range(-bound..=bound);
    let m = rng.gen_range(2..9);
    let r = rng.gen_range(0..m);
    let body = match rng.gen_range(0..5) {
        0 => format!("f(x) = {k}"),
        1 => format!("x = {r} mod {m} && frac({k}) < frac(x)"),
        2 => format!("x <* {k} || fbar(x) = {k}"),
        3 => format!("!(frac(x) < frac({k})) && x != {k}"),
        _ => format!("exists y (x < y && y < x + 5 && f(y) - f(x) = {})", rng.gen_range(1..9)),
    };
    format!("exists x ({lo} < x && x < {hi} && ({body}))")
}

/// `decide` agrees with pure enumeration on `trials` random box sentences
/// with bounds in `±bound`, and each is decided without enumeration.
pub fn box_sentences(trials: u64, bound: i64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("box-sentences");
    let texts: Vec<String> = (0..trials).map(|_| random_box_sentence(&mut rng, bound)).collect();
    let fast = Evaluator::default();
    let slow = Evaluator::enumerating();
    let mut failures = Vec::new();
    let mut r = sweep(texts.iter().enumerate().collect::<Vec<_>>(), |(k, text), t| {
        let ok = Parser::default()
            .parse_sentence(text)
            .is_ok_and(|phi| matches!(fast.decide_box(&phi), Ok(Some(_))) && fast.decide(&phi) == slow.decide(&phi));
        t.check(ok, || vec![k.into()]);
    })
    .report("box sentences: fast decision equals enumeration");
    for c in &r.counterexamples {
        if let Some(k) = c[0].as_i64() {
            failures.push(format!("sentence #{k}: {}", texts[k as usize]));
        }
    }
    r.notes.extend(failures);
    r
}

/// `decide` agrees with pure enumeration on sentences outside the box shape.
pub fn general_sentences(trials: u64, bound: i64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("general-sentences");
    let texts: Vec<String> = (0..trials).map(|_| random_general_sentence(&mut rng, bound)).collect();
    let fast = Evaluator::default();
    let slow = Evaluator::enumerating();
    let mut r = sweep(texts.iter().enumerate().collect::<Vec<_>>(), |(k, text), t| {
        let ok = Parser::default()
            .parse_sentence(text)
            .is_ok_and(|phi| fast.decide(&phi) == slow.decide(&phi));
        t.check(ok, || vec![k.into()]);
    })
    .report("general sentences: dispatcher equals enumeration");
    let failures: Vec<String> = r
        .counterexamples
        .iter()
        .filter_map(|c| c[0].as_i64())
        .map(|k| format!("sentence #{k}: {}", texts[k as usize]))
        .collect();
    r.notes.extend(failures);
    r
}

pub fn check_decision_engine(spec: &CheckSpec) -> CheckReport {
    let bound = spec.bound().clamp(2, 500);
    CheckReport::combine(
        &spec.name,
        vec![
            box_sentences(spec.random_trials, bound, spec),
            general_sentences(spec.random_trials, bound, spec),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn generated_sentences_parse() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let s = random_box_sentence(&mut rng, 500);
            assert!(Parser::default().parse_sentence(&s).is_ok(), "{s}");
            let s = random_general_sentence(&mut rng, 500);
            assert!(Parser::default().parse_sentence(&s).is_ok(), "{s}");
        }
    }

    #[test]
    fn suite_passes() {
        let r = check_decision_engine(&CheckSpec::new("decision-engine", 100, 100, 42));
        assert!(r.pass(), "{:?}", r.notes);
        assert_eq!(r.instances, 200);
    }
}
