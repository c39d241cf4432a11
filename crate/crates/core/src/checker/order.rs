//! The decimal order: linearity, agreement with the exact comparator,
//! transitivity and density through Kronecker witnesses.

use std::cmp::Ordering;

use rand::Rng;

use crate::int::Int;
use crate::kernel::{frac_compare, kronecker_witness, refine, star_less};

use super::oracle::random_int;
use super::{ints, sweep, CheckReport, CheckSpec};

/// For all `|x|, |y| ≤ bound`: `x <* y` exactly when `[φx] < [φy]`,
/// irreflexivity, and exactly one of `x <* y`, `y <* x` for `x ≠ y`.
pub fn star_less_agreement(bound: i64) -> CheckReport {
    sweep(-bound..=bound, |x, t| {
        let xi = Int::from(x);
        t.check(!star_less(&xi, &xi), || ints(&[x, x]));
        for y in x + 1..=bound {
            let yi = Int::from(y);
            let c = frac_compare(&xi, &yi);
            let xy = star_less(&xi, &yi);
            let yx = star_less(&yi, &xi);
            let ok = xy == (c == Ordering::Less) && yx == (c == Ordering::Greater) && xy != yx;
            t.check(ok, || ints(&[x, y]));
        }
    })
    .report("x <* y agrees with [φx] < [φy]; irreflexive and total")
}

/// Transitivity of `<*` over every ordering of random triples: half drawn
/// from `|v| ≤ 1000`, half up to 256 bits.
pub fn transitivity(trials: u64, spec: &CheckSpec) -> CheckReport {
    let mut rng = spec.rng("transitivity");
    let triples: Vec<[Int; 3]> = (0..trials)
        .map(|k| {
            let mut draw = || {
                if k % 2 == 0 {
                    Int::from(rng.gen_range(-1000i64..=1000))
                } else {
                    random_int(&mut rng, 256)
                }
            };
            [draw(), draw(), draw()]
        })
        .collect();
    sweep(triples, |[a, b, c], t| {
        let perms = [
            (&a, &b, &c),
            (&a, &c, &b),
            (&b, &a, &c),
            (&b, &c, &a),
            (&c, &a, &b),
            (&c, &b, &a),
        ];
        let ok = perms
            .iter()
            .all(|(x, y, z)| !(star_less(x, y) && star_less(y, z)) || star_less(x, z));
        t.check(ok, || vec![a.clone(), b.clone(), c.clone()]);
    })
    .report("transitivity of <*")
}

/// For every pair `|x|, |y| ≤ bound` with `[φx] < [φy]`, the witness lies
/// strictly between, and `steps` refinements stay strictly nested.
pub fn density(bound: i64, steps: usize) -> CheckReport {
    sweep(-bound..=bound, |x, t| {
        let xi = Int::from(x);
        for y in -bound..=bound {
            let yi = Int::from(y);
            if frac_compare(&xi, &yi) != Ordering::Less {
                continue;
            }
            let between =
                |w: &Int, hi: &Int| frac_compare(&xi, w) == Ordering::Less && frac_compare(w, hi) == Ordering::Less;
            let ok = match kronecker_witness(&xi, &yi) {
                Ok(w) => between(&w, &yi),
                Err(_) => false,
            };
            let nested = match refine(&xi, &yi, steps) {
                Ok(chain) => {
                    let mut hi = yi.clone();
                    chain.iter().all(|w| {
                        let inside = between(w, &hi);
                        hi = w.clone();
                        inside
                    })
                }
                Err(_) => false,
            };
            t.check(ok && nested, || ints(&[x, y]));
        }
    })
    .report("density: Kronecker witnesses and refinement chains lie strictly between")
}

pub fn check_order_and_density(spec: &CheckSpec) -> CheckReport {
    let b = spec.bound();
    CheckReport::combine(
        &spec.name,
        vec![
            star_less_agreement(b),
            transitivity(spec.random_trials, spec),
            density(b, 10),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let r = check_order_and_density(&CheckSpec::new("order-and-density", 40, 300, 42));
        assert!(r.pass(), "{:?}", r.counterexamples);
        // pairs x < y, plus one irreflexivity check per x
        assert!(r.instances >= 81 * 80 / 2 + 81 + 300);
    }
}
