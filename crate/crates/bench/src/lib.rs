//! Shared fixtures for the criterion benches.

use beatty_core::extrema::Interval;
use beatty_core::Int;

/// `10^digits + 7`, a fixed operand of the given decimal size.
pub fn operand(digits: u32) -> Int {
    Int::from(10).pow(digits) + 7
}

/// Operand sizes, in decimal digits, swept by the kernel benches.
pub const DIGITS: [u32; 4] = [6, 18, 60, 300];

/// Positive intervals `(lo, lo + width)` starting far from zero.
pub fn far_interval(width: i64) -> Interval {
    let lo = Int::from(1_000_000_007);
    let hi = &lo + width;
    Interval::new(lo, hi).expect("width ≥ 2")
}

/// Box sentences of increasing width, all satisfiable.
pub fn box_sentence(width: i64) -> String {
    format!("exists x (-{width} < x && x < {width} && frac(2) < frac(x) && frac(x) < frac(1))")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid() {
        assert_eq!(operand(2), 107);
        assert_eq!(far_interval(10).width(), 9);
        let phi = beatty_core::formula::parse_sentence(&box_sentence(50)).unwrap();
        assert!(beatty_core::formula::decide(&phi).unwrap());
    }
}
