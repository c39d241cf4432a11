//! Point data for the diagram of `(n, [φn])`.
//!
//! The fractional part is emitted as a decimal truncated to `D` digits,
//! computed from `isqrt(5·n²·10^{2D})` alone, so output is identical on
//! every platform.

use std::io::{self, Write};

use crate::error::{domain, Result};
use crate::int::Int;
use crate::kernel::{beatty_f, isqrt};

pub const DEFAULT_DIGITS: u32 = 12;
pub const MAX_DIGITS: u32 = 10_000;
pub const CSV_HEADER: &str = "n,f_n,frac_phi_n";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlotRow {
    pub n: Int,
    pub f_n: Int,
    /// `[φn]` truncated to the requested digits, as `0.ddd…`.
    pub frac: String,
}

/// `⌊[φn]·10^digits⌋`.
pub fn frac_scaled(n: &Int, digits: u32) -> Int {
    let scale = Int::from(10).pow(digits);
    let a = n * &scale;
    let root = isqrt(&(&a * &a * 5)).expect("square is nonnegative");
    // φn·10^D = (a ± √(5a²))/2, never an integer for n ≠ 0
    let scaled_phi_n = if n.is_negative() {
        (a - root - 1).half_floor()
    } else {
        (a + root).half_floor()
    };
    scaled_phi_n - beatty_f(n) * &scale
}

/// `[φn]` truncated to `digits` decimals.
pub fn frac_decimal(n: &Int, digits: u32) -> String {
    let v = frac_scaled(n, digits);
    if digits == 0 {
        return "0".to_owned();
    }
    format!("0.{:0>width$}", v.to_string(), width = digits as usize)
}

pub fn rows(from: &Int, to: &Int, digits: u32) -> Result<Vec<PlotRow>> {
    if from > to {
        return Err(domain(format!("empty range: from {from} exceeds to {to}")));
    }
    if digits > MAX_DIGITS {
        return Err(domain(format!("at most {MAX_DIGITS} digits are supported")));
    }
    let mut out = Vec::new();
    let mut n = from.clone();
    while &n <= to {
        out.push(PlotRow {
            f_n: beatty_f(&n),
            frac: frac_decimal(&n, digits),
            n: n.clone(),
        });
        n += 1;
    }
    Ok(out)
}

pub fn write_csv(rows: &[PlotRow], mut w: impl Write) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(w, "{},{},{}", r.n, r.f_n, r.frac)?;
    }
    Ok(())
}

/// One `<circle>` per row; the group flips the y axis so that larger
/// fractional parts sit higher.
pub fn write_svg_points(rows: &[PlotRow], mut w: impl Write) -> io::Result<()> {
    let (lo, hi) = match (rows.first(), rows.last()) {
        (Some(a), Some(b)) => (&a.n - 1, &b.n + 1),
        _ => (Int::ZERO, Int::ONE),
    };
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{lo} -1 {} 1" preserveAspectRatio="none">"#,
        &hi - &lo
    )?;
    writeln!(w, r#"<g transform="scale(1,-1)">"#)?;
    for r in rows {
        writeln!(
            w,
            r#"<circle cx="{}" cy="{}" r="0.01" data-f="{}"/>"#,
            r.n, r.frac, r.f_n
        )?;
    }
    writeln!(w, "</g>")?;
    writeln!(w, "</svg>")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_expansions() {
        // φ = 1.6180339887498948482…
        assert_eq!(frac_decimal(&Int::from(1), 19), "0.6180339887498948482");
        assert_eq!(frac_decimal(&Int::from(2), 12), "0.236067977499");
        assert_eq!(frac_decimal(&Int::from(5), 6), "0.090169");
        assert_eq!(frac_decimal(&Int::from(0), 4), "0.0000");
        // −φ = −1.618…, so [−φ] = 0.381966…
        assert_eq!(frac_decimal(&Int::from(-1), 12), "0.381966011250");
        assert_eq!(frac_decimal(&Int::from(-5), 6), "0.909830");
        assert_eq!(frac_decimal(&Int::from(7), 0), "0");
    }

    #[test]
    fn truncation_brackets_the_value() {
        // digits are a prefix: one more digit never changes the shorter value
        for n in -300i64..300 {
            let n = Int::from(n);
            let short = frac_scaled(&n, 8);
            let long = frac_scaled(&n, 9);
            assert_eq!(long.div_floor(&Int::from(10)), short);
        }
    }

    #[test]
    fn csv_shape() {
        let rows = rows(&Int::from(0), &Int::from(2), 3).unwrap();
        let mut out = Vec::new();
        write_csv(&rows, &mut out).unwrap();
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "n,f_n,frac_phi_n\n0,0,0.000\n1,1,0.618\n2,3,0.236\n"
        );
        assert!(super::rows(&Int::from(3), &Int::from(2), 3).is_err());
    }

    #[test]
    fn svg_shape() {
        let rows = rows(&Int::from(-1), &Int::from(1), 2).unwrap();
        let mut out = Vec::new();
        write_svg_points(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("<svg"));
        assert_eq!(text.matches("<circle").count(), 3);
        assert!(text.contains(r#"cx="-1" cy="0.38""#));
    }
}
