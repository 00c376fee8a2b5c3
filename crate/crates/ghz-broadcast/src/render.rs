//! Numeric formatting for human-readable tables: 12 significant digits,
//! with an exact-fraction annotation when a value sits within 1e-9 of a
//! small rational.

const FRACTION_TOL: f64 = 1e-9;
const MAX_DENOMINATOR: i64 = 1000;

/// Formats with 12 significant digits in plain positional notation.
pub(crate) fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Best small-denominator rational within [`FRACTION_TOL`], via continued
/// fractions. Returns `(numerator, denominator)` in lowest terms.
pub(crate) fn fraction(x: f64) -> Option<(i64, i64)> {
    if !x.is_finite() || x.abs() > 1e6 {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (1i64, 0i64, x.round() as i64, 1i64);
    let mut frac = x - x.round();
    for _ in 0..32 {
        if (x - p1 as f64 / q1 as f64).abs() <= FRACTION_TOL {
            return Some(if q1 < 0 { (-p1, -q1) } else { (p1, q1) });
        }
        if frac.abs() < 1e-15 {
            break;
        }
        let recip = 1.0 / frac;
        let whole = recip.round();
        frac = recip - whole;
        let a = whole as i64;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2.abs() > MAX_DENOMINATOR {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

/// `"0.333333333333 (= 1/3)"` when a fraction is recognized, else the plain
/// 12-digit rendering.
pub(crate) fn annotated(x: f64) -> String {
    match fraction(x) {
        Some((p, 1)) => format!("{} (= {p})", sig12(x)),
        Some((p, q)) => format!("{} (= {p}/{q})", sig12(x)),
        None => sig12(x),
    }
}
