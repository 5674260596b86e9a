//! Fixed-precision number rendering for reports.

/// Significant digits used for every number printed by the CLI.
pub const SIGNIFICANT_DIGITS: usize = 9;

/// Renders `x` with [`SIGNIFICANT_DIGITS`] significant digits in plain
/// decimal notation, trailing zeros removed. Negative zero prints as `0`.
///
/// ```
/// use pentafuzzy::format::sig;
/// assert_eq!(sig(0.3 / 0.93), "0.322580645");
/// assert_eq!(sig(0.7 - 0.2), "0.5");
/// assert_eq!(sig(-0.1), "-0.1");
/// assert_eq!(sig(1.0), "1");
/// ```
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    // Round in scientific form first so the exponent reflects carries
    // (0.99999999999 -> 1.00000000e0).
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    let mut out = format!("{:.*}", decimals, x);
    if out.contains('.') {
        let trimmed = out.trim_end_matches('0').trim_end_matches('.').len();
        out.truncate(trimmed);
    }
    if out == "-0" {
        out = "0".to_owned();
    }
    out
}
