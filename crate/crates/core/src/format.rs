//! Deterministic numeric formatting for reports and CSV output.

/// Formats a finite value with 12 significant digits, shortest-form style:
/// fixed notation when the decimal exponent lies in [-4, 12), scientific
/// otherwise, trailing zeros trimmed, and plain `0` for zero. Output is a
/// pure function of the value, so repeated runs serialize identically.
pub fn fmt_g12(x: f64) -> String {
    assert!(x.is_finite(), "cannot format non-finite value {x}");
    if x == 0.0 {
        return "0".to_string();
    }
    let neg = x < 0.0;
    // Round to 12 significant digits in scientific form, then re-layout.
    let sci = format!("{:.11e}", x.abs());
    let (mant, exp) = sci.split_once('e').expect("scientific form has an exponent");
    let e: i32 = exp.parse().expect("exponent is an integer");
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 12);
    let body = if (-4..12).contains(&e) {
        if e >= 0 {
            let point = (e + 1) as usize;
            let frac = digits[point..].trim_end_matches('0');
            if frac.is_empty() {
                digits[..point].to_string()
            } else {
                format!("{}.{}", &digits[..point], frac)
            }
        } else {
            let frac = digits.trim_end_matches('0');
            format!("0.{}{}", "0".repeat((-e - 1) as usize), frac)
        }
    } else {
        let rest = digits[1..].trim_end_matches('0');
        if rest.is_empty() {
            format!("{}e{}", &digits[..1], e)
        } else {
            format!("{}.{}e{}", &digits[..1], rest, e)
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}
