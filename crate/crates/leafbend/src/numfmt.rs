//! Locale-independent plain-decimal formatting with a fixed number of
//! significant digits, shared by the CSV and SVG emitters.

/// Format `x` with `sig` significant digits as plain decimal (no exponent
/// notation). Exact zero prints as "0".
pub fn format_sig(x: f64, sig: usize) -> String {
    assert!(x.is_finite(), "cannot format non-finite value");
    assert!(sig >= 1);
    if x == 0.0 {
        return "0".to_string();
    }

    let formatted = format!("{:.*e}", sig - 1, x.abs());
    let (mantissa, exp) = formatted
        .split_once('e')
        .expect("exponential format always contains 'e'");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), sig);

    let sign = if x < 0.0 { "-" } else { "" };
    let body = if exp >= 0 {
        let int_len = exp as usize + 1;
        if int_len >= sig {
            format!("{digits}{}", "0".repeat(int_len - sig))
        } else {
            format!("{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else {
        format!("0.{}{digits}", "0".repeat((-exp - 1) as usize))
    };
    format!("{sign}{body}")
}
