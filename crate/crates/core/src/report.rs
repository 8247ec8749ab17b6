//! Number formatting and flat report exports.
//!
//! Floats are written with 12 significant digits and a `.` decimal point,
//! independent of locale.

use std::fmt::Write as _;

use serde::Serializer;

use crate::bounds::BoundReport;
use crate::spectral::Spectrum;

pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` with 12 significant digits: positional for exponents in `-5..12`,
/// scientific otherwise.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let exp: i32 = sci
        .rsplit('e')
        .next()
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

/// `x` rounded to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .unwrap_or(x)
}

/// Serde helper writing an `f64` rounded to 12 significant digits.
pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

pub const BOUND_CSV_HEADER: &str = "bound_id,n,m,k,t,lhs,rhs,slack,holds,equality";

fn opt(x: Option<usize>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

pub fn bound_csv_row(r: &BoundReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{}",
        r.bound_id,
        r.n,
        r.m,
        opt(r.k),
        opt(r.t),
        fmt_sig(r.lhs),
        fmt_sig(r.rhs),
        fmt_sig(r.slack),
        r.holds,
        r.equality
    )
}

pub fn bounds_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from(BOUND_CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&bound_csv_row(r));
        out.push('\n');
    }
    out
}

/// Single `eigenvalue` column, descending, with values inside the zero
/// tolerance printed as 0.
pub fn spectrum_csv(s: &Spectrum) -> String {
    let mut out = String::from("eigenvalue\n");
    for x in s.display_values() {
        let _ = writeln!(out, "{}", fmt_sig(x));
    }
    out
}
