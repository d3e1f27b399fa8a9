// Copyright 2026 The bosonc Authors
// SPDX-License-Identifier: Apache-2.0

//! Canonical decimal rendering of reals shared by every text format.

use num_complex::Complex64;

/// Shortest decimal string that parses back to exactly `x`.
///
/// Plain notation is used for magnitudes in `[1e-5, 1e16)`, exponent
/// notation otherwise. Negative zero renders as `0`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let a = x.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Renders a coefficient as `re`, `imi` or `(re+imi)`.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format_real(c.re)
    } else if c.re == 0.0 {
        format!("{}i", format_real(c.im))
    } else {
        let sign = if c.im < 0.0 { '-' } else { '+' };
        format!(
            "({}{}{}i)",
            format_real(c.re),
            sign,
            format_real(c.im.abs())
        )
    }
}
