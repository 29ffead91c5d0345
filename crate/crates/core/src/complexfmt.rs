//! Canonical `a+bi` text form for complex numbers.
//!
//! Used by the CLI config format and CSV metadata. Formatting uses Rust's
//! shortest round-trip float printing, so output is byte-deterministic.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Format as `a+bi` / `a-bi`; purely real values print as `a+0i`.
pub fn format_complex(z: C64) -> String {
    if z.im.is_sign_negative() {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parse `a`, `bi`, `a+bi` or `a-bi`. Exponents (`1e-3+2e4i`) are accepted.
pub fn parse_complex(s: &str) -> Result<C64> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bad = |s: &str| Error::Parse(format!("malformed complex literal `{s}`"));

    if let Some(imag) = s.strip_suffix(['i', 'I']) {
        // Find the sign splitting real and imaginary parts: the last '+'/'-'
        // that is not the leading sign and not part of an exponent.
        let bytes = imag.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            let c = bytes[k];
            if (c == b'+' || c == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re: f64 = imag[..k].parse().map_err(|_| bad(s))?;
                let im_str = &imag[k..];
                let im: f64 = if im_str == "+" {
                    1.0
                } else if im_str == "-" {
                    -1.0
                } else {
                    im_str.parse().map_err(|_| bad(s))?
                };
                Ok(C64::new(re, im))
            }
            None => {
                // Pure imaginary: `bi` or bare `i`.
                let im: f64 = if imag.is_empty() {
                    1.0
                } else {
                    imag.parse().map_err(|_| bad(s))?
                };
                Ok(C64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| bad(s))?;
        Ok(C64::new(re, 0.0))
    }
}
