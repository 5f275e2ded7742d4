use std::str::FromStr;

use super::{normalize, Complex, Polynomial};
use crate::error::{Error, Result};

impl FromStr for Polynomial {
    type Err = Error;

    /// Reads either the comma-separated text form (`"90,-101,18"`,
    /// `"1+2i,0,-0.5i"`) or a JSON array of `[re, im]` pairs.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            return parse_json_pairs(s);
        }
        let mut raw = Vec::new();
        let mut offset = 0;
        for token in s.split(',') {
            raw.push(parse_coefficient(token, offset)?);
            offset += token.len() + 1;
        }
        normalize(&raw)
    }
}

fn parse_json_pairs(s: &str) -> Result<Polynomial> {
    let pairs: Vec<[f64; 2]> = serde_json::from_str(s).map_err(|e| Error::Parse {
        position: json_offset(s, e.line(), e.column()),
        message: format!("expected an array of [re, im] pairs: {e}"),
    })?;
    let raw: Vec<Complex> = pairs.iter().map(|&[re, im]| Complex::new(re, im)).collect();
    normalize(&raw)
}

fn json_offset(s: &str, line: usize, column: usize) -> usize {
    s.split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum::<usize>()
        + column.saturating_sub(1)
}

/// One coefficient: `x`, `yi`, or `x±yi`. `offset` is the token's byte
/// position in the full input, used for diagnostics.
fn parse_coefficient(token: &str, offset: usize) -> Result<Complex> {
    let lead = token.len() - token.trim_start().len();
    let body = token.trim();
    let at = offset + lead;
    if body.is_empty() {
        return Err(Error::Parse {
            position: at,
            message: "empty coefficient".into(),
        });
    }

    let Some(imag_body) = body.strip_suffix('i') else {
        return parse_real(body, at).map(|re| Complex::new(re, 0.0));
    };

    // Split on the last sign that is not an exponent sign and not leading.
    let bytes = imag_body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));

    match split {
        Some(k) => {
            let re = parse_real(&imag_body[..k], at)?;
            let im = parse_imag(&imag_body[k..], at + k)?;
            Ok(Complex::new(re, im))
        }
        None => Ok(Complex::new(0.0, parse_imag(imag_body, at)?)),
    }
}

fn parse_imag(text: &str, at: usize) -> Result<f64> {
    match text {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        _ => parse_real(text, at),
    }
}

fn parse_real(text: &str, at: usize) -> Result<f64> {
    let value: f64 = text.trim().parse().map_err(|_| Error::Parse {
        position: at,
        message: format!("invalid number {text:?}"),
    })?;
    if !value.is_finite() {
        return Err(Error::Parse {
            position: at,
            message: format!("non-finite number {text:?}"),
        });
    }
    Ok(value)
}
