//! Instance files and exact rational strings.
//!
//! An instance file is a single JSON document:
//!
//! ```json
//! { "d": 2, "a": "1/3", "vectors": [["1", "0"], ["0", "0.25"]] }
//! ```
//!
//! Rationals are written as strings: `"7"`, `"3/4"` or a finite decimal such
//! as `"0.25"`. Emitted files always use the canonical `num/den` or integer
//! form, so emitting a parsed file reproduces it byte for byte.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{RatVec, Rational};
use crate::selector::{Instance, TargetRatio};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub d: usize,
    pub a: String,
    pub vectors: Vec<Vec<String>>,
}

fn parse_error<T>(position: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        position,
        message: message.into(),
    })
}

fn digits_end(bytes: &[u8], start: usize) -> usize {
    start
        + bytes[start..]
            .iter()
            .take_while(|b| b.is_ascii_digit())
            .count()
}

/// Parses `[-]digits`, `[-]digits/digits` or `[-]digits.digits` exactly.
/// Positions in errors are byte offsets into `text`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let negative = bytes.first() == Some(&b'-');
    if negative {
        pos = 1;
    }
    let int_end = digits_end(bytes, pos);
    if int_end == pos {
        return parse_error(pos, format!("expected a digit in {text:?}"));
    }
    let whole: BigInt = text[pos..int_end].parse().expect("ascii digits");
    let value = match bytes.get(int_end) {
        None => Rational::from_integer(whole),
        Some(b'/') => {
            let den_end = digits_end(bytes, int_end + 1);
            if den_end == int_end + 1 {
                return parse_error(
                    int_end + 1,
                    format!("expected denominator digits in {text:?}"),
                );
            }
            if den_end != bytes.len() {
                return parse_error(den_end, format!("unexpected character in {text:?}"));
            }
            let den: BigInt = text[int_end + 1..den_end].parse().expect("ascii digits");
            if den.is_zero() {
                return parse_error(int_end + 1, format!("zero denominator in {text:?}"));
            }
            Rational::new(whole, den)
        }
        Some(b'.') => {
            let frac_end = digits_end(bytes, int_end + 1);
            if frac_end == int_end + 1 {
                return parse_error(int_end + 1, format!("expected fraction digits in {text:?}"));
            }
            if frac_end != bytes.len() {
                return parse_error(frac_end, format!("unexpected character in {text:?}"));
            }
            let frac: BigInt = text[int_end + 1..frac_end].parse().expect("ascii digits");
            let scale = BigInt::from(10).pow((frac_end - int_end - 1) as u32);
            Rational::from_integer(whole) + Rational::new(frac, scale)
        }
        Some(_) => return parse_error(int_end, format!("unexpected character in {text:?}")),
    };
    Ok(if negative { -value } else { value })
}

/// Canonical string form: integer, or `num/den` in lowest terms.
pub fn format_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn format_vector(v: &RatVec) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_ratio(text: &str) -> Result<TargetRatio> {
    let a = parse_rational(text)?;
    if a.is_negative() || a > Rational::from_integer(BigInt::from(1)) {
        return Err(Error::Validation(format!(
            "ratio a = {text} lies outside [0, 1]"
        )));
    }
    TargetRatio::from_rational(&a)
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance, ratio: TargetRatio) -> Self {
        InstanceFile {
            d: inst.d(),
            a: ratio.to_string(),
            vectors: inst.vectors().iter().map(format_vector).collect(),
        }
    }

    /// Validates and converts; errors name the offending entry.
    pub fn to_instance(&self) -> Result<(Instance, TargetRatio)> {
        let ratio = parse_ratio(&self.a).map_err(|e| Error::Validation(format!("a: {e}")))?;
        if self.d == 0 {
            return Err(Error::Validation("d: dimension must be at least 1".into()));
        }
        if self.vectors.is_empty() {
            return Err(Error::Validation(
                "vectors: at least one vector is required".into(),
            ));
        }
        let mut vectors = Vec::with_capacity(self.vectors.len());
        for (i, row) in self.vectors.iter().enumerate() {
            if row.len() != self.d {
                return Err(Error::Validation(format!(
                    "vectors[{i}]: has {} coordinates, expected d = {}",
                    row.len(),
                    self.d
                )));
            }
            let mut coords = Vec::with_capacity(row.len());
            for (j, text) in row.iter().enumerate() {
                let x = parse_rational(text)
                    .map_err(|e| Error::Validation(format!("vectors[{i}][{j}]: {e}")))?;
                if x.is_negative() {
                    return Err(Error::Validation(format!(
                        "vectors[{i}][{j}]: coordinate {text} is negative"
                    )));
                }
                coords.push(x);
            }
            vectors.push(RatVec::new(coords));
        }
        Ok((Instance::new(self.d, vectors)?, ratio))
    }
}

pub fn parse_instance(document: &str) -> Result<(Instance, TargetRatio)> {
    let file: InstanceFile = serde_json::from_str(document)
        .map_err(|e| Error::Validation(format!("malformed instance file: {e}")))?;
    file.to_instance()
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_instance(inst: &Instance, ratio: TargetRatio) -> String {
    let mut out = serde_json::to_string_pretty(&InstanceFile::from_instance(inst, ratio))
        .expect("instance file serializes");
    out.push('\n');
    out
}
