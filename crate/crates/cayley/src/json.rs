//! `{"level": N, "coeffs": ["num/den", ...]}` with exact coefficients.
//!
//! Integers are written without a denominator, so `e3` at level 2 encodes as
//! `{"level":2,"coeffs":["0","0","0","1"]}`.

use std::str::FromStr;

use cayley_core::{Element, Scalar, MAX_LEVEL};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementDto {
    level: u32,
    coeffs: Vec<String>,
}

pub fn encode(x: &Element) -> String {
    let dto = ElementDto {
        level: x.level(),
        coeffs: x.coeffs().iter().map(ToString::to_string).collect(),
    };
    serde_json::to_string(&dto).expect("plain struct serializes")
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let ok = !t.is_empty()
        && t.split('/').count() <= 2
        && t.split('/').all(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !ok {
        return Err(Error::Coefficient(s.to_string()));
    }
    Scalar::from_str(t).map_err(|_| Error::Coefficient(s.to_string()))
}

pub fn decode(text: &str) -> Result<Element> {
    let dto: ElementDto = serde_json::from_str(text)?;
    if dto.level > MAX_LEVEL {
        return Err(cayley_core::Error::LevelTooLarge {
            level: dto.level,
            max: MAX_LEVEL,
        }
        .into());
    }
    if dto.coeffs.len() != 1usize << dto.level {
        return Err(Error::CoefficientCount {
            level: dto.level,
            len: dto.coeffs.len(),
        });
    }
    let coeffs = dto
        .coeffs
        .iter()
        .map(|c| parse_scalar(c))
        .collect::<Result<Vec<_>>>()?;
    Ok(Element::from_coeffs(coeffs)?)
}
