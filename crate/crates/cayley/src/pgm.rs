//! Grayscale PGM renders of sign tables. Pixel `(q, p)` shows `ω(p, q)`, so
//! `(0, 0)` is the top left corner.

use std::fmt::Write;

use cayley_core::{Sign, SignMatrix, MAX_LEVEL};

use crate::{Error, Result};

pub const MAX_SIDE: usize = 1 << MAX_LEVEL;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gray {
    pub plus: u8,
    pub minus: u8,
}

impl Default for Gray {
    fn default() -> Self {
        Gray { plus: 64, minus: 192 }
    }
}

impl Gray {
    pub fn of(self, s: Sign) -> u8 {
        match s {
            Sign::Plus => self.plus,
            Sign::Minus => self.minus,
        }
    }
}

/// `P5` when `binary`, otherwise `P2` with one text row per table row.
pub fn render_pgm(table: &SignMatrix, binary: bool, gray: Gray) -> Result<Vec<u8>> {
    let side = table.size();
    if side > MAX_SIDE {
        return Err(Error::TableTooLarge { side, max: MAX_SIDE });
    }
    let magic = if binary { "P5" } else { "P2" };
    let mut out = format!("{magic}\n{side} {side}\n255\n").into_bytes();
    if binary {
        out.reserve(side * side);
        for row in table.rows() {
            out.extend(row.iter().map(|&s| gray.of(s)));
        }
    } else {
        let mut text = String::new();
        for row in table.rows() {
            for (i, &s) in row.iter().enumerate() {
                if i > 0 {
                    text.push(' ');
                }
                write!(text, "{}", gray.of(s)).expect("writing to a String");
            }
            text.push('\n');
        }
        out.extend(text.into_bytes());
    }
    Ok(out)
}

/// Splits a binary PGM produced by [`render_pgm`] into side and payload.
pub fn split_p5(bytes: &[u8]) -> Option<(usize, &[u8])> {
    let mut fields = Vec::new();
    let mut pos = 0;
    while fields.len() < 4 {
        let start = pos;
        while *bytes.get(pos)? != b'\n' && bytes[pos] != b' ' {
            pos += 1;
        }
        fields.push(std::str::from_utf8(&bytes[start..pos]).ok()?);
        pos += 1;
    }
    if fields[0] != "P5" || fields[1] != fields[2] || fields[3] != "255" {
        return None;
    }
    let side: usize = fields[1].parse().ok()?;
    let payload = &bytes[pos..];
    (payload.len() == side * side).then_some((side, payload))
}
