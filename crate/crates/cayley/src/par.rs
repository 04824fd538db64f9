//! Sign tables built one row per rayon task.

use cayley_core::product::{as_signed_basis, mul};
use cayley_core::twist::twist_row;
use cayley_core::{Element, Error, ProductSpec, Sign, SignMatrix, TwistId, MAX_LEVEL};
use rayon::prelude::*;

fn check(n: u32) -> Result<(), Error> {
    if n > MAX_LEVEL {
        Err(Error::LevelTooLarge { level: n, max: MAX_LEVEL })
    } else {
        Ok(())
    }
}

pub fn twist_table_par(id: TwistId, n: u32) -> Result<SignMatrix, Error> {
    check(n)?;
    let rows = (0..1usize << n)
        .into_par_iter()
        .map(|p| twist_row(id, n, p))
        .collect();
    SignMatrix::from_rows(rows)
}

/// The sign table read off the doubling product itself. Works for every
/// candidate whose basis products are `±e_(p xor q)`.
pub fn doubling_table_par(spec: ProductSpec, n: u32) -> Result<SignMatrix, Error> {
    check(n)?;
    let size = 1usize << n;
    let basis: Vec<Element> = (0..size)
        .map(|p| Element::basis(p, n))
        .collect::<Result<_, _>>()?;
    let rows = (0..size)
        .into_par_iter()
        .map(|p| {
            (0..size)
                .map(|q| match as_signed_basis(&mul(spec, &basis[p], &basis[q])?) {
                    Some(s) if s.index == p ^ q => Ok(s.sign),
                    _ => Err(Error::Unsupported("basis product is not ±e_(p xor q)")),
                })
                .collect::<Result<Vec<Sign>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    SignMatrix::from_rows(rows)
}

/// The twist table for the eight valid products, the doubling table for the
/// rest.
pub fn table_for(spec: ProductSpec, n: u32) -> Result<SignMatrix, Error> {
    match spec.twist_id() {
        Some(id) => twist_table_par(id, n),
        None => doubling_table_par(spec, n),
    }
}
