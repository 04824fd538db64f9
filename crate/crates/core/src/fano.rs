//! Orientation of the octonion Fano plane and the 7-cycles that permute
//! its lines.
//!
//! The plane is drawn with 1 at the centre, 2, 4, 6 on the inscribed circle
//! and 3, 5, 7 at the corners. The three altitudes pass through 1, the
//! circle is `{2, 4, 6}`, and each side carries one of the remaining lines.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::product::ProductSpec;
use crate::triples::{all_triples, permute, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Altitudes {
    /// `(1,2,3)`: arrows point from the apex to the base.
    Down,
    /// `(1,3,2)`
    Up,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rotation {
    Cw,
    Ccw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FanoOrientation {
    pub altitudes: Altitudes,
    /// `Ccw` iff `(2,6,4)`.
    pub circle: Rotation,
    /// `Ccw` iff `(7,2,5)`.
    pub sides: Rotation,
}

impl fmt::Display for FanoOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alt = match self.altitudes {
            Altitudes::Down => '↓',
            Altitudes::Up => '↑',
        };
        let circle = match self.circle {
            Rotation::Ccw => '↺',
            Rotation::Cw => '↻',
        };
        let sides = match self.sides {
            Rotation::Ccw => '→',
            Rotation::Cw => '←',
        };
        write!(f, "{alt} {circle} {sides}")
    }
}

fn orient<T>(set: &BTreeSet<Triple>, (p, q): (usize, usize), yes: T, no: T) -> T {
    let t = Triple::new(p, q).expect("distinct nonzero indices");
    if set.contains(&t.canonical()) {
        yes
    } else {
        no
    }
}

/// Reads the orientation off the level-3 triples of a valid product.
pub fn fano_orientation(product: ProductSpec) -> Result<FanoOrientation, Error> {
    let set = all_triples(product.require_valid()?, 3)?;
    Ok(FanoOrientation {
        altitudes: orient(&set, (1, 2), Altitudes::Down, Altitudes::Up),
        circle: orient(&set, (2, 6), Rotation::Ccw, Rotation::Cw),
        sides: orient(&set, (7, 2), Rotation::Ccw, Rotation::Cw),
    })
}

/// The 7-cycle known to carry `(1,2,3)` around every line of `product`.
pub fn orbit_cycle(product: ProductSpec) -> Option<[usize; 7]> {
    match product {
        ProductSpec::P0 => Some([1, 2, 6, 3, 4, 5, 7]),
        ProductSpec::P3 => Some([1, 2, 4, 3, 6, 7, 5]),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub product: ProductSpec,
    pub cycle: [usize; 7],
    /// `(1,2,3)` and its six successive images.
    pub images: Vec<Triple>,
    /// Every image is a triple of the product.
    pub all_valid: bool,
    /// The images hit all seven lines.
    pub covers_all: bool,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.all_valid && self.covers_all
    }
}

/// Applies the product's 7-cycle to `(1,2,3)` repeatedly. Only `P0` and
/// `P3` have a known cycle.
pub fn permutation_orbit(product: ProductSpec) -> Result<OrbitReport, Error> {
    let cycle = orbit_cycle(product).ok_or(Error::Unsupported("no known orbit cycle for product"))?;
    let lines = all_triples(product.require_valid()?, 3)?;
    let mut images = Vec::with_capacity(7);
    let mut t = Triple::new(1, 2)?;
    for _ in 0..7 {
        images.push(t);
        t = permute(t, &cycle);
    }
    let all_valid = images.iter().all(|x| lines.contains(&x.canonical()));
    let hit: BTreeSet<Triple> = images.iter().map(|x| x.canonical()).collect();
    Ok(OrbitReport {
        product,
        cycle,
        images,
        all_valid,
        covers_all: hit == lines,
    })
}
