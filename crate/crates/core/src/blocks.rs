//! 2×2 block structure of twist tables.
//!
//! Block `(r, s)` of a twist table holds `ω(2r+x, 2s+y)` for `x, y ∈ {0, 1}`.
//! Every block equals `ω(r, s)` times a fixed pattern that depends only on
//! the twist and on the region of `(r, s)`.

use alloc::vec::Vec;
use core::fmt;

use crate::sign::Sign;
use crate::twist::{twist_table, TwistId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    /// `r = s = 0`
    Corner,
    /// `r > s = 0`
    Left,
    /// `s > r = 0`
    Top,
    /// `r = s > 0`
    Diagonal,
    /// `0 ≠ r ≠ s ≠ 0`
    Interior,
}

impl Region {
    pub const ALL: [Region; 5] = [
        Region::Corner,
        Region::Left,
        Region::Top,
        Region::Diagonal,
        Region::Interior,
    ];

    pub fn of(r: usize, s: usize) -> Region {
        match (r, s) {
            (0, 0) => Region::Corner,
            (_, 0) => Region::Left,
            (0, _) => Region::Top,
            _ if r == s => Region::Diagonal,
            _ => Region::Interior,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Region::Corner => 'C',
            Region::Left => 'L',
            Region::Top => 'T',
            Region::Diagonal => 'D',
            Region::Interior => 'N',
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

pub type Block = [[Sign; 2]; 2];

const fn block(v: [[i8; 2]; 2]) -> Block {
    const fn s(x: i8) -> Sign {
        if x > 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
    [[s(v[0][0]), s(v[0][1])], [s(v[1][0]), s(v[1][1])]]
}

const CORNER: Block = block([[1, 1], [1, -1]]);

/// C, L, T, D for `ω0..ω3`.
const PLAIN_EDGES: [Block; 4] = [
    CORNER,
    block([[1, -1], [1, 1]]),
    block([[1, 1], [1, -1]]),
    block([[1, -1], [1, 1]]),
];

/// C, L, T, D for `ω0*..ω3*`.
const TRANSPOSED_EDGES: [Block; 4] = [
    CORNER,
    block([[1, 1], [1, -1]]),
    block([[1, 1], [-1, 1]]),
    block([[1, 1], [-1, 1]]),
];

/// N for base index 0..3; shared by a twist and its transpose.
const INTERIOR: [Block; 4] = [
    block([[-1, 1], [1, 1]]),
    block([[-1, -1], [-1, -1]]),
    block([[1, 1], [1, 1]]),
    block([[1, -1], [-1, -1]]),
];

/// The fixed pattern for a region. The diagonal pattern is listed in
/// its positive form; in the table it is multiplied by `ω(r, r) = -1`.
pub fn pattern(id: TwistId, region: Region) -> Block {
    let edges = if id.transposed() {
        &TRANSPOSED_EDGES
    } else {
        &PLAIN_EDGES
    };
    match region {
        Region::Corner => edges[0],
        Region::Left => edges[1],
        Region::Top => edges[2],
        Region::Diagonal => edges[3],
        Region::Interior => INTERIOR[id.base() as usize],
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RegionTally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub id: TwistId,
    pub level: u32,
    /// Indexed like [`Region::ALL`].
    pub tallies: [RegionTally; 5],
    /// Block coordinates `(r, s)` of every mismatch.
    pub failures: Vec<(usize, usize)>,
}

impl BlockReport {
    pub fn tally(&self, region: Region) -> RegionTally {
        self.tallies[Region::ALL.iter().position(|&r| r == region).unwrap()]
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every 2×2 block of the level-`n` table of `id` against
/// `ω(r, s) · pattern(id, region(r, s))`.
///
/// Levels above [`crate::MAX_LEVEL`] yield an empty, failing report.
pub fn verify_blocks(id: TwistId, n: u32) -> BlockReport {
    let mut report = BlockReport {
        id,
        level: n,
        tallies: Default::default(),
        failures: Vec::new(),
    };
    let Ok(table) = twist_table(id, n) else {
        report.failures.push((usize::MAX, usize::MAX));
        return report;
    };
    if n == 0 {
        return report;
    }
    let half = table.size() / 2;
    for r in 0..half {
        for s in 0..half {
            let region = Region::of(r, s);
            let scale = table.get(r, s);
            let pat = pattern(id, region);
            let ok = (0..2).all(|x| {
                (0..2).all(|y| table.get(2 * r + x, 2 * s + y) == scale * pat[x][y])
            });
            let i = Region::ALL.iter().position(|&g| g == region).unwrap();
            if ok {
                report.tallies[i].passed += 1;
            } else {
                report.tallies[i].failed += 1;
                report.failures.push((r, s));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(b: Block) -> [[i8; 2]; 2] {
        [
            [b[0][0].to_i8(), b[0][1].to_i8()],
            [b[1][0].to_i8(), b[1][1].to_i8()],
        ]
    }

    #[test]
    fn region_patterns() {
        let w2 = TwistId::OMEGA2;
        let w0 = TwistId::new(0, false).unwrap();
        let w0s = TwistId::new(0, true).unwrap();
        assert_eq!(ints(pattern(w2, Region::Interior)), [[1, 1], [1, 1]]);
        assert_eq!(ints(pattern(w0, Region::Interior)), [[-1, 1], [1, 1]]);
        assert_eq!(ints(pattern(w0s, Region::Left)), [[1, 1], [1, -1]]);
        for id in TwistId::ALL {
            assert_eq!(ints(pattern(id, Region::Corner)), [[1, 1], [1, -1]]);
        }
    }

    #[test]
    fn all_twists_decompose_into_blocks() {
        for id in TwistId::ALL {
            for n in 1..=6 {
                let report = verify_blocks(id, n);
                assert!(report.passed(), "{id} level {n}: {:?}", report.failures);
            }
            let report = verify_blocks(id, 4);
            assert_eq!(report.tally(Region::Corner).passed, 1);
            assert_eq!(report.tally(Region::Left).passed, 7);
            assert_eq!(report.tally(Region::Top).passed, 7);
            assert_eq!(report.tally(Region::Diagonal).passed, 7);
            assert_eq!(report.tally(Region::Interior).passed, 42);
        }
    }

    #[test]
    fn wrong_pattern_is_reported() {
        // ω1's table checked against ω2's interior pattern must fail.
        let table = twist_table(TwistId::new(1, false).unwrap(), 3).unwrap();
        let pat = pattern(TwistId::OMEGA2, Region::Interior);
        let (r, s) = (1, 2);
        let scale = table.get(r, s);
        let mismatch = (0..2).any(|x| (0..2).any(|y| table.get(2 * r + x, 2 * s + y) != scale * pat[x][y]));
        assert!(mismatch);
    }

    #[test]
    fn region_classification() {
        assert_eq!(Region::of(0, 0), Region::Corner);
        assert_eq!(Region::of(3, 0), Region::Left);
        assert_eq!(Region::of(0, 3), Region::Top);
        assert_eq!(Region::of(3, 3), Region::Diagonal);
        assert_eq!(Region::of(3, 2), Region::Interior);
    }
}
