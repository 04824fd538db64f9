//! Twist functions `ω` with `e_p e_q = ω(p, q) e_{p xor q}`.
//!
//! Each of the eight valid doubling products has a twist given by a
//! recursion on `p = 2r + x`, `q = 2s + y`. The value for a parity cell
//! `(x, y)` is `±ω(r, s)` or `±ω(s, r)`, and in the odd cells it falls back
//! to a constant when `r` (or `s`, for transposed products) is zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::element::{Element, Scalar};
use crate::error::Error;
use crate::product::{align, Levels, ProductSpec};
use crate::sign::{Sign, SignedIndex};
use crate::MAX_LEVEL;

/// Names one of the eight twists `ω0..ω3`, `ω0*..ω3*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwistId {
    base: u8,
    transposed: bool,
}

impl TwistId {
    pub const ALL: [TwistId; 8] = [
        TwistId { base: 0, transposed: false },
        TwistId { base: 1, transposed: false },
        TwistId { base: 2, transposed: false },
        TwistId { base: 3, transposed: false },
        TwistId { base: 0, transposed: true },
        TwistId { base: 1, transposed: true },
        TwistId { base: 2, transposed: true },
        TwistId { base: 3, transposed: true },
    ];

    pub const OMEGA2: TwistId = TwistId { base: 2, transposed: false };

    pub fn new(base: u8, transposed: bool) -> Option<TwistId> {
        (base < 4).then_some(TwistId { base, transposed })
    }

    pub fn base(self) -> u8 {
        self.base
    }

    pub fn transposed(self) -> bool {
        self.transposed
    }

    /// The twist of the transposed product.
    pub fn transpose(self) -> TwistId {
        TwistId {
            base: self.base,
            transposed: !self.transposed,
        }
    }

    fn ordinal(self) -> usize {
        self.base as usize + if self.transposed { 4 } else { 0 }
    }

    /// The doubling product this twist belongs to.
    pub fn spec(self) -> ProductSpec {
        ProductSpec::VALID[self.ordinal()]
    }
}

/// Formats as `ω2` or `ω2*`.
impl fmt::Display for TwistId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω{}{}", self.base, if self.transposed { "*" } else { "" })
    }
}

#[derive(Debug, Clone, Copy)]
enum Guard {
    Always,
    /// Recurse only if `r > 0`, otherwise the value is the constant.
    RPositive(Sign),
    /// Recurse only if `s > 0`, otherwise the value is the constant.
    SPositive(Sign),
}

#[derive(Debug, Clone, Copy)]
struct Cell {
    sign: Sign,
    /// Recurse on `(s, r)` instead of `(r, s)`.
    swap: bool,
    guard: Guard,
}

const fn cell(sign: Sign, swap: bool, guard: Guard) -> Cell {
    Cell { sign, swap, guard }
}

const P: Sign = Sign::Plus;
const M: Sign = Sign::Minus;
const RS: bool = false;
const SR: bool = true;
const ALWAYS: Guard = Guard::Always;

/// Cells in order `(2r,2s)`, `(2r,2s+1)`, `(2r+1,2s)`, `(2r+1,2s+1)`,
/// indexed like [`TwistId::ALL`].
const RECURSIONS: [[Cell; 4]; 8] = [
    // ω0
    [
        cell(P, SR, ALWAYS),
        cell(M, SR, Guard::RPositive(P)),
        cell(P, RS, ALWAYS),
        cell(P, RS, Guard::RPositive(M)),
    ],
    // ω1
    [
        cell(P, SR, ALWAYS),
        cell(M, RS, Guard::RPositive(P)),
        cell(P, SR, ALWAYS),
        cell(P, SR, Guard::RPositive(M)),
    ],
    // ω2
    [
        cell(P, RS, ALWAYS),
        cell(M, SR, Guard::RPositive(P)),
        cell(P, RS, ALWAYS),
        cell(P, RS, Guard::RPositive(M)),
    ],
    // ω3
    [
        cell(P, RS, ALWAYS),
        cell(M, RS, Guard::RPositive(P)),
        cell(P, SR, ALWAYS),
        cell(P, SR, Guard::RPositive(M)),
    ],
    // ω0*
    [
        cell(P, SR, ALWAYS),
        cell(P, RS, ALWAYS),
        cell(M, SR, Guard::SPositive(P)),
        cell(P, RS, Guard::SPositive(M)),
    ],
    // ω1*
    [
        cell(P, SR, ALWAYS),
        cell(P, SR, ALWAYS),
        cell(M, RS, Guard::SPositive(P)),
        cell(P, SR, Guard::SPositive(M)),
    ],
    // ω2*
    [
        cell(P, RS, ALWAYS),
        cell(P, RS, ALWAYS),
        cell(M, SR, Guard::SPositive(P)),
        cell(P, RS, Guard::SPositive(M)),
    ],
    // ω3*
    [
        cell(P, RS, ALWAYS),
        cell(P, SR, ALWAYS),
        cell(M, RS, Guard::SPositive(P)),
        cell(P, SR, Guard::SPositive(M)),
    ],
];

enum Step {
    Done(Sign),
    Recurse(Sign, usize, usize),
}

/// One level of the recursion for `(p, q)`.
#[inline]
fn step(id: TwistId, p: usize, q: usize) -> Step {
    if p == 0 || q == 0 {
        return Step::Done(Sign::Plus);
    }
    let (r, s) = (p >> 1, q >> 1);
    let c = RECURSIONS[id.ordinal()][((p & 1) << 1) | (q & 1)];
    match c.guard {
        Guard::RPositive(k) if r == 0 => return Step::Done(k),
        Guard::SPositive(k) if s == 0 => return Step::Done(k),
        _ => {}
    }
    if c.swap {
        Step::Recurse(c.sign, s, r)
    } else {
        Step::Recurse(c.sign, r, s)
    }
}

/// `ω_id(p, q)`. Runs in `O(log max(p, q))` without allocation; see
/// [`TwistEvaluator`] for a memoizing front end.
pub fn twist(id: TwistId, mut p: usize, mut q: usize) -> Sign {
    let mut acc = Sign::Plus;
    loop {
        match step(id, p, q) {
            Step::Done(k) => return acc * k,
            Step::Recurse(k, r, s) => {
                acc = acc * k;
                p = r;
                q = s;
            }
        }
    }
}

/// `e_p e_q = ω(p, q) e_{p xor q}`.
pub fn basis_product(id: TwistId, p: usize, q: usize) -> SignedIndex {
    SignedIndex::new(twist(id, p, q), p ^ q)
}

/// Memoizing twist evaluator. Each evaluator owns its cache, so concurrent
/// callers clone one per thread.
#[derive(Debug, Clone)]
pub struct TwistEvaluator {
    id: TwistId,
    memo: BTreeMap<(usize, usize), Sign>,
}

impl TwistEvaluator {
    pub fn new(id: TwistId) -> Self {
        TwistEvaluator {
            id,
            memo: BTreeMap::new(),
        }
    }

    pub fn id(&self) -> TwistId {
        self.id
    }

    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    pub fn get(&mut self, p: usize, q: usize) -> Sign {
        if let Some(&s) = self.memo.get(&(p, q)) {
            return s;
        }
        let value = match step(self.id, p, q) {
            Step::Done(k) => k,
            Step::Recurse(k, r, s) => k * self.get(r, s),
        };
        self.memo.insert((p, q), value);
        value
    }
}

/// A square `2^n × 2^n` table of signs stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    level: u32,
    entries: Vec<Sign>,
}

impl SignMatrix {
    pub(crate) fn from_entries(level: u32, entries: Vec<Sign>) -> Self {
        debug_assert_eq!(entries.len(), 1usize << (2 * level));
        SignMatrix { level, entries }
    }

    /// Builds a matrix from rows; the side length must be a power of two.
    pub fn from_rows(rows: Vec<Vec<Sign>>) -> Result<SignMatrix, Error> {
        let size = rows.len();
        if !size.is_power_of_two() || rows.iter().any(|r| r.len() != size) {
            return Err(Error::BadLength { len: size });
        }
        let level = size.trailing_zeros();
        if level > MAX_LEVEL {
            return Err(Error::LevelTooLarge { level, max: MAX_LEVEL });
        }
        Ok(SignMatrix {
            level,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn size(&self) -> usize {
        1 << self.level
    }

    pub fn get(&self, p: usize, q: usize) -> Sign {
        self.entries[p * self.size() + q]
    }

    pub fn row(&self, p: usize) -> &[Sign] {
        let n = self.size();
        &self.entries[p * n..(p + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Sign]> {
        self.entries.chunks(self.size())
    }

    pub fn transpose(&self) -> SignMatrix {
        let n = self.size();
        let entries = (0..n * n).map(|i| self.get(i % n, i / n)).collect();
        SignMatrix::from_entries(self.level, entries)
    }

    /// The upper-left `2^level` square. Panics if `level > self.level()`.
    pub fn quadrant(&self, level: u32) -> SignMatrix {
        assert!(level <= self.level, "quadrant larger than the table");
        let m = 1usize << level;
        let entries = (0..m)
            .flat_map(|p| self.row(p)[..m].iter().copied())
            .collect();
        SignMatrix::from_entries(level, entries)
    }

    /// `entry(0, q) == entry(p, 0) == +1` everywhere.
    pub fn has_unit_border(&self) -> bool {
        self.row(0).iter().all(|s| s.is_plus()) && (0..self.size()).all(|p| self.get(p, 0).is_plus())
    }
}

/// The table of `ω_id(p, q)` for `p, q < 2^n`.
///
/// Built level by level: every entry of the level-`k+1` table is one cell of
/// the recursion applied to an entry of the level-`k` table.
pub fn twist_table(id: TwistId, n: u32) -> Result<SignMatrix, Error> {
    if n > MAX_LEVEL {
        return Err(Error::LevelTooLarge { level: n, max: MAX_LEVEL });
    }
    let mut table = SignMatrix::from_entries(0, alloc::vec![Sign::Plus]);
    for level in 1..=n {
        let size = 1usize << level;
        let entries = (0..size * size)
            .map(|i| {
                let (p, q) = (i / size, i % size);
                match step(id, p, q) {
                    Step::Done(k) => k,
                    Step::Recurse(k, r, s) => k * table.get(r, s),
                }
            })
            .collect();
        table = SignMatrix::from_entries(level, entries);
    }
    Ok(table)
}

/// One row of [`twist_table`], computed directly from [`twist`]. Rows are
/// independent, which lets callers build tables in parallel.
pub fn twist_row(id: TwistId, n: u32, p: usize) -> Vec<Sign> {
    (0..1usize << n).map(|q| twist(id, p, q)).collect()
}

/// Product of two elements through the twisted group algebra:
/// `x y = Σ x_p y_q ω(p, q) e_{p xor q}`.
pub fn mul_via_twist(id: TwistId, x: &Element, y: &Element) -> Result<Element, Error> {
    mul_via_twist_with(id, x, y, Levels::Strict)
}

pub fn mul_via_twist_with(
    id: TwistId,
    x: &Element,
    y: &Element,
    levels: Levels,
) -> Result<Element, Error> {
    let (x, y) = align(x, y, levels)?;
    let n = x.dim();
    let mut out: Vec<Scalar> = alloc::vec![Scalar::zero(); n];
    for (p, xp) in x.coeffs().iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        for (q, yq) in y.coeffs().iter().enumerate() {
            if yq.is_zero() {
                continue;
            }
            let term = xp * yq;
            match twist(id, p, q) {
                Sign::Plus => out[p ^ q] += term,
                Sign::Minus => out[p ^ q] -= term,
            }
        }
    }
    Element::from_coeffs(out)
}
