//! Finite automaton computing `ω2`.
//!
//! The bits of `p` and `q` are interleaved into 2-bit instructions, most
//! significant first, and fed to a four-state machine that starts at `C`.
//! `PLUS` and `MINUS` absorb; if the instructions run out first, `C`, `L` and
//! `T` give `+1` and `D` gives `-1`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::error::Error;
use crate::sign::Sign;
use crate::twist::{twist, TwistId};
use crate::{bit_length, MAX_LEVEL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeState {
    C,
    L,
    T,
    D,
    Plus,
    Minus,
}

impl TreeState {
    pub fn is_absorbing(self) -> bool {
        matches!(self, TreeState::Plus | TreeState::Minus)
    }

    /// The value when no instructions remain.
    pub fn terminal(self) -> Sign {
        match self {
            TreeState::D | TreeState::Minus => Sign::Minus,
            _ => Sign::Plus,
        }
    }
}

impl fmt::Display for TreeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TreeState::C => "C",
            TreeState::L => "L",
            TreeState::T => "T",
            TreeState::D => "D",
            TreeState::Plus => "PLUS",
            TreeState::Minus => "MINUS",
        })
    }
}

/// A bit of `p` (high) and a bit of `q` (low).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instruction(u8);

impl Instruction {
    pub fn new(p_bit: bool, q_bit: bool) -> Instruction {
        Instruction(((p_bit as u8) << 1) | q_bit as u8)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn p_bit(self) -> bool {
        self.0 & 2 != 0
    }

    pub fn q_bit(self) -> bool {
        self.0 & 1 != 0
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.p_bit() as u8, self.q_bit() as u8)
    }
}

/// Both indices padded to the longer bit length, paired bit by bit from
/// the top.
pub fn shuffle_bits(p: usize, q: usize) -> Vec<Instruction> {
    let width = bit_length(p).max(bit_length(q));
    (0..width)
        .rev()
        .map(|k| Instruction::new((p >> k) & 1 == 1, (q >> k) & 1 == 1))
        .collect()
}

pub fn step(state: TreeState, instr: Instruction) -> TreeState {
    use TreeState::*;
    match (state, instr.bits()) {
        (Plus, _) | (Minus, _) => state,
        (C, 0b00) => C,
        (C, 0b01) => T,
        (C, 0b10) => L,
        (C, _) => D,
        (L, 0b00) | (L, 0b10) => L,
        (L, 0b01) => Minus,
        (L, _) => Plus,
        (T, 0b00) | (T, 0b01) => T,
        (T, 0b10) => Plus,
        (T, _) => Minus,
        (D, 0b00) | (D, 0b11) => D,
        (D, 0b01) => Plus,
        (D, _) => Minus,
    }
}

/// The path taken by [`eval`], up to absorption.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub start: TreeState,
    pub steps: Vec<(Instruction, TreeState)>,
    pub result: Sign,
}

impl fmt::Display for Trace {
    /// `C -10-> L -01-> MINUS  => -1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for (instr, state) in &self.steps {
            write!(f, " -{instr}-> {state}")?;
        }
        write!(f, "  => {}", self.result)
    }
}

/// `ω2(p, q)` by running the automaton, stopping early on absorption.
pub fn eval(p: usize, q: usize) -> Sign {
    let mut state = TreeState::C;
    let width = bit_length(p).max(bit_length(q));
    for k in (0..width).rev() {
        state = step(state, Instruction::new((p >> k) & 1 == 1, (q >> k) & 1 == 1));
        if state.is_absorbing() {
            break;
        }
    }
    state.terminal()
}

pub fn eval_with_trace(p: usize, q: usize) -> Trace {
    let mut state = TreeState::C;
    let mut steps = Vec::new();
    for instr in shuffle_bits(p, q) {
        state = step(state, instr);
        steps.push((instr, state));
        if state.is_absorbing() {
            break;
        }
    }
    Trace {
        start: TreeState::C,
        steps,
        result: state.terminal(),
    }
}

pub fn trace_string(p: usize, q: usize) -> String {
    let mut s = String::new();
    write!(s, "{}", eval_with_trace(p, q)).expect("writing to a String");
    s
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanTally {
    pub checked: u64,
    pub counterexamples: u64,
    /// `(p, q)` of the first failure in scan order.
    pub first: Option<(usize, usize)>,
}

impl ScanTally {
    fn record(&mut self, p: usize, q: usize, ok: bool) {
        self.checked += 1;
        if !ok {
            self.counterexamples += 1;
            self.first.get_or_insert((p, q));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub bound: usize,
    /// `ω2(p, q) = +1` for `1 < q/p < 3/2`.
    pub plus_band: ScanTally,
    /// `ω2(p, q) = -1` for `2/3 < q/p ≤ 1`, interior pairs only.
    pub minus_band: ScanTally,
    /// `ω2(2^n + r, 2^m + s)`, `ω2(2^m + 2^n + r, 2^n + s)` and
    /// `ω2(2^m + r, 2^m + 2^n + s)` equal `+1` for `m > n`, `r, s < 2^n`.
    pub identities: [ScanTally; 3],
}

impl ConjectureReport {
    pub fn total_counterexamples(&self) -> u64 {
        self.plus_band.counterexamples
            + self.minus_band.counterexamples
            + self.identities.iter().map(|t| t.counterexamples).sum::<u64>()
    }
}

pub const SCAN_MAX_BOUND: usize = 1 << MAX_LEVEL;

/// Tests the ratio bands and the three power-of-two identities on every
/// interior pair below `bound`. Counterexamples are counted, not raised.
pub fn conjecture_scan(bound: usize) -> Result<ConjectureReport, Error> {
    if bound > SCAN_MAX_BOUND {
        return Err(Error::BoundTooLarge {
            bound,
            max: SCAN_MAX_BOUND,
        });
    }
    let w = |p, q| twist(TwistId::OMEGA2, p, q);
    let mut plus_band = ScanTally::default();
    let mut minus_band = ScanTally::default();
    for p in 1..bound {
        for q in 1..bound {
            if p == q {
                continue;
            }
            // Integer forms of 1 < q/p < 3/2 and 2/3 < q/p < 1.
            if p < q && 2 * q < 3 * p {
                plus_band.record(p, q, w(p, q) == Sign::Plus);
            } else if q < p && 3 * q > 2 * p {
                minus_band.record(p, q, w(p, q) == Sign::Minus);
            }
        }
    }
    let mut identities = [ScanTally::default(); 3];
    let mut m = 1;
    while bound > 1 << m {
        for n in 0..m {
            for r in 0..1usize << n {
                for s in 0..1usize << n {
                    let cases = [
                        ((1 << n) + r, (1 << m) + s),
                        ((1 << m) + (1 << n) + r, (1 << n) + s),
                        ((1 << m) + r, (1 << m) + (1 << n) + s),
                    ];
                    for (tally, (a, b)) in identities.iter_mut().zip(cases) {
                        if a < bound && b < bound {
                            tally.record(a, b, w(a, b) == Sign::Plus);
                        }
                    }
                }
            }
        }
        m += 1;
    }
    Ok(ConjectureReport {
        bound,
        plus_band,
        minus_band,
        identities,
    })
}
