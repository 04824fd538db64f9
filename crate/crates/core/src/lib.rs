//! Cayley-Dickson algebras in the shuffle basis.
//!
//! Elements of the level-`N` algebra are coefficient vectors of length `2^N`
//! over exact rationals, where the ordered pair `(x, y)` is the interleaving
//! `x0, y0, x1, y1, ...`. With this numbering the basis vectors satisfy
//! `e_{2p} = (e_p, 0)` and `e_{2p+1} = (0, e_p)`, and every product of basis
//! vectors is `e_p e_q = ω(p, q) e_{p XOR q}` for a sign function `ω`.
//!
//! The crate covers:
//!
//! - [`element`]: elements, pairing, conjugation and norms.
//! - [`product`]: the 32 candidate doubling products and recursive multiplication.
//! - [`twist`]: the eight twist functions, twist-based multiplication and sign tables.
//! - [`blocks`]: 2×2 block decomposition of twist tables.
//! - [`gate`]: the axiom suite and the elimination of 24 of the 32 candidates.
//! - [`triples`]: structure constants generated by induction rules.
//! - [`fano`]: oriented Fano plane descriptors and permutation orbits.
//! - [`tree`]: the finite automaton evaluating `ω₂`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod blocks;
pub mod element;
pub mod error;
pub mod fano;
pub mod gate;
pub mod product;
pub mod sign;
pub mod tree;
pub mod triples;
pub mod twist;

pub use element::{Element, Scalar};
pub use error::Error;
pub use product::{Levels, ProductSpec};
pub use sign::{Sign, SignedIndex};
pub use twist::{SignMatrix, TwistId};

/// Largest level an [`Element`] or sign table may have.
pub const MAX_LEVEL: u32 = 14;

/// Bitwise XOR of two basis indices; the group operation on indices.
#[inline]
pub fn xor_index(p: usize, q: usize) -> usize {
    p ^ q
}

/// Number of bits needed to write `p` (0 for `p == 0`).
#[inline]
pub(crate) fn bit_length(p: usize) -> u32 {
    usize::BITS - p.leading_zeros()
}

/// Smallest level whose basis contains `e_p`.
#[inline]
pub fn level_for_index(p: usize) -> u32 {
    bit_length(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xor_examples() {
        assert_eq!(xor_index(27, 14), 21);
        assert_eq!(xor_index(93, 37), 120);
        for p in 0..64 {
            assert_eq!(xor_index(p, 0), p);
            assert_eq!(xor_index(p, p), 0);
        }
    }

    #[test]
    fn level_for_index_is_minimal() {
        assert_eq!(level_for_index(0), 0);
        assert_eq!(level_for_index(1), 1);
        assert_eq!(level_for_index(7), 3);
        assert_eq!(level_for_index(8), 4);
        assert_eq!(level_for_index(93), 7);
    }
}
