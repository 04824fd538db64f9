//! Structure constants `(p, q, r)` meaning `e_p e_q = e_r`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::twist::{twist, TwistId};

/// Largest level accepted by [`all_triples`] and [`triples_from_twist`].
pub const TRIPLES_MAX_LEVEL: u32 = 10;

/// `e_p e_q = e_r` with `0 ≠ p ≠ q ≠ 0` and `r = p xor q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    p: usize,
    q: usize,
    r: usize,
}

impl Triple {
    /// The triple starting `(p, q, ·)`.
    pub fn new(p: usize, q: usize) -> Result<Triple, Error> {
        Triple::from_parts(p, q, p ^ q)
    }

    pub fn from_parts(p: usize, q: usize, r: usize) -> Result<Triple, Error> {
        if p == 0 || q == 0 || p == q || r != p ^ q {
            return Err(Error::InvalidTriple { p, q, r });
        }
        Ok(Triple { p, q, r })
    }

    pub fn p(self) -> usize {
        self.p
    }

    pub fn q(self) -> usize {
        self.q
    }

    pub fn r(self) -> usize {
        self.r
    }

    pub fn as_tuple(self) -> (usize, usize, usize) {
        (self.p, self.q, self.r)
    }

    /// `(q, r, p)`.
    pub fn rotate(self) -> Triple {
        Triple {
            p: self.q,
            q: self.r,
            r: self.p,
        }
    }

    /// `(q, p, r)`: the same unit product read in the opposite sense.
    pub fn reversed(self) -> Triple {
        Triple {
            p: self.q,
            q: self.p,
            r: self.r,
        }
    }

    /// The lexicographically least rotation.
    pub fn canonical(self) -> Triple {
        cyclic_closure(self).into_iter().min().expect("three rotations")
    }

    pub fn max_index(self) -> usize {
        self.p.max(self.q).max(self.r)
    }

    fn map(self, f: impl Fn(usize) -> usize) -> Triple {
        Triple {
            p: f(self.p),
            q: f(self.q),
            r: f(self.r),
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.q, self.r)
    }
}

/// `(p,q,r) → (q,r,p) → (r,p,q)`.
pub fn cyclic_closure(t: Triple) -> [Triple; 3] {
    [t, t.rotate(), t.rotate().rotate()]
}

/// `(1, 2k, 2k+1)` for the plain products, `(1, 2k+1, 2k)` for transposes,
/// for every `k > 0` with `2k+1 < 2^n`.
pub fn seed_triples(id: TwistId, n: u32) -> Vec<Triple> {
    let size = 1usize << n;
    (1..)
        .take_while(|k| 2 * k + 1 < size)
        .map(|k| {
            if id.transposed() {
                Triple { p: 1, q: 2 * k + 1, r: 2 * k }
            } else {
                Triple { p: 1, q: 2 * k, r: 2 * k + 1 }
            }
        })
        .collect()
}

/// The four triples induced one level up. Products `P_k` and `P_kT` share
/// the same rule family.
pub fn successors(id: TwistId, t: Triple) -> [Triple; 4] {
    let (p, q, r) = t.as_tuple();
    let raw = match id.base() {
        0 => [
            (2 * r, 2 * q, 2 * p),
            (2 * p, 2 * q + 1, 2 * r + 1),
            (2 * p + 1, 2 * q, 2 * r + 1),
            (2 * p + 1, 2 * q + 1, 2 * r),
        ],
        1 => [
            (2 * r, 2 * q, 2 * p),
            (2 * r + 1, 2 * q + 1, 2 * p),
            (2 * r + 1, 2 * q, 2 * p + 1),
            (2 * r, 2 * q + 1, 2 * p + 1),
        ],
        2 => [
            (2 * p, 2 * q, 2 * r),
            (2 * p, 2 * q + 1, 2 * r + 1),
            (2 * p + 1, 2 * q, 2 * r + 1),
            (2 * p + 1, 2 * q + 1, 2 * r),
        ],
        _ => [
            (2 * p, 2 * q, 2 * r),
            (2 * r + 1, 2 * q + 1, 2 * p),
            (2 * r + 1, 2 * q, 2 * p + 1),
            (2 * r, 2 * q + 1, 2 * p + 1),
        ],
    };
    raw.map(|(p, q, r)| Triple { p, q, r })
}

fn check_level(n: u32) -> Result<(), Error> {
    if n > TRIPLES_MAX_LEVEL {
        Err(Error::LevelTooLarge {
            level: n,
            max: TRIPLES_MAX_LEVEL,
        })
    } else {
        Ok(())
    }
}

/// Every structure constant of the level-`n` algebra, in canonical form,
/// generated from the seeds by the induction rules and rotation. Each
/// triple is checked against the twist before it is returned.
pub fn all_triples(id: TwistId, n: u32) -> Result<BTreeSet<Triple>, Error> {
    check_level(n)?;
    let size = 1usize << n;
    let mut seen = BTreeSet::new();
    let mut work: Vec<Triple> = seed_triples(id, n).into_iter().map(Triple::canonical).collect();
    while let Some(t) = work.pop() {
        if !seen.insert(t) {
            continue;
        }
        for rot in cyclic_closure(t) {
            for next in successors(id, rot) {
                if next.max_index() < size {
                    work.push(next.canonical());
                }
            }
        }
    }
    for t in &seen {
        if !twist(id, t.p, t.q).is_plus() {
            let (p, q, r) = t.as_tuple();
            return Err(Error::TripleMismatch { p, q, r });
        }
    }
    Ok(seen)
}

/// Canonical triples read directly off the twist: `(p, q, p xor q)` for
/// every interior pair with `ω(p, q) = +1`.
pub fn triples_from_twist(id: TwistId, n: u32) -> Result<BTreeSet<Triple>, Error> {
    check_level(n)?;
    let size = 1usize << n;
    let mut out = BTreeSet::new();
    for p in 1..size {
        for q in 1..size {
            if p != q && twist(id, p, q).is_plus() {
                out.insert(Triple { p, q, r: p ^ q }.canonical());
            }
        }
    }
    Ok(out)
}

/// Applies a permutation of `1..=7` given in cycle notation.
pub(crate) fn permute(t: Triple, cycle: &[usize; 7]) -> Triple {
    t.map(|x| {
        let i = cycle.iter().position(|&c| c == x).expect("index in 1..=7");
        cycle[(i + 1) % 7]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: usize, q: usize, r: usize) -> Triple {
        Triple::from_parts(p, q, r).unwrap()
    }

    fn set(list: &[(usize, usize, usize)]) -> BTreeSet<Triple> {
        list.iter().map(|&(p, q, r)| t(p, q, r).canonical()).collect()
    }

    fn id(k: u8, tr: bool) -> TwistId {
        TwistId::new(k, tr).unwrap()
    }

    #[test]
    fn construction_rules() {
        assert!(Triple::from_parts(1, 2, 4).is_err());
        assert!(Triple::new(0, 3).is_err());
        assert!(Triple::new(3, 3).is_err());
        assert_eq!(Triple::new(93, 37).unwrap().r(), 120);
    }

    #[test]
    fn rotations_and_canonical_form() {
        let c = cyclic_closure(t(7, 2, 5));
        assert_eq!(c, [t(7, 2, 5), t(2, 5, 7), t(5, 7, 2)]);
        assert_eq!(t(5, 7, 2).canonical(), t(2, 5, 7));
        for x in c {
            assert_eq!(x.canonical(), t(2, 5, 7));
            let mut a: Vec<_> = cyclic_closure(x).to_vec();
            let mut b: Vec<_> = c.to_vec();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn seeds() {
        assert_eq!(seed_triples(id(0, false), 3), [t(1, 2, 3), t(1, 4, 5), t(1, 6, 7)]);
        assert_eq!(seed_triples(id(0, true), 3), [t(1, 3, 2), t(1, 5, 4), t(1, 7, 6)]);
        assert!(seed_triples(TwistId::OMEGA2, 1).is_empty());
        assert_eq!(seed_triples(TwistId::OMEGA2, 2), [t(1, 2, 3)]);
    }

    #[test]
    fn successor_examples() {
        let got: BTreeSet<Triple> = successors(id(0, false), t(1, 2, 3))
            .iter()
            .map(|x| x.canonical())
            .collect();
        assert_eq!(got, set(&[(2, 6, 4), (2, 5, 7), (6, 3, 5), (4, 7, 3)]));
        assert!(successors(TwistId::OMEGA2, t(1, 2, 3)).contains(&t(2, 4, 6)));
        for k in TwistId::ALL {
            for x in successors(k, t(3, 5, 6)) {
                assert_eq!(x.r(), x.p() ^ x.q());
            }
        }
    }

    #[test]
    fn octonion_lists() {
        let p0 = all_triples(id(0, false), 3).unwrap();
        assert_eq!(p0, set(&[(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 6, 4), (7, 2, 5), (5, 6, 3), (3, 4, 7)]));
        let p3t = all_triples(id(3, true), 3).unwrap();
        assert_eq!(p3t, set(&[(1, 3, 2), (1, 5, 4), (1, 7, 6), (2, 6, 4), (5, 7, 2), (7, 3, 4), (3, 5, 6)]));
    }

    #[test]
    fn rules_agree_with_twist() {
        for k in TwistId::ALL {
            for n in 0..=6 {
                assert_eq!(all_triples(k, n).unwrap(), triples_from_twist(k, n).unwrap(), "{k} n={n}");
            }
            assert_eq!(all_triples(k, 4).unwrap().len(), 35);
        }
    }

    #[test]
    fn transposes_reverse_triples() {
        for base in 0..4 {
            let plain = all_triples(id(base, false), 3).unwrap();
            let reversed: BTreeSet<Triple> = plain.iter().map(|x| x.reversed().canonical()).collect();
            assert_eq!(all_triples(id(base, true), 3).unwrap(), reversed);
        }
    }

    #[test]
    fn one_orientation_per_unordered_pair() {
        for k in TwistId::ALL {
            let all = all_triples(k, 4).unwrap();
            for p in 1..16 {
                for q in (p + 1)..16 {
                    let fwd = all.contains(&t(p, q, p ^ q).canonical());
                    let back = all.contains(&t(q, p, p ^ q).canonical());
                    assert!(fwd ^ back, "{k} ({p},{q})");
                }
            }
        }
    }

    #[test]
    fn level_limit() {
        assert!(all_triples(TwistId::OMEGA2, TRIPLES_MAX_LEVEL + 1).is_err());
    }
}
