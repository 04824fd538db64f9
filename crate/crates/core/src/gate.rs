//! Which of the 32 candidate doubling products give Cayley-Dickson algebras.
//!
//! All 32 candidates satisfy the unit, involution, norm, square and
//! anti-symmetry laws. The quaternion property (`e_p e_q = e_r` implies
//! `e_q e_r = e_p` and `e_r e_p = e_q`) rejects 24 of them: half fail on the
//! initial interior points `(2s,1)`, `(1,2s+1)`, `(2s+1,2s)`, and eight more
//! fail further inside.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::error::Error;
use crate::product::{self, as_signed_basis, candidates, ProductSpec};
use crate::sign::{Sign, SignedIndex};
use crate::triples::Triple;

pub use crate::product::candidates as all_candidates;

/// Number of random elements per level in [`axiom_check`].
pub const RANDOM_SAMPLES: usize = 50;
/// Highest level [`axiom_check`] accepts.
pub const AXIOM_MAX_LEVEL: u32 = 4;
pub const DEFAULT_S_MAX: usize = 8;
pub const DEFAULT_GATE_LEVEL: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// `1·x = x·1 = x`
    Unit,
    /// `x + x*` is real
    ConjugateSum,
    /// `x x* = x* x = ‖x‖²`
    ConjugateProduct,
    /// `(xy)* = y* x*`
    ProductConjugate,
    /// `e_p² = -1` for `p > 0`
    VectorSquare,
    /// `e_p e_q + e_q e_p = 0` for `0 ≠ p ≠ q ≠ 0`
    AntiSymmetry,
    /// `e_p e_q = ±e_{p xor q}`
    Closure,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [
        Axiom::Unit,
        Axiom::ConjugateSum,
        Axiom::ConjugateProduct,
        Axiom::ProductConjugate,
        Axiom::VectorSquare,
        Axiom::AntiSymmetry,
        Axiom::Closure,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Axiom::Unit => "unit",
            Axiom::ConjugateSum => "conjugate-sum",
            Axiom::ConjugateProduct => "conjugate-product",
            Axiom::ProductConjugate => "product-conjugate",
            Axiom::VectorSquare => "vector-square",
            Axiom::AntiSymmetry => "anti-symmetry",
            Axiom::Closure => "closure",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AxiomTally {
    pub checks: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub spec: ProductSpec,
    pub level: u32,
    /// Indexed like [`Axiom::ALL`].
    pub tallies: [AxiomTally; 7],
}

impl AxiomReport {
    pub fn tally(&self, axiom: Axiom) -> AxiomTally {
        self.tallies[axiom as usize]
    }

    pub fn passed(&self) -> bool {
        self.tallies.iter().all(|t| t.failures == 0 && t.checks > 0)
    }

    fn record(&mut self, axiom: Axiom, ok: bool) {
        let t = &mut self.tallies[axiom as usize];
        t.checks += 1;
        if !ok {
            t.failures += 1;
        }
    }
}

/// Checks the unit, involution, norm, square, anti-symmetry and closure
/// laws on every basis vector (and pair) and on [`RANDOM_SAMPLES`] random
/// elements at each level `0..=n`.
pub fn axiom_check<R: Rng + ?Sized>(
    spec: ProductSpec,
    n: u32,
    rng: &mut R,
) -> Result<AxiomReport, Error> {
    if n > AXIOM_MAX_LEVEL {
        return Err(Error::LevelTooLarge {
            level: n,
            max: AXIOM_MAX_LEVEL,
        });
    }
    let mut report = AxiomReport {
        spec,
        level: n,
        tallies: Default::default(),
    };
    for level in 0..=n {
        let one = Element::one(level)?;
        let minus_one = -&one;
        let basis: Vec<Element> = (0..1usize << level)
            .map(|p| Element::basis(p, level))
            .collect::<Result<_, _>>()?;
        for (p, x) in basis.iter().enumerate() {
            single_element_laws(&mut report, spec, x, &one)?;
            if p > 0 {
                report.record(Axiom::VectorSquare, product::mul(spec, x, x)? == minus_one);
            }
            for (q, y) in basis.iter().enumerate() {
                let xy = product::mul(spec, x, y)?;
                report.record(
                    Axiom::ProductConjugate,
                    xy.conj() == product::mul(spec, &y.conj(), &x.conj())?,
                );
                report.record(
                    Axiom::Closure,
                    matches!(as_signed_basis(&xy), Some(s) if s.index == p ^ q),
                );
                if p != 0 && q != 0 && p != q {
                    let yx = product::mul(spec, y, x)?;
                    report.record(Axiom::AntiSymmetry, (&xy + &yx).is_zero());
                }
            }
        }
        for _ in 0..RANDOM_SAMPLES {
            let x = Element::random(rng, level)?;
            let y = Element::random(rng, level)?;
            single_element_laws(&mut report, spec, &x, &one)?;
            report.record(
                Axiom::ProductConjugate,
                product::mul(spec, &x, &y)?.conj() == product::mul(spec, &y.conj(), &x.conj())?,
            );
        }
    }
    Ok(report)
}

/// [`axiom_check`] with a ChaCha8 generator seeded from `seed`.
pub fn axiom_check_seeded(spec: ProductSpec, n: u32, seed: u64) -> Result<AxiomReport, Error> {
    axiom_check(spec, n, &mut ChaCha8Rng::seed_from_u64(seed))
}

fn single_element_laws(
    report: &mut AxiomReport,
    spec: ProductSpec,
    x: &Element,
    one: &Element,
) -> Result<(), Error> {
    let unit = product::mul(spec, one, x)? == *x && product::mul(spec, x, one)? == *x;
    report.record(Axiom::Unit, unit);
    report.record(Axiom::ConjugateSum, (x + &x.conj()).is_real());
    let norm = one.scale(&x.norm_sq());
    let ok = product::mul(spec, x, &x.conj())? == norm && product::mul(spec, &x.conj(), x)? == norm;
    report.record(Axiom::ConjugateProduct, ok);
    Ok(())
}

/// The two mutually exclusive ways the initial interior points can satisfy
/// the quaternion property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QOption {
    /// `(2s,1,2s+1)`, `(1,2s+1,2s)`, `(2s+1,2s,1)`
    Q,
    /// `(1,2s,2s+1)`, `(2s,2s+1,1)`, `(2s+1,1,2s)`
    QT,
}

impl fmt::Display for QOption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QOption::Q => "Q",
            QOption::QT => "QT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScreenResult {
    pub spec: ProductSpec,
    pub s_max: usize,
    /// Conditions of option Q that hold.
    pub q_hits: BTreeSet<Triple>,
    /// Conditions of option QT that hold.
    pub qt_hits: BTreeSet<Triple>,
    /// True iff all hits belong to a single option.
    pub pass: bool,
}

impl ScreenResult {
    /// The options that have at least one hit.
    pub fn options(&self) -> Vec<QOption> {
        let mut v = Vec::new();
        if !self.q_hits.is_empty() {
            v.push(QOption::Q);
        }
        if !self.qt_hits.is_empty() {
            v.push(QOption::QT);
        }
        v
    }
}

fn doubling_product(spec: ProductSpec, p: usize, q: usize) -> Result<SignedIndex, Error> {
    product::basis_product(spec, p, q)?
        .filter(|s| s.index == p ^ q)
        .ok_or(Error::Unsupported("basis product is not ±e_(p xor q)"))
}

/// Evaluates `e_{2s} e_1`, `e_1 e_{2s+1}` and `e_{2s+1} e_{2s}` with the
/// doubling product for `s = 1..=s_max` and sorts the resulting triples
/// into options Q and QT.
pub fn initial_screen(spec: ProductSpec, s_max: usize) -> Result<ScreenResult, Error> {
    if s_max == 0 {
        return Err(Error::Unsupported("s_max must be at least 1"));
    }
    let mut q_hits = BTreeSet::new();
    let mut qt_hits = BTreeSet::new();
    for s in 1..=s_max {
        let (even, odd) = (2 * s, 2 * s + 1);
        // (left, right, triple in Q if +, triple in QT if -)
        let probes = [
            (even, 1, (even, 1, odd), (1, even, odd)),
            (1, odd, (1, odd, even), (odd, 1, even)),
            (odd, even, (odd, even, 1), (even, odd, 1)),
        ];
        for (left, right, plus, minus) in probes {
            let prod = doubling_product(spec, left, right)?;
            match prod.sign {
                Sign::Plus => q_hits.insert(Triple::from_parts(plus.0, plus.1, plus.2)?),
                Sign::Minus => qt_hits.insert(Triple::from_parts(minus.0, minus.1, minus.2)?),
            };
        }
    }
    let pass = q_hits.is_empty() || qt_hits.is_empty();
    Ok(ScreenResult {
        spec,
        s_max,
        q_hits,
        qt_hits,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// `e_p e_q` is not `±e_{p xor q}`.
    NotSignedBasis,
    /// `e_p e_q = e_r` but `e_q e_r ≠ e_p`.
    SecondRotation,
    /// `e_p e_q = e_r` but `e_r e_p ≠ e_q`.
    ThirdRotation,
}

impl ViolationKind {
    pub fn label(self) -> &'static str {
        match self {
            ViolationKind::NotSignedBasis => "not-signed-basis",
            ViolationKind::SecondRotation => "second-rotation",
            ViolationKind::ThirdRotation => "third-rotation",
        }
    }
}

/// The lexicographically first interior pair at which the quaternion
/// property fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub spec: ProductSpec,
    pub p: usize,
    pub q: usize,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.p ^ self.q;
        match self.kind {
            ViolationKind::NotSignedBasis => {
                write!(f, "e{} e{} is not ±e{}", self.p, self.q, r)
            }
            ViolationKind::SecondRotation => write!(
                f,
                "e{} e{} = e{} but e{} e{} != e{}",
                self.p, self.q, r, self.q, r, self.p
            ),
            ViolationKind::ThirdRotation => write!(
                f,
                "e{} e{} = e{} but e{} e{} != e{}",
                self.p, self.q, r, r, self.p, self.q
            ),
        }
    }
}

/// Exhaustive quaternion-property check over every interior pair
/// `p, q < 2^n`, using the doubling product. Cost grows like `8^n`.
pub fn quaternion_check(spec: ProductSpec, n: u32) -> Result<(), Violation> {
    let size = 1usize << n;
    let basis: Vec<Element> = (0..size)
        .map(|p| Element::basis(p, n).expect("level within range"))
        .collect();
    let mut table: Vec<Option<SignedIndex>> = Vec::with_capacity(size * size);
    for x in &basis {
        for y in &basis {
            let xy = product::mul(spec, x, y).expect("equal levels");
            table.push(as_signed_basis(&xy));
        }
    }
    let at = |p: usize, q: usize| table[p * size + q];
    let violation = |p, q, kind| Violation { spec, p, q, kind };
    for p in 1..size {
        for q in 1..size {
            if p == q {
                continue;
            }
            let r = p ^ q;
            let prod = match at(p, q) {
                Some(s) if s.index == r => s,
                _ => return Err(violation(p, q, ViolationKind::NotSignedBasis)),
            };
            if !prod.sign.is_plus() {
                continue;
            }
            if at(q, r) != Some(SignedIndex::plus(p)) {
                return Err(violation(p, q, ViolationKind::SecondRotation));
            }
            if at(r, p) != Some(SignedIndex::plus(q)) {
                return Err(violation(p, q, ViolationKind::ThirdRotation));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationRecord {
    pub spec: ProductSpec,
    pub screen: ScreenResult,
    /// `None` when the candidate was already rejected by the screen.
    pub gate: Option<Result<(), Violation>>,
}

impl EliminationRecord {
    pub fn gate_pass(&self) -> bool {
        matches!(self.gate, Some(Ok(())))
    }

    pub fn violation(&self) -> Option<Violation> {
        match self.gate {
            Some(Err(v)) => Some(v),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationReport {
    pub s_max: usize,
    pub level: u32,
    /// One record per candidate, `f`-major.
    pub records: Vec<EliminationRecord>,
}

impl EliminationReport {
    pub fn screen_survivors(&self) -> Vec<ProductSpec> {
        self.records
            .iter()
            .filter(|r| r.screen.pass)
            .map(|r| r.spec)
            .collect()
    }

    pub fn final_survivors(&self) -> Vec<ProductSpec> {
        self.records
            .iter()
            .filter(|r| r.gate_pass())
            .map(|r| r.spec)
            .collect()
    }

    /// True iff the survivors are exactly `P0..P3, P0T..P3T`.
    pub fn survivors_are_the_valid_eight(&self) -> bool {
        let mut got = self.final_survivors();
        got.sort();
        let mut want = ProductSpec::VALID.to_vec();
        want.sort();
        got == want
    }

    pub fn record(&self, spec: ProductSpec) -> Option<&EliminationRecord> {
        self.records.iter().find(|r| r.spec == spec)
    }
}

/// Screens all 32 candidates, then runs [`quaternion_check`] at level `n` on
/// the survivors.
pub fn elimination_report(s_max: usize, n: u32) -> Result<EliminationReport, Error> {
    let records = candidates()
        .into_iter()
        .map(|spec| {
            let screen = initial_screen(spec, s_max)?;
            let gate = screen.pass.then(|| quaternion_check(spec, n));
            Ok(EliminationRecord { spec, screen, gate })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(EliminationReport {
        s_max,
        level: n,
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: u8, g: u8) -> ProductSpec {
        ProductSpec::new(f, g).unwrap()
    }

    #[test]
    fn axioms_hold_for_sample_candidates() {
        for s in [spec(2, 2), ProductSpec::P0, spec(7, 0)] {
            let report = axiom_check_seeded(s, 3, 11).unwrap();
            assert!(report.passed(), "{s}: {report:?}");
            assert!(report.tally(Axiom::ConjugateProduct).checks >= RANDOM_SAMPLES);
        }
        assert!(axiom_check_seeded(ProductSpec::P0, 5, 1).is_err());
    }

    #[test]
    fn screen_examples() {
        for f in 0..8 {
            for g in 2..4 {
                // e_{2s} e_1 = +e_{2s+1}: the Q condition (2s,1,2s+1).
                let r = initial_screen(spec(f, g), 3).unwrap();
                for s in 1..=3 {
                    assert!(r.q_hits.contains(&Triple::new(2 * s, 1).unwrap()));
                }
            }
        }
        let r = initial_screen(spec(0, 0), 8).unwrap();
        assert!(r.pass && r.q_hits.is_empty() && !r.qt_hits.is_empty());
        let r = initial_screen(spec(4, 0), 8).unwrap();
        assert!(!r.pass && !r.q_hits.is_empty() && !r.qt_hits.is_empty());
        assert!(initial_screen(spec(0, 0), 0).is_err());
    }

    #[test]
    fn screen_keeps_sixteen() {
        let survivors: Vec<_> = candidates()
            .into_iter()
            .filter(|&s| initial_screen(s, DEFAULT_S_MAX).unwrap().pass)
            .collect();
        let expected: Vec<_> = candidates()
            .into_iter()
            .filter(|s| (s.f_index() < 4) == (s.g_index() < 2))
            .collect();
        assert_eq!(survivors, expected);
    }

    #[test]
    fn quaternion_gate_examples() {
        assert_eq!(quaternion_check(ProductSpec::P2, 5), Ok(()));
        let v = quaternion_check(spec(1, 0), 3).unwrap_err();
        assert_eq!((v.p, v.q), (2, 5));
        assert_eq!(v.kind, ViolationKind::SecondRotation);
        for s in candidates() {
            let result = quaternion_check(s, 4);
            assert_eq!(result.is_ok(), s.is_valid(), "{s}");
        }
    }

    #[test]
    fn violation_is_lexicographically_minimal() {
        for s in candidates().into_iter().filter(|s| !s.is_valid()) {
            let v = quaternion_check(s, 4).unwrap_err();
            // No smaller pair fails at any level that contains it.
            let small = quaternion_check(s, crate::level_for_index(v.p.max(v.q)) - 1);
            assert!(small.is_ok() || small.unwrap_err() == v, "{s}");
            assert_eq!(quaternion_check(s, 3), Err(v));
        }
    }

    #[test]
    fn elimination_reduces_to_eight() {
        let report = elimination_report(DEFAULT_S_MAX, DEFAULT_GATE_LEVEL).unwrap();
        assert_eq!(report.records.len(), 32);
        assert_eq!(report.screen_survivors().len(), 16);
        assert!(report.survivors_are_the_valid_eight());
        assert_eq!(report, elimination_report(DEFAULT_S_MAX, DEFAULT_GATE_LEVEL).unwrap());
    }

    #[test]
    fn gate_implies_screen() {
        for s in candidates() {
            if quaternion_check(s, 5).is_ok() {
                assert!(initial_screen(s, 16).unwrap().pass, "{s}");
            }
        }
    }

    #[test]
    fn exactly_one_orientation_per_interior_pair() {
        for s in ProductSpec::VALID {
            let table = product::sign_table(s, 4).unwrap();
            for p in 1..16 {
                for q in 1..16 {
                    if p != q {
                        assert!(table.get(p, q).is_plus() ^ table.get(q, p).is_plus());
                    }
                }
            }
        }
    }
}
