//! Elements of a Cayley-Dickson algebra in the shuffle basis.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::Error;
use crate::MAX_LEVEL;

/// Exact rational coefficient.
pub type Scalar = BigRational;

/// An element of the level-`N` algebra: `2^N` rational coefficients, where
/// `coeffs[p]` is the coefficient of `e_p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    level: u32,
    coeffs: Vec<Scalar>,
}

fn check_level(level: u32) -> Result<(), Error> {
    if level > MAX_LEVEL {
        Err(Error::LevelTooLarge { level, max: MAX_LEVEL })
    } else {
        Ok(())
    }
}

impl Element {
    pub fn zero(level: u32) -> Result<Element, Error> {
        check_level(level)?;
        Ok(Element {
            level,
            coeffs: vec![Scalar::zero(); 1 << level],
        })
    }

    /// The unit `1 = e_0` at the given level.
    pub fn one(level: u32) -> Result<Element, Error> {
        Element::basis(0, level)
    }

    /// A level-0 element.
    pub fn scalar(value: Scalar) -> Element {
        Element {
            level: 0,
            coeffs: vec![value],
        }
    }

    /// The basis vector `e_p` of the level-`level` algebra.
    pub fn basis(p: usize, level: u32) -> Result<Element, Error> {
        let mut z = Element::zero(level)?;
        if p >= z.coeffs.len() {
            return Err(Error::IndexOutOfRange { index: p, level });
        }
        z.coeffs[p] = Scalar::one();
        Ok(z)
    }

    /// Wraps a coefficient vector whose length must be `2^level`.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Result<Element, Error> {
        let len = coeffs.len();
        if !len.is_power_of_two() {
            return Err(Error::BadLength { len });
        }
        let level = len.trailing_zeros();
        check_level(level)?;
        Ok(Element { level, coeffs })
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Result<Element, Error> {
        Element::from_coeffs(
            coeffs
                .iter()
                .map(|&c| Scalar::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, p: usize) -> Option<&Scalar> {
        self.coeffs.get(p)
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True if every coefficient except the real part vanishes.
    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The ordered pair `(x, y)`, i.e. the shuffle `x0, y0, x1, y1, ...`.
    pub fn pair(x: &Element, y: &Element) -> Result<Element, Error> {
        if x.level != y.level {
            return Err(Error::LevelMismatch {
                left: x.level,
                right: y.level,
            });
        }
        check_level(x.level + 1)?;
        Ok(Element {
            level: x.level + 1,
            coeffs: interleave(&x.coeffs, &y.coeffs),
        })
    }

    /// Inverse of [`Element::pair`]: even coefficients first, odd second.
    pub fn split(&self) -> Result<(Element, Element), Error> {
        if self.level == 0 {
            return Err(Error::SplitScalar);
        }
        let (a, b) = deinterleave(&self.coeffs);
        let level = self.level - 1;
        Ok((Element { level, coeffs: a }, Element { level, coeffs: b }))
    }

    /// The involution `x* = x0, -x1, -x2, ...`.
    pub fn conj(&self) -> Element {
        Element {
            level: self.level,
            coeffs: conj_coeffs(&self.coeffs),
        }
    }

    /// Sum of squared coefficients, `‖x‖²`.
    pub fn norm_sq(&self) -> Scalar {
        self.coeffs
            .iter()
            .fold(Scalar::zero(), |acc, c| acc + c * c)
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        Element {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Zero-pads to a larger level. The level-`N` algebra sits inside the
    /// level-`N+1` algebra as the span of its first `2^N` basis vectors.
    pub fn promote(&self, level: u32) -> Result<Element, Error> {
        if level < self.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: level,
            });
        }
        let mut z = Element::zero(level)?;
        for (dst, src) in z.coeffs.iter_mut().zip(&self.coeffs) {
            dst.clone_from(src);
        }
        Ok(z)
    }

    /// Random element with small rational coefficients `n/d`,
    /// `n` in `-9..=9` and `d` in `1..=4`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, level: u32) -> Result<Element, Error> {
        check_level(level)?;
        let coeffs = (0..1usize << level)
            .map(|_| {
                let n: i64 = rng.gen_range(-9..=9);
                let d: i64 = rng.gen_range(1..=4);
                Scalar::new(BigInt::from(n), BigInt::from(d))
            })
            .collect();
        Ok(Element { level, coeffs })
    }

    fn assert_same_level(&self, other: &Element) {
        assert_eq!(
            self.level, other.level,
            "element arithmetic needs equal levels"
        );
    }
}

pub(crate) fn interleave(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * 2);
    for (a, b) in x.iter().zip(y) {
        out.push(a.clone());
        out.push(b.clone());
    }
    out
}

pub(crate) fn deinterleave(z: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let even = z.iter().step_by(2).cloned().collect();
    let odd = z.iter().skip(1).step_by(2).cloned().collect();
    (even, odd)
}

pub(crate) fn conj_coeffs(x: &[Scalar]) -> Vec<Scalar> {
    x.iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.clone() } else { -c })
        .collect()
}

impl Add for &Element {
    type Output = Element;

    /// Panics if the levels differ.
    fn add(self, rhs: &Element) -> Element {
        self.assert_same_level(rhs);
        Element {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;

    /// Panics if the levels differ.
    fn sub(self, rhs: &Element) -> Element {
        self.assert_same_level(rhs);
        Element {
            level: self.level,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn int(v: i64) -> Scalar {
        Scalar::from_integer(BigInt::from(v))
    }

    #[test]
    fn basis_examples() {
        assert_eq!(Element::basis(0, 0).unwrap(), Element::scalar(int(1)));
        let z2 = Element::zero(2).unwrap();
        let z1 = Element::zero(1).unwrap();
        assert_eq!(
            Element::basis(6, 3).unwrap(),
            Element::pair(&Element::basis(3, 2).unwrap(), &z2).unwrap()
        );
        assert_eq!(
            Element::basis(3, 2).unwrap(),
            Element::pair(&z1, &Element::basis(1, 1).unwrap()).unwrap()
        );
    }

    #[test]
    fn basis_recursion_holds_for_every_index() {
        for level in 1..=5u32 {
            let z = Element::zero(level - 1).unwrap();
            for p in 0..(1usize << (level - 1)) {
                let ep = Element::basis(p, level - 1).unwrap();
                assert_eq!(Element::basis(2 * p, level).unwrap(), Element::pair(&ep, &z).unwrap());
                assert_eq!(
                    Element::basis(2 * p + 1, level).unwrap(),
                    Element::pair(&z, &ep).unwrap()
                );
            }
        }
    }

    #[test]
    fn basis_out_of_range() {
        assert_eq!(
            Element::basis(4, 2),
            Err(Error::IndexOutOfRange { index: 4, level: 2 })
        );
        assert!(matches!(Element::zero(MAX_LEVEL + 1), Err(Error::LevelTooLarge { .. })));
    }

    #[test]
    fn pair_shuffles() {
        let x = Element::from_ints(&[1, 2]).unwrap();
        let y = Element::from_ints(&[3, 4]).unwrap();
        assert_eq!(
            Element::pair(&x, &y).unwrap(),
            Element::from_ints(&[1, 3, 2, 4]).unwrap()
        );
        assert_eq!(
            Element::pair(&Element::basis(1, 1).unwrap(), &Element::zero(1).unwrap()).unwrap(),
            Element::basis(2, 2).unwrap()
        );
        assert_eq!(
            Element::pair(&Element::zero(0).unwrap(), &Element::scalar(int(1))).unwrap(),
            Element::basis(1, 1).unwrap()
        );
        assert!(matches!(
            Element::pair(&x, &Element::zero(2).unwrap()),
            Err(Error::LevelMismatch { left: 1, right: 2 })
        ));
    }

    #[test]
    fn split_examples() {
        let (a, b) = Element::basis(6, 3).unwrap().split().unwrap();
        assert_eq!(a, Element::basis(3, 2).unwrap());
        assert_eq!(b, Element::zero(2).unwrap());
        let (a, b) = Element::basis(7, 3).unwrap().split().unwrap();
        assert_eq!(a, Element::zero(2).unwrap());
        assert_eq!(b, Element::basis(3, 2).unwrap());
        assert_eq!(Element::scalar(int(3)).split(), Err(Error::SplitScalar));
    }

    #[test]
    fn conj_examples() {
        let e0 = Element::basis(0, 3).unwrap();
        assert_eq!(e0.conj(), e0);
        let e5 = Element::basis(5, 3).unwrap();
        assert_eq!(e5.conj(), -&e5);
    }

    #[test]
    fn norm_examples() {
        for p in 0..8 {
            assert_eq!(Element::basis(p, 3).unwrap().norm_sq(), int(1));
        }
        assert_eq!(Element::zero(3).unwrap().norm_sq(), int(0));
        assert_eq!(Element::from_ints(&[1, 2, 3, 4]).unwrap().norm_sq(), int(30));
    }

    #[test]
    fn from_coeffs_rejects_bad_length() {
        assert_eq!(
            Element::from_ints(&[1, 2, 3]),
            Err(Error::BadLength { len: 3 })
        );
    }

    #[test]
    fn promote_pads_with_zeros() {
        let x = Element::from_ints(&[1, 2]).unwrap();
        assert_eq!(x.promote(2).unwrap(), Element::from_ints(&[1, 2, 0, 0]).unwrap());
        assert!(x.promote(0).is_err());
    }

    proptest! {
        #[test]
        fn pair_split_round_trip(seed in any::<u64>(), level in 0u32..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = Element::random(&mut rng, level).unwrap();
            let y = Element::random(&mut rng, level).unwrap();
            let z = Element::pair(&x, &y).unwrap();
            prop_assert_eq!(z.split().unwrap(), (x, y));
            let (a, b) = z.split().unwrap();
            prop_assert_eq!(Element::pair(&a, &b).unwrap(), z);
        }

        #[test]
        fn conj_is_an_involution_and_respects_pairs(seed in any::<u64>(), level in 0u32..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = Element::random(&mut rng, level).unwrap();
            let y = Element::random(&mut rng, level).unwrap();
            prop_assert_eq!(x.conj().conj(), x.clone());
            prop_assert!((&x + &x.conj()).is_real());
            prop_assert_eq!(
                Element::pair(&x, &y).unwrap().conj(),
                Element::pair(&x.conj(), &-&y).unwrap()
            );
        }

        #[test]
        fn norm_is_nonnegative_and_definite(seed in any::<u64>(), level in 0u32..5) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let x = Element::random(&mut rng, level).unwrap();
            let n = x.norm_sq();
            prop_assert!(n >= Scalar::zero());
            prop_assert_eq!(n.is_zero(), x.is_zero());
        }
    }
}
