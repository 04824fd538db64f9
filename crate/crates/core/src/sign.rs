use core::fmt;
use core::ops::{Mul, Neg};

use crate::twist::TwistId;

/// A sign `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// `±e_index`, the value of a product of two basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedIndex {
    pub sign: Sign,
    pub index: usize,
}

impl SignedIndex {
    pub fn new(sign: Sign, index: usize) -> Self {
        SignedIndex { sign, index }
    }

    pub fn plus(index: usize) -> Self {
        SignedIndex::new(Sign::Plus, index)
    }

    /// Product `(s1 e_p)(s2 e_q) = s1 s2 ω(p, q) e_{p xor q}` under twist `id`.
    pub fn compose(self, rhs: SignedIndex, id: TwistId) -> SignedIndex {
        let b = crate::twist::basis_product(id, self.index, rhs.index);
        SignedIndex::new(self.sign * rhs.sign * b.sign, b.index)
    }
}

impl Neg for SignedIndex {
    type Output = SignedIndex;
    fn neg(self) -> SignedIndex {
        SignedIndex::new(-self.sign, self.index)
    }
}

/// Formats as `+e3` / `-e120`.
impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign.is_plus() { '+' } else { '-' };
        write!(f, "{}e{}", s, self.index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_i8(-1), Some(Sign::Minus));
        assert_eq!(Sign::from_i8(0), None);
    }

    #[test]
    fn signed_index_display() {
        assert_eq!(SignedIndex::new(Sign::Minus, 120).to_string(), "-e120");
        assert_eq!(SignedIndex::plus(3).to_string(), "+e3");
    }
}
