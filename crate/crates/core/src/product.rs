//! The 32 candidate doubling products and recursive multiplication.
//!
//! A doubling product defines `(a,b)(c,d) = (f(a,b,c,d), g(a,b,c,d))` where
//! `f` is one of eight binomials `f0..f7` and `g` one of four binomials
//! `g0..g3`. Every product inside `f` and `g` is computed recursively with
//! the same doubling product.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::Zero;

use crate::element::{conj_coeffs, deinterleave, interleave, Element, Scalar};
use crate::error::Error;
use crate::sign::{Sign, SignedIndex};
use crate::twist::{SignMatrix, TwistId};
use crate::{bit_length, MAX_LEVEL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Operand {
    A,
    B,
    C,
    D,
    AStar,
    BStar,
    CStar,
    DStar,
}

/// An ordered product of two operands, `left * right`.
#[derive(Debug, Clone, Copy)]
struct Term(Operand, Operand);

use Operand::*;

/// `f_i = first - second`.
const F_BINOMIALS: [(Term, Term); 8] = [
    (Term(C, A), Term(BStar, D)), // ca - b*d
    (Term(C, A), Term(D, BStar)), // ca - db*
    (Term(A, C), Term(BStar, D)), // ac - b*d
    (Term(A, C), Term(D, BStar)), // ac - db*
    (Term(C, A), Term(B, DStar)), // ca - bd*
    (Term(C, A), Term(DStar, B)), // ca - d*b
    (Term(A, C), Term(B, DStar)), // ac - bd*
    (Term(A, C), Term(DStar, B)), // ac - d*b
];

/// `g_j = first + second`.
const G_BINOMIALS: [(Term, Term); 4] = [
    (Term(D, AStar), Term(B, C)), // da* + bc
    (Term(AStar, D), Term(C, B)), // a*d + cb
    (Term(A, D), Term(CStar, B)), // ad + c*b
    (Term(D, A), Term(B, CStar)), // da + bc*
];

/// One of the 32 candidate doubling products `(f_i, g_j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSpec {
    f: u8,
    g: u8,
}

impl ProductSpec {
    pub const P0: ProductSpec = ProductSpec { f: 0, g: 0 };
    pub const P1: ProductSpec = ProductSpec { f: 1, g: 1 };
    pub const P2: ProductSpec = ProductSpec { f: 2, g: 0 };
    pub const P3: ProductSpec = ProductSpec { f: 3, g: 1 };
    pub const P0T: ProductSpec = ProductSpec { f: 4, g: 2 };
    pub const P1T: ProductSpec = ProductSpec { f: 5, g: 3 };
    pub const P2T: ProductSpec = ProductSpec { f: 6, g: 2 };
    pub const P3T: ProductSpec = ProductSpec { f: 7, g: 3 };

    /// The eight products that satisfy the quaternion property, in the
    /// order `P0..P3, P0T..P3T`.
    pub const VALID: [ProductSpec; 8] = [
        Self::P0,
        Self::P1,
        Self::P2,
        Self::P3,
        Self::P0T,
        Self::P1T,
        Self::P2T,
        Self::P3T,
    ];

    const NAMES: [&'static str; 8] = ["P0", "P1", "P2", "P3", "P0T", "P1T", "P2T", "P3T"];

    pub fn new(f: u8, g: u8) -> Result<ProductSpec, Error> {
        if f < 8 && g < 4 {
            Ok(ProductSpec { f, g })
        } else {
            Err(Error::InvalidProduct { f, g })
        }
    }

    pub fn f_index(self) -> u8 {
        self.f
    }

    pub fn g_index(self) -> u8 {
        self.g
    }

    fn valid_position(self) -> Option<usize> {
        Self::VALID.iter().position(|&v| v == self)
    }

    pub fn is_valid(self) -> bool {
        self.valid_position().is_some()
    }

    /// `P0`..`P3T` for the eight valid products.
    pub fn name(self) -> Option<&'static str> {
        self.valid_position().map(|i| Self::NAMES[i])
    }

    /// The twist function of a valid product.
    pub fn twist_id(self) -> Option<TwistId> {
        self.valid_position()
            .map(|i| TwistId::new((i % 4) as u8, i >= 4).expect("base < 4"))
    }

    /// Like [`ProductSpec::twist_id`], but an error for the 24 invalid products.
    pub fn require_valid(self) -> Result<TwistId, Error> {
        self.twist_id().ok_or(Error::NotValidProduct {
            f: self.f,
            g: self.g,
        })
    }

    pub fn mul(self, x: &Element, y: &Element) -> Result<Element, Error> {
        mul(self, x, y)
    }
}

/// All 32 candidates, `f`-major.
pub fn candidates() -> Vec<ProductSpec> {
    (0..8u8)
        .flat_map(|f| (0..4u8).map(move |g| ProductSpec { f, g }))
        .collect()
}

impl fmt::Display for ProductSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "f{}g{}", self.f, self.g),
        }
    }
}

/// Accepts `P0`..`P3`, `P0T`..`P3T` and raw `f<i>g<j>` spellings,
/// case-insensitively.
impl FromStr for ProductSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductSpec, Error> {
        let unknown = || Error::UnknownProduct(String::from(s));
        let lower = s.trim().to_ascii_lowercase();
        let bytes = lower.as_bytes();
        match bytes {
            [b'p', k @ b'0'..=b'3'] => Ok(Self::VALID[(k - b'0') as usize]),
            [b'p', k @ b'0'..=b'3', b't'] => Ok(Self::VALID[4 + (k - b'0') as usize]),
            [b'f', f @ b'0'..=b'9', b'g', g @ b'0'..=b'9'] => {
                ProductSpec::new(f - b'0', g - b'0').map_err(|_| unknown())
            }
            _ => Err(unknown()),
        }
    }
}

/// How [`mul_with`] treats operands of different levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Levels {
    /// Unequal levels are an error.
    #[default]
    Strict,
    /// The smaller operand is zero-padded to the larger level.
    Promote,
}

/// Equalizes operand levels according to `levels`.
pub(crate) fn align<'a>(
    x: &'a Element,
    y: &'a Element,
    levels: Levels,
) -> Result<(alloc::borrow::Cow<'a, Element>, alloc::borrow::Cow<'a, Element>), Error> {
    use alloc::borrow::Cow;
    if x.level() == y.level() {
        return Ok((Cow::Borrowed(x), Cow::Borrowed(y)));
    }
    match levels {
        Levels::Strict => Err(Error::LevelMismatch {
            left: x.level(),
            right: y.level(),
        }),
        Levels::Promote => {
            let level = x.level().max(y.level());
            Ok((Cow::Owned(x.promote(level)?), Cow::Owned(y.promote(level)?)))
        }
    }
}

/// Recursive doubling product; operands must have equal levels.
pub fn mul(spec: ProductSpec, x: &Element, y: &Element) -> Result<Element, Error> {
    mul_with(spec, x, y, Levels::Strict)
}

pub fn mul_with(
    spec: ProductSpec,
    x: &Element,
    y: &Element,
    levels: Levels,
) -> Result<Element, Error> {
    let (x, y) = align(x, y, levels)?;
    Element::from_coeffs(mul_coeffs(spec, x.coeffs(), y.coeffs()))
}

struct Quad<'a> {
    a: &'a [Scalar],
    b: &'a [Scalar],
    c: &'a [Scalar],
    d: &'a [Scalar],
    a_star: Vec<Scalar>,
    b_star: Vec<Scalar>,
    c_star: Vec<Scalar>,
    d_star: Vec<Scalar>,
}

impl Quad<'_> {
    fn get(&self, op: Operand) -> &[Scalar] {
        match op {
            A => self.a,
            B => self.b,
            C => self.c,
            D => self.d,
            AStar => &self.a_star,
            BStar => &self.b_star,
            CStar => &self.c_star,
            DStar => &self.d_star,
        }
    }
}

fn mul_coeffs(spec: ProductSpec, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(x.len(), y.len());
    if x.len() == 1 {
        return vec![&x[0] * &y[0]];
    }
    let n = x.len();
    if x.iter().all(Zero::is_zero) || y.iter().all(Zero::is_zero) {
        return vec![Scalar::zero(); n];
    }
    let (a, b) = deinterleave(x);
    let (c, d) = deinterleave(y);
    let quad = Quad {
        a_star: conj_coeffs(&a),
        b_star: conj_coeffs(&b),
        c_star: conj_coeffs(&c),
        d_star: conj_coeffs(&d),
        a: &a,
        b: &b,
        c: &c,
        d: &d,
    };
    let term = |t: Term| mul_coeffs(spec, quad.get(t.0), quad.get(t.1));

    let (f1, f2) = F_BINOMIALS[spec.f as usize];
    let first = term(f1);
    let second = term(f2);
    let f: Vec<Scalar> = first.iter().zip(&second).map(|(u, v)| u - v).collect();

    let (g1, g2) = G_BINOMIALS[spec.g as usize];
    let first = term(g1);
    let second = term(g2);
    let g: Vec<Scalar> = first.iter().zip(&second).map(|(u, v)| u + v).collect();

    interleave(&f, &g)
}

/// Reads `x` as `±e_r` if it is one.
pub fn as_signed_basis(x: &Element) -> Option<SignedIndex> {
    let mut found = None;
    for (i, c) in x.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if found.is_some() {
            return None;
        }
        let sign = if *c == Scalar::from_integer(1.into()) {
            Sign::Plus
        } else if *c == Scalar::from_integer((-1).into()) {
            Sign::Minus
        } else {
            return None;
        };
        found = Some(SignedIndex::new(sign, i));
    }
    found
}

/// `e_p e_q` computed by recursive doubling, at the smallest level that
/// contains both indices. `None` if the product is not a signed basis vector.
pub fn basis_product(spec: ProductSpec, p: usize, q: usize) -> Result<Option<SignedIndex>, Error> {
    let level = bit_length(p.max(q));
    let x = Element::basis(p, level)?;
    let y = Element::basis(q, level)?;
    Ok(as_signed_basis(&mul(spec, &x, &y)?))
}

/// The sign table `ω_spec(p, q)` for `p, q < 2^n`, computed with the doubling
/// product. Fails with [`Error::Unsupported`] if some basis product is not
/// `±e_{p xor q}`.
pub fn sign_table(spec: ProductSpec, n: u32) -> Result<SignMatrix, Error> {
    if n > MAX_LEVEL {
        return Err(Error::LevelTooLarge { level: n, max: MAX_LEVEL });
    }
    let size = 1usize << n;
    let mut entries = Vec::with_capacity(size * size);
    let basis: Vec<Element> = (0..size)
        .map(|p| Element::basis(p, n))
        .collect::<Result<_, _>>()?;
    for p in 0..size {
        for q in 0..size {
            match as_signed_basis(&mul(spec, &basis[p], &basis[q])?) {
                Some(s) if s.index == p ^ q => entries.push(s.sign),
                _ => return Err(Error::Unsupported("basis product is not ±e_(p xor q)")),
            }
        }
    }
    Ok(SignMatrix::from_entries(n, entries))
}
