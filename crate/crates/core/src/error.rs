use thiserror::Error;

/// Errors raised by the algebra and its combinatorial companions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis index {index} is out of range for level {level}")]
    IndexOutOfRange { index: usize, level: u32 },
    #[error("operands have different levels ({left} and {right})")]
    LevelMismatch { left: u32, right: u32 },
    #[error("level {level} exceeds the supported maximum {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error("a level-0 element cannot be split")]
    SplitScalar,
    #[error("coefficient vector has length {len}, expected a power of two")]
    BadLength { len: usize },
    #[error("no doubling product f{f}g{g}: f must be in 0..8 and g in 0..4")]
    InvalidProduct { f: u8, g: u8 },
    #[error("unknown product id `{0}`")]
    UnknownProduct(alloc::string::String),
    #[error("f{f}g{g} is not one of the eight valid doubling products")]
    NotValidProduct { f: u8, g: u8 },
    #[error("({p},{q},{r}) is not a triple: need 0 != p != q != 0 and r = p xor q")]
    InvalidTriple { p: usize, q: usize, r: usize },
    #[error("generated triple ({p},{q},{r}) disagrees with the twist function")]
    TripleMismatch { p: usize, q: usize, r: usize },
    #[error("{0}")]
    Unsupported(&'static str),
    #[error("bound {bound} exceeds the maximum {max}")]
    BoundTooLarge { bound: usize, max: usize },
}
