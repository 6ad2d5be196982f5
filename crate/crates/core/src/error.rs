use core::fmt;

/// Errors raised by the field, polynomial and matrix layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The modulus is not prime.
    NotPrime(u64),
    /// The modulus does not fit the supported range (p < 2^63).
    ModulusTooLarge(u64),
    /// A field-defining polynomial is not monic and irreducible.
    NotIrreducible,
    /// Extension degree outside `1..=MAX_EXT_DEGREE`.
    ExtensionTooLarge(usize),
    /// Two operands live in different fields.
    MixedField,
    DivisionByZero,
    /// The characteristic divides a block length, so no primitive root of unity exists.
    CharDividesN {
        n: usize,
        p: u64,
    },
    /// The field does not contain a primitive n-th root of unity.
    NoRootOfUnity(usize),
    /// gcd(0, 0) is undefined.
    BothZero,
    /// lcm with a zero operand.
    ZeroOperand,
    /// A polynomial division expected to be exact left a remainder.
    InexactDivision,
    /// No embedding between the two fields.
    NoEmbedding,
    /// The element does not have the requested multiplicative order.
    OrderMismatch {
        expected: usize,
    },
    /// Matrix shapes do not fit the operation.
    DimensionMismatch,
    /// Row window outside the matrix.
    IndexOutOfRange,
    /// The operation needs a square double circulant (m = n + n').
    NotSquare,
    ZeroGenerator,
    ZeroGenerators,
    OddLength(usize),
    /// The matrix would exceed the configured entry cap.
    MatrixTooLarge {
        entries: usize,
        cap: usize,
    },
    /// A search or enumeration would exceed its budget.
    TooLarge,
    /// A parameter violates a spec invariant.
    InvalidSpec(&'static str),
    /// A closed-form result disagreed with the elimination oracle.
    OracleDisagreement(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ModulusTooLarge(p) => write!(f, "modulus {p} is too large (need p < 2^63)"),
            Error::NotIrreducible => f.write_str("modulus is not a monic irreducible polynomial"),
            Error::ExtensionTooLarge(k) => write!(f, "extension degree {k} is not supported"),
            Error::MixedField => f.write_str("operands belong to different fields"),
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::CharDividesN { n, p } => {
                write!(f, "characteristic {p} divides block length {n}")
            }
            Error::NoRootOfUnity(n) => write!(f, "field has no primitive {n}-th root of unity"),
            Error::BothZero => f.write_str("gcd of two zero polynomials"),
            Error::ZeroOperand => f.write_str("lcm with a zero polynomial"),
            Error::InexactDivision => f.write_str("polynomial division left a remainder"),
            Error::NoEmbedding => f.write_str("no embedding between the fields"),
            Error::OrderMismatch { expected } => {
                write!(f, "element does not have multiplicative order {expected}")
            }
            Error::DimensionMismatch => f.write_str("matrix dimensions do not match"),
            Error::IndexOutOfRange => f.write_str("row range out of bounds"),
            Error::NotSquare => f.write_str("matrix must be square (m = n + n')"),
            Error::ZeroGenerator => f.write_str("generator polynomial is zero"),
            Error::ZeroGenerators => f.write_str("both generator polynomials are zero"),
            Error::OddLength(n) => write!(f, "length {n} must be even"),
            Error::MatrixTooLarge { entries, cap } => {
                write!(f, "matrix with {entries} entries exceeds cap {cap}")
            }
            Error::TooLarge => f.write_str("enumeration exceeds its budget"),
            Error::InvalidSpec(msg) => write!(f, "invalid spec: {msg}"),
            Error::OracleDisagreement(what) => {
                write!(f, "closed form disagrees with elimination oracle: {what}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
