//! Exact arithmetic in GF(p) and GF(p^k).
//!
//! A field is a small context value ([`PrimeField`] or [`ExtField`]); its
//! elements are plain `Copy` values that only make sense together with the
//! context that produced them. All operations go through the context.

mod extension;
mod prime;
mod roots;

pub use extension::{find_irreducible, is_irreducible, ExtElem, ExtField, MAX_EXT_DEGREE};
pub use prime::PrimeField;
pub use roots::{find_root_of_unity, has_order, primitive_root_of_unity, Embedding};

use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use crate::error::Result;

/// A finite field context.
pub trait Field: Clone + Debug {
    type Elem: Copy + Eq + Debug + Hash;

    fn characteristic(&self) -> u64;

    /// Degree over the prime subfield.
    fn degree(&self) -> usize;

    /// The defining polynomial over GF(p), low-degree-first and monic.
    /// For a prime field this is `X`.
    fn modulus(&self) -> Vec<u64>;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;

    /// Coordinates over GF(p) in the power basis, length [`Field::degree`].
    fn coefficients(&self, a: Self::Elem) -> Vec<u64>;

    /// Builds an element from GF(p) coordinates, reducing each one mod p.
    /// Missing trailing coordinates are zero.
    fn from_coefficients(&self, coeffs: &[u64]) -> Result<Self::Elem>;

    /// Reduces a signed integer into the prime subfield.
    fn from_int(&self, v: i64) -> Self::Elem;

    /// Whether `other` is the same field (same characteristic and modulus).
    fn same_field(&self, other: &Self) -> bool;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn pow(&self, a: Self::Elem, mut exp: u128) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Number of elements `p^k`, or `None` if it overflows.
    fn order(&self) -> Option<u128> {
        (self.characteristic() as u128).checked_pow(self.degree() as u32)
    }

    /// The element whose base-p digits (least significant first) are its
    /// coordinates. Enumerates the field in a fixed order for `index < p^k`.
    fn element(&self, mut index: u128) -> Self::Elem {
        let p = self.characteristic() as u128;
        let mut coeffs = Vec::with_capacity(self.degree());
        for _ in 0..self.degree() {
            coeffs.push((index % p) as u64);
            index /= p;
        }
        self.from_coefficients(&coeffs)
            .expect("digits are reduced and within degree")
    }
}
