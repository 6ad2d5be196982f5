#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod circulant;
pub mod codes;
pub mod error;
pub mod field;
pub mod matrix;
pub mod num;
pub mod poly;
pub mod rank;
pub mod spectra;

pub use error::{Error, Result};
pub use field::{ExtElem, ExtField, Field, PrimeField};
pub use matrix::DenseMatrix;
pub use poly::{Poly, PolyRing};
