use alloc::vec::Vec;

use super::{ExtElem, ExtField, Field, PrimeField};
use crate::error::{Error, Result};
use crate::num;

/// Elements tried directly, in enumeration order, before falling back to
/// powering candidates into the order-n subgroup.
const DIRECT_SCAN: u128 = 4096;

/// Budget for brute-force root search when embedding one field into another.
const EMBED_SCAN: u128 = 1 << 24;

/// Whether `x` has multiplicative order exactly `n`.
pub fn has_order<F: Field>(field: &F, x: F::Elem, n: usize) -> bool {
    if n == 0 || field.is_zero(x) {
        return false;
    }
    let n = n as u128;
    field.pow(x, n) == field.one()
        && num::prime_factors(n)
            .into_iter()
            .all(|r| field.pow(x, n / r) != field.one())
}

/// The first element (in [`Field::element`] order) of multiplicative order
/// `n`. Falls back to `a^((q-1)/n)` over successive `a` when the direct scan
/// budget runs out.
pub fn find_root_of_unity<F: Field>(field: &F, n: usize) -> Result<F::Elem> {
    if n == 0 {
        return Err(Error::InvalidSpec("root of unity order must be positive"));
    }
    let q = field.order().ok_or(Error::TooLarge)?;
    if (q - 1) % n as u128 != 0 {
        return Err(Error::NoRootOfUnity(n));
    }
    for idx in 1..q.min(DIRECT_SCAN) {
        let x = field.element(idx);
        if has_order(field, x, n) {
            return Ok(x);
        }
    }
    let cofactor = (q - 1) / n as u128;
    for idx in 1..q {
        let x = field.pow(field.element(idx), cofactor);
        if has_order(field, x, n) {
            return Ok(x);
        }
    }
    Err(Error::NoRootOfUnity(n))
}

/// Smallest extension of GF(p) holding a primitive `n`-th root of unity,
/// together with that root. The degree is the multiplicative order of
/// `p mod n`.
pub fn primitive_root_of_unity(n: usize, base: &PrimeField) -> Result<(ExtField, ExtElem)> {
    if n == 0 {
        return Err(Error::InvalidSpec("root of unity order must be positive"));
    }
    if n as u64 % base.p() == 0 {
        return Err(Error::CharDividesN { n, p: base.p() });
    }
    let k = num::multiplicative_order(base.p(), n);
    let ext = ExtField::with_degree(*base, k)?;
    let omega = find_root_of_unity(&ext, n)?;
    Ok((ext, omega))
}

/// A field homomorphism from a subfield `S` into an extension `target`,
/// stored as the images of the power basis `1, a, ..., a^(k-1)` of `S`.
#[derive(Debug, Clone)]
pub struct Embedding {
    target: ExtField,
    images: Vec<ExtElem>,
}

impl Embedding {
    pub fn new<S: Field>(source: &S, target: &ExtField) -> Result<Self> {
        let k = source.degree();
        if source.characteristic() != target.characteristic() || target.degree() % k != 0 {
            return Err(Error::NoEmbedding);
        }
        let root = if k == 1 {
            target.one()
        } else if source.modulus() == target.modulus() {
            target.generator()
        } else {
            find_root(target, &source.modulus())?
        };
        let mut images = Vec::with_capacity(k);
        let mut acc = target.one();
        for _ in 0..k {
            images.push(acc);
            acc = target.mul(acc, root);
        }
        Ok(Self {
            target: *target,
            images,
        })
    }

    pub fn target(&self) -> &ExtField {
        &self.target
    }

    pub fn map<S: Field>(&self, source: &S, x: S::Elem) -> ExtElem {
        let t = &self.target;
        source
            .coefficients(x)
            .into_iter()
            .zip(&self.images)
            .fold(t.zero(), |acc, (c, &img)| {
                t.add(acc, t.mul(t.embed_base(c), img))
            })
    }
}

fn find_root(target: &ExtField, poly: &[u64]) -> Result<ExtElem> {
    let q = target.order().ok_or(Error::TooLarge)?;
    if q > EMBED_SCAN {
        return Err(Error::TooLarge);
    }
    (0..q)
        .map(|idx| target.element(idx))
        .find(|&x| {
            poly.iter().rev().fold(target.zero(), |acc, &c| {
                target.add(target.mul(acc, x), target.embed_base(c))
            }) == target.zero()
        })
        .ok_or(Error::NoEmbedding)
}
