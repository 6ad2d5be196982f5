use alloc::vec::Vec;

use super::{Field, PrimeField};
use crate::error::{Error, Result};
use crate::num;
use crate::poly::{Poly, PolyRing};

/// Largest supported extension degree.
pub const MAX_EXT_DEGREE: usize = 12;

/// An element of GF(p^k): coordinates `c[0] + c[1] X + ... + c[k-1] X^(k-1)`
/// modulo the field polynomial. Slots at index `>= k` are always zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtElem {
    c: [u64; MAX_EXT_DEGREE],
}

impl ExtElem {
    pub fn coords(&self) -> &[u64; MAX_EXT_DEGREE] {
        &self.c
    }
}

/// GF(p^k) = GF(p)[X] / (f) for a monic irreducible `f` of degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtField {
    base: PrimeField,
    k: usize,
    // low-degree-first, leading 1 at index k
    modulus: [u64; MAX_EXT_DEGREE + 1],
}

impl ExtField {
    /// Builds GF(p^k) from a monic irreducible modulus (coefficients low-degree-first).
    pub fn new(base: PrimeField, modulus: &[u64]) -> Result<Self> {
        let ring = PolyRing::new(&base);
        let f = ring.poly(modulus.iter().map(|&c| base.reduce(c)).collect());
        let k = f.deg().ok_or(Error::NotIrreducible)?;
        if k == 0 {
            return Err(Error::NotIrreducible);
        }
        if k > MAX_EXT_DEGREE {
            return Err(Error::ExtensionTooLarge(k));
        }
        if f.coeffs()[k] != 1 || !is_irreducible(&base, &f) {
            return Err(Error::NotIrreducible);
        }
        let mut m = [0u64; MAX_EXT_DEGREE + 1];
        m[..=k].copy_from_slice(f.coeffs());
        Ok(Self {
            base,
            k,
            modulus: m,
        })
    }

    /// GF(p^k) using the smallest irreducible modulus from [`find_irreducible`].
    pub fn with_degree(base: PrimeField, k: usize) -> Result<Self> {
        if k == 0 || k > MAX_EXT_DEGREE {
            return Err(Error::ExtensionTooLarge(k));
        }
        let f = find_irreducible(&base, k);
        Self::new(base, f.coeffs())
    }

    pub fn base(&self) -> &PrimeField {
        &self.base
    }

    /// The image of a GF(p) residue.
    pub fn embed_base(&self, v: u64) -> ExtElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        c[0] = self.base.reduce(v);
        ExtElem { c }
    }

    /// The class of `X`, a root of the modulus.
    pub fn generator(&self) -> ExtElem {
        let mut c = [0u64; MAX_EXT_DEGREE];
        if self.k == 1 {
            c[0] = self.base.neg(self.modulus[0]);
        } else {
            c[1] = 1;
        }
        ExtElem { c }
    }

    fn to_poly(&self, a: ExtElem) -> Poly<u64> {
        PolyRing::new(&self.base).poly(a.c[..self.k].to_vec())
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u64 {
        self.base.p()
    }

    fn degree(&self) -> usize {
        self.k
    }

    fn modulus(&self) -> Vec<u64> {
        self.modulus[..=self.k].to_vec()
    }

    fn zero(&self) -> ExtElem {
        ExtElem {
            c: [0; MAX_EXT_DEGREE],
        }
    }

    fn one(&self) -> ExtElem {
        self.embed_base(1)
    }

    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut c = a.c;
        for i in 0..self.k {
            c[i] = self.base.add(a.c[i], b.c[i]);
        }
        ExtElem { c }
    }

    fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let mut c = a.c;
        for i in 0..self.k {
            c[i] = self.base.sub(a.c[i], b.c[i]);
        }
        ExtElem { c }
    }

    fn neg(&self, a: ExtElem) -> ExtElem {
        let mut c = a.c;
        for x in c.iter_mut().take(self.k) {
            *x = self.base.neg(*x);
        }
        ExtElem { c }
    }

    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let k = self.k;
        let f = &self.base;
        let mut t = [0u64; 2 * MAX_EXT_DEGREE - 1];
        for i in 0..k {
            if a.c[i] == 0 {
                continue;
            }
            for j in 0..k {
                t[i + j] = f.add(t[i + j], f.mul(a.c[i], b.c[j]));
            }
        }
        // X^k = -(m_0 + ... + m_{k-1} X^{k-1})
        for d in (k..2 * k - 1).rev() {
            let top = t[d];
            if top == 0 {
                continue;
            }
            t[d] = 0;
            for i in 0..k {
                t[d - k + i] = f.sub(t[d - k + i], f.mul(top, self.modulus[i]));
            }
        }
        let mut c = [0u64; MAX_EXT_DEGREE];
        c[..k].copy_from_slice(&t[..k]);
        ExtElem { c }
    }

    fn inv(&self, a: ExtElem) -> Result<ExtElem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let ring = PolyRing::new(&self.base);
        let modulus = ring.poly(self.modulus());
        let (g, s, _) = ring.xgcd(&self.to_poly(a), &modulus);
        debug_assert_eq!(g.deg(), Some(0));
        let scale = self.base.inv(g.coeffs()[0])?;
        let s = ring.scale(&s, scale);
        let s = ring.rem(&s, &modulus)?;
        self.from_coefficients(s.coeffs())
    }

    fn coefficients(&self, a: ExtElem) -> Vec<u64> {
        a.c[..self.k].to_vec()
    }

    fn from_coefficients(&self, coeffs: &[u64]) -> Result<ExtElem> {
        if coeffs.len() > self.k {
            return Err(Error::InvalidSpec("more coordinates than the field degree"));
        }
        let mut c = [0u64; MAX_EXT_DEGREE];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = self.base.reduce(v);
        }
        Ok(ExtElem { c })
    }

    fn from_int(&self, v: i64) -> ExtElem {
        self.embed_base(self.base.from_int(v))
    }

    fn same_field(&self, other: &Self) -> bool {
        self == other
    }
}

/// Rabin's test: `f` of degree `k` is irreducible over GF(p) iff
/// `X^(p^k) = X mod f` and `gcd(X^(p^(k/r)) - X, f) = 1` for every prime `r | k`.
pub fn is_irreducible(field: &PrimeField, f: &Poly<u64>) -> bool {
    let k = match f.deg() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(k) => k,
    };
    let ring = PolyRing::new(field);
    let x = ring.monomial(1, 1);
    // frobenius[i] = X^(p^(i+1)) mod f
    let mut frobenius = Vec::with_capacity(k);
    let mut h = ring.rem(&x, f).expect("f is nonzero");
    for _ in 0..k {
        h = ring
            .pow_mod(&h, field.p() as u128, f)
            .expect("f is nonzero");
        frobenius.push(h.clone());
    }
    if frobenius[k - 1] != x {
        return false;
    }
    num::prime_factors(k as u128).into_iter().all(|r| {
        let h = &frobenius[k / r as usize - 1];
        let g = ring.gcd(&ring.sub(h, &x), f).expect("f is nonzero");
        g.deg() == Some(0)
    })
}

/// The monic irreducible polynomial of degree `k` over GF(p) whose
/// non-leading coefficients `(c_0, ..., c_{k-1})`, read as base-p digits with
/// `c_0` least significant, form the smallest integer.
///
/// # Panics
///
/// If `k == 0`.
pub fn find_irreducible(field: &PrimeField, k: usize) -> Poly<u64> {
    assert!(k >= 1, "irreducible polynomials have degree at least 1");
    let p = field.p();
    let ring = PolyRing::new(field);
    let mut digits = alloc::vec![0u64; k];
    loop {
        // anything with c_0 = 0 is divisible by X
        if k == 1 || digits[0] != 0 {
            let mut coeffs = digits.clone();
            coeffs.push(1);
            let f = ring.poly(coeffs);
            if is_irreducible(field, &f) {
                return f;
            }
        }
        // odometer increment, least significant digit first
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < k, "irreducible polynomials exist in every degree");
        }
    }
}
