//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored low-degree-first with no trailing zeros, so the
//! zero polynomial is the empty vector and `deg` returns `None` (minus
//! infinity). Arithmetic goes through a [`PolyRing`] that borrows the field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E: Copy> Poly<E> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<E> {
        self.coeffs.last().copied()
    }
}

/// `deg` of a polynomial known to be nonzero, or `0` for zero. Used where the
/// rank formulas only ever see nonzero gcds.
pub(crate) fn deg0<E: Copy>(p: &Poly<E>) -> usize {
    p.deg().unwrap_or(0)
}

/// Polynomial arithmetic over a borrowed field.
#[derive(Debug, Clone, Copy)]
pub struct PolyRing<'a, F: Field> {
    field: &'a F,
}

impl<'a, F: Field> PolyRing<'a, F> {
    pub fn new(field: &'a F) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &'a F {
        self.field
    }

    /// Wraps a coefficient vector, trimming trailing zeros.
    pub fn poly(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|&c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients given as signed integers, reduced into the prime subfield.
    pub fn from_ints(&self, coeffs: &[i64]) -> Poly<F::Elem> {
        self.poly(coeffs.iter().map(|&c| self.field.from_int(c)).collect())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.poly(vec![c])
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    /// `c X^i`.
    pub fn monomial(&self, c: F::Elem, i: usize) -> Poly<F::Elem> {
        let mut coeffs = vec![self.field.zero(); i + 1];
        coeffs[i] = c;
        self.poly(coeffs)
    }

    /// `X^n - 1`.
    pub fn x_pow_minus_one(&self, n: usize) -> Poly<F::Elem> {
        let f = self.field;
        let mut coeffs = vec![f.zero(); n + 1];
        coeffs[0] = f.neg(f.one());
        coeffs[n] = f.add(coeffs[n], f.one());
        self.poly(coeffs)
    }

    /// `X^n + 1`.
    pub fn x_pow_plus_one(&self, n: usize) -> Poly<F::Elem> {
        let f = self.field;
        let mut coeffs = vec![f.zero(); n + 1];
        coeffs[0] = f.one();
        coeffs[n] = f.add(coeffs[n], f.one());
        self.poly(coeffs)
    }

    /// Coefficient vector padded with zeros to length `n`.
    ///
    /// # Panics
    ///
    /// If `deg a >= n`.
    pub fn padded(&self, a: &Poly<F::Elem>, n: usize) -> Vec<F::Elem> {
        assert!(
            a.coeffs.len() <= n,
            "degree must be below the padded length"
        );
        let mut out = a.coeffs.clone();
        out.resize(n, self.field.zero());
        out
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = self.field;
        let (long, short) = if a.coeffs.len() >= b.coeffs.len() {
            (a, b)
        } else {
            (b, a)
        };
        let mut out = long.coeffs.clone();
        for (o, &s) in out.iter_mut().zip(&short.coeffs) {
            *o = f.add(*o, s);
        }
        self.poly(out)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|&c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Poly<F::Elem>, c: F::Elem) -> Poly<F::Elem> {
        self.poly(a.coeffs.iter().map(|&x| self.field.mul(x, c)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let f = self.field;
        let mut out = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
        self.poly(out)
    }

    /// Euclidean division: `a = q b + r` with `deg r < deg b`.
    pub fn divmod(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let f = self.field;
        let db = b.deg().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(b.coeffs[db])?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + db], lead_inv);
            quot[i] = c;
            if f.is_zero(c) {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, bj));
            }
        }
        rem.truncate(db);
        Ok((self.poly(quot), self.poly(rem)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.divmod(a, b)?.1)
    }

    /// `a / b`, failing with [`Error::InexactDivision`] on a nonzero remainder.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.divmod(a, b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<bool> {
        Ok(self.rem(b, a)?.is_zero())
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.leading() {
            None => Poly::zero(),
            Some(lead) => {
                let inv = self
                    .field
                    .inv(lead)
                    .expect("leading coefficient is nonzero");
                self.scale(a, inv)
            }
        }
    }

    /// Monic gcd by the Euclidean algorithm. `gcd(a, 0) = monic(a)`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = self.rem(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// Left fold of [`PolyRing::gcd`]; zero operands are skipped.
    pub fn gcd_all(&self, polys: &[&Poly<F::Elem>]) -> Result<Poly<F::Elem>> {
        let mut acc = Poly::zero();
        for p in polys {
            if acc.is_zero() && p.is_zero() {
                continue;
            }
            acc = self.gcd(&acc, p)?;
        }
        if acc.is_zero() {
            Err(Error::BothZero)
        } else {
            Ok(acc)
        }
    }

    /// Monic lcm, `monic(a b) / gcd(a, b)`.
    pub fn lcm(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroOperand);
        }
        let g = self.gcd(a, b)?;
        let prod = self.monic(&self.mul(a, b));
        self.div_exact(&prod, &g)
    }

    /// Left fold of [`PolyRing::lcm`]; the lcm of no polynomials is 1.
    pub fn lcm_all(&self, polys: &[&Poly<F::Elem>]) -> Result<Poly<F::Elem>> {
        polys
            .iter()
            .try_fold(self.one(), |acc, p| self.lcm(&acc, p))
    }

    /// Extended Euclid: `(g, s, t)` with `s a + t b = g`, `g` not normalized.
    pub fn xgcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.divmod(&r0, &r1).expect("divisor is nonzero");
            r0 = core::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    /// `a^exp mod m`.
    pub fn pow_mod(
        &self,
        a: &Poly<F::Elem>,
        mut exp: u128,
        m: &Poly<F::Elem>,
    ) -> Result<Poly<F::Elem>> {
        let mut acc = self.rem(&self.one(), m)?;
        let mut base = self.rem(a, m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &base), m)?;
            }
            base = self.rem(&self.mul(&base, &base), m)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// `a b mod (X^n - 1)`, as a coefficient vector of length `n`.
    pub fn cyclic_mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, n: usize) -> Vec<F::Elem> {
        let f = self.field;
        let mut out = vec![f.zero(); n];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                let k = (i + j) % n;
                out[k] = f.add(out[k], f.mul(x, y));
            }
        }
        out
    }

    /// Horner evaluation at a point of the same field.
    pub fn eval(&self, a: &Poly<F::Elem>, x: F::Elem) -> F::Elem {
        let f = self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn ring_examples() {
        let f3 = gf(3);
        let r = PolyRing::new(&f3);
        assert_eq!(
            r.mul(&r.from_ints(&[1, 1]), &r.from_ints(&[2, 1])).coeffs(),
            &[2, 0, 1]
        );
        let one_x_x2 = r.from_ints(&[1, 1, 1]);
        assert_eq!(r.mul(&one_x_x2, &r.one()), one_x_x2);

        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let sum = r5.add(&r5.from_ints(&[4, 1]), &r5.from_ints(&[1, 4]));
        assert!(sum.is_zero());
        assert_eq!(sum.deg(), None);
    }

    #[test]
    fn divmod_examples() {
        let f3 = gf(3);
        let r = PolyRing::new(&f3);
        let (q, rem) = r
            .divmod(&r.x_pow_minus_one(4), &r.from_ints(&[-1, 1]))
            .unwrap();
        assert_eq!(q.coeffs(), &[1, 1, 1, 1]);
        assert!(rem.is_zero());

        let (q, rem) = r
            .divmod(&r.from_ints(&[1, 1, 1]), &r.from_ints(&[2, 1]))
            .unwrap();
        assert_eq!(q.coeffs(), &[2, 1]);
        assert!(rem.is_zero());

        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let (q, rem) = r5
            .divmod(&r5.x_pow_minus_one(3), &r5.monomial(1, 2))
            .unwrap();
        assert_eq!(q.coeffs(), &[0, 1]);
        assert_eq!(rem.coeffs(), &[4]);

        assert_eq!(
            r5.divmod(&r5.one(), &Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gcd_examples() {
        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let g = r5
            .gcd(&r5.x_pow_minus_one(2), &r5.x_pow_minus_one(3))
            .unwrap();
        assert_eq!(g.coeffs(), &[4, 1]);

        let f3 = gf(3);
        let r = PolyRing::new(&f3);
        let g = r
            .gcd(&r.from_ints(&[1, 1, 1]), &r.x_pow_minus_one(4))
            .unwrap();
        assert_eq!(g.coeffs(), &[2, 1]);

        let h = r.from_ints(&[2, 0, 2]);
        assert_eq!(r.gcd(&h, &h).unwrap(), r.monic(&h));
        assert_eq!(r.gcd(&h, &Poly::zero()).unwrap(), r.monic(&h));
        assert_eq!(r.gcd(&Poly::zero(), &Poly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn lcm_examples() {
        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let l = r5
            .lcm(&r5.from_ints(&[-1, 1]), &r5.from_ints(&[1, 1, 1]))
            .unwrap();
        assert_eq!(l, r5.x_pow_minus_one(3));

        let f3 = gf(3);
        let r3 = PolyRing::new(&f3);
        let a = r3.x_pow_minus_one(2);
        assert_eq!(r3.lcm(&a, &a).unwrap(), a);

        let f7 = gf(7);
        let r7 = PolyRing::new(&f7);
        let l = r7
            .lcm(&r7.x_pow_minus_one(2), &r7.x_pow_minus_one(3))
            .unwrap();
        let expected = r7.mul(
            &r7.mul(&r7.from_ints(&[-1, 1]), &r7.from_ints(&[1, 1])),
            &r7.from_ints(&[1, 1, 1]),
        );
        assert_eq!(l.deg(), Some(4));
        assert_eq!(l, expected);
        assert_eq!(r7.lcm(&l, &Poly::zero()), Err(Error::ZeroOperand));
    }

    #[test]
    fn eval_examples() {
        let f3 = gf(3);
        let r = PolyRing::new(&f3);
        assert_eq!(r.eval(&r.from_ints(&[1, 1, 1]), 1), 0);
        assert_eq!(r.eval(&r.from_ints(&[2, 1]), 2), 1);
        assert_eq!(r.eval(&Poly::zero(), 2), 0);
    }

    #[test]
    fn x_pow_minus_one_examples() {
        let f3 = gf(3);
        let r3 = PolyRing::new(&f3);
        assert_eq!(r3.x_pow_minus_one(2).coeffs(), &[2, 0, 1]);
        assert_eq!(r3.x_pow_minus_one(4).coeffs(), &[2, 0, 0, 0, 1]);
        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        assert_eq!(r5.x_pow_minus_one(1).coeffs(), &[4, 1]);
        assert_eq!(r5.x_pow_plus_one(2).coeffs(), &[1, 0, 1]);
    }

    #[test]
    fn cyclic_mul_wraps() {
        let f3 = gf(3);
        let r = PolyRing::new(&f3);
        // X * (1 + X + X^2) mod X^4 - 1 is row 1 of the circulant
        assert_eq!(
            r.cyclic_mul(&r.monomial(1, 1), &r.from_ints(&[1, 1, 1]), 4),
            [0, 1, 1, 1]
        );
        assert_eq!(
            r.cyclic_mul(&r.monomial(1, 3), &r.from_ints(&[1, 1, 1]), 4),
            [1, 1, 0, 1]
        );
    }

    #[test]
    fn xgcd_bezout() {
        let f7 = gf(7);
        let r = PolyRing::new(&f7);
        let a = r.from_ints(&[3, 1, 4, 1, 5]);
        let b = r.from_ints(&[2, 6, 5, 3]);
        let (g, s, t) = r.xgcd(&a, &b);
        assert_eq!(r.add(&r.mul(&s, &a), &r.mul(&t, &b)), g);
        assert_eq!(r.monic(&g), r.gcd(&a, &b).unwrap());
    }
}
