//! Generalized, double and multiple circulant matrices, plus the Vandermonde
//! columns and generalized Fourier matrices used to diagonalize them.
//!
//! Row `i` (counting from 0) of `M(g)_{m x n}` is the `i`-fold circular right
//! shift of `(g_0, ..., g_{n-1})`, so entry `(i, j)` is `g_{(j - i) mod n}`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{has_order, Field};
use crate::matrix::DenseMatrix;
use crate::num;
use crate::poly::{Poly, PolyRing};

/// Default cap on `m * (total block length)` for any spec.
pub const DEFAULT_MAX_ENTRIES: usize = 1_000_000;

/// One circulant block: the polynomial `g` and its block length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantBlock<E> {
    pub g: Poly<E>,
    pub n: usize,
}

impl<E: Copy> CirculantBlock<E> {
    pub fn new(g: Poly<E>, n: usize) -> Self {
        Self { g, n }
    }
}

fn check_block<F: Field>(field: &F, g: &Poly<F::Elem>, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSpec("block length must be positive"));
    }
    if g.coeffs().len() > n {
        return Err(Error::InvalidSpec("deg g must be below the block length"));
    }
    let p = field.characteristic();
    if n as u64 % p == 0 {
        return Err(Error::CharDividesN { n, p });
    }
    Ok(())
}

fn check_size(m: usize, cols: usize, cap: usize) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidSpec("row count must be positive"));
    }
    let entries = m.saturating_mul(cols);
    if entries > cap {
        return Err(Error::MatrixTooLarge { entries, cap });
    }
    Ok(())
}

/// Data for `M(g)_{m x n}`.
#[derive(Debug, Clone)]
pub struct CirculantSpec<F: Field> {
    field: F,
    g: Poly<F::Elem>,
    n: usize,
    m: usize,
    max_entries: usize,
}

impl<F: Field> CirculantSpec<F> {
    pub fn new(field: F, g: Poly<F::Elem>, n: usize, m: usize) -> Result<Self> {
        check_block(&field, &g, n)?;
        check_size(m, n, DEFAULT_MAX_ENTRIES)?;
        Ok(Self {
            field,
            g,
            n,
            m,
            max_entries: DEFAULT_MAX_ENTRIES,
        })
    }

    pub fn with_max_entries(mut self, cap: usize) -> Result<Self> {
        check_size(self.m, self.n, cap)?;
        self.max_entries = cap;
        Ok(self)
    }

    /// The same polynomial with a different row count.
    pub fn with_rows(&self, m: usize) -> Result<Self> {
        check_size(m, self.n, self.max_entries)?;
        Ok(Self { m, ..self.clone() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn g(&self) -> &Poly<F::Elem> {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }
}

/// Data for `M(g, g')_{m x (n + n')} = (M(g)_{m x n} | M(g')_{m x n'})`.
#[derive(Debug, Clone)]
pub struct DoubleCirculantSpec<F: Field> {
    field: F,
    g: Poly<F::Elem>,
    n: usize,
    g_prime: Poly<F::Elem>,
    n_prime: usize,
    m: usize,
    max_entries: usize,
}

impl<F: Field> DoubleCirculantSpec<F> {
    pub fn new(
        field: F,
        g: Poly<F::Elem>,
        n: usize,
        g_prime: Poly<F::Elem>,
        n_prime: usize,
        m: usize,
    ) -> Result<Self> {
        check_block(&field, &g, n)?;
        check_block(&field, &g_prime, n_prime)?;
        check_size(m, n + n_prime, DEFAULT_MAX_ENTRIES)?;
        Ok(Self {
            field,
            g,
            n,
            g_prime,
            n_prime,
            m,
            max_entries: DEFAULT_MAX_ENTRIES,
        })
    }

    pub fn with_max_entries(mut self, cap: usize) -> Result<Self> {
        check_size(self.m, self.n + self.n_prime, cap)?;
        self.max_entries = cap;
        Ok(self)
    }

    pub fn with_rows(&self, m: usize) -> Result<Self> {
        check_size(m, self.n + self.n_prime, self.max_entries)?;
        Ok(Self { m, ..self.clone() })
    }

    /// The square case `m = n + n'`.
    pub fn square(&self) -> Result<Self> {
        self.with_rows(self.n + self.n_prime)
    }

    /// Exchanges the two blocks, `(g, n) <-> (g', n')`.
    pub fn swapped(&self) -> Self {
        Self {
            g: self.g_prime.clone(),
            n: self.n_prime,
            g_prime: self.g.clone(),
            n_prime: self.n,
            ..self.clone()
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn g(&self) -> &Poly<F::Elem> {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn g_prime(&self) -> &Poly<F::Elem> {
        &self.g_prime
    }

    pub fn n_prime(&self) -> usize {
        self.n_prime
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `gcd(n, n')`.
    pub fn ell(&self) -> usize {
        num::gcd(self.n, self.n_prime)
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n + self.n_prime
    }

    pub fn left(&self) -> CirculantSpec<F> {
        CirculantSpec {
            field: self.field.clone(),
            g: self.g.clone(),
            n: self.n,
            m: self.m,
            max_entries: self.max_entries,
        }
    }

    pub fn right(&self) -> CirculantSpec<F> {
        CirculantSpec {
            field: self.field.clone(),
            g: self.g_prime.clone(),
            n: self.n_prime,
            m: self.m,
            max_entries: self.max_entries,
        }
    }

    /// The same matrix as a two-block multiple circulant.
    pub fn to_multiple(&self) -> MultiCirculantSpec<F> {
        MultiCirculantSpec {
            field: self.field.clone(),
            blocks: alloc::vec![
                CirculantBlock::new(self.g.clone(), self.n),
                CirculantBlock::new(self.g_prime.clone(), self.n_prime),
            ],
            m: self.m,
            max_entries: self.max_entries,
        }
    }
}

/// Data for `M(g_1, ..., g_k)_{m x (n_1 + ... + n_k)}`.
#[derive(Debug, Clone)]
pub struct MultiCirculantSpec<F: Field> {
    field: F,
    blocks: Vec<CirculantBlock<F::Elem>>,
    m: usize,
    max_entries: usize,
}

impl<F: Field> MultiCirculantSpec<F> {
    pub fn new(field: F, blocks: Vec<CirculantBlock<F::Elem>>, m: usize) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::InvalidSpec("at least one block is required"));
        }
        for b in &blocks {
            check_block(&field, &b.g, b.n)?;
        }
        let cols = blocks.iter().map(|b| b.n).sum();
        check_size(m, cols, DEFAULT_MAX_ENTRIES)?;
        Ok(Self {
            field,
            blocks,
            m,
            max_entries: DEFAULT_MAX_ENTRIES,
        })
    }

    pub fn with_max_entries(mut self, cap: usize) -> Result<Self> {
        check_size(self.m, self.total_len(), cap)?;
        self.max_entries = cap;
        Ok(self)
    }

    pub fn with_rows(&self, m: usize) -> Result<Self> {
        check_size(m, self.total_len(), self.max_entries)?;
        Ok(Self { m, ..self.clone() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn blocks(&self) -> &[CirculantBlock<F::Elem>] {
        &self.blocks
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn total_len(&self) -> usize {
        self.blocks.iter().map(|b| b.n).sum()
    }
}

fn circulant_block<F: Field>(
    field: &F,
    g: &Poly<F::Elem>,
    n: usize,
    m: usize,
) -> DenseMatrix<F::Elem> {
    let row0 = PolyRing::new(field).padded(g, n);
    let mut entries = Vec::with_capacity(m * n);
    for i in 0..m {
        let shift = i % n;
        // S^i(g): entry j is g_{(j - i) mod n}
        entries.extend_from_slice(&row0[n - shift..]);
        entries.extend_from_slice(&row0[..n - shift]);
    }
    DenseMatrix::new(m, n, entries)
}

fn concat_blocks<F: Field>(
    field: &F,
    blocks: impl Iterator<Item = (Poly<F::Elem>, usize)>,
    m: usize,
) -> DenseMatrix<F::Elem> {
    let mut out = DenseMatrix::zeros(field, m, 0);
    for (g, n) in blocks {
        out = out
            .hstack(&circulant_block(field, &g, n, m))
            .expect("blocks share the row count");
    }
    out
}

pub fn build_generalized_circulant<F: Field>(spec: &CirculantSpec<F>) -> DenseMatrix<F::Elem> {
    circulant_block(&spec.field, &spec.g, spec.n, spec.m)
}

pub fn build_double_circulant<F: Field>(spec: &DoubleCirculantSpec<F>) -> DenseMatrix<F::Elem> {
    let blocks = [
        (spec.g.clone(), spec.n),
        (spec.g_prime.clone(), spec.n_prime),
    ];
    concat_blocks(&spec.field, blocks.into_iter(), spec.m)
}

pub fn build_multiple_circulant<F: Field>(spec: &MultiCirculantSpec<F>) -> DenseMatrix<F::Elem> {
    let blocks = spec.blocks.iter().map(|b| (b.g.clone(), b.n));
    concat_blocks(&spec.field, blocks, spec.m)
}

/// `V(zeta)_m = (1, zeta, ..., zeta^(m-1))^T`.
pub fn vandermonde_column<F: Field>(field: &F, zeta: F::Elem, m: usize) -> DenseMatrix<F::Elem> {
    let mut entries = Vec::with_capacity(m);
    let mut acc = field.one();
    for _ in 0..m {
        entries.push(acc);
        acc = field.mul(acc, zeta);
    }
    DenseMatrix::column_vector(entries)
}

/// `Phi(omega)_{m x n}`: column `j` is `V(omega^j)_m`. `omega` must have
/// multiplicative order exactly `n`.
pub fn generalized_fourier<F: Field>(
    field: &F,
    omega: F::Elem,
    m: usize,
    n: usize,
) -> Result<DenseMatrix<F::Elem>> {
    if !has_order(field, omega, n) {
        return Err(Error::OrderMismatch { expected: n });
    }
    let mut out = DenseMatrix::zeros(field, m, n);
    let mut zeta = field.one();
    for j in 0..n {
        let col = vandermonde_column(field, zeta, m);
        for i in 0..m {
            out.set(i, j, col.get(i, 0));
        }
        zeta = field.mul(zeta, omega);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{ExtField, PrimeField};
    use alloc::vec;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn single_block_examples() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        let spec = CirculantSpec::new(f, r.from_ints(&[1, 1, 1]), 4, 4).unwrap();
        let m = build_generalized_circulant(&spec);
        assert_eq!(
            m.row_vecs(),
            vec![
                vec![1, 1, 1, 0],
                vec![0, 1, 1, 1],
                vec![1, 0, 1, 1],
                vec![1, 1, 0, 1]
            ]
        );

        let zero = CirculantSpec::new(f, Poly::zero(), 4, 5).unwrap();
        assert!(build_generalized_circulant(&zero).is_zero(&f));

        let f2 = gf(2);
        let r2 = PolyRing::new(&f2);
        let unit = CirculantSpec::new(f2, r2.one(), 3, 5).unwrap();
        assert_eq!(
            build_generalized_circulant(&unit).row_vecs(),
            vec![
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
                vec![1, 0, 0],
                vec![0, 1, 0]
            ]
        );
    }

    #[test]
    fn double_block_examples() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        let spec =
            DoubleCirculantSpec::new(f, r.from_ints(&[1, 1, 1]), 4, r.from_ints(&[2, 1]), 2, 4)
                .unwrap();
        assert_eq!(
            build_double_circulant(&spec).row_vecs(),
            vec![
                vec![1, 1, 1, 0, 2, 1],
                vec![0, 1, 1, 1, 1, 2],
                vec![1, 0, 1, 1, 2, 1],
                vec![1, 1, 0, 1, 1, 2]
            ]
        );

        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let spec = DoubleCirculantSpec::new(
            f5,
            r5.from_ints(&[-1, 1]),
            2,
            r5.from_ints(&[-2, 1, 1]),
            3,
            5,
        )
        .unwrap();
        assert_eq!(
            build_double_circulant(&spec).row_vecs(),
            vec![
                vec![4, 1, 3, 1, 1],
                vec![1, 4, 1, 3, 1],
                vec![4, 1, 1, 1, 3],
                vec![1, 4, 3, 1, 1],
                vec![4, 1, 1, 3, 1]
            ]
        );
        let multi = build_multiple_circulant(&spec.to_multiple());
        assert_eq!(multi, build_double_circulant(&spec));
    }

    #[test]
    fn three_block_fixture_has_ones_column() {
        let f = gf(7);
        let r = PolyRing::new(&f);
        let spec = MultiCirculantSpec::new(
            f,
            vec![
                CirculantBlock::new(r.from_ints(&[6, 1]), 2),
                CirculantBlock::new(r.from_ints(&[5, 1, 1]), 3),
                CirculantBlock::new(r.one(), 1),
            ],
            6,
        )
        .unwrap();
        let m = build_multiple_circulant(&spec);
        assert_eq!((m.rows(), m.cols()), (6, 6));
        assert_eq!(m.column(5), vec![1; 6]);
        assert_eq!(m.row(1), &[1, 6, 1, 5, 1, 1]);
    }

    #[test]
    fn spec_validation() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        assert_eq!(
            CirculantSpec::new(f, r.from_ints(&[1, 1]), 3, 2).unwrap_err(),
            Error::CharDividesN { n: 3, p: 3 }
        );
        assert!(matches!(
            CirculantSpec::new(f, r.from_ints(&[1, 1, 1]), 2, 2),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            CirculantSpec::new(f, r.one(), 2, 0),
            Err(Error::InvalidSpec(_))
        ));
        assert_eq!(
            CirculantSpec::new(f, r.one(), 2, 10)
                .unwrap()
                .with_max_entries(10)
                .unwrap_err(),
            Error::MatrixTooLarge {
                entries: 20,
                cap: 10
            }
        );
        assert!(MultiCirculantSpec::new(f, vec![], 1).is_err());
    }

    #[test]
    fn fourier_examples() {
        let f = gf(3);
        assert_eq!(vandermonde_column(&f, 1, 4).column(0), vec![1, 1, 1, 1]);
        assert_eq!(vandermonde_column(&f, 2, 4).column(0), vec![1, 2, 1, 2]);
        assert_eq!(
            generalized_fourier(&f, 1, 3, 1).unwrap().entries(),
            &[1, 1, 1]
        );
        assert_eq!(
            generalized_fourier(&f, 2, 2, 2).unwrap().row_vecs(),
            vec![vec![1, 1], vec![1, 2]]
        );
        assert_eq!(
            generalized_fourier(&f, 2, 2, 4),
            Err(Error::OrderMismatch { expected: 4 })
        );

        let gf9 = ExtField::new(f, &[1, 0, 1]).unwrap();
        let x = gf9.generator();
        let v = vandermonde_column(&gf9, x, 3);
        assert_eq!(v.column(0), vec![gf9.one(), x, gf9.from_int(2)]);
        let phi = generalized_fourier(&gf9, x, 2, 4).unwrap();
        let two_x = gf9.mul(gf9.from_int(2), x);
        assert_eq!(phi.row(0), &[gf9.one(); 4]);
        assert_eq!(phi.row(1), &[gf9.one(), x, gf9.from_int(2), two_x]);
    }
}
