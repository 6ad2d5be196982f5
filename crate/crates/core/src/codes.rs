//! Generator matrices for cyclic, quasi-cyclic index-1.5 and double cyclic
//! codes, taken as the leading rows of the corresponding circulant matrix.

use alloc::vec::Vec;

use crate::circulant::{
    build_double_circulant, build_generalized_circulant, CirculantSpec, DoubleCirculantSpec,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::num;
use crate::poly::{deg0, Poly, PolyRing};
use crate::rank::{double_rank_formula, gaussian_rank};

/// Largest code size `|F|^r` that brute-force enumeration accepts.
pub const MAX_ENUMERATION: u128 = 1_000_000;

/// Whether generator construction re-checks the result with the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    Check,
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix<E> {
    matrix: DenseMatrix<E>,
    dimension: usize,
}

impl<E: Copy> GeneratorMatrix<E> {
    pub fn matrix(&self) -> &DenseMatrix<E> {
        &self.matrix
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn length(&self) -> usize {
        self.matrix.cols()
    }
}

/// Keeps the first `r` rows of `full`. With [`Validation::Check`] the kept rows
/// must be independent and span the same space as all of `full`.
fn leading_rows<F: Field>(
    field: &F,
    full: &DenseMatrix<F::Elem>,
    r: usize,
    validation: Validation,
) -> Result<GeneratorMatrix<F::Elem>> {
    let matrix = full.select_rows(0..r)?;
    if validation == Validation::Check {
        if gaussian_rank(field, &matrix) != r {
            return Err(Error::OracleDisagreement("generator rows are dependent"));
        }
        if gaussian_rank(field, &matrix.vstack(full)?) != r {
            return Err(Error::OracleDisagreement(
                "generator rows miss part of the code",
            ));
        }
    }
    Ok(GeneratorMatrix {
        matrix,
        dimension: r,
    })
}

fn check_length<F: Field>(field: &F, g: &Poly<F::Elem>, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSpec("code length must be positive"));
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

/// The cyclic code `{ f g mod X^n - 1 }`.
#[derive(Debug, Clone)]
pub struct CyclicCodeSpec<F: Field> {
    field: F,
    g: Poly<F::Elem>,
    n: usize,
}

impl<F: Field> CyclicCodeSpec<F> {
    pub fn new(field: F, g: Poly<F::Elem>, n: usize) -> Result<Self> {
        check_length(&field, &g, n)?;
        Ok(Self { field, g, n })
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

    /// `n - deg gcd(g, X^n - 1)`.
    pub fn dimension(&self) -> usize {
        let ring = PolyRing::new(&self.field);
        let d = ring
            .gcd(&self.g, &ring.x_pow_minus_one(self.n))
            .expect("X^n - 1 is nonzero");
        self.n - deg0(&d)
    }
}

/// First `n - deg gcd(g, X^n - 1)` rows of `M(g)_{n x n}`.
pub fn cyclic_generator<F: Field>(
    spec: &CyclicCodeSpec<F>,
    validation: Validation,
) -> Result<GeneratorMatrix<F::Elem>> {
    if spec.g.is_zero() {
        return Err(Error::ZeroGenerator);
    }
    let circ = CirculantSpec::new(spec.field.clone(), spec.g.clone(), spec.n, spec.n)?;
    let full = build_generalized_circulant(&circ);
    leading_rows(&spec.field, &full, spec.dimension(), validation)
}

/// Shared behaviour of codes `{ (f g mod X^n - 1, f g' mod X^n' - 1) }`.
pub trait TwoBlockCode<F: Field> {
    fn field(&self) -> &F;
    fn g(&self) -> &Poly<F::Elem>;
    fn n(&self) -> usize;
    fn g_prime(&self) -> &Poly<F::Elem>;
    fn n_prime(&self) -> usize;

    /// `lcm(n, n')`: `X^period` acts as the identity on both blocks.
    fn period(&self) -> usize {
        num::lcm(self.n(), self.n_prime()).expect("block lengths are small")
    }

    /// The word of `f`: `(f g mod X^n - 1, f g' mod X^n' - 1)`.
    fn codeword(&self, f: &Poly<F::Elem>) -> Vec<F::Elem> {
        let ring = PolyRing::new(self.field());
        let mut word = ring.cyclic_mul(f, self.g(), self.n());
        word.extend(ring.cyclic_mul(f, self.g_prime(), self.n_prime()));
        word
    }

    /// `M(g, g')` with `m` rows.
    fn double_spec(&self, m: usize) -> Result<DoubleCirculantSpec<F>> {
        DoubleCirculantSpec::new(
            self.field().clone(),
            self.g().clone(),
            self.n(),
            self.g_prime().clone(),
            self.n_prime(),
            m,
        )
    }
}

/// Quasi-cyclic code of index 1.5: `n` even, `g'` lives modulo `X^(n/2) - 1`.
#[derive(Debug, Clone)]
pub struct Qc15Spec<F: Field> {
    field: F,
    g: Poly<F::Elem>,
    g_prime: Poly<F::Elem>,
    n: usize,
}

impl<F: Field> Qc15Spec<F> {
    pub fn new(field: F, g: Poly<F::Elem>, g_prime: Poly<F::Elem>, n: usize) -> Result<Self> {
        if n % 2 != 0 {
            return Err(Error::OddLength(n));
        }
        check_length(&field, &g, n)?;
        check_length(&field, &g_prime, n / 2)?;
        Ok(Self {
            field,
            g,
            g_prime,
            n,
        })
    }

    /// `n - deg( gcd(g, X^(n/2) + 1) gcd(g, g', X^(n/2) - 1) )`.
    pub fn dimension_formula(&self) -> Result<usize> {
        let ring = PolyRing::new(&self.field);
        let half = self.n / 2;
        let plus = ring.gcd(&self.g, &ring.x_pow_plus_one(half))?;
        let minus = ring.x_pow_minus_one(half);
        let shared = ring.gcd_all(&[&self.g, &self.g_prime, &minus])?;
        Ok(self.n - deg0(&ring.mul(&plus, &shared)))
    }
}

impl<F: Field> TwoBlockCode<F> for Qc15Spec<F> {
    fn field(&self) -> &F {
        &self.field
    }
    fn g(&self) -> &Poly<F::Elem> {
        &self.g
    }
    fn n(&self) -> usize {
        self.n
    }
    fn g_prime(&self) -> &Poly<F::Elem> {
        &self.g_prime
    }
    fn n_prime(&self) -> usize {
        self.n / 2
    }
}

/// First `r` rows of `M(g, g')_{n x (n + n/2)}`. The dimension from
/// [`Qc15Spec::dimension_formula`] must match the double circulant formula
/// with `n' = n/2`; a mismatch is an error.
pub fn qc15_generator<F: Field>(
    spec: &Qc15Spec<F>,
    validation: Validation,
) -> Result<GeneratorMatrix<F::Elem>> {
    if spec.g.is_zero() && spec.g_prime.is_zero() {
        return Err(Error::ZeroGenerators);
    }
    let r = spec.dimension_formula()?;
    let dbl = spec.double_spec(spec.n)?;
    if double_rank_formula(&dbl)?.formula_rank != r {
        return Err(Error::OracleDisagreement(
            "index-1.5 dimension vs double circulant rank",
        ));
    }
    leading_rows(&spec.field, &build_double_circulant(&dbl), r, validation)
}

/// Double cyclic code over `F[X]/(X^n - 1) x F[X]/(X^n' - 1)`.
#[derive(Debug, Clone)]
pub struct DoubleCyclicSpec<F: Field> {
    field: F,
    g: Poly<F::Elem>,
    n: usize,
    g_prime: Poly<F::Elem>,
    n_prime: usize,
}

impl<F: Field> DoubleCyclicSpec<F> {
    pub fn new(
        field: F,
        g: Poly<F::Elem>,
        n: usize,
        g_prime: Poly<F::Elem>,
        n_prime: usize,
    ) -> Result<Self> {
        check_length(&field, &g, n)?;
        check_length(&field, &g_prime, n_prime)?;
        Ok(Self {
            field,
            g,
            n,
            g_prime,
            n_prime,
        })
    }
}

impl<F: Field> TwoBlockCode<F> for DoubleCyclicSpec<F> {
    fn field(&self) -> &F {
        &self.field
    }
    fn g(&self) -> &Poly<F::Elem> {
        &self.g
    }
    fn n(&self) -> usize {
        self.n
    }
    fn g_prime(&self) -> &Poly<F::Elem> {
        &self.g_prime
    }
    fn n_prime(&self) -> usize {
        self.n_prime
    }
}

/// First `n + n' - d` rows of `M(g, g')_{lcm(n, n') x (n + n')}`.
pub fn double_cyclic_generator<F: Field>(
    spec: &DoubleCyclicSpec<F>,
    validation: Validation,
) -> Result<GeneratorMatrix<F::Elem>> {
    if spec.g.is_zero() && spec.g_prime.is_zero() {
        return Err(Error::ZeroGenerators);
    }
    let dbl = spec.double_spec(spec.period())?;
    let d = double_rank_formula(&dbl)?.components.d();
    let r = spec.n + spec.n_prime - d;
    leading_rows(&spec.field, &build_double_circulant(&dbl), r, validation)
}

/// The word `(f g mod X^n - 1, f g' mod X^n' - 1)` of `f`.
pub fn codeword_membership<F: Field, C: TwoBlockCode<F>>(
    code: &C,
    f: &Poly<F::Elem>,
) -> Vec<F::Elem> {
    code.codeword(f)
}

fn code_size<F: Field>(field: &F, r: usize) -> Result<u128> {
    field
        .order()
        .and_then(|q| q.checked_pow(r as u32))
        .filter(|&size| size <= MAX_ENUMERATION)
        .ok_or(Error::TooLarge)
}

/// Every codeword spanned by the generator rows, in the order of their
/// coefficient vectors. Refuses codes with more than [`MAX_ENUMERATION`] words.
pub fn enumerate_codewords<F: Field>(
    field: &F,
    generator: &GeneratorMatrix<F::Elem>,
) -> Result<Vec<Vec<F::Elem>>> {
    let r = generator.dimension();
    let size = code_size(field, r)?;
    let q = field.order().ok_or(Error::TooLarge)?;
    let rows = generator.matrix();
    let mut words = Vec::with_capacity(size as usize);
    for idx in 0..size {
        let mut rest = idx;
        let mut word = alloc::vec![field.zero(); rows.cols()];
        for i in 0..r {
            let c = field.element(rest % q);
            rest /= q;
            if field.is_zero(c) {
                continue;
            }
            for (w, &x) in word.iter_mut().zip(rows.row(i)) {
                *w = field.add(*w, field.mul(c, x));
            }
        }
        words.push(word);
    }
    Ok(words)
}

/// Minimum Hamming weight over nonzero codewords; `None` for the zero code.
pub fn minimum_distance<F: Field>(
    field: &F,
    generator: &GeneratorMatrix<F::Elem>,
) -> Result<Option<usize>> {
    Ok(enumerate_codewords(field, generator)?
        .iter()
        .map(|w| w.iter().filter(|&&x| !field.is_zero(x)).count())
        .filter(|&wt| wt > 0)
        .min())
}
