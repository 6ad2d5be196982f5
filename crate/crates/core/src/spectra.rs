//! Spectral checks over an extension field, and explicit eigenvalue-0
//! eigenvectors of square double circulant matrices.

use alloc::vec::Vec;

use crate::circulant::{
    build_double_circulant, build_generalized_circulant, generalized_fourier, vandermonde_column,
    CirculantSpec, DoubleCirculantSpec,
};
use crate::error::{Error, Result};
use crate::field::{find_root_of_unity, Embedding, ExtElem, ExtField, Field, PrimeField};
use crate::matrix::DenseMatrix;
use crate::num;
use crate::poly::{Poly, PolyRing};
use crate::rank::{double_rank_formula, gaussian_rank, nullity, RankComponents};

/// An extension of the spec field holding a primitive `L`-th root of unity
/// `zeta`, where `L` is the lcm of the block lengths. The root for a block of
/// length `n` is `zeta^(L/n)`, so every block shares one field and one root.
#[derive(Debug, Clone)]
pub struct SpectralField {
    field: ExtField,
    zeta: ExtElem,
    period: usize,
    embedding: Embedding,
}

impl SpectralField {
    pub fn new<F: Field>(source: &F, lengths: &[usize]) -> Result<Self> {
        let mut period = 1usize;
        for &n in lengths {
            if n == 0 {
                return Err(Error::InvalidSpec("block length must be positive"));
            }
            period = num::lcm(period, n).ok_or(Error::TooLarge)?;
        }
        let p = source.characteristic();
        if period as u64 % p == 0 {
            return Err(Error::CharDividesN { n: period, p });
        }
        let base = PrimeField::new(p)?;
        let k = num::lcm(source.degree(), num::multiplicative_order(p, period))
            .ok_or(Error::TooLarge)?;
        let field = if k == source.degree() && k > 1 {
            ExtField::new(base, &source.modulus())?
        } else {
            ExtField::with_degree(base, k)?
        };
        let zeta = find_root_of_unity(&field, period)?;
        let embedding = Embedding::new(source, &field)?;
        Ok(Self {
            field,
            zeta,
            period,
            embedding,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// The primitive `period`-th root every block root is derived from.
    pub fn zeta(&self) -> ExtElem {
        self.zeta
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// `zeta^(L/n)`, a primitive `n`-th root of unity, for `n | L`.
    pub fn root(&self, n: usize) -> Result<ExtElem> {
        if n == 0 || self.period % n != 0 {
            return Err(Error::NoRootOfUnity(n));
        }
        Ok(self.field.pow(self.zeta, (self.period / n) as u128))
    }

    pub fn lift<F: Field>(&self, source: &F, x: F::Elem) -> ExtElem {
        self.embedding.map(source, x)
    }

    pub fn lift_poly<F: Field>(&self, source: &F, g: &Poly<F::Elem>) -> Poly<ExtElem> {
        let coeffs = g.coeffs().iter().map(|&c| self.lift(source, c)).collect();
        PolyRing::new(&self.field).poly(coeffs)
    }

    pub fn lift_matrix<F: Field>(
        &self,
        source: &F,
        m: &DenseMatrix<F::Elem>,
    ) -> DenseMatrix<ExtElem> {
        m.map(|x| self.lift(source, x))
    }
}

/// `M V(x)_n == g(x) V(x)_m` for `x = omega^j`, `j = 0..n`, with `M` already
/// lifted. `offset` places `V(x)_n` inside a longer zero column.
fn eigen_holds(
    ext: &ExtField,
    m: &DenseMatrix<ExtElem>,
    g: &Poly<ExtElem>,
    omega: ExtElem,
    n: usize,
    offset: usize,
) -> Result<bool> {
    let ring = PolyRing::new(ext);
    let mut x = ext.one();
    for _ in 0..n {
        let v = vandermonde_column(ext, x, n);
        let mut col = DenseMatrix::zeros(ext, m.cols(), 1);
        for i in 0..n {
            col.set(offset + i, 0, v.get(i, 0));
        }
        let lhs = m.mul(ext, &col)?;
        let rhs = vandermonde_column(ext, x, m.rows()).scale(ext, ring.eval(g, x));
        if lhs != rhs {
            return Ok(false);
        }
        x = ext.mul(x, omega);
    }
    Ok(true)
}

/// `M(g)_{m x n} V(omega^j)_n = g(omega^j) V(omega^j)_m` for every `j`.
pub fn verify_eigen_identity<F: Field>(spec: &CirculantSpec<F>) -> Result<bool> {
    let f = spec.field();
    let sf = SpectralField::new(f, &[spec.n()])?;
    let m = sf.lift_matrix(f, &build_generalized_circulant(spec));
    let g = sf.lift_poly(f, spec.g());
    eigen_holds(sf.field(), &m, &g, sf.root(spec.n())?, spec.n(), 0)
}

/// Both block eigen-identities of `M(g, g')`: `(V(omega^j)_n ; 0)` maps to
/// `g(omega^j) V(omega^j)_m` and `(0 ; V(omega'^j')_n')` to
/// `g'(omega'^j') V(omega'^j')_m`.
pub fn verify_double_eigen_identity<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<bool> {
    let f = spec.field();
    let (n, np) = (spec.n(), spec.n_prime());
    let sf = SpectralField::new(f, &[n, np])?;
    let m = sf.lift_matrix(f, &build_double_circulant(spec));
    let g = sf.lift_poly(f, spec.g());
    let gp = sf.lift_poly(f, spec.g_prime());
    Ok(eigen_holds(sf.field(), &m, &g, sf.root(n)?, n, 0)?
        && eigen_holds(sf.field(), &m, &gp, sf.root(np)?, np, n)?)
}

fn eval_diag(ext: &ExtField, g: &Poly<ExtElem>, omega: ExtElem, n: usize) -> Vec<ExtElem> {
    let ring = PolyRing::new(ext);
    (0..n as u128)
        .map(|j| ring.eval(g, ext.pow(omega, j)))
        .collect()
}

/// `M(g)_{m x n} Phi(omega)_{n x n} = Phi(omega)_{m x n} diag(g(omega^j))`.
pub fn verify_diagonalization<F: Field>(spec: &CirculantSpec<F>) -> Result<bool> {
    let f = spec.field();
    let (n, rows) = (spec.n(), spec.m());
    let sf = SpectralField::new(f, &[n])?;
    let ext = sf.field();
    let omega = sf.root(n)?;
    let m = sf.lift_matrix(f, &build_generalized_circulant(spec));
    let g = sf.lift_poly(f, spec.g());
    let lhs = m.mul(ext, &generalized_fourier(ext, omega, n, n)?)?;
    let diag = DenseMatrix::diagonal(ext, &eval_diag(ext, &g, omega, n));
    let rhs = generalized_fourier(ext, omega, rows, n)?.mul(ext, &diag)?;
    Ok(lhs == rhs)
}

/// The blocked version: `M(g, g') diag(Phi(omega)_{n x n}, Phi(omega')_{n' x n'})`
/// equals `(Phi(omega)_{m x n} | Phi(omega')_{m x n'})` times the diagonal of
/// `g(omega^j)` followed by `g'(omega'^j')`.
pub fn verify_double_diagonalization<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<bool> {
    let f = spec.field();
    let (n, np, rows) = (spec.n(), spec.n_prime(), spec.m());
    let sf = SpectralField::new(f, &[n, np])?;
    let ext = sf.field();
    let (omega, omega_p) = (sf.root(n)?, sf.root(np)?);
    let m = sf.lift_matrix(f, &build_double_circulant(spec));
    let blocked = DenseMatrix::block_diag(
        ext,
        &generalized_fourier(ext, omega, n, n)?,
        &generalized_fourier(ext, omega_p, np, np)?,
    );
    let lhs = m.mul(ext, &blocked)?;
    let mut values = eval_diag(ext, &sf.lift_poly(f, spec.g()), omega, n);
    values.extend(eval_diag(
        ext,
        &sf.lift_poly(f, spec.g_prime()),
        omega_p,
        np,
    ));
    let phi = generalized_fourier(ext, omega, rows, n)?
        .hstack(&generalized_fourier(ext, omega_p, rows, np)?)?;
    let rhs = phi.mul(ext, &DenseMatrix::diagonal(ext, &values))?;
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelTag {
    /// Root `omega^j` of `gcd(g, X^n - 1)`.
    E1(usize),
    /// Root `omega'^j'` of `gcd(g', X^n' - 1)`.
    E2(usize),
    /// Index `jbar` of an `ell`-th root `eta^jbar` with `g, g'` both nonzero there.
    E3(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelVector {
    pub tag: KernelTag,
    pub entries: Vec<ExtElem>,
}

/// `d` independent eigenvalue-0 eigenvectors of a square `M(g, g')`, listed
/// E1 by `j`, then E2 by `j'`, then E3 by `jbar`.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    pub spectral: SpectralField,
    pub vectors: Vec<KernelVector>,
    pub e: usize,
    pub e_prime: usize,
    pub e_bar: usize,
}

impl KernelBasis {
    pub fn d(&self) -> usize {
        self.vectors.len()
    }

    pub fn field(&self) -> &ExtField {
        self.spectral.field()
    }

    /// The vectors as columns of an `(n + n') x d` matrix.
    pub fn matrix(&self) -> DenseMatrix<ExtElem> {
        let rows = self.vectors.first().map_or(0, |v| v.entries.len());
        let mut out = DenseMatrix::zeros(self.field(), rows, self.vectors.len());
        for (j, v) in self.vectors.iter().enumerate() {
            for (i, &x) in v.entries.iter().enumerate() {
                out.set(i, j, x);
            }
        }
        out
    }
}

fn powers_v(ext: &ExtField, x: ExtElem, len: usize, scale: ExtElem) -> Vec<ExtElem> {
    let mut out = Vec::with_capacity(len);
    let mut acc = scale;
    for _ in 0..len {
        out.push(acc);
        acc = ext.mul(acc, x);
    }
    out
}

/// Builds the E1, E2 and E3 vectors and checks them: each must lie in the
/// kernel of `M(g, g')_{(n+n') x (n+n')}`, the counts must match the rank
/// formula's `e, e', ebar`, and the stack must have rank `d`.
pub fn kernel_basis<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<KernelBasis> {
    if !spec.is_square() {
        return Err(Error::NotSquare);
    }
    let f = spec.field();
    let (n, np, ell) = (spec.n(), spec.n_prime(), spec.ell());
    let len = n + np;
    let sf = SpectralField::new(f, &[n, np])?;
    let ext = *sf.field();
    let ring = PolyRing::new(f);
    let ext_ring = PolyRing::new(&ext);
    let g = sf.lift_poly(f, spec.g());
    let gp = sf.lift_poly(f, spec.g_prime());
    let gcd = sf.lift_poly(f, &ring.gcd(spec.g(), &ring.x_pow_minus_one(n))?);
    let gcd_p = sf.lift_poly(f, &ring.gcd(spec.g_prime(), &ring.x_pow_minus_one(np))?);

    let mut vectors = Vec::new();
    let (omega, omega_p, eta) = (sf.root(n)?, sf.root(np)?, sf.root(ell)?);
    for j in 0..n {
        let x = ext.pow(omega, j as u128);
        if ext.is_zero(ext_ring.eval(&gcd, x)) {
            let mut entries = powers_v(&ext, x, n, ext.one());
            entries.resize(len, ext.zero());
            vectors.push(KernelVector {
                tag: KernelTag::E1(j),
                entries,
            });
        }
    }
    let e = vectors.len();
    for j in 0..np {
        let x = ext.pow(omega_p, j as u128);
        if ext.is_zero(ext_ring.eval(&gcd_p, x)) {
            let mut entries = alloc::vec![ext.zero(); n];
            entries.extend(powers_v(&ext, x, np, ext.one()));
            vectors.push(KernelVector {
                tag: KernelTag::E2(j),
                entries,
            });
        }
    }
    let e_prime = vectors.len() - e;
    for jbar in 0..ell {
        let x = ext.pow(eta, jbar as u128);
        let (a, b) = (ext_ring.eval(&g, x), ext_ring.eval(&gp, x));
        if !ext.is_zero(a) && !ext.is_zero(b) {
            let mut entries = powers_v(&ext, x, n, ext.neg(b));
            entries.extend(powers_v(&ext, x, np, a));
            vectors.push(KernelVector {
                tag: KernelTag::E3(jbar),
                entries,
            });
        }
    }
    let e_bar = vectors.len() - e - e_prime;

    match double_rank_formula(spec)?.components {
        RankComponents::Double(t) if (t.e, t.e_prime, t.e_bar) == (e, e_prime, e_bar) => {}
        _ => {
            return Err(Error::OracleDisagreement(
                "kernel vector counts vs rank formula",
            ))
        }
    }
    let basis = KernelBasis {
        spectral: sf,
        vectors,
        e,
        e_prime,
        e_bar,
    };
    let cols = basis.matrix();
    if basis.d() > 0 {
        let m = basis.spectral.lift_matrix(f, &build_double_circulant(spec));
        if !m.mul(&ext, &cols)?.is_zero(&ext) {
            return Err(Error::OracleDisagreement("kernel vector not annihilated"));
        }
        if gaussian_rank(&ext, &cols) != basis.d() {
            return Err(Error::OracleDisagreement("kernel vectors are dependent"));
        }
    }
    Ok(basis)
}

/// Swapping `(g, n)` with `(g', n')` sends each E3 vector to minus its
/// block-swapped image. Checks this on the constructed bases.
pub fn verify_e3_swap_sign<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<bool> {
    let n = spec.n();
    let original = kernel_basis(spec)?;
    let swapped = kernel_basis(&spec.swapped())?;
    if original.field() != swapped.field() || original.spectral.zeta() != swapped.spectral.zeta() {
        return Ok(false);
    }
    let ext = *original.field();
    let e3 = |b: &KernelBasis| -> Vec<(usize, Vec<ExtElem>)> {
        b.vectors
            .iter()
            .filter_map(|v| match v.tag {
                KernelTag::E3(j) => Some((j, v.entries.clone())),
                _ => None,
            })
            .collect()
    };
    let (a, b) = (e3(&original), e3(&swapped));
    Ok(a.len() == b.len()
        && a.iter().zip(&b).all(|((ja, va), (jb, vb))| {
            let mut expected: Vec<ExtElem> = va[n..].to_vec();
            expected.extend_from_slice(&va[..n]);
            ja == jb && expected.iter().map(|&x| ext.neg(x)).eq(vb.iter().copied())
        }))
}

/// `(n + n') - rank M(g, g')` over the spec field.
pub fn kernel_dimension_oracle<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<usize> {
    if !spec.is_square() {
        return Err(Error::NotSquare);
    }
    Ok(nullity(spec.field(), &build_double_circulant(spec)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn table_spec() -> DoubleCirculantSpec<PrimeField> {
        let f = gf(3);
        let r = PolyRing::new(&f);
        DoubleCirculantSpec::new(f, r.from_ints(&[1, 1, 1]), 4, r.from_ints(&[2, 1]), 2, 6).unwrap()
    }

    fn gf5_spec() -> DoubleCirculantSpec<PrimeField> {
        let f = gf(5);
        let r = PolyRing::new(&f);
        DoubleCirculantSpec::new(f, r.from_ints(&[4, 1]), 2, r.from_ints(&[3, 1, 1]), 3, 5).unwrap()
    }

    #[test]
    fn spectral_field_shapes() {
        let sf = SpectralField::new(&gf(3), &[4, 2]).unwrap();
        assert_eq!((sf.field().degree(), sf.period()), (2, 4));
        let sf = SpectralField::new(&gf(5), &[2, 3]).unwrap();
        assert_eq!(sf.field().degree(), 2);
        assert!(crate::field::has_order(sf.field(), sf.root(3).unwrap(), 3));
        assert_eq!(sf.root(4), Err(Error::NoRootOfUnity(4)));
        assert!(matches!(
            SpectralField::new(&gf(3), &[3]),
            Err(Error::CharDividesN { .. })
        ));

        let gf9 = ExtField::new(gf(3), &[1, 0, 1]).unwrap();
        let sf = SpectralField::new(&gf9, &[8]).unwrap();
        assert_eq!(sf.field().modulus(), gf9.modulus());
        let sf = SpectralField::new(&gf9, &[5]).unwrap();
        assert_eq!(sf.field().degree(), 4);
    }

    #[test]
    fn table_kernel_basis() {
        let kb = kernel_basis(&table_spec()).unwrap();
        let ext = *kb.field();
        let lift = |v: &[u64]| v.iter().map(|&x| ext.embed_base(x)).collect::<Vec<_>>();
        assert_eq!((kb.e, kb.e_prime, kb.e_bar, kb.d()), (1, 1, 1, 3));
        assert_eq!(kb.vectors[0].tag, KernelTag::E1(0));
        assert_eq!(kb.vectors[0].entries, lift(&[1, 1, 1, 1, 0, 0]));
        assert_eq!(kb.vectors[1].tag, KernelTag::E2(0));
        assert_eq!(kb.vectors[1].entries, lift(&[0, 0, 0, 0, 1, 1]));
        assert_eq!(kb.vectors[2].tag, KernelTag::E3(1));
        assert_eq!(kb.vectors[2].entries, lift(&[2, 1, 2, 1, 1, 2]));
        assert_eq!(kernel_dimension_oracle(&table_spec()), Ok(3));
        assert_eq!(verify_e3_swap_sign(&table_spec()), Ok(true));
    }

    #[test]
    fn gf5_kernel_basis() {
        let kb = kernel_basis(&gf5_spec()).unwrap();
        let tags: Vec<_> = kb.vectors.iter().map(|v| v.tag).collect();
        assert_eq!(tags, vec![KernelTag::E1(0), KernelTag::E2(0)]);
        assert_eq!(kernel_dimension_oracle(&gf5_spec()), Ok(2));
    }

    #[test]
    fn minimal_kernel_is_one_e3() {
        let f = gf(5);
        let r = PolyRing::new(&f);
        let spec = DoubleCirculantSpec::new(f, r.one(), 2, r.from_ints(&[2]), 3, 5).unwrap();
        let kb = kernel_basis(&spec).unwrap();
        assert_eq!(kb.vectors.len(), 1);
        assert_eq!(kb.vectors[0].tag, KernelTag::E3(0));
        assert_eq!(verify_e3_swap_sign(&spec), Ok(true));
    }

    #[test]
    fn zero_spec_kernel() {
        let f = gf(5);
        let spec = DoubleCirculantSpec::new(f, Poly::zero(), 2, Poly::zero(), 3, 5).unwrap();
        assert_eq!(kernel_basis(&spec).unwrap().d(), 5);
        assert_eq!(kernel_dimension_oracle(&spec), Ok(5));
        let rect = spec.with_rows(4).unwrap();
        assert_eq!(kernel_basis(&rect).unwrap_err(), Error::NotSquare);
    }

    #[test]
    fn eigen_identities() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        let one = CirculantSpec::new(f, r.one(), 4, 6).unwrap();
        assert_eq!(verify_eigen_identity(&one), Ok(true));
        assert_eq!(verify_eigen_identity(&table_spec().left()), Ok(true));
        assert_eq!(verify_double_eigen_identity(&table_spec()), Ok(true));

        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let spec = CirculantSpec::new(f5, r5.from_ints(&[4, 1]), 2, 5).unwrap();
        assert_eq!(verify_eigen_identity(&spec), Ok(true));
        assert_eq!(verify_double_eigen_identity(&gf5_spec()), Ok(true));
    }

    #[test]
    fn diagonalizations() {
        let f = gf(7);
        let r = PolyRing::new(&f);
        let n1 = CirculantSpec::new(f, r.from_ints(&[3]), 1, 4).unwrap();
        assert_eq!(verify_diagonalization(&n1), Ok(true));
        assert_eq!(verify_diagonalization(&table_spec().left()), Ok(true));
        assert_eq!(verify_double_diagonalization(&table_spec()), Ok(true));
        assert_eq!(verify_double_diagonalization(&gf5_spec()), Ok(true));
    }
}
