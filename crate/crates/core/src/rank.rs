//! Closed-form ranks of circulant-type matrices and the elimination oracle
//! they are checked against.
//!
//! The formula paths only compute polynomial gcds and lcms against `X^n - 1`;
//! they never build the matrix.

use alloc::vec::Vec;

use crate::circulant::{
    build_double_circulant, build_generalized_circulant, build_multiple_circulant, CirculantSpec,
    DoubleCirculantSpec, MultiCirculantSpec,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::DenseMatrix;
use crate::poly::{deg0, Poly, PolyRing};

/// Rank by row reduction on a copy: columns left to right, the first
/// nonzero entry at or below the current pivot row is the pivot.
pub fn gaussian_rank<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<F::Elem> = m.entries().to_vec();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !field.is_zero(a[r * cols + c])) else {
            continue;
        };
        if p != rank {
            for j in c..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
        }
        let inv = field.inv(a[rank * cols + c]).expect("pivot is nonzero");
        let (top, bottom) = a.split_at_mut((rank + 1) * cols);
        let pivot_row = &top[rank * cols..];
        for row in bottom.chunks_exact_mut(cols) {
            let lead = row[c];
            if field.is_zero(lead) {
                continue;
            }
            let factor = field.mul(lead, inv);
            row[c] = field.zero();
            for j in c + 1..cols {
                row[j] = field.sub(row[j], field.mul(factor, pivot_row[j]));
            }
        }
        rank += 1;
    }
    rank
}

/// `cols - rank`.
pub fn nullity<F: Field>(field: &F, m: &DenseMatrix<F::Elem>) -> usize {
    m.cols() - gaussian_rank(field, m)
}

/// Whether `word` lies in the row space of `basis`.
pub fn in_row_space<F: Field>(field: &F, basis: &DenseMatrix<F::Elem>, word: &[F::Elem]) -> bool {
    if word.len() != basis.cols() {
        return false;
    }
    let stacked = basis
        .vstack(&DenseMatrix::new(1, word.len(), word.to_vec()))
        .expect("column counts match");
    gaussian_rank(field, &stacked) == gaussian_rank(field, basis)
}

/// Whether rows `start .. start + count` are linearly independent.
pub fn consecutive_rows_independent<F: Field>(
    field: &F,
    m: &DenseMatrix<F::Elem>,
    start: usize,
    count: usize,
) -> Result<bool> {
    let end = start.checked_add(count).ok_or(Error::IndexOutOfRange)?;
    if end > m.rows() {
        return Err(Error::IndexOutOfRange);
    }
    if count == 0 {
        return Ok(true);
    }
    Ok(gaussian_rank(field, &m.select_rows(start..end)?) == count)
}

/// Every window of `count` consecutive rows is independent.
pub fn every_window_independent<F: Field>(
    field: &F,
    m: &DenseMatrix<F::Elem>,
    count: usize,
) -> bool {
    count <= m.rows()
        && (0..=m.rows() - count)
            .all(|s| consecutive_rows_independent(field, m, s, count).unwrap_or(false))
}

/// Every cyclic window of `count` rows (indices taken mod `rows`) is
/// independent. For a matrix whose row count is a common multiple of the
/// block lengths, this covers every window of every row count.
pub fn every_cyclic_window_independent<F: Field>(
    field: &F,
    m: &DenseMatrix<F::Elem>,
    count: usize,
) -> bool {
    if count == 0 {
        return true;
    }
    (0..m.rows()).all(|s| {
        m.cyclic_rows(s, count)
            .map(|w| gaussian_rank(field, &w) == count)
            .unwrap_or(false)
    })
}

/// Intermediate quantities of the double circulant rank formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleTrace {
    /// `deg gcd(g, X^n - 1)`
    pub e: usize,
    /// `deg gcd(g', X^n' - 1)`
    pub e_prime: usize,
    /// `deg (X^l - 1) / gcd(g g', X^l - 1)`
    pub e_bar: usize,
    pub d: usize,
    /// `gcd(n, n')`
    pub ell: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankComponents {
    Circulant {
        d: usize,
    },
    Double(DoubleTrace),
    /// `s = deg lcm((X^n_i - 1) / gcd(g_i, X^n_i - 1))`, with `d = sum n_i - s`.
    Multiple {
        s: usize,
        d: usize,
    },
}

impl RankComponents {
    pub fn d(&self) -> usize {
        match *self {
            RankComponents::Circulant { d } | RankComponents::Multiple { d, .. } => d,
            RankComponents::Double(t) => t.d,
        }
    }
}

/// Formula rank, optional oracle rank, and the formula's trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RankReport {
    pub formula_rank: usize,
    pub oracle_rank: Option<usize>,
    pub components: RankComponents,
}

impl RankReport {
    /// `None` when the oracle was skipped.
    pub fn agrees(&self) -> Option<bool> {
        self.oracle_rank.map(|r| r == self.formula_rank)
    }
}

fn block_gcd<F: Field>(ring: &PolyRing<'_, F>, g: &Poly<F::Elem>, n: usize) -> Poly<F::Elem> {
    ring.gcd(g, &ring.x_pow_minus_one(n))
        .expect("X^n - 1 is nonzero")
}

/// `min(m, n - deg gcd(g, X^n - 1))`, without building the matrix.
pub fn circulant_rank_formula<F: Field>(spec: &CirculantSpec<F>) -> RankReport {
    let ring = PolyRing::new(spec.field());
    let d = deg0(&block_gcd(&ring, spec.g(), spec.n()));
    RankReport {
        formula_rank: spec.m().min(spec.n() - d),
        oracle_rank: None,
        components: RankComponents::Circulant { d },
    }
}

/// Double circulant rank `min(m, n + n' - d)` where
/// `d = deg gcd(g, X^n-1) gcd(g', X^n'-1) (X^l-1) / gcd(g g', X^l-1)`.
/// The division is exact; a remainder is reported as an error.
pub fn double_rank_formula<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<RankReport> {
    let ring = PolyRing::new(spec.field());
    let ell = spec.ell();
    let gcd_left = block_gcd(&ring, spec.g(), spec.n());
    let gcd_right = block_gcd(&ring, spec.g_prime(), spec.n_prime());
    let x_ell = ring.x_pow_minus_one(ell);
    let shared = ring.gcd(&ring.mul(spec.g(), spec.g_prime()), &x_ell)?;
    let numerator = ring.mul(&ring.mul(&gcd_left, &gcd_right), &x_ell);
    let d = deg0(&ring.div_exact(&numerator, &shared)?);
    let trace = DoubleTrace {
        e: deg0(&gcd_left),
        e_prime: deg0(&gcd_right),
        e_bar: deg0(&ring.div_exact(&x_ell, &shared)?),
        d,
        ell,
    };
    if trace.e + trace.e_prime + trace.e_bar != d {
        return Err(Error::OracleDisagreement("d != e + e' + e_bar"));
    }
    Ok(RankReport {
        formula_rank: spec.m().min(spec.n() + spec.n_prime() - d),
        oracle_rank: None,
        components: RankComponents::Double(trace),
    })
}

/// The lcm of the block quotients `(X^n_i - 1) / gcd(g_i, X^n_i - 1)`.
pub fn block_quotient_lcm<F: Field>(spec: &MultiCirculantSpec<F>) -> Result<Poly<F::Elem>> {
    let ring = PolyRing::new(spec.field());
    let quotients = spec
        .blocks()
        .iter()
        .map(|b| {
            let x_n = ring.x_pow_minus_one(b.n);
            ring.div_exact(&x_n, &block_gcd(&ring, &b.g, b.n))
        })
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&Poly<F::Elem>> = quotients.iter().collect();
    ring.lcm_all(&refs)
}

/// Multiple circulant rank `min(m, s)` with `s` the degree of
/// [`block_quotient_lcm`].
pub fn multiple_rank_formula<F: Field>(spec: &MultiCirculantSpec<F>) -> Result<RankReport> {
    let s = deg0(&block_quotient_lcm(spec)?);
    Ok(RankReport {
        formula_rank: spec.m().min(s),
        oracle_rank: None,
        components: RankComponents::Multiple {
            s,
            d: spec.total_len() - s,
        },
    })
}

pub fn rank_circulant<F: Field>(spec: &CirculantSpec<F>) -> RankReport {
    let oracle = gaussian_rank(spec.field(), &build_generalized_circulant(spec));
    RankReport {
        oracle_rank: Some(oracle),
        ..circulant_rank_formula(spec)
    }
}

pub fn rank_double<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<RankReport> {
    let report = double_rank_formula(spec)?;
    let oracle = gaussian_rank(spec.field(), &build_double_circulant(spec));
    Ok(RankReport {
        oracle_rank: Some(oracle),
        ..report
    })
}

pub fn rank_multiple<F: Field>(spec: &MultiCirculantSpec<F>) -> Result<RankReport> {
    let report = multiple_rank_formula(spec)?;
    let oracle = gaussian_rank(spec.field(), &build_multiple_circulant(spec));
    Ok(RankReport {
        oracle_rank: Some(oracle),
        ..report
    })
}

/// For a square double circulant (`m = n + n'`): the oracle rank is below
/// `n + n'` and the formula's deficiency satisfies `d >= l >= 1`.
pub fn assert_not_full_rank<F: Field>(spec: &DoubleCirculantSpec<F>) -> Result<bool> {
    if !spec.is_square() {
        return Err(Error::NotSquare);
    }
    let report = rank_double(spec)?;
    let RankComponents::Double(trace) = report.components else {
        unreachable!("double formula yields a double trace");
    };
    let oracle = report.oracle_rank.expect("oracle ran");
    Ok(oracle < spec.m() && trace.d >= trace.ell && trace.ell >= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::CirculantBlock;
    use crate::field::PrimeField;
    use alloc::vec;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn double(
        p: u64,
        g: &[i64],
        n: usize,
        gp: &[i64],
        np: usize,
        m: usize,
    ) -> DoubleCirculantSpec<PrimeField> {
        let f = gf(p);
        let r = PolyRing::new(&f);
        DoubleCirculantSpec::new(f, r.from_ints(g), n, r.from_ints(gp), np, m).unwrap()
    }

    #[test]
    fn oracle_basics() {
        let f = gf(5);
        assert_eq!(gaussian_rank(&f, &DenseMatrix::zeros(&f, 3, 4)), 0);
        assert_eq!(gaussian_rank(&f, &DenseMatrix::identity(&f, 6)), 6);
        let dup =
            DenseMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 1], vec![0, 0, 0]]).unwrap();
        assert_eq!(gaussian_rank(&f, &dup), 1);
        assert_eq!(nullity(&f, &dup), 2);
        let spec = double(3, &[1, 1, 1], 4, &[2, 1], 2, 4);
        assert_eq!(
            gaussian_rank(spec.field(), &build_double_circulant(&spec)),
            3
        );
    }

    #[test]
    fn single_formula_examples() {
        let f = gf(3);
        let r = PolyRing::new(&f);
        let zero = rank_circulant(&CirculantSpec::new(f, Poly::zero(), 4, 4).unwrap());
        assert_eq!((zero.formula_rank, zero.components.d()), (0, 4));
        assert_eq!(zero.agrees(), Some(true));

        let rep = rank_circulant(&CirculantSpec::new(f, r.from_ints(&[1, 1, 1]), 4, 4).unwrap());
        assert_eq!(rep.components, RankComponents::Circulant { d: 1 });
        assert_eq!((rep.formula_rank, rep.oracle_rank), (3, Some(3)));

        let f5 = gf(5);
        let r5 = PolyRing::new(&f5);
        let rep = rank_circulant(&CirculantSpec::new(f5, r5.from_ints(&[4, 1]), 2, 2).unwrap());
        assert_eq!((rep.formula_rank, rep.oracle_rank), (1, Some(1)));
    }

    #[test]
    fn double_formula_examples() {
        let rep = rank_double(&double(3, &[1, 1, 1], 4, &[2, 1], 2, 4)).unwrap();
        assert_eq!(
            rep.components,
            RankComponents::Double(DoubleTrace {
                e: 1,
                e_prime: 1,
                e_bar: 1,
                d: 3,
                ell: 2
            })
        );
        assert_eq!((rep.formula_rank, rep.oracle_rank), (3, Some(3)));

        let rep = rank_double(&double(5, &[-1, 1], 2, &[-2, 1, 1], 3, 5)).unwrap();
        assert_eq!(
            rep.components,
            RankComponents::Double(DoubleTrace {
                e: 1,
                e_prime: 1,
                e_bar: 0,
                d: 2,
                ell: 1
            })
        );
        assert_eq!((rep.formula_rank, rep.oracle_rank), (3, Some(3)));

        let rep = rank_double(&double(7, &[6, 1], 2, &[5, 1, 1], 3, 6)).unwrap();
        assert_eq!((rep.formula_rank, rep.oracle_rank), (3, Some(3)));
    }

    #[test]
    fn both_zero_is_total() {
        let rep = rank_double(&double(3, &[], 4, &[], 2, 5)).unwrap();
        assert_eq!(rep.components.d(), 6);
        assert_eq!((rep.formula_rank, rep.oracle_rank), (0, Some(0)));
    }

    #[test]
    fn multiple_examples() {
        let f = gf(7);
        let r = PolyRing::new(&f);
        let single =
            MultiCirculantSpec::new(f, vec![CirculantBlock::new(r.from_ints(&[6, 1]), 2)], 3)
                .unwrap();
        let rep = rank_multiple(&single).unwrap();
        assert_eq!((rep.formula_rank, rep.oracle_rank), (1, Some(1)));

        let spec = double(5, &[-1, 1], 2, &[-2, 1, 1], 3, 5);
        let rep = rank_multiple(&spec.to_multiple()).unwrap();
        assert_eq!(rep.components, RankComponents::Multiple { s: 3, d: 2 });

        let three = MultiCirculantSpec::new(
            f,
            vec![
                CirculantBlock::new(r.from_ints(&[6, 1]), 2),
                CirculantBlock::new(r.from_ints(&[5, 1, 1]), 3),
                CirculantBlock::new(r.one(), 1),
            ],
            6,
        )
        .unwrap();
        let rep = rank_multiple(&three).unwrap();
        assert_eq!(rep.agrees(), Some(true));
        assert_eq!(rep.formula_rank, 4);
    }

    #[test]
    fn consecutive_rows() {
        let spec = double(3, &[1, 1, 1], 4, &[2, 1], 2, 4);
        let f = *spec.field();
        let m = build_double_circulant(&spec);
        assert_eq!(consecutive_rows_independent(&f, &m, 2, 0), Ok(true));
        assert_eq!(consecutive_rows_independent(&f, &m, 0, 3), Ok(true));
        assert_eq!(consecutive_rows_independent(&f, &m, 1, 3), Ok(true));
        assert_eq!(consecutive_rows_independent(&f, &m, 0, 4), Ok(false));
        assert_eq!(
            consecutive_rows_independent(&f, &m, 2, 3),
            Err(Error::IndexOutOfRange)
        );
        assert!(every_window_independent(&f, &m, 3));
        assert!(every_cyclic_window_independent(&f, &m, 3));
    }

    #[test]
    fn not_full_rank_examples() {
        assert_eq!(
            assert_not_full_rank(&double(5, &[-1, 1], 2, &[-2, 1, 1], 3, 5)),
            Ok(true)
        );
        assert_eq!(
            assert_not_full_rank(&double(3, &[1], 1, &[1], 1, 2)),
            Ok(true)
        );
        let ex2 = double(7, &[-2, 1, 1], 4, &[-1, 1], 2, 6);
        assert_eq!(rank_double(&ex2).unwrap().oracle_rank, Some(3));
        assert_eq!(assert_not_full_rank(&ex2), Ok(true));
        assert_eq!(
            assert_not_full_rank(&double(3, &[1], 1, &[1], 1, 3)),
            Err(Error::NotSquare)
        );
    }
}
