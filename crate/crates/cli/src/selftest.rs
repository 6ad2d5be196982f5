//! Invariant sweeps behind `circulant selftest` and the acceptance suite.
//! Every failing instance is kept as a replayable [`SpecFile`].

use std::time::{Duration, Instant};

use circulant_core::circulant::{
    build_double_circulant, build_multiple_circulant, CirculantBlock, DoubleCirculantSpec,
    MultiCirculantSpec,
};
use circulant_core::codes::{
    cyclic_generator, double_cyclic_generator, enumerate_codewords, qc15_generator, CyclicCodeSpec,
    DoubleCyclicSpec, Qc15Spec, TwoBlockCode, Validation,
};
use circulant_core::num;
use circulant_core::rank::{
    double_rank_formula, every_cyclic_window_independent, every_window_independent, gaussian_rank,
    multiple_rank_formula, nullity, RankComponents,
};
use circulant_core::spectra::{
    kernel_basis, verify_diagonalization, verify_double_diagonalization,
    verify_double_eigen_identity, verify_e3_swap_sign, verify_eigen_identity,
};
use circulant_core::{Field, PolyRing, PrimeField};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::spec_file::SpecFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Scale {
    Small,
    Full,
}

impl Scale {
    /// `small` at small scale, `full` otherwise.
    fn pick(self, small: usize, full: usize) -> usize {
        match self {
            Scale::Small => small,
            Scale::Full => full,
        }
    }
}

const SEED: u64 = 0x5eed_c12c;
const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone)]
pub struct Failure {
    pub spec: SpecFile,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub elapsed: Duration,
    /// The first few failures; `failed` counts all of them.
    pub failures: Vec<Failure>,
}

impl SweepOutcome {
    pub fn ok(&self) -> bool {
        self.failed == 0 && self.passed > 0
    }
}

struct Tally {
    name: &'static str,
    passed: usize,
    failed: usize,
    failures: Vec<Failure>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            failed: 0,
            failures: Vec::new(),
            start: Instant::now(),
        }
    }

    fn record(&mut self, result: Result<(), String>, spec: impl FnOnce() -> SpecFile) {
        match result {
            Ok(()) => self.passed += 1,
            Err(reason) => {
                self.failed += 1;
                if self.failures.len() < MAX_REPORTED {
                    self.failures.push(Failure {
                        spec: spec(),
                        reason,
                    });
                }
            }
        }
    }

    fn finish(self) -> SweepOutcome {
        SweepOutcome {
            name: self.name,
            passed: self.passed,
            failed: self.failed,
            elapsed: self.start.elapsed(),
            failures: self.failures,
        }
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn core<T>(r: circulant_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).expect("sweep primes are prime")
}

/// Every coefficient vector of length `n` over GF(p), in counting order.
pub fn all_vectors(p: u64, n: usize) -> impl Iterator<Item = Vec<u64>> {
    let total = p.pow(n as u32);
    (0..total).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c
            })
            .collect()
    })
}

fn random_vec(rng: &mut StdRng, p: u64, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.random_range(0..p)).collect()
}

fn random_length(rng: &mut StdRng, p: u64, choices: &[usize]) -> usize {
    loop {
        let n = choices[rng.random_range(0..choices.len())];
        if n as u64 % p != 0 {
            return n;
        }
    }
}

/// A random `g` of degree below `n`, biased towards sharing roots with
/// `X^k - 1` for some `k | ell` so the correction terms are exercised.
fn biased_poly(rng: &mut StdRng, p: u64, n: usize, ell: usize) -> Vec<u64> {
    if !rng.random_bool(0.5) {
        return random_vec(rng, p, n);
    }
    let divisors: Vec<usize> = (1..=ell).filter(|k| ell % k == 0 && *k < n).collect();
    if divisors.is_empty() {
        return random_vec(rng, p, n);
    }
    let k = divisors[rng.random_range(0..divisors.len())];
    let h = random_vec(rng, p, n - k);
    let mut out = vec![0u64; n];
    for (i, &c) in h.iter().enumerate() {
        out[i] = (out[i] + p - c) % p;
        out[i + k] = (out[i + k] + c) % p;
    }
    out
}

fn double_spec(
    p: u64,
    g: &[u64],
    n: usize,
    gp: &[u64],
    np: usize,
    m: usize,
) -> Result<DoubleCirculantSpec<PrimeField>, String> {
    let f = gf(p);
    let ring = PolyRing::new(&f);
    core(DoubleCirculantSpec::new(
        f,
        ring.poly(g.to_vec()),
        n,
        ring.poly(gp.to_vec()),
        np,
        m,
    ))
}

/// Formula against oracle, consecutive windows, and the two-block multiple form.
fn check_double(spec: &DoubleCirculantSpec<PrimeField>) -> Result<(), String> {
    let f = *spec.field();
    let report = core(double_rank_formula(spec))?;
    let RankComponents::Double(t) = report.components else {
        return Err("double formula returned a non-double trace".into());
    };
    ensure(t.d == t.e + t.e_prime + t.e_bar, "d != e + e' + ebar")?;
    let full = build_double_circulant(spec);
    let r = report.formula_rank;
    ensure(gaussian_rank(&f, &full) == r, "formula rank != oracle rank")?;
    ensure(
        every_window_independent(&f, &full, r),
        "a window of r consecutive rows is dependent",
    )?;
    let multi = core(multiple_rank_formula(&spec.to_multiple()))?;
    let saturated = spec.n() + spec.n_prime() - t.d;
    let s_ok = matches!(multi.components, RankComponents::Multiple { s, .. } if s == saturated);
    ensure(
        s_ok && multi.formula_rank == r,
        "two-block multiple formula differs",
    )
}

/// Rank saturation and cyclic windows on `h` rows, `h` a common multiple of
/// `n, n'` with `h >= max_m`.
fn check_tall(spec: &DoubleCirculantSpec<PrimeField>, max_m: usize) -> Result<(), String> {
    let f = *spec.field();
    let period = num::lcm(spec.n(), spec.n_prime()).ok_or("lcm overflow")?;
    let h = max_m.div_ceil(period).max(1) * period;
    let tall = core(spec.with_rows(h))?;
    let r = core(double_rank_formula(&tall))?.formula_rank;
    ensure(
        every_cyclic_window_independent(&f, &build_double_circulant(&tall), r),
        "a wrapped window of r rows is dependent",
    )
}

fn monotone(spec: &DoubleCirculantSpec<PrimeField>, max_m: usize) -> Result<(), String> {
    let f = *spec.field();
    let full = build_double_circulant(&core(spec.with_rows(max_m))?);
    let mut last = 0;
    for m in 1..=max_m {
        let r = gaussian_rank(&f, &core(full.select_rows(0..m))?);
        ensure(r >= last, "rank decreased when adding a row")?;
        last = r;
    }
    let d = core(double_rank_formula(spec))?.components.d();
    let cap = spec.n() + spec.n_prime() - d;
    ensure(
        max_m < cap || last == cap,
        "rank does not saturate at n + n' - d",
    )
}

/// The gcd count identity for `d`, its factored form and the lcm form of `n + n' - d`.
fn check_identities(p: u64, g: &[u64], n: usize, gp: &[u64], np: usize) -> Result<(), String> {
    let f = gf(p);
    let ring = PolyRing::new(&f);
    let ell = num::gcd(n, np);
    let (g, gp) = (ring.poly(g.to_vec()), ring.poly(gp.to_vec()));
    let (xn, xnp, xl) = (
        ring.x_pow_minus_one(n),
        ring.x_pow_minus_one(np),
        ring.x_pow_minus_one(ell),
    );
    ensure(
        core(ring.gcd(&xn, &xnp))? == xl,
        "gcd(X^n - 1, X^n' - 1) != X^ell - 1",
    )?;

    let a = core(ring.gcd(&g, &xn))?;
    let b = core(ring.gcd(&gp, &xnp))?;
    let shared = core(ring.gcd(&ring.mul(&g, &gp), &xl))?;
    let left = core(ring.div_exact(&ring.mul(&a, &b), &shared))?;
    let right = ring.mul(
        &ring.mul(
            &core(ring.gcd(&g, &core(ring.div_exact(&xn, &xl))?))?,
            &core(ring.gcd(&gp, &core(ring.div_exact(&xnp, &xl))?))?,
        ),
        &core(ring.gcd_all(&[&g, &gp, &xl]))?,
    );
    ensure(
        ring.monic(&left) == ring.monic(&right),
        "factored form of d differs",
    )?;

    let quotients = core(ring.lcm(
        &core(ring.div_exact(&xn, &a))?,
        &core(ring.div_exact(&xnp, &b))?,
    ))?;
    let displayed = core(ring.div_exact(
        &ring.mul(&ring.mul(&xn, &xnp), &shared),
        &ring.mul(&ring.mul(&a, &b), &xl),
    ))?;
    ensure(quotients == ring.monic(&displayed), "lcm identity differs")?;
    let spec = double_spec(p, g.coeffs(), n, gp.coeffs(), np, n + np)?;
    let d = core(double_rank_formula(&spec))?.components.d();
    ensure(
        quotients.deg().unwrap_or(0) == n + np - d,
        "deg lcm != n + n' - d",
    )
}

fn check_euclid(p: u64, a: &[u64], b: &[u64]) -> Result<(), String> {
    let f = gf(p);
    let ring = PolyRing::new(&f);
    let (a, b) = (ring.poly(a.to_vec()), ring.poly(b.to_vec()));
    if b.is_zero() || a.is_zero() {
        return Ok(());
    }
    let (q, r) = core(ring.divmod(&a, &b))?;
    ensure(
        ring.add(&ring.mul(&q, &b), &r) == a && r.deg() < b.deg(),
        "a != q b + r",
    )?;
    let g = core(ring.gcd(&a, &b))?;
    ensure(
        core(ring.divides(&g, &a))? && core(ring.divides(&g, &b))?,
        "gcd does not divide",
    )?;
    let l = core(ring.lcm(&a, &b))?;
    ensure(
        ring.mul(&l, &g) == ring.monic(&ring.mul(&a, &b)),
        "lcm * gcd != monic(a b)",
    )
}

/// Polynomial identities over GF(3), GF(5), GF(7).
pub fn poly_identities(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("polynomial identities");
    for p in [3u64, 5, 7] {
        for n in (1..=12).filter(|n| *n as u64 % p != 0) {
            for np in (1..=12).filter(|n| *n as u64 % p != 0) {
                tally.record(check_identities(p, &[], n, &[1], np), || {
                    SpecFile::double(p, &[], n, &[1], np, n + np)
                });
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED);
    for _ in 0..scale.pick(1000, 4000) {
        let p = [3u64, 5, 7][rng.random_range(0..3)];
        let lengths: Vec<usize> = (1..=12).collect();
        let n = random_length(&mut rng, p, &lengths);
        let np = random_length(&mut rng, p, &lengths);
        let ell = num::gcd(n, np);
        let g = biased_poly(&mut rng, p, n, ell);
        let gp = biased_poly(&mut rng, p, np, ell);
        tally.record(check_identities(p, &g, n, &gp, np), || {
            SpecFile::double(p, &g, n, &gp, np, n + np)
        });
        let a = random_vec(&mut rng, p, 10);
        let b = random_vec(&mut rng, p, 6);
        tally.record(check_euclid(p, &a, &b), || {
            SpecFile::double(p, &a, 11, &b, 11, 22)
        });
    }
    tally.finish()
}

const GF3_CELLS: [(usize, usize); 4] = [(2, 2), (2, 4), (4, 2), (4, 4)];
const GF3_MAX_M: usize = 8;

/// All `g, g'` over GF(3) with `n, n'` in {2, 4} and every `m` in 1..=8.
/// Small scale takes every 11th pair.
pub fn gf3_exhaustive(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("GF(3) exhaustive rank");
    let step = scale.pick(11, 1);
    for (n, np) in GF3_CELLS {
        let pairs =
            all_vectors(3, n).flat_map(|g| all_vectors(3, np).map(move |gp| (g.clone(), gp)));
        for (g, gp) in pairs.step_by(step) {
            for m in 1..=GF3_MAX_M {
                let result = double_spec(3, &g, n, &gp, np, m).and_then(|s| check_double(&s));
                tally.record(result, || SpecFile::double(3, &g, n, &gp, np, m));
            }
            let result = double_spec(3, &g, n, &gp, np, GF3_MAX_M)
                .and_then(|s| monotone(&s, GF3_MAX_M).and_then(|_| check_tall(&s, GF3_MAX_M)));
            tally.record(result, || SpecFile::double(3, &g, n, &gp, np, GF3_MAX_M));
        }
    }
    tally.finish()
}

fn random_double_sweep(
    name: &'static str,
    p: u64,
    lengths: &[usize],
    count: usize,
    seed: u64,
) -> SweepOutcome {
    let mut tally = Tally::new(name);
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..count {
        let n = random_length(&mut rng, p, lengths);
        let np = random_length(&mut rng, p, lengths);
        let ell = num::gcd(n, np);
        let g = biased_poly(&mut rng, p, n, ell);
        let gp = biased_poly(&mut rng, p, np, ell);
        let m = rng.random_range(1..=n + np + 4);
        let result = double_spec(p, &g, n, &gp, np, m)
            .and_then(|s| check_double(&s).and_then(|_| check_tall(&s, m)));
        tally.record(result, || SpecFile::double(p, &g, n, &gp, np, m));
    }
    tally.finish()
}

/// 500 random GF(5) specs with `n, n'` in {1, 2, 3, 4, 6}.
pub fn gf5_random(scale: Scale) -> SweepOutcome {
    random_double_sweep(
        "GF(5) random rank",
        5,
        &[1, 2, 3, 4, 6],
        scale.pick(500, 500),
        SEED + 5,
    )
}

/// Random GF(2) specs with odd `n, n'` in {1, 3, 5, 7}.
pub fn gf2_odd(scale: Scale) -> SweepOutcome {
    random_double_sweep(
        "GF(2) odd-length rank",
        2,
        &[1, 3, 5, 7],
        scale.pick(500, 2000),
        SEED + 2,
    )
}

/// Random multiple circulants with one to four blocks.
pub fn multiple_random(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("multiple circulant rank");
    let mut rng = StdRng::seed_from_u64(SEED + 7);
    for _ in 0..scale.pick(300, 1000) {
        let p = [2u64, 3, 5, 7][rng.random_range(0..4)];
        let k = rng.random_range(1..=4);
        let blocks: Vec<(Vec<u64>, usize)> = (0..k)
            .map(|_| {
                let n = random_length(&mut rng, p, &[1, 2, 3, 4, 5, 6]);
                (random_vec(&mut rng, p, n), n)
            })
            .collect();
        let total: usize = blocks.iter().map(|b| b.1).sum();
        let m = rng.random_range(1..=total + 3);
        let f = gf(p);
        let ring = PolyRing::new(&f);
        let result = core(MultiCirculantSpec::new(
            f,
            blocks
                .iter()
                .map(|(g, n)| CirculantBlock::new(ring.poly(g.clone()), *n))
                .collect(),
            m,
        ))
        .and_then(|spec| {
            let r = core(multiple_rank_formula(&spec))?.formula_rank;
            ensure(
                gaussian_rank(&f, &build_multiple_circulant(&spec)) == r,
                "formula rank != oracle rank",
            )
        });
        tally.record(result, || {
            let refs: Vec<(&[u64], usize)> =
                blocks.iter().map(|(g, n)| (g.as_slice(), *n)).collect();
            SpecFile::multiple(p, &refs, m)
        });
    }
    tally.finish()
}

fn check_double_cyclic(
    code: &DoubleCyclicSpec<PrimeField>,
    rng: &mut StdRng,
) -> Result<(), String> {
    let f = *code.field();
    let ring = PolyRing::new(&f);
    let generator = core(double_cyclic_generator(code, Validation::Check))?;
    let d = core(double_rank_formula(&core(code.double_spec(code.period()))?))?
        .components
        .d();
    ensure(
        generator.dimension() == code.n() + code.n_prime() - d,
        "dimension != n + n' - d",
    )?;
    let p = f.characteristic();
    let a = ring.poly(random_vec(rng, p, code.period() + 2));
    let b = ring.poly(random_vec(rng, p, code.period() + 2));
    let sum: Vec<u64> = code
        .codeword(&a)
        .iter()
        .zip(code.codeword(&b))
        .map(|(x, y)| f.add(*x, y))
        .collect();
    ensure(
        code.codeword(&ring.add(&a, &b)) == sum,
        "codeword map is not additive",
    )?;
    let word = code.codeword(&a);
    let (mut left, mut right) = (word[..code.n()].to_vec(), word[code.n()..].to_vec());
    left.rotate_right(1);
    right.rotate_right(1);
    left.extend(right);
    ensure(
        code.codeword(&ring.mul(&ring.monomial(1, 1), &a)) == left,
        "X f is not the block shift",
    )?;
    let words: std::collections::HashSet<Vec<u64>> = match enumerate_codewords(&f, &generator) {
        Ok(w) => w.into_iter().collect(),
        Err(_) => return Ok(()),
    };
    let period = code.period();
    if (p as u128).pow(period as u32) <= 20_000 {
        let from_multiples: std::collections::HashSet<Vec<u64>> = all_vectors(p, period)
            .map(|c| code.codeword(&ring.poly(c)))
            .collect();
        ensure(
            from_multiples == words,
            "codewords of all f differ from the row span",
        )?;
    }
    Ok(())
}

/// Generator validity, dimension and membership for cyclic and double cyclic codes.
pub fn codes_sweep(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("code generators");
    let mut rng = StdRng::seed_from_u64(SEED + 11);
    let step = scale.pick(13, 1);
    for (n, np) in GF3_CELLS {
        let pairs =
            all_vectors(3, n).flat_map(|g| all_vectors(3, np).map(move |gp| (g.clone(), gp)));
        for (g, gp) in pairs.step_by(step) {
            if g.iter().chain(&gp).all(|&c| c == 0) {
                continue;
            }
            let f = gf(3);
            let ring = PolyRing::new(&f);
            let result = core(DoubleCyclicSpec::new(
                f,
                ring.poly(g.clone()),
                n,
                ring.poly(gp.clone()),
                np,
            ))
            .and_then(|code| check_double_cyclic(&code, &mut rng));
            tally.record(result, || SpecFile::double_cyclic(3, &g, n, &gp, np));
        }
    }
    for _ in 0..scale.pick(100, 500) {
        let p = [2u64, 5, 7][rng.random_range(0..3)];
        let n = random_length(&mut rng, p, &[1, 2, 3, 4, 5, 6]);
        let np = random_length(&mut rng, p, &[1, 2, 3, 4, 5, 6]);
        let g = biased_poly(&mut rng, p, n, num::gcd(n, np));
        let gp = random_vec(&mut rng, p, np);
        if g.iter().chain(&gp).all(|&c| c == 0) {
            continue;
        }
        let f = gf(p);
        let ring = PolyRing::new(&f);
        let result = core(DoubleCyclicSpec::new(
            f,
            ring.poly(g.clone()),
            n,
            ring.poly(gp.clone()),
            np,
        ))
        .and_then(|code| check_double_cyclic(&code, &mut rng));
        tally.record(result, || SpecFile::double_cyclic(p, &g, n, &gp, np));
    }
    for (p, n) in [(2u64, 7usize), (3, 4), (5, 4)] {
        for g in all_vectors(p, n).skip(1).step_by(step) {
            let f = gf(p);
            let ring = PolyRing::new(&f);
            let result = core(CyclicCodeSpec::new(f, ring.poly(g.clone()), n)).and_then(|code| {
                let generator = core(cyclic_generator(&code, Validation::Check))?;
                ensure(
                    generator.dimension() == code.dimension(),
                    "cyclic dimension",
                )
            });
            tally.record(result, || SpecFile::cyclic(p, &g, n));
        }
    }
    tally.finish()
}

fn check_qc15(p: u64, g: &[u64], gp: &[u64], n: usize, build: bool) -> Result<(), String> {
    let f = gf(p);
    let ring = PolyRing::new(&f);
    let spec = core(Qc15Spec::new(
        f,
        ring.poly(g.to_vec()),
        ring.poly(gp.to_vec()),
        n,
    ))?;
    let dim = core(spec.dimension_formula())?;
    let via_double = core(double_rank_formula(&core(spec.double_spec(n))?))?.formula_rank;
    ensure(
        dim == via_double,
        "index-1.5 dimension != double circulant rank",
    )?;
    if build && !(ring.poly(g.to_vec()).is_zero() && ring.poly(gp.to_vec()).is_zero()) {
        let generator = core(qc15_generator(&spec, Validation::Check))?;
        ensure(generator.dimension() == dim, "generator dimension")?;
    }
    Ok(())
}

/// Index-1.5 dimension against the double circulant formula for even `n <= 8`
/// over GF(3) and GF(5).
pub fn qc15_sweep(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("index-1.5 dimension");
    for n in [2usize, 4] {
        for g in all_vectors(3, n) {
            for gp in all_vectors(3, n / 2) {
                tally.record(check_qc15(3, &g, &gp, n, true), || {
                    SpecFile::qc15(3, &g, &gp, n)
                });
            }
        }
    }
    let step = scale.pick(97, 1);
    let pairs = all_vectors(3, 8).flat_map(|g| all_vectors(3, 4).map(move |gp| (g.clone(), gp)));
    for (g, gp) in pairs.step_by(step) {
        tally.record(check_qc15(3, &g, &gp, 8, false), || {
            SpecFile::qc15(3, &g, &gp, 8)
        });
    }
    let mut rng = StdRng::seed_from_u64(SEED + 13);
    for n in [2usize, 4, 6, 8] {
        for _ in 0..scale.pick(200, 1000) {
            let g = biased_poly(&mut rng, 5, n, n / 2);
            let gp = random_vec(&mut rng, 5, n / 2);
            tally.record(check_qc15(5, &g, &gp, n, n <= 6), || {
                SpecFile::qc15(5, &g, &gp, n)
            });
        }
    }
    tally.finish()
}

fn check_spectral(spec: &DoubleCirculantSpec<PrimeField>, tall_m: usize) -> Result<(), String> {
    let f = *spec.field();
    let tall = core(spec.with_rows(tall_m))?;
    ensure(
        core(verify_eigen_identity(&tall.left()))?,
        "eigen identity, left block",
    )?;
    ensure(
        core(verify_eigen_identity(&tall.right()))?,
        "eigen identity, right block",
    )?;
    ensure(
        core(verify_diagonalization(&tall.left()))?,
        "diagonalization, left block",
    )?;
    ensure(
        core(verify_diagonalization(&tall.right()))?,
        "diagonalization, right block",
    )?;
    ensure(
        core(verify_double_eigen_identity(&tall))?,
        "block eigen identities",
    )?;
    ensure(
        core(verify_double_diagonalization(&tall))?,
        "blocked diagonalization",
    )?;
    let square = core(spec.square())?;
    let kb = core(kernel_basis(&square))?;
    ensure(kb.d() == kb.e + kb.e_prime + kb.e_bar, "kernel count")?;
    let d = core(double_rank_formula(&square))?.components.d();
    ensure(kb.d() == d, "kernel size != d")?;
    ensure(
        nullity(&f, &build_double_circulant(&square)) == d,
        "base-field nullity != d",
    )?;
    ensure(core(verify_e3_swap_sign(&square))?, "E3 swap sign")
}

/// Spectral identities and kernel bases for sweep instances with `n, n' <= 6`.
pub fn spectral_sweep(scale: Scale) -> SweepOutcome {
    let mut tally = Tally::new("spectral identities");
    let step = scale.pick(11, 1);
    for (n, np) in GF3_CELLS {
        let pairs =
            all_vectors(3, n).flat_map(|g| all_vectors(3, np).map(move |gp| (g.clone(), gp)));
        for (g, gp) in pairs.step_by(step) {
            // The identities are row-wise, so the tallest m covers every shorter one.
            let result =
                double_spec(3, &g, n, &gp, np, n + np).and_then(|s| check_spectral(&s, GF3_MAX_M));
            tally.record(result, || SpecFile::double(3, &g, n, &gp, np, n + np));
        }
    }
    let mut rng = StdRng::seed_from_u64(SEED + 17);
    for (p, lengths, count) in [
        (5u64, &[1usize, 2, 3, 4, 6][..], scale.pick(150, 500)),
        (2, &[1, 3, 5][..], scale.pick(100, 300)),
        (7, &[1, 2, 3, 4, 5, 6][..], scale.pick(100, 300)),
    ] {
        for _ in 0..count {
            let n = random_length(&mut rng, p, lengths);
            let np = random_length(&mut rng, p, lengths);
            let ell = num::gcd(n, np);
            let g = biased_poly(&mut rng, p, n, ell);
            let gp = biased_poly(&mut rng, p, np, ell);
            let m = rng.random_range(1..=n + np + 4);
            let result = double_spec(p, &g, n, &gp, np, n + np).and_then(|s| check_spectral(&s, m));
            tally.record(result, || SpecFile::double(p, &g, n, &gp, np, m));
        }
    }
    tally.finish()
}

pub fn run_all(scale: Scale) -> Vec<SweepOutcome> {
    vec![
        poly_identities(scale),
        gf3_exhaustive(scale),
        gf5_random(scale),
        gf2_odd(scale),
        multiple_random(scale),
        codes_sweep(scale),
        qc15_sweep(scale),
        spectral_sweep(scale),
    ]
}

/// One aligned line per sweep.
pub fn summary_line(o: &SweepOutcome) -> String {
    format!(
        "{:<26} {:>8} passed {:>6} failed {:>10.1} ms  {}",
        o.name,
        o.passed,
        o.failed,
        o.elapsed.as_secs_f64() * 1e3,
        if o.ok() { "ok" } else { "FAILED" }
    )
}
