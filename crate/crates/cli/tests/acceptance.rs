// Acceptance criteria AC1-AC8, one PASS/FAIL line each. Exits nonzero when
// any criterion fails.

use std::time::{Duration, Instant};

use circulant_cli::commands::{genmat, rank};
use circulant_cli::report::{GenmatJson, RankJson};
use circulant_cli::selftest::{self, Scale, SweepOutcome};
use circulant_cli::{Flags, SpecFile};
use circulant_core::circulant::{build_double_circulant, DoubleCirculantSpec};
use circulant_core::rank::{consecutive_rows_independent, double_rank_formula, gaussian_rank};
use circulant_core::{PolyRing, PrimeField};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Verdict {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn rank_json(spec: &SpecFile) -> Result<RankJson, String> {
    let out = rank(spec, &Flags::default()).map_err(|e| e.to_string())?;
    serde_json::from_value(out.json).map_err(|e| e.to_string())
}

fn generator(spec: &SpecFile) -> Result<GenmatJson, String> {
    let out = genmat(spec, &Flags::default()).map_err(|e| e.to_string())?;
    serde_json::from_value(out.json).map_err(|e| e.to_string())
}

fn rows(g: &GenmatJson) -> Vec<Vec<u64>> {
    g.generator
        .iter()
        .map(|r| r.iter().map(|v| v.as_u64().unwrap_or(u64::MAX)).collect())
        .collect()
}

fn ac1() -> Result<Verdict, String> {
    let r = rank_json(&SpecFile::double(3, &[1, 1, 1], 4, &[2, 1], 2, 4))?;
    let trace = (r.e, r.e_prime, r.e_bar, r.d);
    let g = generator(&SpecFile::qc15(3, &[1, 1, 1], &[2, 1], 4))?;
    let want = vec![
        vec![1, 1, 1, 0, 2, 1],
        vec![0, 1, 1, 1, 1, 2],
        vec![1, 0, 1, 1, 2, 1],
    ];
    Ok(check(
        r.formula_rank == 3
            && r.oracle_rank == Some(3)
            && trace == (Some(1), Some(1), Some(1), 3)
            && rows(&g) == want,
        format!(
            "rank {} / oracle {:?}, (e,e',ebar,d) = {:?}, G = {:?}",
            r.formula_rank,
            r.oracle_rank,
            trace,
            rows(&g)
        ),
    ))
}

fn ac2() -> Result<Verdict, String> {
    let g = generator(&SpecFile {
        g: Some(serde_json::from_str("[-1, 1]").unwrap()),
        g_prime: Some(serde_json::from_str("[-2, 1, 1]").unwrap()),
        ..SpecFile::double_cyclic(5, &[], 2, &[], 3)
    })?;
    let want = vec![
        vec![4, 1, 3, 1, 1],
        vec![1, 4, 1, 3, 1],
        vec![4, 1, 1, 1, 3],
    ];
    Ok(check(
        g.r == 3 && rows(&g) == want,
        format!("dim {}, G = {:?}", g.r, rows(&g)),
    ))
}

fn ac3() -> Result<Verdict, String> {
    let f = PrimeField::new(7).unwrap();
    let ring = PolyRing::new(&f);
    let cases: [(&[i64], usize, &[i64], usize, [usize; 2]); 2] = [
        (&[-1, 1], 2, &[-2, 1, 1], 3, [5, 6]),
        (&[-2, 1, 1], 4, &[-1, 1], 2, [4, 6]),
    ];
    let mut seen = Vec::new();
    let mut ok = true;
    for (g, n, gp, np, ms) in cases {
        for m in ms {
            let spec = DoubleCirculantSpec::new(f, ring.from_ints(g), n, ring.from_ints(gp), np, m)
                .map_err(|e| e.to_string())?;
            let formula = double_rank_formula(&spec)
                .map_err(|e| e.to_string())?
                .formula_rank;
            let full = build_double_circulant(&spec);
            let oracle = gaussian_rank(&f, &full);
            let leading =
                consecutive_rows_independent(&f, &full, 0, 3).map_err(|e| e.to_string())?;
            ok &= formula == 3 && oracle == 3 && leading;
            seen.push(format!("n={n} n'={np} m={m}: {formula}/{oracle}"));
        }
    }
    Ok(check(
        ok,
        format!("{}; first 3 rows independent", seen.join(", ")),
    ))
}

fn sweep(outcome: SweepOutcome, limit: Duration) -> Verdict {
    let mut detail = format!(
        "{}: {} passed, {} failed",
        outcome.name, outcome.passed, outcome.failed
    );
    for f in &outcome.failures {
        detail.push_str(&format!("\n      {}: {}", f.reason, f.spec.to_json()));
    }
    check(outcome.ok() && outcome.elapsed < limit, detail)
}

fn ac8() -> Result<Verdict, String> {
    let p = 65521;
    let f = PrimeField::new(p).unwrap();
    let ring = PolyRing::new(&f);
    let mut rng = StdRng::seed_from_u64(8);
    let n = 256;
    let mut random =
        |len: usize| -> Vec<u64> { (0..len).map(|_| rng.random_range(0..p)).collect() };
    // Planting divisors of X^16 - 1 and X^4 - 1 keeps d away from its minimum.
    let g = ring.mul(&ring.x_pow_minus_one(16), &ring.poly(random(n - 16)));
    let gp = ring.mul(&ring.x_pow_minus_one(4), &ring.poly(random(n - 4)));
    let spec = DoubleCirculantSpec::new(f, g, n, gp, n, 2 * n).map_err(|e| e.to_string())?;

    let reps = 20;
    let t = Instant::now();
    let mut formula = 0;
    for _ in 0..reps {
        formula = double_rank_formula(&spec)
            .map_err(|e| e.to_string())?
            .formula_rank;
    }
    let formula_time = t.elapsed() / reps;
    let matrix = build_double_circulant(&spec);
    let t = Instant::now();
    let oracle = gaussian_rank(&f, &matrix);
    let oracle_time = t.elapsed();
    let ratio = oracle_time.as_secs_f64() / formula_time.as_secs_f64();
    Ok(check(
        formula == oracle && ratio >= 10.0,
        format!(
            "rank {formula} / oracle {oracle}; formula {:.3} ms, elimination {:.1} ms, ratio {ratio:.0}x (>= 10x required, >= 50x expected{})",
            formula_time.as_secs_f64() * 1e3,
            oracle_time.as_secs_f64() * 1e3,
            if ratio >= 50.0 { ", met" } else { ", NOT met" }
        ),
    ))
}

fn main() {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Result<Verdict, String>>)> = vec![
        ("AC1", Duration::from_secs(1), Box::new(ac1)),
        ("AC2", Duration::from_secs(1), Box::new(ac2)),
        ("AC3", Duration::from_secs(1), Box::new(ac3)),
        (
            "AC4",
            Duration::from_secs(300),
            Box::new(|| {
                Ok(sweep(
                    selftest::gf3_exhaustive(Scale::Full),
                    Duration::from_secs(300),
                ))
            }),
        ),
        (
            "AC5",
            Duration::from_secs(30),
            Box::new(|| {
                Ok(sweep(
                    selftest::poly_identities(Scale::Full),
                    Duration::from_secs(30),
                ))
            }),
        ),
        (
            "AC6",
            Duration::from_secs(120),
            Box::new(|| {
                Ok(sweep(
                    selftest::spectral_sweep(Scale::Full),
                    Duration::from_secs(120),
                ))
            }),
        ),
        (
            "AC7",
            Duration::from_secs(300),
            Box::new(|| {
                Ok(sweep(
                    selftest::qc15_sweep(Scale::Full),
                    Duration::from_secs(300),
                ))
            }),
        ),
        ("AC8", Duration::from_secs(300), Box::new(ac8)),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let verdict = run().unwrap_or_else(|e| check(false, format!("error: {e}")));
        let elapsed = start.elapsed();
        let ok = verdict.ok && elapsed < *limit;
        failed += usize::from(!ok);
        println!(
            "{name} {} {:.2}s (limit {}s)  {}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs(),
            verdict.detail
        );
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
