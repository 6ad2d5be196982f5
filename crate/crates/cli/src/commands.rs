//! One function per subcommand. Each returns the JSON document, its
//! `--pretty` rendering and the exit status.

use std::time::Instant;

use circulant_core::circulant::{
    build_double_circulant, build_generalized_circulant, build_multiple_circulant,
};
use circulant_core::codes::{
    cyclic_generator, double_cyclic_generator, qc15_generator, GeneratorMatrix, TwoBlockCode,
    Validation,
};
use circulant_core::rank::{
    circulant_rank_formula, double_rank_formula, gaussian_rank, multiple_rank_formula,
    RankComponents, RankReport,
};
use circulant_core::spectra::{
    kernel_basis, kernel_dimension_oracle, verify_diagonalization, verify_double_diagonalization,
    verify_double_eigen_identity, verify_e3_swap_sign, verify_eigen_identity, KernelTag,
};
use circulant_core::{DenseMatrix, Field};
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::report::*;
use crate::spec_file::{AnyField, Loaded, SpecFile};

#[derive(Debug, Clone, Copy, Default)]
pub struct Flags {
    pub pretty: bool,
    pub timings: bool,
    pub no_oracle: bool,
}

#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub text: String,
    pub exit_code: i32,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            exit_code: 0,
        }
    }

    /// Pretty text or one line of JSON, newline-terminated.
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            self.text.clone()
        } else {
            format!("{}\n", self.json)
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports always serialize")
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

macro_rules! dispatch {
    ($file:expr, $inner:ident $(, $arg:expr)*) => {
        match $file.field()? {
            AnyField::Prime(f) => $inner($file, f $(, $arg)*),
            AnyField::Ext(f) => $inner($file, f $(, $arg)*),
        }
    };
}

pub fn rank(file: &SpecFile, flags: &Flags) -> CliResult<Output> {
    dispatch!(file, rank_in, flags)
}

fn rank_in<F: WireField + 'static>(file: &SpecFile, field: F, flags: &Flags) -> CliResult<Output> {
    let t = Instant::now();
    let (report, matrix): (RankReport, Box<dyn Fn() -> DenseMatrix<F::Elem>>) =
        match file.load(field.clone())? {
            Loaded::Circulant(s) => {
                let r = circulant_rank_formula(&s);
                (r, Box::new(move || build_generalized_circulant(&s)))
            }
            Loaded::Double(s) => {
                let r = double_rank_formula(&s)?;
                (r, Box::new(move || build_double_circulant(&s)))
            }
            Loaded::Multiple(s) => {
                let r = multiple_rank_formula(&s)?;
                (r, Box::new(move || build_multiple_circulant(&s)))
            }
            _ => {
                return Err(CliError::Spec(
                    "rank takes the circulant, double or multiple family".into(),
                ))
            }
        };
    let formula_ms = ms(t);
    let (oracle_rank, oracle_ms) = if flags.no_oracle {
        (None, None)
    } else {
        let t = Instant::now();
        let r = gaussian_rank(&field, &matrix());
        (Some(r), Some(ms(t)))
    };
    let (e, e_prime, e_bar, ell, s) = match report.components {
        RankComponents::Circulant { d } => (Some(d), None, None, None, None),
        RankComponents::Double(t) => (Some(t.e), Some(t.e_prime), Some(t.e_bar), Some(t.ell), None),
        RankComponents::Multiple { s, .. } => (None, None, None, None, Some(s)),
    };
    let agrees = oracle_rank.map(|r| r == report.formula_rank);
    let json = RankJson {
        family: file.family,
        formula_rank: report.formula_rank,
        oracle_rank,
        e,
        e_prime,
        e_bar,
        d: report.components.d(),
        ell,
        s,
        agrees,
        timings: flags.timings.then_some(Timings {
            formula_ms,
            oracle_ms,
        }),
    };
    let value = to_value(&json);
    let text = key_values(&value);
    Ok(Output {
        json: value,
        text,
        exit_code: if agrees == Some(false) { 2 } else { 0 },
    })
}

pub fn genmat(file: &SpecFile, flags: &Flags) -> CliResult<Output> {
    dispatch!(file, genmat_in, flags)
}

fn genmat_in<F: WireField>(file: &SpecFile, field: F, flags: &Flags) -> CliResult<Output> {
    let validation = if flags.no_oracle {
        Validation::Skip
    } else {
        Validation::Check
    };
    let (gen, n, n_prime, g, g_prime): (GeneratorMatrix<F::Elem>, _, _, _, _) =
        match file.load(field.clone())? {
            Loaded::Cyclic(s) => (
                cyclic_generator(&s, validation)?,
                s.n(),
                None,
                wire_poly(&field, s.g()),
                None,
            ),
            Loaded::Qc15(s) => (
                qc15_generator(&s, validation)?,
                s.n(),
                Some(s.n_prime()),
                wire_poly(&field, s.g()),
                Some(wire_poly(&field, s.g_prime())),
            ),
            Loaded::DoubleCyclic(s) => (
                double_cyclic_generator(&s, validation)?,
                s.n(),
                Some(s.n_prime()),
                wire_poly(&field, s.g()),
                Some(wire_poly(&field, s.g_prime())),
            ),
            _ => {
                return Err(CliError::Spec(
                    "genmat takes the cyclic, qc15 or doubleCyclic family".into(),
                ))
            }
        };
    let generator = wire_matrix(&field, gen.matrix());
    let text = aligned(&generator);
    let json = GenmatJson {
        family: file.family,
        p: field.characteristic(),
        extension: file.extension.as_ref().map(|_| field.modulus()),
        n,
        n_prime,
        g,
        g_prime,
        r: gen.dimension(),
        generator,
    };
    Ok(Output::ok(to_value(&json), text))
}

pub fn kernel(file: &SpecFile, flags: &Flags) -> CliResult<Output> {
    dispatch!(file, kernel_in, flags)
}

fn tag_name(tag: KernelTag) -> String {
    match tag {
        KernelTag::E1(j) => format!("E1({j})"),
        KernelTag::E2(j) => format!("E2({j})"),
        KernelTag::E3(j) => format!("E3({j})"),
    }
}

fn kernel_in<F: WireField>(file: &SpecFile, field: F, flags: &Flags) -> CliResult<Output> {
    let Loaded::Double(spec) = file.load(field)? else {
        return Err(CliError::Spec("kernel takes the double family".into()));
    };
    let kb = kernel_basis(&spec)?;
    let ext = *kb.field();
    let nullity = if flags.no_oracle {
        None
    } else {
        Some(kernel_dimension_oracle(&spec)?)
    };
    if nullity.is_some_and(|k| k != kb.d()) {
        return Err(CliError::Disagreement(
            "base-field nullity differs from d".into(),
        ));
    }
    let vectors: Vec<KernelVectorJson> = kb
        .vectors
        .iter()
        .map(|v| KernelVectorJson {
            tag: tag_name(v.tag),
            entries: v.entries.iter().map(|&x| ext.coefficients(x)).collect(),
        })
        .collect();
    let json = KernelJson {
        d: kb.d(),
        e: kb.e,
        e_prime: kb.e_prime,
        e_bar: kb.e_bar,
        nullity,
        field: FieldJson {
            p: ext.characteristic(),
            modulus: ext.modulus(),
        },
        vectors,
    };
    let mut text = format!(
        "d = {} (e = {}, e' = {}, ebar = {})\n",
        json.d, json.e, json.e_prime, json.e_bar
    );
    for v in &json.vectors {
        let row: Vec<Value> = v.entries.iter().map(|c| Value::from(c.clone())).collect();
        text.push_str(&format!("{:<7} {}", v.tag, aligned(&[row])));
    }
    Ok(Output::ok(to_value(&json), text))
}

pub fn verify(file: &SpecFile, flags: &Flags) -> CliResult<Output> {
    dispatch!(file, verify_in, flags)
}

fn verify_in<F: WireField>(file: &SpecFile, field: F, flags: &Flags) -> CliResult<Output> {
    let mut checks: Vec<(&str, bool)> = Vec::new();
    let oracle = !flags.no_oracle;
    match file.load(field.clone())? {
        Loaded::Circulant(s) => {
            checks.push(("eigen identity", verify_eigen_identity(&s)?));
            checks.push(("diagonalization", verify_diagonalization(&s)?));
            if oracle {
                let r = circulant_rank_formula(&s).formula_rank;
                checks.push((
                    "rank formula",
                    r == gaussian_rank(&field, &build_generalized_circulant(&s)),
                ));
            }
        }
        Loaded::Double(s) => {
            checks.push(("block eigen identities", verify_double_eigen_identity(&s)?));
            checks.push((
                "blocked diagonalization",
                verify_double_diagonalization(&s)?,
            ));
            if oracle {
                let r = double_rank_formula(&s)?.formula_rank;
                checks.push((
                    "rank formula",
                    r == gaussian_rank(&field, &build_double_circulant(&s)),
                ));
            }
            if s.is_square() {
                let basis = kernel_basis(&s);
                checks.push(("kernel basis", basis.is_ok()));
                if let (Ok(kb), true) = (&basis, oracle) {
                    checks.push(("nullity equals d", kernel_dimension_oracle(&s)? == kb.d()));
                }
                checks.push(("E3 swap sign", verify_e3_swap_sign(&s)?));
            }
        }
        Loaded::Multiple(s) => {
            for b in s.blocks() {
                let single = circulant_core::circulant::CirculantSpec::new(
                    field.clone(),
                    b.g.clone(),
                    b.n,
                    s.m(),
                )?;
                checks.push(("block eigen identity", verify_eigen_identity(&single)?));
            }
            if oracle {
                let r = multiple_rank_formula(&s)?.formula_rank;
                checks.push((
                    "rank formula",
                    r == gaussian_rank(&field, &build_multiple_circulant(&s)),
                ));
            }
        }
        Loaded::Cyclic(s) => {
            checks.push((
                "generator rows",
                cyclic_generator(&s, Validation::Check).is_ok(),
            ));
        }
        Loaded::Qc15(s) => {
            let dim = s.dimension_formula()?;
            let via_double = double_rank_formula(&s.double_spec(s.n())?)?.formula_rank;
            checks.push(("dimension agreement", dim == via_double));
            checks.push((
                "generator rows",
                qc15_generator(&s, Validation::Check).is_ok(),
            ));
        }
        Loaded::DoubleCyclic(s) => {
            checks.push((
                "generator rows",
                double_cyclic_generator(&s, Validation::Check).is_ok(),
            ));
        }
    }
    let ok = checks.iter().all(|&(_, ok)| ok);
    let json = VerifyJson {
        family: file.family,
        checks: checks
            .iter()
            .map(|&(name, ok)| CheckJson {
                name: name.into(),
                ok,
            })
            .collect(),
        ok,
    };
    let width = checks.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    let text: String = checks
        .iter()
        .map(|(name, ok)| format!("{name:<width$}  {}\n", if *ok { "ok" } else { "FAILED" }))
        .collect();
    Ok(Output {
        json: to_value(&json),
        text,
        exit_code: if ok { 0 } else { 2 },
    })
}
