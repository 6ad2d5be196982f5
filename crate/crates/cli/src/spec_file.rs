//! The JSON spec-file format and its conversion into typed library specs.

use circulant_core::circulant::{
    CirculantBlock, CirculantSpec, DoubleCirculantSpec, MultiCirculantSpec,
};
use circulant_core::codes::{CyclicCodeSpec, DoubleCyclicSpec, Qc15Spec};
use circulant_core::{ExtField, Field, Poly, PolyRing, PrimeField};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    Circulant,
    Double,
    Multiple,
    Cyclic,
    Qc15,
    DoubleCyclic,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Circulant => "circulant",
            Family::Double => "double",
            Family::Multiple => "multiple",
            Family::Cyclic => "cyclic",
            Family::Qc15 => "qc15",
            Family::DoubleCyclic => "doubleCyclic",
        }
    }
}

/// One coefficient: an integer (reduced mod p, negatives allowed) or, over an
/// extension field, a coordinate vector in the power basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Vector(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockFile {
    pub g: Vec<Coeff>,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SpecFile {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<Vec<i64>>,
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_prime: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<BlockFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_prime: Option<Vec<Coeff>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

fn ints(v: &[u64]) -> Vec<Coeff> {
    v.iter().map(|&c| Coeff::Int(c as i64)).collect()
}

impl SpecFile {
    fn bare(p: u64, family: Family) -> Self {
        Self {
            p,
            extension: None,
            family,
            n: None,
            n_prime: None,
            blocks: None,
            g: None,
            g_prime: None,
            m: None,
        }
    }

    pub fn circulant(p: u64, g: &[u64], n: usize, m: usize) -> Self {
        Self {
            n: Some(n),
            g: Some(ints(g)),
            m: Some(m),
            ..Self::bare(p, Family::Circulant)
        }
    }

    pub fn double(p: u64, g: &[u64], n: usize, gp: &[u64], np: usize, m: usize) -> Self {
        Self {
            n: Some(n),
            n_prime: Some(np),
            g: Some(ints(g)),
            g_prime: Some(ints(gp)),
            m: Some(m),
            ..Self::bare(p, Family::Double)
        }
    }

    pub fn multiple(p: u64, blocks: &[(&[u64], usize)], m: usize) -> Self {
        let blocks = blocks
            .iter()
            .map(|&(g, n)| BlockFile { g: ints(g), n })
            .collect();
        Self {
            blocks: Some(blocks),
            m: Some(m),
            ..Self::bare(p, Family::Multiple)
        }
    }

    pub fn cyclic(p: u64, g: &[u64], n: usize) -> Self {
        Self {
            n: Some(n),
            g: Some(ints(g)),
            ..Self::bare(p, Family::Cyclic)
        }
    }

    pub fn qc15(p: u64, g: &[u64], gp: &[u64], n: usize) -> Self {
        Self {
            n: Some(n),
            g: Some(ints(g)),
            g_prime: Some(ints(gp)),
            ..Self::bare(p, Family::Qc15)
        }
    }

    pub fn double_cyclic(p: u64, g: &[u64], n: usize, gp: &[u64], np: usize) -> Self {
        Self {
            n: Some(n),
            n_prime: Some(np),
            g: Some(ints(g)),
            g_prime: Some(ints(gp)),
            ..Self::bare(p, Family::DoubleCyclic)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec files always serialize")
    }

    pub fn field(&self) -> CliResult<AnyField> {
        let base = PrimeField::new(self.p)?;
        match &self.extension {
            None => Ok(AnyField::Prime(base)),
            Some(modulus) => {
                let coeffs: Vec<u64> = modulus.iter().map(|&c| reduce(c, self.p)).collect();
                Ok(AnyField::Ext(ExtField::new(base, &coeffs)?))
            }
        }
    }

    /// Converts to the typed spec of the declared family over `field`.
    pub fn load<F: Field>(&self, field: F) -> CliResult<Loaded<F>> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| CliError::Spec(format!("family {} needs `{what}`", self.family.name())))
        };
        let forbid = |present: bool, what: &str| {
            if present {
                Err(CliError::Spec(format!(
                    "family {} does not take `{what}`",
                    self.family.name()
                )))
            } else {
                Ok(())
            }
        };
        let poly = |c: &Option<Vec<Coeff>>, what: &str| -> CliResult<Poly<F::Elem>> {
            match c {
                Some(c) => parse_poly(&field, c),
                None => Err(CliError::Spec(format!(
                    "family {} needs `{what}`",
                    self.family.name()
                ))),
            }
        };
        let fixed_m = |implied: usize| match self.m {
            Some(m) if m != implied => Err(CliError::Spec(format!(
                "family {} fixes m = {implied}, got {m}",
                self.family.name()
            ))),
            _ => Ok(()),
        };

        if self.family != Family::Multiple {
            forbid(self.blocks.is_some(), "blocks")?;
        }
        let loaded = match self.family {
            Family::Circulant | Family::Cyclic => {
                forbid(self.n_prime.is_some(), "nPrime")?;
                forbid(self.g_prime.is_some(), "gPrime")?;
                let n = need(self.n, "n")?;
                let g = poly(&self.g, "g")?;
                if self.family == Family::Circulant {
                    let m = self.m.unwrap_or(n);
                    Loaded::Circulant(CirculantSpec::new(field.clone(), g, n, m)?)
                } else {
                    fixed_m(n)?;
                    Loaded::Cyclic(CyclicCodeSpec::new(field.clone(), g, n)?)
                }
            }
            Family::Double | Family::DoubleCyclic => {
                let n = need(self.n, "n")?;
                let np = need(self.n_prime, "nPrime")?;
                let g = poly(&self.g, "g")?;
                let gp = poly(&self.g_prime, "gPrime")?;
                if self.family == Family::Double {
                    let m = self.m.unwrap_or(n + np);
                    Loaded::Double(DoubleCirculantSpec::new(field.clone(), g, n, gp, np, m)?)
                } else {
                    fixed_m(
                        circulant_core::num::lcm(n, np).ok_or(circulant_core::Error::TooLarge)?,
                    )?;
                    Loaded::DoubleCyclic(DoubleCyclicSpec::new(field.clone(), g, n, gp, np)?)
                }
            }
            Family::Qc15 => {
                forbid(self.n_prime.is_some(), "nPrime (it is n/2)")?;
                let n = need(self.n, "n")?;
                fixed_m(n)?;
                let g = poly(&self.g, "g")?;
                let gp = poly(&self.g_prime, "gPrime")?;
                Loaded::Qc15(Qc15Spec::new(field.clone(), g, gp, n)?)
            }
            Family::Multiple => {
                forbid(self.n.is_some(), "n")?;
                forbid(self.n_prime.is_some(), "nPrime")?;
                forbid(self.g.is_some(), "g")?;
                forbid(self.g_prime.is_some(), "gPrime")?;
                let files = self
                    .blocks
                    .as_ref()
                    .ok_or_else(|| CliError::Spec("family multiple needs `blocks`".into()))?;
                let mut blocks = Vec::with_capacity(files.len());
                for b in files {
                    blocks.push(CirculantBlock::new(parse_poly(&field, &b.g)?, b.n));
                }
                let m = self.m.unwrap_or_else(|| files.iter().map(|b| b.n).sum());
                Loaded::Multiple(MultiCirculantSpec::new(field.clone(), blocks, m)?)
            }
        };
        Ok(loaded)
    }
}

pub fn reduce(c: i64, p: u64) -> u64 {
    (c as i128).rem_euclid(p as i128) as u64
}

fn parse_coeff<F: Field>(field: &F, c: &Coeff) -> CliResult<F::Elem> {
    let p = field.characteristic();
    match c {
        Coeff::Int(v) => Ok(field.from_int(*v)),
        Coeff::Vector(v) => {
            let coords: Vec<u64> = v.iter().map(|&x| reduce(x, p)).collect();
            Ok(field.from_coefficients(&coords)?)
        }
    }
}

fn parse_poly<F: Field>(field: &F, coeffs: &[Coeff]) -> CliResult<Poly<F::Elem>> {
    let elems = coeffs
        .iter()
        .map(|c| parse_coeff(field, c))
        .collect::<CliResult<Vec<_>>>()?;
    Ok(PolyRing::new(field).poly(elems))
}

#[derive(Debug, Clone, Copy)]
pub enum AnyField {
    Prime(PrimeField),
    Ext(ExtField),
}

#[derive(Debug, Clone)]
pub enum Loaded<F: Field> {
    Circulant(CirculantSpec<F>),
    Double(DoubleCirculantSpec<F>),
    Multiple(MultiCirculantSpec<F>),
    Cyclic(CyclicCodeSpec<F>),
    Qc15(Qc15Spec<F>),
    DoubleCyclic(DoubleCyclicSpec<F>),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_table_fixture() {
        let text = r#"{"p":3,"family":"double","n":4,"nPrime":2,"g":[1,1,1],"gPrime":[-1,1]}"#;
        let file: SpecFile = serde_json::from_str(text).unwrap();
        let Loaded::Double(spec) = file.load(PrimeField::new(3).unwrap()).unwrap() else {
            panic!("wrong family");
        };
        assert_eq!(spec.m(), 6);
        assert_eq!(spec.g_prime().coeffs(), &[2, 1]);
    }

    #[test]
    fn rejects_unknown_and_misplaced_fields() {
        let unknown = r#"{"p":3,"family":"double","n":4,"nPrime":2,"g":[1],"gPrime":[1],"q":1}"#;
        assert!(serde_json::from_str::<SpecFile>(unknown).is_err());
        let file = SpecFile {
            n_prime: Some(2),
            ..SpecFile::cyclic(3, &[1], 4)
        };
        assert!(matches!(
            file.load(PrimeField::new(3).unwrap()),
            Err(CliError::Spec(_))
        ));
        let file = SpecFile {
            m: Some(5),
            ..SpecFile::qc15(3, &[1], &[1], 4)
        };
        assert!(file.load(PrimeField::new(3).unwrap()).is_err());
    }

    #[test]
    fn extension_coefficients() {
        let text = r#"{"p":3,"extension":[1,0,1],"family":"circulant","n":4,"g":[[0,1],2]}"#;
        let file: SpecFile = serde_json::from_str(text).unwrap();
        let AnyField::Ext(f) = file.field().unwrap() else {
            panic!("expected GF(9)")
        };
        let Loaded::Circulant(spec) = file.load(f).unwrap() else {
            panic!()
        };
        assert_eq!(spec.g().coeffs()[0], f.generator());
        assert_eq!(spec.m(), 4);
    }

    #[test]
    fn round_trip() {
        let file = SpecFile::multiple(7, &[(&[6, 1], 2), (&[5, 1, 1], 3)], 6);
        let back: SpecFile = serde_json::from_str(&file.to_json()).unwrap();
        assert_eq!(back, file);
    }
}
