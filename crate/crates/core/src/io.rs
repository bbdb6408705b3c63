//! File formats.
//!
//! Rationals are `"p/q"` strings (bare integers are accepted on input), and
//! every index written to a file (Levi subsets, diagram automorphisms, Weyl
//! words) is 1-based.

use crate::error::{Error, Result};
use crate::lparam::{self, Certificate, ExponentParam};
use crate::rootdata::{ExponentVector, LeviSubset, RootDatum};
use crate::scalar::Scalar;
use crate::vogan_a::GradedDims;
use crate::weyl::WeylElement;
use serde::{Deserialize, Serialize};

/// A root datum by registry label or written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DatumSpec {
    Label(String),
    Explicit {
        label: String,
        cartan: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gamma: Option<Vec<usize>>,
    },
}

impl DatumSpec {
    pub fn build(&self) -> Result<RootDatum> {
        match self {
            DatumSpec::Label(l) => RootDatum::named(l),
            DatumSpec::Explicit { label, cartan, gamma } => match gamma {
                None => RootDatum::split(cartan.clone(), label.clone()),
                Some(g) => {
                    let zero_based = g
                        .iter()
                        .map(|&i| i.checked_sub(1).ok_or_else(|| Error::Parse("gamma is 1-based".into())))
                        .collect::<Result<Vec<_>>>()?;
                    RootDatum::new(cartan.clone(), zero_based, label.clone())
                }
            },
        }
    }
}

/// `{"datum", "levi", "nu", "h", "tag"}`. A missing Levi defaults to the zero
/// set of `nu`, a missing `h` to zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct ParamFile<T: Scalar> {
    pub datum: DatumSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi: Option<Vec<usize>>,
    pub nu: ExponentVector<T>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<ExponentVector<T>>,
    #[serde(default)]
    pub tag: String,
}

impl<T: Scalar> ParamFile<T> {
    pub fn from_param(datum: DatumSpec, p: &ExponentParam<T>) -> Self {
        Self {
            datum,
            levi: Some(p.levi().to_one_based()),
            nu: p.nu().clone(),
            h: Some(p.h().clone()),
            tag: p.tag().to_string(),
        }
    }

    pub fn build(&self) -> Result<(RootDatum, ExponentParam<T>)> {
        let d = self.datum.build()?;
        let levi = match &self.levi {
            Some(l) => LeviSubset::from_one_based(l)?,
            None => self.nu.zero_set(),
        };
        let h = self.h.clone().unwrap_or_else(|| ExponentVector::zeros(d.rank()));
        let p = ExponentParam::new(&d, levi, self.nu.clone(), h, self.tag.clone())?;
        Ok((d, p))
    }
}

/// A certificate: the parameter fields plus everything derived from them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct CertificateFile<T: Scalar> {
    #[serde(flatten)]
    pub param: ParamFile<T>,
    pub nu_lambda: ExponentVector<T>,
    pub m_lambda: Vec<usize>,
    pub violated: Vec<usize>,
    pub m_leq1: Vec<usize>,
    pub witness: Vec<usize>,
    pub family: String,
    pub assumptions: Vec<String>,
}

impl<T: Scalar> CertificateFile<T> {
    pub fn from_certificate(datum: DatumSpec, c: &Certificate<T>) -> Self {
        Self {
            param: ParamFile::from_param(datum, &c.param),
            nu_lambda: c.infchar.nu_lambda().clone(),
            m_lambda: c.infchar.m_lambda().to_one_based(),
            violated: c.violated.to_one_based(),
            m_leq1: c.m_leq1.to_one_based(),
            witness: c.witness.word_one_based(),
            family: c.family.description(),
            assumptions: c.assumptions.clone(),
        }
    }

    /// Rebuild from the parameter and witness, then require every stored
    /// field to agree with the rebuilt certificate.
    pub fn check(&self) -> Result<(RootDatum, Certificate<T>)> {
        let (d, p) = self.param.build()?;
        let word = self
            .witness
            .iter()
            .map(|&i| i.checked_sub(1).ok_or_else(|| Error::Parse("witness word is 1-based".into())))
            .collect::<Result<Vec<_>>>()?;
        let cert = lparam::certificate_with_witness(&d, &p, WeylElement::from_word(&d, &word)?)?;
        let rebuilt = Self::from_certificate(self.param.datum.clone(), &cert);
        let stored = Self { param: rebuilt.param.clone(), ..self.clone() };
        if stored != rebuilt {
            return Err(Error::InvalidParam("certificate fields disagree with its parameter".into()));
        }
        Ok((d, cert))
    }
}

/// `{"dims": {"0": 1, "1": 1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsInput {
    pub dims: GradedDims,
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}
