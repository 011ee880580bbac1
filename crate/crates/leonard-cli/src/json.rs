//! The JSON interchange schema. Scalars travel as strings in the exact text
//! grammar (rationals as `n` or `n/m`, prime-field residues as decimals) so
//! nothing is ever rounded. Struct field order fixes the key order, which
//! makes emitted documents byte-stable under parse/re-emit.

use leonard::{Field, Matrix, ParameterArray, RecognitionReport, ValidationReport};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldJson {
    Rational,
    Prime { p: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrayBody {
    pub d: usize,
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub varphi: Vec<String>,
    pub phi: Vec<String>,
}

/// A parameter array document: the array object with a sibling field key.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrayDoc {
    pub field: FieldJson,
    #[serde(flatten)]
    pub body: ArrayBody,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixBody {
    pub entries: Vec<Vec<String>>,
}

/// A matrix-pair document for recognition.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairDoc {
    pub field: FieldJson,
    pub a: MatrixBody,
    pub a_star: MatrixBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct CanonOut {
    pub field: FieldJson,
    pub form: String,
    pub a: MatrixBody,
    pub a_star: MatrixBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationOut {
    pub condition: String,
    pub index: Option<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidateOut {
    pub valid: bool,
    pub violations: Vec<ViolationOut>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RecognizeOut {
    pub accepted: bool,
    pub arrays: Vec<ArrayBody>,
    pub reject_reason: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitOut {
    pub field: FieldJson,
    pub arrays: Vec<ArrayBody>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TransitionOut {
    pub field: FieldJson,
    pub p: MatrixBody,
    pub p_star: MatrixBody,
    pub k: Vec<String>,
    pub k_star: Vec<String>,
    pub nu: String,
}

fn parse_scalars<F: Field>(ctx: &F::Ctx, texts: &[String]) -> Result<Vec<F>, CliError> {
    texts
        .iter()
        .map(|s| F::parse(ctx, s).map_err(|e| CliError::malformed(&e.to_string())))
        .collect()
}

pub fn scalar_strings<F: Field>(xs: &[F]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

pub fn parse_array<F: Field>(ctx: &F::Ctx, body: &ArrayBody) -> Result<ParameterArray<F>, CliError> {
    if body.theta.len() != body.d + 1 {
        return Err(CliError::malformed("theta must have d+1 entries"));
    }
    let theta = parse_scalars(ctx, &body.theta)?;
    let theta_star = parse_scalars(ctx, &body.theta_star)?;
    let varphi = parse_scalars(ctx, &body.varphi)?;
    let phi = parse_scalars(ctx, &body.phi)?;
    ParameterArray::new(theta, theta_star, varphi, phi)
        .map_err(|e| CliError::malformed(&e.to_string()))
}

pub fn emit_array<F: Field>(p: &ParameterArray<F>) -> ArrayBody {
    ArrayBody {
        d: p.d(),
        theta: scalar_strings(p.theta()),
        theta_star: scalar_strings(p.theta_star()),
        varphi: scalar_strings(p.varphi()),
        phi: scalar_strings(p.phi()),
    }
}

pub fn parse_matrix<F: Field>(ctx: &F::Ctx, body: &MatrixBody) -> Result<Matrix<F>, CliError> {
    let rows: Vec<Vec<F>> = body
        .entries
        .iter()
        .map(|row| parse_scalars(ctx, row))
        .collect::<Result<_, _>>()?;
    Matrix::from_rows(rows).map_err(|e| CliError::malformed(&e.to_string()))
}

pub fn emit_matrix<F: Field>(m: &Matrix<F>) -> MatrixBody {
    MatrixBody {
        entries: m.rows().map(scalar_strings).collect(),
    }
}

pub fn emit_validation(report: &ValidationReport) -> ValidateOut {
    ValidateOut {
        valid: report.valid(),
        violations: report
            .violations
            .iter()
            .map(|v| ViolationOut {
                condition: v.condition.to_string(),
                index: v.index,
                detail: v.detail.clone(),
            })
            .collect(),
    }
}

pub fn emit_recognition<F: Field>(report: &RecognitionReport<F>) -> RecognizeOut {
    RecognizeOut {
        accepted: report.accepted(),
        arrays: report.arrays.iter().map(emit_array).collect(),
        reject_reason: report.reject_reason.map(|r| r.to_string()),
    }
}
