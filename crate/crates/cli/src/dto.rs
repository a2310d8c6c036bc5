//! Serialized report shapes. Every scalar is rendered in its canonical
//! textual form, so equal values serialize to identical strings and the
//! output never contains floating-point numbers.

use crate::render;
use doublecheck::{CaseSpec, ContractionResult, Limit, Table2Row, VerificationReport};
use serde::{Deserialize, Serialize};

/// A parameter binding as the user wrote it.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Binding {
    pub name: String,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Residual {
    pub component: Vec<usize>,
    pub value: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub residuals: Vec<Residual>,
    pub details: String,
    pub millis: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verify {
    pub case: String,
    pub regime: Option<String>,
    pub bindings: Vec<Binding>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

pub fn verify(report: &VerificationReport, bindings: &[Binding]) -> Verify {
    Verify {
        case: report.case.to_string(),
        regime: report.regime.map(|r| r.to_string()),
        bindings: bindings.to_vec(),
        passed: report.passed(),
        checks: report
            .checks
            .iter()
            .map(|c| Check {
                name: c.name.to_string(),
                passed: c.passed,
                residuals: c
                    .residuals
                    .failures
                    .iter()
                    .map(|f| Residual {
                        component: f.component.clone(),
                        value: f.residual.to_string(),
                    })
                    .collect(),
                details: c.details.clone(),
                millis: c.millis as u64,
            })
            .collect(),
    }
}

/// Coefficients on the two invariant bilinear forms of the kinematical
/// algebra, time-like first.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PairingCoefficients {
    pub eta_t: String,
    pub eta_s: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LimitRow {
    pub algebra: String,
    /// None renders the divergent verdict.
    pub pairing: Option<PairingCoefficients>,
    pub r_skew: Option<String>,
    pub spacetime: String,
    /// Parameter pin that makes an otherwise divergent r-matrix finite.
    pub note: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Row {
    pub case: String,
    pub regime: Option<String>,
    pub double: String,
    pub metric: [i64; 3],
    pub lambda: String,
    pub pairing: PairingCoefficients,
    pub r_skew: String,
    pub spacetime: String,
    pub limit: LimitRow,
}

pub fn table2(rows: &[Table2Row]) -> Vec<Row> {
    let names = render::kin_names();
    rows.iter()
        .map(|row| Row {
            case: row.case.to_string(),
            regime: row.regime.map(|r| r.to_string()),
            double: row.double_name.to_string(),
            metric: row.metric,
            lambda: row.lambda.to_string(),
            pairing: PairingCoefficients {
                eta_t: row.pairing.0.to_string(),
                eta_s: row.pairing.1.to_string(),
            },
            r_skew: row.r_skew.render_wedges(&names),
            spacetime: row.spacetime.to_string(),
            limit: LimitRow {
                algebra: row.limit.algebra.to_string(),
                pairing: row.limit.pairing.as_ref().map(|(t, s)| PairingCoefficients {
                    eta_t: t.to_string(),
                    eta_s: s.to_string(),
                }),
                r_skew: row
                    .limit
                    .r_skew
                    .as_ref()
                    .map(|t| t.render_wedges(&names)),
                spacetime: row.limit.spacetime.to_string(),
                note: (!row.limit.note.is_empty()).then(|| row.limit.note.to_string()),
            },
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Contract {
    pub case: String,
    pub regime: Option<String>,
    pub bindings: Vec<Binding>,
    /// iso(2,1), iso(3), or divergent; a finite limit algebra outside the
    /// flat-kinematical pattern also reads divergent here, with the
    /// brackets still listed.
    pub algebra_class: String,
    pub brackets: Option<Vec<String>>,
    pub pairing: Option<Vec<String>>,
    pub r_skew: Option<String>,
}

pub fn contract(spec: &CaseSpec, bindings: &[Binding], result: &ContractionResult) -> Contract {
    let names = render::kin_names();
    Contract {
        case: spec.id.to_string(),
        regime: spec.regime.map(|r| r.to_string()),
        bindings: bindings.to_vec(),
        algebra_class: result.classified_as.to_string(),
        brackets: match &result.algebra_limit {
            Limit::Finite(alg) => Some(render::bracket_lines(alg)),
            Limit::Divergent => None,
        },
        pairing: match &result.pairing_limit {
            Limit::Finite(form) => Some(render::pairing_lines(form, &names)),
            Limit::Divergent => None,
        },
        r_skew: match &result.r_skew_limit {
            Limit::Finite(t) => Some(t.render_wedges(&names)),
            Limit::Divergent => None,
        },
    }
}
