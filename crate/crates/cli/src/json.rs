//! JSON shapes for machine consumption.
//!
//! Every big integer travels as a decimal string, so consumers that funnel
//! JSON numbers through 64-bit floats cannot corrupt exact coefficients.
//! Field order is fixed by declaration order, which makes emitted JSON a
//! canonical form: parse and re-serialize is byte-identical.

use serde::{Deserialize, Serialize};

use powergen_core::exact::{Polynomial, Rational};
use powergen_core::identities::VerificationReport;
use powergen_core::numeric::NumericReport;
use powergen_core::ratfn::RatAtOne;

pub fn rational_pair(r: &Rational) -> [String; 2] {
    [r.numer().to_string(), r.denom().to_string()]
}

/// `{"coeffs": [[num, den], ...]}`, low powers first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<[String; 2]>,
}

impl From<&Polynomial> for PolyJson {
    fn from(p: &Polynomial) -> Self {
        PolyJson {
            coeffs: p.coeffs().iter().map(rational_pair).collect(),
        }
    }
}

/// `{"numerator": <polynomial>, "pole_order": m}` for `N(x)/(1-x)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFnJson {
    pub numerator: PolyJson,
    pub pole_order: u32,
}

impl From<&RatAtOne> for RatFnJson {
    fn from(f: &RatAtOne) -> Self {
        RatFnJson {
            numerator: PolyJson::from(f.numerator()),
            pole_order: f.pole_order(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub n: u64,
    pub expected: [String; 2],
    pub got: [String; 2],
}

/// Sweep parameters; absent ones are omitted from the output entirely.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(default)]
pub struct ParamsJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<serde_json::Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zero_convention: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gap: Option<f64>,
}

/// One verification result:
/// `{"identity": ..., "params": {...}, "status": "pass"|"fail",
///   "first_mismatch": null | {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub identity: String,
    pub params: ParamsJson,
    pub status: String,
    pub first_mismatch: Option<MismatchJson>,
}

fn status(passed: bool) -> String {
    if passed { "pass" } else { "fail" }.to_string()
}

impl ReportJson {
    pub fn from_exact(report: &VerificationReport, zero_convention: Option<bool>) -> Self {
        ReportJson {
            identity: report.identity.to_string(),
            params: ParamsJson {
                p: Some(serde_json::Number::from(report.p)),
                r: report.r,
                order: report.order,
                zero_convention,
                ..ParamsJson::default()
            },
            status: status(report.passed()),
            first_mismatch: report.first_mismatch.as_ref().map(|m| MismatchJson {
                n: m.index,
                expected: rational_pair(&m.expected),
                got: rational_pair(&m.got),
            }),
        }
    }

    pub fn from_numeric(report: &NumericReport) -> Self {
        ReportJson {
            identity: report.identity.to_string(),
            params: ParamsJson {
                p: report
                    .p
                    .map(|p| serde_json::Number::from_f64(p).expect("finite parameter")),
                order: report.order,
                x: Some(report.x),
                tolerance: Some(report.tolerance),
                lhs: Some(report.lhs),
                rhs: Some(report.rhs),
                gap: Some(report.gap),
                ..ParamsJson::default()
            },
            status: status(report.passed),
            first_mismatch: None,
        }
    }
}

/// `{"rows": [["1"], ["0","1"], ...]}` for the Stirling triangle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub rows: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use powergen_core::identities::{egf_series_check, ogf_closed_form};

    #[test]
    fn ratfn_schema_matches_contract() {
        let json = serde_json::to_string(&RatFnJson::from(&ogf_closed_form(1))).unwrap();
        assert_eq!(
            json,
            r#"{"numerator":{"coeffs":[["0","1"],["1","1"]]},"pole_order":3}"#
        );
    }

    #[test]
    fn report_schema_round_trips() {
        let failing = egf_series_check(0, 10, false);
        let json = serde_json::to_string(&ReportJson::from_exact(&failing, Some(false))).unwrap();
        assert!(json.contains(r#""status":"fail""#));
        assert!(json.contains(r#""first_mismatch":{"n":1,"expected":["1","1"],"got":["2","1"]}"#));
        let parsed: ReportJson = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), json);

        let passing = egf_series_check(3, 10, false);
        let json = serde_json::to_string(&ReportJson::from_exact(&passing, None)).unwrap();
        assert!(json.ends_with(r#""status":"pass","first_mismatch":null}"#));
    }
}
