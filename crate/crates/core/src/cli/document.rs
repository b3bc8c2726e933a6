//! Report documents and their text and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::freemod::{format_scalar, BasisKey, Element, Tensor};
use crate::hopf::Algorithm;
use crate::report::{Check, CheckReport, FiltrationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub key: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

impl<K: BasisKey> From<&Element<K>> for ElementJson {
    fn from(e: &Element<K>) -> Self {
        ElementJson {
            text: e.to_string(),
            terms: e.terms().map(|(k, c)| TermJson { key: k.to_string(), coeff: format_scalar(c) }).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorTermJson {
    pub keys: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorJson {
    pub text: String,
    pub arity: usize,
    pub terms: Vec<TensorTermJson>,
}

impl<K: BasisKey> From<&Tensor<K>> for TensorJson {
    fn from(t: &Tensor<K>) -> Self {
        TensorJson {
            text: t.to_string(),
            arity: t.arity(),
            terms: t
                .terms()
                .map(|(keys, c)| TensorTermJson {
                    keys: keys.iter().map(ToString::to_string).collect(),
                    coeff: format_scalar(c),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlgorithmValue {
    pub algorithm: Algorithm,
    pub value: ElementJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationFlags {
    pub connected: bool,
    pub counit_compatible: bool,
    pub coproduct_compatible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: Check,
    pub passed: bool,
    pub checked: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationFlags>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ResultPayload {
    Element {
        input: ElementJson,
        values: Vec<AlgorithmValue>,
        #[serde(skip_serializing_if = "Option::is_none")]
        agreement: Option<bool>,
    },
    Tensor {
        input: ElementJson,
        reduced: bool,
        iterate: usize,
        value: TensorJson,
    },
    Index {
        input: ElementJson,
        index: usize,
        /// Term counts of `Δ̄¹ … Δ̄ⁿ` on the counit-kernel component.
        chain: Vec<usize>,
    },
    Report {
        passed: bool,
        checks: Vec<CheckSummary>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolationJson {
    pub check: Check,
    pub at: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub instance: String,
    pub command: String,
    pub max_degree: usize,
    pub result: ResultPayload,
    pub violations: Vec<ViolationJson>,
    pub version: String,
}

impl ReportDocument {
    pub fn new(instance: &str, command: &str, max_degree: usize, result: ResultPayload) -> Self {
        ReportDocument {
            instance: instance.to_string(),
            command: command.to_string(),
            max_degree,
            result,
            violations: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// True when the payload records a failed check or disagreeing algorithms.
    pub fn failed(&self) -> bool {
        match &self.result {
            ResultPayload::Report { passed, .. } => !passed,
            ResultPayload::Element { agreement, .. } => *agreement == Some(false),
            _ => false,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.result {
            ResultPayload::Element { values, agreement, .. } => {
                for v in values {
                    writeln!(out, "{}: {}", v.algorithm, v.value.text).unwrap();
                }
                if let Some(a) = agreement {
                    writeln!(out, "agreement: {a}").unwrap();
                }
            }
            ResultPayload::Tensor { value, .. } => writeln!(out, "{}", value.text).unwrap(),
            ResultPayload::Index { index, chain, .. } => {
                writeln!(out, "index: {index}").unwrap();
                let sizes: Vec<String> = chain.iter().map(ToString::to_string).collect();
                writeln!(out, "chain: [{}]", sizes.join(", ")).unwrap();
            }
            ResultPayload::Report { passed, checks } => {
                for c in checks {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    writeln!(
                        out,
                        "{:<12} {status} ({} checked, {} violations)",
                        c.check.name(),
                        c.checked,
                        c.violations
                    )
                    .unwrap();
                    for v in self.violations.iter().filter(|v| v.check == c.check) {
                        writeln!(out, "    at {}: {}", v.at, v.detail).unwrap();
                    }
                }
                writeln!(out, "{}", if *passed { "all checks passed" } else { "some checks failed" }).unwrap();
            }
        }
        out
    }
}

pub fn summarize(report: &CheckReport) -> (CheckSummary, Vec<ViolationJson>) {
    summary_with(report, None)
}

pub fn summarize_filtration(
    check: Check,
    report: &FiltrationReport,
    checked: usize,
) -> (CheckSummary, Vec<ViolationJson>) {
    let flags = FiltrationFlags {
        connected: report.connected,
        counit_compatible: report.counit_compatible,
        coproduct_compatible: report.coproduct_compatible,
    };
    summary_with(&report.clone().into_check_report(check, checked), Some(flags))
}

fn summary_with(report: &CheckReport, filtration: Option<FiltrationFlags>) -> (CheckSummary, Vec<ViolationJson>) {
    let summary = CheckSummary {
        check: report.check,
        passed: report.passed(),
        checked: report.checked,
        violations: report.violations.len(),
        filtration,
    };
    let violations = report
        .violations
        .iter()
        .map(|v| ViolationJson { check: report.check, at: v.at.clone(), detail: v.detail.clone() })
        .collect();
    (summary, violations)
}
