//! Verification reports and their JSON, CSV and human renderings.
//!
//! Rationals are always serialized as strings so that exact values survive
//! a round trip; map-valued fields keep parameter order.

use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use hyperid_core::catalog::{Assignment, TrialOutcome, TrialResult};
use hyperid_core::derived::DerivedParams;

/// A name → value map serialized in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderedMap(pub Vec<(String, String)>);

impl Serialize for OrderedMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl From<&Assignment> for OrderedMap {
    fn from(a: &Assignment) -> Self {
        OrderedMap(
            a.0.iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
        )
    }
}

impl From<&DerivedParams> for OrderedMap {
    fn from(d: &DerivedParams) -> Self {
        OrderedMap(
            d.entries()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
    }
}

/// One failed or errored trial.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub trial: u64,
    pub assignment: OrderedMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived: Option<OrderedMap>,
    /// Set when verification raised an error instead of comparing values.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Outcome of a seeded campaign over one catalog entry.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: String,
    pub seed: u64,
    pub trials: u64,
    pub passes: u64,
    pub rejected_degenerate: u64,
    pub failures: Vec<Failure>,
    /// Derived parameters of the first trial's instance.
    pub derived: OrderedMap,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    /// Assembles a report from trial results already sorted by index.
    pub fn from_trials(
        identity: &str,
        seed: u64,
        results: &[TrialResult],
        elapsed_ms: u64,
    ) -> Self {
        let mut failures = Vec::new();
        let mut passes = 0;
        for t in results {
            match &t.outcome {
                TrialOutcome::Pass => passes += 1,
                TrialOutcome::Fail {
                    assignment,
                    derived,
                    verdict,
                } => failures.push(Failure {
                    trial: t.index,
                    assignment: assignment.into(),
                    lhs: Some(verdict.lhs.clone()),
                    rhs: Some(verdict.rhs.clone()),
                    derived: Some(derived.into()),
                    error: None,
                }),
                TrialOutcome::Error {
                    assignment,
                    message,
                } => failures.push(Failure {
                    trial: t.index,
                    assignment: assignment.into(),
                    lhs: None,
                    rhs: None,
                    derived: None,
                    error: Some(message.clone()),
                }),
            }
        }
        VerificationReport {
            identity: identity.to_string(),
            seed,
            trials: results.len() as u64,
            passes,
            rejected_degenerate: results.iter().map(|t| t.rejections).sum(),
            failures,
            derived: results
                .first()
                .and_then(|t| t.derived.as_ref())
                .map(OrderedMap::from)
                .unwrap_or_default(),
            elapsed_ms,
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passes == self.trials
    }
}

/// One failed Bailey-transform trial.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BaileyFailure {
    pub trial: u64,
    pub assignment: OrderedMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transform: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub catalog_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Outcome of a Bailey-transform campaign.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct BaileyReport {
    pub setup: String,
    pub identity: String,
    pub seed: u64,
    pub trials: u64,
    pub passes: u64,
    pub transform_passes: u64,
    pub catalog_matches: u64,
    pub beta_checks: u64,
    pub beta_passes: u64,
    pub gamma_checks: u64,
    pub gamma_passes: u64,
    pub rejected_degenerate: u64,
    pub failures: Vec<BaileyFailure>,
    pub elapsed_ms: u64,
}

impl BaileyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passes == self.trials
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

pub fn render_verification(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
        Format::Csv => {
            let mut out = String::from(
                "identity,seed,trials,passes,failures,rejected_degenerate,elapsed_ms\n",
            );
            for r in reports {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.identity,
                    r.seed,
                    r.trials,
                    r.passes,
                    r.failures.len(),
                    r.rejected_degenerate,
                    r.elapsed_ms
                );
            }
            out
        }
        Format::Human => {
            let mut out = String::new();
            for r in reports {
                let tag = if r.ok() { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{tag} {:<26} {:>4}/{:<4} rejected {:>5}  {} ms",
                    r.identity, r.passes, r.trials, r.rejected_degenerate, r.elapsed_ms
                );
                for f in &r.failures {
                    let what = match (&f.error, &f.lhs, &f.rhs) {
                        (Some(e), _, _) => format!("error: {e}"),
                        (None, Some(l), Some(r)) => format!("lhs {l} != rhs {r}"),
                        _ => String::from("failed"),
                    };
                    let args: Vec<String> = f
                        .assignment
                        .0
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    let _ = writeln!(out, "    trial {}: {} [{}]", f.trial, what, args.join(", "));
                }
            }
            let failed = reports.iter().filter(|r| !r.ok()).count();
            let _ = writeln!(out, "{} identities, {} failing", reports.len(), failed);
            out
        }
    }
}

pub fn render_bailey(report: &BaileyReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Csv => format!(
            "setup,seed,trials,passes,transform_passes,catalog_matches,beta_checks,beta_passes,gamma_checks,gamma_passes,rejected_degenerate,elapsed_ms\n\
             {},{},{},{},{},{},{},{},{},{},{},{}\n",
            report.setup,
            report.seed,
            report.trials,
            report.passes,
            report.transform_passes,
            report.catalog_matches,
            report.beta_checks,
            report.beta_passes,
            report.gamma_checks,
            report.gamma_passes,
            report.rejected_degenerate,
            report.elapsed_ms
        ),
        Format::Human => {
            let mut out = String::new();
            let tag = if report.ok() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{tag} Bailey setup {} vs {}: {}/{} trials; transform {}, catalog {}, beta {}/{}, gamma {}/{}; rejected {}  {} ms",
                report.setup,
                report.identity,
                report.passes,
                report.trials,
                report.transform_passes,
                report.catalog_matches,
                report.beta_passes,
                report.beta_checks,
                report.gamma_passes,
                report.gamma_checks,
                report.rejected_degenerate,
                report.elapsed_ms
            );
            for f in &report.failures {
                let args: Vec<String> = f.assignment.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let what = f.error.clone().unwrap_or_else(|| {
                    format!("transform {:?}, catalog match {:?}", f.transform.unwrap_or(false), f.catalog_match.unwrap_or(false))
                });
                let _ = writeln!(out, "    trial {}: {} [{}]", f.trial, what, args.join(", "));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(failures: Vec<Failure>, passes: u64) -> VerificationReport {
        VerificationReport {
            identity: String::from("baseline.gauss"),
            seed: 1,
            trials: 2,
            passes,
            rejected_degenerate: 0,
            failures,
            derived: OrderedMap::default(),
            elapsed_ms: 0,
        }
    }

    #[test]
    fn any_failure_or_error_fails_the_report() {
        assert!(report(vec![], 2).ok());
        let failed = Failure {
            trial: 1,
            assignment: OrderedMap(vec![(String::from("b"), String::from("1/2"))]),
            lhs: Some(String::from("1")),
            rhs: Some(String::from("2")),
            derived: None,
            error: None,
        };
        assert!(!report(vec![failed.clone()], 1).ok());
        let errored = Failure {
            lhs: None,
            rhs: None,
            error: Some(String::from("pole: b = -1")),
            ..failed
        };
        assert!(!report(vec![errored], 1).ok());
    }

    #[test]
    fn json_keeps_parameter_order_and_string_rationals() {
        let failed = Failure {
            trial: 0,
            assignment: OrderedMap(vec![
                (String::from("z"), String::from("1/3")),
                (String::from("a"), String::from("-2")),
            ]),
            lhs: Some(String::from("1/2")),
            rhs: Some(String::from("1/3")),
            derived: None,
            error: None,
        };
        let json = render_verification(&[report(vec![failed], 1)], Format::Json);
        let z = json.find("\"z\": \"1/3\"").expect("z serialized as string");
        let a = json.find("\"a\": \"-2\"").expect("a serialized as string");
        assert!(z < a);
        assert!(!json.contains("\"error\""));
        assert!(render_verification(&[report(vec![], 2)], Format::Human).starts_with("PASS"));
    }
}
