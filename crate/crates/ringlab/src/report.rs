//! JSON and text renderings of property reports, radical profiles and
//! suite reports. All output is deterministic: fixed field order, sorted
//! index lists, no timestamps.

use std::collections::BTreeMap;

use serde::Serialize;

use ringlab_core::construct::Coords;
use ringlab_core::harness::{CheckStatus, SuiteReport};
use ringlab_core::properties::PropertyReport;
use ringlab_core::radicals::RadicalProfile;

#[derive(Debug, Serialize)]
pub struct PropertyJson {
    pub ring: String,
    pub property: String,
    pub verdict: bool,
    pub witness: Option<Vec<usize>>,
    #[serde(rename = "decodedWitness")]
    pub decoded_witness: Option<String>,
    pub scanned: u64,
}

/// Renders a witness tuple through the ring's coordinate map.
pub fn decode_witness(coords: &Coords, witness: &[usize]) -> String {
    let parts: Vec<String> = witness.iter().map(|&w| coords.render(w)).collect();
    format!("({})", parts.join(", "))
}

pub fn property_json(ring: &str, coords: &Coords, report: &PropertyReport) -> PropertyJson {
    PropertyJson {
        ring: ring.to_string(),
        property: report.property.clone(),
        verdict: report.verdict,
        witness: report.witness.clone(),
        decoded_witness: report
            .witness
            .as_ref()
            .map(|w| decode_witness(coords, w)),
        scanned: report.scanned,
    }
}

pub fn property_text(coords: &Coords, report: &PropertyReport) -> String {
    match &report.witness {
        None => format!(
            "{}: {} (scanned {})",
            report.property, report.verdict, report.scanned
        ),
        Some(w) => format!(
            "{}: {} (scanned {})  witness {:?} = {}",
            report.property,
            report.verdict,
            report.scanned,
            w,
            decode_witness(coords, w)
        ),
    }
}

#[derive(Debug, Serialize)]
pub struct RadicalJson {
    pub ring: String,
    pub order: usize,
    #[serde(rename = "P")]
    pub p: Vec<usize>,
    #[serde(rename = "N")]
    pub n: Vec<usize>,
    #[serde(rename = "N2")]
    pub n2: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(rename = "methodsAgreed")]
    pub methods_agreed: bool,
    #[serde(rename = "perMethod")]
    pub per_method: BTreeMap<String, Vec<usize>>,
}

pub fn radical_json(ring: &str, order: usize, profile: &RadicalProfile) -> RadicalJson {
    RadicalJson {
        ring: ring.to_string(),
        order,
        p: profile.p.indices(),
        n: profile.n.indices(),
        n2: profile.n2.indices(),
        j: profile.j.indices(),
        methods_agreed: profile.methods_agreed,
        per_method: profile
            .per_method
            .iter()
            .map(|(name, subset)| (name.to_string(), subset.indices()))
            .collect(),
    }
}

pub fn radical_text(profile: &RadicalProfile) -> String {
    let mut out = String::new();
    out.push_str(&format!("P = {} (|P| = {})\n", profile.p.render(), profile.p.count()));
    out.push_str(&format!("N = {} (|N| = {})\n", profile.n.render(), profile.n.count()));
    out.push_str(&format!("N2 = {}\n", profile.n2.render()));
    out.push_str(&format!("J = {}\n", profile.j.render()));
    for (name, subset) in profile.per_method.iter() {
        out.push_str(&format!("  P[{name}] = {}\n", subset.render()));
    }
    out.push_str(&format!("methods agreed: {}\n", profile.methods_agreed));
    out
}

#[derive(Debug, Serialize)]
pub struct SuiteJson {
    #[serde(rename = "suiteVersion")]
    pub suite_version: String,
    pub corpus: Vec<String>,
    pub checks: Vec<CheckJson>,
    pub summary: SummaryJson,
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub id: String,
    pub anchor: String,
    pub outcomes: Vec<OutcomeJson>,
}

#[derive(Debug, Serialize)]
pub struct OutcomeJson {
    pub ring: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct SummaryJson {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn suite_json(report: &SuiteReport) -> SuiteJson {
    SuiteJson {
        suite_version: env!("CARGO_PKG_VERSION").to_string(),
        corpus: report.corpus.clone(),
        checks: report
            .checks
            .iter()
            .map(|check| CheckJson {
                id: check.id.clone(),
                anchor: check.anchor.clone(),
                outcomes: check
                    .outcomes
                    .iter()
                    .map(|o| OutcomeJson {
                        ring: o.ring.clone(),
                        status: o.status.as_str().to_string(),
                        witness: o.witness.clone(),
                        detail: o.detail.clone(),
                    })
                    .collect(),
            })
            .collect(),
        summary: SummaryJson {
            pass: report.summary.pass,
            fail: report.summary.fail,
            skipped: report.summary.skipped,
        },
    }
}

/// Text form of a suite report: one line per check, then findings, then
/// the summary. Contains no timing so repeated runs are byte-identical.
pub fn suite_text(report: &SuiteReport, decoders: &BTreeMap<String, Coords>) -> String {
    let mut out = String::new();
    for check in report.checks.iter() {
        let mut pass = 0usize;
        let mut vacuous = 0usize;
        let mut fail = 0usize;
        let mut skipped = 0usize;
        for o in check.outcomes.iter() {
            match o.status {
                CheckStatus::Pass => pass += 1,
                CheckStatus::Vacuous => vacuous += 1,
                CheckStatus::Fail => fail += 1,
                CheckStatus::Skipped => skipped += 1,
            }
        }
        out.push_str(&format!(
            "check {:<24} pass {:>2} (+{} vacuous), fail {}, skipped {}\n",
            check.id, pass, vacuous, fail, skipped
        ));
        out.push_str(&format!("  claim: {}\n", check.anchor));
        for o in check.outcomes.iter() {
            if o.status == CheckStatus::Fail {
                out.push_str(&format!(
                    "  FINDING {} on {}: {}",
                    check.id,
                    o.ring,
                    o.detail.as_deref().unwrap_or("(no detail)")
                ));
                if let Some(w) = &o.witness {
                    match decoders.get(&o.ring) {
                        Some(coords) => {
                            out.push_str(&format!(" witness {}", decode_witness(coords, w)))
                        }
                        None => out.push_str(&format!(" witness {w:?}")),
                    }
                }
                out.push('\n');
            }
        }
    }
    out.push_str(&format!(
        "summary: {} pass, {} fail, {} skipped\n",
        report.summary.pass, report.summary.fail, report.summary.skipped
    ));
    out
}

pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}
