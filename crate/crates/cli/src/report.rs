//! Claim reports: one JSON line per verified claim, deterministic for a
//! fixed configuration (the `runtime_ms` field excepted).

use std::collections::BTreeMap;
use std::io::Write;

use expanselab_core::families::{FamilyVerdict, Witness};
use expanselab_core::Rational;
use serde::Serialize;

use crate::format_rational;

/// One verified claim. Field order is the serialization order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    /// Stable claim identifier, e.g. `orbit.case3.s=2.blocks`.
    pub claim: String,
    /// Plain-language statement of what was checked.
    pub detail: String,
    /// `pass` or `fail`.
    pub verdict: String,
    /// Configuration the verdict refers to (horizon, thresholds, seed).
    pub params: BTreeMap<String, String>,
    /// Constants the check computed (η, ε, β, λ, window sizes).
    pub constants: BTreeMap<String, String>,
    /// Compact rendering of the supporting witness, when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Wall-clock milliseconds; excluded from determinism guarantees.
    pub runtime_ms: u128,
}

impl Report {
    pub fn new(claim: impl Into<String>, detail: impl Into<String>, pass: bool) -> Self {
        Report {
            claim: claim.into(),
            detail: detail.into(),
            verdict: if pass { "pass" } else { "fail" }.into(),
            params: BTreeMap::new(),
            constants: BTreeMap::new(),
            witness: None,
            runtime_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass"
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn rational_param(self, key: &str, value: &Rational) -> Self {
        self.param(key, format_rational(value))
    }

    pub fn constant(mut self, key: &str, value: impl ToString) -> Self {
        self.constants.insert(key.into(), value.to_string());
        self
    }

    pub fn rational_constant(self, key: &str, value: &Rational) -> Self {
        self.constant(key, format_rational(value))
    }

    /// Copies every named constant out of a core check report.
    pub fn constants_from(mut self, check: &expanselab_core::combinators::CheckReport) -> Self {
        for (name, value) in &check.constants {
            self.constants.insert(name.clone(), format_rational(value));
        }
        self
    }

    pub fn witness(mut self, text: impl Into<String>) -> Self {
        self.witness = Some(text.into());
        self
    }

    pub fn verdict_witness(self, verdict: &FamilyVerdict) -> Self {
        match &verdict.witness {
            Some(w) => self.witness(describe_witness(w)),
            None => self,
        }
    }
}

/// Compact single-line rendering of a structured witness.
pub fn describe_witness(witness: &Witness) -> String {
    match witness {
        Witness::Block { start, len } => format!("block(start={start}, len={len})"),
        Witness::GapBound { max_gap } => format!("gap-bound(max={max_gap})"),
        Witness::Gap { after, len } => format!("gap(after={after}, len={len})"),
        Witness::ComplementBlock { start, len } => {
            format!("complement-block(start={start}, len={len})")
        }
        Witness::Intersection {
            indices,
            choices,
            points,
        } => format!("intersection(indices={indices:?}, choices={choices:?}, points={points:?})"),
        Witness::Exhausted { cases } => format!("exhausted({cases} cases)"),
        Witness::Onset { index } => format!("onset(index={index})"),
        Witness::Progression { start, step } => {
            format!("progression(start={start}, step={step})")
        }
    }
}

/// Orders reports by claim id and writes them, one JSON object per line.
pub fn emit_json_lines(reports: &mut [Report], mut out: impl Write) -> anyhow::Result<()> {
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    for report in reports.iter() {
        serde_json::to_writer(&mut out, report)?;
        writeln!(out)?;
    }
    Ok(())
}

/// Orders reports by claim id and writes a human-readable line for each.
pub fn emit_text(reports: &mut [Report], mut out: impl Write) -> anyhow::Result<()> {
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    for report in reports.iter() {
        writeln!(
            out,
            "{} {} — {}",
            if report.passed() { "PASS" } else { "FAIL" },
            report.claim,
            report.detail
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use expanselab_core::ratio;

    #[test]
    fn reports_serialize_sorted_and_stable() {
        let mut reports = vec![
            Report::new("b.second", "later claim", true),
            Report::new("a.first", "earlier claim", false).rational_constant("eta", &ratio(1, 8)),
        ];
        let mut buf = Vec::new();
        emit_json_lines(&mut reports, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("\"a.first\""));
        assert!(lines[0].contains("\"fail\""));
        assert!(lines[0].contains("\"eta\":\"1/8\""));
        assert!(lines[1].contains("\"b.second\""));
    }

    #[test]
    fn witnesses_render_compactly() {
        let text = describe_witness(&Witness::Gap { after: 6, len: 994 });
        assert_eq!(text, "gap(after=6, len=994)");
    }
}
