//! Text and JSON renderings of library results.

use std::collections::BTreeSet;
use std::fmt::Write;

use cayley_core::gate::{EliminationReport, EliminationRecord, Violation};
use cayley_core::tree::{ConjectureReport, ScanTally};
use cayley_core::triples::Triple;
use serde::Serialize;

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ViolationJson {
    pub p: usize,
    pub q: usize,
    pub kind: &'static str,
    pub message: String,
}

impl From<Violation> for ViolationJson {
    fn from(v: Violation) -> Self {
        ViolationJson {
            p: v.p,
            q: v.q,
            kind: v.kind.label(),
            message: v.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RecordJson {
    pub f: u8,
    pub g: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<&'static str>,
    pub screen_pass: bool,
    pub q_hits: Vec<[usize; 3]>,
    pub qt_hits: Vec<[usize; 3]>,
    pub gate_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolationJson>,
}

fn tuples(set: &BTreeSet<Triple>) -> Vec<[usize; 3]> {
    set.iter().map(|t| [t.p(), t.q(), t.r()]).collect()
}

impl From<&EliminationRecord> for RecordJson {
    fn from(r: &EliminationRecord) -> Self {
        RecordJson {
            f: r.spec.f_index(),
            g: r.spec.g_index(),
            name: r.spec.name(),
            screen_pass: r.screen.pass,
            q_hits: tuples(&r.screen.q_hits),
            qt_hits: tuples(&r.screen.qt_hits),
            gate_pass: r.gate_pass(),
            violation: r.violation().map(Into::into),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EliminationJson {
    pub s_max: usize,
    pub level: u32,
    pub candidates: usize,
    pub screen_survivors: usize,
    pub final_survivors: Vec<String>,
    pub matches_valid_eight: bool,
    pub records: Vec<RecordJson>,
}

pub fn elimination_json(report: &EliminationReport) -> String {
    let dto = EliminationJson {
        s_max: report.s_max,
        level: report.level,
        candidates: report.records.len(),
        screen_survivors: report.screen_survivors().len(),
        final_survivors: report.final_survivors().iter().map(ToString::to_string).collect(),
        matches_valid_eight: report.survivors_are_the_valid_eight(),
        records: report.records.iter().map(Into::into).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("plain structs serialize")
}

fn grid(out: &mut String, report: &EliminationReport, cell: impl Fn(&EliminationRecord) -> String) {
    out.push_str("     ");
    for g in 0..4 {
        write!(out, " {:<6}", format!("g{g}")).unwrap();
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    for f in 0..8u8 {
        write!(out, "f{f}   ").unwrap();
        for rec in report.records.iter().filter(|r| r.spec.f_index() == f) {
            write!(out, " {:<6}", cell(rec)).unwrap();
        }
        out.truncate(out.trim_end().len());
        out.push('\n');
    }
}

/// Two 8×4 grids: the options hit by the screen, then the gate outcome.
pub fn elimination_text(report: &EliminationReport) -> String {
    let mut out = String::new();
    let screened = report.screen_survivors().len();
    writeln!(
        out,
        "initial screen, s = 1..{}: {} of {} candidates pass",
        report.s_max,
        screened,
        report.records.len()
    )
    .unwrap();
    grid(&mut out, report, |r| {
        match (r.screen.q_hits.is_empty(), r.screen.qt_hits.is_empty()) {
            (false, true) => "Q".into(),
            (true, false) => "QT".into(),
            (true, true) => "-".into(),
            (false, false) => "Q+QT".into(),
        }
    });
    let survivors = report.final_survivors();
    writeln!(
        out,
        "\nquaternion gate, interior p, q < {}: {} of {} pass",
        1usize << report.level,
        survivors.len(),
        screened
    )
    .unwrap();
    grid(&mut out, report, |r| match &r.gate {
        None => ".".into(),
        Some(Ok(())) => r.spec.to_string(),
        Some(Err(_)) => "x".into(),
    });
    let names: Vec<String> = survivors.iter().map(ToString::to_string).collect();
    writeln!(out, "\nsurvivors: {}", names.join(" ")).unwrap();
    let failed: Vec<_> = report
        .records
        .iter()
        .filter_map(|r| r.violation().map(|v| (r.spec, v)))
        .collect();
    if !failed.is_empty() {
        out.push_str("violations:\n");
        for (spec, v) in failed {
            writeln!(out, "  {spec}: {v}").unwrap();
        }
    }
    out
}

/// One `p q r` line per triple, sorted.
pub fn triples_text(set: &BTreeSet<Triple>) -> String {
    set.iter()
        .map(|t| format!("{} {} {}\n", t.p(), t.q(), t.r()))
        .collect()
}

pub fn triples_json(set: &BTreeSet<Triple>) -> String {
    serde_json::to_string(&tuples(set)).expect("arrays serialize")
}

fn tally_line(out: &mut String, label: &str, t: &ScanTally) {
    write!(out, "{label}: checked {}, counterexamples {}", t.checked, t.counterexamples).unwrap();
    if let Some((p, q)) = t.first {
        write!(out, ", first at ({p},{q})").unwrap();
    }
    out.push('\n');
}

pub fn conjecture_text(r: &ConjectureReport) -> String {
    let mut out = format!("bound {}\n", r.bound);
    tally_line(&mut out, "w2 = +1 for 1 < q/p < 3/2", &r.plus_band);
    tally_line(&mut out, "w2 = -1 for 2/3 < q/p <= 1", &r.minus_band);
    let labels = [
        "w2(2^n+r, 2^m+s) = +1",
        "w2(2^m+2^n+r, 2^n+s) = +1",
        "w2(2^m+r, 2^m+2^n+s) = +1",
    ];
    for (label, t) in labels.iter().zip(&r.identities) {
        tally_line(&mut out, label, t);
    }
    writeln!(out, "total counterexamples {}", r.total_counterexamples()).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use cayley_core::gate::elimination_report;
    use cayley_core::triples::all_triples;
    use cayley_core::TwistId;

    #[test]
    fn elimination_renders() {
        let r = elimination_report(4, 3).unwrap();
        let text = elimination_text(&r);
        assert!(text.contains("16 of 32 candidates pass"));
        assert!(text.contains("8 of 16 pass"));
        assert!(text.contains("survivors: P0 P1 P2 P3 P0T P1T P2T P3T"));
        let json: serde_json::Value = serde_json::from_str(&elimination_json(&r)).unwrap();
        assert_eq!(json["records"].as_array().unwrap().len(), 32);
        assert_eq!(json["records"][0]["name"], "P0");
        assert_eq!(json["records"][1]["gatePass"], false);
        assert!(json["records"][1].get("violation").is_some());
        assert!(json["records"][0].get("violation").is_none());
        assert_eq!(json["matchesValidEight"], true);
    }

    #[test]
    fn triples_render() {
        let set = all_triples(TwistId::ALL[0], 2).unwrap();
        assert_eq!(triples_text(&set), "1 2 3\n");
        assert_eq!(triples_json(&set), "[[1,2,3]]");
    }
}
