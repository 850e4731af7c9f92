//! Plain-text rendering of reports.

use std::fmt::Write;

use opial_core::oracle::{ExampleReport, FuzzReport, Relation, ScanReport};
use opial_core::{Rational, TheoremId, Verdict};
use serde_json::Value;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "-".into(), Rational::to_string)
}

fn range(start: i64, end: i64) -> String {
    if start > end {
        "empty".into()
    } else {
        format!("{start}..={end}")
    }
}

pub fn verdict(v: &Verdict) -> String {
    let mut s = String::new();
    let exps = v.exponents.map_or(String::new(), |[a, b]| format!("  λ1={a} λ2={b}"));
    let _ = writeln!(s, "theorem     {}{exps}", v.theorem);
    let _ = writeln!(s, "lhs         {}  (i in {})", v.lhs, range(v.lhs_window.start, v.lhs_window.end));
    let _ = writeln!(s, "rhs         {}  (i in {})", v.rhs, range(v.rhs_window.start, v.rhs_window.end));
    let _ = writeln!(s, "constant    {}", v.constant);
    let _ = writeln!(s, "ratio       {}", opt(&v.ratio));
    let _ = writeln!(s, "holds       {}", yes(v.holds));
    let _ = writeln!(s, "hypotheses  {}", if v.within_hypotheses { "met" } else { "not met" });
    for p in &v.preconditions {
        let _ = writeln!(s, "  [{}] {}: {}", if p.passed { "ok" } else { "FAIL" }, p.name, p.detail);
    }
    for n in &v.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

pub fn check_all<'a>(verdicts: &[Verdict], skipped: impl Iterator<Item = (TheoremId, &'a str)>) -> String {
    let mut s = format!("{:<7} {:<6} {:<24} {:<24} {}\n", "theorem", "holds", "lhs", "rhs", "ratio");
    for v in verdicts {
        let _ = writeln!(
            s,
            "{:<7} {:<6} {:<24} {:<24} {}",
            v.theorem.as_str(),
            yes(v.holds),
            v.lhs.to_string(),
            v.rhs.to_string(),
            opt(&v.ratio)
        );
    }
    for (id, reason) in skipped {
        let _ = writeln!(s, "skipped {id}: {reason}");
    }
    s
}

pub fn classify(report: &Value) -> String {
    let mut s = String::new();
    for key in ["u", "v"] {
        let Some(c) = report.get(key) else { continue };
        let p = &c["profile"];
        let _ = writeln!(
            s,
            "{key}: length {} from index {}, {} / {}, zeros at {}",
            c["length"], c["base_index"], p["direction"], p["mu_direction"], p["zero_indices"]
        );
        match c["segments"].get("segments").and_then(Value::as_array) {
            Some(segs) => {
                for seg in segs {
                    let _ = writeln!(
                        s,
                        "  {}..={} {} {}",
                        seg["start"], seg["end"], seg["direction"], seg["mu_direction"]
                    );
                }
            }
            None => {
                let _ = writeln!(s, "  no segment decomposition: {}", c["segments"]["error"]);
            }
        }
    }
    if let Some(sync) = report.get("synchronicity") {
        let _ = writeln!(s, "synchronicity: {sync}");
    }
    s.replace('"', "")
}

pub fn fuzz(reports: &[FuzzReport]) -> String {
    let mut s = format!(
        "{:<7} {:>8} {:>10} {:>13} {:>10} {}\n",
        "theorem", "trials", "conforming", "nonconforming", "violations", "max ratio"
    );
    for r in reports {
        let _ = writeln!(
            s,
            "{:<7} {:>8} {:>10} {:>13} {:>10} {}",
            r.config.theorem.as_str(),
            r.trials_run,
            r.conforming,
            r.nonconforming,
            r.violation_count,
            opt(&r.max_ratio)
        );
    }
    s
}

pub fn scan(r: &ScanReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem     {}", r.theorem);
    let _ = writeln!(s, "length      {}  endpoints 0..={}", r.length, r.bound);
    let _ = writeln!(s, "candidates  {}  conforming {}", r.candidates, r.conforming);
    let _ = writeln!(s, "max ratio   {}", opt(&r.max_ratio));
    if let Some(w) = &r.witness {
        let items: Vec<String> = w.u.items().iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "witness u   {}", items.join(" "));
        if let Some(v) = &w.v {
            let items: Vec<String> = v.items().iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "witness v   {}", items.join(" "));
        }
    }
    s
}

pub fn examples(reports: &[ExampleReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let _ = writeln!(
            s,
            "example {} ({}): holds {}, matches {}",
            r.id,
            r.theorem,
            yes(r.holds),
            yes(r.matches)
        );
        for v in &r.values {
            let rel = match v.relation {
                Relation::Equal => "=",
                Relation::AtMost => "<=",
            };
            let mark = if v.agrees { "ok" } else { "DIFF" };
            let _ = writeln!(s, "  [{mark}] {}: {} {rel} {}", v.label, v.engine, v.reference);
        }
        if let Some(n) = &r.note {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    s
}
