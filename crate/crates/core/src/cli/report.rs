use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use super::Format;

/// One verified statement inside a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub statement: String,
    pub source: String,
    pub holds: bool,
    pub detail: String,
}

/// Result of running one command.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub input: String,
    pub verb: String,
    pub invariants: BTreeMap<String, Value>,
    /// Formula each invariant was obtained from, keyed like `invariants`.
    pub sources: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub verdict: String,
}

fn value_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn hrh_text(v: &Value) -> String {
    let lo = value_text(&v["lo"]);
    let hi = value_text(&v["hi"]);
    match v["kind"].as_str() {
        Some("exact") => lo,
        Some("lower_bound") => format!(">= {lo}"),
        _ => format!("[{lo}, {hi}]"),
    }
}

impl Report {
    pub fn new(input: String, verb: &str) -> Self {
        Report {
            input,
            verb: verb.to_string(),
            invariants: BTreeMap::new(),
            sources: BTreeMap::new(),
            checks: Vec::new(),
            verdict: String::new(),
        }
    }

    pub fn set(&mut self, name: &str, value: impl Into<Value>) {
        self.invariants.insert(name.to_string(), value.into());
    }

    pub fn set_sourced(&mut self, name: &str, value: impl Into<Value>, source: &str) {
        self.set(name, value);
        self.sources.insert(name.to_string(), source.to_string());
    }

    pub fn check(&mut self, name: &str, statement: &str, source: &str, holds: bool, detail: String) {
        self.checks.push(Check {
            name: name.to_string(),
            statement: statement.to_string(),
            source: source.to_string(),
            holds,
            detail,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    fn text(&self) -> String {
        let mut out = format!("input: {}\n", self.input);
        for (name, value) in &self.invariants {
            let shown = if name == "HRH" { hrh_text(value) } else { value_text(value) };
            match self.sources.get(name) {
                Some(src) => out.push_str(&format!("{name} = {shown} ({src})\n")),
                None => out.push_str(&format!("{name} = {shown}\n")),
            }
        }
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}: {} ({})", c.name, c.statement, c.source));
            if !c.detail.is_empty() {
                out.push_str(&format!(" [{}]", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!("verdict: {}", self.verdict));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => self.to_json().to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_lines() {
        let mut r = Report::new("hrh bp(2,2,2,2)".into(), "hrh");
        r.set_sourced(
            "HRH",
            serde_json::json!({"kind": "exact", "lo": 0, "hi": 0}),
            "Cor: HRH = Sp_min,Z - 2",
        );
        r.set("Sp_min_Z", "2");
        r.verdict = "not a rational homology manifold".into();
        let t = r.render(Format::Text);
        assert!(t.lines().any(|l| l == "HRH = 0 (Cor: HRH = Sp_min,Z - 2)"));
        assert!(t.lines().any(|l| l == "Sp_min_Z = 2"));
        assert!(r.passed());
    }

    #[test]
    fn failed_check_flips_status() {
        let mut r = Report::new("x".into(), "hrh");
        r.check("c", "1 <= 0", "none", false, String::new());
        assert!(!r.passed());
        assert!(r.render(Format::Text).contains("[FAIL] c"));
    }
}
