//! Deterministic check reports, printable as text or JSON.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub status: String,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Stats {
    pub categories: usize,
    pub morphisms: usize,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub stats: Stats,
}

impl Report {
    pub fn new() -> Self {
        Report {
            checks: Vec::new(),
            stats: Stats {
                categories: 0,
                morphisms: 0,
                elapsed_ms: 0,
            },
        }
    }

    pub fn push_pass(&mut self, name: impl Into<String>, anchor: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            paper_anchor: anchor.into(),
            status: "pass".into(),
            witness: String::new(),
        });
    }

    pub fn push_fail(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        witness: impl Into<String>,
    ) {
        self.checks.push(Check {
            name: name.into(),
            paper_anchor: anchor.into(),
            status: "fail".into(),
            witness: witness.into(),
        });
    }

    pub fn push_outcome(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: impl Into<String>,
    ) {
        if ok {
            self.push_pass(name, anchor);
        } else {
            self.push_fail(name, anchor, witness);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == "pass")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {} ({})",
                if c.status == "pass" { "PASS" } else { "FAIL" },
                c.name,
                c.paper_anchor
            ));
            if !c.witness.is_empty() {
                out.push_str(&format!(" — {}", c.witness));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "checks: {} total, {} failed; categories: {}, morphisms: {}, elapsed_ms: {}\n",
            self.checks.len(),
            self.checks.iter().filter(|c| c.status != "pass").count(),
            self.stats.categories,
            self.stats.morphisms,
            self.stats.elapsed_ms
        ));
        out
    }
}

impl Default for Report {
    fn default() -> Self {
        Report::new()
    }
}
