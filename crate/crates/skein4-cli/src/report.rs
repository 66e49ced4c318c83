//! Serializable result shapes and their text form.

use serde::Serialize;

/// Result of evaluating one invariant on one diagram.
#[derive(Serialize)]
pub struct ComputeReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub code: String,
    pub invariant: String,
    pub crossings: usize,
    /// Crossings first met on their over strand in the canonical traversal.
    pub bad: usize,
    pub mu: usize,
    pub writhe: i64,
    pub value: String,
    /// Writhe-normalized form, for the weighted invariant only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normalized: Option<String>,
    /// Laurent variable names, for polynomial-valued invariants only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
}

impl ComputeReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            out.push_str(&format!("name:       {name}\n"));
        }
        out.push_str(&format!("code:       {}\n", self.code));
        let mu_word = if self.mu == 1 { "component" } else { "components" };
        let cr_word = if self.crossings == 1 { "crossing" } else { "crossings" };
        out.push_str(&format!(
            "diagram:    {} {cr_word} ({} bad), {} {mu_word}, writhe {}\n",
            self.crossings, self.bad, self.mu, self.writhe
        ));
        out.push_str(&format!("invariant:  {}\n", self.invariant));
        out.push_str(&format!("value:      {}\n", self.value));
        if let Some(n) = &self.normalized {
            out.push_str(&format!("normalized: {n}\n"));
        }
        out
    }
}

/// One pass/fail line of a verification run.
#[derive(Serialize)]
pub struct CheckLine {
    pub subject: String,
    pub check: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckLine {
    pub fn text(&self) -> String {
        let mark = if self.ok { "ok  " } else { "FAIL" };
        match &self.detail {
            Some(d) => format!("{mark} {}: {} ({d})", self.subject, self.check),
            None => format!("{mark} {}: {}", self.subject, self.check),
        }
    }
}
