//! Report structures shared by the registry verifier and the CLI.
//! Serialization is canonical (struct field order, sorted entry names)
//! so repeated runs diff cleanly.

use serde::{Deserialize, Serialize};

use crate::group::FgAbGroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryLine {
    pub name: String,
    pub status: Status,
    /// invariant factors of the computed universal group, when built
    pub group: Option<FgAbGroup>,
    pub r#type: Option<Vec<usize>>,
    /// human-readable detail: mismatch description or skip reason
    pub detail: String,
    /// set when the registry cannot distinguish this entry from another
    /// by the (universal group, type) pair alone
    pub invariant_collision: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub scope: String,
    pub field: String,
    pub mode: String,
    pub entries: Vec<EntryLine>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn to_canonical_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    /// Fixed-width human-readable table, one line per entry.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let name_w = self
            .entries
            .iter()
            .map(|e| e.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        out.push_str(&format!(
            "{:<name_w$}  {:<6}  {:<18}  {:<22}  {}\n",
            "name", "status", "universal group", "type", "detail"
        ));
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            let group = e
                .group
                .as_ref()
                .map(|g| g.display())
                .unwrap_or_else(|| "-".into());
            let ty = e
                .r#type
                .as_ref()
                .map(|t| {
                    let parts: Vec<String> = t.iter().map(|n| n.to_string()).collect();
                    format!("({})", parts.join(","))
                })
                .unwrap_or_else(|| "-".into());
            let mut detail = e.detail.clone();
            if let Some(c) = &e.invariant_collision {
                if !detail.is_empty() {
                    detail.push_str("; ");
                }
                detail.push_str(&format!("invariant pair shared with {c}"));
            }
            out.push_str(&format!(
                "{:<name_w$}  {:<6}  {:<18}  {:<22}  {}\n",
                e.name, status, group, ty, detail
            ));
        }
        out
    }
}
