use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tables: Option<BTreeMap<String, String>>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport { command: command.to_string(), parameters: BTreeMap::new(), verdicts: Vec::new(), tables: None }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn verdict(&mut self, check: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.verdicts.push(Verdict { check: check.into(), pass, detail: detail.into() });
    }

    pub fn table(&mut self, name: &str, tsv: String) {
        self.tables.get_or_insert_with(BTreeMap::new).insert(name.to_string(), tsv);
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}\t{}\t{}\n", v.check, v.detail));
        }
        out
    }
}
