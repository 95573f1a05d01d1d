//! Machine-readable command reports.

use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Keys are emitted in sorted order (serde_json's default map is a BTreeMap),
/// so identical inputs give byte-identical output.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub checks: Vec<Check>,
    pub ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, params: Value) -> Self {
        Self {
            command: command.into(),
            params,
            result: Value::Null,
            checks: Vec::new(),
            ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "params": self.params,
            "result": self.result,
            "checks": self.checks,
            "ms": self.ms,
        })
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("report is valid JSON");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("demo", json!({"z": 1, "a": 2}));
        r.checks.push(Check::new("x", true, ""));
        let s = serde_json::to_string(&r.to_value()).unwrap();
        assert_eq!(
            s,
            r#"{"checks":[{"detail":"","name":"x","pass":true}],"command":"demo","ms":0,"params":{"a":2,"z":1},"result":null}"#
        );
        assert!(r.passed());
    }
}
