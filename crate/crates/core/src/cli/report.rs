use std::fmt::Write as _;

use serde::Serialize;

use crate::cyclic::Certificate;

pub const CERTIFIED: &str = "CERTIFIED";
pub const WINDOW_STABLE: &str = "WINDOW-STABLE";
pub const UNDECIDED_IN_SPAN: &str = "UNDECIDED-IN-SPAN";

pub fn certificate_name(c: Certificate) -> &'static str {
    match c {
        Certificate::Certified => CERTIFIED,
        Certificate::WindowStable => WINDOW_STABLE,
        Certificate::NotStabilized => "NOT-STABILIZED",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Parameter {
    pub name: String,
    pub value: String,
}

/// A table whose last column is the certificate of the row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(title: &str, columns: &[&str]) -> Self {
        let mut columns: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
        columns.push("certificate".into());
        Table { title: title.into(), columns, rows: Vec::new() }
    }

    pub fn row(&mut self, cells: Vec<String>, certificate: &str) {
        debug_assert_eq!(cells.len() + 1, self.columns.len());
        let mut cells = cells;
        cells.push(certificate.into());
        self.rows.push(cells);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub value: String,
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub parameters: Vec<Parameter>,
    pub tables: Vec<Table>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
    pub caveats: Vec<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>) -> Self {
        Report {
            command: command.into(),
            inputs,
            parameters: Vec::new(),
            tables: Vec::new(),
            verdicts: Vec::new(),
            notes: Vec::new(),
            caveats: Vec::new(),
        }
    }

    pub fn parameter(&mut self, name: &str, value: impl ToString) {
        self.parameters.push(Parameter { name: name.into(), value: value.to_string() });
    }

    pub fn verdict(&mut self, claim: &str, value: impl ToString, certificate: &str) {
        self.verdicts.push(Verdict { claim: claim.into(), value: value.to_string(), certificate: certificate.into() });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn caveat(&mut self, text: impl Into<String>) {
        self.caveats.push(text.into());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for i in &self.inputs {
            let _ = writeln!(out, "input: {i}");
        }
        for p in &self.parameters {
            let _ = writeln!(out, "{}: {}", p.name, p.value);
        }
        for t in &self.tables {
            let _ = writeln!(out, "\n{}", t.title);
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|k| t.rows.iter().map(|r| r[k].chars().count()).chain([t.columns[k].chars().count()]).max().unwrap_or(0))
                .collect();
            for line in std::iter::once(&t.columns).chain(&t.rows) {
                let cells: Vec<String> = line.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                let _ = writeln!(out, "  {}", cells.join("  ").trim_end());
            }
        }
        if !self.verdicts.is_empty() {
            let _ = writeln!(out, "\nverdicts");
            let w = self.verdicts.iter().map(|v| v.claim.chars().count()).max().unwrap_or(0);
            let wv = self.verdicts.iter().map(|v| v.value.chars().count()).max().unwrap_or(0);
            for v in &self.verdicts {
                let _ = writeln!(out, "  {:<w$}  {:<wv$}  {}", v.claim, v.value, v.certificate);
            }
        }
        if !self.notes.is_empty() {
            let _ = writeln!(out, "\nnotes");
            for c in &self.notes {
                let _ = writeln!(out, "  - {c}");
            }
        }
        if !self.caveats.is_empty() {
            let _ = writeln!(out, "\ncaveats");
            for c in &self.caveats {
                let _ = writeln!(out, "  - {c}");
            }
        }
        out
    }
}
