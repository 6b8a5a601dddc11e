use std::fmt::Write;

use bihom_core::algebra::{AxiomReport, Violation};
use bihom_core::qlinalg::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// Basis indices at which a check fails, with both sides of the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
}

impl From<&Violation> for Witness {
    fn from(v: &Violation) -> Self {
        Witness {
            indices: v.indices.clone(),
            lhs: v.lhs.clone(),
            rhs: v.rhs.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub check: String,
    pub subject: String,
    pub pass: bool,
    pub reference: &'static str,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Item {
    Verdict(Verdict),
    /// One row of a cohomology table.
    Dimension {
        table: &'static str,
        degree: usize,
        dim: usize,
        reference: &'static str,
    },
    Value {
        key: String,
        value: String,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub echo: Vec<(String, String)>,
    pub items: Vec<Item>,
}

impl Report {
    pub fn new(echo: Vec<(String, String)>) -> Self {
        Report {
            echo,
            items: Vec::new(),
        }
    }

    pub fn verdict(&mut self, check: &str, subject: &str, pass: bool, reference: &'static str) {
        self.items.push(Item::Verdict(Verdict {
            check: check.to_string(),
            subject: subject.to_string(),
            pass,
            reference,
            witness: None,
        }));
    }

    /// One verdict per identity checked in `report`, each failing one
    /// carrying its first violation.
    pub fn axioms(&mut self, subject: &str, report: &AxiomReport) {
        for &axiom in report.checked() {
            self.items.push(Item::Verdict(Verdict {
                check: axiom.name().to_string(),
                subject: subject.to_string(),
                pass: report.ok(axiom),
                reference: axiom.reference(),
                witness: report.first_violation(axiom).map(Witness::from),
            }));
        }
    }

    pub fn dimension(&mut self, table: &'static str, degree: usize, dim: usize, reference: &'static str) {
        self.items.push(Item::Dimension {
            table,
            degree,
            dim,
            reference,
        });
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.items.push(Item::Value {
            key: key.into(),
            value: value.into(),
        });
    }

    pub fn verdicts(&self) -> impl Iterator<Item = &Verdict> {
        self.items.iter().filter_map(|item| match item {
            Item::Verdict(v) => Some(v),
            _ => None,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdicts().all(|v| v.pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Machine => self.render_machine(),
        }
    }

    fn render_machine(&self) -> String {
        let mut out = String::new();
        let echo: Vec<String> = self.echo.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "{}", echo.join(" ")).unwrap();
        for item in &self.items {
            match item {
                Item::Verdict(v) => {
                    let result = if v.pass { "pass" } else { "fail" };
                    writeln!(
                        out,
                        "verdict check={} subject={} result={result} ref={}",
                        v.check, v.subject, v.reference
                    )
                    .unwrap();
                    if let Some(w) = &v.witness {
                        writeln!(
                            out,
                            "witness check={} subject={} indices={} lhs={} rhs={}",
                            v.check,
                            v.subject,
                            indices(&w.indices),
                            vector(&w.lhs),
                            vector(&w.rhs)
                        )
                        .unwrap();
                    }
                }
                Item::Dimension {
                    table,
                    degree,
                    dim,
                    reference,
                } => {
                    writeln!(out, "table name={table} degree={degree} dim={dim} ref={reference}").unwrap();
                }
                Item::Value { key, value } => writeln!(out, "value {key}={value}").unwrap(),
            }
        }
        writeln!(out, "exit={}", self.exit_code()).unwrap();
        out
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        let echo: Vec<String> = self.echo.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        writeln!(out, "{}", echo.join(", ")).unwrap();
        for item in &self.items {
            match item {
                Item::Verdict(v) => {
                    let result = if v.pass { "PASS" } else { "FAIL" };
                    writeln!(out, "  {result}  {} on {}  [{}]", v.check, v.subject, v.reference).unwrap();
                    if let Some(w) = &v.witness {
                        writeln!(
                            out,
                            "        at basis ({}): {} != {}",
                            indices(&w.indices),
                            vector(&w.lhs),
                            vector(&w.rhs)
                        )
                        .unwrap();
                    }
                }
                Item::Dimension {
                    table,
                    degree,
                    dim,
                    reference,
                } => writeln!(out, "  {table}^{degree} = {dim}  [{reference}]").unwrap(),
                Item::Value { key, value } => writeln!(out, "  {key} = {value}").unwrap(),
            }
        }
        let summary = if self.passed() {
            "all checks passed"
        } else {
            "some checks failed"
        };
        writeln!(out, "{summary} (exit {})", self.exit_code()).unwrap();
        out
    }
}

fn indices(idx: &[usize]) -> String {
    idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

pub(crate) fn vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(","))
}
