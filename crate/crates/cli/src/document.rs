//! The JSON input format.
//!
//! ```json
//! {
//!   "dim": 2,
//!   "alpha": [["1", "0"], ["0", "1"]],
//!   "beta": [["1", "0"], ["0", "1"]],
//!   "brackets": [{ "name": "mu", "c": [[["0", "0"], ["0", "1"]], [["0", "-1"], ["0", "0"]]] }],
//!   "representations": [{ "name": "V", "dimV": 1, "alphaV": [["1"]], "betaV": [["1"]],
//!                         "actions": [{ "name": "rho", "rho": [[["1"]], [["0"]]] }] }],
//!   "operators": [{ "name": "N", "matrix": [["1", "0"], ["0", "0"]], "kind": "nijenhuis" }]
//! }
//! ```
//!
//! `c[i][j][k]` is the coefficient of `e_k` in `[e_i, e_j]` and `rho[i][a][b]`
//! the coefficient of `v_b` in `e_i . v_a`. Rationals are strings.

use std::path::Path;

use bihom_core::algebra::{ActionTensor, BiHomAlgebra, BracketTensor, Representation};
use bihom_core::qlinalg::{format_rational, parse_rational, Rational, RationalMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

type RawMatrix = Vec<Vec<String>>;
type RawTensor = Vec<Vec<Vec<String>>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dim: usize,
    alpha: RawMatrix,
    beta: RawMatrix,
    brackets: Vec<RawBracket>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    representations: Vec<RawRepresentation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    operators: Vec<RawOperator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBracket {
    name: String,
    c: RawTensor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    name: String,
    #[serde(rename = "dimV")]
    dim_v: usize,
    #[serde(rename = "alphaV")]
    alpha_v: RawMatrix,
    #[serde(rename = "betaV")]
    beta_v: RawMatrix,
    actions: Vec<RawAction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    name: String,
    rho: RawTensor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperator {
    name: String,
    matrix: RawMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    kind: Option<OperatorKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    s: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    lambda: Option<String>,
}

/// What an operator is meant to be used as. Informational only: any
/// operator can be passed to any command.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    Nijenhuis,
    RotaBaxter,
    Twist,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedBracket {
    pub name: String,
    pub tensor: BracketTensor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedAction {
    pub name: String,
    pub tensor: ActionTensor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedRepresentation {
    pub name: String,
    pub dim_v: usize,
    pub alpha_v: RationalMatrix,
    pub beta_v: RationalMatrix,
    pub actions: Vec<NamedAction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Operator {
    pub name: String,
    pub matrix: RationalMatrix,
    pub kind: Option<OperatorKind>,
    pub s: u32,
    pub l: u32,
    pub lambda: Rational,
}

/// A fully validated input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDocument {
    pub dim: usize,
    pub alpha: RationalMatrix,
    pub beta: RationalMatrix,
    pub brackets: Vec<NamedBracket>,
    pub representations: Vec<NamedRepresentation>,
    pub operators: Vec<Operator>,
}

pub fn parse_input(path: &Path) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_str(&text)
}

pub fn parse_str(text: &str) -> Result<InputDocument, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    validate(raw)
}

fn rational(path: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|_| CliError::MalformedRational {
        path: path.to_string(),
        text: text.to_string(),
    })
}

fn matrix(path: &str, raw: &RawMatrix, rows: usize, cols: usize) -> Result<RationalMatrix, CliError> {
    if raw.len() != rows {
        return Err(CliError::field(
            path,
            format!("expected {rows} rows, got {}", raw.len()),
        ));
    }
    let mut out = Vec::with_capacity(rows);
    for (i, row) in raw.iter().enumerate() {
        if row.len() != cols {
            return Err(CliError::field(
                format!("{path}[{i}]"),
                format!("expected {cols} entries, got {}", row.len()),
            ));
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, x)| rational(&format!("{path}[{i}][{j}]"), x))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(parsed);
    }
    if rows == 0 {
        return Ok(RationalMatrix::zeros(0, cols));
    }
    Ok(RationalMatrix::from_rows(out).expect("row lengths checked"))
}

fn tensor(path: &str, raw: &RawTensor, shape: [usize; 3]) -> Result<Vec<Vec<Vec<Rational>>>, CliError> {
    if raw.len() != shape[0] {
        return Err(CliError::field(
            path,
            format!("expected {} entries, got {}", shape[0], raw.len()),
        ));
    }
    raw.iter()
        .enumerate()
        .map(|(i, plane)| matrix(&format!("{path}[{i}]"), plane, shape[1], shape[2]).map(|m| m.to_rows()))
        .collect()
}

fn check_name(path: &str, name: &str, taken: &mut Vec<String>) -> Result<(), CliError> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '=' || c == '"') {
        return Err(CliError::field(path, format!("invalid name {name:?}")));
    }
    if taken.iter().any(|n| n == name) {
        return Err(CliError::field(path, format!("duplicate name {name:?}")));
    }
    taken.push(name.to_string());
    Ok(())
}

fn validate(raw: RawDocument) -> Result<InputDocument, CliError> {
    let d = raw.dim;
    let alpha = matrix("alpha", &raw.alpha, d, d)?;
    let beta = matrix("beta", &raw.beta, d, d)?;
    if raw.brackets.is_empty() {
        return Err(CliError::field("brackets", "at least one bracket is required"));
    }
    let mut names = Vec::new();
    let mut brackets = Vec::new();
    for (n, b) in raw.brackets.iter().enumerate() {
        let path = format!("brackets[{n}]");
        check_name(&format!("{path}.name"), &b.name, &mut names)?;
        let nested = tensor(&format!("{path}.c"), &b.c, [d, d, d])?;
        brackets.push(NamedBracket {
            name: b.name.clone(),
            tensor: BracketTensor::from_nested(d, nested).expect("shape checked"),
        });
    }
    let mut representations = Vec::new();
    let mut rep_names = Vec::new();
    for (n, r) in raw.representations.iter().enumerate() {
        let path = format!("representations[{n}]");
        check_name(&format!("{path}.name"), &r.name, &mut rep_names)?;
        let dv = r.dim_v;
        let alpha_v = matrix(&format!("{path}.alphaV"), &r.alpha_v, dv, dv)?;
        let beta_v = matrix(&format!("{path}.betaV"), &r.beta_v, dv, dv)?;
        if r.actions.is_empty() {
            return Err(CliError::field(
                format!("{path}.actions"),
                "at least one action is required",
            ));
        }
        let mut action_names = Vec::new();
        let mut actions = Vec::new();
        for (k, a) in r.actions.iter().enumerate() {
            let apath = format!("{path}.actions[{k}]");
            check_name(&format!("{apath}.name"), &a.name, &mut action_names)?;
            let nested = tensor(&format!("{apath}.rho"), &a.rho, [d, dv, dv])?;
            actions.push(NamedAction {
                name: a.name.clone(),
                tensor: ActionTensor::from_nested(d, dv, nested).expect("shape checked"),
            });
        }
        representations.push(NamedRepresentation {
            name: r.name.clone(),
            dim_v: dv,
            alpha_v,
            beta_v,
            actions,
        });
    }
    let mut operators = Vec::new();
    let mut op_names = Vec::new();
    for (n, o) in raw.operators.iter().enumerate() {
        let path = format!("operators[{n}]");
        check_name(&format!("{path}.name"), &o.name, &mut op_names)?;
        let lambda = match &o.lambda {
            Some(text) => rational(&format!("{path}.lambda"), text)?,
            None => Rational::from_integer(0.into()),
        };
        operators.push(Operator {
            name: o.name.clone(),
            matrix: matrix(&format!("{path}.matrix"), &o.matrix, d, d)?,
            kind: o.kind,
            s: o.s.unwrap_or(0),
            l: o.l.unwrap_or(0),
            lambda,
        });
    }
    Ok(InputDocument {
        dim: d,
        alpha,
        beta,
        brackets,
        representations,
        operators,
    })
}

fn raw_matrix(m: &RationalMatrix) -> RawMatrix {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

fn raw_tensor(t: &[Vec<Vec<Rational>>]) -> RawTensor {
    t.iter()
        .map(|plane| plane.iter().map(|r| r.iter().map(format_rational).collect()).collect())
        .collect()
}

impl InputDocument {
    /// Pretty-printed JSON that parses back to an equal document.
    pub fn to_json(&self) -> String {
        let raw = RawDocument {
            dim: self.dim,
            alpha: raw_matrix(&self.alpha),
            beta: raw_matrix(&self.beta),
            brackets: self
                .brackets
                .iter()
                .map(|b| RawBracket {
                    name: b.name.clone(),
                    c: raw_tensor(&b.tensor.to_nested()),
                })
                .collect(),
            representations: self
                .representations
                .iter()
                .map(|r| RawRepresentation {
                    name: r.name.clone(),
                    dim_v: r.dim_v,
                    alpha_v: raw_matrix(&r.alpha_v),
                    beta_v: raw_matrix(&r.beta_v),
                    actions: r
                        .actions
                        .iter()
                        .map(|a| RawAction {
                            name: a.name.clone(),
                            rho: raw_tensor(&a.tensor.to_nested()),
                        })
                        .collect(),
                })
                .collect(),
            operators: self
                .operators
                .iter()
                .map(|o| RawOperator {
                    name: o.name.clone(),
                    matrix: raw_matrix(&o.matrix),
                    kind: o.kind,
                    s: Some(o.s),
                    l: Some(o.l),
                    lambda: Some(format_rational(&o.lambda)),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }

    pub fn bracket_index(&self, name: &str) -> Result<usize, CliError> {
        self.brackets
            .iter()
            .position(|b| b.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "bracket",
                name: name.to_string(),
            })
    }

    pub fn representation(&self, name: &str) -> Result<&NamedRepresentation, CliError> {
        self.representations
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "representation",
                name: name.to_string(),
            })
    }

    pub fn operator(&self, name: &str) -> Result<&Operator, CliError> {
        self.operators
            .iter()
            .find(|o| o.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "operator",
                name: name.to_string(),
            })
    }

    /// The algebra carrying the listed brackets, in order.
    pub fn algebra(&self, brackets: &[usize]) -> Result<BiHomAlgebra, CliError> {
        let tensors = brackets.iter().map(|&i| self.brackets[i].tensor.clone()).collect();
        Ok(BiHomAlgebra::new(self.alpha.clone(), self.beta.clone(), tensors)?)
    }
}

impl NamedRepresentation {
    pub fn action_index(&self, name: &str) -> Result<usize, CliError> {
        self.actions
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| CliError::UnknownName {
                kind: "action",
                name: name.to_string(),
            })
    }

    /// The representation carrying the listed actions, in order.
    pub fn build(&self, actions: &[usize]) -> Result<Representation, CliError> {
        let tensors = actions.iter().map(|&i| self.actions[i].tensor.clone()).collect();
        Ok(Representation::new(self.alpha_v.clone(), self.beta_v.clone(), tensors)?)
    }
}
