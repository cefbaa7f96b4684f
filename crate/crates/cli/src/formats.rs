//! The two text formats the CLI speaks.
//!
//! Ideal files: a `vars` header followed by one generator per line,
//! factors joined by `*` and exponents introduced by `^`:
//!
//! ```text
//! vars x y z
//! x^2*y
//! y*z
//! ```
//!
//! Graph files: a `vertices` line followed by one or more `edges` lines
//! with `-`-joined endpoint pairs:
//!
//! ```text
//! vertices a b c
//! edges a-b b-c
//! ```

use std::collections::BTreeMap;
use std::fmt;

use sympow_core::graphs::Graph;
use sympow_core::monomial::{ExponentVector, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Tokens of a line with their 1-based column positions.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// A parsed ideal file: variable names plus the canonical ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub names: Vec<String>,
    pub ideal: MonomialIdeal,
}

pub fn parse_ideal(text: &str) -> Result<IdealFile, ParseError> {
    let mut lines = text.lines().enumerate();
    let (header_no, header) =
        lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty())
            .ok_or(ParseError {
                line: 1,
                column: 1,
                message: "empty file, expected a `vars` header".into(),
            })?;
    let header_tokens = tokens(header);
    match header_tokens.first() {
        Some(&(_, "vars")) => {}
        Some(&(col, other)) => {
            return err(
                header_no + 1,
                col,
                format!("expected `vars`, found `{other}`"),
            )
        }
        None => unreachable!("header line is nonempty"),
    }
    let mut names = Vec::new();
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for &(col, name) in &header_tokens[1..] {
        if !valid_name(name) {
            return err(
                header_no + 1,
                col,
                format!("invalid variable name `{name}`"),
            );
        }
        if index.insert(name.to_string(), names.len()).is_some() {
            return err(header_no + 1, col, format!("duplicate variable `{name}`"));
        }
        names.push(name.to_string());
    }
    if names.is_empty() {
        return err(header_no + 1, 5, "no variables declared");
    }

    let mut gens = Vec::new();
    for (line_no, line) in lines {
        if line.trim().is_empty() {
            continue;
        }
        let toks = tokens(line);
        let &(col, monomial) = toks.first().expect("nonempty line");
        if toks.len() > 1 {
            return err(
                line_no + 1,
                toks[1].0,
                "unexpected token, one generator per line",
            );
        }
        gens.push(parse_monomial(
            monomial,
            line_no + 1,
            col,
            &index,
            names.len(),
        )?);
    }
    if gens.is_empty() {
        return err(
            header_no + 2,
            1,
            "no generators, the zero ideal is unsupported",
        );
    }
    let ideal = MonomialIdeal::new(names.len(), gens).map_err(|e| ParseError {
        line: header_no + 2,
        column: 1,
        message: e.to_string(),
    })?;
    Ok(IdealFile { names, ideal })
}

fn parse_monomial(
    text: &str,
    line: usize,
    start_col: usize,
    index: &BTreeMap<String, usize>,
    num_vars: usize,
) -> Result<ExponentVector, ParseError> {
    let mut exponents = vec![0u32; num_vars];
    let mut offset = 0usize;
    for factor in text.split('*') {
        let col = start_col + offset;
        offset += factor.len() + 1;
        if factor.is_empty() {
            return err(line, col, "empty factor");
        }
        let (name, exp) = match factor.split_once('^') {
            None => (factor, 1u32),
            Some((name, exp_text)) => {
                let exp: u32 = exp_text.parse().map_err(|_| ParseError {
                    line,
                    column: col + name.len() + 1,
                    message: format!("invalid exponent `{exp_text}`"),
                })?;
                if exp == 0 {
                    return err(
                        line,
                        col + name.len() + 1,
                        "exponents must be positive integers",
                    );
                }
                (name, exp)
            }
        };
        let Some(&var) = index.get(name) else {
            return err(line, col, format!("undeclared variable `{name}`"));
        };
        exponents[var] = exponents[var].checked_add(exp).ok_or_else(|| ParseError {
            line,
            column: col,
            message: "exponent overflow".into(),
        })?;
    }
    Ok(ExponentVector::new(exponents))
}

pub fn emit_ideal(names: &[String], ideal: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", names.join(" "));
    for g in ideal.gens() {
        out.push_str(&g.render(names));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut vertices: Option<Vec<String>> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seen_edges: BTreeMap<(String, String), (usize, usize)> = BTreeMap::new();
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let toks = tokens(line);
        let &(key_col, keyword) = toks.first().expect("nonempty line");
        match keyword {
            "vertices" => {
                if vertices.is_some() {
                    return err(line_no + 1, key_col, "duplicate `vertices` line");
                }
                let mut labels = Vec::new();
                for &(col, label) in &toks[1..] {
                    if !valid_name(label) {
                        return err(line_no + 1, col, format!("invalid vertex label `{label}`"));
                    }
                    labels.push(label.to_string());
                }
                if labels.is_empty() {
                    return err(line_no + 1, key_col, "no vertices declared");
                }
                vertices = Some(labels);
            }
            "edges" => {
                if vertices.is_none() {
                    return err(line_no + 1, key_col, "`edges` before `vertices`");
                }
                for &(col, token) in &toks[1..] {
                    let Some((a, b)) = token.split_once('-') else {
                        return err(
                            line_no + 1,
                            col,
                            format!("expected `u-v` edge, found `{token}`"),
                        );
                    };
                    if a == b {
                        return err(line_no + 1, col, format!("loop at `{a}`"));
                    }
                    let key = if a < b {
                        (a.to_string(), b.to_string())
                    } else {
                        (b.to_string(), a.to_string())
                    };
                    if seen_edges.insert(key, (line_no + 1, col)).is_some() {
                        return err(line_no + 1, col, format!("duplicate edge `{token}`"));
                    }
                    edges.push((a.to_string(), b.to_string()));
                }
            }
            other => {
                return err(
                    line_no + 1,
                    key_col,
                    format!("expected `vertices` or `edges`, found `{other}`"),
                );
            }
        }
    }
    let Some(labels) = vertices else {
        return err(1, 1, "missing `vertices` line");
    };
    Graph::new(labels, &edges).map_err(|e| ParseError {
        line: 1,
        column: 1,
        message: e.to_string(),
    })
}

pub fn emit_graph(graph: &Graph) -> String {
    let mut out = format!("vertices {}\n", graph.labels().join(" "));
    let edges: Vec<String> = graph
        .edges()
        .map(|(i, j)| format!("{}-{}", graph.labels()[i], graph.labels()[j]))
        .collect();
    if !edges.is_empty() {
        out.push_str(&format!("edges {}\n", edges.join(" ")));
    }
    out
}
