//! Text format for signed graphs.
//!
//! ```text
//! # optional comments
//! sg <n>
//! e <u> <v> <+|->
//! ```
//!
//! Vertex ids are 0-based. Signs parse as `+`/`-` or `1`/`-1` and always
//! print as `+`/`-`. Parse failures carry a 1-based line number.

use crate::graph::{Sign, SignedGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

pub fn parse(text: &str) -> Result<SignedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("sg") => {
                if n.is_some() {
                    return Err(err(lineno, "repeated header"));
                }
                let order = fields
                    .next()
                    .ok_or_else(|| err(lineno, "header needs a vertex count"))?;
                let order: usize = order
                    .parse()
                    .map_err(|_| err(lineno, format!("invalid vertex count '{order}'")))?;
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing tokens after header"));
                }
                n = Some(order);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(lineno, "edge before 'sg <n>' header"))?;
                let mut next_field = |what: &str| {
                    fields
                        .next()
                        .ok_or_else(|| err(lineno, format!("edge line is missing {what}")))
                };
                let u_tok = next_field("the first endpoint")?;
                let v_tok = next_field("the second endpoint")?;
                let s_tok = next_field("a sign")?;
                let u: usize = u_tok
                    .parse()
                    .map_err(|_| err(lineno, format!("invalid vertex '{u_tok}'")))?;
                let v: usize = v_tok
                    .parse()
                    .map_err(|_| err(lineno, format!("invalid vertex '{v_tok}'")))?;
                let sign = match s_tok {
                    "+" | "1" => Sign::Plus,
                    "-" | "-1" => Sign::Minus,
                    other => return Err(err(lineno, format!("invalid sign '{other}'"))),
                };
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing tokens after edge"));
                }
                if u == v {
                    return Err(err(lineno, format!("loop edge at vertex {u}")));
                }
                if u >= n || v >= n {
                    return Err(err(
                        lineno,
                        format!("vertex out of range for order {n}"),
                    ));
                }
                let key = (u.min(v), u.max(v));
                if edges.iter().any(|&(a, b, _)| (a, b) == key) {
                    return Err(err(lineno, format!("duplicate edge ({}, {})", key.0, key.1)));
                }
                edges.push((key.0, key.1, sign));
                edge_lines.push(lineno);
            }
            Some(other) => return Err(err(lineno, format!("unknown directive '{other}'"))),
            None => unreachable!("blank lines are skipped"),
        }
    }
    let n = n.ok_or_else(|| err(text.lines().count().max(1), "missing 'sg <n>' header"))?;
    SignedGraph::new(n, edges).map_err(|e| err(1, e.to_string()))
}

pub fn emit(g: &SignedGraph) -> String {
    let mut out = format!("sg {}\n", g.order());
    for &(u, v, s) in g.edges() {
        out.push_str(&format!("e {u} {v} {s}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = SignedGraph::new(
            4,
            [
                (0, 1, Sign::Plus),
                (1, 2, Sign::Minus),
                (2, 3, Sign::Plus),
                (0, 3, Sign::Minus),
            ],
        )
        .unwrap();
        let text = emit(&g);
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn accepts_comments_numeric_signs_and_blank_lines() {
        let text = "# a triangle\nsg 3\n\ne 0 1 1\ne 1 2 -1\ne 0 2 +\n";
        let g = parse(text).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_sign(1, 2), Some(Sign::Minus));
        // Output always uses +/-.
        assert!(emit(&g).contains("e 1 2 -"));
        assert!(!emit(&g).contains("-1"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("sg 3\ne 0 0 +\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("loop"));

        let e = parse("sg 3\ne 0 1 +\ne 1 0 -\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("duplicate"));

        let e = parse("sg 2\ne 0 5 +\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("out of range"));

        let e = parse("e 0 1 +\n").unwrap_err();
        assert_eq!(e.line, 1);

        let e = parse("sg 3\ne 0 1 ?\n").unwrap_err();
        assert!(e.message.contains("invalid sign"));

        let e = parse("# nothing\n").unwrap_err();
        assert!(e.message.contains("missing"));
    }
}
