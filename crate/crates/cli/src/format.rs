//! Graph file format.
//!
//! ```text
//! # comment
//! p <n> <m>
//! <u> <v> <w>      (m lines, 0-based ids; w is an integer, a/b or a decimal)
//! ```

use std::fmt::Write as _;

use cutspace::{Graph, Weight};

use crate::error::CliError;

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| CliError::Parse { line: line_no, msg };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if tokens.len() != 3 || tokens[0] != "p" {
                    return Err(err(format!("expected header \"p <n> <m>\", found {line:?}")));
                }
                let n = parse_count(tokens[1]).map_err(&err)?;
                let m = parse_count(tokens[2]).map_err(&err)?;
                header = Some((n, m));
            }
            Some((n, m)) => {
                if tokens.len() != 3 {
                    return Err(err(format!("expected \"<u> <v> <w>\", found {line:?}")));
                }
                if edges.len() == m {
                    return Err(err(format!("more than the declared {m} edges")));
                }
                let u = parse_count(tokens[0]).map_err(&err)?;
                let v = parse_count(tokens[1]).map_err(&err)?;
                for x in [u, v] {
                    if x >= n {
                        return Err(err(format!("vertex {x} out of range 0..{n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                let w = parse_weight(tokens[2]).map_err(&err)?;
                if w <= Weight::from_integer(0) {
                    return Err(err(format!("weight {} is not positive", tokens[2])));
                }
                edges.push((u, v, w));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(CliError::Parse {
            line: last_line.max(1),
            msg: "missing header \"p <n> <m>\"".into(),
        });
    };
    if edges.len() != m {
        return Err(CliError::Parse {
            line: last_line.max(1),
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges).map_err(CliError::from)
}

fn parse_count(tok: &str) -> Result<usize, String> {
    tok.parse().map_err(|_| format!("invalid integer {tok:?}"))
}

/// Integer, exact fraction `a/b`, or decimal (converted exactly).
pub fn parse_weight(tok: &str) -> Result<Weight, String> {
    let bad = || format!("invalid weight {tok:?}");
    if let Some((a, b)) = tok.split_once('/') {
        let a: i64 = a.parse().map_err(|_| bad())?;
        let b: i64 = b.parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Weight::new(a, b));
    }
    if let Some((int, frac)) = tok.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let sign = if int.starts_with('-') { -1 } else { 1 };
        let int: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let den = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        let num = int
            .checked_mul(den)
            .and_then(|x| x.checked_add(sign * frac))
            .ok_or_else(bad)?;
        return Ok(Weight::new(num, den));
    }
    tok.parse::<i64>().map(Weight::from_integer).map_err(|_| bad())
}

/// Exact text form: `a` for integers, `a/b` otherwise.
pub fn format_weight(w: &Weight) -> String {
    w.to_string()
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, format_weight(&e.weight));
    }
    out
}
