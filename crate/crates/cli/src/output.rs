//! Text and JSON renderings of cut sets and Gomory-Hu trees.

use std::fmt::Write as _;

use cutspace::{Cut, GomoryHuTree, Graph, RelevantCutSet, Weight};
use serde::Serialize;

use crate::format::format_weight;

/// `a/b` even for integers, so JSON consumers see one shape.
pub fn fraction(w: &Weight) -> String {
    format!("{}/{}", w.numer(), w.denom())
}

pub fn cut_line(c: &Cut) -> String {
    let side: Vec<String> = c.side().iter().map(|v| v.to_string()).collect();
    format!("weight {} side {}", format_weight(&c.weight()), side.join(" "))
}

/// One line per cut. Unsorted output follows the set's internal order.
pub fn cuts_text(set: &RelevantCutSet, sort: bool) -> String {
    let cuts: Vec<Cut> = if sort { set.sorted() } else { set.iter().cloned().collect() };
    let mut out = String::new();
    for c in &cuts {
        out.push_str(&cut_line(c));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonCut {
    weight: String,
    side: Vec<usize>,
}

#[derive(Serialize)]
struct JsonStats {
    flow_calls: u64,
    dags_built: u64,
    contractions: u64,
    cuts_emitted: u64,
    elapsed_s: f64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    m: usize,
    method: &'a str,
    cuts: Vec<JsonCut>,
    stats: JsonStats,
}

pub fn cuts_json(g: &Graph, set: &RelevantCutSet, sort: bool) -> String {
    let cuts: Vec<Cut> = if sort { set.sorted() } else { set.iter().cloned().collect() };
    let s = &set.stats;
    let report = JsonReport {
        n: g.n(),
        m: g.m(),
        method: set.method().name(),
        cuts: cuts
            .iter()
            .map(|c| JsonCut {
                weight: fraction(&c.weight()),
                side: c.side_vertices(),
            })
            .collect(),
        stats: JsonStats {
            flow_calls: s.flow_calls,
            dags_built: s.dags_built,
            contractions: s.contractions,
            cuts_emitted: s.cuts_emitted,
            elapsed_s: s.elapsed.as_secs_f64(),
        },
    };
    let mut text = serde_json::to_string_pretty(&report).expect("plain data serializes");
    text.push('\n');
    text
}

/// `child parent lambda` per tree edge, optionally followed by
/// `side <canonical side of the edge cut>`.
pub fn tree_text(t: &GomoryHuTree, with_cuts: bool) -> String {
    let mut out = String::new();
    for e in t.edges() {
        let _ = write!(out, "{} {} {}", e.child, e.parent, format_weight(&e.lambda));
        if with_cuts {
            let side: Vec<String> = e.cut.side().iter().map(|v| v.to_string()).collect();
            let _ = write!(out, " side {}", side.join(" "));
        }
        out.push('\n');
    }
    out
}
