//! Rendering of command results. Every report ends with a newline.

use std::fmt::Write;

use clap::ValueEnum;
use serde_json::{json, Map, Value};

use hubmatch::bench::BenchReport;
use hubmatch::{
    Binding, Counter, Graphlet, HubCover, Ordering, SearchResult, SearchStats, Selection,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

fn binding_json(b: &Binding) -> Value {
    let map: Map<String, Value> = b
        .iter()
        .map(|(q, d)| (q.to_string(), json!(d.as_str())))
        .collect();
    Value::Object(map)
}

fn binding_text(b: &Binding) -> String {
    b.iter()
        .map(|(q, d)| format!("{q}={d}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn stats_json(s: &SearchStats) -> Value {
    let map: Map<String, Value> = Counter::ALL
        .iter()
        .map(|c| (c.name().to_string(), json!(c.get(s))))
        .collect();
    Value::Object(map)
}

fn ordering_json(o: &Ordering) -> Value {
    json!(o.as_slice().iter().map(|v| v.as_str()).collect::<Vec<_>>())
}

fn cover_json(c: &HubCover) -> Value {
    json!(c.members().iter().map(|v| v.as_str()).collect::<Vec<_>>())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn csv_header() -> String {
    let names: Vec<&str> = Counter::ALL.iter().map(|c| c.name()).collect();
    format!("ordering;{}\n", names.join(";"))
}

fn csv_row(label: &str, s: &SearchStats) -> String {
    let values: Vec<String> = Counter::ALL.iter().map(|c| c.get(s).to_string()).collect();
    format!("{label};{}\n", values.join(";"))
}

pub fn matching(
    result: &SearchResult,
    ordering: &Ordering,
    cover: Option<&HubCover>,
    warnings: &[String],
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let mut top = Map::new();
            top.insert(
                "solutions".into(),
                result.solutions.iter().map(binding_json).collect(),
            );
            top.insert("stats".into(), stats_json(&result.stats));
            top.insert("ordering".into(), ordering_json(ordering));
            top.insert("cover".into(), cover.map_or(Value::Null, cover_json));
            top.insert("warnings".into(), json!(warnings));
            if let Some(trace) = &result.trace {
                top.insert(
                    "trace".into(),
                    trace.states.iter().map(binding_json).collect(),
                );
            }
            pretty(&Value::Object(top))
        }
        Format::Csv => {
            let mut out = csv_header();
            out += &csv_row(&ordering.joined(), &result.stats);
            out
        }
        Format::Table => {
            let mut out = String::new();
            writeln!(out, "ordering  {ordering}").unwrap();
            if let Some(c) = cover {
                writeln!(out, "cover     {c}").unwrap();
            }
            for w in warnings {
                writeln!(out, "warning   {w}").unwrap();
            }
            for c in Counter::ALL {
                writeln!(out, "{:<17} {}", c.name(), c.get(&result.stats)).unwrap();
            }
            for s in &result.solutions {
                writeln!(out, "{}", binding_text(s)).unwrap();
            }
            if let Some(trace) = &result.trace {
                writeln!(out, "trace ({} states)", trace.states.len()).unwrap();
                for s in &trace.states {
                    writeln!(out, "  {{{}}}", binding_text(s)).unwrap();
                }
            }
            out
        }
    }
}

pub fn covers(all: &[HubCover], format: Format) -> String {
    let size = all.first().map_or(0, HubCover::len);
    match format {
        Format::Json => pretty(&json!({
            "size": size,
            "covers": all.iter().map(cover_json).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut out = String::from("cover;size\n");
            for c in all {
                writeln!(out, "{c};{}", c.len()).unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = format!("{} minimum hub covers of size {size}\n", all.len());
            for c in all {
                writeln!(out, "{c}").unwrap();
            }
            out
        }
    }
}

pub fn order(graphlets: &[Graphlet], sel: &Selection, notes: &[String], format: Format) -> String {
    match format {
        Format::Json => {
            let metrics: Vec<Value> = graphlets
                .iter()
                .map(|g| {
                    let m = g.metrics();
                    json!({
                        "vertex": g.hub().as_str(),
                        "boundaries": m.boundary_count,
                        "freeNeighbors": m.free_neighbor_count,
                    })
                })
                .collect();
            pretty(&json!({
                "metrics": metrics,
                "cover": cover_json(&sel.cover),
                "ordering": ordering_json(&sel.ordering),
                "warnings": sel.warnings,
                "notes": notes,
            }))
        }
        Format::Csv => {
            let mut out = String::from("vertex;boundaries;freeNeighbors\n");
            for g in graphlets {
                let m = g.metrics();
                writeln!(
                    out,
                    "{};{};{}",
                    g.hub(),
                    m.boundary_count,
                    m.free_neighbor_count
                )
                .unwrap();
            }
            out
        }
        Format::Table => {
            let mut out = String::from("vertex  boundaries  free\n");
            for g in graphlets {
                let m = g.metrics();
                writeln!(
                    out,
                    "{:<7} {:<11} {}",
                    g.hub().as_str(),
                    m.boundary_count,
                    m.free_neighbor_count
                )
                .unwrap();
            }
            writeln!(out, "cover     {}", sel.cover).unwrap();
            writeln!(out, "ordering  {}", sel.ordering).unwrap();
            for w in &sel.warnings {
                writeln!(out, "warning   {w}").unwrap();
            }
            for n in notes {
                writeln!(out, "note      {n}").unwrap();
            }
            out
        }
    }
}

pub fn bench(report: &BenchReport, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "ordering": ordering_json(&r.ordering),
                        "stats": stats_json(&r.stats),
                        "solutions": r.solutions,
                    })
                })
                .collect();
            pretty(&json!({
                "rows": rows,
                "consistent": report.consistent(),
            }))
        }
        Format::Csv => {
            let mut out = csv_header();
            for r in &report.rows {
                out += &csv_row(&r.ordering.joined(), &r.stats);
            }
            out
        }
        Format::Table => {
            let width = report
                .rows
                .iter()
                .map(|r| r.ordering.to_string().len())
                .max()
                .unwrap_or(8)
                .max(8);
            let mut out = format!("{:<width$}", "ordering");
            for c in Counter::ALL {
                write!(out, " {:>16}", c.name()).unwrap();
            }
            out.push('\n');
            for r in &report.rows {
                write!(out, "{:<width$}", r.ordering.to_string()).unwrap();
                for c in Counter::ALL {
                    write!(out, " {:>16}", c.get(&r.stats)).unwrap();
                }
                out.push('\n');
            }
            out
        }
    }
}

pub fn verify(
    ordering: &Ordering,
    found: usize,
    expected: usize,
    equal: bool,
    format: Format,
) -> String {
    let verdict = if equal { "equal" } else { "different" };
    match format {
        Format::Json => pretty(&json!({
            "ordering": ordering_json(ordering),
            "matcher": found,
            "oracle": expected,
            "equal": equal,
        })),
        Format::Csv => format!(
            "ordering;matcher;oracle;equal\n{};{found};{expected};{equal}\n",
            ordering.joined()
        ),
        Format::Table => {
            let relation = if equal { "=" } else { "vs" };
            format!("ordering  {ordering}\nmatcher   {found}\noracle    {expected}\n{verdict}, {found} {relation} {expected}\n")
        }
    }
}
