//! The XML graphlet document:
//!
//! ```xml
//! <graph>
//!  <graphlet vertex="a">
//!   <neighbor>b</neighbor>
//!   <boundary>
//!    <vertex>b</vertex>
//!    <vertex>j</vertex>
//!   </boundary>
//!  </graphlet>
//! </graph>
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use roxmltree::{Document, Node};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::graphlet::{to_graphlets, Graphlet};

fn invalid(msg: impl Into<String>) -> Error {
    Error::Xml(msg.into())
}

fn label_of(node: Node<'_, '_>) -> Result<VertexId> {
    let text = node.text().unwrap_or("").trim();
    VertexId::new(text).map_err(|e| invalid(e.to_string()))
}

fn elements<'a, 'input>(node: Node<'a, 'input>) -> impl Iterator<Item = Node<'a, 'input>> {
    node.children().filter(|n| n.is_element())
}

fn parse_graphlet(node: Node<'_, '_>) -> Result<Graphlet> {
    let hub = node
        .attribute("vertex")
        .ok_or_else(|| invalid("graphlet element without a vertex attribute"))?;
    let hub = VertexId::new(hub.trim()).map_err(|e| invalid(e.to_string()))?;
    let mut neighbors = BTreeSet::new();
    let mut boundaries = BTreeSet::new();
    for child in elements(node) {
        match child.tag_name().name() {
            "neighbor" => {
                neighbors.insert(label_of(child)?);
            }
            "boundary" => {
                let ends: Vec<Node> = elements(child).collect();
                if ends.len() != 2 || ends.iter().any(|e| e.tag_name().name() != "vertex") {
                    return Err(invalid(format!(
                        "boundary in graphlet {hub} must hold exactly two vertex elements"
                    )));
                }
                let (u, w) = (label_of(ends[0])?, label_of(ends[1])?);
                let edge = Edge::new(u, w).ok_or_else(|| {
                    invalid(format!(
                        "boundary in graphlet {hub} joins a vertex to itself"
                    ))
                })?;
                boundaries.insert(edge);
            }
            other => {
                return Err(invalid(format!(
                    "unexpected element <{other}> in graphlet {hub}"
                )))
            }
        }
    }
    Graphlet::new(hub, neighbors, boundaries).map_err(|e| invalid(e.to_string()))
}

/// Parses a graphlet document and checks it describes one consistent graph:
/// adjacency is symmetric across graphlets and every graphlet lists exactly
/// the boundaries its neighborhood induces.
pub fn parse_graphlet_xml(text: &str) -> Result<Graph> {
    let doc = Document::parse(text).map_err(|e| invalid(e.to_string()))?;
    let root = doc.root_element();
    if root.tag_name().name() != "graph" {
        return Err(invalid(format!(
            "root element is <{}>, expected <graph>",
            root.tag_name().name()
        )));
    }
    let mut declared: BTreeMap<VertexId, Graphlet> = BTreeMap::new();
    for node in elements(root) {
        if node.tag_name().name() != "graphlet" {
            return Err(invalid(format!(
                "unexpected element <{}> in graph",
                node.tag_name().name()
            )));
        }
        let gl = parse_graphlet(node)?;
        let hub = gl.hub().clone();
        if declared.insert(hub.clone(), gl).is_some() {
            return Err(invalid(format!("graphlet {hub} is declared twice")));
        }
    }

    for gl in declared.values() {
        for n in gl.neighbors() {
            let back = declared
                .get(n)
                .is_some_and(|other| other.has_neighbor(gl.hub()));
            if !back {
                return Err(invalid(format!(
                    "graphlet {} lists neighbor {n}, but graphlet {n} does not list {}",
                    gl.hub(),
                    gl.hub()
                )));
            }
        }
    }

    let graph = crate::graphlet::reassemble(declared.values());
    for (expected, gl) in to_graphlets(&graph).iter().zip(declared.values()) {
        if expected.boundaries() != gl.boundaries() {
            return Err(invalid(format!(
                "graphlet {} lists boundaries {:?}, but its neighborhood induces {:?}",
                gl.hub(),
                gl.boundaries(),
                expected.boundaries()
            )));
        }
    }
    Ok(graph)
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Writes the graphlet document with one-space indentation per level.
pub fn to_graphlet_xml(g: &Graph) -> String {
    let mut out = String::from("<graph>\n");
    for gl in to_graphlets(g) {
        writeln!(out, " <graphlet vertex=\"{}\">", escape(gl.hub().as_str())).unwrap();
        for n in gl.neighbors() {
            writeln!(out, "  <neighbor>{}</neighbor>", escape(n.as_str())).unwrap();
        }
        for b in gl.boundaries() {
            out.push_str("  <boundary>\n");
            writeln!(out, "   <vertex>{}</vertex>", escape(b.first().as_str())).unwrap();
            writeln!(out, "   <vertex>{}</vertex>", escape(b.second().as_str())).unwrap();
            out.push_str("  </boundary>\n");
        }
        out.push_str(" </graphlet>\n");
    }
    out.push_str("</graph>\n");
    out
}
