//! Graph documents: canonical JSON, ASCII drawings and DOT output.

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, SeaweedA, SeaweedC, Series};
use crate::error::{Error, Result};
use crate::meander::{analyze, build_graph_a, build_graph_c, Arc, ComponentKind, ComponentReport, MeanderGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Descriptor {
    A(SeaweedA),
    C(SeaweedC),
}

impl Descriptor {
    /// `"A"`, `"C"` or `"B"`.
    pub fn series_label(&self) -> &'static str {
        match self {
            Descriptor::A(_) => "A",
            Descriptor::C(q) => q.series().letter(),
        }
    }
}

impl std::fmt::Display for Descriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Descriptor::A(q) => q.fmt(f),
            Descriptor::C(q) => q.fmt(f),
        }
    }
}

/// A seaweed with its meander graph, component report and index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub descriptor: Descriptor,
    pub graph: MeanderGraph,
    pub report: ComponentReport,
    /// `gl` index for type A, the symmetric formula for types B and C.
    pub index: usize,
}

impl GraphDocument {
    pub fn for_a(q: &SeaweedA) -> Self {
        let graph = build_graph_a(q);
        let report = analyze(&graph);
        let index = report.gl_index();
        Self {
            descriptor: Descriptor::A(q.clone()),
            graph,
            report,
            index,
        }
    }

    pub fn for_c(q: &SeaweedC) -> Self {
        let graph = build_graph_c(q);
        let report = analyze(&graph);
        let index = report
            .symmetric_index()
            .expect("segments that are not σ-stable come in mirror pairs");
        Self {
            descriptor: Descriptor::C(q.clone()),
            graph,
            report,
            index,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ComponentJson {
    kind: ComponentKind,
    vertices: Vec<usize>,
    sigma_stable: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentJson {
    #[serde(rename = "type")]
    series: String,
    n: usize,
    top: Composition,
    bottom: Composition,
    vertices: usize,
    top_arcs: Vec<[usize; 2]>,
    bottom_arcs: Vec<[usize; 2]>,
    components: Vec<ComponentJson>,
    index: usize,
}

fn arcs_json(arcs: &[Arc]) -> Vec<[usize; 2]> {
    arcs.iter().map(|&(i, j)| [i, j]).collect()
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Canonical JSON: fixed key order, one key per line, one component per line.
pub fn to_json(doc: &GraphDocument) -> String {
    let (n, top, bottom) = match &doc.descriptor {
        Descriptor::A(q) => (q.size(), q.top(), q.bottom()),
        Descriptor::C(q) => (q.rank(), q.top(), q.bottom()),
    };
    let components: Vec<String> = doc
        .report
        .components
        .iter()
        .map(|c| {
            compact(&ComponentJson {
                kind: c.kind,
                vertices: c.vertices.clone(),
                sigma_stable: c.sigma_stable,
            })
        })
        .collect();
    let components = if components.is_empty() {
        "[]".to_string()
    } else {
        format!("[\n    {}\n  ]", components.join(",\n    "))
    };
    let fields = [
        ("type", compact(&doc.descriptor.series_label())),
        ("n", n.to_string()),
        ("top", compact(top)),
        ("bottom", compact(bottom)),
        ("vertices", doc.graph.vertex_count().to_string()),
        ("top_arcs", compact(&arcs_json(doc.graph.top_arcs()))),
        ("bottom_arcs", compact(&arcs_json(doc.graph.bottom_arcs()))),
        ("components", components),
        ("index", doc.index.to_string()),
    ];
    let body: Vec<String> = fields
        .iter()
        .map(|(key, value)| format!("  \"{key}\": {value}"))
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

fn document_error(message: impl Into<String>) -> Error {
    Error::Document(message.into())
}

/// Parses and re-validates a document: the graph must match the descriptor,
/// and the components and index must match the graph.
pub fn from_json(text: &str) -> Result<GraphDocument> {
    let raw: DocumentJson = serde_json::from_str(text).map_err(|e| document_error(e.to_string()))?;
    let descriptor = match raw.series.as_str() {
        "A" => {
            let q = SeaweedA::new(raw.top, raw.bottom)?;
            if q.size() != raw.n {
                return Err(document_error(format!(
                    "n = {} but the compositions have total {}",
                    raw.n,
                    q.size()
                )));
            }
            Descriptor::A(q)
        }
        "C" => Descriptor::C(SeaweedC::new(raw.n, raw.top, raw.bottom, Series::Sp)?),
        "B" => Descriptor::C(SeaweedC::new(raw.n, raw.top, raw.bottom, Series::SoOdd)?),
        other => return Err(document_error(format!("unknown type {other:?}"))),
    };
    let pairs = |arcs: Vec<[usize; 2]>| arcs.into_iter().map(|[i, j]| (i, j)).collect();
    let symmetric = matches!(descriptor, Descriptor::C(_));
    let graph = MeanderGraph::new(raw.vertices, pairs(raw.top_arcs), pairs(raw.bottom_arcs), symmetric)?;

    let expected = match &descriptor {
        Descriptor::A(q) => GraphDocument::for_a(q),
        Descriptor::C(q) => GraphDocument::for_c(q),
    };
    if graph != expected.graph {
        return Err(document_error("graph does not match the descriptor"));
    }
    let report = analyze(&graph);
    let listed: Vec<(ComponentKind, &[usize], bool)> = raw
        .components
        .iter()
        .map(|c| (c.kind, c.vertices.as_slice(), c.sigma_stable))
        .collect();
    let actual: Vec<(ComponentKind, &[usize], bool)> = report
        .components
        .iter()
        .map(|c| (c.kind, c.vertices.as_slice(), c.sigma_stable))
        .collect();
    if listed != actual {
        return Err(document_error("components do not match the graph"));
    }
    let index = match descriptor {
        Descriptor::A(_) => report.gl_index(),
        Descriptor::C(_) => report
            .symmetric_index()
            .ok_or_else(|| document_error("odd number of segments that are not σ-stable"))?,
    };
    if index != raw.index {
        return Err(document_error(format!(
            "index {} does not match the graph (recomputed {index})",
            raw.index
        )));
    }
    Ok(GraphDocument {
        descriptor,
        graph,
        report,
        index,
    })
}

/// Limits for [`to_ascii`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsciiOptions {
    pub max_columns: usize,
    pub max_rows: usize,
}

impl Default for AsciiOptions {
    fn default() -> Self {
        Self {
            max_columns: 160,
            max_rows: 48,
        }
    }
}

/// Nesting height of every arc on one side: 1 for arcs enclosing no other arc.
fn arc_heights(arcs: &[Arc]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&x| arcs[x].1 - arcs[x].0);
    let mut heights = vec![0; arcs.len()];
    for &x in &order {
        let (i, j) = arcs[x];
        let inner = arcs
            .iter()
            .zip(&heights)
            .filter(|&(&(k, l), _)| i < k && l < j)
            .map(|(_, &h)| h)
            .max()
            .unwrap_or(0);
        heights[x] = inner + 1;
    }
    heights
}

fn side_rows(arcs: &[Arc], width: usize, corners: (char, char)) -> Vec<Vec<char>> {
    let heights = arc_heights(arcs);
    let depth = heights.iter().copied().max().unwrap_or(0);
    // rows[0] is adjacent to the vertex line
    let mut rows = vec![vec![' '; width]; depth];
    for (&(i, j), &h) in arcs.iter().zip(&heights) {
        let (left, right) = (2 * (i - 1), 2 * (j - 1));
        for row in rows.iter_mut().take(h - 1) {
            row[left] = '│';
            row[right] = '│';
        }
        let row = &mut rows[h - 1];
        row[left] = corners.0;
        row[left + 1..right].iter_mut().for_each(|c| *c = '─');
        row[right] = corners.1;
    }
    rows
}

/// Monospace drawing: top arcs above a row of `*`, bottom arcs below, and for
/// symmetric graphs a `|` column for the mirror.
pub fn to_ascii(doc: &GraphDocument) -> Result<String> {
    to_ascii_with(doc, AsciiOptions::default())
}

pub fn to_ascii_with(doc: &GraphDocument, options: AsciiOptions) -> Result<String> {
    let g = &doc.graph;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(String::new());
    }
    let width = 2 * n - 1;
    if width > options.max_columns {
        return Err(Error::DrawingTooLarge {
            what: "columns",
            needed: width,
            limit: options.max_columns,
        });
    }
    let top = side_rows(g.top_arcs(), width, ('┌', '┐'));
    let bottom = side_rows(g.bottom_arcs(), width, ('└', '┘'));
    let rows_needed = top.len() + bottom.len() + 1;
    if rows_needed > options.max_rows {
        return Err(Error::DrawingTooLarge {
            what: "rows",
            needed: rows_needed,
            limit: options.max_rows,
        });
    }
    let mut vertex_row = vec![' '; width];
    for v in 0..n {
        vertex_row[2 * v] = '*';
    }
    let mut lines: Vec<Vec<char>> = top.into_iter().rev().collect();
    lines.push(vertex_row);
    lines.extend(bottom);
    if g.is_symmetric() && n >= 2 {
        let mirror = n - 1;
        for line in &mut lines {
            line[mirror] = match line[mirror] {
                '─' => '┼',
                _ => '|',
            };
        }
    }
    let mut out = String::new();
    for line in lines {
        let text: String = line.into_iter().collect();
        out.push_str(text.trim_end());
        out.push('\n');
    }
    Ok(out)
}

pub const DOT_HIGHLIGHT: &str = "red";
pub const DOT_SECONDARY: &str = "blue";
pub const DOT_DEFAULT: &str = "black";

/// DOT graph with vertices pinned on one horizontal rank. Top arcs leave
/// through the north ports, bottom arcs through the south ports.
pub fn to_dot(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let n = g.vertex_count();
    let mut component_of = vec![0; n + 1];
    for (id, comp) in doc.report.components.iter().enumerate() {
        for &v in &comp.vertices {
            component_of[v] = id;
        }
    }
    let color = |v: usize| {
        let comp = &doc.report.components[component_of[v]];
        match comp.kind {
            ComponentKind::Cycle => DOT_SECONDARY,
            ComponentKind::Segment if g.is_symmetric() && !comp.sigma_stable => DOT_HIGHLIGHT,
            ComponentKind::Segment => DOT_DEFAULT,
        }
    };

    let mut out = String::new();
    out.push_str(&format!("// meander graph of {}, index {}\n", doc.descriptor, doc.index));
    out.push_str(&format!(
        "// edge colors: {DOT_HIGHLIGHT} = segment not σ-stable, {DOT_SECONDARY} = cycle, {DOT_DEFAULT} = σ-stable segment\n"
    ));
    out.push_str("graph meander {\n");
    out.push_str("  layout=neato;\n  splines=curved;\n");
    out.push_str("  node [shape=circle, width=0.25, fixedsize=true, fontsize=9];\n");
    for v in 1..=n {
        out.push_str(&format!("  v{v} [label=\"{v}\", pos=\"{},0!\"];\n", v - 1));
    }
    if n > 0 {
        let all: Vec<String> = (1..=n).map(|v| format!("v{v}")).collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", all.join("; ")));
    }
    for (arcs, port) in [(g.top_arcs(), "n"), (g.bottom_arcs(), "s")] {
        for &(i, j) in arcs {
            let c = color(i);
            let width = if c == DOT_HIGHLIGHT { ", penwidth=2" } else { "" };
            out.push_str(&format!("  v{i}:{port} -- v{j}:{port} [color={c}{width}];\n"));
        }
    }
    out.push_str("}\n");
    out
}
