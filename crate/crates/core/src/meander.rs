//! Meander graphs and their decomposition into cycles and segments.
//!
//! Vertices are numbered `1..=N` along a horizontal line. Every part `p` of the
//! top composition, starting after offset `o`, contributes the nested arcs
//! `(o+i, o+p+1-i)` for `i = 1..=p/2` above the line; the bottom composition
//! does the same below. Each vertex carries at most one arc per side, so every
//! component is a cycle or a path ("segment"), isolated vertices included.

use serde::{Deserialize, Serialize};

use crate::composition::{Composition, SeaweedA, SeaweedC};
use crate::error::{Error, Result};

pub type Arc = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanderGraph {
    vertex_count: usize,
    top_arcs: Vec<Arc>,
    bottom_arcs: Vec<Arc>,
    symmetric: bool,
}

/// Nested arcs generated by the parts of `parts`, sorted by left endpoint.
pub fn composition_arcs(parts: &[usize]) -> Vec<Arc> {
    let mut arcs = Vec::with_capacity(parts.iter().map(|p| p / 2).sum());
    let mut offset = 0;
    for &p in parts {
        for i in 1..=p / 2 {
            arcs.push((offset + i, offset + p + 1 - i));
        }
        offset += p;
    }
    arcs
}

fn check_side(vertex_count: usize, arcs: &[Arc], side: &str) -> Result<()> {
    let mut used = vec![false; vertex_count + 1];
    for &(i, j) in arcs {
        if !(1 <= i && i < j && j <= vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "{side} arc ({i},{j}) is not a pair 1 ≤ i < j ≤ {vertex_count}"
            )));
        }
        for v in [i, j] {
            if std::mem::replace(&mut used[v], true) {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} carries two {side} arcs"
                )));
            }
        }
    }
    for (x, &(i, j)) in arcs.iter().enumerate() {
        for &(k, l) in &arcs[x + 1..] {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                return Err(Error::InvalidGraph(format!(
                    "{side} arcs ({i},{j}) and ({k},{l}) cross"
                )));
            }
        }
    }
    Ok(())
}

impl MeanderGraph {
    /// Validating constructor. Arcs are normalized to `(min, max)` and sorted.
    pub fn new(
        vertex_count: usize,
        top_arcs: Vec<Arc>,
        bottom_arcs: Vec<Arc>,
        symmetric: bool,
    ) -> Result<Self> {
        let normalize = |arcs: Vec<Arc>| {
            let mut arcs: Vec<Arc> = arcs.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
            arcs.sort_unstable();
            arcs
        };
        let top_arcs = normalize(top_arcs);
        let bottom_arcs = normalize(bottom_arcs);
        check_side(vertex_count, &top_arcs, "top")?;
        check_side(vertex_count, &bottom_arcs, "bottom")?;
        let graph = Self {
            vertex_count,
            top_arcs,
            bottom_arcs,
            symmetric,
        };
        if symmetric && !graph.is_mirror_invariant() {
            return Err(Error::InvalidGraph(
                "graph flagged symmetric is not invariant under v -> N+1-v".into(),
            ));
        }
        Ok(graph)
    }

    fn from_compositions(top: &Composition, bottom: &Composition, symmetric: bool) -> Self {
        debug_assert_eq!(top.total(), bottom.total());
        Self {
            vertex_count: top.total(),
            top_arcs: composition_arcs(top.parts()),
            bottom_arcs: composition_arcs(bottom.parts()),
            symmetric,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn top_arcs(&self) -> &[Arc] {
        &self.top_arcs
    }

    pub fn bottom_arcs(&self) -> &[Arc] {
        &self.bottom_arcs
    }

    pub fn arc_count(&self) -> usize {
        self.top_arcs.len() + self.bottom_arcs.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn mirror(&self, v: usize) -> usize {
        self.vertex_count + 1 - v
    }

    fn is_mirror_invariant(&self) -> bool {
        let mirrored = |arcs: &[Arc]| {
            let mut out: Vec<Arc> = arcs
                .iter()
                .map(|&(i, j)| (self.mirror(j), self.mirror(i)))
                .collect();
            out.sort_unstable();
            out
        };
        mirrored(&self.top_arcs) == self.top_arcs && mirrored(&self.bottom_arcs) == self.bottom_arcs
    }

    /// Arcs `(i, j)` with `i ≤ N/2 < j`.
    pub fn central_arcs(&self, arcs: &[Arc]) -> usize {
        let half = self.vertex_count / 2;
        arcs.iter().filter(|&&(i, j)| i <= half && half < j).count()
    }

    fn partners(&self, arcs: &[Arc]) -> Vec<Option<usize>> {
        let mut partner = vec![None; self.vertex_count + 1];
        for &(i, j) in arcs {
            partner[i] = Some(j);
            partner[j] = Some(i);
        }
        partner
    }
}

pub fn build_graph_a(q: &SeaweedA) -> MeanderGraph {
    MeanderGraph::from_compositions(q.top(), q.bottom(), false)
}

/// The type-C graph: the type-A graph of the symmetrized seaweed on `2n` vertices.
pub fn build_graph_c(q: &SeaweedC) -> MeanderGraph {
    let sym = q.symmetrize();
    MeanderGraph::from_compositions(sym.top(), sym.bottom(), true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComponentKind {
    Cycle,
    Segment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertices in walk order. A segment is listed from one end to the other.
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
    /// Vertex set is invariant under `v -> N+1-v`.
    pub sigma_stable: bool,
}

impl Component {
    pub fn is_cycle(&self) -> bool {
        self.kind == ComponentKind::Cycle
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    /// Ordered by smallest vertex.
    pub components: Vec<Component>,
    pub cycles: usize,
    pub segments: usize,
    pub sigma_stable_segments: usize,
    pub central_arcs_top: usize,
    pub central_arcs_bottom: usize,
}

impl ComponentReport {
    fn from_components(graph: &MeanderGraph, components: Vec<Component>) -> Self {
        let cycles = components.iter().filter(|c| c.is_cycle()).count();
        let segments = components.len() - cycles;
        let sigma_stable_segments = components
            .iter()
            .filter(|c| !c.is_cycle() && c.sigma_stable)
            .count();
        Self {
            components,
            cycles,
            segments,
            sigma_stable_segments,
            central_arcs_top: graph.central_arcs(&graph.top_arcs),
            central_arcs_bottom: graph.central_arcs(&graph.bottom_arcs),
        }
    }

    pub fn unstable_segments(&self) -> usize {
        self.segments - self.sigma_stable_segments
    }

    /// `2 * cycles + segments`: the index of the corresponding `gl` seaweed.
    pub fn gl_index(&self) -> usize {
        2 * self.cycles + self.segments
    }

    /// `cycles + (segments that are not σ-stable) / 2`. `None` if that count is
    /// odd, which cannot happen for a graph that is actually mirror-symmetric.
    pub fn symmetric_index(&self) -> Option<usize> {
        let unstable = self.unstable_segments();
        unstable.is_multiple_of(2).then_some(self.cycles + unstable / 2)
    }

    /// Recounts the summary fields after the component list has been edited.
    pub fn recount(&mut self) {
        self.cycles = self.components.iter().filter(|c| c.is_cycle()).count();
        self.segments = self.components.len() - self.cycles;
        self.sigma_stable_segments = self
            .components
            .iter()
            .filter(|c| !c.is_cycle() && c.sigma_stable)
            .count();
    }
}

#[derive(Clone, Copy)]
enum Side {
    Top,
    Bottom,
}

impl Side {
    fn flip(self) -> Self {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

/// Walks every component, alternating top and bottom arcs.
pub fn analyze(graph: &MeanderGraph) -> ComponentReport {
    let n = graph.vertex_count;
    let top = graph.partners(&graph.top_arcs);
    let bottom = graph.partners(&graph.bottom_arcs);
    let partner = |side: Side, v: usize| match side {
        Side::Top => top[v],
        Side::Bottom => bottom[v],
    };

    let mut component_of = vec![usize::MAX; n + 1];
    let mut walks: Vec<(Vec<usize>, ComponentKind)> = Vec::new();

    for start in 1..=n {
        if component_of[start] != usize::MAX {
            continue;
        }
        let id = walks.len();
        component_of[start] = id;

        let mut forward = vec![start];
        let mut closed = false;
        let (mut cur, mut side) = (start, Side::Top);
        while let Some(next) = partner(side, cur) {
            if next == start {
                closed = true;
                break;
            }
            component_of[next] = id;
            forward.push(next);
            cur = next;
            side = side.flip();
        }

        let vertices = if closed {
            forward
        } else {
            let mut backward = Vec::new();
            let (mut cur, mut side) = (start, Side::Bottom);
            while let Some(next) = partner(side, cur) {
                component_of[next] = id;
                backward.push(next);
                cur = next;
                side = side.flip();
            }
            backward.reverse();
            backward.extend(forward);
            backward
        };
        let kind = if closed {
            ComponentKind::Cycle
        } else {
            ComponentKind::Segment
        };
        walks.push((vertices, kind));
    }

    let components = walks
        .into_iter()
        .enumerate()
        .map(|(id, (vertices, kind))| {
            let sigma_stable = component_of[graph.mirror(vertices[0])] == id;
            Component {
                vertices,
                kind,
                sigma_stable,
            }
        })
        .collect();

    ComponentReport::from_components(graph, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::seaweeds_c;

    fn c(text: &str) -> Composition {
        text.parse().unwrap()
    }

    fn sp(n: usize, a: &str, b: &str) -> SeaweedC {
        SeaweedC::sp(n, c(a), c(b)).unwrap()
    }

    fn degree(graph: &MeanderGraph, v: usize) -> usize {
        graph
            .top_arcs()
            .iter()
            .chain(graph.bottom_arcs())
            .filter(|&&(i, j)| i == v || j == v)
            .count()
    }

    #[test]
    fn type_a_example_arcs() {
        let q = SeaweedA::new(c("5,2,2"), c("2,4,3")).unwrap();
        let g = build_graph_a(&q);
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.top_arcs(), &[(1, 5), (2, 4), (6, 7), (8, 9)]);
        assert_eq!(g.bottom_arcs(), &[(1, 2), (3, 6), (4, 5), (7, 9)]);
        assert!(!g.is_symmetric());
        let report = analyze(&g);
        assert_eq!((report.cycles, report.segments), (1, 1));
    }

    #[test]
    fn trivial_type_a_graphs() {
        let g = build_graph_a(&SeaweedA::new(c("1"), c("1")).unwrap());
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arc_count(), 0);
        let g = build_graph_a(&SeaweedA::new(c("4"), c("4")).unwrap());
        assert_eq!(g.top_arcs(), &[(1, 4), (2, 3)]);
        assert_eq!(g.bottom_arcs(), &[(1, 4), (2, 3)]);
        let report = analyze(&g);
        assert_eq!((report.cycles, report.segments), (2, 0));
    }

    #[test]
    fn type_c_graphs() {
        let g = build_graph_c(&sp(1, "", "1"));
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.top_arcs(), &[(1, 2)]);
        assert!(g.bottom_arcs().is_empty());

        let g = build_graph_c(&sp(4, "2,2", "1,2"));
        assert_eq!(g.top_arcs(), &[(1, 2), (3, 4), (5, 6), (7, 8)]);
        assert_eq!(g.bottom_arcs(), &[(2, 3), (4, 5), (6, 7)]);

        let g = build_graph_c(&sp(7, "2,3", ""));
        assert_eq!(g.vertex_count(), 14);
        let nested: Vec<Arc> = (1..=7).map(|i| (i, 15 - i)).collect();
        assert_eq!(g.bottom_arcs(), nested.as_slice());
        assert_eq!(
            g.top_arcs(),
            &[(1, 2), (3, 5), (6, 9), (7, 8), (10, 12), (13, 14)]
        );
    }

    #[test]
    fn parabolic_example_components() {
        let report = analyze(&build_graph_c(&sp(7, "2,3", "")));
        assert_eq!(report.cycles, 4);
        assert_eq!(report.segments, 1);
        assert_eq!(report.sigma_stable_segments, 1);
        assert_eq!((report.central_arcs_top, report.central_arcs_bottom), (2, 7));
    }

    #[test]
    fn isolated_vertices_are_segments() {
        let g = MeanderGraph::new(3, vec![], vec![], false).unwrap();
        let report = analyze(&g);
        assert_eq!((report.cycles, report.segments), (0, 3));
        let firsts: Vec<usize> = report.components.iter().map(|c| c.vertices[0]).collect();
        assert_eq!(firsts, vec![1, 2, 3]);
    }

    #[test]
    fn segment_vertices_listed_end_to_end() {
        // 2 -b- 4 -t- 7 in the (8, 3,4 | 5,3) graph
        let report = analyze(&build_graph_c(&sp(8, "3,4", "5,3")));
        let seg = report
            .components
            .iter()
            .find(|c| c.vertices.contains(&2))
            .unwrap();
        assert_eq!(seg.kind, ComponentKind::Segment);
        assert!(seg.vertices == vec![2, 4, 7] || seg.vertices == vec![7, 4, 2]);
        assert!(!seg.sigma_stable);
        assert_eq!(report.unstable_segments(), 2);
        assert_eq!(report.cycles, 0);
    }

    #[test]
    fn validating_constructor_rejects_bad_graphs() {
        assert!(MeanderGraph::new(4, vec![(1, 3), (2, 4)], vec![], false).is_err());
        assert!(MeanderGraph::new(4, vec![(1, 2), (2, 3)], vec![], false).is_err());
        assert!(MeanderGraph::new(4, vec![(1, 5)], vec![], false).is_err());
        assert!(MeanderGraph::new(4, vec![(2, 2)], vec![], false).is_err());
        assert!(MeanderGraph::new(4, vec![(1, 2)], vec![], true).is_err());
        let g = MeanderGraph::new(4, vec![(4, 1), (3, 2)], vec![], true).unwrap();
        assert_eq!(g.top_arcs(), &[(1, 4), (2, 3)]);
    }

    fn assert_non_crossing(arcs: &[Arc]) {
        for (x, &(i, j)) in arcs.iter().enumerate() {
            for &(k, l) in &arcs[x + 1..] {
                assert!(!(i < k && k < j && j < l), "({i},{j}) crosses ({k},{l})");
                assert!(!(k < i && i < l && l < j), "({i},{j}) crosses ({k},{l})");
            }
        }
    }

    #[test]
    fn exhaustive_structure_up_to_rank_6() {
        for n in 0..=6 {
            for q in seaweeds_c(n) {
                let g = build_graph_c(&q);
                assert_eq!(g.vertex_count(), 2 * n);
                // rebuild through the validating constructor: mirror symmetry, degrees, crossings
                MeanderGraph::new(2 * n, g.top_arcs().to_vec(), g.bottom_arcs().to_vec(), true)
                    .unwrap();
                assert_non_crossing(g.top_arcs());
                assert_non_crossing(g.bottom_arcs());

                let report = analyze(&g);
                assert_eq!(report.central_arcs_top, q.d());
                assert_eq!(report.central_arcs_bottom, q.d_prime());
                assert_eq!(report.cycles + report.segments, report.components.len());

                let mut seen = vec![0usize; 2 * n + 1];
                for comp in &report.components {
                    for &v in &comp.vertices {
                        seen[v] += 1;
                    }
                    let all_degree_two = comp.vertices.iter().all(|&v| degree(&g, v) == 2);
                    assert_eq!(comp.is_cycle(), all_degree_two, "{q}");
                }
                assert!(seen[1..].iter().all(|&k| k == 1), "{q}");
                assert_eq!(report.unstable_segments() % 2, 0, "{q}");
            }
        }
    }
}
