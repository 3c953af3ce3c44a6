//! Colorings, crosscuts, strongly independent sets and the deletion families
//! built from them.

use crate::hypergraph::{BitIter, Coloring, Edge, ExtendedCount, Graph, Hypergraph, BLUE, RED};
use crate::iso::dedup_isomorphic;

/// Minimum number of colors in a vertex coloring with no monochromatic edge.
/// An edgeless hypergraph has chromatic number 1. With `r = 1` and an edge
/// no coloring is proper, and 1 is returned by convention.
pub fn chromatic_number(h: &Hypergraph) -> usize {
    chromatic_coloring(h).num_colors
}

/// A proper coloring with the minimum number of colors.
pub fn chromatic_coloring(h: &Hypergraph) -> Coloring {
    if h.edge_count() == 0 || h.r() < 2 {
        return Coloring { assignment: vec![0; h.n()], num_colors: 1 };
    }
    let by_vertex = edges_by_last_vertex(h);
    for k in 2..=h.n() {
        let mut colors = vec![usize::MAX; h.n()];
        if color_with(0, k, 0, &by_vertex, h, &mut colors) {
            return Coloring { assignment: colors, num_colors: k };
        }
    }
    unreachable!("n colors always suffice for r >= 2")
}

/// Edges grouped by their largest vertex, so each edge is checked once,
/// when it becomes fully colored.
fn edges_by_last_vertex(h: &Hypergraph) -> Vec<Vec<Edge>> {
    let mut out = vec![Vec::new(); h.n()];
    for e in h.edges() {
        out[63 - e.mask().leading_zeros() as usize].push(*e);
    }
    out
}

fn color_with(v: usize, k: usize, used: usize, by_vertex: &[Vec<Edge>], h: &Hypergraph, colors: &mut [usize]) -> bool {
    if v == h.n() {
        return true;
    }
    // Symmetry breaking: vertex v takes a used color or the next fresh one.
    for c in 0..k.min(used + 1) {
        colors[v] = c;
        let ok = by_vertex[v].iter().all(|e| e.vertices().any(|u| colors[u] != c));
        if ok && color_with(v + 1, k, used.max(c + 1), by_vertex, h, colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Minimum number of red vertices over proper red-blue colorings; infinite
/// when the hypergraph is not 2-colorable. Disconnected hypergraphs take the
/// global minimum, choosing each component's orientation freely.
pub fn p_value(h: &Hypergraph) -> ExtendedCount {
    min_red_coloring(h).map_or(ExtendedCount::Infinity, |c| ExtendedCount::Finite(c.class(RED).len() as u64))
}

/// A proper red-blue coloring with the fewest red vertices.
pub fn min_red_coloring(h: &Hypergraph) -> Option<Coloring> {
    let by_vertex = edges_by_last_vertex(h);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut colors = vec![usize::MAX; h.n()];
    min_red_search(0, 0, &by_vertex, h, &mut colors, &mut best);
    best.map(|(_, assignment)| Coloring { assignment, num_colors: 2 })
}

fn min_red_search(
    v: usize,
    reds: usize,
    by_vertex: &[Vec<Edge>],
    h: &Hypergraph,
    colors: &mut [usize],
    best: &mut Option<(usize, Vec<usize>)>,
) {
    if best.as_ref().is_some_and(|(b, _)| reds >= *b) && v < h.n() {
        return;
    }
    if v == h.n() {
        if best.as_ref().is_none_or(|(b, _)| reds < *b) {
            *best = Some((reds, colors.to_vec()));
        }
        return;
    }
    for c in [BLUE, RED] {
        colors[v] = c;
        if by_vertex[v].iter().all(|e| e.vertices().any(|u| colors[u] != c)) {
            min_red_search(v + 1, reds + usize::from(c == RED), by_vertex, h, colors, best);
        }
    }
    colors[v] = usize::MAX;
}

/// Minimum size of a crosscut: a red set meeting every edge exactly once.
pub fn q_value(h: &Hypergraph) -> ExtendedCount {
    min_crosscut(h).map_or(ExtendedCount::Infinity, |s| ExtendedCount::Finite(s.len() as u64))
}

/// A minimum crosscut, if one exists.
pub fn min_crosscut(h: &Hypergraph) -> Option<Edge> {
    if h.r() < 2 && h.edge_count() > 0 {
        // Every vertex of a 1-edge would be red and blue at once.
        return None;
    }
    let mut best: Option<Edge> = None;
    crosscut_search(h, 0, 0, &mut best);
    best
}

/// Picks the first edge not yet hit and branches on which of its vertices is red.
fn crosscut_search(h: &Hypergraph, red: u64, forbidden: u64, best: &mut Option<Edge>) {
    let size = red.count_ones() as usize;
    if best.is_some_and(|b| size >= b.len()) {
        return;
    }
    let Some(open) = h.edges().iter().find(|e| e.mask() & red == 0) else {
        *best = Some(Edge::from_mask(red));
        return;
    };
    for v in BitIter(open.mask() & !forbidden) {
        // Every other vertex sharing an edge with v can no longer be red.
        let blocked = h
            .edges()
            .iter()
            .filter(|e| e.contains(v))
            .fold(0u64, |m, e| m | e.mask());
        if blocked & red != 0 {
            continue;
        }
        crosscut_search(h, red | 1 << v, forbidden | blocked, best);
    }
}

/// All vertex sets meeting every edge in at most one vertex, including the
/// empty set, ordered by size and then lexicographically.
pub fn strongly_independent_sets(h: &Hypergraph) -> Vec<Edge> {
    let conflicts: Vec<u64> = (0..h.n())
        .map(|v| {
            h.edges()
                .iter()
                .filter(|e| e.contains(v))
                .fold(0u64, |m, e| m | e.mask())
                & !(1u64 << v)
        })
        .collect();
    let mut out = Vec::new();
    fn grow(start: usize, set: u64, conflicts: &[u64], out: &mut Vec<Edge>) {
        out.push(Edge::from_mask(set));
        for v in start..conflicts.len() {
            if conflicts[v] & set == 0 {
                grow(v + 1, set | 1 << v, conflicts, out);
            }
        }
    }
    grow(0, 0, &conflicts, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `D(F)`: the distinct (up to isomorphism) results of deleting a strongly
/// independent set from `f`. Deleting a vertex removes every edge through it.
#[derive(Clone, Debug)]
pub struct DeletionFamily {
    pub members: Vec<Hypergraph>,
    /// Some strongly independent set meets every edge, so deleting it leaves
    /// no edges. That edgeless result is left out of `members`; it can only
    /// happen when `f` is 2-colorable with a finite crosscut number.
    pub edgeless_result_excluded: bool,
}

pub fn deletion_family(f: &Hypergraph) -> DeletionFamily {
    let mut members = Vec::new();
    let mut edgeless_result_excluded = false;
    for s in strongly_independent_sets(f) {
        let g = f.delete_vertices(s);
        if g.edge_count() == 0 {
            edgeless_result_excluded = true;
        } else {
            members.push(g);
        }
    }
    DeletionFamily { members: dedup_isomorphic(members), edgeless_result_excluded }
}

/// `F⁻` for a single graph: every single-vertex deletion, up to isomorphism.
pub fn vertex_deleted_family(f: &Graph) -> Vec<Graph> {
    let all = (0..f.n()).map(|v| f.vertex_deleted(v).into_hypergraph()).collect();
    dedup_isomorphic(all)
        .into_iter()
        .map(|h| Graph::from_hypergraph(h).expect("2-uniform"))
        .collect()
}

/// `F⁻` for a family of graphs.
pub fn vertex_deleted_family_of(family: &[Graph]) -> Vec<Graph> {
    let all = family
        .iter()
        .flat_map(vertex_deleted_family)
        .map(Graph::into_hypergraph)
        .collect();
    dedup_isomorphic(all)
        .into_iter()
        .map(|h| Graph::from_hypergraph(h).expect("2-uniform"))
        .collect()
}
