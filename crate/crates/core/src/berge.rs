//! Berge copies: detection of Berge-F in an r-graph, Berge matching number,
//! and Berge stars.
//!
//! A Berge copy of a graph `F` picks an injective core map of `V(F)` into the
//! host and a distinct hyperedge for every edge of `F` containing its image.
//! Detection enumerates core maps along shadow edges; for each complete core
//! map, choosing the hyperedges is a bipartite matching problem between the
//! edges of `F` and the hyperedges of the host.

use crate::certify::{max_matching, saturate_left, BipartiteGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Graph, Hypergraph};
use crate::iso::sub_iso;

/// A witness that a host contains a Berge copy of `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BergeEmbedding {
    /// Host vertex of each pattern vertex.
    pub core_map: Vec<usize>,
    /// Host edge index for each pattern edge (pattern edges in canonical order).
    pub edge_assignment: Vec<usize>,
}

impl BergeEmbedding {
    /// Definition check: injective core map, distinct hyperedges, and every
    /// pattern edge's image contained in its assigned hyperedge.
    pub fn verify(&self, host: &Hypergraph, pattern: &Graph) -> bool {
        if self.core_map.len() != pattern.n() || self.edge_assignment.len() != pattern.edge_count() {
            return false;
        }
        let mut seen = 0u64;
        for &v in &self.core_map {
            if v >= host.n() || seen & (1 << v) != 0 {
                return false;
            }
            seen |= 1 << v;
        }
        let mut used = vec![false; host.edge_count()];
        for (&(a, b), &idx) in pattern.pairs().iter().zip(&self.edge_assignment) {
            if idx >= host.edge_count() || used[idx] {
                return false;
            }
            used[idx] = true;
            if !Edge::pair(self.core_map[a], self.core_map[b]).is_subset_of(host.edges()[idx]) {
                return false;
            }
        }
        true
    }
}

/// Finds a Berge copy of `pattern` in `host`.
pub fn contains_berge(host: &Hypergraph, pattern: &Graph) -> Option<BergeEmbedding> {
    BergeSearch::new(host, pattern).find(None)
}

/// Finds a Berge copy of `pattern` whose edge assignment uses host edge
/// `required`. If `host` minus that edge is free of Berge-`pattern`, this
/// decides whether adding the edge created a copy.
pub fn contains_berge_using(host: &Hypergraph, pattern: &Graph, required: usize) -> Option<BergeEmbedding> {
    BergeSearch::new(host, pattern).find(Some(required))
}

/// Largest `s` such that `host` contains a Berge copy of `M_s`.
pub fn berge_matching_number(host: &Hypergraph) -> usize {
    let limit = host.edge_count().min(host.n() / 2);
    let empty = crate::patterns::matching(0);
    let search = BergeSearch::new(host, &empty);
    let mut s = 0;
    while s < limit && search.berge_matching(s + 1, None).is_some() {
        s += 1;
    }
    s
}

/// Finds a Berge star `S_l` centered at `x`: `l` distinct leaves and `l`
/// distinct hyperedges through `x`, the i-th containing the i-th leaf.
/// This is a bipartite matching between hyperedges through `x` and the other
/// vertices, so it succeeds exactly when such a star exists.
pub fn find_berge_star(host: &Hypergraph, x: usize, l: usize) -> Result<Option<BergeEmbedding>> {
    if x >= host.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: host.n() });
    }
    if l == 0 {
        return Err(Error::params("a star needs at least one edge"));
    }
    let through: Vec<usize> = (0..host.edge_count()).filter(|&i| host.edges()[i].contains(x)).collect();
    let adjacency = through
        .iter()
        .map(|&i| host.edges()[i].vertices().filter(|&v| v != x).collect())
        .collect();
    let b = BipartiteGraph::new(through.len(), host.n(), adjacency)?;
    let m = max_matching(&b);
    if m.size() < l {
        return Ok(None);
    }
    let mut core_map = vec![x];
    let mut edge_assignment = Vec::with_capacity(l);
    for (left, leaf) in m.pairs().into_iter().take(l) {
        core_map.push(leaf);
        edge_assignment.push(through[left]);
    }
    Ok(Some(BergeEmbedding { core_map, edge_assignment }))
}

/// True if `host` contains no Berge copy of any `berge_patterns` member and
/// no copy (as a subhypergraph) of any `exact_patterns` member.
pub fn is_family_free(host: &Hypergraph, berge_patterns: &[Graph], exact_patterns: &[Hypergraph]) -> Result<bool> {
    for p in exact_patterns {
        if sub_iso(p, host)?.is_some() {
            return Ok(false);
        }
    }
    Ok(berge_patterns.iter().all(|p| contains_berge(host, p).is_none()))
}

struct BergeSearch<'a> {
    host: &'a Hypergraph,
    pattern: &'a Graph,
    pattern_pairs: Vec<(usize, usize)>,
    /// Host edge indices containing each pair, indexed `u * n + v`.
    containing: Vec<Vec<usize>>,
    shadow_adj: Vec<u64>,
    shadow_deg: Vec<usize>,
}

impl<'a> BergeSearch<'a> {
    fn new(host: &'a Hypergraph, pattern: &'a Graph) -> Self {
        let n = host.n();
        let mut containing = vec![Vec::new(); n * n];
        let mut shadow_adj = vec![0u64; n];
        for (i, e) in host.edges().iter().enumerate() {
            let vs = e.to_vec();
            for a in 0..vs.len() {
                for b in 0..vs.len() {
                    if a != b {
                        containing[vs[a] * n + vs[b]].push(i);
                        shadow_adj[vs[a]] |= 1 << vs[b];
                    }
                }
            }
        }
        let shadow_deg = shadow_adj.iter().map(|m| m.count_ones() as usize).collect();
        BergeSearch { host, pattern, pattern_pairs: pattern.pairs(), containing, shadow_adj, shadow_deg }
    }

    fn pair_edges(&self, u: usize, v: usize) -> &[usize] {
        &self.containing[u * self.host.n() + v]
    }

    fn find(&self, required: Option<usize>) -> Option<BergeEmbedding> {
        let (host, pattern) = (self.host, self.pattern);
        if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
            return None;
        }
        if pattern.edge_count() == 0 {
            return match required {
                Some(_) => None,
                None => Some(BergeEmbedding { core_map: (0..pattern.n()).collect(), edge_assignment: vec![] }),
            };
        }
        let degrees = pattern.degrees();
        if degrees.iter().all(|&d| d == 1) {
            // Chosen pairs come back in pattern-edge order.
            let found = self.berge_matching(pattern.edge_count(), required)?;
            let mut core_map = vec![0; pattern.n()];
            for (i, &(a, b)) in self.pattern_pairs.iter().enumerate() {
                core_map[a] = found.core_map[2 * i];
                core_map[b] = found.core_map[2 * i + 1];
            }
            return Some(BergeEmbedding { core_map, edge_assignment: found.edge_assignment });
        }
        let mut core = CoreMapper::new(self, &degrees);
        match required {
            None => core.extend(0, 0, None),
            Some(req) => {
                let req_edge = host.edges()[req];
                let vs = req_edge.to_vec();
                for (fi, &(a, b)) in self.pattern_pairs.iter().enumerate() {
                    for &x in &vs {
                        for &y in &vs {
                            if x == y || self.shadow_deg[x] < degrees[a] || self.shadow_deg[y] < degrees[b] {
                                continue;
                            }
                            core.reset();
                            core.map[a] = x;
                            core.map[b] = y;
                            if let Some(found) = core.extend(0, (1 << x) | (1 << y), Some((fi, req))) {
                                return Some(found);
                            }
                        }
                    }
                }
                None
            }
        }
    }

    /// Berge-`M_s`: `s` pairwise disjoint shadow pairs, chosen in canonical
    /// order, matched to distinct hyperedges.
    fn berge_matching(&self, s: usize, required: Option<usize>) -> Option<BergeEmbedding> {
        let n = self.host.n();
        if 2 * s > n || s > self.host.edge_count() {
            return None;
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.shadow_adj[u] & (1 << v) != 0 {
                    pairs.push((u, v));
                }
            }
        }
        let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(s);
        match required {
            None => self.pick_pairs(&pairs, 0, s, 0, &mut chosen, None),
            Some(req) => {
                let e = self.host.edges()[req];
                for p in e.pairs() {
                    let vs = p.to_vec();
                    chosen.clear();
                    chosen.push((vs[0], vs[1]));
                    if let Some(found) = self.pick_pairs(&pairs, 0, s, p.mask(), &mut chosen, Some(req)) {
                        return Some(found);
                    }
                }
                None
            }
        }
    }

    fn pick_pairs(
        &self,
        pairs: &[(usize, usize)],
        start: usize,
        s: usize,
        used: u64,
        chosen: &mut Vec<(usize, usize)>,
        required: Option<usize>,
    ) -> Option<BergeEmbedding> {
        if self.assignable(chosen, required).is_none() {
            return None;
        }
        if chosen.len() == s {
            let assignment = self.assignable(chosen, required)?;
            let mut core_map = vec![0; 2 * s];
            for (i, &(u, v)) in chosen.iter().enumerate() {
                core_map[2 * i] = u;
                core_map[2 * i + 1] = v;
            }
            return Some(BergeEmbedding { core_map, edge_assignment: assignment });
        }
        let remaining_vertices = (self.host.vertex_mask() & !used).count_ones() as usize;
        if remaining_vertices < 2 * (s - chosen.len()) {
            return None;
        }
        for i in start..pairs.len() {
            let (u, v) = pairs[i];
            if used & ((1 << u) | (1 << v)) != 0 {
                continue;
            }
            chosen.push((u, v));
            if let Some(found) = self.pick_pairs(pairs, i + 1, s, used | (1 << u) | (1 << v), chosen, required) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    /// Distinct hyperedges for the given pairs; with `required`, the first
    /// pair is pinned to that hyperedge.
    fn assignable(&self, pairs: &[(usize, usize)], required: Option<usize>) -> Option<Vec<usize>> {
        let candidates: Vec<Vec<usize>> = pairs
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| match required {
                Some(req) if i == 0 => vec![req],
                Some(req) => self.pair_edges(u, v).iter().copied().filter(|&e| e != req).collect(),
                None => self.pair_edges(u, v).to_vec(),
            })
            .collect();
        saturate_left(&candidates, self.host.edge_count())
    }
}

/// Backtracking over core maps for a general pattern.
struct CoreMapper<'s, 'a> {
    search: &'s BergeSearch<'a>,
    degrees: &'s [usize],
    /// Non-isolated pattern vertices, highest degree first, ties by label.
    order: Vec<usize>,
    isolated: Vec<usize>,
    map: Vec<usize>,
    /// Pattern edges (by index) completed once `order[i]` is placed.
    closing: Vec<Vec<usize>>,
}

impl<'s, 'a> CoreMapper<'s, 'a> {
    fn new(search: &'s BergeSearch<'a>, degrees: &'s [usize]) -> Self {
        let pattern = search.pattern;
        let mut order: Vec<usize> = (0..pattern.n()).filter(|&v| degrees[v] > 0).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(degrees[v]), v));
        let isolated = (0..pattern.n()).filter(|&v| degrees[v] == 0).collect();
        let mut position = vec![usize::MAX; pattern.n()];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let mut closing = vec![Vec::new(); order.len()];
        for (fi, &(a, b)) in search.pattern_pairs.iter().enumerate() {
            closing[position[a].max(position[b])].push(fi);
        }
        CoreMapper { search, degrees, order, isolated, map: vec![usize::MAX; pattern.n()], closing }
    }

    fn reset(&mut self) {
        self.map.iter_mut().for_each(|m| *m = usize::MAX);
    }

    /// `forced = Some((pattern_edge, host_edge))` pins one assignment.
    fn extend(&mut self, depth: usize, used: u64, forced: Option<(usize, usize)>) -> Option<BergeEmbedding> {
        if depth == self.order.len() {
            return self.finish(used, forced);
        }
        let v = self.order[depth];
        if self.map[v] != usize::MAX {
            if !self.consistent(depth, forced) {
                return None;
            }
            return self.extend(depth + 1, used, forced);
        }
        let host_n = self.search.host.n();
        // Candidates must be shadow-adjacent to every placed neighbor.
        let mut allowed = self.search.host.vertex_mask() & !used;
        for &(a, b) in &self.search.pattern_pairs {
            let other = if a == v { b } else if b == v { a } else { continue };
            if self.map[other] != usize::MAX {
                allowed &= self.search.shadow_adj[self.map[other]];
            }
        }
        for hv in 0..host_n {
            if allowed & (1 << hv) == 0 || self.search.shadow_deg[hv] < self.degrees[v] {
                continue;
            }
            self.map[v] = hv;
            if self.consistent(depth, forced) {
                if let Some(found) = self.extend(depth + 1, used | 1 << hv, forced) {
                    return Some(found);
                }
            }
        }
        self.map[v] = usize::MAX;
        None
    }

    /// Hall check on all pattern edges mapped so far.
    fn consistent(&self, depth: usize, forced: Option<(usize, usize)>) -> bool {
        if self.closing[depth].is_empty() {
            return true;
        }
        let mapped: Vec<usize> = self.closing[..=depth].iter().flatten().copied().collect();
        self.assign(&mapped, forced).is_some()
    }

    fn assign(&self, edges: &[usize], forced: Option<(usize, usize)>) -> Option<Vec<usize>> {
        let candidates: Vec<Vec<usize>> = edges
            .iter()
            .map(|&fi| {
                let (a, b) = self.search.pattern_pairs[fi];
                let list = self.search.pair_edges(self.map[a], self.map[b]);
                match forced {
                    Some((f0, h0)) if f0 == fi => {
                        if list.contains(&h0) {
                            vec![h0]
                        } else {
                            vec![]
                        }
                    }
                    Some((_, h0)) => list.iter().copied().filter(|&e| e != h0).collect(),
                    None => list.to_vec(),
                }
            })
            .collect();
        saturate_left(&candidates, self.search.host.edge_count())
    }

    fn finish(&mut self, used: u64, forced: Option<(usize, usize)>) -> Option<BergeEmbedding> {
        let free: Vec<usize> = (0..self.search.host.n()).filter(|v| used & (1 << v) == 0).collect();
        if free.len() < self.isolated.len() {
            return None;
        }
        let all: Vec<usize> = (0..self.search.pattern_pairs.len()).collect();
        let edge_assignment = self.assign(&all, forced)?;
        let mut core_map = self.map.clone();
        for (&v, &hv) in self.isolated.iter().zip(&free) {
            core_map[v] = hv;
        }
        Some(BergeEmbedding { core_map, edge_assignment })
    }
}
