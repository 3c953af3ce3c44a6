//! Subhypergraph embedding and isomorphism testing.
//!
//! Both are exact backtracking searches; instances here are desk scale.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph};

/// Finds an injective vertex map carrying every pattern edge onto a host
/// edge. `map[v]` is the host image of pattern vertex `v`.
pub fn sub_iso(pattern: &Hypergraph, host: &Hypergraph) -> Result<Option<Vec<usize>>> {
    check_uniformity(pattern, host)?;
    Ok(Embedder::new(pattern, host, None).run())
}

/// Like [`sub_iso`], but only embeddings whose image uses host edge
/// `required` (an index into `host.edges()`).
pub fn sub_iso_using(pattern: &Hypergraph, host: &Hypergraph, required: usize) -> Result<Option<Vec<usize>>> {
    check_uniformity(pattern, host)?;
    Ok(Embedder::new(pattern, host, Some(host.edges()[required])).run())
}

/// True if `a` and `b` are isomorphic.
pub fn isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.n() != b.n() || a.r() != b.r() || a.edge_count() != b.edge_count() {
        return false;
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db || invariant_hash(a) != invariant_hash(b) {
        return false;
    }
    // Equal vertex and edge counts make an injective edge-preserving map a bijection.
    Embedder::new(a, b, None).run().is_some()
}

/// Removes isomorphic duplicates, keeping first occurrences.
pub fn dedup_isomorphic(items: Vec<Hypergraph>) -> Vec<Hypergraph> {
    let mut kept: Vec<Hypergraph> = Vec::new();
    for h in items {
        if !kept.iter().any(|k| isomorphic(k, &h)) {
            kept.push(h);
        }
    }
    kept
}

/// Checks that `map` carries every pattern edge onto a host edge injectively.
pub fn verify_embedding(pattern: &Hypergraph, host: &Hypergraph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let distinct: HashSet<usize> = map.iter().copied().collect();
    distinct.len() == map.len()
        && pattern.edges().iter().all(|e| host.contains_edge(image(*e, map)))
}

fn image(e: Edge, map: &[usize]) -> Edge {
    Edge::from_mask(e.vertices().fold(0u64, |m, v| m | 1 << map[v]))
}

fn check_uniformity(pattern: &Hypergraph, host: &Hypergraph) -> Result<()> {
    if pattern.r() != host.r() {
        return Err(Error::UniformityMismatch { pattern: pattern.r(), host: host.r() });
    }
    Ok(())
}

/// Multiset of (degree, sorted neighbor-degree list) per edge, hashed.
fn invariant_hash(h: &Hypergraph) -> Vec<Vec<usize>> {
    let deg = h.degrees();
    let mut per_edge: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| {
            let mut ds: Vec<usize> = e.vertices().map(|v| deg[v]).collect();
            ds.sort_unstable();
            ds.push(h.edges().iter().filter(|f| f.intersects(*e)).count());
            ds
        })
        .collect();
    per_edge.sort();
    per_edge
}

struct Embedder<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    host_edges: HashSet<u64>,
    pattern_deg: Vec<usize>,
    host_deg: Vec<usize>,
    order: Vec<usize>,
    /// Pattern edges that become fully mapped when `order[i]` is placed.
    closing: Vec<Vec<Edge>>,
    required: Option<Edge>,
}

impl<'a> Embedder<'a> {
    fn new(pattern: &'a Hypergraph, host: &'a Hypergraph, required: Option<Edge>) -> Self {
        let pattern_deg = pattern.degrees();
        let host_deg = host.degrees();
        // Greedy order: most already-placed neighbors, then highest degree, then lowest label.
        let mut order = Vec::with_capacity(pattern.n());
        let mut placed = 0u64;
        while order.len() < pattern.n() {
            let next = (0..pattern.n())
                .filter(|v| placed & (1 << v) == 0)
                .max_by_key(|&v| {
                    let touching = pattern
                        .edges()
                        .iter()
                        .filter(|e| e.contains(v) && e.mask() & placed != 0)
                        .count();
                    (touching, pattern_deg[v], std::cmp::Reverse(v))
                })
                .expect("unplaced vertex");
            order.push(next);
            placed |= 1 << next;
        }
        let mut closing = vec![Vec::new(); order.len()];
        let mut seen = 0u64;
        for (i, &v) in order.iter().enumerate() {
            seen |= 1 << v;
            for e in pattern.edges() {
                if e.contains(v) && e.mask() & !seen == 0 {
                    closing[i].push(*e);
                }
            }
        }
        Embedder {
            pattern,
            host,
            host_edges: host.edges().iter().map(|e| e.mask()).collect(),
            pattern_deg,
            host_deg,
            order,
            closing,
            required,
        }
    }

    fn run(&self) -> Option<Vec<usize>> {
        if self.pattern.n() > self.host.n() || self.pattern.edge_count() > self.host.edge_count() {
            return None;
        }
        let mut map = vec![usize::MAX; self.pattern.n()];
        match self.required {
            None => self.extend(0, &mut map, 0).then_some(map),
            Some(req) => {
                // Some pattern edge must land exactly on `req`.
                let req_vs = req.to_vec();
                for pe in self.pattern.edges() {
                    let pvs = pe.to_vec();
                    let mut perm: Vec<usize> = (0..req_vs.len()).collect();
                    loop {
                        map.iter_mut().for_each(|m| *m = usize::MAX);
                        let mut used = 0u64;
                        let mut ok = true;
                        for (i, &pv) in pvs.iter().enumerate() {
                            let hv = req_vs[perm[i]];
                            if self.host_deg[hv] < self.pattern_deg[pv] {
                                ok = false;
                                break;
                            }
                            map[pv] = hv;
                            used |= 1 << hv;
                        }
                        if ok && self.extend(0, &mut map, used) {
                            return Some(map);
                        }
                        if !next_permutation(&mut perm) {
                            break;
                        }
                    }
                }
                None
            }
        }
    }

    fn extend(&self, depth: usize, map: &mut [usize], used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        if map[v] != usize::MAX {
            // Pre-assigned; still verify edges closing here.
            return self.edges_ok(depth, map) && self.extend(depth + 1, map, used);
        }
        for hv in 0..self.host.n() {
            if used & (1 << hv) != 0 || self.host_deg[hv] < self.pattern_deg[v] {
                continue;
            }
            map[v] = hv;
            if self.edges_ok(depth, map) && self.extend(depth + 1, map, used | 1 << hv) {
                return true;
            }
        }
        map[v] = usize::MAX;
        false
    }

    fn edges_ok(&self, depth: usize, map: &[usize]) -> bool {
        self.closing[depth].iter().all(|e| {
            let img = image(*e, map);
            self.host_edges.contains(&img.mask())
        })
    }
}

/// Advances `perm` to the next lexicographic permutation.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let mut i = perm.len() - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = perm.len() - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}
