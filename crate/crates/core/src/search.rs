//! Exact Turán numbers at desk scale.
//!
//! All searches share one engine: orderly generation of edge sets over the
//! `C(n, r)` candidate edges in colex order, where a set is kept only if its
//! sorted index list is lexicographically least among all relabelings. Every
//! isomorphism class of family-free hypergraphs then appears exactly once,
//! and a set's canonical parent is the set minus its last edge. On top of
//! that, a branch-and-bound prunes subtrees whose optimistic value (current
//! edges plus every still-addable edge) cannot beat the best found so far.
//!
//! Witnesses are the earliest optimal set in depth-first order, which is the
//! lexicographically least canonical form among optimal sets, so results do
//! not depend on the number of workers.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Mutex, OnceLock};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::berge::contains_berge_using;
use crate::certify::{cliques_within, RedBlueGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Graph, Hypergraph};
use crate::iso::{next_permutation, sub_iso, sub_iso_using};
use crate::patterns::complete_bipartite;

/// Forbidden patterns for a search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ForbiddenFamily {
    /// Forbidden as Berge copies.
    pub berge_patterns: Vec<Graph>,
    /// Forbidden as subhypergraphs of the host.
    pub exact_patterns: Vec<Hypergraph>,
    /// Forbidden as subgraphs; only meaningful for 2-uniform hosts.
    pub graph_patterns: Vec<Graph>,
}

impl ForbiddenFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn berge(mut self, g: Graph) -> Self {
        self.berge_patterns.push(g);
        self
    }

    pub fn exact(mut self, h: Hypergraph) -> Self {
        self.exact_patterns.push(h);
        self
    }

    pub fn graph(mut self, g: Graph) -> Self {
        self.graph_patterns.push(g);
        self
    }

    pub fn graphs(patterns: impl IntoIterator<Item = Graph>) -> Self {
        ForbiddenFamily { graph_patterns: patterns.into_iter().collect(), ..Self::default() }
    }

    fn validate(&self, r: usize) -> Result<()> {
        if let Some(p) = self.exact_patterns.iter().find(|p| p.r() != r) {
            return Err(Error::UniformityMismatch { pattern: p.r(), host: r });
        }
        if r != 2 && !self.graph_patterns.is_empty() {
            return Err(Error::params("graph patterns need a 2-uniform search"));
        }
        Ok(())
    }

    /// Validates uniformity and rejects families that forbid the edgeless
    /// host, since incremental checks only look at copies using a new edge.
    fn prepare(&self, n: usize, r: usize) -> Result<()> {
        self.validate(r)?;
        if !self.admits(&Hypergraph::empty(n, r)?)? {
            return Err(Error::params("the family forbids the edgeless hypergraph"));
        }
        Ok(())
    }

    /// True if `host` contains no member of the family.
    pub fn admits(&self, host: &Hypergraph) -> Result<bool> {
        self.validate(host.r())?;
        for p in &self.exact_patterns {
            if sub_iso(p, host)?.is_some() {
                return Ok(false);
            }
        }
        for g in &self.graph_patterns {
            if sub_iso(g.as_hypergraph(), host)?.is_some() {
                return Ok(false);
            }
        }
        Ok(self.berge_patterns.iter().all(|p| crate::berge::contains_berge(host, p).is_none()))
    }

    /// Assuming `host` minus edge `new` admits the family, whether `host`
    /// still does: any new copy must use edge `new`.
    fn admits_with(&self, host: &Hypergraph, new: usize) -> bool {
        let sub = |p: &Hypergraph| sub_iso_using(p, host, new).expect("validated uniformity").is_none();
        self.exact_patterns.iter().all(sub)
            && self.graph_patterns.iter().all(|g| sub(g.as_hypergraph()))
            && self.berge_patterns.iter().all(|p| contains_berge_using(host, p, new).is_none())
    }
}

/// Outcome of an exact search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub optimum: u64,
    pub witness: Hypergraph,
    pub nodes_explored: u64,
    /// Always true for returned results; truncated searches are errors.
    pub exhaustive: bool,
}

/// Size and time limits. Exceeding either is an error, never a partial answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `n` allowed per uniformity; missing entries use `default_max_n`.
    pub max_n: BTreeMap<usize, usize>,
    pub default_max_n: usize,
    pub time_limit: Option<Duration>,
    /// Worker threads; 1 runs on the calling thread.
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_n: BTreeMap::new(), default_max_n: 8, time_limit: None, workers: 1 }
    }
}

impl SearchConfig {
    pub fn cap(&self, r: usize) -> usize {
        self.max_n.get(&r).copied().unwrap_or(self.default_max_n)
    }

    fn check(&self, n: usize, r: usize) -> Result<()> {
        if n > self.cap(r) {
            return Err(Error::CapExceeded(format!("n={n} exceeds the configured cap {} for r={r}", self.cap(r))));
        }
        if n > MAX_SEARCH_N || crate::formulas::binom(n, r) > 128 {
            return Err(Error::CapExceeded(format!("n={n}, r={r} is beyond the search engine's limits")));
        }
        Ok(())
    }
}

/// Hard limit from the permutation tables (`n!` rows).
const MAX_SEARCH_N: usize = 9;

/// `ex_r(n, family)` with a witness.
pub fn ex_exact(n: usize, r: usize, family: &ForbiddenFamily) -> Result<SearchResult> {
    ex_exact_with(n, r, family, &SearchConfig::default())
}

pub fn ex_exact_with(n: usize, r: usize, family: &ForbiddenFamily, config: &SearchConfig) -> Result<SearchResult> {
    if r == 0 {
        return Err(Error::params("uniformity must be positive"));
    }
    family.prepare(n, r)?;
    run(n, r, config, Objective::Edges, &|h, new| family.admits_with(h, new))
}

/// `ex(n, family)` for graphs: every pattern, Berge or not, is a subgraph
/// pattern when the host is 2-uniform.
pub fn ex_graph_exact(n: usize, family: &ForbiddenFamily) -> Result<SearchResult> {
    ex_graph_exact_with(n, family, &SearchConfig::default())
}

pub fn ex_graph_exact_with(n: usize, family: &ForbiddenFamily, config: &SearchConfig) -> Result<SearchResult> {
    ex_exact_with(n, 2, family, config)
}

/// Maximum number of `K_t` copies in an `n`-vertex family-free graph.
pub fn ex_generalized_count(n: usize, t: usize, family: &ForbiddenFamily) -> Result<SearchResult> {
    ex_generalized_count_with(n, t, family, &SearchConfig::default())
}

pub fn ex_generalized_count_with(
    n: usize,
    t: usize,
    family: &ForbiddenFamily,
    config: &SearchConfig,
) -> Result<SearchResult> {
    if t < 2 {
        return Err(Error::params("clique size must be at least 2"));
    }
    family.prepare(n, 2)?;
    run(n, 2, config, Objective::Cliques(t), &|h, new| family.admits_with(h, new))
}

/// Maximum edge count of an `(r-1)`-graph on `s` vertices whose 2-shadow
/// has no `K_{p,q}` subgraph. Results are cached per parameter tuple.
pub fn extremal_shadow_free(s: usize, r: usize, p: usize, q: usize) -> Result<SearchResult> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize, usize, usize), SearchResult>>> = OnceLock::new();
    if r < 3 || p == 0 || q == 0 {
        return Err(Error::params(format!("need r >= 3 and p, q >= 1, got r={r} p={p} q={q}")));
    }
    if s > 8 {
        return Err(Error::CapExceeded(format!("s={s} exceeds 8")));
    }
    let key = (s, r, p.min(q), p.max(q));
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
        return Ok(hit.clone());
    }
    let kpq = complete_bipartite(key.2, key.3);
    let config = SearchConfig { default_max_n: 8, ..SearchConfig::default() };
    let result = run(s, r - 1, &config, Objective::Edges, &|h, _| {
        sub_iso(kpq.as_hypergraph(), h.shadow().as_hypergraph()).expect("2-uniform").is_none()
    })?;
    cache.lock().expect("cache lock").insert(key, result.clone());
    Ok(result)
}

/// Best red-blue coloring of a family-free graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsilonResult {
    pub optimum: u64,
    pub witness: RedBlueGraph,
    pub nodes_explored: u64,
    pub exhaustive: bool,
}

/// Maximum of `e(red) + N(K_r, blue)` over family-free `n`-vertex graphs
/// and all red-blue colorings of their edges.
pub fn max_epsilon(n: usize, r: usize, family: &ForbiddenFamily) -> Result<EpsilonResult> {
    if n > 6 {
        return Err(Error::CapExceeded(format!("n={n} exceeds 6")));
    }
    family.prepare(n, 2)?;
    let config = SearchConfig::default();
    let result = run(n, 2, &config, Objective::Epsilon(r), &|h, new| family.admits_with(h, new))?;
    let graph = Graph::from_hypergraph(result.witness)?;
    let (value, red) = best_coloring(&graph, r);
    debug_assert_eq!(value, result.optimum as u128);
    let red_edges: Vec<Edge> = graph.edges().iter().zip(&red).filter(|(_, &is_red)| is_red).map(|(e, _)| *e).collect();
    Ok(EpsilonResult {
        optimum: result.optimum,
        witness: RedBlueGraph::new(graph, &red_edges)?,
        nodes_explored: result.nodes_explored,
        exhaustive: true,
    })
}

/// Best coloring by exhaustion over red subsets; ties keep the first mask.
fn best_coloring(g: &Graph, r: usize) -> (u128, Vec<bool>) {
    let edges = g.edges();
    let e = edges.len();
    let mut best = (0u128, vec![true; e]);
    let mut found = false;
    for red_mask in (0..1u64 << e).rev() {
        let mut adj = vec![0u64; g.n()];
        for (i, edge) in edges.iter().enumerate() {
            if red_mask & (1 << i) == 0 {
                let vs = edge.to_vec();
                adj[vs[0]] |= 1 << vs[1];
                adj[vs[1]] |= 1 << vs[0];
            }
        }
        let value = red_mask.count_ones() as u128 + cliques_within(&adj, g.vertex_mask(), r);
        if !found || value > best.0 {
            found = true;
            best = (value, (0..e).map(|i| red_mask & (1 << i) != 0).collect());
        }
    }
    best
}

#[derive(Clone, Copy, Debug)]
enum Objective {
    Edges,
    /// Number of `K_t` in a graph.
    Cliques(usize),
    /// Best `e(red) + N(K_r, blue)` over colorings of a graph.
    Epsilon(usize),
}

type Admits<'a> = dyn Fn(&Hypergraph, usize) -> bool + Sync + 'a;

/// Colex rank of an edge: `sum C(v_i, i+1)` over its sorted vertices.
fn colex_rank(e: Edge) -> usize {
    e.vertices().enumerate().map(|(i, v)| crate::formulas::binom(v, i + 1) as usize).sum()
}

struct Engine<'a> {
    n: usize,
    r: usize,
    candidates: Vec<Edge>,
    /// For each non-identity permutation, the image of every candidate index.
    perms: Vec<Vec<u8>>,
    objective: Objective,
    admits: &'a Admits<'a>,
    nodes: AtomicU64,
    best: AtomicU64,
    aborted: AtomicBool,
    deadline: Option<Instant>,
}

#[derive(Clone, Debug)]
struct Found {
    value: u64,
    chosen: Vec<usize>,
}

impl Found {
    /// Higher value wins; among equal values the earlier set in depth-first
    /// order, which is the lexicographically smaller index list.
    fn better_than(&self, other: &Found) -> bool {
        self.value > other.value || (self.value == other.value && self.chosen < other.chosen)
    }
}

fn run(n: usize, r: usize, config: &SearchConfig, objective: Objective, admits: &Admits<'_>) -> Result<SearchResult> {
    config.check(n, r)?;
    let mut candidates = crate::hypergraph::k_subsets(n, r);
    candidates.sort_by_key(|&e| colex_rank(e));
    let index: HashMap<Edge, u8> = candidates.iter().enumerate().map(|(i, &e)| (e, i as u8)).collect();
    let mut perms = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    while next_permutation(&mut perm) {
        perms.push(
            candidates
                .iter()
                .map(|e| index[&Edge::from_mask(e.vertices().fold(0, |m, v| m | 1 << perm[v]))])
                .collect(),
        );
    }
    let engine = Engine {
        n,
        r,
        candidates,
        perms,
        objective,
        admits,
        nodes: AtomicU64::new(0),
        best: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        deadline: config.time_limit.map(|d| Instant::now() + d),
    };
    let empty = Hypergraph::empty(n, r)?;
    let root_addable: Vec<usize> = (0..engine.candidates.len())
        .filter(|&c| admits(&empty.with_edge(engine.candidates[c]).expect("candidate"), 0))
        .collect();
    let found = if config.workers <= 1 {
        let mut best = Found { value: 0, chosen: vec![] };
        engine.dfs(&mut vec![], &root_addable, &mut best, false);
        best
    } else {
        engine.parallel(&root_addable, config.workers)?
    };
    if engine.aborted.load(Ordering::Relaxed) {
        return Err(Error::CapExceeded("time limit reached before the search finished".into()));
    }
    let witness = engine.hypergraph(&found.chosen);
    Ok(SearchResult {
        optimum: found.value,
        witness,
        nodes_explored: engine.nodes.load(Ordering::Relaxed),
        exhaustive: true,
    })
}

impl<'a> Engine<'a> {
    fn hypergraph(&self, chosen: &[usize]) -> Hypergraph {
        Hypergraph::from_edges(self.n, self.r, chosen.iter().map(|&c| self.candidates[c])).expect("distinct candidates")
    }

    fn value(&self, chosen: &[usize]) -> u64 {
        match self.objective {
            Objective::Edges => chosen.len() as u64,
            Objective::Cliques(t) => self.cliques(chosen.iter().copied(), t) as u64,
            Objective::Epsilon(r) => {
                let g = Graph::from_hypergraph(self.hypergraph(chosen)).expect("2-uniform");
                best_coloring(&g, r).0 as u64
            }
        }
    }

    /// An upper bound on the value of any extension using only `addable`.
    fn bound(&self, chosen: &[usize], addable: &[usize]) -> u64 {
        match self.objective {
            Objective::Edges => (chosen.len() + addable.len()) as u64,
            Objective::Cliques(t) => self.cliques(chosen.iter().chain(addable).copied(), t) as u64,
            Objective::Epsilon(r) => {
                let all = chosen.iter().chain(addable).copied();
                (chosen.len() + addable.len()) as u64 + self.cliques(all, r) as u64
            }
        }
    }

    fn cliques(&self, edges: impl Iterator<Item = usize>, t: usize) -> u128 {
        let mut adj = vec![0u64; self.n];
        for c in edges {
            let vs = self.candidates[c].to_vec();
            adj[vs[0]] |= 1 << vs[1];
            adj[vs[1]] |= 1 << vs[0];
        }
        cliques_within(&adj, (1u64 << self.n) - 1, t)
    }

    /// True if no relabeling yields a lexicographically smaller sorted index
    /// list: the lowest index where an image differs from `chosen` must
    /// belong to `chosen`.
    fn canonical(&self, chosen: &[usize]) -> bool {
        let mask: u128 = chosen.iter().fold(0, |m, &c| m | 1 << c);
        self.perms.iter().all(|table| {
            let image: u128 = chosen.iter().fold(0, |m, &c| m | 1 << table[c]);
            let diff = image ^ mask;
            diff == 0 || mask & (diff & diff.wrapping_neg()) != 0
        })
    }

    fn tick(&self) -> bool {
        let count = self.nodes.fetch_add(1, Ordering::Relaxed);
        if count % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    self.aborted.store(true, Ordering::Relaxed);
                }
            }
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    /// Children of `chosen`: each addable candidate `c` whose addition is
    /// canonical, with the later candidates still addable afterwards.
    fn child(&self, chosen: &mut Vec<usize>, addable: &[usize], i: usize) -> Option<Vec<usize>> {
        chosen.push(addable[i]);
        if !self.canonical(chosen) {
            chosen.pop();
            return None;
        }
        let host = self.hypergraph(chosen);
        let next = addable[i + 1..]
            .iter()
            .copied()
            .filter(|&c| {
                let bigger = host.with_edge(self.candidates[c]).expect("candidate");
                let idx = bigger.edge_index(self.candidates[c]).expect("added edge");
                (self.admits)(&bigger, idx)
            })
            .collect();
        Some(next)
    }

    /// Depth-first search below `chosen`. With `strict`, subtrees whose bound
    /// ties the shared best are still explored, so each subtree reports its
    /// own earliest optimum.
    fn dfs(&self, chosen: &mut Vec<usize>, addable: &[usize], best: &mut Found, strict: bool) {
        if !self.tick() {
            return;
        }
        let here = Found { value: self.value(chosen), chosen: chosen.clone() };
        if here.better_than(best) {
            self.best.fetch_max(here.value, Ordering::Relaxed);
            *best = here;
        }
        for i in 0..addable.len() {
            let shared = self.best.load(Ordering::Relaxed).max(best.value);
            let bound = self.bound(chosen, &addable[i..]);
            if bound < shared || (!strict && bound == shared && bound <= best.value) {
                // Bounds only shrink for later siblings.
                break;
            }
            if let Some(next) = self.child(chosen, addable, i) {
                self.dfs(chosen, &next, best, strict);
                chosen.pop();
            }
        }
    }

    /// Expands the top of the tree serially, then searches the frontier in
    /// parallel and merges by value, then by depth-first order.
    fn parallel(&self, root_addable: &[usize], workers: usize) -> Result<Found> {
        let mut interior = Found { value: 0, chosen: vec![] };
        let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = vec![(vec![], root_addable.to_vec())];
        let target = 8 * workers;
        while frontier.len() < target {
            let mut next_frontier = Vec::new();
            let mut expanded = false;
            for (chosen, addable) in frontier {
                if addable.is_empty() {
                    next_frontier.push((chosen, addable));
                    continue;
                }
                expanded = true;
                let here = Found { value: self.value(&chosen), chosen: chosen.clone() };
                if here.better_than(&interior) {
                    interior = here;
                }
                let mut chosen = chosen;
                for i in 0..addable.len() {
                    if let Some(next) = self.child(&mut chosen, &addable, i) {
                        next_frontier.push((chosen.clone(), next));
                        chosen.pop();
                    }
                }
            }
            frontier = next_frontier;
            if !expanded {
                break;
            }
        }
        self.best.fetch_max(interior.value, Ordering::Relaxed);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::params(format!("thread pool: {e}")))?;
        let results: Vec<Found> = pool.install(|| {
            frontier
                .into_par_iter()
                .map(|(mut chosen, addable)| {
                    let mut best = Found { value: 0, chosen: vec![usize::MAX] };
                    self.dfs(&mut chosen, &addable, &mut best, true);
                    best
                })
                .collect()
        });
        let mut best = interior;
        for f in results {
            if f.better_than(&best) {
                best = f;
            }
        }
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::berge::contains_berge;
    use crate::constructions::clique_plus_isolated;
    use crate::iso::isomorphic;
    use crate::patterns::*;

    /// Every subset of the candidate edges, no pruning or symmetry.
    fn naive(n: usize, r: usize, ok: impl Fn(&Hypergraph) -> bool) -> usize {
        let all = crate::hypergraph::k_subsets(n, r);
        let mut best = 0;
        for mask in 0u64..1 << all.len() {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let h = Hypergraph::from_edges(n, r, (0..all.len()).filter(|i| mask & 1 << i != 0).map(|i| all[i])).unwrap();
            if ok(&h) {
                best = size;
            }
        }
        best
    }

    #[test]
    fn empty_family_takes_everything() {
        let res = ex_exact(4, 3, &ForbiddenFamily::new()).unwrap();
        assert_eq!(res.optimum, 4);
        assert!(res.exhaustive);
    }

    #[test]
    fn berge_matching_small() {
        let family = ForbiddenFamily::new().berge(matching(2));
        assert_eq!(ex_exact(5, 3, &family).unwrap().optimum, 1);
        let family = ForbiddenFamily::new().berge(matching(3));
        let res = ex_exact(6, 3, &family).unwrap();
        assert_eq!(res.optimum, 10);
        assert!(isomorphic(&res.witness, &clique_plus_isolated(6, 3, 2).unwrap()));
        assert!(family.admits(&res.witness).unwrap());
    }

    #[test]
    fn agrees_with_naive_enumeration() {
        let m2 = matching(2);
        let p3 = path(3);
        for n in 3..=5 {
            let family = ForbiddenFamily::new().berge(m2.clone());
            let expected = naive(n, 3, |h| contains_berge(h, &m2).is_none());
            assert_eq!(ex_exact(n, 3, &family).unwrap().optimum as usize, expected);
            let family = ForbiddenFamily::new().berge(p3.clone());
            let expected = naive(n, 3, |h| contains_berge(h, &p3).is_none());
            assert_eq!(ex_exact(n, 3, &family).unwrap().optimum as usize, expected);
        }
    }

    #[test]
    fn graph_searches() {
        let family = ForbiddenFamily::graphs([matching(2), complete_graph(3)]);
        let res = ex_graph_exact(5, &family).unwrap();
        assert_eq!(res.optimum, 4);
        assert!(isomorphic(&res.witness, star(4).as_hypergraph()));
        assert_eq!(ex_graph_exact(4, &ForbiddenFamily::graphs([complete_graph(3)])).unwrap().optimum, 4);
        assert_eq!(ex_graph_exact(3, &ForbiddenFamily::new()).unwrap().optimum, 3);
    }

    #[test]
    fn generalized_counts() {
        let k2 = ForbiddenFamily::graphs([complete_graph(2)]);
        assert_eq!(ex_generalized_count(5, 3, &k2).unwrap().optimum, 0);
        let k4 = ForbiddenFamily::graphs([complete_graph(4)]);
        assert_eq!(ex_generalized_count(5, 3, &k4).unwrap().optimum, 4);
    }

    #[test]
    fn shadow_free_examples() {
        assert_eq!(extremal_shadow_free(4, 4, 1, 2).unwrap().optimum, 0);
        assert_eq!(extremal_shadow_free(5, 3, 1, 1).unwrap().optimum, 0);
        assert!(extremal_shadow_free(5, 5, 2, 3).unwrap().optimum >= 1);
        // K_{1,2}-free shadow of a 2-graph: a matching.
        assert_eq!(extremal_shadow_free(7, 3, 1, 2).unwrap().optimum, 3);
    }

    #[test]
    fn epsilon_examples() {
        let k2 = ForbiddenFamily::graphs([complete_graph(2)]);
        assert_eq!(max_epsilon(4, 3, &k2).unwrap().optimum, 0);
        let k3 = ForbiddenFamily::graphs([complete_graph(3)]);
        assert_eq!(max_epsilon(4, 5, &k3).unwrap().optimum, ex_graph_exact(4, &k3).unwrap().optimum);
        let k4 = ForbiddenFamily::graphs([complete_graph(4)]);
        let res = max_epsilon(4, 3, &k4).unwrap();
        assert!(res.optimum >= 4);
        assert_eq!(res.optimum as u128, crate::certify::epsilon(&res.witness, 3));
    }

    #[test]
    fn parallel_matches_serial() {
        let family = ForbiddenFamily::new().berge(matching(3));
        let serial = ex_exact(6, 3, &family).unwrap();
        let config = SearchConfig { workers: 4, ..SearchConfig::default() };
        let parallel = ex_exact_with(6, 3, &family, &config).unwrap();
        assert_eq!(serial.optimum, parallel.optimum);
        assert_eq!(serial.witness, parallel.witness);
    }

    #[test]
    fn caps_are_errors() {
        let family = ForbiddenFamily::new().berge(matching(3));
        let config = SearchConfig { default_max_n: 5, ..SearchConfig::default() };
        assert!(matches!(ex_exact_with(6, 3, &family, &config), Err(Error::CapExceeded(_))));
        let config = SearchConfig { time_limit: Some(Duration::ZERO), ..SearchConfig::default() };
        assert!(matches!(ex_exact_with(7, 3, &family, &config), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn colex_ranks_are_a_bijection() {
        let mut ranks: Vec<usize> = crate::hypergraph::k_subsets(7, 3).into_iter().map(colex_rank).collect();
        ranks.sort();
        assert_eq!(ranks, (0..35).collect::<Vec<_>>());
    }
}
