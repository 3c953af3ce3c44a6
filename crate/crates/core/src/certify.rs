//! Auxiliary bipartite graphs, maximum matchings, the bipartite
//! Gallai–Edmonds decomposition, and red-blue certificates bounding the
//! edge count of a hypergraph by `e(G_red) + N(K_r, G_blue)`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::hypergraph::{BitIter, Edge, Graph, Hypergraph};

/// A bipartite graph with sides `0..left_size` and `0..right_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_size: usize,
    right_size: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Adjacency lists are sorted and deduplicated.
    pub fn new(left_size: usize, right_size: usize, adjacency: Vec<Vec<usize>>) -> Result<Self> {
        if adjacency.len() != left_size {
            return Err(Error::params(format!(
                "{} adjacency lists for {left_size} left vertices",
                adjacency.len()
            )));
        }
        let mut adjacency = adjacency;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            if let Some(&w) = list.last().filter(|&&w| w >= right_size) {
                return Err(Error::VertexOutOfRange { vertex: w, n: right_size });
            }
        }
        Ok(BipartiteGraph { left_size, right_size, adjacency })
    }

    pub fn from_edges(left_size: usize, right_size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); left_size];
        for &(l, r) in edges {
            if l >= left_size {
                return Err(Error::VertexOutOfRange { vertex: l, n: left_size });
            }
            adjacency[l].push(r);
        }
        Self::new(left_size, right_size, adjacency)
    }

    pub fn left_size(&self) -> usize {
        self.left_size
    }

    pub fn right_size(&self) -> usize {
        self.right_size
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adjacency[left]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.adjacency[left].binary_search(&right).is_ok()
    }

    /// Right-side adjacency lists.
    pub fn right_adjacency(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.right_size];
        for (l, list) in self.adjacency.iter().enumerate() {
            for &r in list {
                out[r].push(l);
            }
        }
        out
    }
}

/// A matching, stored from both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub left_mate: Vec<Option<usize>>,
    pub right_mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.left_mate.iter().flatten().count()
    }

    /// Matched `(left, right)` pairs in left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter_map(|(l, m)| m.map(|r| (l, r)))
            .collect()
    }
}

/// Maximum-cardinality matching by repeated augmenting paths. Left vertices
/// are scanned in ascending order and adjacency lists ascending, so the
/// result is deterministic.
pub fn max_matching(b: &BipartiteGraph) -> Matching {
    let mut m = Matching { left_mate: vec![None; b.left_size], right_mate: vec![None; b.right_size] };
    let mut visited = vec![false; b.right_size];
    for l in 0..b.left_size {
        visited.iter_mut().for_each(|v| *v = false);
        augment(b, l, &mut m, &mut visited);
    }
    m
}

fn augment(b: &BipartiteGraph, l: usize, m: &mut Matching, visited: &mut [bool]) -> bool {
    for &r in &b.adjacency[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if m.right_mate[r].is_none_or(|l2| augment(b, l2, m, visited)) {
            m.left_mate[l] = Some(r);
            m.right_mate[r] = Some(l);
            return true;
        }
    }
    false
}

/// Matching from left vertices given as candidate lists; returns the mate of
/// every left vertex when all can be matched.
pub(crate) fn saturate_left(candidates: &[Vec<usize>], right_size: usize) -> Option<Vec<usize>> {
    let b = BipartiteGraph { left_size: candidates.len(), right_size, adjacency: candidates.to_vec() };
    let m = max_matching(&b);
    m.left_mate.into_iter().collect()
}

/// The six classes of the Gallai–Edmonds decomposition, split by side.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GallaiEdmonds {
    pub d_left: Vec<usize>,
    pub d_right: Vec<usize>,
    pub a_left: Vec<usize>,
    pub a_right: Vec<usize>,
    pub c_left: Vec<usize>,
    pub c_right: Vec<usize>,
}

/// Computes `D` (vertices missed by some maximum matching), `A = N(D)` and
/// `C` (the rest). A vertex is in `D` iff it is exposed by the maximum
/// matching or reachable from an exposed vertex on its own side by an
/// even-length alternating path.
pub fn gallai_edmonds(b: &BipartiteGraph) -> GallaiEdmonds {
    gallai_edmonds_with(b, &max_matching(b))
}

pub(crate) fn gallai_edmonds_with(b: &BipartiteGraph, m: &Matching) -> GallaiEdmonds {
    let right_adj = b.right_adjacency();
    let d_left = even_reachable(&b.adjacency, &m.left_mate, &m.right_mate);
    let d_right = even_reachable(&right_adj, &m.right_mate, &m.left_mate);

    let mut a_right = vec![false; b.right_size];
    for l in (0..b.left_size).filter(|&l| d_left[l]) {
        for &r in &b.adjacency[l] {
            a_right[r] = true;
        }
    }
    let mut a_left = vec![false; b.left_size];
    for r in (0..b.right_size).filter(|&r| d_right[r]) {
        for &l in &right_adj[r] {
            a_left[l] = true;
        }
    }

    let mut ge = GallaiEdmonds::default();
    for l in 0..b.left_size {
        match (d_left[l], a_left[l]) {
            (true, _) => ge.d_left.push(l),
            (false, true) => ge.a_left.push(l),
            (false, false) => ge.c_left.push(l),
        }
    }
    for r in 0..b.right_size {
        match (d_right[r], a_right[r]) {
            (true, _) => ge.d_right.push(r),
            (false, true) => ge.a_right.push(r),
            (false, false) => ge.c_right.push(r),
        }
    }
    ge
}

/// Marks vertices of one side reachable from that side's exposed vertices
/// by alternating paths: out along any edge, back along the matching.
fn even_reachable(adj: &[Vec<usize>], mate: &[Option<usize>], other_mate: &[Option<usize>]) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for v in 0..adj.len() {
        if mate[v].is_none() {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if let Some(back) = other_mate[w] {
                if !seen[back] {
                    seen[back] = true;
                    queue.push_back(back);
                }
            }
        }
    }
    seen
}

/// The hyperedge/pair incidence graph of `h`.
#[derive(Clone, Debug)]
pub struct AuxiliaryGraph {
    pub graph: BipartiteGraph,
    /// Right vertex `i` is the pair `pairs[i]`, in canonical order.
    pub pairs: Vec<Edge>,
}

/// Left side: hyperedges of `h` in canonical order. Right side: the shadow
/// pairs. A hyperedge is adjacent to each pair it contains.
pub fn auxiliary_graph(h: &Hypergraph) -> AuxiliaryGraph {
    let pairs = h.shadow().edges().to_vec();
    let adjacency = h
        .edges()
        .iter()
        .map(|e| {
            e.pairs()
                .map(|p| pairs.binary_search(&p).expect("shadow pair"))
                .collect()
        })
        .collect();
    let graph = BipartiteGraph::new(h.edge_count(), pairs.len(), adjacency).expect("valid auxiliary graph");
    AuxiliaryGraph { graph, pairs }
}

/// Number of `t`-cliques in `g`.
pub fn clique_count(g: &Graph, t: usize) -> u128 {
    cliques_within(&g.adjacency(), g.vertex_mask(), t)
}

/// Number of `t`-cliques inside the vertex set `candidates`, given
/// adjacency masks.
pub(crate) fn cliques_within(adj: &[u64], candidates: u64, t: usize) -> u128 {
    if t == 0 {
        return 1;
    }
    if (candidates.count_ones() as usize) < t {
        return 0;
    }
    if t == 1 {
        return candidates.count_ones() as u128;
    }
    BitIter(candidates)
        .map(|v| {
            // Only higher-numbered neighbors, so each clique is counted once.
            let higher = if v >= 63 { 0 } else { u64::MAX << (v + 1) };
            let later = candidates & adj[v] & higher;
            cliques_within(adj, later, t - 1)
        })
        .sum()
}

/// A graph whose edges are colored red or blue.
#[derive(Clone, PartialEq, Eq)]
pub struct RedBlueGraph {
    graph: Graph,
    red: Vec<bool>,
}

impl RedBlueGraph {
    /// `red_edges` must be edges of `graph`; all other edges are blue.
    pub fn new(graph: Graph, red_edges: &[Edge]) -> Result<Self> {
        let mut red = vec![false; graph.edge_count()];
        for e in red_edges {
            let i = graph
                .edge_index(*e)
                .ok_or_else(|| Error::params(format!("red edge {e:?} is not an edge of the graph")))?;
            red[i] = true;
        }
        Ok(RedBlueGraph { graph, red })
    }

    pub fn all_red(graph: Graph) -> Self {
        let red = vec![true; graph.edge_count()];
        RedBlueGraph { graph, red }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn red_graph(&self) -> Graph {
        self.sub(true)
    }

    pub fn blue_graph(&self) -> Graph {
        self.sub(false)
    }

    pub fn red_count(&self) -> usize {
        self.red.iter().filter(|&&r| r).count()
    }

    pub fn blue_count(&self) -> usize {
        self.red.len() - self.red_count()
    }

    pub fn is_red(&self, e: Edge) -> Option<bool> {
        self.graph.edge_index(e).map(|i| self.red[i])
    }

    fn sub(&self, red: bool) -> Graph {
        let edges = self
            .graph
            .edges()
            .iter()
            .zip(&self.red)
            .filter(|(_, &r)| r == red)
            .map(|(e, _)| *e);
        Graph::from_edges(self.graph.n(), edges).expect("subgraph")
    }

    /// One line per edge, `u v R` or `u v B`, in canonical edge order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((u, v), red) in self.graph.pairs().into_iter().zip(&self.red) {
            out.push_str(&format!("{u} {v} {}\n", if *red { 'R' } else { 'B' }));
        }
        out
    }

    /// Parses [`RedBlueGraph::to_text`] output for a graph on `n` vertices.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut edges = Vec::new();
        let mut red = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: &str| Error::Parse { line: i + 1, message: message.into() };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v, c] = parts[..] else {
                return Err(err("expected `u v R` or `u v B`"));
            };
            let u: usize = u.parse().map_err(|_| err("bad vertex"))?;
            let v: usize = v.parse().map_err(|_| err("bad vertex"))?;
            if u >= v || v >= n {
                return Err(err("expected u < v < n"));
            }
            let e = Edge::pair(u, v);
            match c {
                "R" => red.push(e),
                "B" => {}
                _ => return Err(err("color must be R or B")),
            }
            edges.push(e);
        }
        RedBlueGraph::new(Graph::from_edges(n, edges)?, &red)
    }
}

impl fmt::Debug for RedBlueGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RedBlueGraph(n={}, {})", self.graph.n(), self.to_text().trim_end().replace('\n', ", "))
    }
}

/// `e(G_red) + N(K_r, G_blue)`.
pub fn epsilon(rb: &RedBlueGraph, r: usize) -> u128 {
    rb.red_count() as u128 + clique_count(&rb.blue_graph(), r)
}

/// Output of [`derive_certificate`].
#[derive(Clone, Debug)]
pub struct Certificate {
    pub graph: RedBlueGraph,
    pub epsilon: u128,
    pub decomposition: GallaiEdmonds,
    pub matching: Matching,
    /// Hyperedges of `D_1` left exposed by the matching.
    pub exposed_hyperedges: Vec<usize>,
    /// Pairs of `D_2` left exposed by the matching (dropped from `G*`).
    pub exposed_pairs: Vec<usize>,
}

/// Builds the red-blue graph `G*` certifying `e(h) <= epsilon`.
///
/// `G*` keeps every shadow pair covered by the maximum matching `M` of the
/// auxiliary graph. If `M` saturates the hyperedges, all of `G*` is red;
/// otherwise pairs in `C_2 ∪ (D_2 ∖ D'_2)` are red and pairs in `A_2` blue.
pub fn derive_certificate(h: &Hypergraph) -> Certificate {
    let aux = auxiliary_graph(h);
    let m = max_matching(&aux.graph);
    let ge = gallai_edmonds_with(&aux.graph, &m);
    let exposed_hyperedges: Vec<usize> = ge.d_left.iter().copied().filter(|&l| m.left_mate[l].is_none()).collect();
    let exposed_pairs: Vec<usize> = ge.d_right.iter().copied().filter(|&r| m.right_mate[r].is_none()).collect();

    let kept: Vec<Edge> = (0..aux.pairs.len())
        .filter(|r| m.right_mate[*r].is_some())
        .map(|r| aux.pairs[r])
        .collect();
    let g_star = Graph::from_edges(h.n(), kept).expect("pairs of the shadow");
    let graph = if exposed_hyperedges.is_empty() {
        RedBlueGraph::all_red(g_star)
    } else {
        let red: Vec<Edge> = ge
            .c_right
            .iter()
            .chain(ge.d_right.iter().filter(|r| m.right_mate[**r].is_some()))
            .map(|&r| aux.pairs[r])
            .collect();
        RedBlueGraph::new(g_star, &red).expect("red pairs are kept pairs")
    };
    let epsilon = epsilon(&graph, h.r());
    Certificate { graph, epsilon, decomposition: ge, matching: m, exposed_hyperedges, exposed_pairs }
}
