//! Uniform hypergraphs and simple graphs on labeled vertices `0..n`.
//!
//! Edges are stored as vertex bitmasks, so a host may have at most
//! [`MAX_VERTICES`] vertices. Edge lists are always kept in canonical order:
//! lexicographic order of the sorted vertex tuples.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices, used for hyperedges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Edge(u64);

impl Edge {
    pub fn from_vertices(vertices: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n: MAX_VERTICES });
            }
            if mask & (1 << v) != 0 {
                return Err(Error::InvalidHypergraph(format!("repeated vertex {v} in edge")));
            }
            mask |= 1 << v;
        }
        Ok(Edge(mask))
    }

    pub const fn from_mask(mask: u64) -> Self {
        Edge(mask)
    }

    pub fn pair(u: usize, v: usize) -> Self {
        debug_assert!(u != v && u < MAX_VERTICES && v < MAX_VERTICES);
        Edge((1 << u) | (1 << v))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub const fn is_subset_of(self, other: Edge) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: Edge) -> bool {
        self.0 & other.0 != 0
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All 2-subsets of this edge, in lexicographic order.
    pub fn pairs(self) -> impl Iterator<Item = Edge> {
        let vs = self.to_vec();
        let mut out = Vec::with_capacity(vs.len() * vs.len().saturating_sub(1) / 2);
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                out.push(Edge::pair(vs[i], vs[j]));
            }
        }
        out.into_iter()
    }
}

impl Ord for Edge {
    /// Lexicographic order of the sorted vertex tuples.
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        if self.len() != other.len() {
            return self.to_vec().cmp(&other.to_vec());
        }
        // Equal sizes: the set holding the smallest differing vertex is first.
        let diff = self.0 ^ other.0;
        if self.0 & diff & diff.wrapping_neg() != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An r-uniform simple hypergraph on vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting out-of-range vertices, wrong edge sizes
    /// and duplicate edges. Edge order in the input does not matter.
    pub fn new<E: AsRef<[usize]>>(n: usize, r: usize, edges: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut masks = Vec::new();
        for e in edges {
            let e = e.as_ref();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            masks.push(Edge::from_vertices(e)?);
        }
        Self::from_edges(n, r, masks)
    }

    pub fn from_edges(n: usize, r: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidHypergraph(format!(
                "{n} vertices exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        if r == 0 {
            return Err(Error::InvalidHypergraph("uniformity must be positive".into()));
        }
        let range = if n == MAX_VERTICES { u64::MAX } else { (1u64 << n) - 1 };
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        for e in &edges {
            if e.len() != r {
                return Err(Error::InvalidHypergraph(format!("edge {e:?} has {} vertices, expected {r}", e.len())));
            }
            if e.mask() & !range != 0 {
                let vertex = 63 - (e.mask() & !range).leading_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Hypergraph { n, r, edges })
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        Self::from_edges(n, r, [])
    }

    /// The complete r-graph on `n` vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        Self::from_edges(n, r, k_subsets(n, r))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for v in e.vertices() {
                d[v] += 1;
            }
        }
        d
    }

    /// The 2-shadow: all pairs contained in some hyperedge.
    pub fn shadow(&self) -> Graph {
        let mut pairs: Vec<Edge> = self.edges.iter().flat_map(|e| e.pairs()).collect();
        pairs.sort();
        pairs.dedup();
        Graph(Hypergraph { n: self.n, r: 2, edges: pairs })
    }

    /// The link of `v`: `{e \ {v} : v ∈ e}` as an (r−1)-graph on the other
    /// `n − 1` vertices, relabeled order-preservingly.
    pub fn link(&self, v: usize) -> Result<Hypergraph> {
        self.check_vertex(v)?;
        if self.r < 2 {
            return Err(Error::InvalidParams("link of a 1-uniform hypergraph".into()));
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| Edge(remove_vertex(e.mask() & !(1 << v), v)));
        Hypergraph::from_edges(self.n - 1, self.r - 1, edges)
    }

    /// Deletes the vertex set `removed` together with every edge meeting it,
    /// relabeling the survivors order-preservingly.
    pub fn delete_vertices(&self, removed: Edge) -> Hypergraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !removed.contains(v)).collect();
        let mut relabel = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            relabel[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.intersects(removed))
            .map(|e| Edge(e.vertices().fold(0u64, |m, v| m | 1 << relabel[v])))
            .collect::<Vec<_>>();
        Hypergraph::from_edges(keep.len(), self.r, edges).expect("deletion preserves validity")
    }

    /// Same hypergraph padded with isolated vertices up to `n` vertices.
    pub fn with_vertex_count(&self, n: usize) -> Result<Hypergraph> {
        if n < self.n {
            return Err(Error::params(format!("cannot shrink {} vertices to {n}", self.n)));
        }
        Hypergraph::from_edges(n, self.r, self.edges.iter().copied())
    }

    /// Adds one edge, returning a new hypergraph.
    pub fn with_edge(&self, e: Edge) -> Result<Hypergraph> {
        Hypergraph::from_edges(self.n, self.r, self.edges.iter().copied().chain(std::iter::once(e)))
    }

    pub fn without_edge(&self, index: usize) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Hypergraph { n: self.n, r: self.r, edges }
    }

    /// Applies a vertex relabeling `map[v]` (a permutation of `0..n`).
    pub fn relabel(&self, map: &[usize]) -> Hypergraph {
        assert_eq!(map.len(), self.n);
        let edges = self.edges.iter().map(|e| Edge(e.vertices().fold(0u64, |m, v| m | 1 << map[v])));
        Hypergraph::from_edges(self.n, self.r, edges).expect("relabeling by a permutation")
    }

    /// Mask of vertices `0..n`.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == MAX_VERTICES {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Parses the `.hg` text format: a `n r` header followed by one edge per
    /// line as strictly increasing 0-based indices. `#` starts a comment.
    pub fn parse_hg(text: &str) -> Result<Hypergraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, Edge)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse { line: line_no, message: format!("not a vertex index: {t:?}") })
                })
                .collect::<Result<Vec<_>>>()?;
            let Some((n, r)) = header else {
                if nums.len() != 2 {
                    return Err(Error::Parse { line: line_no, message: "expected header `n r`".into() });
                }
                if nums[0] > MAX_VERTICES {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("{} vertices exceeds the supported maximum of {MAX_VERTICES}", nums[0]),
                    });
                }
                if nums[1] == 0 {
                    return Err(Error::Parse { line: line_no, message: "uniformity must be positive".into() });
                }
                header = Some((nums[0], nums[1]));
                continue;
            };
            if nums.len() != r {
                return Err(Error::Parse { line: line_no, message: format!("edge has {} vertices, expected {r}", nums.len()) });
            }
            if nums.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse { line: line_no, message: "vertices must be strictly increasing".into() });
            }
            if let Some(&v) = nums.iter().find(|&&v| v >= n) {
                return Err(Error::Parse { line: line_no, message: format!("vertex {v} out of range (n = {n})") });
            }
            let e = Edge::from_vertices(&nums).expect("validated");
            if let Some((first, _)) = edges.iter().find(|(_, f)| *f == e) {
                return Err(Error::Parse { line: line_no, message: format!("duplicate edge (first seen on line {first})") });
            }
            edges.push((line_no, e));
        }
        let (n, r) = header.ok_or(Error::Parse { line: 0, message: "missing header `n r`".into() })?;
        Hypergraph::from_edges(n, r, edges.into_iter().map(|(_, e)| e))
    }

    /// Renders the `.hg` text format (canonical edge order, LF endings).
    pub fn to_hg_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.r);
        for e in &self.edges {
            let parts: Vec<String> = e.vertices().map(|v| v.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, {:?})", self.n, self.r, self.edges)
    }
}

/// Removes bit `v` from `mask`, shifting the higher bits down by one.
fn remove_vertex(mask: u64, v: usize) -> u64 {
    let low = mask & ((1u64 << v) - 1);
    let high = if v + 1 >= 64 { 0 } else { (mask >> (v + 1)) << v };
    low | high
}

/// All k-subsets of `0..n` as edges, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Edge(idx.iter().fold(0u64, |m, &v| m | 1 << v)));
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// A simple graph: a 2-uniform hypergraph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph(Hypergraph);

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidHypergraph(format!("loop at vertex {u}")));
            }
            list.push([u.min(v), u.max(v)]);
        }
        Ok(Graph(Hypergraph::new(n, 2, list)?))
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        Ok(Graph(Hypergraph::from_edges(n, 2, edges)?))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Ok(Graph(Hypergraph::empty(n, 2)?))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Ok(Graph(Hypergraph::complete(n, 2)?))
    }

    pub fn from_hypergraph(h: Hypergraph) -> Result<Self> {
        if h.r != 2 {
            return Err(Error::UniformityMismatch { pattern: h.r, host: 2 });
        }
        Ok(Graph(h))
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// Edges as `(u, v)` with `u < v`, in canonical order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0
            .edges
            .iter()
            .map(|e| {
                let m = e.mask();
                let u = m.trailing_zeros() as usize;
                let v = 63 - m.leading_zeros() as usize;
                (u, v)
            })
            .collect()
    }

    /// Neighborhood bitmasks, one per vertex.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.0.n];
        for (u, v) in self.pairs() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn vertex_deleted(&self, v: usize) -> Graph {
        Graph(self.0.delete_vertices(Edge(1 << v)))
    }
}

impl Deref for Graph {
    type Target = Hypergraph;

    fn deref(&self) -> &Hypergraph {
        &self.0
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.0.n, self.pairs())
    }
}

/// A vertex coloring; color 0 is red and color 1 is blue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

pub const RED: usize = 0;
pub const BLUE: usize = 1;

impl Coloring {
    /// True if no edge of `h` is monochromatic.
    pub fn is_proper(&self, h: &Hypergraph) -> bool {
        self.assignment.len() == h.n()
            && self.assignment.iter().all(|&c| c < self.num_colors)
            && h.edges().iter().all(|e| {
                let mut colors = e.vertices().map(|v| self.assignment[v]);
                let first = colors.next();
                colors.any(|c| Some(c) != first)
            })
    }

    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&v| self.assignment[v] == color).collect()
    }
}

/// A non-negative count or infinity; infinity exceeds every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    Infinity,
}

impl ExtendedCount {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedCount::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(v) => Some(v),
            ExtendedCount::Infinity => None,
        }
    }
}

impl From<u64> for ExtendedCount {
    fn from(v: u64) -> Self {
        ExtendedCount::Finite(v)
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(v) => write!(f, "{v}"),
            ExtendedCount::Infinity => write!(f, "inf"),
        }
    }
}
