//! Named graphs and hypergraphs used as forbidden patterns.

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};

/// `M_s`: `s` disjoint edges on `2s` vertices.
pub fn matching(s: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..s).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::new(2 * s, &edges).expect("matching")
}

/// `M_s` plus one isolated vertex.
pub fn matching_plus_vertex(s: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..s).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::new(2 * s + 1, &edges).expect("matching")
}

pub fn complete_graph(k: usize) -> Graph {
    Graph::complete(k).expect("complete graph")
}

/// `K_{p,q}` with the `p`-side on `0..p`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::with_capacity(p * q);
    for a in 0..p {
        for b in p..p + q {
            edges.push((a, b));
        }
    }
    Graph::new(p + q, &edges).expect("complete bipartite")
}

/// Path on `k` vertices.
pub fn path(k: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges).expect("path")
}

/// Cycle on `k >= 3` vertices.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::params(format!("cycle needs at least 3 vertices, got {k}")));
    }
    let mut edges: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((0, k - 1));
    Graph::new(k, &edges)
}

/// Star `S_l` with `l` edges: center 0, leaves `1..=l`.
pub fn star(l: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=l).map(|i| (0, i)).collect();
    Graph::new(l + 1, &edges).expect("star")
}

/// The Fano plane on points `0..7`.
pub fn fano_plane() -> Hypergraph {
    Hypergraph::new(
        7,
        3,
        [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]],
    )
    .expect("fano plane")
}

/// The Fano plane with one point removed: lines 012, 034, 135, 245.
pub fn fano_minus_point() -> Hypergraph {
    Hypergraph::new(6, 3, [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]]).expect("F6")
}

/// Complete r-graph `K_k^(r)`.
pub fn complete_hypergraph(k: usize, r: usize) -> Hypergraph {
    Hypergraph::complete(k, r).expect("complete hypergraph")
}

/// Parses the pattern shorthand: `M<k>`, `K<k>`, `K<p>,<q>`, `P<k>`, `C<k>`, `S<k>`.
pub fn parse_shorthand(text: &str) -> Result<Graph> {
    let bad = || Error::params(format!("unrecognized pattern {text:?}"));
    let text = text.trim();
    let mut chars = text.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let rest = chars.as_str();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match kind.to_ascii_uppercase() {
        'M' => Ok(matching(num(rest)?)),
        'K' => match rest.split_once(',') {
            Some((p, q)) => {
                let (p, q) = (num(p)?, num(q)?);
                Ok(complete_bipartite(p.min(q), p.max(q)))
            }
            None => Ok(complete_graph(num(rest)?)),
        },
        'P' => Ok(path(num(rest)?)),
        'C' => cycle(num(rest)?),
        'S' => Ok(star(num(rest)?)),
        _ => Err(bad()),
    }
}
