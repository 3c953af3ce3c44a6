//! Generators for the extremal configurations behind the Turán formulas.
//!
//! Distinguished vertex sets (the clique, the core `S`, the set `A`) always
//! take the lowest labels, and larger parts of multipartite graphs take
//! lower label ranges than smaller ones.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::formulas::binom;
use crate::hypergraph::{k_subsets, Edge, Graph, Hypergraph};
use crate::search;

/// A generated object together with the edge count its construction predicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedConstruction {
    pub name: String,
    pub parameters: BTreeMap<String, usize>,
    pub object: Hypergraph,
    pub predicted_edges: u64,
}

impl NamedConstruction {
    /// True if the object has exactly the predicted number of edges.
    pub fn consistent(&self) -> bool {
        self.object.edge_count() as u64 == self.predicted_edges
    }

    /// One-line `#` comment naming the construction and its parameters.
    pub fn header(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("# {} {}", self.name, params.join(" "))
    }
}

/// Names accepted by [`build`].
pub const NAMES: &[&str] = &[
    "turan",
    "gnks",
    "clique-plus-isolated",
    "star-core",
    "thm22",
    "thm25",
    "thm26",
    "thm26ii",
    "prop28",
];

/// Builds a construction by name from a parameter map (keys `n`, `r`, `s`,
/// `k`, `p`, `q`). `thm22` uses the complete `r`-graph on `s` vertices as
/// its base, and `thm26ii` takes its base graph from
/// [`search::extremal_shadow_free`].
pub fn build(name: &str, params: &BTreeMap<String, usize>) -> Result<NamedConstruction> {
    let get = |key: &str| {
        params
            .get(key)
            .copied()
            .ok_or_else(|| Error::params(format!("construction {name} needs --{key}")))
    };
    let (object, used, predicted): (Hypergraph, Vec<&str>, u64) = match name {
        "turan" => {
            let (n, k) = (get("n")?, get("k")?);
            let g = turan_graph(n, k)?;
            (g.into_hypergraph(), vec!["n", "k"], turan_edges(n, k))
        }
        "gnks" => {
            let (n, k, s) = (get("n")?, get("k")?, get("s")?);
            let g = gnks_graph(n, k, s)?;
            let predicted = multipartite_edges(&gnks_parts(n, k, s));
            (g.into_hypergraph(), vec!["n", "k", "s"], predicted)
        }
        "clique-plus-isolated" => {
            let (n, r, s) = (get("n")?, get("r")?, get("s")?);
            (clique_plus_isolated(n, r, s)?, vec!["n", "r", "s"], count(binom(2 * s + 1, r))?)
        }
        "star-core" => {
            let (n, r, s) = (get("n")?, get("r")?, get("s")?);
            let h = star_core(n, r, s)?;
            let predicted = binom(s, r - 1) * (n - s) as u128 + binom(s, r);
            (h, vec!["n", "r", "s"], count(predicted)?)
        }
        "thm22" => {
            let (n, r, s) = (get("n")?, get("r")?, get("s")?);
            let h = thm22_construction(&Hypergraph::complete(s, r)?, n)?;
            let predicted = binom(s, r) + binom(s, r - 1) * (n - s) as u128;
            (h, vec!["n", "r", "s"], count(predicted)?)
        }
        "thm25" => {
            let (n, r, p) = (get("n")?, get("r")?, get("p")?);
            let h = thm25_construction(n, r, p)?;
            let predicted = binom(p - 1, r - 1) * (n + 1 - p) as u128;
            (h, vec!["n", "r", "p"], count(predicted)?)
        }
        "thm26" => {
            let (n, r, p, q) = (get("n")?, get("r")?, get("p")?, get("q")?);
            let h = thm26_construction(n, r, p, q)?;
            (h, vec!["n", "r", "p", "q"], ((p - 1) * (n - r)) as u64)
        }
        "thm26ii" => {
            let (n, r, s, p, q) = (get("n")?, get("r")?, get("s")?, get("p")?, get("q")?);
            let g = search::extremal_shadow_free(s, r, p, q)?.witness;
            let h = thm26ii_construction(n, r, p, &g)?;
            let predicted = ((p - 1).min(g.edge_count()) * (n - s)) as u64;
            (h, vec!["n", "r", "s", "p", "q"], predicted)
        }
        "prop28" => {
            let (n, r) = (get("n")?, get("r")?);
            let h = prop28_construction(n, r)?;
            (h, vec!["n", "r"], (n + 1 - r) as u64)
        }
        _ => return Err(Error::params(format!("unknown construction {name}"))),
    };
    let parameters = used.into_iter().map(|k| (k.to_string(), params[k])).collect();
    Ok(NamedConstruction { name: name.to_string(), parameters, object, predicted_edges: predicted })
}

fn count(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::params("edge count overflows u64"))
}

/// Complete multipartite graph with the given part sizes, parts occupying
/// consecutive label ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(size));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}

/// Part sizes of `T(n, k)`, larger parts first.
pub fn turan_parts(n: usize, k: usize) -> Vec<usize> {
    balanced(n, k)
}

fn balanced(total: usize, k: usize) -> Vec<usize> {
    (0..k).map(|i| total / k + usize::from(i < total % k)).collect()
}

fn multipartite_edges(parts: &[usize]) -> u64 {
    let n: usize = parts.iter().sum();
    let inside: usize = parts.iter().map(|&p| p * p.saturating_sub(1) / 2).sum();
    (n * n.saturating_sub(1) / 2 - inside) as u64
}

/// Edge count of `T(n, k)` from the part sizes.
pub fn turan_edges(n: usize, k: usize) -> u64 {
    multipartite_edges(&turan_parts(n, k))
}

/// The Turán graph `T(n, k)`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::params("Turán graph needs k >= 1"));
    }
    complete_multipartite(&turan_parts(n, k))
}

/// Part sizes of `G(n, k, s)`: one part of order `n - s` followed by `k - 1`
/// almost balanced parts summing to `s`.
pub fn gnks_parts(n: usize, k: usize, s: usize) -> Vec<usize> {
    let mut parts = vec![n - s];
    parts.extend(balanced(s, k - 1));
    parts
}

/// `G(n, k, s)`.
pub fn gnks_graph(n: usize, k: usize, s: usize) -> Result<Graph> {
    if k < 2 || s == 0 || n <= s {
        return Err(Error::params(format!("G(n,k,s) needs k >= 2 and n > s >= 1, got n={n} k={k} s={s}")));
    }
    complete_multipartite(&gnks_parts(n, k, s))
}

/// Complete `r`-graph on `0..2s+1` plus isolated vertices up to `n`.
pub fn clique_plus_isolated(n: usize, r: usize, s: usize) -> Result<Hypergraph> {
    if n < 2 * s + 1 || r == 0 || r > 2 * s + 1 {
        return Err(Error::params(format!("clique_plus_isolated needs n >= 2s+1 >= r >= 1, got n={n} r={r} s={s}")));
    }
    Hypergraph::from_edges(n, r, k_subsets(2 * s + 1, r))
}

/// All `r`-sets meeting `S = 0..s` in at least `r - 1` vertices.
pub fn star_core(n: usize, r: usize, s: usize) -> Result<Hypergraph> {
    if r < 2 || s + 1 < r || n < s {
        return Err(Error::params(format!("star_core needs n >= s >= r-1, r >= 2, got n={n} r={r} s={s}")));
    }
    thm22_construction(&Hypergraph::complete(s, r)?, n)
}

/// `h0` on `0..s` plus every edge made of one vertex outside `0..s` and
/// `r - 1` vertices of `0..s`.
pub fn thm22_construction(h0: &Hypergraph, n: usize) -> Result<Hypergraph> {
    let (s, r) = (h0.n(), h0.r());
    if r < 2 || r > s + 1 || n < s {
        return Err(Error::params(format!("base graph must have r <= s+1 and n >= s, got n={n} r={r} s={s}")));
    }
    let mut edges = h0.edges().to_vec();
    edges.extend(cross_edges(&k_subsets(s, r - 1), s, n));
    Hypergraph::from_edges(n, r, edges)
}

fn cross_edges(bases: &[Edge], from: usize, n: usize) -> Vec<Edge> {
    let mut out = Vec::with_capacity(bases.len() * n.saturating_sub(from));
    for v in from..n {
        for b in bases {
            out.push(Edge::from_mask(b.mask() | 1 << v));
        }
    }
    out
}

/// With `A = 0..p-1`, every `r`-set with exactly `r - 1` vertices in `A`.
pub fn thm25_construction(n: usize, r: usize, p: usize) -> Result<Hypergraph> {
    if r < 2 || p < r || n + 1 < p {
        return Err(Error::params(format!("thm25 needs p >= r >= 2 and n >= p-1, got n={n} r={r} p={p}")));
    }
    Hypergraph::from_edges(n, r, cross_edges(&k_subsets(p - 1, r - 1), p - 1, n))
}

/// With `A = 0..r` and `A_i = A - {i}` for `i < p - 1`, every edge
/// `A_i + v` for `v` outside `A`.
pub fn thm26_construction(n: usize, r: usize, p: usize, q: usize) -> Result<Hypergraph> {
    if p == 0 || q == 0 || r < p || r + 1 > p + q || n < r || r < 2 {
        return Err(Error::params(format!(
            "thm26 needs p <= r <= p+q-1 and n >= r, got n={n} r={r} p={p} q={q}"
        )));
    }
    let a = (1u64 << r) - 1;
    let bases: Vec<Edge> = (0..p - 1).map(|i| Edge::from_mask(a & !(1 << i))).collect();
    Hypergraph::from_edges(n, r, cross_edges(&bases, r, n))
}

/// The first `min(p - 1, e(g))` edges of the `(r-1)`-graph `g` on `0..s`,
/// each joined with every vertex outside `0..s`.
pub fn thm26ii_construction(n: usize, r: usize, p: usize, g: &Hypergraph) -> Result<Hypergraph> {
    let s = g.n();
    if r < 3 || g.r() != r - 1 || n < s || p == 0 {
        return Err(Error::params(format!(
            "thm26ii needs an (r-1)-graph on s <= n vertices, got n={n} r={r} p={p} g=({}, {})",
            g.n(),
            g.r()
        )));
    }
    let bases: Vec<Edge> = g.edges().iter().copied().take(p - 1).collect();
    Hypergraph::from_edges(n, r, cross_edges(&bases, s, n))
}

/// The `(r-1)`-set `0..r-1` joined with every other vertex.
pub fn prop28_construction(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::params(format!("prop28 needs n >= r >= 2, got n={n} r={r}")));
    }
    let base = Edge::from_mask((1u64 << (r - 1)) - 1);
    Hypergraph::from_edges(n, r, cross_edges(&[base], r - 1, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_examples() {
        assert_eq!(turan_parts(3, 2), vec![2, 1]);
        assert_eq!(turan_graph(3, 2).unwrap().edge_count(), 2);
        assert_eq!(turan_parts(5, 3), vec![2, 2, 1]);
        assert_eq!(turan_graph(5, 3).unwrap().edge_count(), 8);
        assert_eq!(turan_graph(6, 1).unwrap().edge_count(), 0);
        assert!(turan_graph(3, 0).is_err());
    }

    #[test]
    fn gnks_examples() {
        let g = gnks_graph(5, 2, 1).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1, 4]);
        assert_eq!(gnks_parts(7, 3, 2), vec![5, 1, 1]);
        assert_eq!(gnks_graph(7, 3, 2).unwrap().edge_count(), 11);
        assert!(gnks_graph(3, 2, 3).is_err());
        assert!(gnks_graph(5, 1, 2).is_err());
    }

    #[test]
    fn clique_and_star_core() {
        assert_eq!(clique_plus_isolated(6, 3, 2).unwrap().edge_count(), 10);
        assert_eq!(clique_plus_isolated(5, 3, 2).unwrap().degrees().iter().filter(|&&d| d == 0).count(), 0);
        assert_eq!(clique_plus_isolated(8, 4, 2).unwrap().edge_count(), 5);
        assert!(clique_plus_isolated(4, 3, 2).is_err());
        assert_eq!(star_core(13, 3, 2).unwrap().edge_count(), 11);
        assert_eq!(star_core(4, 3, 4).unwrap().edge_count(), 4);
        assert_eq!(star_core(6, 3, 3).unwrap().edge_count(), 10);
        assert!(star_core(5, 5, 2).is_err());
    }

    #[test]
    fn thm22_examples() {
        let empty = Hypergraph::empty(3, 3).unwrap();
        let full = Hypergraph::complete(3, 3).unwrap();
        let cross = thm22_construction(&empty, 6).unwrap();
        let star = star_core(6, 3, 3).unwrap();
        assert_eq!(cross.edge_count() + 1, star.edge_count());
        assert_eq!(thm22_construction(&full, 6).unwrap(), star);
        let one = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(thm22_construction(&one, 6).unwrap().edge_count(), 10);
    }

    #[test]
    fn bipartite_constructions() {
        assert_eq!(thm25_construction(7, 3, 3).unwrap().edge_count(), 5);
        assert_eq!(thm25_construction(8, 3, 4).unwrap().edge_count(), 15);
        assert_eq!(thm26_construction(6, 3, 2, 2).unwrap().edge_count(), 3);
        assert_eq!(thm26_construction(3, 3, 2, 2).unwrap().edge_count(), 0);
        let h = thm26_construction(8, 4, 3, 2).unwrap();
        assert!(h.degrees().iter().filter(|&&d| d >= 3).count() <= 4);
        assert!(thm26_construction(8, 5, 2, 2).is_err());
        assert_eq!(prop28_construction(4, 4).unwrap().edge_count(), 1);
        let h = prop28_construction(10, 4).unwrap();
        assert_eq!(h.edge_count(), 7);
        assert!(h.degrees().iter().filter(|&&d| d >= 2).count() <= 3);
    }

    #[test]
    fn thm26ii_examples() {
        let empty = Hypergraph::empty(4, 3).unwrap();
        assert_eq!(thm26ii_construction(8, 4, 3, &empty).unwrap().edge_count(), 0);
        let one = Hypergraph::new(4, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(thm26ii_construction(8, 4, 3, &one).unwrap().edge_count(), 4);
    }

    #[test]
    fn predicted_counts_over_sweep() {
        let mut params = BTreeMap::new();
        for n in 1..=12 {
            for r in 2..=5 {
                for s in 1..=4 {
                    for p in 1..=4 {
                        for q in 1..=4 {
                            for k in 1..=5 {
                                params.clear();
                                for (key, v) in [("n", n), ("r", r), ("s", s), ("p", p), ("q", q), ("k", k)] {
                                    params.insert(key.to_string(), v);
                                }
                                for name in NAMES.iter().filter(|&&nm| nm != "thm26ii") {
                                    if let Ok(c) = build(name, &params) {
                                        assert!(c.consistent(), "{name} {params:?}");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
