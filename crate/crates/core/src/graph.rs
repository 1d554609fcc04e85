//! Simple undirected graphs on `[n]` and the combinatorics the stable set
//! ring needs: connected components, maximal cliques, clique purity,
//! stable sets, and perfectness testing by odd hole / odd antihole search.
//!
//! Vertices are labeled `1..=n`. Adjacency is stored as bitmasks, which
//! bounds `n` by 64; perfectness testing is further capped (see
//! [`PERFECT_VERTEX_CAP`]) because the search is exponential.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count accepted by [`is_perfect`].
pub const PERFECT_VERTEX_CAP: usize = 12;

/// Largest vertex count for which [`stable_sets`] will enumerate subsets.
pub const STABLE_SET_VERTEX_CAP: usize = 20;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("graphs are limited to 64 vertices, got {0}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    LoopEdge(usize),
    #[error(
        "graph has {n} vertices, above the perfectness-test cap {cap}; \
         pass an assume-perfect flag to skip the check"
    )]
    PerfectnessCapExceeded { n: usize, cap: usize },
    #[error("graph has {n} vertices, above the subset-enumeration cap {cap}")]
    EnumerationCapExceeded { n: usize, cap: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// Simple undirected graph with vertex set `{1, ..., n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Deserialize)]
struct GraphJson {
    n: usize,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from 1-based edge pairs. Loops are rejected; duplicate
    /// edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > 64 {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj[u - 1] |= 1 << (v - 1);
            adj[v - 1] |= 1 << (u - 1);
        }
        Ok(Self { n, adj })
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, &[])
    }

    /// Parses the text format: first line `n`, then one `i j` edge per line.
    /// Blank lines and `#` comments are skipped.
    pub fn from_text(input: &str) -> Result<Self, GraphError> {
        let mut lines = input
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "empty input".into(),
        })?;
        let n: usize = header.parse().map_err(|_| GraphError::Parse {
            line,
            message: format!("expected vertex count, got {header:?}"),
        })?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.ok_or(GraphError::Parse {
                    line,
                    message: "expected two vertex labels".into(),
                })?
                .parse()
                .map_err(|_| GraphError::Parse {
                    line,
                    message: format!("bad vertex label in {l:?}"),
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line,
                    message: format!("trailing tokens in {l:?}"),
                });
            }
            edges.push((u, v));
        }
        Self::new(n, &edges)
    }

    /// Parses `{"n": int, "edges": [[i, j], ...]}`.
    pub fn from_json(input: &str) -> Result<Self, GraphError> {
        let parsed: GraphJson =
            serde_json::from_str(input).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::new(parsed.n, &parsed.edges)
    }

    /// Accepts either the text or the JSON format, sniffing the first byte.
    pub fn parse(input: &str) -> Result<Self, GraphError> {
        if input.trim_start().starts_with('{') {
            Self::from_json(input)
        } else {
            Self::from_text(input)
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v
            && u >= 1
            && v >= 1
            && u <= self.n
            && v <= self.n
            && self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v - 1];
        (1..=self.n).filter(move |&u| mask >> (u - 1) & 1 == 1)
    }

    /// Edges as sorted 1-based pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in (u + 1)..=self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let full = mask_of_first(self.n);
        let adj = (0..self.n)
            .map(|i| (full & !self.adj[i]) & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on the given 1-based vertices, relabeled so that
    /// `vertices[i]` becomes `i + 1`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut adj = vec![0u64; k];
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate() {
                if i != j && self.has_edge(u, v) {
                    adj[i] |= 1 << j;
                }
            }
        }
        Graph { n: k, adj }
    }

    #[cfg(test)]
    pub(crate) fn adj_masks(&self) -> &[u64] {
        &self.adj
    }
}

fn mask_of_first(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A connected component: its original 1-based labels plus the induced
/// subgraph relabeled in the order of `vertices`.
#[derive(Clone, Debug)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Connected components, ordered by smallest original label. Isolated
/// vertices form singleton components.
pub fn connected_components(g: &Graph) -> Vec<Component> {
    let mut seen = 0u64;
    let mut out = Vec::new();
    for start in 0..g.n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut comp = 1u64 << start;
        loop {
            let mut grown = comp;
            let mut m = comp;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                grown |= g.adj[v];
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        seen |= comp;
        let vertices: Vec<usize> = (1..=g.n).filter(|&v| comp >> (v - 1) & 1 == 1).collect();
        let graph = g.induced(&vertices);
        out.push(Component { vertices, graph });
    }
    out
}

/// All maximal cliques plus the clique number and purity flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    pub maximal_cliques: Vec<Vec<usize>>,
    pub delta: usize,
    pub pure: bool,
}

/// Exhaustive maximal-clique listing (Bron–Kerbosch, greatest-degree pivot,
/// ties to the smallest label). Cliques and the listing are sorted.
pub fn maximal_cliques(g: &Graph) -> CliqueReport {
    let mut cliques_masks: Vec<u64> = Vec::new();
    if g.n > 0 {
        bron_kerbosch(g, 0, mask_of_first(g.n), 0, &mut cliques_masks);
    }
    let mut maximal_cliques: Vec<Vec<usize>> = cliques_masks
        .into_iter()
        .map(|m| (1..=g.n).filter(|&v| m >> (v - 1) & 1 == 1).collect())
        .collect();
    maximal_cliques.sort();
    let delta = maximal_cliques.iter().map(Vec::len).max().unwrap_or(0);
    let pure = maximal_cliques.iter().all(|c| c.len() == delta);
    CliqueReport {
        maximal_cliques,
        delta,
        pure,
    }
}

fn bron_kerbosch(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Greatest-degree pivot from P ∪ X; ties go to the smallest label.
    let mut pivot = usize::MAX;
    let mut best = 0usize;
    let mut px = p | x;
    while px != 0 {
        let v = px.trailing_zeros() as usize;
        px &= px - 1;
        let deg = g.adj[v].count_ones() as usize;
        if pivot == usize::MAX || deg > best {
            pivot = v;
            best = deg;
        }
    }
    let mut candidates = p & !g.adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << v;
        bron_kerbosch(g, r | bit, p & g.adj[v], x & g.adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// All stable (independent) vertex sets, the empty set included, ordered by
/// ascending bitmask of the underlying subset.
pub fn stable_sets(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    Ok(stable_set_masks(g)?
        .into_iter()
        .map(|m| (1..=g.n).filter(|&v| m >> (v - 1) & 1 == 1).collect())
        .collect())
}

pub(crate) fn stable_set_masks(g: &Graph) -> Result<Vec<u64>, GraphError> {
    if g.n > STABLE_SET_VERTEX_CAP {
        return Err(GraphError::EnumerationCapExceeded {
            n: g.n,
            cap: STABLE_SET_VERTEX_CAP,
        });
    }
    let mut out = Vec::new();
    'mask: for mask in 0..(1u64 << g.n) {
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if g.adj[v] & mask != 0 {
                continue 'mask;
            }
        }
        out.push(mask);
    }
    Ok(out)
}

/// Decides perfectness by exhaustive search for an induced odd cycle of
/// length at least five in the graph or its complement.
pub fn is_perfect(g: &Graph) -> Result<bool, GraphError> {
    if g.n > PERFECT_VERTEX_CAP {
        return Err(GraphError::PerfectnessCapExceeded {
            n: g.n,
            cap: PERFECT_VERTEX_CAP,
        });
    }
    Ok(!has_odd_hole(g) && !has_odd_hole(&g.complement()))
}

/// Searches for an induced cycle of odd length >= 5 by extending induced
/// paths whose smallest vertex comes first.
fn has_odd_hole(g: &Graph) -> bool {
    let n = g.n;
    let mut path: Vec<usize> = Vec::with_capacity(n);

    fn extend(g: &Graph, path: &mut Vec<usize>, path_mask: u64) -> bool {
        let v0 = path[0];
        let last = *path.last().unwrap();
        let above_start = !((1u64 << (v0 + 1)) - 1);
        let mut cands = g.adj[last] & !path_mask & above_start;
        while cands != 0 {
            let w = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            let back = g.adj[w] & path_mask;
            let closing = (1u64 << last) | (1u64 << v0);
            if back == 1u64 << last {
                // Induced path extension.
                path.push(w);
                if extend(g, path, path_mask | (1u64 << w)) {
                    return true;
                }
                path.pop();
            } else if back == closing && path.len() >= 4 && (path.len() + 1) % 2 == 1 {
                // w closes an induced cycle of odd length path.len() + 1.
                return true;
            }
        }
        false
    }

    for v0 in 0..n {
        path.clear();
        path.push(v0);
        if extend(g, &mut path, 1u64 << v0) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=n)
            .map(|i| (i, if i == n { 1 } else { i + 1 }))
            .collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(1, 1)]),
            Err(GraphError::LoopEdge(1))
        ));
        assert!(matches!(
            Graph::new(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { vertex: 4, n: 3 })
        ));
        // Duplicate edges collapse silently.
        let g = Graph::new(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2)]);
    }

    #[test]
    fn components_of_triangle_plus_edge() {
        let g = Graph::new(5, &[(1, 2), (2, 3), (1, 3), (4, 5)]).unwrap();
        let comps = connected_components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![1, 2, 3]);
        assert_eq!(comps[1].vertices, vec![4, 5]);
        assert_eq!(comps[0].graph.edges().len(), 3);
        assert_eq!(comps[1].graph.edges(), vec![(1, 2)]);
    }

    #[test]
    fn components_of_path_and_empty_graph() {
        assert_eq!(connected_components(&path(4)).len(), 1);
        let comps = connected_components(&Graph::empty(3).unwrap());
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.vertices.len() == 1));
    }

    #[test]
    fn components_cover_vertices_without_cross_edges() {
        let g = Graph::new(6, &[(1, 4), (2, 5), (4, 6)]).unwrap();
        let comps = connected_components(&g);
        let mut all: Vec<usize> = comps.iter().flat_map(|c| c.vertices.clone()).collect();
        all.sort();
        assert_eq!(all, (1..=6).collect::<Vec<_>>());
        for (i, a) in comps.iter().enumerate() {
            for b in comps.iter().skip(i + 1) {
                for &u in &a.vertices {
                    for &v in &b.vertices {
                        assert!(!g.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn cliques_of_path3() {
        let report = maximal_cliques(&path(3));
        assert_eq!(report.maximal_cliques, vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(report.delta, 2);
        assert!(report.pure);
    }

    #[test]
    fn cliques_of_triangle_with_pendant() {
        let g = Graph::new(4, &[(1, 2), (2, 3), (1, 3), (1, 4)]).unwrap();
        let report = maximal_cliques(&g);
        assert_eq!(report.maximal_cliques, vec![vec![1, 2, 3], vec![1, 4]]);
        assert_eq!(report.delta, 3);
        assert!(!report.pure);
    }

    #[test]
    fn cliques_of_single_vertex() {
        let report = maximal_cliques(&Graph::empty(1).unwrap());
        assert_eq!(report.maximal_cliques, vec![vec![1]]);
        assert_eq!(report.delta, 1);
        assert!(report.pure);
    }

    #[test]
    fn reported_cliques_are_maximal() {
        let g = Graph::new(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]).unwrap();
        let report = maximal_cliques(&g);
        for clique in &report.maximal_cliques {
            for v in 1..=g.n() {
                if clique.contains(&v) {
                    continue;
                }
                let extends = clique.iter().all(|&u| g.has_edge(u, v));
                assert!(!extends, "clique {clique:?} extends by {v}");
            }
        }
    }

    #[test]
    fn stable_sets_small_cases() {
        let triangle = complete(3);
        assert_eq!(
            stable_sets(&triangle).unwrap(),
            vec![vec![], vec![1], vec![2], vec![3]]
        );
        let empty2 = Graph::empty(2).unwrap();
        assert_eq!(
            stable_sets(&empty2).unwrap(),
            vec![vec![], vec![1], vec![2], vec![1, 2]]
        );
        let edge = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(stable_sets(&edge).unwrap(), vec![vec![], vec![1], vec![2]]);
    }

    #[test]
    fn perfectness_examples() {
        assert!(!is_perfect(&cycle(5)).unwrap());
        assert!(is_perfect(&cycle(6)).unwrap());
        assert!(!is_perfect(&cycle(7)).unwrap());
        assert!(is_perfect(&complete(4)).unwrap());
        assert!(is_perfect(&path(4)).unwrap());
        // Complete bipartite 3 + 3.
        let mut edges = Vec::new();
        for u in 1..=3 {
            for v in 4..=6 {
                edges.push((u, v));
            }
        }
        assert!(is_perfect(&Graph::new(6, &edges).unwrap()).unwrap());
        // Antihole: complement of the 7-cycle.
        assert!(!is_perfect(&cycle(7).complement()).unwrap());
    }

    #[test]
    fn perfectness_cap() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(
            is_perfect(&g),
            Err(GraphError::PerfectnessCapExceeded {
                n: 13,
                cap: PERFECT_VERTEX_CAP
            })
        ));
    }

    #[test]
    fn stable_set_enumeration_cap() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(
            stable_sets(&g),
            Err(GraphError::EnumerationCapExceeded {
                n: 21,
                cap: STABLE_SET_VERTEX_CAP
            })
        ));
    }

    #[test]
    fn parse_text_and_json() {
        let g = Graph::parse("3\n1 2\n2 3\n").unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (2, 3)]);
        let g2 = Graph::parse(r#"{"n": 3, "edges": [[1, 2], [2, 3]]}"#).unwrap();
        assert_eq!(g, g2);
        let err = Graph::parse("3\n1 two\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    /// Brute-force chromatic and clique numbers over all vertex subsets;
    /// the definitional perfectness check for small n.
    fn definitional_perfect(g: &Graph) -> bool {
        let n = g.n();
        let adj = g.adj_masks();
        let full = 1usize << n;
        let mut omega = vec![0u8; full];
        for s in 1..full {
            let v = s.trailing_zeros() as usize;
            let rest = s & !(1 << v);
            let with_v = 1 + omega[rest & (adj[v] as usize)];
            omega[s] = with_v.max(omega[rest]);
        }
        let mut independent = vec![false; full];
        independent[0] = true;
        for s in 1..full {
            let v = s.trailing_zeros() as usize;
            let rest = s & !(1 << v);
            independent[s] = independent[rest] && (adj[v] as usize) & rest == 0;
        }
        let mut chi = vec![u8::MAX; full];
        chi[0] = 0;
        for s in 1..full {
            let v0 = s.trailing_zeros() as usize;
            // Iterate subsets of s containing v0.
            let mut t = s;
            let mut best = u8::MAX;
            while t > 0 {
                if t & (1 << v0) != 0 && independent[t] {
                    best = best.min(1 + chi[s & !t]);
                }
                t = (t - 1) & s;
            }
            chi[s] = best;
        }
        (0..full).all(|s| chi[s] == omega[s])
    }

    #[test]
    fn perfectness_matches_definition_up_to_five_vertices() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|u| ((u + 1)..=n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::new(n, &edges).unwrap();
                assert_eq!(
                    is_perfect(&g).unwrap(),
                    definitional_perfect(&g),
                    "disagreement on n={n} mask={mask}"
                );
            }
        }
    }
}
