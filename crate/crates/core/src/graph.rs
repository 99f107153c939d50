//! Simple undirected graphs, derived graphs, and BFS distance oracles.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::IntMatrix;

/// A finite simple undirected graph with stable vertex indices `0..n`.
///
/// Edges are kept in canonical order: `(u, v)` with `u < v`, sorted
/// lexicographically. The subdivision vertex ordering relies on this.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    connected: bool,
}

impl Graph {
    /// Validates and builds a graph. Disconnected graphs are accepted here and
    /// flagged; distance and spectral operations reject them.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = BTreeSet::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if !canon.insert(e) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
        }
        let edges: Vec<_> = canon.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let mut g = Self {
            n,
            adjacency,
            edges,
            connected: false,
        };
        g.connected = n == 0 || g.bfs(0).iter().all(Option::is_some);
        Ok(g)
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v` with 0-based indices. `#` starts a comment; LF and CRLF
    /// line endings are both accepted.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                let tok = it.next().ok_or_else(|| Error::Parse {
                    line,
                    msg: "expected two integers".into(),
                })?;
                tok.parse().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{tok}` is not a nonnegative integer"),
                })
            };
            let pair = (next()?, next()?);
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "trailing tokens".into(),
                });
            }
            Ok(pair)
        };

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut last_line = hline;
        for (line, l) in lines {
            edges.push(parse_pair(line, l)?);
            last_line = line;
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Self::from_edges(n, edges)
    }

    /// Serialises in the edge-list format, edges in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.connected {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// `Some(k)` iff every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency.iter().all(|a| a.len() == k).then_some(k)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut a = IntMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1;
            a[(v, u)] = 1;
        }
        a
    }

    /// `n × m` vertex-edge incidence matrix; column `j` is `edges()[j]`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.n, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            r[(u, j)] = 1;
            r[(v, j)] = 1;
        }
        r
    }

    /// Line graph: vertex `i` is `edges()[i]`, adjacent iff the edges share
    /// an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n {
            let incident: Vec<usize> = self.adjacency[v]
                .iter()
                .map(|&w| self.edge_position(v, w))
                .collect();
            for (a, &e) in incident.iter().enumerate() {
                for &f in &incident[a + 1..] {
                    edges.push((e, f));
                }
            }
        }
        // simple graphs: two distinct edges share at most one endpoint
        Graph::from_edges(self.edges.len(), edges).expect("line graph of a simple graph is simple")
    }

    /// Subdivision graph. Vertices `0..n` are the original vertices in order;
    /// vertex `n + j` sits on `edges()[j]`.
    pub fn subdivision(&self) -> Graph {
        let n = self.n;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .flat_map(|(j, &(u, v))| [(u, n + j), (v, n + j)]);
        Graph::from_edges(n + self.edges.len(), edges).expect("subdivision of a simple graph is simple")
    }

    fn edge_position(&self, u: usize, v: usize) -> usize {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).expect("edge present")
    }

    /// All-pairs distances by BFS from every vertex.
    pub fn distance_matrix(&self) -> Result<IntMatrix> {
        self.ensure_connected()?;
        let mut d = IntMatrix::zeros(self.n, self.n);
        for s in 0..self.n {
            for (t, dist) in self.bfs(s).into_iter().enumerate() {
                d[(s, t)] = dist.ok_or(Error::Disconnected)? as i64;
            }
        }
        Ok(d)
    }

    /// Largest BFS eccentricity.
    pub fn diameter(&self) -> Result<usize> {
        self.ensure_connected()?;
        Ok((0..self.n)
            .map(|s| self.bfs(s).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0))
    }

    /// 0/1 matrix of vertex pairs at distance exactly `i`.
    pub fn shell_matrix(&self, i: usize) -> Result<IntMatrix> {
        let d = self.distance_matrix()?;
        let diameter = d.iter().copied().max().unwrap_or(0) as usize;
        if i > diameter {
            return Err(Error::ShellOutOfRange { index: i, diameter });
        }
        Ok(shell_of(&d, i))
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            queue.clear();
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        // even cycle when dist[w] == dist[u] + 1, odd when equal
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-colouring with vertex 0 in the first part, if one exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut colour = vec![None; self.n];
        for s in 0..self.n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u]?;
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                a.push(v);
            } else {
                b.push(v);
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }
}

/// Shell matrix `A_i` read off a distance matrix.
pub fn shell_of(distance: &IntMatrix, i: usize) -> IntMatrix {
    distance.map(|&d| i64::from(d == i as i64))
}

/// Simple named graphs used by tests and the CLI.
pub mod named {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Graph::from_edges(n, edges).expect("valid complete graph")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
        Graph::from_edges(a + b, edges).expect("valid complete bipartite graph")
    }
}
