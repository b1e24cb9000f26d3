//! Simple undirected graphs and the generators for the extremal families.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} has degree {degree} > cap {cap}")]
    DegreeExceedsCap {
        vertex: usize,
        degree: usize,
        cap: usize,
    },
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot connectify: {0}")]
    Connectify(String),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as `(u, v)` with `u < v` in a sorted set, so iteration order
/// (and everything derived from it) is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        let e = (u.min(v), u.max(v));
        if !self.edges.insert(e) {
            return Err(GraphError::DuplicateEdge(e.0, e.1));
        }
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Non-increasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Albertson irregularity: the sum of `|d(u) - d(v)|` over all edges.
    pub fn irregularity(&self) -> u64 {
        let deg = self.degrees();
        self.edges
            .iter()
            .map(|&(u, v)| deg[u].abs_diff(deg[v]) as u64)
            .sum()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

pub fn irregularity(g: &Graph) -> u64 {
    g.irregularity()
}

/// `K_{a,b}`: vertices `0..a` form one side, `a..a+b` the other.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.edges.insert((u, v));
        }
    }
    g
}

/// Split graph `S_{p,n-p}`: a clique on `0..p` completely joined to an
/// independent set on `p..n`.
pub fn split_graph(p: usize, n: usize) -> Result<Graph, GraphError> {
    if p > n {
        return Err(GraphError::InvalidParameters(format!(
            "clique size {p} exceeds order {n}"
        )));
    }
    let mut g = Graph::new(n);
    for u in 0..p {
        for v in u + 1..n {
            g.edges.insert((u, v));
        }
    }
    Ok(g)
}

/// Circulant `k`-regular graph on `n` vertices: `v` is joined to `v ± 1, …,
/// v ± ⌊k/2⌋ (mod n)` and, for odd `k`, to the antipodal vertex `v + n/2`.
pub fn regular_graph(k: usize, n: usize) -> Result<Graph, GraphError> {
    if k >= n && !(k == 0 && n == 0) {
        return Err(GraphError::InvalidParameters(format!(
            "no {k}-regular simple graph on {n} vertices (need k < n)"
        )));
    }
    if (k * n) % 2 == 1 {
        return Err(GraphError::InvalidParameters(format!(
            "k·n = {} is odd",
            k * n
        )));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        for s in 1..=k / 2 {
            let w = (v + s) % n;
            g.edges.insert((v.min(w), v.max(w)));
        }
        if k % 2 == 1 {
            let w = (v + n / 2) % n;
            g.edges.insert((v.min(w), v.max(w)));
        }
    }
    Ok(g)
}

/// Vertices of `h` are shifted by `g.order()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n;
    let mut out = g.clone();
    out.n += h.n;
    out.edges
        .extend(h.edges().map(|(u, v)| (u + shift, v + shift)));
    out
}

/// Makes a disconnected graph connected by cross-component edge swaps
/// `uv, pq -> uq, pv`, keeping every vertex degree and the multiset of
/// endpoint-degree pairs (and hence the degree profile and irregularity).
///
/// Each step scans component pairs in index order, then edge pairs in
/// lexicographic order (both orientations of the second edge), and applies
/// the first swap that preserves the profile and lowers the component count.
pub fn connectify(g: &Graph) -> Result<Graph, GraphError> {
    let comps = g.components();
    if comps.len() < 2 {
        return Err(GraphError::Connectify("graph is already connected".into()));
    }
    if let Some(c) = comps.iter().find(|c| c.len() == 1) {
        return Err(GraphError::Connectify(format!(
            "vertex {} is an edgeless component",
            c[0]
        )));
    }

    let deg = g.degrees();
    let mut cur = g.clone();
    loop {
        let comps = cur.components();
        if comps.len() == 1 {
            return Ok(cur);
        }
        let next = merge_step(&cur, &comps, &deg).ok_or_else(|| {
            GraphError::Connectify(format!(
                "no degree-profile preserving swap joins any of the {} components",
                comps.len()
            ))
        })?;
        cur = next;
    }
}

fn merge_step(g: &Graph, comps: &[Vec<usize>], deg: &[usize]) -> Option<Graph> {
    let mut comp_of = vec![0; g.n];
    for (c, verts) in comps.iter().enumerate() {
        for &v in verts {
            comp_of[v] = c;
        }
    }
    let mut comp_edges = vec![Vec::new(); comps.len()];
    for (u, v) in g.edges() {
        comp_edges[comp_of[u]].push((u, v));
    }
    let pair = |a: usize, b: usize| (deg[a].min(deg[b]), deg[a].max(deg[b]));

    for a in 0..comps.len() {
        for b in a + 1..comps.len() {
            for &(u, v) in &comp_edges[a] {
                for &(s, t) in &comp_edges[b] {
                    for (p, q) in [(s, t), (t, s)] {
                        let mut before = [pair(u, v), pair(p, q)];
                        let mut after = [pair(u, q), pair(p, v)];
                        before.sort_unstable();
                        after.sort_unstable();
                        if before != after || g.has_edge(u, q) || g.has_edge(p, v) {
                            continue;
                        }
                        let mut h = g.clone();
                        h.edges.remove(&(u, v));
                        h.edges.remove(&(s, t));
                        h.edges.insert((u.min(q), u.max(q)));
                        h.edges.insert((p.min(v), p.max(v)));
                        if h.components().len() < comps.len() {
                            return Some(h);
                        }
                    }
                }
            }
        }
    }
    None
}
