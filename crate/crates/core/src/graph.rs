//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! word per vertex.

use std::fmt;

use crate::error::{Error, Result};
use crate::proportion::Threshold;

/// Largest order any [`Graph`] may have.
pub const MAX_VERTICES: usize = 64;

pub type Edge = (usize, usize);

/// Vertices are `0..n`. `adj[v]` has bit `u` set iff `uv` is an edge; the
/// relation is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Adds `uv`; rejects loops, duplicates and out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub(crate) fn toggle_edge_unchecked(&mut self, u: usize, v: usize) {
        self.adj[u] ^= 1 << v;
        self.adj[v] ^= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bit mask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn vertex_mask(&self) -> u64 {
        mask_below(self.n)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !mask_below(u + 1)).map(move |v| (u, v)))
    }

    pub fn edge_list(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_masks(self.vertex_mask()).len() == 1
    }

    /// Connected components of the subgraph induced on `alive`, each as a
    /// vertex mask, ordered by lowest vertex.
    pub(crate) fn component_masks(&self, alive: u64) -> Vec<u64> {
        let mut rest = alive & self.vertex_mask();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.component_of(rest.trailing_zeros() as usize, rest);
            rest &= !c;
            out.push(c);
        }
        out
    }

    /// Component containing `start` in the subgraph induced on `alive`.
    pub(crate) fn component_of(&self, start: usize, alive: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= alive & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self) -> ComponentSummary {
        ComponentSummary::from_orders(
            self.component_masks(self.vertex_mask())
                .into_iter()
                .map(|c| c.count_ones() as usize)
                .collect(),
        )
    }

    /// `labels[v]` numbers the component of `v`, components ordered by their
    /// smallest vertex.
    pub fn component_labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, c) in self
            .component_masks(self.vertex_mask())
            .into_iter()
            .enumerate()
        {
            for v in Bits(c) {
                labels[v] = i;
            }
        }
        labels
    }

    /// Induced subgraph on `keep`, relabelled `0..` in increasing order.
    pub(crate) fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let labels: Vec<usize> = Bits(keep).collect();
        let mut index = [usize::MAX; 64];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let adj = labels
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0u64, |acc, u| acc | 1 << index[u]))
            .collect();
        Graph {
            n: labels.len(),
            adj,
        }
    }

    /// Applies `perm`: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Vertices of `other` are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let mut g = Graph::new(self.n + other.n)?;
        for (u, v) in self.edges() {
            g.toggle_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.toggle_edge_unchecked(u + self.n, v + self.n);
        }
        Ok(g)
    }

    // Standard families. These panic above MAX_VERTICES.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path order within bound")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(0, n - 1).expect("closing edge");
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n)
            .expect("complete graph order within bound")
            .complement()
    }

    /// Parts are `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b).expect("bipartite order within bound");
        for u in 0..a {
            for v in a..a + b {
                g.toggle_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edge_list())
    }
}

/// Multiset of component orders, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub component_orders: Vec<usize>,
    pub largest: usize,
}

impl ComponentSummary {
    fn from_orders(mut orders: Vec<usize>) -> Self {
        orders.sort_unstable_by(|a, b| b.cmp(a));
        let largest = orders.first().copied().unwrap_or(0);
        ComponentSummary {
            component_orders: orders,
            largest,
        }
    }

    pub fn total(&self) -> usize {
        self.component_orders.iter().sum()
    }
}

/// Every component has order at most `t.tau()`. The empty graph qualifies.
/// `t` must come from the order before any removals.
pub fn is_failure_state(g: &Graph, t: Threshold) -> bool {
    t.admits(g.components().largest)
}

/// `g - s`: induced subgraph on the vertices not in `s`, relabelled in
/// increasing order of original label.
pub fn remove_vertices(g: &Graph, s: &[usize]) -> Result<Graph> {
    let mut drop = 0u64;
    for &v in s {
        g.check_vertex(v)?;
        drop |= 1 << v;
    }
    Ok(g.induced(g.vertex_mask() & !drop))
}

/// `g - s` for an edge set; each edge must be present.
pub fn remove_edges(g: &Graph, s: &[Edge]) -> Result<Graph> {
    let mut h = g.clone();
    for &(u, v) in s {
        if !h.has_edge(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        h.toggle_edge_unchecked(u, v);
    }
    Ok(h)
}

pub fn complement(g: &Graph) -> Graph {
    g.complement()
}
