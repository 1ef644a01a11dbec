//! Exact minimum vertex and edge disconnecting sets.
//!
//! Vertex case: iterative deepening on the set size. Any disconnecting set
//! that contains `S` must also contain a vertex of every component of
//! `G - S` whose order exceeds `tau`, so the search only ever branches on the
//! vertices of one oversized component.
//!
//! Edge case: a minimum edge disconnecting set is exactly the set of edges
//! crossing some partition of `V` into blocks of order at most `tau` that
//! keeps the most edges inside blocks. Components are independent, and each
//! oversized component is solved by branch and bound over block assignments.
//!
//! Witnesses are the lexicographically smallest minimum sets (by sorted
//! element labels), found by deciding elements in label order.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    is_failure_state, mask_below, remove_edges, remove_vertices, Bits, Edge, Graph,
};
use crate::proportion::Proportion;

/// Largest graph the solvers accept.
pub const SOLVER_MAX_VERTICES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Removal {
    Vertices(Vec<usize>),
    Edges(Vec<Edge>),
}

/// A minimum disconnecting set. When `feasible` is false (edge removal with
/// `tau = 0`) the element list is empty and there is no cardinality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisconnectingWitness {
    pub removal: Removal,
    pub feasible: bool,
}

impl DisconnectingWitness {
    pub fn kind(&self) -> WitnessKind {
        match self.removal {
            Removal::Vertices(_) => WitnessKind::Vertex,
            Removal::Edges(_) => WitnessKind::Edge,
        }
    }

    pub fn cardinality(&self) -> Option<usize> {
        if !self.feasible {
            return None;
        }
        Some(match &self.removal {
            Removal::Vertices(v) => v.len(),
            Removal::Edges(e) => e.len(),
        })
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.order() > SOLVER_MAX_VERTICES {
        Err(Error::TooLarge {
            n: g.order(),
            max: SOLVER_MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

/// Oversized components of `g[alive]`.
fn oversized(g: &Graph, alive: u64, tau: usize) -> Vec<u64> {
    g.component_masks(alive)
        .into_iter()
        .filter(|c| c.count_ones() as usize > tau)
        .collect()
}

// ---------------------------------------------------------------- vertices

struct VertexSearch<'a> {
    g: &'a Graph,
    tau: usize,
}

impl VertexSearch<'_> {
    /// Is there `D` with `|D| <= budget`, `D` disjoint from `forbidden`, such
    /// that `g[alive - D]` is a failure state?
    fn feasible(&self, alive: u64, forbidden: u64, budget: usize) -> bool {
        let big = oversized(self.g, alive, self.tau);
        if big.is_empty() {
            return true;
        }
        if big.len() > budget {
            return false;
        }
        let Some(branch) = big
            .iter()
            .map(|&c| c & !forbidden)
            .min_by_key(|c| c.count_ones())
        else {
            return false;
        };
        let mut forbidden = forbidden;
        for v in Bits(branch) {
            if self.feasible(alive & !(1 << v), forbidden, budget - 1) {
                return true;
            }
            // every set containing v was covered by the branch above
            forbidden |= 1 << v;
        }
        false
    }

    /// Greedy: strip the highest-degree vertex of the largest oversized
    /// component until none is left.
    fn greedy_upper_bound(&self) -> usize {
        let mut alive = self.g.vertex_mask();
        let mut removed = 0;
        loop {
            let Some(c) = oversized(self.g, alive, self.tau)
                .into_iter()
                .max_by_key(|c| c.count_ones())
            else {
                return removed;
            };
            let v = Bits(c)
                .max_by_key(|&v| {
                    (
                        (self.g.neighbors(v) & alive).count_ones(),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("oversized component is nonempty");
            alive &= !(1 << v);
            removed += 1;
        }
    }

    fn minimum(&self) -> usize {
        let all = self.g.vertex_mask();
        let lower = oversized(self.g, all, self.tau).len();
        let upper = self.greedy_upper_bound();
        (lower..upper)
            .find(|&k| self.feasible(all, 0, k))
            .unwrap_or(upper)
    }

    fn lexicographic_witness(&self, k: usize) -> Vec<usize> {
        let all = self.g.vertex_mask();
        let mut chosen = 0u64;
        let mut picked = 0;
        for v in 0..self.g.order() {
            if picked == k {
                break;
            }
            let skipped = mask_below(v) & !chosen;
            if self.feasible(all & !chosen & !(1 << v), skipped, k - picked - 1) {
                chosen |= 1 << v;
                picked += 1;
            }
        }
        Bits(chosen).collect()
    }
}

/// Size of a minimum vertex disconnecting set.
pub fn copvc(g: &Graph, r: Proportion) -> Result<usize> {
    check_size(g)?;
    let tau = r.floor_times(g.order());
    Ok(VertexSearch { g, tau }.minimum())
}

/// Minimum vertex disconnecting set, lexicographically smallest among ties.
/// Always feasible: deleting every vertex leaves the empty graph.
pub fn copvc_exact(g: &Graph, r: Proportion) -> Result<DisconnectingWitness> {
    check_size(g)?;
    let search = VertexSearch {
        g,
        tau: r.floor_times(g.order()),
    };
    let k = search.minimum();
    Ok(DisconnectingWitness {
        removal: Removal::Vertices(search.lexicographic_witness(k)),
        feasible: true,
    })
}

// ------------------------------------------------------------------- edges

/// Partition of contracted vertex groups into blocks of total weight at most
/// `tau`, maximising the edge weight kept inside blocks.
struct BlockProblem {
    tau: usize,
    weight: Vec<usize>,
    /// edges already inside a group
    internal: usize,
    between: Vec<Vec<u32>>,
    nbr: Vec<u64>,
    cannot: Vec<u64>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            let parent = self.0[x];
            self.0[x] = root;
            x = parent;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

impl BlockProblem {
    /// Sub-problem on component `comp`, with `cut` forced to cross blocks and
    /// `kept` forced inside blocks. `None` if the constraints contradict.
    fn build(
        g: &Graph,
        comp: u64,
        tau: usize,
        cut: &[Edge],
        kept: &[Edge],
    ) -> Option<BlockProblem> {
        let n = g.order();
        let mut uf = UnionFind((0..n).collect());
        for &(u, v) in kept {
            uf.union(u, v);
        }
        let mut group_of = vec![usize::MAX; n];
        let mut weight = Vec::new();
        for v in Bits(comp) {
            let root = uf.find(v);
            if group_of[root] == usize::MAX {
                group_of[root] = weight.len();
                weight.push(0);
            }
            group_of[v] = group_of[root];
            weight[group_of[v]] += 1;
        }
        if weight.iter().any(|&w| w > tau) {
            return None;
        }
        let groups = weight.len();
        let mut between = vec![vec![0u32; groups]; groups];
        let mut nbr = vec![0u64; groups];
        let mut internal = 0;
        for v in Bits(comp) {
            for u in Bits(g.neighbors(v) & comp & mask_below(v)) {
                let (a, b) = (group_of[u], group_of[v]);
                if a == b {
                    internal += 1;
                } else {
                    between[a][b] += 1;
                    between[b][a] += 1;
                    nbr[a] |= 1 << b;
                    nbr[b] |= 1 << a;
                }
            }
        }
        let mut cannot = vec![0u64; groups];
        for &(u, v) in cut {
            let (a, b) = (group_of[u], group_of[v]);
            if a == b {
                return None;
            }
            cannot[a] |= 1 << b;
            cannot[b] |= 1 << a;
        }
        Some(BlockProblem {
            tau,
            weight,
            internal,
            between,
            nbr,
            cannot,
        })
    }

    /// Largest kept weight, or the first value reaching `stop_at`. `None`
    /// if nothing beats `floor`.
    fn search(&self, floor: Option<usize>, stop_at: usize) -> Option<usize> {
        let groups = self.weight.len();
        // maximum-adjacency order so back-edges appear early
        let mut order = Vec::with_capacity(groups);
        let mut placed = 0u64;
        let mut attach = vec![0u32; groups];
        for _ in 0..groups {
            let next = (0..groups)
                .filter(|&g| placed >> g & 1 == 0)
                .max_by_key(|&g| (attach[g], self.nbr[g].count_ones(), std::cmp::Reverse(g)))
                .expect("unplaced group");
            placed |= 1 << next;
            order.push(next);
            for h in Bits(self.nbr[next]) {
                attach[h] += self.between[next][h];
            }
        }
        let mut suffix = vec![0usize; groups + 1];
        let mut seen = 0u64;
        let mut caps = vec![0usize; groups];
        for (i, &g) in order.iter().enumerate() {
            let back: usize = Bits(self.nbr[g] & seen)
                .map(|h| self.between[g][h] as usize)
                .sum();
            let w = self.weight[g];
            caps[i] = back.min(w * (self.tau - w));
            seen |= 1 << g;
        }
        for i in (0..groups).rev() {
            suffix[i] = suffix[i + 1] + caps[i];
        }

        let mut state = BlockSearch {
            p: self,
            order,
            suffix,
            blocks: Vec::new(),
            best: floor,
            stop_at: stop_at.saturating_sub(self.internal),
        };
        state.dfs(0, 0);
        state
            .best
            .filter(|&b| Some(b) != floor)
            .map(|b| b + self.internal)
    }

    fn maximum(&self) -> usize {
        self.search(None, usize::MAX)
            .expect("singleton blocks are always feasible")
    }

    fn reaches(&self, target: usize) -> bool {
        if target <= self.internal {
            return true;
        }
        let need = target - self.internal;
        self.search(Some(need - 1), target).is_some()
    }
}

struct BlockSearch<'a> {
    p: &'a BlockProblem,
    order: Vec<usize>,
    suffix: Vec<usize>,
    /// (total weight, member groups)
    blocks: Vec<(usize, u64)>,
    best: Option<usize>,
    stop_at: usize,
}

impl BlockSearch<'_> {
    /// Returns true once `stop_at` is reached.
    fn dfs(&mut self, pos: usize, kept: usize) -> bool {
        if self.best.is_none_or(|b| kept > b) {
            self.best = Some(kept);
            if kept >= self.stop_at {
                return true;
            }
        }
        if pos == self.order.len() {
            return false;
        }
        if self.best.is_some_and(|b| kept + self.suffix[pos] <= b) {
            return false;
        }
        let g = self.order[pos];
        let w = self.p.weight[g];
        let mut options: Vec<(usize, usize)> = Vec::with_capacity(self.blocks.len() + 1);
        for (i, &(size, members)) in self.blocks.iter().enumerate() {
            if size + w <= self.p.tau && self.p.cannot[g] & members == 0 {
                let gain: usize = Bits(self.p.nbr[g] & members)
                    .map(|h| self.p.between[g][h] as usize)
                    .sum();
                options.push((gain, i));
            }
        }
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (gain, i) in options {
            self.blocks[i].0 += w;
            self.blocks[i].1 |= 1 << g;
            let done = self.dfs(pos + 1, kept + gain);
            self.blocks[i].0 -= w;
            self.blocks[i].1 &= !(1 << g);
            if done {
                return true;
            }
        }
        self.blocks.push((w, 1 << g));
        let done = self.dfs(pos + 1, kept);
        self.blocks.pop();
        done
    }
}

fn component_edges(g: &Graph, comp: u64) -> Vec<Edge> {
    g.edges().filter(|&(u, _)| comp >> u & 1 == 1).collect()
}

/// Size of a minimum edge disconnecting set, or `None` when none exists
/// (`tau = 0` on a nonempty graph).
pub fn copec(g: &Graph, r: Proportion) -> Result<Option<usize>> {
    check_size(g)?;
    let tau = r.floor_times(g.order());
    if tau == 0 {
        return Ok((g.order() == 0).then_some(0));
    }
    let mut total = 0;
    for comp in oversized(g, g.vertex_mask(), tau) {
        let p = BlockProblem::build(g, comp, tau, &[], &[]).expect("unconstrained problem");
        total += component_edges(g, comp).len() - p.maximum();
    }
    Ok(Some(total))
}

/// Minimum edge disconnecting set, lexicographically smallest among ties,
/// with edges as `(u, v)`, `u < v`.
pub fn copec_exact(g: &Graph, r: Proportion) -> Result<DisconnectingWitness> {
    check_size(g)?;
    let tau = r.floor_times(g.order());
    if tau == 0 && g.order() > 0 {
        return Ok(DisconnectingWitness {
            removal: Removal::Edges(Vec::new()),
            feasible: false,
        });
    }
    let mut witness = Vec::new();
    for comp in oversized(g, g.vertex_mask(), tau) {
        let edges = component_edges(g, comp);
        let p = BlockProblem::build(g, comp, tau, &[], &[]).expect("unconstrained problem");
        let best_kept = p.maximum();
        let k = edges.len() - best_kept;
        let mut cut: Vec<Edge> = Vec::with_capacity(k);
        let mut kept: Vec<Edge> = Vec::new();
        for &e in &edges {
            if cut.len() == k {
                break;
            }
            cut.push(e);
            let ok = BlockProblem::build(g, comp, tau, &cut, &kept)
                .is_some_and(|p| p.reaches(best_kept));
            if !ok {
                cut.pop();
                kept.push(e);
            }
        }
        debug_assert_eq!(cut.len(), k);
        witness.extend(cut);
    }
    witness.sort_unstable();
    Ok(DisconnectingWitness {
        removal: Removal::Edges(witness),
        feasible: true,
    })
}

/// Checks a witness by direct removal, independently of the search. The
/// threshold comes from the order of `g`.
pub fn verify_witness(g: &Graph, r: Proportion, w: &DisconnectingWitness) -> bool {
    let t = r.threshold(g.order());
    match &w.removal {
        Removal::Vertices(vs) => remove_vertices(g, vs).is_ok_and(|h| is_failure_state(&h, t)),
        Removal::Edges(es) => remove_edges(g, es).is_ok_and(|h| is_failure_state(&h, t)),
    }
}
