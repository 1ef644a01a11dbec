//! One representative per isomorphism class of graphs with `n` vertices and
//! `m` edges, for small `n`.
//!
//! The canonical form is the labelling that minimises the upper-triangle
//! adjacency bit string (graph6 column order, first pair most significant),
//! taken over all labellings that respect an equitable colour refinement.
//! Refinement is isomorphism invariant, so restricting the search to it
//! still yields a canonical form.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::closed_forms::choose2;
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest order [`enumerate_gnm`] and [`GraphCatalog`] accept.
pub const ENUMERATION_MAX_VERTICES: usize = 8;

/// Largest order whose canonical code fits one `u64`.
pub const CANONICAL_MAX_VERTICES: usize = 11;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    pub code: u64,
    pub graph: Graph,
    /// `perm[v]` is the canonical label of original vertex `v`.
    pub perm: Vec<usize>,
}

/// Equitable refinement; colours are ranks of isomorphism-invariant
/// signatures, so `0` is the smallest class.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = Bits(g.neighbors(v)).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            color[v] = distinct.binary_search(&sigs[v]).expect("signature present");
        }
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// colour required at each position
    slot_color: Vec<usize>,
    color: Vec<usize>,
    at: Vec<usize>,
    best_code: Option<u64>,
    best_at: Vec<usize>,
}

impl CanonSearch<'_> {
    fn dfs(&mut self, pos: usize, used: u64, prefix: u64) {
        let n = self.g.order();
        if pos == n {
            if self.best_code.is_none_or(|b| prefix < b) {
                self.best_code = Some(prefix);
                self.best_at.clone_from(&self.at);
            }
            return;
        }
        let total_bits = n * (n - 1) / 2;
        let prefix_bits = (pos + 1) * pos / 2;
        for v in 0..n {
            if used >> v & 1 == 1 || self.color[v] != self.slot_color[pos] {
                continue;
            }
            let mut column = 0u64;
            for i in 0..pos {
                column = column << 1 | self.g.has_edge(self.at[i], v) as u64;
            }
            let next = prefix << pos | column;
            if self
                .best_code
                .is_some_and(|b| next > b >> (total_bits - prefix_bits))
            {
                continue;
            }
            self.at[pos] = v;
            self.dfs(pos + 1, used | 1 << v, next);
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let n = g.order();
    if n > CANONICAL_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: CANONICAL_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Canonical {
            code: 0,
            graph: g.clone(),
            perm: Vec::new(),
        });
    }
    let color = refine(g);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut search = CanonSearch {
        g,
        slot_color,
        color,
        at: vec![0; n],
        best_code: None,
        best_at: Vec::new(),
    };
    search.dfs(0, 0, 0);
    let mut perm = vec![0; n];
    for (pos, &v) in search.best_at.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(Canonical {
        code: search.best_code.expect("at least one labelling"),
        graph: g.relabel(&perm),
        perm,
    })
}

pub fn canonical_code(g: &Graph) -> Result<u64> {
    canonical_form(g).map(|c| c.code)
}

fn check_order(n: usize) -> Result<()> {
    if n > ENUMERATION_MAX_VERTICES {
        Err(Error::TooLarge {
            n,
            max: ENUMERATION_MAX_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn canonical_unchecked(g: &Graph) -> Canonical {
    canonical_form(g).expect("order within canonical bound")
}

/// Next level: every single-edge extension of `prev`, deduplicated.
fn extend(prev: &[(u64, Graph)]) -> Vec<(u64, Graph)> {
    let found: HashMap<u64, Graph> = prev
        .par_iter()
        .flat_map_iter(|(_, g)| {
            let n = g.order();
            let mut out = Vec::new();
            for v in 1..n {
                for u in 0..v {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.toggle_edge_unchecked(u, v);
                        let c = canonical_unchecked(&h);
                        out.push((c.code, c.graph));
                    }
                }
            }
            out
        })
        .collect();
    sorted(found)
}

fn sorted(found: HashMap<u64, Graph>) -> Vec<(u64, Graph)> {
    let mut level: Vec<(u64, Graph)> = found.into_iter().collect();
    level.sort_unstable_by_key(|(code, _)| *code);
    level
}

fn complements(level: &[(u64, Graph)]) -> Vec<(u64, Graph)> {
    sorted(
        level
            .par_iter()
            .map(|(_, g)| {
                let c = canonical_unchecked(&g.complement());
                (c.code, c.graph)
            })
            .collect(),
    )
}

/// Levels `0..=upto` for order `n`.
fn build_levels(n: usize, upto: usize) -> Vec<Vec<(u64, Graph)>> {
    let empty = Graph::new(n).expect("order checked");
    let mut levels = vec![vec![(canonical_unchecked(&empty).code, empty)]];
    for _ in 0..upto {
        let next = extend(levels.last().expect("nonempty"));
        levels.push(next);
    }
    levels
}

fn check_size(n: usize, m: usize) -> Result<()> {
    let max = choose2(n);
    if m > max {
        Err(Error::EdgeCountOutOfRange { n, m, max })
    } else {
        Ok(())
    }
}

/// All isomorphism classes of `G(n, m)`, canonically labelled, in ascending
/// canonical code order.
pub fn enumerate_gnm(n: usize, m: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    check_size(n, m)?;
    let mirror = choose2(n) - m;
    let level = if mirror < m {
        complements(&build_levels(n, mirror)[mirror])
    } else {
        build_levels(n, m).pop().expect("level m")
    };
    Ok(level.into_iter().map(|(_, g)| g).collect())
}

/// Every isomorphism class on `n` vertices, grouped by edge count.
#[derive(Clone, Debug)]
pub struct GraphCatalog {
    n: usize,
    levels: Vec<Vec<(u64, Graph)>>,
}

impl GraphCatalog {
    pub fn new(n: usize) -> Result<GraphCatalog> {
        check_order(n)?;
        let top = choose2(n);
        let half = top / 2;
        let mut levels = build_levels(n, half);
        for m in half + 1..=top {
            let mirrored = complements(&levels[top - m]);
            levels.push(mirrored);
        }
        Ok(GraphCatalog { n, levels })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn max_edges(&self) -> usize {
        self.levels.len() - 1
    }

    /// Classes with `m` edges; empty when `m` is out of range.
    pub fn level(&self, m: usize) -> impl ExactSizeIterator<Item = &Graph> + Clone + '_ {
        self.levels
            .get(m)
            .map(Vec::as_slice)
            .unwrap_or(&[])
            .iter()
            .map(|(_, g)| g)
    }

    pub fn codes(&self, m: usize) -> impl ExactSizeIterator<Item = u64> + '_ {
        self.levels
            .get(m)
            .map(Vec::as_slice)
            .unwrap_or(&[])
            .iter()
            .map(|(c, _)| *c)
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.levels.iter().flatten().map(|(_, g)| g)
    }
}
