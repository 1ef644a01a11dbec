//! Extremal values of the vertex and edge measures over `G(n, m)`, the
//! graphs with `n` vertices and `m` edges.
//!
//! Throughout, `tau = floor(rn)` and `n = p * tau + q` with `0 <= q < tau`.
//! The densest failure state is `p` disjoint copies of `K_tau` plus `K_q`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::choose2;
use crate::enumerate::{canonical_form, GraphCatalog, CANONICAL_MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::solver::{copec, copvc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stat {
    Covmin,
    Coemin,
    Covmax,
    Coemax,
}

impl Stat {
    pub const ALL: [Stat; 4] = [Stat::Covmin, Stat::Coemin, Stat::Covmax, Stat::Coemax];

    pub fn is_edge(self) -> bool {
        matches!(self, Stat::Coemin | Stat::Coemax)
    }

    pub fn is_max(self) -> bool {
        matches!(self, Stat::Covmax | Stat::Coemax)
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::Covmin => "covmin",
            Stat::Coemin => "coemin",
            Stat::Covmax => "covmax",
            Stat::Coemax => "coemax",
        })
    }
}

impl FromStr for Stat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Stat> {
        Stat::ALL
            .into_iter()
            .find(|st| st.to_string() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown statistic {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Tail,
    Enumeration,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::Tail => "tail",
            Method::Enumeration => "enumeration",
        })
    }
}

/// `n = p * tau + q`, `0 <= q < tau`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PQDecomposition {
    pub n: usize,
    pub tau: usize,
    pub p: usize,
    pub q: usize,
}

impl PQDecomposition {
    pub fn new(n: usize, r: Proportion) -> Result<Self> {
        Self::with_tau(n, r.floor_times(n)).ok_or_else(|| Error::ZeroThreshold {
            n,
            r: r.to_string(),
        })
    }

    /// Splits `n` by an explicit block size.
    pub fn with_tau(n: usize, tau: usize) -> Option<Self> {
        (tau > 0).then(|| PQDecomposition {
            n,
            tau,
            p: n / tau,
            q: n % tau,
        })
    }

    /// Edges of the densest failure state on `n` vertices.
    pub fn max_failure_edges(&self) -> usize {
        self.p * choose2(self.tau) + choose2(self.q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalResult {
    pub stat: Stat,
    pub n: usize,
    pub m: usize,
    pub r: Proportion,
    pub value: usize,
    pub method: Method,
    /// A graph in `G(n, m)` attaining `value`, canonically labelled when
    /// `n` is small enough for canonical labelling.
    pub witness: Option<Graph>,
}

fn check_m(n: usize, m: usize) -> Result<()> {
    let max = choose2(n);
    if m > max {
        Err(Error::EdgeCountOutOfRange { n, m, max })
    } else {
        Ok(())
    }
}

fn canonical_if_small(g: Graph) -> Graph {
    if g.order() <= CANONICAL_MAX_VERTICES {
        canonical_form(&g).map(|c| c.graph).unwrap_or(g)
    } else {
        g
    }
}

/// `p * C(tau, 2) + C(q, 2)`: the most edges a failure state on `n`
/// vertices can have.
pub fn max_failure_edges(n: usize, r: Proportion) -> Result<usize> {
    Ok(PQDecomposition::new(n, r)?.max_failure_edges())
}

fn disjoint_cliques(sizes: impl IntoIterator<Item = usize>, n: usize) -> Graph {
    let mut g = Graph::new(n).expect("order within bound");
    let mut start = 0;
    for s in sizes {
        for v in start..start + s {
            for u in start..v {
                g.toggle_edge_unchecked(u, v);
            }
        }
        start += s;
    }
    g
}

/// `p` disjoint copies of `K_tau` followed by `K_q`, on vertices `0..n` in
/// that order.
pub fn build_max_failure_state(n: usize, r: Proportion) -> Result<Graph> {
    let pq = PQDecomposition::new(n, r)?;
    Ok(disjoint_cliques(
        std::iter::repeat_n(pq.tau, pq.p).chain(std::iter::once(pq.q)),
        n,
    ))
}

/// `f(k) = k(n-k) + C(k,2) + p' C(tau,2) + C(q',2)` with
/// `n - k = p' tau + q'`: the most edges a graph on `n` vertices can have
/// while `k` vertex deletions still suffice.
pub fn covmin_threshold_f(k: usize, n: usize, r: Proportion) -> Result<usize> {
    let tau = PQDecomposition::new(n, r)?.tau;
    if k > n - tau {
        return Err(Error::OutOfRange(format!(
            "k = {k} exceeds n - floor(rn) = {}",
            n - tau
        )));
    }
    let rest = PQDecomposition::with_tau(n - k, tau).expect("tau positive");
    Ok(k * (n - k) + choose2(k) + rest.max_failure_edges())
}

/// `k` vertices joined to everything, the rest the densest failure state
/// for the original threshold; has `f(k)` edges.
fn covmin_construction(n: usize, k: usize, tau: usize) -> Graph {
    let rest = PQDecomposition::with_tau(n - k, tau).expect("tau positive");
    let mut g = disjoint_cliques(
        std::iter::once(k)
            .chain(std::iter::repeat_n(tau, rest.p))
            .chain(std::iter::once(rest.q)),
        n,
    );
    for u in 0..k {
        for v in k..n {
            g.toggle_edge_unchecked(u, v);
        }
    }
    g
}

/// Drops lexicographically largest edges until `m` remain.
fn trim_to(mut g: Graph, m: usize) -> Graph {
    let mut edges = g.edge_list();
    while edges.len() > m {
        let (u, v) = edges.pop().expect("more than m edges");
        g.toggle_edge_unchecked(u, v);
    }
    g
}

/// Minimum vertex measure over `G(n, m)`: the least `k` with `m <= f(k)`.
pub fn covmin(n: usize, m: usize, r: Proportion) -> Result<ExtremalResult> {
    check_m(n, m)?;
    let tau = PQDecomposition::new(n, r)?.tau;
    // f(n - tau) = C(n, 2), so the scan always ends
    let mut k = 0;
    while m > covmin_threshold_f(k, n, r)? {
        k += 1;
    }
    // any m-edge subgraph keeps the k universal vertices as a disconnecting
    // set, and m > f(k-1) forces at least k deletions
    let witness = trim_to(covmin_construction(n, k, tau), m);
    Ok(ExtremalResult {
        stat: Stat::Covmin,
        n,
        m,
        r,
        value: k,
        method: Method::Formula,
        witness: Some(canonical_if_small(witness)),
    })
}

/// Piecewise form of the minimum vertex measure in terms of
/// `A = p C(tau,2) + C(q,2)`, `B = A + q p tau` and the breakpoints
/// `C(i,j)`, evaluated literally, first matching case wins. `None` when
/// no case covers `m`. Only used to cross-check [`covmin`].
pub fn covmin_piecewise_crosscheck(n: usize, m: usize, r: Proportion) -> Result<Option<usize>> {
    check_m(n, m)?;
    let PQDecomposition { tau, p, q, .. } = PQDecomposition::new(n, r)?;
    let (t, p, q, m) = (tau as i128, p as i128, q as i128, m as i128);
    let a = p * (t * (t - 1) / 2) + q * (q - 1) / 2;
    let b = a + q * p * t;
    let c = |i: i128, j: i128| -> i128 {
        (1..i).map(|s| t * t * (p - s)).sum::<i128>() + (j - 1) * t * (p - i) + b
    };

    if m <= a {
        return Ok(Some(0));
    }
    for step in 1..=q {
        if a + step * p * t < m && m <= a + (step + 1) * p * t {
            return Ok(Some(step as usize));
        }
    }
    for i in 1..p {
        for j in 1..t {
            if c(i, j) < m && m <= c(i, j + 1) {
                return Ok(Some(((i - 1) * t + j + q) as usize));
            }
        }
        if c(i, t) < m && m <= c(i + 1, 1) {
            return Ok(Some(((i - 1) * t + t + q) as usize));
        }
    }
    if c(p, 1) <= m {
        return Ok(Some(((p - 1) * t + q) as usize));
    }
    Ok(None)
}

/// Minimum edge measure over `G(n, m)`: `max(0, m - (p C(tau,2) + C(q,2)))`.
pub fn coemin(n: usize, m: usize, r: Proportion) -> Result<ExtremalResult> {
    check_m(n, m)?;
    let base = max_failure_edges(n, r)?;
    let mut witness = build_max_failure_state(n, r)?;
    if m <= base {
        witness = trim_to(witness, m);
    } else {
        let mut extra = m - base;
        'fill: for v in 1..n {
            for u in 0..v {
                if extra == 0 {
                    break 'fill;
                }
                if !witness.has_edge(u, v) {
                    witness.toggle_edge_unchecked(u, v);
                    extra -= 1;
                }
            }
        }
    }
    Ok(ExtremalResult {
        stat: Stat::Coemin,
        n,
        m,
        r,
        value: m.saturating_sub(base),
        method: Method::Formula,
        witness: Some(canonical_if_small(witness)),
    })
}

/// Known tails of the maximum vertex measure: `0` for `m < tau`, `n - tau`
/// for `m > C(n,2) - tau`; `None` in between.
pub fn covmax_tail(n: usize, m: usize, r: Proportion) -> Result<Option<usize>> {
    check_m(n, m)?;
    let tau = r.floor_times(n);
    Ok(if m < tau {
        Some(0)
    } else if m + tau > choose2(n) {
        Some(n - tau)
    } else {
        None
    })
}

/// Known tails of the maximum edge measure: `0` for `m < tau`, and
/// `C(n,2) - p C(tau,2) - C(q,2)` at `m = C(n,2)`; `None` otherwise.
pub fn coemax_tail(n: usize, m: usize, r: Proportion) -> Result<Option<usize>> {
    check_m(n, m)?;
    let Ok(pq) = PQDecomposition::new(n, r) else {
        return Ok(None);
    };
    Ok(if m < pq.tau {
        Some(0)
    } else if m == choose2(n) {
        Some(choose2(n) - pq.max_failure_edges())
    } else {
        None
    })
}

/// `K_n` minus two vertex-disjoint edges, measured against the value the
/// full-tail formula would give.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointEdgesInstance {
    pub graph: Graph,
    pub r: Proportion,
    /// `C(n,2) - p C(tau,2) - C(q,2)`
    pub full_tail_value: usize,
    /// exact edge measure of `graph`
    pub actual: Option<usize>,
}

pub fn disjoint_edges_instance(n: usize, r: Proportion) -> Result<DisjointEdgesInstance> {
    if n < 4 {
        return Err(Error::OutOfRange(format!(
            "need n >= 4 for two disjoint edges, got {n}"
        )));
    }
    let pq = PQDecomposition::new(n, r)?;
    let mut graph = Graph::complete(n);
    graph.toggle_edge_unchecked(0, 1);
    graph.toggle_edge_unchecked(2, 3);
    Ok(DisjointEdgesInstance {
        actual: copec(&graph, r)?,
        full_tail_value: choose2(n) - pq.max_failure_edges(),
        graph,
        r,
    })
}

/// Exact measure of one graph for a statistic's kind.
fn measure(g: &Graph, r: Proportion, edge: bool) -> Result<Option<usize>> {
    if edge {
        copec(g, r)
    } else {
        copvc(g, r).map(Some)
    }
}

/// Exact values of every class with `m` edges, in catalog order.
pub fn family_values(
    catalog: &GraphCatalog,
    m: usize,
    r: Proportion,
    edge: bool,
) -> Result<Vec<usize>> {
    let graphs: Vec<&Graph> = catalog.level(m).collect();
    graphs
        .par_iter()
        .map(|g| {
            measure(g, r, edge)?.ok_or_else(|| Error::ZeroThreshold {
                n: g.order(),
                r: r.to_string(),
            })
        })
        .collect()
}

/// Extremum over an already-built catalog. Ties go to the smallest
/// canonical code.
pub fn extremal_from_catalog(
    catalog: &GraphCatalog,
    m: usize,
    r: Proportion,
    stat: Stat,
) -> Result<ExtremalResult> {
    let n = catalog.order();
    check_m(n, m)?;
    if stat.is_edge() {
        PQDecomposition::new(n, r)?;
    }
    let values = family_values(catalog, m, r, stat.is_edge())?;
    let pick = if stat.is_max() {
        values
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
    } else {
        values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1).then(a.0.cmp(&b.0)))
    };
    let (idx, &value) = pick.expect("every level has a class");
    Ok(ExtremalResult {
        stat,
        n,
        m,
        r,
        value,
        method: Method::Enumeration,
        witness: catalog.level(m).nth(idx).cloned(),
    })
}

/// Ground truth by running the exact solver on every class of `G(n, m)`.
pub fn extremal_by_enumeration(
    n: usize,
    m: usize,
    r: Proportion,
    stat: Stat,
) -> Result<ExtremalResult> {
    check_m(n, m)?;
    if stat.is_edge() {
        PQDecomposition::new(n, r)?;
    }
    let catalog = GraphCatalog::new(n)?;
    extremal_from_catalog(&catalog, m, r, stat)
}

/// Closed form or tail where one exists, else `None`.
pub fn extremal_by_theory(
    n: usize,
    m: usize,
    r: Proportion,
    stat: Stat,
) -> Result<Option<ExtremalResult>> {
    match stat {
        Stat::Covmin => covmin(n, m, r).map(Some),
        Stat::Coemin => coemin(n, m, r).map(Some),
        Stat::Covmax | Stat::Coemax => {
            let tail = if stat == Stat::Covmax {
                covmax_tail(n, m, r)?
            } else {
                coemax_tail(n, m, r)?
            };
            Ok(tail.map(|value| ExtremalResult {
                stat,
                n,
                m,
                r,
                value,
                method: Method::Tail,
                witness: None,
            }))
        }
    }
}
