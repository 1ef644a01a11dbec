//! Largest bipartite subgraphs (max-cut), lower bounds on them, and
//! checkers for two conjectures about the maximum edge measure.

use serde::Serialize;

use crate::closed_forms::choose2;
use crate::enumerate::GraphCatalog;
use crate::error::{Error, Result};
use crate::extremal::family_values;
use crate::formats::to_graph6;
use crate::graph::{mask_below, Bits, Graph};
use crate::proportion::Proportion;

pub const MAX_CUT_MAX_VERTICES: usize = 24;
pub const DUALITY_MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteWitness {
    /// The part holding vertex 0, sorted.
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    pub crossing_edges: usize,
}

fn crossing(g: &Graph, side: u64) -> usize {
    (0..g.order())
        .filter(|v| side >> v & 1 == 1)
        .map(|v| (g.neighbors(v) & !side).count_ones() as usize)
        .sum()
}

struct CutSearch<'a> {
    g: &'a Graph,
    /// `forced[v]`: `Some(true)` puts `v` with vertex 0
    forced: Vec<Option<bool>>,
    /// stop once a cut of this size is seen
    target: Option<usize>,
    best: Option<(usize, u64)>,
}

impl CutSearch<'_> {
    fn done(&self) -> bool {
        matches!((self.target, self.best), (Some(t), Some((b, _))) if b >= t)
    }

    /// `a`: decided vertices beside vertex 0, `b`: decided on the other side.
    fn dfs(&mut self, v: usize, a: u64, b: u64, cut: usize) {
        let n = self.g.order();
        if v == n {
            if self.best.is_none_or(|(best, _)| cut > best) {
                self.best = Some((cut, a));
            }
            return;
        }
        let open = !mask_below(v) & mask_below(n);
        let mut bound = cut;
        for u in Bits(open) {
            let nb = self.g.neighbors(u);
            bound += ((nb & a).count_ones().max((nb & b).count_ones())) as usize;
            bound += (nb & open & !mask_below(u + 1)).count_ones() as usize;
        }
        let floor = match (self.best, self.target) {
            (Some((best, _)), _) => Some(best),
            (None, Some(t)) => t.checked_sub(1),
            (None, None) => None,
        };
        if floor.is_some_and(|f| bound <= f) {
            return;
        }
        let nb = self.g.neighbors(v);
        for join_a in [true, false] {
            if self.forced[v].is_some_and(|f| f != join_a) || (v == 0 && !join_a) {
                continue;
            }
            let (gain, na, nb_) = if join_a {
                ((nb & b).count_ones() as usize, a | 1 << v, b)
            } else {
                ((nb & a).count_ones() as usize, a, b | 1 << v)
            };
            self.dfs(v + 1, na, nb_, cut + gain);
            if self.done() {
                return;
            }
        }
    }
}

fn cut_search(g: &Graph, forced: &[Option<bool>], target: Option<usize>) -> Option<(usize, u64)> {
    let mut s = CutSearch {
        g,
        forced: forced.to_vec(),
        target,
        best: None,
    };
    s.dfs(0, 0, 0, 0);
    s.best
}

/// Exact max-cut. Among optimal bipartitions, returns the one whose part
/// containing vertex 0 is the lexicographically smallest sorted list.
pub fn max_bipartite_subgraph(g: &Graph) -> Result<BipartiteWitness> {
    let n = g.order();
    if n > MAX_CUT_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: MAX_CUT_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(BipartiteWitness {
            part_a: Vec::new(),
            part_b: Vec::new(),
            crossing_edges: 0,
        });
    }
    let (opt, _) = cut_search(g, &vec![None; n], None).expect("vertex 0 can always be placed");
    let mut forced = vec![None; n];
    forced[0] = Some(true);
    let mut side = 1u64;
    for v in 1..n {
        // ending the list here is smaller than any continuation
        if crossing(g, side) == opt {
            break;
        }
        forced[v] = Some(true);
        if cut_search(g, &forced, Some(opt)).is_some_and(|(c, _)| c >= opt) {
            side |= 1 << v;
        } else {
            forced[v] = Some(false);
        }
    }
    debug_assert_eq!(crossing(g, side), opt);
    Ok(BipartiteWitness {
        part_a: Bits(side).collect(),
        part_b: Bits(!side & mask_below(n)).collect(),
        crossing_edges: opt,
    })
}

/// Smallest integer `k` with `k >= m/2 + (sqrt(8m+1) - 1)/8`, i.e.
/// `8k - 4m + 1 >= sqrt(8m + 1)`, decided in integers.
pub fn edwards_bound(m: u64) -> u64 {
    let m = m as u128;
    let mut k = m / 2;
    loop {
        let lhs = 8 * k + 1;
        if lhs >= 4 * m {
            let d = lhs - 4 * m;
            if d * d > 8 * m {
                return k as u64;
            }
        }
        k += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct EgkBounds {
    /// `ceil((3m + n) / 6)`, when no vertex is isolated
    pub no_isolated: Option<usize>,
    /// `ceil((2m + n - 1) / 4)`, when connected
    pub connected: Option<usize>,
}

pub fn egk_bounds(g: &Graph) -> EgkBounds {
    let (n, m) = (g.order(), g.size());
    if n == 0 {
        return EgkBounds::default();
    }
    EgkBounds {
        no_isolated: (!g.has_isolated_vertex()).then(|| (3 * m + n).div_ceil(6)),
        connected: g.is_connected().then(|| (2 * m + n - 1).div_ceil(4)),
    }
}

/// `cross_g(A, B) + cross_complement(A, B) = n^2 / 4` over every balanced
/// bipartition with vertex 0 in `A`.
pub fn bipartite_complement_duality_check(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OutOfRange(format!("order must be even, got {n}")));
    }
    if n > DUALITY_MAX_VERTICES {
        return Err(Error::TooLarge {
            n,
            max: DUALITY_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(true);
    }
    let h = g.complement();
    let rest = mask_below(n) & !1;
    let mut sub = rest;
    loop {
        if sub.count_ones() as usize == n / 2 - 1 {
            let a = sub | 1;
            if crossing(g, a) + crossing(&h, a) != n * n / 4 {
                return Ok(false);
            }
        }
        if sub == 0 {
            return Ok(true);
        }
        sub = (sub - 1) & rest;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConjectureName {
    EqualPartition,
    CoemaxUpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub name: ConjectureName,
    pub n: usize,
    pub m: usize,
    pub r: Proportion,
    pub holds: bool,
    /// exact rational, e.g. `"4"`
    pub lhs: String,
    /// exact rational, or `None` when nothing was available to compare
    pub rhs: Option<String>,
    /// maximiser that satisfies the claim, or a falsifying one
    pub witness_graph6: Option<String>,
    /// Equal-partition only: the claim with connectivity of the blocks
    /// dropped (removing the crossing edges may split a block further).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grouped_holds: Option<bool>,
}

fn ratio(num: u64, den: u64) -> String {
    let g = gcd(num, den);
    let (a, b) = (num / g.max(1), den / g.max(1));
    if b == 1 {
        a.to_string()
    } else {
        format!("{a}/{b}")
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn maximisers(catalog: &GraphCatalog, m: usize, r: Proportion) -> Result<(usize, Vec<&Graph>)> {
    let values = family_values(catalog, m, r, true)?;
    let best = *values.iter().max().expect("every level has a class");
    let graphs = catalog
        .level(m)
        .zip(&values)
        .filter(|(_, &v)| v == best)
        .map(|(g, _)| g)
        .collect();
    Ok((best, graphs))
}

/// Every partition of the vertices into `k` blocks of order `n / k`, as
/// block masks, each listed once.
fn equal_partitions(n: usize, k: usize) -> Vec<Vec<u64>> {
    fn go(left: u64, size: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        let low = left & left.wrapping_neg();
        let rest = left & !low;
        let mut sub = rest;
        loop {
            if sub.count_ones() as usize == size - 1 {
                acc.push(sub | low);
                go(rest & !sub, size, acc, out);
                acc.pop();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
    } else {
        go(mask_below(n), n / k, &mut Vec::new(), &mut out);
    }
    out
}

fn induced_connected(g: &Graph, block: u64) -> bool {
    let start = block & block.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let mut next = 0;
        for v in Bits(frontier) {
            next |= g.neighbors(v) & block;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == block
}

fn check_divides(n: usize, k: usize) -> Result<Proportion> {
    if k < 2 || !n.is_multiple_of(k) {
        return Err(Error::OutOfRange(format!(
            "k = {k} must be at least 2 and divide n = {n}"
        )));
    }
    Proportion::new(1, k as u64)
}

/// Equal-partition claim at `r = 1/k` for one `m`, over a prebuilt catalog:
/// some graph attaining the maximum edge measure has a minimum edge
/// disconnecting set leaving exactly `k` components of order `n/k`.
pub fn equal_partition_in(catalog: &GraphCatalog, m: usize, k: usize) -> Result<ConjectureVerdict> {
    let n = catalog.order();
    let r = check_divides(n, k)?;
    if m > choose2(n) {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            max: choose2(n),
        });
    }
    let (best, graphs) = maximisers(catalog, m, r)?;
    let partitions = equal_partitions(n, k);
    let mut strict_min: Option<usize> = None;
    let mut strict_hit = None;
    let mut grouped = false;
    for &g in &graphs {
        for blocks in &partitions {
            let inside: usize = blocks.iter().map(|&b| g.induced(b).size()).sum();
            let cut = m - inside;
            grouped |= cut == best;
            if blocks.iter().all(|&b| induced_connected(g, b)) {
                strict_min = Some(strict_min.map_or(cut, |c: usize| c.min(cut)));
                if cut == best && strict_hit.is_none() {
                    strict_hit = Some(g);
                }
            }
        }
    }
    let witness = strict_hit.or(graphs.first().copied());
    Ok(ConjectureVerdict {
        name: ConjectureName::EqualPartition,
        n,
        m,
        r,
        holds: strict_hit.is_some(),
        lhs: best.to_string(),
        rhs: strict_min.map(|c| c.to_string()),
        witness_graph6: witness.map(to_graph6).transpose()?,
        grouped_holds: Some(grouped),
    })
}

pub fn check_equal_partition_conjecture(n: usize, m: usize, k: usize) -> Result<ConjectureVerdict> {
    check_divides(n, k)?;
    equal_partition_in(&GraphCatalog::new(n)?, m, k)
}

/// `COEMAX(n, m) <= m/2 + 7n/12` at `r = 1/2`, over a prebuilt catalog.
pub fn coemax_bound_in(catalog: &GraphCatalog, m: usize) -> Result<ConjectureVerdict> {
    let n = catalog.order();
    if n % 2 == 1 {
        return Err(Error::OutOfRange(format!("order must be even, got {n}")));
    }
    if m > choose2(n) {
        return Err(Error::EdgeCountOutOfRange {
            n,
            m,
            max: choose2(n),
        });
    }
    let r = Proportion::new(1, 2)?;
    let (best, graphs) = maximisers(catalog, m, r)?;
    let rhs12 = (6 * m + 7 * n) as u64;
    Ok(ConjectureVerdict {
        name: ConjectureName::CoemaxUpperBound,
        n,
        m,
        r,
        holds: 12 * best as u64 <= rhs12,
        lhs: best.to_string(),
        rhs: Some(ratio(rhs12, 12)),
        witness_graph6: graphs.first().map(|g| to_graph6(g)).transpose()?,
        grouped_holds: None,
    })
}

pub fn check_coemax_upper_bound(n: usize, m: usize) -> Result<ConjectureVerdict> {
    if n % 2 == 1 {
        return Err(Error::OutOfRange(format!("order must be even, got {n}")));
    }
    coemax_bound_in(&GraphCatalog::new(n)?, m)
}
