//! Closed forms for paths, cycles, complete and complete bipartite graphs,
//! and a harness that compares each against the exact solver.
//!
//! Cycles get two candidate formulas per measure, and the solver decides:
//!
//! * vertex: threshold `floor(r(n-1))` against `floor(rn)` taken from the
//!   original order;
//! * edge: `floor((n-1)/tau) + 1` against the
//!   "delete one vertex, leaving `P_{n-1}`" reading `floor((n-2)/tau) + 1`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::proportion::Proportion;
use crate::solver::{copec, copvc};

/// `C(k, 2)`, zero for `k < 2`.
pub fn choose2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "kebab-case")]
pub enum ClassSpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
}

impl ClassSpec {
    pub fn order(&self) -> usize {
        match *self {
            ClassSpec::Path { n } | ClassSpec::Cycle { n } | ClassSpec::Complete { n } => n,
            ClassSpec::CompleteBipartite { a, b } => a + b,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::OutOfRange(msg));
        match *self {
            ClassSpec::Path { n } | ClassSpec::Complete { n } if n == 0 => {
                bad("order must be at least 1".into())
            }
            ClassSpec::Cycle { n } if n < 3 => bad(format!("cycle order {n} < 3")),
            ClassSpec::CompleteBipartite { a, b } if a == 0 || a > b => bad(format!(
                "complete bipartite needs 1 <= a <= b, got a={a}, b={b}"
            )),
            _ => Ok(()),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        if self.order() > crate::graph::MAX_VERTICES {
            return Err(Error::TooLarge {
                n: self.order(),
                max: crate::graph::MAX_VERTICES,
            });
        }
        Ok(match *self {
            ClassSpec::Path { n } => Graph::path(n),
            ClassSpec::Cycle { n } => Graph::cycle(n),
            ClassSpec::Complete { n } => Graph::complete(n),
            ClassSpec::CompleteBipartite { a, b } => Graph::complete_bipartite(a, b),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FormulaId {
    PathVertex,
    CycleVertexReducedOrder,
    CycleVertexOriginalOrder,
    CompleteVertex,
    CompleteBipartiteVertex,
    PathEdge,
    CycleEdgeCeiling,
    CycleEdgeVertexReading,
    CompleteEdge,
}

impl FormulaId {
    /// Formulas with a complete proof behind them. A disagreement with the
    /// solver on one of these is a real discrepancy; the others are reported.
    pub fn is_proven(self) -> bool {
        !matches!(
            self,
            FormulaId::CycleVertexReducedOrder
                | FormulaId::CycleVertexOriginalOrder
                | FormulaId::CycleEdgeCeiling
                | FormulaId::CycleEdgeVertexReading
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub formula_id: FormulaId,
    pub tau: usize,
}

fn positive_tau(n: usize, r: Proportion) -> Result<usize> {
    match r.floor_times(n) {
        0 => Err(Error::ZeroThreshold {
            n,
            r: r.to_string(),
        }),
        tau => Ok(tau),
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::OutOfRange(msg()))
    }
}

fn result(value: usize, formula_id: FormulaId, tau: usize) -> Result<FormulaResult> {
    Ok(FormulaResult {
        value,
        formula_id,
        tau,
    })
}

/// `floor(n / (tau + 1))`.
pub fn copvc_path(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 1, || "path order must be at least 1".into())?;
    let tau = positive_tau(n, r)?;
    result(n / (tau + 1), FormulaId::PathVertex, tau)
}

/// `floor((n-1) / (floor(r(n-1)) + 1)) + 1`.
pub fn copvc_cycle(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 3, || format!("cycle order {n} < 3"))?;
    let tau = r.floor_times(n);
    let shrunk = r.floor_times(n - 1);
    result(
        (n - 1) / (shrunk + 1) + 1,
        FormulaId::CycleVertexReducedOrder,
        tau,
    )
}

/// With the threshold from the original order: `floor((n-1) / (tau+1)) + 1`.
/// At `tau = 0` this is `n`, as it should be.
pub fn copvc_cycle_original_order(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 3, || format!("cycle order {n} < 3"))?;
    let tau = r.floor_times(n);
    result(
        (n - 1) / (tau + 1) + 1,
        FormulaId::CycleVertexOriginalOrder,
        tau,
    )
}

/// `n - tau`. Also right for `tau = 0`, where every vertex must go.
pub fn copvc_complete(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 1, || "complete graph order must be at least 1".into())?;
    let tau = r.floor_times(n);
    result(n - tau, FormulaId::CompleteVertex, tau)
}

/// `min(a, a + b - tau)` for `a <= b`. Rejects `tau = 0`: deleting the
/// smaller side leaves isolated vertices, which only count as failed when
/// `tau >= 1`.
pub fn copvc_complete_bipartite(a: usize, b: usize, r: Proportion) -> Result<FormulaResult> {
    require(1 <= a && a <= b, || {
        format!("need 1 <= a <= b, got a={a}, b={b}")
    })?;
    let tau = positive_tau(a + b, r)?;
    result(a.min(a + b - tau), FormulaId::CompleteBipartiteVertex, tau)
}

/// `floor((n-1) / tau)`.
pub fn copec_path(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 1, || "path order must be at least 1".into())?;
    let tau = positive_tau(n, r)?;
    result((n - 1) / tau, FormulaId::PathEdge, tau)
}

/// `floor((n-1) / tau) + 1`, which equals `ceil(n / tau)`.
pub fn copec_cycle(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 3, || format!("cycle order {n} < 3"))?;
    let tau = positive_tau(n, r)?;
    result((n - 1) / tau + 1, FormulaId::CycleEdgeCeiling, tau)
}

/// One deletion plus the path formula on `P_{n-1}`: `floor((n-2) / tau) + 1`.
pub fn copec_cycle_vertex_reading(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 3, || format!("cycle order {n} < 3"))?;
    let tau = positive_tau(n, r)?;
    result((n - 2) / tau + 1, FormulaId::CycleEdgeVertexReading, tau)
}

/// `C(n,2) - p C(tau,2) - C(q,2)` where `n = p tau + q`, `0 <= q < tau`.
pub fn copec_complete(n: usize, r: Proportion) -> Result<FormulaResult> {
    require(n >= 1, || "complete graph order must be at least 1".into())?;
    let tau = positive_tau(n, r)?;
    let (p, q) = (n / tau, n % tau);
    result(
        choose2(n) - p * choose2(tau) - choose2(q),
        FormulaId::CompleteEdge,
        tau,
    )
}

/// Formulas that apply to a class under one measure.
pub fn formulas_for(
    spec: ClassSpec,
    measure: Measure,
    r: Proportion,
) -> Vec<(FormulaId, Result<FormulaResult>)> {
    use FormulaId::*;
    match (spec, measure) {
        (ClassSpec::Path { n }, Measure::Vertex) => vec![(PathVertex, copvc_path(n, r))],
        (ClassSpec::Path { n }, Measure::Edge) => vec![(PathEdge, copec_path(n, r))],
        (ClassSpec::Cycle { n }, Measure::Vertex) => vec![
            (CycleVertexReducedOrder, copvc_cycle(n, r)),
            (CycleVertexOriginalOrder, copvc_cycle_original_order(n, r)),
        ],
        (ClassSpec::Cycle { n }, Measure::Edge) => vec![
            (CycleEdgeCeiling, copec_cycle(n, r)),
            (CycleEdgeVertexReading, copec_cycle_vertex_reading(n, r)),
        ],
        (ClassSpec::Complete { n }, Measure::Vertex) => {
            vec![(CompleteVertex, copvc_complete(n, r))]
        }
        (ClassSpec::Complete { n }, Measure::Edge) => vec![(CompleteEdge, copec_complete(n, r))],
        (ClassSpec::CompleteBipartite { a, b }, Measure::Vertex) => {
            vec![(CompleteBipartiteVertex, copvc_complete_bipartite(a, b, r))]
        }
        // no closed form; the solver alone covers K_{a,b} under edge removal
        (ClassSpec::CompleteBipartite { .. }, Measure::Edge) => Vec::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaOutcome {
    pub formula: FormulaId,
    /// `None` when the formula rejects the input (e.g. `tau = 0`).
    pub value: Option<usize>,
    pub matches_oracle: bool,
}

/// One row of a discrepancy report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyEntry {
    #[serde(flatten)]
    pub class: ClassSpec,
    pub measure: Measure,
    pub r: Proportion,
    pub tau: usize,
    /// `None` when no edge disconnecting set exists.
    pub oracle: Option<usize>,
    pub formulas: Vec<FormulaOutcome>,
}

impl DiscrepancyEntry {
    /// A proven formula produced a value different from the solver.
    pub fn proven_mismatch(&self) -> bool {
        self.formulas
            .iter()
            .any(|f| f.formula.is_proven() && f.value.is_some() && !f.matches_oracle)
    }

    /// Some formula produced a value different from the solver.
    pub fn any_mismatch(&self) -> bool {
        self.formulas
            .iter()
            .any(|f| f.value.is_some() && !f.matches_oracle)
    }

    /// At least one evaluated formula agrees with the solver.
    pub fn any_match(&self) -> bool {
        self.formulas.iter().any(|f| f.matches_oracle)
    }

    pub fn value_of(&self, id: FormulaId) -> Option<usize> {
        self.formulas
            .iter()
            .find(|f| f.formula == id)
            .and_then(|f| f.value)
    }
}

/// Builds the concrete graph, evaluates every applicable formula and the
/// exact solver, and records both.
pub fn formula_vs_oracle(
    spec: ClassSpec,
    measure: Measure,
    r: Proportion,
) -> Result<DiscrepancyEntry> {
    let g = spec.build()?;
    let oracle = match measure {
        Measure::Vertex => Some(copvc(&g, r)?),
        Measure::Edge => copec(&g, r)?,
    };
    let formulas = formulas_for(spec, measure, r)
        .into_iter()
        .map(|(formula, res)| {
            let value = res.ok().map(|f| f.value);
            FormulaOutcome {
                formula,
                value,
                matches_oracle: value.is_some() && value == oracle,
            }
        })
        .collect();
    Ok(DiscrepancyEntry {
        class: spec,
        measure,
        r,
        tau: r.floor_times(spec.order()),
        oracle,
        formulas,
    })
}
