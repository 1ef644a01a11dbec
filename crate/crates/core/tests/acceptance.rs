//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use propconn::bounds::{
    coemax_bound_in, edwards_bound, egk_bounds, equal_partition_in, max_bipartite_subgraph,
};
use propconn::closed_forms::{
    choose2, copec_complete, copvc_complete, copvc_complete_bipartite, copvc_path,
    formula_vs_oracle, ClassSpec, DiscrepancyEntry, FormulaId, Measure,
};
use propconn::enumerate::GraphCatalog;
use propconn::extremal::{
    build_max_failure_state, coemin, covmin, extremal_from_catalog, max_failure_edges,
    PQDecomposition, Stat,
};
use propconn::formats::parse_graph6;
use propconn::{
    copec, copec_exact, copvc_exact, is_failure_state, verify_witness, Graph, Proportion,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Criterion = (&'static str, fn() -> Outcome);

const GRID: [(u64, u64); 5] = [(1, 4), (1, 3), (1, 2), (2, 3), (3, 4)];

fn grid() -> impl Iterator<Item = Proportion> {
    GRID.iter().map(|&(a, b)| Proportion::new(a, b).unwrap())
}

fn catalog(n: usize) -> &'static GraphCatalog {
    static CATALOGS: OnceLock<Vec<GraphCatalog>> = OnceLock::new();
    &CATALOGS.get_or_init(|| (0..=8).map(|n| GraphCatalog::new(n).unwrap()).collect())[n]
}

#[derive(Default)]
struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
    budget: Option<Duration>,
}

impl Outcome {
    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }
}

fn path_vertex() -> Outcome {
    let mut out = Outcome {
        budget: Some(Duration::from_secs(10)),
        ..Outcome::default()
    };
    let mut checked = 0;
    for n in 2..=10 {
        for r in grid() {
            if r.floor_times(n) == 0 {
                continue;
            }
            let g = Graph::path(n);
            let formula = copvc_path(n, r).unwrap().value;
            let w = copvc_exact(&g, r).unwrap();
            checked += 1;
            if Some(formula) != w.cardinality() || !verify_witness(&g, r, &w) {
                out.fail(format!(
                    "P_{n} r={r}: formula {formula}, oracle {:?}",
                    w.cardinality()
                ));
            }
        }
    }
    out.note(format!("{checked} instances"));
    out
}

fn complete_graphs() -> Outcome {
    let mut out = Outcome {
        budget: Some(Duration::from_secs(60)),
        ..Outcome::default()
    };
    let mut checked = 0;
    for n in 2..=10 {
        for r in grid() {
            if r.floor_times(n) == 0 {
                continue;
            }
            let g = Graph::complete(n);
            let v = copvc_complete(n, r).unwrap().value;
            let vw = copvc_exact(&g, r).unwrap();
            if Some(v) != vw.cardinality() || !verify_witness(&g, r, &vw) {
                out.fail(format!(
                    "K_{n} r={r} vertex: formula {v}, oracle {:?}",
                    vw.cardinality()
                ));
            }
            let e = copec_complete(n, r).unwrap().value;
            let ew = copec_exact(&g, r).unwrap();
            if Some(e) != ew.cardinality() || !verify_witness(&g, r, &ew) {
                out.fail(format!(
                    "K_{n} r={r} edge: formula {e}, oracle {:?}",
                    ew.cardinality()
                ));
            }
            checked += 2;
        }
    }
    out.note(format!("{checked} instances"));
    out
}

fn complete_bipartite() -> Outcome {
    let mut out = Outcome::default();
    let (mut checked, mut zero) = (0, Vec::new());
    for total in 2..=9 {
        for a in 1..=total / 2 {
            let b = total - a;
            for r in grid() {
                let g = Graph::complete_bipartite(a, b);
                let oracle = copvc_exact(&g, r).unwrap().cardinality().unwrap();
                match copvc_complete_bipartite(a, b, r) {
                    Ok(f) => {
                        checked += 1;
                        if f.value != oracle {
                            out.fail(format!(
                                "K_{{{a},{b}}} r={r}: formula {}, oracle {oracle}",
                                f.value
                            ));
                        }
                    }
                    Err(_) => zero.push(format!("K_{{{a},{b}}} r={r} (oracle {oracle})")),
                }
            }
        }
    }
    out.note(format!("{checked} instances with floor(rn) >= 1"));
    out.note(format!(
        "formula undefined at floor(rn) = 0: {}",
        zero.join(", ")
    ));
    out
}

fn agrees(entry: &DiscrepancyEntry, id: FormulaId) -> bool {
    let f = entry.formulas.iter().find(|f| f.formula == id).unwrap();
    // both sides say "no finite edge set" when floor(rn) = 0
    f.matches_oracle || (f.value.is_none() && entry.oracle.is_none())
}

fn cycles() -> Outcome {
    let mut out = Outcome::default();
    let pairs = [
        (
            Measure::Vertex,
            FormulaId::CycleVertexReducedOrder,
            FormulaId::CycleVertexOriginalOrder,
        ),
        (
            Measure::Edge,
            FormulaId::CycleEdgeCeiling,
            FormulaId::CycleEdgeVertexReading,
        ),
    ];
    for (measure, first, second) in pairs {
        let (mut total, mut ok_first, mut ok_second) = (0, 0, 0);
        let mut disagreements = Vec::new();
        for n in 3..=10 {
            for r in grid() {
                let entry = formula_vs_oracle(ClassSpec::Cycle { n }, measure, r).unwrap();
                let (a, b) = (agrees(&entry, first), agrees(&entry, second));
                total += 1;
                ok_first += a as usize;
                ok_second += b as usize;
                let record = format!(
                    "C_{n} r={r}: {:?} / {:?} / oracle {:?}",
                    entry.value_of(first),
                    entry.value_of(second),
                    entry.oracle
                );
                if !a && !b {
                    out.fail(format!("neither form matches {record}"));
                } else if a != b {
                    disagreements.push(record);
                }
            }
        }
        let name = |id: FormulaId| {
            serde_json::to_value(id)
                .unwrap()
                .as_str()
                .unwrap()
                .to_owned()
        };
        let verdict = match (ok_first == total, ok_second == total) {
            (true, true) => "both forms correct".to_owned(),
            (true, false) => format!("{} is correct", name(first)),
            (false, true) => format!("{} is correct", name(second)),
            (false, false) => "no form correct on every instance".to_owned(),
        };
        out.note(format!(
            "{measure:?}: {} {ok_first}/{total}, {} {ok_second}/{total}; {verdict}",
            name(first),
            name(second)
        ));
        for d in disagreements.iter().take(4) {
            out.note(format!("  {d}"));
        }
        if disagreements.len() > 4 {
            out.note(format!("  ... {} more", disagreements.len() - 4));
        }
    }
    out
}

fn max_failure_state() -> Outcome {
    let mut out = Outcome::default();
    for n in 2..=8 {
        for r in grid() {
            let t = r.threshold(n);
            if t.tau() == 0 {
                continue;
            }
            let claimed = max_failure_edges(n, r).unwrap();
            let enumerated = catalog(n)
                .iter()
                .filter(|g| is_failure_state(g, t))
                .map(Graph::size)
                .max()
                .unwrap();
            let built = build_max_failure_state(n, r).unwrap();
            if claimed != enumerated || built.size() != claimed || !is_failure_state(&built, t) {
                out.fail(format!(
                    "n={n} r={r}: formula {claimed}, enumerated {enumerated}, construction {}",
                    built.size()
                ));
            }
        }
    }
    out
}

fn family_sweep(stat: Stat) -> Outcome {
    let mut out = Outcome {
        budget: Some(Duration::from_secs(30 * 60)),
        ..Outcome::default()
    };
    let (mut checked, mut skipped) = (0, 0);
    for n in 1..=7 {
        for r in grid() {
            if r.floor_times(n) == 0 {
                skipped += 1;
                continue;
            }
            for m in 0..=choose2(n) {
                let formula = match stat {
                    Stat::Covmin => covmin(n, m, r).unwrap(),
                    _ => coemin(n, m, r).unwrap(),
                };
                let truth = extremal_from_catalog(catalog(n), m, r, stat).unwrap();
                checked += 1;
                if formula.value != truth.value {
                    out.fail(format!(
                        "n={n} m={m} r={r}: formula {}, enumeration {}",
                        formula.value, truth.value
                    ));
                }
                let w = formula.witness.unwrap();
                let actual = match stat {
                    Stat::Covmin => Some(propconn::copvc(&w, r).unwrap()),
                    _ => copec(&w, r).unwrap(),
                };
                if (w.order(), w.size(), actual) != (n, m, Some(formula.value)) {
                    out.fail(format!(
                        "n={n} m={m} r={r}: witness does not attain {}",
                        formula.value
                    ));
                }
            }
        }
    }
    out.note(format!(
        "{checked} (n, m, r) instances, {skipped} (n, r) pairs with floor(rn) = 0 skipped"
    ));
    out
}

/// Values of one statistic for `m = 0..=C(n,2)`.
fn series(n: usize, r: Proportion, stat: Stat) -> Vec<usize> {
    (0..=choose2(n))
        .map(|m| extremal_from_catalog(catalog(n), m, r, stat).unwrap().value)
        .collect()
}

fn shape_violations(values: &[usize]) -> Option<String> {
    values.windows(2).enumerate().find_map(|(m, w)| {
        (w[1] < w[0] || w[1] > w[0] + 1).then(|| format!("m={m}->{}: {} -> {}", m + 1, w[0], w[1]))
    })
}

fn monotonicity() -> Outcome {
    let mut out = Outcome::default();
    let mut maxima_failures = Vec::new();
    let mut covmin_top_is_n_minus_tau = true;
    for n in 2..=7 {
        for r in grid() {
            let Ok(pq) = PQDecomposition::new(n, r) else {
                continue;
            };
            let a = pq.max_failure_edges();
            for stat in Stat::ALL {
                let values = series(n, r, stat);
                if let Some(v) = shape_violations(&values) {
                    out.fail(format!("{stat} n={n} r={r}: {v}"));
                }
                if matches!(stat, Stat::Covmin | Stat::Coemin)
                    && values[..=a].iter().any(|&v| v != 0)
                {
                    out.fail(format!("{stat} n={n} r={r}: nonzero for some m <= {a}"));
                }
                let stated = match stat {
                    Stat::Covmin => n - n / pq.tau,
                    Stat::Covmax => n - pq.tau,
                    Stat::Coemin | Stat::Coemax => choose2(n) - a,
                };
                let top = *values.iter().max().unwrap();
                if stat == Stat::Covmin {
                    covmin_top_is_n_minus_tau &= top == n - pq.tau;
                }
                if top != stated {
                    maxima_failures.push(format!(
                        "{stat} n={n} r={r}: stated maximum {stated}, enumerated {top}"
                    ));
                }
            }
        }
    }

    // random proportions beyond the grid, shape properties only
    let mut runner = TestRunner::new(Config {
        cases: 48,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = (2usize..=6, 2u64..=12).prop_flat_map(|(n, b)| (Just(n), 1..b, Just(b)));
    let result = runner.run(&strategy, |(n, a, b)| {
        let r = Proportion::new(a, b).unwrap();
        if r.floor_times(n) == 0 {
            return Ok(());
        }
        for stat in Stat::ALL {
            let values = series(n, r, stat);
            prop_assert!(
                shape_violations(&values).is_none(),
                "{stat} n={n} r={r}: {values:?}"
            );
        }
        Ok(())
    });
    if let Err(e) = result {
        out.fail(format!("random proportions: {e}"));
    }

    if !maxima_failures.is_empty() {
        out.note(format!(
            "{} stated maxima not attained",
            maxima_failures.len()
        ));
    }
    if covmin_top_is_n_minus_tau {
        out.note("covmin maximum equals n - floor(rn) on every instance".into());
    }
    out.failures.extend(maxima_failures);
    out
}

fn edwards() -> Outcome {
    let mut out = Outcome::default();
    let mut checked = 0;
    for n in 0..=7 {
        for g in catalog(n).iter() {
            let b = max_bipartite_subgraph(g).unwrap().crossing_edges;
            let bounds = egk_bounds(g);
            checked += 1;
            if (b as u64) < edwards_bound(g.size() as u64) {
                out.fail(format!(
                    "n={n} m={}: b = {b} below the Edwards bound",
                    g.size()
                ));
            }
            for bound in [bounds.connected, bounds.no_isolated].into_iter().flatten() {
                if b < bound {
                    out.fail(format!("n={n} m={}: b = {b} below bound {bound}", g.size()));
                }
            }
        }
    }
    out.note(format!("{checked} graphs"));
    out
}

fn conjectures() -> Outcome {
    let mut out = Outcome::default();
    for (n, k) in [(4, 2), (6, 2), (6, 3), (8, 2)] {
        let r = Proportion::new(1, k as u64).unwrap();
        let mut falsified = Vec::new();
        let mut grouped = 0;
        let total = choose2(n) + 1;
        for m in 0..total {
            let v = equal_partition_in(catalog(n), m, k).unwrap();
            let w = parse_graph6(v.witness_graph6.as_deref().unwrap()).unwrap();
            let value = copec(&w, r).unwrap().map(|c| c.to_string());
            if w.size() != m || value.as_deref() != Some(v.lhs.as_str()) {
                out.fail(format!(
                    "equal-partition n={n} k={k} m={m}: witness does not attain {}",
                    v.lhs
                ));
            }
            grouped += v.grouped_holds.unwrap() as usize;
            if !v.holds {
                falsified.push(format!("m={m} {}", v.witness_graph6.unwrap()));
            }
        }
        out.note(format!(
            "equal-partition n={n} k={k}: holds {}/{total} (grouped reading {grouped}/{total})",
            total - falsified.len()
        ));
        if !falsified.is_empty() {
            out.note(format!("  falsified at {}", falsified.join(", ")));
        }
    }
    for n in [4, 6] {
        let mut falsified = Vec::new();
        let total = choose2(n) + 1;
        for m in 0..total {
            let v = coemax_bound_in(catalog(n), m).unwrap();
            let lhs: u64 = v.lhs.parse().unwrap();
            if v.holds != (12 * lhs <= (6 * m + 7 * n) as u64) {
                out.fail(format!("coemax-bound n={n} m={m}: inconsistent verdict"));
            }
            if !v.holds {
                falsified.push(format!("m={m} {}", v.witness_graph6.unwrap()));
            }
        }
        out.note(format!(
            "coemax-bound n={n}: holds {}/{total}",
            total - falsified.len()
        ));
        if !falsified.is_empty() {
            out.note(format!("  falsified at {}", falsified.join(", ")));
        }
    }
    out
}

fn disjoint_edges() -> Outcome {
    let mut out = Outcome::default();
    let g = Graph::from_edges(
        5,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
    )
    .unwrap();
    let r = Proportion::new(9, 10).unwrap();
    let w = copec_exact(&g, r).unwrap();
    out.note(format!("witness {:?}", w.removal));
    if w.cardinality() != Some(3) || !verify_witness(&g, r, &w) {
        out.fail(format!("expected 3, got {:?}", w.cardinality()));
    }
    out
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("path vertex formula vs solver", path_vertex),
        ("complete graph formulas vs solver", complete_graphs),
        (
            "complete bipartite vertex formula vs solver",
            complete_bipartite,
        ),
        ("cycle formulas, three-way records", cycles),
        ("maximal failure state", max_failure_state),
        ("minimum vertex measure over G(n,m) vs enumeration", || {
            family_sweep(Stat::Covmin)
        }),
        ("minimum edge measure over G(n,m) vs enumeration", || {
            family_sweep(Stat::Coemin)
        }),
        (
            "family statistics: monotone, unit steps, stated maxima",
            monotonicity,
        ),
        ("max-cut lower bounds", edwards),
        ("conjecture verdict tables", conjectures),
        ("K_5 minus two disjoint edges at r = 9/10", disjoint_edges),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut out = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Outcome {
            failures: vec!["panicked".into()],
            ..Outcome::default()
        });
        let elapsed = start.elapsed();
        if let Some(b) = out.budget.filter(|b| elapsed > *b) {
            out.fail(format!("took {elapsed:.2?}, budget {b:?}"));
        }
        for note in &out.notes {
            println!("    {note}");
        }
        for f in out.failures.iter().take(12) {
            println!("    FAILED: {f}");
        }
        if out.failures.len() > 12 {
            println!("    ... {} more failures", out.failures.len() - 12);
        }
        let status = if out.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!("criterion {:>2} {status}  {title} ({elapsed:.2?})", i + 1);
        failed += !out.failures.is_empty() as usize;
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
