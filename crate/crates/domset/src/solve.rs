//! One solver run on one graph, shared by `domset solve` and experiments.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use domset_core::approx::{approx_alpha_dom_claw_with, approx_k_dom_claw_with, greedy_domset};
use domset_core::demand::deficiency;
use domset_core::exact::exact_min_domset;
use domset_core::{ApproxResult, DemandSpec, Demands, Graph, MisOrder, SearchStatus, VertexSet};

use crate::error::{DomsetError, Result};
use crate::report::SolveReport;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Solver {
    Exact,
    Greedy,
    Claw,
}

impl Solver {
    pub fn id(self) -> &'static str {
        match self {
            Self::Exact => "exact",
            Self::Greedy => "greedy",
            Self::Claw => "claw",
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Solver {
    type Err = DomsetError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(Self::Exact),
            "greedy" => Ok(Self::Greedy),
            "claw" => Ok(Self::Claw),
            other => Err(DomsetError::usage(format!("unknown solver `{other}` (exact, greedy, claw)"))),
        }
    }
}

/// Claw bound for the layering solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClawP {
    /// Smallest `p` for which the graph is `p`-claw-free.
    Auto,
    Fixed(usize),
}

impl ClawP {
    pub fn resolve(self, g: &Graph) -> usize {
        match self {
            Self::Auto => g.min_claw_free_p(),
            Self::Fixed(p) => p,
        }
    }
}

impl FromStr for ClawP {
    type Err = DomsetError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "auto" => Ok(Self::Auto),
            t => t.parse().map(Self::Fixed).map_err(|_| DomsetError::usage(format!("claw p `{t}` is not auto or an integer"))),
        }
    }
}

/// Whether the layering solver accepts this rule on this graph.
pub fn claw_applicable(g: &Graph, spec: &DemandSpec) -> bool {
    match spec {
        DemandSpec::KDom(_) => true,
        DemandSpec::AlphaDom(a) => a.numer() < a.denom() && g.n() > 0 && g.min_degree() >= 1,
        _ => false,
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub budget: u64,
    pub claw_p: Option<ClawP>,
    pub order: MisOrder,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, claw_p: None, order: MisOrder::AscendingId }
    }
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: SolveReport,
    pub witness: VertexSet,
    /// For the exact solver: whether the search finished within budget.
    pub optimal: Option<bool>,
}

pub fn blank_report(instance: &str, g: &Graph, spec: &DemandSpec, solver: Solver, seed: Option<u64>) -> SolveReport {
    SolveReport {
        instance: instance.into(),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        min_degree: g.min_degree(),
        spec: spec.to_string(),
        solver: solver.id().into(),
        claw_p: None,
        size: 0,
        optimum: None,
        ratio: None,
        bound: None,
        escalated: false,
        seed,
        wall_ms: 0.0,
        layer_sizes: None,
    }
}

/// Runs `solver` and checks the witness against the demands. An exact run
/// that runs out of budget still returns its best set, with `optimal`
/// false and no optimum.
pub fn run(
    instance: &str,
    g: &Graph,
    spec: &DemandSpec,
    demands: &Demands,
    solver: Solver,
    opts: &SolveOptions,
    seed: Option<u64>,
) -> Result<Outcome> {
    let mut report = blank_report(instance, g, spec, solver, seed);
    let start = Instant::now();
    let (witness, optimal) = match solver {
        Solver::Exact => {
            let r = exact_min_domset(g, demands, opts.budget)?;
            let optimal = r.status == SearchStatus::Optimal;
            report.size = r.optimum;
            report.bound = Some(1.0);
            if optimal {
                report.set_optimum(r.optimum);
            }
            (r.witness, Some(optimal))
        }
        Solver::Greedy => {
            let r = greedy_domset(g, demands)?;
            absorb(&mut report, &r);
            (r.witness, None)
        }
        Solver::Claw => {
            let p = opts
                .claw_p
                .ok_or_else(|| DomsetError::usage("the claw solver needs --p <int> (or auto)"))?
                .resolve(g);
            let r = match spec {
                DemandSpec::KDom(k) => approx_k_dom_claw_with(g, *k, p, opts.order)?,
                DemandSpec::AlphaDom(a) => approx_alpha_dom_claw_with(g, *a, p, opts.order)?,
                _ => return Err(DomsetError::usage("the claw solver takes k=<int> or alpha=<a/b>")),
            };
            report.claw_p = Some(p);
            absorb(&mut report, &r);
            (r.witness, None)
        }
    };
    report.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let short = deficiency(g, &witness, demands);
    if !short.is_empty() {
        return Err(DomsetError::Violation(format!(
            "{solver} returned a set that leaves {} vertices short on {instance}",
            short.len()
        )));
    }
    Ok(Outcome { report, witness, optimal })
}

fn absorb(report: &mut SolveReport, r: &ApproxResult) {
    report.size = r.witness.len();
    report.bound = Some(r.claimed_bound);
    report.escalated = r.escalated;
    report.layer_sizes = r.layers.as_ref().map(|ls| ls.iter().map(VertexSet::len).collect());
}
