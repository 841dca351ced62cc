//! Batch studies driven by a plain `key=value` file:
//!
//! ```text
//! # 200 line graphs of random cubic graphs
//! generator = line-regular
//! n = 8..=12
//! d = 3
//! count = 200
//! seed = 1
//! specs = k=1; k=2
//! solvers = exact, claw
//! claw_p = 3
//! require_exact = true
//! ```
//!
//! Instance `i` is generated from a seed derived from `(seed, i)`, so every
//! row is reproducible on its own. Instances run in parallel; rows are
//! emitted in instance order, then spec order, then solver order.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use domset_core::graph::{random_bipartite, random_graph, random_regular};
use domset_core::{DemandSpec, Error as CoreError, Graph, Ratio};
use rayon::prelude::*;

use crate::error::{DomsetError, Result};
use crate::report::{summary_footer, to_csv, SolveReport};
use crate::solve::{claw_applicable, run, ClawP, SolveOptions, Solver, DEFAULT_BUDGET};
use crate::spec_text::parse_demand_spec;

/// Overrides the configured seed when set.
pub const SEED_ENV: &str = "DOMSET_SEED";

/// Resampling attempts per instance when `no_isolated` is set.
pub const RESAMPLE_LIMIT: u64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Regular { n: RangeInclusive<usize>, d: usize },
    /// Line graph of a random `d`-regular graph on `n` vertices.
    LineRegular { n: RangeInclusive<usize>, d: usize },
    Bipartite { n1: RangeInclusive<usize>, n2: RangeInclusive<usize>, p: Ratio },
    Random { n: RangeInclusive<usize>, p: Ratio },
}

impl Generator {
    pub fn id(&self) -> &'static str {
        match self {
            Self::Regular { .. } => "regular",
            Self::LineRegular { .. } => "line-regular",
            Self::Bipartite { .. } => "bipartite",
            Self::Random { .. } => "random",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub name: String,
    pub generator: Generator,
    pub no_isolated: bool,
    pub count: usize,
    pub seed: u64,
    pub specs: Vec<DemandSpec>,
    pub solvers: Vec<Solver>,
    pub claw_p: ClawP,
    pub budget: u64,
    /// Fail (exit 3) instead of leaving the optimum blank when the exact
    /// search runs out of budget.
    pub require_exact: bool,
    pub output: Option<PathBuf>,
}

fn parse_range(key: &str, v: &str) -> Result<RangeInclusive<usize>> {
    let bad = || DomsetError::usage(format!("{key} = `{v}`: expected an integer or lo..=hi"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    let r = match v.split_once("..=") {
        Some((lo, hi)) => num(lo)?..=num(hi)?,
        None => {
            let x = num(v)?;
            x..=x
        }
    };
    if r.is_empty() {
        return Err(bad());
    }
    Ok(r)
}

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(DomsetError::usage(format!("{key} = `{v}`: expected true or false"))),
    }
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T> {
    v.parse().map_err(|_| DomsetError::usage(format!("{key} = `{v}`: expected an integer")))
}

impl ExperimentConfig {
    /// Parses a config; `vector=@file` specs and `output` resolve against
    /// `base`.
    pub fn parse(text: &str, base: &Path) -> Result<Self> {
        let mut kv = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| DomsetError::usage(format!("config line {}: expected key = value", i + 1)))?;
            if kv.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(DomsetError::usage(format!("config line {}: duplicate key `{}`", i + 1, k.trim())));
            }
        }
        let mut take = |k: &str| kv.remove(k);
        let required = |k: &str, v: Option<String>| v.ok_or_else(|| DomsetError::usage(format!("config is missing `{k}`")));

        let gen_id = required("generator", take("generator"))?;
        let ratio = |v: Option<String>| -> Result<Ratio> {
            let r: Ratio = v.as_deref().unwrap_or("1/2").parse().map_err(|e: CoreError| DomsetError::usage(format!("edge_p: {e}")))?;
            if !r.is_unit_fraction_range() {
                return Err(DomsetError::usage("edge_p must lie in (0, 1]"));
            }
            Ok(r)
        };
        let d = |v: Option<String>| v.map_or(Ok(3), |v| parse_num("d", &v));
        let generator = match gen_id.as_str() {
            "regular" => Generator::Regular { n: parse_range("n", &required("n", take("n"))?)?, d: d(take("d"))? },
            "line-regular" => {
                Generator::LineRegular { n: parse_range("n", &required("n", take("n"))?)?, d: d(take("d"))? }
            }
            "bipartite" => Generator::Bipartite {
                n1: parse_range("n1", &required("n1", take("n1"))?)?,
                n2: parse_range("n2", &required("n2", take("n2"))?)?,
                p: ratio(take("edge_p"))?,
            },
            "random" => Generator::Random { n: parse_range("n", &required("n", take("n"))?)?, p: ratio(take("edge_p"))? },
            other => {
                return Err(DomsetError::usage(format!(
                    "unknown generator `{other}` (regular, line-regular, bipartite, random)"
                )))
            }
        };
        let count: usize = parse_num("count", &required("count", take("count"))?)?;
        if count == 0 {
            return Err(DomsetError::usage("count must be at least 1"));
        }
        let specs = required("specs", take("specs"))?
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| parse_demand_spec(s, base))
            .collect::<Result<Vec<_>>>()?;
        if specs.is_empty() {
            return Err(DomsetError::usage("specs is empty"));
        }
        let solvers = take("solvers")
            .unwrap_or_else(|| "exact,greedy".into())
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Solver>>>()?;
        let budget = take("budget").map_or(Ok(DEFAULT_BUDGET), |v| parse_num("budget", &v))?;
        if budget == 0 {
            return Err(DomsetError::usage("budget must be positive"));
        }
        let config = Self {
            name: take("name").unwrap_or_else(|| generator.id().into()),
            no_isolated: take("no_isolated").map_or(Ok(false), |v| parse_bool("no_isolated", &v))?,
            count,
            seed: take("seed").map_or(Ok(0), |v| parse_num("seed", &v))?,
            specs,
            solvers,
            claw_p: take("claw_p").map_or(Ok(ClawP::Auto), |v| v.parse())?,
            budget,
            require_exact: take("require_exact").map_or(Ok(false), |v| parse_bool("require_exact", &v))?,
            output: take("output").map(|p| base.join(p)),
            generator,
        };
        if let Some(k) = kv.keys().next() {
            return Err(DomsetError::usage(format!("unknown config key `{k}`")));
        }
        Ok(config)
    }

    /// Applies `DOMSET_SEED` if it is set.
    pub fn apply_seed_env(&mut self) -> Result<()> {
        if let Ok(v) = std::env::var(SEED_ENV) {
            self.seed = parse_num(SEED_ENV, v.trim())?;
        }
        Ok(())
    }
}

/// SplitMix64 finalizer, used to spread consecutive seeds apart.
pub fn mix_seed(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: String,
    pub graph: Graph,
    /// Seed passed to the generator for the accepted sample.
    pub seed: u64,
}

fn pick(range: &RangeInclusive<usize>, valid: impl Fn(usize) -> bool, key: u64) -> Result<usize> {
    let options: Vec<usize> = range.clone().filter(|&n| valid(n)).collect();
    if options.is_empty() {
        return Err(DomsetError::usage(format!("no feasible size in {}..={}", range.start(), range.end())));
    }
    Ok(options[(key % options.len() as u64) as usize])
}

/// Generates instance `index` of the configuration.
pub fn generate_instance(config: &ExperimentConfig, index: usize) -> Result<Instance> {
    let key = mix_seed(config.seed.wrapping_add(index as u64));
    let regular_ok = |d: usize| move |n: usize| d < n && (n * d).is_multiple_of(2);
    let sample = |seed: u64| -> Result<Graph> {
        Ok(match &config.generator {
            Generator::Regular { n, d } => random_regular(pick(n, regular_ok(*d), key)?, *d, seed)?,
            Generator::LineRegular { n, d } => {
                random_regular(pick(n, |n| regular_ok(*d)(n) && *d > 0, key)?, *d, seed)?.line_graph()?
            }
            Generator::Bipartite { n1, n2, p } => {
                let a = pick(n1, |_| true, key)?;
                let b = pick(n2, |_| true, key / (n1.clone().count() as u64))?;
                random_bipartite(a, b, p.numer(), p.denom(), seed)?
            }
            Generator::Random { n, p } => random_graph(pick(n, |_| true, key)?, p.numer(), p.denom(), seed)?,
        })
    };
    let id = format!("{}-{index:04}", config.name);
    for attempt in 0..RESAMPLE_LIMIT {
        let seed = mix_seed(key.wrapping_add(attempt));
        let graph = sample(seed)?;
        if !config.no_isolated || graph.min_degree() >= 1 {
            return Ok(Instance { id, graph, seed });
        }
    }
    Err(CoreError::RetryBudgetExhausted(RESAMPLE_LIMIT as usize).into())
}

/// Rows for one instance.
pub fn run_instance(config: &ExperimentConfig, inst: &Instance) -> Result<Vec<SolveReport>> {
    let opts = SolveOptions { budget: config.budget, claw_p: Some(config.claw_p), ..Default::default() };
    let mut rows = Vec::new();
    for spec in &config.specs {
        let demands = spec.resolve(&inst.graph)?;
        let mut optimum = None;
        let mut spec_rows = Vec::new();
        for &solver in &config.solvers {
            if solver == Solver::Claw && !claw_applicable(&inst.graph, spec) {
                continue;
            }
            let out = run(&inst.id, &inst.graph, spec, &demands, solver, &opts, Some(inst.seed))?;
            if out.optimal == Some(true) {
                optimum = Some(out.report.size);
            } else if out.optimal == Some(false) && config.require_exact {
                return Err(DomsetError::Core(CoreError::BudgetExhausted(config.budget)));
            }
            spec_rows.push(out.report);
        }
        if let Some(opt) = optimum {
            for r in spec_rows.iter_mut().filter(|r| r.optimum.is_none()) {
                r.set_optimum(opt);
            }
        }
        rows.extend(spec_rows);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub rows: Vec<SolveReport>,
}

impl ExperimentReport {
    pub fn violations(&self) -> Vec<&SolveReport> {
        self.rows.iter().filter(|r| r.bound_violated()).collect()
    }

    /// Rows followed by the summary footer.
    pub fn to_csv(&self, timing: bool) -> String {
        to_csv(&self.rows, timing) + &summary_footer(&self.rows)
    }
}

pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let per_instance: Vec<Result<Vec<SolveReport>>> = (0..config.count)
        .into_par_iter()
        .map(|i| generate_instance(config, i).and_then(|inst| run_instance(config, &inst)))
        .collect();
    let mut rows = Vec::new();
    for r in per_instance {
        rows.extend(r?);
    }
    Ok(ExperimentReport { rows })
}
