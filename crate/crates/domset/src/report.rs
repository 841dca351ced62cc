//! Result rows. Single solves print one row as JSON; experiments write CSV.

use serde::Serialize;

/// Slack allowed when comparing `size` against `bound * optimum`.
pub const BOUND_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub spec: String,
    pub solver: String,
    /// Claw bound passed to the layering solver.
    pub claw_p: Option<usize>,
    pub size: usize,
    pub optimum: Option<usize>,
    pub ratio: Option<f64>,
    pub bound: Option<f64>,
    pub escalated: bool,
    pub seed: Option<u64>,
    pub wall_ms: f64,
    /// Sizes of the MIS layers, for the layering solver.
    #[serde(skip)]
    pub layer_sizes: Option<Vec<usize>>,
}

impl SolveReport {
    /// Fills `optimum` and `ratio`. A zero optimum with an empty witness
    /// counts as ratio 1.
    pub fn set_optimum(&mut self, optimum: usize) {
        self.optimum = Some(optimum);
        self.ratio = Some(match (self.size, optimum) {
            (0, 0) => 1.0,
            (_, 0) => f64::INFINITY,
            (s, o) => s as f64 / o as f64,
        });
    }

    /// `size > bound * optimum`, when both are known.
    pub fn bound_violated(&self) -> bool {
        match (self.optimum, self.bound) {
            (Some(opt), Some(bound)) => self.size as f64 > bound * opt as f64 + BOUND_TOLERANCE,
            _ => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

pub const CSV_COLUMNS: [&str; 15] = [
    "instance",
    "n",
    "m",
    "max_degree",
    "min_degree",
    "spec",
    "solver",
    "claw_p",
    "size",
    "optimum",
    "ratio",
    "bound",
    "escalated",
    "seed",
    "wall_ms",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn real(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.6}")).unwrap_or_default()
}

/// CSV rows; `wall_ms` is left out when `timing` is false, which makes the
/// output byte-identical across runs with the same configuration.
pub fn to_csv(rows: &[SolveReport], timing: bool) -> String {
    let cols = if timing { &CSV_COLUMNS[..] } else { &CSV_COLUMNS[..CSV_COLUMNS.len() - 1] };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(cols).expect("in-memory write");
    for r in rows {
        let mut fields = vec![
            r.instance.clone(),
            r.n.to_string(),
            r.m.to_string(),
            r.max_degree.to_string(),
            r.min_degree.to_string(),
            r.spec.clone(),
            r.solver.clone(),
            opt(r.claw_p),
            r.size.to_string(),
            opt(r.optimum),
            real(r.ratio),
            real(r.bound),
            r.escalated.to_string(),
            opt(r.seed),
        ];
        if timing {
            fields.push(format!("{:.3}", r.wall_ms));
        }
        w.write_record(&fields).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("fields are UTF-8")
}

/// Largest ratio per solver, in first-seen solver order.
pub fn max_ratios(rows: &[SolveReport]) -> Vec<(String, f64)> {
    let mut out: Vec<(String, f64)> = Vec::new();
    for r in rows {
        let Some(ratio) = r.ratio else { continue };
        match out.iter_mut().find(|(s, _)| *s == r.solver) {
            Some((_, best)) => *best = best.max(ratio),
            None => out.push((r.solver.clone(), ratio)),
        }
    }
    out
}

/// `# max_ratio,<solver>,<value>` per solver and `# violations,<count>`.
pub fn summary_footer(rows: &[SolveReport]) -> String {
    let mut out = String::new();
    for (solver, ratio) in max_ratios(rows) {
        out.push_str(&format!("# max_ratio,{solver},{ratio:.6}\n"));
    }
    let violations = rows.iter().filter(|r| r.bound_violated()).count();
    out.push_str(&format!("# violations,{violations}\n"));
    out
}
