//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p domset --test acceptance`. The process exits
//! nonzero if any criterion fails. Time limits are checked on the
//! wall-clock time of each criterion in whatever profile the suite runs.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::{Duration, Instant};

use domset::experiment::{run_experiment, ExperimentConfig};
use domset::report::SolveReport;
use domset_core::demand::{find_xy, is_dominating};
use domset_core::exact::{brute_force_min_domset, exact_min_domset};
use domset_core::gadgets::{check_reduction, fdm_backward, fdm_forward, reduce_alpha_bipartite, reduce_bipartite_kdom, reduce_fdm, reduce_pendant_kdom};
use domset_core::graph::{random_bipartite, random_graph};
use domset_core::{Bipartition, DemandSpec, Demands, FFunction, Graph, Ratio, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: u64 = 50_000_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("find_xy table pairs", Duration::from_secs(1), c1_table),
        ("pendant equality, connected n<=6, Delta<=3", Duration::from_secs(300), c2_pendant),
        ("fdm iff and round trips", Duration::from_secs(120), c3_fdm),
        ("claw-free ratio certificate", Duration::from_secs(600), c4_claw),
        ("MIS layer lower bounds", Duration::from_secs(600), c5_layers),
        ("greedy ln(2 Delta)+1 bound", Duration::from_secs(600), c6_greedy),
        ("bipartite-k gadget bound", Duration::from_secs(600), c7_bipartite),
        ("alpha gadget sandwich", Duration::from_secs(600), c8_alpha),
        ("oracle equivalence", Duration::from_secs(600), c9_oracles),
        ("report determinism", Duration::from_secs(1200), c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > *limit => Err(format!("{detail}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({took:.2?})", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn optimum(g: &Graph, d: &Demands) -> Result<(usize, VertexSet), String> {
    let r = exact_min_domset(g, d, BUDGET).map_err(|e| e.to_string())?;
    let r = r.require_optimal().map_err(|e| e.to_string())?;
    Ok((r.optimum, r.witness))
}

fn resolve(g: &Graph, spec: &DemandSpec) -> Demands {
    spec.resolve(g).expect("rule resolves")
}

fn c1_table() -> Outcome {
    for (f, pair) in [(FFunction::Half, (1, 2)), (FFunction::SqrtPlusOne, (3, 4)), (FFunction::TwoLogHalf, (2, 3))] {
        let pairs = find_xy(&f, 50);
        ensure(pairs.contains(&pair), || format!("{f}: {pair:?} missing from {pairs:?}"))?;
    }
    let sqrt = find_xy(&FFunction::SqrtPlusOne, 50);
    let log = find_xy(&FFunction::TwoLogHalf, 50);
    ensure(sqrt == [(3, 4)] && log == [(2, 3)], || format!("unexpected extra pairs: {sqrt:?} {log:?}"))?;
    Ok(format!("half {:?}, sqrt_plus_one {sqrt:?}, two_log_half {log:?}", find_xy(&FFunction::Half, 50)))
}

/// Edge bitmask over pairs (u, v), u < v, in lexicographic order.
fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(prefix.clone());
        }
        for i in 0..left.len() {
            let v = left.remove(i);
            prefix.push(v);
            go(prefix, left, out);
            prefix.pop();
            left.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices with maximum degree at most 3.
fn connected_subcubic(n: usize) -> Vec<Graph> {
    let pairs = pair_index(n);
    let perms = permutations(n);
    let slot = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let mut classes = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        let mut deg = vec![0; n];
        for &(u, v) in &edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        // every class has a labeling with non-increasing degrees
        if deg.iter().any(|&d| d > 3) || deg.windows(2).any(|w| w[0] < w[1]) || !connected(n, &edges) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| edges.iter().fold(0u32, |m, &(u, v)| m | 1 << slot(p[u], p[v])))
            .min()
            .unwrap();
        if classes.insert(canon) {
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

fn c2_pendant() -> Outcome {
    let mut counts = Vec::new();
    let mut checks = 0;
    for n in 1..=6 {
        let graphs = connected_subcubic(n);
        counts.push(graphs.len());
        for g in &graphs {
            let (gamma, _) = optimum(g, &resolve(g, &DemandSpec::KDom(1)))?;
            for k in [2u32, 3] {
                let red = reduce_pendant_kdom(g, k).map_err(|e| e.to_string())?;
                let (gamma_k, _) = optimum(&red.gadget, &resolve(&red.gadget, &DemandSpec::KDom(k)))?;
                let rhs = gamma + (k as usize - 1) * n;
                ensure(gamma_k == rhs, || format!("{:?}, k={k}: gamma_k = {gamma_k}, expected {rhs}", g.edges().collect::<Vec<_>>()))?;
                checks += 1;
            }
        }
    }
    // connected graphs with maximum degree <= 3 on 1..6 vertices
    ensure(counts == [1, 1, 2, 6, 10, 29], || format!("class counts {counts:?}"))?;
    Ok(format!("{checks} (graph, k) pairs, class counts {counts:?}"))
}

fn prism() -> Graph {
    Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]).unwrap()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).unwrap()
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..1 << n).map(move |m| VertexSet::new(n, (0..n).filter(|v| m >> v & 1 == 1)).unwrap())
}

fn c3_fdm() -> Outcome {
    let graphs = [("K4", Graph::complete(4).unwrap()), ("K33", Graph::complete_bipartite(3, 3).unwrap()), ("prism", prism()), ("Petersen", petersen())];
    let mut summary = Vec::new();
    let mut maps = 0;
    for (name, g) in graphs {
        let red = reduce_fdm(&g, FFunction::Half, 1, 2).map_err(|e| e.to_string())?;
        let src = resolve(&g, &DemandSpec::KDom(1));
        let gad = resolve(&red.gadget, &DemandSpec::FDom(FFunction::Half));
        let gamma = brute_force_min_domset(&g, &src).map_err(|e| e.to_string())?.optimum;
        let gamma_f = brute_force_min_domset(&red.gadget, &gad).map_err(|e| e.to_string())?.optimum;
        ensure(gamma_f == 1 + gamma, || format!("{name}: gamma_f = {gamma_f}, gamma = {gamma}"))?;
        for s in subsets(g.n()).filter(|s| is_dominating(&g, s, &src)) {
            let d = fdm_forward(&s, &red).map_err(|e| format!("{name}: forward {s}: {e}"))?;
            ensure(d.len() == s.len() + 1 && is_dominating(&red.gadget, &d, &gad), || format!("{name}: forward {s} -> {d}"))?;
            let back = fdm_backward(&d, &red).map_err(|e| format!("{name}: backward {d}: {e}"))?;
            ensure(back == s, || format!("{name}: backward(forward({s})) = {back}"))?;
            maps += 1;
        }
        for d in subsets(red.gadget.n()).filter(|d| is_dominating(&red.gadget, d, &gad)) {
            let s = fdm_backward(&d, &red).map_err(|e| format!("{name}: backward {d}: {e}"))?;
            ensure(is_dominating(&g, &s, &src) && s.len() < d.len(), || format!("{name}: backward {d} -> {s}"))?;
            maps += 1;
        }
        summary.push(format!("{name} {gamma_f}=1+{gamma}"));
    }
    Ok(format!("{}; {maps} mapped sets verified", summary.join(", ")))
}

fn config(text: &str) -> ExperimentConfig {
    ExperimentConfig::parse(text, Path::new(".")).expect("acceptance config parses")
}

fn claw_config() -> ExperimentConfig {
    config(
        "name = line\ngenerator = line-regular\nn = 8..=12\nd = 3\ncount = 200\nseed = 20240604\n\
         specs = k=1; k=2\nsolvers = exact, claw\nclaw_p = 3\nbudget = 50000000\nrequire_exact = true\n",
    )
}

fn greedy_config() -> ExperimentConfig {
    config(
        "name = gnp\ngenerator = random\nn = 6..=18\nedge_p = 1/3\ncount = 200\nseed = 7031\n\
         specs = k=2; alpha=1/2; f=half\nsolvers = exact, greedy\nbudget = 50000000\nrequire_exact = true\n",
    )
}

fn run(c: &ExperimentConfig) -> Result<Vec<SolveReport>, String> {
    run_experiment(c).map(|r| r.rows).map_err(|e| e.to_string())
}

fn c4_claw() -> Outcome {
    let rows = run(&claw_config())?;
    let claw: Vec<_> = rows.iter().filter(|r| r.solver == "claw").collect();
    ensure(claw.len() == 400, || format!("expected 400 claw rows, got {}", claw.len()))?;
    let mut worst: f64 = 0.0;
    for r in &claw {
        let k: usize = r.spec.trim_start_matches("k=").parse().unwrap();
        let opt = r.optimum.ok_or_else(|| format!("{}: no optimum", r.instance))?;
        ensure(r.bound == Some(2usize.max(k) as f64), || format!("{} {}: bound {:?}", r.instance, r.spec, r.bound))?;
        ensure(r.size <= 2usize.max(k) * opt, || format!("{} {}: size {} optimum {opt}", r.instance, r.spec, r.size))?;
        worst = worst.max(r.size as f64 / opt as f64);
    }
    Ok(format!("{} runs verified, worst ratio {worst:.3}", claw.len()))
}

fn c5_layers() -> Outcome {
    let rows = run(&claw_config())?;
    let mut layers = 0;
    for r in rows.iter().filter(|r| r.solver == "claw") {
        let k: usize = r.spec.trim_start_matches("k=").parse().unwrap();
        let opt = r.optimum.unwrap();
        for &size in r.layer_sizes.as_ref().unwrap() {
            // optimum >= min{k/2, 1} |I|
            ensure(2 * opt >= k.min(2) * size, || format!("{} {}: layer {size}, optimum {opt}", r.instance, r.spec))?;
            layers += 1;
        }
    }
    Ok(format!("{layers} layers checked"))
}

fn c6_greedy() -> Outcome {
    let rows = run(&greedy_config())?;
    let greedy: Vec<_> = rows.iter().filter(|r| r.solver == "greedy").collect();
    ensure(greedy.len() == 600, || format!("expected 600 greedy rows, got {}", greedy.len()))?;
    let mut worst: f64 = 0.0;
    for r in &greedy {
        let opt = r.optimum.unwrap();
        let bound = (2.0 * r.max_degree.max(1) as f64).ln() + 1.0;
        ensure(r.size as f64 <= bound * opt as f64 + 1e-9, || format!("{} {}: size {} optimum {opt} bound {bound}", r.instance, r.spec, r.size))?;
        worst = worst.max(r.ratio.unwrap());
    }
    Ok(format!("{} runs verified, worst ratio {worst:.3}", greedy.len()))
}

/// All sets of `size` vertices that satisfy `demands`.
fn all_optimal(g: &Graph, demands: &Demands, size: usize) -> Vec<VertexSet> {
    fn go(g: &Graph, d: &Demands, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == size {
            let s = VertexSet::new(g.n(), cur.iter().copied()).unwrap();
            if is_dominating(g, &s, d) {
                out.push(s);
            }
            return;
        }
        for v in start..g.n() {
            cur.push(v);
            go(g, d, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(g, demands, size, 0, &mut Vec::new(), &mut out);
    out
}

fn c7_bipartite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8008);
    let mut backward = 0;
    for i in 0..100 {
        let (n1, n2) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let g = random_bipartite(n1, n2, 1, 2, rng.gen()).unwrap();
        let bip = Bipartition::from_prefix(g.n(), n1).unwrap();
        for k in [2u32, 3] {
            let red = reduce_bipartite_kdom(&g, &bip, k).map_err(|e| e.to_string())?;
            let check = check_reduction(&red, BUDGET).map_err(|e| format!("instance {i}, k={k}: {e}"))?;
            ensure(check.holds, || format!("instance {i}, k={k}: {}", check.relation))?;
            let src = resolve(&g, &DemandSpec::KDom(1));
            let gad = resolve(&red.gadget, &DemandSpec::KDom(k));
            for d in all_optimal(&red.gadget, &gad, check.gadget_optimum) {
                let s = red.backward(&d).map_err(|e| format!("instance {i}, k={k}: backward {d}: {e}"))?;
                ensure(is_dominating(&g, &s, &src), || format!("instance {i}, k={k}: backward {d} = {s}"))?;
                backward += 1;
            }
        }
    }
    Ok(format!("200 (graph, k) pairs, {backward} optimal gadget sets mapped back"))
}

fn c8_alpha() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9009);
    let alpha = Ratio::new(1, 2).unwrap();
    let mut done = 0;
    let mut attempts = 0;
    while done < 50 {
        attempts += 1;
        let (n1, n2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let g = random_bipartite(n1, n2, 1, 2, rng.gen()).unwrap();
        if g.min_degree() == 0 {
            continue;
        }
        let red = reduce_alpha_bipartite(&g, &Bipartition::from_prefix(g.n(), n1).unwrap(), alpha).map_err(|e| e.to_string())?;
        let check = check_reduction(&red, BUDGET).map_err(|e| format!("instance {done}: {e}"))?;
        let delta = g.max_degree();
        ensure(
            check.source_optimum <= check.gadget_optimum && check.gadget_optimum <= check.source_optimum + 2 * delta,
            || format!("instance {done}: {}", check.relation),
        )?;
        done += 1;
    }
    Ok(format!("50 graphs without isolated vertices ({attempts} sampled), N = 1"))
}

fn random_spec(rng: &mut ChaCha8Rng) -> DemandSpec {
    match rng.gen_range(0..6) {
        0 => DemandSpec::KDom(rng.gen_range(1..=3)),
        1 => {
            let b = rng.gen_range(1..=4);
            DemandSpec::AlphaDom(Ratio::new(rng.gen_range(1..=b), b).unwrap())
        }
        2 => DemandSpec::FDom(FFunction::Half),
        3 => DemandSpec::FDom(FFunction::SqrtPlusOne),
        4 => DemandSpec::FDom(FFunction::TwoLogHalf),
        _ => DemandSpec::FDom(FFunction::Constant(rng.gen_range(1..=2))),
    }
}

/// Demand by hand, from the degree.
fn naive_demand(spec: &DemandSpec, d: u64) -> u32 {
    match spec {
        DemandSpec::KDom(k) => *k,
        DemandSpec::AlphaDom(a) => (a.numer() * d).div_ceil(a.denom()) as u32,
        DemandSpec::FDom(FFunction::Half) => d.div_ceil(2) as u32,
        DemandSpec::FDom(FFunction::SqrtPlusOne) => (0..).find(|s: &u64| s * s >= d).unwrap() as u32 + 1,
        DemandSpec::FDom(FFunction::TwoLogHalf) => (2.0 * (1.0 + d as f64 / 2.0).ln()).ceil() as u32,
        DemandSpec::FDom(FFunction::Constant(c)) => *c as u32,
        _ => unreachable!(),
    }
}

/// Counts neighbors from the edge list.
fn naive_dominating(g: &Graph, set: &[bool], spec: &DemandSpec) -> bool {
    let mut deg = vec![0u64; g.n()];
    let mut hits = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        deg[u] += 1;
        deg[v] += 1;
        hits[u] += set[v] as u32;
        hits[v] += set[u] as u32;
    }
    (0..g.n()).all(|v| set[v] || hits[v] >= naive_demand(spec, deg[v]))
}

fn c9_oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1212);
    for i in 0..500 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(n, rng.gen_range(1..=3), 4, rng.gen()).unwrap();
        let spec = random_spec(&mut rng);
        let d = resolve(&g, &spec);
        let brute = brute_force_min_domset(&g, &d).map_err(|e| e.to_string())?;
        let (exact, _) = optimum(&g, &d)?;
        ensure(brute.optimum == exact, || format!("instance {i} ({spec}): brute {} exact {exact}", brute.optimum))?;
    }
    let mut agree = 0;
    for i in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(n, rng.gen_range(1..=3), 4, rng.gen()).unwrap();
        let spec = random_spec(&mut rng);
        let mask: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let set = VertexSet::from_mask(&mask);
        let fast = is_dominating(&g, &set, &resolve(&g, &spec));
        ensure(fast == naive_dominating(&g, &mask, &spec), || format!("triple {i} ({spec}, {set}): verifier says {fast}"))?;
        agree += fast as usize;
    }
    Ok(format!("500 optimum pairs equal; 1000 verifier triples agree ({agree} dominating)"))
}

fn c10_determinism() -> Outcome {
    let pinned = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    for (name, c) in [("claw", claw_config()), ("greedy", greedy_config())] {
        let a = run_experiment(&c).map_err(|e| e.to_string())?.to_csv(false);
        let b = run_experiment(&c).map_err(|e| e.to_string())?.to_csv(false);
        let serial = pinned.install(|| run_experiment(&c)).map_err(|e| e.to_string())?.to_csv(false);
        ensure(a == b, || format!("{name}: two runs differ"))?;
        ensure(a == serial, || format!("{name}: single-threaded run differs"))?;
    }
    Ok("criteria 4 and 6 reports identical across two parallel runs and one serial run".into())
}
