//! Seeded generators. All randomness comes from ChaCha8 seeded with the
//! caller's `u64`, so outputs are identical across platforms.

use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::{Error, Result};

/// Attempts the pairing model makes before giving up.
pub const REGULAR_RETRY_BUDGET: usize = 1000;

/// Uniform `d`-regular graph on `n` vertices via the pairing (configuration)
/// model, rejecting pairings that contain loops or repeated edges.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("regular graph needs at least one vertex".into()));
    }
    if d >= n {
        return Err(Error::InfeasibleDegrees(format!("degree {d} needs more than {n} vertices")));
    }
    if (n * d) % 2 == 1 {
        return Err(Error::InfeasibleDegrees(format!("n·d = {} is odd", n * d)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n).flat_map(|v| core::iter::repeat_n(v, d)).collect();
    'attempt: for _ in 0..REGULAR_RETRY_BUDGET {
        points.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = points
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        edges.sort_unstable();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u == v || (i > 0 && edges[i - 1] == (u, v)) {
                continue 'attempt;
            }
        }
        return Graph::new(n, edges);
    }
    Err(Error::RetryBudgetExhausted(REGULAR_RETRY_BUDGET))
}

fn check_probability(num: u64, den: u64) -> Result<()> {
    if den == 0 || num > den {
        return Err(Error::InvalidParameter(format!("edge probability {num}/{den} not in [0, 1]")));
    }
    Ok(())
}

fn coin(rng: &mut ChaCha8Rng, num: u64, den: u64) -> bool {
    rng.gen_range(0..den) < num
}

/// Random bipartite graph with parts `0..n1` and `n1..n1+n2`; each cross
/// pair becomes an edge with probability `p_num / p_den`.
pub fn random_bipartite(n1: usize, n2: usize, p_num: u64, p_den: u64, seed: u64) -> Result<Graph> {
    check_probability(p_num, p_den)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if coin(&mut rng, p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n1 + n2, edges)
}

/// Erdős–Rényi `G(n, p)` with `p = p_num / p_den`.
pub fn random_graph(n: usize, p_num: u64, p_den: u64, seed: u64) -> Result<Graph> {
    check_probability(p_num, p_den)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if coin(&mut rng, p_num, p_den) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}
