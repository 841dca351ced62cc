//! Exact minimum dominating sets for small instances.
//!
//! [`exact_min_domset`] is a branch-and-bound over include/exclude decisions
//! with constraint propagation. [`brute_force_min_domset`] enumerates subsets
//! by increasing size and shares no code with it, so the two can check each
//! other.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::approx::greedy_domset;
use crate::demand::{is_dominating, Demands};
use crate::graph::{Graph, VertexSet};
use crate::{Error, Result};

/// Largest graph accepted by [`brute_force_min_domset`].
pub const BRUTE_FORCE_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    BruteForce,
    BranchAndBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    /// No smaller dominating set exists.
    Optimal,
    /// The node budget ran out; `witness` is the best set found so far and
    /// `optimum` is only an upper bound.
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: SearchMethod,
    pub status: SearchStatus,
}

impl ExactResult {
    pub fn is_optimal(&self) -> bool {
        self.status == SearchStatus::Optimal
    }

    /// Turns an exhausted search into [`Error::BudgetExhausted`].
    pub fn require_optimal(self) -> Result<Self> {
        match self.status {
            SearchStatus::Optimal => Ok(self),
            SearchStatus::BudgetExhausted => Err(Error::BudgetExhausted(self.nodes_explored)),
        }
    }
}

fn check_lengths(g: &Graph, demands: &Demands) -> Result<()> {
    if demands.len() != g.n() {
        return Err(Error::DemandLength { got: demands.len(), n: g.n() });
    }
    Ok(())
}

/// `⌈n⁺ · r_min / (Δ + r_min)⌉`, where `r_min` is the smallest positive
/// demand and `n⁺` the number of vertices with positive demand.
///
/// Counting edges between `D` and the positive-demand vertices outside it:
/// each outside vertex receives at least `r_min`, each member sends at most
/// `Δ`, so `(n⁺ - |D|)·r_min <= |D|·Δ`.
pub fn lower_bound(g: &Graph, demands: &Demands) -> usize {
    let positive = demands.as_slice().iter().filter(|&&r| r > 0);
    let n_pos = positive.clone().count() as u64;
    let Some(&r_min) = positive.min() else {
        return 0;
    };
    let r_min = u64::from(r_min);
    (n_pos * r_min).div_ceil(g.max_degree() as u64 + r_min) as usize
}

/// Exhaustive search by increasing cardinality; the first verifying subset
/// is returned.
pub fn brute_force_min_domset(g: &Graph, demands: &Demands) -> Result<ExactResult> {
    check_lengths(g, demands)?;
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge { n, cap: BRUTE_FORCE_CAP });
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let dominates = |mask: u32| {
        (0..n).all(|v| mask & (1 << v) != 0 || (adj[v] & mask).count_ones() >= demands.get(v))
    };
    let mut nodes = 0u64;
    for size in 0..=n {
        // Gosper's hack walks all `size`-subsets of `0..n` in increasing order.
        let limit: u64 = 1 << n;
        let mut mask: u64 = (1u64 << size) - 1;
        while mask < limit {
            nodes += 1;
            if dominates(mask as u32) {
                let witness = VertexSet::new(n, (0..n).filter(|&v| mask & (1 << v) != 0))?;
                return Ok(ExactResult {
                    optimum: size,
                    witness,
                    nodes_explored: nodes,
                    method: SearchMethod::BruteForce,
                    status: SearchStatus::Optimal,
                });
            }
            if size == 0 {
                break;
            }
            let low = mask & mask.wrapping_neg();
            let ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    unreachable!("the full vertex set always dominates")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Free,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    status: Vec<Status>,
    /// Demand still unmet by chosen neighbors.
    residual: Vec<u32>,
    /// Number of undecided neighbors.
    free: Vec<u32>,
    size: usize,
}

impl State {
    fn include(&mut self, g: &Graph, v: usize) {
        debug_assert_eq!(self.status[v], Status::Free);
        self.status[v] = Status::In;
        self.size += 1;
        for &w in g.neighbors(v) {
            self.free[w] -= 1;
            self.residual[w] = self.residual[w].saturating_sub(1);
        }
    }

    fn exclude(&mut self, g: &Graph, v: usize) {
        debug_assert_eq!(self.status[v], Status::Free);
        self.status[v] = Status::Out;
        for &w in g.neighbors(v) {
            self.free[w] -= 1;
        }
    }

    /// Applies forced decisions until nothing changes. Returns false when
    /// some excluded vertex can no longer be satisfied.
    fn propagate(&mut self, g: &Graph) -> bool {
        loop {
            let mut changed = false;
            for v in g.vertices() {
                match self.status[v] {
                    Status::In => {}
                    Status::Free => {
                        if self.residual[v] > self.free[v] {
                            self.include(g, v);
                            changed = true;
                        }
                    }
                    Status::Out => {
                        if self.residual[v] > self.free[v] {
                            return false;
                        }
                        if self.residual[v] > 0 && self.residual[v] == self.free[v] {
                            for i in 0..g.degree(v) {
                                let w = g.neighbors(v)[i];
                                if self.status[w] == Status::Free {
                                    self.include(g, w);
                                }
                            }
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn unmet(&self, v: usize) -> bool {
        self.status[v] != Status::In && self.residual[v] > 0
    }

    /// Demand removed from the instance if `v` joins the set.
    fn gain(&self, g: &Graph, v: usize) -> u64 {
        u64::from(self.residual[v]) + g.neighbors(v).iter().filter(|&&w| self.unmet(w)).count() as u64
    }
}

struct Search<'a> {
    g: &'a Graph,
    budget: u64,
    nodes: u64,
    best_size: usize,
    best: Option<Vec<Status>>,
    exhausted: bool,
}

impl Search<'_> {
    fn run(&mut self, mut state: State) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if !state.propagate(self.g) || state.size >= self.best_size {
            return;
        }

        let remaining: u64 = self
            .g
            .vertices()
            .filter(|&v| state.unmet(v))
            .map(|v| u64::from(state.residual[v]))
            .sum();
        if remaining == 0 {
            self.best_size = state.size;
            self.best = Some(state.status);
            return;
        }

        let mut gains: Vec<(u64, usize)> = self
            .g
            .vertices()
            .filter(|&v| state.status[v] == Status::Free)
            .map(|v| (state.gain(self.g, v), v))
            .filter(|&(gain, _)| gain > 0)
            .collect();
        // Fewest extra vertices whose combined gain could clear `remaining`.
        let mut sorted: Vec<u64> = gains.iter().map(|&(gain, _)| gain).collect();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut covered = 0;
        let mut needed = None;
        for (i, gain) in sorted.iter().enumerate() {
            covered += gain;
            if covered >= remaining {
                needed = Some(i + 1);
                break;
            }
        }
        let Some(needed) = needed else { return };
        if state.size + needed >= self.best_size {
            return;
        }

        // Highest gain, lowest id on ties.
        gains.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let pivot = gains[0].1;

        let mut with = state.clone();
        with.include(self.g, pivot);
        self.run(with);

        state.exclude(self.g, pivot);
        self.run(state);
    }
}

/// Minimum dominating set under `demands`, by branch and bound.
///
/// Vertices whose demand exceeds their degree are fixed into the set before
/// branching. The greedy solution seeds the incumbent. When more than
/// `budget` search nodes are needed the best set found so far is returned
/// with [`SearchStatus::BudgetExhausted`].
pub fn exact_min_domset(g: &Graph, demands: &Demands, budget: u64) -> Result<ExactResult> {
    check_lengths(g, demands)?;
    if budget == 0 {
        return Err(Error::InvalidParameter("search budget must be positive".into()));
    }
    let incumbent = greedy_domset(g, demands)?.witness;

    let mut root = State {
        status: vec![Status::Free; g.n()],
        residual: demands.as_slice().to_vec(),
        free: g.vertices().map(|v| g.degree(v) as u32).collect(),
        size: 0,
    };
    for v in demands.mandatory(g).collect::<Vec<_>>() {
        root.include(g, v);
    }

    let mut search = Search {
        g,
        budget,
        nodes: 0,
        best_size: incumbent.len(),
        best: None,
        exhausted: false,
    };
    search.run(root);

    let witness = match search.best {
        Some(status) => VertexSet::new(g.n(), g.vertices().filter(|&v| status[v] == Status::In))?,
        None => incumbent,
    };
    if !is_dominating(g, &witness, demands) {
        return Err(Error::NotDominating(format!("a valid witness; search produced {witness}")));
    }
    Ok(ExactResult {
        optimum: witness.len(),
        witness,
        nodes_explored: search.nodes,
        method: SearchMethod::BranchAndBound,
        status: if search.exhausted { SearchStatus::BudgetExhausted } else { SearchStatus::Optimal },
    })
}
