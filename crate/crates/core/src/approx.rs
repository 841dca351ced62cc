//! Approximation algorithms.
//!
//! * [`greedy_domset`]: greedy multicover, within `ln(2Δ) + 1` of optimal for
//!   any demand vector with `r(v) <= d_v`.
//! * [`approx_k_dom_claw`]: `k` successive maximal independent sets, within
//!   `max{p - 1, k}` of optimal on `p`-claw-free graphs.
//! * [`approx_alpha_dom_claw`]: the same layering with `k = ⌈α δ⌉`, plus a
//!   verification pass that adds layers while the α-rule is still unmet.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::demand::{is_dominating, DemandSpec, Demands};
use crate::graph::{Graph, VertexSet, CLAW_CHECK_CAP};
use crate::{Error, Ratio, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MisOrder {
    #[default]
    AscendingId,
    /// Highest degree in the remaining graph first, lowest id on ties.
    MaxDegreeFirst,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ApproxResult {
    pub witness: VertexSet,
    /// Approximation ratio guaranteed for this run.
    pub claimed_bound: f64,
    /// MIS layers `I₁, …, I_k`, for the layering algorithms.
    pub layers: Option<Vec<VertexSet>>,
    /// Set when the α-variant needed more than `⌈α δ⌉` layers.
    pub escalated: bool,
    /// Whether the claimed claw bound `p` was checked on the input.
    pub claw_verified: bool,
}

/// `ln(2Δ) + 1`, taking `Δ >= 1` so edgeless graphs get a finite bound.
pub fn greedy_bound(g: &Graph) -> f64 {
    libm::log(2.0 * g.max_degree().max(1) as f64) + 1.0
}

/// Greedy multicover.
///
/// Vertices whose demand exceeds their degree are taken first. Then the
/// vertex with the largest gain is added until every outside vertex is
/// satisfied; the gain of `u` is its own unmet demand (cleared by joining)
/// plus the number of neighbors that still have unmet demand. Ties go to the
/// lowest id.
pub fn greedy_domset(g: &Graph, demands: &Demands) -> Result<ApproxResult> {
    if demands.len() != g.n() {
        return Err(Error::DemandLength { got: demands.len(), n: g.n() });
    }
    let mut residual = demands.as_slice().to_vec();
    let mut inside = vec![false; g.n()];

    let take = |v: usize, residual: &mut Vec<u32>, inside: &mut Vec<bool>| {
        inside[v] = true;
        residual[v] = 0;
        for &w in g.neighbors(v) {
            residual[w] = residual[w].saturating_sub(1);
        }
    };

    for v in demands.mandatory(g).collect::<Vec<_>>() {
        take(v, &mut residual, &mut inside);
    }
    loop {
        let best = g
            .vertices()
            .filter(|&u| !inside[u])
            .map(|u| {
                let nbrs = g.neighbors(u).iter().filter(|&&w| residual[w] > 0).count() as u64;
                (u64::from(residual[u]) + nbrs, u)
            })
            .fold(None, |acc: Option<(u64, usize)>, (gain, u)| match acc {
                Some((best, _)) if best >= gain => acc,
                _ => Some((gain, u)),
            });
        match best {
            Some((gain, u)) if gain > 0 => take(u, &mut residual, &mut inside),
            _ => break,
        }
    }

    Ok(ApproxResult {
        witness: VertexSet::from_mask(&inside),
        claimed_bound: greedy_bound(g),
        layers: None,
        escalated: false,
        claw_verified: false,
    })
}

/// Maximal independent set of `G - excluded`, built greedily in `order`.
pub fn mis_in(g: &Graph, excluded: &VertexSet, order: MisOrder) -> VertexSet {
    let mut blocked = excluded.mask();
    blocked.resize(g.n(), false);
    let mut candidates: Vec<usize> = g.vertices().filter(|&v| !blocked[v]).collect();
    if order == MisOrder::MaxDegreeFirst {
        let live = |v: usize| g.neighbors(v).iter().filter(|&&w| !blocked[w]).count();
        let keyed: Vec<(usize, usize)> = candidates.iter().map(|&v| (live(v), v)).collect();
        let mut keyed = keyed;
        keyed.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        candidates = keyed.into_iter().map(|(_, v)| v).collect();
    }
    let mut chosen = vec![false; g.n()];
    for v in candidates {
        if !blocked[v] {
            chosen[v] = true;
            blocked[v] = true;
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    VertexSet::from_mask(&chosen)
}

fn check_claw_claim(g: &Graph, p: usize) -> Result<bool> {
    if p < 2 {
        return Err(Error::InvalidParameter(format!("claw bound p must be at least 2, got {p}")));
    }
    if p > CLAW_CHECK_CAP {
        return Ok(false);
    }
    if !g.is_p_claw_free(p)? {
        return Err(Error::NotClawFree(p));
    }
    Ok(true)
}

struct Layering<'a> {
    g: &'a Graph,
    order: MisOrder,
    union: VertexSet,
    layers: Vec<VertexSet>,
}

impl<'a> Layering<'a> {
    fn new(g: &'a Graph, order: MisOrder) -> Self {
        Self { g, order, union: VertexSet::empty(g.n()), layers: Vec::new() }
    }

    fn push(&mut self) {
        let layer = mis_in(self.g, &self.union, self.order);
        self.union = self.union.union(&layer);
        self.layers.push(layer);
    }
}

pub fn approx_k_dom_claw(g: &Graph, k: u32, p: usize) -> Result<ApproxResult> {
    approx_k_dom_claw_with(g, k, p, MisOrder::default())
}

/// Union of `k` successive maximal independent sets. Every vertex left out
/// is adjacent to each layer, since each layer is maximal in a graph that
/// still contains it.
///
/// The claw claim `p` is verified when `p <= CLAW_CHECK_CAP`; a false claim
/// is an error.
pub fn approx_k_dom_claw_with(g: &Graph, k: u32, p: usize, order: MisOrder) -> Result<ApproxResult> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let claw_verified = check_claw_claim(g, p)?;
    let mut layering = Layering::new(g, order);
    for _ in 0..k {
        layering.push();
    }
    Ok(ApproxResult {
        witness: layering.union,
        claimed_bound: (p - 1).max(k as usize) as f64,
        layers: Some(layering.layers),
        escalated: false,
        claw_verified,
    })
}

pub fn approx_alpha_dom_claw(g: &Graph, alpha: Ratio, p: usize) -> Result<ApproxResult> {
    approx_alpha_dom_claw_with(g, alpha, p, MisOrder::default())
}

/// Layering with `k = ⌈α δ⌉`, then more layers (up to `⌈α Δ⌉`) while some
/// vertex of degree above `δ` is still short. `claimed_bound` stays
/// `max{p - 1, ⌈α δ⌉}`; `escalated` records whether extra layers were used.
pub fn approx_alpha_dom_claw_with(
    g: &Graph,
    alpha: Ratio,
    p: usize,
    order: MisOrder,
) -> Result<ApproxResult> {
    if alpha.is_zero() || alpha.numer() >= alpha.denom() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} not in (0, 1)")));
    }
    if g.n() == 0 || g.min_degree() == 0 {
        return Err(Error::InvalidParameter("layering for alpha needs minimum degree >= 1".into()));
    }
    let claw_verified = check_claw_claim(g, p)?;
    let demands = DemandSpec::AlphaDom(alpha).resolve(g)?;
    let base = alpha.ceil_mul(g.min_degree() as u64) as usize;
    let cap = alpha.ceil_mul(g.max_degree() as u64) as usize;

    let mut layering = Layering::new(g, order);
    for _ in 0..base {
        layering.push();
    }
    while !is_dominating(g, &layering.union, &demands) && layering.layers.len() < cap {
        layering.push();
    }
    if !is_dominating(g, &layering.union, &demands) {
        return Err(Error::NotDominating(format!("alpha-dominating after {cap} layers")));
    }
    Ok(ApproxResult {
        witness: layering.union,
        claimed_bound: (p - 1).max(base) as f64,
        escalated: layering.layers.len() > base,
        layers: Some(layering.layers),
        claw_verified,
    })
}
