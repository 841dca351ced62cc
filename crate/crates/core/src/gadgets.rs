//! Reduction gadgets with solution mappings in both directions.
//!
//! Each constructor keeps the source graph on ids `0..n` and appends the new
//! vertices after it, in labeled contiguous groups. Forward maps turn a
//! dominating set of the source into a solution of the gadget; backward maps
//! turn any gadget solution into a dominating set of the source. Both verify
//! their input and their output.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Range;

use crate::demand::{check_xy, deficiency, is_dominating, DemandSpec, FFunction};
use crate::exact::exact_min_domset;
use crate::graph::{Bipartition, Graph, VertexSet};
use crate::{Error, Ratio, Result};

/// Which construction produced a gadget, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// `k - 1` pendant vertices on every source vertex.
    Pendant { k: u32 },
    /// Independent sets `K₁`, `K₂` of size `k - 1`; `K₁` is joined to all of
    /// `V₁` and `K₂` to all of `V₂`.
    BipartiteK { k: u32, bipartition: Bipartition },
    /// Sets `K₁`, `K₂` of size `N·Δ`; each `v` is joined to the first `k_v`
    /// vertices of the opposite side's set.
    AlphaBipartite { alpha: Ratio, n_mult: u64, set_size: usize, k_v: Vec<u64>, bipartition: Bipartition },
    /// Clique `W` on `y + 1` vertices whose first `x` vertices `U` are joined
    /// to every source vertex.
    Fdm { f: FFunction, x: u64, y: u64 },
}

impl Construction {
    pub fn id(&self) -> &'static str {
        match self {
            Construction::Pendant { .. } => "pendant",
            Construction::BipartiteK { .. } => "bipartite-k",
            Construction::AlphaBipartite { .. } => "alpha",
            Construction::Fdm { .. } => "fdm",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexGroup {
    pub label: String,
    pub range: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetReduction {
    pub source: Graph,
    pub gadget: Graph,
    pub construction: Construction,
    /// Added vertices, in id order; disjoint from each other and from `0..n`.
    pub groups: Vec<VertexGroup>,
    /// Hypotheses of the surrounding hardness argument that the source does
    /// not meet. The construction itself is still well defined.
    pub warnings: Vec<String>,
}

impl GadgetReduction {
    pub fn source_spec(&self) -> DemandSpec {
        DemandSpec::KDom(1)
    }

    pub fn gadget_spec(&self) -> DemandSpec {
        match &self.construction {
            Construction::Pendant { k } | Construction::BipartiteK { k, .. } => DemandSpec::KDom(*k),
            Construction::AlphaBipartite { alpha, .. } => DemandSpec::AlphaDom(*alpha),
            Construction::Fdm { f, .. } => DemandSpec::FDom(*f),
        }
    }

    pub fn group(&self, label: &str) -> Option<Range<usize>> {
        self.groups.iter().find(|g| g.label == label).map(|g| g.range.clone())
    }

    /// Ids of all added vertices.
    pub fn added(&self) -> Range<usize> {
        self.source.n()..self.gadget.n()
    }

    /// The gadget's bipartition, for the bipartite constructions.
    pub fn gadget_bipartition(&self) -> Option<Bipartition> {
        let (bip, left_group) = match &self.construction {
            // parts V₁ ∪ K₂ and V₂ ∪ K₁
            Construction::BipartiteK { bipartition, .. } => (bipartition, "K2"),
            // parts V₁ ∪ K₁ and V₂ ∪ K₂
            Construction::AlphaBipartite { bipartition, .. } => (bipartition, "K1"),
            _ => return None,
        };
        let left = self.group(left_group)?;
        let mut sides = bip.sides().to_vec();
        sides.extend(self.added().map(|v| !left.contains(&v)));
        Some(Bipartition::from_sides(sides))
    }

    fn check_source_dominating(&self, s: &VertexSet) -> Result<()> {
        let demands = self.source_spec().resolve(&self.source)?;
        if s.universe() != self.source.n() || !is_dominating(&self.source, s, &demands) {
            return Err(Error::NotDominating(format!("a dominating set of the source: {s}")));
        }
        Ok(())
    }

    fn check_gadget_dominating(&self, d: &VertexSet) -> Result<()> {
        let spec = self.gadget_spec();
        let demands = spec.resolve(&self.gadget)?;
        if d.universe() != self.gadget.n() || !is_dominating(&self.gadget, d, &demands) {
            return Err(Error::NotDominating(format!("a {spec} dominating set of the gadget: {d}")));
        }
        Ok(())
    }

    /// Source solution to gadget solution.
    pub fn forward(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_source_dominating(s)?;
        let extra: Range<usize> = match &self.construction {
            Construction::Fdm { x, .. } => self.source.n()..self.source.n() + *x as usize,
            _ => self.added(),
        };
        let out = s.widen(self.gadget.n()).union(&VertexSet::new(self.gadget.n(), extra)?);
        self.check_gadget_dominating(&out)?;
        Ok(out)
    }

    /// Gadget solution to source solution. For `Fdm` the repair step runs
    /// first; see [`fdm_repair`].
    pub fn backward(&self, d: &VertexSet) -> Result<VertexSet> {
        self.check_gadget_dominating(d)?;
        let n = self.source.n();
        let (repaired, bound) = match &self.construction {
            Construction::Pendant { k } => (d.clone(), d.len().checked_sub((*k as usize - 1) * n)),
            Construction::Fdm { x, .. } => (fdm_repair(d, self)?, d.len().checked_sub(*x as usize)),
            _ => (d.clone(), Some(d.len())),
        };
        let out = repaired.restrict(n);
        self.check_source_dominating(&out)?;
        match bound {
            Some(b) if out.len() <= b => Ok(out),
            _ => Err(Error::MappingBound(format!(
                "{} construction mapped {} gadget vertices to {} source vertices",
                self.construction.id(),
                d.len(),
                out.len()
            ))),
        }
    }
}

/// Attaches `k - 1` pendant vertices to every source vertex; solutions
/// differ by exactly `(k - 1)·n` in both directions.
pub fn reduce_pendant_kdom(g: &Graph, k: u32) -> Result<GadgetReduction> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("pendant construction needs k >= 2, got {k}")));
    }
    let n = g.n();
    let per = k as usize - 1;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut groups = Vec::with_capacity(n);
    for v in g.vertices() {
        let range = n + v * per..n + (v + 1) * per;
        edges.extend(range.clone().map(|s| (v, s)));
        groups.push(VertexGroup { label: format!("S_{v}"), range });
    }
    let mut warnings = Vec::new();
    if g.max_degree() > 3 {
        warnings.push(format!("source max degree {} exceeds 3", g.max_degree()));
    }
    Ok(GadgetReduction {
        source: g.clone(),
        gadget: Graph::new(n * k as usize, edges)?,
        construction: Construction::Pendant { k },
        groups,
        warnings,
    })
}

fn expect_construction(red: &GadgetReduction, id: &str) -> Result<()> {
    if red.construction.id() != id {
        return Err(Error::InvalidParameter(format!(
            "expected a {id} reduction, got {}",
            red.construction.id()
        )));
    }
    Ok(())
}

/// `S ∪ ⋃ S_v`.
pub fn pendant_forward(s: &VertexSet, red: &GadgetReduction) -> Result<VertexSet> {
    expect_construction(red, "pendant")?;
    red.forward(s)
}

/// `D_k` minus the pendant vertices.
pub fn pendant_backward(d: &VertexSet, red: &GadgetReduction) -> Result<VertexSet> {
    expect_construction(red, "pendant")?;
    red.backward(d)
}

/// Adds independent sets `K₁`, `K₂` of size `k - 1`, joining `K₁` to every
/// vertex of `V₁` and `K₂` to every vertex of `V₂`.
pub fn reduce_bipartite_kdom(g: &Graph, bipartition: &Bipartition, k: u32) -> Result<GadgetReduction> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    bipartition.validate(g)?;
    let n = g.n();
    let size = k as usize - 1;
    let k1 = n..n + size;
    let k2 = n + size..n + 2 * size;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in g.vertices() {
        let targets = if bipartition.is_left(v) { k1.clone() } else { k2.clone() };
        edges.extend(targets.map(|t| (v, t)));
    }
    Ok(GadgetReduction {
        source: g.clone(),
        gadget: Graph::new(n + 2 * size, edges)?,
        construction: Construction::BipartiteK { k, bipartition: bipartition.clone() },
        groups: alloc::vec![
            VertexGroup { label: "K1".into(), range: k1 },
            VertexGroup { label: "K2".into(), range: k2 },
        ],
        warnings: Vec::new(),
    })
}

/// `k_v = ⌈(α d - 1)/(1 - α)⌉` for `d >= 2`, else `0`, computed exactly.
pub fn alpha_pendant_count(alpha: Ratio, d: u64) -> u64 {
    if d < 2 {
        return 0;
    }
    // (a d / b - 1) / (1 - a / b) = (a d - b) / (b - a); non-negative ceiling
    // since the quotient exceeds -1 for d >= 2.
    let (a, b) = (alpha.numer(), alpha.denom());
    let num = a * d;
    if num <= b {
        0
    } else {
        (num - b).div_ceil(b - a)
    }
}

/// Adds sets `K₁`, `K₂` of `N·Δ` vertices each, `N = ⌈α/(1-α)⌉`; every
/// `v ∈ V₁` is joined to the first `k_v` vertices of `K₂` and every
/// `v ∈ V₂` to the first `k_v` vertices of `K₁`.
pub fn reduce_alpha_bipartite(g: &Graph, bipartition: &Bipartition, alpha: Ratio) -> Result<GadgetReduction> {
    if alpha.is_zero() || alpha.numer() >= alpha.denom() {
        return Err(Error::InvalidParameter(format!("alpha = {alpha} not in (0, 1)")));
    }
    bipartition.validate(g)?;
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(Error::InvalidParameter(format!("vertex {v} is isolated")));
    }
    let n = g.n();
    let n_mult = alpha.ceil_odds();
    let size = n_mult as usize * g.max_degree();
    let k1 = n..n + size;
    let k2 = n + size..n + 2 * size;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut k_v = Vec::with_capacity(n);
    for v in g.vertices() {
        let count = alpha_pendant_count(alpha, g.degree(v) as u64);
        assert!(count as usize <= size, "k_v = {count} exceeds N·Δ = {size}");
        let base = if bipartition.is_left(v) { k2.start } else { k1.start };
        edges.extend((base..base + count as usize).map(|t| (v, t)));
        k_v.push(count);
    }
    let mut warnings = Vec::new();
    if k_v.iter().all(|&c| c == 0) && size > 0 {
        warnings.push("every k_v is 0; the K-sets are isolated in the gadget".into());
    }
    Ok(GadgetReduction {
        source: g.clone(),
        gadget: Graph::new(n + 2 * size, edges)?,
        construction: Construction::AlphaBipartite {
            alpha,
            n_mult,
            set_size: size,
            k_v,
            bipartition: bipartition.clone(),
        },
        groups: alloc::vec![
            VertexGroup { label: "K1".into(), range: k1 },
            VertexGroup { label: "K2".into(), range: k2 },
        ],
        warnings,
    })
}

/// Adds a clique `W` on `y + 1` vertices and joins its first `x` vertices
/// `U` to every vertex of the 3-regular source.
pub fn reduce_fdm(g: &Graph, f: FFunction, x: u64, y: u64) -> Result<GadgetReduction> {
    if !g.is_regular(3) {
        return Err(Error::NotRegular(3));
    }
    check_xy(&f, x, y).map_err(|reason| Error::InvalidXy { x, y, reason: reason.into() })?;
    let n = g.n();
    let (x, y) = (x as usize, y as usize);
    let w = n..n + y + 1;
    let u = n..n + x;
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for a in w.clone() {
        edges.extend((a + 1..w.end).map(|b| (a, b)));
    }
    for a in u.clone() {
        edges.extend(g.vertices().map(|v| (v, a)));
    }
    Ok(GadgetReduction {
        source: g.clone(),
        gadget: Graph::new(n + y + 1, edges)?,
        construction: Construction::Fdm { f, x: x as u64, y: y as u64 },
        groups: alloc::vec![
            VertexGroup { label: "U".into(), range: u },
            VertexGroup { label: "W\\U".into(), range: n + x..w.end },
        ],
        warnings: Vec::new(),
    })
}

/// Normalizes an f-dominating set of the `Fdm` gadget so that some vertex of
/// `W \ U` is outside it. If `W ⊆ D`, one vertex `p ∈ W \ U` is dropped;
/// if only `W \ U ⊆ D`, `p` is swapped for some `q ∈ U \ D`. Otherwise `D`
/// is returned unchanged. The lowest eligible ids are used for `p` and `q`.
pub fn fdm_repair(d: &VertexSet, red: &GadgetReduction) -> Result<VertexSet> {
    expect_construction(red, "fdm")?;
    let u = red.group("U").expect("fdm reduction has a U group");
    let rest = red.group("W\\U").expect("fdm reduction has a W\\U group");
    if !rest.clone().all(|v| d.contains(v)) {
        return Ok(d.clone());
    }
    let p = rest.start;
    Ok(match u.clone().find(|&q| !d.contains(q)) {
        None => d.without(p),
        Some(q) => d.without(p).with(q),
    })
}

/// `S ∪ U`.
pub fn fdm_forward(s: &VertexSet, red: &GadgetReduction) -> Result<VertexSet> {
    expect_construction(red, "fdm")?;
    red.forward(s)
}

/// Repair, then `D ∩ V(G)`. The result dominates the source and has at most
/// `|D| - x` vertices.
pub fn fdm_backward(d: &VertexSet, red: &GadgetReduction) -> Result<VertexSet> {
    expect_construction(red, "fdm")?;
    red.backward(d)
}

/// Outcome of solving both sides of a reduction exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCheck {
    pub construction: &'static str,
    pub source_optimum: usize,
    pub gadget_optimum: usize,
    /// The relation that was checked, instantiated with the optima.
    pub relation: String,
    pub holds: bool,
    pub source_witness: VertexSet,
    pub gadget_witness: VertexSet,
    /// `forward(source_witness)`.
    pub forward_image: VertexSet,
    /// `backward(gadget_witness)`.
    pub backward_image: VertexSet,
}

impl ReductionCheck {
    pub fn ensure(self) -> Result<Self> {
        if self.holds {
            Ok(self)
        } else {
            Err(Error::RelationViolated(format!(
                "{} (source witness {}, gadget witness {})",
                self.relation, self.source_witness, self.gadget_witness
            )))
        }
    }
}

/// Solves source and gadget exactly and checks the construction's optimum
/// relation:
///
/// | construction  | relation                               |
/// |---------------|----------------------------------------|
/// | `pendant`     | `γ_k(G') = γ(G) + (k-1)n`              |
/// | `bipartite-k` | `γ_k(G') <= γ(G) + 2k - 2`             |
/// | `alpha`       | `γ(G) <= γ_α(G') <= γ(G) + 2NΔ`        |
/// | `fdm`         | `γ_f(G') = x + γ(G)`                   |
///
/// Both mappings are also applied to the optimal witnesses and must verify.
pub fn check_reduction(red: &GadgetReduction, budget: u64) -> Result<ReductionCheck> {
    let source_demands = red.source_spec().resolve(&red.source)?;
    let gadget_demands = red.gadget_spec().resolve(&red.gadget)?;
    let source = exact_min_domset(&red.source, &source_demands, budget)?.require_optimal()?;
    let gadget = exact_min_domset(&red.gadget, &gadget_demands, budget)?.require_optimal()?;
    let (s, t) = (source.optimum, gadget.optimum);
    let n = red.source.n();

    let (relation, holds) = match &red.construction {
        Construction::Pendant { k } => {
            let rhs = s + (*k as usize - 1) * n;
            (format!("gamma_{k}(G') = {t} == gamma(G) + (k-1)n = {rhs}"), t == rhs)
        }
        Construction::BipartiteK { k, .. } => {
            let rhs = s + 2 * *k as usize - 2;
            (format!("gamma_{k}(G') = {t} <= gamma(G) + 2k - 2 = {rhs}"), t <= rhs)
        }
        Construction::AlphaBipartite { alpha, set_size, .. } => {
            let rhs = s + 2 * set_size;
            (
                format!("gamma(G) = {s} <= gamma_{alpha}(G') = {t} <= gamma(G) + 2N·Delta = {rhs}"),
                s <= t && t <= rhs,
            )
        }
        Construction::Fdm { f, x, .. } => {
            let rhs = s + *x as usize;
            (format!("gamma_f(G') = {t} == x + gamma(G) = {rhs} (f = {f})"), t == rhs)
        }
    };

    let forward_image = red.forward(&source.witness)?;
    let backward_image = red.backward(&gadget.witness)?;
    debug_assert!(deficiency(&red.source, &backward_image, &source_demands).is_empty());

    Ok(ReductionCheck {
        construction: red.construction.id(),
        source_optimum: s,
        gadget_optimum: t,
        relation,
        holds,
        source_witness: source.witness,
        gadget_witness: gadget.witness,
        forward_image,
        backward_image,
    })
}
