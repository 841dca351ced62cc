//! Demand rules and the domination verifier.
//!
//! A rule assigns every vertex `v` an integer requirement `r(v)`: if `v` is
//! left outside the candidate set `D`, at least `r(v)` of its neighbors must
//! be in `D`. Because `|N(v) ∩ D|` is an integer, a real-valued threshold
//! `t` is equivalent to the integer threshold `⌈t⌉`, so every rule resolves
//! to a vector of non-negative integers ([`Demands`]).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::{Error, Ratio, Result};

/// Values within this distance of an integer are snapped to it before the
/// ceiling is taken.
pub const SNAP_EPSILON: f64 = 1e-9;

/// `⌈value⌉` after snapping near-integers.
pub fn snapped_ceil(value: f64) -> i64 {
    let nearest = libm::round(value);
    if libm::fabs(value - nearest) <= SNAP_EPSILON {
        nearest as i64
    } else {
        libm::ceil(value) as i64
    }
}

/// The registered family of degree functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FFunction {
    /// `x / 2`
    Half,
    /// `√x + 1`
    SqrtPlusOne,
    /// `2 ln(1 + x/2)`
    TwoLogHalf,
    /// `α x`
    Linear(Ratio),
    /// `k`
    Constant(u64),
}

impl FFunction {
    pub fn eval(&self, x: u64) -> f64 {
        let xf = x as f64;
        match *self {
            FFunction::Half => xf / 2.0,
            FFunction::SqrtPlusOne => libm::sqrt(xf) + 1.0,
            FFunction::TwoLogHalf => 2.0 * libm::log(1.0 + xf / 2.0),
            FFunction::Linear(alpha) => alpha.to_f64() * xf,
            FFunction::Constant(k) => k as f64,
        }
    }

    /// `⌈f(x)⌉`. Rational members are evaluated exactly; the transcendental
    /// ones go through [`snapped_ceil`].
    pub fn ceil_at(&self, x: u64) -> i64 {
        match *self {
            FFunction::Half => x.div_ceil(2) as i64,
            FFunction::Linear(alpha) => alpha.ceil_mul(x) as i64,
            FFunction::Constant(k) => k as i64,
            FFunction::SqrtPlusOne | FFunction::TwoLogHalf => snapped_ceil(self.eval(x)),
        }
    }
}

impl fmt::Display for FFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FFunction::Half => f.write_str("half"),
            FFunction::SqrtPlusOne => f.write_str("sqrt_plus_one"),
            FFunction::TwoLogHalf => f.write_str("two_log_half"),
            FFunction::Linear(alpha) => write!(f, "linear:{alpha}"),
            FFunction::Constant(k) => write!(f, "const:{k}"),
        }
    }
}

impl core::str::FromStr for FFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "half" => Ok(FFunction::Half),
            "sqrt_plus_one" => Ok(FFunction::SqrtPlusOne),
            "two_log_half" => Ok(FFunction::TwoLogHalf),
            _ => {
                if let Some(alpha) = s.strip_prefix("linear:") {
                    Ok(FFunction::Linear(alpha.parse()?))
                } else if let Some(k) = s.strip_prefix("const:") {
                    k.parse()
                        .map(FFunction::Constant)
                        .map_err(|_| Error::InvalidParameter(format!("malformed constant `{k}`")))
                } else {
                    Err(Error::InvalidParameter(format!("unknown function `{s}`")))
                }
            }
        }
    }
}

/// A domination rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DemandSpec {
    /// Every outside vertex needs `k` neighbors inside.
    KDom(u32),
    /// Every outside vertex needs `α·d_v` neighbors inside.
    AlphaDom(Ratio),
    /// Every outside vertex needs `f(d_v)` neighbors inside.
    FDom(FFunction),
    /// Explicit per-vertex requirements.
    Vector(Vec<u32>),
}

impl DemandSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            DemandSpec::KDom(0) => Err(Error::InvalidParameter("k must be at least 1".into())),
            DemandSpec::AlphaDom(alpha) if !alpha.is_unit_fraction_range() => {
                Err(Error::InvalidParameter(format!("alpha = {alpha} not in (0, 1]")))
            }
            _ => Ok(()),
        }
    }

    /// Requirement of vertex `v`; never negative.
    pub fn demand_at(&self, g: &Graph, v: usize) -> Result<u32> {
        let d = g.checked_degree(v)? as u64;
        let required: i64 = match self {
            DemandSpec::KDom(k) => i64::from(*k),
            DemandSpec::AlphaDom(alpha) => alpha.ceil_mul(d) as i64,
            DemandSpec::FDom(f) => f.ceil_at(d),
            DemandSpec::Vector(reqs) => {
                if reqs.len() != g.n() {
                    return Err(Error::DemandLength { got: reqs.len(), n: g.n() });
                }
                i64::from(reqs[v])
            }
        };
        Ok(required.clamp(0, i64::from(u32::MAX)) as u32)
    }

    /// Resolves the rule against `g`.
    pub fn resolve(&self, g: &Graph) -> Result<Demands> {
        self.validate()?;
        g.vertices().map(|v| self.demand_at(g, v)).collect::<Result<Vec<_>>>().map(Demands)
    }
}

impl fmt::Display for DemandSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DemandSpec::KDom(k) => write!(f, "k={k}"),
            DemandSpec::AlphaDom(alpha) => write!(f, "alpha={alpha}"),
            DemandSpec::FDom(func) => write!(f, "f={func}"),
            DemandSpec::Vector(reqs) => write!(f, "vector[{}]", reqs.len()),
        }
    }
}

/// Per-vertex requirements, resolved against one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Demands(Vec<u32>);

impl Demands {
    pub fn new(reqs: Vec<u32>) -> Self {
        Self(reqs)
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices that cannot be satisfied from outside and therefore belong to
    /// every dominating set: `r(v) > d_v`.
    pub fn mandatory<'a>(&'a self, g: &'a Graph) -> impl Iterator<Item = usize> + 'a {
        g.vertices().filter(move |&v| self.0[v] as usize > g.degree(v))
    }
}

/// True iff every vertex outside `set` meets its requirement.
pub fn is_dominating(g: &Graph, set: &VertexSet, demands: &Demands) -> bool {
    let inside = set.mask();
    g.vertices().all(|v| inside[v] || hits(g, &inside, v) >= demands.get(v))
}

/// Shortfall `r(v) - |N(v) ∩ set|` of every unsatisfied vertex outside `set`.
/// Empty iff [`is_dominating`] holds.
pub fn deficiency(g: &Graph, set: &VertexSet, demands: &Demands) -> BTreeMap<usize, u32> {
    let inside = set.mask();
    g.vertices()
        .filter(|&v| !inside[v])
        .filter_map(|v| {
            let h = hits(g, &inside, v);
            (h < demands.get(v)).then(|| (v, demands.get(v) - h))
        })
        .collect()
}

fn hits(g: &Graph, inside: &[bool], v: usize) -> u32 {
    g.neighbors(v).iter().filter(|&&w| inside[w]).count() as u32
}

/// A candidate set together with the neighbor counts of every outside vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomWitness {
    set: VertexSet,
    /// `|N(v) ∩ set|` for `v` outside the set, `None` for members.
    hits: Vec<Option<u32>>,
    demands: Demands,
}

impl DomWitness {
    pub fn new(g: &Graph, set: VertexSet, demands: Demands) -> Result<Self> {
        if set.universe() != g.n() {
            return Err(Error::InvalidParameter(format!(
                "set universe {} does not match graph order {}",
                set.universe(),
                g.n()
            )));
        }
        if demands.len() != g.n() {
            return Err(Error::DemandLength { got: demands.len(), n: g.n() });
        }
        let inside = set.mask();
        let hits = g.vertices().map(|v| (!inside[v]).then(|| hits(g, &inside, v))).collect();
        Ok(Self { set, hits, demands })
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn hits(&self, v: usize) -> Option<u32> {
        self.hits[v]
    }

    pub fn is_valid(&self) -> bool {
        self.deficiency().is_empty()
    }

    pub fn deficiency(&self) -> BTreeMap<usize, u32> {
        self.hits
            .iter()
            .enumerate()
            .filter_map(|(v, h)| {
                let h = (*h)?;
                let r = self.demands.get(v);
                (h < r).then_some((v, r - h))
            })
            .collect()
    }
}

/// Checks `x = ⌈f(y)⌉ < y` and `x + 1 = ⌈f(x + 3)⌉`; on failure returns the
/// first condition that does not hold.
pub fn check_xy(f: &FFunction, x: u64, y: u64) -> core::result::Result<(), &'static str> {
    if x == 0 {
        return Err("x must be positive");
    }
    if x >= y {
        return Err("x < y violated");
    }
    if f.ceil_at(y) != x as i64 {
        return Err("x = ceil(f(y)) violated");
    }
    if f.ceil_at(x + 3) != x as i64 + 1 {
        return Err("x + 1 = ceil(f(x + 3)) violated");
    }
    Ok(())
}

/// Every pair `1 <= x < y <= bound` satisfying [`check_xy`], ascending by
/// `(y, x)`.
pub fn find_xy(f: &FFunction, bound: u64) -> Vec<(u64, u64)> {
    (2..=bound)
        .filter_map(|y| {
            let x = f.ceil_at(y);
            (x >= 1 && check_xy(f, x as u64, y).is_ok()).then_some((x as u64, y))
        })
        .collect()
}
