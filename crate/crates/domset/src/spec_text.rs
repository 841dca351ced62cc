//! Textual demand rules: `k=3`, `alpha=1/2`, `f=half`, `f=sqrt_plus_one`,
//! `f=two_log_half`, `f=linear:2/3`, `f=const:4`, `vector=@path`.

use std::path::Path;

use domset_core::{DemandSpec, FFunction, Ratio};

use crate::error::{read_file, DomsetError, Result};
use crate::format::parse_demand_vector;

/// Parses a rule; `vector=@path` files are resolved relative to `base`.
pub fn parse_demand_spec(text: &str, base: &Path) -> Result<DemandSpec> {
    let bad = |what: &str| DomsetError::usage(format!("demand rule `{text}`: {what}"));
    let Some((key, value)) = text.trim().split_once('=') else {
        return Err(bad("expected key=value"));
    };
    let spec = match key {
        "k" => DemandSpec::KDom(value.parse().map_err(|_| bad("k must be a positive integer"))?),
        "alpha" => DemandSpec::AlphaDom(value.parse::<Ratio>().map_err(|e| bad(&e.to_string()))?),
        "f" => DemandSpec::FDom(value.parse::<FFunction>().map_err(|e| bad(&e.to_string()))?),
        "vector" => {
            let path = value.strip_prefix('@').ok_or_else(|| bad("vector rules take a file: vector=@path"))?;
            DemandSpec::Vector(parse_demand_vector(&read_file(&base.join(path))?)?)
        }
        _ => return Err(bad("unknown rule; expected k, alpha, f or vector")),
    };
    spec.validate().map_err(|e| bad(&e.to_string()))?;
    Ok(spec)
}
