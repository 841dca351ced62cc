//! Files, reports and experiments on top of `domset-core`.
//!
//! * [`format`]: the `p`/`e`/`b` edge-list format, witness files and
//!   reduction metadata.
//! * [`spec_text`]: textual demand rules such as `alpha=1/2`.
//! * [`solve`] and [`report`]: single solver runs and their result rows.
//! * [`experiment`]: seeded batch studies driven by a key=value config.
//! * [`cli`]: the `domset` command-line front end.

pub mod cli;
mod error;
pub mod experiment;
pub mod format;
pub mod report;
pub mod solve;
pub mod spec_text;

pub use error::{DomsetError, Result};
