//! Adaptive adversaries.
//!
//! An adversary looks at the snapshot and at the algorithm's public moves
//! (the ledger) after each event and picks the next event, or ends the
//! input. [`Adversary::opt_bound`] certifies the offline optimum of what was
//! emitted: a lower bound for maximization problems and an upper bound for
//! minimization problems, so that the resulting ratio never overstates the
//! algorithm's competitive ratio.

pub mod bags;
pub mod independent_set;
pub mod matching;
pub mod spanning_forest;
pub mod vertex_cover;

use thiserror::Error;

use crate::ledger::SolutionLedger;
use crate::params::{NamedParams, ParamError};
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot};
use crate::Value;

pub use bags::BagAdversary;
pub use independent_set::{IsIsolatedThenPendants, IsPathAdversary};
pub use matching::{MatchExtend, MatchLar, MatchLateReject};
pub use spanning_forest::MsfHub;
pub use vertex_cover::{VcPairs, VcStar};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AdversaryError {
    #[error("unknown adversary `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("invalid parameter for {name}: {reason}")]
    Invalid { name: String, reason: String },
}

pub trait Adversary: Send {
    /// Registry name with parameters.
    fn name(&self) -> String;
    fn problem(&self) -> Problem;
    /// The next event, or `None` when the input is over. Called with the
    /// ledger between steps.
    fn next_event(&mut self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent>;
    /// Certified bound on OPT for the graph emitted so far.
    fn opt_bound(&self, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Value;
    /// Construction-specific details for reports.
    fn summary(&self) -> serde_json::Value {
        serde_json::Value::Null
    }
}

pub const ADVERSARIES: &[(&str, Problem)] = &[
    ("adv.is.std", Problem::IndependentSet),
    ("adv.is.la", Problem::IndependentSet),
    ("adv.is.lr", Problem::IndependentSet),
    ("adv.is.bags", Problem::IndependentSet),
    ("adv.match.ext", Problem::Matching),
    ("adv.match.lr", Problem::Matching),
    ("adv.match.lar", Problem::Matching),
    ("adv.vc.std", Problem::VertexCover),
    ("adv.vc.lr", Problem::VertexCover),
    ("adv.vc.pairs", Problem::VertexCover),
    ("adv.msf.hub", Problem::SpanningForest),
];

fn at_least(name: &str, key: &str, value: usize, min: usize) -> Result<usize, AdversaryError> {
    if value < min {
        Err(AdversaryError::Invalid { name: name.to_string(), reason: format!("{key} must be at least {min}") })
    } else {
        Ok(value)
    }
}

/// Builds an adversary from a spec such as `adv.msf.hub:n=12,w=1000`.
pub fn build_adversary(spec: &str) -> Result<Box<dyn Adversary>, AdversaryError> {
    let p = NamedParams::parse(spec)?;
    let name = p.name.as_str();
    let adv: Box<dyn Adversary> = match name {
        "adv.is.std" | "adv.is.la" => {
            p.only(&["n"])?;
            let n = at_least(name, "n", p.get_or("n", 20)?, 1)?;
            Box::new(IsIsolatedThenPendants::new(n, name == "adv.is.la"))
        }
        "adv.is.lr" => {
            p.only(&["n"])?;
            Box::new(IsPathAdversary::new(at_least(name, "n", p.get_or("n", 20)?, 1)?))
        }
        "adv.is.bags" => {
            p.only(&["c", "eps", "n1", "budget"])?;
            let c = p.get_rational("c")?.unwrap_or(Value::from_integer(2));
            let eps = p.get_rational("eps")?.unwrap_or(Value::new(1, 20));
            if c < Value::from_integer(1) || eps <= Value::from_integer(0) {
                return Err(AdversaryError::Invalid { name: name.into(), reason: "need c ≥ 1 and eps > 0".into() });
            }
            let n1 = at_least(name, "n1", p.get_or("n1", 200)?, 1)?;
            let budget = at_least(name, "budget", p.get_or("budget", 10_000)?, 1)?;
            Box::new(BagAdversary::new(c, eps, n1, budget))
        }
        "adv.match.ext" => {
            p.only(&["m"])?;
            Box::new(MatchExtend::new(at_least(name, "m", p.get_or("m", 10)?, 1)?))
        }
        "adv.match.lr" => {
            p.only(&["m"])?;
            Box::new(MatchLateReject::new(at_least(name, "m", p.get_or("m", 10)?, 1)?))
        }
        "adv.match.lar" => {
            p.only(&["m"])?;
            Box::new(MatchLar::new(at_least(name, "m", p.get_or("m", 10)?, 1)?))
        }
        "adv.vc.std" | "adv.vc.lr" => {
            p.only(&["n"])?;
            let n = at_least(name, "n", p.get_or("n", 20)?, 1)?;
            Box::new(VcStar::new(n, name == "adv.vc.lr"))
        }
        "adv.vc.pairs" => {
            p.only(&["g", "flood"])?;
            Box::new(VcPairs::new(at_least(name, "g", p.get_or("g", 5)?, 1)?, p.get("flood")?))
        }
        "adv.msf.hub" => {
            p.only(&["n", "w"])?;
            let n = at_least(name, "n", p.get_or("n", 12)?, 3)?;
            let w = p.get_or::<i64>("w", 1000)?;
            if w < 1 {
                return Err(AdversaryError::Invalid { name: name.into(), reason: "w must be at least 1".into() });
            }
            Box::new(MsfHub::new(n, w))
        }
        other => return Err(AdversaryError::Unknown(other.to_string())),
    };
    Ok(adv)
}
