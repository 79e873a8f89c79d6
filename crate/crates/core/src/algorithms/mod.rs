//! Online algorithms as step functions.
//!
//! Each call to [`OnlineAlgorithm::step`] sees the new event, the snapshot
//! that already includes it, and the ledger with the event's step open. It
//! returns the moves to apply; the caller applies them to the ledger, which
//! refuses anything the decision model forbids.

pub mod admissible;
pub mod independent_set;
pub mod matching;
pub mod spanning_forest;
pub mod sqrt3;
pub mod vertex_cover;

use thiserror::Error;

use crate::ledger::{Action, DecisionModel, SolutionLedger};
use crate::oracles::{OracleCaps, OracleError};
use crate::params::{NamedParams, ParamError};
use crate::problem::Problem;
use crate::stream::{ArrivalEvent, GraphSnapshot};

pub use admissible::{find_admissible_exhaustive, find_admissible_min_conflict, AdmissibleConfig, AdmissibleSet};
pub use independent_set::{Algorithm1, Alg1State, GreedyIs, LemmaReport, SwapIs, ThresholdIs};
pub use matching::{find_length3_augmenting_path, has_short_augmenting_path, Algorithm2, GreedyMatching, MatchingState};
pub use spanning_forest::{MsfRedRule, MsfStandard};
pub use vertex_cover::{VcMatching, VcReset, VcStandard};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgorithmError {
    #[error("{what} has {size} vertices, above the cap of {cap}")]
    SizeGuard { what: &'static str, size: usize, cap: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{name} does not run in the {model} model")]
    UnsupportedModel { name: String, model: DecisionModel },
    #[error("unknown algorithm `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("{0} arrived at an algorithm for the other arrival kind")]
    WrongEvent(String),
}

pub trait OnlineAlgorithm: Send {
    /// Registry name, including parameters.
    fn name(&self) -> String;
    fn problem(&self) -> Problem;
    fn model(&self) -> DecisionModel;
    fn step(
        &mut self,
        event: &ArrivalEvent,
        graph: &GraphSnapshot,
        ledger: &SolutionLedger,
    ) -> Result<Vec<Action>, AlgorithmError>;
}

/// The move that turns the current item down: an immediate reject where the
/// model has one, otherwise nothing (the item stays pending).
pub fn decline(model: DecisionModel) -> Option<Action> {
    model.requires_immediate_decision().then_some(Action::RejectNow)
}

pub(crate) fn check_model(name: &str, model: DecisionModel, supported: &[DecisionModel]) -> Result<(), AlgorithmError> {
    if supported.contains(&model) {
        Ok(())
    } else {
        Err(AlgorithmError::UnsupportedModel { name: name.to_string(), model })
    }
}

pub(crate) fn vertex_of(event: &ArrivalEvent) -> Result<usize, AlgorithmError> {
    match event {
        ArrivalEvent::Vertex { id, .. } => Ok(*id),
        ArrivalEvent::Edge(_) => Err(AlgorithmError::WrongEvent(event.to_line())),
    }
}

pub(crate) fn edge_of(event: &ArrivalEvent, graph: &GraphSnapshot) -> Result<usize, AlgorithmError> {
    match event {
        ArrivalEvent::Edge(e) => graph.edge_id(e.u, e.v).ok_or_else(|| AlgorithmError::WrongEvent(event.to_line())),
        ArrivalEvent::Vertex { .. } => Err(AlgorithmError::WrongEvent(event.to_line())),
    }
}

const LATE_REJECT: [DecisionModel; 2] = [DecisionModel::LateReject, DecisionModel::LateAcceptThenReject];
const LATE_ACCEPT: [DecisionModel; 2] = [DecisionModel::LateAccept, DecisionModel::LateAcceptThenReject];

/// Registered algorithm names with their problem, native model and the
/// models they can run in.
pub const REGISTRY: &[(&str, Problem, DecisionModel, &[DecisionModel])] = &[
    ("is.greedy", Problem::IndependentSet, DecisionModel::Standard, &DecisionModel::ALL),
    ("is.swap", Problem::IndependentSet, DecisionModel::LateReject, &LATE_REJECT),
    ("is.threshold", Problem::IndependentSet, DecisionModel::LateAccept, &LATE_ACCEPT),
    ("is.alg1", Problem::IndependentSet, DecisionModel::LateAcceptThenReject, &[DecisionModel::LateAcceptThenReject]),
    ("match.greedy", Problem::Matching, DecisionModel::Standard, &DecisionModel::ALL),
    ("match.alg2", Problem::Matching, DecisionModel::LateAcceptThenReject, &[DecisionModel::LateAcceptThenReject]),
    ("vc.standard", Problem::VertexCover, DecisionModel::Standard, &DecisionModel::ALL),
    ("vc.matching", Problem::VertexCover, DecisionModel::LateAccept, &LATE_ACCEPT),
    ("vc.reset", Problem::VertexCover, DecisionModel::LateReject, &LATE_REJECT),
    ("msf.standard", Problem::SpanningForest, DecisionModel::Standard, &DecisionModel::ALL),
    ("msf.redrule", Problem::SpanningForest, DecisionModel::LateReject, &LATE_REJECT),
];

/// Problem and native model of a registered algorithm spec.
pub fn describe(spec: &str) -> Result<(Problem, DecisionModel), AlgorithmError> {
    let p = NamedParams::parse(spec)?;
    REGISTRY
        .iter()
        .find(|entry| entry.0 == p.name)
        .map(|entry| (entry.1, entry.2))
        .ok_or(AlgorithmError::Unknown(p.name))
}

/// Builds an algorithm from a registry spec such as `is.threshold:c=3`.
/// `model` defaults to the algorithm's native model.
pub fn build_algorithm(
    spec: &str,
    model: Option<DecisionModel>,
    caps: OracleCaps,
) -> Result<Box<dyn OnlineAlgorithm>, AlgorithmError> {
    let p = NamedParams::parse(spec)?;
    let (_, native) = describe(spec)?;
    let model = model.unwrap_or(native);
    let alg: Box<dyn OnlineAlgorithm> = match p.name.as_str() {
        "is.greedy" => {
            p.only(&[])?;
            Box::new(GreedyIs::new(model)?)
        }
        "is.swap" => {
            p.only(&[])?;
            Box::new(SwapIs::new(model)?)
        }
        "is.threshold" => {
            p.only(&["c"])?;
            Box::new(ThresholdIs::new(model, p.require("c")?, caps)?)
        }
        "is.alg1" => {
            p.only(&["cap"])?;
            let mut config = AdmissibleConfig::default();
            if let Some(cap) = p.get("cap")? {
                config = AdmissibleConfig::uniform(cap);
            }
            check_model("is.alg1", model, &[DecisionModel::LateAcceptThenReject])?;
            Box::new(Algorithm1::with_config(config))
        }
        "match.greedy" => {
            p.only(&[])?;
            Box::new(GreedyMatching::new(model)?)
        }
        "match.alg2" => {
            p.only(&[])?;
            check_model("match.alg2", model, &[DecisionModel::LateAcceptThenReject])?;
            Box::new(Algorithm2::new())
        }
        "vc.standard" => {
            p.only(&[])?;
            Box::new(VcStandard::new(model)?)
        }
        "vc.matching" => {
            p.only(&[])?;
            Box::new(VcMatching::new(model)?)
        }
        "vc.reset" => {
            p.only(&["b"])?;
            Box::new(VcReset::new(model, p.require("b")?, caps)?)
        }
        "msf.standard" => {
            p.only(&[])?;
            Box::new(MsfStandard::new(model)?)
        }
        "msf.redrule" => {
            p.only(&[])?;
            Box::new(MsfRedRule::new(model)?)
        }
        other => return Err(AlgorithmError::Unknown(other.to_string())),
    };
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_builds_everything_in_its_native_model() {
        for (name, problem, model, supported) in REGISTRY {
            let spec = match *name {
                "is.threshold" => "is.threshold:c=2".to_string(),
                "vc.reset" => "vc.reset:b=3".to_string(),
                _ => name.to_string(),
            };
            let alg = build_algorithm(&spec, None, OracleCaps::default()).unwrap();
            assert_eq!(alg.problem(), *problem);
            assert_eq!(alg.model(), *model);
            assert_eq!(alg.name(), spec);
            assert!(supported.contains(model));
            for m in DecisionModel::ALL {
                let built = build_algorithm(&spec, Some(m), OracleCaps::default());
                assert_eq!(built.is_ok(), supported.contains(&m), "{spec} in {m}");
            }
        }
    }

    #[test]
    fn registry_rejects_bad_specs() {
        let caps = OracleCaps::default();
        assert!(matches!(build_algorithm("is.nope", None, caps), Err(AlgorithmError::Unknown(_))));
        assert!(build_algorithm("is.threshold", None, caps).is_err());
        assert!(build_algorithm("is.greedy:x=1", None, caps).is_err());
        assert!(matches!(build_algorithm("vc.reset:b=40", None, caps), Err(AlgorithmError::Oracle(_))));
    }
}
