//! Experiment runner.
//!
//! [`run_events`] drives one algorithm over an event feed, applying its
//! moves to a ledger. [`evaluate`] checks the final solution for
//! feasibility and compares it with the oracle (or, beyond the oracle caps,
//! with the adversary's certified bound). [`run_experiment`] does both from
//! an [`ExperimentConfig`].

pub mod generators;
pub mod report;
pub mod sweep;

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use num_traits::Zero;
use thiserror::Error;

use crate::adversaries::{build_adversary, Adversary, AdversaryError};
use crate::algorithms::{build_algorithm, describe, AlgorithmError, OnlineAlgorithm};
use crate::ledger::{DecisionModel, FinalSolution, IllegalMove, SolutionLedger};
use crate::oracles::{self, OracleCaps, OracleError};
use crate::problem::Problem;
use crate::stream::{parse_events, ArrivalEvent, ArrivalKind, GraphSnapshot, RequestSequence, Rule, StreamError};
use crate::Value;

pub use report::ExperimentReport;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Algorithm(#[from] AlgorithmError),
    #[error(transparent)]
    Adversary(#[from] AdversaryError),
    #[error(transparent)]
    Generator(#[from] generators::GeneratorError),
    #[error("step {step}: illegal move: {error}")]
    Illegal { step: usize, error: IllegalMove },
    #[error("event {index} ({line}) is invalid: {rules}")]
    InvalidEvent { index: usize, line: String, rules: String },
    #[error(transparent)]
    Stream(#[from] StreamError),
    #[error("infeasible {problem} solution: {reason}")]
    Infeasible { problem: Problem, reason: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Where the requests come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Registry spec such as `adv.is.std:n=20`.
    Adversary(String),
    /// Generator spec such as `gen.gnp:n=10,p=0.3`.
    Generator(String),
    File(PathBuf),
    Sequence(RequestSequence),
}

impl Source {
    /// `adv.*` and `gen.*` specs by prefix, anything else as a file path
    /// (an optional `file:` prefix is stripped).
    pub fn parse(s: &str) -> Source {
        if s.starts_with("adv.") {
            Source::Adversary(s.to_string())
        } else if s.starts_with("gen.") {
            Source::Generator(s.to_string())
        } else {
            Source::File(PathBuf::from(s.strip_prefix("file:").unwrap_or(s)))
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Adversary(s) | Source::Generator(s) => f.write_str(s),
            Source::File(p) => write!(f, "file:{}", p.display()),
            Source::Sequence(seq) => write!(f, "inline:{} events", seq.len()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentConfig {
    pub problem: Problem,
    /// Defaults to the algorithm's native model.
    pub model: Option<DecisionModel>,
    pub algorithm: String,
    pub source: Source,
    pub seed: u64,
    pub caps: OracleCaps,
    /// Hard limit on the number of events.
    pub budget: Option<usize>,
    /// Let Standard and LateReject ledgers reject undecided items at the
    /// end of their step instead of failing.
    pub implicit_reject: bool,
}

impl ExperimentConfig {
    pub fn new(problem: Problem, algorithm: &str, source: Source) -> Self {
        ExperimentConfig {
            problem,
            model: None,
            algorithm: algorithm.to_string(),
            source,
            seed: 0,
            caps: OracleCaps::from_env(),
            budget: None,
            implicit_reject: false,
        }
    }
}

/// Event producer for [`run_events`].
pub enum Feed<'a> {
    Adversary(&'a mut dyn Adversary),
    Fixed(&'a [ArrivalEvent]),
}

impl Feed<'_> {
    fn next(&mut self, step: usize, graph: &GraphSnapshot, ledger: &SolutionLedger) -> Option<ArrivalEvent> {
        match self {
            Feed::Adversary(adv) => adv.next_event(graph, ledger),
            Feed::Fixed(events) => events.get(step).cloned(),
        }
    }
}

/// Everything a finished run leaves behind.
#[derive(Clone, Debug)]
pub struct Run {
    pub graph: GraphSnapshot,
    pub ledger: SolutionLedger,
    pub events: Vec<ArrivalEvent>,
    pub solution: FinalSolution,
}

/// Runs `alg` over `feed` and finalizes the ledger. `after_step` sees the
/// algorithm, snapshot and ledger after every completed step and may abort
/// the run with a message.
pub fn run_events<A: OnlineAlgorithm + ?Sized>(
    alg: &mut A,
    kind: ArrivalKind,
    mut feed: Feed<'_>,
    budget: Option<usize>,
    implicit_reject: bool,
    mut after_step: impl FnMut(&A, &GraphSnapshot, &SolutionLedger) -> Result<(), String>,
) -> Result<Run, HarnessError> {
    let item_kind = alg.problem().item_kind();
    let mut ledger = SolutionLedger::new(alg.model(), item_kind).with_implicit_reject(implicit_reject);
    let mut graph = GraphSnapshot::new();
    let mut events = Vec::new();
    while budget.is_none_or(|b| events.len() < b) {
        let step = events.len();
        let Some(event) = feed.next(step, &graph, &ledger) else { break };
        graph.apply(&event, kind).map_err(|rules| HarnessError::InvalidEvent {
            index: step,
            line: event.to_line(),
            rules: rules.iter().map(Rule::to_string).collect::<Vec<_>>().join("; "),
        })?;
        let illegal = |error| HarnessError::Illegal { step, error };
        ledger.begin_step().map_err(illegal)?;
        for action in alg.step(&event, &graph, &ledger)? {
            ledger.apply(action).map_err(illegal)?;
        }
        ledger.end_step().map_err(illegal)?;
        events.push(event);
        after_step(alg, &graph, &ledger).map_err(|reason| HarnessError::Infeasible { problem: alg.problem(), reason })?;
    }
    let solution = ledger.finalize().map_err(|error| HarnessError::Illegal { step: events.len(), error })?;
    Ok(Run { graph, ledger, events, solution })
}

/// A competitive ratio in the problem's orientation: OPT/ALG for
/// maximization, ALG/OPT for minimization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompetitiveRatio {
    Finite(Value),
    /// The denominator is zero and the numerator is not.
    Unbounded,
}

impl CompetitiveRatio {
    pub fn new(problem: Problem, alg: Value, opt: Value) -> Self {
        let (num, den) = if problem.is_maximization() { (opt, alg) } else { (alg, opt) };
        if den.is_zero() {
            if num.is_zero() {
                CompetitiveRatio::Finite(Value::from_integer(1))
            } else {
                CompetitiveRatio::Unbounded
            }
        } else {
            CompetitiveRatio::Finite(num / den)
        }
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, CompetitiveRatio::Unbounded)
    }

    pub fn value(&self) -> Option<Value> {
        match self {
            CompetitiveRatio::Finite(v) => Some(*v),
            CompetitiveRatio::Unbounded => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            CompetitiveRatio::Finite(v) => *v.numer() as f64 / *v.denom() as f64,
            CompetitiveRatio::Unbounded => f64::INFINITY,
        }
    }
}

impl PartialOrd for CompetitiveRatio {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CompetitiveRatio {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use CompetitiveRatio::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Unbounded) => std::cmp::Ordering::Less,
            (Unbounded, Finite(_)) => std::cmp::Ordering::Greater,
            (Unbounded, Unbounded) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for CompetitiveRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompetitiveRatio::Finite(v) => write!(f, "{v}"),
            CompetitiveRatio::Unbounded => f.write_str("inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptSource {
    Oracle,
    AdversaryBound,
}

impl OptSource {
    pub fn as_str(self) -> &'static str {
        match self {
            OptSource::Oracle => "oracle",
            OptSource::AdversaryBound => "adversary",
        }
    }
}

/// Objective value and comparison for one finished run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub alg_value: Value,
    pub opt_value: Value,
    pub opt_source: OptSource,
    pub adversary_bound: Option<Value>,
    pub ratio: CompetitiveRatio,
}

/// Checks that the accepted items solve `problem` on `graph`.
pub fn check_feasible(problem: Problem, graph: &GraphSnapshot, accepted: &[usize]) -> Result<(), HarnessError> {
    let fail = |reason: &str| Err(HarnessError::Infeasible { problem, reason: reason.to_string() });
    match problem {
        Problem::IndependentSet if !oracles::is_independent(graph, accepted) => fail("two accepted vertices are adjacent"),
        Problem::Matching if !oracles::is_matching(graph, accepted) => fail("two accepted edges share an endpoint"),
        Problem::VertexCover if !oracles::is_vertex_cover(graph, accepted) => fail("an edge is left uncovered"),
        Problem::SpanningForest if !oracles::is_spanning_forest(graph, accepted) => {
            fail("accepted edges do not form a spanning forest")
        }
        _ => Ok(()),
    }
}

pub fn objective(problem: Problem, graph: &GraphSnapshot, accepted: &[usize]) -> Value {
    match problem {
        Problem::SpanningForest => graph.total_weight(accepted.iter().copied()),
        _ => Value::from_integer(accepted.len() as i64),
    }
}

/// Feasibility gate plus ratio. The oracle is used when the graph is within
/// `caps`; otherwise the adversary's bound, if there is one.
pub fn evaluate(
    problem: Problem,
    run: &Run,
    adversary: Option<&dyn Adversary>,
    caps: OracleCaps,
) -> Result<Evaluation, HarnessError> {
    let accepted: Vec<usize> = run.ledger.accepted_ids().collect();
    check_feasible(problem, &run.graph, &accepted)?;
    let alg_value = objective(problem, &run.graph, &accepted);
    let adversary_bound = adversary.map(|a| a.opt_bound(&run.graph, &run.ledger));
    let (opt_value, opt_source) = match oracles::opt(problem, &run.graph, caps) {
        Ok(r) => (r.value, OptSource::Oracle),
        Err(e) => match adversary_bound {
            Some(b) => (b, OptSource::AdversaryBound),
            None => return Err(e.into()),
        },
    };
    Ok(Evaluation { alg_value, opt_value, opt_source, adversary_bound, ratio: CompetitiveRatio::new(problem, alg_value, opt_value) })
}

fn load_sequence(config: &ExperimentConfig, kind: ArrivalKind) -> Result<RequestSequence, HarnessError> {
    let seq = match &config.source {
        Source::Generator(spec) => generators::generate(spec, kind, config.seed)?,
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io { path: path.clone(), source })?;
            parse_events(&text)?
        }
        Source::Sequence(seq) => seq.clone(),
        Source::Adversary(_) => unreachable!("adversaries are not sequences"),
    };
    if seq.kind != kind {
        return Err(HarnessError::Config(format!("{} needs {kind} arrival, the source has {}", config.problem, seq.kind)));
    }
    Ok(seq)
}

/// Runs one configured experiment end to end.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport, HarnessError> {
    let started = Instant::now();
    let (alg_problem, _) = describe(&config.algorithm)?;
    if alg_problem != config.problem {
        return Err(HarnessError::Config(format!("{} solves {alg_problem}, not {}", config.algorithm, config.problem)));
    }
    let mut alg = build_algorithm(&config.algorithm, config.model, config.caps)?;
    let kind = config.problem.arrival_kind();
    let (run, evaluation, summary) = match &config.source {
        Source::Adversary(spec) => {
            let mut adv = build_adversary(spec)?;
            if adv.problem() != config.problem {
                return Err(HarnessError::Config(format!("{spec} targets {}, not {}", adv.problem(), config.problem)));
            }
            let run = run_events(alg.as_mut(), kind, Feed::Adversary(adv.as_mut()), config.budget, config.implicit_reject, |_, _, _| Ok(()))?;
            let evaluation = evaluate(config.problem, &run, Some(adv.as_ref()), config.caps)?;
            (run, evaluation, adv.summary())
        }
        _ => {
            let seq = load_sequence(config, kind)?;
            let run = run_events(alg.as_mut(), kind, Feed::Fixed(&seq.events), config.budget, config.implicit_reject, |_, _, _| Ok(()))?;
            let evaluation = evaluate(config.problem, &run, None, config.caps)?;
            (run, evaluation, serde_json::Value::Null)
        }
    };
    Ok(ExperimentReport {
        problem: config.problem,
        model: alg.model(),
        algorithm: alg.name(),
        source: config.source.to_string(),
        seed: config.seed,
        run,
        evaluation,
        adversary: summary,
        wall_time: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adversary_run(problem: Problem, alg: &str, adv: &str) -> ExperimentReport {
        run_experiment(&ExperimentConfig::new(problem, alg, Source::parse(adv))).unwrap()
    }

    #[test]
    fn greedy_against_star() {
        let r = adversary_run(Problem::IndependentSet, "is.greedy", "adv.is.std:n=8");
        assert_eq!(r.evaluation.alg_value, Value::from_integer(1));
        assert_eq!(r.evaluation.opt_value, Value::from_integer(7));
        assert_eq!(r.evaluation.adversary_bound, Some(Value::from_integer(7)));
        assert_eq!(r.evaluation.opt_source, OptSource::Oracle);
    }

    #[test]
    fn adversary_bound_used_beyond_caps() {
        let mut cfg = ExperimentConfig::new(Problem::IndependentSet, "is.greedy", Source::parse("adv.is.std:n=40"));
        cfg.caps = OracleCaps::default();
        let r = run_experiment(&cfg).unwrap();
        assert_eq!(r.evaluation.opt_source, OptSource::AdversaryBound);
        assert_eq!(r.evaluation.ratio, CompetitiveRatio::Finite(Value::from_integer(39)));
    }

    #[test]
    fn red_rule_is_optimal_on_random_graphs() {
        let mut cfg = ExperimentConfig::new(Problem::SpanningForest, "msf.redrule", Source::parse("gen.gnp:n=20,p=0.3,wmax=50,shuffle=1"));
        cfg.seed = 17;
        let r = run_experiment(&cfg).unwrap();
        assert_eq!(r.evaluation.ratio, CompetitiveRatio::Finite(Value::from_integer(1)));
    }

    #[test]
    fn mismatches_are_configuration_errors() {
        let cfg = ExperimentConfig::new(Problem::Matching, "is.greedy", Source::parse("adv.is.std"));
        assert!(matches!(run_experiment(&cfg), Err(HarnessError::Config(_))));
        let cfg = ExperimentConfig::new(Problem::IndependentSet, "is.greedy", Source::parse("adv.match.ext"));
        assert!(matches!(run_experiment(&cfg), Err(HarnessError::Config(_))));
        let mut cfg = ExperimentConfig::new(Problem::IndependentSet, "is.swap", Source::parse("adv.is.std"));
        cfg.model = Some(DecisionModel::Standard);
        assert!(matches!(run_experiment(&cfg), Err(HarnessError::Algorithm(_))));
    }

    #[test]
    fn ratio_orientation() {
        let v = Value::from_integer;
        assert_eq!(CompetitiveRatio::new(Problem::IndependentSet, v(2), v(3)), CompetitiveRatio::Finite(Value::new(3, 2)));
        assert_eq!(CompetitiveRatio::new(Problem::VertexCover, v(2), v(1)), CompetitiveRatio::Finite(v(2)));
        assert_eq!(CompetitiveRatio::new(Problem::IndependentSet, v(0), v(3)), CompetitiveRatio::Unbounded);
        assert_eq!(CompetitiveRatio::new(Problem::VertexCover, v(2), v(0)), CompetitiveRatio::Unbounded);
        assert_eq!(CompetitiveRatio::new(Problem::Matching, v(0), v(0)), CompetitiveRatio::Finite(v(1)));
        assert!(CompetitiveRatio::Unbounded > CompetitiveRatio::Finite(v(1000)));
    }

    #[test]
    fn infeasible_output_fails_loudly() {
        let g = GraphSnapshot::from_edges(2, [(0, 1)]);
        assert!(check_feasible(Problem::IndependentSet, &g, &[0, 1]).is_err());
        assert!(check_feasible(Problem::VertexCover, &g, &[]).is_err());
        assert!(check_feasible(Problem::SpanningForest, &g, &[]).is_err());
        assert!(check_feasible(Problem::Matching, &g, &[0]).is_ok());
    }
}
