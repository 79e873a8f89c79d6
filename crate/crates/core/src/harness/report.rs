//! JSON and CSV output.
//!
//! JSON objects come out with sorted keys, so two runs of the same
//! configuration and seed produce identical text apart from `wall_time_ms`,
//! which is only written when asked for.

use std::fmt::Write as _;
use std::time::Duration;

use num_traits::One;
use serde_json::json;

use super::{CompetitiveRatio, Evaluation, Run};
use crate::ledger::DecisionModel;
use crate::problem::Problem;
use crate::Value;

/// Integers as JSON numbers, other rationals as `"p/q"` strings.
pub fn value_json(v: &Value) -> serde_json::Value {
    if v.denom().is_one() {
        serde_json::Value::from(*v.numer())
    } else {
        serde_json::Value::from(v.to_string())
    }
}

/// A ratio as a float, or `"inf"` when there is none.
pub fn ratio_json(r: Option<Value>) -> serde_json::Value {
    match r {
        Some(v) => serde_json::Value::from(*v.numer() as f64 / *v.denom() as f64),
        None => serde_json::Value::from("inf"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub problem: Problem,
    pub model: DecisionModel,
    pub algorithm: String,
    pub source: String,
    pub seed: u64,
    pub run: Run,
    pub evaluation: Evaluation,
    /// Adversary-specific details, `null` for fixed sequences.
    pub adversary: serde_json::Value,
    pub wall_time: Duration,
}

impl ExperimentReport {
    pub fn ratio(&self) -> CompetitiveRatio {
        self.evaluation.ratio
    }

    pub fn to_json(&self, with_wall_time: bool) -> serde_json::Value {
        let e = &self.evaluation;
        let mut transcript = Vec::with_capacity(self.run.events.len());
        let mut moves = self.run.ledger.log().iter().peekable();
        for (step, event) in self.run.events.iter().enumerate() {
            let mut here = Vec::new();
            while let Some(mv) = moves.next_if(|mv| mv.step == step) {
                here.push(serde_json::to_value(mv).expect("moves always serialize"));
            }
            transcript.push(json!({ "step": step, "event": event.to_line(), "moves": here }));
        }
        let finalize: Vec<_> = moves.map(|mv| serde_json::to_value(mv).expect("moves always serialize")).collect();
        let items = |v: &[crate::ledger::Item]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        let mut out = json!({
            "config": {
                "problem": self.problem.to_string(),
                "model": self.model.to_string(),
                "algorithm": self.algorithm,
                "source": self.source,
                "seed": self.seed,
            },
            "n": self.run.graph.n(),
            "m": self.run.graph.m(),
            "alg_value": value_json(&e.alg_value),
            "opt_value": value_json(&e.opt_value),
            "opt_source": e.opt_source.as_str(),
            "adversary_bound": e.adversary_bound.as_ref().map(value_json),
            "ratio": ratio_json(e.ratio.value()),
            "ratio_exact": e.ratio.to_string(),
            "unbounded": e.ratio.is_unbounded(),
            "solution": items(&self.run.solution.accepted),
            "unused": items(&self.run.solution.unused),
            "adversary": self.adversary,
            "transcript": transcript,
            "finalize": finalize,
        });
        if with_wall_time {
            out["wall_time_ms"] = json!(self.wall_time.as_secs_f64() * 1000.0);
        }
        out
    }

    pub const CSV_HEADER: &'static str = "problem,model,algorithm,source,seed,n,m,alg_value,opt_value,opt_source,ratio,unbounded";

    pub fn csv_row(&self) -> String {
        let e = &self.evaluation;
        [
            self.problem.to_string(),
            self.model.to_string(),
            csv_field(&self.algorithm),
            csv_field(&self.source),
            self.seed.to_string(),
            self.run.graph.n().to_string(),
            self.run.graph.m().to_string(),
            e.alg_value.to_string(),
            e.opt_value.to_string(),
            e.opt_source.as_str().to_string(),
            e.ratio.to_string(),
            e.ratio.is_unbounded().to_string(),
        ]
        .join(",")
    }
}

/// Quotes a field when it contains a separator, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn emit_reports(reports: &[ExperimentReport], format: Format, with_wall_time: bool) -> String {
    match format {
        Format::Json => {
            let value = match reports {
                [one] => one.to_json(with_wall_time),
                many => serde_json::Value::Array(many.iter().map(|r| r.to_json(with_wall_time)).collect()),
            };
            let mut s = serde_json::to_string_pretty(&value).expect("reports always serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::new();
            writeln!(s, "{}", ExperimentReport::CSV_HEADER).unwrap();
            for r in reports {
                writeln!(s, "{}", r.csv_row()).unwrap();
            }
            s
        }
    }
}
