use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ledger::ItemKind;
use crate::stream::ArrivalKind;

/// The four online graph problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Problem {
    IndependentSet,
    Matching,
    VertexCover,
    SpanningForest,
}

impl Problem {
    pub const ALL: [Problem; 4] = [Problem::IndependentSet, Problem::Matching, Problem::VertexCover, Problem::SpanningForest];

    pub fn is_maximization(self) -> bool {
        matches!(self, Problem::IndependentSet | Problem::Matching)
    }

    pub fn item_kind(self) -> ItemKind {
        match self {
            Problem::IndependentSet | Problem::VertexCover => ItemKind::Vertex,
            Problem::Matching | Problem::SpanningForest => ItemKind::Edge,
        }
    }

    pub fn arrival_kind(self) -> ArrivalKind {
        match self.item_kind() {
            ItemKind::Vertex => ArrivalKind::Vertex,
            ItemKind::Edge => ArrivalKind::Edge,
        }
    }

    pub fn short_name(self) -> &'static str {
        match self {
            Problem::IndependentSet => "is",
            Problem::Matching => "matching",
            Problem::VertexCover => "vc",
            Problem::SpanningForest => "msf",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "is" | "independent-set" => Ok(Problem::IndependentSet),
            "matching" | "match" => Ok(Problem::Matching),
            "vc" | "vertex-cover" => Ok(Problem::VertexCover),
            "msf" | "spanning-forest" => Ok(Problem::SpanningForest),
            _ => Err(format!("unknown problem `{s}` (is, matching, vc, msf)")),
        }
    }
}
