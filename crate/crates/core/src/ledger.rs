//! Accept/reject bookkeeping under the four decision models.
//!
//! A [`SolutionLedger`] partitions the revealed items into accepted (`S`),
//! rejected (`R`) and pending (`P`) and refuses every move its model does not
//! permit. It knows nothing about graphs; feasibility of the accepted set is
//! the caller's business.
//!
//! | model    | accept now | reject now | late accept | late reject |
//! |----------|------------|------------|-------------|-------------|
//! | Standard | yes        | yes        | no          | no          |
//! | LA       | yes        | no         | yes         | no          |
//! | LR       | yes        | yes        | no          | yes         |
//! | LAR      | yes        | no         | yes         | yes         |
//!
//! In Standard and LR every item must leave `P` during the step that reveals
//! it. Rejection is final in every model.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecisionModel {
    Standard,
    LateAccept,
    LateReject,
    LateAcceptThenReject,
}

impl DecisionModel {
    pub const ALL: [DecisionModel; 4] =
        [DecisionModel::Standard, DecisionModel::LateAccept, DecisionModel::LateReject, DecisionModel::LateAcceptThenReject];

    pub fn allows_late_accept(self) -> bool {
        matches!(self, DecisionModel::LateAccept | DecisionModel::LateAcceptThenReject)
    }

    pub fn allows_late_reject(self) -> bool {
        matches!(self, DecisionModel::LateReject | DecisionModel::LateAcceptThenReject)
    }

    /// Whether each item must be decided in the step that reveals it.
    pub fn requires_immediate_decision(self) -> bool {
        !self.allows_late_accept()
    }

    pub fn short_name(self) -> &'static str {
        match self {
            DecisionModel::Standard => "standard",
            DecisionModel::LateAccept => "la",
            DecisionModel::LateReject => "lr",
            DecisionModel::LateAcceptThenReject => "lar",
        }
    }
}

impl fmt::Display for DecisionModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecisionModel::Standard => "Standard",
            DecisionModel::LateAccept => "LateAccept",
            DecisionModel::LateReject => "LateReject",
            DecisionModel::LateAcceptThenReject => "LateAcceptThenReject",
        })
    }
}

impl FromStr for DecisionModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "standard" | "std" => Ok(DecisionModel::Standard),
            "la" | "late-accept" | "lateaccept" => Ok(DecisionModel::LateAccept),
            "lr" | "late-reject" | "latereject" => Ok(DecisionModel::LateReject),
            "lar" | "late-accept-reject" | "lateacceptthenreject" => Ok(DecisionModel::LateAcceptThenReject),
            _ => Err(format!("unknown decision model `{s}` (standard, la, lr, lar)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ItemKind {
    Vertex,
    Edge,
}

impl ItemKind {
    pub fn item(self, id: usize) -> Item {
        match self {
            ItemKind::Vertex => Item::Vertex(id),
            ItemKind::Edge => Item::Edge(id),
        }
    }
}

/// A vertex or an edge, identified by its arrival index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Item {
    Vertex(usize),
    Edge(usize),
}

impl Item {
    pub fn id(self) -> usize {
        match self {
            Item::Vertex(id) | Item::Edge(id) => id,
        }
    }

    pub fn kind(self) -> ItemKind {
        match self {
            Item::Vertex(_) => ItemKind::Vertex,
            Item::Edge(_) => ItemKind::Edge,
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Vertex(id) => write!(f, "v{id}"),
            Item::Edge(id) => write!(f, "e{id}"),
        }
    }
}

impl FromStr for Item {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad item `{s}`");
        let (head, rest) = s.split_at_checked(1).ok_or_else(bad)?;
        let id = rest.parse::<usize>().map_err(|_| bad())?;
        match head {
            "v" => Ok(Item::Vertex(id)),
            "e" => Ok(Item::Edge(id)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Item {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Item {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// What an algorithm asks the ledger to do. `AcceptNow` and `RejectNow`
/// refer to the item revealed in the current step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    AcceptNow,
    RejectNow,
    LateAccept(Item),
    LateReject(Item),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MoveKind {
    AcceptNow,
    RejectNow,
    LateAccept,
    LateReject,
    /// End of input: the pending item is reported unused.
    Finalize,
}

/// A logged, resolved move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub step: usize,
    pub action: MoveKind,
    pub item: Item,
}

impl Move {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("moves always serialize")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ItemState {
    Pending,
    Accepted,
    Rejected,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IllegalMove {
    #[error("no open step")]
    NoOpenStep,
    #[error("step {0} is still open")]
    StepOpen(usize),
    #[error("late accept in {0} model")]
    LateAcceptNotAllowed(DecisionModel),
    #[error("late reject in {0} model")]
    LateRejectNotAllowed(DecisionModel),
    #[error("immediate reject in {0} model (leave the item pending instead)")]
    RejectNowNotAllowed(DecisionModel),
    #[error("re-accept after late reject of {0}")]
    ReacceptAfterReject(Item),
    #[error("{0} is already accepted")]
    AlreadyAccepted(Item),
    #[error("{0} is already rejected")]
    AlreadyRejected(Item),
    #[error("{0} has not been accepted")]
    NotAccepted(Item),
    #[error("{0} has not been revealed")]
    Unrevealed(Item),
    #[error("{0} has the wrong item kind for this ledger")]
    WrongKind(Item),
    #[error("undecided item {item} in {model} model")]
    Undecided { item: Item, model: DecisionModel },
    #[error("ledger already finalized")]
    Finalized,
}

/// Final fate of every revealed item.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FinalSolution {
    pub accepted: Vec<Item>,
    pub rejected: Vec<Item>,
    /// Items still pending at end of input, reported as rejected.
    pub unused: Vec<Item>,
}

#[derive(Clone, Debug)]
pub struct SolutionLedger {
    model: DecisionModel,
    kind: ItemKind,
    implicit_reject: bool,
    states: Vec<ItemState>,
    open: bool,
    finalized: bool,
    accepted: usize,
    rejected: usize,
    log: Vec<Move>,
}

impl SolutionLedger {
    pub fn new(model: DecisionModel, kind: ItemKind) -> Self {
        SolutionLedger {
            model,
            kind,
            implicit_reject: false,
            states: Vec::new(),
            open: false,
            finalized: false,
            accepted: 0,
            rejected: 0,
            log: Vec::new(),
        }
    }

    /// In Standard and LR, reject an undecided current item at end of step
    /// instead of failing.
    pub fn with_implicit_reject(mut self, on: bool) -> Self {
        self.implicit_reject = on;
        self
    }

    pub fn model(&self) -> DecisionModel {
        self.model
    }

    pub fn kind(&self) -> ItemKind {
        self.kind
    }

    pub fn revealed(&self) -> usize {
        self.states.len()
    }

    /// The item revealed by the open step, if any.
    pub fn current(&self) -> Option<Item> {
        (self.open).then(|| self.kind.item(self.states.len() - 1))
    }

    pub fn log(&self) -> &[Move] {
        &self.log
    }

    pub fn is_finalized(&self) -> bool {
        self.finalized
    }

    pub fn state(&self, id: usize) -> Option<ItemState> {
        self.states.get(id).copied()
    }

    pub fn is_accepted(&self, id: usize) -> bool {
        self.state(id) == Some(ItemState::Accepted)
    }

    pub fn is_rejected(&self, id: usize) -> bool {
        self.state(id) == Some(ItemState::Rejected)
    }

    pub fn is_pending(&self, id: usize) -> bool {
        self.state(id) == Some(ItemState::Pending)
    }

    pub fn accepted_count(&self) -> usize {
        self.accepted
    }

    pub fn rejected_count(&self) -> usize {
        self.rejected
    }

    pub fn pending_count(&self) -> usize {
        self.states.len() - self.accepted - self.rejected
    }

    fn ids_in(&self, state: ItemState) -> impl Iterator<Item = usize> + '_ {
        self.states.iter().enumerate().filter(move |(_, s)| **s == state).map(|(id, _)| id)
    }

    /// Ids of accepted items, ascending.
    pub fn accepted_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids_in(ItemState::Accepted)
    }

    pub fn rejected_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids_in(ItemState::Rejected)
    }

    pub fn pending_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.ids_in(ItemState::Pending)
    }

    /// Reveals the next item and opens its step.
    pub fn begin_step(&mut self) -> Result<Item, IllegalMove> {
        if self.finalized {
            return Err(IllegalMove::Finalized);
        }
        if self.open {
            return Err(IllegalMove::StepOpen(self.states.len() - 1));
        }
        self.states.push(ItemState::Pending);
        self.open = true;
        Ok(self.kind.item(self.states.len() - 1))
    }

    /// Closes the open step, enforcing immediate decisions where the model
    /// requires them.
    pub fn end_step(&mut self) -> Result<(), IllegalMove> {
        let item = self.current().ok_or(IllegalMove::NoOpenStep)?;
        if self.model.requires_immediate_decision() && self.states[item.id()] == ItemState::Pending {
            if self.implicit_reject {
                self.apply(Action::RejectNow)?;
            } else {
                return Err(IllegalMove::Undecided { item, model: self.model });
            }
        }
        self.open = false;
        Ok(())
    }

    /// Applies one move, or explains why the model forbids it. A refused move
    /// leaves the ledger untouched.
    pub fn apply(&mut self, action: Action) -> Result<Move, IllegalMove> {
        if self.finalized {
            return Err(IllegalMove::Finalized);
        }
        let step = self.current().ok_or(IllegalMove::NoOpenStep)?.id();
        let (kind, item, to) = match action {
            Action::AcceptNow => {
                let item = self.kind.item(step);
                self.expect_pending(item)?;
                (MoveKind::AcceptNow, item, ItemState::Accepted)
            }
            Action::RejectNow => {
                if !self.model.requires_immediate_decision() {
                    return Err(IllegalMove::RejectNowNotAllowed(self.model));
                }
                let item = self.kind.item(step);
                match self.states[step] {
                    ItemState::Pending => {}
                    ItemState::Accepted => return Err(IllegalMove::AlreadyAccepted(item)),
                    ItemState::Rejected => return Err(IllegalMove::AlreadyRejected(item)),
                }
                (MoveKind::RejectNow, item, ItemState::Rejected)
            }
            Action::LateAccept(item) => {
                if !self.model.allows_late_accept() {
                    return Err(IllegalMove::LateAcceptNotAllowed(self.model));
                }
                self.check_item(item)?;
                self.expect_pending(item)?;
                (MoveKind::LateAccept, item, ItemState::Accepted)
            }
            Action::LateReject(item) => {
                if !self.model.allows_late_reject() {
                    return Err(IllegalMove::LateRejectNotAllowed(self.model));
                }
                self.check_item(item)?;
                match self.states[item.id()] {
                    ItemState::Accepted => {}
                    ItemState::Pending => return Err(IllegalMove::NotAccepted(item)),
                    ItemState::Rejected => return Err(IllegalMove::AlreadyRejected(item)),
                }
                (MoveKind::LateReject, item, ItemState::Rejected)
            }
        };
        self.set_state(item.id(), to);
        let mv = Move { step, action: kind, item };
        self.log.push(mv);
        Ok(mv)
    }

    fn check_item(&self, item: Item) -> Result<(), IllegalMove> {
        if item.kind() != self.kind {
            return Err(IllegalMove::WrongKind(item));
        }
        if item.id() >= self.states.len() {
            return Err(IllegalMove::Unrevealed(item));
        }
        Ok(())
    }

    fn expect_pending(&self, item: Item) -> Result<(), IllegalMove> {
        match self.states[item.id()] {
            ItemState::Pending => Ok(()),
            ItemState::Accepted => Err(IllegalMove::AlreadyAccepted(item)),
            ItemState::Rejected => Err(IllegalMove::ReacceptAfterReject(item)),
        }
    }

    fn set_state(&mut self, id: usize, to: ItemState) {
        match self.states[id] {
            ItemState::Accepted => self.accepted -= 1,
            ItemState::Rejected => self.rejected -= 1,
            ItemState::Pending => {}
        }
        match to {
            ItemState::Accepted => self.accepted += 1,
            ItemState::Rejected => self.rejected += 1,
            ItemState::Pending => {}
        }
        self.states[id] = to;
    }

    /// Ends the input. Closes an open step (with the usual end-of-step
    /// check), logs a `Finalize` move for every pending item and reports
    /// those items as unused. The partition itself is left as it was.
    pub fn finalize(&mut self) -> Result<FinalSolution, IllegalMove> {
        if self.finalized {
            return Err(IllegalMove::Finalized);
        }
        if self.open {
            self.end_step()?;
        }
        let step = self.states.len().saturating_sub(1);
        let unused: Vec<Item> = self.pending_ids().map(|id| self.kind.item(id)).collect();
        for &item in &unused {
            self.log.push(Move { step, action: MoveKind::Finalize, item });
        }
        self.finalized = true;
        Ok(FinalSolution {
            accepted: self.accepted_ids().map(|id| self.kind.item(id)).collect(),
            rejected: self.rejected_ids().map(|id| self.kind.item(id)).collect(),
            unused,
        })
    }

    /// Rebuilds a ledger from its log. `revealed` is the number of items the
    /// original ledger had revealed.
    pub fn replay(
        model: DecisionModel,
        kind: ItemKind,
        revealed: usize,
        log: &[Move],
    ) -> Result<SolutionLedger, IllegalMove> {
        let mut ledger = SolutionLedger::new(model, kind);
        let mut finalize = false;
        for mv in log {
            if mv.action == MoveKind::Finalize {
                finalize = true;
                continue;
            }
            while ledger.revealed() <= mv.step {
                if ledger.open {
                    ledger.end_step()?;
                }
                ledger.begin_step()?;
            }
            let action = match mv.action {
                MoveKind::AcceptNow => Action::AcceptNow,
                MoveKind::RejectNow => Action::RejectNow,
                MoveKind::LateAccept => Action::LateAccept(mv.item),
                MoveKind::LateReject => Action::LateReject(mv.item),
                MoveKind::Finalize => unreachable!(),
            };
            ledger.apply(action)?;
        }
        while ledger.revealed() < revealed {
            if ledger.open {
                ledger.end_step()?;
            }
            ledger.begin_step()?;
        }
        if finalize {
            ledger.finalize()?;
        } else if ledger.open {
            ledger.end_step()?;
        }
        Ok(ledger)
    }

    /// Current state of each revealed item, by id.
    pub fn states(&self) -> &[ItemState] {
        &self.states
    }
}
