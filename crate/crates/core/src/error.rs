use thiserror::Error;

use crate::node::{ExtNode, Key, Node};

/// Kernel errors. Every variant has a stable code (see [`Error::code`]) that
/// the command-line front-end reports verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // level-1 trees
    #[error("the empty node is not allowed in a level-1 tree")]
    ContainsEmpty,
    #[error("closure violation: {node} requires {missing}")]
    ClosureViolation { node: Node, missing: Node },
    #[error("{node} is not an element of the ordinal representation")]
    NotInRep { node: Node },
    #[error("{0} is not a description of the tree")]
    NotADescription(Node),
    #[error("tower entry {0} does not have cardinality {0}")]
    CardinalityMismatch(usize),
    #[error("tower entry {0} is not a subtree of entry {1}")]
    NotSubtree(usize, usize),
    #[error("tower entry {0} is not regular")]
    NotRegular(usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("map does not factor the pair of trees")]
    NotAFactoring,

    // ordinals and shifts
    #[error("index map is not strictly increasing into 1..={0}")]
    BadIndexMap(u32),
    #[error("level u{level} is out of range for a map on 1..={n}")]
    LevelOutOfRange { level: u32, n: u32 },
    #[error("ordinal is not a limit")]
    NotALimit,
    #[error("continuity criterion fails at k = {0}: the map is continuous there")]
    CriterionFails(u32),
    #[error("ordinal is out of range: {0}")]
    OutOfRange(String),
    #[error("ordinal is below u1")]
    BelowOmega1,

    // level <= 2
    #[error("degree-0 partial tree has no completion")]
    DegreeZeroHasNoCompletion,
    #[error("partial tree invalid: {0}")]
    BadPartialTree(String),
    #[error("bad first tower entry: must be (∅, (0))")]
    BadFirstEntry,
    #[error("tower entry {0} is not the completion of its predecessor")]
    NotCompletionAt(usize),
    #[error("root entry must be (∅, (0))")]
    RootNotCanonical,
    #[error("domain is not a tree of level-1 trees at {0}")]
    DomainNotTree(Key),
    #[error("tower invariant violated along {0}")]
    TowerViolation(Key),
    #[error("invalid element of the ordinal representation: {0}")]
    InvalidElement(String),
    #[error("ordinal tuple has no entry for {0}")]
    MissingEntry(String),
    #[error("tuple does not respect the tree: {0}")]
    NotRespecting(String),
    #[error("bad description: {0}")]
    BadDescription(String),
    #[error("no level <=2 tree with this domain is respected by the tuple")]
    NoTreeFound,
    #[error("{0} trees with this domain are respected by the tuple")]
    MultipleFound(usize),
    #[error("invalid tower: {0}")]
    InvalidTower(String),

    // level 3
    #[error("partial level <=2 tree violates clause: {0}")]
    CaseViolation(String),
    #[error("degree-0 partial level <=2 tree has no completion")]
    DegreeZero,
    #[error("the empty key is not allowed in a level-3 tree")]
    EmptyKeyPresent,
    #[error("invalid level-3 tower: {0}")]
    NotTower(String),
    #[error("bad node label {0}")]
    BadNode(ExtNode),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::ContainsEmpty => "E_CONTAINS_EMPTY",
            Error::ClosureViolation { .. } => "E_CLOSURE",
            Error::NotInRep { .. } => "E_NOT_IN_REP",
            Error::NotADescription(_) => "E_NOT_DESCRIPTION",
            Error::CardinalityMismatch(_) => "E_CARDINALITY",
            Error::NotSubtree(..) => "E_NOT_SUBTREE",
            Error::NotRegular(_) => "E_NOT_REGULAR",
            Error::LengthMismatch { .. } => "E_LENGTH",
            Error::NotAFactoring => "E_NOT_FACTORING",
            Error::BadIndexMap(_) => "E_INDEX_MAP",
            Error::LevelOutOfRange { .. } => "E_LEVEL_RANGE",
            Error::NotALimit => "E_NOT_LIMIT",
            Error::CriterionFails(_) => "E_CRITERION",
            Error::OutOfRange(_) => "E_OUT_OF_RANGE",
            Error::BelowOmega1 => "E_BELOW_OMEGA1",
            Error::DegreeZeroHasNoCompletion => "E_NO_COMPLETION",
            Error::BadPartialTree(_) => "E_PARTIAL_TREE",
            Error::BadFirstEntry => "E_FIRST_ENTRY",
            Error::NotCompletionAt(_) => "E_NOT_COMPLETION",
            Error::RootNotCanonical => "E_ROOT",
            Error::DomainNotTree(_) => "E_DOMAIN",
            Error::TowerViolation(_) => "E_TOWER",
            Error::InvalidElement(_) => "E_INVALID_ELEMENT",
            Error::MissingEntry(_) => "E_MISSING_ENTRY",
            Error::NotRespecting(_) => "E_NOT_RESPECTING",
            Error::BadDescription(_) => "E_BAD_DESCRIPTION",
            Error::NoTreeFound => "E_NO_TREE",
            Error::MultipleFound(_) => "E_MULTIPLE_TREES",
            Error::InvalidTower(_) => "E_INVALID_TOWER",
            Error::CaseViolation(_) => "E_CASE",
            Error::DegreeZero => "E_DEGREE_ZERO",
            Error::EmptyKeyPresent => "E_EMPTY_KEY",
            Error::NotTower(_) => "E_NOT_TOWER",
            Error::BadNode(_) => "E_BAD_NODE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
