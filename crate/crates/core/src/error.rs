use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the empty set is not allowed as a member")]
    EmptyMember,
    #[error("declared carrier {declared} differs from the union of members {actual}")]
    CarrierMismatch { declared: String, actual: String },
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("duplicate member {0}")]
    DuplicateMember(String),
    #[error("hypergraph is not atomic")]
    NotAtomic,
    #[error("set is not a subset of the carrier")]
    NotSubset,
    #[error("hypergraph is not atomic, saturated and connected")]
    NotAsc,
    #[error("set is not a member of the family")]
    NotMember,
    #[error("family is not a construction of the hypergraph")]
    NotAConstruction,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("atom `{0}` occurs more than once")]
    RepeatedAtom(String),
    #[error("carriers of the factors overlap")]
    CarrierOverlap,
    #[error("factor is not a construction of the required hypergraph")]
    BadFactor,
    #[error("set does not determine a facet")]
    NotFacet,
    #[error("faces are not comparable")]
    NotComparable,
    #[error("malformed poset: {0}")]
    MalformedPoset(String),
    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("a graph needs at least one vertex")]
    EmptyCarrier,
    #[error("bad edge `{0}`")]
    BadEdge(String),
    #[error("family contains sets that are not tubes of the graph")]
    NotTubes,
    #[error("carrier of {size} atoms exceeds the cap of {cap}")]
    CarrierTooLarge { size: usize, cap: usize },
    #[error("no catalog entry named `{0}`")]
    UnknownName(String),
    #[error("export needs dimension at most {max}, got {got}")]
    DimensionTooLarge { max: usize, got: usize },
    #[error("hypergraph is not a graph hypergraph")]
    NotAGraph,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
