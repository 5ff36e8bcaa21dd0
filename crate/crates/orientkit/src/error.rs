use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(u32),
    #[error("duplicate arc id {0}")]
    DuplicateArcId(u32),
    #[error("graph has arcs; an undirected graph was expected")]
    NotAGraph,
    #[error("graph has undirected edges; a digraph was expected")]
    NotADigraph,
    #[error("orientation misses edge {0}")]
    MissingEdge(u32),
    #[error("orientation names edge {0}, which the graph does not have")]
    UnknownEdge(u32),
    #[error("edge {0} oriented between vertices that are not its endpoints")]
    WrongEndpoints(u32),
    #[error("contraction set is empty")]
    EmptyContraction,
    #[error("contraction label `{0}` collides with a surviving vertex")]
    LabelCollision(String),
    #[error("blow-up: no attachment given for edge {0}")]
    MissingAttachment(u32),
    #[error("blow-up: attachment target is not a vertex of the replacement graph")]
    BadAttachment,
    #[error("blow-up: replacement vertex `{0}` already exists in the host graph")]
    BlowupNameClash(String),
    #[error("double cycle needs at least 2 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex set is not a subset of the graph's vertices")]
    NotASubset,
    #[error("instance too large for exhaustive enumeration: {size} > {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("variable {0} occurs in no clause")]
    UnusedVariable(usize),
    #[error("truth assignment has {got} values, instance has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("cycle of variable {0} is not oriented as a circuit")]
    CycleNotCircuit(usize),
    #[error("index map does not match the graph: {0}")]
    MapMismatch(String),
    #[error("constructed orientation failed verification: {0}")]
    Unverified(String),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("corpus filter starved: no acceptance in {0} draws")]
    FilterStarved(u64),
    #[error("invalid corpus spec: {0}")]
    BadCorpus(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
