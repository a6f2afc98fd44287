use thiserror::Error;

/// Errors reported by the library.
///
/// Domain preconditions are checked eagerly; a `Feasible`/`Infeasible` or
/// `true`/`false` answer is only produced for well-formed questions.
#[derive(Debug, Error)]
pub enum Error {
    // ---- parsing ----
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),

    // ---- graph construction ----
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{family} graphs need at least {minimum} vertices, got {n}")]
    BelowMinimumOrder {
        family: &'static str,
        minimum: usize,
        n: usize,
    },
    #[error("unknown graph family or name {0:?}")]
    UnknownName(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {n} vertices, over the cap of {cap}")]
    OverCap { n: usize, cap: usize },

    // ---- subsets ----
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset must be a proper subset of the vertices")]
    FullSubset,
    #[error("volume cap must be positive")]
    NonPositiveCap,
    #[error("subsets must be disjoint")]
    OverlappingSubsets,

    // ---- feasibility systems ----
    #[error("edge ({0}, {1}) is not in canonical orientation (need i < j)")]
    NonCanonicalEdge(usize, usize),
    #[error("system already has edge ({0}, {1})")]
    DuplicateSystemEdge(usize, usize),
    #[error("malformed box on edge ({0}, {1}): lower bound exceeds upper bound")]
    MalformedBox(usize, usize),
    #[error("malformed interval at vertex {0}: lower bound exceeds upper bound")]
    MalformedInterval(usize),
    #[error("system bounds overflow the exact integer scaling")]
    ScaleOverflow,

    // ---- eigen ----
    #[error("vertex function is identically zero")]
    ZeroFunction,
    #[error("mu = {0} lies outside [0, 1]")]
    MuOutOfRange(String),
    #[error("vertex function is not normalized to the unit sphere X")]
    NotInX,
    #[error("function defined on {got} vertices, graph has {expected}")]
    WrongFunctionLength { got: usize, expected: usize },
    #[error("subset must consist of exactly two vertices, got {0}")]
    PairSizeNotTwo(usize),
    #[error("the two subset vertices are not adjacent")]
    PairNotAdjacent,

    // ---- spectrum / census ----
    #[error("{0} is not an eigenvalue of this graph")]
    NotAnEigenvalue(String),
    #[error("census supports orders 1..=6, got {0}")]
    CensusOrderOutOfRange(usize),

    // ---- nodal ----
    #[error("({n}, {mu}) is outside the stated range of the closed-form theorem")]
    OutOfTheoremRange { n: usize, mu: String },

    // ---- cheeger ----
    #[error("k = {k} out of range 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("basis vectors are linearly dependent")]
    DependentBasis,
    #[error("basis has dimension {dim}, need at least {required}")]
    BasisDimensionTooSmall { dim: usize, required: usize },
    #[error("basis must be nonempty")]
    EmptyBasis,

    // ---- multiplicity ----
    #[error("(mu, x) is not an eigenpair")]
    NotAnEigenpair,
    #[error("vertex function must be normalized (one-norm 1)")]
    NotNormalized,

    // ---- module composition ----
    #[error("core and socket must partition the module vertices: {0}")]
    BadModulePartition(String),
    #[error("socket vertices {0} and {1} are adjacent")]
    SocketSocketEdge(usize, usize),
    #[error("module graph is not connected")]
    DisconnectedModule,
    #[error("modules disagree on mu")]
    MuMismatch,
    #[error("vertex {0} is not a socket vertex of its module")]
    NotASocketVertex(usize),
    #[error("socket vertex {0} does not carry the value zero")]
    SocketValueNotZero(usize),
    #[error("pasted socket values are not all equal")]
    PastedValuesUnequal,
    #[error("module is not a mu-eigencomponent: {0}")]
    NotEigencomponent(String),
    #[error("module values must be ternary (in {{-1, 0, 1}})")]
    NotTernary,
    #[error("socket vertex {0} must have exactly one neighbor")]
    PlugNeighborNotUnique(usize),
    #[error("socket vertex {0} is matched more than once")]
    DuplicateMatch(usize),
    #[error("value at the attachment vertex {0} must be exactly 1")]
    PlugValueNotOne(usize),
    #[error("supplied alpha coefficient on ({0}, {1}) is inadmissible")]
    AlphaInadmissible(usize, usize),
    #[error("alpha coefficients must be antisymmetric")]
    AlphaNotAntisymmetric,
    #[error("joined system is infeasible: {0}")]
    JoinInfeasible(String),
    #[error("pasting assumption fails: {0}")]
    PasteInfeasible(String),
    #[error("plugged module fails verification: {0}")]
    PlugInfeasible(String),
    #[error("phi is not an eigenvector of the module graph")]
    NotEigenvectorOnModule,
    #[error("embedding is not an induced-subgraph embedding: {0}")]
    EmbeddingNotInduced(String),
    #[error("outside vertex {0} is adjacent to the embedded core")]
    ExtensionBlocked(usize),

    // ---- module files ----
    #[error("module file: {0}")]
    ModuleFile(String),
}
