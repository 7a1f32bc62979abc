use thiserror::Error;

/// Errors raised by poset construction and by the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("poset has {0} minimal elements, expected exactly one")]
    MultipleMinima(usize),
    #[error("poset has no elements, so no minimum")]
    NoMinimum,
    #[error("rank function missing for element `{0}`")]
    NoRank(String),
    #[error("cover `{lower}` < `{upper}` violates rank(upper) = rank(lower) + 1 ({lower_rank} -> {upper_rank})")]
    RankMismatch {
        lower: String,
        upper: String,
        lower_rank: u32,
        upper_rank: u32,
    },
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("poset is not graded: {0}")]
    NotGraded(String),
    #[error("elements `{0}` and `{1}` are not comparable")]
    NotComparable(String, String),
    #[error("poset is not Eulerian{}", witness_suffix(.witness))]
    NotEulerian { witness: Option<(String, String)> },
    #[error("poset is not lower Eulerian{}", witness_suffix(.witness))]
    NotLowerEulerian { witness: Option<(String, String)> },
    #[error("poset is not simplicial")]
    NotSimplicial,
    #[error("poset is not dual simplicial")]
    NotDualSimplicial,
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("rank {0} exceeds the supported maximum of 62")]
    RankTooLarge(u32),

    #[error("cannot evaluate at zero: polynomial has negative exponents")]
    EvalAtZeroWithNegativeExponents,
    #[error("polynomial has a negative exponent")]
    NegativeExponentPresent,
    #[error("polynomial is not multiplicatively symmetric of degree {0}")]
    NotMultSymmetric(i64),
    #[error("polynomial is not additively symmetric of degree {0}")]
    NotAddSymmetric(i64),

    #[error("flag vector kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("alphabet mismatch: expected {expected}, found {found}")]
    AlphabetMismatch { expected: String, found: String },
    #[error("ce-word `{0}` has an odd run of e letters")]
    OddEWordPresent(String),
    #[error("word `{word}` contains a letter outside alphabet {alphabet}")]
    InvalidWord { word: String, alphabet: String },

    #[error("exponent {exponent} of U(st*(x-1/x)) is not congruent to {expected_parity} mod 2")]
    UnexpectedParity { exponent: i64, expected_parity: i64 },
    #[error("sign-vector enumeration of length {0} exceeds the cap of 20")]
    OracleTooLarge(usize),

    #[error("permutation has consecutive descents starting at position {0}")]
    ConsecutiveDescents(usize),
    #[error("permutation ends with a descent at position {0}")]
    TrailingDescent(usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("h-vector is not symmetric: h_{i} = {left} but h_{mirror} = {right}")]
    AsymmetricHVector {
        i: usize,
        mirror: usize,
        left: String,
        right: String,
    },
    #[error("cd-index differs from the simplicial decomposition by {residual}")]
    DecompositionMismatch { residual: String },

    #[error("invalid input: {0}")]
    Input(String),
}

fn witness_suffix(w: &Option<(String, String)>) -> String {
    match w {
        Some((u, v)) => format!(" (interval [{u}, {v}] fails the alternating rank sum)"),
        None => String::new(),
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
