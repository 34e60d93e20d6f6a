use thiserror::Error;

/// Errors produced by the character engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable sizes: {0} vs {1}")]
    IncomparableSizes(usize, usize),

    #[error("skew shape {outer}/{inner} is invalid: inner is not contained in outer")]
    NotContained { outer: String, inner: String },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("rank mismatch: ({0},{1}) vs ({2},{3})")]
    RankMismatch(usize, usize, usize, usize),

    #[error("invalid ranks: {0}")]
    InvalidRanks(String),

    #[error("below complete-intersection bound: need m >= l(lambda) + l(mu) - 1, have m = {m}, l(lambda) = {len_lambda}, l(mu) = {len_mu}")]
    BelowCompleteIntersectionBound {
        m: usize,
        len_lambda: usize,
        len_mu: usize,
    },

    #[error("weight blocks collide: {0}")]
    WeightBlocksCollide(String),

    #[error("padding too small: p = {p} < l(lambda) = {len_lambda} or q = {q} < l(mu) = {len_mu}")]
    PaddingTooSmall {
        p: usize,
        q: usize,
        len_lambda: usize,
        len_mu: usize,
    },

    #[error("singular evaluation: every variable must be nonzero")]
    SingularEvaluation,

    #[error("cohomology hypothesis not satisfied: {0}")]
    HypothesisNotSatisfied(String),

    #[error("chain condition failed: {0}")]
    ChainConditionFailed(String),

    #[error("not a complete intersection regime: a1 + a2 + max(c1, c2) = {lhs} > b = {b}")]
    NotCompleteIntersectionRegime { lhs: usize, b: usize },

    #[error("expansion has {terms} terms, exceeding the limit of {limit}")]
    TooManyTerms { terms: u128, limit: u128 },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable tag for the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::IncomparableSizes(..) => "incomparable_sizes",
            Error::NotContained { .. } => "not_contained",
            Error::Parse(_) => "parse",
            Error::LengthMismatch { .. } => "length_mismatch",
            Error::RankMismatch(..) => "rank_mismatch",
            Error::InvalidRanks(_) => "invalid_ranks",
            Error::BelowCompleteIntersectionBound { .. } => "below_complete_intersection_bound",
            Error::WeightBlocksCollide(_) => "weight_blocks_collide",
            Error::PaddingTooSmall { .. } => "padding_too_small",
            Error::SingularEvaluation => "singular_evaluation",
            Error::HypothesisNotSatisfied(_) => "hypothesis_not_satisfied",
            Error::ChainConditionFailed(_) => "chain_condition_failed",
            Error::NotCompleteIntersectionRegime { .. } => "not_complete_intersection_regime",
            Error::TooManyTerms { .. } => "too_many_terms",
            Error::Internal(_) => "internal",
        }
    }

    /// True for malformed-input errors, as opposed to violated mathematical preconditions.
    pub fn is_malformed_input(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
