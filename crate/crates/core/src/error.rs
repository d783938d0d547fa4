use thiserror::Error;

/// Errors raised by the localization engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets do not match: {left} vs {right}")]
    VariableMismatch { left: String, right: String },

    #[error("character has length {found}, expected torus rank {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("zero character where a nonzero one is required")]
    ZeroCharacter,

    #[error("polynomial is not divisible by {0}")]
    Indivisible(String),

    #[error("index {index} out of range (max {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("value is not a constant: {0}")]
    NotConstant(String),

    #[error("no evaluation point avoiding the denominator after {0} attempts")]
    DenominatorVanishes(usize),

    #[error("weights are not pairwise distinct: {0}")]
    RepeatedWeights(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("point `{0}` has no image under the point map")]
    UnmappedPoint(String),

    #[error("normal weight {weight} at `{point}` is not a tangent weight of the ambient space")]
    NormalWeightAbsent { point: String, weight: String },

    #[error("normal weight at `{0}` is zero")]
    ZeroNormalWeight(String),

    #[error("undefined bundle reference: {0}")]
    UndefinedBundle(String),

    #[error("class does not vanish at fixed point `{point}` outside X: restriction {value}")]
    VanishingCheckFailed { point: String, value: String },

    #[error("pivot {0} does not factor into characters")]
    NonFactorablePivot(String),

    #[error("target is not in the span of the basis: residual {0}")]
    Inconsistent(String),

    #[error("convention calibration failed: {0}")]
    CalibrationFailed(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True for failures of the mathematics itself (as opposed to malformed or
    /// inconsistent input).
    pub fn is_math(&self) -> bool {
        matches!(
            self,
            Error::NotConstant(_)
                | Error::DenominatorVanishes(_)
                | Error::VanishingCheckFailed { .. }
                | Error::CalibrationFailed(_)
                | Error::NonFactorablePivot(_)
                | Error::Inconsistent(_)
                | Error::NormalWeightAbsent { .. }
                | Error::Indivisible(_)
        )
    }

    /// The variant name, for diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::VariableMismatch { .. } => "VariableMismatch",
            Error::RankMismatch { .. } => "RankMismatch",
            Error::ZeroCharacter => "ZeroCharacter",
            Error::Indivisible(_) => "Indivisible",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::NotConstant(_) => "NotConstant",
            Error::DenominatorVanishes(_) => "DenominatorVanishes",
            Error::RepeatedWeights(_) => "RepeatedWeights",
            Error::UnknownPoint(_) => "UnknownPoint",
            Error::UnmappedPoint(_) => "UnmappedPoint",
            Error::NormalWeightAbsent { .. } => "NormalWeightAbsent",
            Error::ZeroNormalWeight(_) => "ZeroNormalWeight",
            Error::UndefinedBundle(_) => "UndefinedBundle",
            Error::VanishingCheckFailed { .. } => "VanishingCheckFailed",
            Error::NonFactorablePivot(_) => "NonFactorablePivot",
            Error::Inconsistent(_) => "Inconsistent",
            Error::CalibrationFailed(_) => "CalibrationFailed",
            Error::Invalid(_) => "Invalid",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
