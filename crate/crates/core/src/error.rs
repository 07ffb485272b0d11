use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("unknown component `{0}`")]
    UnknownComponent(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("empty subcurve")]
    EmptySubcurve,
    #[error("subcurve is the whole curve")]
    WholeCurve,
    #[error("{r} components exceed the enumeration cap of {cap}")]
    EnumerationCap { r: usize, cap: usize },
    #[error("polarization: {0}")]
    Polarization(String),
    #[error("total weighted degree non-positive")]
    NonPositiveTotalDegree,
    #[error("degree guard violated on `{component}`: {detail}")]
    DegreeGuard { component: String, detail: String },
    #[error("curve is not weighted semistable: {0}")]
    NotSemistable(String),
    #[error("inconsistent datum: {0}")]
    InconsistentDatum(String),
    #[error("not a staircase at profile `{profile}` index {index}")]
    NotStaircase { profile: String, index: usize },
    #[error("empty point set")]
    EmptyGamma,
    #[error("weights are not non-increasing")]
    UnsortedWeights,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dualizing sheaf not positive on `{0}`")]
    DualizingNotPositive(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
}

pub type Result<T> = std::result::Result<T, Error>;
