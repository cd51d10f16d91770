use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("matrix dimension {found} does not match {expected} variables")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("linear substitution matrix is singular")]
    SingularMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("exponent must be a non-negative integer literal")]
    BadExponent,
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("between 1 and {max} variables are supported, got {found}")]
    VariableCount { found: usize, max: usize },
}

/// Parse failure with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolarError {
    #[error("f is identically zero")]
    ZeroPolynomial,
    #[error("f(0) != 0")]
    NonzeroAtOrigin,
    #[error("origin is a smooth point of V(f)")]
    SmoothOrigin,
    #[error("need at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("polar index {k} out of range 0..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("frame dimension {found} does not match {expected} variables")]
    FrameDimension { expected: usize, found: usize },
    #[error("no sampled frame was generic for k = {k}")]
    NoValidFrame { k: usize },
    #[error("gamma^n = {computed} but mult - 1 = {expected}")]
    GammaIdentityViolation { computed: u64, expected: u64 },
    #[error("frame is not generic for k = {k}: {defect}")]
    NotGeneric { k: usize, defect: FrameDefect },
    #[error("trials must be at least 1")]
    NoTrials,
}

/// Reasons a frame fails to be generic for a given polar index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FrameDefect {
    #[error("polar ideal has local dimension {found}, expected {expected}")]
    WrongPolarDimension { expected: usize, found: i64 },
    #[error("intersection with the coordinate plane is not proper")]
    ImproperIntersection,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinkError {
    #[error("telescoping identity violated at p = {p}")]
    TelescopeViolation { p: usize },
    #[error("Betti vector must have length {expected}, got {found}")]
    MalformedBetti { expected: usize, found: usize },
    #[error("the exact sequence report needs n = 1, got n = {0}")]
    NotCurve(usize),
    #[error("p = {p} out of range 0..={n}")]
    DegreeOutOfRange { p: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error("frame is degenerate: a colength in the identity is infinite")]
    DegenerateFrame,
    #[error(transparent)]
    Polar(#[from] PolarError),
}
