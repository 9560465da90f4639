use thiserror::Error;

/// Which rack axiom a table violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// Right translations `x ↦ x ◁ y` are bijections.
    R1,
    /// Self-distributivity.
    R2,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axiom::R1 => f.write_str("R1"),
            Axiom::R2 => f.write_str("R2"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("AxiomViolation({axiom}): witness ({}, {}, {})", witness.0, witness.1, witness.2)]
    AxiomViolation {
        axiom: Axiom,
        witness: (usize, usize, usize),
    },

    #[error("not a homomorphism: f({x} ◁ {a}) ≠ f({x}) ◁ f({a})")]
    NotHomomorphism { x: usize, a: usize },

    #[error("subset not closed: {0} escapes")]
    NotClosed(usize),

    #[error("not a group ({axiom}): {detail}")]
    NotAGroup { axiom: &'static str, detail: String },

    #[error("index {index} out of range for size {size}")]
    Index { index: usize, size: usize },

    #[error("congruences live on different carriers")]
    CarrierMismatch,

    #[error("cannot factor: {0} and {1} are identified but their images differ")]
    NotFactorable(usize, usize),

    #[error("not surjective: {missing} is not hit")]
    NotSurjective { missing: usize },

    #[error("not a double extension: {0}")]
    NotDoubleExtension(String),

    #[error("codomains differ")]
    CodomainMismatch,

    #[error("domains differ")]
    DomainMismatch,

    #[error("square does not commute: {0}")]
    NonCommuting(String),

    #[error("not a 3-fold extension: {0}")]
    NotThreeFold(String),

    #[error("not a membrane: {0}")]
    NotAMembrane(String),

    #[error("not a volume: {0}")]
    NotAVolume(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
