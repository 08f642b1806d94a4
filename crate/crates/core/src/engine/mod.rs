//! Łojasiewicz exponents of monomial ideals, ideal tuples and gradients of
//! semi-weighted homogeneous germs.

mod gradient;
mod matching;
mod order;
mod set;
#[cfg(test)]
mod tests;
mod transform;

use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::extended::Extended;
use crate::poly::Weights;

pub use gradient::{
    gradient_ideals, is_isolated_singularity, kop_reference_formula, loj_gradient, GradientOptions,
};
pub use matching::{bound_chain, check_w_matching, BoundChain, MatchingWitness};
pub use order::{
    asymptotic_order, loj_monomial_ideal, loj_relative_ideal, OrderArgument, OrderMode,
};
pub use set::{default_schedule, loj_set, LojSetOptions};
pub use transform::{matching_coordinate_change, CoordinateChange, TransformResult};

/// One sample `(s, r_s, r_s/s)` of the search over powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub s: u32,
    pub r: u64,
    pub ratio: BigRational,
}

/// Why a reported exponent is what it is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// A w-matching forces the bound `max rᵢ / min wⱼ`.
    ExactByMatching {
        weights: Weights,
        degrees: Vec<u64>,
        witness: MatchingWitness,
    },
    /// The value equals a lower bound read off axis intersections.
    ExactByAxis { bound: BigRational },
    /// Three-variable weighted homogeneous formula `(d − min w)/min w`.
    ExactByKOP { weights: Weights, degree: u64 },
    /// Every weight divides the degree; the witness belongs to the
    /// gradient ideals after the convenient-making coordinate change.
    ExactByDivisibility {
        weights: Weights,
        degree: u64,
        witness: MatchingWitness,
    },
    /// Smallest `r_s/s` found; always an upper bound.
    BestFoundUpperBound,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::ExactByMatching { .. } => "ExactByMatching",
            Certificate::ExactByAxis { .. } => "ExactByAxis",
            Certificate::ExactByKOP { .. } => "ExactByKOP",
            Certificate::ExactByDivisibility { .. } => "ExactByDivisibility",
            Certificate::BestFoundUpperBound => "BestFoundUpperBound",
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Certificate::BestFoundUpperBound)
    }

    pub fn witness(&self) -> Option<&MatchingWitness> {
        match self {
            Certificate::ExactByMatching { witness, .. }
            | Certificate::ExactByDivisibility { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::ExactByMatching {
                weights,
                degrees,
                witness,
            } => write!(
                f,
                "ExactByMatching (w = {weights}, degrees = {degrees:?}, {witness})"
            ),
            Certificate::ExactByAxis { bound } => write!(f, "ExactByAxis (lower bound {bound})"),
            Certificate::ExactByKOP { weights, degree } => {
                write!(f, "ExactByKOP (w = {weights}, d = {degree})")
            }
            Certificate::ExactByDivisibility {
                weights,
                degree,
                witness,
            } => write!(
                f,
                "ExactByDivisibility (w = {weights}, d = {degree}, transformed {witness})"
            ),
            Certificate::BestFoundUpperBound => f.write_str("BestFoundUpperBound"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentResult {
    pub value: Extended<BigRational>,
    pub certificate: Certificate,
    pub search_trace: Vec<TraceEntry>,
    /// `s₀ = ⌊value⌋ + 1`, set for exact gradient exponents.
    pub determinacy: Option<u64>,
}

impl ExponentResult {
    pub(crate) fn exact(value: BigRational, certificate: Certificate) -> Self {
        ExponentResult {
            value: Extended::Finite(value),
            certificate,
            search_trace: Vec::new(),
            determinacy: None,
        }
    }

    /// Smallest ratio in the trace.
    pub fn trace_minimum(&self) -> Option<&BigRational> {
        self.search_trace.iter().map(|e| &e.ratio).min()
    }

    pub(crate) fn with_determinacy(mut self) -> Self {
        if self.certificate.is_exact() {
            if let Extended::Finite(v) = &self.value {
                self.determinacy = v.floor().to_integer().to_u64().map(|f| f + 1);
            }
        }
        self
    }
}
