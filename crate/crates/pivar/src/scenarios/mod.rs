//! Catalog of the named identities and varieties under study, the
//! per-case verification suites, implication graphs, and the aggregate
//! verification entry point.

mod cases;
mod catalog;
mod graph;
mod report;
mod verify;

pub use cases::{default_n_max, run_case, variety};
pub use catalog::catalog;
pub use graph::{implication_graph, ImplicationGraph};
pub use report::{Claim, ClaimStatus, Report};
pub use verify::verify_paper;

use crate::freealg::Polynomial;
use crate::tideal::TidealError;
use num_rational::BigRational;
use num_traits::Zero;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("unknown case '{0}' (expected one of 2.1, 2.2, 2.3, 2.4, 3, 4)")]
    UnknownCase(String),
    #[error("unknown catalog name '{0}'")]
    UnknownName(String),
    #[error("parameters ({}, {}) violate the case constraints", .0.0, .0.1)]
    InvalidParameters(Box<(BigRational, BigRational)>),
    #[error(transparent)]
    Tideal(#[from] TidealError),
}

/// The six varieties whose claim suites ship with the tool.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    C21,
    C22,
    C23,
    C24,
    C3,
    C4,
}

impl CaseId {
    pub const ALL: [CaseId; 6] = [
        CaseId::C21,
        CaseId::C22,
        CaseId::C23,
        CaseId::C24,
        CaseId::C3,
        CaseId::C4,
    ];
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            CaseId::C21 => "2.1",
            CaseId::C22 => "2.2",
            CaseId::C23 => "2.3",
            CaseId::C24 => "2.4",
            CaseId::C3 => "3",
            CaseId::C4 => "4",
        };
        write!(f, "{text}")
    }
}

impl FromStr for CaseId {
    type Err = ScenarioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "2.1" => Ok(CaseId::C21),
            "2.2" => Ok(CaseId::C22),
            "2.3" => Ok(CaseId::C23),
            "2.4" => Ok(CaseId::C24),
            "3" => Ok(CaseId::C3),
            "4" => Ok(CaseId::C4),
            other => Err(ScenarioError::UnknownCase(other.into())),
        }
    }
}

/// Generators of one of the studied varieties, with the parameters used
/// to instantiate parameterized families.
#[derive(Debug, Clone)]
pub struct VarietySpec {
    pub name: String,
    pub case: CaseId,
    pub generators: Vec<Polynomial>,
    pub parameters: Option<(BigRational, BigRational)>,
}

impl VarietySpec {
    /// The degenerate products that each case's parameter constraints
    /// exclude, e.g. alpha*beta*(alpha-beta)*(alpha+beta) != 0 in the
    /// general case.
    pub fn check_parameters(
        case: CaseId,
        alpha: &BigRational,
        beta: &BigRational,
    ) -> Result<(), ScenarioError> {
        let bad = match case {
            CaseId::C21 => {
                alpha.is_zero()
                    || beta.is_zero()
                    || (alpha - beta).is_zero()
                    || (alpha + beta).is_zero()
            }
            _ => false,
        };
        if bad {
            Err(ScenarioError::InvalidParameters(Box::new((
                alpha.clone(),
                beta.clone(),
            ))))
        } else {
            Ok(())
        }
    }
}
