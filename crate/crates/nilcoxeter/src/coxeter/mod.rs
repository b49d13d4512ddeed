//! Finite Coxeter groups: diagrams, multiplication tables, reduced words.

mod diagram;
mod group;
mod realize;

pub use diagram::{CoxeterDiagram, CoxeterType};
pub use group::{CoxeterElement, CoxeterGroup, DEFAULT_ELEMENT_CAP};
pub use realize::{inversions, type_b_length, type_d_length};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("invalid diagram: {0}")]
    BadDiagram(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported diagram: {0}")]
    Unsupported(String),
    #[error("generator {index} out of range 1..={rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("not a permutation: {0}")]
    BadPermutation(String),
    #[error("the diagram defines an infinite group")]
    Infinite,
    #[error("group has more than {0} elements or is infinite")]
    TooLarge(usize),
}
