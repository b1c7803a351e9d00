use thiserror::Error;

use crate::gensets::MinGenEnumeration;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Shape, range or parse problems in a multiplication table.
    #[error("malformed table{}: {reason}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    MalformedTable { line: Option<usize>, reason: String },

    #[error("no two-sided identity element in table")]
    NoIdentity,

    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },

    #[error("associativity fails: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NotAssociative {
        a: usize,
        b: usize,
        c: usize,
        left: usize,
        right: usize,
    },

    #[error("unknown group recipe: {0}")]
    UnknownRecipe(String),

    #[error("group order {order} exceeds the cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },

    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded {
        what: &'static str,
        limit: u64,
        /// Partial enumeration, flagged incomplete, when the budget ran out mid-search.
        partial: Option<Box<MinGenEnumeration>>,
    },

    #[error("subgroup is not normal: {g} * {n} * {g}^-1 = {conjugate} lies outside it")]
    NotNormal {
        n: usize,
        g: usize,
        conjugate: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("degree not constant on class: vertex {a} has degree {degree_a}, vertex {b} has degree {degree_b}")]
    ClassDegreeMismatch {
        a: usize,
        b: usize,
        degree_a: usize,
        degree_b: usize,
    },
}

impl Error {
    pub fn budget(what: &'static str, limit: u64) -> Self {
        Error::BudgetExceeded {
            what,
            limit,
            partial: None,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
