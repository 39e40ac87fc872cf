use std::fmt;

use thiserror::Error;

/// Which partial-order axiom a [`Violation::NotPartialOrder`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderAxiom {
    Reflexive,
    Antisymmetric,
    Transitive,
}

/// The side on which a compatibility check failed: `Left` means `x·a ≤ x·b`
/// was violated, `Right` means `a·x ≤ b·x` was.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A single axiom violation with its witness elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Violation {
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
    },
    NotPartialOrder {
        axiom: OrderAxiom,
        i: usize,
        j: usize,
        k: Option<usize>,
    },
    NotCompatible {
        a: usize,
        b: usize,
        x: usize,
        side: Side,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NotAssociative { i, j, k } => {
                write!(f, "NotAssociative({i},{j},{k}): ({i}·{j})·{k} != {i}·({j}·{k})")
            }
            Violation::NotPartialOrder { axiom, i, j, k } => match (axiom, k) {
                (OrderAxiom::Reflexive, _) => write!(f, "NotPartialOrder(reflexive,{i},{j}): {i} ≰ {i}"),
                (OrderAxiom::Antisymmetric, _) => {
                    write!(f, "NotPartialOrder(antisymmetric,{i},{j}): {i} ≤ {j} and {j} ≤ {i}")
                }
                (OrderAxiom::Transitive, Some(k)) => write!(
                    f,
                    "NotPartialOrder(transitive,{i},{j},{k}): {i} ≤ {j} ≤ {k} but {i} ≰ {k}"
                ),
                (OrderAxiom::Transitive, None) => write!(f, "NotPartialOrder(transitive,{i},{j})"),
            },
            Violation::NotCompatible { a, b, x, side } => match side {
                Side::Left => write!(f, "NotCompatible({a},{b},{x},left): {a} ≤ {b} but {x}·{a} ≰ {x}·{b}"),
                Side::Right => write!(f, "NotCompatible({a},{b},{x},right): {a} ≤ {b} but {a}·{x} ≰ {b}·{x}"),
            },
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("{} axiom violation(s), first: {}", .0.len(), .0[0])]
    Invalid(Vec<Violation>),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("subset is not closed under multiplication: {0}·{1} leaves it")]
    NotClosed(usize, usize),
    #[error("element {0} has no regular power; the structure is not pi-regular")]
    NotPiRegular(usize),
    #[error("order {order} exceeds the limit of {limit} for {what}")]
    OrderTooLarge {
        order: usize,
        limit: usize,
        what: &'static str,
    },
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("precondition of {id} unmet: {detail}")]
    PreconditionUnmet { id: String, detail: String },
    #[error(transparent)]
    Parse(#[from] crate::expr::ParseError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
