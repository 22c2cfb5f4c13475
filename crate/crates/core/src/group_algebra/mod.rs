//! Finite groups, integral group rings and rank-one characters.

mod cayley;
mod character;
mod ring;
mod table;

pub use cayley::{parse_cayley_table, CayleyParseError};
pub use character::{augment, Character};
pub use ring::{lam, GroupRingElement};
pub use table::{build_cyclic, build_d8, GroupTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("a group needs at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    RaggedRow { row: usize, len: usize, order: usize },
    #[error("entry {entry} in row {row} is out of range for order {order}")]
    EntryOutOfRange { row: usize, entry: usize, order: usize },
    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("named generators do not reach element {0}")]
    NotGenerated(usize),
    #[error("invalid generator name `{0}`")]
    BadGeneratorName(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("unknown group element `{0}`")]
    UnknownElement(String),
    #[error("malformed group ring expression: {0}")]
    BadRingExpression(String),
    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),
}
