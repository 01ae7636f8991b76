use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("{d} does not divide {n}")]
    NotADivisor { d: u64, n: u64 },

    #[error("{d} is not a proper nontrivial divisor of {n}")]
    NotProperDivisor { d: u64, n: u64 },

    #[error("vertex index {index} out of range for hypergraph with {count} vertices")]
    UnknownVertex { index: usize, count: usize },

    #[error("dihedral group D_{0} is undefined, need n >= 3")]
    DihedralTooSmall(u64),

    #[error("group of order {order} exceeds the enumeration limit of {limit}")]
    GroupTooLarge { order: usize, limit: usize },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("constructive coloring is improper on hyperedge {edge:?}")]
    ImproperColoring { edge: Vec<u64> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
