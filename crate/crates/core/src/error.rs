use thiserror::Error;

/// Errors raised by group construction, dessin validation and the operations
/// built on top of them.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pair does not generate the group: generated subgroup has order {generated}, group has order {order}")]
    NotGenerating { generated: usize, order: usize },

    #[error("group of order {order} exceeds the bound {bound}")]
    TooLarge { order: usize, bound: usize },

    #[error("group is not nilpotent")]
    NotNilpotent,

    #[error("dessin is not symmetric")]
    NotSymmetric,

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("malformed group table: {0}")]
    BadTable(String),

    #[error("cannot parse group spec `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A structural identity that must hold by construction failed.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
