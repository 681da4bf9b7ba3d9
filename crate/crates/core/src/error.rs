use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input rejected before any computation (shape or mode mismatch).
    #[error("rejected input: {0}")]
    BadInput(String),

    /// A value violated the dataset schema (unknown level, missing column, bad target).
    #[error("schema violation: {0}")]
    Schema(String),

    #[error("empty dataset after loading")]
    EmptyDataset,

    /// Training or search produced a non-finite value.
    #[error("optimization diverged at {context}")]
    Diverged { context: String },

    #[error("no prototype available: class {0} has no members")]
    NoPrototype(usize),

    #[error("latent scatter export requires latent_dim = 2, model has {0}")]
    UnsupportedLatentDim(usize),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Harness stage wrapper so the CLI can report which stage failed.
    #[error("[{stage}] {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn at_stage(self, stage: &'static str) -> Error {
        Error::Stage { stage, source: Box::new(self) }
    }

    /// Outermost stage tag, if any.
    pub fn stage(&self) -> Option<&'static str> {
        match self {
            Error::Stage { stage, .. } => Some(stage),
            _ => None,
        }
    }
}
