use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid order for {family}: need at least {min}, got {got}")]
    InvalidOrder {
        family: &'static str,
        min: usize,
        got: usize,
    },

    #[error("vertex {vertex} out of range for a graph on {n_vertices} vertices")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} is not present")]
    MissingEdge(usize, usize),

    #[error("alpha = {alpha} outside the admissible range {range}")]
    InvalidAlpha { alpha: f64, range: &'static str },

    #[error("matrix is not symmetric: entry ({row},{col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("no sign change for {what} on [{lo}, {hi}]")]
    Bracket { what: String, lo: f64, hi: f64 },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("principal-branch evaluation of {what} left imaginary residue {residue:e}")]
    BranchSelection { what: &'static str, residue: f64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn check_alpha_closed(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha {
            alpha,
            range: "[0, 1]",
        })
    }
}

pub(crate) fn check_alpha_half_open(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha {
            alpha,
            range: "[0, 1)",
        })
    }
}
