use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {value} is out of range (maximum {max})")]
    Range {
        what: &'static str,
        value: usize,
        max: usize,
    },
    #[error("exact arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("matrix shapes {lhs:?} and {rhs:?} do not conform")]
    Shape {
        lhs: (usize, usize),
        rhs: (usize, usize),
    },
    #[error("matrix is singular")]
    Singular,
    #[error("vertex {vertex} is not in 1..={k}")]
    VertexOutOfRange { vertex: usize, k: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not realizable: {0}")]
    NotRealizable(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("not in cone: {0}")]
    NotInCone(String),
}

impl Error {
    /// Domain verdicts, as opposed to malformed input or resource limits.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotRealizable(_) | Error::NotChordal | Error::NotInCone(_)
        )
    }
}

pub(crate) fn guard(what: &'static str, value: usize, max: usize) -> Result<()> {
    if value > max {
        Err(Error::Range { what, value, max })
    } else {
        Ok(())
    }
}
