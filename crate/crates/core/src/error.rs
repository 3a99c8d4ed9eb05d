use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("points {0:?} do not form a line of the Fano plane")]
    NotALine([u8; 3]),

    #[error("a line through {0} and itself is not defined")]
    DegeneratePair(u8),

    #[error("pencil entry {b}{c} does not complete a line through {x}")]
    InconsistentPencil { x: u8, b: u8, c: u8 },

    #[error("point {x} lies on its own ordered line")]
    PointOnLine { x: u8 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),
}
