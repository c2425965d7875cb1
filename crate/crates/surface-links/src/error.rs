use thiserror::Error;

/// Errors raised by diagram construction, parsing and analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// The dart matching or another structural invariant is broken.
    #[error("structural error: {0}")]
    Structural(String),
    /// The face adjacency graph is not bipartite.
    #[error("diagram is not checkerboard colorable")]
    NotColorable,
    /// An operation needing component orientations was called without them.
    #[error("diagram carries no orientation")]
    MissingOrientation,
    /// Gauss code or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// A move or splice site does not match the required local pattern.
    #[error("invalid site: {0}")]
    InvalidSite(String),
    /// Curve diagrams overlap without over/under data.
    #[error("curves intersect without over/under data: {0}")]
    AmbiguousCrossing(String),
}
