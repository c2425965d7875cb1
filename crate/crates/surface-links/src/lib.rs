//! Link diagrams on closed orientable surfaces and virtual link diagrams.
//!
//! The crate models a diagram as a dart-based combinatorial map ([`CombMap`]):
//! the rotation system determines the surface, its faces, genus and
//! checkerboard structure. On top of that sit Gauss codes and the
//! virtual/abstract/cellular correspondence ([`gauss`], [`correspond`]),
//! the generalized Gordon-Litherland pairing with exact integer Goeritz
//! forms, signatures and slopes ([`gl`]), diagram rewriting by Reidemeister
//! moves and flypes with orbit search ([`moves`]), structural classification
//! ([`structure`]), a small-diagram census ([`census`]) and a CLI ([`cli`]).

pub mod census;
pub mod cli;
pub mod correspond;
pub mod curves;
pub mod diagram;
pub mod gauss;
pub mod gl;
pub mod iso;
pub mod json;
pub mod linalg;
pub mod moves;
pub mod report;
pub mod structure;

mod error;

pub use correspond::{devirtualize, find_lasso, gauss_of, surface_to_virtual, Lasso, VirtualDiagram};
pub use diagram::{CombMap, Dart, DartId, FaceStructure};
pub use error::Error;
pub use gauss::GaussCode;
pub use gl::{Color, Definiteness, GoeritzForm, Spine, SpineCurve, SpineEdge};
pub use iso::{DiagramIso, IsoFlags};
pub use moves::{FlypeEquiv, FlypeOrbit, FlypeSite, MoveKind, MoveRecord, RSite};
pub use report::{analyze, analyze_gauss, AnalysisReport};
pub use structure::{classify, classify_virtual, StructureReport};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
