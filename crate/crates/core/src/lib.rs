//! Writhe splitting for oriented link diagrams.
//!
//! The writhe `w` of an oriented link diagram is the sum of its crossing
//! signs. For a reduced alternating diagram that sum splits into two isotopy
//! invariants: the *nullification writhe* `w_x` (signs of the crossings
//! smoothed away while keeping the diagram connected) and the *remaining
//! writhe* `w_y` (signs of the crossings left over, which correspond to a
//! spanning forest of the Seifert graph). A non-zero `w_x` or `w_y` certifies
//! chirality even when `w = 0`, and every non-split alternating link with an
//! even number of components is chiral outright.
//!
//! The crate is organised around that pipeline:
//!
//! - [`diagram`]: parse and validate oriented diagram codes (`pd-signed` or
//!   `gauss-signed`), mirroring, components, alternation.
//! - [`seifert`]: Seifert circles, the signed Seifert multigraph, the reduced
//!   and split properties.
//! - [`nullification`]: spanning forests, the writhe split, empirical
//!   well-definedness checks, and the chirality verdict.
//! - [`catalog`]: newline-delimited JSON catalogs of named diagrams paired
//!   with their published nullification writhes.

pub mod catalog;
pub mod diagram;
pub mod error;
pub mod nullification;
pub mod seifert;

pub use diagram::{braid_closure, parse_diagram, ArcId, BraidLetter, CodeFormat, Crossing, Diagram, Sign};
pub use error::Error;
pub use nullification::{
    chirality_verdict, report_with_seed, ChiralReason, InvariantReport, SpanningForest, Verdict,
    WritheSplit,
};
pub use seifert::{SeifertCircle, SeifertGraph};
