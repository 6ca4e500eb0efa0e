//! Analysis of reduced alternating link diagrams: twist statistics,
//! checkerboard graphs, exact Jones and n=3 colored Jones polynomials, and
//! the resulting hyperbolic-volume upper bounds.
//!
//! The pipeline runs `validate -> twists -> augment/Δ -> checkerboard ->
//! polynomials -> bounds`; see the `knotvol` CLI crate for the command-line
//! front end and report formats.

pub mod bounds;
pub mod checkerboard;
pub mod diagram;
pub mod error;
pub mod generate;
pub mod jones;
pub mod knotbase;
pub mod poly;
pub mod twist;

pub use bounds::{bounds_report, v3, Bound, BoundsReport, V3_REFERENCE};
pub use diagram::{validate, Face, Faces, LinkDiagram, ValidationReport};
pub use jones::{colored_jones3, head_tail, jones2, kauffman_bracket, HeadTail};
pub use poly::{BracketPoly, JonesPoly, LaurentPoly};
pub use twist::{augment, count_delta, detect_twists, twist_profile, TwistProfile, TwistRegion};
