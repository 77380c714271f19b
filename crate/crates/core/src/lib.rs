//! Filtering large list assignments of plane graphs down to small lists whose
//! every coloring is facially non-repetitive.
//!
//! The crate is organized around one substrate type, [`plane_graph::PlaneGraph`]
//! (a rotation system plus a designated external face), and a chain of
//! independently testable list filters:
//!
//! * [`bipolar`] — (s,t)-bipolar orientations of 2-connected plane graphs,
//! * [`special`] — the regular/special tagging of vertex occurrences on faces,
//! * [`thomassen`] — proper (5m:m) list filtering,
//! * [`square`] — facially-square-proper (125m:m) filtering,
//! * [`path`] — non-repetitive (32m³+1:m) filtering of paths (Las Vegas),
//! * [`walk`] — non-repetitive filtering of facial walks,
//! * [`face`] — per-face filtering that is safe for any special-vertex colors,
//! * [`face_coloring`] — coloring the auxiliary face-conflict graph,
//! * [`pipeline`] — the end-to-end composition,
//! * [`verifier`] — independent certification of colorings and list assignments.
//!
//! [`schedule`] evaluates the exact big-integer size ladder f1..f8 that backs
//! the guaranteed mode; empirical budgets are certified a posteriori by the
//! verifier instead.

pub mod bipolar;
pub mod blocks;
pub mod error;
pub mod gen;
pub mod list;
pub mod par;
pub mod plane_graph;
pub mod schedule;
pub mod special;

pub use error::{Error, Result};
pub use list::{Color, ListAssignment};
pub use plane_graph::{FaceId, FaceWalk, PlaneGraph, Vertex};
