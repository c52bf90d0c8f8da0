//! Minimal self-intersection representatives of free homotopy classes on
//! orientable surfaces with boundary.
//!
//! A surface is given by a surface word (`abAB` is the punctured torus) and
//! a curve by a cyclically reduced word over its generators. The curve is
//! drawn as chords of the fundamental polygon and encoded combinatorially
//! as a point list and a segment list; bigons are traced and removed on
//! that encoding alone until none of the removable kind remain.
//!
//! ```
//! use curvemin::{minimize, parse_cyclic_word, parse_surface_word};
//!
//! let surface = parse_surface_word("abAB").unwrap();
//! let word = parse_cyclic_word("bbAAA", &surface).unwrap();
//! let report = minimize(&surface, &word).unwrap();
//! assert_eq!(report.final_count, 2);
//! ```

pub mod bigon;
pub mod cli;
pub mod error;
pub mod minimizer;
pub mod report;
pub mod representative;
pub mod svg;
pub mod words;

pub use bigon::{
    apply_removal, classify, normalize, shared_segments, trace, BigonClass, CombinatorialBigon,
    Sign, TraceDirection,
};
pub use error::{Error, Result};
pub use minimizer::{
    minimize, minimize_from, minimize_observed, oracle_min, Encounter, MinimizationReport,
    RemovalStep, DEFAULT_ORACLE_CAP,
};
pub use representative::{
    build_initial, intersecting_pairs, intersection_count, EdgePoint, PointList, SegmentList,
    WordSegment,
};
pub use words::{
    cyclic_reduce, parse_cyclic_word, parse_surface_word, surface_invariants, CyclicWord,
    SurfaceInvariants, SurfaceWord, Symbol,
};
