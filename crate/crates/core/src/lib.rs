//! Chord diagrams, C-diagrams and T-diagrams of optimal flows on closed surfaces.
//!
//! A diagram is a circle with marked sites (chord ends, a marked arc, or the ends
//! of a T-graph). The crate parses and emits diagram codes, classifies the
//! surface a diagram encodes, enumerates every diagram for a given surface and
//! builds reverse diagrams.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod code;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod reversal;
pub mod surface;

pub use code::{canonical_code, emit_code, parse_code, CodeKind, CodeToken, DiagramCode};
pub use diagram::{
    is_isomorphic, CDiagram, ChordColor, ChordDiagram, CyclicArrangement, Diagram, Direction, EdgeColors, Polarity,
    Site, SurfaceClass, TDiagram,
};
pub use enumerate::{enumerate, Catalog, CatalogEntry, EnumerationQuery};
pub use error::Error;
pub use reversal::{pair_catalog, reverse_c, reverse_code, reverse_t};
pub use surface::{chord_cycles, is_optimal_shape, to_ribbon, RibbonComplex};
