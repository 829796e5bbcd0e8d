//! Exact geometry of numbers for discrete lattice-periodic point sets in the
//! plane.
//!
//! A discrete lattice-periodic set is a finite union `v_1 + Λ ∪ … ∪ v_k + Λ`
//! of translates of one planar lattice. Every coordinate lives in the field
//! `Q(√2, √3)`, which holds all eleven Archimedean tilings with unit edges,
//! so every predicate in this crate is decided exactly.
//!
//! ```
//! use lattice_periodic::tilings::{catalog, TilingId};
//!
//! let rec = catalog(TilingId::TruncatedHexagonal);
//! assert_eq!(rec.k, 6);
//! assert_eq!(rec.coefficient.to_string(), "-48 + 28*r3");
//! ```

pub mod arrangement;
pub mod error;
pub mod lattice;
pub mod periodic;
pub mod point;
pub mod qfield;
pub mod regions;
pub mod render;
pub mod report;
pub mod theorems;
pub mod tilings;

pub use error::Error;
pub use lattice::{Lattice2, LatticeCoords};
pub use periodic::PeriodicSet;
pub use point::Point;
pub use qfield::{QuadNum, Rat};
pub use regions::{Boundary, ConvexPolygon, PolygonJson};
pub use report::Status;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numbers.md")]
    mod numbers {}
    #[doc = include_str!("../../../book/src/periodic.md")]
    mod periodic {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/searches.md")]
    mod searches {}
    #[doc = include_str!("../../../book/src/theorems.md")]
    mod theorems {}
    #[doc = include_str!("../../../book/src/tilings.md")]
    mod tilings {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
