//! Enumeration and verification of irreducible edge-to-edge decompositions
//! of the regular `2k`-gon into centrally symmetric convex tiles.
//!
//! Tiles are zonogons over the `k` side directions. A decomposition is
//! generated by sweeping a front of wires (one per edge class) from the
//! lower to the upper boundary chain of the polygon, one tile per move.
//! Angles are integers in units of `π/k` throughout.

pub mod bounds;
pub mod canon;
pub mod classify;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod irreducible;
mod par;
pub mod sweep;
pub mod validate;

pub use canon::{canonical_code, dedupe, side_profile, CanonicalCode, SideProfile};
pub use complex::{
    boundary_paths, boundary_signature, slope_rank, zonogon_angles, DirectionIndex, Front, Multiplicities,
    SlopeRank, TilingComplex, Wire,
};
pub use enumerate::{
    collect_tilings, enumerate_irreducible_classes, enumerate_tilings, ClassSet, SearchConfig, SearchStats,
};
pub use error::{Error, Result};
pub use irreducible::{brute_force_irreducible, convex_closure, is_irreducible, union_is_convex, ConvexClosureResult};
pub use sweep::{admissible_moves, Move, Sweep};
