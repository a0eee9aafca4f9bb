//! File formats, shipped data, multi-threaded drivers and the command line for
//! [`grascat_core`].
//!
//! * [`formats`]: JSON encodings of tableaux, monomials, quivers, seeds,
//!   quivers with potential, profiles, vector tuples and g-vectors.
//! * [`fixtures`]: the two quivers with potential of the Grassmannian
//!   examples, a truncated Hernandez–Leclerc quiver with potential, the lists
//!   of rank-3 and rank-4 tableaux with their profiles, and the non-real
//!   tableaux with their recorded g-vectors.
//! * [`parallel`]: rayon versions of sampling, exploration and braid checks
//!   that return exactly what the sequential versions return.
//! * [`tables`]: regenerated Hom tables, subset grids and g-vector lists.
//! * [`cli`]: the `grascat` command.

pub mod cli;
pub mod fixtures;
pub mod formats;
pub mod parallel;
pub mod tables;
