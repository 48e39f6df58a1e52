//! Exact computations in the mapping class group of the marked sphere, aimed
//! at the Hilden group and the liftable Hilden group of the balanced
//! superelliptic cover.
//!
//! * [`free_group`]: reduced words, automorphisms, and equality up to inner automorphisms.
//! * [`braid`]: braid words, the named generators, and evaluation into mapping classes.
//! * [`perm`]: permutations of the marked points.
//! * [`lift`]: parity classes and liftability.
//! * [`hilden`]: generating sets, the three-generator rewriter, and the identity harness.
//! * [`abelian`]: Smith normal form and abelian invariants of presentations.

pub mod abelian;
pub mod braid;
pub mod free_group;
pub mod hilden;
pub mod lift;
pub mod perm;

pub use braid::{gamma, BraidWord, NamedElement, CONVENTION};
pub use free_group::{FreeAut, FreeWord};
pub use perm::Perm;
