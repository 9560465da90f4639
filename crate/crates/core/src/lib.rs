//! Covering theory of finite racks and quandles.
//!
//! Racks are dense operation tables ([`Rack`]); congruences are canonical
//! partitions ([`Congruence`]). On top of these sit the commutator `[R, S]`,
//! the centralizing congruences of extensions and double extensions, the
//! covering predicates of each dimension with witnesses, a bounded path
//! oracle that cross-checks them, and a bridge to finite groups through the
//! conjugation quandle.

pub mod classify;
pub mod commutator;
pub mod congruence;
pub mod corpus;
pub mod doc;
pub mod error;
pub mod group;
pub mod paths;
pub mod rack;
pub mod random;
pub mod square;

pub use congruence::{Congruence, Quadruple};
pub use error::{Error, Result};
pub use rack::{Morphism, Rack, Sign};
pub use square::{Cube, ExtSquare};
