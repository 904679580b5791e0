//! Finite rings given by Cayley tables, their ideal lattices, and
//! nil-essential ideals.

pub mod corpus;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod limits;
pub mod localization;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod predicates;
pub mod registry;
pub mod ring;
mod span;

pub use corpus::{CorpusFile, RingSpec};
pub use error::{Error, Result};
pub use hom::{ModuleHom, RingHom};
pub use ideal::{enumerate_ideals, Ideal, IdealLattice, Sidedness};
pub use limits::Limits;
pub use registry::{CheckId, CheckReport, RingContext};
pub use ring::{Elem, FiniteRing};
