//! Finite-model checks for presentations of Grothendieck-style topologies.
//!
//! Everything here works on explicit finite carriers with operation tables,
//! so every structural claim can be confirmed by exhaustive enumeration:
//!
//! * [`lattice`] and [`congruence`]: finite bounded distributive lattices,
//!   free lattices on up to four generators, congruence closure and quotients.
//! * [`simplicial`]: the two-piece simplicial equalizer and its amalgam formula.
//! * [`ring`], [`module`], [`tensor`]: finite commutative rings and modules,
//!   localization by stable idempotents, hom enumeration, flatness.
//! * [`descent`]: the Čech descent complex of a unimodular cover, `H⁰`/`H¹`,
//!   ring gluing.
//! * [`site`]: cardinality presentations, covers of finite sets, set-level
//!   sheaf equalizers, projectivity and local choice.
//! * [`join`] and [`homology`]: simplicial joins and reduced integer homology.

pub mod abelian;
pub mod congruence;
pub mod descent;
pub mod homology;
pub mod join;
pub mod lattice;
pub mod module;
pub mod ring;
pub mod simplicial;
pub mod site;
pub mod tensor;

pub use congruence::{Congruence, Quotient};
pub use lattice::{free_bounded_distributive_lattice, Lattice, LatticeElement, RawLattice};
pub use module::FiniteModule;
pub use ring::{FiniteRing, Ideal, RingHom};
pub use site::{FiniteMap, Presentation};
pub use join::SimplicialComplex;
pub use homology::HomologyProfile;

/// Crate-wide error, wrapping each module's error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Lattice(#[from] lattice::LatticeError),
    #[error(transparent)]
    Congruence(#[from] congruence::CongruenceError),
    #[error(transparent)]
    Simplicial(#[from] simplicial::SimplicialError),
    #[error(transparent)]
    Ring(#[from] ring::RingError),
    #[error(transparent)]
    Descent(#[from] descent::DescentError),
    #[error(transparent)]
    Site(#[from] site::SiteError),
    #[error(transparent)]
    Join(#[from] join::JoinError),
    #[error(transparent)]
    Homology(#[from] homology::HomologyError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
