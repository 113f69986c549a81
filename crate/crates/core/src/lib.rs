//! Two explicit realizations of the irreducible highest-weight crystals
//! B(λ) of type G₂, and the machinery to compare them.
//!
//! * [`monomial`]: Nakajima monomials with Kashiwara's crystal structure.
//! * [`tableau`]: the crystal T(∞) of marginally large tableaux.
//! * [`highest_weight`]: the monomial set N(λ), the tableau set T(∞)_λ and
//!   the bijection ω_λ between them.
//! * [`graph`]: crystal graphs, isomorphism and closure checks.
//! * [`verify`]: the cross-checks run by `g2crystal verify`.

pub mod cartan;
pub mod cli;
pub mod error;
pub mod graph;
pub mod highest_weight;
pub mod monomial;
pub mod tableau;
pub mod verify;

pub use cartan::{simple_root, weyl_dim, DominantWeight, Index, Weight};
pub use error::{Error, Result};
pub use highest_weight::{omega, omega_inv, TensorElement, UCoords};
pub use monomial::Monomial;
pub use tableau::{BoxCounts, Letter, MlTableau};
