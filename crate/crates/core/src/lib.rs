//! Exact torus-character computations on the moduli space of stable sheaves
//! on the projective plane with Hilbert polynomial `4m + 1`.
//!
//! The library enumerates the full torus-fixed locus (180 isolated points and
//! 6 fixed projective lines), computes the weight decomposition of the
//! 17-dimensional tangent space at every fixed locus by two independent
//! routes (equivariance tableaux and closed-form tables), and assembles the
//! Poincaré polynomial, Betti numbers, Hodge numbers and Euler characteristic
//! via the Białynicki-Birula decomposition. A separate Čech character-series
//! engine ([`series`]) provides a local-to-global cross-check oracle for
//! `χ(F,F)`.

pub mod charlattice;
pub mod cli;
pub mod fixedpoints;
pub mod homology;
pub mod series;
pub mod tangent;

pub use charlattice::{OneParamSubgroup, Weight, WeightMultiset};
pub use fixedpoints::{FixedLine, FixedPoint, Inventory, MonomialMatrix, Stratum};
pub use homology::PoincarePolynomial;
pub use tangent::{Equivariance, Locus, TangentRep};
