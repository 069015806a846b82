//! Exact Schubert calculus for the vanishing topology of generic determinantal
//! varieties.
//!
//! The crate computes, with arbitrary-precision integers throughout:
//!
//! - the integral cohomology ring of a Grassmannian in the Schubert basis
//!   ([`grass`]), together with an independent quotient-ring oracle built from
//!   the polynomial presentation in the Chern classes of the tautological
//!   subbundle ([`grass::oracle`]);
//! - Chern and Segre classes of the tensor products `S1 ⊗ S2` and `Q1 ⊗ Q2` of
//!   tautological bundles on a product of two Grassmannians ([`tensor`]);
//! - polar multiplicities `e_{m,n}^{r,k}` of the generic determinantal
//!   varieties, their duality and local Euler obstructions ([`polar`]);
//! - Euler characteristics and Betti numbers of complex links of higher
//!   codimension, orbit Poincaré polynomials and smoothing bounds ([`links`]);
//! - table rendering and a persistent profile cache used by the `detlinks`
//!   binary ([`tabulate`], [`cache`], [`cli`]).

pub mod cache;
pub mod cli;
pub mod error;
pub mod grass;
pub mod links;
pub mod partitions;
pub mod polar;
pub mod tabulate;
pub mod tensor;

pub use error::{Error, Result};
pub use grass::{GrassClass, GrassSpec};
pub use links::{DetSpec, LinkProfile};
pub use partitions::{IntPolynomial, Partition};
pub use polar::PolarProfile;
pub use tensor::{Bundle, CharSeries, ProdClass, ProdSpec};
