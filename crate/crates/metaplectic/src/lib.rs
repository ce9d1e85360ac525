//! Exact operator algebra and a numerical spectral toolkit for the branching
//! of the metaplectic (oscillator) representation of Sp(2,R) restricted to a
//! principal SL(2,R) subgroup.
//!
//! The restriction acts on the Fock space of entire functions in two complex
//! variables. Everything that can be exact is exact: scalars live in the ring
//! Q[sqrt(d) : d squarefree], polynomials and normal-ordered differential
//! operators carry those scalars, Casimir tridiagonalizations and highest
//! weight vectors are solved symbolically. Floating point enters only where
//! the continuous spectrum does: measure densities, quadrature and truncated
//! Jacobi spectra.
//!
//! Module map:
//!
//! * [`radical`]  - the scalar ring: finite sums of rational multiples of
//!   square roots of squarefree integers, with canonical form and exact
//!   arithmetic.
//! * [`fock`]     - sparse polynomials on Fock space, the monomial inner
//!   product `<z^a, z^b> = delta_ab a!`, closed-form norms.
//! * [`weyl`]     - normal-ordered polynomial coefficient differential
//!   operators, composition, commutators, formal adjoints.
//! * [`sl2`]      - the principal sl(2) triple inside sp(n,R), the derived
//!   metaplectic action on polynomials, and the Casimir operator.
//! * [`branching`] - weight-space bases, Casimir tridiagonalization, the
//!   match with continuous dual Hahn data, highest weight vectors, the
//!   discrete catalog, generalized eigenfunctions.
//! * [`hahn`]     - continuous dual Hahn polynomials, their orthogonality
//!   measure, quadrature checks, Jacobi matrices and Sturm-bisection spectra.
//! * [`suites`]   - named verification suites with machine-readable reports.
//! * [`emit`]     - dataset writers (CSV/JSON) for densities, spectra,
//!   recurrence triples, norm partial sums and eigenfunction values.

pub mod arith;
pub mod branching;
pub mod emit;
pub mod fock;
mod gamma;
pub mod hahn;
pub mod radical;
pub mod sl2;
pub mod suites;
pub mod tridiag;
pub mod weyl;

mod error;

pub use error::{Error, Result};
pub use fock::FockPolynomial;
pub use hahn::HahnParams;
pub use weyl::WeylOperator;
pub use radical::RadicalScalar;
pub use sl2::{PrincipalTriple, SpElement};
pub use tridiag::TridiagonalOperator;
