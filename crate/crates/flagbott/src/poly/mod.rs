//! Exact sparse multivariate polynomial arithmetic over Z, Q and F_p,
//! graded with all ambient generators in degree 2.
//!
//! Values are immutable after construction and every operation is a pure
//! function, so they can be shared and evaluated in parallel freely.

pub mod display;
pub mod monomial;
pub mod polynomial;
pub mod ring;
pub mod variable;

pub use monomial::Monomial;
pub use polynomial::{elementary_symmetric, poly_add, poly_mul, Polynomial};
pub use ring::{Coeff, CoefficientRing, Prime};
pub use variable::{Family, Variable};
