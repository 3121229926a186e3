//! Exact rational solutions and Darboux integrability of Abel equations
//! `x' = A(t) x^3 + B(t) x^2` with polynomial coefficients.
//!
//! Coefficients live in `Q` or in a quadratic extension `Q(sqrt D)`; all
//! arithmetic is exact. The main entry points are
//! [`invariant::find_invariant_curves`], [`darboux::darboux_exponents`] and
//! [`polysys::build_condinv_system`].

pub mod darboux;
pub mod divisors;
pub mod error;
pub mod factor;
pub mod families;
pub mod invariant;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod polysys;
pub mod quad;
pub mod scalar;

pub use error::{Error, Result};
pub use parse::{format_poly, format_poly_ext, parse_poly, parse_poly_ext, ParseError};
pub use poly::{Degree, Poly};
pub use quad::QuadExt;
pub use scalar::Scalar;

pub type Rational = num_rational::BigRational;
pub type QPoly = Poly<Rational>;
pub type QuadPoly = Poly<QuadExt>;
