//! Exact arithmetic in the exterior algebra `R_n = ℚ[θ_1, ..., θ_n]`:
//! quasisymmetric invariants, the coinvariant quotient with its ballot basis,
//! harmonics indexed by non-crossing pairings, and the `G_α` ideal basis.

pub mod ballot;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod harmonics;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod quasisym;
pub mod sym_coinv;

pub type Rational = num_rational::BigRational;

pub use ballot::{BinarySeq, NonCrossingPairing, SeqFilter};
pub use error::{Error, Result};
pub use ideal::{GFamily, NormalFormResult};
pub use monomial::{Monomial, Sign, MAX_VARS};
pub use parse::parse_poly;
pub use polynomial::ExtPolynomial;
