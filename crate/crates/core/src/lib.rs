//! Exact arithmetic for cell layers of level-zero modified quantum affine algebras.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`laurent`]: sparse Laurent polynomials over ℚ in blocks of variables
//!   `z[i][mu]` and a half-integer graded parameter `q`;
//! * [`symfunc`]: Schur characters of `GL_m` (negative parts allowed), Schur
//!   expansions and Littlewood–Richardson products, i.e. the representation
//!   ring `R(G)` of `G = ∏ GL(m_i)`;
//! * [`pairing`]: the constant-term inner product with the Macdonald kernel;
//! * [`cellalg`]: cell data, the generalized matrix algebra of a layer, the
//!   `#` anti-involution and an axiom verifier;
//! * [`simples`]: specialization of the Gram form at maximal ideals of
//!   `R(G)` and the Drinfeld polynomial dictionary.
#![no_std]

extern crate alloc;

pub mod cellalg;
pub mod error;
pub mod laurent;
pub mod pairing;
pub mod sample;
pub mod simples;
pub mod symfunc;

pub use cellalg::{verify_cell_axioms, verify_cell_axioms_bounded, CellDatum, CellElement, Label, LayerChain, ModuleVector, WeightData};
pub use error::{Error, Result};
pub use laurent::{BlockId, BlockShape, LaurentPoly, Monomial, Var};
pub use pairing::PairingContext;
pub use simples::{DrinfeldPoint, DrinfeldPolynomial};
pub use symfunc::{GLWeight, SchurExpansion};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
