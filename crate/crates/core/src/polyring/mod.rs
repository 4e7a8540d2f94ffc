//! Exact symbolic arithmetic.
//!
//! [`LaurentPoly`] is the carrier: integer coefficients, half-integer
//! exponents stored doubled. The other types fix a variable set on top of it.

pub mod bip;
pub mod expr;
pub mod kauff;
pub mod laurent;
pub mod text;
pub mod value;

pub use bip::{bip_vars, BipPoly};
pub use expr::eval_expr;
pub use kauff::{q_vars, uq_vars, KauffPoly};
pub use laurent::{Exps, LaurentPoly, Vars};
pub use value::{aq_vars, bracket, PolyValue};
