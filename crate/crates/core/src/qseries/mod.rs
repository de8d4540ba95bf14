//! q-shifted factorials, truncated basic hypergeometric series, the summand
//! catalog and the m-fold sum evaluators.

pub mod backend;
pub mod expr;
pub mod multisum;
pub mod pochhammer;
pub mod summands;
pub mod term;

pub use crate::algebra::q_integer;
pub use backend::{Backend, Exact};
pub use expr::Expr;
pub use multisum::{multi_sum, multi_sum_oracle, nested_sum, TermTable};
pub use pochhammer::{phi_series, phi_terms, poch, poch_ratio, q_pochhammer, Base};
pub use summands::{family_term, Family, Params, SummandInstance};
pub use term::{Atom, QMonomial, Term};
