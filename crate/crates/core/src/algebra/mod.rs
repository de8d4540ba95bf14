//! Exact coefficient fields, polynomials, rational functions, cyclotomic
//! polynomials and polynomial CRT.

pub mod crt;
pub mod cyclotomic;
pub mod field;
mod intpoly;
pub mod modgcd;
pub mod poly;
pub mod ratfun;

pub use crt::crt_pair;
pub use cyclotomic::{cyclotomic, cyclotomic_in, q_integer};
pub use field::{int, rat, Field, FieldDescriptor, Rational};
pub use poly::Poly;
pub use ratfun::RatFun;

/// Q(t): rational functions over the rationals (used for both Q(a) and Q(q)).
pub type QFrac = RatFun<Rational>;

/// `poly_divrem` as a free function.
pub fn poly_divrem<F: Field>(a: &Poly<F>, b: &Poly<F>) -> crate::Result<(Poly<F>, Poly<F>)> {
    a.divrem(b)
}

/// `poly_gcd_ext` as a free function.
pub fn poly_gcd_ext<F: Field>(a: &Poly<F>, b: &Poly<F>) -> crate::Result<(Poly<F>, Poly<F>, Poly<F>)> {
    Poly::gcd_ext(a, b)
}
