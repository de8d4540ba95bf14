//! Exact rational sums checked against prime powers, and Morita's p-adic
//! Gamma function.

pub mod gamma;
pub mod numeric;

pub use gamma::{padic_gamma, PadicContext, DEFAULT_WORK_CAP};
pub use numeric::{numeric_cases, run_numeric_case, NumericReport};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{int, Rational};

/// Valuation reported for zero.
pub const INFINITE_VALUATION: i64 = i64::MAX;

fn int_valuation(x: &BigInt, p: &BigInt) -> i64 {
    let mut v = 0;
    let mut x = x.abs();
    loop {
        let (q, r) = x.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        x = q;
        v += 1;
    }
}

/// `nu` with `x = p^nu u`, `u` a p-unit; zero maps to [`INFINITE_VALUATION`].
pub fn valuation(x: &Rational, p: u64) -> i64 {
    if x.is_zero() {
        return INFINITE_VALUATION;
    }
    let pb = BigInt::from(p);
    int_valuation(x.numer(), &pb) - int_valuation(x.denom(), &pb)
}

/// `x (x+1) ... (x+n-1)`.
pub fn pochhammer_rational(x: &Rational, n: u64) -> Rational {
    (0..n).fold(Rational::one(), |acc, i| acc * (x + int(i as i64)))
}

/// `H_m^{(2)} = sum_{i=1}^m 1/i^2`.
pub fn harmonic2(m: u64) -> Rational {
    (1..=m).fold(Rational::zero(), |acc, i| acc + Rational::new(BigInt::one(), BigInt::from(i * i)))
}

/// Trial division; adequate at the sizes used here.
pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `x mod p^k` for a p-integral rational.
pub fn residue(x: &Rational, p: u64, k: u32) -> Option<BigInt> {
    let m = BigInt::from(p).pow(k);
    let den = x.denom().mod_floor(&m);
    let inv = crate::padic::gamma::inverse_mod(&den, &m)?;
    Some((x.numer() * inv).mod_floor(&m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn valuations() {
        assert_eq!(valuation(&int(250), 5), 3);
        assert_eq!(valuation(&rat(3, 5), 5), -1);
        assert_eq!(valuation(&int(7), 5), 0);
        assert_eq!(valuation(&int(0), 5), INFINITE_VALUATION);
    }

    #[test]
    fn pochhammer_and_harmonic() {
        assert_eq!(pochhammer_rational(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer_rational(&rat(5, 7), 0), int(1));
        assert_eq!(pochhammer_rational(&rat(1, 3), 3), rat(28, 27));
        assert_eq!(harmonic2(0), int(0));
        assert_eq!(harmonic2(2), rat(5, 4));
        assert_eq!(harmonic2(3), rat(49, 36));
    }

    #[test]
    fn residues() {
        assert_eq!(residue(&rat(1, 3), 7, 1), Some(BigInt::from(5)));
        assert_eq!(residue(&rat(1, 7), 7, 1), None);
        assert!(is_prime(13) && !is_prime(15) && !is_prime(1));
    }
}
