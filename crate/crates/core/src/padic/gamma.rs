use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::is_prime;
use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Default bound on the number of multiplications in one Gamma evaluation.
pub const DEFAULT_WORK_CAP: u64 = 100_000_000;

/// An odd prime `p` and a precision `k`: values are known modulo `p^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PadicContext {
    pub p: u64,
    pub k: u32,
}

impl PadicContext {
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if p == 2 || !is_prime(p) {
            return Err(Error::OutOfDomain(format!("{p} is not an odd prime")));
        }
        if k == 0 {
            return Err(Error::OutOfDomain("precision must be positive".into()));
        }
        Ok(PadicContext { p, k })
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.k)
    }
}

pub(crate) fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Morita's `Gamma_p(x) mod p^k`: with `N = x (mod p^k)`, `N >= 1`,
/// `Gamma_p(x) = (-1)^N prod_{0<j<N, p∤j} j`.
pub fn padic_gamma(x: &Rational, ctx: &PadicContext, work_cap: u64) -> Result<BigInt> {
    let m = ctx.modulus();
    let pb = BigInt::from(ctx.p);
    if x.denom().is_multiple_of(&pb) {
        return Err(Error::NotPadicInteger(x.to_string()));
    }
    let inv = inverse_mod(&x.denom().mod_floor(&m), &m).ok_or_else(|| Error::NotPadicInteger(x.to_string()))?;
    let mut n = (x.numer() * inv).mod_floor(&m);
    if n.is_zero() {
        n = m.clone();
    }
    let n = n.to_u64().filter(|v| *v <= work_cap).ok_or_else(|| {
        Error::PrecisionCap(format!("Gamma_{} needs {} steps, cap {work_cap}", ctx.p, n))
    })?;
    let mw = m.to_u128().ok_or_else(|| Error::PrecisionCap(format!("p^k too large: {m}")))?;
    if mw > u64::MAX as u128 {
        return Err(Error::PrecisionCap(format!("p^k too large: {m}")));
    }
    let mut acc: u128 = 1;
    for j in 1..n {
        if j % ctx.p != 0 {
            acc = acc * j as u128 % mw;
        }
    }
    let acc = if n % 2 == 1 { (mw - acc) % mw } else { acc };
    Ok(BigInt::from(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn g(x: Rational, p: u64, k: u32) -> BigInt {
        padic_gamma(&x, &PadicContext::new(p, k).unwrap(), DEFAULT_WORK_CAP).unwrap()
    }

    #[test]
    fn small_values() {
        for p in [3, 5, 7, 13] {
            assert_eq!(g(int(1), p, 3), BigInt::from(p.pow(3) - 1));
            assert_eq!(g(int(2), p, 3), BigInt::one());
        }
        assert!(padic_gamma(&rat(1, 5), &PadicContext::new(5, 2).unwrap(), 10).is_err());
        assert!(padic_gamma(&rat(1, 3), &PadicContext::new(7, 4).unwrap(), 100).is_err());
        assert!(PadicContext::new(9, 2).is_err());
        assert!(PadicContext::new(2, 2).is_err());
    }
}
