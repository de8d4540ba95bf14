//! Fraction-free multiplication and reduction for rational polynomials
//! against a monic integer modulus. Each input is scaled to an integer
//! polynomial over a common denominator, so the inner loops run on `BigInt`
//! and normalize only once at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::Rational;
use super::poly::Poly;

fn clear(p: &Poly<Rational>) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        if !c.denom().is_one() {
            den = den.lcm(c.denom());
        }
    }
    let v = p
        .coeffs()
        .iter()
        .map(|c| if den.is_one() { c.numer().clone() } else { c.numer() * (&den / c.denom()) })
        .collect();
    (v, den)
}

/// The coefficients of `m` when it is monic over Z.
pub(crate) fn monic_integer(m: &Poly<Rational>) -> Option<Vec<BigInt>> {
    if !m.leading()?.is_one() || m.coeffs().iter().any(|c| !c.denom().is_one()) {
        return None;
    }
    Some(m.coeffs().iter().map(|c| c.numer().clone()).collect())
}

fn reduce(mut r: Vec<BigInt>, m: &[BigInt]) -> Vec<BigInt> {
    let dd = m.len() - 1;
    while r.len() > dd {
        let top = r.pop().expect("nonempty");
        if top.is_zero() {
            continue;
        }
        let base = r.len() - dd;
        for (j, mc) in m[..dd].iter().enumerate() {
            if !mc.is_zero() {
                r[base + j] -= &top * mc;
            }
        }
    }
    r
}

fn finish(r: Vec<BigInt>, den: &BigInt) -> Poly<Rational> {
    Poly::from_coeffs(r.into_iter().map(|c| Rational::new(c, den.clone())).collect())
}

pub(crate) fn mul_mod(a: &Poly<Rational>, b: &Poly<Rational>, m: &[BigInt]) -> Poly<Rational> {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let (x, dx) = clear(a);
    let (y, dy) = clear(b);
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, p) in x.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in y.iter().enumerate() {
            if !q.is_zero() {
                out[i + j] += p * q;
            }
        }
    }
    finish(reduce(out, m), &(dx * dy))
}

pub(crate) fn mul(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    let (x, dx) = clear(a);
    let (y, dy) = clear(b);
    let mut out = vec![BigInt::zero(); x.len() + y.len() - 1];
    for (i, p) in x.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in y.iter().enumerate() {
            if !q.is_zero() {
                out[i + j] += p * q;
            }
        }
    }
    finish(out, &(dx * dy))
}

pub(crate) fn rem(a: &Poly<Rational>, m: &[BigInt]) -> Poly<Rational> {
    if a.coeffs().len() < m.len() {
        return a.clone();
    }
    let (x, dx) = clear(a);
    finish(reduce(x, m), &dx)
}
