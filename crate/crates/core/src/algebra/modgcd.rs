//! Multi-modular gcd for polynomials over Q.
//!
//! Inputs are scaled to primitive integer polynomials, the gcd is computed
//! modulo a sequence of 62-bit primes, combined by CRT and lifted to the
//! symmetric range; a candidate is accepted only after it divides both inputs
//! exactly over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::field::Rational;
use super::poly::Poly;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % sp == 0 {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending 62-bit primes.
struct Primes {
    next: u64,
}

impl Primes {
    fn new() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while !is_prime_u64(self.next) {
            self.next -= 2;
        }
        let p = self.next;
        self.next -= 2;
        Some(p)
    }
}

/// Scales a rational polynomial to a primitive integer polynomial.
pub(crate) fn primitive_integer(a: &Poly<Rational>) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in a.coeffs() {
        l = l.lcm(c.denom());
    }
    let mut ints: Vec<BigInt> = a.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let mut g = BigInt::zero();
    for c in &ints {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c /= &g;
        }
    }
    ints
}

fn reduce(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_p(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = invmod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let c = mulmod(top, inv, p);
            let off = a.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                let sub = mulmod(c, bj, p);
                a[off + j] = (a[off + j] + p - sub) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

fn gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        rem_p(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(&lc) = x.last() {
        let inv = invmod(lc, p);
        for c in x.iter_mut() {
            *c = mulmod(*c, inv, p);
        }
    }
    x
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn to_monic_rational(h: &[BigInt]) -> Poly<Rational> {
    let lc = h.last().expect("nonzero").clone();
    Poly::from_coeffs(h.iter().map(|c| Rational::new(c.clone(), lc.clone())).collect())
}

/// Fast sufficient test: the images modulo one good prime are coprime.
pub fn coprime_mod_p(a: &Poly<Rational>, b: &Poly<Rational>) -> bool {
    if a.is_zero() || b.is_zero() {
        return false;
    }
    let ai = primitive_integer(a);
    let bi = primitive_integer(b);
    for p in Primes::new().take(3) {
        let ap = reduce(&ai, p);
        let bp = reduce(&bi, p);
        if ap.len() != ai.len() || bp.len() != bi.len() {
            continue;
        }
        return gcd_p(&ap, &bp, p).len() == 1;
    }
    false
}

/// Monic gcd of two polynomials over Q.
pub fn gcd(a: &Poly<Rational>, b: &Poly<Rational>) -> Poly<Rational> {
    if a.is_zero() || b.is_zero() {
        return Poly::euclid_gcd(a, b);
    }
    let ai = primitive_integer(a);
    let bi = primitive_integer(b);
    let lcg = ai.last().unwrap().gcd(bi.last().unwrap());
    let aq = a.monic().0;
    let bq = b.monic().0;

    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut last_lift: Option<Vec<BigInt>> = None;
    for p in Primes::new() {
        let ap = reduce(&ai, p);
        let bp = reduce(&bi, p);
        if ap.len() != ai.len() || bp.len() != bi.len() {
            continue;
        }
        let g = gcd_p(&ap, &bp, p);
        if g.len() == 1 {
            return Poly::one();
        }
        let scale = reduce(std::slice::from_ref(&lcg), p).first().copied().unwrap_or(0);
        let g: Vec<u64> = g.iter().map(|&c| mulmod(c, scale, p)).collect();
        let pb = BigInt::from(p);
        acc = match acc.take() {
            Some((h, m)) if h.len() == g.len() => {
                let minv = invmod((&m).mod_floor(&pb).to_u64().unwrap(), p);
                let combined: Vec<BigInt> = h
                    .iter()
                    .zip(&g)
                    .map(|(hc, &gc)| {
                        let hm = hc.mod_floor(&pb).to_u64().unwrap();
                        let delta = mulmod((gc + p - hm) % p, minv, p);
                        hc + &m * BigInt::from(delta)
                    })
                    .collect();
                Some((combined, m * pb))
            }
            Some((h, m)) if h.len() < g.len() => Some((h, m)),
            _ => Some((g.iter().map(|&c| BigInt::from(c)).collect(), pb)),
        };
        let (h, m) = acc.as_ref().unwrap();
        let lifted: Vec<BigInt> = h.iter().map(|c| symmetric(c, m)).collect();
        if last_lift.as_ref() == Some(&lifted) {
            let cand = to_monic_rational(&lifted);
            if cand.divides(&aq) && cand.divides(&bq) {
                return cand;
            }
        }
        last_lift = Some(lifted);
    }
    unreachable!("prime iterator is infinite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rat;
    use proptest::prelude::*;

    type P = Poly<Rational>;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = Primes::new().take(3).collect();
        assert!(ps.iter().all(|&p| p > 1 << 61 && is_prime_u64(p)));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007 * 3));
    }

    #[test]
    fn matches_euclid_on_structured_input() {
        let phi3 = P::from_i64s(&[1, 1, 1]);
        let a = phi3.pow(3).mul(&P::from_i64s(&[2, -7, 1]));
        let b = phi3.pow(2).mul(&P::from_i64s(&[5, 0, 0, 3]));
        assert_eq!(gcd(&a, &b), phi3.pow(2));
        assert_eq!(gcd(&a, &b), P::euclid_gcd(&a, &b));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-9i64..=9, 1i64..=5), 2..6)
            .prop_map(|v| P::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn agrees_with_euclid(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(a.degree().unwrap_or(0) > 0 && b.degree().unwrap_or(0) > 0);
            let x = a.mul(&c);
            let y = b.mul(&c);
            prop_assert_eq!(gcd(&x, &y), P::euclid_gcd(&x, &y));
        }
    }
}
