use std::fmt;

use super::field::{Field, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
///
/// The highest stored coefficient is always nonzero; the zero polynomial
/// has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    pub fn monomial(c: F, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.coeffs.clone();
        for (o, s) in out.iter_mut().zip(&short.coeffs) {
            *o = o.add(s);
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let v = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(F::neg).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        F::poly_mul(self, other)
    }

    /// Plain quadratic product.
    pub fn schoolbook(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitutes `t -> t^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.is_zero() || k == 1 {
            return self.clone();
        }
        let mut coeffs = vec![F::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Poly { coeffs }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Euclidean division: `self = quot * divisor + rem`, `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroDivisor)?;
        let lc_inv = divisor.coeffs[dd].inv().ok_or(Error::ZeroDivisor)?;
        let Some(sd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if sd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let monic = lc_inv.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let c = if monic { top.clone() } else { top.mul(&lc_inv) };
            for (j, dc) in divisor.coeffs[..dd].iter().enumerate() {
                if !dc.is_zero() {
                    rem[i + j] = rem[i + j].sub(&c.mul(dc));
                }
            }
            rem[i + dd] = F::zero();
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        if let Some(r) = F::poly_rem_fast(self, divisor) {
            return Ok(r);
        }
        Ok(self.divrem(divisor)?.1)
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic associate and the leading coefficient that was divided out.
    pub fn monic(&self) -> (Self, F) {
        match self.leading() {
            None => (Self::zero(), F::one()),
            Some(lc) if lc.is_one() => (self.clone(), F::one()),
            Some(lc) => {
                let lc = lc.clone();
                let inv = lc.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), lc)
            }
        }
    }

    pub fn euclid_gcd(a: &Self, b: &Self) -> Self {
        let mut x = a.monic().0;
        let mut y = b.monic().0;
        while !y.is_zero() {
            let r = x.rem(&y).expect("nonzero divisor");
            x = y;
            y = r.monic().0;
        }
        x
    }

    /// Monic gcd; `gcd(0, 0)` is the zero polynomial.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic().0;
        }
        if other.is_zero() {
            return self.monic().0;
        }
        if self.is_constant() || other.is_constant() {
            return Self::one();
        }
        F::poly_gcd(self, other)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        if self.is_constant() && !self.is_zero() || other.is_constant() && !other.is_zero() {
            return true;
        }
        F::quick_coprime(self, other) || self.gcd(other).is_one()
    }

    /// Extended Euclid: returns `(g, s, t)` with `g` monic and `g = s*a + t*b`.
    pub fn gcd_ext(a: &Self, b: &Self) -> Result<(Self, Self, Self)> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc = r0.leading().expect("nonzero gcd").clone();
        let inv = lc.inv().expect("nonzero");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &Self) -> Result<Self> {
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(Error::NonInvertible);
        }
        let (g, s, _) = Self::gcd_ext(&a, m)?;
        if !g.is_one() {
            return Err(Error::NonInvertible);
        }
        s.rem(m)
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        F::poly_mul_mod(self, other, m)
    }
}

impl Poly<Rational> {
    /// Evaluates at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.eval(x)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{int, rat};
    use proptest::prelude::*;

    type P = Poly<Rational>;

    fn p(cs: &[i64]) -> P {
        P::from_i64s(cs)
    }

    #[test]
    fn divrem_examples() {
        // (q^2 - 1) / (q - 1)
        let (q, r) = p(&[-1, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        // q^3 / (q - 1) = q^2 + q + 1 rem 1
        let (q, r) = p(&[0, 0, 0, 1]).divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[1, 1, 1]));
        assert_eq!(r, p(&[1]));
        let a = p(&[3, 0, -2, 5]);
        let (q, r) = a.divrem(&a).unwrap();
        assert_eq!(q, P::one());
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_by_zero_errors() {
        assert_eq!(p(&[1, 1]).divrem(&P::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        let (g, s, t) = P::gcd_ext(&p(&[-1, 1]), &p(&[1, 1])).unwrap();
        assert!(g.is_one());
        assert_eq!(s.mul(&p(&[-1, 1])).add(&t.mul(&p(&[1, 1]))), P::one());
        let (g, _, _) = P::gcd_ext(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        let phi3 = p(&[1, 1, 1]);
        let sq = phi3.mul(&phi3);
        let (g, s, t) = P::gcd_ext(&sq, &phi3).unwrap();
        assert_eq!(g, phi3);
        assert_eq!(s.mul(&sq).add(&t.mul(&phi3)), g);
        assert!(g.divides(&sq) && g.divides(&phi3));
        assert_eq!(P::gcd_ext(&P::zero(), &P::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn inflate_and_eval() {
        let a = p(&[1, 2]).inflate(3);
        assert_eq!(a, p(&[1, 0, 0, 2]));
        assert_eq!(a.eval(&int(2)), int(17));
        assert_eq!(p(&[1, 1]).eval(&rat(1, 2)), rat(3, 2));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 0..6)
            .prop_map(|v| P::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(q.mul(&b).add(&r), a);
            prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
        }

        #[test]
        fn gcd_divides_and_bezout(a in small_poly(), b in small_poly()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let (g, s, t) = P::gcd_ext(&a, &b).unwrap();
            prop_assert!(g.leading().unwrap().is_one());
            prop_assert!(g.divides(&a) && g.divides(&b));
            prop_assert_eq!(s.mul(&a).add(&t.mul(&b)), g.clone());
            prop_assert_eq!(a.gcd(&b), g);
        }
    }
}
