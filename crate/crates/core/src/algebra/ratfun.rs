use std::fmt;

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Reduced quotient of two polynomials: `den` is monic and `gcd(num, den) = 1`.
///
/// Negative powers of the variable live in `den`, so Laurent expressions such
/// as `q^{1-n}` need no separate type.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Builds from a pair already known to be coprime; only normalizes the
    /// denominator to be monic.
    pub fn from_coprime(num: Poly<F>, den: Poly<F>) -> Self {
        let (den, lc) = den.monic();
        let num = if lc.is_one() { num } else { num.scale(&lc.inv().expect("nonzero")) };
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        RatFun { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun { num: p, den: Poly::one() }
    }

    /// The variable.
    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `t^k` for any integer `k`.
    pub fn var_pow(k: i64) -> Self {
        let m = Poly::monomial(F::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFun { num: Poly::one(), den: m }
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return Self::from_poly(n);
            }
            return Self::new(n, self.den.clone()).expect("nonzero denominator");
        }
        // Henrici: only the gcd of the new numerator with gcd(den1, den2) can be nontrivial.
        let d = self.den.gcd(&other.den);
        if d.is_one() {
            let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            return Self::from_coprime(n, self.den.mul(&other.den));
        }
        let y1 = self.den.exact_div(&d).expect("gcd divides");
        let w1 = other.den.exact_div(&d).expect("gcd divides");
        let t = self.num.mul(&w1).add(&other.num.mul(&y1));
        if t.is_zero() {
            return Self::zero();
        }
        let g = t.gcd(&d);
        let (t, wg) = if g.is_one() {
            (t, other.den.clone())
        } else {
            (t.exact_div(&g).unwrap(), other.den.exact_div(&g).unwrap())
        };
        Self::from_coprime(t, y1.mul(&wg))
    }

    pub fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), other.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), other.den.exact_div(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (other.num.clone(), self.den.clone())
        } else {
            (other.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        Self::from_coprime(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> Self {
        RatFun { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv()
        } else {
            Ok(p)
        }
    }

    /// Value at a point, or `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x).mul(&di))
    }

    /// Substitutes `t -> t^k`.
    pub fn inflate(&self, k: usize) -> Self {
        RatFun { num: self.num.inflate(k), den: self.den.inflate(k) }
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{rat, Rational};
    use proptest::prelude::*;

    type P = Poly<Rational>;
    type R = RatFun<Rational>;

    fn r(n: &[i64], d: &[i64]) -> R {
        R::new(P::from_i64s(n), P::from_i64s(d)).unwrap()
    }

    #[test]
    fn examples() {
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let s = r(&[1], &[1, -1]).add(&r(&[1], &[1, 1]));
        assert_eq!(s, r(&[2], &[1, 0, -1]));
        let x = r(&[1, 3, 0, 2], &[5, 1]);
        assert_eq!(x.mul(&x.inv().unwrap()), R::one());
        // (1-q^3)/(1-q) = 1+q+q^2
        assert_eq!(r(&[1, 0, 0, -1], &[1, -1]), R::from_poly(P::from_i64s(&[1, 1, 1])));
    }

    #[test]
    fn invariants_hold() {
        let x = r(&[2, 2], &[4, 0, -4]);
        assert!(x.den().leading().unwrap().is_one());
        assert!(x.num().gcd(x.den()).is_one());
        assert_eq!(x, r(&[-1], &[-2, 2]));
    }

    #[test]
    fn division_by_zero() {
        assert!(r(&[1], &[1, 1]).div(&R::zero()).is_err());
        assert!(R::new(P::one(), P::zero()).is_err());
    }

    #[test]
    fn laurent_powers() {
        let q = R::var();
        assert_eq!(R::var_pow(-2).mul(&q.pow(3)), q);
        assert_eq!(R::var_pow(-3).eval(&rat(1, 2)), Some(rat(8, 1)));
    }

    fn small_ratfun() -> impl Strategy<Value = R> {
        let poly = prop::collection::vec(-4i64..=4, 1..4).prop_map(|v| P::from_i64s(&v));
        (poly.clone(), poly).prop_filter_map("nonzero den", |(n, d)| R::new(n, d).ok())
    }

    fn points() -> Vec<Rational> {
        (0..20).map(|i| rat(2 * i + 3, 7 + i)).collect()
    }

    proptest! {
        #[test]
        fn arithmetic_agrees_with_evaluation(x in small_ratfun(), y in small_ratfun()) {
            let ops: [(fn(&R, &R) -> R, fn(&Rational, &Rational) -> Rational); 3] = [
                (|a, b| a.add(b), |a, b| a + b),
                (|a, b| a.sub(b), |a, b| a - b),
                (|a, b| a.mul(b), |a, b| a * b),
            ];
            for xi in points() {
                let (Some(ex), Some(ey)) = (x.eval(&xi), y.eval(&xi)) else { continue };
                for (f, g) in ops.iter() {
                    prop_assert_eq!(f(&x, &y).eval(&xi), Some(g(&ex, &ey)));
                }
                if !y.is_zero() && !Field::is_zero(&ey) {
                    prop_assert_eq!(x.div(&y).unwrap().eval(&xi), Some(ex.clone() / ey.clone()));
                }
            }
        }

        #[test]
        fn results_are_reduced(x in small_ratfun(), y in small_ratfun()) {
            for z in [x.add(&y), x.mul(&y), x.sub(&y)] {
                prop_assert!(z.den().leading().unwrap().is_one());
                prop_assert!(z.num().gcd(z.den()).is_one() || z.is_zero());
            }
        }
    }
}
