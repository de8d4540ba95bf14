use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{intpoly, modgcd};
use super::poly::Poly;
use super::ratfun::RatFun;
use crate::error::{Error, Result};

/// Arbitrary-precision rational; always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Coefficient field for [`Poly`] and [`RatFun`].
///
/// Implemented for [`Rational`] (the field Q) and recursively for
/// `RatFun<F>` (the fraction field F(t)), which gives the two-level towers
/// Q(a) and Q(q).
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
    /// The rational value of a constant element, if it is one.
    fn as_rational(&self) -> Option<Rational>;
    fn descriptor() -> FieldDescriptor;

    fn div(&self, other: &Self) -> Result<Self> {
        other.inv().map(|i| self.mul(&i)).ok_or(Error::DivisionByZero)
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&int(v))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inv().ok_or(Error::DivisionByZero)
        } else {
            Ok(p)
        }
    }

    /// Monic gcd of two polynomials over this field. The default is the
    /// Euclidean algorithm; Q overrides it with a multi-modular method.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        Poly::euclid_gcd(a, b)
    }

    /// Cheap sufficient test for coprimality (may return false for coprime inputs).
    fn quick_coprime(_a: &Poly<Self>, _b: &Poly<Self>) -> bool {
        false
    }

    /// `a * b` for nonconstant operands, overridable with a faster path.
    fn poly_mul(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        Poly::schoolbook(a, b)
    }

    /// `a * b mod m`, overridable with a faster path.
    fn poly_mul_mod(a: &Poly<Self>, b: &Poly<Self>, m: &Poly<Self>) -> Poly<Self> {
        a.mul(b).rem(m).expect("nonzero modulus")
    }

    /// `a mod m` when a specialized path applies.
    fn poly_rem_fast(_a: &Poly<Self>, _m: &Poly<Self>) -> Option<Poly<Self>> {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::Rationals
    }
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        modgcd::gcd(a, b)
    }
    fn quick_coprime(a: &Poly<Self>, b: &Poly<Self>) -> bool {
        modgcd::coprime_mod_p(a, b)
    }
    fn poly_mul(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        intpoly::mul(a, b)
    }
    fn poly_mul_mod(a: &Poly<Self>, b: &Poly<Self>, m: &Poly<Self>) -> Poly<Self> {
        match intpoly::monic_integer(m) {
            Some(mi) => intpoly::mul_mod(a, b, &mi),
            None => a.mul(b).rem(m).expect("nonzero modulus"),
        }
    }
    fn poly_rem_fast(a: &Poly<Self>, m: &Poly<Self>) -> Option<Poly<Self>> {
        intpoly::monic_integer(m).map(|mi| intpoly::rem(a, &mi))
    }
}

impl<F: Field> Field for RatFun<F> {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        self.num().is_zero()
    }
    fn is_one(&self) -> bool {
        self.num().is_one() && self.den().is_one()
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFun::inv(self).ok()
    }
    fn from_rational(r: &Rational) -> Self {
        RatFun::constant(F::from_rational(r))
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.den().is_one() && self.num().degree().unwrap_or(0) == 0 {
            self.num().coeff(0).as_rational()
        } else {
            None
        }
    }
    fn descriptor() -> FieldDescriptor {
        FieldDescriptor::FractionField {
            variable: "t".into(),
            inner: Box::new(F::descriptor()),
        }
    }
}

/// Runtime description of a coefficient field tower.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rationals,
    FractionField {
        variable: String,
        inner: Box<FieldDescriptor>,
    },
}

impl FieldDescriptor {
    pub fn fraction(variable: &str, inner: FieldDescriptor) -> Result<Self> {
        if inner.variables().iter().any(|v| v == variable) {
            return Err(Error::InvalidTower(format!("variable `{variable}` repeated")));
        }
        let d = FieldDescriptor::FractionField {
            variable: variable.to_string(),
            inner: Box::new(inner),
        };
        if d.depth() > 2 {
            return Err(Error::InvalidTower("tower depth exceeds 2".into()));
        }
        Ok(d)
    }

    pub fn depth(&self) -> usize {
        match self {
            FieldDescriptor::Rationals => 0,
            FieldDescriptor::FractionField { inner, .. } => 1 + inner.depth(),
        }
    }

    pub fn variables(&self) -> Vec<String> {
        match self {
            FieldDescriptor::Rationals => vec![],
            FieldDescriptor::FractionField { variable, inner } => {
                let mut v = inner.variables();
                v.push(variable.clone());
                v
            }
        }
    }
}

impl Display for FieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::FractionField { variable, inner } => write!(f, "{inner}({variable})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7), int(0));
        assert_eq!(rat(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn tower_rules() {
        let qa = FieldDescriptor::fraction("a", FieldDescriptor::Rationals).unwrap();
        assert_eq!(qa.to_string(), "Q(a)");
        assert!(FieldDescriptor::fraction("a", qa.clone()).is_err());
        let qab = FieldDescriptor::fraction("q", qa).unwrap();
        assert_eq!(qab.depth(), 2);
        assert!(FieldDescriptor::fraction("b", qab).is_err());
    }

    #[test]
    fn powi_inverts() {
        assert_eq!(rat(2, 3).powi(-2).unwrap(), rat(9, 4));
        assert!(int(0).powi(-1).is_err());
    }
}
