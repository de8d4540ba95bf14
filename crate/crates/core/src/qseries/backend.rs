use std::cell::RefCell;
use std::collections::HashMap;
use std::marker::PhantomData;

use super::term::{Atom, Term};
use crate::algebra::{Field, Poly, RatFun};
use crate::error::Result;

/// Where the values of a builder live. Every sum and closed form in the
/// catalog is written once against this trait and then evaluated either as
/// an exact rational function or in a local quotient ring.
pub trait Backend<F: Field> {
    type V: Clone;

    fn term(&self, t: &Term<F>) -> Result<Self::V>;
    fn add(&self, x: &Self::V, y: &Self::V) -> Result<Self::V>;
    fn mul(&self, x: &Self::V, y: &Self::V) -> Result<Self::V>;
    fn neg(&self, x: &Self::V) -> Self::V;

    fn sub(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        self.add(x, &self.neg(y))
    }

    fn zero(&self) -> Self::V {
        self.term(&Term::zero()).expect("zero term")
    }

    fn one(&self) -> Self::V {
        self.term(&Term::one()).expect("unit term")
    }

    fn scalar(&self, c: &F) -> Self::V {
        self.term(&Term::scalar(c.clone())).expect("scalar term")
    }

    fn pow(&self, x: &Self::V, e: u32) -> Result<Self::V> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    fn sum<I: IntoIterator<Item = Self::V>>(&self, items: I) -> Result<Self::V> {
        let mut acc = self.zero();
        for v in items {
            acc = self.add(&acc, &v)?;
        }
        Ok(acc)
    }
}

/// Exact evaluation in `F(q)`.
pub struct Exact<F: Field> {
    atoms: RefCell<HashMap<Atom<F>, Poly<F>>>,
    _f: PhantomData<F>,
}

impl<F: Field> Default for Exact<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Field> Exact<F> {
    pub fn new() -> Self {
        Exact { atoms: RefCell::new(HashMap::new()), _f: PhantomData }
    }

    fn atom_poly(&self, a: &Atom<F>) -> Poly<F> {
        self.atoms.borrow_mut().entry(a.clone()).or_insert_with(|| a.poly()).clone()
    }
}

impl<F: Field> Backend<F> for Exact<F> {
    type V = RatFun<F>;

    fn term(&self, t: &Term<F>) -> Result<RatFun<F>> {
        if t.is_zero() {
            return Ok(RatFun::zero());
        }
        let mut num = Poly::constant(t.coeff().clone());
        let mut den = Poly::one();
        let k = t.qpow();
        if k >= 0 {
            num = num.shift(k as usize);
        } else {
            den = den.shift(k.unsigned_abs() as usize);
        }
        for (a, e) in t.atoms() {
            let p = self.atom_poly(a).pow(e.unsigned_abs() as u32);
            if *e > 0 {
                num = num.mul(&p);
            } else {
                den = den.mul(&p);
            }
        }
        RatFun::new(num, den)
    }

    fn add(&self, x: &RatFun<F>, y: &RatFun<F>) -> Result<RatFun<F>> {
        Ok(x.add(y))
    }

    fn mul(&self, x: &RatFun<F>, y: &RatFun<F>) -> Result<RatFun<F>> {
        Ok(x.mul(y))
    }

    fn neg(&self, x: &RatFun<F>) -> RatFun<F> {
        x.neg()
    }

    fn zero(&self) -> RatFun<F> {
        RatFun::zero()
    }

    fn one(&self) -> RatFun<F> {
        RatFun::one()
    }
}
