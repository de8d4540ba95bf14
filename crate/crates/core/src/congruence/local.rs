//! Arithmetic in the completion of `F[q]` at one irreducible factor `m`,
//! truncated to `F[q]/(m^P)`.
//!
//! An element is `m^val * u` where `u` is known modulo `m^rel` and, when
//! `rel > 0`, is a unit. Products keep the smaller relative precision; sums
//! keep the smaller absolute precision `val + rel` and renormalize, so
//! cancellation shows up as lost precision instead of wrong answers.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};
use crate::qseries::{Atom, Backend, Term};

pub(crate) const EXACT_ZERO: i64 = i64::MAX / 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalVal<F> {
    pub val: i64,
    pub unit: Poly<F>,
    pub rel: usize,
}

impl<F: Field> LocalVal<F> {
    pub fn exact_zero() -> Self {
        LocalVal { val: EXACT_ZERO, unit: Poly::zero(), rel: 0 }
    }

    pub fn is_exact_zero(&self) -> bool {
        self.val >= EXACT_ZERO
    }

    /// Absolute precision: the element is known modulo `m^abs`.
    pub fn abs_prec(&self) -> i64 {
        if self.is_exact_zero() {
            EXACT_ZERO
        } else {
            self.val + self.rel as i64
        }
    }
}

struct AtomData<F> {
    val: i64,
    unit: Poly<F>,
    inv: Option<Poly<F>>,
}

/// `F[q]/(m^P)` with the bookkeeping above.
pub struct LocalRing<F: Field> {
    m: Atom<F>,
    mpoly: Poly<F>,
    prec: usize,
    pows: Vec<Poly<F>>,
    atoms: RefCell<HashMap<Atom<F>, AtomData<F>>>,
    q_inv: Poly<F>,
}

impl<F: Field> LocalRing<F> {
    pub fn new(m: Atom<F>, prec: usize) -> Result<Self> {
        let mpoly = m.poly();
        let mut pows = vec![Poly::one()];
        for i in 1..=prec {
            pows.push(pows[i - 1].mul(&mpoly));
        }
        let q_inv = lift_inverse(&Poly::var(), &mpoly, &pows)?;
        Ok(LocalRing { m, mpoly, prec, pows, atoms: RefCell::new(HashMap::new()), q_inv })
    }

    pub fn factor(&self) -> &Atom<F> {
        &self.m
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn modulus_power(&self, e: usize) -> &Poly<F> {
        &self.pows[e]
    }

    fn reduce(&self, p: &Poly<F>, rel: usize) -> Poly<F> {
        if p.degree().unwrap_or(0) < self.pows[rel].degree().unwrap_or(0) {
            return p.clone();
        }
        p.rem(&self.pows[rel]).expect("nonzero modulus")
    }

    /// Splits off the exact power of `m` dividing a nonzero polynomial.
    fn split(&self, p: &Poly<F>) -> (i64, Poly<F>) {
        let mut v = 0;
        let mut p = p.clone();
        while let Some(q) = p.exact_div(&self.mpoly) {
            p = q;
            v += 1;
        }
        (v, p)
    }

    fn atom_data(&self, a: &Atom<F>, need_inv: bool) -> Result<(i64, Poly<F>, Option<Poly<F>>)> {
        if let Some(d) = self.atoms.borrow().get(a) {
            if !need_inv || d.inv.is_some() {
                return Ok((d.val, d.unit.clone(), d.inv.clone()));
            }
        }
        let (val, unit) = if *a == self.m {
            (1, Poly::one())
        } else {
            match (a, &self.m) {
                (Atom::Cyclo(_), _) | (Atom::Binom(..), Atom::Cyclo(_)) => (0, self.reduce(&a.poly(), self.prec)),
                _ => {
                    let (v, u) = self.split(&a.poly());
                    (v, self.reduce(&u, self.prec))
                }
            }
        };
        let inv = if need_inv { Some(lift_inverse(&unit, &self.mpoly, &self.pows)?) } else { None };
        self.atoms
            .borrow_mut()
            .insert(a.clone(), AtomData { val, unit: unit.clone(), inv: inv.clone() });
        Ok((val, unit, inv))
    }

    fn pow_mod(&self, b: &Poly<F>, e: u64) -> Poly<F> {
        let m = &self.pows[self.prec];
        let mut acc = Poly::one();
        let mut base = b.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, m);
            }
        }
        acc
    }

    fn normalize(&self, mut val: i64, mut unit: Poly<F>, mut rel: usize) -> LocalVal<F> {
        while rel > 0 {
            if unit.is_zero() {
                return LocalVal { val: val + rel as i64, unit, rel: 0 };
            }
            match unit.exact_div(&self.mpoly) {
                Some(q) => {
                    unit = q;
                    val += 1;
                    rel -= 1;
                    unit = self.reduce(&unit, rel);
                }
                None => break,
            }
        }
        if rel == 0 {
            unit = Poly::zero();
        }
        LocalVal { val, unit, rel }
    }

    /// The residue of a value with nonnegative valuation modulo `m^e`, when known.
    pub fn residue(&self, x: &LocalVal<F>, e: usize) -> Option<Poly<F>> {
        if x.is_exact_zero() || x.val >= e as i64 {
            return Some(Poly::zero());
        }
        if x.val < 0 || x.abs_prec() < e as i64 {
            return None;
        }
        let shifted = x.unit.mul(&self.pows[x.val as usize]);
        Some(self.reduce(&shifted, e))
    }
}

impl<F: Field> Backend<F> for LocalRing<F> {
    type V = LocalVal<F>;

    fn term(&self, t: &Term<F>) -> Result<LocalVal<F>> {
        if t.is_zero() {
            return Ok(LocalVal::exact_zero());
        }
        let m = &self.pows[self.prec];
        let mut val = 0i64;
        let mut unit = Poly::constant(t.coeff().clone());
        let k = t.qpow();
        if k > 0 {
            unit = unit.mul_mod(&self.pow_mod(&Poly::var(), k as u64), m);
        } else if k < 0 {
            unit = unit.mul_mod(&self.pow_mod(&self.q_inv, k.unsigned_abs()), m);
        }
        for (a, e) in t.atoms() {
            let (v, u, inv) = self.atom_data(a, *e < 0)?;
            val += v * e;
            let base = if *e < 0 { inv.expect("requested") } else { u };
            if !base.is_one() {
                unit = unit.mul_mod(&self.pow_mod(&base, e.unsigned_abs()), m);
            }
        }
        Ok(LocalVal { val, unit: self.reduce(&unit, self.prec), rel: self.prec })
    }

    fn add(&self, x: &LocalVal<F>, y: &LocalVal<F>) -> Result<LocalVal<F>> {
        if x.is_exact_zero() {
            return Ok(y.clone());
        }
        if y.is_exact_zero() {
            return Ok(x.clone());
        }
        let v = x.val.min(y.val);
        let abs = x.abs_prec().min(y.abs_prec());
        if abs <= v {
            return Ok(LocalVal { val: abs, unit: Poly::zero(), rel: 0 });
        }
        let rel = (abs - v) as usize;
        let lift = |z: &LocalVal<F>| -> Poly<F> {
            let s = (z.val - v) as usize;
            if s >= rel {
                Poly::zero()
            } else {
                self.reduce(&z.unit, rel - s).mul(&self.pows[s])
            }
        };
        let u = self.reduce(&lift(x).add(&lift(y)), rel);
        Ok(self.normalize(v, u, rel))
    }

    fn mul(&self, x: &LocalVal<F>, y: &LocalVal<F>) -> Result<LocalVal<F>> {
        if x.is_exact_zero() || y.is_exact_zero() {
            return Ok(LocalVal::exact_zero());
        }
        let rel = x.rel.min(y.rel);
        let val = x.val + y.val;
        if rel == 0 {
            return Ok(LocalVal { val, unit: Poly::zero(), rel: 0 });
        }
        let u = self.reduce(&x.unit, rel).mul_mod(&self.reduce(&y.unit, rel), &self.pows[rel]);
        Ok(LocalVal { val, unit: u, rel })
    }

    fn neg(&self, x: &LocalVal<F>) -> LocalVal<F> {
        LocalVal { val: x.val, unit: x.unit.neg(), rel: x.rel }
    }

    fn zero(&self) -> LocalVal<F> {
        LocalVal::exact_zero()
    }

    fn one(&self) -> LocalVal<F> {
        LocalVal { val: 0, unit: Poly::one(), rel: self.prec }
    }
}

/// Inverse of a unit modulo `m^P` (`P = pows.len() - 1`): invert modulo
/// `m`, then Newton steps `v <- v (2 - u v)`, doubling the precision each
/// time. Avoids the coefficient growth of an extended gcd at full degree.
fn lift_inverse<F: Field>(u: &Poly<F>, m: &Poly<F>, pows: &[Poly<F>]) -> Result<Poly<F>> {
    let prec = pows.len() - 1;
    let mut v = u.rem(m)?.inverse_mod(m)?;
    let two = Poly::constant(F::from_i64(2));
    let mut cur = 1;
    while cur < prec {
        cur = (2 * cur).min(prec);
        let modulus = &pows[cur];
        let uv = u.rem(modulus)?.mul_mod(&v, modulus);
        v = v.mul_mod(&two.sub(&uv), modulus);
    }
    Ok(v)
}

/// Outcome of checking one factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalOutcome<F> {
    Holds { valuation: i64 },
    Fails { valuation: i64, residue: Option<Poly<F>> },
    Pole { valuation: i64 },
    Insufficient,
}

pub fn judge<F: Field>(ring: &LocalRing<F>, diff: &LocalVal<F>, e: u32) -> LocalOutcome<F> {
    let e64 = e as i64;
    if diff.is_exact_zero() {
        return LocalOutcome::Holds { valuation: EXACT_ZERO };
    }
    if diff.rel == 0 {
        return if diff.val >= e64 {
            LocalOutcome::Holds { valuation: diff.val }
        } else {
            LocalOutcome::Insufficient
        };
    }
    if diff.val < 0 {
        return LocalOutcome::Pole { valuation: diff.val };
    }
    if diff.val >= e64 {
        return LocalOutcome::Holds { valuation: diff.val };
    }
    LocalOutcome::Fails { valuation: diff.val, residue: ring.residue(diff, e as usize) }
}

pub(crate) fn precision_error(m: &str, prec: usize) -> Error {
    Error::PrecisionCap(format!("factor {m} at precision {prec}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Rational};

    fn ring(n: u64, p: usize) -> LocalRing<Rational> {
        LocalRing::new(Atom::Cyclo(n), p).unwrap()
    }

    #[test]
    fn valuations_of_terms() {
        let r = ring(5, 4);
        // (1 - q^5)^2 / (1 - q^10) has valuation 1 at Phi_5
        let t = Term::one_minus(&int(1), 5).pow(2).unwrap().div(&Term::one_minus(&int(1), 10)).unwrap();
        assert_eq!(r.term(&t).unwrap().val, 1);
        let t = Term::<Rational>::bracket(15).unwrap().pow(-2).unwrap();
        assert_eq!(r.term(&t).unwrap().val, -2);
    }

    #[test]
    fn cancellation_loses_relative_precision() {
        let r = ring(3, 3);
        let x = r.term(&Term::<Rational>::bracket(3).unwrap()).unwrap();
        let one = r.one();
        let y = r.add(&one, &x).unwrap();
        let z = r.sub(&y, &one).unwrap();
        assert_eq!(z.val, 1);
        assert_eq!(z.rel, 2);
        assert_eq!(r.sub(&x, &x).unwrap().rel, 0);
    }

    #[test]
    fn binomial_factor_with_symbolic_parameter() {
        use crate::algebra::QFrac;
        let a = QFrac::var();
        let m = Atom::Binom(a.clone(), 3);
        let r = LocalRing::new(m, 3).unwrap();
        // 1 - a^2 q^6 = (1 - a q^3)(1 + a q^3)
        let t = Term::one_minus(&a.mul(&a), 6);
        let v = r.term(&t).unwrap();
        assert_eq!(v.val, 1);
        assert!(matches!(judge(&r, &v, 1), LocalOutcome::Holds { .. }));
        assert!(matches!(judge(&r, &v, 2), LocalOutcome::Fails { .. }));
        let w = r.term(&t.inv().unwrap()).unwrap();
        assert!(matches!(judge(&r, &w, 1), LocalOutcome::Pole { valuation: -1 }));
    }
}
