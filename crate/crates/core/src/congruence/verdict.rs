use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::local::{judge, precision_error, LocalOutcome, LocalRing, LocalVal};
use crate::algebra::{crt_pair, Field, Poly, RatFun};
use crate::error::{Error, Result};
use crate::qseries::{Atom, Backend};

/// Verdict of `lhs = rhs (mod M)`.
///
/// `residue` is the class of `lhs - rhs` in `F[q]/(M)`; it is `None` when
/// the difference has a denominator sharing a factor with `M`, or when a
/// failing factor was not resolved to full precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceVerdict<F> {
    pub holds: bool,
    pub denominator_coprime: bool,
    pub residue: Option<Poly<F>>,
    pub factors: Vec<FactorCheck>,
    pub elapsed: Duration,
}

/// Per-factor outcome: `valuation` is the exact valuation of the difference
/// at the factor (`None` when the difference vanishes identically or is
/// known to exceed `precision`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorCheck {
    pub factor: String,
    pub required: u32,
    pub valuation: Option<i64>,
    pub holds: bool,
}

/// The exact path: reduce `lhs - rhs = N/B`, test `gcd(B, M) = 1` and `M | N`.
pub fn congruent<F: Field>(lhs: &RatFun<F>, rhs: &RatFun<F>, m: &Poly<F>) -> Result<CongruenceVerdict<F>> {
    let start = Instant::now();
    if m.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let d = lhs.sub(rhs);
    let coprime = d.den().is_coprime(m);
    let residue = d.num().rem(m)?;
    let holds = coprime && residue.is_zero();
    Ok(CongruenceVerdict {
        holds,
        denominator_coprime: coprime,
        residue: coprime.then_some(residue),
        factors: Vec::new(),
        elapsed: start.elapsed(),
    })
}

/// `num(x) * den(x)^{-1} mod M`.
pub fn reduce_mod<F: Field>(x: &RatFun<F>, m: &Poly<F>) -> Result<Poly<F>> {
    let inv = x.den().inverse_mod(m).map_err(|_| Error::NotCoprime {
        witness: x.den().gcd(m).to_string(),
    })?;
    Ok(x.num().mul_mod(&inv, m))
}

/// Something that can produce both sides of a congruence in any backend.
pub trait Sides<F: Field> {
    fn eval<B: Backend<F>>(&self, backend: &B) -> Result<(B::V, B::V)>;
}

/// Largest relative precision tried before giving up.
pub const PRECISION_CAP: usize = 96;

pub fn atom_label<F: Field>(a: &Atom<F>) -> String {
    match a {
        Atom::Cyclo(1) => "(1-q)".into(),
        Atom::Cyclo(d) => format!("Phi_{d}"),
        Atom::Binom(c, j) => format!("(1-({c})q^{j})"),
    }
}

/// A local ring at one modulus factor that can judge a difference.
pub trait FactorRing<F: Field>: Backend<F> {
    fn judge_diff(&self, d: &Self::V, e: u32) -> LocalOutcome<F>;
    /// `m^e`, when residues from this ring can be combined by CRT.
    fn residue_modulus(&self, e: usize) -> Option<Poly<F>>;
}

impl<F: Field> FactorRing<F> for LocalRing<F> {
    fn judge_diff(&self, d: &LocalVal<F>, e: u32) -> LocalOutcome<F> {
        judge(self, d, e)
    }

    fn residue_modulus(&self, e: usize) -> Option<Poly<F>> {
        Some(self.modulus_power(e).clone())
    }
}

/// Decides one factor, doubling the precision of rings built by `make`
/// until the difference is resolved.
pub fn check_factor<F, S, R, M>(sides: &S, label: &str, e: u32, make: M) -> Result<(LocalOutcome<F>, Option<Poly<F>>)>
where
    F: Field,
    S: Sides<F>,
    R: FactorRing<F>,
    M: Fn(usize) -> Result<R>,
{
    let mut prec = e as usize + 2;
    loop {
        let ring = make(prec)?;
        let (l, r) = sides.eval(&ring)?;
        let d = ring.sub(&l, &r)?;
        match ring.judge_diff(&d, e) {
            LocalOutcome::Insufficient if prec * 2 <= PRECISION_CAP => prec *= 2,
            LocalOutcome::Insufficient => return Err(precision_error(label, prec)),
            o => return Ok((o, ring.residue_modulus(e as usize))),
        }
    }
}

/// Checks `lhs = rhs` modulo `prod m_i^{e_i}` one factor at a time in the
/// local rings `F[q]/(m_i^P)`, raising `P` until each factor is decided.
pub fn verify_local<F: Field, S: Sides<F>>(sides: &S, factors: &[(Atom<F>, u32)]) -> Result<CongruenceVerdict<F>> {
    verify_factors(factors, |atom, e| {
        check_factor(sides, &atom_label(atom), e, |prec| LocalRing::new(atom.clone(), prec))
    })
}

/// Runs `check` on every factor and combines the outcomes.
pub fn verify_factors<F, C>(factors: &[(Atom<F>, u32)], check: C) -> Result<CongruenceVerdict<F>>
where
    F: Field,
    C: Fn(&Atom<F>, u32) -> Result<(LocalOutcome<F>, Option<Poly<F>>)>,
{
    let start = Instant::now();
    let mut checks = Vec::new();
    let mut coprime = true;
    let mut residues: Vec<Option<(Poly<F>, Poly<F>)>> = Vec::new();
    for (atom, e) in factors {
        let (o, modulus) = check(atom, *e)?;
        let (valuation, holds, res) = match o {
            LocalOutcome::Holds { valuation } => {
                (Some(valuation).filter(|v| *v < i64::MAX / 8), true, Some(Poly::zero()))
            }
            LocalOutcome::Fails { valuation, residue } => (Some(valuation), false, residue),
            LocalOutcome::Pole { valuation } => {
                coprime = false;
                (Some(valuation), false, None)
            }
            LocalOutcome::Insufficient => unreachable!(),
        };
        residues.push(res.zip(modulus));
        checks.push(FactorCheck { factor: atom_label(atom), required: *e, valuation, holds });
    }
    let holds = coprime && checks.iter().all(|c| c.holds);
    let residue = if holds {
        Some(Poly::zero())
    } else if residues.iter().all(|r| r.is_some()) {
        let mut acc: Option<(Poly<F>, Poly<F>)> = None;
        for (r, m) in residues.into_iter().flatten() {
            acc = Some(match acc {
                None => (r, m),
                Some((r0, m0)) => (crt_pair(&r0, &m0, &r, &m)?, m0.mul(&m)),
            });
        }
        acc.map(|(r, _)| r)
    } else {
        None
    };
    Ok(CongruenceVerdict { holds, denominator_coprime: coprime, residue, factors: checks, elapsed: start.elapsed() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclotomic, int, QFrac, Rational};

    type P = Poly<Rational>;

    #[test]
    fn exact_examples() {
        let x = QFrac::new(P::from_i64s(&[3, 1]), P::from_i64s(&[1, 0, 2])).unwrap();
        let m = cyclotomic(3).unwrap();
        assert!(congruent(&x, &x, &m).unwrap().holds);
        let pole = QFrac::new(P::one(), P::from_i64s(&[-1, 1])).unwrap();
        let v = congruent(&pole, &QFrac::zero(), &P::from_i64s(&[-1, 1])).unwrap();
        assert!(!v.holds && !v.denominator_coprime);
    }

    #[test]
    fn reduce_mod_examples() {
        let m = cyclotomic(3).unwrap();
        let r = reduce_mod(&QFrac::var_pow(-1), &m).unwrap();
        assert_eq!(P::var().mul_mod(&r, &m), P::one());
        assert_eq!(r, P::from_i64s(&[-1, -1]));
        let small = P::from_i64s(&[4, -2]);
        assert_eq!(reduce_mod(&QFrac::from_poly(small.clone()), &m).unwrap(), small);
        assert!(reduce_mod(&QFrac::from_poly(m.clone()), &m).unwrap().is_zero());
        assert!(reduce_mod(&QFrac::from_poly(m.clone()).inv().unwrap(), &m).is_err());
        let _ = int(0);
    }
}
