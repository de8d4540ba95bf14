use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::algebra::cyclotomic::divisors;
use crate::algebra::{Field, Poly, Rational};
use crate::error::{Error, Result};
use crate::qseries::{Atom, Params, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ParamKind {
    /// `1 - a q^n`
    OneMinusA,
    /// `a - q^n`
    AMinus,
    /// `1 - b q^n`
    OneMinusB,
    /// `b - q^n`
    BMinus,
    /// `c - q^n`
    CMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ModFactor {
    /// `[n]`
    Bracket,
    /// `Phi_n(q)^e`
    Cyclotomic(u32),
    Param(ParamKind),
}

/// A product of factors, all taken at the instance's `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModulusSpec {
    pub factors: Vec<ModFactor>,
}

impl ModulusSpec {
    pub fn new(factors: &[ModFactor]) -> Self {
        ModulusSpec { factors: factors.to_vec() }
    }

    /// `[n] Phi_n^e`
    pub fn bracket_phi(e: u32) -> Self {
        Self::new(&[ModFactor::Bracket, ModFactor::Cyclotomic(e)])
    }

    /// `Phi_n^e`
    pub fn phi(e: u32) -> Self {
        Self::new(&[ModFactor::Cyclotomic(e)])
    }

    /// Appends `(1 - a q^n)(a - q^n)`.
    pub fn with_a(mut self) -> Self {
        self.factors.extend([ModFactor::Param(ParamKind::OneMinusA), ModFactor::Param(ParamKind::AMinus)]);
        self
    }

    /// Appends `(1 - b q^n)(b - q^n)`.
    pub fn with_b(mut self) -> Self {
        self.factors.extend([ModFactor::Param(ParamKind::OneMinusB), ModFactor::Param(ParamKind::BMinus)]);
        self
    }

    /// Appends `c - q^n`.
    pub fn with_c(mut self) -> Self {
        self.factors.push(ModFactor::Param(ParamKind::CMinus));
        self
    }

    /// The modulus as a factored term (coefficient dropped).
    pub fn term<F: Field>(&self, n: u64, params: &Params<F>) -> Result<Term<F>> {
        if self.factors.is_empty() {
            return Err(Error::EmptyModulus);
        }
        let ni = n as i64;
        let mut t = Term::one();
        for f in &self.factors {
            let x = match f {
                ModFactor::Bracket => Term::bracket(n)?,
                ModFactor::Cyclotomic(e) => Term::atom(Atom::Cyclo(n), *e as i64),
                ModFactor::Param(k) => match k {
                    ParamKind::OneMinusA => Term::one_minus(&params.a()?, ni),
                    ParamKind::OneMinusB => Term::one_minus(&params.b()?, ni),
                    ParamKind::AMinus => Term::binomial(&params.a()?, &F::from_i64(-1), ni),
                    ParamKind::BMinus => Term::binomial(&params.b()?, &F::from_i64(-1), ni),
                    ParamKind::CMinus => Term::binomial(&params.c()?, &F::from_i64(-1), ni),
                },
            };
            if x.is_zero() {
                return Err(Error::OutOfDomain("modulus factor vanishes".into()));
            }
            t = t.mul(&x);
        }
        Ok(t)
    }

    /// Pairwise coprime irreducible factors with multiplicities.
    pub fn local_factors<F: Field>(&self, n: u64, params: &Params<F>) -> Result<Vec<(Atom<F>, u32)>> {
        let t = self.term(n, params)?;
        let mut out = Vec::new();
        for (a, e) in t.atoms() {
            if *e < 0 {
                return Err(Error::OutOfDomain("modulus has a denominator".into()));
            }
            if let Atom::Binom(c, j) = a {
                if !binomial_irreducible(c, *j) {
                    return Err(Error::OutOfDomain(format!("modulus factor 1 - ({c}) q^{j} is reducible")));
                }
            }
            out.push((a.clone(), *e as u32));
        }
        out.sort_by_key(|(a, _)| factor_key(a));
        Ok(out)
    }
}

fn factor_key<F: Field>(a: &Atom<F>) -> (u8, u64, String) {
    match a {
        Atom::Cyclo(d) => (0, *d, String::new()),
        Atom::Binom(c, j) => (1, *j, c.to_string()),
    }
}

impl fmt::Display for ModulusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match x {
                ModFactor::Bracket => "[n]".to_string(),
                ModFactor::Cyclotomic(1) => "Phi_n".to_string(),
                ModFactor::Cyclotomic(e) => format!("Phi_n^{e}"),
                ModFactor::Param(ParamKind::OneMinusA) => "(1-aq^n)".into(),
                ModFactor::Param(ParamKind::AMinus) => "(a-q^n)".into(),
                ModFactor::Param(ParamKind::OneMinusB) => "(1-bq^n)".into(),
                ModFactor::Param(ParamKind::BMinus) => "(b-q^n)".into(),
                ModFactor::Param(ParamKind::CMinus) => "(c-q^n)".into(),
            })
            .collect();
        write!(f, "{}", parts.join(""))
    }
}

/// Expanded modulus over the bound field, with its leading constant kept.
pub fn build_modulus<F: Field>(spec: &ModulusSpec, n: u64, params: &Params<F>) -> Result<Poly<F>> {
    let t = spec.term(n, params)?;
    let mut p = Poly::one();
    for (a, e) in t.atoms() {
        p = p.mul(&a.poly().pow(*e as u32));
    }
    let k = t.qpow();
    Ok(p.shift(k.max(0) as usize).scale(t.coeff()))
}

fn perfect_power(x: &BigInt) -> bool {
    let x = x.abs();
    if x <= BigInt::from(1) {
        return true;
    }
    let bits = x.bits() as u32;
    (2..=bits).any(|k| {
        let r = x.nth_root(k);
        r.pow(k) == x
    })
}

/// `1 - c q^j` is irreducible over Q exactly when `c` is not a `p`-th power
/// for a prime `p | j` and not of the form `-4t^4` when `4 | j`. A
/// non-constant `c` (the symbolic `a`) always gives an irreducible factor.
pub fn binomial_irreducible<F: Field>(c: &F, j: u64) -> bool {
    let Some(c) = c.as_rational() else { return true };
    if j == 1 {
        return true;
    }
    for p in divisors(j).into_iter().filter(|&p| p > 1 && divisors(p).len() == 2) {
        if rational_root(&c, p as u32).is_some() {
            return false;
        }
    }
    if j % 4 == 0 {
        let t4 = -c.clone() / Rational::from_integer(4.into());
        if rational_root(&t4, 4).is_some() {
            return false;
        }
    }
    true
}

fn rational_root(c: &Rational, k: u32) -> Option<Rational> {
    if c.is_negative() && k % 2 == 0 {
        return None;
    }
    let root = |x: &BigInt| {
        let r = x.abs().nth_root(k);
        (r.pow(k) == x.abs()).then_some(r)
    };
    let n = root(c.numer())?;
    let d = root(c.denom())?;
    let n = if c.is_negative() { -n } else { n };
    Some(Rational::new(n, d))
}

/// Sampled parameter values must keep every binomial modulus factor
/// irreducible; perfect powers are excluded outright.
pub fn admissible_sample(c: &Rational) -> bool {
    let small = |x: &BigInt| x.to_i64().map(|v| v.abs() <= 13).unwrap_or(false);
    if c.numer().abs() <= BigInt::from(1) && c.denom() == &BigInt::from(1) {
        return false;
    }
    small(c.numer()) && small(c.denom()) && !(perfect_power(c.numer()) && perfect_power(c.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclotomic, int, q_integer, rat};

    #[test]
    fn expansions() {
        let p = Params::<Rational>::default();
        let m = build_modulus(&ModulusSpec::bracket_phi(1), 3, &p).unwrap();
        assert_eq!(m, cyclotomic(3).unwrap().pow(2));
        let m = build_modulus(&ModulusSpec::new(&[ModFactor::Bracket]), 1, &p).unwrap();
        assert!(m.is_one());
        let m = build_modulus(&ModulusSpec::bracket_phi(3), 5, &p).unwrap();
        assert_eq!(m.degree(), Some(16));
        assert_eq!(m, q_integer(5).unwrap().mul(&cyclotomic(5).unwrap().pow(3)));
        assert!(build_modulus(&ModulusSpec::new(&[]), 3, &p).is_err());
    }

    #[test]
    fn local_factors_merge() {
        let p = Params::with_a(rat(2, 3));
        let f = ModulusSpec::bracket_phi(4).with_a().local_factors(9, &p).unwrap();
        let names: Vec<_> = f.iter().map(|(a, e)| (factor_key(a), *e)).collect();
        assert_eq!(names[0], ((0, 3, String::new()), 1));
        assert_eq!(names[1], ((0, 9, String::new()), 5));
        assert_eq!(f.len(), 4);
    }

    #[test]
    fn parametric_expansion_matches_direct() {
        let a = rat(-5, 2);
        let p = Params::with_a(a.clone());
        let m = build_modulus(&ModulusSpec::phi(1).with_a(), 3, &p).unwrap();
        let one_minus = Poly::from_coeffs(vec![int(1), int(0), int(0), -a.clone()]);
        let a_minus = Poly::from_coeffs(vec![a.clone(), int(0), int(0), int(-1)]);
        assert_eq!(m, cyclotomic(3).unwrap().mul(&one_minus).mul(&a_minus));
    }

    #[test]
    fn capelli() {
        assert!(binomial_irreducible(&rat(3, 2), 6));
        assert!(!binomial_irreducible(&int(4), 2));
        assert!(!binomial_irreducible(&int(-8), 3));
        assert!(binomial_irreducible(&int(-8), 2));
        assert!(!binomial_irreducible(&int(-4), 4));
        assert!(!admissible_sample(&rat(4, 9)));
        assert!(admissible_sample(&rat(4, 7)));
        assert!(!admissible_sample(&int(-1)));
    }
}
