//! Cross-check of the folded m-fold sum against brute-force enumeration.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::catalog::FAMILY_GRID;
use crate::algebra::{Field, Poly, Rational};
use crate::congruence::sample_params;
use crate::error::{Error, Result};
use crate::qseries::{nested_sum, Atom, Backend, Family, SummandInstance, Term, TermTable};

/// Largest truncation the oracle is run at.
pub const ORACLE_BOUND: u64 = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub family: String,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub params: String,
    pub m: usize,
    pub bound: u64,
    pub agree: bool,
}

/// Exact values `P / D^k` over one fixed denominator `D`, the least
/// common multiple of the denominators of a set of terms. Sums and products
/// of such values never need a gcd.
struct Scaled<F: Field> {
    /// Exponent of each atom in `D`, and the power of `q`.
    den: HashMap<Atom<F>, i64>,
    qpow: i64,
    d: Poly<F>,
    powers: RefCell<Vec<Poly<F>>>,
}

impl<F: Field> Scaled<F> {
    fn new(terms: &[Term<F>]) -> Self {
        let mut den: HashMap<Atom<F>, i64> = HashMap::new();
        let mut qpow = 0;
        for t in terms.iter().filter(|t| !t.is_zero()) {
            qpow = qpow.max(-t.qpow());
            for (a, e) in t.atoms().iter().filter(|(_, e)| *e < 0) {
                let x = den.entry(a.clone()).or_insert(0);
                *x = (*x).max(-e);
            }
        }
        let mut d = Poly::one().shift(qpow as usize);
        for (a, e) in &den {
            d = d.mul(&a.poly().pow(*e as u32));
        }
        Scaled { den, qpow, d, powers: RefCell::new(vec![Poly::one()]) }
    }

    fn d_pow(&self, k: usize) -> Poly<F> {
        let mut p = self.powers.borrow_mut();
        while p.len() <= k {
            let next = p.last().expect("nonempty").mul(&self.d);
            p.push(next);
        }
        p[k].clone()
    }

    fn lift(&self, x: &(Poly<F>, usize), k: usize) -> Poly<F> {
        x.0.mul(&self.d_pow(k - x.1))
    }

    fn same(&self, x: &(Poly<F>, usize), y: &(Poly<F>, usize)) -> bool {
        let k = x.1.max(y.1);
        self.lift(x, k) == self.lift(y, k)
    }
}

impl<F: Field> Backend<F> for Scaled<F> {
    type V = (Poly<F>, usize);

    fn term(&self, t: &Term<F>) -> Result<Self::V> {
        if t.is_zero() {
            return Ok(self.zero());
        }
        let shift = t.qpow() + self.qpow;
        if shift < 0 {
            return Err(Error::DivisionByZero);
        }
        let mut p = Poly::constant(t.coeff().clone()).shift(shift as usize);
        for (a, e) in t.atoms() {
            let total = e + self.den.get(a).copied().unwrap_or(0);
            if total < 0 {
                return Err(Error::DivisionByZero);
            }
            p = p.mul(&a.poly().pow(total as u32));
        }
        for (a, e) in self.den.iter().filter(|(a, _)| !t.atoms().iter().any(|(b, _)| b == *a)) {
            p = p.mul(&a.poly().pow(*e as u32));
        }
        Ok((p, 1))
    }

    fn add(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        let k = x.1.max(y.1);
        Ok((self.lift(x, k).add(&self.lift(y, k)), k))
    }

    fn mul(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        Ok((x.0.mul(&y.0), x.1 + y.1))
    }

    fn neg(&self, x: &Self::V) -> Self::V {
        (x.0.neg(), x.1)
    }

    fn zero(&self) -> Self::V {
        (Poly::zero(), 0)
    }

    fn one(&self) -> Self::V {
        (Poly::one(), 0)
    }
}

/// Formal sums of factored terms, merged by shape (`q` power and atoms).
/// Two formal sums that agree are equal as rational functions; the
/// converse can fail, which is what [`Scaled`] is kept for.
struct Formal;

type Shapes<F> = HashMap<String, Term<F>>;

fn shape<F: Field>(t: &Term<F>) -> String {
    let mut atoms: Vec<String> = t.atoms().iter().map(|(a, e)| format!("{a:?}^{e}")).collect();
    atoms.sort();
    format!("{}|{}", t.qpow(), atoms.join(","))
}

fn absorb<F: Field>(acc: &mut Shapes<F>, t: Term<F>) {
    if t.is_zero() {
        return;
    }
    let key = shape(&t);
    let merged = match acc.remove(&key) {
        Some(old) => t.scale(&t.coeff().inv().expect("nonzero")).scale(&old.coeff().add(t.coeff())),
        None => t,
    };
    if !merged.is_zero() {
        acc.insert(key, merged);
    }
}

impl<F: Field> Backend<F> for Formal {
    type V = Shapes<F>;

    fn term(&self, t: &Term<F>) -> Result<Self::V> {
        let mut v = HashMap::new();
        absorb(&mut v, t.clone());
        Ok(v)
    }

    fn add(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        let mut v = x.clone();
        for t in y.values() {
            absorb(&mut v, t.clone());
        }
        Ok(v)
    }

    fn mul(&self, x: &Self::V, y: &Self::V) -> Result<Self::V> {
        let mut v = HashMap::new();
        for a in x.values() {
            for b in y.values() {
                absorb(&mut v, a.mul(b));
            }
        }
        Ok(v)
    }

    fn neg(&self, x: &Self::V) -> Self::V {
        x.iter().map(|(k, t)| (k.clone(), t.scale(&F::from_i64(-1)))).collect()
    }

    fn zero(&self) -> Self::V {
        HashMap::new()
    }

    fn one(&self) -> Self::V {
        self.term(&Term::one()).expect("unit")
    }
}

/// Every summand family the catalog uses, with the `(d, r)` pairs of the
/// representative grid.
pub fn catalog_families() -> Vec<Family> {
    let mut dr: Vec<(u64, u64)> = FAMILY_GRID.iter().map(|&(d, _, r, _)| (d, r)).collect();
    dr.sort();
    dr.dedup();
    let mut out = vec![Family::Quartic, Family::Sextic, Family::LambdaA, Family::LambdaAq, Family::BetaAB];
    for &(d, r) in &dr {
        out.extend([Family::SexticD { d, r }, Family::LambdaAD { d, r }, Family::BetaABC { d, r }]);
    }
    out
}

/// Compares [`TermTable::fold_sum`] with [`nested_sum`] for every catalog
/// family, `m` in `{2, 3}` and every truncation `N <= ORACLE_BOUND`.
/// Parameters are drawn from the seeded sampler.
pub fn oracle_suite(seed: u64) -> Result<Vec<OracleRecord>> {
    let mut out = Vec::new();
    for family in catalog_families() {
        let sample = sample_params(seed, 1, family.needs()).remove(0);
        let params = [("a", &sample.params.a), ("b", &sample.params.b), ("c", &sample.params.c)]
            .iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| format!("{k}={v}")))
            .collect::<Vec<_>>()
            .join(",");
        let inst = SummandInstance::new(family, ORACLE_BOUND + 1, sample.params);
        let raw = (0..=ORACLE_BOUND).map(|k| inst.term(k)).collect::<Result<Vec<Term<Rational>>>>()?;
        let formal = raw.iter().map(|t| Formal.term(t)).collect::<Result<Vec<_>>>()?;
        let table = TermTable::new(&Formal, formal.clone())?;
        for m in [2, 3] {
            for bound in 0..=ORACLE_BOUND as usize {
                let agree = table.fold_sum(&Formal, m, bound)? == nested_sum(&Formal, &formal, m, bound)?
                    || scaled_agree(&raw, m, bound)?;
                out.push(OracleRecord { family: family.name(), params: params.clone(), m, bound: bound as u64, agree });
            }
        }
    }
    Ok(out)
}

/// The full comparison over a common denominator.
fn scaled_agree<F: Field>(raw: &[Term<F>], m: usize, bound: usize) -> Result<bool> {
    let b = Scaled::new(raw);
    let terms = raw.iter().map(|t| b.term(t)).collect::<Result<Vec<_>>>()?;
    let table = TermTable::new(&b, terms.clone())?;
    Ok(b.same(&table.fold_sum(&b, m, bound)?, &nested_sum(&b, &terms, m, bound)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::qseries::Exact;

    #[test]
    fn scaled_values_match_rational_functions() {
        let inst = SummandInstance::new(Family::SexticD { d: 3, r: 2 }, 5, Default::default());
        let raw: Vec<Term<Rational>> = (0..5).map(|k| inst.term(k).unwrap()).collect();
        let s = Scaled::new(&raw);
        let e = Exact::<Rational>::new();
        let d = crate::algebra::RatFun::from_poly(s.d.clone());
        let x = s.term(&raw[3]).unwrap();
        let y = s.mul(&x, &s.term(&raw[4]).unwrap()).unwrap();
        let want = e.term(&raw[3]).unwrap().mul(&e.term(&raw[4]).unwrap()).mul(&d.pow(2));
        assert_eq!(crate::algebra::RatFun::from_poly(y.0), want);
    }

    #[test]
    fn formal_sums_merge_and_cancel() {
        let t = Term::<Rational>::atom(Atom::Cyclo(3), 2).mul(&Term::q_pow(1));
        let x = Formal.term(&t).unwrap();
        let two = Formal.add(&x, &x).unwrap();
        assert_eq!(two.len(), 1);
        assert!(Formal.add(&x, &Formal.neg(&x)).unwrap().is_empty());
        let raw = [t.clone(), t.scale(&crate::algebra::int(3))];
        assert!(scaled_agree(&raw, 2, 1).unwrap());
    }

    #[test]
    fn families_cover_the_grid() {
        let f = catalog_families();
        assert!(f.contains(&Family::BetaABC { d: 4, r: 3 }));
        assert_eq!(f.iter().filter(|x| matches!(x, Family::SexticD { .. })).count(), 5);
    }
}
