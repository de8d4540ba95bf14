use crate::algebra::cyclotomic::{cyclotomic_in, divisors};
use crate::algebra::{Field, Poly};
use crate::error::{Error, Result};

/// An irreducible-looking building block of a factored term, always
/// normalized to constant coefficient 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Atom<F> {
    /// `Phi_d(q)`; `d = 1` stands for `1 - q`.
    Cyclo(u64),
    /// `1 - c q^j` with `c` not in `{0, 1, -1}` and `j >= 1`.
    Binom(F, u64),
}

impl<F: Field> Atom<F> {
    pub fn poly(&self) -> Poly<F> {
        match self {
            Atom::Cyclo(1) => Poly::from_i64s(&[1, -1]),
            Atom::Cyclo(d) => cyclotomic_in(*d).expect("d >= 1"),
            Atom::Binom(c, j) => Poly::one().sub(&Poly::monomial(c.clone(), *j as usize)),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Atom::Cyclo(d) => crate::algebra::cyclotomic::euler_phi(*d) as usize,
            Atom::Binom(_, j) => *j as usize,
        }
    }
}

/// `coeff * q^qpow * prod atom^exp`, the shape of every summand and
/// closed-form factor in the catalog. A zero coefficient means the term is 0.
#[derive(Clone, Debug)]
pub struct Term<F> {
    coeff: F,
    qpow: i64,
    atoms: Vec<(Atom<F>, i64)>,
}

impl<F: Field> PartialEq for Term<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeff == other.coeff
            && self.qpow == other.qpow
            && self.atoms.len() == other.atoms.len()
            && self.atoms.iter().all(|x| other.atoms.contains(x))
    }
}

impl<F: Field> Eq for Term<F> {}

impl<F: Field> Term<F> {
    pub fn one() -> Self {
        Self::scalar(F::one())
    }

    pub fn zero() -> Self {
        Self::scalar(F::zero())
    }

    pub fn scalar(c: F) -> Self {
        Term { coeff: c, qpow: 0, atoms: Vec::new() }
    }

    pub fn int(v: i64) -> Self {
        Self::scalar(F::from_i64(v))
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Term { coeff: F::one(), qpow: k, atoms: Vec::new() }
    }

    pub fn atom(a: Atom<F>, e: i64) -> Self {
        let mut t = Self::one();
        t.push_atom(a, e);
        t
    }

    pub fn coeff(&self) -> &F {
        &self.coeff
    }

    pub fn qpow(&self) -> i64 {
        self.qpow
    }

    pub fn atoms(&self) -> &[(Atom<F>, i64)] {
        &self.atoms
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    fn push_atom(&mut self, a: Atom<F>, e: i64) {
        if e == 0 {
            return;
        }
        if let Some(pos) = self.atoms.iter().position(|(x, _)| *x == a) {
            self.atoms[pos].1 += e;
            if self.atoms[pos].1 == 0 {
                self.atoms.swap_remove(pos);
            }
        } else {
            self.atoms.push((a, e));
        }
    }

    /// `1 - c q^j` for any integer `j`.
    pub fn one_minus(c: &F, j: i64) -> Self {
        if c.is_zero() {
            return Self::one();
        }
        if j == 0 {
            return Self::scalar(F::one().sub(c));
        }
        if j > 0 {
            return Self::one_minus_positive(c, j as u64);
        }
        // 1 - c q^{-k} = -c q^{-k} (1 - c^{-1} q^k)
        let cinv = c.inv().expect("nonzero");
        let mut t = Self::one_minus_positive(&cinv, j.unsigned_abs());
        t.coeff = t.coeff.mul(&c.neg());
        t.qpow += j;
        t
    }

    fn one_minus_positive(c: &F, j: u64) -> Self {
        let mut t = Self::one();
        if c.is_one() {
            for d in divisors(j) {
                t.push_atom(Atom::Cyclo(d), 1);
            }
        } else if c.neg().is_one() {
            // 1 + q^j = (1 - q^{2j}) / (1 - q^j)
            for d in divisors(2 * j) {
                if j % d != 0 {
                    t.push_atom(Atom::Cyclo(d), 1);
                }
            }
        } else {
            t.push_atom(Atom::Binom(c.clone(), j), 1);
        }
        t
    }

    /// `c0 + c1 q^j`.
    pub fn binomial(c0: &F, c1: &F, j: i64) -> Self {
        if c0.is_zero() {
            let mut t = Self::scalar(c1.clone());
            t.qpow = j;
            return t;
        }
        let c = c1.neg().mul(&c0.inv().expect("nonzero"));
        let mut t = Self::one_minus(&c, j);
        t.coeff = t.coeff.mul(c0);
        t
    }

    /// The q-integer `[r]` for `r >= 1`.
    pub fn bracket(r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::OutOfDomain("q-integer index must be positive".into()));
        }
        let mut t = Self::one();
        for d in divisors(r) {
            if d > 1 {
                t.push_atom(Atom::Cyclo(d), 1);
            }
        }
        Ok(t)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut t = self.clone();
        t.coeff = t.coeff.mul(&other.coeff);
        t.qpow += other.qpow;
        for (a, e) in &other.atoms {
            t.push_atom(a.clone(), *e);
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        self.mul(&Self::scalar(c.clone()))
    }

    pub fn inv(&self) -> Result<Self> {
        let coeff = self.coeff.inv().ok_or(Error::DivisionByZero)?;
        Ok(Term {
            coeff,
            qpow: -self.qpow,
            atoms: self.atoms.iter().map(|(a, e)| (a.clone(), -e)).collect(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if self.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        Ok(Term {
            coeff: self.coeff.pow(e as u32),
            qpow: self.qpow * e,
            atoms: self.atoms.iter().map(|(a, x)| (a.clone(), x * e)).collect(),
        })
    }

    pub fn product<'a>(terms: impl IntoIterator<Item = &'a Self>) -> Self
    where
        F: 'a,
    {
        terms.into_iter().fold(Self::one(), |acc, t| acc.mul(t))
    }
}

/// `c * a^e * q^j`, a base of a q-shifted factorial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMonomial<F> {
    pub coeff: F,
    pub a_exponent: i32,
    pub q_exponent: i64,
}

impl<F: Field> QMonomial<F> {
    pub fn new(coeff: F, a_exponent: i32, q_exponent: i64) -> Self {
        QMonomial { coeff, a_exponent, q_exponent }
    }

    /// `c * q^j` with no symbolic parameter.
    pub fn cq(coeff: F, q_exponent: i64) -> Self {
        Self::new(coeff, 0, q_exponent)
    }

    /// `q^j`.
    pub fn q(q_exponent: i64) -> Self {
        Self::new(F::one(), 0, q_exponent)
    }

    /// The coefficient `c * a^e` in the field, given a value for `a`.
    pub fn resolve(&self, a: Option<&F>) -> Result<(F, i64)> {
        if self.a_exponent == 0 {
            return Ok((self.coeff.clone(), self.q_exponent));
        }
        let a = a.ok_or_else(|| Error::OutOfDomain("parameter a is unbound".into()))?;
        Ok((self.coeff.mul(&a.powi(self.a_exponent as i64)?), self.q_exponent))
    }

    pub fn to_term(&self, a: Option<&F>) -> Result<Term<F>> {
        let (c, j) = self.resolve(a)?;
        let mut t = Term::scalar(c);
        if !t.is_zero() {
            t.qpow = j;
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Rational};

    fn expand(t: &Term<Rational>) -> crate::algebra::QFrac {
        use crate::qseries::backend::{Backend, Exact};
        Exact::<Rational>::new().term(t).unwrap()
    }

    #[test]
    fn one_minus_forms() {
        let q = crate::algebra::QFrac::var();
        let one = crate::algebra::QFrac::one();
        let c = rat(3, 2);
        let direct = |c: &Rational, j: i64| one.sub(&crate::algebra::QFrac::var_pow(j).scale(c));
        for j in [-3i64, -1, 0, 1, 4, 6] {
            for c in [c.clone(), int(1), int(-1), int(0), rat(-2, 5)] {
                assert_eq!(expand(&Term::one_minus(&c, j)), direct(&c, j), "c = {c}, j = {j}");
            }
        }
        assert_eq!(expand(&Term::binomial(&int(2), &int(-1), 3)), one.scale(&int(2)).sub(&q.pow(3)));
    }

    #[test]
    fn cyclotomic_splitting_cancels() {
        // (1 - q^6) / (1 - q^3) = 1 + q^3
        let t = Term::<Rational>::one_minus(&int(1), 6).div(&Term::one_minus(&int(1), 3)).unwrap();
        assert_eq!(t, Term::one_minus(&int(-1), 3));
        assert_eq!(t.atoms().len(), 2);
    }

    #[test]
    fn bracket_is_q_integer() {
        let t = Term::<Rational>::bracket(6).unwrap();
        assert_eq!(
            expand(&t),
            crate::algebra::QFrac::from_poly(crate::algebra::q_integer(6).unwrap())
        );
        assert!(Term::<Rational>::bracket(0).is_err());
    }
}
