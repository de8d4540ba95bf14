use super::pochhammer::{poch_ratio, Base};
use super::term::Term;
use crate::algebra::Field;
use crate::error::{Error, Result};

/// Values bound to the parameters `a`, `b`, `c`. When a run is symbolic in
/// `a`, the field is `Q(a)` and `a` is bound to the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params<F> {
    pub a: Option<F>,
    pub b: Option<F>,
    pub c: Option<F>,
}

impl<F: Field> Default for Params<F> {
    fn default() -> Self {
        Params { a: None, b: None, c: None }
    }
}

impl<F: Field> Params<F> {
    pub fn with_a(a: F) -> Self {
        Params { a: Some(a), ..Self::default() }
    }

    pub fn abc(a: F, b: F, c: F) -> Self {
        Params { a: Some(a), b: Some(b), c: Some(c) }
    }

    fn get(&self, v: &Option<F>, name: &str) -> Result<F> {
        v.clone().ok_or_else(|| Error::OutOfDomain(format!("parameter {name} is unbound")))
    }

    pub fn a(&self) -> Result<F> {
        self.get(&self.a, "a")
    }

    pub fn b(&self) -> Result<F> {
        self.get(&self.b, "b")
    }

    pub fn c(&self) -> Result<F> {
        self.get(&self.c, "c")
    }
}

/// The summand families of the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `[4k+1] (q;q^2)_k^4 / (q^2;q^2)_k^4`
    Quartic,
    /// `[4k+1] (q;q^2)_k^6 / (q^2;q^2)_k^6 q^k`
    Sextic,
    /// `[2dk+r] (q^r;q^d)_k^6 / (q^d;q^d)_k^6 q^{(2d-3r)k}`
    SexticD { d: u64, r: u64 },
    /// `[4k+1] (q;q^2)_k^2 (aq, q/a;q^2)_k / ((q^2;q^2)_k^2 (q^2/a, aq^2;q^2)_k)`
    LambdaA,
    /// `[4k+1] (q;q^2)_k^4 (aq, q/a;q^2)_k / ((q^2;q^2)_k^4 (q^2/a, aq^2;q^2)_k) q^k`
    LambdaAq,
    /// `[2dk+r] (q^r;q^d)_k^4 (aq^r, q^r/a;q^d)_k / ((q^d;q^d)_k^4 (q^d/a, aq^d;q^d)_k) q^{(2d-3r)k}`
    LambdaAD { d: u64, r: u64 },
    /// `[4k+1] (aq, q/a, bq, q/b;q^2)_k / (q^2/a, aq^2, q^2/b, bq^2;q^2)_k`
    BetaAB,
    /// `[2dk+r] (aq^r, q^r/a, bq^r, q^r/b, q^r/c, q^r;q^d)_k
    ///  / (q^d/a, aq^d, q^d/b, bq^d, cq^d, q^d;q^d)_k (c q^{2d-3r})^k`
    BetaABC { d: u64, r: u64 },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Quartic => "quartic".into(),
            Family::Sextic => "sextic".into(),
            Family::SexticD { d, r } => format!("sextic(d={d},r={r})"),
            Family::LambdaA => "lambda(a)".into(),
            Family::LambdaAq => "lambda(a)q^k".into(),
            Family::LambdaAD { d, r } => format!("lambda(a,d={d},r={r})"),
            Family::BetaAB => "beta(a,b)".into(),
            Family::BetaABC { d, r } => format!("beta(a,b,c,d={d},r={r})"),
        }
    }

    /// Parameters the family reads.
    pub fn needs(&self) -> &'static str {
        match self {
            Family::Quartic | Family::Sextic | Family::SexticD { .. } => "",
            Family::LambdaA | Family::LambdaAq | Family::LambdaAD { .. } => "a",
            Family::BetaAB => "ab",
            Family::BetaABC { .. } => "abc",
        }
    }

    fn dr(&self) -> (u64, u64) {
        match *self {
            Family::SexticD { d, r } | Family::LambdaAD { d, r } | Family::BetaABC { d, r } => (d, r),
            _ => (2, 1),
        }
    }
}

fn q<F: Field>(j: i64) -> Base<F> {
    (F::one(), j)
}

/// Shared shape `[2dk+r] * ratio * (c q^{2d-3r})^k` behind every family.
fn nw_term<F: Field>(num: &[Base<F>], den: &[Base<F>], d: u64, r: u64, c: &F, k: u64) -> Result<Term<F>> {
    let (di, ri, ki) = (d as i64, r as i64, k as i64);
    let ratio = poch_ratio(num, den, di, k)?;
    let z = Term::scalar(c.powi(ki)?).mul(&Term::q_pow((2 * di - 3 * ri) * ki));
    Ok(Term::bracket(2 * d * k + r)?.mul(&ratio).mul(&z))
}

/// `theta(k)` for a family and parameter binding.
pub fn family_term<F: Field>(family: Family, params: &Params<F>, k: u64) -> Result<Term<F>> {
    let (d, r) = family.dr();
    let (di, ri) = (d as i64, r as i64);
    let one = F::one();
    let qr: Base<F> = q(ri);
    let qd: Base<F> = q(di);
    match family {
        Family::Quartic => nw_term(&vec![qr; 4], &vec![qd; 4], 2, 1, &one, k)
            .map(|t| t.mul(&Term::q_pow(-(k as i64)))),
        Family::Sextic | Family::SexticD { .. } => nw_term(&vec![qr; 6], &vec![qd; 6], d, r, &one, k),
        Family::LambdaA | Family::LambdaAq | Family::LambdaAD { .. } => {
            let a = params.a()?;
            let ai = a.inv().ok_or(Error::DivisionByZero)?;
            let mut num = vec![(a.clone(), ri), (ai.clone(), ri)];
            let mut den = vec![(ai, di), (a, di)];
            let power = if family == Family::LambdaA { 2 } else { 4 };
            num.extend(std::iter::repeat(qr).take(power));
            den.extend(std::iter::repeat(qd).take(power));
            let t = nw_term(&num, &den, d, r, &one, k)?;
            Ok(if family == Family::LambdaA { t.mul(&Term::q_pow(-(k as i64))) } else { t })
        }
        Family::BetaAB => {
            let (a, b) = (params.a()?, params.b()?);
            let ai = a.inv().ok_or(Error::DivisionByZero)?;
            let bi = b.inv().ok_or(Error::DivisionByZero)?;
            let num = [(a.clone(), 1), (ai.clone(), 1), (b.clone(), 1), (bi.clone(), 1)];
            let den = [(ai, 2), (a, 2), (bi, 2), (b, 2)];
            nw_term(&num, &den, 2, 1, &one, k).map(|t| t.mul(&Term::q_pow(-(k as i64))))
        }
        Family::BetaABC { .. } => {
            let (a, b, c) = (params.a()?, params.b()?, params.c()?);
            let ai = a.inv().ok_or(Error::DivisionByZero)?;
            let bi = b.inv().ok_or(Error::DivisionByZero)?;
            let ci = c.inv().ok_or(Error::DivisionByZero)?;
            let num = [(a.clone(), ri), (ai.clone(), ri), (b.clone(), ri), (bi.clone(), ri), (ci, ri), qr];
            let den = [(ai, di), (a, di), (bi, di), (b, di), (c.clone(), di), qd];
            nw_term(&num, &den, d, r, &c, k)
        }
    }
}

/// A summand family bound to an instance: `n`, the parameters, and the
/// admissible range `0..=n-1` of `k`.
#[derive(Clone, Debug)]
pub struct SummandInstance<F> {
    pub family: Family,
    pub n: u64,
    pub params: Params<F>,
}

impl<F: Field> SummandInstance<F> {
    pub fn new(family: Family, n: u64, params: Params<F>) -> Self {
        SummandInstance { family, n, params }
    }

    pub fn max_k(&self) -> u64 {
        self.n.saturating_sub(1)
    }

    pub fn term(&self, k: u64) -> Result<Term<F>> {
        if k > self.max_k() {
            return Err(Error::OutOfRange { k, max: self.max_k() });
        }
        family_term(self.family, &self.params, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, Poly, QFrac, Rational};
    use crate::qseries::backend::{Backend, Exact};
    use crate::qseries::pochhammer::poch;

    fn ex(t: &Term<Rational>) -> QFrac {
        Exact::new().term(t).unwrap()
    }

    fn inst(f: Family, n: u64) -> SummandInstance<Rational> {
        SummandInstance::new(f, n, Params::default())
    }

    #[test]
    fn quartic_unrolled() {
        let s = inst(Family::Quartic, 3);
        assert_eq!(ex(&s.term(0).unwrap()), QFrac::one());
        let five = QFrac::from_poly(Poly::from_i64s(&[1, 1, 1, 1, 1]));
        let expect = five
            .mul(&QFrac::from_poly(Poly::from_i64s(&[1, -1])).pow(4))
            .div(&QFrac::from_poly(Poly::from_i64s(&[1, 0, -1])).pow(4))
            .unwrap();
        assert_eq!(ex(&s.term(1).unwrap()), expect);
        assert!(matches!(s.term(3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn sextic_d_unrolled() {
        let s = inst(Family::SexticD { d: 3, r: 1 }, 7);
        let seven = QFrac::from_poly(crate::algebra::q_integer(7).unwrap());
        let expect = seven
            .mul(&QFrac::from_poly(Poly::from_i64s(&[1, -1])).pow(6))
            .div(&QFrac::from_poly(Poly::from_i64s(&[1, 0, 0, -1])).pow(6))
            .unwrap()
            .mul(&QFrac::var_pow(3));
        assert_eq!(ex(&s.term(1).unwrap()), expect);
    }

    #[test]
    fn specializations_agree() {
        // lambda families are the b = c = 1 cases of the general beta
        let a = rat(5, 3);
        let p = Params::abc(a.clone(), int(1), int(1));
        for k in 0..5 {
            let g = family_term(Family::BetaABC { d: 2, r: 1 }, &p, k).unwrap();
            let l = family_term(Family::LambdaAq, &p, k).unwrap();
            assert_eq!(ex(&g), ex(&l));
            let g = family_term(Family::BetaAB, &p, k).unwrap();
            let l = family_term(Family::LambdaA, &p, k).unwrap();
            assert_eq!(ex(&g), ex(&l));
            let g = family_term(Family::BetaABC { d: 3, r: 2 }, &Params::abc(int(1), int(1), int(1)), k).unwrap();
            let l = family_term(Family::SexticD { d: 3, r: 2 }, &p, k).unwrap();
            assert_eq!(ex(&g), ex(&l));
            let g = family_term(Family::LambdaA, &Params::with_a(int(1)), k).unwrap();
            assert_eq!(ex(&g), ex(&family_term(Family::Quartic, &p, k).unwrap()));
        }
    }

    #[test]
    fn beta_matches_direct_products() {
        let (a, b, c) = (rat(2, 5), rat(-7, 3), rat(4, 11));
        let p = Params::abc(a.clone(), b.clone(), c.clone());
        let k = 2;
        let t = family_term(Family::BetaABC { d: 2, r: 1 }, &p, k).unwrap();
        let num = [
            poch(&(a.clone(), 1), 2, k),
            poch(&(a.recip(), 1), 2, k),
            poch(&(b.clone(), 1), 2, k),
            poch(&(b.recip(), 1), 2, k),
            poch(&(c.recip(), 1), 2, k),
            poch(&(int(1), 1), 2, k),
        ];
        let den = [
            poch(&(a.recip(), 2), 2, k),
            poch(&(a.clone(), 2), 2, k),
            poch(&(b.recip(), 2), 2, k),
            poch(&(b.clone(), 2), 2, k),
            poch(&(c.clone(), 2), 2, k),
            poch(&(int(1), 2), 2, k),
        ];
        let mut v = QFrac::from_poly(crate::algebra::q_integer(9).unwrap());
        for x in &num {
            v = v.mul(&ex(x));
        }
        for x in &den {
            v = v.div(&ex(x)).unwrap();
        }
        v = v.mul(&QFrac::var_pow(2).scale(&(c.clone() * c)));
        assert_eq!(ex(&t), v);
    }
}
