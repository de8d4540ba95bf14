//! Local rings for congruences over `Q(a)` with `a` symbolic.
//!
//! Working in `Q(a)[q]/(m^P)` directly drowns in gcds of rational functions
//! in `a`. Two cheaper rings decide the same valuations:
//!
//! * At `Phi_n`, a value is `m^val * (sum_k a^k c_k(q)) * prod A_i^{e_i} / S(a)`
//!   with `c_k` in `Q[q]/(m^rel)`. The factors `A_i` (numerators of
//!   `1 - c(a) q^j`) and `S` are units at `Phi_n` and stay symbolic, so only
//!   the `c_k` carry valuation and nothing in `a` is ever inverted.
//! * At `1 - r a^{+-1} q^n` the roles swap. The same prime of `Q[a, q]` is
//!   linear in `a`, so with `a = alpha(q) + u` the ring is truncated power
//!   series in `u` over `Q(q)`.
//!
//! Both report exact valuations; a failing factor carries no residue.

use std::cell::RefCell;
use std::collections::HashMap;

use super::local::{LocalOutcome, LocalRing, LocalVal, EXACT_ZERO};
use super::verdict::{atom_label, check_factor, verify_factors, CongruenceVerdict, FactorRing, Sides};
use crate::algebra::{Field, Poly, QFrac, Rational};
use crate::error::Result;
use crate::qseries::{Atom, Backend, Term};

type P = Poly<Rational>;

fn judge_parts<F>(exact_zero: bool, val: i64, rel: usize, e: u32) -> LocalOutcome<F> {
    let e = e as i64;
    if exact_zero {
        return LocalOutcome::Holds { valuation: EXACT_ZERO };
    }
    if rel == 0 {
        return if val >= e { LocalOutcome::Holds { valuation: val } } else { LocalOutcome::Insufficient };
    }
    if val < 0 {
        return LocalOutcome::Pole { valuation: val };
    }
    if val >= e {
        return LocalOutcome::Holds { valuation: val };
    }
    LocalOutcome::Fails { valuation: val, residue: None }
}

#[derive(Clone, Debug)]
pub struct SplitVal {
    val: i64,
    rel: usize,
    /// `num[k]` is the coefficient of `a^k`, known modulo `m^rel`.
    num: Vec<P>,
    atoms: Vec<(Atom<QFrac>, i64)>,
    den: P,
}

impl SplitVal {
    fn zero() -> Self {
        SplitVal { val: EXACT_ZERO, rel: 0, num: Vec::new(), atoms: Vec::new(), den: P::one() }
    }

    fn is_exact_zero(&self) -> bool {
        self.val >= EXACT_ZERO
    }

    fn abs_prec(&self) -> i64 {
        if self.is_exact_zero() {
            EXACT_ZERO
        } else {
            self.val + self.rel as i64
        }
    }
}

/// `Q(a)[q]` localized at `Phi_n`, truncated at `Phi_n^P`.
pub struct SplitRing {
    inner: LocalRing<Rational>,
    prec: usize,
    pows: Vec<P>,
    /// `1 - c q^j = A / D` for each parametric atom: `(A, D)`.
    atoms: RefCell<HashMap<Atom<QFrac>, (Vec<P>, P)>>,
}

impl SplitRing {
    pub fn new(n: u64, prec: usize) -> Result<Self> {
        let inner = LocalRing::new(Atom::Cyclo(n), prec)?;
        let pows = (0..=prec).map(|i| inner.modulus_power(i).clone()).collect();
        Ok(SplitRing { inner, prec, pows, atoms: RefCell::new(HashMap::new()) })
    }

    fn reduce(&self, p: &P, rel: usize) -> P {
        p.rem(&self.pows[rel]).expect("nonzero modulus")
    }

    fn atom(&self, a: &Atom<QFrac>) -> (Vec<P>, P) {
        if let Some(x) = self.atoms.borrow().get(a) {
            return x.clone();
        }
        let Atom::Binom(c, j) = a else { unreachable!("only parametric atoms are split") };
        let qj = self.reduce(&P::monomial(Rational::from_integer(1.into()), *j as usize), self.prec);
        let len = c.num().coeffs().len().max(c.den().coeffs().len());
        let num = (0..len)
            .map(|k| P::constant(c.den().coeff(k)).sub(&qj.scale(&c.num().coeff(k))))
            .collect();
        let x = (num, c.den().clone());
        self.atoms.borrow_mut().insert(a.clone(), x.clone());
        x
    }

    fn conv(&self, x: &[P], y: &[P], rel: usize) -> Vec<P> {
        if x.is_empty() || y.is_empty() {
            return Vec::new();
        }
        let m = &self.pows[rel];
        let mut out = vec![P::zero(); x.len() + y.len() - 1];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let p = if a.is_constant() {
                    b.scale(&a.coeff(0))
                } else if b.is_constant() {
                    a.scale(&b.coeff(0))
                } else {
                    a.mul_mod(b, m)
                };
                out[i + j] = out[i + j].add(&p);
            }
        }
        out
    }

    fn scalar(&self, x: &[P], s: &P) -> Vec<P> {
        let s: Vec<P> = s.coeffs().iter().map(|c| P::constant(c.clone())).collect();
        self.conv(x, &s, 0)
    }

    fn atom_pow(&self, x: Vec<P>, a: &Atom<QFrac>, e: i64, rel: usize) -> Vec<P> {
        let (num, _) = self.atom(a);
        let mut x = x;
        for _ in 0..e {
            x = self.conv(&x, &num, rel);
        }
        x
    }

    fn normalize(&self, mut val: i64, mut num: Vec<P>, mut rel: usize, atoms: Vec<(Atom<QFrac>, i64)>, den: P) -> SplitVal {
        let mpoly = &self.pows[1];
        loop {
            while num.last().is_some_and(|c| c.is_zero()) {
                num.pop();
            }
            if num.is_empty() {
                return SplitVal { val: val + rel as i64, rel: 0, num, atoms, den };
            }
            if rel == 0 {
                return SplitVal { val, rel, num: Vec::new(), atoms, den };
            }
            if !num.iter().all(|c| c.rem(mpoly).expect("nonzero").is_zero()) {
                return SplitVal { val, rel, num, atoms, den };
            }
            val += 1;
            rel -= 1;
            num = num.iter().map(|c| self.reduce(&c.exact_div(mpoly).expect("divisible"), rel)).collect();
        }
    }
}

/// Drops a common power of `a` between a numerator and `S`.
fn strip_a(mut num: Vec<P>, den: P) -> (Vec<P>, P) {
    let lead = num.iter().take_while(|c| c.is_zero()).count();
    let dz = den.coeffs().iter().take_while(|c| c.is_zero()).count();
    let k = lead.min(dz);
    if k == 0 {
        return (num, den);
    }
    num.drain(..k);
    (num, P::from_coeffs(den.coeffs()[k..].to_vec()))
}

impl Backend<QFrac> for SplitRing {
    type V = SplitVal;

    fn term(&self, t: &Term<QFrac>) -> Result<SplitVal> {
        if t.is_zero() {
            return Ok(SplitVal::zero());
        }
        let mut qt = Term::<Rational>::q_pow(t.qpow());
        let mut atoms = Vec::new();
        let mut scalar_num = P::one();
        let mut den = t.coeff().den().clone();
        for (a, e) in t.atoms() {
            match a {
                Atom::Cyclo(d) => qt = qt.mul(&Term::atom(Atom::Cyclo(*d), *e)),
                Atom::Binom(c, j) => match c.as_rational() {
                    Some(r) => qt = qt.mul(&Term::atom(Atom::Binom(r, *j), *e)),
                    None => {
                        let (_, d) = self.atom(a);
                        if *e > 0 {
                            den = den.mul(&d.pow(*e as u32));
                        } else {
                            scalar_num = scalar_num.mul(&d.pow(e.unsigned_abs() as u32));
                        }
                        atoms.push((a.clone(), *e));
                    }
                },
            }
        }
        let LocalVal { val, unit, rel } = self.inner.term(&qt)?;
        let scalar = t.coeff().num().mul(&scalar_num);
        let num = self.scalar(&[unit], &scalar);
        let (num, den) = strip_a(num, den);
        Ok(self.normalize(val, num, rel, atoms, den))
    }

    fn add(&self, x: &SplitVal, y: &SplitVal) -> Result<SplitVal> {
        if x.is_exact_zero() {
            return Ok(y.clone());
        }
        if y.is_exact_zero() {
            return Ok(x.clone());
        }
        let v = x.val.min(y.val);
        let abs = x.abs_prec().min(y.abs_prec());
        let mut atoms: Vec<(Atom<QFrac>, i64)> = Vec::new();
        for (a, _) in x.atoms.iter().chain(&y.atoms) {
            if atoms.iter().any(|(b, _)| b == a) {
                continue;
            }
            let ex = x.atoms.iter().find(|(b, _)| b == a).map_or(0, |p| p.1);
            let ey = y.atoms.iter().find(|(b, _)| b == a).map_or(0, |p| p.1);
            atoms.push((a.clone(), ex.min(ey)));
        }
        let g = x.den.gcd(&y.den);
        let den = x.den.mul(&y.den.exact_div(&g).expect("gcd divides"));
        if abs <= v {
            return Ok(SplitVal { val: abs, rel: 0, num: Vec::new(), atoms, den });
        }
        let rel = (abs - v) as usize;
        let lift = |z: &SplitVal, other: &SplitVal| -> Vec<P> {
            let s = (z.val - v) as usize;
            if s >= rel {
                return Vec::new();
            }
            let mut num: Vec<P> = z.num.iter().map(|c| self.reduce(c, rel - s).mul(&self.pows[s])).collect();
            for (a, base) in &atoms {
                let own = z.atoms.iter().find(|(b, _)| b == a).map_or(0, |p| p.1);
                num = self.atom_pow(num, a, own - base, rel);
            }
            let f = other.den.exact_div(&g).expect("gcd divides");
            self.scalar(&num, &f)
        };
        let (a, b) = (lift(x, y), lift(y, x));
        let len = a.len().max(b.len());
        let num = (0..len)
            .map(|k| {
                let s = match (a.get(k), b.get(k)) {
                    (Some(p), Some(q)) => p.add(q),
                    (Some(p), None) | (None, Some(p)) => p.clone(),
                    (None, None) => P::zero(),
                };
                self.reduce(&s, rel)
            })
            .collect();
        atoms.retain(|(_, e)| *e != 0);
        let (num, den) = strip_a(num, den);
        Ok(self.normalize(v, num, rel, atoms, den))
    }

    fn mul(&self, x: &SplitVal, y: &SplitVal) -> Result<SplitVal> {
        if x.is_exact_zero() || y.is_exact_zero() {
            return Ok(SplitVal::zero());
        }
        let rel = x.rel.min(y.rel);
        let mut atoms = x.atoms.clone();
        for (a, e) in &y.atoms {
            match atoms.iter_mut().find(|(b, _)| b == a) {
                Some(p) => p.1 += e,
                None => atoms.push((a.clone(), *e)),
            }
        }
        atoms.retain(|(_, e)| *e != 0);
        let den = x.den.mul(&y.den);
        if rel == 0 {
            return Ok(SplitVal { val: x.val + y.val, rel: 0, num: Vec::new(), atoms, den });
        }
        let xr: Vec<P> = x.num.iter().map(|c| self.reduce(c, rel)).collect();
        let yr: Vec<P> = y.num.iter().map(|c| self.reduce(c, rel)).collect();
        let num = self.conv(&xr, &yr, rel);
        let (num, den) = strip_a(num, den);
        Ok(SplitVal { val: x.val + y.val, rel, num, atoms, den })
    }

    fn neg(&self, x: &SplitVal) -> SplitVal {
        SplitVal { num: x.num.iter().map(|c| c.neg()).collect(), ..x.clone() }
    }

    fn zero(&self) -> SplitVal {
        SplitVal::zero()
    }

    fn one(&self) -> SplitVal {
        SplitVal { val: 0, rel: self.prec, num: vec![P::one()], atoms: Vec::new(), den: P::one() }
    }
}

impl FactorRing<QFrac> for SplitRing {
    fn judge_diff(&self, d: &SplitVal, e: u32) -> LocalOutcome<QFrac> {
        judge_parts(d.is_exact_zero(), d.val, d.rel, e)
    }

    fn residue_modulus(&self, _e: usize) -> Option<Poly<QFrac>> {
        None
    }
}

/// A truncated series in `u` over `Q(q)` kept as numerators over one
/// denominator, so products need no gcds.
#[derive(Clone, Debug)]
struct Frac {
    num: Vec<P>,
    den: P,
}

impl Frac {
    fn constant(c: P, len: usize) -> Self {
        let mut num = vec![P::zero(); len];
        num[0] = c;
        Frac { num, den: P::one() }
    }

    fn mul(&self, other: &Frac, len: usize) -> Frac {
        let num = (0..len)
            .map(|k| {
                let mut s = P::zero();
                for i in 0..=k {
                    let (x, y) = (&self.num[i], &other.num[k - i]);
                    if !x.is_zero() && !y.is_zero() {
                        s = s.add(&x.mul(y));
                    }
                }
                s
            })
            .collect();
        Frac { num, den: self.den.mul(&other.den) }
    }

    /// Inverse of a series with nonzero constant term.
    fn inv(&self) -> Frac {
        let len = self.num.len();
        let x0 = &self.num[0];
        // 1/X = sum_k Y_k u^k / x0^{k+1}
        let mut y = vec![P::one()];
        let mut x0_pows = vec![P::one()];
        for k in 1..len {
            x0_pows.push(x0_pows[k - 1].mul(x0));
            let mut s = P::zero();
            for i in 1..=k {
                if !self.num[i].is_zero() {
                    s = s.add(&self.num[i].mul(&y[k - i]).mul(&x0_pows[i - 1]));
                }
            }
            y.push(s.neg());
        }
        let top = x0_pows[len - 1].mul(x0);
        let num = (0..len).map(|k| y[k].mul(&x0_pows[len - 1 - k]).mul(&self.den)).collect();
        Frac { num, den: top }
    }

    fn scale(&self, c: &QFrac) -> Frac {
        Frac { num: self.num.iter().map(|p| p.mul(c.num())).collect(), den: self.den.mul(c.den()) }
    }
}

#[derive(Clone, Debug)]
pub struct SeriesVal {
    val: i64,
    rel: usize,
    /// Unit part with `rel` coefficients.
    unit: Frac,
}

impl SeriesVal {
    fn zero() -> Self {
        SeriesVal { val: EXACT_ZERO, rel: 0, unit: Frac { num: Vec::new(), den: P::one() } }
    }

    fn is_exact_zero(&self) -> bool {
        self.val >= EXACT_ZERO
    }

    fn abs_prec(&self) -> i64 {
        if self.is_exact_zero() {
            EXACT_ZERO
        } else {
            self.val + self.rel as i64
        }
    }
}

/// `Q(q)[a]` localized at `a = alpha(q)`, truncated at `(a - alpha)^P`.
pub struct SeriesRing {
    alpha: QFrac,
    prec: usize,
    atoms: RefCell<HashMap<Atom<QFrac>, (i64, Frac, Frac)>>,
}

/// The root `alpha(q)` of `1 - c(a) q^n` when `c = r a^{+-1}`.
pub fn linear_root(c: &QFrac, n: u64) -> Option<QFrac> {
    let qn = QFrac::var_pow(n as i64);
    let mono = |p: &P| p.coeffs().len() == 2 && p.coeff(0).is_zero();
    let (num, den) = (c.num(), c.den());
    if mono(num) && den.is_constant() {
        // r a q^n = 1
        let r = num.coeff(1) / den.coeff(0);
        return qn.scale(&r).inv().ok();
    }
    if mono(den) && num.is_constant() {
        // r q^n = a
        let r = num.coeff(0) / den.coeff(1);
        return Some(qn.scale(&r));
    }
    None
}

impl SeriesRing {
    pub fn new(alpha: QFrac, prec: usize) -> Self {
        SeriesRing { alpha, prec, atoms: RefCell::new(HashMap::new()) }
    }

    /// `p(alpha + u)` as an exact polynomial in `u` over `Q(q)`.
    fn subst(&self, p: &P) -> Vec<QFrac> {
        let mut acc: Vec<QFrac> = Vec::new();
        for c in p.coeffs().iter().rev() {
            let mut next = vec![QFrac::zero(); acc.len() + 1];
            for (i, x) in acc.iter().enumerate() {
                next[i] = next[i].add(&x.mul(&self.alpha));
                next[i + 1] = next[i + 1].add(x);
            }
            next[0] = next[0].add(&QFrac::constant(c.clone()));
            acc = next;
        }
        acc
    }

    /// Valuation and unit of an exact polynomial in `u`.
    fn split(&self, mut p: Vec<QFrac>) -> (i64, Frac) {
        let v = p.iter().take_while(|c| c.is_zero()).count();
        assert!(v < p.len(), "zero polynomial");
        p.drain(..v);
        p.resize(self.prec, QFrac::zero());
        let mut den = P::one();
        for c in &p {
            if !c.den().is_one() {
                den = den.mul(&c.den().exact_div(&den.gcd(c.den())).expect("gcd divides"));
            }
        }
        let num = p.iter().map(|c| c.num().mul(&den.exact_div(c.den()).expect("lcm"))).collect();
        (v as i64, Frac { num, den })
    }

    fn frac(&self, num: &P, den: &P, qj: Option<&QFrac>) -> (i64, Frac) {
        // num/den, or 1 - (num/den) q^j = (den - q^j num)/den
        let d = self.subst(den);
        let n = self.subst(num);
        let top = match qj {
            None => n,
            Some(qj) => {
                let len = d.len().max(n.len());
                (0..len)
                    .map(|k| {
                        let a = d.get(k).cloned().unwrap_or_else(QFrac::zero);
                        let b = n.get(k).cloned().unwrap_or_else(QFrac::zero);
                        a.sub(&b.mul(qj))
                    })
                    .collect()
            }
        };
        let (vn, un) = self.split(top);
        let (vd, ud) = self.split(d);
        (vn - vd, un.mul(&ud.inv(), self.prec))
    }

    fn atom(&self, a: &Atom<QFrac>) -> (i64, Frac, Frac) {
        if let Some(x) = self.atoms.borrow().get(a) {
            return x.clone();
        }
        let (v, s) = match a {
            Atom::Cyclo(d) => (0, Frac::constant(Atom::<Rational>::Cyclo(*d).poly(), self.prec)),
            Atom::Binom(c, j) => self.frac(c.num(), c.den(), Some(&QFrac::var_pow(*j as i64))),
        };
        let inv = s.inv();
        let x = (v, s, inv);
        self.atoms.borrow_mut().insert(a.clone(), x.clone());
        x
    }

    fn normalize(&self, mut val: i64, mut unit: Frac) -> SeriesVal {
        let z = unit.num.iter().take_while(|c| c.is_zero()).count();
        let rel = unit.num.len();
        if z == rel {
            return SeriesVal { val: val + rel as i64, rel: 0, unit: Frac { num: Vec::new(), den: P::one() } };
        }
        unit.num.drain(..z);
        val += z as i64;
        // keep the denominator from growing across long sums
        let mut g = unit.den.clone();
        for c in &unit.num {
            if g.is_constant() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_constant() {
            unit.num = unit.num.iter().map(|c| c.exact_div(&g).expect("gcd divides")).collect();
            unit.den = unit.den.exact_div(&g).expect("gcd divides");
        }
        SeriesVal { val, rel: unit.num.len(), unit }
    }
}

impl Backend<QFrac> for SeriesRing {
    type V = SeriesVal;

    fn term(&self, t: &Term<QFrac>) -> Result<SeriesVal> {
        if t.is_zero() {
            return Ok(SeriesVal::zero());
        }
        let (mut val, s) = self.frac(t.coeff().num(), t.coeff().den(), None);
        let mut s = s.scale(&QFrac::var_pow(t.qpow()));
        for (a, e) in t.atoms() {
            let (v, u, inv) = self.atom(a);
            val += v * e;
            let base = if *e < 0 { inv } else { u };
            for _ in 0..e.unsigned_abs() {
                s = s.mul(&base, self.prec);
            }
        }
        Ok(self.normalize(val, s))
    }

    fn add(&self, x: &SeriesVal, y: &SeriesVal) -> Result<SeriesVal> {
        if x.is_exact_zero() {
            return Ok(y.clone());
        }
        if y.is_exact_zero() {
            return Ok(x.clone());
        }
        let v = x.val.min(y.val);
        let abs = x.abs_prec().min(y.abs_prec());
        if abs <= v {
            return Ok(SeriesVal { val: abs, rel: 0, unit: Frac { num: Vec::new(), den: P::one() } });
        }
        let rel = (abs - v) as usize;
        let g = x.unit.den.gcd(&y.unit.den);
        let fx = y.unit.den.exact_div(&g).expect("gcd divides");
        let fy = x.unit.den.exact_div(&g).expect("gcd divides");
        let den = x.unit.den.mul(&fx);
        let mut num = vec![P::zero(); rel];
        for (z, f) in [(x, &fx), (y, &fy)] {
            let s = (z.val - v) as usize;
            for (k, c) in z.unit.num.iter().enumerate() {
                if k + s < rel && !c.is_zero() {
                    num[k + s] = num[k + s].add(&c.mul(f));
                }
            }
        }
        Ok(self.normalize(v, Frac { num, den }))
    }

    fn mul(&self, x: &SeriesVal, y: &SeriesVal) -> Result<SeriesVal> {
        if x.is_exact_zero() || y.is_exact_zero() {
            return Ok(SeriesVal::zero());
        }
        let rel = x.rel.min(y.rel);
        Ok(self.normalize(x.val + y.val, x.unit.mul(&y.unit, rel)))
    }

    fn neg(&self, x: &SeriesVal) -> SeriesVal {
        let unit = Frac { num: x.unit.num.iter().map(|c| c.neg()).collect(), den: x.unit.den.clone() };
        SeriesVal { unit, ..x.clone() }
    }

    fn zero(&self) -> SeriesVal {
        SeriesVal::zero()
    }

    fn one(&self) -> SeriesVal {
        SeriesVal { val: 0, rel: self.prec, unit: Frac::constant(P::one(), self.prec) }
    }
}

impl FactorRing<QFrac> for SeriesRing {
    fn judge_diff(&self, d: &SeriesVal, e: u32) -> LocalOutcome<QFrac> {
        judge_parts(d.is_exact_zero(), d.val, d.rel, e)
    }

    fn residue_modulus(&self, _e: usize) -> Option<Poly<QFrac>> {
        None
    }
}

/// [`verify_local`](super::verify_local) for a symbolic `a`: cyclotomic
/// factors go to [`SplitRing`], factors linear in `a` to [`SeriesRing`],
/// anything else to the generic local ring.
pub fn verify_local_qa<S: Sides<QFrac>>(sides: &S, factors: &[(Atom<QFrac>, u32)]) -> Result<CongruenceVerdict<QFrac>> {
    verify_factors(factors, |atom, e| {
        let label = atom_label(atom);
        match atom {
            Atom::Cyclo(n) => check_factor(sides, &label, e, |prec| SplitRing::new(*n, prec)),
            Atom::Binom(c, j) => match linear_root(c, *j) {
                Some(alpha) => check_factor(sides, &label, e, |prec| Ok(SeriesRing::new(alpha.clone(), prec))),
                None => check_factor(sides, &label, e, |prec| LocalRing::new(atom.clone(), prec)),
            },
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::congruence::verify_local;

    /// `sum(lhs)` against `sum(rhs)`.
    struct Sums(Vec<Term<QFrac>>, Vec<Term<QFrac>>);

    impl Sides<QFrac> for Sums {
        fn eval<B: Backend<QFrac>>(&self, b: &B) -> Result<(B::V, B::V)> {
            let side = |ts: &[Term<QFrac>]| -> Result<B::V> {
                let mut acc = b.zero();
                for t in ts {
                    acc = b.add(&acc, &b.term(t)?)?;
                }
                Ok(acc)
            };
            Ok((side(&self.0)?, side(&self.1)?))
        }
    }

    fn a() -> QFrac {
        QFrac::var()
    }

    fn factors(n: u64) -> Vec<(Atom<QFrac>, u32)> {
        vec![(Atom::Cyclo(n), 2), (Atom::Binom(a(), n), 1), (Atom::Binom(a().inv().unwrap(), n), 1)]
    }

    fn sample(n: u64) -> Sums {
        // [n]^2 (1 - a q^n)(a - q^n) / ((1 - a q)(q/a; q)_2) + (1 - q)/(1 - aq)
        let mut t = Term::<QFrac>::bracket(n).unwrap().pow(2).unwrap();
        t = t.mul(&Term::one_minus(&a(), n as i64)).mul(&Term::binomial(&a(), &QFrac::from_i64(-1), n as i64));
        t = t.div(&Term::one_minus(&a(), 1)).unwrap();
        let ai = a().inv().unwrap();
        t = t.div(&Term::one_minus(&ai, 1).mul(&Term::one_minus(&ai, 2))).unwrap();
        let s = Term::one_minus(&QFrac::one(), 1).div(&Term::one_minus(&a(), 1)).unwrap();
        let s2 = Term::<QFrac>::int(3).mul(&Term::one_minus(&ai, 3)).scale(&a());
        Sums(vec![t, s.clone(), s2.clone()], vec![s, s2])
    }

    #[test]
    fn valuations_match_the_generic_ring() {
        for n in [3, 5] {
            let x = sample(n);
            let fast = verify_local_qa(&x, &factors(n)).unwrap();
            let slow = verify_local(&x, &factors(n)).unwrap();
            assert!(fast.holds && slow.holds);
            let vals = |v: &CongruenceVerdict<QFrac>| v.factors.iter().map(|f| f.valuation).collect::<Vec<_>>();
            assert_eq!(vals(&fast), vals(&slow));
            assert_eq!(vals(&fast), vec![Some(2), Some(1), Some(1)]);
        }
    }

    #[test]
    fn failures_and_poles_are_reported() {
        let n = 5;
        let mut x = sample(n);
        x.1.push(Term::<QFrac>::bracket(n).unwrap().scale(&a()));
        let v = verify_local_qa(&x, &factors(n)).unwrap();
        let slow = verify_local(&x, &factors(n)).unwrap();
        assert!(!v.holds);
        assert_eq!(v.factors, slow.factors);
        assert_eq!(v.factors[0].valuation, Some(1));

        let pole = Sums(vec![Term::one_minus(&a(), n as i64).inv().unwrap()], vec![]);
        let v = verify_local_qa(&pole, &factors(n)).unwrap();
        assert!(!v.denominator_coprime);
        assert_eq!(v.factors[1].valuation, Some(-1));
        assert!(v.factors[0].holds || v.factors[0].valuation == Some(0));
    }

    #[test]
    fn roots_of_linear_factors() {
        let q5 = QFrac::var_pow(5);
        assert_eq!(linear_root(&a(), 5), Some(q5.inv().unwrap()));
        assert_eq!(linear_root(&a().inv().unwrap(), 5), Some(q5.clone()));
        assert_eq!(linear_root(&a().scale(&int(2)), 5), Some(q5.scale(&int(2)).inv().unwrap()));
        assert_eq!(linear_root(&a().mul(&a()), 5), None);
    }
}
