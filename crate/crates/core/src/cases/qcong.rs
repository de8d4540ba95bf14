//! Left side, right side and modulus of every q-congruence in the catalog.
//!
//! Builders are generic over the coefficient field, so the same code runs
//! over Q (plain and sampled parameters) and over Q(a).

use num_integer::Integer;

use super::Instance;
use crate::algebra::Field;
use crate::congruence::{ModFactor, ModulusSpec, Sides};
use crate::error::{Error, Result};
use crate::qseries::{family_term, poch_ratio, Backend, Base, Expr, Family, Params, Term};

/// One congruence `lhs = rhs (mod modulus)`.
pub struct Check<F: Field> {
    pub lhs: Expr<F>,
    pub rhs: Expr<F>,
    pub modulus: ModulusSpec,
}

impl<F: Field> Sides<F> for Check<F> {
    fn eval<B: Backend<F>>(&self, b: &B) -> Result<(B::V, B::V)> {
        Ok((self.lhs.eval(b)?, self.rhs.eval(b)?))
    }
}

fn check<F: Field>(lhs: Expr<F>, rhs: Expr<F>, modulus: ModulusSpec) -> Check<F> {
    Check { lhs, rhs, modulus }
}

fn domain(msg: impl Into<String>) -> Error {
    Error::OutOfDomain(msg.into())
}

pub(crate) fn odd_n(inst: &Instance) -> Result<u64> {
    match inst.n {
        Some(n) if n % 2 == 1 => Ok(n),
        Some(n) => Err(domain(format!("n = {n} must be odd"))),
        None => Err(domain("missing n")),
    }
}

/// `(d, m, r, n)` with `n = r (mod d)`, `gcd(r, d) = 1`, `d >= m >= 2`, `n >= r`.
pub(crate) fn dmrn(inst: &Instance) -> Result<(u64, u64, u64, u64)> {
    let (Some(d), Some(m), Some(r), Some(n)) = (inst.d, inst.m, inst.r, inst.n) else {
        return Err(domain("needs d, m, r, n"));
    };
    if r == 0 || r.gcd(&d) != 1 || d < m || m < 2 || n < r || (n - r) % d != 0 {
        return Err(domain(format!("need n = r (mod d), gcd(r,d) = 1, d >= m >= 2; got d={d} m={m} r={r} n={n}")));
    }
    Ok((d, m, r, n))
}

fn q<F: Field>(j: i64) -> Base<F> {
    (F::one(), j)
}

fn cq<F: Field>(c: &F, j: i64) -> Base<F> {
    (c.clone(), j)
}

fn rep<F: Field>(b: Base<F>, k: usize) -> Vec<Base<F>> {
    vec![b; k]
}

fn inv<F: Field>(x: &F) -> Result<F> {
    x.inv().ok_or(Error::DivisionByZero)
}

fn t<F: Field>(x: Term<F>) -> Expr<F> {
    Expr::Term(x)
}

fn br<F: Field>(n: u64) -> Result<Term<F>> {
    Term::bracket(n)
}

fn qp<F: Field>(e: i64) -> Term<F> {
    Term::q_pow(e)
}

fn sc<F: Field>(c: F) -> Term<F> {
    Term::scalar(c)
}

fn num<F: Field>(v: i64) -> F {
    F::from_i64(v)
}

/// `c0 + c1 q^j`
fn bi<F: Field>(c0: F, c1: F, j: u64) -> Term<F> {
    Term::binomial(&c0, &c1, j as i64)
}

/// `1 - c q^j`
fn om<F: Field>(c: &F, j: u64) -> Term<F> {
    Term::one_minus(c, j as i64)
}

/// `c - q^j`
fn minus_q<F: Field>(c: &F, j: u64) -> Term<F> {
    bi(c.clone(), num(-1), j)
}

fn zero<F: Field>() -> Expr<F> {
    Expr::Sum(Vec::new())
}

fn sum_k<F: Field>(ks: impl IntoIterator<Item = u64>, f: impl Fn(u64) -> Result<Term<F>>) -> Result<Expr<F>> {
    Ok(Expr::terms(ks.into_iter().map(f).collect::<Result<Vec<_>>>()?))
}

/// `sum_{i_1 + ... + i_m <= n-1} theta(i_1) ... theta(i_m)`.
fn family_sum<F: Field>(family: Family, params: &Params<F>, n: u64, m: u64) -> Result<Expr<F>> {
    let terms = (0..n).map(|k| family_term(family, params, k)).collect::<Result<Vec<_>>>()?;
    Ok(Expr::MultiSum { terms, m: m as usize, bound: (n - 1) as usize })
}

/// `sum_{t=1}^{top} q^t / [t]^2` over the listed indices.
fn harmonic<F: Field>(ts: impl IntoIterator<Item = u64>) -> Result<Expr<F>> {
    sum_k(ts, |x| Ok(qp(x as i64).mul(&br(x)?.pow(-2)?)))
}

/// `(a - b)` as a field element, failing on coincident parameters.
fn diff<F: Field>(x: &F, y: &F) -> F {
    x.sub(y)
}

fn abc<F: Field>(p: &Params<F>) -> Result<(F, F, F)> {
    Ok((p.a()?, p.b()?, p.c()?))
}

/// `(1 - a)^{-2}`
fn pole2<F: Field>(a: &F) -> Result<Term<F>> {
    Ok(sc(inv(&F::one().sub(a).pow(2))?))
}

/// `(1 - q^n)^2 (1 + a^2 - a q^n) / (1 - a)^2`
fn relation_head<F: Field>(a: &F, n: u64) -> Result<Term<F>> {
    let one = F::one();
    Ok(om(&one, n).pow(2)?.mul(&bi(one.add(&a.mul(a)), a.neg(), n)).mul(&pole2(a)?))
}

/// `(2 - q^n)(1 - a q^n)(a - q^n) / (1 - a)^2`
fn relation_tail<F: Field>(a: &F, n: u64) -> Result<Term<F>> {
    Ok(bi(num(2), num(-1), n).mul(&om(a, n)).mul(&minus_q(a, n)).mul(&pole2(a)?))
}

fn t_k<F: Field>(k: u64) -> Result<Term<F>> {
    Ok(poch_ratio(&rep(q(1), 4), &rep(q(2), 4), 2, k)?.mul(&qp(2 * k as i64)))
}

// ---------------------------------------------------------------------------
// Introduction

fn van_hamme_c2_q<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let h = (n - 1) / 2;
    let lhs = sum_k(0..=h, |k| family_term(Family::Quartic, &Params::default(), k))?;
    let ni = n as i64;
    let coeff = F::from_rational(&crate::algebra::rat(ni * ni - 1, 24));
    let lead = br(n)?.mul(&qp((1 - ni) / 2));
    let second = br(n)?.pow(3)?.mul(&qp((1 - ni) / 2)).mul(&sc(coeff)).mul(&om(&F::one(), 1).pow(2)?);
    Ok(vec![check(lhs, Expr::terms([lead, second]), ModulusSpec::bracket_phi(3))])
}

fn van_hamme_d2_q<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    if n % 3 != 1 {
        return Err(domain(format!("n = {n} must be 1 mod 3")));
    }
    let l = (n - 1) / 3;
    let fam = Family::SexticD { d: 3, r: 1 };
    let lhs = sum_k(0..=l, |k| family_term(fam, &Params::default(), k))?;
    let lead = br(n)?.mul(&poch_ratio(&rep(q(2), 3), &rep(q(3), 3), 3, l)?);
    let inner = sum_k(1..=l, |j| {
        let j = j as i64;
        Ok(qp(3 * j - 1).mul(&br((3 * j - 1) as u64)?.pow(-2)?))
    })?
    .sub(harmonic((1..=l).map(|j| 3 * j))?);
    let braces = Expr::one().add(t(br(n)?.pow(2)?.mul(&bi(num(2), num(-1), n))).mul(inner));
    Ok(vec![check(lhs, t(lead).mul(braces), ModulusSpec::bracket_phi(4))])
}

fn long_q<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let h = (n - 1) / 2;
    let lhs = sum_k(0..=h, |k| family_term(Family::Sextic, &Params::default(), k))?;
    let ni = n as i64;
    let coeff = F::from_rational(&crate::algebra::rat(ni * ni - 1, 24));
    let braces = Expr::one().add(t(br(n)?.pow(2)?.mul(&sc(coeff)).mul(&om(&F::one(), 1).pow(2)?)));
    let s = sum_k(0..=h, t_k)?;
    let rhs = t(br(n)?.mul(&qp((1 - ni) / 2))).mul(braces).mul(s);
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(3))])
}

fn guo_li_c2<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let lhs = family_sum(Family::Quartic, &Params::default(), n, 2)?;
    let rhs = t(br(n)?.pow(2)?.mul(&qp(1 - n as i64)));
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(3))])
}

fn guo_li_long<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let h = (n - 1) / 2;
    let lhs = family_sum(Family::Sextic, &Params::default(), n, 2)?;
    let rhs = t(br(n)?.pow(2)?.mul(&qp(1 - n as i64))).mul(sum_k(0..=h, t_k)?.pow(2));
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(2))])
}

/// `[n]^2 q^{1-n} S sum_k T_k {1 - 2 w [n]^2 sum_{t=1}^{2k} q^t/[t]^2}`.
fn sextic_pair_rhs<F: Field>(n: u64, w: Term<F>) -> Result<Expr<F>> {
    let h = (n - 1) / 2;
    let s = sum_k(0..=h, t_k)?;
    let scale = t(sc(num::<F>(2)).mul(&w).mul(&br(n)?.pow(2)?));
    let weighted = (0..=h)
        .map(|k| Ok(t(t_k(k)?).mul(Expr::one().sub(scale.clone().mul(harmonic(1..=2 * k)?)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(t(br(n)?.pow(2)?.mul(&qp(1 - n as i64))).mul(s).mul(Expr::sum(weighted)))
}

fn song_wang<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let lhs = family_sum(Family::Sextic, &Params::default(), n, 2)?;
    Ok(vec![check(lhs, sextic_pair_rhs(n, Term::one())?, ModulusSpec::bracket_phi(4))])
}

fn thm_b<F: Field>(n: u64, modulus: ModulusSpec) -> Result<Vec<Check<F>>> {
    let lhs = family_sum(Family::Sextic, &Params::default(), n, 2)?;
    Ok(vec![check(lhs, sextic_pair_rhs(n, bi(num(2), num(-1), n))?, modulus)])
}

/// `[4k+1]/[2k+1]`: the `k = (n-1)/2` term carries `1 - q^n` in its
/// denominator, as the `d = q` specialization does.
fn songwang_pole_diagnostic<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let terms = (0..n).map(|k| Ok(br(4 * k + 1)?.div(&br(2 * k + 1)?)?)).collect::<Result<Vec<_>>>()?;
    let lhs = Expr::MultiSum { terms, m: 2, bound: (n - 1) as usize };
    let rhs = t(br(n)?.pow(2)?.mul(&qp(1 - n as i64)));
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(4))])
}

// ---------------------------------------------------------------------------
// The pair sums with one parameter

fn thm_a<F: Field>(n: u64) -> Result<Vec<Check<F>>> {
    let h = (n - 1) / 2;
    let lhs = family_sum(Family::Quartic, &Params::default(), n, 2)?;
    let tail = sum_k(1..=h, |x| Ok(qp(2 * x as i64 + 1).mul(&br(2 * x)?.pow(-2)?)))?;
    let rhs = t(br(n)?.pow(2)?.mul(&qp(1 - n as i64))).sub(t(sc(num::<F>(2)).mul(&br(n)?.pow(4)?)).mul(tail));
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(4))])
}

fn thm_d<F: Field>(n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let a = p.a()?;
    let ai = inv(&a)?;
    let h = (n - 1) / 2;
    let lhs = family_sum(Family::LambdaA, p, n, 2)?;
    let lead = br(n)?.pow(2)?.mul(&qp(1 - n as i64));
    let factor = lead.mul(&om(&a, n)).mul(&minus_q(&a, n)).mul(&pole2(&a)?);
    let ratio = poch_ratio(&rep(q(2), 4), &[cq(&a, 2), cq(&a, 2), cq(&ai, 2), cq(&ai, 2)], 2, h)?;
    let rhs = t(lead).add(t(factor).mul(Expr::one().sub(t(ratio))));
    Ok(vec![check(lhs, rhs, ModulusSpec::bracket_phi(2).with_a())])
}

/// `(aq;q^2)_j / (q^2/a;q^2)_j`
fn gs_ratio<F: Field>(a: &F, j: u64) -> Result<Term<F>> {
    poch_ratio(&[cq(a, 1)], &[cq(&inv(a)?, 2)], 2, j)
}

fn gs_reflection<F: Field>(n: u64, p: &Params<F>, second: bool) -> Result<Vec<Check<F>>> {
    let a = p.a()?;
    let h = (n - 1) / 2;
    let (ks, top): (Vec<u64>, u64) = if second { ((h + 1..n).collect(), (3 * n - 1) / 2) } else { ((0..=h).collect(), h) };
    let sq = (2 * top as i64) * (2 * top as i64) / 4;
    ks.into_iter()
        .map(|k| {
            let lhs = gs_ratio(&a, top - k)?;
            let sign = a.neg().powi(top as i64 - 2 * k as i64)?;
            let rhs = sc(sign).mul(&gs_ratio(&a, k)?).mul(&qp(sq + k as i64));
            Ok(check(t(lhs), t(rhs), ModulusSpec::phi(1)))
        })
        .collect()
}

fn beta_antisym<F: Field>(n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let h = (n - 1) / 2;
    let beta = |k| family_term(Family::BetaAB, p, k);
    let mut out = Vec::new();
    for k in 0..=h {
        out.push(check(t(beta(k)?), t(beta(h - k)?).neg(), ModulusSpec::phi(1)));
    }
    for k in h + 1..n {
        out.push(check(t(beta(k)?), t(beta((3 * n - 1) / 2 - k)?).neg(), ModulusSpec::phi(1)));
    }
    Ok(out)
}

fn wei_ij<F: Field>(n: u64, p: &Params<F>, modulus: ModulusSpec) -> Result<Vec<Check<F>>> {
    Ok(vec![check(family_sum(Family::BetaAB, p, n, 2)?, zero(), modulus)])
}

/// The right side of the congruence modulo `(1 - aq^n)(a - q^n)` in the
/// two-parameter pair case.
fn wei_m_rhs<F: Field>(n: u64, a: &F, b: &F) -> Result<Expr<F>> {
    let h = (n - 1) / 2;
    let ni = n as i64;
    let (ai, one) = (inv(a)?, F::one());
    let lead = br(n)?
        .pow(2)?
        .mul(&sc(b.powi(1 - ni)?))
        .mul(&qp(1 - ni))
        .mul(&poch_ratio(&[cq(b, 2)], &[cq(&inv(b)?, 2)], 2, h)?.pow(2)?);
    let s = sum_k(0..=h, |k| {
        Ok(poch_ratio(&[cq(a, 1), cq(&ai, 1), cq(b, 0), cq(b, 1)], &[cq(&one, 1), q(2), cq(b, 2), cq(b, 2)], 2, k)?
            .mul(&qp(2 * k as i64)))
    })?;
    Ok(t(lead).mul(s.pow(2)))
}

/// The units for `(1-aq^n)(a-q^n)` and `(1-bq^n)(b-q^n)`.
pub(crate) fn ab_units<F: Field>(n: u64, a: &F, b: &F) -> Result<[Term<F>; 2]> {
    let one = F::one();
    let unit = |x: &F, y: &F| -> Result<Term<F>> {
        Ok(om(y, n)
            .mul(&minus_q(y, n))
            .mul(&bi(one.neg().sub(&x.mul(x)), x.clone(), n))
            .mul(&sc(inv(&diff(x, y).mul(&one.sub(&x.mul(y))))?)))
    };
    Ok([unit(a, b)?, unit(b, a)?])
}

fn wei_mno<F: Field>(id: &str, n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let (a, b) = (p.a()?, p.b()?);
    let lhs = family_sum(Family::BetaAB, p, n, 2)?;
    let ma = ModulusSpec::new(&[]).with_a();
    let mb = ModulusSpec::new(&[]).with_b();
    Ok(match id {
        "wei_m" => vec![check(lhs, wei_m_rhs(n, &a, &b)?, ma)],
        "wei_n" => vec![check(lhs, wei_m_rhs(n, &b, &a)?, mb)],
        _ => {
            let [ua, ub] = ab_units(n, &a, &b)?;
            let rhs = t(ua).mul(wei_m_rhs(n, &a, &b)?).add(t(ub).mul(wei_m_rhs(n, &b, &a)?));
            vec![check(lhs, rhs, ModulusSpec::new(&[ModFactor::Bracket]).with_a().with_b())]
        }
    })
}

/// `sum_k (q, a, aq;q^2)_k / (q^2, aq^2, aq^2;q^2)_k q^{2k}`
fn saal_sum<F: Field>(n: u64, a: &F) -> Result<Expr<F>> {
    sum_k(0..=(n - 1) / 2, |k| {
        Ok(poch_ratio(&[q(1), cq(a, 0), cq(a, 1)], &[q(2), cq(a, 2), cq(a, 2)], 2, k)?.mul(&qp(2 * k as i64)))
    })
}

fn wei_pqr<F: Field>(id: &str, n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let a = p.a()?;
    let ai = inv(&a)?;
    let h = (n - 1) / 2;
    let ni = n as i64;
    let modulus = ModulusSpec::bracket_phi(2).with_a();
    if id == "wei_q" {
        let rhs = poch_ratio(&[q(1), q(2)], &[cq(&a, 2), cq(&ai, 1)], 2, h)?;
        return Ok(vec![check(saal_sum(n, &a)?, t(rhs), ModulusSpec::phi(1))]);
    }
    let lhs = family_sum(Family::LambdaA, p, n, 2)?;
    let head = t(br(n)?.pow(2)?.mul(&qp(1 - ni)).mul(&relation_head(&a, n)?));
    let tail_aq = br(n)?.pow(2)?.mul(&sc(a.powi(1 - ni)?)).mul(&qp(1 - ni)).mul(&relation_tail(&a, n)?);
    if id == "wei_p" {
        let ratio = poch_ratio(&[cq(&a, 2)], &[cq(&ai, 2)], 2, h)?.pow(2)?;
        let rhs = head.sub(t(tail_aq.mul(&ratio)).mul(saal_sum(n, &a)?.pow(2)));
        return Ok(vec![check(lhs, rhs, modulus)]);
    }
    let middle = head.clone().sub(t(tail_aq.mul(&poch_ratio(&[q(1), q(2)], &[cq(&ai, 1), cq(&ai, 2)], 2, h)?.pow(2)?)));
    let tail = br(n)?.pow(2)?.mul(&qp(1 - ni)).mul(&relation_tail(&a, n)?);
    let last = head.sub(t(tail.mul(&poch_ratio(&rep(q(2), 4), &[cq(&a, 2), cq(&a, 2), cq(&ai, 2), cq(&ai, 2)], 2, h)?)));
    Ok(vec![check(lhs.clone(), middle, modulus.clone()), check(lhs, last, modulus)])
}

// ---------------------------------------------------------------------------
// Three parameters, d = 2

fn lemma_c<F: Field>(n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let fam = Family::BetaABC { d: 2, r: 1 };
    let lhs = sum_k(0..=(n - 1) / 2, |k| family_term(fam, p, k))?;
    Ok(vec![check(lhs, zero(), ModulusSpec::new(&[ModFactor::Bracket]))])
}

/// `sum_{k=0}^{mu} beta(k) = 0 (mod [n])` with `d mu = -r (mod n)`.
fn nw_general<F: Field>(inst: &Instance, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let (Some(d), Some(r), Some(n)) = (inst.d, inst.r, inst.n) else {
        return Err(domain("needs d, r, n"));
    };
    if n == 0 || d == 0 || r == 0 || n.gcd(&d) != 1 {
        return Err(domain(format!("need gcd(n, d) = 1 and positive d, r, n; got d={d} r={r} n={n}")));
    }
    let mu = (0..n).find(|mu| (d * mu + r) % n == 0).expect("d is invertible mod n");
    let fam = Family::BetaABC { d, r };
    let lhs = sum_k(0..=mu, |k| family_term(fam, p, k))?;
    Ok(vec![check(lhs, zero(), ModulusSpec::new(&[ModFactor::Bracket]))])
}

/// `[n]^2 (b/q)^{n-1} (q^2/b;q^2)_h^2/(bq^2;q^2)_h^2 {sum ...}^2`, the
/// right side modulo `(1 - aq^n)(a - q^n)`.
fn wei_cc_rhs<F: Field>(n: u64, a: &F, b: &F, c: &F) -> Result<Expr<F>> {
    let h = (n - 1) / 2;
    let ni = n as i64;
    let (ai, bi_) = (inv(a)?, inv(b)?);
    let lead = br(n)?
        .pow(2)?
        .mul(&sc(b.powi(ni - 1)?))
        .mul(&qp(1 - ni))
        .mul(&poch_ratio(&[cq(&bi_, 2)], &[cq(b, 2)], 2, h)?.pow(2)?);
    let cb = c.mul(&bi_);
    let s = sum_k(0..=h, |k| {
        Ok(poch_ratio(&[cq(a, 1), cq(&ai, 1), cq(&bi_, 1), cq(&cb, 1)], &[q(2), cq(&bi_, 2), cq(&bi_, 2), cq(c, 2)], 2, k)?
            .mul(&qp(2 * k as i64)))
    })?;
    Ok(t(lead).mul(s.pow(2)))
}

fn wei_ee_rhs<F: Field>(n: u64, a: &F, b: &F, c: &F) -> Result<Expr<F>> {
    let h = (n - 1) / 2;
    let (ai, bi_, ci) = (inv(a)?, inv(b)?, inv(c)?);
    let lead = br(n)?.pow(2)?.mul(&poch_ratio(&rep(q(1), 4), &[cq(a, 2), cq(a, 2), cq(&ai, 2), cq(&ai, 2)], 2, h)?);
    let s = sum_k(0..=h, |k| {
        Ok(poch_ratio(&[q(1), cq(a, 1), cq(&ai, 1), cq(&ci, 1)], &[q(2), cq(b, 2), cq(&bi_, 2), cq(&ci, 2)], 2, k)?
            .mul(&qp(2 * k as i64)))
    })?;
    Ok(t(lead).mul(s.pow(2)))
}

/// The three idempotent-like units for `(1-aq^n)(a-q^n)`, `(1-bq^n)(b-q^n)`, `c - q^n`.
pub(crate) fn abc_units<F: Field>(n: u64, a: &F, b: &F, c: &F) -> Result<[Term<F>; 3]> {
    let one = F::one();
    let pa = |x: &F, y: &F| -> F {
        // -1 - x^2 - x^4 + x y + x^3 y
        let x2 = x.mul(x);
        one.neg().sub(&x2).sub(&x2.mul(&x2)).add(&x.mul(y)).add(&x2.mul(x).mul(y))
    };
    let pb = |x: &F, y: &F| x.mul(&one.add(&x.mul(x)).sub(&x.mul(y)));
    let ua = om(b, n)
        .mul(&minus_q(b, n))
        .mul(&minus_q(c, n))
        .mul(&bi(pa(a, c), pb(a, c), n))
        .mul(&sc(inv(&one.sub(&b.mul(a)).mul(&diff(b, a)).mul(&one.sub(&a.mul(c))).mul(&diff(a, c)))?));
    let ub = om(a, n)
        .mul(&minus_q(a, n))
        .mul(&minus_q(c, n))
        .mul(&bi(pa(b, c), pb(b, c), n))
        .mul(&sc(inv(&one.sub(&a.mul(b)).mul(&diff(a, b)).mul(&one.sub(&b.mul(c))).mul(&diff(b, c)))?));
    let uc = om(a, n)
        .mul(&minus_q(a, n))
        .mul(&om(b, n))
        .mul(&minus_q(b, n))
        .mul(&sc(inv(&one.sub(&a.mul(c)).mul(&diff(a, c)).mul(&one.sub(&b.mul(c))).mul(&diff(b, c)))?));
    Ok([ua, ub, uc])
}

fn wei_b_to_f<F: Field>(id: &str, n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let (a, b, c) = abc(p)?;
    let fam = Family::BetaABC { d: 2, r: 1 };
    let lhs = family_sum(fam, p, n, 2)?;
    let none = ModulusSpec::new(&[]);
    Ok(match id {
        "wei_bb" => vec![check(lhs, zero(), ModulusSpec::new(&[ModFactor::Bracket]))],
        "wei_cc" => vec![check(lhs, wei_cc_rhs(n, &a, &b, &c)?, none.with_a())],
        "wei_dd" => vec![check(lhs, wei_cc_rhs(n, &b, &a, &c)?, none.with_b())],
        "wei_ee" => vec![check(lhs, wei_ee_rhs(n, &a, &b, &c)?, none.with_c())],
        _ => {
            let [ua, ub, uc] = abc_units(n, &a, &b, &c)?;
            let rhs = Expr::sum([
                t(ua).mul(wei_cc_rhs(n, &a, &b, &c)?),
                t(ub).mul(wei_cc_rhs(n, &b, &a, &c)?),
                t(uc).mul(wei_ee_rhs(n, &a, &b, &c)?),
            ]);
            vec![check(lhs, rhs, ModulusSpec::new(&[ModFactor::Bracket]).with_a().with_b().with_c())]
        }
    })
}

// ---------------------------------------------------------------------------
// One parameter, the sextic pair

/// `sum_k (aq, q/a;q^2)_k (q;q^2)_k^2 / (q^2;q^2)_k^4 q^{2k}`
fn pair_first<F: Field>(n: u64, a: &F) -> Result<Expr<F>> {
    let ai = inv(a)?;
    sum_k(0..=(n - 1) / 2, |k| {
        Ok(poch_ratio(&[cq(a, 1), cq(&ai, 1), q(1), q(1)], &rep(q(2), 4), 2, k)?.mul(&qp(2 * k as i64)))
    })
}

/// `sum_k (q;q^2)_k^4 / ((aq^2, q^2/a;q^2)_k (q^2;q^2)_k^2) q^{2k}`
fn pair_second<F: Field>(n: u64, a: &F) -> Result<Expr<F>> {
    let ai = inv(a)?;
    sum_k(0..=(n - 1) / 2, |k| {
        Ok(poch_ratio(&rep(q(1), 4), &[cq(a, 2), cq(&ai, 2), q(2), q(2)], 2, k)?.mul(&qp(2 * k as i64)))
    })
}

/// `sum_k (q/a, q;q^2)_k^2 / (q^2/a, q^2;q^2)_k^2 q^{2k}`
fn pair_sears<F: Field>(n: u64, a: &F) -> Result<Expr<F>> {
    let ai = inv(a)?;
    sum_k(0..=(n - 1) / 2, |k| {
        Ok(poch_ratio(&[cq(&ai, 1), cq(&ai, 1), q(1), q(1)], &[cq(&ai, 2), cq(&ai, 2), q(2), q(2)], 2, k)?
            .mul(&qp(2 * k as i64)))
    })
}

fn pair_case<F: Field>(id: &str, n: u64, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let a = p.a()?;
    let ai = inv(&a)?;
    let h = (n - 1) / 2;
    let ni = n as i64;
    if id == "wei_hh" {
        let lead = sc(a.powi((1 - ni) / 2)?).mul(&poch_ratio(&[cq(&a, 2)], &[cq(&ai, 2)], 2, h)?);
        return Ok(vec![check(pair_sears(n, &a)?, t(lead).mul(pair_second(n, &a)?), ModulusSpec::phi(2))]);
    }
    let lhs = family_sum(Family::LambdaAq, p, n, 2)?;
    let modulus = ModulusSpec::bracket_phi(3).with_a();
    let lead = br(n)?.pow(2)?.mul(&qp(1 - ni));
    let rhs = match id {
        "thm_e" => t(lead.mul(&relation_head(&a, n)?))
            .mul(pair_first(n, &a)?.pow(2))
            .sub(t(lead.mul(&relation_tail(&a, n)?)).mul(pair_second(n, &a)?.pow(2))),
        "wei_gg" => {
            let tail = br(n)?
                .pow(2)?
                .mul(&sc(a.powi(ni - 1)?))
                .mul(&qp(1 - ni))
                .mul(&relation_tail(&a, n)?)
                .mul(&poch_ratio(&[cq(&ai, 2)], &[cq(&a, 2)], 2, h)?.pow(2)?);
            t(lead.mul(&relation_head(&a, n)?)).mul(pair_first(n, &a)?.pow(2)).sub(t(tail).mul(pair_sears(n, &a)?.pow(2)))
        }
        _ => {
            let omega = pair_first(n, &a)?.pow(2).sub(pair_second(n, &a)?.pow(2));
            t(lead.clone()).mul(pair_first(n, &a)?.pow(2)).add(t(lead.mul(&relation_tail(&a, n)?)).mul(omega))
        }
    };
    Ok(vec![check(lhs, rhs, modulus)])
}

// ---------------------------------------------------------------------------
// The residue-class family

struct Dmrn {
    d: i64,
    m: u32,
    r: i64,
    n: u64,
    l: u64,
}

impl Dmrn {
    fn new(inst: &Instance) -> Result<Self> {
        let (d, m, r, n) = dmrn(inst)?;
        Ok(Dmrn { d: d as i64, m: m as u32, r: r as i64, n, l: (n - r) / d })
    }

    /// `[n]^m q^{m r (r-n)/d} (q^{2r};q^d)_L^m / (q^d;q^d)_L^m`
    fn lead<F: Field>(&self) -> Result<Term<F>> {
        let e = self.m as i64 * self.r * (self.r - self.n as i64) / self.d;
        Ok(br(self.n)?
            .pow(self.m as i64)?
            .mul(&qp(e))
            .mul(&poch_ratio(&[q(2 * self.r)], &[q(self.d)], self.d, self.l)?.pow(self.m as i64)?))
    }

    fn sum<F: Field>(&self, f: impl Fn(u64) -> Result<Term<F>>) -> Result<Expr<F>> {
        sum_k(0..=self.l, |k| Ok(f(k)?.mul(&qp(self.d * k as i64))))
    }

    /// `U_k = (q^r;q^d)_k^3 (q^{d-r};q^d)_k / ((q^d;q^d)_k^3 (q^{2r};q^d)_k)`
    fn u<F: Field>(&self, k: u64) -> Result<Term<F>> {
        let (d, r) = (self.d, self.r);
        poch_ratio(&[q(r), q(r), q(r), q(d - r)], &[q(d), q(d), q(d), q(2 * r)], d, k)
    }

    /// `(aq^r, q^r/a, q^r, q^{d-r};q^d)_k / ((q^d;q^d)_k^3 (q^{2r};q^d)_k)`
    fn first<F: Field>(&self, a: &F) -> Result<Expr<F>> {
        let (d, r, ai) = (self.d, self.r, inv(a)?);
        self.sum(|k| poch_ratio(&[cq(a, r), cq(&ai, r), q(r), q(d - r)], &[q(d), q(d), q(d), q(2 * r)], d, k))
    }

    /// `(q^r;q^d)_k^3 (q^{d-r};q^d)_k / (aq^d, q^d/a, q^d, q^{2r};q^d)_k`
    fn second<F: Field>(&self, a: &F) -> Result<Expr<F>> {
        let (d, r, ai) = (self.d, self.r, inv(a)?);
        self.sum(|k| poch_ratio(&[q(r), q(r), q(r), q(d - r)], &[cq(a, d), cq(&ai, d), q(d), q(2 * r)], d, k))
    }

    /// `(q^r;q^d)_k^2 (q^r/a, q^{d-r}/a;q^d)_k / ((q^d;q^d)_k^2 (q^d/a, q^{2r}/a;q^d)_k)`
    fn sears<F: Field>(&self, a: &F) -> Result<Expr<F>> {
        let (d, r, ai) = (self.d, self.r, inv(a)?);
        self.sum(|k| poch_ratio(&[q(r), q(r), cq(&ai, r), cq(&ai, d - r)], &[q(d), q(d), cq(&ai, d), cq(&ai, 2 * r)], d, k))
    }
}

fn thm_c<F: Field>(inst: &Instance) -> Result<Vec<Check<F>>> {
    let g = Dmrn::new(inst)?;
    let (d, r, n) = (g.d, g.r, g.n);
    let lhs = family_sum(Family::SexticD { d: d as u64, r: r as u64 }, &Params::default(), n, g.m as u64)?;
    let total = g.sum(|k| g.u(k))?;
    let scale = t(sc(num::<F>(g.m as i64)).mul(&bi(num(2), num(-1), n)).mul(&br(n)?.pow(2)?));
    let weighted = (0..=g.l)
        .map(|k| {
            let h = harmonic((1..=k).map(|x| (d * x as i64 - d + r) as u64))?.add(harmonic((1..=k).map(|x| d as u64 * x))?);
            Ok(t(g.u(k)?.mul(&qp(d * k as i64))).mul(Expr::one().sub(scale.clone().mul(h))))
        })
        .collect::<Result<Vec<_>>>()?;
    let rhs = t(g.lead()?).mul(total.pow(g.m - 1)).mul(Expr::sum(weighted));
    Ok(vec![check(lhs, rhs, ModulusSpec::phi(6))])
}

fn family_param_case<F: Field>(id: &str, inst: &Instance, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let g = Dmrn::new(inst)?;
    let (d, r, n, m) = (g.d, g.r, g.n, g.m);
    let a = p.a()?;
    let ai = inv(&a)?;
    let modulus = ModulusSpec::phi(4).with_a();
    if id == "wei_hhh" {
        let lead = sc(a.powi((r - n as i64) / d)?).mul(&poch_ratio(&[q(2 * r), cq(&a, d)], &[q(d), cq(&ai, 2 * r)], d, g.l)?);
        return Ok(vec![check(g.sears(&a)?, t(lead).mul(g.second(&a)?), ModulusSpec::phi(2))]);
    }
    let lhs = family_sum(Family::LambdaAD { d: d as u64, r: r as u64 }, p, n, m as u64)?;
    let lead = g.lead()?;
    let rhs = match id {
        "thm_f" => t(lead.mul(&relation_head(&a, n)?))
            .mul(g.first(&a)?.pow(m))
            .sub(t(lead.mul(&relation_tail(&a, n)?)).mul(g.second(&a)?.pow(m))),
        "wei_ggg" => {
            let tail = br(n)?
                .pow(m as i64)?
                .mul(&sc(a.powi(m as i64 * g.l as i64)?))
                .mul(&qp(-r * m as i64 * g.l as i64))
                .mul(&relation_tail(&a, n)?)
                .mul(&poch_ratio(&[cq(&ai, 2 * r)], &[cq(&a, d)], d, g.l)?.pow(m as i64)?);
            t(lead.mul(&relation_head(&a, n)?)).mul(g.first(&a)?.pow(m)).sub(t(tail).mul(g.sears(&a)?.pow(m)))
        }
        _ => {
            let omega = g.first(&a)?.pow(m).sub(g.second(&a)?.pow(m));
            t(lead.clone()).mul(g.first(&a)?.pow(m)).add(t(lead.mul(&relation_tail(&a, n)?)).mul(omega))
        }
    };
    Ok(vec![check(lhs, rhs, modulus)])
}

/// `[n]^m (b/q^r)^{mL} (q^{2r}/b;q^d)_L^m / (bq^d;q^d)_L^m {sum ...}^m`
fn wei_ccc_rhs<F: Field>(g: &Dmrn, a: &F, b: &F, c: &F) -> Result<Expr<F>> {
    let (d, r, m, l) = (g.d, g.r, g.m as i64, g.l as i64);
    let (ai, bi_) = (inv(a)?, inv(b)?);
    let lead = br(g.n)?
        .pow(m)?
        .mul(&sc(b.powi(m * l)?))
        .mul(&qp(-r * m * l))
        .mul(&poch_ratio(&[cq(&bi_, 2 * r)], &[cq(b, d)], d, g.l)?.pow(m)?);
    let cb = c.mul(&bi_);
    let s = g.sum(|k| poch_ratio(&[cq(a, r), cq(&ai, r), cq(&bi_, r), cq(&cb, d - r)], &[q(d), cq(&bi_, d), cq(&bi_, 2 * r), cq(c, d)], d, k))?;
    Ok(t(lead).mul(s.pow(g.m)))
}

fn wei_eee_rhs<F: Field>(g: &Dmrn, a: &F, b: &F, c: &F) -> Result<Expr<F>> {
    let (d, r, m) = (g.d, g.r, g.m as i64);
    let (ai, bi_, ci) = (inv(a)?, inv(b)?, inv(c)?);
    let lead = br(g.n)?.pow(m)?.mul(&poch_ratio(&[q(r), q(d - r)], &[cq(a, d), cq(&ai, d)], d, g.l)?.pow(m)?);
    let s = g.sum(|k| poch_ratio(&[q(d - r), cq(a, r), cq(&ai, r), cq(&ci, r)], &[q(d), cq(&bi_, d), cq(b, d), cq(&ci, 2 * r)], d, k))?;
    Ok(t(lead).mul(s.pow(g.m)))
}

fn family_abc_case<F: Field>(id: &str, inst: &Instance, p: &Params<F>) -> Result<Vec<Check<F>>> {
    let g = Dmrn::new(inst)?;
    let (a, b, c) = abc(p)?;
    let fam = Family::BetaABC { d: g.d as u64, r: g.r as u64 };
    let none = ModulusSpec::new(&[]);
    if id == "lemma_f" {
        let lhs = sum_k(0..=g.l, |k| family_term(fam, p, k))?;
        return Ok(vec![check(lhs, zero(), ModulusSpec::new(&[ModFactor::Bracket]))]);
    }
    let lhs = family_sum(fam, p, g.n, g.m as u64)?;
    Ok(match id {
        "wei_bbb" => vec![check(lhs, zero(), ModulusSpec::phi(1))],
        "wei_ccc" => vec![check(lhs, wei_ccc_rhs(&g, &a, &b, &c)?, none.with_a())],
        "wei_ddd" => vec![check(lhs, wei_ccc_rhs(&g, &b, &a, &c)?, none.with_b())],
        "wei_eee" => vec![check(lhs, wei_eee_rhs(&g, &a, &b, &c)?, none.with_c())],
        _ => {
            let [ua, ub, uc] = abc_units(g.n, &a, &b, &c)?;
            let rhs = Expr::sum([
                t(ua).mul(wei_ccc_rhs(&g, &a, &b, &c)?),
                t(ub).mul(wei_ccc_rhs(&g, &b, &a, &c)?),
                t(uc).mul(wei_eee_rhs(&g, &a, &b, &c)?),
            ]);
            vec![check(lhs, rhs, ModulusSpec::phi(1).with_a().with_b().with_c())]
        }
    })
}

/// All checks for a congruence case; `None` if `id` is not a q-congruence.
pub(crate) fn build<F: Field>(id: &str, inst: &Instance, p: &Params<F>) -> Option<Result<Vec<Check<F>>>> {
    let n = || odd_n(inst);
    Some(match id {
        "van_hamme_c2_q" => n().and_then(van_hamme_c2_q),
        "van_hamme_d2_q" => inst.n.ok_or_else(|| domain("missing n")).and_then(van_hamme_d2_q),
        "long_q" => n().and_then(long_q),
        "guo_li_c2" => n().and_then(guo_li_c2),
        "guo_li_long" => n().and_then(guo_li_long),
        "song_wang" => n().and_then(song_wang),
        "songwang_conjecture" => n().and_then(|n| thm_b(n, ModulusSpec::new(&[ModFactor::Bracket, ModFactor::Bracket, ModFactor::Cyclotomic(4)]))),
        "songwang_pole_diagnostic" => n().and_then(songwang_pole_diagnostic),
        "thm_a" => n().and_then(thm_a),
        "thm_b" => n().and_then(|n| thm_b(n, ModulusSpec::bracket_phi(5))),
        "thm_c" => thm_c(inst),
        "thm_d" => n().and_then(|n| thm_d(n, p)),
        "gs_reflection" => n().and_then(|n| gs_reflection(n, p, false)),
        "gs_reflection_b" => n().and_then(|n| gs_reflection(n, p, true)),
        "beta_antisym" => n().and_then(|n| beta_antisym(n, p)),
        "wei_i" => n().and_then(|n| wei_ij(n, p, ModulusSpec::phi(1))),
        "wei_j" => n().and_then(|n| wei_ij(n, p, ModulusSpec::new(&[ModFactor::Bracket]))),
        "wei_m" | "wei_n" | "wei_o" => n().and_then(|n| wei_mno(id, n, p)),
        "wei_p" | "wei_q" | "wei_r" => n().and_then(|n| wei_pqr(id, n, p)),
        "lemma_c" => n().and_then(|n| lemma_c(n, p)),
        "nw_general" => nw_general(inst, p),
        "wei_bb" | "wei_cc" | "wei_dd" | "wei_ee" | "wei_ff" => n().and_then(|n| wei_b_to_f(id, n, p)),
        "thm_e" | "wei_gg" | "wei_hh" | "wei_ii" => n().and_then(|n| pair_case(id, n, p)),
        "thm_f" | "wei_ggg" | "wei_hhh" | "wei_iii" => family_param_case(id, inst, p),
        "lemma_f" | "wei_bbb" | "wei_ccc" | "wei_ddd" | "wei_eee" | "wei_fff" => family_abc_case(id, inst, p),
        _ => return None,
    })
}
