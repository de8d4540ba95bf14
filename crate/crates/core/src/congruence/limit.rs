//! The `a -> 1` limit of `f(a) / (1 - a)^2` over Q(q), and the three
//! expressions it is applied to in the proofs of the `a = 1` theorems.

use crate::algebra::{Field, Poly, QFrac, RatFun};
use crate::error::{Error, Result};

/// Rational functions in `a` with coefficients in Q(q).
pub type AFrac = RatFun<QFrac>;

/// `lim_{a -> 1} f(a) / (1 - a)^2`, computed by exact division.
pub fn hopital_limit2(f: &AFrac) -> Result<QFrac> {
    let one = QFrac::one();
    let sq = Poly::from_coeffs(vec![one.clone(), one.neg().add(&one.neg()), one.clone()]);
    let g = f.num().exact_div(&sq).ok_or(Error::PoleOrderMismatch)?;
    let den = f.den().eval(&one);
    if den.is_zero() {
        return Err(Error::DenominatorVanishes);
    }
    Field::div(&g.eval(&one), &den)
}

/// `q^e` in Q(q).
pub fn q_pow(e: i64) -> QFrac {
    QFrac::var_pow(e)
}

/// `1 - q^e` in Q(q).
pub fn one_minus_q(e: i64) -> QFrac {
    QFrac::one().sub(&q_pow(e))
}

/// `(q^j; q^d)_k` in Q(q).
pub fn qpoch(j: i64, d: i64, k: u64) -> QFrac {
    (0..k as i64).fold(QFrac::one(), |acc, i| acc.mul(&one_minus_q(j + d * i)))
}

/// `1 - a^s q^j` for `s` in `{-1, 0, 1}`.
pub fn a_factor(s: i32, j: i64) -> AFrac {
    let qj = q_pow(j);
    match s {
        0 => AFrac::constant(QFrac::one().sub(&qj)),
        1 => AFrac::from_poly(Poly::from_coeffs(vec![QFrac::one(), qj.neg()])),
        -1 => AFrac::new(Poly::from_coeffs(vec![qj.neg(), QFrac::one()]), Poly::var()).expect("nonzero"),
        _ => panic!("a exponent must be -1, 0 or 1"),
    }
}

/// `(a^s q^j; q^d)_k` as a rational function of `a`.
pub fn apoch(s: i32, j: i64, d: i64, k: u64) -> AFrac {
    (0..k as i64).fold(AFrac::one(), |acc, i| acc.mul(&a_factor(s, j + d * i)))
}

fn c(x: QFrac) -> AFrac {
    AFrac::constant(x)
}

/// `1 - (q^2;q^2)_h^4 / (aq^2, q^2/a; q^2)_h^2` with `h = (n-1)/2`.
pub fn omega_lambda(n: u64) -> Result<AFrac> {
    let h = (n - 1) / 2;
    let num = c(qpoch(2, 2, h).pow(4));
    let den = apoch(1, 2, 2, h).mul(&apoch(-1, 2, 2, h)).pow(2);
    Ok(AFrac::one().sub(&num.div(&den)?))
}

/// `-2 sum_{t=1}^{(n-1)/2} q^{2t} / (1 - q^{2t})^2`.
pub fn omega_lambda_limit(n: u64) -> QFrac {
    let s = (1..=(n as i64 - 1) / 2).fold(QFrac::zero(), |acc, t| {
        acc.add(&q_pow(2 * t).mul(&one_minus_q(2 * t).pow(2).inv().expect("nonzero")))
    });
    s.scale(&crate::algebra::int(-2))
}

/// The difference of squared sums in the two-parameter pair case.
pub fn omega_pair(n: u64) -> Result<AFrac> {
    let h = (n - 1) / 2;
    let mut first = AFrac::zero();
    let mut second = AFrac::zero();
    for k in 0..=h {
        let t1 = apoch(1, 1, 2, k).mul(&apoch(-1, 1, 2, k));
        let t1 = t1.mul(&c(qpoch(1, 2, k).pow(2).mul(&q_pow(2 * k as i64)).div(&qpoch(2, 2, k).pow(4))?));
        first = first.add(&t1);
        let t2 = c(qpoch(1, 2, k).pow(4).mul(&q_pow(2 * k as i64)).div(&qpoch(2, 2, k).pow(2))?);
        let t2 = t2.div(&apoch(1, 2, 2, k).mul(&apoch(-1, 2, 2, k)))?;
        second = second.add(&t2);
    }
    Ok(first.pow(2).sub(&second.pow(2)))
}

fn harmonic2(terms: impl Iterator<Item = i64>) -> QFrac {
    terms.fold(QFrac::zero(), |acc, e| acc.add(&q_pow(e).mul(&one_minus_q(e).pow(2).inv().expect("nonzero"))))
}

/// `-2 S sum_k T_k sum_{t=1}^{2k} q^t/(1-q^t)^2` with
/// `T_k = (q;q^2)_k^4 / (q^2;q^2)_k^4 q^{2k}` and `S = sum_k T_k`.
pub fn omega_pair_limit(n: u64) -> Result<QFrac> {
    let h = (n - 1) / 2;
    let mut s = QFrac::zero();
    let mut w = QFrac::zero();
    for k in 0..=h {
        let t = qpoch(1, 2, k).pow(4).mul(&q_pow(2 * k as i64)).div(&qpoch(2, 2, k).pow(4))?;
        w = w.add(&t.mul(&harmonic2(1..=2 * k as i64)));
        s = s.add(&t);
    }
    Ok(s.mul(&w).scale(&crate::algebra::int(-2)))
}

/// The difference of `m`-th powers in the residue-class family.
pub fn omega_family(n: u64, d: u64, r: u64, m: u32) -> Result<AFrac> {
    let (di, ri) = (d as i64, r as i64);
    let top = (n - r) / d;
    let mut first = AFrac::zero();
    let mut second = AFrac::zero();
    for k in 0..=top {
        let qk = q_pow(di * k as i64);
        let base = qpoch(ri, di, k).mul(&qpoch(di - ri, di, k));
        let t1 = c(base.mul(&qk).div(&qpoch(di, di, k).pow(3).mul(&qpoch(2 * ri, di, k)))?);
        first = first.add(&t1.mul(&apoch(1, ri, di, k)).mul(&apoch(-1, ri, di, k)));
        let t2 = c(qpoch(ri, di, k).pow(3).mul(&qpoch(di - ri, di, k)).mul(&qk).div(&qpoch(di, di, k).mul(&qpoch(2 * ri, di, k)))?);
        second = second.add(&t2.div(&apoch(1, di, di, k).mul(&apoch(-1, di, di, k)))?);
    }
    Ok(first.pow(m).sub(&second.pow(m)))
}

/// `-m U^{m-1} sum_k U_k sum_{t=1}^k (q^{dt-d+r}/(1-q^{dt-d+r})^2 + q^{dt}/(1-q^{dt})^2)`.
pub fn omega_family_limit(n: u64, d: u64, r: u64, m: u32) -> Result<QFrac> {
    let (di, ri) = (d as i64, r as i64);
    let mut u = QFrac::zero();
    let mut w = QFrac::zero();
    for k in 0..=(n - r) / d {
        let ki = k as i64;
        let t = qpoch(ri, di, k)
            .pow(3)
            .mul(&qpoch(di - ri, di, k))
            .mul(&q_pow(di * ki))
            .div(&qpoch(di, di, k).pow(3).mul(&qpoch(2 * ri, di, k)))?;
        let h = harmonic2((1..=ki).map(|t| di * t - di + ri)).add(&harmonic2((1..=ki).map(|t| di * t)));
        w = w.add(&t.mul(&h));
        u = u.add(&t);
    }
    Ok(u.pow(m - 1).mul(&w).scale(&crate::algebra::int(-(m as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn exact_square_factor() {
        let two_plus_q = QFrac::from_poly(Poly::from_i64s(&[2, 1]));
        let f = a_factor(0, 0);
        assert!(f.is_zero());
        let one_minus_a = AFrac::from_poly(Poly::from_coeffs(vec![QFrac::one(), QFrac::one().neg()]));
        let f = one_minus_a.pow(2).mul(&AFrac::constant(two_plus_q.clone()));
        assert_eq!(hopital_limit2(&f).unwrap(), two_plus_q);
        let g = one_minus_a.mul(&AFrac::constant(QFrac::constant(int(3))));
        assert!(matches!(hopital_limit2(&g), Err(Error::PoleOrderMismatch)));
        let pole = AFrac::one().div(&one_minus_a).unwrap().mul(&one_minus_a.pow(3));
        assert!(hopital_limit2(&pole).is_ok());
    }

    #[test]
    fn lambda_limit_at_three() {
        let got = hopital_limit2(&omega_lambda(3).unwrap()).unwrap();
        let want = q_pow(2).mul(&one_minus_q(2).pow(2).inv().unwrap()).scale(&int(-2));
        assert_eq!(got, want);
        assert_eq!(omega_lambda_limit(3), want);
    }

    #[test]
    fn pair_and_family_limits() {
        for n in [3, 5, 7] {
            assert_eq!(hopital_limit2(&omega_pair(n).unwrap()).unwrap(), omega_pair_limit(n).unwrap());
        }
        for (d, m, r, n) in [(3, 2, 1, 4), (3, 3, 1, 7), (3, 2, 2, 5), (4, 2, 1, 5), (4, 3, 3, 7), (5, 2, 2, 7)] {
            let f = omega_family(n, d, r, m).unwrap();
            assert_eq!(hopital_limit2(&f).unwrap(), omega_family_limit(n, d, r, m).unwrap(), "{d} {m} {r} {n}");
        }
    }
}
