use super::backend::Backend;
use super::term::{QMonomial, Term};
use crate::algebra::Field;
use crate::error::{Error, Result};

/// A resolved Pochhammer base `c q^j`.
pub type Base<F> = (F, i64);

/// `(c q^j; q^d)_k`.
pub fn poch<F: Field>(base: &Base<F>, d: i64, k: u64) -> Term<F> {
    let (c, j) = base;
    let mut t = Term::one();
    for i in 0..k as i64 {
        t = t.mul(&Term::one_minus(c, j + d * i));
        if t.is_zero() {
            break;
        }
    }
    t
}

/// `(x; q^d)_k` for a base that may involve the parameter `a`.
pub fn q_pochhammer<F: Field>(base: &QMonomial<F>, d: u64, k: u64, a: Option<&F>) -> Result<Term<F>> {
    Ok(poch(&base.resolve(a)?, d as i64, k))
}

/// `(x_1, ..., x_r; q^d)_k / (y_1, ..., y_s; q^d)_k`.
pub fn poch_ratio<F: Field>(num: &[Base<F>], den: &[Base<F>], d: i64, k: u64) -> Result<Term<F>> {
    let mut t = Term::one();
    for b in num {
        t = t.mul(&poch(b, d, k));
    }
    for b in den {
        let p = poch(b, d, k);
        if p.is_zero() {
            return Err(Error::Pole(k as usize));
        }
        t = t.mul(&p.inv()?);
    }
    Ok(t)
}

/// The terms of the basic hypergeometric series
/// `r phi s [nums; dens; q^d, z]` for `k = 0..=m`, stopping early once a
/// numerator factor vanishes.
pub fn phi_terms<F: Field>(
    nums: &[Base<F>],
    dens: &[Base<F>],
    d: i64,
    z: &Base<F>,
    m: usize,
) -> Result<Vec<Term<F>>> {
    let extra = 1 + dens.len() as i64 - nums.len() as i64;
    let q_d: Base<F> = (F::one(), d);
    let mut out = Vec::with_capacity(m + 1);
    let mut t = Term::one();
    out.push(t.clone());
    for k in 0..m as i64 {
        let mut step = Term::one();
        for (c, j) in nums {
            step = step.mul(&Term::one_minus(c, j + d * k));
        }
        if step.is_zero() {
            break;
        }
        for (c, j) in dens.iter().chain(std::iter::once(&q_d)) {
            let f = Term::one_minus(c, j + d * k);
            if f.is_zero() {
                return Err(Error::Pole(k as usize + 1));
            }
            step = step.div(&f)?;
        }
        // ((-1)^k q^{d binom(k,2)})^{extra} advances by (-q^{dk})^{extra}
        let sign = Term::scalar(F::from_i64(-1)).mul(&Term::q_pow(d * k)).pow(extra)?;
        let mut zt = Term::scalar(z.0.clone());
        zt = zt.mul(&Term::q_pow(z.1));
        t = t.mul(&step).mul(&sign).mul(&zt);
        out.push(t.clone());
    }
    Ok(out)
}

/// The truncated series itself, evaluated in a backend.
pub fn phi_series<F: Field, B: Backend<F>>(
    backend: &B,
    nums: &[Base<F>],
    dens: &[Base<F>],
    d: i64,
    z: &Base<F>,
    m: usize,
) -> Result<B::V> {
    let terms = phi_terms(nums, dens, d, z, m)?;
    let mut acc = backend.zero();
    for t in &terms {
        acc = backend.add(&acc, &backend.term(t)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, QFrac, Rational};
    use crate::qseries::backend::Exact;

    fn ex(t: &Term<Rational>) -> QFrac {
        Exact::new().term(t).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(ex(&poch(&(rat(3, 7), 2), 5, 0)), QFrac::one());
        let p = poch(&(int(1), 1), 2, 2);
        let expect = QFrac::from_poly(crate::algebra::Poly::from_i64s(&[1, -1]))
            .mul(&QFrac::from_poly(crate::algebra::Poly::from_i64s(&[1, 0, 0, -1])));
        assert_eq!(ex(&p), expect);
    }

    #[test]
    fn recurrence_holds() {
        for base in [(rat(2, 3), 1i64), (int(1), 2), (int(-1), 0), (rat(-5, 2), -3)] {
            for k in 0..=20u64 {
                let lhs = poch(&base, 3, k + 1);
                let rhs = poch(&base, 3, k).mul(&Term::one_minus(&base.0, base.1 + 3 * k as i64));
                assert_eq!(ex(&lhs), ex(&rhs));
            }
        }
    }

    #[test]
    fn series_truncates_naturally_and_reports_poles() {
        let b = Exact::<Rational>::new();
        let z = (int(1), 1);
        let one = phi_series(&b, &[(rat(1, 2), 0)], &[(int(3), 1)], 1, &z, 0).unwrap();
        assert_eq!(one, QFrac::one());
        // q^{-2} in the numerator kills every term past k = 2
        let terms = phi_terms(&[(int(1), -2)], &[(int(3), 1)], 1, &z, 9).unwrap();
        assert_eq!(terms.len(), 3);
        let pole = phi_terms(&[(int(2), 0)], &[(int(1), -1)], 1, &z, 4);
        assert!(matches!(pole, Err(Error::Pole(2))));
    }
}
