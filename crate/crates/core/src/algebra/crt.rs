use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Solves `r = r1 (mod m1)`, `r = r2 (mod m2)` for coprime moduli, with
/// `deg r < deg(m1 m2)`.
pub fn crt_pair<F: Field>(r1: &Poly<F>, m1: &Poly<F>, r2: &Poly<F>, m2: &Poly<F>) -> Result<Poly<F>> {
    let (g, s, _) = Poly::gcd_ext(m1, m2)?;
    if !g.is_one() {
        return Err(Error::NotCoprime { witness: g.to_string() });
    }
    // s*m1 = 1 (mod m2)
    let m = m1.mul(m2);
    let r = r1.add(&r2.sub(r1).mul(&s).mul(m1));
    r.rem(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::cyclotomic::cyclotomic;
    use crate::algebra::field::{rat, Rational};
    use proptest::prelude::*;

    type P = Poly<Rational>;

    #[test]
    fn examples() {
        let r = crt_pair(&P::one(), &P::from_i64s(&[-1, 1]), &P::from_i64s(&[-1]), &P::from_i64s(&[1, 1])).unwrap();
        assert_eq!(r, P::var());
        let c = P::from_i64s(&[7]);
        let r = crt_pair(&c, &P::from_i64s(&[2, 0, 1]), &c, &P::from_i64s(&[1, 1])).unwrap();
        assert_eq!(r, c);
        let phi3 = cyclotomic(3).unwrap();
        let phi1 = cyclotomic(1).unwrap();
        let r = crt_pair(&P::zero(), &phi3, &P::one(), &phi1).unwrap();
        assert!(r.rem(&phi3).unwrap().is_zero());
        assert_eq!(r.rem(&phi1).unwrap(), P::one());
        assert_eq!(r.eval(&Rational::from_i64(1)), Rational::from_i64(1));
    }

    #[test]
    fn non_coprime_reports_witness() {
        let m = P::from_i64s(&[-1, 0, 1]);
        let err = crt_pair(&P::one(), &m, &P::zero(), &P::from_i64s(&[-1, 1])).unwrap_err();
        assert!(matches!(err, Error::NotCoprime { .. }));
    }

    proptest! {
        #[test]
        fn residues_recovered(a in prop::collection::vec(-5i64..=5, 0..4), b in prop::collection::vec(-5i64..=5, 0..4), c in 2i64..7) {
            let m1 = cyclotomic(5).unwrap();
            let m2 = P::from_coeffs(vec![rat(-c, 1), Rational::from_i64(0), Rational::from_i64(1)]);
            let r1 = P::from_i64s(&a).rem(&m1).unwrap();
            let r2 = P::from_i64s(&b).rem(&m2).unwrap();
            let r = crt_pair(&r1, &m1, &r2, &m2).unwrap();
            prop_assert_eq!(r.rem(&m1).unwrap(), r1);
            prop_assert_eq!(r.rem(&m2).unwrap(), r2);
        }
    }
}
