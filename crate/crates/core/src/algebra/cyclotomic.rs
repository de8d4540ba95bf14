use super::field::{Field, Rational};
use super::poly::Poly;
use crate::error::{Error, Result};

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// `t^n - 1`.
fn t_pow_minus_one(n: u64) -> Poly<Rational> {
    let mut c = vec![<Rational as Field>::zero(); n as usize + 1];
    c[0] = Rational::from_i64(-1);
    c[n as usize] = Rational::from_i64(1);
    Poly::from_coeffs(c)
}

/// The `n`-th cyclotomic polynomial, by dividing `t^n - 1` by every
/// `Phi_d` with `d | n, d < n` (each computed the same way, bottom up).
pub fn cyclotomic(n: u64) -> Result<Poly<Rational>> {
    if n == 0 {
        return Err(Error::OutOfDomain("cyclotomic index must be positive".into()));
    }
    let divs = divisors(n);
    let mut table: Vec<(u64, Poly<Rational>)> = Vec::with_capacity(divs.len());
    for &m in &divs {
        let mut p = t_pow_minus_one(m);
        for (d, phi) in &table {
            if m % d == 0 {
                p = p.exact_div(phi).expect("cyclotomic factor divides");
            }
        }
        table.push((m, p));
    }
    Ok(table.pop().expect("n divides itself").1)
}

/// `Phi_n` with coefficients embedded in another field.
pub fn cyclotomic_in<F: Field>(n: u64) -> Result<Poly<F>> {
    Ok(cyclotomic(n)?.map(F::from_rational))
}

/// The q-integer `[r] = 1 + t + ... + t^{r-1}`.
pub fn q_integer<F: Field>(r: u64) -> Result<Poly<F>> {
    if r == 0 {
        return Err(Error::OutOfDomain("q-integer index must be positive".into()));
    }
    Ok(Poly::from_coeffs(vec![F::one(); r as usize]))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<Rational>;

    /// Independent route: Phi_n = prod_{d | n} (t^d - 1)^{mu(n/d)}.
    fn mobius(n: u64) -> i32 {
        let mut m = n;
        let mut k = 0;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                k += 1;
            }
            p += 1;
        }
        if m > 1 {
            k += 1;
        }
        if k % 2 == 0 { 1 } else { -1 }
    }

    fn cyclotomic_mobius(n: u64) -> P {
        let mut num = P::one();
        let mut den = P::one();
        for d in divisors(n) {
            match mobius(n / d) {
                1 => num = num.mul(&t_pow_minus_one(d)),
                -1 => den = den.mul(&t_pow_minus_one(d)),
                _ => {}
            }
        }
        num.exact_div(&den).unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic(1).unwrap(), P::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2).unwrap(), P::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(6).unwrap(), P::from_i64s(&[1, -1, 1]));
        assert!(cyclotomic(0).is_err());
    }

    #[test]
    fn product_and_degree_identities() {
        for n in 1..=64u64 {
            let phi = cyclotomic(n).unwrap();
            assert_eq!(phi.degree().unwrap() as u64, euler_phi(n), "deg Phi_{n}");
            assert_eq!(phi, cyclotomic_mobius(n), "Phi_{n} via Mobius");
            let prod = divisors(n).iter().fold(P::one(), |acc, &d| acc.mul(&cyclotomic(d).unwrap()));
            assert_eq!(prod, t_pow_minus_one(n));
            let bracket = divisors(n)
                .iter()
                .filter(|&&d| d > 1)
                .fold(P::one(), |acc, &d| acc.mul(&cyclotomic(d).unwrap()));
            assert_eq!(bracket, q_integer::<Rational>(n).unwrap());
        }
    }

    #[test]
    fn q_integer_values() {
        assert_eq!(q_integer::<Rational>(1).unwrap(), P::one());
        assert_eq!(q_integer::<Rational>(3).unwrap(), P::from_i64s(&[1, 1, 1]));
        assert_eq!(q_integer::<Rational>(4).unwrap().eval(&Rational::from_i64(1)), Rational::from_i64(4));
        assert!(q_integer::<Rational>(0).is_err());
    }
}
