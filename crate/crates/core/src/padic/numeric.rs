//! The q -> 1 corollaries and the classical supercongruences, as exact
//! rational computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::gamma::{padic_gamma, PadicContext};
use super::{harmonic2, is_prime, pochhammer_rational, residue, valuation, INFINITE_VALUATION};
use crate::algebra::{int, rat, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumericReport {
    pub id: String,
    pub p: u64,
    pub s: u64,
    /// Valuation of `lhs - rhs`; `None` when it is zero, or (for residue
    /// targets) when it is at least the checked precision.
    pub valuation: Option<i64>,
    pub required: i64,
    pub pass: bool,
}

/// Identifiers understood by [`run_numeric_case`].
pub fn numeric_cases() -> &'static [&'static str] {
    &["van_hamme_c2", "van_hamme_d2", "van_hamme_d2_strong", "long", "cor_a", "cor_b", "cor_c", "cor_d", "cor_e"]
}

fn domain(msg: impl Into<String>) -> Error {
    Error::OutOfDomain(msg.into())
}

fn p_integral(x: &Rational, p: u64) -> bool {
    !x.denom().is_multiple_of(&BigInt::from(p))
}

/// `(a/b)_k / k!` raised to `e`.
fn ratio_pow(x: &Rational, k: u64, e: i32) -> Rational {
    let r = pochhammer_rational(x, k) / pochhammer_rational(&int(1), k);
    num_traits::pow::Pow::pow(&r, e)
}

/// Sum of all products `c(i_1) ... c(i_m)` with `i_1 + ... + i_m <= n`.
fn multi_sum(c: &[Rational], m: u32, n: usize) -> Rational {
    let mut acc = vec![Rational::zero(); n + 1];
    acc[0] = Rational::one();
    for _ in 0..m {
        let mut next = vec![Rational::zero(); n + 1];
        for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in c.iter().enumerate().take(n + 1 - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    acc.into_iter().sum()
}

fn rational_report(id: &str, p: u64, s: u64, terms: &[Rational], lhs: Rational, rhs: Rational, required: i64) -> Result<NumericReport> {
    if terms.iter().any(|t| !p_integral(t, p)) || !p_integral(&rhs, p) {
        return Err(Error::NotPIntegral(format!("a term has p = {p} in its denominator")));
    }
    let v = valuation(&(lhs - rhs), p);
    Ok(NumericReport {
        id: id.into(),
        p,
        s,
        valuation: (v != INFINITE_VALUATION).then_some(v),
        required,
        pass: v >= required,
    })
}

/// Runs one numeric case. `dmr` is used by `cor_c` only.
pub fn run_numeric_case(id: &str, p: u64, s: u64, dmr: Option<(u64, u64, u64)>, work_cap: u64) -> Result<NumericReport> {
    if p == 2 || !is_prime(p) {
        return Err(domain(format!("{p} is not an odd prime")));
    }
    let half = rat(1, 2);
    let pi = BigInt::from(p);
    let pr = |e: u64| Rational::from_integer(pi.pow(e as u32));
    match id {
        "van_hamme_c2" | "long" => {
            if id == "long" && p <= 3 {
                return Err(domain("requires p > 3"));
            }
            let h = (p - 1) / 2;
            let e = if id == "long" { 6 } else { 4 };
            let terms: Vec<_> = (0..=h).map(|k| int(4 * k as i64 + 1) * ratio_pow(&half, k, e)).collect();
            let lhs: Rational = terms.iter().sum();
            let rhs = if id == "long" {
                pr(1) * (0..=h).map(|k| ratio_pow(&half, k, 4)).sum::<Rational>()
            } else {
                pr(1)
            };
            rational_report(id, p, 1, &terms, lhs, rhs, if id == "long" { 4 } else { 3 })
        }
        "van_hamme_d2" | "van_hamme_d2_strong" => {
            if p % 6 != 1 {
                return Err(domain("requires p = 1 (mod 6)"));
            }
            let third = rat(1, 3);
            let terms: Vec<_> = (0..=(p - 1) / 3).map(|k| int(6 * k as i64 + 1) * ratio_pow(&third, k, 6)).collect();
            if terms.iter().any(|t| !p_integral(t, p)) {
                return Err(Error::NotPIntegral(format!("a term has p = {p} in its denominator")));
            }
            let lhs: Rational = terms.iter().sum();
            let required: u32 = if id == "van_hamme_d2" { 4 } else { 6 };
            let ctx = PadicContext::new(p, required - 1)?;
            let g = padic_gamma(&third, &ctx, work_cap)?;
            let m = pi.pow(required);
            let rhs = (-(&pi) * g.pow(9)).mod_floor(&m);
            let l = residue(&lhs, p, required).ok_or_else(|| Error::NotPIntegral(format!("sum is not {p}-integral")))?;
            let diff = (l - rhs).mod_floor(&m);
            let v = if diff.is_zero() { None } else { Some(valuation(&Rational::from_integer(diff), p)) };
            Ok(NumericReport { id: id.into(), p, s: 1, valuation: v, required: required as i64, pass: v.is_none() })
        }
        "cor_a" | "cor_b" => {
            if s == 0 {
                return Err(domain("s must be positive"));
            }
            if id == "cor_a" && p <= 3 {
                return Err(domain("requires p > 3"));
            }
            let ps = p.pow(s as u32);
            let e = if id == "cor_a" { 4 } else { 6 };
            let c: Vec<_> = (0..ps).map(|k| int(4 * k as i64 + 1) * ratio_pow(&half, k, e)).collect();
            let lhs = multi_sum(&c, 2, (ps - 1) as usize);
            let h = (ps - 1) / 2;
            let rhs = if id == "cor_a" {
                pr(2 * s) - pr(4 * s) / int(2) * harmonic2(h)
            } else {
                let a: Vec<_> = (0..=h).map(|k| ratio_pow(&half, k, 4)).collect();
                let total: Rational = a.iter().sum();
                let weighted: Rational = a
                    .iter()
                    .enumerate()
                    .map(|(k, ak)| ak * (int(1) - int(2) * pr(2 * s) * harmonic2(2 * k as u64)))
                    .sum();
                pr(2 * s) * total * weighted
            };
            let required = s as i64 + if id == "cor_a" { 4 } else { 5 };
            rational_report(id, p, s, &c, lhs, rhs, required)
        }
        "cor_c" | "cor_d" | "cor_e" => {
            let (d, m, r) = match id {
                "cor_d" => (3, 2, 1),
                "cor_e" => (3, 3, 1),
                _ => dmr.ok_or_else(|| domain("cor_c needs d, m, r"))?,
            };
            if d < m || m < 2 || r == 0 || r.gcd(&d) != 1 || p % d != r % d || p < r {
                return Err(domain(format!("need p = r (mod d), gcd(r,d) = 1, d >= m >= 2; got p={p} d={d} m={m} r={r}")));
            }
            let x = rat(r as i64, d as i64);
            let c: Vec<_> = (0..p).map(|k| int((2 * d * k + r) as i64) * ratio_pow(&x, k, 6)).collect();
            let lhs = multi_sum(&c, m as u32, (p - 1) as usize);
            let l = (p - r) / d;
            let two = rat(2 * r as i64, d as i64);
            let comp = rat((d - r) as i64, d as i64);
            let v: Vec<_> = (0..=l)
                .map(|k| {
                    num_traits::pow::Pow::pow(&pochhammer_rational(&x, k), 3u32) * pochhammer_rational(&comp, k)
                        / (num_traits::pow::Pow::pow(&pochhammer_rational(&int(1), k), 3u32) * pochhammer_rational(&two, k))
                })
                .collect();
            let total: Rational = v.iter().sum();
            let weighted: Rational = v
                .iter()
                .enumerate()
                .map(|(k, vk)| {
                    let h: Rational = (1..=k as i64)
                        .map(|t| {
                            let a = int(d as i64 * t - d as i64 + r as i64);
                            let b = int(d as i64 * t);
                            (a.clone() * a).recip() + (b.clone() * b).recip()
                        })
                        .sum();
                    vk * (int(1) - int(m as i64) * pr(2) * h)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .sum();
            let lead = pochhammer_rational(&two, l) / pochhammer_rational(&int(1), l);
            let rhs = num_traits::pow::Pow::pow(&(pr(1) * lead), m as u32)
                * num_traits::pow::Pow::pow(&total, (m - 1) as u32)
                * weighted;
            rational_report(id, p, 1, &c, lhs, rhs, 6)
        }
        _ => Err(Error::UnknownCase(id.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn van_hamme_c2_at_five() {
        let r = run_numeric_case("van_hamme_c2", 5, 1, None, 1 << 20).unwrap();
        assert!(r.pass);
        let h = (0..=2).map(|k| int(4 * k + 1) * ratio_pow(&rat(1, 2), k as u64, 4)).sum::<Rational>();
        assert!(valuation(&(h - int(5)), 5) >= 3);
    }

    #[test]
    fn multi_sum_small() {
        let c = vec![int(1), int(2), int(3)];
        assert_eq!(multi_sum(&c, 2, 2), int(15));
        assert_eq!(multi_sum(&c, 1, 1), int(3));
    }

    #[test]
    fn domain_errors() {
        assert!(run_numeric_case("cor_a", 3, 1, None, 10).is_err());
        assert!(run_numeric_case("van_hamme_d2", 11, 1, None, 10).is_err());
        assert!(run_numeric_case("cor_c", 7, 1, Some((3, 2, 2)), 10).is_err());
        assert!(run_numeric_case("nope", 7, 1, None, 10).is_err());
    }
}
