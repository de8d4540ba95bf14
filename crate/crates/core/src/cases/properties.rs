//! Seeded random sequences satisfying a lemma's hypotheses, checked
//! against its conclusion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CaseInfo, Instance, Outcome, RunOptions};
use crate::algebra::{cyclotomic, int, rat, Poly, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;

/// Random sequences per instance.
const TRIALS: usize = 20;

fn rng_for(opts: &RunOptions, inst: &Instance) -> ChaCha8Rng {
    let mix = [inst.d, inst.m, inst.r, inst.n].iter().fold(opts.seed, |h, x| h.wrapping_mul(0x100_0000_01b3).wrapping_add(x.unwrap_or(0)));
    ChaCha8Rng::seed_from_u64(mix)
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_poly(rng: &mut ChaCha8Rng, len: usize) -> Poly<Rational> {
    Poly::from_coeffs((0..len).map(|_| small(rng)).collect())
}

/// Coefficients `0..len` of the `m`-fold convolution power of `c`.
fn conv_power(c: &[Rational], m: u64, len: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); len];
    acc[0] = int(1);
    for _ in 0..m {
        let mut next = vec![Rational::zero(); len];
        for (i, x) in acc.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in c.iter().enumerate().take(len - i) {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    acc
}

/// `sum_{i+j <= n-1} a_i a_j = 0 (mod Phi_n)` for sequences with the two
/// reflection antisymmetries.
fn lemma_a(n: u64, rng: &mut ChaCha8Rng) -> Result<bool> {
    let phi = cyclotomic(n)?;
    let len = phi.degree().unwrap_or(0) + 2;
    let n_us = n as usize;
    let h = (n_us - 1) / 2;
    let mut a: Vec<Option<Poly<Rational>>> = vec![None; n_us];
    let mut pair = |k: usize, partner: usize, a: &mut Vec<Option<Poly<Rational>>>| {
        if a[k].is_some() {
            return;
        }
        let noise = phi.mul(&random_poly(rng, 2));
        if partner == k {
            a[k] = Some(noise);
        } else {
            let x = random_poly(rng, len);
            a[partner] = Some(x.neg().add(&noise));
            a[k] = Some(x);
        }
    };
    for k in 0..=h {
        pair(k, h - k, &mut a);
    }
    for k in h + 1..n_us {
        pair(k, (3 * n_us - 1) / 2 - k, &mut a);
    }
    let a: Vec<Poly<Rational>> = a.into_iter().map(|x| x.expect("every index is paired")).collect();
    let mut total = Poly::zero();
    for i in 0..n_us {
        let mut inner = Poly::zero();
        for x in a.iter().take(n_us - i) {
            inner = inner.add(x);
        }
        total = total.add(&a[i].mul(&inner));
    }
    Ok(total.rem(&phi)?.is_zero())
}

/// Both parts of the truncation lemma for `n = 1 (mod d)`.
fn lemma_b(d: u64, m: u64, n: u64, rng: &mut ChaCha8Rng) -> bool {
    let n_us = n as usize;
    let top = ((n - 1) / d) as usize;
    let lam: Vec<Rational> = (0..n_us).map(|k| if k <= top { small(rng) } else { Rational::zero() }).collect();
    let window: Rational = lam.iter().take(top + 1).sum();
    let first = conv_power(&lam, m, n_us).iter().sum::<Rational>() == num_traits::pow::Pow::pow(&window, m as u32);

    // lambda(ln + k) = lambda(ln) lambda(k), lambda(0) = 1, with the same
    // vanishing window as above (it keeps the residues from carrying)
    let levels = 3usize;
    let mut base: Vec<Rational> = (0..n_us).map(|k| if k <= top { small(rng) } else { Rational::zero() }).collect();
    base[0] = int(1);
    let heads: Vec<Rational> = (0..levels).map(|l| if l == 0 { int(1) } else { small(rng) }).collect();
    let full: Vec<Rational> = (0..levels * n_us).map(|i| &heads[i / n_us] * &base[i % n_us]).collect();
    let lhs = conv_power(&full, m, levels * n_us);
    let inner = conv_power(&base, m, n_us);
    let outer = conv_power(&heads, m, levels);
    let second = (0..levels).all(|l| (0..n_us).all(|k| lhs[l * n_us + k] == &inner[k] * &outer[l]));
    first && second
}

fn lemma_e(d: u64, m: u64, r: u64, n: u64, rng: &mut ChaCha8Rng) -> bool {
    let n_us = n as usize;
    let top = ((n - r) / d) as usize;
    let lam: Vec<Rational> = (0..n_us).map(|k| if k <= top { small(rng) } else { Rational::zero() }).collect();
    let window: Rational = lam.iter().take(top + 1).sum();
    conv_power(&lam, m, n_us).iter().sum::<Rational>() == num_traits::pow::Pow::pow(&window, m as u32)
}

fn domain(msg: String) -> Error {
    Error::OutOfDomain(msg)
}

pub(super) fn run(info: &CaseInfo, inst: &Instance, opts: &RunOptions) -> Result<Outcome> {
    let mut rng = rng_for(opts, inst);
    let mut ok = true;
    match info.id {
        "lemma_a_prop" => {
            let n = super::qcong::odd_n(inst)?;
            for _ in 0..TRIALS {
                ok &= lemma_a(n, &mut rng)?;
            }
        }
        "lemma_b_prop" => {
            let (Some(d), Some(m), Some(n)) = (inst.d, inst.m, inst.n) else {
                return Err(domain("needs d, m, n".into()));
            };
            if m < 2 || d < m || n % d != 1 % d {
                return Err(domain(format!("need d >= m >= 2 and n = 1 (mod d); got d={d} m={m} n={n}")));
            }
            for _ in 0..TRIALS {
                ok &= lemma_b(d, m, n, &mut rng);
            }
        }
        "lemma_e_prop" => {
            let (d, m, r, n) = super::qcong::dmrn(inst)?;
            for _ in 0..TRIALS {
                ok &= lemma_e(d, m, r, n, &mut rng);
            }
        }
        other => return Err(Error::UnknownCase(other.into())),
    }
    Ok(Outcome::equality(ok, TRIALS))
}
