use qcongr::algebra::{crt_pair, cyclotomic, int, Field, Poly, QFrac, Rational};
use qcongr::congruence::{sample_tuples, DEFAULT_SEED};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly<F: Field>(rng: &mut ChaCha8Rng, deg: usize, scalar: &F) -> Poly<F> {
    let coeffs = (0..=deg).map(|i| {
        let c = F::from_i64(rng.gen_range(-9..=9));
        if i % 2 == 1 { c.mul(scalar) } else { c }
    });
    Poly::from_coeffs(coeffs.collect())
}

/// `1 - c q^j` over `F`.
fn binom<F: Field>(c: &F, j: usize) -> Poly<F> {
    let mut v = vec![F::zero(); j + 1];
    v[0] = F::one();
    v[j] = c.neg();
    Poly::from_coeffs(v)
}

fn check_crt<F: Field>(rng: &mut ChaCha8Rng, a: &F) {
    let phi = cyclotomic(5).unwrap();
    let m1 = Poly::from_coeffs(phi.pow(2).coeffs().iter().map(|c| F::from_rational(c)).collect());
    let m2 = binom(a, 3);
    let r1 = random_poly(rng, 7, a);
    let r2 = random_poly(rng, 2, a);
    let x = crt_pair(&r1, &m1, &r2, &m2).unwrap();
    assert_eq!(x.rem(&m1).unwrap(), r1);
    assert_eq!(x.rem(&m2).unwrap(), r2);
    assert!(x.degree().unwrap_or(0) < 11);
}

#[test]
fn crt_over_q_with_sampled_a() {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for t in sample_tuples(DEFAULT_SEED, 5, 1) {
        check_crt::<Rational>(&mut rng, &t[0]);
    }
    check_crt::<Rational>(&mut rng, &int(3));
}

#[test]
fn crt_over_qa() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..3 {
        check_crt::<QFrac>(&mut rng, &QFrac::var());
    }
}
