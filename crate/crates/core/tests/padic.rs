use num_bigint::BigInt;
use num_integer::Integer;
use qcongr::algebra::{int, rat, Rational};
use qcongr::padic::{padic_gamma, run_numeric_case, valuation, PadicContext, DEFAULT_WORK_CAP};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FIXTURE: &str = include_str!("fixtures/gamma_p.txt");

fn gamma(x: &Rational, p: u64, k: u32) -> BigInt {
    padic_gamma(x, &PadicContext::new(p, k).unwrap(), DEFAULT_WORK_CAP).unwrap()
}

#[test]
fn gamma_matches_golden_fixture() {
    let mut seen = 0;
    for line in FIXTURE.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let f: Vec<i64> = line.split_whitespace().map(|t| t.parse().unwrap()).collect();
        let (p, k, x) = (f[0] as u64, f[1] as u32, rat(f[2], f[3]));
        assert_eq!(gamma(&x, p, k), BigInt::from(f[4]), "Gamma_{p}({x}) mod {p}^{k}");
        seen += 1;
    }
    assert!(seen >= 20);
}

fn random_unit_rational(rng: &mut ChaCha8Rng, p: u64) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-60..=60);
        let den: i64 = rng.gen_range(1..=30);
        if den % p as i64 != 0 {
            return rat(num, den);
        }
    }
}

#[test]
fn gamma_functional_equation() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for p in [5u64, 7] {
        for k in 1..=4u32 {
            let m = BigInt::from(p).pow(k);
            for _ in 0..20 {
                let x = random_unit_rational(&mut rng, p);
                let lhs = gamma(&(x.clone() + int(1)), p, k);
                let g = gamma(&x, p, k);
                let factor = if valuation(&x, p) == 0 {
                    qcongr::padic::residue(&-x.clone(), p, k).unwrap()
                } else {
                    BigInt::from(-1)
                };
                assert_eq!(lhs, (g * factor).mod_floor(&m), "p={p} k={k} x={x}");
            }
        }
    }
}

#[test]
fn gamma_precision_coherence() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for p in [5u64, 7] {
        let m2 = BigInt::from(p * p);
        for _ in 0..10 {
            let x = random_unit_rational(&mut rng, p);
            assert_eq!(gamma(&x, p, 4).mod_floor(&m2), gamma(&x, p, 2));
        }
    }
}

#[test]
fn valuation_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let x = rat(rng.gen_range(1..2000), rng.gen_range(1..2000));
        let y = rat(-rng.gen_range(1..2000), rng.gen_range(1..2000));
        for p in [3, 5, 7] {
            assert_eq!(valuation(&(x.clone() * y.clone()), p), valuation(&x, p) + valuation(&y, p));
        }
    }
}

fn pass(id: &str, p: u64, s: u64, dmr: Option<(u64, u64, u64)>) {
    let r = run_numeric_case(id, p, s, dmr, DEFAULT_WORK_CAP).unwrap();
    assert!(r.pass, "{id} p={p} s={s} {dmr:?}: {r:?}");
}

#[test]
fn corollaries_hold() {
    for (p, s) in [(5, 1), (7, 1), (11, 1), (13, 1), (5, 2)] {
        pass("cor_a", p, s, None);
    }
    for (p, s) in [(3, 1), (5, 1), (7, 1), (11, 1)] {
        pass("cor_b", p, s, None);
    }
    for p in [7, 13] {
        pass("cor_d", p, 1, None);
        pass("cor_e", p, 1, None);
    }
}

#[test]
fn classical_supercongruences() {
    for p in [5, 7, 11, 13] {
        pass("van_hamme_c2", p, 1, None);
    }
    for p in [5, 7, 11] {
        pass("long", p, 1, None);
    }
    for p in [7, 13, 19] {
        pass("van_hamme_d2", p, 1, None);
    }
    for p in [7, 13] {
        pass("van_hamme_d2_strong", p, 1, None);
    }
}

#[test]
fn cor_a_needs_p_above_three() {
    assert!(run_numeric_case("cor_a", 3, 1, None, DEFAULT_WORK_CAP).is_err());
}

#[test]
fn cor_c_grid() {
    let grid = [((3, 2, 1), [7, 13]), ((3, 3, 1), [7, 13]), ((3, 2, 2), [5, 11]), ((4, 2, 1), [5, 13]), ((4, 3, 3), [7, 11]), ((5, 2, 2), [7, 7])];
    for (dmr, ps) in grid {
        for p in ps {
            pass("cor_c", p, 1, Some(dmr));
        }
    }
}
