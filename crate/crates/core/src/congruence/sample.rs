use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::modulus::admissible_sample;
use crate::algebra::{rat, Rational};
use crate::qseries::Params;

pub const DEFAULT_SEED: u64 = 42;

/// One draw of rational parameter values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSample {
    pub index: usize,
    pub params: Params<Rational>,
}

fn draw(rng: &mut ChaCha8Rng, taken: &[Rational]) -> Rational {
    loop {
        let x = rat(rng.gen_range(-13..=13), rng.gen_range(1..=13));
        let clash = taken.iter().any(|t| *t == x || t * &x == rat(1, 1));
        if admissible_sample(&x) && !clash {
            return x;
        }
    }
}

/// `count` deterministic draws for the parameters named in `needed`
/// (any of `a`, `b`, `c`). Values within one draw are distinct and no two
/// are reciprocal, so that `(1 - a q^n)` and `(b - q^n)` never collide.
pub fn sample_params(seed: u64, count: usize, needed: &str) -> Vec<ParamSample> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|index| {
            let mut taken = Vec::new();
            let mut params = Params::default();
            for name in ['a', 'b', 'c'] {
                if needed.contains(name) {
                    let x = draw(&mut rng, &taken);
                    taken.push(x.clone());
                    match name {
                        'a' => params.a = Some(x),
                        'b' => params.b = Some(x),
                        _ => params.c = Some(x),
                    }
                }
            }
            ParamSample { index, params }
        })
        .collect()
}

/// `count` draws of `len` values each, under the same rules as
/// [`sample_params`]; for identities with more than three parameters.
pub fn sample_tuples(seed: u64, count: usize, len: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut taken = Vec::new();
            for _ in 0..len {
                let x = draw(&mut rng, &taken);
                taken.push(x);
            }
            taken
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_admissible() {
        let s = sample_params(7, 6, "abc");
        assert_eq!(s, sample_params(7, 6, "abc"));
        assert_ne!(s, sample_params(8, 6, "abc"));
        for p in &s {
            let (a, b, c) = (p.params.a().unwrap(), p.params.b().unwrap(), p.params.c().unwrap());
            assert!(a != b && b != c && a != c);
            assert!(admissible_sample(&a) && admissible_sample(&b) && admissible_sample(&c));
        }
        assert!(sample_params(1, 2, "a")[0].params.b.is_none());
    }
}
