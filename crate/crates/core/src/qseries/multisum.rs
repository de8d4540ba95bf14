use super::backend::Backend;
use super::summands::SummandInstance;
use crate::algebra::Field;
use crate::error::{Error, Result};

/// Values `theta(0..=N)` with their running sums.
#[derive(Clone, Debug)]
pub struct TermTable<V> {
    pub terms: Vec<V>,
    pub prefix: Vec<V>,
}

impl<V: Clone> TermTable<V> {
    pub fn new<F: Field, B: Backend<F, V = V>>(backend: &B, terms: Vec<V>) -> Result<Self> {
        let mut prefix = Vec::with_capacity(terms.len());
        let mut acc = backend.zero();
        for t in &terms {
            acc = backend.add(&acc, t)?;
            prefix.push(acc.clone());
        }
        Ok(TermTable { terms, prefix })
    }

    /// Tabulates an instance's summands for `k = 0..=bound`.
    pub fn for_instance<F: Field, B: Backend<F, V = V>>(
        backend: &B,
        inst: &SummandInstance<F>,
        bound: u64,
    ) -> Result<Self> {
        let terms = (0..=bound)
            .map(|k| inst.term(k).and_then(|t| backend.term(&t)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(backend, terms)
    }

    /// `sum_{i_1 + ... + i_m <= N} theta(i_1) ... theta(i_m)` by iterated
    /// prefix convolution.
    pub fn fold_sum<F: Field, B: Backend<F, V = V>>(&self, backend: &B, m: usize, bound: usize) -> Result<V> {
        if m == 0 {
            return Ok(backend.one());
        }
        if bound >= self.terms.len() {
            return Err(Error::OutOfRange { k: bound as u64, max: self.terms.len() as u64 - 1 });
        }
        let mut s: Vec<V> = self.prefix[..=bound].to_vec();
        for step in 1..m {
            // the last pass only needs the entry at `bound`
            let from = if step + 1 == m { bound } else { 0 };
            let mut next = Vec::with_capacity(bound + 1);
            for t in from..=bound {
                let mut acc = backend.zero();
                for i in 0..=t {
                    acc = backend.add(&acc, &backend.mul(&self.terms[i], &s[t - i])?)?;
                }
                next.push(acc);
            }
            s = next;
        }
        Ok(s.pop().expect("nonempty"))
    }
}

pub fn multi_sum<F: Field, B: Backend<F>>(
    backend: &B,
    inst: &SummandInstance<F>,
    m: usize,
    bound: u64,
) -> Result<B::V> {
    TermTable::for_instance(backend, inst, bound)?.fold_sum(backend, m, bound as usize)
}

/// Brute-force enumeration of the same sum; bounded to `m <= 3`, `N <= 12`.
pub fn multi_sum_oracle<F: Field, B: Backend<F>>(
    backend: &B,
    inst: &SummandInstance<F>,
    m: usize,
    bound: u64,
) -> Result<B::V> {
    let terms = (0..=bound)
        .map(|k| inst.term(k).and_then(|t| backend.term(&t)))
        .collect::<Result<Vec<_>>>()?;
    nested_sum(backend, &terms, m, bound as usize)
}

pub fn nested_sum<F: Field, B: Backend<F>>(backend: &B, terms: &[B::V], m: usize, bound: usize) -> Result<B::V> {
    if m > 3 || bound > 12 || m == 0 {
        return Err(Error::OracleBounds);
    }
    let mut acc = backend.zero();
    for i in 0..=bound {
        if m == 1 {
            acc = backend.add(&acc, &terms[i])?;
            continue;
        }
        for j in 0..=bound - i {
            let ij = backend.mul(&terms[i], &terms[j])?;
            if m == 2 {
                acc = backend.add(&acc, &ij)?;
                continue;
            }
            for k in 0..=bound - i - j {
                acc = backend.add(&acc, &backend.mul(&ij, &terms[k])?)?;
            }
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, QFrac, Rational};
    use crate::qseries::backend::Exact;
    use crate::qseries::summands::{Family, Params};

    fn consts(v: &[i64]) -> Vec<QFrac> {
        v.iter().map(|&x| QFrac::constant(int(x))).collect()
    }

    #[test]
    fn small_sequences() {
        let b = Exact::<Rational>::new();
        let t = TermTable::new(&b, consts(&[1, 2, 3])).unwrap();
        assert_eq!(t.fold_sum(&b, 2, 2).unwrap(), QFrac::constant(int(15)));
        assert_eq!(t.fold_sum(&b, 1, 2).unwrap(), t.prefix[2]);
        assert_eq!(t.fold_sum(&b, 3, 0).unwrap(), QFrac::constant(int(1)));
        let ones = consts(&[1; 4]);
        assert_eq!(nested_sum(&b, &ones, 2, 3).unwrap(), QFrac::constant(int(10)));
        assert!(nested_sum(&b, &ones, 4, 3).is_err());
    }

    #[test]
    fn table_prefix_differences() {
        let b = Exact::<Rational>::new();
        let inst = SummandInstance::new(Family::Quartic, 7, Params::default());
        let t = TermTable::for_instance(&b, &inst, 6).unwrap();
        for k in 1..=6 {
            assert_eq!(t.prefix[k].sub(&t.prefix[k - 1]), t.terms[k]);
        }
    }

    #[test]
    fn oracle_matches_convolution() {
        let b = Exact::<Rational>::new();
        let inst = SummandInstance::new(Family::Quartic, 5, Params::default());
        assert_eq!(multi_sum(&b, &inst, 2, 4).unwrap(), multi_sum_oracle(&b, &inst, 2, 4).unwrap());
    }
}
