//! Small expression trees over factored terms, so that one builder can be
//! evaluated in any backend.

use super::backend::Backend;
use super::multisum::TermTable;
use super::term::Term;
use crate::algebra::Field;
use crate::error::Result;

#[derive(Clone, Debug)]
pub enum Expr<F: Field> {
    Term(Term<F>),
    Sum(Vec<Expr<F>>),
    Prod(Vec<Expr<F>>),
    Neg(Box<Expr<F>>),
    Pow(Box<Expr<F>>, u32),
    /// `sum_{k_1 + ... + k_m <= bound} t(k_1) ... t(k_m)` over the listed terms.
    MultiSum { terms: Vec<Term<F>>, m: usize, bound: usize },
}

impl<F: Field> From<Term<F>> for Expr<F> {
    fn from(t: Term<F>) -> Self {
        Expr::Term(t)
    }
}

impl<F: Field> Expr<F> {
    pub fn one() -> Self {
        Expr::Term(Term::one())
    }

    pub fn int(v: i64) -> Self {
        Expr::Term(Term::int(v))
    }

    pub fn scalar(c: F) -> Self {
        Expr::Term(Term::scalar(c))
    }

    pub fn sum(items: impl IntoIterator<Item = Expr<F>>) -> Self {
        Expr::Sum(items.into_iter().collect())
    }

    /// Sum of plain terms.
    pub fn terms(items: impl IntoIterator<Item = Term<F>>) -> Self {
        Expr::Sum(items.into_iter().map(Expr::Term).collect())
    }

    pub fn prod(items: impl IntoIterator<Item = Expr<F>>) -> Self {
        Expr::Prod(items.into_iter().collect())
    }

    pub fn add(self, other: Expr<F>) -> Self {
        Expr::Sum(vec![self, other])
    }

    pub fn sub(self, other: Expr<F>) -> Self {
        Expr::Sum(vec![self, other.neg()])
    }

    pub fn mul(self, other: Expr<F>) -> Self {
        Expr::Prod(vec![self, other])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Self {
        Expr::Neg(Box::new(self))
    }

    pub fn pow(self, e: u32) -> Self {
        Expr::Pow(Box::new(self), e)
    }

    pub fn eval<B: Backend<F>>(&self, b: &B) -> Result<B::V> {
        match self {
            Expr::Term(t) => b.term(t),
            Expr::Sum(xs) => {
                let mut acc = b.zero();
                let mut prev: Option<(&Term<F>, B::V)> = None;
                for x in xs {
                    let v = match x {
                        Expr::Term(t) => {
                            let v = chain_step(b, prev.as_ref().map(|(p, v)| (*p, v)), t)?;
                            prev = Some((t, v.clone()));
                            v
                        }
                        other => other.eval(b)?,
                    };
                    acc = b.add(&acc, &v)?;
                }
                Ok(acc)
            }
            Expr::Prod(xs) => {
                let mut acc = b.one();
                for x in xs {
                    acc = b.mul(&acc, &x.eval(b)?)?;
                }
                Ok(acc)
            }
            Expr::Neg(x) => Ok(b.neg(&x.eval(b)?)),
            Expr::Pow(x, e) => b.pow(&x.eval(b)?, *e),
            Expr::MultiSum { terms, m, bound } => {
                let vals = eval_chain(b, terms)?;
                TermTable::new(b, vals)?.fold_sum(b, *m, *bound)
            }
        }
    }
}

/// Value of `t`, reusing the value of the previous term when the ratio
/// `t / prev` has fewer factors than `t` itself (consecutive summands of a
/// hypergeometric series differ by a handful of factors).
fn chain_step<F: Field, B: Backend<F>>(b: &B, prev: Option<(&Term<F>, &B::V)>, t: &Term<F>) -> Result<B::V> {
    if let Some((p, pv)) = prev {
        if !p.is_zero() && !t.is_zero() {
            let ratio = t.div(p)?;
            if ratio.atoms().len() < t.atoms().len() {
                return b.mul(pv, &b.term(&ratio)?);
            }
        }
    }
    b.term(t)
}

/// Values of a list of terms, evaluated as a chain.
pub fn eval_chain<F: Field, B: Backend<F>>(b: &B, terms: &[Term<F>]) -> Result<Vec<B::V>> {
    let mut out: Vec<B::V> = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        let prev = if i > 0 { Some((&terms[i - 1], &out[i - 1])) } else { None };
        let v = chain_step(b, prev, t)?;
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, QFrac, Rational};
    use crate::qseries::Exact;

    #[test]
    fn evaluates_structure() {
        let b = Exact::<Rational>::new();
        let x: Expr<Rational> = Term::bracket(2).unwrap().into();
        let e = x.clone().pow(2).sub(Expr::int(1)).mul(Expr::scalar(int(3)));
        // 3((1+q)^2 - 1) = 6q + 3q^2
        let want = QFrac::from_poly(crate::algebra::Poly::from_i64s(&[0, 6, 3]));
        assert_eq!(e.eval(&b).unwrap(), want);
        let ms = Expr::MultiSum { terms: vec![Term::int(1), Term::int(2), Term::int(3)], m: 2, bound: 2 };
        assert_eq!(ms.eval(&b).unwrap(), QFrac::constant(int(15)));
    }
}
