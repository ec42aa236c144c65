//! Sparse distributed multivariate polynomials.

use std::cmp::Ordering;

use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{Field, Scalar};

/// A polynomial as a strictly descending (in the active order) list of terms
/// with nonzero coefficients. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: i64) -> Self {
        Self::term(Monomial::one(nvars), field.from_i64(c))
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Builds the canonical form from arbitrary terms.
    pub fn from_terms(mut terms: Vec<(Monomial, Scalar)>, ord: &MonomialOrder) -> Self {
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    /// A nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// Weighted degree of the leading term (degree of a homogeneous element).
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn add(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        merge(&self.terms, &other.terms, None, ord)
    }

    pub fn sub(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        let neg = match other.terms.first() {
            Some((_, c)) => -&c.field().one(),
            None => return self.clone(),
        };
        merge(&self.terms, &other.terms, Some((&neg, None)), ord)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(a, x)| (a.mul(m), x * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ord: &MonomialOrder) -> Polynomial {
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = merge(&acc.terms, &big.terms, Some((c, Some(m))), ord);
        }
        acc
    }

    pub fn pow(&self, n: u32, ord: &MonomialOrder, one: Polynomial) -> Polynomial {
        (0..n).fold(one, |acc, _| acc.mul(self, ord))
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial, ord: &MonomialOrder) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())).collect(), ord)
    }
}

/// a + c·m·b, merged in order.
fn merge(
    a: &[(Monomial, Scalar)],
    b: &[(Monomial, Scalar)],
    scale: Option<(&Scalar, Option<&Monomial>)>,
    ord: &MonomialOrder,
) -> Polynomial {
    let conv = |t: &(Monomial, Scalar)| -> (Monomial, Scalar) {
        match scale {
            None => t.clone(),
            Some((c, None)) => (t.0.clone(), &t.1 * c),
            Some((c, Some(m))) => (t.0.mul(m), &t.1 * c),
        }
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(conv).peekable();
    while i < a.len() || bi.peek().is_some() {
        match (a.get(i), bi.peek()) {
            (Some(x), Some(y)) => match ord.cmp(&x.0, &y.0) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => out.push(bi.next().unwrap()),
                Ordering::Equal => {
                    let y = bi.next().unwrap();
                    let s = &x.1 + &y.1;
                    if !s.is_zero() {
                        out.push((y.0, s));
                    }
                    i += 1;
                }
            },
            (Some(x), None) => {
                out.push(x.clone());
                i += 1;
            }
            (None, Some(_)) => out.push(bi.next().unwrap()),
            (None, None) => break,
        }
    }
    Polynomial { terms: out }
}
