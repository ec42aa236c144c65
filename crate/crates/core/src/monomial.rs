//! Monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial x^a with its weighted degree cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exponents,
    deg: u32,
    mask: u64,
}

fn mask_of(exps: &[u32]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | 1u64 << (i % 64))
}

impl Monomial {
    pub fn new(exps: &[u32], weights: &[u32]) -> Self {
        debug_assert_eq!(exps.len(), weights.len());
        let deg = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        Monomial {
            exps: Exponents::from_slice(exps),
            deg,
            mask: mask_of(exps),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
            mask: 0,
        }
    }

    /// The variable x_i (with weight w).
    pub fn var(nvars: usize, i: usize, w: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[i] = 1;
        m.deg = w;
        m.mask = 1u64 << (i % 64);
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Weighted degree.
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.deg <= other.deg
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Monomial {
            exps,
            deg: self.deg + other.deg,
            mask: self.mask | other.mask,
        }
    }

    /// self / other, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let exps: Exponents = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a - b).collect();
        let mask = mask_of(&exps);
        Monomial {
            exps,
            deg: self.deg - other.deg,
            mask,
        }
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Exponents = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(&exps, weights)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the single variable this monomial is a pure power of.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Bitmask of the variables occurring (exact for up to 64 variables).
    pub fn support(&self) -> u64 {
        self.mask
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Kind of monomial order on the polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Weighted graded reverse lexicographic.
    Grevlex,
    /// Lexicographic with x_0 > x_1 > ...
    Lex,
    /// Elimination order: weighted grevlex on variables `[0, split)`, ties broken by
    /// weighted grevlex on the rest. Eliminates the first block.
    Block { split: usize },
}

/// A monomial order, carrying the ring weights it is graded by.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    weights: Arc<[u32]>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, weights: &[u32]) -> Self {
        MonomialOrder {
            kind,
            weights: weights.into(),
        }
    }

    pub fn grevlex(weights: &[u32]) -> Self {
        Self::new(OrderKind::Grevlex, weights)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    /// Checked comparison, as exposed to callers with untrusted inputs.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.nvars() {
                return Err(AlgebraError::VariableCount {
                    expected: self.nvars(),
                    found: m.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Grevlex => a.deg.cmp(&b.deg).then_with(|| revlex(&a.exps, &b.exps)),
            OrderKind::Lex => a.exps.cmp(&b.exps),
            OrderKind::Block { split } => {
                let w = &self.weights;
                let da: u32 = a.exps[..split].iter().zip(&w[..split]).map(|(e, w)| e * w).sum();
                let db: u32 = b.exps[..split].iter().zip(&w[..split]).map(|(e, w)| e * w).sum();
                da.cmp(&db)
                    .then_with(|| revlex(&a.exps[..split], &b.exps[..split]))
                    .then_with(|| (a.deg - da).cmp(&(b.deg - db)))
                    .then_with(|| revlex(&a.exps[split..], &b.exps[split..]))
            }
        }
    }
}

/// Reverse-lex tiebreak: the monomial with the smaller exponent in the last
/// differing variable is greater.
#[inline]
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e, &vec![1; e.len()])
    }

    #[test]
    fn grevlex_degree_three() {
        let ord = MonomialOrder::grevlex(&[1, 1]);
        assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[2, 1]), &m(&[2, 1])), Ordering::Equal);
    }

    #[test]
    fn grevlex_matches_textbook_in_three_vars() {
        // x > y > z; in degree 2 grevlex gives x^2 > xy > y^2 > xz > yz > z^2.
        let ord = MonomialOrder::grevlex(&[1, 1, 1]);
        let seq = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in seq.windows(2) {
            assert_eq!(ord.cmp(&m(&w[0]), &m(&w[1])), Ordering::Greater);
        }
    }

    #[test]
    fn lex_prefers_first_variable() {
        let ord = MonomialOrder::new(OrderKind::Lex, &[1, 1]);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates() {
        let ord = MonomialOrder::new(OrderKind::Block { split: 1 }, &[1, 1, 1]);
        // anything with t beats anything without
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 7, 7])), Ordering::Greater);
    }

    #[test]
    fn weighted_degree() {
        assert_eq!(Monomial::new(&[2, 1], &[1, 2]).degree(), 4);
        assert_eq!(Monomial::new(&[0, 0, 0], &[1, 1, 1]).degree(), 0);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let ord = MonomialOrder::grevlex(&[1, 1]);
        assert!(ord.compare(&m(&[1, 0]), &m(&[1, 0, 0])).is_err());
    }
}
