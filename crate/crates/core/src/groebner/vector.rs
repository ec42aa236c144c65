//! Elements of free modules S^r and module monomial orders.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// How component indices interact with the monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModuleOrderKind {
    /// Position over term: component first (e_0 > e_1 > ...), then monomial.
    Pot,
    /// Term over position: shifted degree, then monomial, then component.
    Top,
}

/// A monomial order on a free module. `shifts` twist the degree of each basis
/// vector; `split` puts components `< split` in a block ranked above all others,
/// which makes the order eliminate those components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub kind: ModuleOrderKind,
    shifts: Arc<[i64]>,
    split: Option<u32>,
}

impl ModuleOrder {
    pub fn new(mono: MonomialOrder, kind: ModuleOrderKind) -> Self {
        ModuleOrder {
            mono,
            kind,
            shifts: Arc::from(Vec::new()),
            split: None,
        }
    }

    /// The order used for ideals: rank one, no twist.
    pub fn rank_one(mono: MonomialOrder) -> Self {
        Self::new(mono, ModuleOrderKind::Top)
    }

    pub fn with_shifts(mut self, shifts: Vec<i64>) -> Self {
        self.shifts = shifts.into();
        self
    }

    pub fn with_split(mut self, split: usize) -> Self {
        self.split = Some(split as u32);
        self
    }

    pub fn split(&self) -> Option<usize> {
        self.split.map(|s| s as usize)
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    #[inline]
    pub fn shift(&self, c: u32) -> i64 {
        self.shifts.get(c as usize).copied().unwrap_or(0)
    }

    #[inline]
    pub fn term_degree(&self, m: &Monomial, c: u32) -> i64 {
        m.degree() as i64 + self.shift(c)
    }

    #[inline]
    pub fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        if let Some(s) = self.split {
            let (ba, bb) = (a.1 < s, b.1 < s);
            if ba != bb {
                return if ba { Ordering::Greater } else { Ordering::Less };
            }
        }
        match self.kind {
            ModuleOrderKind::Pot => b.1.cmp(&a.1).then_with(|| self.mono.cmp(a.0, b.0)),
            ModuleOrderKind::Top => self
                .term_degree(a.0, a.1)
                .cmp(&self.term_degree(b.0, b.1))
                .then_with(|| self.mono.cmp(a.0, b.0))
                .then_with(|| b.1.cmp(&a.1)),
        }
    }
}

pub type VTerm = (Monomial, u32, Scalar);

/// A sparse element of a free module: terms m·e_c with coefficients, strictly
/// descending in a module order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector {
    terms: Vec<VTerm>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_terms(mut terms: Vec<VTerm>, ord: &ModuleOrder) -> Self {
        terms.sort_by(|a, b| ord.cmp((&b.0, b.1), (&a.0, a.1)));
        let mut out: Vec<VTerm> = Vec::with_capacity(terms.len());
        for (m, comp, c) in terms {
            match out.last_mut() {
                Some((lm, lcomp, lc)) if *lm == m && *lcomp == comp => *lc = &*lc + &c,
                _ => out.push((m, comp, c)),
            }
        }
        out.retain(|t| !t.2.is_zero());
        Vector { terms: out }
    }

    /// Terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(terms: Vec<VTerm>) -> Self {
        Vector { terms }
    }

    /// p·e_comp.
    pub fn from_poly(p: &Polynomial, comp: usize, ord: &ModuleOrder) -> Self {
        Self::from_components(&[(comp, p.clone())], ord)
    }

    pub fn from_components(parts: &[(usize, Polynomial)], ord: &ModuleOrder) -> Self {
        let terms = parts
            .iter()
            .flat_map(|(c, p)| p.terms().iter().map(move |(m, s)| (m.clone(), *c as u32, s.clone())))
            .collect();
        Self::from_terms(terms, ord)
    }

    /// Builds a vector from a dense column of polynomials.
    pub fn from_column(col: &[Polynomial], ord: &ModuleOrder) -> Self {
        let parts: Vec<(usize, Polynomial)> = col.iter().cloned().enumerate().collect();
        Self::from_components(&parts, ord)
    }

    pub fn terms(&self) -> &[VTerm] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<VTerm> {
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

    pub fn lead(&self) -> Option<&VTerm> {
        self.terms.first()
    }

    pub fn component(&self, c: usize, mono: &MonomialOrder) -> Polynomial {
        Polynomial::from_terms(
            self.terms
                .iter()
                .filter(|t| t.1 as usize == c)
                .map(|t| (t.0.clone(), t.2.clone()))
                .collect(),
            mono,
        )
    }

    /// Dense column of length `rank`.
    pub fn to_column(&self, rank: usize, mono: &MonomialOrder) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for (m, c, s) in &self.terms {
            buckets[*c as usize].push((m.clone(), s.clone()));
        }
        buckets.into_iter().map(|b| Polynomial::from_terms(b, mono)).collect()
    }

    pub fn max_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.1 as usize).max()
    }

    /// Largest shifted degree among the terms.
    pub fn degree(&self, ord: &ModuleOrder) -> Option<i64> {
        self.terms.iter().map(|t| ord.term_degree(&t.0, t.1)).max()
    }

    pub fn is_homogeneous(&self, ord: &ModuleOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| ord.term_degree(&w[0].0, w[0].1) == ord.term_degree(&w[1].0, w[1].1))
    }

    pub fn add(&self, other: &Vector, ord: &ModuleOrder) -> Vector {
        merge(&self.terms, &other.terms, None, None, ord)
    }

    pub fn sub(&self, other: &Vector, ord: &ModuleOrder) -> Vector {
        match other.terms.first() {
            None => self.clone(),
            Some(t) => {
                let neg = -&t.2.field().one();
                merge(&self.terms, &other.terms, Some(&neg), None, ord)
            }
        }
    }

    /// self + c·m·other
    pub fn add_scaled(&self, other: &Vector, c: &Scalar, m: &Monomial, ord: &ModuleOrder) -> Vector {
        merge(&self.terms, &other.terms, Some(c), Some(m), ord)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|(m, k, a)| (m.clone(), *k, a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            terms: self.terms.iter().map(|(m, k, a)| (m.clone(), *k, -a)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|(a, k, x)| (a.mul(m), *k, x * c)).collect(),
        }
    }

    pub fn mul_poly(&self, p: &Polynomial, ord: &ModuleOrder) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(self, c, m, ord);
        }
        acc
    }

    pub fn monic(&self) -> Vector {
        match self.terms.first() {
            Some(t) if !t.2.is_one() => self.scale(&t.2.inv()),
            _ => self.clone(),
        }
    }

    /// Renumbers components through `f`, dropping those mapped to `None`.
    pub fn remap(&self, f: impl Fn(u32) -> Option<u32>, ord: &ModuleOrder) -> Vector {
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c, s)| f(*c).map(|c2| (m.clone(), c2, s.clone())))
            .collect();
        Vector::from_terms(terms, ord)
    }

    /// True when some component is a nonzero constant; returns that component and value.
    pub fn constant_entry(&self) -> Option<(u32, Scalar)> {
        // a constant entry is a component whose only term is the unit monomial
        let mut best: Option<(u32, Scalar)> = None;
        for (m, c, s) in &self.terms {
            if m.is_one() && self.terms.iter().filter(|t| t.1 == *c).count() == 1 {
                match &best {
                    Some((bc, _)) if *bc <= *c => {}
                    _ => best = Some((*c, s.clone())),
                }
            }
        }
        best
    }
}

fn merge(
    a: &[VTerm],
    b: &[VTerm],
    c: Option<&Scalar>,
    m: Option<&Monomial>,
    ord: &ModuleOrder,
) -> Vector {
    let conv = |t: &VTerm| -> VTerm {
        let mon = match m {
            Some(m) => t.0.mul(m),
            None => t.0.clone(),
        };
        let s = match c {
            Some(c) => &t.2 * c,
            None => t.2.clone(),
        };
        (mon, t.1, s)
    };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<VTerm> = b.first().map(conv);
    loop {
        match (a.get(i), pending.as_ref()) {
            (Some(x), Some(y)) => match ord.cmp((&x.0, x.1), (&y.0, y.1)) {
                Ordering::Greater => {
                    out.push(x.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = b.get(j).map(conv);
                }
                Ordering::Equal => {
                    let y = pending.take().unwrap();
                    let s = &x.2 + &y.2;
                    if !s.is_zero() {
                        out.push((y.0, y.1, s));
                    }
                    i += 1;
                    j += 1;
                    pending = b.get(j).map(conv);
                }
            },
            (Some(_), None) => {
                out.extend_from_slice(&a[i..]);
                break;
            }
            (None, Some(_)) => {
                out.push(pending.take().unwrap());
                out.extend(b[j + 1..].iter().map(conv));
                break;
            }
            (None, None) => break,
        }
    }
    Vector { terms: out }
}
