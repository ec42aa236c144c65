//! Ideals of R: powers, products, colon, saturation, intersection, dimension.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, lift_and_syzygies, GroebnerBasis, ModuleOrder, Vector};
use crate::module::{monomial_dimension, Length, SubmodulePresentation};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug)]
pub struct IdealPresentation {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl IdealPresentation {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Self {
        IdealPresentation {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        Self::new(ring, vec![ring.one()])
    }

    /// The ideal of all variables.
    pub fn maximal(ring: &Ring) -> Self {
        Self::new(ring, (0..ring.nvars()).map(|i| ring.var(i)).collect())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    fn order(&self) -> ModuleOrder {
        ModuleOrder::rank_one(self.ring.order().clone())
    }

    fn vectors(&self) -> Vec<Vector> {
        let ord = self.order();
        self.gens.iter().map(|g| Vector::from_poly(g, 0, &ord)).collect()
    }

    /// Reduced Gröbner basis of J + (ring relations), computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| buchberger(&self.vectors(), &self.ring, &self.order(), 1))
    }

    /// Basis polynomials of the ideal in S, with the ring relations included.
    pub fn basis_polynomials(&self) -> Vec<Polynomial> {
        self.groebner()
            .elements()
            .iter()
            .map(|v| v.component(0, self.ring.order()))
            .collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let v = Vector::from_poly(p, 0, &self.order());
        self.groebner().normal_form(&v).component(0, self.ring.order())
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealPresentation) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals of R (mutual containment).
    pub fn equals(&self, other: &IdealPresentation) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_everything()
    }

    /// True when every generator is zero in R.
    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| self.ring.reduce(g).is_zero())
    }

    /// Iⁿ, generated by the n-fold products of generators; I⁰ is the unit ideal.
    pub fn power(&self, n: u32) -> IdealPresentation {
        let mut acc = vec![self.ring.one()];
        for _ in 0..n {
            let mut next = Vec::new();
            let mut seen = HashSet::new();
            for a in &acc {
                for g in &self.gens {
                    let p = self.ring.reduce(&self.ring.mul(a, g));
                    if !p.is_zero() && seen.insert(p.monic()) {
                        next.push(p);
                    }
                }
            }
            acc = next;
        }
        IdealPresentation::new(&self.ring, acc)
    }

    pub fn product(&self, other: &IdealPresentation) -> IdealPresentation {
        let mut seen = HashSet::new();
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let p = self.ring.reduce(&self.ring.mul(a, b));
                if !p.is_zero() && seen.insert(p.monic()) {
                    gens.push(p);
                }
            }
        }
        IdealPresentation::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &IdealPresentation) -> IdealPresentation {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealPresentation::new(&self.ring, gens)
    }

    /// J : g, from the first coordinates of the syzygies of (g, j_1, ..., j_k).
    pub fn colon_poly(&self, g: &Polynomial) -> Result<IdealPresentation> {
        if g.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        let ord = self.order();
        let mut all = vec![Vector::from_poly(g, 0, &ord)];
        all.extend(self.vectors());
        let lifting = lift_and_syzygies(&all, &self.ring, &ord, 1);
        let gens = lifting
            .syzygies()
            .iter()
            .map(|s| s.component(0, self.ring.order()))
            .collect();
        Ok(IdealPresentation::new(&self.ring, gens).minimalized())
    }

    /// J : K, the intersection of the colons by K's generators.
    pub fn colon(&self, k: &IdealPresentation) -> Result<IdealPresentation> {
        let mut acc: Option<IdealPresentation> = None;
        for g in &k.gens {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.ok_or(AlgebraError::ZeroDivisor)
    }

    /// (J : K^∞) by iterated colon, with the number of strict steps taken.
    pub fn saturate(&self, k: &IdealPresentation) -> Result<(IdealPresentation, usize)> {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.colon(k)?;
            if cur.contains_ideal(&next) {
                return Ok((cur, steps));
            }
            cur = next;
            steps += 1;
        }
    }

    /// J₁ ∩ J₂ via syzygies of the juxtaposed generators.
    pub fn intersect(&self, other: &IdealPresentation) -> IdealPresentation {
        let a = SubmodulePresentation::image(&self.ring, vec![0], self.vectors());
        let b = SubmodulePresentation::image(&self.ring, vec![0], other.vectors());
        let both = a.intersect(&b).expect("rank one");
        let gens = both
            .generators()
            .iter()
            .map(|v| v.component(0, self.ring.order()))
            .collect();
        IdealPresentation::new(&self.ring, gens).minimalized()
    }

    /// Drops generators that lie in the ideal of the earlier ones, after
    /// replacing the list by the reduced basis when that is shorter.
    pub fn minimalized(self) -> IdealPresentation {
        let basis: Vec<Polynomial> = self
            .basis_polynomials()
            .into_iter()
            .filter(|p| !self.ring.relation_basis().contains(p))
            .collect();
        let mut gens = if basis.len() < self.gens.len() { basis } else { self.gens.clone() };
        gens.sort_by_key(|g| g.degree().unwrap_or(0));
        let mut kept: Vec<Polynomial> = Vec::new();
        for g in gens {
            let prefix = IdealPresentation::new(&self.ring, kept.clone());
            if kept.is_empty() || !prefix.contains(&g) {
                kept.push(g);
            }
        }
        let out = IdealPresentation::new(&self.ring, kept);
        if let Some(gb) = self.gb.get() {
            let _ = out.gb.set(gb.clone());
        }
        out
    }

    /// R/J as a cyclic module.
    pub fn quotient_module(&self) -> SubmodulePresentation {
        SubmodulePresentation::quotient_ring(self)
    }

    pub fn length(&self) -> Length {
        crate::module::cokernel_length(self.groebner(), 1, &self.ring)
    }

    pub fn hilbert_function(&self, d: i64) -> Result<u64> {
        self.quotient_module().hilbert_function(d)
    }

    /// dim R/J; −1 for the unit ideal.
    pub fn krull_dim(&self) -> i64 {
        monomial_dimension(&self.groebner().leading_monomials(0), self.ring.nvars())
    }

    pub fn format(&self) -> String {
        self.gens
            .iter()
            .map(|g| self.ring.format_poly(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for IdealPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.format())
    }
}

pub fn ideal_power(i: &IdealPresentation, n: u32) -> IdealPresentation {
    i.power(n)
}

pub fn colon(j: &IdealPresentation, k: &IdealPresentation) -> Result<IdealPresentation> {
    j.colon(k)
}

pub fn saturate(j: &IdealPresentation, k: &IdealPresentation) -> Result<(IdealPresentation, usize)> {
    j.saturate(k)
}

pub fn intersect(a: &IdealPresentation, b: &IdealPresentation) -> IdealPresentation {
    a.intersect(b)
}

pub fn krull_dim(j: &IdealPresentation) -> i64 {
    j.krull_dim()
}
