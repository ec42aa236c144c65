//! Gröbner bases of submodules of free modules over S = k[x] and S/(relations),
//! normal forms, and syzygies.

mod buchberger;
mod syzygy;
pub mod vector;

use crate::error::{AlgebraError, Result};
use crate::ring::RingPresentation;

use buchberger::{reduce, ReducerIndex};
pub use buchberger::groebner_basis;
pub use syzygy::{lift_and_syzygies, lift_and_syzygies_with_shifts, syzygies, syzygies_with_order, Lifting};
pub use vector::{ModuleOrder, ModuleOrderKind, VTerm, Vector};

/// A reduced Gröbner basis together with the order it was computed for.
/// When built through [`buchberger`], the ring relations times every basis
/// vector are part of the generated module, so normal forms are taken
/// modulo the relations as well.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elems: Vec<Vector>,
    order: ModuleOrder,
    rank: usize,
    index: ReducerIndex,
}

impl GroebnerBasis {
    /// Gröbner basis of exactly the module generated by `gens` (no relations added).
    pub fn compute(gens: Vec<Vector>, order: ModuleOrder, rank: usize) -> Self {
        let elems = groebner_basis(gens, &order);
        Self::from_reduced(elems, order, rank)
    }

    fn from_reduced(elems: Vec<Vector>, order: ModuleOrder, rank: usize) -> Self {
        let mut index = ReducerIndex::default();
        for (i, e) in elems.iter().enumerate() {
            index.insert(e.lead().unwrap().1, i);
        }
        GroebnerBasis {
            elems,
            order,
            rank,
            index,
        }
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elems
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_reduced(&self) -> bool {
        true
    }

    /// Is the module the whole free module (a unit in every component)?
    pub fn is_everything(&self) -> bool {
        (0..self.rank).all(|c| {
            self.index
                .candidates(c as u32)
                .iter()
                .any(|&i| self.elems[i].lead().unwrap().0.is_one())
        })
    }

    /// Leading monomials of the basis elements in component `c`.
    pub fn leading_monomials(&self, c: usize) -> Vec<&crate::monomial::Monomial> {
        self.index
            .candidates(c as u32)
            .iter()
            .map(|&i| &self.elems[i].lead().unwrap().0)
            .collect()
    }

    pub fn normal_form(&self, v: &Vector) -> Vector {
        reduce(v.clone(), &self.elems, &self.index, &self.order)
    }

    pub fn checked_normal_form(&self, v: &Vector) -> Result<Vector> {
        if let Some(c) = v.max_component() {
            if c >= self.rank {
                return Err(AlgebraError::RankMismatch {
                    expected: self.rank,
                    found: c + 1,
                });
            }
        }
        Ok(self.normal_form(v))
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Buchberger's criterion: every S-vector of two elements with the same
    /// leading component reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ord = &self.order;
        let w = ord.mono.weights();
        for (i, a) in self.elems.iter().enumerate() {
            for b in &self.elems[i + 1..] {
                let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
                if la.1 != lb.1 {
                    continue;
                }
                let lcm = la.0.lcm(&lb.0, w);
                let one = la.2.field().one();
                let s = a
                    .mul_term(&lcm.div(&la.0), &one)
                    .add_scaled(b, &-&one, &lcm.div(&lb.0), ord);
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// The multiples f·e_j of every ring relation f, for j < rank.
pub fn relation_vectors(ring: &RingPresentation, rank: usize, ord: &ModuleOrder) -> Vec<Vector> {
    let mut out = Vec::new();
    for j in 0..rank {
        for f in ring.relation_basis() {
            out.push(Vector::from_poly(f, j, ord));
        }
    }
    out
}

/// Reduced Gröbner basis of the submodule of R^rank generated by `gens`,
/// where R = S/(relations): the relation multiples are adjoined.
pub fn buchberger(gens: &[Vector], ring: &RingPresentation, ord: &ModuleOrder, rank: usize) -> GroebnerBasis {
    let mut all: Vec<Vector> = gens.to_vec();
    all.extend(relation_vectors(ring, rank, ord));
    GroebnerBasis::compute(all, ord.clone(), rank)
}
