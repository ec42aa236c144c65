//! Syzygies and lifts through one elimination Gröbner basis.
//!
//! For generators g_1..g_m of a submodule of F = R^r, the vectors (g_i, e_i)
//! in F ⊕ R^m are reduced under an order that ranks every F-term above every
//! e-term, with the e-block twisted by deg(g_i) (Schreyer-style, as a degree
//! twist). Basis elements with vanishing F-part carry the syzygies; reducing
//! (v, 0) expresses v in terms of the g_i.

use crate::ring::RingPresentation;

use super::vector::{ModuleOrder, ModuleOrderKind, Vector};
use super::{relation_vectors, GroebnerBasis};

/// Result of the elimination computation for a generator list.
#[derive(Clone, Debug)]
pub struct Lifting {
    gb: GroebnerBasis,
    ambient_rank: usize,
    count: usize,
    source_order: ModuleOrder,
    relations: GroebnerBasis,
    syzygies: Vec<Vector>,
}

impl Lifting {
    /// Generators of the syzygy module in R^m, reduced modulo the ring relations.
    pub fn syzygies(&self) -> &[Vector] {
        &self.syzygies
    }

    pub fn into_syzygies(self) -> Vec<Vector> {
        self.syzygies
    }

    /// The order on R^m used for syzygies and lifts (degree twist = deg g_i).
    pub fn source_order(&self) -> &ModuleOrder {
        &self.source_order
    }

    /// Writes `v` as a combination of the generators: returns `a` with
    /// v = Σ a_i g_i over R, or `None` when v is not in their span.
    pub fn lift(&self, v: &Vector) -> Option<Vector> {
        let nf = self.gb.normal_form(v);
        let r = self.ambient_rank as u32;
        if nf.terms().iter().any(|t| t.1 < r) {
            return None;
        }
        let a = nf
            .remap(|c| Some(c - r), &self.source_order)
            .neg();
        Some(self.relations.normal_form(&a))
    }

    pub fn generator_count(&self) -> usize {
        self.count
    }
}

/// Builds the elimination basis for `gens` ⊂ R^rank where R = ring.
pub fn lift_and_syzygies(
    gens: &[Vector],
    ring: &RingPresentation,
    ambient: &ModuleOrder,
    rank: usize,
) -> Lifting {
    let source_shifts: Vec<i64> = gens.iter().map(|g| g.degree(ambient).unwrap_or(0)).collect();
    lift_and_syzygies_with_shifts(gens, ring, ambient, rank, source_shifts)
}

/// As [`lift_and_syzygies`], with explicit degrees for the source basis
/// (needed when some generators are zero).
pub fn lift_and_syzygies_with_shifts(
    gens: &[Vector],
    ring: &RingPresentation,
    ambient: &ModuleOrder,
    rank: usize,
    source_shifts: Vec<i64>,
) -> Lifting {
    let m = gens.len();
    let mut shifts: Vec<i64> = (0..rank).map(|c| ambient.shift(c as u32)).collect();
    shifts.extend(source_shifts.iter().copied());
    let ord = ModuleOrder::new(ambient.mono.clone(), ModuleOrderKind::Top)
        .with_shifts(shifts)
        .with_split(rank);
    let source_order = ModuleOrder::new(ambient.mono.clone(), ModuleOrderKind::Top).with_shifts(source_shifts);

    let one = ring.field().one();
    let nv = ring.nvars();
    let mut input: Vec<Vector> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut terms = g.terms().to_vec();
            terms.push((crate::monomial::Monomial::one(nv), (rank + i) as u32, one.clone()));
            Vector::from_terms(terms, &ord)
        })
        .collect();
    input.extend(relation_vectors(ring, rank + m, &ord));
    let gb = GroebnerBasis::compute(input, ord, rank + m);

    let relations = GroebnerBasis::compute(
        relation_vectors(ring, m, &source_order),
        source_order.clone(),
        m,
    );
    let r = rank as u32;
    let syzygies: Vec<Vector> = gb
        .elements()
        .iter()
        .filter(|e| e.lead().unwrap().1 >= r)
        .map(|e| relations.normal_form(&e.remap(|c| Some(c - r), &source_order)))
        .filter(|v| !v.is_zero())
        .collect();

    Lifting {
        gb,
        ambient_rank: rank,
        count: m,
        source_order,
        relations,
        syzygies,
    }
}

/// Generators of the kernel of R^m → R^rank, e_i ↦ gens[i], over R = ring.
pub fn syzygies(gens: &[Vector], ring: &RingPresentation, ambient: &ModuleOrder, rank: usize) -> Vec<Vector> {
    lift_and_syzygies(gens, ring, ambient, rank).into_syzygies()
}

/// Same as [`syzygies`] but also returns the order the syzygies are expressed in.
pub fn syzygies_with_order(
    gens: &[Vector],
    ring: &RingPresentation,
    ambient: &ModuleOrder,
    rank: usize,
) -> (Vec<Vector>, ModuleOrder) {
    let l = lift_and_syzygies(gens, ring, ambient, rank);
    let ord = l.source_order.clone();
    (l.into_syzygies(), ord)
}
