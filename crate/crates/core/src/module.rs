//! Finitely generated submodules and subquotients of free modules R^r.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, lift_and_syzygies, relation_vectors, GroebnerBasis, ModuleOrder, ModuleOrderKind, Vector};
use crate::ideal::IdealPresentation;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// A k-dimension, or `Infinite` when some direction of the quotient is free
/// of pure-power leading terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(v) => Some(v),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(v) => write!(f, "{}", v),
            Length::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// The module span(gens)/span(rels) inside R^rank, where the basis vector e_c
/// has degree `shifts[c]`. When `gens` is the standard basis the module is the
/// cokernel of the `rels` columns.
#[derive(Clone, Debug)]
pub struct SubmodulePresentation {
    ring: Ring,
    rank: usize,
    shifts: Vec<i64>,
    gens: Vec<Vector>,
    rels: Vec<Vector>,
    cokernel: bool,
    span_gb: OnceLock<GroebnerBasis>,
    rel_gb: OnceLock<GroebnerBasis>,
}

/// Top order on R^rank twisted by `shifts`.
pub fn free_order(ring: &Ring, shifts: &[i64]) -> ModuleOrder {
    ModuleOrder::new(ring.order().clone(), ModuleOrderKind::Top).with_shifts(shifts.to_vec())
}

fn basis_vectors(ring: &Ring, rank: usize, ord: &ModuleOrder) -> Vec<Vector> {
    (0..rank)
        .map(|c| Vector::from_terms(vec![(ring.one_monomial(), c as u32, ring.field().one())], ord))
        .collect()
}

impl SubmodulePresentation {
    fn build(ring: Ring, shifts: Vec<i64>, gens: Vec<Vector>, rels: Vec<Vector>, cokernel: bool) -> Self {
        SubmodulePresentation {
            ring,
            rank: shifts.len(),
            shifts,
            gens,
            rels,
            cokernel,
            span_gb: OnceLock::new(),
            rel_gb: OnceLock::new(),
        }
    }

    /// R^rank with the given basis degrees.
    pub fn free(ring: &Ring, shifts: Vec<i64>) -> Self {
        Self::cokernel(ring, shifts, Vec::new())
    }

    /// R^rank / span(rels).
    pub fn cokernel(ring: &Ring, shifts: Vec<i64>, rels: Vec<Vector>) -> Self {
        let ord = free_order(ring, &shifts);
        let gens = basis_vectors(ring, shifts.len(), &ord);
        let rels = rels.into_iter().filter(|v| !v.is_zero()).collect();
        Self::build(ring.clone(), shifts, gens, rels, true)
    }

    /// Cokernel of a dense matrix given by rows; basis degrees are inferred
    /// when the matrix is homogeneous for some choice of them.
    pub fn cokernel_of_rows(ring: &Ring, rows: &[Vec<Polynomial>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::RankMismatch {
                expected: ncols,
                found: rows.iter().map(|r| r.len()).find(|&l| l != ncols).unwrap_or(0),
            });
        }
        let shifts = infer_shifts(rows);
        let ord = free_order(ring, &shifts);
        let cols = (0..ncols)
            .map(|j| {
                let parts: Vec<(usize, Polynomial)> = (0..nrows).map(|i| (i, rows[i][j].clone())).collect();
                Vector::from_components(&parts, &ord)
            })
            .collect();
        Ok(Self::cokernel(ring, shifts, cols))
    }

    /// The submodule of R^rank generated by `gens`.
    pub fn image(ring: &Ring, shifts: Vec<i64>, gens: Vec<Vector>) -> Self {
        let gens = gens.into_iter().filter(|v| !v.is_zero()).collect();
        Self::build(ring.clone(), shifts, gens, Vec::new(), false)
    }

    /// span(gens)/span(rels); containment is checked when presenting.
    pub fn subquotient(ring: &Ring, shifts: Vec<i64>, gens: Vec<Vector>, rels: Vec<Vector>) -> Self {
        let gens = gens.into_iter().filter(|v| !v.is_zero()).collect();
        let rels = rels.into_iter().filter(|v| !v.is_zero()).collect();
        Self::build(ring.clone(), shifts, gens, rels, false)
    }

    /// R/J as a cyclic module.
    pub fn quotient_ring(ideal: &IdealPresentation) -> Self {
        let ring = ideal.ring();
        let ord = free_order(ring, &[0]);
        let rels = ideal.generators().iter().map(|g| Vector::from_poly(g, 0, &ord)).collect();
        Self::cokernel(ring, vec![0], rels)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn generators(&self) -> &[Vector] {
        &self.gens
    }

    pub fn relations(&self) -> &[Vector] {
        &self.rels
    }

    pub fn is_cokernel(&self) -> bool {
        self.cokernel
    }

    pub fn order(&self) -> ModuleOrder {
        free_order(&self.ring, &self.shifts)
    }

    /// Gröbner basis of span(gens) + ring relations.
    pub fn span_basis(&self) -> &GroebnerBasis {
        self.span_gb
            .get_or_init(|| buchberger(&self.gens, &self.ring, &self.order(), self.rank))
    }

    /// Gröbner basis of span(rels) + ring relations.
    pub fn relation_basis(&self) -> &GroebnerBasis {
        self.rel_gb
            .get_or_init(|| buchberger(&self.rels, &self.ring, &self.order(), self.rank))
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.span_basis().contains(v)
    }

    /// Same span of generators (relations ignored).
    pub fn same_span(&self, other: &SubmodulePresentation) -> bool {
        other.gens.iter().all(|g| self.contains(g)) && self.gens.iter().all(|g| other.contains(g))
    }

    /// A cokernel presentation of span(gens)/span(rels).
    pub fn present(&self) -> Result<SubmodulePresentation> {
        if self.cokernel {
            return Ok(self.clone());
        }
        present_subquotient(self, &self.rels)
    }

    /// A cokernel presentation with no unit entries in the relation matrix.
    pub fn pruned(&self) -> Result<SubmodulePresentation> {
        let p = self.present()?;
        let (shifts, rels, _) = prune(&p.ring, p.shifts.clone(), p.rels.clone());
        Ok(Self::cokernel(&p.ring, shifts, rels))
    }

    pub fn length(&self) -> Result<Length> {
        let p = self.present()?;
        Ok(cokernel_length(p.relation_basis(), p.rank, &p.ring))
    }

    /// dim_k of the degree-d part.
    pub fn hilbert_function(&self, d: i64) -> Result<u64> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::Inhomogeneous("module presentation".into()));
        }
        let p = self.present()?;
        let gb = p.relation_basis();
        let mut count = 0;
        for c in 0..p.rank {
            let target = d - p.shifts[c];
            if target < 0 {
                continue;
            }
            let leads = gb.leading_monomials(c);
            count += monomials_of_degree(p.ring.weights(), target as u32)
                .into_iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count() as u64;
        }
        Ok(count)
    }

    pub fn is_homogeneous(&self) -> bool {
        let ord = self.order();
        self.gens.iter().chain(&self.rels).all(|v| v.is_homogeneous(&ord))
    }

    /// Krull dimension of the module (−1 for the zero module).
    pub fn krull_dim(&self) -> Result<i64> {
        let p = self.present()?;
        let gb = p.relation_basis();
        Ok((0..p.rank)
            .map(|c| monomial_dimension(&gb.leading_monomials(c), p.ring.nvars()))
            .max()
            .unwrap_or(-1))
    }

    /// Number of generators of a minimal presentation.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        Ok(self.pruned()?.rank)
    }

    /// I·M for a submodule M: generated by f·g.
    pub fn ideal_product(&self, ideal: &IdealPresentation) -> SubmodulePresentation {
        let ord = self.order();
        let gens = ideal
            .generators()
            .iter()
            .flat_map(|f| self.gens.iter().map(move |g| (f, g)))
            .map(|(f, g)| self.reduce_mod_ring(&g.mul_poly(f, &ord)))
            .collect();
        Self::image(&self.ring, self.shifts.clone(), dedup_vectors(gens))
    }

    /// M/IⁿM, as a presentation of the same kind.
    pub fn quotient_by_power(&self, ideal: &IdealPresentation, n: u32) -> SubmodulePresentation {
        let power = ideal.power(n);
        let extra = self.ideal_product(&power).gens;
        let mut rels = self.rels.clone();
        rels.extend(extra);
        if self.cokernel {
            Self::cokernel(&self.ring, self.shifts.clone(), rels)
        } else {
            Self::subquotient(&self.ring, self.shifts.clone(), self.gens.clone(), rels)
        }
    }

    /// span(gens) ∩ span(other.gens), by syzygies of the juxtaposed generators.
    pub fn intersect(&self, other: &SubmodulePresentation) -> Result<SubmodulePresentation> {
        if self.rank != other.rank {
            return Err(AlgebraError::RankMismatch {
                expected: self.rank,
                found: other.rank,
            });
        }
        let ord = self.order();
        let mut all = self.gens.clone();
        all.extend(other.gens.iter().cloned());
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Self::image(&self.ring, self.shifts.clone(), Vec::new()));
        }
        let lifting = lift_and_syzygies(&all, &self.ring, &ord, self.rank);
        let k = self.gens.len() as u32;
        let mut out = Vec::new();
        for s in lifting.syzygies() {
            let mut acc = Vector::zero();
            for (m, c, a) in s.terms() {
                if *c < k {
                    acc = acc.add_scaled(&self.gens[*c as usize], a, m, &ord);
                }
            }
            let acc = self.reduce_mod_ring(&acc);
            if !acc.is_zero() {
                out.push(acc);
            }
        }
        Ok(Self::image(&self.ring, self.shifts.clone(), dedup_vectors(out)))
    }

    /// (span(gens) : e_c) = {r : r·e_c ∈ span(gens)}.
    pub fn component_colon(&self, c: usize) -> IdealPresentation {
        let ord = self.order();
        let e = Vector::from_terms(vec![(self.ring.one_monomial(), c as u32, self.ring.field().one())], &ord);
        let mut all = vec![e];
        all.extend(self.gens.iter().cloned());
        let lifting = lift_and_syzygies(&all, &self.ring, &ord, self.rank);
        let gens = lifting
            .syzygies()
            .iter()
            .map(|s| s.component(0, self.ring.order()))
            .filter(|p| !p.is_zero())
            .collect();
        IdealPresentation::new(&self.ring, gens)
    }

    /// {v ∈ R^rank : g·v ∈ span(gens)}.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<SubmodulePresentation> {
        if g.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        let ord = self.order();
        let one = self.ring.field().one();
        let mut all: Vec<Vector> = (0..self.rank)
            .map(|c| {
                Vector::from_terms(vec![(self.ring.one_monomial(), c as u32, one.clone())], &ord).mul_poly(g, &ord)
            })
            .collect();
        let gdeg = g.degree().unwrap_or(0) as i64;
        let mut shifts: Vec<i64> = self.shifts.iter().map(|s| s + gdeg).collect();
        shifts.extend(self.gens.iter().map(|v| v.degree(&ord).unwrap_or(0)));
        all.extend(self.gens.iter().cloned());
        let lifting = crate::groebner::lift_and_syzygies_with_shifts(&all, &self.ring, &ord, self.rank, shifts);
        let r = self.rank as u32;
        let gens = lifting
            .syzygies()
            .iter()
            .map(|s| self.reduce_mod_ring(&s.remap(|c| (c < r).then_some(c), &ord)))
            .collect();
        Ok(Self::image(&self.ring, self.shifts.clone(), dedup_vectors(gens)))
    }

    /// (span(gens) : K) = {v : K·v ⊆ span(gens)}.
    pub fn colon_ideal(&self, k: &IdealPresentation) -> Result<SubmodulePresentation> {
        let mut acc: Option<SubmodulePresentation> = None;
        for g in k.generators() {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        acc.ok_or(AlgebraError::ZeroDivisor)
    }

    /// (span(gens) : K^∞) by iterated colon, with the number of strict steps.
    pub fn saturate(&self, k: &IdealPresentation) -> Result<(SubmodulePresentation, usize)> {
        let mut cur = Self::image(&self.ring, self.shifts.clone(), self.gens.clone());
        let mut steps = 0;
        loop {
            let next = cur.colon_ideal(k)?;
            if next.generators().iter().all(|v| cur.contains(v)) {
                return Ok((cur, steps));
            }
            cur = next;
            steps += 1;
        }
    }

    /// ann(M) for the module this presents.
    pub fn annihilator(&self) -> Result<IdealPresentation> {
        let p = self.present()?;
        let rel_span = Self::image(&p.ring, p.shifts.clone(), p.rels.clone());
        let mut acc: Option<IdealPresentation> = None;
        for c in 0..p.rank {
            let col = rel_span.component_colon(c);
            acc = Some(match acc {
                None => col,
                Some(a) => a.intersect(&col),
            });
        }
        Ok(acc.unwrap_or_else(|| IdealPresentation::unit(&p.ring)))
    }

    fn reduce_mod_ring(&self, v: &Vector) -> Vector {
        if self.ring.relation_basis().is_empty() {
            return v.clone();
        }
        ring_reducer(&self.ring, self.rank, &self.order()).normal_form(v)
    }
}

/// Gröbner basis of the ring relations in every component of R^rank.
pub fn ring_reducer(ring: &Ring, rank: usize, ord: &ModuleOrder) -> GroebnerBasis {
    GroebnerBasis::compute(relation_vectors(ring, rank, ord), ord.clone(), rank)
}

fn dedup_vectors(vs: Vec<Vector>) -> Vec<Vector> {
    let mut seen = HashSet::new();
    vs.into_iter()
        .filter(|v| !v.is_zero())
        .filter(|v| seen.insert(v.monic()))
        .collect()
}

/// Presents K/Jsub as a cokernel: the free module on K's generators modulo
/// the syzygies of those generators and lifts of Jsub's generators.
pub fn present_subquotient(k: &SubmodulePresentation, jsub: &[Vector]) -> Result<SubmodulePresentation> {
    let ring = &k.ring;
    let ord = k.order();
    let lifting = lift_and_syzygies(&k.gens, ring, &ord, k.rank);
    let mut rels: Vec<Vector> = lifting.syzygies().to_vec();
    for v in jsub {
        match lifting.lift(v) {
            Some(a) => rels.push(a),
            None => return Err(AlgebraError::Containment),
        }
    }
    let shifts = lifting.source_order().shifts().to_vec();
    Ok(SubmodulePresentation::cokernel(ring, shifts, rels))
}

/// Removes unit entries from a relation matrix. Returns the remaining basis
/// degrees, the relations, and the indices of the surviving rows.
pub fn prune(ring: &Ring, mut shifts: Vec<i64>, cols: Vec<Vector>) -> (Vec<i64>, Vec<Vector>, Vec<usize>) {
    let mut kept: Vec<usize> = (0..shifts.len()).collect();
    let mut cols: Vec<Vector> = cols.into_iter().filter(|v| !v.is_zero()).collect();
    loop {
        let pick = cols
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.constant_entry().map(|(r, u)| (i, r, u, v.len())))
            .min_by_key(|t| t.3);
        let Some((idx, r, u, _)) = pick else { break };
        let ord = free_order(ring, &shifts);
        let pivot = cols.swap_remove(idx).scale(&u.inv());
        for c in cols.iter_mut() {
            let p = c.component(r as usize, ring.order());
            if !p.is_zero() {
                *c = c.sub(&pivot.mul_poly(&p, &ord), &ord);
            }
        }
        shifts.remove(r as usize);
        kept.remove(r as usize);
        let new_ord = free_order(ring, &shifts);
        let reducer = ring_reducer(ring, shifts.len(), &new_ord);
        cols = cols
            .iter()
            .map(|c| {
                let v = c.remap(|k| if k == r { None } else if k > r { Some(k - 1) } else { Some(k) }, &new_ord);
                if ring.relation_basis().is_empty() {
                    v
                } else {
                    reducer.normal_form(&v)
                }
            })
            .filter(|v| !v.is_zero())
            .collect();
    }
    (shifts, cols, kept)
}

/// Counts standard monomials of a cokernel; `Infinite` when some component
/// lacks a pure power of some variable among its leading monomials.
pub fn cokernel_length(gb: &GroebnerBasis, rank: usize, ring: &Ring) -> Length {
    let nv = ring.nvars();
    let mut total = 0u64;
    for c in 0..rank {
        let leads = gb.leading_monomials(c);
        if leads.iter().any(|l| l.is_one()) {
            continue;
        }
        let mut has_power = vec![false; nv];
        for l in &leads {
            if let Some(v) = l.pure_power_var() {
                has_power[v] = true;
            }
        }
        if !has_power.iter().all(|&b| b) {
            return Length::Infinite;
        }
        total += count_standard(&leads, ring) as u64;
    }
    Length::Finite(total)
}

/// Breadth-first walk over the order ideal of standard monomials.
fn count_standard(leads: &[&Monomial], ring: &Ring) -> usize {
    let nv = ring.nvars();
    let w = ring.weights();
    let start = Monomial::one(nv);
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(m) = queue.pop_front() {
        for (i, &wi) in w.iter().enumerate().take(nv) {
            let next = m.mul(&Monomial::var(nv, i, wi));
            if seen.contains(&next) || leads.iter().any(|l| l.divides(&next)) {
                continue;
            }
            seen.insert(next.clone());
            queue.push_back(next);
        }
    }
    seen.len()
}

/// All monomials of weighted degree `d`.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>, all: &[u32]) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::new(cur, all));
            }
            return;
        }
        let mut e = 0;
        while e * weights[i] <= left {
            cur.push(e);
            rec(weights, i + 1, left - e * weights[i], cur, out, all);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut Vec::new(), &mut out, weights);
    out
}

/// Dimension of S/(monomial ideal): the largest set of variables containing
/// the support of no generator. −1 when a generator is 1.
pub fn monomial_dimension(leads: &[&Monomial], nvars: usize) -> i64 {
    if leads.iter().any(|l| l.is_one()) {
        return -1;
    }
    let supports: Vec<u64> = leads.iter().map(|l| l.support()).collect();
    let mut best = 0i64;
    for subset in 0u64..(1u64 << nvars) {
        let size = subset.count_ones() as i64;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Basis degrees making every entry's column homogeneous, if they exist
/// (all zero otherwise).
fn infer_shifts(rows: &[Vec<Polynomial>]) -> Vec<i64> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut row_deg: Vec<Option<i64>> = vec![None; nrows];
    let mut col_deg: Vec<Option<i64>> = vec![None; ncols];
    for r in 0..nrows {
        if row_deg[r].is_some() {
            continue;
        }
        row_deg[r] = Some(0);
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..nrows {
                for j in 0..ncols {
                    let p = &rows[i][j];
                    let Some(d) = p.degree() else { continue };
                    if !p.is_homogeneous() {
                        return vec![0; nrows];
                    }
                    let d = d as i64;
                    match (row_deg[i], col_deg[j]) {
                        (Some(a), None) => {
                            col_deg[j] = Some(a + d);
                            changed = true;
                        }
                        (None, Some(b)) => {
                            row_deg[i] = Some(b - d);
                            changed = true;
                        }
                        (Some(a), Some(b)) if a + d != b => return vec![0; nrows],
                        _ => {}
                    }
                }
            }
        }
    }
    let shifts: Vec<i64> = row_deg.into_iter().map(|d| d.unwrap_or(0)).collect();
    let min = shifts.iter().copied().min().unwrap_or(0);
    shifts.into_iter().map(|s| s - min).collect()
}

/// Smallest k with IⁿM ∩ N = I^{n−k}(IᵏM ∩ N) for every n in [max(k, lo), hi].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinReesCertificate {
    pub index: Option<u32>,
    /// The n values on which the equality was checked by mutual membership.
    pub certified: Vec<u32>,
    pub window: (u32, u32),
}

pub fn artin_rees_index(
    m: &SubmodulePresentation,
    n: &SubmodulePresentation,
    ideal: &IdealPresentation,
    window: (u32, u32),
) -> Result<ArtinReesCertificate> {
    let (lo, hi) = window;
    let mut lhs: Vec<SubmodulePresentation> = Vec::new();
    for e in 0..=hi {
        let power = ideal.power(e);
        lhs.push(m.ideal_product(&power).intersect(n)?);
    }
    for k in 0..=hi {
        let start = lo.max(k);
        let mut ok = true;
        let mut certified = Vec::new();
        for e in start..=hi {
            let rhs = lhs[k as usize].ideal_product(&ideal.power(e - k));
            if !rhs.same_span(&lhs[e as usize]) {
                ok = false;
                break;
            }
            certified.push(e);
        }
        if ok {
            return Ok(ArtinReesCertificate {
                index: Some(k),
                certified,
                window,
            });
        }
    }
    Ok(ArtinReesCertificate {
        index: None,
        certified: Vec::new(),
        window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::OrderKind;
    use crate::ring::RingPresentation;
    use crate::scalar::{Field, DEFAULT_PRIME};

    fn xy() -> Ring {
        RingPresentation::polynomial_ring(&["x", "y"], Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(r, gens.iter().map(|g| r.parse_poly(g).unwrap()).collect())
    }

    #[test]
    fn length_of_fat_point() {
        let r = xy();
        let m = SubmodulePresentation::quotient_ring(&ideal(&r, &["x^2", "x*y", "y^2"]));
        assert_eq!(m.length().unwrap(), Length::Finite(3));
        let line = SubmodulePresentation::quotient_ring(&ideal(&r, &["x"]));
        assert_eq!(line.length().unwrap(), Length::Infinite);
    }

    #[test]
    fn subquotient_of_principal_ideals() {
        let r = RingPresentation::polynomial_ring(&["x"], Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap();
        let ord = free_order(&r, &[0]);
        let v = |s: &str| Vector::from_poly(&r.parse_poly(s).unwrap(), 0, &ord);
        let k = SubmodulePresentation::subquotient(&r, vec![0], vec![v("x")], vec![v("x^2")]);
        assert_eq!(k.length().unwrap(), Length::Finite(1));
        let same = SubmodulePresentation::subquotient(&r, vec![0], vec![v("x")], vec![v("x")]);
        assert_eq!(same.length().unwrap(), Length::Finite(0));
        let bad = SubmodulePresentation::subquotient(&r, vec![0], vec![v("x^2")], vec![v("x")]);
        assert_eq!(bad.present().unwrap_err(), AlgebraError::Containment);
    }

    #[test]
    fn hilbert_function_of_plane() {
        let r = xy();
        let m = SubmodulePresentation::free(&r, vec![0]);
        assert_eq!(m.hilbert_function(3).unwrap(), 4);
        let zero = SubmodulePresentation::quotient_ring(&IdealPresentation::unit(&r));
        assert_eq!(zero.hilbert_function(5).unwrap(), 0);
    }

    #[test]
    fn pruning_removes_units() {
        let r = xy();
        let rows = vec![
            vec![r.parse_poly("1").unwrap(), r.parse_poly("0").unwrap()],
            vec![r.parse_poly("x").unwrap(), r.parse_poly("y").unwrap()],
        ];
        let m = SubmodulePresentation::cokernel_of_rows(&r, &rows);
        // rows: e0 = -x e1, y e1 = 0 => R/(y)
        let m = m.unwrap();
        let p = m.pruned().unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.relations().len(), 1);
        assert_eq!(p.krull_dim().unwrap(), 1);
    }

    #[test]
    fn dimension_of_monomial_ideals() {
        let r = xy();
        let m = SubmodulePresentation::quotient_ring(&ideal(&r, &["x", "y"]));
        assert_eq!(m.krull_dim().unwrap(), 0);
        let unit = SubmodulePresentation::quotient_ring(&IdealPresentation::unit(&r));
        assert_eq!(unit.krull_dim().unwrap(), -1);
    }

    #[test]
    fn artin_rees_on_a_line() {
        let r = xy();
        let ord = free_order(&r, &[0]);
        let full = SubmodulePresentation::free(&r, vec![0]);
        let n = SubmodulePresentation::image(&r, vec![0], vec![Vector::from_poly(&r.parse_poly("x").unwrap(), 0, &ord)]);
        let m = ideal(&r, &["x", "y"]);
        let cert = artin_rees_index(&full, &n, &m, (0, 7)).unwrap();
        assert_eq!(cert.index, Some(1));
        assert_eq!(cert.certified, (1..=7).collect::<Vec<_>>());
        let trivial = artin_rees_index(&full, &full, &m, (0, 5)).unwrap();
        assert_eq!(trivial.index, Some(0));
    }

    #[test]
    fn monomial_enumeration_by_weight() {
        assert_eq!(monomials_of_degree(&[1, 2], 4).len(), 3);
        assert_eq!(monomials_of_degree(&[1, 1, 1], 2).len(), 6);
    }
}
