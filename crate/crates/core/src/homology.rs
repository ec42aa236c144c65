//! Free resolutions, Ext and Tor as explicit subquotients, H⁰_m, symbolic
//! powers, composed functors and length sequences over n.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::groebner::{lift_and_syzygies_with_shifts, syzygies_with_order, Vector};
use crate::growth::LengthSequence;
use crate::ideal::IdealPresentation;
use crate::module::{free_order, prune, ring_reducer, Length, SubmodulePresentation};
use crate::par::Execution;
use crate::ring::Ring;

/// F_L → ... → F_1 → F_0 → M, minimal (no unit entries).
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: Ring,
    degrees: Vec<Vec<i64>>,
    maps: Vec<Vec<Vector>>,
    target: SubmodulePresentation,
}

impl FreeResolution {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of nonzero differentials.
    pub fn length(&self) -> usize {
        self.maps.iter().take_while(|m| !m.is_empty()).count()
    }

    /// Number of differentials computed (zero ones included).
    pub fn computed_steps(&self) -> usize {
        self.maps.len()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.degrees.get(i).map_or(0, |d| d.len())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.len()).collect()
    }

    /// Degrees of the basis of F_i.
    pub fn degrees(&self, i: usize) -> &[i64] {
        self.degrees.get(i).map_or(&[], |d| d.as_slice())
    }

    /// Columns of d_i : F_i → F_{i−1}, for i ≥ 1.
    pub fn differential(&self, i: usize) -> &[Vector] {
        assert!(i >= 1, "differentials start at d_1");
        self.maps.get(i - 1).map_or(&[], |m| m.as_slice())
    }

    pub fn target(&self) -> &SubmodulePresentation {
        &self.target
    }

    /// d_i ∘ d_{i+1} = 0 modulo the ring relations, for every computed pair.
    pub fn is_complex(&self) -> bool {
        for i in 1..self.maps.len() {
            let ord = free_order(&self.ring, self.degrees(i - 1));
            let reducer = ring_reducer(&self.ring, self.rank(i - 1), &ord);
            let d = self.differential(i);
            for col in self.differential(i + 1) {
                let mut acc = Vector::zero();
                for (m, c, a) in col.terms() {
                    acc = acc.add_scaled(&d[*c as usize], a, m, &ord);
                }
                if !reducer.normal_form(&acc).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// No differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.maps
            .iter()
            .flatten()
            .all(|v| v.terms().iter().all(|t| !t.0.is_one()))
    }
}

/// Minimal partial resolution d_1..d_len of `m`.
pub fn free_resolution(m: &SubmodulePresentation, len: usize) -> Result<FreeResolution> {
    let p = m.pruned()?;
    let ring = p.ring().clone();
    let mut degrees = vec![p.shifts().to_vec()];
    let mut maps: Vec<Vec<Vector>> = Vec::new();
    if len == 0 {
        return Ok(FreeResolution {
            ring,
            degrees,
            maps,
            target: m.clone(),
        });
    }
    maps.push(p.relations().to_vec());
    degrees.push({
        let ord = free_order(&ring, &degrees[0]);
        p.relations().iter().map(|v| v.degree(&ord).unwrap_or(0)).collect()
    });
    for step in 1..len {
        let prev = &maps[step - 1];
        if prev.is_empty() {
            maps.push(Vec::new());
            degrees.push(Vec::new());
            continue;
        }
        let ord = free_order(&ring, &degrees[step - 1]);
        let (syz, src) = syzygies_with_order(prev, &ring, &ord, degrees[step - 1].len());
        let (shifts, cols, kept) = prune(&ring, src.shifts().to_vec(), syz);
        maps[step - 1] = kept.iter().map(|&k| prev[k].clone()).collect();
        let next_degrees: Vec<i64> = {
            let o = free_order(&ring, &shifts);
            cols.iter().map(|v| v.degree(&o).unwrap_or(0)).collect()
        };
        maps.push(cols);
        degrees[step] = shifts;
        degrees.push(next_degrees);
    }
    Ok(FreeResolution {
        ring,
        degrees,
        maps,
        target: m.clone(),
    })
}

/// A homology module with its homological index.
#[derive(Clone, Debug)]
pub struct HomologyModule {
    pub index: usize,
    presentation: SubmodulePresentation,
    length: OnceLock<Result<Length>>,
}

impl HomologyModule {
    pub fn new(index: usize, presentation: SubmodulePresentation) -> Self {
        HomologyModule {
            index,
            presentation,
            length: OnceLock::new(),
        }
    }

    pub fn presentation(&self) -> &SubmodulePresentation {
        &self.presentation
    }

    pub fn length(&self) -> Result<Length> {
        self.length.get_or_init(|| self.presentation.length()).clone()
    }

    pub fn krull_dim(&self) -> Result<i64> {
        self.presentation.krull_dim()
    }
}

/// B^r laid out as blocks: component (j, β) has index j·b + β.
struct Coefficients {
    shifts: Vec<i64>,
    rels: Vec<Vector>,
}

impl Coefficients {
    fn of(b: &SubmodulePresentation) -> Result<Self> {
        let p = b.pruned()?;
        Ok(Coefficients {
            shifts: p.shifts().to_vec(),
            rels: p.relations().to_vec(),
        })
    }

    fn b(&self) -> usize {
        self.shifts.len()
    }

    /// Copies of the relations of B in each of `blocks` blocks.
    fn block_relations(&self, ring: &Ring, blocks: usize, shifts: &[i64]) -> Vec<Vector> {
        let ord = free_order(ring, shifts);
        let b = self.b() as u32;
        let mut out = Vec::new();
        for j in 0..blocks as u32 {
            for q in &self.rels {
                out.push(q.remap(|c| Some(j * b + c), &ord));
            }
        }
        out
    }
}

/// ker(β) / im(α) in C = B^{rank c}, with β : C → C'' given by the images of
/// the basis of C, all taken modulo copies of B's relations.
fn homology(
    ring: &Ring,
    coeff: &Coefficients,
    c_shifts: Vec<i64>,
    c2_shifts: &[i64],
    alpha: Vec<Vector>,
    beta: Vec<Vector>,
    index: usize,
) -> HomologyModule {
    let c = c_shifts.len();
    let b = coeff.b();
    let q_c = coeff.block_relations(ring, c / b.max(1), &c_shifts);
    let c_ord = free_order(ring, &c_shifts);
    let kernel: Vec<Vector> = if c2_shifts.is_empty() || beta.iter().all(|v| v.is_zero()) {
        (0..c)
            .map(|k| Vector::from_terms(vec![(ring.one_monomial(), k as u32, ring.field().one())], &c_ord))
            .collect()
    } else {
        let c2_ord = free_order(ring, c2_shifts);
        let q_c2 = coeff.block_relations(ring, c2_shifts.len() / b.max(1), c2_shifts);
        let mut gens = beta;
        let mut shifts = c_shifts.clone();
        shifts.extend(q_c2.iter().map(|v| v.degree(&c2_ord).unwrap_or(0)));
        gens.extend(q_c2);
        let lifting = lift_and_syzygies_with_shifts(&gens, ring, &c2_ord, c2_shifts.len(), shifts);
        let cu = c as u32;
        lifting
            .syzygies()
            .iter()
            .map(|s| s.remap(|k| (k < cu).then_some(k), &c_ord))
            .filter(|v| !v.is_zero())
            .collect()
    };
    let mut gens = kernel;
    gens.extend(q_c.iter().cloned());
    let mut rels = alpha;
    rels.extend(q_c);
    HomologyModule::new(index, SubmodulePresentation::subquotient(ring, c_shifts, gens, rels))
}

fn hom_shifts(f_degrees: &[i64], coeff: &Coefficients) -> Vec<i64> {
    f_degrees
        .iter()
        .flat_map(|a| coeff.shifts.iter().map(move |s| s - a))
        .collect()
}

fn tensor_shifts(f_degrees: &[i64], coeff: &Coefficients) -> Vec<i64> {
    f_degrees
        .iter()
        .flat_map(|a| coeff.shifts.iter().map(move |s| s + a))
        .collect()
}

/// Hom(d, B): Hom(F_tgt, B) → Hom(F_src, B), as images of the basis (k, β).
fn dual_map(d: &[Vector], tgt_rank: usize, coeff: &Coefficients, ring: &Ring, src_shifts: &[i64]) -> Vec<Vector> {
    let b = coeff.b();
    let ord = free_order(ring, src_shifts);
    let mut terms: Vec<Vec<crate::groebner::VTerm>> = vec![Vec::new(); tgt_rank * b];
    for (j, col) in d.iter().enumerate() {
        for (m, k, a) in col.terms() {
            for beta in 0..b {
                terms[*k as usize * b + beta].push((m.clone(), (j * b + beta) as u32, a.clone()));
            }
        }
    }
    terms.into_iter().map(|t| Vector::from_terms(t, &ord)).collect()
}

/// d ⊗ B: F_src ⊗ B → F_tgt ⊗ B, as images of the basis (j, β).
fn tensor_map(d: &[Vector], coeff: &Coefficients, ring: &Ring, tgt_shifts: &[i64]) -> Vec<Vector> {
    let b = coeff.b();
    let ord = free_order(ring, tgt_shifts);
    let mut out = Vec::with_capacity(d.len() * b);
    for col in d {
        for beta in 0..b as u32 {
            out.push(col.remap(|k| Some(k * b as u32 + beta), &ord));
        }
    }
    out
}

/// Ext^i(A, B) = H^i(Hom(F(A), B)) from a resolution of A with at least i+1 steps.
pub fn ext_from_resolution(i: usize, res: &FreeResolution, b: &SubmodulePresentation) -> Result<HomologyModule> {
    if res.computed_steps() < i + 1 {
        return Err(AlgebraError::Unsupported(format!(
            "resolution has {} steps, Ext^{} needs {}",
            res.computed_steps(),
            i,
            i + 1
        )));
    }
    let ring = res.ring();
    let coeff = Coefficients::of(b)?;
    let c_shifts = hom_shifts(res.degrees(i), &coeff);
    let c2_shifts = hom_shifts(res.degrees(i + 1), &coeff);
    let beta = dual_map(res.differential(i + 1), res.rank(i), &coeff, ring, &c2_shifts);
    let alpha = if i == 0 {
        Vec::new()
    } else {
        dual_map(res.differential(i), res.rank(i - 1), &coeff, ring, &c_shifts)
    };
    Ok(homology(ring, &coeff, c_shifts, &c2_shifts, alpha, beta, i))
}

/// Tor_i(A, B) = H_i(F(A) ⊗ B) from a resolution of A with at least i+1 steps.
pub fn tor_from_resolution(i: usize, res: &FreeResolution, b: &SubmodulePresentation) -> Result<HomologyModule> {
    if res.computed_steps() < i + 1 {
        return Err(AlgebraError::Unsupported(format!(
            "resolution has {} steps, Tor_{} needs {}",
            res.computed_steps(),
            i,
            i + 1
        )));
    }
    let ring = res.ring();
    let coeff = Coefficients::of(b)?;
    let c_shifts = tensor_shifts(res.degrees(i), &coeff);
    let beta = if i == 0 {
        Vec::new()
    } else {
        tensor_map(res.differential(i), &coeff, ring, &tensor_shifts(res.degrees(i - 1), &coeff))
    };
    let c2_shifts = if i == 0 { Vec::new() } else { tensor_shifts(res.degrees(i - 1), &coeff) };
    let alpha = tensor_map(res.differential(i + 1), &coeff, ring, &c_shifts);
    Ok(homology(ring, &coeff, c_shifts, &c2_shifts, alpha, beta, i))
}

/// Ext^i(A, B), resolving the first argument.
pub fn ext(i: usize, a: &SubmodulePresentation, b: &SubmodulePresentation) -> Result<HomologyModule> {
    let res = free_resolution(a, i + 1)?;
    ext_from_resolution(i, &res, b)
}

/// Tor_i(A, B), resolving the first argument.
pub fn tor(i: usize, a: &SubmodulePresentation, b: &SubmodulePresentation) -> Result<HomologyModule> {
    let res = free_resolution(a, i + 1)?;
    tor_from_resolution(i, &res, b)
}

/// H⁰_m(R/J) = (J : m^∞)/J.
pub fn local_cohomology_h0(j: &IdealPresentation, m: &IdealPresentation) -> Result<HomologyModule> {
    let ring = j.ring();
    let (sat, _) = j.saturate(m)?;
    let ord = free_order(ring, &[0]);
    let to_vecs = |i: &IdealPresentation| -> Vec<Vector> {
        i.generators().iter().map(|g| Vector::from_poly(g, 0, &ord)).collect()
    };
    Ok(HomologyModule::new(
        0,
        SubmodulePresentation::subquotient(ring, vec![0], to_vecs(&sat), to_vecs(j)),
    ))
}

/// H⁰_m(M) for a module M = coker(rels): the m-saturation of the relation span
/// modulo the relations.
pub fn local_cohomology_h0_module(m_mod: &SubmodulePresentation, m: &IdealPresentation) -> Result<HomologyModule> {
    let p = m_mod.pruned()?;
    let span = SubmodulePresentation::image(p.ring(), p.shifts().to_vec(), p.relations().to_vec());
    let (sat, _) = span.saturate(m)?;
    Ok(HomologyModule::new(
        0,
        SubmodulePresentation::subquotient(p.ring(), p.shifts().to_vec(), sat.generators().to_vec(), p.relations().to_vec()),
    ))
}

/// P^(n) as the m-saturation of Pⁿ. Valid when the non-P-primary components
/// of Pⁿ are supported at m.
pub fn symbolic_power(p: &IdealPresentation, n: u32) -> Result<IdealPresentation> {
    let m = IdealPresentation::maximal(p.ring());
    Ok(p.power(n).saturate(&m)?.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctorKind {
    Ext,
    Tor,
    /// Ext^i(second, first): the coefficient module is the one varying with n.
    ExtSwapped,
    /// H⁰_m(first); `i` and `second` are ignored.
    H0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComposeKind {
    Ext,
    Tor,
}

/// Tor_j(L, inner) or Ext^j(L, inner).
pub fn composed_functor(
    j: usize,
    kind: ComposeKind,
    l: &SubmodulePresentation,
    inner: &HomologyModule,
) -> Result<HomologyModule> {
    match kind {
        ComposeKind::Tor => tor(j, l, inner.presentation()),
        ComposeKind::Ext => ext(j, l, inner.presentation()),
    }
}

/// A module that is either fixed or of the form N/IⁿN.
#[derive(Clone, Debug)]
pub enum ModuleExpr {
    Fixed(SubmodulePresentation),
    PowerQuotient {
        base: SubmodulePresentation,
        ideal: IdealPresentation,
    },
}

impl ModuleExpr {
    pub fn at(&self, n: u32) -> SubmodulePresentation {
        match self {
            ModuleExpr::Fixed(m) => m.clone(),
            ModuleExpr::PowerQuotient { base, ideal } => base.quotient_by_power(ideal, n),
        }
    }

    pub fn varies(&self) -> bool {
        matches!(self, ModuleExpr::PowerQuotient { .. })
    }

    /// N for N/IⁿN, the module itself otherwise.
    pub fn base(&self) -> &SubmodulePresentation {
        match self {
            ModuleExpr::Fixed(m) => m,
            ModuleExpr::PowerQuotient { base, .. } => base,
        }
    }

    pub fn ideal(&self) -> Option<&IdealPresentation> {
        match self {
            ModuleExpr::Fixed(_) => None,
            ModuleExpr::PowerQuotient { ideal, .. } => Some(ideal),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Composition {
    pub kind: ComposeKind,
    pub j: usize,
    pub with: SubmodulePresentation,
}

#[derive(Clone, Debug)]
pub struct FunctorSpec {
    pub kind: FunctorKind,
    pub i: usize,
    pub first: ModuleExpr,
    pub second: ModuleExpr,
    pub compose: Option<Composition>,
    pub description: String,
}

/// Evaluates a functor spec at individual n, resolving fixed arguments once.
pub struct FunctorEvaluator<'a> {
    spec: &'a FunctorSpec,
    fixed_resolution: OnceLock<Result<FreeResolution>>,
    compose_resolution: OnceLock<Result<FreeResolution>>,
}

impl<'a> FunctorEvaluator<'a> {
    pub fn new(spec: &'a FunctorSpec) -> Self {
        FunctorEvaluator {
            spec,
            fixed_resolution: OnceLock::new(),
            compose_resolution: OnceLock::new(),
        }
    }

    fn resolution_of(&self, m: &SubmodulePresentation, steps: usize) -> Result<FreeResolution> {
        self.fixed_resolution
            .get_or_init(|| free_resolution(m, steps))
            .clone()
    }

    /// The inner homology module at n.
    pub fn homology_at(&self, n: u32) -> Result<HomologyModule> {
        let s = self.spec;
        let first = || s.first.at(n);
        let second = || s.second.at(n);
        match s.kind {
            FunctorKind::Ext => {
                if s.first.varies() {
                    ext(s.i, &first(), &second())
                } else {
                    ext_from_resolution(s.i, &self.resolution_of(s.first.base(), s.i + 1)?, &second())
                }
            }
            FunctorKind::ExtSwapped => {
                if s.second.varies() {
                    ext(s.i, &second(), &first())
                } else {
                    ext_from_resolution(s.i, &self.resolution_of(s.second.base(), s.i + 1)?, &first())
                }
            }
            FunctorKind::Tor => {
                // Tor is balanced: resolve whichever argument stays fixed.
                if !s.second.varies() && s.first.varies() {
                    tor_from_resolution(s.i, &self.resolution_of(s.second.base(), s.i + 1)?, &first())
                } else if !s.first.varies() {
                    tor_from_resolution(s.i, &self.resolution_of(s.first.base(), s.i + 1)?, &second())
                } else {
                    tor(s.i, &first(), &second())
                }
            }
            FunctorKind::H0 => {
                let m_mod = first();
                let ring = m_mod.ring().clone();
                let max = IdealPresentation::maximal(&ring);
                if m_mod.is_cokernel() && m_mod.rank() == 1 {
                    let gens = m_mod.relations().iter().map(|v| v.component(0, ring.order())).collect();
                    local_cohomology_h0(&IdealPresentation::new(&ring, gens), &max)
                } else {
                    local_cohomology_h0_module(&m_mod, &max)
                }
            }
        }
    }

    /// The module whose length is recorded at n (composition applied).
    pub fn module_at(&self, n: u32) -> Result<HomologyModule> {
        let inner = self.homology_at(n)?;
        match &self.spec.compose {
            None => Ok(inner),
            Some(c) => {
                let res = self
                    .compose_resolution
                    .get_or_init(|| free_resolution(&c.with, c.j + 1))
                    .clone()?;
                match c.kind {
                    ComposeKind::Tor => tor_from_resolution(c.j, &res, inner.presentation()),
                    ComposeKind::Ext => ext_from_resolution(c.j, &res, inner.presentation()),
                }
            }
        }
    }

    pub fn length_at(&self, n: u32) -> Result<Length> {
        self.module_at(n)?.length()
    }
}

/// λ(functor at n) for n in [n0, n1].
pub fn length_sequence(spec: &FunctorSpec, range: (u32, u32), exec: Execution) -> Result<LengthSequence> {
    let (n0, n1) = range;
    if n0 < 1 || n1 < n0 {
        return Err(AlgebraError::Unsupported(format!("invalid range {}..{}", n0, n1)));
    }
    let eval = FunctorEvaluator::new(spec);
    let ns: Vec<u32> = (n0..=n1).collect();
    let values = exec.map(&ns, |&n| eval.length_at(n));
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(LengthSequence::new(n0, values, spec.description.clone()))
}
