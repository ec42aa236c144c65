//! Rees algebra and fiber cone presentations by eliminating t; analytic spread.

use crate::error::{AlgebraError, Result};
use crate::groebner::{groebner_basis, ModuleOrder, Vector};
use crate::ideal::IdealPresentation;
use crate::module::SubmodulePresentation;
use crate::monomial::OrderKind;
use crate::poly::Polynomial;
use crate::ring::{Ring, RingPresentation};

/// Relations of R[It] in k[t, y_1..y_s, x_1..x_n]; every listed polynomial is free of t.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub ring: Ring,
    pub generator_count: usize,
    pub relations: Vec<Polynomial>,
}

impl ReesPresentation {
    /// Relations that involve some y variable (the ring relations are dropped).
    pub fn y_relations(&self) -> Vec<&Polynomial> {
        let s = self.generator_count;
        self.relations
            .iter()
            .filter(|p| p.terms().iter().any(|(m, _)| m.exponents()[1..=s].iter().any(|&e| e > 0)))
            .collect()
    }
}

/// k[y_1..y_s]/J with ⊕ Iⁿ/mIⁿ ≅ it.
#[derive(Clone, Debug)]
pub struct FiberConePresentation {
    pub ring: Ring,
    pub ideal: IdealPresentation,
}

impl FiberConePresentation {
    pub fn dimension(&self) -> i64 {
        self.ideal.krull_dim()
    }
}

fn embed(p: &Polynomial, into: &Ring, offset: usize) -> Polynomial {
    let n = into.nvars();
    Polynomial::from_terms(
        p.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                e[offset..offset + m.nvars()].copy_from_slice(m.exponents());
                (into.monomial(&e), c.clone())
            })
            .collect(),
        into.order(),
    )
}

fn rees_with_extra(i: &IdealPresentation, extra: &[Polynomial]) -> Result<ReesPresentation> {
    let ring = i.ring();
    let gens = i.generators();
    let s = gens.len();
    let mut names: Vec<String> = vec!["t".into()];
    names.extend((1..=s).map(|k| format!("y{}", k)));
    names.extend(ring.vars().iter().cloned());
    let mut weights = vec![1u32];
    weights.extend(gens.iter().map(|g| g.degree().unwrap_or(0) + 1));
    weights.extend(ring.weights().iter().copied());
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ext = RingPresentation::polynomial_ring(&name_refs, ring.field(), Some(&weights), OrderKind::Block { split: 1 })?;

    let mut input: Vec<Polynomial> = Vec::new();
    let t = ext.var(0);
    for (k, g) in gens.iter().enumerate() {
        let tg = ext.mul(&t, &embed(g, &ext, 1 + s));
        input.push(ext.sub(&ext.var(1 + k), &tg));
    }
    for r in ring.relations().iter().chain(extra) {
        input.push(embed(r, &ext, 1 + s));
    }
    let ord = ModuleOrder::rank_one(ext.order().clone());
    let basis = groebner_basis(input.iter().map(|p| Vector::from_poly(p, 0, &ord)).collect(), &ord);
    let relations = basis
        .into_iter()
        .map(|v| v.component(0, ext.order()))
        .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
        .collect();
    Ok(ReesPresentation {
        ring: ext,
        generator_count: s,
        relations,
    })
}

/// Kernel of k[t?][y] ⊗ R → R[It], y_i ↦ f_i·t.
pub fn rees_presentation(i: &IdealPresentation) -> Result<ReesPresentation> {
    rees_with_extra(i, &[])
}

fn fiber_from_rees(rees: &ReesPresentation, base: &Ring) -> Result<FiberConePresentation> {
    let s = rees.generator_count;
    let names: Vec<String> = (1..=s).map(|k| format!("y{}", k)).collect();
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let yring = RingPresentation::polynomial_ring(&name_refs, base.field(), None, OrderKind::Grevlex)?;
    let gens = rees
        .relations
        .iter()
        .map(|p| {
            Polynomial::from_terms(
                p.terms()
                    .iter()
                    .filter(|(m, _)| m.exponents()[1 + s..].iter().all(|&e| e == 0))
                    .map(|(m, c)| (yring.monomial(&m.exponents()[1..=s]), c.clone()))
                    .collect(),
                yring.order(),
            )
        })
        .collect();
    Ok(FiberConePresentation {
        ideal: IdealPresentation::new(&yring, gens),
        ring: yring,
    })
}

/// ⊕ Iⁿ/mIⁿ, optionally over R/ann(N).
pub fn fiber_cone(i: &IdealPresentation, n: Option<&SubmodulePresentation>) -> Result<FiberConePresentation> {
    let ring = i.ring();
    if i.generators().iter().all(|g| ring.reduce(g).is_zero()) {
        return Err(AlgebraError::ZeroIdeal);
    }
    for g in i.generators() {
        if g.terms().iter().any(|(m, _)| m.is_one()) {
            return Err(AlgebraError::NotInMaximalIdeal);
        }
    }
    let extra: Vec<Polynomial> = match n {
        Some(n) => n.annihilator()?.generators().to_vec(),
        None => Vec::new(),
    };
    let rees = rees_with_extra(i, &extra)?;
    fiber_from_rees(&rees, ring)
}

/// ℓ(I), or ℓ_N(I) = ℓ of I over R/ann(N) when `n` is given.
pub fn analytic_spread(i: &IdealPresentation, n: Option<&SubmodulePresentation>) -> Result<i64> {
    Ok(fiber_cone(i, n)?.dimension().max(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, DEFAULT_PRIME};

    fn ring(vars: &[&str]) -> Ring {
        RingPresentation::polynomial_ring(vars, Field::Prime(DEFAULT_PRIME), None, OrderKind::Grevlex).unwrap()
    }

    fn id(r: &Ring, gens: &[&str]) -> IdealPresentation {
        IdealPresentation::new(r, gens.iter().map(|g| r.parse_poly(g).unwrap()).collect())
    }

    #[test]
    fn principal_ideal() {
        let r = ring(&["x", "y"]);
        let i = id(&r, &["x"]);
        assert!(rees_presentation(&i).unwrap().y_relations().is_empty());
        assert_eq!(analytic_spread(&i, None).unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_of_the_plane() {
        let r = ring(&["x", "y"]);
        let m = id(&r, &["x", "y"]);
        let rees = rees_presentation(&m).unwrap();
        let rels = rees.y_relations();
        assert_eq!(rels.len(), 1);
        let expect = rees.ring.parse_poly("x*y2 - y*y1").unwrap();
        assert!(rels[0] == &expect || rels[0] == &expect.neg());
        assert_eq!(analytic_spread(&m, None).unwrap(), 2);
    }

    #[test]
    fn veronese_ruling() {
        let s = ring(&["U", "V", "W"]);
        let r = s.quotient(vec![s.parse_poly("V^2 - U*W").unwrap()]).unwrap();
        let i = id(&r, &["U", "V"]);
        let rees = rees_presentation(&i).unwrap();
        let koszul = rees.ring.parse_poly("V*y1 - U*y2").unwrap();
        let gb = IdealPresentation::new(&rees.ring, rees.relations.clone());
        assert!(gb.contains(&koszul));
        assert_eq!(analytic_spread(&i, None).unwrap(), 2);
        assert_eq!(analytic_spread(&IdealPresentation::maximal(&r), None).unwrap(), 2);
    }

    #[test]
    fn spread_over_the_support_of_a_module() {
        let s = ring(&["t", "X"]);
        let r = s.quotient(vec![s.parse_poly("t^2").unwrap()]).unwrap();
        let i = id(&r, &["X"]);
        let n = id(&r, &["t"]).quotient_module();
        assert_eq!(analytic_spread(&i, Some(&n)).unwrap(), 1);
        let nil = id(&r, &["t"]);
        assert_eq!(analytic_spread(&nil, None).unwrap(), 0);
    }

    #[test]
    fn redundant_generator_does_not_change_spread() {
        let r = ring(&["x", "y", "z"]);
        let a = id(&r, &["x^2", "y^2"]);
        let b = id(&r, &["x^2", "y^2", "x^2 + y^2"]);
        assert_eq!(analytic_spread(&a, None).unwrap(), analytic_spread(&b, None).unwrap());
    }
}
