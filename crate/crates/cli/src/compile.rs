//! Builds algebra objects from a parsed scenario.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Context, Result};
use hgl_core::groebner::Vector;
use hgl_core::homology::{Composition, FunctorKind, FunctorSpec, ModuleExpr};
use hgl_core::module::free_order;
use hgl_core::monomial::OrderKind;
use hgl_core::poly::Polynomial;
use hgl_core::scalar::Field;
use hgl_core::{IdealPresentation, Ring, RingPresentation, SubmodulePresentation};

use crate::dsl::{Expr, ModuleBody, ModuleDecl, ScenarioSpec};

pub struct Compiled {
    pub field: Field,
    pub rings: Vec<Ring>,
    ring_names: BTreeMap<String, usize>,
    pub ideals: BTreeMap<String, (usize, IdealPresentation)>,
    pub modules: BTreeMap<String, (usize, SubmodulePresentation)>,
}

fn parse_all(ring: &Ring, texts: &[String]) -> Result<Vec<Polynomial>> {
    texts
        .iter()
        .map(|t| ring.parse_poly(t).with_context(|| format!("in `{}`", t)))
        .collect()
}

fn matrix(ring: &Ring, entries: &[Vec<String>]) -> Result<Vec<Vec<Polynomial>>> {
    entries.iter().map(|row| parse_all(ring, row)).collect()
}

pub fn build_module(ring: &Ring, decl: &ModuleDecl) -> Result<SubmodulePresentation> {
    Ok(match &decl.body {
        ModuleBody::Coker { entries, .. } => SubmodulePresentation::cokernel_of_rows(ring, &matrix(ring, entries)?)?,
        ModuleBody::Image { rows, cols, entries } => {
            let m = matrix(ring, entries)?;
            let shifts = vec![0; *rows];
            let ord = free_order(ring, &shifts);
            let gens: Vec<Vector> = (0..*cols)
                .map(|c| {
                    let comps: Vec<(usize, Polynomial)> = (0..*rows).map(|r| (r, m[r][c].clone())).collect();
                    Vector::from_components(&comps, &ord)
                })
                .collect();
            let module = SubmodulePresentation::image(ring, shifts, gens);
            if !module.is_homogeneous() {
                bail!("the columns of `{}` are not homogeneous", decl.name);
            }
            module
        }
        ModuleBody::Free(r) => SubmodulePresentation::free(ring, vec![0; *r]),
    })
}

pub fn compile(spec: &ScenarioSpec) -> Result<Compiled> {
    let field = Field::from_characteristic(spec.characteristic)?;
    let mut out = Compiled {
        field,
        rings: Vec::new(),
        ring_names: BTreeMap::new(),
        ideals: BTreeMap::new(),
        modules: BTreeMap::new(),
    };
    for (k, decl) in spec.rings.iter().enumerate() {
        let vars: Vec<&str> = decl.vars.iter().map(|s| s.as_str()).collect();
        let ambient = RingPresentation::polynomial_ring(&vars, field, decl.weights.as_deref(), OrderKind::Grevlex)?;
        let ring = ambient.quotient(parse_all(&ambient, &decl.relations)?)?;
        for i in &decl.ideals {
            let ideal = IdealPresentation::new(&ring, parse_all(&ring, &i.gens)?);
            out.ideals.insert(i.name.clone(), (k, ideal));
        }
        for m in &decl.modules {
            out.modules.insert(m.name.clone(), (k, build_module(&ring, m)?));
        }
        out.ring_names.insert(decl.name.clone(), k);
        out.rings.push(ring);
    }
    Ok(out)
}

impl Compiled {
    pub fn ideal(&self, name: &str) -> Result<&IdealPresentation> {
        self.ideals
            .get(name)
            .map(|(_, i)| i)
            .ok_or_else(|| anyhow!("`{}` is not an ideal", name))
    }

    /// A ring, module or ideal name as a module.
    fn named(&self, name: &str) -> Result<(usize, SubmodulePresentation)> {
        if let Some(&k) = self.ring_names.get(name) {
            return Ok((k, SubmodulePresentation::free(&self.rings[k], vec![0])));
        }
        if let Some((k, m)) = self.modules.get(name) {
            return Ok((*k, m.clone()));
        }
        if let Some((k, i)) = self.ideals.get(name) {
            let ring = &self.rings[*k];
            let ord = free_order(ring, &[0]);
            let gens = i.generators().iter().map(|g| Vector::from_poly(g, 0, &ord)).collect();
            return Ok((*k, SubmodulePresentation::image(ring, vec![0], gens)));
        }
        bail!("unknown name `{}`", name)
    }

    /// Ring index of an expression.
    pub fn ring_of(&self, e: &Expr) -> Result<usize> {
        match e {
            Expr::Name(n) => Ok(self.named(n)?.0),
            Expr::Quotient { ideal, .. } => self
                .ideals
                .get(ideal)
                .map(|(k, _)| *k)
                .ok_or_else(|| anyhow!("`{}` is not an ideal", ideal)),
        }
    }

    /// The module B in B/JⁿB (or the named module itself).
    pub fn base_of(&self, e: &Expr) -> Result<SubmodulePresentation> {
        match e {
            Expr::Name(n) => Ok(self.named(n)?.1),
            Expr::Quotient { ideal, base, .. } => match base {
                Some(b) => Ok(self.named(b)?.1),
                None => {
                    let k = self.ring_of(&Expr::Quotient {
                        ideal: ideal.clone(),
                        power: false,
                        base: None,
                    })?;
                    Ok(SubmodulePresentation::free(&self.rings[k], vec![0]))
                }
            },
        }
    }

    pub fn module_expr(&self, e: &Expr) -> Result<ModuleExpr> {
        let base = self.base_of(e)?;
        Ok(match e {
            Expr::Name(_) => ModuleExpr::Fixed(base),
            Expr::Quotient { ideal, power: false, .. } => ModuleExpr::Fixed(base.quotient_by_power(self.ideal(ideal)?, 1)),
            Expr::Quotient { ideal, power: true, .. } => ModuleExpr::PowerQuotient {
                base,
                ideal: self.ideal(ideal)?.clone(),
            },
        })
    }

    /// A module that must not depend on n.
    pub fn fixed_module(&self, e: &Expr) -> Result<SubmodulePresentation> {
        match self.module_expr(e)? {
            ModuleExpr::Fixed(m) => Ok(m),
            ModuleExpr::PowerQuotient { .. } => bail!("`{}` depends on n", e),
        }
    }

    pub fn functor_spec(&self, spec: &ScenarioSpec) -> Result<FunctorSpec> {
        let fd = &spec.functor;
        let first = self.module_expr(&fd.first)?;
        let second = match &fd.second {
            Some(s) => self.module_expr(s)?,
            None => ModuleExpr::Fixed(self.base_of(&fd.first)?),
        };
        let compose = match &spec.compose {
            Some(c) => Some(Composition {
                kind: c.kind,
                j: c.j,
                with: self.fixed_module(&c.with)?,
            }),
            None => None,
        };
        Ok(FunctorSpec {
            kind: fd.kind,
            i: fd.i,
            first,
            second,
            compose,
            description: describe(spec),
        })
    }

    pub fn functor_ring(&self, spec: &ScenarioSpec) -> Result<&Ring> {
        Ok(&self.rings[self.ring_of(&spec.functor.first)?])
    }

    pub fn ring_name(&self, k: usize) -> &str {
        self.ring_names
            .iter()
            .find(|(_, &v)| v == k)
            .map(|(n, _)| n.as_str())
            .unwrap_or("?")
    }
}

fn show(e: &Expr, ring: &str) -> String {
    match e {
        Expr::Name(n) => n.clone(),
        Expr::Quotient { ideal, power, base } => {
            let p = if *power { "^n" } else { "" };
            match base {
                Some(b) => format!("{b}/{ideal}{p}{b}"),
                None => format!("{ring}/{ideal}{p}"),
            }
        }
    }
}

/// Human-readable name of the measured functor, e.g. `Ext^2(R/I^n, R)`.
pub fn describe(spec: &ScenarioSpec) -> String {
    let fd = &spec.functor;
    let ring = spec
        .rings
        .iter()
        .find(|r| {
            let name = match &fd.first {
                Expr::Name(n) => n,
                Expr::Quotient { ideal, .. } => ideal,
            };
            r.name == *name || r.ideals.iter().any(|i| &i.name == name) || r.modules.iter().any(|m| &m.name == name)
        })
        .map_or("R", |r| r.name.as_str());
    let a = show(&fd.first, ring);
    let b = fd.second.as_ref().map(|s| show(s, ring)).unwrap_or_default();
    let inner = match fd.kind {
        FunctorKind::Ext => format!("Ext^{}({}, {})", fd.i, a, b),
        FunctorKind::Tor => format!("Tor_{}({}, {})", fd.i, a, b),
        FunctorKind::ExtSwapped => format!("Ext^{}({}, {})", fd.i, b, a),
        FunctorKind::H0 => format!("H^0_m({})", a),
    };
    match &spec.compose {
        None => inner,
        Some(c) => match c.kind {
            hgl_core::homology::ComposeKind::Tor => format!("Tor_{}({}, {})", c.j, show(&c.with, ring), inner),
            hgl_core::homology::ComposeKind::Ext => format!("Ext^{}({}, {})", c.j, show(&c.with, ring), inner),
        },
    }
}
