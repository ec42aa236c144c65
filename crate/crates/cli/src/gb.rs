//! Plain-text dump of every Gröbner basis a scenario builds.

use std::fmt::Write as _;

use anyhow::Result;
use hgl_core::groebner::{GroebnerBasis, Vector};
use hgl_core::Ring;

use crate::compile::compile;
use crate::dsl::ScenarioSpec;

fn vector(ring: &Ring, v: &Vector, rank: usize) -> String {
    let cols: Vec<String> = v.to_column(rank, ring.order()).iter().map(|p| ring.format_poly(p)).collect();
    if rank == 1 {
        cols[0].clone()
    } else {
        format!("[{}]", cols.join(", "))
    }
}

fn basis(out: &mut String, ring: &Ring, title: &str, gb: &GroebnerBasis) {
    let status = if gb.satisfies_buchberger_criterion() { "ok" } else { "FAILED" };
    let _ = writeln!(out, "{} ({} elements, criterion {})", title, gb.elements().len(), status);
    for v in gb.elements() {
        let _ = writeln!(out, "  {}", vector(ring, v, gb.rank()));
    }
}

pub fn dump(spec: &ScenarioSpec) -> Result<String> {
    let c = compile(spec)?;
    let mut out = String::new();
    for (k, decl) in spec.rings.iter().enumerate() {
        let ring = &c.rings[k];
        let _ = writeln!(out, "ring {} = k[{}] / ({})", decl.name, decl.vars.join(", "), decl.relations.join(", "));
        for p in ring.relation_basis() {
            let _ = writeln!(out, "  relation basis: {}", ring.format_poly(p));
        }
        for i in &decl.ideals {
            let ideal = c.ideal(&i.name)?;
            basis(&mut out, ring, &format!("ideal {}", i.name), ideal.groebner());
        }
        for m in &decl.modules {
            let module = &c.modules[&m.name].1;
            if module.is_cokernel() {
                basis(&mut out, ring, &format!("module {} relations", m.name), module.relation_basis());
            } else {
                basis(&mut out, ring, &format!("module {} span", m.name), module.span_basis());
            }
        }
    }
    Ok(out)
}
