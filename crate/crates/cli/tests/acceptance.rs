//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::OnceLock;

use anyhow::{bail, ensure, Context, Result};
use hgl_cli::compile::compile;
use hgl_cli::scenarios::{builtin, BUILTINS};
use hgl_cli::{parse_scenario, run_scenario, RunOptions, RunReport, ScenarioSpec};
use hgl_core::groebner::{lift_and_syzygies, Vector};
use hgl_core::growth::{fit_quasipolynomial, FitOptions, FitOutcome, GrowthReport, LengthSequence};
use hgl_core::homology::{ext, free_resolution, local_cohomology_h0, ModuleExpr};
use hgl_core::module::free_order;
use hgl_core::monomial::OrderKind;
use hgl_core::{IdealPresentation, Length, SubmodulePresentation};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::quasi::QuasiPolynomial;

fn spec(name: &str) -> ScenarioSpec {
    parse_scenario(builtin(name).expect("builtin").source).expect("builtin parses")
}

fn reports() -> &'static BTreeMap<&'static str, RunReport> {
    static CELL: OnceLock<BTreeMap<&'static str, RunReport>> = OnceLock::new();
    CELL.get_or_init(|| {
        BUILTINS
            .iter()
            .map(|b| {
                let r = run_scenario(b.name, &spec(b.name), &RunOptions::default())
                    .unwrap_or_else(|e| panic!("{}: {:#}", b.name, e));
                (b.name, r)
            })
            .collect()
    })
}

fn report(name: &str) -> Result<&'static RunReport> {
    reports().get(name).with_context(|| format!("no report for {}", name))
}

fn fitted(r: &RunReport) -> Result<&GrowthReport> {
    match &r.fit {
        FitOutcome::Fitted(g) => Ok(g),
        FitOutcome::NoFit => bail!("{}: NO_FIT", r.scenario),
    }
}

fn values(r: &RunReport) -> Result<Vec<u64>> {
    r.sequence
        .values
        .iter()
        .map(|v| v.finite().context("infinite length"))
        .collect()
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn coefficients(g: &GrowthReport, n: u32, len: usize) -> Vec<BigRational> {
    let p = &g.class_for(n).polynomial;
    (0..len).map(|k| p.coefficient(k)).collect()
}

fn criterion_1() -> Result<String> {
    let r = report("veronese-ext2")?;
    let table = [1u64, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36];
    ensure!(r.sequence.n0 == 2, "range starts at {}", r.sequence.n0);
    ensure!(values(r)? == table, "lengths {:?}", values(r)?);
    for (k, &v) in table.iter().enumerate() {
        ensure!(common::veronese_oracle(k as u64 + 2) == v, "oracle disagrees at n = {}", k + 2);
    }
    let g = fitted(r)?;
    ensure!(g.period == 2 && g.degree == Some(2), "period {} degree {:?}", g.period, g.degree);
    ensure!(coefficients(g, 4, 3) == [q(0, 1), q(0, 1), q(1, 4)], "even class {}", g.class_for(4).polynomial);
    ensure!(coefficients(g, 5, 3) == [q(-1, 4), q(0, 1), q(1, 4)], "odd class {}", g.class_for(5).polynomial);
    ensure!(g.normalized_leading_coefficient == Some(q(1, 2)), "nlc {:?}", g.normalized_leading_coefficient);
    Ok(format!(
        "lengths 1..36 on n = 2..12, period 2, degree 2, classes {} and {}, nlc 1/2",
        g.class_for(4).polynomial,
        g.class_for(5).polynomial
    ))
}

fn criterion_2() -> Result<String> {
    let r = common::veronese();
    let i = IdealPresentation::new(&r, vec![r.var(0), r.var(1)]);
    let m = IdealPresentation::maximal(&r);
    let rr = SubmodulePresentation::free(&r, vec![0]);
    for n in 2..=9u32 {
        let p = i.power(n);
        let direct = ext(2, &p.quotient_module(), &rr)?.length()?;
        let sat = local_cohomology_h0(&p, &m)?.length()?;
        let oracle = Length::Finite(common::veronese_oracle(n as u64));
        ensure!(direct == oracle && sat == oracle, "n = {}: Ext² {} H⁰ {} oracle {}", n, direct, sat, oracle);
    }
    let ext_run = values(report("veronese-ext2")?)?;
    let h0_run = values(report("veronese-duality")?)?;
    ensure!(ext_run == h0_run, "scenario runs differ: {:?} vs {:?}", ext_run, h0_run);
    for name in ["veronese-ext2", "veronese-duality"] {
        ensure!(
            matches!(report(name)?.oracle, Some(hgl_cli::runner::OracleComparison::Match(_))),
            "{}: oracle comparison {:?}",
            name,
            report(name)?.oracle
        );
    }
    Ok("Ext², H⁰ by saturation and the monomial count agree on n = 2..9".into())
}

fn criterion_3() -> Result<String> {
    let r = report("cm-degree")?;
    let g = fitted(r)?;
    ensure!(g.is_true_polynomial && g.period == 1 && g.degree == Some(2), "period {} degree {:?}", g.period, g.degree);
    // λ(Ext²(R/mⁿ, R)) = λ(R/mⁿ) = Σ_{d<n} dim R_d
    for (k, v) in values(r)?.into_iter().enumerate() {
        let n = r.sequence.n0 + k as u32;
        let expected: usize = (0..n).map(common::veronese_hilbert).sum();
        ensure!(v == expected as u64, "n = {}: {} vs {}", n, v, expected);
    }
    Ok(format!("true polynomial {} of degree 2", g.classes[0].polynomial))
}

fn criterion_4() -> Result<String> {
    let r = report("kodiyalam-tor")?;
    ensure!(r.sequence.n0 == 1 && r.sequence.len() == 8, "range");
    let expected: Vec<u64> = (1..=8).map(|n| n + 1).collect();
    ensure!(values(r)? == expected, "lengths {:?}", values(r)?);
    // minimal generators of mⁿ in k[x,y] are the n+1 monomials of degree n
    let ring = common::ring(&["x", "y"]);
    for n in 1..=8u32 {
        ensure!(hgl_core::module::monomials_of_degree(ring.weights(), n).len() as u64 == n as u64 + 1, "count");
    }
    let g = fitted(r)?;
    ensure!(g.degree == Some(1), "degree {:?}", g.degree);
    let a = r.audit.as_ref().context("no audit")?;
    ensure!(a.spread_value == 2 && a.degree == a.spread_value - 1 && a.spread_attained && a.satisfied, "audit {:?}", a);
    Ok(format!("λ = n+1 on 1..8, degree 1 = ℓ − 1 with ℓ = {}, dim = {}", a.spread_value, a.dim_value))
}

fn criterion_5() -> Result<String> {
    let r = report("placekeeper-tor")?;
    let v = values(r)?;
    ensure!(r.sequence.n0 == 1 && v.len() == 8, "range");
    let c = v[0];
    ensure!(c > 0 && v.iter().enumerate().all(|(k, &x)| x == c * (k as u64 + 1)), "lengths {:?}", v);
    let g = fitted(r)?;
    ensure!(g.degree == Some(1), "degree {:?}", g.degree);
    let a = r.audit.as_ref().context("no audit")?;
    ensure!(
        a.dim_value == 1 && a.spread_value - 1 == 0 && a.equality_case && a.equality_holds == Some(true),
        "audit {:?}",
        a
    );
    Ok(format!("λ = {}·n on 1..8, degree 1 = dim with ℓ − 1 = 0", c))
}

/// dim_d(A ∩ B) = dim A_d + dim B_d − dim (A + B)_d in a free module over a polynomial ring.
fn intersection_dim(ring: &hgl_core::Ring, shifts: &[i64], a: &[Vector], b: &[Vector], d: i64) -> usize {
    let both: Vec<Vector> = a.iter().chain(b).cloned().collect();
    common::span_dim(ring, shifts, a, d) + common::span_dim(ring, shifts, b, d) - common::span_dim(ring, shifts, &both, d)
}

fn criterion_6() -> Result<String> {
    let s = spec("artin-rees-probe");
    let c = compile(&s)?;
    let r = report("artin-rees-probe")?;
    ensure!(r.artin_rees.len() == 3 && s.artin_rees.len() == 3, "expected three triples");
    let mut summary = Vec::new();
    for (decl, res) in s.artin_rees.iter().zip(&r.artin_rees) {
        let cert = &res.certificate;
        let k = cert.index.with_context(|| format!("{}: no index", res.m))?;
        let certified = &cert.certified;
        ensure!(certified.len() >= 6, "{}: only {} values certified", res.m, certified.len());
        ensure!(certified.windows(2).all(|w| w[1] == w[0] + 1), "{}: window not consecutive", res.m);
        let m = c.fixed_module(&decl.m)?;
        let n_mod = c.fixed_module(&decl.n)?;
        let ideal = c.ideal(&decl.ideal)?;
        let core = m.ideal_product(&ideal.power(k)).intersect(&n_mod)?;
        let polynomial_ring = m.ring().relations().is_empty();
        for &e in certified {
            let lhs = m.ideal_product(&ideal.power(e)).intersect(&n_mod)?;
            let rhs = core.ideal_product(&ideal.power(e - k));
            ensure!(lhs.generators().iter().all(|g| n_mod.contains(g)), "lhs ⊄ N at n = {}", e);
            ensure!(rhs.generators().iter().all(|g| lhs.contains(g)), "rhs ⊄ lhs at n = {}", e);
            ensure!(lhs.generators().iter().all(|g| rhs.contains(g)), "lhs ⊄ rhs at n = {}", e);
            if polynomial_ring {
                let ring = m.ring();
                let inm = m.ideal_product(&ideal.power(e));
                for d in 0..=(e as i64 + 2) {
                    let expected = intersection_dim(ring, m.shifts(), inm.generators(), n_mod.generators(), d);
                    ensure!(common::span_dim(ring, m.shifts(), lhs.generators(), d) == expected, "dim at n = {} d = {}", e, d);
                }
            }
        }
        if k > 0 {
            let prev = m.ideal_product(&ideal.power(k - 1)).intersect(&n_mod)?;
            let fails = (k.max(cert.window.0)..=cert.window.1).any(|e| {
                let lhs = m.ideal_product(&ideal.power(e)).intersect(&n_mod).unwrap();
                let rhs = prev.ideal_product(&ideal.power(e + 1 - k));
                !lhs.generators().iter().all(|g| rhs.contains(g))
            });
            ensure!(fails, "{}: index {} is not minimal", res.m, k);
        }
        summary.push(format!("{}⊇{} over {}: k = {} on {}..{}", res.m, res.n, res.ideal, k, certified[0], certified[certified.len() - 1]));
    }
    Ok(summary.join("; "))
}

fn criterion_7() -> Result<String> {
    let (mut bases, mut complexes, mut syz) = (0, 0, 0);
    let max_d = common::max_degree() as i64;
    for b in BUILTINS {
        let s = spec(b.name);
        let c = compile(&s)?;
        for ring in &c.rings {
            let ambient = ring.with_order(OrderKind::Grevlex);
            let rel = IdealPresentation::new(&ambient, ring.relations().iter().map(|p| ambient.adopt(p)).collect());
            ensure!(rel.groebner().satisfies_buchberger_criterion(), "{}: relations", b.name);
            bases += 1;
        }
        for (name, (k, ideal)) in &c.ideals {
            for e in 1..=4 {
                ensure!(ideal.power(e).groebner().satisfies_buchberger_criterion(), "{}: {}^{}", b.name, name, e);
                bases += 1;
            }
            let res = free_resolution(&ideal.power(2).quotient_module(), c.rings[*k].nvars() + 1)?;
            ensure!(res.is_complex(), "{}: resolution of R/{}^2", b.name, name);
            complexes += 1;

            // syzygies of the ideal plus the ring relations, in the ambient polynomial ring
            let ring = &c.rings[*k];
            let ambient = ring.with_order(OrderKind::Grevlex);
            let ord = free_order(&ambient, &[0]);
            let gens: Vec<Vector> = ideal
                .generators()
                .iter()
                .chain(ring.relations())
                .map(|p| Vector::from_poly(&ambient.adopt(p), 0, &ord))
                .collect();
            let lifting = lift_and_syzygies(&gens, &ambient, &ord, 1);
            let src = lifting.source_order().shifts().to_vec();
            for d in 0..=max_d {
                let expected = common::kernel_dim(&ambient, &[0], &gens, &src, d);
                let got = common::span_dim(&ambient, &src, lifting.syzygies(), d);
                ensure!(got == expected, "{}: syzygies of {} in degree {}: {} vs {}", b.name, name, d, got, expected);
            }
            syz += 1;
        }
        for (name, (_, module)) in &c.modules {
            let gb = if module.is_cokernel() { module.relation_basis() } else { module.span_basis() };
            ensure!(gb.satisfies_buchberger_criterion(), "{}: module {}", b.name, name);
            bases += 1;
            let res = free_resolution(module, module.ring().nvars() + 1)?;
            ensure!(res.is_complex(), "{}: resolution of {}", b.name, name);
            complexes += 1;
        }
        let f = c.functor_spec(&s)?;
        for side in [&f.first, &f.second] {
            let modules: Vec<SubmodulePresentation> = match side {
                ModuleExpr::Fixed(m) => vec![m.clone()],
                ModuleExpr::PowerQuotient { .. } => (s.range.0..s.range.0 + 3).map(|n| side.at(n)).collect(),
            };
            for m in modules {
                let res = free_resolution(&m, m.ring().nvars() + 1)?;
                ensure!(res.is_complex(), "{}: resolution of a functor argument", b.name);
                complexes += 1;
            }
        }
    }
    Ok(format!(
        "{} bases pass the Buchberger criterion, {} resolutions satisfy d∘d = 0, {} syzygy modules match linear algebra up to degree {}",
        bases, complexes, syz, max_d
    ))
}

fn criterion_8() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6163_6365);
    let opts = FitOptions::default();
    for case in 0..200 {
        let qp = QuasiPolynomial::random(&mut rng);
        let n0 = rng.gen_range(1..=3u32);
        let count = 8 * qp.classes.len() + 4;
        let vals: Vec<u64> = (0..count).map(|k| qp.eval((n0 as usize + k) as i64) as u64).collect();
        let g = match fit_quasipolynomial(&LengthSequence::from_counts(n0, &vals), &opts)? {
            FitOutcome::Fitted(g) => g,
            FitOutcome::NoFit => bail!("case {}: NO_FIT for {:?}", case, qp.classes),
        };
        ensure!(g.period as usize == qp.minimal_period(), "case {}: period {}", case, g.period);
        ensure!(g.degree == Some(qp.degree()), "case {}: degree {:?}", case, g.degree);
        for n in 0..(count as i64 + 40) {
            let expected = BigRational::from_integer(BigInt::from(qp.eval(n)));
            ensure!(g.eval(n as u32) == expected, "case {}: value at n = {}", case, n);
        }
    }
    Ok("200 seeded cases recovered with exact period, degree and values".into())
}

fn criterion_9() -> Result<String> {
    let mut lines = Vec::new();
    for b in BUILTINS {
        let r = report(b.name)?;
        let a = r.audit.as_ref().with_context(|| format!("{}: no audit", b.name))?;
        ensure!(a.satisfied, "{}: degree {} > bound {}", b.name, a.degree, a.bound);
        lines.push(format!("{} {}≤{}", b.name, a.degree, a.bound));
    }
    for name in ["veronese-ext2", "veronese-duality", "cm-degree", "placekeeper-tor"] {
        let a = report(name)?.audit.as_ref().context("audit")?;
        ensure!(a.equality_case && a.equality_holds == Some(true), "{}: equality branch {:?}", name, a);
    }
    let a = report("kodiyalam-tor")?.audit.as_ref().context("audit")?;
    ensure!(!a.equality_case && a.spread_attained, "kodiyalam-tor: spread branch {:?}", a);
    Ok(lines.join(", "))
}

type Criterion = fn() -> Result<String>;

fn main() -> ExitCode {
    let criteria: [(u32, Criterion); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = 0;
    for (k, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(anyhow::anyhow!("panic: {}", msg))
        });
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({})", k, detail),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL ({:#})", k, e);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
