//! Runs a scenario end to end: length sequence, fit, degree-bound audit,
//! monomial oracle and Artin-Rees certificates.

use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use hgl_core::growth::{audit_degree_bound, characteristic_warnings, fit_quasipolynomial, BoundAudit, FitOptions, FitOutcome};
use hgl_core::homology::{ext, tor, FunctorKind, FunctorSpec, ModuleExpr};
use hgl_core::module::{artin_rees_index, ArtinReesCertificate};
use hgl_core::spread::analytic_spread;
use hgl_core::{Execution, IdealPresentation, Length, LengthSequence, SubmodulePresentation};

use crate::compile::{compile, Compiled};
use crate::dsl::{Expr, ScenarioSpec};

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub execution: Execution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleComparison {
    Match(Vec<u64>),
    Mismatch(Vec<OracleMismatch>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub n: u32,
    pub computed: Length,
    pub oracle: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArtinReesResult {
    pub m: String,
    pub n: String,
    pub ideal: String,
    pub certificate: ArtinReesCertificate,
}

#[derive(Clone, Debug, Default)]
pub struct Timing {
    pub sequence: Duration,
    pub fit: Duration,
    pub audit: Duration,
    pub oracle: Duration,
    pub artin_rees: Duration,
}

#[derive(Clone, Debug)]
pub struct RunReport {
    pub scenario: String,
    pub functor: String,
    pub characteristic: u32,
    pub sequence: LengthSequence,
    pub fit: FitOutcome,
    pub fit_options: FitOptions,
    pub dim_value: Option<i64>,
    pub spread_value: Option<i64>,
    pub audit: Option<BoundAudit>,
    pub oracle: Option<OracleComparison>,
    pub artin_rees: Vec<ArtinReesResult>,
    pub warnings: Vec<String>,
    pub timing: Timing,
}

#[derive(Debug, thiserror::Error)]
#[error("λ({functor}) is infinite at n = {n}; the finite-length hypothesis fails")]
pub struct InfiniteLength {
    pub functor: String,
    pub n: u32,
}

/// #{(a,b) : a+b even, n ≤ a, no 0 ≤ j ≤ n with a + j ≥ 2n and b ≥ j}: the
/// monomials X^a Y^b of even degree that lie in the saturation of Iⁿ but not
/// in Iⁿ, for I = (X², XY) in k[X², XY, Y²].
pub fn veronese_oracle_count(n: u32) -> u64 {
    let n = n as u64;
    let mut count = 0;
    for a in n..2 * n {
        for b in 0..n {
            if (a + b) % 2 == 0 && !(0..=n).any(|j| a + j >= 2 * n && b >= j) {
                count += 1;
            }
        }
    }
    count
}

pub fn run_oracle_veronese(n0: u32, n1: u32) -> LengthSequence {
    let values: Vec<u64> = (n0..=n1).map(veronese_oracle_count).collect();
    LengthSequence::new(n0, values.into_iter().map(Length::Finite).collect(), "monomial count")
}

/// The oracle only describes Ext²(R/Iⁿ, R) and H⁰_m(R/Iⁿ) for the cone over
/// a conic with I a ruling; anything else is refused.
fn check_oracle_applies(spec: &ScenarioSpec, c: &Compiled, f: &FunctorSpec) -> Result<()> {
    let refuse = || anyhow::anyhow!("`oracle on` applies only to Ext^2(R/I^n, R) or H^0_m(R/I^n) with R = k[a,b,c]/(b^2 - ac), I = (a, b)");
    let ring = c.functor_ring(spec)?;
    if ring.nvars() != 3 || ring.weights().iter().any(|&w| w != 1) || spec.compose.is_some() {
        return Err(refuse());
    }
    let ambient = ring.with_order(hgl_core::monomial::OrderKind::Grevlex);
    let conic = IdealPresentation::new(&ambient, vec![ambient.parse_poly(&format!("{}^2 - {}*{}", ring.vars()[1], ring.vars()[0], ring.vars()[2]))?]);
    let rels = IdealPresentation::new(&ambient, ring.relations().iter().map(|r| ambient.adopt(r)).collect());
    if !rels.equals(&conic) {
        return Err(refuse());
    }
    let ModuleExpr::PowerQuotient { base, ideal } = &f.first else {
        return Err(refuse());
    };
    let free_base = base.is_cokernel() && base.rank() == 1 && base.relations().iter().all(|r| r.is_zero());
    let ruling = IdealPresentation::new(ring, vec![ring.var(0), ring.var(1)]);
    if !free_base || !ideal.equals(&ruling) {
        return Err(refuse());
    }
    let second_is_ring = match &f.second {
        ModuleExpr::Fixed(m) => m.is_cokernel() && m.rank() == 1 && m.relations().iter().all(|r| r.is_zero()),
        _ => false,
    };
    match f.kind {
        FunctorKind::Ext if f.i == 2 && second_is_ring => Ok(()),
        FunctorKind::H0 => Ok(()),
        _ => Err(refuse()),
    }
}

fn is_free_cyclic(m: &SubmodulePresentation) -> bool {
    m.is_cokernel() && m.rank() == 1 && m.relations().iter().all(|r| r.is_zero())
}

/// dim of the module bounding the degree of λ, per functor kind. Ext in the
/// first argument uses local duality over a Gorenstein ring (ω = R).
fn dim_value(f: &FunctorSpec, d: i64) -> Result<i64> {
    let (varying, fixed) = if f.first.varies() {
        (&f.first, &f.second)
    } else {
        (&f.second, &f.first)
    };
    let n = varying.base();
    let m = fixed.base();
    let dim = match f.kind {
        FunctorKind::Tor => tor(f.i, n, m)?.krull_dim()?,
        FunctorKind::ExtSwapped => ext(f.i, m, n)?.krull_dim()?,
        FunctorKind::Ext if !f.first.varies() => ext(f.i, m, n)?.krull_dim()?,
        FunctorKind::Ext => {
            let k = d - f.i as i64;
            if k < 0 {
                -1
            } else {
                let r = SubmodulePresentation::free(n.ring(), vec![0]);
                let e = ext(k as usize, m, &r)?;
                if is_free_cyclic(n) {
                    e.krull_dim()?
                } else {
                    tor(0, e.presentation(), n)?.krull_dim()?
                }
            }
        }
        FunctorKind::H0 => n.krull_dim()?,
    };
    Ok(dim)
}

pub fn run_scenario(name: &str, spec: &ScenarioSpec, opts: &RunOptions) -> Result<RunReport> {
    let c = compile(spec)?;
    let f = c.functor_spec(spec)?;
    let ring = c.functor_ring(spec)?.clone();
    let d = IdealPresentation::new(&ring, vec![]).krull_dim().max(0);
    let mut timing = Timing::default();

    let oracle_ok = if spec.oracle {
        check_oracle_applies(spec, &c, &f)?;
        true
    } else {
        false
    };

    let t = Instant::now();
    let sequence = hgl_core::homology::length_sequence(&f, spec.range, opts.execution)
        .with_context(|| format!("computing λ({})", f.description))?;
    timing.sequence = t.elapsed();
    if let Some(k) = sequence.values.iter().position(|v| !v.is_finite()) {
        return Err(InfiniteLength {
            functor: f.description.clone(),
            n: spec.range.0 + k as u32,
        }
        .into());
    }

    let t = Instant::now();
    let fit_options = FitOptions::default().with_max_degree(d as usize).with_max_period(spec.max_period);
    let fit = fit_quasipolynomial(&sequence, &fit_options)?;
    timing.fit = t.elapsed();

    let t = Instant::now();
    let dim_value = if spec.audit.dim { Some(dim_value(&f, d)?) } else { None };
    let spread_value = if spec.audit.spread {
        let (varying, _) = if f.first.varies() { (&f.first, &f.second) } else { (&f.second, &f.first) };
        let Some(ideal) = varying.ideal() else {
            bail!("no argument of the form quotient(<ideal>^n)");
        };
        Some(analytic_spread(ideal, Some(varying.base()))?)
    } else {
        None
    };
    let audit = match (fit.report(), dim_value, spread_value) {
        (Some(report), Some(dim), Some(spread)) => {
            let mut a = audit_degree_bound(report, dim, spread);
            if spec.compose.is_some() {
                // the inner functor's bound carries over, its equality does not
                a.equality_case = false;
                a.equality_holds = None;
            }
            Some(a)
        }
        _ => None,
    };
    timing.audit = t.elapsed();

    let t = Instant::now();
    let oracle = if oracle_ok {
        let expected = run_oracle_veronese(spec.range.0, spec.range.1);
        let mut mismatches = Vec::new();
        let mut values = Vec::new();
        for (k, (got, want)) in sequence.values.iter().zip(&expected.values).enumerate() {
            let want = want.finite().unwrap();
            values.push(want);
            if *got != Length::Finite(want) {
                mismatches.push(OracleMismatch {
                    n: spec.range.0 + k as u32,
                    computed: *got,
                    oracle: want,
                });
            }
        }
        Some(if mismatches.is_empty() {
            OracleComparison::Match(values)
        } else {
            OracleComparison::Mismatch(mismatches)
        })
    } else {
        None
    };
    timing.oracle = t.elapsed();

    let t = Instant::now();
    let mut artin_rees = Vec::new();
    for a in &spec.artin_rees {
        let m = c.fixed_module(&a.m)?;
        let n = c.fixed_module(&a.n)?;
        let ideal = c.ideal(&a.ideal)?;
        let certificate = artin_rees_index(&m, &n, ideal, a.window)
            .with_context(|| format!("Artin-Rees for M={} N={} I={}", a.m, a.n, a.ideal))?;
        artin_rees.push(ArtinReesResult {
            m: a.m.to_string(),
            n: match &a.n {
                Expr::Name(s) => s.clone(),
                other => other.to_string(),
            },
            ideal: a.ideal.clone(),
            certificate,
        });
    }
    timing.artin_rees = t.elapsed();

    let mut warnings = Vec::new();
    if let Some(r) = fit.report() {
        warnings.extend(characteristic_warnings(r, spec.characteristic));
    }
    if let Some(a) = &audit {
        if !a.satisfied {
            warnings.push(format!("degree {} exceeds the bound max(dim, spread - 1) = {}", a.degree, a.bound));
        }
        if a.equality_holds == Some(false) {
            warnings.push(format!("dim {} >= spread {} but degree {} differs from dim", a.dim_value, a.spread_value, a.degree));
        }
    }

    Ok(RunReport {
        scenario: name.to_string(),
        functor: f.description.clone(),
        characteristic: spec.characteristic,
        sequence,
        fit,
        fit_options,
        dim_value,
        spread_value,
        audit,
        oracle,
        artin_rees,
        warnings,
        timing,
    })
}
