//! CSV and JSON renderings of a run. JSON goes through `serde_json::Value`,
//! whose maps are ordered, so identical runs give identical bytes.

use std::fmt::Write as _;

use hgl_core::growth::{BoundAudit, FitOutcome, GrowthReport};
use hgl_core::Length;
use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::runner::{OracleComparison, RunReport};

fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

fn length(l: &Length) -> Value {
    match l {
        Length::Finite(v) => json!(v),
        Length::Infinite => json!("INFINITE"),
    }
}

pub fn fit_json(fit: &FitOutcome) -> Value {
    match fit {
        FitOutcome::NoFit => json!({ "status": "NO_FIT" }),
        FitOutcome::Fitted(r) => growth_json(r),
    }
}

fn growth_json(r: &GrowthReport) -> Value {
    let classes: Vec<Value> = r
        .classes
        .iter()
        .map(|c| {
            json!({
                "residue": c.residue,
                "coefficients": c.polynomial.coefficients().iter().map(rational).collect::<Vec<_>>(),
                "polynomial": c.polynomial.to_string(),
                "stable_from": c.stable_from,
            })
        })
        .collect();
    json!({
        "status": "fitted",
        "period": r.period,
        "degree": match r.degree { Some(d) => json!(d), None => json!("zero") },
        "stable_from": r.stable_from,
        "classes": classes,
        "normalized_leading_coefficient": r.normalized_leading_coefficient.as_ref().map(rational),
        "leading_coefficient_integral": r.leading_coefficient_integral,
        "is_true_polynomial": r.is_true_polynomial,
    })
}

fn audit_json(a: &BoundAudit) -> Value {
    json!({
        "dim_value": a.dim_value,
        "spread_value": a.spread_value,
        "degree": a.degree,
        "bound": a.bound,
        "satisfied": a.satisfied,
        "equality_case": a.equality_case,
        "equality_holds": a.equality_holds,
        "spread_attained": a.spread_attained,
    })
}

pub fn to_json(r: &RunReport, timing: bool) -> Value {
    let mut out = Map::new();
    out.insert("scenario".into(), json!(r.scenario));
    out.insert("functor".into(), json!(r.functor));
    out.insert("characteristic".into(), json!(r.characteristic));
    out.insert(
        "sequence".into(),
        Value::Array(
            r.sequence
                .indices()
                .zip(&r.sequence.values)
                .map(|(n, l)| json!({ "n": n, "length": length(l) }))
                .collect(),
        ),
    );
    out.insert("fit".into(), fit_json(&r.fit));
    out.insert(
        "fit_options".into(),
        json!({ "max_degree": r.fit_options.max_degree, "max_period": r.fit_options.max_period }),
    );
    out.insert("dim_value".into(), json!(r.dim_value));
    out.insert("spread_value".into(), json!(r.spread_value));
    out.insert("audit".into(), r.audit.as_ref().map_or(Value::Null, audit_json));
    out.insert(
        "oracle".into(),
        match &r.oracle {
            None => Value::Null,
            Some(OracleComparison::Match(v)) => json!({ "status": "match", "values": v }),
            Some(OracleComparison::Mismatch(m)) => json!({
                "status": "mismatch",
                "entries": m.iter().map(|e| json!({ "n": e.n, "computed": length(&e.computed), "oracle": e.oracle })).collect::<Vec<_>>(),
            }),
        },
    );
    out.insert(
        "artin_rees".into(),
        Value::Array(
            r.artin_rees
                .iter()
                .map(|a| {
                    json!({
                        "M": a.m,
                        "N": a.n,
                        "I": a.ideal,
                        "window": [a.certificate.window.0, a.certificate.window.1],
                        "index": a.certificate.index,
                        "certified": a.certificate.certified,
                    })
                })
                .collect(),
        ),
    );
    out.insert("warnings".into(), json!(r.warnings));
    if timing {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1000.0;
        out.insert(
            "timing_ms".into(),
            json!({
                "sequence": ms(r.timing.sequence),
                "fit": ms(r.timing.fit),
                "audit": ms(r.timing.audit),
                "oracle": ms(r.timing.oracle),
                "artin_rees": ms(r.timing.artin_rees),
            }),
        );
    }
    Value::Object(out)
}

pub fn fit_trailer(fit: &FitOutcome) -> String {
    let mut s = String::new();
    match fit {
        FitOutcome::NoFit => s.push_str("# fitted: NO_FIT\n"),
        FitOutcome::Fitted(r) => {
            let degree = r.degree.map_or("zero".to_string(), |d| d.to_string());
            let _ = writeln!(s, "# fitted: period {}, degree {}, stable from n = {}", r.period, degree, r.stable_from);
            for c in &r.classes {
                if r.period == 1 {
                    let _ = writeln!(s, "# fitted: {}", c.polynomial);
                } else {
                    let _ = writeln!(s, "# fitted: n = {} mod {}: {}", c.residue, r.period, c.polynomial);
                }
            }
            match (&r.normalized_leading_coefficient, r.leading_coefficient_integral) {
                (Some(q), Some(true)) => {
                    let _ = writeln!(s, "# fitted: normalized leading coefficient {}", q);
                }
                (Some(q), _) => {
                    let _ = writeln!(s, "# fitted: normalized leading coefficient {} (not an integer)", q);
                }
                (None, _) => s.push_str("# fitted: leading coefficients differ between classes\n"),
            }
        }
    }
    s
}

pub fn to_csv(r: &RunReport, timing: bool) -> String {
    let mut s = String::from("n,length\n");
    for (n, l) in r.sequence.indices().zip(&r.sequence.values) {
        let _ = writeln!(s, "{},{}", n, l);
    }
    let _ = writeln!(s, "# functor: {}", r.functor);
    s.push_str(&fit_trailer(&r.fit));
    if let Some(a) = &r.audit {
        let _ = write!(
            s,
            "# audit: degree {} <= max(dim {}, spread {} - 1) = {}: {}",
            a.degree,
            a.dim_value,
            a.spread_value,
            a.bound,
            if a.satisfied { "satisfied" } else { "VIOLATED" }
        );
        match a.equality_holds {
            Some(true) => s.push_str("; equality case, degree = dim"),
            Some(false) => s.push_str("; equality case FAILS"),
            None if a.spread_attained => s.push_str("; degree = spread - 1"),
            None => {}
        }
        s.push('\n');
    } else {
        if let Some(d) = r.dim_value {
            let _ = writeln!(s, "# audit: dim {}", d);
        }
        if let Some(l) = r.spread_value {
            let _ = writeln!(s, "# audit: spread {}", l);
        }
    }
    match &r.oracle {
        Some(OracleComparison::Match(_)) => s.push_str("# oracle: match\n"),
        Some(OracleComparison::Mismatch(m)) => {
            for e in m {
                let _ = writeln!(s, "# oracle: MISMATCH at n = {}: computed {}, oracle {}", e.n, e.computed, e.oracle);
            }
        }
        None => {}
    }
    for a in &r.artin_rees {
        let c = &a.certificate;
        match c.index {
            Some(k) => {
                let _ = writeln!(
                    s,
                    "# artin-rees: M={} N={} I={}: index {} certified on n = {}..{}",
                    a.m,
                    a.n,
                    a.ideal,
                    k,
                    c.certified.first().copied().unwrap_or(0),
                    c.certified.last().copied().unwrap_or(0)
                );
            }
            None => {
                let _ = writeln!(s, "# artin-rees: M={} N={} I={}: no index within window {}..{}", a.m, a.n, a.ideal, c.window.0, c.window.1);
            }
        }
    }
    for w in &r.warnings {
        let _ = writeln!(s, "# warning: {}", w);
    }
    if timing {
        let t = &r.timing;
        let _ = writeln!(
            s,
            "# timing: sequence {:?}, fit {:?}, audit {:?}, oracle {:?}, artin-rees {:?}",
            t.sequence, t.fit, t.audit, t.oracle, t.artin_rees
        );
    }
    s
}
