mod common;

use hgl_core::groebner::{buchberger, lift_and_syzygies, ModuleOrder, ModuleOrderKind, Vector};
use hgl_core::module::free_order;
use hgl_core::monomial::Monomial;
use hgl_core::poly::Polynomial;
use hgl_core::ring::Ring;
use proptest::prelude::*;

type Terms = Vec<(u32, u32, i64)>;

fn homogeneous_terms(deg: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec((0..=deg, 0..=deg, 1i64..7), 1..4).prop_map(move |v| {
        v.into_iter()
            .filter(|(a, b, _)| a + b <= deg)
            .collect()
    })
}

fn homogeneous(r: &Ring, deg: u32, terms: &[(u32, u32, i64)]) -> Polynomial {
    Polynomial::from_terms(
        terms
            .iter()
            .map(|&(a, b, c)| (r.monomial(&[a, b, deg - a - b]), r.scalar(c)))
            .collect(),
        r.order(),
    )
}

fn gens_strategy() -> impl Strategy<Value = Vec<(u32, Terms)>> {
    prop::collection::vec((1u32..4).prop_flat_map(|d| (Just(d), homogeneous_terms(d))), 1..4)
}

fn build(r: &Ring, spec: &[(u32, Terms)]) -> Vec<Polynomial> {
    spec.iter().map(|(d, t)| homogeneous(r, *d, t)).filter(|p| !p.is_zero()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_satisfies_buchberger_criterion(spec in gens_strategy()) {
        let r = common::ring(&["x", "y", "z"]);
        let ord = ModuleOrder::rank_one(r.order().clone());
        let gens: Vec<Vector> = build(&r, &spec).iter().map(|p| Vector::from_poly(p, 0, &ord)).collect();
        let gb = buchberger(&gens, &r, &ord, 1);
        prop_assert!(gb.satisfies_buchberger_criterion());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        // reduced: no leading monomial divides a term of another element
        for (i, a) in gb.elements().iter().enumerate() {
            prop_assert!(a.lead().unwrap().2.is_one());
            for (j, b) in gb.elements().iter().enumerate() {
                if i != j {
                    let la = &a.lead().unwrap().0;
                    prop_assert!(b.terms().iter().all(|t| !la.divides(&t.0)));
                }
            }
        }
    }

    #[test]
    fn membership_is_sound(spec in gens_strategy(), mult in prop::collection::vec((0u32..3, 0u32..3, 0u32..3, 1i64..9), 1..4)) {
        let r = common::ring(&["x", "y", "z"]);
        let ord = ModuleOrder::rank_one(r.order().clone());
        let polys = build(&r, &spec);
        prop_assume!(!polys.is_empty());
        let gens: Vec<Vector> = polys.iter().map(|p| Vector::from_poly(p, 0, &ord)).collect();
        let gb = buchberger(&gens, &r, &ord, 1);
        let mut v = Vector::zero();
        for (k, &(a, b, c, s)) in mult.iter().enumerate() {
            let g = &gens[k % gens.len()];
            v = v.add_scaled(g, &r.scalar(s), &r.monomial(&[a, b, c]), &ord);
        }
        prop_assert!(gb.normal_form(&v).is_zero());
        // a standard monomial is its own normal form
        let leads = gb.leading_monomials(0);
        for d in 0..4 {
            for m in hgl_core::module::monomials_of_degree(r.weights(), d) {
                if !leads.iter().any(|l| l.divides(&m)) {
                    let mv = Vector::from_terms(vec![(m.clone(), 0, r.scalar(1))], &ord);
                    prop_assert_eq!(gb.normal_form(&mv), mv);
                }
            }
        }
    }

    #[test]
    fn normal_forms_have_no_divisible_terms(spec in gens_strategy(), probe in prop::collection::vec((0u32..4, 0u32..4, 0u32..4, -5i64..5), 1..6)) {
        let r = common::ring(&["x", "y", "z"]);
        let ord = ModuleOrder::rank_one(r.order().clone());
        let gens: Vec<Vector> = build(&r, &spec).iter().map(|p| Vector::from_poly(p, 0, &ord)).collect();
        let gb = buchberger(&gens, &r, &ord, 1);
        let v = Vector::from_terms(probe.iter().map(|&(a, b, c, s)| (r.monomial(&[a, b, c]), 0, r.scalar(s))).collect(), &ord);
        let nf = gb.normal_form(&v);
        let leads = gb.leading_monomials(0);
        for t in nf.terms() {
            prop_assert!(!leads.iter().any(|l| l.divides(&t.0)));
        }
        // v − nf lies in the module
        prop_assert!(gb.contains(&v.sub(&nf, &ord)));
    }

    #[test]
    fn syzygies_match_linear_algebra(spec in gens_strategy()) {
        let r = common::ring(&["x", "y", "z"]);
        let ord = free_order(&r, &[0]);
        let gens: Vec<Vector> = build(&r, &spec).iter().map(|p| Vector::from_poly(p, 0, &ord)).collect();
        prop_assume!(!gens.is_empty());
        let lifting = lift_and_syzygies(&gens, &r, &ord, 1);
        let src = lifting.source_order().shifts().to_vec();
        // composing with the generators gives zero
        for s in lifting.syzygies() {
            let mut acc = Vector::zero();
            for (m, c, a) in s.terms() {
                acc = acc.add_scaled(&gens[*c as usize], a, m, &ord);
            }
            prop_assert!(acc.is_zero());
        }
        for d in 0..=common::max_degree().min(6) as i64 {
            let expected = common::kernel_dim(&r, &[0], &gens, &src, d);
            let got = common::span_dim(&r, &src, lifting.syzygies(), d);
            prop_assert_eq!(got, expected, "degree {}", d);
        }
    }
}

#[test]
fn module_syzygies_of_a_matrix_match_linear_algebra() {
    let r = common::ring(&["x", "y", "z"]);
    let ord = free_order(&r, &[0, 0]);
    let col = |a: &str, b: &str| {
        Vector::from_components(&[(0, r.parse_poly(a).unwrap()), (1, r.parse_poly(b).unwrap())], &ord)
    };
    let gens = vec![col("x", "y"), col("y", "z"), col("z", "x"), col("x*y", "0")];
    let lifting = lift_and_syzygies(&gens, &r, &ord, 2);
    let src = lifting.source_order().shifts().to_vec();
    for d in 0..=common::max_degree() as i64 {
        assert_eq!(
            common::span_dim(&r, &src, lifting.syzygies(), d),
            common::kernel_dim(&r, &[0, 0], &gens, &src, d),
            "degree {}",
            d
        );
    }
}

#[test]
fn position_over_term_bases_agree_with_term_over_position() {
    let r = common::ring(&["x", "y"]);
    let top = free_order(&r, &[0, 0]);
    let pot = ModuleOrder::new(r.order().clone(), ModuleOrderKind::Pot);
    let mk = |ord: &ModuleOrder| {
        vec![
            Vector::from_components(&[(0, r.parse_poly("x").unwrap()), (1, r.parse_poly("y").unwrap())], ord),
            Vector::from_components(&[(0, r.parse_poly("y^2").unwrap())], ord),
        ]
    };
    let a = buchberger(&mk(&top), &r, &top, 2);
    let b = buchberger(&mk(&pot), &r, &pot, 2);
    for v in b.elements() {
        let v = Vector::from_terms(v.terms().to_vec(), &top);
        assert!(a.contains(&v));
    }
    for v in a.elements() {
        let v = Vector::from_terms(v.terms().to_vec(), &pot);
        assert!(b.contains(&v));
    }
    let _ = Monomial::one(2);
}
