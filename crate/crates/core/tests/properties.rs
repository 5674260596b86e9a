use pentafuzzy::measures::similarity;
use pentafuzzy::{BifuzzySet, BifuzzyValue, Mode, NormCouple, PentaValue};
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        1 => Just(1.0),
        1 => Just(0.5),
        1 => (0u32..=20).prop_map(|k| k as f64 / 20.0),
        6 => 0.0..=1.0f64,
    ]
}

fn bifuzzy() -> impl Strategy<Value = BifuzzyValue> {
    (unit(), unit()).prop_map(|(mu, nu)| BifuzzyValue::new(mu, nu).unwrap())
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Standard), Just(Mode::Balanced)]
}

fn penta() -> impl Strategy<Value = PentaValue> {
    (bifuzzy(), mode()).prop_map(|(v, m)| PentaValue::from_bifuzzy(v, m))
}

fn couple() -> impl Strategy<Value = NormCouple> {
    prop_oneof![
        Just(NormCouple::MinMax),
        Just(NormCouple::ProductProbSum),
        Just(NormCouple::Lukasiewicz),
        (0.01..100.0f64)
            .prop_filter("s != 1", |s| (s - 1.0).abs() > 1e-3)
            .prop_map(|s| NormCouple::frank(s).unwrap()),
    ]
}

fn label() -> impl Strategy<Value = String> {
    "[A-Za-z0-9_.-]{1,10}"
}

fn set() -> impl Strategy<Value = BifuzzySet> {
    (
        "[a-z]{1,6}",
        proptest::collection::btree_map(label(), bifuzzy(), 0..20),
    )
        .prop_map(|(name, elements)| {
            let mut s = BifuzzySet::new(name);
            for (k, v) in elements {
                s.insert(k, v).unwrap();
            }
            s
        })
}

proptest! {
    #[test]
    fn transform_bounds(v in bifuzzy(), m in mode()) {
        let td = v.tau_delta(m);
        prop_assert!(td.tau.abs() + td.delta.abs() <= 1.0 + 1e-12);
        let x = PentaValue::from_bifuzzy(v, m);
        prop_assert!(x.is_valid());
        prop_assert_eq!(x.t() * x.f(), 0.0);
        prop_assert_eq!(x.c() * x.u(), 0.0);
    }

    #[test]
    fn sign_laws(v in bifuzzy(), m in mode()) {
        // Swapping mu and nu flips tau; complementing both flips delta.
        let td = v.tau_delta(m);
        let swapped = v.swapped().tau_delta(m);
        let comp = BifuzzyValue::new(1.0 - v.mu(), 1.0 - v.nu()).unwrap().tau_delta(m);
        prop_assert!((swapped.tau + td.tau).abs() < 1e-12);
        prop_assert!((swapped.delta - td.delta).abs() < 1e-12);
        prop_assert!((comp.delta + td.delta).abs() < 1e-12);
    }

    #[test]
    fn standard_round_trip(v in bifuzzy()) {
        let back = PentaValue::from_bifuzzy(v, Mode::Standard).to_bifuzzy().unwrap();
        prop_assert!((back.mu() - v.mu()).abs() < 1e-12);
        prop_assert!((back.nu() - v.nu()).abs() < 1e-12);
    }

    #[test]
    fn entropy_plus_syntropy(x in penta()) {
        prop_assert_eq!(x.entropy_scalar() + x.syntropy_scalar(), 1.0);
        prop_assert!((x.entropy().scalar() - x.entropy_scalar()).abs() < 1e-12);
    }

    #[test]
    fn similarity_bounds(x in penta(), y in penta()) {
        let s = similarity(&x, &y);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&s));
        prop_assert!((s - similarity(&y, &x)).abs() < 1e-15);
        prop_assert!((similarity(&x, &x) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_under_union_and_intersection(x in penta(), y in penta(), k in couple()) {
        prop_assert!(x.union(&y, k).is_ok());
        prop_assert!(x.intersection(&y, k).is_ok());
    }

    #[test]
    fn de_morgan(x in penta(), y in penta(), k in couple()) {
        let lhs = x.union(&y, k).unwrap().complement();
        let rhs = x.complement().intersection(&y.complement(), k).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let lhs = x.intersection(&y, k).unwrap().negation();
        let rhs = x.negation().union(&y.negation(), k).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn commutative(x in penta(), y in penta(), k in couple()) {
        prop_assert!(x.union(&y, k).unwrap().max_abs_diff(&y.union(&x, k).unwrap()) < 1e-12);
        prop_assert!(
            x.intersection(&y, k).unwrap().max_abs_diff(&y.intersection(&x, k).unwrap()) < 1e-12
        );
    }

    #[test]
    fn modular(x in penta(), y in penta(), k in couple()) {
        let u = x.union(&y, k).unwrap();
        let i = x.intersection(&y, k).unwrap();
        let lhs = u.entropy().scalar() + i.entropy().scalar();
        let rhs = x.entropy().scalar() + y.entropy().scalar();
        prop_assert!((lhs - rhs).abs() < 1e-9);
    }

    #[test]
    fn min_max_keeps_cu_free(x in penta(), y in penta()) {
        let u = x.union(&y, NormCouple::MinMax).unwrap();
        let i = x.intersection(&y, NormCouple::MinMax).unwrap();
        prop_assert!(u.c().min(u.u()) <= 1e-12);
        prop_assert!(i.c().min(i.u()) <= 1e-12);
    }

    #[test]
    fn frank_equation(a in unit(), b in unit(), k in couple()) {
        prop_assert!((k.t_norm(a, b) + k.t_conorm(a, b) - a - b).abs() < 1e-12);
    }

    #[test]
    fn csv_round_trip(s in set()) {
        let text = s.to_csv();
        let back = BifuzzySet::from_csv_str(s.name(), &text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_csv(), text);
    }

    #[test]
    fn json_round_trip(s in set()) {
        let text = s.to_json();
        let back = BifuzzySet::from_json_str(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.to_json(), text);
    }
}
