// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;

use metric_duality::continuous::{
    quasiconcavity_of, real_dual, t_dual_at, z_dual_at, RealNorm, TNorm, TransformConfig, ZNorm,
};
use metric_duality::ext::{format_rational, parse_rational};
use metric_duality::{
    join, make_group, meet, random_quasinorm, rational, ExtValue, FiniteAbelianGroup, QuasiNorm,
    Rational,
};

const MODULI: &[&[u64]] = &[&[3], &[4], &[6], &[2, 2], &[8], &[9], &[2, 4], &[10], &[12], &[3, 3]];

fn pool(choice: u8) -> Vec<ExtValue> {
    let f = |n, d| ExtValue::Finite(rational(n, d));
    match choice % 4 {
        0 => vec![f(1, 2), f(1, 1), f(5, 3)],
        1 => vec![f(1, 1), ExtValue::Infinity, f(0, 1)],
        2 => vec![f(2, 7), f(3, 1), ExtValue::Infinity],
        _ => vec![f(1, 1), f(2, 1)],
    }
}

fn group_and_norms() -> impl Strategy<Value = (FiniteAbelianGroup, QuasiNorm, QuasiNorm)> {
    (0..MODULI.len(), any::<u64>(), any::<u64>(), any::<u8>(), any::<u8>()).prop_map(
        |(m, s1, s2, p1, p2)| {
            let g = make_group(MODULI[m]).unwrap();
            let q = random_quasinorm(&g, s1, &pool(p1)).unwrap();
            let r = random_quasinorm(&g, s2, &pool(p2)).unwrap();
            (g, q, r)
        },
    )
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i128..50, 1i128..50).prop_map(|(n, d)| rational(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn monotone_and_antitone((_g, q, r) in group_and_norms()) {
        let upper = join(&[q.clone(), r]).unwrap();
        prop_assert!(q.regularise().le(&upper.regularise()).unwrap());
        prop_assert!(upper.dual().le(&q.dual()).unwrap());
    }

    #[test]
    fn regularisation_laws((_g, q, _r) in group_and_norms()) {
        let reg = q.regularise();
        prop_assert!(reg.le(&q).unwrap());
        prop_assert_eq!(reg.regularise(), reg.clone());
        prop_assert_eq!(reg.dual(), q.dual());
        prop_assert_eq!(q.regularise_formula(), reg.clone());
        prop_assert!(q.dual().is_regular().is_regular);
        prop_assert_eq!(reg.bidual(), reg);
    }

    #[test]
    fn scaling_law((_g, q, _r) in group_and_norms(), c in positive_rational()) {
        let lhs = q.scale(c).unwrap().dual();
        let rhs = q.dual().scale(c.recip()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn meet_is_a_regular_lower_bound((_g, q, r) in group_and_norms()) {
        let m = meet(&[q.clone(), r.clone()]).unwrap();
        prop_assert!(m.is_regular().is_regular);
        prop_assert!(m.le(&q.regularise()).unwrap());
        prop_assert!(m.le(&r.regularise()).unwrap());
    }

    #[test]
    fn order_reversal_on_regulars((_g, q, r) in group_and_norms()) {
        let (q, r) = (q.regularise(), r.regularise());
        prop_assert_eq!(q.le(&r).unwrap(), r.dual().le(&q.dual()).unwrap());
    }

    #[test]
    fn rational_strings_round_trip(n in 0i128..1_000_000, d in 1i128..1_000_000) {
        let r = rational(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        let v = ExtValue::Finite(r);
        prop_assert_eq!(v.to_string().parse::<ExtValue>().unwrap(), v);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn real_dual_is_monotone_and_scales(alpha in 0.1f64..=1.0, t in 0.01f64..100.0, c in 0.2f64..5.0) {
        let cfg = TransformConfig::default();
        let w = RealNorm::power(alpha);
        let a = real_dual(&w, t, &cfg).unwrap();
        let b = real_dual(&w, t * 1.5, &cfg).unwrap();
        prop_assert!(b >= a);
        let scaled = real_dual(&w.clone().scaled(c), t, &cfg).unwrap();
        prop_assert!((scaled - a / c).abs() <= 1e-9 * a / c);
    }

    #[test]
    fn duals_are_quasiconcave(scale in 0.1f64..10.0, k in 0.05f64..2.0) {
        let mut cfg = TransformConfig::default();
        cfg.grid_points = 512;
        let w = RealNorm::Table {
            breakpoints: vec![(0.0, 0.0), (1.0, 1.0), (2.0, 1.2), (3.0, 2.0)],
            tail_slope: k,
        }
        .scaled(scale);
        prop_assume!(w.validate(&cfg).is_ok());
        let qc = quasiconcavity_of(|t| real_dual(&w, t, &cfg).unwrap(), &TransformConfig {
            probes_per_decade: 4,
            shape_slack: 1e-9,
            ..cfg.clone()
        });
        prop_assert!(qc.holds, "{}", qc.describe());
    }

    #[test]
    fn circle_scaling(c in 0.25f64..8.0, k in 1i64..10, num in 1i128..20, den in 21i128..40) {
        let cfg = TransformConfig::default();
        let base = t_dual_at(&TNorm::lambda(), k, &cfg).unwrap();
        let scaled = t_dual_at(&TNorm::Lambda { scale: c }, k, &cfg).unwrap();
        prop_assert!((scaled - base / c).abs() <= 1e-9 * base / c);
        let zb = z_dual_at(&ZNorm::abs(), rational(num, den), &cfg).unwrap();
        let zs = z_dual_at(&ZNorm::Abs { scale: c }, rational(num, den), &cfg).unwrap();
        prop_assert!((zs.value - zb.value / c).abs() <= 1e-12 * zb.value / c);
    }
}

#[test]
fn properness_propagates_to_the_dual() {
    let cfg = TransformConfig::default();
    for w in [RealNorm::power(0.5), RealNorm::Log1p { scale: 1.0 }, RealNorm::Linear { slope: 3.0 }] {
        let values: Vec<f64> = (0..=6).map(|j| real_dual(&w, 10f64.powi(j), &cfg).unwrap()).collect();
        assert!(values.windows(2).all(|p| p[1] > p[0]), "{w:?}: {values:?}");
        assert!(values[6] > 10.0 * values[0], "{w:?}: {values:?}");
    }
}
