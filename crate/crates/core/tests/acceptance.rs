//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the checked values once its assertions hold.

use std::time::Instant;

use knotvol::bounds::{
    adams_bound, agol_thurston_bound, coefficient_bound, first_residual, prop_residuals,
    refined_bound, refined_delta_bound, v3, V3_REFERENCE,
};
use knotvol::checkerboard::{build_graphs, multiplicity_profile, n_identity_holds, reduce_graph};
use knotvol::diagram::{validate, LinkDiagram};
use knotvol::jones::{
    colored_jones3, head_tail, jones2, kauffman_bracket, kauffman_bracket_bruteforce, HeadTail,
};
use knotvol::knotbase::{bundled_table, KnotRecord};
use knotvol::poly::JonesPoly;
use knotvol::twist::{augment, count_delta, detect_twists, twist_profile, TwistProfile};

fn diagram(name: &str) -> LinkDiagram {
    bundled_table()
        .find(name)
        .unwrap_or_else(|| panic!("{name} missing from bundled table"))
        .diagram()
        .unwrap()
}

fn pipeline(name: &str) -> (LinkDiagram, TwistProfile, HeadTail, HeadTail) {
    let d = diagram(name);
    let profile = twist_profile(&detect_twists(&d).unwrap());
    let h2 = head_tail(&jones2(&d).unwrap(), 2).unwrap();
    let h3 = head_tail(&colored_jones3(&d).unwrap(), 3).unwrap();
    (d, profile, h2, h3)
}

/// The printed Jones polynomial of 9_20.
fn jones_9_20() -> JonesPoly {
    JonesPoly::from_terms([
        (-9i64, -1i64),
        (-8, 3),
        (-7, -5),
        (-6, 6),
        (-5, -7),
        (-4, 7),
        (-3, -5),
        (-2, 4),
        (-1, -2),
        (0, 1),
    ])
}

#[test]
fn criterion_1_jones_golden() {
    let start = Instant::now();
    let d = diagram("9_20");
    let v = jones2(&d).unwrap();
    assert_eq!(v, jones_9_20(), "J(2) of 9_20 must match coefficient-for-coefficient");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!("ACCEPTANCE 1 PASS: J(2) of 9_20 reproduced exactly ({elapsed:?})");
}

#[test]
fn criterion_2_colored_jones_golden() {
    let start = Instant::now();
    let d = diagram("9_20");
    let j3 = colored_jones3(&d).unwrap();
    let lo = j3.min_exp().unwrap();
    let hi = j3.max_exp().unwrap();
    assert_eq!((lo, hi), (-25, 2), "exponent range of J(3)");
    let at = |e: i64| -> i64 { i64::try_from(j3.coeff(e)).unwrap() };
    assert_eq!((at(-25), at(-24), at(-23)), (1, -3, 2), "trailing coefficients");
    assert_eq!((at(0), at(1), at(2)), (-1, -2, 1), "leading coefficients");
    let h3 = head_tail(&j3, 3).unwrap();
    assert_eq!(h3.c, -1, "c_3");
    assert_eq!(h3.gamma, 2, "gamma_3");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!("ACCEPTANCE 2 PASS: J(3) ends of 9_20 are (1,-3,2) / (-1,-2,1) ({elapsed:?})");
}

#[test]
fn criterion_3_coefficient_identities() {
    let start = Instant::now();
    // (a) The worked 9_20 values substituted directly.
    {
        let p = TwistProfile::from_lengths(vec![1, 1, 2, 2, 3]);
        let d = diagram("9_20");
        let pair = build_graphs(&d).unwrap();
        let stats = multiplicity_profile(&reduce_graph(&pair.black), &reduce_graph(&pair.white));
        assert_eq!((stats.tau_white, stats.tau_black), (1, 2), "tau_A=1, tau_B=2");
        let h2 = head_tail(&jones2(&d).unwrap(), 2).unwrap();
        let h3 = head_tail(&colored_jones3(&d).unwrap(), 3).unwrap();
        assert_eq!((h2.b, h2.c, h2.beta, h2.gamma), (2, 4, 3, 5));
        assert_eq!((h3.c, h3.gamma), (-1, 2));
        assert_eq!(prop_residuals(&p, &stats, &h2, &h3), [0, 0, 0]);
    }
    // (b) Identity 1 with computed polynomials, across the bundled table.
    let table = bundled_table();
    for record in &table.records {
        let d = record.diagram().unwrap();
        let profile = twist_profile(&detect_twists(&d).unwrap());
        let h2 = head_tail(&jones2(&d).unwrap(), 2).unwrap();
        assert_eq!(
            first_residual(&profile, &h2),
            0,
            "b2 + beta2 = t(D) fails for {}",
            record.name
        );
    }
    // (c) All three identities with computed J(3) on the named subset.
    for name in ["4_1", "5_2", "6_2", "9_20"] {
        let (d, profile, h2, h3) = pipeline(name);
        let pair = build_graphs(&d).unwrap();
        let stats = multiplicity_profile(&reduce_graph(&pair.black), &reduce_graph(&pair.white));
        assert_eq!(
            prop_residuals(&profile, &stats, &h2, &h3),
            [0, 0, 0],
            "residuals for {name}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 600.0, "took {elapsed:?}, budget 10 min");
    println!(
        "ACCEPTANCE 3 PASS: coefficient identities hold (paper values, identity 1 on {} knots, all three on 4_1/5_2/6_2/9_20) ({elapsed:?})",
        bundled_table().records.len()
    );
}

#[test]
fn criterion_4_bound_values() {
    // Figure-eight: refined-with-delta gives 4 v3, the twist-number bound 10 v3.
    let d = diagram("4_1");
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    let delta = count_delta(&augment(&d, &regions).unwrap());
    assert_eq!(delta, 4);
    assert_eq!(refined_delta_bound(&profile, delta).v3_multiple, Some(4));
    assert_eq!(agol_thurston_bound(profile.twist_number()).v3_multiple, Some(10));

    // 9_20: all four quoted bounds as exact integer multiples.
    let (d, profile, h2, h3) = pipeline("9_20");
    assert_eq!(refined_bound(&profile).v3_multiple, Some(21));
    let (coefficient, volumish) = coefficient_bound(&h2, &h3);
    assert_eq!(coefficient.v3_multiple, Some(28));
    assert_eq!(volumish.v3_multiple, Some(40));
    assert_eq!(
        adams_bound(d.crossing_count(), d.is_knot(), false).v3_multiple,
        Some(20)
    );
    println!(
        "ACCEPTANCE 4 PASS: bounds 4_1 -> (4, 10) v3; 9_20 -> (21, 28, 40, 20) v3"
    );
}

#[test]
fn criterion_5_soundness_sweep() {
    let table = bundled_table();
    let mut checked = 0;
    for record in table.records.iter().filter(|r| r.reference_volume.is_some()) {
        let vol = record.reference_volume.unwrap();
        let bounds = all_bounds(record);
        assert!(!bounds.is_empty(), "{} has no applicable bounds", record.name);
        for (name, numeric) in bounds {
            assert!(
                numeric >= vol - 1e-9,
                "{}: bound {name} = {numeric} below reference volume {vol}",
                record.name
            );
        }
        checked += 1;
    }
    assert!(checked >= 6, "expected several reference volumes, saw {checked}");

    // Figure-eight slack under the delta-refined bound is exactly 2 v3.
    let d = diagram("4_1");
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    let delta = count_delta(&augment(&d, &regions).unwrap());
    let bound = refined_delta_bound(&profile, delta).numeric.unwrap();
    let vol = bundled_table().reference_volume("4_1").unwrap();
    let slack = bound - vol;
    assert!(
        (slack - 2.0 * v3()).abs() < 1e-9,
        "figure-eight slack {slack} is not 2 v3"
    );
    println!("ACCEPTANCE 5 PASS: every applicable bound clears its reference volume ({checked} knots); figure-eight slack = 2 v3");
}

/// Every applicable bound for a hyperbolic table entry, as (name, value).
fn all_bounds(record: &KnotRecord) -> Vec<(&'static str, f64)> {
    let d = record.diagram().unwrap();
    if !validate(&d).all_pass() {
        return Vec::new();
    }
    let regions = detect_twists(&d).unwrap();
    let profile = twist_profile(&regions);
    let is_fig8 = d.is_knot() && d.crossing_count() == 4;
    let mut bounds = vec![
        adams_bound(d.crossing_count(), d.is_knot(), is_fig8),
        agol_thurston_bound(profile.twist_number()),
        refined_bound(&profile),
    ];
    if let Ok(aug) = augment(&d, &regions) {
        bounds.push(refined_delta_bound(&profile, count_delta(&aug)));
    }
    let h2 = head_tail(&jones2(&d).unwrap(), 2).unwrap();
    let h3 = head_tail(&colored_jones3(&d).unwrap(), 3).unwrap();
    let (coefficient, volumish) = coefficient_bound(&h2, &h3);
    bounds.push(coefficient);
    bounds.push(volumish);
    bounds
        .into_iter()
        .filter(|b| b.applicable)
        .map(|b| (b.name, b.numeric.unwrap()))
        .collect()
}

#[test]
fn criterion_6_property_suites() {
    let table = bundled_table();
    for record in &table.records {
        let name = &record.name;
        let d = record.diagram().unwrap();
        let c = d.crossing_count();

        // Euler: F = c + 2.
        assert_eq!(d.faces().len(), c + 2, "Euler count for {name}");

        // Twist statistics: g-monotonicity and g_1 = t.
        let regions = detect_twists(&d).unwrap();
        let profile = twist_profile(&regions);
        assert_eq!(profile.at_least(1), profile.twist_number(), "g_1 = t for {name}");
        for i in 1..=c {
            assert!(
                profile.at_least(i) >= profile.at_least(i + 1),
                "g monotonicity for {name}"
            );
        }

        // Checkerboard: n_B(i) + n_W(i) = g_i for i >= 2.
        let pair = build_graphs(&d).unwrap();
        let stats = multiplicity_profile(&reduce_graph(&pair.black), &reduce_graph(&pair.white));
        assert!(n_identity_holds(&stats, &profile), "n identity for {name}");

        // Jones span r_2 = c(D) and unit extreme coefficients.
        let v = jones2(&d).unwrap();
        assert_eq!(v.span(), Some(c as i64), "span law for {name}");
        let h2 = head_tail(&v, 2).unwrap();
        assert_eq!((h2.a, h2.alpha), (1, 1), "a_2 = alpha_2 = 1 for {name}");

        // Mirror symmetry.
        let vm = jones2(&d.mirror()).unwrap();
        assert_eq!(vm, v.substitute_power(-1), "mirror symmetry for {name}");

        // Oracle equivalence on small diagrams.
        if c <= 8 {
            assert_eq!(
                kauffman_bracket(&d).unwrap(),
                kauffman_bracket_bruteforce(&d),
                "bracket oracle equivalence for {name}"
            );
        }

        // Bound ordering.
        if profile.twist_number() >= 2 {
            let refined = refined_bound(&profile).v3_multiple.unwrap();
            let at = agol_thurston_bound(profile.twist_number()).v3_multiple.unwrap();
            assert!(refined <= at, "refined <= Agol-Thurston for {name}");
        }
        if validate(&d).all_pass() {
            let j3 = colored_jones3(&d).unwrap();
            let h3 = head_tail(&j3, 3).unwrap();
            assert_eq!((h3.a, h3.alpha), (1, 1), "a_3 = alpha_3 = 1 for {name}");
            let (coefficient, volumish) = coefficient_bound(&h2, &h3);
            if let (Some(cm), Some(vm)) = (coefficient.v3_multiple, volumish.v3_multiple) {
                assert!(cm <= vm, "coefficient <= volumish for {name}");
            }
        }
    }
    println!(
        "ACCEPTANCE 6 PASS: property suites hold across {} bundled knots",
        table.records.len()
    );
}

#[test]
fn criterion_7_v3_constant() {
    let v = v3();
    let rel = (v - V3_REFERENCE).abs() / V3_REFERENCE;
    assert!(rel < 1e-12, "v3 = {v}, reference {V3_REFERENCE}, rel err {rel}");
    println!("ACCEPTANCE 7 PASS: v3 = {v} agrees with {V3_REFERENCE} to 12 significant digits");
}
