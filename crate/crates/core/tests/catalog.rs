use hyperid_core::catalog::{
    build_instance, lookup, run_trial, sample, verify, Assignment, Kind, Structure, TrialOutcome,
    CATALOG,
};
use hyperid_core::derived::g_vwp5f4;
use hyperid_core::{Error, Rat};

fn r(s: &str) -> Rat {
    s.parse().unwrap()
}

fn assign(pairs: &[(&str, &str)]) -> Assignment {
    pairs
        .iter()
        .fold(Assignment::new(), |a, (k, v)| a.with(k, r(v)))
}

#[test]
fn catalog_is_complete_and_ids_unique() {
    assert!(CATALOG.len() >= 25);
    let mut ids: Vec<_> = CATALOG.iter().map(|d| d.id).collect();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), CATALOG.len());
    assert!(matches!(
        lookup("no.such.id"),
        Err(Error::UnknownIdentity(_))
    ));
}

#[test]
fn vwp_7f6_worked_instance() {
    let base = [("a", "3"), ("b", "1/2"), ("d", "1/3"), ("f", "5/7")];
    for n in ["0", "1", "4"] {
        let mut pairs = base.to_vec();
        pairs.push(("N", n));
        let inst = build_instance("ext.vwp_7f6_sum", &assign(&pairs)).unwrap();
        let g = g_vwp5f4(&r("3"), &r("1/2"), &r("1/3"), &r("5/7")).unwrap();
        assert_eq!(inst.derived.g, Some(g));
        let v = verify(&inst, 12).unwrap();
        assert!(v.pass, "N={n}: {} vs {}", v.lhs, v.rhs);
        if n == "0" {
            assert_eq!((v.lhs.as_str(), v.rhs.as_str()), ("1", "1"));
        }
    }
}

#[test]
fn dougall_extension_at_n_zero() {
    let a = assign(&[
        ("f", "13/3"),
        ("a1", "2/5"),
        ("p", "7/4"),
        ("d1", "-1/6"),
        ("d2", "5/11"),
        ("N", "0"),
    ]);
    let v = verify(&build_instance("ext.dougall_9f8_sum", &a).unwrap(), 12).unwrap();
    assert!(v.pass);
    assert_eq!(v.lhs, "1");
}

#[test]
fn bailey_shared_denominator_is_degenerate() {
    // f = 3, p = 1: p(1−f+p)(1+a1+d1+d2−f) + d1 d2 a1 = −d2 + d2 = 0 for a1 = d1 = 1
    let a = assign(&[
        ("f", "3"),
        ("a1", "1"),
        ("p", "1"),
        ("d1", "1"),
        ("d2", "1/2"),
        ("b1", "1/3"),
        ("b2", "1/5"),
        ("N", "2"),
    ]);
    assert!(matches!(
        build_instance("ext.bailey_form1", &a),
        Err(Error::DegenerateParams(_))
    ));
    assert!(matches!(
        build_instance("ext.bailey_form2", &a),
        Err(Error::DegenerateParams(_))
    ));
}

#[test]
fn missing_parameter_is_reported() {
    let a = assign(&[("a", "1/2"), ("N", "3")]);
    assert!(matches!(
        build_instance("baseline.dixon", &a),
        Err(Error::MissingParameter(_))
    ));
}

#[test]
fn structure_assertions_hold_on_samples() {
    for def in CATALOG.iter() {
        for s in sample(def.id, 11, 10, 20).unwrap() {
            let c = s.instance.classification().unwrap();
            assert!(
                def.structure.holds(&c),
                "{}: {c:?} for {}",
                def.id,
                s.instance.assignment
            );
        }
    }
    let s = sample("ext.saalschutz_rr", 3, 20, 20).unwrap();
    for x in s {
        assert_eq!(
            x.instance.lhs_spec().unwrap().parametric_excess(),
            Rat::one()
        );
    }
    for id in [
        "ext.vwp_7f6_sum",
        "ext.whipple_9f8_5f4",
        "ext.dougall_9f8_sum",
        "ext.bailey_form1",
        "special.4_9",
        "special.4_21",
    ] {
        assert_eq!(
            lookup(id).unwrap().structure,
            Structure::VeryWellPoised,
            "{id}"
        );
    }
}

#[test]
fn sampler_is_deterministic() {
    let key = |v: Vec<hyperid_core::catalog::Sampled>| -> Vec<String> {
        v.into_iter()
            .map(|s| s.instance.assignment.to_string())
            .collect()
    };
    let a = key(sample("ext.dougall_9f8_sum", 42, 10, 20).unwrap());
    let b = key(sample("ext.dougall_9f8_sum", 42, 10, 20).unwrap());
    assert_eq!(a.len(), 10);
    assert_eq!(a, b);
    assert_ne!(a, key(sample("ext.dougall_9f8_sum", 43, 10, 20).unwrap()));
}

#[test]
fn numeric_samples_respect_the_guards() {
    for s in sample("special.4_1", 5, 20, 20).unwrap() {
        let [f, a1, d1, d2] = s.instance.assignment.take(["f", "a1", "d1", "d2"]).unwrap();
        assert!(f - a1 - d1 - d2 - 1 > Rat::zero());
        assert!(s.instance.lhs_spec().unwrap().parametric_excess() >= Rat::int(5));
    }
}

#[test]
fn every_entry_passes_a_few_trials() {
    let mut bad = Vec::new();
    for def in CATALOG.iter() {
        let trials = if def.kind == Kind::NonterminatingNumeric {
            3
        } else {
            20
        };
        for i in 0..trials {
            match run_trial(def, 7, i, 8, 12).outcome {
                TrialOutcome::Pass => {}
                other => bad.push(format!("{} #{i}: {other:?}", def.id)),
            }
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
