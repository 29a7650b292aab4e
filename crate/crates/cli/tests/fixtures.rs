//! The checked-in fixtures: exact round trips, agreement with the engine's
//! own examples, and the invariants each file records about itself.

use std::fs;
use std::path::PathBuf;

use swb_cli::claims::check;
use swb_cli::doc::{emit, parse, Document, Envelope};
use swb_core::category::{mobius, torus, Comparison, Morphism};
use swb_core::chord::Tcd;
use swb_core::fixtures as fx;
use swb_core::swb::{handle_slide_strict, hs_equivalent, SearchLimits, SwbDatum};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn all() -> Vec<(String, String)> {
    let mut out: Vec<_> = fs::read_dir(dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .map(|p| (p.file_stem().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap()))
        .collect();
    out.sort();
    out
}

fn load(name: &str) -> Envelope {
    parse(&fs::read_to_string(dir().join(format!("{name}.json"))).unwrap()).unwrap()
}

fn swb(name: &str) -> SwbDatum {
    match load(name).doc {
        Document::Swb(th) => th,
        other => panic!("{name} is a {}", other.kind()),
    }
}

#[test]
fn every_fixture_round_trips_exactly() {
    let files = all();
    assert!(files.len() >= 16);
    for (name, text) in files {
        let env = parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(emit(&env), text, "{name}");
    }
}

#[test]
fn every_fixture_describes_itself() {
    for (name, text) in all() {
        let env = parse(&text).unwrap();
        let source = env.source.unwrap_or_default();
        assert!(source.len() > 10, "{name} has no description");
    }
}

#[test]
fn recorded_claims_hold() {
    for (name, text) in all() {
        let env = parse(&text).unwrap();
        if let Some(c) = &env.claims {
            let bad = check(c, &env.doc);
            assert!(bad.is_empty(), "{name}: {bad:?}");
        }
    }
}

#[test]
fn recorded_equivalences_hold() {
    let mut seen = 0;
    for (name, text) in all() {
        let env = parse(&text).unwrap();
        let Some(other) = env.claims.as_ref().and_then(|c| c.equivalent_to.clone()) else { continue };
        seen += 1;
        let (a, b) = (swb(&name), swb(&other));
        let limits = SearchLimits::new(8);
        if a.has_internal_components() || b.has_internal_components() {
            let f = Morphism::from_datum(&a).with_limits(limits);
            assert_eq!(f.equals(&Morphism::from_datum(&b)).unwrap(), Comparison::Equal, "{name} ~ {other}");
        } else {
            assert!(hs_equivalent(&a, &b, limits).unwrap().is_equivalent(), "{name} ~ {other}");
        }
    }
    assert_eq!(seen, 2);
}

#[test]
fn fixtures_match_the_engine() {
    let tcd = |name: &str| match load(name).doc {
        Document::Tcd(t) => t,
        other => panic!("{name} is a {}", other.kind()),
    };
    assert_eq!(tcd("tor"), Tcd::tor());
    assert_eq!(tcd("mob"), Tcd::mob());
    assert_eq!(tcd("ann"), Tcd::ann());
    assert_eq!(tcd("empty"), Tcd::empty());
    for (name, f) in [("frame_f1", fx::frame_f1()), ("frame_f2", fx::frame_f2())] {
        match load(name).doc {
            Document::Frame(g) => assert_eq!(g, f, "{name}"),
            other => panic!("{name} is a {}", other.kind()),
        }
    }
    assert_eq!(swb("theta1"), fx::theta1());
    assert_eq!(swb("theta1_star"), fx::theta1().star());
    assert_eq!(swb("theta3"), fx::theta3());
    assert_eq!(swb("theta4"), fx::theta4());
    let before = fx::handle_slide_example();
    assert_eq!(swb("handle_slide_before"), before);
    assert_eq!(swb("handle_slide_after"), handle_slide_strict(&before, 2, -1).unwrap());
    let (three, mixed) = fx::crosscaps_and_torus();
    assert_eq!(swb("crosscaps3"), three);
    assert_eq!(swb("crosscap_torus"), mixed);
    for (name, m) in [("torus_generator", torus(1, 0)), ("mobius_generator", mobius(2))] {
        match load(name).doc {
            Document::Morphism(g) => assert_eq!(g.equals(&m).unwrap(), Comparison::Equal, "{name}"),
            other => panic!("{name} is a {}", other.kind()),
        }
    }
}
