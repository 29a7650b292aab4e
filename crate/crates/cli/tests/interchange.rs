//! Parsing and emitting documents: schema errors point at the offending
//! field, invariant errors name the offending pair, and serialization is
//! injective on canonical forms.

use std::collections::HashSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use swb_cli::doc::{compact, emit, parse, Document, Envelope};
use swb_cli::CliError;
use swb_core::category::Morphism;
use swb_core::chord::{enumerate, Tcd};
use swb_core::swb::random::{random_datum, Bounds};

fn wrap(kind: &str, payload: &str) -> String {
    format!(r#"{{"version":"1","kind":"{kind}","payload":{payload}}}"#)
}

fn schema_path(text: &str) -> String {
    match parse(text) {
        Err(CliError::Schema { path, .. }) => path,
        other => panic!("expected a schema error, got {other:?}"),
    }
}

fn invariant(text: &str) -> (String, String) {
    match parse(text) {
        Err(CliError::Invariant { path, reason }) => (path, reason),
        other => panic!("expected an invariant error, got {other:?}"),
    }
}

const F1: &str = r#"{"tcd":{"n":1,"arcs":[[1,2]],"twists":[1]},"f_south":2,"f_north":0,"f_arcs":[1]}"#;

#[test]
fn torus_serializes_compactly() {
    assert_eq!(compact(&Document::Tcd(Tcd::tor())), r#"{"n":2,"arcs":[[1,3],[2,4]],"twists":[0,0]}"#);
}

#[test]
fn unknown_fields_are_rejected_where_they_occur() {
    assert_eq!(
        schema_path(r#"{"version":"1","kind":"tcd","payload":{"n":0,"arcs":[],"twists":[]},"extra":1}"#),
        "/extra"
    );
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":0,"arcs":[],"twists":[],"colour":"red"}"#)), "/payload/colour");
    let nested = format!(r#"{{"frame":{},"pairs":[],"junk":0}}"#, F1.replace(r#""f_south":2"#, r#""f_south":2,"g":1"#));
    assert_eq!(schema_path(&wrap("swb", &nested)), "/payload/frame/g");
}

#[test]
fn wrong_types_point_at_the_value() {
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":1,"arcs":[[1,"2"]],"twists":[0]}"#)), "/payload/arcs/0/1");
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":1,"arcs":[[1,2]],"twists":[3]}"#)), "/payload/twists/0");
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":2,"arcs":[[1,2]],"twists":[0]}"#)), "/payload/arcs");
    assert_eq!(schema_path(r#"{"version":"2","kind":"tcd","payload":{"n":0,"arcs":[],"twists":[]}}"#), "/version");
    assert_eq!(schema_path(&wrap("knot", "{}")), "/kind");
}

#[test]
fn non_canonical_order_is_rejected() {
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":2,"arcs":[[2,4],[1,3]],"twists":[0,0]}"#)), "/payload/arcs/1");
    assert_eq!(schema_path(&wrap("tcd", r#"{"n":1,"arcs":[[2,1]],"twists":[0]}"#)), "/payload/arcs/0");
    let swapped = format!(r#"{{"frame":{F1},"pairs":[[[1,1],[0,2]],[[0,1],[2,1]]]}}"#);
    assert_eq!(schema_path(&wrap("swb", &swapped)), "/payload/pairs/0");
    let unsorted = format!(r#"{{"frame":{F1},"pairs":[[[0,2],[1,1]],[[0,1],[2,1]]]}}"#);
    assert_eq!(schema_path(&wrap("swb", &unsorted)), "/payload/pairs/1");
}

#[test]
fn invariant_errors_name_the_pair() {
    // on the cross-cap frame the boundary order is (0,1) (0,2) (1,1) (2,1)
    let crossing = format!(r#"{{"frame":{F1},"pairs":[[[0,1],[1,1]],[[0,2],[2,1]]]}}"#);
    let (path, reason) = invariant(&wrap("swb", &crossing));
    assert_eq!(path, "/payload/pairs/1");
    assert!(reason.contains("pair 1 crosses pair 0"), "{reason}");

    let twice = format!(r#"{{"frame":{F1},"pairs":[[[0,1],[0,2]],[[0,2],[2,1]]]}}"#);
    let (path, reason) = invariant(&wrap("swb", &twice));
    assert_eq!(path, "/payload/pairs/1/0");
    assert!(reason.contains("pair 0"), "{reason}");

    let missing = format!(r#"{{"frame":{F1},"pairs":[[[0,1],[0,2]]]}}"#);
    assert!(invariant(&wrap("swb", &missing)).1.contains("unpaired"));

    let outside = format!(r#"{{"frame":{F1},"pairs":[[[0,1],[0,3]],[[1,1],[2,1]]]}}"#);
    assert_eq!(invariant(&wrap("swb", &outside)).0, "/payload/pairs/0/1");
}

#[test]
fn frames_need_a_single_boundary() {
    let ann = r#"{"tcd":{"n":1,"arcs":[[1,2]],"twists":[0]},"f_south":0,"f_north":0,"f_arcs":[0]}"#;
    assert_eq!(invariant(&wrap("frame", ann)).0, "/payload");
}

#[test]
fn serialization_is_injective_on_chord_diagrams() {
    for n in 0..=4 {
        let all = enumerate(n, false);
        let texts: HashSet<String> = all.iter().map(|t| compact(&Document::Tcd(t.clone()))).collect();
        assert_eq!(texts.len(), all.len());
        for t in all {
            let text = emit(&Envelope::new(Document::Tcd(t.clone())));
            match parse(&text).unwrap().doc {
                Document::Tcd(u) => assert_eq!(u, t),
                _ => unreachable!(),
            }
        }
    }
}

proptest! {
    #[test]
    fn data_round_trip(seed in any::<u64>()) {
        let th = random_datum(&mut ChaCha8Rng::seed_from_u64(seed), &Bounds::new(3, 6, 4));
        let text = emit(&Envelope::new(Document::Swb(th.clone())));
        let back = parse(&text).unwrap();
        prop_assert_eq!(emit(&back), text);
        match back.doc {
            Document::Swb(u) => prop_assert_eq!(u, th),
            _ => unreachable!(),
        }
    }

    #[test]
    fn morphisms_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let th = random_datum(&mut rng, &Bounds::new(2, 4, 3));
        let m = Morphism::from_datum(&th);
        let text = emit(&Envelope::new(Document::Morphism(m)));
        prop_assert_eq!(emit(&parse(&text).unwrap()), text);
    }

    #[test]
    fn distinct_data_serialize_differently(a in any::<u64>(), b in any::<u64>()) {
        let bounds = Bounds::new(2, 3, 2);
        let x = random_datum(&mut ChaCha8Rng::seed_from_u64(a), &bounds);
        let y = random_datum(&mut ChaCha8Rng::seed_from_u64(b), &bounds);
        let (sx, sy) = (compact(&Document::Swb(x.clone())), compact(&Document::Swb(y.clone())));
        prop_assert_eq!(sx == sy, x == y);
    }
}
