//! The JSON interchange format.
//!
//! Every file is an envelope `{version, kind, _source?, claims?, payload}`.
//! Payload schemas:
//!
//! * `tcd`: `{n, arcs, twists}`; arcs as 1-based `[lo, hi]` pairs sorted by
//!   `lo`, twists as 0/1 aligned with them;
//! * `frame`: `{tcd, f_south, f_north, f_arcs}`, `f_arcs` aligned with the
//!   arcs;
//! * `swb`: `{frame, pairs}`, each pair `[[level, slot], [level, slot]]` with
//!   the smaller vertex first and the list sorted;
//! * `morphism`: `{domain, codomain, terms: [{coeff, datum}]}`, `coeff` a
//!   list of `[a, b, c, k]` meaning `k·α^a β^b γ^c`.
//!
//! Parsing accepts canonical documents only, so `emit(parse(x)) == x`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use swb_core::category::{Morphism, Scalar};
use swb_core::chord::Tcd;
use swb_core::swb::{Frame, FrameVertex, SwbDatum};

use crate::claims::Claims;
use crate::error::{CliError, Result};

pub const VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TcdJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    pub twists: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameJson {
    pub tcd: TcdJson,
    pub f_south: usize,
    pub f_north: usize,
    pub f_arcs: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwbJson {
    pub frame: FrameJson,
    pub pairs: Vec<[[usize; 2]; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub coeff: Vec<[i64; 4]>,
    pub datum: SwbJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismJson {
    pub domain: usize,
    pub codomain: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEnvelope {
    version: String,
    kind: String,
    #[serde(rename = "_source", default, skip_serializing_if = "Option::is_none")]
    source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    claims: Option<Claims>,
    payload: Value,
}

#[derive(Debug, Clone)]
pub enum Document {
    Tcd(Tcd),
    Frame(Frame),
    Swb(SwbDatum),
    Morphism(Morphism),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Tcd(_) => "tcd",
            Document::Frame(_) => "frame",
            Document::Swb(_) => "swb",
            Document::Morphism(_) => "morphism",
        }
    }

    pub fn payload(&self) -> Value {
        match self {
            Document::Tcd(t) => to_value(&tcd_json(t)),
            Document::Frame(f) => to_value(&frame_json(f)),
            Document::Swb(th) => to_value(&swb_json(th)),
            Document::Morphism(m) => to_value(&morphism_json(m)),
        }
    }
}

/// A parsed file.
#[derive(Debug, Clone)]
pub struct Envelope {
    pub source: Option<String>,
    pub claims: Option<Claims>,
    pub doc: Document,
}

impl Envelope {
    pub fn new(doc: Document) -> Self {
        Envelope { source: None, claims: None, doc }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

pub fn tcd_json(t: &Tcd) -> TcdJson {
    let arcs = t.arcs();
    TcdJson {
        n: t.rank(),
        arcs: arcs.iter().map(|a| [a.lo, a.hi]).collect(),
        twists: arcs.iter().map(|a| u8::from(a.twisted)).collect(),
    }
}

pub fn frame_json(f: &Frame) -> FrameJson {
    FrameJson { tcd: tcd_json(f.tcd()), f_south: f.south(), f_north: f.north(), f_arcs: f.arc_mults() }
}

pub fn swb_json(th: &SwbDatum) -> SwbJson {
    let pairs = th.pairs().into_iter().map(|(x, y)| [[x.level, x.slot], [y.level, y.slot]]).collect();
    SwbJson { frame: frame_json(th.frame()), pairs }
}

pub fn scalar_json(c: &Scalar) -> Vec<[i64; 4]> {
    c.terms().map(|(m, &k)| [i64::from(m[0]), i64::from(m[1]), i64::from(m[2]), k]).collect()
}

pub fn morphism_json(m: &Morphism) -> MorphismJson {
    MorphismJson {
        domain: m.domain(),
        codomain: m.codomain(),
        terms: m.terms().iter().map(|(th, c)| TermJson { coeff: scalar_json(c), datum: swb_json(th) }).collect(),
    }
}

/// The compact one-line form of a payload, as in `{"n":2,...}`.
pub fn compact(doc: &Document) -> String {
    serde_json::to_string(&doc.payload()).expect("plain data serializes")
}

fn tcd_from(j: &TcdJson, at: &str) -> Result<Tcd> {
    if j.arcs.len() != j.n {
        return Err(CliError::schema(format!("{at}/arcs"), format!("expected {} arcs, found {}", j.n, j.arcs.len())));
    }
    if j.twists.len() != j.n {
        return Err(CliError::schema(
            format!("{at}/twists"),
            format!("expected {} twists, found {}", j.n, j.twists.len()),
        ));
    }
    if let Some(k) = j.twists.iter().position(|&s| s > 1) {
        return Err(CliError::schema(format!("{at}/twists/{k}"), "a twist is 0 or 1"));
    }
    for (k, a) in j.arcs.iter().enumerate() {
        if a[0] >= a[1] {
            return Err(CliError::schema(format!("{at}/arcs/{k}"), "an arc lists its lower end first"));
        }
        if k > 0 && j.arcs[k - 1][0] >= a[0] {
            return Err(CliError::schema(format!("{at}/arcs/{k}"), "arcs must be sorted by their lower end"));
        }
    }
    let arcs: Vec<_> = j.arcs.iter().zip(&j.twists).map(|(a, &s)| (a[0], a[1], s == 1)).collect();
    Tcd::new(j.n, &arcs).map_err(|e| CliError::invariant(format!("{at}/arcs"), e.to_string()))
}

fn frame_from(j: &FrameJson, at: &str) -> Result<Frame> {
    let t = tcd_from(&j.tcd, &format!("{at}/tcd"))?;
    if j.f_arcs.len() != t.rank() {
        return Err(CliError::schema(
            format!("{at}/f_arcs"),
            format!("expected {} multiplicities, found {}", t.rank(), j.f_arcs.len()),
        ));
    }
    Frame::new(t, j.f_south, j.f_north, &j.f_arcs).map_err(|e| CliError::invariant(at, e.to_string()))
}

fn swb_from(j: &SwbJson, at: &str) -> Result<SwbDatum> {
    let frame = frame_from(&j.frame, &format!("{at}/frame"))?;
    let mut owner = vec![None; frame.total()];
    let mut idx = Vec::with_capacity(j.pairs.len());
    for (k, p) in j.pairs.iter().enumerate() {
        if p[0] >= p[1] {
            return Err(CliError::schema(format!("{at}/pairs/{k}"), "a pair lists its smaller vertex first"));
        }
        if k > 0 && j.pairs[k - 1] >= *p {
            return Err(CliError::schema(format!("{at}/pairs/{k}"), "pairs must be sorted"));
        }
        let mut ends = [0; 2];
        for (e, v) in p.iter().enumerate() {
            let i = frame.index(FrameVertex::new(v[0], v[1])).map_err(|_| {
                CliError::invariant(format!("{at}/pairs/{k}/{e}"), format!("no vertex ({}, {})", v[0], v[1]))
            })?;
            if let Some(other) = owner[i] {
                return Err(CliError::invariant(
                    format!("{at}/pairs/{k}/{e}"),
                    format!("vertex ({}, {}) is already paired in pair {other}", v[0], v[1]),
                ));
            }
            owner[i] = Some(k);
            ends[e] = i;
        }
        idx.push((ends[0].min(ends[1]), ends[0].max(ends[1])));
    }
    if let Some(i) = owner.iter().position(Option::is_none) {
        let v = frame.vertex(i);
        return Err(CliError::invariant(
            format!("{at}/pairs"),
            format!("vertex ({}, {}) is unpaired", v.level, v.slot),
        ));
    }
    // two chords of the boundary order cross when exactly one end of one
    // lies strictly inside the other
    for (k, &(a, b)) in idx.iter().enumerate() {
        for (l, &(c, d)) in idx.iter().enumerate().skip(k + 1) {
            if (a < c && c < b) != (a < d && d < b) {
                return Err(CliError::invariant(format!("{at}/pairs/{l}"), format!("pair {l} crosses pair {k}")));
            }
        }
    }
    SwbDatum::from_index_pairs(frame, &idx).map_err(|e| CliError::invariant(format!("{at}/pairs"), e.to_string()))
}

fn scalar_from(c: &[[i64; 4]], at: &str) -> Result<Scalar> {
    let mut terms = Vec::with_capacity(c.len());
    for (k, t) in c.iter().enumerate() {
        let mut exps = [0u32; 3];
        for i in 0..3 {
            exps[i] = u32::try_from(t[i])
                .map_err(|_| CliError::schema(format!("{at}/{k}/{i}"), "exponents are non-negative"))?;
        }
        terms.push((exps, t[3]));
    }
    Ok(Scalar::from_terms(terms))
}

fn morphism_from(j: &MorphismJson, at: &str) -> Result<Morphism> {
    let mut m = Morphism::zero(j.domain, j.codomain);
    for (k, t) in j.terms.iter().enumerate() {
        let th = swb_from(&t.datum, &format!("{at}/terms/{k}/datum"))?;
        if (th.south(), th.north()) != (j.domain, j.codomain) {
            return Err(CliError::invariant(
                format!("{at}/terms/{k}/datum"),
                format!("datum of type ({}, {}) in a morphism {} -> {}", th.south(), th.north(), j.domain, j.codomain),
            ));
        }
        let c = scalar_from(&t.coeff, &format!("{at}/terms/{k}/coeff"))?;
        m.add_datum(&th, &c);
    }
    Ok(m)
}

/// JSON pointer of a `serde_path_to_error` path below `base`.
fn pointer(base: &str, path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = base.to_string();
    for seg in path.iter() {
        out.push('/');
        match seg {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

fn typed<T: DeserializeOwned>(v: Value, base: &str) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        let path = pointer(base, e.path());
        CliError::schema(path, e.into_inner().to_string())
    })
}

/// Pointer to the first place where `a` and `b` differ.
fn first_difference(a: &Value, b: &Value, at: &str) -> Option<String> {
    match (a, b) {
        (Value::Object(x), Value::Object(y)) => {
            for (k, v) in x {
                let here = format!("{at}/{k}");
                match y.get(k) {
                    Some(w) => {
                        if let Some(p) = first_difference(v, w, &here) {
                            return Some(p);
                        }
                    }
                    None => return Some(here),
                }
            }
            (x.len() != y.len()).then(|| at.to_string())
        }
        (Value::Array(x), Value::Array(y)) => {
            for (k, (v, w)) in x.iter().zip(y).enumerate() {
                if let Some(p) = first_difference(v, w, &format!("{at}/{k}")) {
                    return Some(p);
                }
            }
            (x.len() != y.len()).then(|| format!("{at}/{}", x.len().min(y.len())))
        }
        _ => (a != b).then(|| at.to_string()),
    }
}

fn payload_from(kind: &str, payload: Value) -> Result<Document> {
    let at = "/payload";
    let doc = match kind {
        "tcd" => Document::Tcd(tcd_from(&typed(payload.clone(), at)?, at)?),
        "frame" => Document::Frame(frame_from(&typed(payload.clone(), at)?, at)?),
        "swb" => Document::Swb(swb_from(&typed(payload.clone(), at)?, at)?),
        "morphism" => Document::Morphism(morphism_from(&typed(payload.clone(), at)?, at)?),
        other => return Err(CliError::schema("/kind", format!("unknown kind {other:?}"))),
    };
    if let Some(path) = first_difference(&payload, &doc.payload(), at) {
        return Err(CliError::schema(path, "not in canonical form"));
    }
    Ok(doc)
}

pub fn parse(text: &str) -> Result<Envelope> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::schema("", e.to_string()))?;
    let raw: RawEnvelope = typed(value, "")?;
    if raw.version != VERSION {
        return Err(CliError::schema("/version", format!("unsupported version {:?}", raw.version)));
    }
    let doc = payload_from(&raw.kind, raw.payload)?;
    Ok(Envelope { source: raw.source, claims: raw.claims, doc })
}

pub fn emit(env: &Envelope) -> String {
    let raw = RawEnvelope {
        version: VERSION.to_string(),
        kind: env.doc.kind().to_string(),
        source: env.source.clone(),
        claims: env.claims.clone(),
        payload: env.doc.payload(),
    };
    let mut out = String::new();
    write_pretty(&to_value(&raw), 0, &mut out);
    out.push('\n');
    out
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(xs) => xs.iter().any(has_object),
        _ => false,
    }
}

/// Objects one key per line; arrays without objects inside on one line.
fn write_pretty(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| " ".repeat(n);
    match v {
        Value::Object(m) if !m.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in m.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_pretty(val, indent + 2, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        Value::Array(xs) if has_object(v) => {
            out.push_str("[\n");
            for (k, x) in xs.iter().enumerate() {
                out.push_str(&pad(indent + 2));
                write_pretty(x, indent + 2, out);
                out.push_str(if k + 1 < xs.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use swb_core::fixtures;

    #[test]
    fn torus_compact_form() {
        assert_eq!(compact(&Document::Tcd(Tcd::tor())), r#"{"n":2,"arcs":[[1,3],[2,4]],"twists":[0,0]}"#);
    }

    #[test]
    fn round_trip_of_each_kind() {
        let docs = [
            Document::Tcd(Tcd::mob()),
            Document::Frame(fixtures::frame_f2()),
            Document::Swb(fixtures::theta1()),
            Document::Morphism(Morphism::from_datum(&fixtures::theta3())),
        ];
        for d in docs {
            let text = emit(&Envelope::new(d));
            assert_eq!(emit(&parse(&text).unwrap()), text);
        }
    }

    #[test]
    fn pointers_name_the_bad_field() {
        let bad = r#"{"version":"1","kind":"tcd","payload":{"n":1,"arcs":[[1,2]],"twists":[2]}}"#;
        match parse(bad) {
            Err(CliError::Schema { path, .. }) => assert_eq!(path, "/payload/twists/0"),
            other => panic!("{other:?}"),
        }
        let extra = r#"{"version":"1","kind":"tcd","payload":{"n":0,"arcs":[],"twists":[],"x":1}}"#;
        assert!(matches!(parse(extra), Err(CliError::Schema { .. })));
    }
}
