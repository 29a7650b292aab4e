//! Invariants a fixture records about itself, and the check that they hold.

use serde::{Deserialize, Serialize};
use swb_core::chord::{surface_type, Tcd};

use crate::doc::Document;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceClaim {
    pub b: usize,
    pub g: usize,
    pub t: usize,
}

/// Every field is optional; absent fields make no claim.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Claims {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface: Option<SurfaceClaim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub internal_components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twisted_components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separating_components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complement_count: Option<usize>,
    /// Name of another fixture equivalent to this one under handle slides.
    /// Checked by whoever can load that fixture.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalent_to: Option<String>,
}

fn underlying(doc: &Document) -> Option<&Tcd> {
    match doc {
        Document::Tcd(t) => Some(t),
        Document::Frame(f) => Some(f.tcd()),
        Document::Swb(th) => Some(th.frame().tcd()),
        Document::Morphism(_) => None,
    }
}

/// The claims `doc` actually satisfies, all fields filled where they apply.
pub fn observed(doc: &Document) -> Claims {
    let mut c = Claims::default();
    if let Some(t) = underlying(doc) {
        let ty = surface_type(t);
        c.surface = Some(SurfaceClaim { b: ty.b, g: ty.g, t: ty.t });
        c.rank = Some(t.rank());
        c.orientable = Some(t.is_orientable());
    }
    if let Document::Swb(th) = doc {
        let infos = th.component_infos();
        c.components = Some(infos.len());
        c.internal_components = Some(infos.iter().filter(|i| i.is_internal()).count());
        c.twisted_components = Some(infos.iter().filter(|i| i.twist).count());
        c.separating_components = Some(infos.iter().filter(|i| i.separating).count());
        c.complement_count = Some(th.complement_count());
    }
    c
}

/// Mismatches between `claims` and `doc`, one message per field.
/// `equivalent_to` is not checked here.
pub fn check(claims: &Claims, doc: &Document) -> Vec<String> {
    let seen = observed(doc);
    let mut bad = Vec::new();
    macro_rules! field {
        ($name:ident) => {
            if let Some(want) = &claims.$name {
                match &seen.$name {
                    Some(got) if got == want => {}
                    Some(got) => bad.push(format!("{}: claimed {:?}, found {:?}", stringify!($name), want, got)),
                    None => bad.push(format!("{}: does not apply to a {} document", stringify!($name), doc.kind())),
                }
            }
        };
    }
    field!(surface);
    field!(rank);
    field!(orientable);
    field!(components);
    field!(internal_components);
    field!(twisted_components);
    field!(separating_components);
    field!(complement_count);
    bad
}
