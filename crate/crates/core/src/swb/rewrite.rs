//! Moving an inserted block through the outer diagram.
//!
//! Each rewrite takes a reduced datum whose diagram is `outer #_d inner`,
//! runs a fixed sequence of handle slides that carries the block to a new
//! height and reduces the result. The output is handle-slide equivalent to
//! the input; the slide sequences are returned as witnesses.

use crate::chord::{boundary_slide_seq, evacuation_seq, Slide, Tcd};
use crate::error::{Result, SwbError};

use super::datum::SwbDatum;
use super::handle::apply_handle_slides;
use super::isotopy::reduce_unchecked;
use super::juxt::{insertion_decompose, InsertionSplit};

/// The hypotheses shared by the three rewrites, with the quantities they
/// are phrased in.
#[derive(Debug, Clone)]
pub struct RewriteSetup {
    pub split: InsertionSplit,
    /// Partner of site `d + 1` in the outer diagram.
    pub c: usize,
    /// Site of the outer band just above the block, `d + 2N₁ + 1`.
    pub top_site: usize,
    /// The other end of that band in the full diagram.
    pub far_site: usize,
    /// Whether that band is twisted.
    pub twisted: bool,
    /// Southern strands of the block.
    pub n: usize,
    /// Northern strands of the block leaving above the band at `top_site`.
    pub m1: usize,
    /// Northern strands of the block on the band at `top_site` whose
    /// continuation past the far end runs below it.
    pub m2: usize,
    /// The same, continuing above the far end.
    pub m3: usize,
}

fn violated(msg: impl Into<String>) -> SwbError {
    SwbError::SetupViolated(msg.into())
}

/// Checks the common hypotheses and measures the block's strands.
pub fn rewrite_setup(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<RewriteSetup> {
    if th.has_internal_components() {
        return Err(violated("datum has internal components"));
    }
    if !th.turnbacks().is_empty() {
        return Err(violated("datum has turn-backs"));
    }
    let split = insertion_decompose(th, d, inner)
        .map_err(|_| violated(format!("diagram is not an insertion at height {d} of the block")))?;
    let outer = split.outer.tcd();
    if d >= outer.sites() {
        return Err(violated(format!("height {d} is not below the {} outer sites", outer.sites())));
    }
    let f = th.frame();
    let w = inner.sites();
    let c = outer.partner(d + 1);
    let top_site = d + w + 1;
    let far_site = if c <= d { c } else { c + w };
    let twisted = outer.twisted_at(d + 1);

    let inner_datum = &split.inner;
    let (n, m) = (inner_datum.south(), inner_datum.north());
    let north = &split.embedding[inner_datum.vertex_count() - m..];
    let on_band: Vec<usize> = north.iter().copied().filter(|&v| f.level_of(v) == top_site).collect();
    let far_start = f.level_start(far_site);
    let (mut m2, mut m3) = (0, 0);
    for &v in &on_band {
        let across = f.iota(v).expect("internal vertex");
        if th.mate(across) < far_start {
            m2 += 1;
        } else {
            m3 += 1;
        }
    }
    Ok(RewriteSetup { split, c, top_site, far_site, twisted, n, m1: m - on_band.len(), m2, m3 })
}

/// The slides carrying the block over the untwisted or twisted band above
/// it: the upward evacuation of the block's sites.
pub fn evacuation_moves(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<Vec<Slide>> {
    if inner.sites() == 0 {
        return Ok(Vec::new());
    }
    evacuation_seq(th.frame().tcd(), 1, d + 1, d + inner.sites())
}

fn run(th: &SwbDatum, moves: &[Slide]) -> SwbDatum {
    reduce_unchecked(&apply_handle_slides(th, moves))
}

/// Carries the block across the untwisted band above it, to height `c`.
pub fn rewrite_lemma1(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<SwbDatum> {
    let s = rewrite_setup(th, d, inner)?;
    if s.twisted {
        return Err(violated(format!("band through site {} is twisted", d + 1)));
    }
    Ok(run(th, &evacuation_moves(th, d, inner)?))
}

/// Carries the block across the twisted band above it, to height `c - 1`,
/// mirroring it on the way.
pub fn rewrite_lemma2(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<SwbDatum> {
    let s = rewrite_setup(th, d, inner)?;
    if !s.twisted {
        return Err(violated(format!("band through site {} is untwisted", d + 1)));
    }
    Ok(run(th, &evacuation_moves(th, d, inner)?))
}

/// Moves the block up by one site, sliding the end of the band above it
/// down the block's boundary. Needs every block strand on that band to be
/// absent.
pub fn rewrite_lemma3(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<SwbDatum> {
    let s = rewrite_setup(th, d, inner)?;
    if s.m2 + s.m3 > 0 {
        return Err(violated(format!("{} block strands end on the band at site {}", s.m2 + s.m3, s.top_site)));
    }
    let moves = boundary_slide_seq(th.frame().tcd(), -1, d, inner)?;
    Ok(run(th, &moves))
}
