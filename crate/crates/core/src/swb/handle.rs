//! Handle slides: chord slides lifted to data with curves.

use crate::chord::{chord_slide_strict, inverse_slide, is_admissible, Slide};
use crate::error::Result;

use super::datum::SwbDatum;
use super::frame::Frame;

/// Slides the band at site `i` over its neighbour in direction `dir`.
///
/// Every strand through the moving band now also runs along the band it
/// slid over; the new vertices form one nested block next to the moved
/// end.
pub fn handle_slide_strict(th: &SwbDatum, i: usize, dir: i8) -> Result<SwbDatum> {
    let f = th.frame();
    let t = f.tcd();
    let (t2, sigma) = chord_slide_strict(t, i, dir)?;
    let target = (i as isize + dir as isize) as usize;
    let far = t.partner(target);
    let fp = f.level_len(i);

    let top = f.top();
    let mut mult = vec![0; top + 1];
    mult[0] = f.south();
    mult[top] = f.north();
    for l in 1..top {
        let extra = if l == target || l == far { fp } else { 0 };
        mult[sigma.apply(l)] = f.level_len(l) + extra;
    }
    let nf = Frame::from_levels(t2, mult);

    let (si, sfar) = (sigma.apply(i), sigma.apply(far));
    let start = if sfar < si { nf.level_start(sfar) + nf.level_len(sfar) - fp } else { nf.level_start(si) };
    let block = 2 * fp;
    let place = |v: usize| if v < start { v } else { v + block };

    let mut mate = vec![0; nf.total()];
    for (v, &w) in th.mates().iter().enumerate() {
        mate[place(v)] = place(w);
    }
    for j in 0..block {
        mate[start + j] = start + block - 1 - j;
    }
    Ok(SwbDatum::from_mate_unchecked(nf, mate))
}

/// The handle slide, acting as the identity where the chord slide is not
/// admissible.
pub fn handle_slide(th: &SwbDatum, i: usize, dir: i8) -> SwbDatum {
    if is_admissible(th.frame().tcd(), i, dir) {
        handle_slide_strict(th, i, dir).expect("admissible")
    } else {
        th.clone()
    }
}

/// Applies handle slides in order; non-admissible moves are skipped.
pub fn apply_handle_slides(th: &SwbDatum, moves: &[Slide]) -> SwbDatum {
    moves.iter().fold(th.clone(), |acc, m| handle_slide(&acc, m.site, m.dir))
}

/// Applies handle slides in order, failing on a non-admissible one.
pub fn apply_handle_slides_strict(th: &SwbDatum, moves: &[Slide]) -> Result<SwbDatum> {
    moves.iter().try_fold(th.clone(), |acc, m| handle_slide_strict(&acc, m.site, m.dir))
}

/// The slide on the result of `(i, dir)` that undoes it up to isotopy.
pub fn inverse_handle_slide(th: &SwbDatum, i: usize, dir: i8) -> Result<Slide> {
    inverse_slide(th.frame().tcd(), i, dir)
}

/// Every admissible move on the datum's diagram.
pub fn admissible_moves(th: &SwbDatum) -> Vec<Slide> {
    let t = th.frame().tcd();
    let mut out = Vec::new();
    for i in 1..=t.sites() {
        for dir in [1i8, -1] {
            if is_admissible(t, i, dir) {
                out.push(Slide::new(i, dir));
            }
        }
    }
    out
}
