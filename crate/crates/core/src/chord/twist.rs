//! A closed slide sequence realising the Dehn twist about the boundary.
//!
//! On a caravan of blocks, the twist about the outer circle is the full
//! rotation of the blocks (each block carried once over all the others)
//! composed with the boundary twists of the blocks themselves. A torus
//! block's own twist is `(1,+)` repeated six times; a cross-cap block's is
//! trivial. Any other diagram is conjugated to its caravan first.

use crate::error::{Result, SwbError};

use super::classify::{caravan, caravan_normalize, in_tc_star};
use super::slide::{apply_slides, boundary_slide_seq, chord_slide_strict, inverse_slide, Slide};
use super::tcd::Tcd;

/// The moves undoing `moves`, which must be admissible from `t`.
pub fn inverse_seq(t: &Tcd, moves: &[Slide]) -> Result<Vec<Slide>> {
    let mut states = Vec::with_capacity(moves.len() + 1);
    let mut cur = t.clone();
    for m in moves {
        let next = chord_slide_strict(&cur, m.site, m.dir)?.0;
        states.push(cur);
        cur = next;
    }
    moves.iter().zip(&states).rev().map(|(m, s)| inverse_slide(s, m.site, m.dir)).collect()
}

fn stack(blocks: &[Tcd]) -> Tcd {
    blocks.iter().fold(Tcd::empty(), |acc, b| Tcd::juxtapose(b, &acc))
}

/// Carries the bottom block of the stack up past every other site.
fn lift_bottom_block(blocks: &[Tcd]) -> Result<Vec<Slide>> {
    let mut t = stack(blocks);
    let inner = &blocks[0];
    let mut moves = Vec::new();
    for d in 0..t.sites() - inner.sites() {
        let seq = boundary_slide_seq(&t, -1, d, inner)?;
        t = apply_slides(&t, &seq)?.0;
        moves.extend(seq);
    }
    Ok(moves)
}

/// Every block once to the top, ending on the original stack.
fn full_rotation(blocks: &[Tcd]) -> Result<Vec<Slide>> {
    let mut cur = blocks.to_vec();
    let mut moves = Vec::new();
    for _ in 0..blocks.len() {
        moves.extend(lift_bottom_block(&cur)?);
        cur.rotate_left(1);
    }
    Ok(moves)
}

/// A slide loop at `t` acting on data as the twist about the boundary
/// circle. Applied to `f††` it gives `f` up to isotopy; its inverse takes
/// `(f†)*` to `(f*)†`.
pub fn boundary_twist_seq(t: &Tcd) -> Result<Vec<Slide>> {
    if !in_tc_star(t) {
        return Err(SwbError::NotInTcStar);
    }
    if t.sites() == 0 {
        return Ok(Vec::new());
    }
    let (ty, to_caravan) = caravan_normalize(t)?;
    let c = caravan(ty);
    let blocks: Vec<Tcd> = (0..ty.g).map(|_| Tcd::tor()).chain((0..ty.t).map(|_| Tcd::mob())).collect();
    debug_assert_eq!(stack(&blocks), c);

    let mut moves = to_caravan.clone();
    moves.extend(inverse_seq(&c, &full_rotation(&blocks)?)?);
    for k in 0..ty.g {
        moves.extend(std::iter::repeat_n(Slide::new(4 * k + 1, 1), 6));
    }
    moves.extend(inverse_seq(t, &to_caravan)?);
    Ok(moves)
}
