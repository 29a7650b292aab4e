//! Boundary-parallel strands, the shift map and the generating families.

use crate::chord::Tcd;
use crate::error::{Result, SwbError};

use super::datum::SwbDatum;
use super::frame::Frame;
use super::juxt::juxtapose;

/// Adds a strand along the left edge, from the first southern vertex to
/// the first northern one.
pub fn insert_left(th: &SwbDatum) -> SwbDatum {
    let f = th.frame();
    let top = f.top();
    let mut mult = f.levels().to_vec();
    mult[0] += 1;
    mult[top] += 1;
    let t = th.vertex_count();
    let mut mate = Vec::with_capacity(t + 2);
    mate.push(t + 1);
    mate.extend(th.mates().iter().map(|&w| w + 1));
    mate.push(0);
    SwbDatum::from_mate_unchecked(f.with_levels(mult), mate)
}

/// Adds a strand along the right edge. It runs around every band once on
/// each side, so every band gains two vertices per end.
pub fn insert_right(th: &SwbDatum) -> SwbDatum {
    let f = th.frame();
    let top = f.top();
    let mut mult: Vec<usize> = f.levels().iter().map(|&x| x + 2).collect();
    mult[0] -= 1;
    mult[top] -= 1;
    let nf = f.with_levels(mult);
    // old vertices keep their order; each level gains a vertex at its
    // start (except the south edge) and at its end (except the north edge)
    let mut image = vec![0; th.vertex_count()];
    for l in 0..=top {
        let shift = usize::from(l > 0);
        for k in 0..f.level_len(l) {
            image[f.level_start(l) + k] = nf.level_start(l) + k + shift;
        }
    }
    let mut mate = vec![usize::MAX; nf.total()];
    for (v, &w) in th.mates().iter().enumerate() {
        mate[image[v]] = image[w];
    }
    for l in 0..top {
        let (a, b) = (nf.level_start(l + 1) - 1, nf.level_start(l + 1));
        mate[a] = b;
        mate[b] = a;
    }
    SwbDatum::from_mate_unchecked(nf, mate)
}

pub fn insert_left_n(th: &SwbDatum, n: usize) -> SwbDatum {
    (0..n).fold(th.clone(), |acc, _| insert_left(&acc))
}

pub fn insert_right_n(th: &SwbDatum, n: usize) -> SwbDatum {
    (0..n).fold(th.clone(), |acc, _| insert_right(&acc))
}

/// The empty square.
pub fn zero() -> SwbDatum {
    SwbDatum::empty_on(Frame::square(0, 0)).expect("no vertices")
}

/// The rank-zero datum with two southern vertices joined.
pub fn cap() -> SwbDatum {
    SwbDatum::from_mate_unchecked(Frame::square(2, 0), vec![1, 0])
}

/// The rank-zero datum with two northern vertices joined.
pub fn cup() -> SwbDatum {
    cap().star()
}

/// Bends the rightmost northern strand down to the south edge:
/// type `(n, m)` becomes `(n + 1, m - 1)`.
pub fn shift(th: &SwbDatum) -> Result<SwbDatum> {
    let m = th.north();
    if m == 0 {
        return Err(SwbError::EmptyNorth);
    }
    let (out, loops) = juxtapose(&insert_right_n(&cap(), m - 1), &insert_left(th))?;
    debug_assert_eq!(loops, 0);
    Ok(out)
}

/// `k` applications of [`shift`].
pub fn shift_n(th: &SwbDatum, k: usize) -> Result<SwbDatum> {
    (0..k).try_fold(th.clone(), |acc, _| shift(&acc))
}

pub fn identity(n: usize) -> SwbDatum {
    insert_left_n(&zero(), n)
}

/// `n` nested caps, of type `(2n, 0)`.
pub fn cap_n(n: usize) -> SwbDatum {
    let mut cur = identity(n);
    for _ in 0..n {
        cur = shift(&cur).expect("north edge is not empty yet");
    }
    cur
}

/// `n` nested cups, of type `(0, 2n)`.
pub fn cup_n(n: usize) -> SwbDatum {
    cap_n(n).star()
}

/// Datum on a frame whose first half of vertices is nested onto itself
/// and likewise the second half; this is the shape shared by the two
/// generator families.
fn two_nested_halves(frame: Frame) -> SwbDatum {
    let total = frame.total();
    let half = total / 2;
    let mut mate = vec![0; total];
    for k in 0..half {
        mate[k] = half - 1 - k;
        mate[half + k] = total - 1 - k;
    }
    SwbDatum::from_mate_unchecked(frame, mate)
}

/// The genus-one generator of type `(l + m, l + m)`, with `m` strands on
/// the band at sites 1 and 3 and `l` on the band at 2 and 4.
pub fn torus_gen(l: usize, m: usize) -> SwbDatum {
    let frame = Frame::new(Tcd::tor(), l + m, l + m, &[m, l]).expect("torus is in TC*");
    two_nested_halves(frame)
}

/// The cross-cap generator of type `(n, n)`.
pub fn mobius_gen(n: usize) -> SwbDatum {
    let frame = Frame::new(Tcd::mob(), n, n, &[n]).expect("cross-cap is in TC*");
    two_nested_halves(frame)
}
