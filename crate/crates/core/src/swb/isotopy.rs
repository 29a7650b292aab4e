//! Pull-throughs and reduction to the turn-back-free representative.

use crate::error::{Result, SwbError};

use super::datum::SwbDatum;

/// Position of a pull-through: the turn-back joining slots `a` and `a + 1`
/// of internal level `level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TurnBack {
    pub level: usize,
    pub slot: usize,
}

/// Removes the turn-back starting at index `u` together with its image
/// across the band, when that image is not itself a part.
fn pull_at(th: &SwbDatum, u: usize) -> Option<SwbDatum> {
    let f = th.frame();
    let v = u + 1;
    if v >= th.vertex_count() || th.mate(u) != v || f.is_external(u) || f.level_of(u) != f.level_of(v) {
        return None;
    }
    let (iu, iv) = (f.iota(u)?, f.iota(v)?);
    if th.mate(iu) == iv {
        return None;
    }
    let (x, y) = (th.mate(iu), th.mate(iv));
    let mut gone = [u, v, iu, iv];
    gone.sort_unstable();
    let level = f.level_of(u);
    let mut mult = f.levels().to_vec();
    mult[level] -= 2;
    mult[f.tcd().partner(level)] -= 2;

    // new index of a surviving vertex: its old index less the removed ones below it
    let shift = |w: usize| w - gone.iter().take_while(|&&g| g < w).count();
    let n = th.vertex_count();
    let mut mate = vec![0; n - 4];
    let mut k = 0;
    for w in 0..n {
        if k < 4 && gone[k] == w {
            k += 1;
            continue;
        }
        let partner = if w == x {
            y
        } else if w == y {
            x
        } else {
            th.mate(w)
        };
        mate[w - k] = shift(partner);
    }
    Some(SwbDatum::from_mate_unchecked(f.with_levels(mult), mate))
}

/// The pull-through at `((level, slot))`; the identity unless that pair is
/// a part whose image across the band is not.
pub fn pull_through(th: &SwbDatum, level: usize, slot: usize) -> Result<SwbDatum> {
    let f = th.frame();
    let sites = f.tcd().sites();
    if level == 0 || level > sites {
        return Err(SwbError::IndexOutOfRange { index: level, max: sites });
    }
    if slot == 0 || slot + 1 > f.level_len(level) {
        return Ok(th.clone());
    }
    let u = f.index_unchecked(level, slot);
    Ok(pull_at(th, u).unwrap_or_else(|| th.clone()))
}

/// Turn-backs that can be pulled through, in `(level, slot)` order.
pub fn pullable(th: &SwbDatum) -> Vec<TurnBack> {
    let f = th.frame();
    let mut out = Vec::new();
    for u in 0..th.vertex_count().saturating_sub(1) {
        if f.is_external(u) || th.mate(u) != u + 1 || f.level_of(u) != f.level_of(u + 1) {
            continue;
        }
        let (iu, iv) = (f.iota(u).unwrap(), f.iota(u + 1).unwrap());
        if th.mate(iu) != iv {
            let fv = f.vertex(u);
            out.push(TurnBack { level: fv.level, slot: fv.slot });
        }
    }
    out
}

/// The unique isotopy-reduced representative, always pulling the least
/// turn-back first.
pub fn isotopy_reduce(th: &SwbDatum) -> Result<SwbDatum> {
    if th.has_internal_components() {
        return Err(SwbError::HasInternalComponents);
    }
    Ok(reduce_unchecked(th))
}

/// Reduction without the up-front component check; callers guarantee no
/// internal components.
pub(crate) fn reduce_unchecked(th: &SwbDatum) -> SwbDatum {
    let mut cur = th.clone();
    while let Some(next) = (0..cur.vertex_count().saturating_sub(1)).find_map(|u| pull_at(&cur, u)) {
        cur = next;
    }
    cur
}

pub fn is_turnback_free(th: &SwbDatum) -> bool {
    th.turnbacks().is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::Tcd;
    use crate::swb::frame::{Frame, FrameVertex};

    fn v(l: usize, s: usize) -> FrameVertex {
        FrameVertex::new(l, s)
    }

    #[test]
    fn pull_through_on_a_torus() {
        let f = Frame::new(Tcd::tor(), 2, 0, &[2, 0]).unwrap();
        // southern strands enter band 1-3 and come back as a turn-back at 3
        let th = SwbDatum::new(f, &[(v(0, 1), v(1, 2)), (v(0, 2), v(1, 1)), (v(3, 1), v(3, 2))]).unwrap();
        assert_eq!(pullable(&th), vec![TurnBack { level: 3, slot: 1 }]);
        let r = pull_through(&th, 3, 1).unwrap();
        assert_eq!(r.frame().levels(), &[2, 0, 0, 0, 0, 0]);
        assert_eq!(r.pairs(), vec![(v(0, 1), v(0, 2))]);
        assert_eq!(isotopy_reduce(&th).unwrap(), r);
    }

    #[test]
    fn internal_loops_are_refused() {
        let f = Frame::new(Tcd::tor(), 0, 0, &[1, 0]).unwrap();
        let th = SwbDatum::new(f, &[(v(1, 1), v(3, 1))]).unwrap();
        assert_eq!(isotopy_reduce(&th), Err(SwbError::HasInternalComponents));
    }
}
