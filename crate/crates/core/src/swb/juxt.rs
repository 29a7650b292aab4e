//! Stacking diagrams vertically, and cutting them apart again.

use crate::chord::{in_tc_star, Tcd};
use crate::error::{Result, SwbError};

use super::datum::SwbDatum;
use super::frame::Frame;

/// `top # bottom` together with the number of closed curves formed in the
/// glued layer.
pub fn juxtapose(top: &SwbDatum, bottom: &SwbDatum) -> Result<(SwbDatum, usize)> {
    let frame = Frame::juxtapose(top.frame(), bottom.frame())?;
    let m = bottom.north();
    let t1 = bottom.vertex_count();
    let t2 = top.vertex_count();
    let low = t1 - m;
    // glued vertex `a` (slot a + 1) is bottom index t1 - 1 - a, top index a
    let to_new_top = |v: usize| low + v - m;
    let mut mate = vec![usize::MAX; low + t2 - m];
    let mut glued_seen = vec![false; m];

    // follows a strand leaving the bottom square upwards through slot `a`
    let trace = |mut a: usize, from_bottom: bool, seen: &mut Vec<bool>| -> usize {
        let mut in_top = from_bottom;
        loop {
            seen[a] = true;
            if in_top {
                let y = top.mate(a);
                if y >= m {
                    return to_new_top(y);
                }
                a = y;
            } else {
                let y = bottom.mate(t1 - 1 - a);
                if y < low {
                    return y;
                }
                a = t1 - 1 - y;
            }
            in_top = !in_top;
        }
    };

    for v in 0..low {
        let w = bottom.mate(v);
        mate[v] = if w < low { w } else { trace(t1 - 1 - w, true, &mut glued_seen) };
    }
    for v in m..t2 {
        let w = top.mate(v);
        mate[to_new_top(v)] = if w >= m { to_new_top(w) } else { trace(w, false, &mut glued_seen) };
    }

    // what is left in the glued layer closes up into loops
    let mut loops = 0;
    for start in 0..m {
        if glued_seen[start] {
            continue;
        }
        loops += 1;
        let mut a = start;
        loop {
            glued_seen[a] = true;
            a = top.mate(a);
            glued_seen[a] = true;
            a = t1 - 1 - bottom.mate(t1 - 1 - a);
            if a == start {
                break;
            }
        }
    }
    Ok((SwbDatum::from_mate_unchecked(frame, mate), loops))
}

/// Cuts `th` into `(bottom, top)` along the line above site `2 n1`, with no
/// closed curves created on re-gluing.
pub fn factorize(th: &SwbDatum, n1: usize) -> Result<(SwbDatum, SwbDatum)> {
    let (t2, t1) = th.frame().tcd().split(n1)?;
    if !in_tc_star(&t1) || !in_tc_star(&t2) {
        return Err(SwbError::NotAJuxtaposition(n1));
    }
    let f = th.frame();
    let cut = f.level_start(2 * n1 + 1);
    let total = th.vertex_count();
    let crossing: Vec<usize> = (0..cut).filter(|&v| th.mate(v) >= cut).collect();
    let m = crossing.len();

    let mut lv1 = f.levels()[..=2 * n1].to_vec();
    lv1.push(m);
    let f1 = Frame::from_levels(t1, lv1);
    let mut mate1 = vec![0; cut + m];
    for v in 0..cut {
        mate1[v] = th.mate(v);
    }
    for (a, &u) in crossing.iter().enumerate() {
        // slot a + 1 of the new north edge
        let nv = cut + m - 1 - a;
        mate1[u] = nv;
        mate1[nv] = u;
    }

    let mut lv2 = vec![m];
    lv2.extend_from_slice(&f.levels()[2 * n1 + 1..]);
    let f2 = Frame::from_levels(t2, lv2);
    let shift = |v: usize| v - cut + m;
    let mut mate2 = vec![0; total - cut + m];
    for v in cut..total {
        let w = th.mate(v);
        if w >= cut {
            mate2[shift(v)] = shift(w);
        }
    }
    for (a, &u) in crossing.iter().enumerate() {
        let v = th.mate(u);
        mate2[a] = shift(v);
        mate2[shift(v)] = a;
    }
    Ok((SwbDatum::from_mate_unchecked(f1, mate1), SwbDatum::from_mate_unchecked(f2, mate2)))
}

/// The pieces of a datum whose diagram is an insertion `outer #_d inner`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertionSplit {
    pub d: usize,
    /// The inserted block with its curves; no component is fully external.
    pub inner: SwbDatum,
    /// Outer diagram with the multiplicities it inherits.
    pub outer: Frame,
    /// Order preserving embedding of the inner vertices, by index.
    pub embedding: Vec<usize>,
    /// Parts of the original pairing not covered by the embedding.
    pub rest: Vec<(usize, usize)>,
}

impl InsertionSplit {
    pub fn reassemble(&self) -> Result<SwbDatum> {
        let frame = Frame::insert(&self.outer, self.d, self.inner.frame())?;
        let mut pairs = self.rest.clone();
        for (a, b) in self.inner.index_pairs() {
            pairs.push((self.embedding[a], self.embedding[b]));
        }
        SwbDatum::from_index_pairs(frame, &pairs)
    }
}

/// Splits off the block of `inner` sitting at sites `d+1 ..= d+2N₁`.
///
/// Strands entering the block from below become its southern vertices,
/// strands entering from above its northern ones.
pub fn insertion_decompose(th: &SwbDatum, d: usize, inner: &Tcd) -> Result<InsertionSplit> {
    let f = th.frame();
    let outer_tcd = f.tcd().extract_outer(d, inner)?;
    let w = inner.sites();
    let lo = f.level_start(d + 1);
    let hi = f.level_start(d + w + 1);
    let in_block = |v: usize| v >= lo && v < hi;
    let below: Vec<usize> = (0..lo).filter(|&v| in_block(th.mate(v))).collect();
    let above: Vec<usize> = (hi..th.vertex_count()).filter(|&v| in_block(th.mate(v))).collect();
    let (n, m) = (below.len(), above.len());

    let mut levels = vec![n];
    levels.extend_from_slice(&f.levels()[d + 1..=d + w]);
    levels.push(m);
    let inner_frame = Frame::from_levels(inner.clone(), levels);

    let mut embedding = below.clone();
    embedding.extend(lo..hi);
    embedding.extend(above.iter().copied());
    let mut back = vec![usize::MAX; th.vertex_count()];
    for (k, &v) in embedding.iter().enumerate() {
        back[v] = k;
    }
    let mut mate = vec![0; embedding.len()];
    for (k, &v) in embedding.iter().enumerate() {
        // outside vertices were chosen for pairing into the block, so
        // every partner has an image
        mate[k] = back[th.mate(v)];
    }
    let inner_datum = SwbDatum::from_mate(inner_frame, mate)?;

    let mut outer_levels = f.levels()[..=d].to_vec();
    outer_levels.extend_from_slice(&f.levels()[d + w + 1..]);
    let outer = Frame::from_levels(outer_tcd, outer_levels);
    let rest = th.index_pairs().into_iter().filter(|&(a, _)| back[a] == usize::MAX).collect();
    Ok(InsertionSplit { d, inner: inner_datum, outer, embedding, rest })
}
