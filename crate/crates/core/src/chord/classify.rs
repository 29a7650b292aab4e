//! Intersection matrices, surface types and reduction to caravan form.

use std::fmt;

use crate::error::{Result, SwbError};

use super::slide::{apply_slides, boundary_slide_seq, chord_slide_strict, Slide};
use super::tcd::Tcd;

/// Symmetric 0/1 matrix: diagonal holds twists, off-diagonal entries mark
/// crossing arcs. Arcs are ordered by their lower end.
pub fn intersection_matrix(t: &Tcd) -> Vec<Vec<u8>> {
    let arcs = t.arcs();
    let n = arcs.len();
    let mut m = vec![vec![0u8; n]; n];
    for i in 0..n {
        m[i][i] = u8::from(arcs[i].twisted);
        for j in 0..n {
            if i != j && arcs[i].crosses(&arcs[j]) {
                m[i][j] = 1;
            }
        }
    }
    m
}

/// Rank over GF(2) by Gaussian elimination on packed rows.
pub fn gf2_rank(m: &[Vec<u8>]) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let words = cols.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = m
        .iter()
        .map(|r| {
            let mut w = vec![0u64; words];
            for (j, &x) in r.iter().enumerate() {
                if x & 1 == 1 {
                    w[j / 64] |= 1 << (j % 64);
                }
            }
            w
        })
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & b != 0 {
                for k in 0..words {
                    row[k] ^= pivot[k];
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn gf2_nullity(m: &[Vec<u8>]) -> usize {
    m.len() - gf2_rank(m)
}

/// Topological type: `b` boundary circles beyond the first, genus `g`,
/// and `t ∈ {0, 1, 2}` cross-caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceType {
    pub b: usize,
    pub g: usize,
    pub t: usize,
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(b={}, g={}, t={})", self.b, self.g, self.t)
    }
}

impl SurfaceType {
    pub fn rank(&self) -> usize {
        self.b + 2 * self.g + self.t
    }
}

pub fn surface_type(t: &Tcd) -> SurfaceType {
    let n = t.rank();
    let b = gf2_nullity(&intersection_matrix(t));
    if t.is_orientable() {
        SurfaceType { b, g: (n - b) / 2, t: 0 }
    } else {
        let tt = if (n - b) % 2 == 1 { 1 } else { 2 };
        SurfaceType { b, g: (n - b - tt) / 2, t: tt }
    }
}

/// Whether the surface has a single boundary circle.
pub fn in_tc_star(t: &Tcd) -> bool {
    gf2_nullity(&intersection_matrix(t)) == 0
}

/// The normal form: `b` annuli at the bottom, then `g` tori, then `t`
/// cross-caps on top.
pub fn caravan(ty: SurfaceType) -> Tcd {
    let mut cur = Tcd::empty();
    for _ in 0..ty.b {
        cur = Tcd::juxtapose(&Tcd::ann(), &cur);
    }
    for _ in 0..ty.g {
        cur = Tcd::juxtapose(&Tcd::tor(), &cur);
    }
    for _ in 0..ty.t {
        cur = Tcd::juxtapose(&Tcd::mob(), &cur);
    }
    cur
}

/// Builds up a move list while keeping the current diagram in step.
struct Tracer {
    cur: Tcd,
    moves: Vec<Slide>,
}

impl Tracer {
    fn slide(&mut self, i: usize, e: i8) -> Result<crate::chord::tcd::Perm> {
        let (next, sigma) = chord_slide_strict(&self.cur, i, e)?;
        self.cur = next;
        self.moves.push(Slide::new(i, e));
        Ok(sigma)
    }

    fn run(&mut self, seq: &[Slide]) -> Result<()> {
        let (next, _) = apply_slides(&self.cur, seq)?;
        self.cur = next;
        self.moves.extend_from_slice(seq);
        Ok(())
    }

    /// Moves the block at `lo..lo+len` up until it ends at `top`.
    fn block_to_top(&mut self, mut lo: usize, len: usize, inner: &Tcd, top: usize) -> Result<()> {
        while lo + len - 1 < top {
            let seq = boundary_slide_seq(&self.cur, -1, lo - 1, inner)?;
            self.run(&seq)?;
            lo += 1;
        }
        Ok(())
    }

    /// Moves the block at `lo..lo+len` down until it starts at `bottom`.
    fn block_to_bottom(&mut self, mut lo: usize, inner: &Tcd, bottom: usize) -> Result<()> {
        while lo > bottom {
            let seq = boundary_slide_seq(&self.cur, 1, lo - 1, inner)?;
            self.run(&seq)?;
            lo -= 1;
        }
        Ok(())
    }
}

/// The rewrite of three stacked cross-caps into a torus under one
/// cross-cap, as moves on the block starting above `base`.
fn three_crosscaps_to_torus(tr: &mut Tracer, base: usize) -> Result<()> {
    for (i, e) in [(2, 1), (5, -1), (2, 1), (4, -1)] {
        tr.slide(base + i, e)?;
    }
    let seq = boundary_slide_seq(&tr.cur, 1, base + 1, &Tcd::tor())?;
    tr.run(&seq)
}

/// Reduces a diagram to its caravan by chord slides.
///
/// Returns the surface type and the slide trace; replaying the trace on
/// `t` lands exactly on `caravan(type)`.
pub fn caravan_normalize(t: &Tcd) -> Result<(SurfaceType, Vec<Slide>)> {
    let ty = surface_type(t);
    let mut tr = Tracer { cur: t.clone(), moves: Vec::new() };
    // the unprocessed sites form the window lo..=hi
    let (mut lo, mut hi) = (1usize, t.sites());

    // cross-caps: squeeze a twisted arc shut and park it at the top; the
    // topmost of the narrowest goes first, so parked ones cost nothing
    let mut crosscaps = 0;
    loop {
        let pick = tr
            .cur
            .arcs()
            .into_iter()
            .filter(|a| a.twisted && a.lo >= lo && a.hi <= hi)
            .min_by_key(|a| (a.width(), std::cmp::Reverse(a.hi)));
        let Some(a) = pick else { break };
        let (mut alo, ahi) = (a.lo, a.hi);
        while ahi - alo > 1 {
            // the site under the top end passes through the band and
            // reappears below the bottom end
            tr.slide(ahi - 1, 1)?;
            alo += 1;
            check(tr.cur.partner(alo) == ahi && tr.cur.twisted_at(alo))?;
        }
        tr.block_to_top(alo, 2, &Tcd::mob(), hi)?;
        crosscaps += 1;
        hi -= 2;
    }

    // orientable part: tori to the top of the window, annuli to the bottom
    while lo < hi {
        let arcs: Vec<_> = tr.cur.arcs().into_iter().filter(|a| a.lo >= lo && a.hi <= hi).collect();
        let crossing = arcs.iter().filter(|p| arcs.iter().any(|q| p.crosses(q))).min_by_key(|p| (p.hi, p.lo)).copied();
        match crossing {
            Some(p) => {
                let q = arcs.iter().filter(|q| p.crosses(q)).min_by_key(|q| q.lo).copied().unwrap();
                let (first, second) = if p.lo < q.lo { (p, q) } else { (q, p) };
                let (a, b) = (first.lo, second.lo);
                let mut ends = [a, b, first.hi, second.hi];
                tor_squeeze(&mut tr, &mut ends)?;
                let a = ends[0];
                check(ends == [a, a + 1, a + 2, a + 3])?;
                tr.block_to_top(a, 4, &Tcd::tor(), hi)?;
                hi -= 4;
            }
            None => {
                let a = arcs.iter().find(|a| a.hi == a.lo + 1).copied();
                let a = a.ok_or_else(|| SwbError::InvalidTcd("no innermost arc".into()))?;
                tr.block_to_bottom(a.lo, &Tcd::ann(), lo)?;
                lo += 2;
            }
        }
    }

    // three cross-caps over the tori become one cross-cap over a torus
    while crosscaps >= 3 {
        three_crosscaps_to_torus(&mut tr, t.sites() - 2 * crosscaps)?;
        crosscaps -= 2;
    }

    check(tr.cur == caravan(ty))?;
    Ok((ty, tr.moves))
}

fn check(ok: bool) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(SwbError::InvalidTcd("caravan reduction lost track of its arcs".into()))
    }
}

/// Clears every foreign site out of a crossing pair `{a, c}`, `{b, d}`
/// with `a < b < c < d`, leaving them as four consecutive sites.
fn tor_squeeze(tr: &mut Tracer, ends: &mut [usize; 4]) -> Result<()> {
    let follow = |ends: &mut [usize; 4], sigma: &crate::chord::tcd::Perm| {
        for e in ends.iter_mut() {
            *e = sigma.apply(*e);
        }
    };
    // between a and b: up over b, out above d
    while ends[1] > ends[0] + 1 {
        let s = tr.slide(ends[1] - 1, 1)?;
        follow(ends, &s);
    }
    // between c and d: down over c, out below a
    while ends[3] > ends[2] + 1 {
        let s = tr.slide(ends[2] + 1, -1)?;
        follow(ends, &s);
    }
    // between b and c: down over b into the c..d gap, then out below a
    while ends[2] > ends[1] + 1 {
        let s = tr.slide(ends[1] + 1, -1)?;
        follow(ends, &s);
        let s = tr.slide(ends[2] + 1, -1)?;
        follow(ends, &s);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::slide::boundary_components;
    use crate::chord::tcd::enumerate;

    #[test]
    fn elementary_matrices() {
        assert_eq!(intersection_matrix(&Tcd::mob()), vec![vec![1]]);
        assert_eq!(intersection_matrix(&Tcd::ann()), vec![vec![0]]);
        assert_eq!(intersection_matrix(&Tcd::tor()), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn nullities_of_sample_matrices() {
        assert_eq!(gf2_nullity(&[vec![1, 0, 1], vec![0, 0, 1], vec![1, 1, 0]]), 0);
        assert_eq!(gf2_nullity(&[vec![1, 0, 0], vec![0, 1, 1], vec![0, 1, 1]]), 1);
        assert_eq!(gf2_nullity(&[vec![0, 1, 1], vec![1, 1, 1], vec![1, 1, 1]]), 1);
    }

    #[test]
    fn types_of_elementary_blocks() {
        assert_eq!(surface_type(&Tcd::mob()), SurfaceType { b: 0, g: 0, t: 1 });
        assert_eq!(surface_type(&Tcd::ann()), SurfaceType { b: 1, g: 0, t: 0 });
        assert_eq!(surface_type(&Tcd::tor()), SurfaceType { b: 0, g: 1, t: 0 });
    }

    #[test]
    fn single_boundary_iff_invertible_matrix() {
        for n in 0..=4 {
            for t in enumerate(n, false) {
                assert_eq!(boundary_components(&t) == 1, in_tc_star(&t), "{t:?}");
            }
        }
    }

    #[test]
    fn caravan_reduction_up_to_rank_three() {
        for n in 0..=3 {
            for t in enumerate(n, false) {
                let (ty, moves) = caravan_normalize(&t).unwrap();
                let (end, _) = apply_slides(&t, &moves).unwrap();
                assert_eq!(end, caravan(ty), "{t:?}");
            }
        }
    }
}
