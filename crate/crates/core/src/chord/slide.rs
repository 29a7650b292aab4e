//! Chord slides, evacuations and boundary slides.

use crate::error::{Result, SwbError};
use crate::graph::{OrderedGraph, VertexId};

use super::tcd::{Perm, Tcd};

/// One elementary move: slide site `site` over its neighbour in
/// direction `dir` (`+1` up, `-1` down).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slide {
    pub site: usize,
    pub dir: i8,
}

impl Slide {
    pub fn new(site: usize, dir: i8) -> Self {
        Slide { site, dir }
    }
}

fn check_dir(dir: i8) -> Result<()> {
    if dir == 1 || dir == -1 {
        Ok(())
    } else {
        Err(SwbError::InvalidTcd(format!("direction must be +1 or -1, got {dir}")))
    }
}

/// True when `i + dir` is a site and `{i, i + dir}` is not an arc.
pub fn is_admissible(t: &Tcd, i: usize, dir: i8) -> bool {
    if !(dir == 1 || dir == -1) || i == 0 || i > t.sites() {
        return false;
    }
    let j = i as isize + dir as isize;
    j >= 1 && j as usize <= t.sites() && t.partner(i) != j as usize
}

/// The permutation of a slide, built from its defining property: order
/// preserving away from `i`, and `σ(i) = σ(i') ± 1` next to the far end
/// `i'` of the arc slid over.
fn slide_perm(t: &Tcd, i: usize, dir: i8) -> Perm {
    let neighbour = (i as isize + dir as isize) as usize;
    let far = t.partner(neighbour);
    let above = (dir == 1) != t.twisted_at(neighbour);
    let mut list: Vec<usize> = (1..=t.sites()).filter(|&x| x != i).collect();
    let at = list.iter().position(|&x| x == far).unwrap();
    list.insert(if above { at + 1 } else { at }, i);
    let mut images = vec![0; t.sites()];
    for (pos, &x) in list.iter().enumerate() {
        images[x - 1] = pos + 1;
    }
    Perm::from_images(images).expect("reinsertion yields a permutation")
}

/// Slides site `i` in direction `dir`; fails on non-admissible input.
///
/// Returns the new diagram and the permutation of sites.
pub fn chord_slide_strict(t: &Tcd, i: usize, dir: i8) -> Result<(Tcd, Perm)> {
    check_dir(dir)?;
    if i == 0 || i > t.sites() {
        return Err(SwbError::IndexOutOfRange { index: i, max: t.sites() });
    }
    if !is_admissible(t, i, dir) {
        return Err(SwbError::NotAdmissible { site: i, dir });
    }
    let sigma = slide_perm(t, i, dir);
    let neighbour = (i as isize + dir as isize) as usize;
    let flip = t.twisted_at(neighbour);
    let mut moved = t.permute(&sigma)?;
    if flip {
        let si = sigma.apply(i);
        let sj = sigma.apply(t.partner(i));
        let mut arcs: Vec<(usize, usize, bool)> = moved.arcs().iter().map(|a| (a.lo, a.hi, a.twisted)).collect();
        for a in arcs.iter_mut() {
            if (a.0 == si.min(sj)) && (a.1 == si.max(sj)) {
                a.2 = !a.2;
            }
        }
        moved = Tcd::new(t.rank(), &arcs)?;
    }
    Ok((moved, sigma))
}

/// Lenient slide: the identity when the move is not admissible.
pub fn chord_slide(t: &Tcd, i: usize, dir: i8) -> (Tcd, Perm) {
    chord_slide_strict(t, i, dir).unwrap_or_else(|_| (t.clone(), Perm::identity(t.sites())))
}

/// The move undoing `(i, dir)` on `t`, expressed on the slid diagram.
pub fn inverse_slide(t: &Tcd, i: usize, dir: i8) -> Result<Slide> {
    let (_, sigma) = chord_slide_strict(t, i, dir)?;
    let neighbour = (i as isize + dir as isize) as usize;
    let back = if t.twisted_at(neighbour) { dir } else { -dir };
    Ok(Slide::new(sigma.apply(i), back))
}

/// Applies moves in order, failing on the first non-admissible one.
/// Returns the final diagram and the accumulated permutation.
pub fn apply_slides(t: &Tcd, moves: &[Slide]) -> Result<(Tcd, Perm)> {
    let mut cur = t.clone();
    let mut perm = Perm::identity(t.sites());
    for m in moves {
        let (next, s) = chord_slide_strict(&cur, m.site, m.dir)?;
        perm = perm.then(&s);
        cur = next;
    }
    Ok((cur, perm))
}

/// Vertex id of `(i, ε)` in boundary graphs; orders by `2i + ε/2`.
pub fn boundary_vertex(i: usize, side: i8) -> VertexId {
    2 * i as u64 + u64::from(side == 1)
}

pub fn decode_boundary_vertex(v: VertexId) -> (usize, i8) {
    ((v / 2) as usize, if v % 2 == 1 { 1 } else { -1 })
}

/// The boundary graph. With `closed`, the two end caps `(0,+)` and
/// `(2N+1,-)` are added.
pub fn boundary_graph(t: &Tcd, closed: bool) -> OrderedGraph {
    let m = t.sites();
    let mut verts = Vec::new();
    let mut edges = Vec::new();
    for i in 1..=m {
        verts.push(boundary_vertex(i, -1));
        verts.push(boundary_vertex(i, 1));
    }
    for i in 1..m {
        edges.push((boundary_vertex(i, 1), boundary_vertex(i + 1, -1)));
    }
    for a in t.arcs() {
        if a.twisted {
            edges.push((boundary_vertex(a.lo, 1), boundary_vertex(a.hi, 1)));
            edges.push((boundary_vertex(a.lo, -1), boundary_vertex(a.hi, -1)));
        } else {
            edges.push((boundary_vertex(a.lo, 1), boundary_vertex(a.hi, -1)));
            edges.push((boundary_vertex(a.lo, -1), boundary_vertex(a.hi, 1)));
        }
    }
    if closed {
        verts.push(boundary_vertex(0, 1));
        verts.push(boundary_vertex(m + 1, -1));
        edges.push((boundary_vertex(0, 1), boundary_vertex(1, -1)));
        edges.push((boundary_vertex(m, 1), boundary_vertex(m + 1, -1)));
    }
    OrderedGraph::new(verts, edges).expect("boundary graph is simple")
}

/// Number of boundary components of the surface described by `t`.
pub fn boundary_components(t: &Tcd) -> usize {
    if t.rank() == 0 {
        return 1;
    }
    boundary_graph(t, true).component_count()
}

/// Reads off the line in the boundary graph from `(1,-)` to `(2N,+)`.
///
/// Returns the vertices `(i_j, ε_j)` reached by arc edges, excluding the
/// final `(2N, +)`. Fails when the two ends lie on different components.
pub fn boundary_line(t: &Tcd) -> Result<Vec<(usize, i8)>> {
    let m = t.sites();
    if m == 0 {
        return Ok(Vec::new());
    }
    let arc_step = |(i, e): (usize, i8)| -> (usize, i8) {
        let j = t.partner(i);
        if t.twisted_at(i) {
            (j, e)
        } else {
            (j, -e)
        }
    };
    let mut out = Vec::new();
    let mut cur = (1usize, -1i8);
    for _ in 0..=2 * m {
        let next = arc_step(cur);
        if next == (m, 1) {
            return Ok(out);
        }
        out.push(next);
        let (i, e) = next;
        let line = i as isize + e as isize;
        if line < 1 || line as usize > m {
            return Err(SwbError::NotInTcStar);
        }
        cur = (line as usize, -e);
    }
    Err(SwbError::NotInTcStar)
}

fn delta(e: i8) -> usize {
    usize::from(e == 1)
}

/// The moves of a boundary slide of one site past an inserted block.
///
/// `t` must equal `outer #_d inner`. Upward (`dir = +1`) slides site `d`
/// over the block, giving `outer #_{d-1} inner`; downward (`dir = -1`)
/// slides site `d + 2N₁ + 1` under it, giving `outer #_{d+1} inner`.
pub fn boundary_slide_seq(t: &Tcd, dir: i8, d: usize, inner: &Tcd) -> Result<Vec<Slide>> {
    check_dir(dir)?;
    let outer = t.extract_outer(d, inner)?;
    let line = boundary_line(inner)?;
    let w = inner.sites();
    let mut moves = Vec::new();
    if dir == 1 {
        if d == 0 || d > outer.sites() {
            return Err(SwbError::IndexOutOfRange { index: d, max: outer.sites() });
        }
        moves.push(Slide::new(d, 1));
        for &(i, e) in &line {
            moves.push(Slide::new(d - 1 + i + delta(e), e));
        }
    } else {
        if d >= outer.sites() {
            return Err(SwbError::IndexOutOfRange { index: d, max: outer.sites().saturating_sub(1) });
        }
        moves.push(Slide::new(d + w + 1, -1));
        for &(i, e) in line.iter().rev() {
            moves.push(Slide::new(d + i + delta(e), -e));
        }
    }
    Ok(moves)
}

/// Evacuation: slides the sites `d1..=d2` one at a time over the site
/// just beyond them, top first for `dir = +1`, bottom first for `-1`,
/// tracking each site through the earlier moves.
pub fn evacuation_seq(t: &Tcd, dir: i8, d1: usize, d2: usize) -> Result<Vec<Slide>> {
    check_dir(dir)?;
    let m = t.sites();
    for x in [d1, d2] {
        if x == 0 || x > m {
            return Err(SwbError::IndexOutOfRange { index: x, max: m });
        }
    }
    if d1 > d2 {
        return Err(SwbError::IndexOutOfRange { index: d1, max: d2 });
    }
    let order: Vec<usize> = if dir == 1 { (d1..=d2).rev().collect() } else { (d1..=d2).collect() };
    let mut cur = t.clone();
    let mut tau = Perm::identity(m);
    let mut moves = Vec::new();
    for x in order {
        let site = tau.apply(x);
        let (next, s) = chord_slide(&cur, site, dir);
        moves.push(Slide::new(site, dir));
        tau = tau.then(&s);
        cur = next;
    }
    Ok(moves)
}

/// Like [`apply_slides`] but non-admissible moves act as the identity,
/// matching the lenient definition used inside evacuations.
pub fn apply_slides_lenient(t: &Tcd, moves: &[Slide]) -> (Tcd, Perm) {
    let mut cur = t.clone();
    let mut perm = Perm::identity(t.sites());
    for m in moves {
        let (next, s) = chord_slide(&cur, m.site, m.dir);
        perm = perm.then(&s);
        cur = next;
    }
    (cur, perm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::tcd::enumerate;

    /// The four explicit cycles for a slide, written out case by case.
    fn explicit_cycle(t: &Tcd, i: usize, e: i8) -> Perm {
        let n = t.sites();
        let nb = (i as isize + e as isize) as usize;
        let q = t.arc_at(nb);
        let s = t.twisted_at(nb);
        let at_lo = nb == q.lo;
        let desc = |from: usize, to: usize| -> Vec<usize> {
            // from, from-1, ..., to  or ascending when from < to
            if from >= to {
                (to..=from).rev().collect()
            } else {
                (from..=to).collect()
            }
        };
        let cyc = match (e, at_lo, s) {
            (1, true, false) | (-1, true, true) => desc(q.hi, i),
            (1, true, true) | (-1, true, false) => desc(q.hi - 1, i),
            (1, false, false) | (-1, false, true) => desc(q.lo + 1, i),
            _ => desc(q.lo, i),
        };
        Perm::cycle(n, &cyc)
    }

    #[test]
    fn slides_match_explicit_cycles() {
        for n in 1..=3 {
            for t in enumerate(n, false) {
                for i in 1..=t.sites() {
                    for e in [1i8, -1] {
                        if !is_admissible(&t, i, e) {
                            continue;
                        }
                        let (_, sigma) = chord_slide_strict(&t, i, e).unwrap();
                        assert_eq!(sigma, explicit_cycle(&t, i, e), "{t:?} site {i} dir {e}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_admissible_moves() {
        let t = Tcd::mob();
        assert!(matches!(chord_slide_strict(&t, 1, 1), Err(SwbError::NotAdmissible { .. })));
        assert_eq!(chord_slide(&t, 1, 1).0, t);
        assert!(chord_slide_strict(&t, 3, 1).is_err());
    }

    #[test]
    fn boundary_component_counts() {
        assert_eq!(boundary_components(&Tcd::mob()), 1);
        assert_eq!(boundary_components(&Tcd::ann()), 2);
        assert_eq!(boundary_components(&Tcd::tor()), 1);
    }

    #[test]
    fn boundary_line_of_elementary_blocks() {
        assert_eq!(boundary_line(&Tcd::tor()).unwrap(), vec![(3, 1), (2, 1), (1, 1)]);
        assert_eq!(boundary_line(&Tcd::mob()).unwrap(), vec![(2, -1)]);
        assert_eq!(boundary_line(&Tcd::ann()).unwrap(), vec![]);
    }

    #[test]
    fn three_crosscaps_become_crosscap_over_torus() {
        let mmm = Tcd::parse("1-2t 3-4t 5-6t").unwrap();
        let first = [Slide::new(2, 1), Slide::new(5, -1), Slide::new(2, 1), Slide::new(4, -1)];
        let (mid, _) = apply_slides(&mmm, &first).unwrap();
        assert_eq!(mid, Tcd::insert(&Tcd::mob(), 1, &Tcd::tor()).unwrap());
        let bs = boundary_slide_seq(&mid, 1, 1, &Tcd::tor()).unwrap();
        let (end, _) = apply_slides(&mid, &bs).unwrap();
        assert_eq!(end, Tcd::juxtapose(&Tcd::mob(), &Tcd::tor()));
    }
}
