//! Deciding handle-slide equivalence by invariants and bounded search.

use std::collections::HashMap;

use crate::chord::{boundary_twist_seq, inverse_seq, surface_type, Slide, SurfaceType};
use crate::error::{Result, SwbError};

use super::datum::SwbDatum;
use super::frame::FrameVertex;
use super::handle::{admissible_moves, handle_slide_strict};
use super::isotopy::reduce_unchecked;

/// Quantities preserved by handle slides and pull-throughs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Invariants {
    pub surface: SurfaceType,
    pub south: usize,
    pub north: usize,
    pub complement_count: usize,
    /// Per component: endpoints, twist and whether it separates; sorted.
    pub components: Vec<(Vec<FrameVertex>, bool, bool)>,
}

pub fn invariants(th: &SwbDatum) -> Invariants {
    let mut components: Vec<_> =
        th.component_infos().into_iter().map(|c| (c.endpoints, c.twist, c.separating)).collect();
    components.sort();
    Invariants {
        surface: surface_type(th.frame().tcd()),
        south: th.south(),
        north: th.north(),
        complement_count: th.complement_count(),
        components,
    }
}

/// Limits for the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Bound on the total number of moves on the two sides together.
    pub budget: usize,
    /// Bound on the number of distinct data visited.
    pub max_states: usize,
}

impl SearchLimits {
    pub fn new(budget: usize) -> Self {
        SearchLimits { budget, max_states: 400_000 }
    }
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits::new(10)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// Sliding the first datum by `left` and the second by `right`, then
    /// reducing, gives the same datum.
    Equivalent {
        left: Vec<Slide>,
        right: Vec<Slide>,
    },
    Distinct {
        reason: String,
    },
    Undecided {
        explored: usize,
        depth: usize,
    },
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }

    /// Number of moves in the witness, if any.
    pub fn moves_used(&self) -> Option<usize> {
        match self {
            Equivalence::Equivalent { left, right } => Some(left.len() + right.len()),
            _ => None,
        }
    }
}

/// A compact fingerprint of a datum: diagram, level multiplicities and
/// pairing, packed into 16-bit words. Two data are equal exactly when
/// their keys are.
fn key(th: &SwbDatum) -> Box<[u16]> {
    let f = th.frame();
    let t = f.tcd();
    let n = t.sites();
    let mut out = Vec::with_capacity(1 + n + f.levels().len() + th.vertex_count());
    let word = |x: usize| u16::try_from(x).expect("datum too large for the search");
    out.push(word(n));
    for i in 1..=n {
        out.push(word(t.partner(i)) | if t.twisted_at(i) { 0x8000 } else { 0 });
    }
    out.extend(f.levels().iter().map(|&m| word(m)));
    out.extend(th.mates().iter().map(|&m| word(m)));
    out.into_boxed_slice()
}

/// One side of the bidirectional search. Only the current frontier is kept
/// as data; everything visited is remembered by key.
struct Side {
    seen: HashMap<Box<[u16]>, u32>,
    /// `(parent, site, dir)` per visited state; the root points to itself.
    tree: Vec<(u32, u16, i8)>,
    frontier: Vec<(u32, SwbDatum)>,
    depth: usize,
}

impl Side {
    fn new(root: SwbDatum) -> Self {
        let mut seen = HashMap::new();
        seen.insert(key(&root), 0);
        Side { seen, tree: vec![(0, 0, 0)], frontier: vec![(0, root)], depth: 0 }
    }

    fn visited(&self) -> usize {
        self.tree.len()
    }

    fn path(&self, mut k: u32) -> Vec<Slide> {
        let mut out = Vec::new();
        while k != 0 {
            let (p, site, dir) = self.tree[k as usize];
            out.push(Slide::new(site as usize, dir));
            k = p;
        }
        out.reverse();
        out
    }

    /// Expands one layer and returns a state also seen by `other`. On the
    /// last layer new states are only compared, not stored.
    fn expand(&mut self, other: &Side, last: bool) -> Option<(u32, u32)> {
        let mut next = Vec::new();
        for (k, cur) in std::mem::take(&mut self.frontier) {
            for m in admissible_moves(&cur) {
                let out = reduce_unchecked(&handle_slide_strict(&cur, m.site, m.dir).expect("admissible"));
                let h = key(&out);
                if self.seen.contains_key(&h) {
                    continue;
                }
                let id = self.tree.len() as u32;
                self.tree.push((k, m.site as u16, m.dir));
                if let Some(&j) = other.seen.get(&h) {
                    return Some((id, j));
                }
                if !last {
                    self.seen.insert(h, id);
                    next.push((id, out));
                }
            }
        }
        self.frontier = next;
        self.depth += 1;
        None
    }
}

/// Decides whether two data are related by handle slides and isotopy.
///
/// Invariants are compared first. Data on the same diagram that differ by
/// a twist about the boundary are recognised directly, with the twist loop
/// as witness whatever its length. Otherwise the search grows the smaller
/// side one layer at a time until the two meet or a limit is hit.
pub fn hs_equivalent(a: &SwbDatum, b: &SwbDatum, limits: SearchLimits) -> Result<Equivalence> {
    if (a.south(), a.north()) != (b.south(), b.north()) {
        return Err(SwbError::ArityMismatch { expected: a.south() + a.north(), found: b.south() + b.north() });
    }
    if a.has_internal_components() || b.has_internal_components() {
        return Err(SwbError::HasInternalComponents);
    }
    if a.rank() != b.rank() {
        return Ok(Equivalence::Distinct { reason: format!("ranks {} and {}", a.rank(), b.rank()) });
    }
    let (ia, ib) = (invariants(a), invariants(b));
    if ia != ib {
        return Ok(Equivalence::Distinct { reason: describe_difference(&ia, &ib) });
    }
    let (ra, rb) = (reduce_unchecked(a), reduce_unchecked(b));
    if ra == rb {
        return Ok(Equivalence::Equivalent { left: Vec::new(), right: Vec::new() });
    }
    if let Some(left) = boundary_twist_witness(&ra, &rb) {
        return Ok(Equivalence::Equivalent { left, right: Vec::new() });
    }
    let mut left = Side::new(ra);
    let mut right = Side::new(rb);
    while left.depth + right.depth < limits.budget {
        if left.visited() + right.visited() > limits.max_states {
            break;
        }
        let grow_left = match (left.frontier.is_empty(), right.frontier.is_empty()) {
            (true, true) => break,
            (true, false) => false,
            (false, true) => true,
            _ => left.frontier.len() <= right.frontier.len(),
        };
        let last = left.depth + right.depth + 1 == limits.budget;
        let hit = if grow_left { left.expand(&right, last) } else { right.expand(&left, last).map(|(r, l)| (l, r)) };
        if let Some((l, r)) = hit {
            return Ok(Equivalence::Equivalent { left: left.path(l), right: right.path(r) });
        }
    }
    Ok(Equivalence::Undecided { explored: left.visited() + right.visited(), depth: left.depth + right.depth })
}

/// The twist loop or its inverse, when it carries reduced `a` onto `b`.
fn boundary_twist_witness(a: &SwbDatum, b: &SwbDatum) -> Option<Vec<Slide>> {
    let t = a.frame().tcd();
    if t != b.frame().tcd() || t.rank() < 2 {
        return None;
    }
    let fwd = boundary_twist_seq(t).ok()?;
    let back = inverse_seq(t, &fwd).ok()?;
    [fwd, back].into_iter().find(|m| replay(a, m).is_ok_and(|x| x == *b))
}

fn describe_difference(a: &Invariants, b: &Invariants) -> String {
    if a.surface != b.surface {
        format!("surface types {} and {}", a.surface, b.surface)
    } else if a.complement_count != b.complement_count {
        format!("complement counts {} and {}", a.complement_count, b.complement_count)
    } else {
        "components differ in endpoints, twist or separation".to_string()
    }
}

/// Replays a witness: slides both sides and reduces.
pub fn replay(th: &SwbDatum, moves: &[Slide]) -> Result<SwbDatum> {
    let mut cur = reduce_unchecked(th);
    for m in moves {
        cur = reduce_unchecked(&handle_slide_strict(&cur, m.site, m.dir)?);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::Tcd;
    use crate::swb::frame::Frame;
    use crate::swb::generators::{mobius_gen, torus_gen};

    fn bare(t: Tcd) -> SwbDatum {
        let k = t.rank();
        SwbDatum::empty_on(Frame::new(t, 0, 0, &vec![0; k]).unwrap()).unwrap()
    }

    #[test]
    fn a_datum_is_equivalent_to_itself() {
        let th = torus_gen(1, 2);
        let r = hs_equivalent(&th, &th, SearchLimits::new(0)).unwrap();
        assert_eq!(r, Equivalence::Equivalent { left: vec![], right: vec![] });
    }

    #[test]
    fn three_crosscaps_and_a_torus_with_a_crosscap() {
        let m = Tcd::mob();
        let a = bare(Tcd::juxtapose(&m, &Tcd::juxtapose(&m, &m)));
        let b = bare(Tcd::juxtapose(&m, &Tcd::tor()));
        let r = hs_equivalent(&a, &b, SearchLimits::new(8)).unwrap();
        let Equivalence::Equivalent { left, right } = r else { panic!("{r:?}") };
        assert_eq!(replay(&a, &left).unwrap(), replay(&b, &right).unwrap());
    }

    #[test]
    fn different_surfaces_are_distinct() {
        let a = bare(Tcd::juxtapose(&Tcd::mob(), &Tcd::mob()));
        let b = bare(Tcd::tor());
        assert!(matches!(hs_equivalent(&a, &b, SearchLimits::new(4)).unwrap(), Equivalence::Distinct { .. }));
        assert!(matches!(
            hs_equivalent(&mobius_gen(1), &mobius_gen(0), SearchLimits::new(4)),
            Err(SwbError::ArityMismatch { .. })
        ));
    }
}
