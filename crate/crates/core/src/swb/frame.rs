//! Frames: a chord diagram with a multiplicity on every band and on the
//! two horizontal edges of the square.
//!
//! Vertices of a frame are numbered `0..total()` in the boundary order:
//! along the south edge left to right, up the right edge level by level,
//! then along the north edge right to left.

use std::fmt;

use crate::chord::{in_tc_star, Tcd};
use crate::error::{Result, SwbError};

/// A vertex `(level, slot)` with `slot ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrameVertex {
    pub level: usize,
    pub slot: usize,
}

impl FrameVertex {
    pub fn new(level: usize, slot: usize) -> Self {
        FrameVertex { level, slot }
    }
}

impl fmt::Display for FrameVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.level, self.slot)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Frame {
    tcd: Tcd,
    /// Multiplicity of every level `0..=2N+1`; equal on both ends of a band.
    mult: Vec<usize>,
    /// `offset[l]` is the index of the first vertex of level `l`.
    offset: Vec<usize>,
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame{{{:?} levels {:?}}}", self.tcd, self.mult)
    }
}

impl Frame {
    /// `arc_mults` follows the order of [`Tcd::arcs`].
    pub fn new(tcd: Tcd, south: usize, north: usize, arc_mults: &[usize]) -> Result<Self> {
        if !in_tc_star(&tcd) {
            return Err(SwbError::NotInTcStar);
        }
        let arcs = tcd.arcs();
        if arcs.len() != arc_mults.len() {
            return Err(SwbError::InvalidFrame(format!(
                "{} arc multiplicities for {} arcs",
                arc_mults.len(),
                arcs.len()
            )));
        }
        let mut mult = vec![0; tcd.sites() + 2];
        mult[0] = south;
        mult[tcd.sites() + 1] = north;
        for (a, &f) in arcs.iter().zip(arc_mults) {
            mult[a.lo] = f;
            mult[a.hi] = f;
        }
        Ok(Self::from_levels(tcd, mult))
    }

    /// Builds a frame from per-level multiplicities. The caller guarantees
    /// that both ends of each band agree.
    pub(crate) fn from_levels(tcd: Tcd, mult: Vec<usize>) -> Self {
        debug_assert_eq!(mult.len(), tcd.sites() + 2);
        debug_assert!((1..=tcd.sites()).all(|i| mult[i] == mult[tcd.partner(i)]));
        let mut offset = Vec::with_capacity(mult.len() + 1);
        let mut acc = 0;
        for &m in &mult {
            offset.push(acc);
            acc += m;
        }
        offset.push(acc);
        Frame { tcd, mult, offset }
    }

    /// Frame of rank zero with the given edge multiplicities.
    pub fn square(south: usize, north: usize) -> Self {
        Self::from_levels(Tcd::empty(), vec![south, north])
    }

    pub fn tcd(&self) -> &Tcd {
        &self.tcd
    }

    pub fn rank(&self) -> usize {
        self.tcd.rank()
    }

    /// Index of the north level, `2N + 1`.
    pub fn top(&self) -> usize {
        self.tcd.sites() + 1
    }

    pub fn south(&self) -> usize {
        self.mult[0]
    }

    pub fn north(&self) -> usize {
        self.mult[self.top()]
    }

    pub fn level_len(&self, level: usize) -> usize {
        self.mult[level]
    }

    pub fn levels(&self) -> &[usize] {
        &self.mult
    }

    /// Multiplicities of the arcs in [`Tcd::arcs`] order.
    pub fn arc_mults(&self) -> Vec<usize> {
        self.tcd.arcs().iter().map(|a| self.mult[a.lo]).collect()
    }

    /// Sum of the band multiplicities.
    pub fn complexity(&self) -> usize {
        self.arc_mults().iter().sum()
    }

    pub fn total(&self) -> usize {
        self.offset[self.mult.len()]
    }

    /// First index of `level`.
    pub fn level_start(&self, level: usize) -> usize {
        self.offset[level]
    }

    pub fn index(&self, v: FrameVertex) -> Result<usize> {
        if v.level > self.top() || v.slot == 0 || v.slot > self.mult[v.level] {
            return Err(SwbError::InvalidDatum(format!("vertex {v} is not in the frame")));
        }
        Ok(self.index_unchecked(v.level, v.slot))
    }

    pub(crate) fn index_unchecked(&self, level: usize, slot: usize) -> usize {
        if level == self.top() {
            self.offset[level] + self.mult[level] - slot
        } else {
            self.offset[level] + slot - 1
        }
    }

    pub fn level_of(&self, idx: usize) -> usize {
        // offsets are nondecreasing; pick the last level starting at or before idx
        let mut lo = 0;
        let mut hi = self.mult.len() - 1;
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if self.offset[mid] <= idx {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        // skip empty levels sharing the same offset
        while self.mult[lo] == 0 || idx >= self.offset[lo] + self.mult[lo] {
            lo += 1;
        }
        lo
    }

    pub fn vertex(&self, idx: usize) -> FrameVertex {
        let level = self.level_of(idx);
        let k = idx - self.offset[level];
        let slot = if level == self.top() { self.mult[level] - k } else { k + 1 };
        FrameVertex { level, slot }
    }

    pub fn is_external_level(&self, level: usize) -> bool {
        level == 0 || level == self.top()
    }

    pub fn is_external(&self, idx: usize) -> bool {
        idx < self.offset[1] || idx >= self.offset[self.top()]
    }

    /// The band involution on an internal vertex index.
    pub fn iota(&self, idx: usize) -> Option<usize> {
        if self.is_external(idx) {
            return None;
        }
        let level = self.level_of(idx);
        let slot = idx - self.offset[level] + 1;
        let other = self.tcd.partner(level);
        let f = self.mult[level];
        let s = if self.tcd.twisted_at(level) { slot } else { f + 1 - slot };
        Some(self.offset[other] + s - 1)
    }

    /// Band involution on a half-slot `k ∈ 0..=f` (meaning `k + 1/2`) of an
    /// internal level.
    pub fn iota_half(&self, level: usize, k: usize) -> (usize, usize) {
        let other = self.tcd.partner(level);
        let f = self.mult[level];
        (other, if self.tcd.twisted_at(level) { k } else { f - k })
    }

    /// Mirror frame: reverses the levels.
    pub fn star(&self) -> Frame {
        let mut mult = self.mult.clone();
        mult.reverse();
        Frame::from_levels(self.tcd.star(), mult)
    }

    /// `top # bottom`, glued along `bottom`'s north edge.
    pub fn juxtapose(top: &Frame, bottom: &Frame) -> Result<Frame> {
        if bottom.north() != top.south() {
            return Err(SwbError::ArityMismatch { expected: bottom.north(), found: top.south() });
        }
        let tcd = Tcd::juxtapose(&top.tcd, &bottom.tcd);
        let mut mult = bottom.mult[..bottom.top()].to_vec();
        mult.extend_from_slice(&top.mult[1..]);
        Ok(Frame::from_levels(tcd, mult))
    }

    /// `outer #_d inner` for frames; the edge multiplicities of `inner` are
    /// forgotten.
    pub fn insert(outer: &Frame, d: usize, inner: &Frame) -> Result<Frame> {
        let tcd = Tcd::insert(&outer.tcd, d, &inner.tcd)?;
        let mut mult = outer.mult[..=d].to_vec();
        mult.extend_from_slice(&inner.mult[1..inner.top()]);
        mult.extend_from_slice(&outer.mult[d + 1..]);
        Ok(Frame::from_levels(tcd, mult))
    }

    /// Same diagram with new multiplicities on the edges and bands.
    pub(crate) fn with_levels(&self, mult: Vec<usize>) -> Frame {
        Frame::from_levels(self.tcd.clone(), mult)
    }
}
