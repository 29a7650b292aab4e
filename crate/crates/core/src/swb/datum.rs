//! Curve diagrams on a frame: a crossingless pairing of the frame vertices.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Result, SwbError};
use crate::graph::{OrderedGraph, UnionFind};

use super::frame::{Frame, FrameVertex};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwbDatum {
    frame: Frame,
    /// `mate[v]` is the vertex paired with `v`.
    mate: Vec<usize>,
}

impl fmt::Debug for SwbDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Swb{{{:?};", self.frame)?;
        for (a, b) in self.index_pairs() {
            write!(f, " {}-{}", self.frame.vertex(a), self.frame.vertex(b))?;
        }
        write!(f, "}}")
    }
}

/// A connected component of the curve graph, as a sorted vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentInfo {
    pub vertices: Vec<usize>,
    pub external: bool,
    pub fully_external: bool,
    pub twist: bool,
    pub separating: bool,
    /// Southern and northern endpoints, in vertex order.
    pub endpoints: Vec<FrameVertex>,
}

impl ComponentInfo {
    pub fn is_internal(&self) -> bool {
        !self.external
    }
}

/// Checks that `mate` is a fixed-point-free involution without crossings.
fn check_pairing(mate: &[usize]) -> Result<()> {
    let mut stack = Vec::new();
    for (v, &w) in mate.iter().enumerate() {
        if w >= mate.len() || w == v || mate[w] != v {
            return Err(SwbError::InvalidDatum(format!("vertex {v} is not paired consistently")));
        }
        if w > v {
            stack.push(v);
        } else if stack.pop() != Some(w) {
            return Err(SwbError::NotCrossingless);
        }
    }
    Ok(())
}

impl SwbDatum {
    pub fn new(frame: Frame, pairs: &[(FrameVertex, FrameVertex)]) -> Result<Self> {
        let idx: Result<Vec<(usize, usize)>> =
            pairs.iter().map(|&(a, b)| Ok((frame.index(a)?, frame.index(b)?))).collect();
        Self::from_index_pairs(frame, &idx?)
    }

    pub fn from_index_pairs(frame: Frame, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = frame.total();
        let mut mate = vec![usize::MAX; n];
        for &(a, b) in pairs {
            if a >= n || b >= n || a == b {
                return Err(SwbError::InvalidDatum(format!("bad pair {a}-{b}")));
            }
            if mate[a] != usize::MAX || mate[b] != usize::MAX {
                return Err(SwbError::InvalidDatum(format!("vertex reused in pair {a}-{b}")));
            }
            mate[a] = b;
            mate[b] = a;
        }
        if let Some(v) = mate.iter().position(|&m| m == usize::MAX) {
            return Err(SwbError::InvalidDatum(format!("vertex {} is unpaired", frame.vertex(v))));
        }
        Self::from_mate(frame, mate)
    }

    pub fn from_mate(frame: Frame, mate: Vec<usize>) -> Result<Self> {
        if mate.len() != frame.total() {
            return Err(SwbError::InvalidDatum("pairing does not cover the frame".into()));
        }
        check_pairing(&mate)?;
        Ok(SwbDatum { frame, mate })
    }

    pub(crate) fn from_mate_unchecked(frame: Frame, mate: Vec<usize>) -> Self {
        debug_assert_eq!(mate.len(), frame.total());
        debug_assert!(check_pairing(&mate).is_ok(), "bad pairing {mate:?} on {frame:?}");
        SwbDatum { frame, mate }
    }

    /// Frame with no curves at all.
    pub fn empty_on(frame: Frame) -> Result<Self> {
        if frame.total() != 0 {
            return Err(SwbError::InvalidDatum("frame has vertices".into()));
        }
        Ok(SwbDatum { frame, mate: Vec::new() })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mate(&self, v: usize) -> usize {
        self.mate[v]
    }

    pub fn mates(&self) -> &[usize] {
        &self.mate
    }

    pub fn rank(&self) -> usize {
        self.frame.rank()
    }

    pub fn south(&self) -> usize {
        self.frame.south()
    }

    pub fn north(&self) -> usize {
        self.frame.north()
    }

    pub fn complexity(&self) -> usize {
        self.frame.complexity()
    }

    pub fn vertex_count(&self) -> usize {
        self.mate.len()
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn index_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.mate.len()).filter(|&v| v < self.mate[v]).map(|v| (v, self.mate[v])).collect()
    }

    /// Pairs in `(level, slot)` form; each pair and the list are sorted
    /// lexicographically.
    pub fn pairs(&self) -> Vec<(FrameVertex, FrameVertex)> {
        let mut out: Vec<_> = self
            .index_pairs()
            .into_iter()
            .map(|(a, b)| {
                let (x, y) = (self.frame.vertex(a), self.frame.vertex(b));
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        out.sort();
        out
    }

    /// Neighbours of `v` in the curve graph (one or two of them).
    pub(crate) fn neighbours(&self, v: usize) -> ([usize; 2], usize) {
        let m = self.mate[v];
        match self.frame.iota(v) {
            Some(j) if j != m => ([m, j], 2),
            _ => ([m, m], 1),
        }
    }

    pub fn curve_graph(&self) -> OrderedGraph {
        let mut edges = Vec::new();
        for v in 0..self.mate.len() {
            let (nb, k) = self.neighbours(v);
            edges.extend(nb[..k].iter().map(|&w| (v as u64, w as u64)));
        }
        OrderedGraph::new((0..self.mate.len() as u64).collect::<Vec<_>>(), edges).expect("curve graph is simple")
    }

    /// Components of the curve graph, ordered by least vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.mate.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut verts = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < verts.len() {
                let (nb, c) = self.neighbours(verts[k]);
                for &w in &nb[..c] {
                    if !seen[w] {
                        seen[w] = true;
                        verts.push(w);
                    }
                }
                k += 1;
            }
            verts.sort_unstable();
            out.push(Component { vertices: verts });
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    fn check_component(&self, verts: &[usize]) -> Result<()> {
        let set: BTreeSet<usize> = verts.iter().copied().collect();
        if verts.is_empty() || set.iter().any(|&v| v >= self.mate.len()) {
            return Err(SwbError::NotAComponent);
        }
        let closed = set.iter().all(|&v| {
            let (nb, k) = self.neighbours(v);
            nb[..k].iter().all(|w| set.contains(w))
        });
        if !closed {
            return Err(SwbError::NotAComponent);
        }
        // closed and connected
        let comp = self.components().into_iter().find(|c| c.vertices[0] == *set.iter().next().unwrap());
        match comp {
            Some(c) if c.vertices.len() == set.len() => Ok(()),
            _ => Err(SwbError::NotAComponent),
        }
    }

    /// Parity of the number of twisted band edges the component uses.
    pub fn twist(&self, comp: &Component) -> bool {
        let tcd = self.frame.tcd();
        let mut t = false;
        for &v in &comp.vertices {
            if self.frame.is_external(v) {
                continue;
            }
            let l = self.frame.level_of(v);
            if l < tcd.partner(l) && tcd.twisted_at(l) {
                t = !t;
            }
        }
        t
    }

    pub fn is_external(&self, comp: &Component) -> bool {
        comp.vertices.iter().any(|&v| self.frame.is_external(v))
    }

    pub fn has_internal_components(&self) -> bool {
        self.components().iter().any(|c| !self.is_external(c))
    }

    /// Keeps only the vertices in `keep`, which must be a union of
    /// components; vertices are renumbered in order.
    pub fn restrict(&self, keep: &[bool]) -> Result<SwbDatum> {
        let n = self.mate.len();
        let mut mult = self.frame.levels().to_vec();
        for v in 0..n {
            if !keep[v] {
                if keep[self.mate[v]] || self.frame.iota(v).is_some_and(|j| keep[j]) {
                    return Err(SwbError::NotAComponent);
                }
                mult[self.frame.level_of(v)] -= 1;
            }
        }
        let mut new_index = vec![usize::MAX; n];
        let mut k = 0;
        for v in 0..n {
            if keep[v] {
                new_index[v] = k;
                k += 1;
            }
        }
        let mate = (0..n).filter(|&v| keep[v]).map(|v| new_index[self.mate[v]]).collect();
        Ok(SwbDatum::from_mate_unchecked(self.frame.with_levels(mult), mate))
    }

    /// Removes one component.
    pub fn delete(&self, comp: &Component) -> Result<SwbDatum> {
        self.check_component(&comp.vertices)?;
        let mut keep = vec![true; self.mate.len()];
        for &v in &comp.vertices {
            keep[v] = false;
        }
        self.restrict(&keep)
    }

    /// Removes every component but `comp`.
    pub fn isolate(&self, comp: &Component) -> Result<SwbDatum> {
        self.check_component(&comp.vertices)?;
        let mut keep = vec![false; self.mate.len()];
        for &v in &comp.vertices {
            keep[v] = true;
        }
        self.restrict(&keep)
    }

    pub fn is_separating(&self, comp: &Component) -> Result<bool> {
        Ok(self.isolate(comp)?.complement_count() == 2)
    }

    pub fn classify(&self, comp: &Component) -> Result<ComponentInfo> {
        self.check_component(&comp.vertices)?;
        let endpoints: Vec<FrameVertex> =
            comp.vertices.iter().filter(|&&v| self.frame.is_external(v)).map(|&v| self.frame.vertex(v)).collect();
        Ok(ComponentInfo {
            vertices: comp.vertices.clone(),
            external: !endpoints.is_empty(),
            fully_external: comp.vertices.iter().all(|&v| self.frame.is_external(v)),
            twist: self.twist(comp),
            separating: self.is_separating(comp)?,
            endpoints,
        })
    }

    pub fn component_infos(&self) -> Vec<ComponentInfo> {
        self.components().iter().map(|c| self.classify(c).expect("own component")).collect()
    }

    /// Mirror image: reverses the vertex order and the levels.
    pub fn star(&self) -> SwbDatum {
        let n = self.mate.len();
        let mate = (0..n).rev().map(|v| n - 1 - self.mate[v]).collect();
        SwbDatum::from_mate_unchecked(self.frame.star(), mate)
    }

    /// Half-slot vertices in boundary order, as `(level, k)` meaning slot
    /// `k + 1/2`.
    pub fn half_vertices(&self) -> Vec<(usize, usize)> {
        let top = self.frame.top();
        let mut out = Vec::new();
        for l in 0..=top {
            let f = self.frame.level_len(l);
            if l == top {
                out.extend((0..=f).rev().map(|k| (l, k)));
            } else {
                out.extend((0..=f).map(|k| (l, k)));
            }
        }
        out
    }

    /// Labels every half-slot vertex with the region of the square it lies
    /// in, returned in [`half_vertices`](Self::half_vertices) order along
    /// with the number of regions.
    fn half_regions(&self) -> (Vec<usize>, usize) {
        let top = self.frame.top();
        let mut labels = Vec::new();
        let mut stack = vec![0usize];
        let mut regions = 1;
        let mut visit_vertex = |v: usize, stack: &mut Vec<usize>| {
            if self.mate[v] > v {
                stack.push(regions);
                regions += 1;
            } else {
                stack.pop();
            }
        };
        for l in 0..=top {
            let f = self.frame.level_len(l);
            let start = self.frame.level_start(l);
            labels.push(*stack.last().unwrap());
            for k in 0..f {
                visit_vertex(start + k, &mut stack);
                labels.push(*stack.last().unwrap());
            }
        }
        (labels, regions)
    }

    /// Position in [`half_vertices`](Self::half_vertices) of half-slot `k`
    /// at `level`.
    fn half_position(&self, level: usize, k: usize) -> usize {
        let before: usize = (0..level).map(|l| self.frame.level_len(l) + 1).sum();
        if level == self.frame.top() {
            before + self.frame.level_len(level) - k
        } else {
            before + k
        }
    }

    /// Number of components of the complement graph.
    pub fn complement_count(&self) -> usize {
        let (labels, regions) = self.half_regions();
        let mut uf = UnionFind::new(regions);
        let tcd = self.frame.tcd();
        for l in 1..self.frame.top() {
            if l > tcd.partner(l) {
                continue;
            }
            for k in 0..=self.frame.level_len(l) {
                let (l2, k2) = self.frame.iota_half(l, k);
                uf.union(labels[self.half_position(l, k)], labels[self.half_position(l2, k2)]);
            }
        }
        uf.count_classes()
    }

    /// The complement graph on half-slot vertices numbered in boundary
    /// order.
    pub fn complement_graph(&self) -> OrderedGraph {
        let (labels, _) = self.half_regions();
        let halves = self.half_vertices();
        let mut edges = Vec::new();
        for a in 0..halves.len() {
            for b in a + 1..halves.len() {
                if labels[a] == labels[b] {
                    edges.push((a as u64, b as u64));
                }
            }
            let (l, k) = halves[a];
            if !self.frame.is_external_level(l) {
                let (l2, k2) = self.frame.iota_half(l, k);
                let b = self.half_position(l2, k2);
                if a != b {
                    edges.push((a as u64, b as u64));
                }
            }
        }
        OrderedGraph::new((0..halves.len() as u64).collect::<Vec<_>>(), edges).expect("complement graph is simple")
    }

    /// Parts lying inside a single internal level.
    pub fn turnbacks(&self) -> Vec<(usize, usize)> {
        self.index_pairs()
            .into_iter()
            .filter(|&(a, b)| !self.frame.is_external(a) && self.frame.level_of(a) == self.frame.level_of(b))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::Tcd;

    fn v(l: usize, s: usize) -> FrameVertex {
        FrameVertex::new(l, s)
    }

    pub(crate) fn theta_one() -> SwbDatum {
        let f = Frame::new(Tcd::parse("1-3 2-4t").unwrap(), 3, 1, &[2, 1]).unwrap();
        SwbDatum::new(
            f,
            &[(v(0, 1), v(3, 2)), (v(0, 2), v(3, 1)), (v(0, 3), v(1, 1)), (v(1, 2), v(2, 1)), (v(5, 1), v(4, 1))],
        )
        .unwrap()
    }

    #[test]
    fn rejects_crossings() {
        let f = Frame::square(4, 0);
        let e = SwbDatum::new(f, &[(v(0, 1), v(0, 3)), (v(0, 2), v(0, 4))]);
        assert_eq!(e, Err(SwbError::NotCrossingless));
    }

    #[test]
    fn north_edge_order_matters_for_crossings() {
        // (0,1)-(1,1) and (0,2)-(1,2) are parallel strands
        let f = Frame::square(2, 2);
        assert!(SwbDatum::new(f.clone(), &[(v(0, 1), v(1, 1)), (v(0, 2), v(1, 2))]).is_ok());
        assert_eq!(SwbDatum::new(f, &[(v(0, 1), v(1, 2)), (v(0, 2), v(1, 1))]), Err(SwbError::NotCrossingless));
    }

    #[test]
    fn theta_one_components() {
        let th = theta_one();
        let infos = th.component_infos();
        assert_eq!(infos.len(), 2);
        assert!(infos.iter().all(|c| c.external));
        // one curve runs through the twisted band
        assert_eq!(infos.iter().filter(|c| c.twist).count(), 1);
        assert_eq!(th.complement_count(), 1);
        assert_eq!(th.complement_graph().component_count(), 1);
    }

    #[test]
    fn star_is_involution() {
        let th = theta_one();
        assert_eq!(th.star().star(), th);
        assert_eq!(th.star().south(), 1);
        assert_eq!(th.star().complement_count(), th.complement_count());
    }

    #[test]
    fn deleting_a_component() {
        let th = theta_one();
        let comps = th.components();
        let d = th.delete(&comps[0]).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.frame().levels(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(th.delete(&Component { vertices: vec![0] }), Err(SwbError::NotAComponent));
    }
}
