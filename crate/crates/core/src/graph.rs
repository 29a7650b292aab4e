//! Simple undirected graphs on totally ordered vertex sets.
//!
//! Every diagrammatic object in the crate eventually becomes one of these:
//! curve graphs, boundary graphs, complement graphs. Vertex ids are opaque
//! `u64`s; the order is carried explicitly so that reversal and
//! order-preserving comparison are cheap.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Result, SwbError};

pub type VertexId = u64;

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    pub fn count_classes(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// A simple graph whose vertex set carries a total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGraph {
    order: Vec<VertexId>,
    adj: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

impl OrderedGraph {
    /// Builds a graph ordered by the natural order of the ids.
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let mut order: Vec<VertexId> = vertices.into_iter().collect();
        order.sort_unstable();
        Self::with_order(order, edges)
    }

    /// Builds a graph with an explicit vertex order (smallest first).
    pub fn with_order(order: Vec<VertexId>, edges: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
        for &v in &order {
            if adj.insert(v, BTreeSet::new()).is_some() {
                return Err(SwbError::InvalidGraph(format!("duplicate vertex {v}")));
            }
        }
        for (u, v) in edges {
            if u == v {
                return Err(SwbError::InvalidGraph(format!("loop at {u}")));
            }
            if !adj.contains_key(&u) || !adj.contains_key(&v) {
                return Err(SwbError::InvalidGraph(format!("edge {u}-{v} leaves the vertex set")));
            }
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
        Ok(OrderedGraph { order, adj })
    }

    pub fn empty() -> Self {
        OrderedGraph { order: Vec::new(), adj: BTreeMap::new() }
    }

    /// Vertices, smallest first.
    pub fn vertices(&self) -> &[VertexId] {
        &self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.order.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    /// Edges as `(u, v)` with `u` before `v` in the order, sorted by that
    /// pair of positions.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let pos = self.positions();
        let mut out = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs {
                if pos[&u] < pos[&v] {
                    out.push((u, v));
                }
            }
        }
        out.sort_by_key(|&(u, v)| (pos[&u], pos[&v]));
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.get(&v).into_iter().flat_map(|s| s.iter().copied())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj.get(&v).map_or(0, |s| s.len())
    }

    fn positions(&self) -> HashMap<VertexId, usize> {
        self.order.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    }

    /// The same graph with the order reversed.
    pub fn reversed(&self) -> Self {
        let mut order = self.order.clone();
        order.reverse();
        OrderedGraph { order, adj: self.adj.clone() }
    }

    /// True when the unique order-preserving bijection between the vertex
    /// sets is a graph isomorphism.
    pub fn op_isomorphic(&self, other: &OrderedGraph) -> bool {
        if self.order.len() != other.order.len() || self.edge_count() != other.edge_count() {
            return false;
        }
        let map: HashMap<VertexId, VertexId> = self.order.iter().copied().zip(other.order.iter().copied()).collect();
        self.edges().iter().all(|&(u, v)| other.has_edge(map[&u], map[&v]))
    }

    /// Relabels vertices through `f`, keeping the order of positions.
    pub fn relabel(&self, f: impl Fn(VertexId) -> VertexId) -> Result<Self> {
        let order: Vec<VertexId> = self.order.iter().map(|&v| f(v)).collect();
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (f(u), f(v))).collect();
        Self::with_order(order, edges)
    }

    /// The subgraph induced on `keep`, with the inherited order.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Self {
        let order: Vec<VertexId> = self.order.iter().copied().filter(|v| keep.contains(v)).collect();
        let edges = self.edges().into_iter().filter(|(u, v)| keep.contains(u) && keep.contains(v));
        Self::with_order(order, edges).expect("induced subgraph is well formed")
    }

    /// Union of two graphs on disjoint vertex sets. The order of `self`
    /// precedes the order of `other`.
    pub fn disjoint_union(&self, other: &OrderedGraph) -> Result<Self> {
        let mut order = self.order.clone();
        order.extend_from_slice(&other.order);
        let edges = self.edges().into_iter().chain(other.edges());
        Self::with_order(order, edges)
    }

    fn component_labels(&self) -> (HashMap<VertexId, usize>, usize) {
        let pos = self.positions();
        let mut uf = UnionFind::new(self.order.len());
        for (u, v) in self.edges() {
            uf.union(pos[&u], pos[&v]);
        }
        let mut label_of_root = HashMap::new();
        let mut labels = HashMap::new();
        for (i, &v) in self.order.iter().enumerate() {
            let r = uf.find(i);
            let next = label_of_root.len();
            let l = *label_of_root.entry(r).or_insert(next);
            labels.insert(v, l);
        }
        let n = label_of_root.len();
        (labels, n)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    /// Connected components, sorted by their least vertex.
    pub fn components(&self) -> Vec<OrderedGraph> {
        let (labels, n) = self.component_labels();
        let mut sets = vec![BTreeSet::new(); n];
        for &v in &self.order {
            sets[labels[&v]].insert(v);
        }
        // labels are assigned in order of first appearance, so this is
        // already sorted by least vertex
        sets.iter().map(|s| self.induced(s)).collect()
    }

    /// Vertices adjacent to `u` but outside `u`.
    pub fn attaching_set(&self, u: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for &x in u {
            for y in self.neighbors(x) {
                if !u.contains(&y) {
                    out.insert(y);
                }
            }
        }
        out
    }

    fn check_subset(&self, u: &BTreeSet<VertexId>) -> Result<()> {
        let bad: Vec<_> = u.iter().copied().filter(|v| !self.contains(*v)).collect();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(SwbError::NotASubset(bad))
        }
    }

    /// Contracts `u`: removes it, keeps every edge not touching it, and
    /// joins two attaching vertices whenever a path through `u` connects
    /// them.
    pub fn contract(&self, u: &BTreeSet<VertexId>) -> Result<Self> {
        self.check_subset(u)?;
        let inner: Vec<VertexId> = u.iter().copied().collect();
        let idx: HashMap<VertexId, usize> = inner.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut uf = UnionFind::new(inner.len());
        for &x in &inner {
            for y in self.neighbors(x) {
                if let Some(&j) = idx.get(&y) {
                    uf.union(idx[&x], j);
                }
            }
        }
        // attaching vertices grouped by the piece of `u` they touch
        let mut touching: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for &x in &inner {
            let r = uf.find(idx[&x]);
            for y in self.neighbors(x) {
                if !u.contains(&y) {
                    touching.entry(r).or_default().insert(y);
                }
            }
        }
        let order: Vec<VertexId> = self.order.iter().copied().filter(|v| !u.contains(v)).collect();
        let mut edges: BTreeSet<(VertexId, VertexId)> =
            self.edges().into_iter().filter(|(a, b)| !u.contains(a) && !u.contains(b)).collect();
        for group in touching.values() {
            let g: Vec<_> = group.iter().copied().collect();
            for i in 0..g.len() {
                for j in i + 1..g.len() {
                    edges.insert((g[i], g[j]));
                }
            }
        }
        Self::with_order(order, edges)
    }

    /// Number of components lost by contracting `u`.
    pub fn contraction_index(&self, u: &BTreeSet<VertexId>) -> Result<usize> {
        let c = self.contract(u)?;
        Ok(self.component_count() - c.component_count())
    }

    /// Splits a graph of maximum degree two into paths and cycles.
    pub fn classify_degree_le2(&self) -> Result<DegreeTwoSplit> {
        for &v in &self.order {
            if self.degree(v) > 2 {
                return Err(SwbError::DegreeTooHigh(v));
            }
        }
        let pos = self.positions();
        let mut pieces = Vec::new();
        let mut endpoint_pairs = Vec::new();
        for comp in self.components() {
            let ends: Vec<VertexId> = comp.order.iter().copied().filter(|&v| comp.degree(v) <= 1).collect();
            let start = if ends.is_empty() { comp.order[0] } else { ends[0] };
            let mut walk = vec![start];
            let mut prev: Option<VertexId> = None;
            let mut cur = start;
            loop {
                let next = comp.neighbors(cur).find(|&w| Some(w) != prev && w != start);
                match next {
                    Some(w) if !walk.contains(&w) => {
                        walk.push(w);
                        prev = Some(cur);
                        cur = w;
                    }
                    _ => break,
                }
            }
            let kind = if ends.is_empty() { PieceKind::Cycle } else { PieceKind::Path };
            if kind == PieceKind::Path && walk.len() > 1 {
                let (a, b) = (walk[0], *walk.last().unwrap());
                endpoint_pairs.push(if pos[&a] < pos[&b] { (a, b) } else { (b, a) });
            }
            pieces.push(Piece { kind, vertices: walk });
        }
        Ok(DegreeTwoSplit { pieces, endpoint_pairs })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceKind {
    Path,
    Cycle,
}

/// One component of a graph of maximum degree two, listed as a walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTwoSplit {
    pub pieces: Vec<Piece>,
    /// Endpoints of each nontrivial path, smaller first.
    pub endpoint_pairs: Vec<(VertexId, VertexId)>,
}

/// A partition of an ordered set into two-element blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PairPartition {
    pairs: Vec<(VertexId, VertexId)>,
}

impl PairPartition {
    /// Each pair is normalised to `(min, max)`; blocks must be disjoint.
    pub fn new(pairs: impl IntoIterator<Item = (VertexId, VertexId)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in pairs {
            if a == b {
                return Err(SwbError::NotAPartition(format!("block {{{a}}} has one element")));
            }
            for x in [a, b] {
                if !seen.insert(x) {
                    return Err(SwbError::NotAPartition(format!("{x} appears twice")));
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        Ok(PairPartition { pairs: out })
    }

    /// Blocks sorted by their least element.
    pub fn pairs(&self) -> &[(VertexId, VertexId)] {
        &self.pairs
    }

    pub fn crosses(p: (VertexId, VertexId), q: (VertexId, VertexId)) -> bool {
        let (a, b) = (p.0.min(p.1), p.0.max(p.1));
        let (c, d) = (q.0.min(q.1), q.0.max(q.1));
        (a < c && c < b && b < d) || (c < a && a < d && d < b)
    }

    pub fn is_crossingless(&self) -> bool {
        let mut stack: Vec<VertexId> = Vec::new();
        let mut ends: Vec<(VertexId, bool, VertexId)> = Vec::new();
        for &(a, b) in &self.pairs {
            ends.push((a, true, b));
            ends.push((b, false, a));
        }
        ends.sort_unstable();
        for (x, opening, mate) in ends {
            if opening {
                stack.push(x);
            } else if stack.pop() != Some(mate) {
                return false;
            }
        }
        true
    }

    pub fn to_graph(&self) -> OrderedGraph {
        let verts = self.pairs.iter().flat_map(|&(a, b)| [a, b]);
        OrderedGraph::new(verts, self.pairs.iter().copied()).expect("pairs are disjoint")
    }
}
