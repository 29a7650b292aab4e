//! Independent reference computations and random inputs for the
//! acceptance runs. Nothing here calls the code it is used to check.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{coev, ev, id, mobius, torus, Morphism, TlDiagram};
use crate::graph::{OrderedGraph, VertexId};
use crate::swb::{pull_through, pullable, Frame, SwbDatum};

/// A random graph on at most `max_n` vertices with scattered ids.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, max_n: usize) -> OrderedGraph {
    let n = rng.gen_range(0..=max_n);
    let mut ids: Vec<VertexId> = (0..4 * max_n as u64 + 4).collect();
    ids.shuffle(rng);
    ids.truncate(n);
    let p = rng.gen_range(0.05..0.6);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((ids[i], ids[j]));
            }
        }
    }
    OrderedGraph::new(ids, edges).expect("random graph is simple")
}

pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, from: &[VertexId]) -> BTreeSet<VertexId> {
    let p = rng.gen_range(0.0..0.7);
    from.iter().copied().filter(|_| rng.gen_bool(p)).collect()
}

/// Whether a path from `a` to `b` exists whose inner vertices all satisfy
/// `inner`, by breadth-first search over the edge list.
pub fn path_exists(g: &OrderedGraph, a: VertexId, b: VertexId, inner: impl Fn(VertexId) -> bool) -> bool {
    let edges = g.edges();
    let mut seen = HashSet::from([a]);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for &(p, q) in &edges {
            let y = if p == x {
                q
            } else if q == x {
                p
            } else {
                continue;
            };
            if y == b {
                return true;
            }
            if inner(y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// Contraction by path search: vertex set `V ∖ U`, every edge avoiding
/// `U`, and an edge between two outside vertices whenever some path
/// joins them through `U` alone.
pub fn contract_by_paths(
    g: &OrderedGraph,
    u: &BTreeSet<VertexId>,
) -> (BTreeSet<VertexId>, BTreeSet<(VertexId, VertexId)>) {
    let verts: BTreeSet<VertexId> = g.vertices().iter().copied().filter(|v| !u.contains(v)).collect();
    let mut edges: BTreeSet<(VertexId, VertexId)> =
        g.edges().into_iter().filter(|(a, b)| verts.contains(a) && verts.contains(b)).collect();
    let outside: Vec<VertexId> = verts.iter().copied().collect();
    for (i, &a) in outside.iter().enumerate() {
        for &b in &outside[i + 1..] {
            let through = u.iter().any(|&x| g.has_edge(a, x) && path_exists(g, x, b, |y| u.contains(&y)));
            if through {
                edges.insert((a, b));
            }
        }
    }
    (verts, edges)
}

/// Vertex set and edge set of a graph, ignoring the order.
pub fn shape(g: &OrderedGraph) -> (BTreeSet<VertexId>, BTreeSet<(VertexId, VertexId)>) {
    (g.vertices().iter().copied().collect(), g.edges().into_iter().collect())
}

/// Number of components, by repeated search.
pub fn count_components(g: &OrderedGraph) -> usize {
    let mut left: BTreeSet<VertexId> = g.vertices().iter().copied().collect();
    let mut count = 0;
    while let Some(&a) = left.iter().next() {
        count += 1;
        left.retain(|&b| b != a && !path_exists(g, a, b, |_| true));
    }
    count
}

/// A Temperley–Lieb diagram as a rank-zero datum: the bottom points are
/// the southern vertices and the top points, read right to left, the
/// northern ones, which is the boundary order of the square.
pub fn tl_to_datum(d: &TlDiagram) -> SwbDatum {
    let around = |p: usize| if p < d.bottom { p } else { d.bottom + d.top - 1 - (p - d.bottom) };
    let mut mate = vec![0; d.bottom + d.top];
    for p in 0..mate.len() {
        mate[around(p)] = around(d.partner[p]);
    }
    SwbDatum::from_mate(Frame::square(d.bottom, d.top), mate).expect("planar matching")
}

/// Every end state of every maximal sequence of pull-throughs, by
/// exhaustive search over the reachable states.
pub fn all_reductions(th: &SwbDatum) -> HashSet<SwbDatum> {
    let mut ends = HashSet::new();
    let mut seen = HashSet::new();
    let mut stack = vec![th.clone()];
    while let Some(cur) = stack.pop() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        let spots = pullable(&cur);
        if spots.is_empty() {
            ends.insert(cur);
            continue;
        }
        for tb in spots {
            stack.push(pull_through(&cur, tb.level, tb.slot).expect("pullable spot"));
        }
    }
    ends
}

/// The monoidal generators at small parameters, with a label each.
pub fn generators() -> Vec<(String, Morphism)> {
    let mut out = vec![
        ("id_0".to_string(), id(0)),
        ("id_1".to_string(), id(1)),
        ("ev_1".to_string(), ev(1)),
        ("coev_1".to_string(), coev(1)),
    ];
    for (l, m) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        out.push((format!("T_{l},{m}"), torus(l, m)));
    }
    for n in 0..3 {
        out.push((format!("M_{n}"), mobius(n)));
    }
    out
}

/// A random composite of one to `max_gens` generators, combined by
/// composition where the arities allow and by tensor product otherwise.
pub fn random_composite<R: Rng + ?Sized>(rng: &mut R, max_gens: usize) -> (String, Morphism) {
    let gens = generators();
    let (mut name, mut cur) = gens.choose(rng).expect("non-empty").clone();
    let extra = rng.gen_range(0..max_gens);
    for _ in 0..extra {
        let composable: Vec<_> = gens.iter().filter(|(_, g)| g.domain() == cur.codomain()).collect();
        if !composable.is_empty() && rng.gen_bool(0.5) {
            let (n, g) = composable.choose(rng).expect("non-empty");
            cur = g.compose(&cur).expect("arities agree");
            name = format!("{n} ∘ ({name})");
        } else {
            let (n, g) = gens.choose(rng).expect("non-empty");
            if rng.gen_bool(0.5) {
                cur = cur.tensor(g);
                name = format!("({name}) ⊗ {n}");
            } else {
                cur = g.tensor(&cur);
                name = format!("{n} ⊗ ({name})");
            }
        }
    }
    (name, cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_contraction_examples() {
        let g = OrderedGraph::new([1, 2, 3], [(1, 2), (2, 3)]).unwrap();
        let (v, e) = contract_by_paths(&g, &BTreeSet::from([2]));
        assert_eq!(v, BTreeSet::from([1, 3]));
        assert_eq!(e, BTreeSet::from([(1, 3)]));
        let c = OrderedGraph::new([1, 2, 3], [(1, 2), (2, 3), (1, 3)]).unwrap();
        let (v, e) = contract_by_paths(&c, &BTreeSet::from([2, 3]));
        assert_eq!(v, BTreeSet::from([1]));
        assert!(e.is_empty());
        assert_eq!(count_components(&OrderedGraph::new([1, 2, 3], [(1, 2)]).unwrap()), 2);
    }

    #[test]
    fn tl_identity_is_the_square_identity() {
        for n in 0..4 {
            assert_eq!(tl_to_datum(&TlDiagram::identity(n)), crate::swb::identity(n));
        }
    }
}
