use proptest::prelude::*;
use swb_core::chord::classify::{caravan, caravan_normalize, intersection_matrix, surface_type};
use swb_core::chord::slide::{
    apply_slides, apply_slides_lenient, boundary_components, boundary_graph, boundary_slide_seq, chord_slide,
    chord_slide_strict, evacuation_seq, inverse_slide, is_admissible, Slide,
};
use swb_core::chord::tcd::{enumerate, Perm, Tcd};

fn all_upto(n: usize) -> Vec<Tcd> {
    (0..=n).flat_map(|k| enumerate(k, false)).collect()
}

fn moves(t: &Tcd) -> Vec<(usize, i8)> {
    (1..=t.sites()).flat_map(|i| [(i, 1i8), (i, -1i8)]).filter(|&(i, e)| is_admissible(t, i, e)).collect()
}

#[test]
fn slides_preserve_type_and_boundary() {
    for t in all_upto(3) {
        let ty = surface_type(&t);
        let bc = boundary_components(&t);
        let open = boundary_graph(&t, false).component_count();
        for (i, e) in moves(&t) {
            let (s, _) = chord_slide_strict(&t, i, e).unwrap();
            assert_eq!(surface_type(&s), ty, "{t:?} ({i},{e})");
            assert_eq!(boundary_components(&s), bc);
            assert_eq!(boundary_graph(&s, false).component_count(), open);
        }
    }
}

#[test]
fn inverse_slide_round_trips() {
    for t in all_upto(3) {
        for (i, e) in moves(&t) {
            let (s, _) = chord_slide_strict(&t, i, e).unwrap();
            let back = inverse_slide(&t, i, e).unwrap();
            let (u, _) = chord_slide_strict(&s, back.site, back.dir).unwrap();
            assert_eq!(u, t, "{t:?} ({i},{e})");
        }
    }
}

#[test]
fn mirror_conjugates_slides() {
    for t in all_upto(3) {
        let m = t.sites();
        let omega = Tcd::omega(t.rank());
        for (i, e) in moves(&t) {
            let (a, sa) = chord_slide(&t, i, e);
            let (b, sb) = chord_slide(&t.star(), m + 1 - i, -e);
            assert_eq!(a, b.star());
            assert_eq!(sa, omega.then(&sb).then(&omega));
        }
    }
}

#[test]
fn rotation_conjugates_slides() {
    for t in all_upto(3) {
        let m = t.sites();
        let c = Tcd::rotation(t.rank());
        let cinv = c.inverse();
        for i in 2..m {
            let ip = t.partner(i + 1);
            if ip == i {
                continue;
            }
            let lhs = chord_slide(&t, i, 1).0;
            let rotated = t.permute(&c).unwrap();
            let mid = chord_slide(&rotated, i - 1, 1).0;
            let rhs =
                if ip == 1 { mid.permute(&cinv).unwrap().permute(&cinv).unwrap() } else { mid.permute(&cinv).unwrap() };
            assert_eq!(lhs, rhs, "{t:?} site {i}");
        }
    }
}

#[test]
fn insertion_associativity() {
    let small = all_upto(2);
    for p1 in &small {
        for p2 in &small {
            for p3 in small.iter().filter(|p| p.rank() <= 1) {
                for d1 in 0..=p2.sites() {
                    for d2 in 0..=p3.sites() {
                        let lhs = Tcd::insert(p3, d2, &Tcd::insert(p2, d1, p1).unwrap()).unwrap();
                        let rhs = Tcd::insert(&Tcd::insert(p3, d2, p2).unwrap(), d1 + d2, p1).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
                for d1 in 0..=p3.sites() {
                    for d2 in d1 + 1..=p3.sites() {
                        let lhs = Tcd::insert(&Tcd::insert(p3, d2, p2).unwrap(), d1, p1).unwrap();
                        let rhs = Tcd::insert(&Tcd::insert(p3, d1, p1).unwrap(), d2 + p1.sites(), p2).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            for d in 0..=p2.sites() {
                let lhs = Tcd::insert(p2, d, p1).unwrap().star();
                let rhs = Tcd::insert(&p2.star(), p2.sites() - d, &p1.star()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn matrix_of_juxtaposition_is_block_diagonal() {
    let small = all_upto(2);
    for p1 in &small {
        for p2 in &small {
            let m = intersection_matrix(&Tcd::juxtapose(p2, p1));
            let (a, b) = (intersection_matrix(p1), intersection_matrix(p2));
            let n1 = a.len();
            for i in 0..m.len() {
                for j in 0..m.len() {
                    let expect = match (i < n1, j < n1) {
                        (true, true) => a[i][j],
                        (false, false) => b[i - n1][j - n1],
                        _ => 0,
                    };
                    assert_eq!(m[i][j], expect);
                }
            }
        }
    }
}

/// Sliding a block past the site just above it moves it up by one.
#[test]
fn downward_boundary_slide_shifts_block() {
    let blocks: Vec<Tcd> = all_upto(2).into_iter().filter(|b| b.rank() > 0 && boundary_components(b) == 1).collect();
    for inner in &blocks {
        for outer in all_upto(2).iter().filter(|o| o.rank() > 0) {
            for d in 0..outer.sites() {
                let t = Tcd::insert(outer, d, inner).unwrap();
                let seq = boundary_slide_seq(&t, -1, d, inner).unwrap();
                let (end, _) = apply_slides(&t, &seq).unwrap();
                assert_eq!(end, Tcd::insert(outer, d + 1, inner).unwrap(), "{outer:?} {d} {inner:?}");
            }
            for d in 1..=outer.sites() {
                let t = Tcd::insert(outer, d, inner).unwrap();
                let seq = boundary_slide_seq(&t, 1, d, inner).unwrap();
                let (end, _) = apply_slides(&t, &seq).unwrap();
                assert_eq!(end, Tcd::insert(outer, d - 1, inner).unwrap(), "{outer:?} {d} {inner:?}");
            }
        }
    }
}

#[test]
fn upward_boundary_slide_is_mirror_of_downward() {
    let blocks: Vec<Tcd> = all_upto(2).into_iter().filter(|b| b.rank() > 0 && boundary_components(b) == 1).collect();
    for inner in &blocks {
        for outer in all_upto(2).iter().filter(|o| o.rank() > 0) {
            let m = outer.sites() + inner.sites();
            for d in 0..outer.sites() {
                let t = Tcd::insert(outer, d, inner).unwrap();
                let down = boundary_slide_seq(&t, -1, d, inner).unwrap();
                let up = boundary_slide_seq(&t.star(), 1, outer.sites() - d, &inner.star()).unwrap();
                let mirrored: Vec<Slide> = up.iter().map(|s| Slide::new(m + 1 - s.site, -s.dir)).collect();
                assert_eq!(down, mirrored);
            }
        }
    }
}

/// Evacuating an inserted block over the arc just above it carries the
/// block to the far end of that arc; reversed when the arc is twisted.
#[test]
fn evacuation_moves_block_across_arc() {
    let blocks: Vec<Tcd> = all_upto(2).into_iter().filter(|b| b.rank() > 0).collect();
    for inner in &blocks {
        for outer in all_upto(3).iter().filter(|o| o.rank() > 0) {
            for d in 0..outer.sites() {
                let c = outer.partner(d + 1);
                let t = Tcd::insert(outer, d, inner).unwrap();
                let seq = evacuation_seq(&t, 1, d + 1, d + inner.sites()).unwrap();
                let (end, _) = apply_slides_lenient(&t, &seq);
                let expect = if outer.twisted_at(d + 1) {
                    Tcd::insert(outer, c - 1, &inner.star()).unwrap()
                } else {
                    Tcd::insert(outer, c, inner).unwrap()
                };
                assert_eq!(end, expect, "{outer:?} d={d} {inner:?}");
            }
        }
    }
}

#[test]
fn downward_evacuation_mirrors_upward() {
    for t in all_upto(3) {
        let m = t.sites();
        for d1 in 1..=m {
            for d2 in d1..=m {
                let down = evacuation_seq(&t, -1, d1, d2).unwrap();
                let up = evacuation_seq(&t.star(), 1, m + 1 - d2, m + 1 - d1).unwrap();
                let (a, _) = apply_slides_lenient(&t, &down);
                let (b, _) = apply_slides_lenient(&t.star(), &up);
                assert_eq!(a, b.star());
            }
        }
    }
}

#[test]
fn caravan_reduction_rank_four() {
    for t in enumerate(4, false) {
        let (ty, moves) = caravan_normalize(&t).unwrap();
        let (end, _) = apply_slides(&t, &moves).unwrap();
        assert_eq!(end, caravan(ty));
    }
}

fn arb_tcd(max_rank: usize) -> impl Strategy<Value = Tcd> {
    (0..=max_rank).prop_flat_map(|n| {
        let all = enumerate(n, false);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #[test]
    fn star_is_an_involution(t in arb_tcd(4)) {
        prop_assert_eq!(t.star().star(), t.clone());
        prop_assert_eq!(surface_type(&t.star()), surface_type(&t));
    }

    #[test]
    fn rotation_has_order_two_n(t in arb_tcd(4)) {
        let mut r = t.clone();
        for _ in 0..t.sites() {
            r = r.rotate();
        }
        prop_assert_eq!(r, t);
    }

    #[test]
    fn random_slide_walks_keep_type(t in arb_tcd(5), picks in proptest::collection::vec(0usize..100, 0..20)) {
        let ty = surface_type(&t);
        let mut cur = t.clone();
        let mut perm = Perm::identity(t.sites());
        for k in picks {
            let ms = moves(&cur);
            if ms.is_empty() { break; }
            let (i, e) = ms[k % ms.len()];
            let (next, s) = chord_slide_strict(&cur, i, e).unwrap();
            perm = perm.then(&s);
            cur = next;
        }
        prop_assert_eq!(surface_type(&cur), ty);
        prop_assert_eq!(perm.len(), t.sites());
    }

    #[test]
    fn caravan_reduction_random_rank_six(t in arb_tcd(6)) {
        let (ty, moves) = caravan_normalize(&t).unwrap();
        let (end, _) = apply_slides(&t, &moves).unwrap();
        prop_assert_eq!(end, caravan(ty));
    }
}
