//! Random frames and data for property tests and the acceptance runs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chord::{in_tc_star, Tcd};

use super::datum::SwbDatum;
use super::frame::Frame;
use super::isotopy::reduce_unchecked;

/// Bounds for random data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_rank: usize,
    pub max_complexity: usize,
    /// Bound on each of the southern and northern multiplicities.
    pub max_boundary: usize,
}

impl Bounds {
    pub fn new(max_rank: usize, max_complexity: usize, max_boundary: usize) -> Self {
        Bounds { max_rank, max_complexity, max_boundary }
    }
}

/// A uniformly random pair partition of `1..=2n` with random twists.
pub fn random_tcd<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Tcd {
    let mut sites: Vec<usize> = (1..=2 * n).collect();
    sites.shuffle(rng);
    let arcs: Vec<_> = sites.chunks(2).map(|p| (p[0], p[1], rng.gen_bool(0.5))).collect();
    Tcd::new(n, &arcs).expect("a pairing of all sites")
}

/// A random diagram with one boundary component.
pub fn random_tcd_star<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Tcd {
    loop {
        let t = random_tcd(rng, n);
        if in_tc_star(&t) {
            return t;
        }
    }
}

/// A random crossingless pairing of `0..n`; `n` must be even.
pub fn random_noncrossing<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    assert!(n.is_multiple_of(2), "odd number of points");
    let mut mate = vec![0; n];
    fill(rng, &mut mate, 0, n);
    mate
}

fn fill<R: Rng + ?Sized>(rng: &mut R, mate: &mut [usize], lo: usize, hi: usize) {
    // iterate on the outer part, recurse on the inner one
    let mut lo = lo;
    while lo < hi {
        let k = lo + 1 + 2 * rng.gen_range(0..(hi - lo) / 2);
        mate[lo] = k;
        mate[k] = lo;
        fill(rng, mate, lo + 1, k);
        lo = k + 1;
    }
}

/// A frame of the given rank with random multiplicities within `b`.
pub fn random_frame_of_rank<R: Rng + ?Sized>(rng: &mut R, rank: usize, b: &Bounds) -> Frame {
    let south = rng.gen_range(0..=b.max_boundary);
    // north has the parity of south
    let choices: Vec<usize> = (0..=b.max_boundary).filter(|x| (x + south) % 2 == 0).collect();
    let north = *choices.choose(rng).expect("south itself qualifies");
    random_frame_typed(rng, rank, b.max_complexity, south, north)
}

/// A frame of the given rank and type `(south, north)`; the parities of
/// `south` and `north` must agree.
pub fn random_frame_typed<R: Rng + ?Sized>(
    rng: &mut R,
    rank: usize,
    max_complexity: usize,
    south: usize,
    north: usize,
) -> Frame {
    assert!((south + north).is_multiple_of(2), "south and north differ in parity");
    let t = random_tcd_star(rng, rank);
    let mut mults = vec![0; rank];
    let mut left = max_complexity;
    for m in mults.iter_mut() {
        let x = rng.gen_range(0..=left);
        *m = x;
        left -= x;
    }
    mults.shuffle(rng);
    Frame::new(t, south, north, &mults).expect("diagram in TC*")
}

/// A random datum of type `(south, north)` within `b`, ignoring its
/// boundary bound.
pub fn random_datum_typed<R: Rng + ?Sized>(rng: &mut R, b: &Bounds, south: usize, north: usize) -> SwbDatum {
    let rank = rng.gen_range(0..=b.max_rank);
    let f = random_frame_typed(rng, rank, b.max_complexity, south, north);
    random_datum_on(rng, f)
}

/// A random frame with rank up to `b.max_rank`.
pub fn random_frame<R: Rng + ?Sized>(rng: &mut R, b: &Bounds) -> Frame {
    let rank = rng.gen_range(0..=b.max_rank);
    random_frame_of_rank(rng, rank, b)
}

/// A random datum on the given frame.
pub fn random_datum_on<R: Rng + ?Sized>(rng: &mut R, frame: Frame) -> SwbDatum {
    let mate = random_noncrossing(rng, frame.total());
    SwbDatum::from_mate(frame, mate).expect("crossingless pairing of the right size")
}

pub fn random_datum<R: Rng + ?Sized>(rng: &mut R, b: &Bounds) -> SwbDatum {
    let f = random_frame(rng, b);
    random_datum_on(rng, f)
}

/// A random datum without internal components; internal components of a
/// raw random datum are deleted.
pub fn random_clean_datum<R: Rng + ?Sized>(rng: &mut R, b: &Bounds) -> SwbDatum {
    strip_internal(&random_datum(rng, b))
}

/// A random turn-back-free datum without internal components.
pub fn random_reduced_datum<R: Rng + ?Sized>(rng: &mut R, b: &Bounds) -> SwbDatum {
    reduce_unchecked(&random_clean_datum(rng, b))
}

/// Deletes every internal component.
pub fn strip_internal(th: &SwbDatum) -> SwbDatum {
    let internal: Vec<_> = th.components().into_iter().filter(|c| !th.is_external(c)).collect();
    if internal.is_empty() {
        return th.clone();
    }
    let mut keep = vec![true; th.vertex_count()];
    for c in &internal {
        for &v in &c.vertices {
            keep[v] = false;
        }
    }
    th.restrict(&keep).expect("whole components removed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn noncrossing_pairings_are_crossingless() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in (0..20).step_by(2) {
            let m = random_noncrossing(&mut rng, n);
            for a in 0..n {
                let b = m[a];
                assert_eq!(m[b], a);
                for c in a.min(b) + 1..a.max(b) {
                    assert!(m[c] > a.min(b) && m[c] < a.max(b));
                }
            }
        }
    }

    #[test]
    fn random_data_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let b = Bounds::new(2, 8, 3);
        for _ in 0..200 {
            let th = random_clean_datum(&mut rng, &b);
            assert!(th.rank() <= 2 && th.complexity() <= 8);
            assert!(th.south() <= 3 && th.north() <= 3);
            assert!(!th.has_internal_components());
        }
    }
}
