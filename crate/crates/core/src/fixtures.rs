//! Worked examples used as regression fixtures.
//!
//! [`theta1`] and the frames are read off the pairing and multiplicities
//! given in the text. The other data are constructed so that they have the
//! properties stated for the corresponding drawings: a torus datum and a
//! cross-cap datum with internal components, and a handle slide on a torus
//! datum with five strands at each end.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::chord::Tcd;
use crate::swb::random::random_datum_on;
use crate::swb::{Frame, FrameVertex, SwbDatum};

fn v(level: usize, slot: usize) -> FrameVertex {
    FrameVertex::new(level, slot)
}

/// Rank two: an untwisted arc `{1,3}` and a twisted arc `{2,4}`, with
/// multiplicities 3 south, 2 and 1 on the arcs, 1 north.
pub fn frame_f1() -> Frame {
    let t = Tcd::new(2, &[(1, 3, false), (2, 4, true)]).expect("valid diagram");
    Frame::new(t, 3, 1, &[2, 1]).expect("valid frame")
}

/// Rank three: `{1,4}`, twisted `{2,6}` and `{3,5}`, with multiplicities
/// 2 south, 1, 2, 3 on the arcs, 4 north.
pub fn frame_f2() -> Frame {
    let t = Tcd::new(3, &[(1, 4, false), (2, 6, true), (3, 5, false)]).expect("valid diagram");
    Frame::new(t, 2, 4, &[1, 2, 3]).expect("valid frame")
}

/// The datum on [`frame_f1`] with pairing
/// `(0,1)-(3,2), (0,2)-(3,1), (0,3)-(1,1), (1,2)-(2,1), (5,1)-(4,1)`.
/// Its curves are both external; the one through the twisted band has
/// twist 1, and the complement is connected.
pub fn theta1() -> SwbDatum {
    let pairs = [(v(0, 1), v(3, 2)), (v(0, 2), v(3, 1)), (v(0, 3), v(1, 1)), (v(1, 2), v(2, 1)), (v(5, 1), v(4, 1))];
    SwbDatum::new(frame_f1(), &pairs).expect("valid datum")
}

/// A torus datum of type `(3, 1)` with an internal loop running once
/// through the band `{1,3}`.
pub fn theta3() -> SwbDatum {
    let t = Tcd::tor();
    let f = Frame::new(t, 3, 1, &[1, 0]).expect("valid frame");
    let pairs = [(v(0, 1), v(0, 2)), (v(0, 3), v(5, 1)), (v(1, 1), v(3, 1))];
    SwbDatum::new(f, &pairs).expect("valid datum")
}

/// A cross-cap datum of type `(1, 3)`: an internal one-sided loop through
/// the twisted band, a strand from south to north, and a cap on the north.
pub fn theta4() -> SwbDatum {
    let f = Frame::new(Tcd::mob(), 1, 3, &[1]).expect("valid frame");
    let pairs = [(v(0, 1), v(3, 1)), (v(1, 1), v(2, 1)), (v(3, 2), v(3, 3))];
    SwbDatum::new(f, &pairs).expect("valid datum")
}

/// A torus datum of type `(5, 5)` on which the downward slide at site 2
/// is admissible. The slide result is `handle_slide_strict(.., 2, -1)`.
pub fn handle_slide_example() -> SwbDatum {
    let f = Frame::new(Tcd::tor(), 5, 5, &[2, 1]).expect("valid frame");
    random_datum_on(&mut ChaCha8Rng::seed_from_u64(39), f)
}

/// Three stacked cross-caps and a cross-cap over a torus, without curves.
pub fn crosscaps_and_torus() -> (SwbDatum, SwbDatum) {
    let m = Tcd::mob();
    let three = Tcd::juxtapose(&m, &Tcd::juxtapose(&m, &m));
    let mixed = Tcd::juxtapose(&m, &Tcd::tor());
    let bare = |t: Tcd| {
        let k = t.rank();
        SwbDatum::empty_on(Frame::new(t, 0, 0, &vec![0; k]).expect("valid frame")).expect("no vertices")
    };
    (bare(three), bare(mixed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::is_admissible;

    #[test]
    fn theta1_claims() {
        let th = theta1();
        assert_eq!((th.south(), th.north()), (3, 1));
        assert_eq!(th.complement_count(), 1);
        let infos = th.component_infos();
        assert_eq!(infos.len(), 2);
        assert!(infos.iter().all(|c| c.external));
        let twisted: Vec<_> = infos.iter().filter(|c| c.twist).collect();
        assert_eq!(twisted.len(), 1);
        let f = th.frame();
        let through = |lvl: usize| twisted[0].vertices.iter().any(|&x| f.level_of(x) == lvl);
        assert!(through(2) && through(4));
    }

    #[test]
    fn constructed_examples_have_the_stated_features() {
        let t3 = theta3();
        assert_eq!((t3.south(), t3.north()), (3, 1));
        assert!(t3.has_internal_components());
        let t4 = theta4();
        assert_eq!((t4.south(), t4.north()), (1, 3));
        let infos = t4.component_infos();
        assert!(infos.iter().any(|c| !c.external && c.twist));
        assert!(infos.iter().any(|c| !c.twist));
        let h = handle_slide_example();
        assert!(is_admissible(h.frame().tcd(), 2, -1));
        assert_eq!((h.south(), h.north()), (5, 5));
    }
}
