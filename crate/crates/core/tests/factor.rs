//! Factorization into rank-zero data and generators on random data.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use swb_core::swb::random::{random_clean_datum, random_datum, Bounds};
use swb_core::swb::{
    apply_handle_slides, factor_generators, hs_equivalent, insert_left_n, mobius_gen, reassemble, torus_gen,
    SearchLimits, SwbDatum,
};

/// Whether `th` is `I_L^a` of a generator, reading the parameters off its
/// frame.
fn is_generator_form(th: &SwbDatum) -> bool {
    let f = th.frame();
    let g = match th.rank() {
        2 => torus_gen(f.level_len(2), f.level_len(1)),
        1 => mobius_gen(f.level_len(1)),
        _ => return false,
    };
    th.south() >= g.south() && *th == insert_left_n(&g, th.south() - g.south())
}

#[test]
fn factors_reassemble_to_the_slid_datum() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let b = Bounds::new(3, 6, 3);
    for _ in 0..400 {
        let th = random_datum(&mut rng, &b);
        let fz = factor_generators(&th).unwrap();
        let (back, linking) = reassemble(&fz.factors).unwrap();
        assert_eq!(linking, 0);
        assert_eq!(back, apply_handle_slides(&th, &fz.slides));
        for piece in &fz.factors {
            assert!(piece.rank() == 0 || is_generator_form(piece), "{piece:?}");
        }
        // rank-zero pieces and generators alternate, bottom and top rank zero
        assert_eq!(fz.factors.len() % 3, if th.rank() == 0 { 1 } else { 0 });
    }
}

#[test]
fn factorization_is_handle_slide_equivalent() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let b = Bounds::new(2, 4, 2);
    let mut decided = 0;
    for _ in 0..200 {
        let th = random_clean_datum(&mut rng, &b);
        let fz = factor_generators(&th).unwrap();
        if fz.slides.len() > 4 {
            continue;
        }
        let (back, _) = reassemble(&fz.factors).unwrap();
        let r = hs_equivalent(&th, &back, SearchLimits::new(fz.slides.len().max(1))).unwrap();
        assert!(r.is_equivalent(), "{th:?}: {r:?}");
        decided += 1;
    }
    assert!(decided > 50, "{decided}");
}

#[test]
fn a_generator_factors_as_itself() {
    let g = torus_gen(1, 1);
    let fz = factor_generators(&g).unwrap();
    assert_eq!(fz.factors.len(), 3);
    assert_eq!(fz.factors[1], g);
}
