//! Frames, curve diagrams on them, and the moves between diagrams.

pub mod datum;
pub mod equiv;
pub mod factor;
pub mod frame;
pub mod generators;
pub mod handle;
pub mod isotopy;
pub mod juxt;
pub mod random;
pub mod rewrite;

pub use datum::{Component, ComponentInfo, SwbDatum};
pub use equiv::{hs_equivalent, invariants, replay, Equivalence, Invariants, SearchLimits};
pub use factor::{factor_generators, reassemble, Factorization};
pub use frame::{Frame, FrameVertex};
pub use generators::{
    cap, cap_n, cup, cup_n, identity, insert_left, insert_left_n, insert_right, insert_right_n, mobius_gen, shift,
    shift_n, torus_gen, zero,
};
pub use handle::{
    admissible_moves, apply_handle_slides, apply_handle_slides_strict, handle_slide, handle_slide_strict,
    inverse_handle_slide,
};
pub use isotopy::{isotopy_reduce, pull_through, pullable, TurnBack};
pub use juxt::{factorize, insertion_decompose, juxtapose, InsertionSplit};
pub use rewrite::{evacuation_moves, rewrite_lemma1, rewrite_lemma2, rewrite_lemma3, rewrite_setup, RewriteSetup};
