//! Twisted chord diagrams and the moves between them.

pub mod classify;
pub mod slide;
pub mod tcd;
pub mod twist;

pub use classify::{
    caravan, caravan_normalize, gf2_nullity, gf2_rank, in_tc_star, intersection_matrix, surface_type, SurfaceType,
};
pub use slide::{
    apply_slides, apply_slides_lenient, boundary_components, boundary_graph, boundary_line, boundary_slide_seq,
    chord_slide, chord_slide_strict, evacuation_seq, inverse_slide, is_admissible, Slide,
};
pub use tcd::{enumerate, Arc, Perm, Tcd};
pub use twist::{boundary_twist_seq, inverse_seq};
