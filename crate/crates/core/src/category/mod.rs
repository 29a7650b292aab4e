//! The linear category spanned by squares with bands.
//!
//! Morphisms `n → m` are integer-polynomial combinations of data of type
//! `(n, m)` up to handle slides and isotopy, with internal loops traded
//! for the parameters α, β and γ.

pub mod morphism;
pub mod relations;
pub mod scalar;
pub mod tl;

pub use morphism::{coev, ev, id, mobius, normalize_homogeneous, torus, Comparison, LoopCounts, Morphism};
pub use relations::{crosscap_torus, yang_baxter};
pub use scalar::{Monomial, Scalar};
pub use tl::{tl_oracle_compose, tl_oracle_tensor, TlDiagram};
