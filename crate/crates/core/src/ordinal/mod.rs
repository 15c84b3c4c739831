//! Ordinal arithmetic: countable ordinals below ε₀, ordinals below `u_ω`,
//! and the shift maps between them.

mod ctbl;
mod shift;
mod uord;

pub use ctbl::CtblOrd;
pub use shift::{apply_shift, apply_shift_sup, decompose_shift, is_continuity_point, IndexMap};
pub use uord::{Cofinality, UOrd};
