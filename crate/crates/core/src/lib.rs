//! Trees of uniform cofinalities up to level 3 and the ordinal
//! representations they induce below `u_ω`.

pub mod analysis;
pub mod bk;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod level1;
pub mod level2;
pub mod level3;
pub mod lemmas;
pub mod node;
pub mod oracle;
pub mod ordinal;
pub mod syntax;

pub use error::{Error, Result};
pub use node::{ExtNode, Key, Node, StarKey};
