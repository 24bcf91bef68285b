pub mod cayley;
pub mod constants;
pub mod error;
pub mod experiment;
pub mod gensets;
pub mod group;
pub mod linalg;
mod search;
pub mod twords;
pub mod witnesses;

pub use error::{Error, Result};
pub use group::{GroupElement, GroupSpec, ModuleElement};
pub use linalg::IntMatrix;
