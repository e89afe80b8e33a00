pub mod error;
pub mod fraisse;
pub mod geodesics;
pub mod independence;
pub mod rng;
pub mod semigroup;
pub mod space;

pub use error::{Error, Result};
