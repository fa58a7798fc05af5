pub mod cyclic;
pub mod distance;
pub mod duadic;
pub mod error;
pub mod fields;
pub mod quantum;

pub use error::{Error, Result};
