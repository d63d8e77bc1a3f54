pub mod category;
pub mod chu;
pub mod error;
pub mod finsetoid;
pub mod genchu;
pub mod groth;
pub mod info;
pub mod repr;
mod util;

pub use error::{Error, Result};
