#![allow(clippy::needless_range_loop)]

pub mod algkit;
pub mod cattools;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod exactlin;
pub mod motivekit;
pub mod schurkit;
pub mod superkit;

pub use error::{Error, Result};
