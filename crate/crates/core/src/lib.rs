pub mod bench;
pub mod cli;
pub mod clip;
pub mod error;
pub mod geometry;
pub mod mesh;
