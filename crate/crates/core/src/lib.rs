pub mod affine;
pub mod characters;
pub mod error;
pub mod rootdata;
pub mod hecke;
pub mod cells;
pub mod tilting;
pub mod cli;
