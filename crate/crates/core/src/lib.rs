#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod lattice;
pub mod mahler;
pub mod numeric;
pub mod registry;
pub mod series;
