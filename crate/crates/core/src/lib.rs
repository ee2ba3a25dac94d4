//! Biquandle colorings, biquandle-module bead systems, coloring quivers and
//! the natural path polynomial for classical, virtual and surface links.
//!
//! Everything here is `no_std` with `alloc`; file formats and the CLI live in
//! the `bmq` crate.
#![no_std]

extern crate alloc;

pub mod bead;
pub mod biquandle;
pub mod codec;
pub mod coloring;
pub mod diagram;
pub mod linalg;
pub mod module;
pub mod moves;
pub mod paths;
pub mod quiver;
pub mod ring;
pub mod table;
