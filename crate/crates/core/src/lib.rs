//! Disjointness graphs of segments over planar point sets.
#![no_std]
extern crate alloc;

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod exact;
pub mod geometry;
pub mod graph;
pub mod lemmas;
pub mod xset;
