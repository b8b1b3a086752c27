//! Rigidity and multi-rigidity of Schubert classes in Grassmannians and
//! partial flag varieties of classical type.
//!
//! Indices are parsed from literals such as `2^1,4^2 @ F(1,2;4)` or
//! `(3 | 0,1,3) @ OG(4,11)`; see [`index::parse_index`].

pub mod chow;
pub mod cli;
pub mod error;
pub mod index;
pub mod multirigidity;
pub mod projections;
pub mod restriction;
pub mod rigidity;
pub mod selftest;

pub use error::{Error, Result, Violation};
pub use index::{Entry, Schubert, SchubertIndex, Space, SpaceKind};
