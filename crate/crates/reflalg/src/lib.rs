//! Exact computational algebra for finite 2-reflection groups.

pub mod algebra;
pub mod cli;
pub mod closure;
pub mod combinatorics;
pub mod field;
pub mod groups;
pub mod identities;
pub mod span;
