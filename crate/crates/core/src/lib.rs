//! Monodromy graphs and algebraic maps of finite permutation groups.
//!
//! Start with [`families::GroupSpec`] to build a group, then
//! [`monodromy::MonodromyGraph`] or [`algmap::AlgebraicMap`]. The guide in
//! `book/` walks through each concept.

pub mod algmap;
pub mod automorphism;
pub mod coset;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod group;
pub mod monodromy;
pub mod multigraph;
pub mod perm;
pub mod representation;
pub mod subgroups;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/cosets.md")]
    mod cosets {}
    #[doc = include_str!("../../../book/src/monodromy-graphs.md")]
    mod monodromy_graphs {}
    #[doc = include_str!("../../../book/src/algebraic-maps.md")]
    mod algebraic_maps {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/representation.md")]
    mod representation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
