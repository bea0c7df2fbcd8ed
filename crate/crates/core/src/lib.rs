//! Exact packet combinatorics for Sp(2n), SO(p,q) and U(p,q) over the reals.
//!
//! Every quantity is an integer, an exact rational or a sign. The crate covers
//! root data, group descriptors and their invariants, Arthur parameters and
//! their parity decomposition, component groups, c-Levi subgroups, elliptic
//! endoscopic data, the sign characters attached to cohomological induction
//! and the recursive construction of packet tables.

pub mod characters;
pub mod checks;
pub mod compgroup;
pub mod dsl;
pub mod endoscopy;
pub mod error;
pub mod groups;
pub mod levi;
pub mod number;
pub mod oracle;
pub mod packets;
pub mod params;
pub mod rootdata;
pub mod sample;

pub use characters::{CartanShape, StandardLabel};
pub use compgroup::{CgCharacter, CgElement, ComponentGroup, Generator, GeneratorKind};
pub use endoscopy::{EndoscopicDatum, EndoscopicShape, FactorKind, LeviCase};
pub use error::{Error, ErrorClass, Result, Violation};
pub use groups::{Family, GroupDescriptor, LeviDescriptor, SplitType};
pub use levi::{LeviRepresentative, SignVector};
pub use number::{GaussRat, Rat, Sign, SignCharacter};
pub use packets::{InductionDatum, PacketEntry, PacketTable, RangeFlag};
pub use params::{ArthurParameter, Block, ParityDecomposition, Summand, SummandKind, UnipotentSummand};
pub use rootdata::{RhoCase, RootFamily, RootSystem};
