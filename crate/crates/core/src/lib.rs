//! Exact inertial products on diagonal abelian quotient stacks `[X/G]`.

pub mod algebra;
pub mod chern;
pub mod cli;
pub mod error;
pub mod localization;
pub mod products;
pub mod rings;
pub mod stack;

pub use error::{Error, Result};
pub use products::{InertialPairSpec, InertialProduct};
pub use rings::{InertiaChowClass, InertiaKClass, KClass, KRing};
pub use stack::{ActionSpec, Character, CoordSet, GroupElement, GroupSpec, Sector, Space, Stack, VirtualBundle};
