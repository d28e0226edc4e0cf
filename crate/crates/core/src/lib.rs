//! Product-set growth in finite groups, coset measures over finite quotients,
//! explicit doubling and product-free constructions, and the Ruzsa metric on
//! subgroup lattices.
//!
//! Groups are Cayley tables ([`GroupTable`]) and subsets are bit vectors over
//! element indices ([`ElementSet`]). Every rational quantity is exact.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod group;
pub mod growth;
pub mod measure;
pub mod metric;
pub mod oracle;
pub mod perm;
pub mod product_free;
pub mod scalar;
pub mod set;
pub mod subgroup;

pub use error::{Error, Result};
pub use group::{build_group, direct_product, GroupTable, Homomorphism};
pub use perm::Permutation;
pub use scalar::{fmt_ratio, Scalar};
pub use set::ElementSet;
pub use subgroup::{Subgroup, SubgroupLattice};

/// Exact rational used for every measure and ratio the library asserts.
pub type Rational = num_rational::Ratio<i64>;
/// Single precision instantiation, display only.
pub type Ratio32 = f32;
/// Double precision instantiation, display only.
pub type Ratio64 = f64;
