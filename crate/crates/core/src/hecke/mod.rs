//! Permutations, the symbolic algebra `H_n`, star operations, and modules
//! given by generator matrices.

mod algebra;
mod module;
mod perm;

pub use algebra::{delta_op, verify_star_relation, AlgebraElement, HeckeAlgebra, StarCheck};
pub use module::{ModuleRep, Relation};
pub use perm::{partitions, AllPerms, Perm};
