//! Permutations and materialized permutation groups.

mod group;
mod iso;
pub mod named;
mod names;
mod permutation;
mod subgroups;

pub(crate) use group::small_generating_set;
pub use group::{PermGroup, DEFAULT_ORDER_BOUND};
pub use iso::{apply_iso, are_isomorphic, Fingerprint, IsoMap};
pub use names::{candidate_names, recognize, reference_group, GroupName};
pub use permutation::Permutation;
pub use subgroups::{all_subgroups, all_subgroups_bounded};
