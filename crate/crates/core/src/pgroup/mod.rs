//! Executable models of the 2-groups `Γ_{n,m,ε}` and `Γ_n^{(4(r))}` with
//! subgroup, quotient, transfer and fingerprint machinery.

mod engine;
mod finite;
mod fingerprint;
pub mod gamma;
mod params;
mod subgroup;
mod transfer;
mod verify;

pub use engine::{make_group, GroupElement, PGroup};
pub use fingerprint::{distinguish, fingerprint, generator_isomorphism, nonnormal_index4_types, Distinction, Fingerprint};
pub use finite::{FiniteGroup, TableGroup};
pub use params::{Family, GroupParams, Mutation, MAX_LOG_ORDER};
pub use subgroup::{
    abelian_type_of, abelianization, center, closure, commutator_with_group, derived_subgroup,
    derived_subgroup_all_pairs, frattini, is_normal, join, lower_central_series,
    maximal_subgroups_of, normal_closure, quotient_group, subgroups_of_index4, trivial, whole,
    MaximalSubgroups, Subgroup,
};
pub use transfer::{transfer, transfer_kernel, Transfer, TransferKernel};
pub use verify::{verify_presentation, VerifyCheck, VerifyReport, DEFAULT_SAMPLES};
