//! The six matrix families: descriptors, defining forms, membership, bases built from the
//! defining conditions, dimension accounting, and the printed block layouts.

mod basis;
mod family;
mod forms;
mod template;

pub use basis::{
    build_basis, dimension_profile, dimension_profile_measured, profile_discrepancies, so_odd_consistent_d00,
    so_odd_relabeling, DimensionProfile, Discrepancy, GradedBasis, SoOddRelabeling,
};
pub use family::{classical_counterpart_dims, family_signature, AlgebraFamily, FamilyKind, FamilyParams};
pub use forms::{defining_form, is_member, DefiningForm, FormLabel, Membership, Violation};
pub use template::{block_template, BlockCell, BlockConstraint, BlockEntry, BlockTemplate};
