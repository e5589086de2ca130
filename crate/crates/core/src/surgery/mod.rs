//! The normal-invariant construction and the numeric gates around it.

mod certificate;
mod construction;
mod gates;
pub(crate) mod ser;
mod tables;

pub use certificate::{construct, CertificateGates, CertificateInput, ConstructionCertificate};
pub use construction::{
    ahat_total_space, build_blueprint, minimal_pontryagin_index, pontryagin_numbers, solve_a,
    surgery_obstruction, ConstructionInput, NormalInvariantBlueprint, SolvedA,
};
pub use gates::{
    cross_section_check, is_ahat_multiplicative_fibre, mcg_finiteness_condition,
    psc_remark_check, theorem_gate, BoundCheck, BoundPath, CrossSectionReport,
    CrossSectionVerdict, GateCheck, GateReport, PscReport,
};
pub use tables::{bl_bound, in_stable_range, ko_group, l_group, morlet_bound, Group};
