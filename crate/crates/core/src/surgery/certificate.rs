use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::construction::{build_blueprint, ConstructionInput};
use super::gates::{cross_section_check, psc_remark_check, CrossSectionReport, PscReport};
use super::ser;
use super::tables::bl_bound;
use crate::error::Result;
use crate::multseq::Partition;
use crate::series::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateInput {
    pub manifold: String,
    pub k: u32,
    pub lambda: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateGates {
    pub spin: bool,
    pub simply_connected: bool,
    pub parity: bool,
    pub bl_bound: i64,
    pub within_bl_bound: bool,
    pub cross_section: CrossSectionReport,
    pub psc: PscReport,
}

/// Outcome of running the construction on one `(M, k, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionCertificate {
    pub input: CertificateInput,
    pub m: u32,
    pub j: u32,
    #[serde(serialize_with = "ser::rational")]
    pub b: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub c: Rational,
    #[serde(rename = "A", serialize_with = "ser::rational")]
    pub a: Rational,
    /// Whether `A` was solved for rather than supplied.
    pub a_solved: bool,
    #[serde(serialize_with = "ser::rational")]
    pub sigma: Rational,
    #[serde(serialize_with = "ser::partition_map")]
    pub pontryagin_numbers: BTreeMap<Partition, Rational>,
    /// Ring-level census agrees with the blueprint's closed forms.
    pub census_matches_closed_form: bool,
    #[serde(rename = "ahat_E", serialize_with = "ser::rational")]
    pub ahat_e: Rational,
    pub gates: CertificateGates,
    pub warnings: Vec<String>,
}

impl ConstructionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Runs the whole pipeline. With `a = None` the obstruction-killing `A` is used.
pub fn construct(input: &ConstructionInput, a: Option<Rational>) -> Result<ConstructionCertificate> {
    let bp = build_blueprint(input)?;
    let mut warnings = Vec::new();
    let a_solved = a.is_none();
    let a = match a {
        Some(a) => a,
        None => {
            let solved = bp.solve_a()?;
            if solved.degenerate {
                warnings.push(
                    "s_{j,m-j} + s_m vanishes: the obstruction is killed only by A = 0".to_string(),
                );
            }
            solved.value
        }
    };
    let sigma = bp.surgery_obstruction(&a);
    if !sigma.is_zero() {
        warnings.push(format!("surgery obstruction does not vanish: {sigma}"));
    }
    let pontryagin_numbers = bp.pontryagin_numbers(&a)?;
    let census_matches_closed_form = pontryagin_numbers == bp.closed_form_census(&a);
    let ahat_e = bp.ahat_total_space(&a)?;
    if ahat_e.is_zero() {
        warnings.push("the Â-genus of the total space vanishes".to_string());
    }
    let manifold = &input.manifold;
    let d = manifold.dimension();
    let bl = bl_bound(d);
    let gates = CertificateGates {
        spin: manifold.spin,
        simply_connected: manifold.simply_connected,
        parity: true,
        bl_bound: bl,
        within_bl_bound: i64::from(input.k) <= bl,
        cross_section: cross_section_check(manifold, input.k),
        psc: psc_remark_check(manifold)?,
    };
    Ok(ConstructionCertificate {
        input: CertificateInput {
            manifold: manifold.name.clone(),
            k: input.k,
            lambda: input.lambda,
        },
        m: bp.m,
        j: bp.j,
        b: bp.b.clone(),
        c: bp.c.clone(),
        a,
        a_solved,
        sigma,
        pontryagin_numbers,
        census_matches_closed_form,
        ahat_e,
        gates,
        warnings,
    })
}
