//! Hypothesis checks around the bundle construction.

use num_traits::Zero;
use serde::Serialize;

use super::construction::minimal_pontryagin_index;
use super::tables::{bl_bound, in_stable_range, ko_group, l_group, morlet_bound, Group};
use crate::cohomology::ManifoldData;
use crate::error::{Error, Result};
use crate::multseq::genus_of_manifold;
use crate::series::{Genus, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossSectionVerdict {
    /// A cross-section with trivial normal bundle exists.
    Holds,
    Fails,
    /// `π_k(BO) = Z/2`: the normal bundle is rationally trivial but may carry 2-torsion.
    TorsionUndetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossSectionReport {
    pub verdict: CrossSectionVerdict,
    pub reason: String,
}

impl CrossSectionReport {
    pub fn holds(&self) -> bool {
        self.verdict == CrossSectionVerdict::Holds
    }
}

/// Whether the bundle over `S^k` admits a cross-section with trivial normal bundle.
pub fn cross_section_check(manifold: &ManifoldData, k: u32) -> CrossSectionReport {
    let report = |verdict, reason: String| CrossSectionReport { verdict, reason };
    let d = manifold.dimension();
    let Some(j) = minimal_pontryagin_index(manifold) else {
        return report(
            CrossSectionVerdict::Fails,
            "no nonvanishing Pontryagin class".into(),
        );
    };
    if k == 0 {
        return report(CrossSectionVerdict::Fails, "k must be at least 1".into());
    }
    match ko_group(i64::from(k)) {
        Group::Trivial => report(CrossSectionVerdict::Holds, "KO-group vanishes".into()),
        Group::TwoTorsion => report(
            CrossSectionVerdict::TorsionUndetermined,
            "rationally trivial, 2-torsion possible".into(),
        ),
        Group::Integers if 4 * j < d => report(
            CrossSectionVerdict::Holds,
            format!(
                "j = {j} < d/4, so p_{}(ν) = 0 as k/4 < m-j",
                k / 4
            ),
        ),
        Group::Integers => report(CrossSectionVerdict::Fails, "j = d/4".into()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PscReport {
    /// `d ≡ 0 (4)`, spin, and `p_{d/4}` is the only nonzero Pontryagin class.
    Applicable {
        #[serde(serialize_with = "crate::surgery::ser::rational")]
        ahat: Rational,
        no_psc: bool,
    },
    Inapplicable { reason: String },
}

impl PscReport {
    pub fn excludes_psc(&self) -> bool {
        matches!(self, PscReport::Applicable { no_psc: true, .. })
    }
}

/// When `j = d/4` on a spin manifold the Â-genus is a nonzero multiple of the single
/// Pontryagin number, which rules out positive scalar curvature.
pub fn psc_remark_check(manifold: &ManifoldData) -> Result<PscReport> {
    let d = manifold.dimension();
    let inapplicable = |reason: &str| {
        Ok(PscReport::Inapplicable {
            reason: reason.to_string(),
        })
    };
    if !d.is_multiple_of(4) {
        return inapplicable("d is not divisible by 4");
    }
    let Some(j) = minimal_pontryagin_index(manifold) else {
        return inapplicable("no nonvanishing Pontryagin class");
    };
    if 4 * j < d {
        return inapplicable("j < d/4");
    }
    if !manifold.spin {
        return inapplicable("manifold is not spin");
    }
    let ahat = genus_of_manifold(Genus::Ahat, manifold)?;
    let no_psc = !ahat.is_zero();
    Ok(PscReport::Applicable { ahat, no_psc })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    /// Largest admissible `k`, when the bound applies at all.
    pub bound: Option<i64>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundPath {
    Bl,
    Morlet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GateReport {
    pub manifold: String,
    pub d: u32,
    pub k: u32,
    pub connectivity: Option<u32>,
    pub checks: Vec<GateCheck>,
    pub bl_path: BoundCheck,
    /// `None` when no connectivity was supplied.
    pub morlet_path: Option<BoundCheck>,
    pub bound_path: Option<BoundPath>,
    pub passed: bool,
}

impl GateReport {
    pub fn check(&self, name: &str) -> Option<&GateCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn bl_check(d: u32, k: u32) -> BoundCheck {
    let bound = bl_bound(d);
    let passed = i64::from(k) <= bound;
    BoundCheck {
        bound: Some(bound),
        passed,
        detail: format!(
            "k = {k} {} bl_bound({d}) = {bound}",
            if passed { "≤" } else { ">" }
        ),
    }
}

fn morlet_check(d: u32, k: u32, connectivity: u32) -> BoundCheck {
    match morlet_bound(d, connectivity) {
        Ok(bound) => {
            let passed = i64::from(k) <= bound;
            BoundCheck {
                bound: Some(bound),
                passed,
                detail: format!(
                    "k = {k} {} morlet_bound({d}, {connectivity}) = {bound}",
                    if passed { "≤" } else { ">" }
                ),
            }
        }
        Err(e) => BoundCheck {
            bound: None,
            passed: false,
            detail: e.to_string(),
        },
    }
}

/// Checks each hypothesis of the main theorem for `(M, k)`.
///
/// The dimension bound may be met through either `bl_bound` or, given the connectivity
/// `ℓ` of `M`, through `morlet_bound`; the report names the path that succeeded.
pub fn theorem_gate(manifold: &ManifoldData, k: u32, connectivity: Option<u32>) -> GateReport {
    let d = manifold.dimension();
    let j = minimal_pontryagin_index(manifold);
    let total = d + k;
    let checks = vec![
        GateCheck {
            name: "simply_connected",
            passed: manifold.simply_connected,
            detail: format!("simply_connected = {}", manifold.simply_connected),
        },
        GateCheck {
            name: "spin",
            passed: manifold.spin,
            detail: format!("spin = {}", manifold.spin),
        },
        GateCheck {
            name: "pontryagin",
            passed: j.is_some(),
            detail: match j {
                Some(j) => format!("p_{j} ≠ 0"),
                None => "all Pontryagin classes vanish".into(),
            },
        },
        GateCheck {
            name: "k_positive",
            passed: k >= 1,
            detail: format!("k = {k}"),
        },
        GateCheck {
            name: "parity",
            passed: total.is_multiple_of(4),
            detail: format!("d+k = {total}, L_{total}(Z) = {}", l_group(i64::from(total))),
        },
    ];
    let bl_path = bl_check(d, k);
    let morlet_path = connectivity.map(|l| morlet_check(d, k, l));
    let bound_path = if bl_path.passed {
        Some(BoundPath::Bl)
    } else if morlet_path.as_ref().is_some_and(|m| m.passed) {
        Some(BoundPath::Morlet)
    } else {
        None
    };
    let passed = checks.iter().all(|c| c.passed) && bound_path.is_some();
    GateReport {
        manifold: manifold.name.clone(),
        d,
        k,
        connectivity,
        checks,
        bl_path,
        morlet_path,
        bound_path,
        passed,
    }
}

/// In the range `d ≥ max(3k+1, 2k+5)`, `M` is an Â-multiplicative fibre in degree `k`
/// exactly when all its rational Pontryagin classes vanish.
pub fn is_ahat_multiplicative_fibre(manifold: &ManifoldData, k: u32) -> Result<bool> {
    let d = manifold.dimension();
    if !in_stable_range(d, k) {
        return Err(Error::DimensionBound(format!(
            "need d ≥ max(3k+1, 2k+5) = {}, got d = {d}",
            (3 * k + 1).max(2 * k + 5)
        )));
    }
    Ok(minimal_pontryagin_index(manifold).is_none())
}

/// The mapping class group acts through a finite group iff `d ≢ 3 (4)` or all
/// Pontryagin classes vanish.
pub fn mcg_finiteness_condition(manifold: &ManifoldData) -> bool {
    manifold.dimension() % 4 != 3 || minimal_pontryagin_index(manifold).is_none()
}
