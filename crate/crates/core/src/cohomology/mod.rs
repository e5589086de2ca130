//! Finite models of rational cohomology rings carrying Pontryagin data.

mod descriptor;
pub mod fixtures;
mod linalg;
mod ring;

use std::collections::BTreeMap;

pub use descriptor::{parse_manifold, Descriptor};
pub use ring::{BasisElement, Class, Ring, SphereFactor};

use crate::error::Result;
use crate::multseq::Partition;
use crate::series::Rational;

/// A closed oriented manifold as seen through `H*(M; Q)` and its Pontryagin classes.
#[derive(Debug, Clone)]
pub struct ManifoldData {
    pub name: String,
    pub spin: bool,
    pub simply_connected: bool,
    ring: Ring,
    /// Nonzero `p_i(TM)`, each homogeneous of degree `4i`.
    pontryagin: BTreeMap<u32, Class>,
}

impl ManifoldData {
    pub(crate) fn from_parts(
        name: String,
        spin: bool,
        simply_connected: bool,
        ring: Ring,
        pontryagin: BTreeMap<u32, Class>,
    ) -> Self {
        let pontryagin = pontryagin.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        ManifoldData {
            name,
            spin,
            simply_connected,
            ring,
            pontryagin,
        }
    }

    pub fn dimension(&self) -> u32 {
        self.ring.dimension()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// `p_i(TM)`; zero when absent.
    pub fn pontryagin(&self, i: u32) -> Class {
        self.pontryagin.get(&i).cloned().unwrap_or_default()
    }

    /// The nonzero Pontryagin classes keyed by index.
    pub fn pontryagin_classes(&self) -> &BTreeMap<u32, Class> {
        &self.pontryagin
    }

    /// `1 + p_1 + p_2 + …` as a mixed-degree class.
    pub fn total_pontryagin_class(&self) -> Class {
        self.pontryagin
            .values()
            .fold(self.ring.unit(), |acc, p| acc.add(p))
    }

    /// `⟨p_I(TM), [M]⟩` for the monomial indexed by `partition`.
    pub fn pontryagin_number(&self, partition: &Partition) -> Result<Rational> {
        let mut product = self.ring.unit();
        for &i in partition.parts() {
            product = self.ring.multiply(&product, &self.pontryagin(i))?;
            if product.is_zero() {
                break;
            }
        }
        Ok(self.ring.evaluate(&product))
    }

    /// Looks a basis element up by id.
    pub fn class(&self, id: &str) -> Option<Class> {
        self.ring.index_of(id).map(Class::basis)
    }

    pub fn multiply(&self, a: &Class, b: &Class) -> Result<Class> {
        self.ring.multiply(a, b)
    }

    pub fn evaluate(&self, c: &Class) -> Rational {
        self.ring.evaluate(c)
    }

    pub fn find_dual_class(&self, c: &Class) -> Result<Class> {
        self.ring.find_dual_class(c)
    }

    pub fn to_descriptor(&self) -> Descriptor {
        Descriptor::from_manifold(self)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_descriptor()).expect("descriptor serializes")
    }
}

/// `M × S^n`, with `p(S^n) = 1` so the Pontryagin classes are pulled back from `M`.
///
/// The product is simply connected only if `M` is and `n ≥ 2`. Panics if `n == 0`.
pub fn product_with_sphere(manifold: &ManifoldData, n: u32) -> ManifoldData {
    assert!(n >= 1, "sphere dimension must be positive");
    let ring = manifold.ring.sphere_extension(n);
    ManifoldData::from_parts(
        format!("{}xS{}", manifold.name, n),
        manifold.spin,
        manifold.simply_connected && n >= 2,
        ring,
        manifold.pontryagin.clone(),
    )
}
