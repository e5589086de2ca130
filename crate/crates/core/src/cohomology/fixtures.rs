//! Descriptors shipped with the crate.
//!
//! * `CP2`: `p_1 = 3h²`, not spin.
//! * `HP2`: `p_1 = 2u`, `p_2 = 7u²`.
//! * `K3`: intersection form `3H ⊕ 2(−E8)` on `H²`, `⟨p_1, [K3]⟩ = −48`, spin.

use super::{parse_manifold, product_with_sphere, ManifoldData};

pub const CP2_JSON: &str = include_str!("../../fixtures/cp2.json");
pub const HP2_JSON: &str = include_str!("../../fixtures/hp2.json");
pub const K3_JSON: &str = include_str!("../../fixtures/k3.json");

fn load(text: &str) -> ManifoldData {
    parse_manifold(text).expect("shipped fixture is valid")
}

pub fn cp2() -> ManifoldData {
    load(CP2_JSON)
}

pub fn hp2() -> ManifoldData {
    load(HP2_JSON)
}

pub fn k3() -> ManifoldData {
    load(K3_JSON)
}

/// `K3 × S^n`.
pub fn k3_times_sphere(n: u32) -> ManifoldData {
    product_with_sphere(&k3(), n)
}

/// Looks a fixture up by case-insensitive name (`cp2`, `hp2`, `k3`).
pub fn by_name(name: &str) -> Option<ManifoldData> {
    match name.to_ascii_lowercase().as_str() {
        "cp2" => Some(cp2()),
        "hp2" => Some(hp2()),
        "k3" => Some(k3()),
        _ => None,
    }
}

pub fn all() -> Vec<ManifoldData> {
    vec![cp2(), hp2(), k3()]
}
