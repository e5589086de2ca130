//! JSON manifold descriptors.
//!
//! ```json
//! {
//!   "name": "HP2", "dimension": 8, "spin": true, "simply_connected": true,
//!   "basis": [{"id": "1", "degree": 0}, {"id": "u", "degree": 4}, {"id": "u2", "degree": 8}],
//!   "products": [{"left": "u", "right": "u", "result": {"u2": "1"}}],
//!   "fundamental_class": "u2",
//!   "pontryagin": {"1": {"u": "2"}, "2": {"u2": "7"}}
//! }
//! ```
//!
//! Products not listed are zero, products with the unit are implicit, and a product
//! listed in one order determines the other by graded commutativity. Rational
//! literals are strings `"p/q"`.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::ring::{BasisElement, Class, Ring};
use super::ManifoldData;
use crate::error::{Error, Result};
use crate::series::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BasisEntry {
    pub id: String,
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, Value>,
}

/// The raw, unvalidated document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Descriptor {
    pub name: String,
    pub dimension: u32,
    pub spin: bool,
    pub simply_connected: bool,
    pub basis: Vec<BasisEntry>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
    pub fundamental_class: String,
    #[serde(default)]
    pub pontryagin: BTreeMap<String, BTreeMap<String, Value>>,
}

/// Parses and validates a descriptor document.
pub fn parse_manifold(text: &str) -> Result<ManifoldData> {
    let descriptor: Descriptor = serde_json::from_str(text).map_err(|e| {
        Error::descriptor(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    descriptor.validate()
}

fn literal(location: &str, value: &Value) -> Result<Rational> {
    match value {
        Value::String(s) => parse_rational(s).map_err(|m| Error::descriptor(location, m)),
        other => Err(Error::descriptor(
            location,
            format!("rational literals must be strings \"p/q\", found {other}"),
        )),
    }
}

fn sign_for(degrees: (u32, u32)) -> Rational {
    if (degrees.0 * degrees.1).is_multiple_of(2) {
        Rational::from_integer(1.into())
    } else {
        Rational::from_integer((-1).into())
    }
}

impl Descriptor {
    pub fn validate(&self) -> Result<ManifoldData> {
        let d = self.dimension;
        if d == 0 {
            return Err(Error::descriptor("dimension", "must be positive"));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut basis = Vec::with_capacity(self.basis.len());
        for (i, entry) in self.basis.iter().enumerate() {
            let loc = format!("basis[{i}]");
            if entry.id.is_empty() {
                return Err(Error::descriptor(format!("{loc}.id"), "empty id"));
            }
            if index.insert(entry.id.as_str(), i).is_some() {
                return Err(Error::descriptor(
                    format!("{loc}.id"),
                    format!("duplicate id '{}'", entry.id),
                ));
            }
            if entry.degree > d {
                return Err(Error::descriptor(
                    format!("{loc}.degree"),
                    format!("degree {} exceeds dimension {d}", entry.degree),
                ));
            }
            basis.push(BasisElement {
                id: entry.id.clone(),
                degree: entry.degree,
            });
        }
        let units: Vec<usize> = (0..basis.len()).filter(|&i| basis[i].degree == 0).collect();
        let unit = match units.as_slice() {
            [u] => *u,
            [] => return Err(Error::descriptor("basis", "missing unit (no degree-0 element)")),
            _ => {
                return Err(Error::descriptor(
                    "basis",
                    "more than one degree-0 element (the manifold must be connected)",
                ))
            }
        };
        let lookup = |loc: &str, id: &str| -> Result<usize> {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::descriptor(loc, format!("unknown basis id '{id}'")))
        };

        let mut recorded: HashMap<(usize, usize), (usize, Class)> = HashMap::new();
        for (n, entry) in self.products.iter().enumerate() {
            let loc = format!("products[{n}]");
            let a = lookup(&format!("{loc}.left"), &entry.left)?;
            let b = lookup(&format!("{loc}.right"), &entry.right)?;
            let target = basis[a].degree + basis[b].degree;
            let mut result = Class::zero();
            for (id, value) in &entry.result {
                let rloc = format!("{loc}.result.{id}");
                let i = lookup(&rloc, id)?;
                if basis[i].degree != target {
                    return Err(Error::descriptor(
                        rloc,
                        format!(
                            "grading violation: {} has degree {} but {}·{} has degree {target}",
                            id, basis[i].degree, entry.left, entry.right
                        ),
                    ));
                }
                result = result.add(&Class::basis(i).scale(&literal(&rloc, value)?));
            }
            if a == unit || b == unit {
                let other = if a == unit { b } else { a };
                if result != Class::basis(other) {
                    return Err(Error::descriptor(
                        loc,
                        "products with the unit must be the identity",
                    ));
                }
                continue;
            }
            if let Some((first, _)) = recorded.get(&(a, b)) {
                return Err(Error::descriptor(
                    loc,
                    format!("duplicate product (already given in products[{first}])"),
                ));
            }
            if a == b && basis[a].degree % 2 == 1 && !result.is_zero() {
                return Err(Error::descriptor(
                    loc,
                    "graded commutativity violated: the square of an odd-degree class must vanish",
                ));
            }
            let swapped = result.scale(&sign_for((basis[a].degree, basis[b].degree)));
            if let Some((first, existing)) = recorded.get(&(b, a)) {
                if *existing != swapped {
                    return Err(Error::descriptor(
                        loc,
                        format!("graded commutativity violated against products[{first}]"),
                    ));
                }
            }
            recorded.insert((a, b), (n, result));
        }
        let mut table: HashMap<(usize, usize), Class> = HashMap::new();
        for (&(a, b), (_, result)) in &recorded {
            if result.is_zero() {
                continue;
            }
            table.insert((a, b), result.clone());
            table.entry((b, a)).or_insert_with(|| {
                result.scale(&sign_for((basis[a].degree, basis[b].degree)))
            });
        }

        let fundamental = lookup("fundamental_class", &self.fundamental_class)?;
        if basis[fundamental].degree != d {
            return Err(Error::descriptor(
                "fundamental_class",
                format!(
                    "'{}' has degree {} but the dimension is {d}",
                    self.fundamental_class, basis[fundamental].degree
                ),
            ));
        }

        let mut pontryagin = BTreeMap::new();
        for (key, entries) in &self.pontryagin {
            let loc = format!("pontryagin.{key}");
            let i: u32 = key
                .parse()
                .ok()
                .filter(|&i| i >= 1)
                .ok_or_else(|| Error::descriptor(&loc, "index must be a positive integer"))?;
            if 4 * i > d {
                return Err(Error::descriptor(
                    loc,
                    format!("pontryagin degree: p_{i} lives in degree {} > dimension {d}", 4 * i),
                ));
            }
            let mut class = Class::zero();
            for (id, value) in entries {
                let eloc = format!("{loc}.{id}");
                let b = lookup(&eloc, id)?;
                if basis[b].degree != 4 * i {
                    return Err(Error::descriptor(
                        eloc,
                        format!(
                            "pontryagin degree: p_{i} must lie in degree {} but '{id}' has degree {}",
                            4 * i,
                            basis[b].degree
                        ),
                    ));
                }
                class = class.add(&Class::basis(b).scale(&literal(&eloc, value)?));
            }
            pontryagin.insert(i, class);
        }

        let ring = Ring::from_parts(basis, table, unit, fundamental, d);
        Ok(ManifoldData::from_parts(
            self.name.clone(),
            self.spin,
            self.simply_connected,
            ring,
            pontryagin,
        ))
    }

    /// The canonical descriptor of `manifold`: each product listed once, left index first.
    pub fn from_manifold(manifold: &ManifoldData) -> Descriptor {
        let ring = manifold.ring();
        let class_map = |c: &Class| -> BTreeMap<String, Value> {
            c.terms()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (ring.id(i).to_string(), Value::String(v.to_string())))
                .collect()
        };
        let mut pairs: Vec<(usize, usize, &Class)> =
            ring.products().filter(|(a, b, _)| a <= b).collect();
        pairs.sort_by_key(|&(a, b, _)| (a, b));
        Descriptor {
            name: manifold.name.clone(),
            dimension: ring.dimension(),
            spin: manifold.spin,
            simply_connected: manifold.simply_connected,
            basis: ring
                .basis()
                .iter()
                .map(|b| BasisEntry {
                    id: b.id.clone(),
                    degree: b.degree,
                })
                .collect(),
            products: pairs
                .into_iter()
                .map(|(a, b, c)| ProductEntry {
                    left: ring.id(a).to_string(),
                    right: ring.id(b).to_string(),
                    result: class_map(c),
                })
                .collect(),
            fundamental_class: ring.id(ring.fundamental_index()).to_string(),
            pontryagin: manifold
                .pontryagin_classes()
                .iter()
                .map(|(i, c)| (i.to_string(), class_map(c)))
                .collect(),
        }
    }
}
