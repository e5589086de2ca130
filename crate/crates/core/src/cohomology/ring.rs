use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};

use super::linalg;
use crate::error::{Error, Result};
use crate::series::{factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub id: String,
    pub degree: u32,
}

/// A rational cohomology class, stored as its nonzero coordinates in a ring's basis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Class {
    coeffs: BTreeMap<usize, Rational>,
}

impl Class {
    pub fn zero() -> Self {
        Class::default()
    }

    pub fn basis(index: usize) -> Self {
        Class::from_terms([(index, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut c = Class::zero();
        for (i, v) in terms {
            c.add_term(i, &v);
        }
        c
    }

    pub fn coeff(&self, index: usize) -> Rational {
        self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&i, v)| (i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, index: usize, value: &Rational) {
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(index).or_insert_with(Rational::zero);
        *entry += value;
        if entry.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn add(&self, other: &Class) -> Class {
        let mut out = self.clone();
        for (i, v) in other.terms() {
            out.add_term(i, v);
        }
        out
    }

    pub fn sub(&self, other: &Class) -> Class {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Class {
        if c.is_zero() {
            return Class::zero();
        }
        Class {
            coeffs: self.coeffs.iter().map(|(&i, v)| (i, v * c)).collect(),
        }
    }

    fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }
}

/// Layout of a ring of the form `H*(M) ⊗ Q[u_k]/(u_k²)`.
///
/// Indices `0..base_len` are the base elements `x ⊗ 1`; index `base_len + i` is `u_k · x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereFactor {
    pub k: u32,
    pub base_len: usize,
}

/// A finite graded-commutative ring with a chosen top class.
///
/// Products involving the unit are implicit; every other nonzero product of basis
/// elements is stored explicitly, in both orders.
#[derive(Debug, Clone)]
pub struct Ring {
    basis: Vec<BasisElement>,
    index: HashMap<String, usize>,
    table: HashMap<(usize, usize), Class>,
    unit: usize,
    fundamental: usize,
    dimension: u32,
    sphere: Option<SphereFactor>,
}

fn sign(exponent: u32) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

impl Ring {
    /// Assembles a ring from already-validated parts.
    pub(crate) fn from_parts(
        basis: Vec<BasisElement>,
        table: HashMap<(usize, usize), Class>,
        unit: usize,
        fundamental: usize,
        dimension: u32,
    ) -> Ring {
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.id.clone(), i))
            .collect();
        Ring {
            basis,
            index,
            table,
            unit,
            fundamental,
            dimension,
            sphere: None,
        }
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id(&self, index: usize) -> &str {
        &self.basis[index].id
    }

    pub fn degree(&self, index: usize) -> u32 {
        self.basis[index].degree
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn fundamental_index(&self) -> usize {
        self.fundamental
    }

    pub fn unit(&self) -> Class {
        Class::basis(self.unit)
    }

    pub fn fundamental_class(&self) -> Class {
        Class::basis(self.fundamental)
    }

    pub fn sphere_factor(&self) -> Option<SphereFactor> {
        self.sphere
    }

    pub fn basis_of_degree(&self, degree: u32) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].degree == degree)
            .collect()
    }

    /// Stored products of non-unit basis pairs, as `(left, right, result)`.
    pub fn products(&self) -> impl Iterator<Item = (usize, usize, &Class)> {
        self.table.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn check(&self, class: &Class) -> Result<()> {
        match class.support().find(|&i| i >= self.basis.len()) {
            Some(i) => Err(Error::UnknownBasis(i)),
            None => Ok(()),
        }
    }

    /// The degree of a nonzero homogeneous class; `None` for zero or mixed classes.
    pub fn homogeneous_degree(&self, class: &Class) -> Option<u32> {
        let mut degrees = class.support().map(|i| self.degree(i));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The part of `class` lying in `degree`.
    pub fn component(&self, class: &Class, degree: u32) -> Class {
        Class {
            coeffs: class
                .coeffs
                .iter()
                .filter(|(&i, _)| self.degree(i) == degree)
                .map(|(&i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn basis_product(&self, a: usize, b: usize) -> Class {
        if a == self.unit {
            Class::basis(b)
        } else if b == self.unit {
            Class::basis(a)
        } else {
            self.table.get(&(a, b)).cloned().unwrap_or_default()
        }
    }

    /// Bilinear extension of the multiplication table.
    pub fn multiply(&self, a: &Class, b: &Class) -> Result<Class> {
        self.check(a)?;
        self.check(b)?;
        let mut out = Class::zero();
        for (i, ca) in a.terms() {
            for (j, cb) in b.terms() {
                let coeff = ca * cb;
                for (l, v) in self.basis_product(i, j).terms() {
                    out.add_term(l, &(v * &coeff));
                }
            }
        }
        Ok(out)
    }

    /// `⟨c, [X]⟩`: the coefficient of the fundamental class.
    pub fn evaluate(&self, class: &Class) -> Rational {
        class.coeff(self.fundamental)
    }

    /// Inverse of a total class `1 + n` with `n` in positive degrees: `Σ_r (-n)^r`.
    pub fn inverse_total_class(&self, total: &Class) -> Result<Class> {
        self.check(total)?;
        let constant = self.component(total, 0);
        if constant != self.unit() {
            return Err(Error::NonUnitConstantTerm);
        }
        let minus_nilpotent = total.sub(&constant).scale(&-Rational::one());
        let mut result = self.unit();
        let mut term = self.unit();
        for _ in 0..=self.dimension {
            term = self.multiply(&term, &minus_nilpotent)?;
            if term.is_zero() {
                return Ok(result);
            }
            result = result.add(&term);
        }
        Err(Error::Invariant(
            "total class did not invert within the ring's dimension".into(),
        ))
    }

    /// Solves `x · c = u_M` for `x` in degree `d - deg c`.
    ///
    /// When several solutions exist, returns the one with the smallest support, ties
    /// broken by the first support in basis order.
    pub fn find_dual_class(&self, class: &Class) -> Result<Class> {
        self.check(class)?;
        if class.is_zero() {
            return Err(Error::ZeroClass);
        }
        let r = self.homogeneous_degree(class).ok_or(Error::NotHomogeneous)?;
        let target_degree = i64::from(self.dimension) - i64::from(r);
        if target_degree < 0 {
            return Err(Error::DegeneratePairing {
                degree: target_degree,
            });
        }
        let unknowns = self.basis_of_degree(target_degree as u32);
        let rows = self.basis_of_degree(self.dimension);
        let columns: Vec<Class> = unknowns
            .iter()
            .map(|&i| self.multiply(&Class::basis(i), class))
            .collect::<Result<_>>()?;
        let matrix: Vec<Vec<Rational>> = rows
            .iter()
            .map(|&row| columns.iter().map(|col| col.coeff(row)).collect())
            .collect();
        let rhs: Vec<Rational> = rows
            .iter()
            .map(|&row| {
                if row == self.fundamental {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let x = linalg::solve_min_support(&matrix, &rhs, unknowns.len()).ok_or(
            Error::DegeneratePairing {
                degree: target_degree,
            },
        )?;
        Ok(Class::from_terms(unknowns.into_iter().zip(x)))
    }

    /// `H*(self) ⊗ Q[u_k]/(u_k²)` with fundamental class `u_k · u_M`.
    ///
    /// New basis ids are `s{k}` for `u_k` itself and `s{k}*{id}` for `u_k · id`.
    pub fn sphere_extension(&self, k: u32) -> Ring {
        let n = self.basis.len();
        let taken = |id: &str| self.index.contains_key(id);
        let mut prefix = format!("s{k}");
        while taken(&prefix) || self.basis.iter().any(|b| b.id.starts_with(&format!("{prefix}*"))) {
            prefix.push('\'');
        }
        let mut basis = self.basis.clone();
        for (i, b) in self.basis.iter().enumerate() {
            let id = if i == self.unit {
                prefix.clone()
            } else {
                format!("{prefix}*{}", b.id)
            };
            basis.push(BasisElement {
                id,
                degree: b.degree + k,
            });
        }
        let mut table = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                let base = self.basis_product(a, b);
                if base.is_zero() {
                    continue;
                }
                // (u^e a)(u^f b) = (-1)^{f k |a|} u^{e+f} ab
                for (e, f) in [(0usize, 0usize), (1, 0), (0, 1)] {
                    let left = a + e * n;
                    let right = b + f * n;
                    if left == self.unit || right == self.unit {
                        continue;
                    }
                    let s = sign(f as u32 * k * self.degree(a));
                    let shift = (e + f) * n;
                    let product = Class::from_terms(base.terms().map(|(l, v)| (l + shift, v * &s)));
                    table.insert((left, right), product);
                }
            }
        }
        let mut ring = Ring::from_parts(basis, table, self.unit, self.fundamental + n, self.dimension + k);
        ring.sphere = Some(SphereFactor { k, base_len: n });
        ring
    }

    fn require_sphere(&self) -> Result<SphereFactor> {
        self.sphere.ok_or(Error::NotSphereExtension)
    }

    /// `u_k · x` for a class `x` of the ring.
    pub fn sphere_multiple(&self, class: &Class) -> Result<Class> {
        let SphereFactor { base_len, .. } = self.require_sphere()?;
        self.multiply(&Class::basis(self.unit + base_len), class)
    }

    /// Whether `class` lies in `u_k · H*(M)`, the reduced cohomology of `S^k ∧ M_+`.
    pub fn is_sphere_multiple(&self, class: &Class) -> Result<bool> {
        let SphereFactor { base_len, .. } = self.require_sphere()?;
        self.check(class)?;
        Ok(class.support().all(|i| i >= base_len))
    }

    /// `ph_i = (-1)^{i+1} / (2i-1)! · p_i` for classes in `u_k · H*(M)`.
    ///
    /// All products in the reduced cohomology of `S^k ∧ M_+` vanish, so the
    /// decomposable correction terms of the character are zero.
    pub fn pontryagin_character(
        &self,
        classes: &BTreeMap<u32, Class>,
    ) -> Result<BTreeMap<u32, Class>> {
        let SphereFactor { k, .. } = self.require_sphere()?;
        let mut out = BTreeMap::new();
        for (&i, p) in classes {
            check_index(i)?;
            if !self.is_sphere_multiple(p)? {
                return Err(Error::NotSphereMultiple(k));
            }
            out.insert(i, p.scale(&ph_factor(i)));
        }
        Ok(out)
    }

    /// Inverse of [`Ring::pontryagin_character`]: recovers `p_i` from `ph_i`.
    pub fn pontryagin_from_character(
        &self,
        character: &BTreeMap<u32, Class>,
    ) -> Result<BTreeMap<u32, Class>> {
        let SphereFactor { k, .. } = self.require_sphere()?;
        let mut out = BTreeMap::new();
        for (&i, ph) in character {
            check_index(i)?;
            if !self.is_sphere_multiple(ph)? {
                return Err(Error::NotSphereMultiple(k));
            }
            out.insert(i, ph.scale(&(Rational::one() / ph_factor(i))));
        }
        Ok(out)
    }

    pub fn display_class(&self, class: &Class) -> String {
        if class.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (i, c)) in class.terms().enumerate() {
            let magnitude = c.abs();
            match (n, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if magnitude.is_one() {
                out.push_str(self.id(i));
            } else {
                out.push_str(&format!("{magnitude}·{}", self.id(i)));
            }
        }
        out
    }
}

fn check_index(i: u32) -> Result<()> {
    if i == 0 {
        return Err(Error::Invariant("Pontryagin indices start at 1".into()));
    }
    Ok(())
}

fn ph_factor(i: u32) -> Rational {
    let s = sign(i + 1);
    s / Rational::from_integer(factorial(2 * i - 1))
}
