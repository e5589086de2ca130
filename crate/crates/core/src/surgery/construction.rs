//! A normal invariant over `D^k × M` whose stable bundle has prescribed Pontryagin classes.
//!
//! With `m = (d+k)/4` and `j` the smallest index with `p_j(TM) ≠ 0`, the extended bundle
//! `ξ'` over `S^k × M` gets exactly two higher Pontryagin classes,
//!
//! ```text
//! p_{m-j}(ξ') = -b · u_k·x        b = (-1)^{m-j+1} (2m-2j)! λ
//! p_m(ξ')     = -c·A · u_k·u_M    c = (-1)^{m+1} (2m)! λ
//! ```
//!
//! where `x · p_j(TM) = u_M`. The only nonzero Pontryagin numbers of `TM ⊕ -ξ'` are then
//! `μb` at `{j, m-j}` and `b + cA` at `{m}`, with `μ = 2` when `j = m - j` (the class
//! `p_j` appears twice in the monomial) and `μ = 1` otherwise. The surgery obstruction
//! is the signature of the total space without the `1/8` normalization,
//! `(μ s_{j,m-j} + s_m) b + s_m c A`, which vanishes for a unique `A`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::cohomology::{Class, ManifoldData, Ring};
use crate::error::{Error, Result};
use crate::multseq::{genus_polynomial, partitions, Partition};
use crate::series::{factorial, Genus, Rational};

/// Least `i ≥ 1` with `p_i(TM) ≠ 0`.
pub fn minimal_pontryagin_index(manifold: &ManifoldData) -> Option<u32> {
    manifold
        .pontryagin_classes()
        .iter()
        .find(|(_, c)| !c.is_zero())
        .map(|(&i, _)| i)
}

#[derive(Debug, Clone)]
pub struct ConstructionInput {
    pub manifold: ManifoldData,
    pub k: u32,
    /// The nonzero multiple needed to lift to `G/O`. Every rational output is
    /// homogeneous in it and the solved `A` does not depend on it.
    pub lambda: i64,
}

impl ConstructionInput {
    pub fn new(manifold: ManifoldData, k: u32) -> Self {
        ConstructionInput {
            manifold,
            k,
            lambda: 1,
        }
    }

    pub fn with_lambda(mut self, lambda: i64) -> Self {
        self.lambda = lambda;
        self
    }
}

fn signed_factorial(exponent: u32, n: u32, lambda: i64) -> Rational {
    let mut value = Rational::from_integer(factorial(n) * BigInt::from(lambda));
    if exponent % 2 == 1 {
        value = -value;
    }
    value
}

#[derive(Debug, Clone)]
pub struct NormalInvariantBlueprint {
    pub manifold: ManifoldData,
    pub k: u32,
    pub lambda: i64,
    pub m: u32,
    pub j: u32,
    /// Dual class in `H^{d-4j}(M)` with `x · p_j(TM) = u_M`.
    pub x: Class,
    /// `H*(S^k × M)`, with `M`'s basis embedded as the first block.
    pub extension: Ring,
    /// `p_{m-j}(ξ')`, a class in [`NormalInvariantBlueprint::extension`].
    pub p_mj_xi: Class,
    /// Scalar `-c` multiplying `A · u_k·u_M` in `p_m(ξ')`.
    pub p_m_xi_coeff: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// Assembles the blueprint for `input`, checking every precondition of the construction.
pub fn build_blueprint(input: &ConstructionInput) -> Result<NormalInvariantBlueprint> {
    if input.k == 0 {
        return Err(Error::ZeroK);
    }
    if input.lambda == 0 {
        return Err(Error::ZeroLambda);
    }
    let manifold = &input.manifold;
    let total = manifold.dimension() + input.k;
    if !total.is_multiple_of(4) {
        return Err(Error::Parity(total));
    }
    let m = total / 4;
    let j = minimal_pontryagin_index(manifold).ok_or(Error::NoPontryagin)?;
    if j >= m {
        return Err(Error::DegenerateRange { j, m });
    }
    let x = manifold.find_dual_class(&manifold.pontryagin(j))?;
    let b = signed_factorial(m - j + 1, 2 * m - 2 * j, input.lambda);
    let c = signed_factorial(m + 1, 2 * m, input.lambda);
    let extension = manifold.ring().sphere_extension(input.k);
    let p_mj_xi = extension.sphere_multiple(&x)?.scale(&-b.clone());
    Ok(NormalInvariantBlueprint {
        manifold: manifold.clone(),
        k: input.k,
        lambda: input.lambda,
        m,
        j,
        x,
        extension,
        p_mj_xi,
        p_m_xi_coeff: -c.clone(),
        b,
        c,
    })
}

/// The value of `A` that kills the surgery obstruction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedA {
    pub value: Rational,
    /// Set when `μ s_{j,m-j} + s_m = 0`, so the only solution is `A = 0`.
    pub degenerate: bool,
}

impl NormalInvariantBlueprint {
    /// `{j, m-j}` as a partition.
    pub fn mixed_partition(&self) -> Partition {
        Partition::new(vec![self.j, self.m - self.j])
    }

    pub fn top_partition(&self) -> Partition {
        Partition::new(vec![self.m])
    }

    /// 2 when `j = m - j`, else 1.
    pub fn multiplicity(&self) -> Rational {
        if 2 * self.j == self.m {
            Rational::from_integer(2.into())
        } else {
            Rational::one()
        }
    }

    fn l_coefficients(&self) -> (Rational, Rational) {
        let table = genus_polynomial(Genus::L, self.m);
        (
            table.coefficient(&self.mixed_partition()),
            table.coefficient(&self.top_partition()),
        )
    }

    /// `p_m(ξ')` for a given `A`.
    pub fn p_m_xi(&self, a: &Rational) -> Result<Class> {
        let top = self.extension.fundamental_class();
        Ok(top.scale(&(&self.p_m_xi_coeff * a)))
    }

    /// `p(ξ') = 1 + p_{m-j}(ξ') + p_m(ξ')`.
    pub fn xi_total_class(&self, a: &Rational) -> Result<Class> {
        Ok(self
            .extension
            .unit()
            .add(&self.p_mj_xi)
            .add(&self.p_m_xi(a)?))
    }

    /// `p(TM ⊕ -ξ') = p(TM) · p(ξ')^{-1}` in `H*(S^k × M)`.
    pub fn stable_total_class(&self, a: &Rational) -> Result<Class> {
        let inverse = self.extension.inverse_total_class(&self.xi_total_class(a)?)?;
        self.extension
            .multiply(&self.manifold.total_pontryagin_class(), &inverse)
    }

    /// `σ(A) = (μ s_{j,m-j} + s_m) b + s_m c A`.
    pub fn surgery_obstruction(&self, a: &Rational) -> Rational {
        let (s_mixed, s_top) = self.l_coefficients();
        (self.multiplicity() * s_mixed + &s_top) * &self.b + s_top * &self.c * a
    }

    pub fn solve_a(&self) -> Result<SolvedA> {
        let (s_mixed, s_top) = self.l_coefficients();
        if s_top.is_zero() {
            return Err(Error::Invariant(format!(
                "L-coefficient s_{} vanishes",
                self.m
            )));
        }
        let numerator = self.multiplicity() * s_mixed + &s_top;
        let value = -(&numerator * &self.b) / (s_top * &self.c);
        Ok(SolvedA {
            degenerate: numerator.is_zero(),
            value,
        })
    }

    /// Every elementary Pontryagin number `⟨p_I(TM ⊕ -ξ'), [S^k × M]⟩`, `I ⊢ m`, by full
    /// expansion in the cohomology ring of `S^k × M`.
    pub fn pontryagin_numbers(&self, a: &Rational) -> Result<BTreeMap<Partition, Rational>> {
        let ring = &self.extension;
        let total = self.stable_total_class(a)?;
        let classes: Vec<Class> = (0..=self.m).map(|n| ring.component(&total, 4 * n)).collect();
        let mut out = BTreeMap::new();
        for partition in partitions(self.m) {
            let mut product = ring.unit();
            for &part in partition.parts() {
                product = ring.multiply(&product, &classes[part as usize])?;
            }
            out.insert(partition, ring.evaluate(&product));
        }
        Ok(out)
    }

    /// The census predicted from the blueprint scalars alone.
    pub fn closed_form_census(&self, a: &Rational) -> BTreeMap<Partition, Rational> {
        let mixed = self.mixed_partition();
        let top = self.top_partition();
        partitions(self.m)
            .into_iter()
            .map(|p| {
                let v = if p == mixed {
                    self.multiplicity() * &self.b
                } else if p == top {
                    &self.b + &self.c * a
                } else {
                    Rational::zero()
                };
                (p, v)
            })
            .collect()
    }

    /// `Σ_I c_I · numbers[I]` for the genus `kind` of the total space.
    pub fn genus_total_space(&self, kind: Genus, a: &Rational) -> Result<Rational> {
        let table = genus_polynomial(kind, self.m);
        let numbers = self.pontryagin_numbers(a)?;
        Ok(numbers
            .iter()
            .map(|(p, v)| table.coefficient(p) * v)
            .fold(Rational::zero(), |acc, t| acc + t))
    }

    pub fn ahat_total_space(&self, a: &Rational) -> Result<Rational> {
        self.genus_total_space(Genus::Ahat, a)
    }

    /// `μ b (â_{j,m-j} - â_m s_{j,m-j} / s_m)`, the Â-genus at the solved `A`.
    pub fn ahat_closed_form(&self) -> Rational {
        let ahat = genus_polynomial(Genus::Ahat, self.m);
        let (s_mixed, s_top) = self.l_coefficients();
        let a_mixed = ahat.coefficient(&self.mixed_partition());
        let a_top = ahat.coefficient(&self.top_partition());
        self.multiplicity() * &self.b * (a_mixed - a_top * s_mixed / s_top)
    }
}

pub fn surgery_obstruction(bp: &NormalInvariantBlueprint, a: &Rational) -> Rational {
    bp.surgery_obstruction(a)
}

pub fn solve_a(bp: &NormalInvariantBlueprint) -> Result<SolvedA> {
    bp.solve_a()
}

pub fn pontryagin_numbers(
    bp: &NormalInvariantBlueprint,
    a: &Rational,
) -> Result<BTreeMap<Partition, Rational>> {
    bp.pontryagin_numbers(a)
}

pub fn ahat_total_space(bp: &NormalInvariantBlueprint, a: &Rational) -> Result<Rational> {
    bp.ahat_total_space(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::fixtures;
    use crate::series::{int, rat};

    fn hp2_blueprint(lambda: i64) -> NormalInvariantBlueprint {
        build_blueprint(&ConstructionInput::new(fixtures::hp2(), 4).with_lambda(lambda)).unwrap()
    }

    #[test]
    fn minimal_indices() {
        assert_eq!(minimal_pontryagin_index(&fixtures::hp2()), Some(1));
        assert_eq!(minimal_pontryagin_index(&fixtures::k3_times_sphere(4)), Some(1));
    }

    #[test]
    fn hp2_blueprint_scalars() {
        let bp = hp2_blueprint(1);
        assert_eq!((bp.m, bp.j), (3, 1));
        assert_eq!(bp.b, int(-24));
        assert_eq!(bp.c, int(720));
        assert_eq!(bp.x, fixtures::hp2().class("u").unwrap().scale(&rat(1, 2)));
    }

    #[test]
    fn hp2_obstruction_and_solution() {
        let bp = hp2_blueprint(1);
        assert_eq!(bp.surgery_obstruction(&int(0)), rat(-56, 45));
        let a = bp.solve_a().unwrap();
        assert_eq!(a.value, rat(49, 1860));
        assert!(!a.degenerate);
        assert!(bp.surgery_obstruction(&a.value).is_zero());
        assert_eq!(hp2_blueprint(2).surgery_obstruction(&int(0)), rat(-112, 45));
        assert_eq!(hp2_blueprint(5).solve_a().unwrap().value, a.value);
    }

    #[test]
    fn hp2_census() {
        let bp = hp2_blueprint(1);
        let a = bp.solve_a().unwrap().value;
        let numbers = bp.pontryagin_numbers(&a).unwrap();
        assert_eq!(numbers[&Partition::new(vec![2, 1])], int(-24));
        assert_eq!(numbers[&Partition::new(vec![3])], rat(-156, 31));
        assert_eq!(numbers[&Partition::new(vec![1, 1, 1])], int(0));
        assert_eq!(numbers, bp.closed_form_census(&a));
        let at_zero = bp.pontryagin_numbers(&int(0)).unwrap();
        assert_eq!(at_zero[&Partition::new(vec![3])], int(-24));
    }

    #[test]
    fn hp2_ahat() {
        let bp = hp2_blueprint(1);
        let a = bp.solve_a().unwrap().value;
        let expected = int(-24) * (rat(11, 241920) - rat(13, 60480 * 62));
        let ahat = bp.ahat_total_space(&a).unwrap();
        assert_eq!(ahat, expected);
        assert_eq!(ahat, bp.ahat_closed_form());
        assert!(!ahat.is_zero());
    }

    #[test]
    fn blueprint_errors() {
        let parity = build_blueprint(&ConstructionInput::new(fixtures::hp2(), 3)).unwrap_err();
        assert_eq!(parity, Error::Parity(11));
        assert_eq!(parity.to_string(), "d+k = 11 not divisible by 4");
        let zero_lambda = ConstructionInput::new(fixtures::hp2(), 4).with_lambda(0);
        assert_eq!(build_blueprint(&zero_lambda).unwrap_err(), Error::ZeroLambda);
    }
}
