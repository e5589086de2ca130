//! Partitions and multiplicative sequences.
//!
//! A characteristic series `Q(z)` determines polynomials `K_n(p_1, …, p_n)` through
//! `Π_i Q(y_i) = Σ_n K_n(e_1(y), …, e_n(y))`. We compute them through the logarithm:
//! `Σ_i log Q(y_i) = Σ_k a_k P_k(y)` where `P_k` are power sums, rewrite each `P_k` in
//! elementary symmetric polynomials with Newton's identities, then exponentiate.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::cohomology::ManifoldData;
use crate::error::Result;
use crate::series::{char_series, int, Genus, Rational};

/// A weakly decreasing tuple of positive integers.
///
/// The ordering is the canonical one used everywhere for output: by weight, then
/// lexicographically *descending* within a weight, so `{3} < {2,1} < {1,1,1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts `parts` descending and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Union of the parts of two partitions (the index of a product of monomials).
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Parts in ascending order as a JSON-style key, e.g. `"[1,2]"`.
    pub fn key(&self) -> String {
        let inner: Vec<String> = self.parts.iter().rev().map(u32::to_string).collect();
        format!("[{}]", inner.join(","))
    }

    /// Monomial in Pontryagin classes, e.g. `p1^2·p2`; the empty partition renders as `1`.
    pub fn monomial(&self) -> String {
        if self.parts.is_empty() {
            return "1".into();
        }
        let mut factors = Vec::new();
        let mut iter = self.parts.iter().rev().peekable();
        while let Some(&p) = iter.next() {
            let mut power = 1;
            while iter.peek() == Some(&&p) {
                iter.next();
                power += 1;
            }
            if power == 1 {
                factors.push(format!("p{p}"));
            } else {
                factors.push(format!("p{p}^{power}"));
            }
        }
        factors.join("·")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.key())
    }
}

/// All partitions of `n` in canonical (lexicographically descending) order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// A polynomial in `p_1, p_2, …` truncated above a fixed weight.
#[derive(Debug, Clone, Default)]
struct WeightedPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl WeightedPoly {
    fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Partition::empty(), c);
        }
        WeightedPoly { terms }
    }

    fn generator(i: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Partition::new(vec![i]), Rational::one());
        WeightedPoly { terms }
    }

    fn add_scaled(&mut self, other: &WeightedPoly, c: &Rational) {
        for (mono, coeff) in &other.terms {
            let entry = self.terms.entry(mono.clone()).or_insert_with(Rational::zero);
            *entry += coeff * c;
            if entry.is_zero() {
                self.terms.remove(mono);
            }
        }
    }

    fn mul(&self, other: &WeightedPoly, max_weight: u32) -> WeightedPoly {
        let mut out = WeightedPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.weight() + mb.weight() > max_weight {
                    continue;
                }
                let mono = ma.join(mb);
                let entry = out.terms.entry(mono.clone()).or_insert_with(Rational::zero);
                *entry += ca * cb;
                if entry.is_zero() {
                    out.terms.remove(&mono);
                }
            }
        }
        out
    }
}

/// Power sums `P_1, …, P_n` in the elementary symmetric polynomials `p_i := e_i`.
fn power_sums(n: u32) -> Vec<WeightedPoly> {
    let mut sums: Vec<WeightedPoly> = Vec::with_capacity(n as usize);
    for k in 1..=n {
        // P_k = Σ_{i<k} (-1)^{i-1} e_i P_{k-i} + (-1)^{k-1} k e_k
        let mut pk = WeightedPoly::default();
        for i in 1..k {
            let sign = if i % 2 == 1 { int(1) } else { int(-1) };
            let term = WeightedPoly::generator(i).mul(&sums[(k - i - 1) as usize], n);
            pk.add_scaled(&term, &sign);
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        pk.add_scaled(&WeightedPoly::generator(k), &int(sign * k as i64));
        sums.push(pk);
    }
    sums
}

fn compute_table(kind: Genus, n: u32) -> GenusTable {
    let log_q = char_series(kind, n as usize)
        .log()
        .expect("characteristic series has constant term 1");
    let mut exponent = WeightedPoly::default();
    for (k, pk) in power_sums(n).iter().enumerate() {
        exponent.add_scaled(pk, log_q.coeff(k + 1));
    }
    // exp(F) = Σ_r F^r / r!, F has no constant term so r ≤ n suffices.
    let mut total = WeightedPoly::constant(Rational::one());
    let mut power = WeightedPoly::constant(Rational::one());
    for r in 1..=n {
        power = power.mul(&exponent, n);
        let scale = Rational::one() / Rational::from_integer(crate::series::factorial(r));
        total.add_scaled(&power, &scale);
    }
    let coefficients = partitions(n)
        .into_iter()
        .map(|p| {
            let c = total.terms.get(&p).cloned().unwrap_or_else(Rational::zero);
            (p, c)
        })
        .collect();
    GenusTable {
        kind,
        degree: n,
        coefficients,
    }
}

/// Degree-`n` polynomial of a multiplicative sequence, `K_n = Σ_I c_I p_I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusTable {
    pub kind: Genus,
    pub degree: u32,
    /// Keyed by every partition of `degree`, in canonical order.
    pub coefficients: BTreeMap<Partition, Rational>,
}

impl GenusTable {
    /// `c_I`, zero when `I` is not a partition of `degree`.
    pub fn coefficient(&self, partition: &Partition) -> Rational {
        self.coefficients
            .get(partition)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Convenience lookup by parts in any order.
    pub fn coeff(&self, parts: &[u32]) -> Rational {
        self.coefficient(&Partition::new(parts.to_vec()))
    }

    /// Renders as `L_2 = 7/45·p2 − 1/45·p1^2`.
    pub fn render(&self) -> String {
        let mut out = format!("{}_{} =", self.kind, self.degree);
        let mut first = true;
        for (partition, c) in &self.coefficients {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "−" } else { "+" };
            if first {
                out.push(' ');
                if c.is_negative() {
                    out.push('−');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            first = false;
            out.push_str(&format!("{}·{}", c.abs(), partition.monomial()));
        }
        if first {
            out.push_str(" 0");
        }
        out
    }
}

type TableCache = Mutex<HashMap<(Genus, u32), Arc<GenusTable>>>;

fn cache() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The degree-`n` multiplicative-sequence polynomial of `kind`. Tables are memoized.
///
/// `n = 0` yields the constant polynomial 1.
pub fn genus_polynomial(kind: Genus, n: u32) -> Arc<GenusTable> {
    if let Some(table) = cache().lock().unwrap().get(&(kind, n)) {
        return Arc::clone(table);
    }
    // Computed outside the lock; a concurrent duplicate computation yields the same value.
    let table = Arc::new(compute_table(kind, n));
    let mut guard = cache().lock().unwrap();
    Arc::clone(guard.entry((kind, n)).or_insert(table))
}

/// Result of scanning genus tables for vanishing coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonzeroCertificate {
    pub kind: Genus,
    pub up_to: u32,
    /// Partitions whose coefficient vanishes; empty when the certificate holds.
    pub offending: Vec<Partition>,
}

impl NonzeroCertificate {
    pub fn holds(&self) -> bool {
        self.offending.is_empty()
    }
}

/// Checks that every coefficient of `K_1, …, K_{up_to}` is nonzero.
pub fn coefficients_all_nonzero(kind: Genus, up_to: u32) -> NonzeroCertificate {
    let offending = (1..=up_to)
        .flat_map(|n| {
            genus_polynomial(kind, n)
                .coefficients
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(p, _)| p.clone())
                .collect::<Vec<_>>()
        })
        .collect();
    NonzeroCertificate {
        kind,
        up_to,
        offending,
    }
}

/// `⟨K_{d/4}(p(TM)), [M]⟩`; zero when `d` is not divisible by 4.
pub fn genus_of_manifold(kind: Genus, manifold: &ManifoldData) -> Result<Rational> {
    let d = manifold.dimension();
    if !d.is_multiple_of(4) {
        return Ok(Rational::zero());
    }
    let table = genus_polynomial(kind, d / 4);
    let mut total = Rational::zero();
    for (partition, c) in &table.coefficients {
        total += c * manifold.pontryagin_number(partition)?;
    }
    Ok(total)
}
