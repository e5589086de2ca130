//! Test-only oracles, independent of the library's computation paths.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, HashMap};

use genus_forge::series::{factorial, int, rat};
use genus_forge::{parse_manifold, Genus, ManifoldData, Partition, PowerSeries, Rational};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::{json, Value};

/// Characteristic series by dividing explicit factorial expansions:
/// `√z/tanh √z = (Σ z^n/(2n)!) / (Σ z^n/(2n+1)!)`, `(√z/2)/sinh(√z/2) = 1 / Σ (z/4)^n/(2n+1)!`.
pub fn char_series_by_division(kind: Genus, order: usize) -> PowerSeries {
    let inv_fact = |n: u32| Rational::one() / Rational::from_integer(factorial(n));
    let sinh_over = |scale: &Rational| {
        PowerSeries::new(
            (0..=order)
                .map(|n| inv_fact(2 * n as u32 + 1) * num_traits::pow(scale.clone(), n))
                .collect(),
        )
    };
    match kind {
        Genus::L => {
            let cosh = PowerSeries::new((0..=order).map(|n| inv_fact(2 * n as u32)).collect());
            cosh.div(&sinh_over(&int(1))).unwrap()
        }
        Genus::Ahat => PowerSeries::one(order).div(&sinh_over(&rat(1, 4))).unwrap(),
    }
}

/// Brute-force partitions: every weakly decreasing tuple found by filtering all
/// compositions of `n`.
pub fn partitions_by_compositions(n: u32) -> Vec<Vec<u32>> {
    fn compositions(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut parts: Vec<Vec<u32>> = compositions(n)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    parts.sort();
    parts
}

type Poly = HashMap<Vec<u32>, Rational>;

fn poly_mul(a: &Poly, b: &Poly, max_degree: u32) -> Poly {
    let mut out: Poly = HashMap::new();
    for (ea, ca) in a {
        let da: u32 = ea.iter().sum();
        for (eb, cb) in b {
            if da + eb.iter().sum::<u32>() > max_degree {
                continue;
            }
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn elementary(i: usize, vars: usize) -> Poly {
    fn go(start: usize, left: usize, vars: usize, cur: &mut Vec<u32>, out: &mut Poly) {
        if left == 0 {
            out.insert(cur.clone(), Rational::one());
            return;
        }
        for v in start..vars {
            cur[v] = 1;
            go(v + 1, left - 1, vars, cur, out);
            cur[v] = 0;
        }
    }
    let mut out = HashMap::new();
    go(0, i, vars, &mut vec![0; vars], &mut out);
    out
}

/// Genus polynomial by expanding `Π_{i ≤ roots} Q(y_i)` in `roots` variables and
/// rewriting the degree-`n` part in elementary symmetric polynomials by repeatedly
/// cancelling the lexicographically leading monomial.
pub fn genus_by_formal_roots(kind: Genus, n: u32, roots: usize) -> BTreeMap<Partition, Rational> {
    let q = char_series_by_division(kind, n as usize);
    let mut product: Poly = HashMap::from([(vec![0; roots], Rational::one())]);
    for v in 0..roots {
        let factor: Poly = (0..=n)
            .map(|t| {
                let mut e = vec![0; roots];
                e[v] = t;
                (e, q.coeff(t as usize).clone())
            })
            .collect();
        product = poly_mul(&product, &factor, n);
    }
    let mut rest: Poly = product
        .into_iter()
        .filter(|(e, _)| e.iter().sum::<u32>() == n)
        .collect();
    let es: Vec<Poly> = (0..=roots).map(|i| elementary(i, roots)).collect();
    let mut out = BTreeMap::new();
    while let Some(lead) = rest.keys().max().cloned() {
        let c = rest[&lead].clone();
        let mut parts = Vec::new();
        let mut term: Poly = HashMap::from([(vec![0; roots], c.clone())]);
        for i in 0..roots {
            let next = if i + 1 < roots { lead[i + 1] } else { 0 };
            let mult = lead[i] - next;
            for _ in 0..mult {
                parts.push(i as u32 + 1);
                term = poly_mul(&term, &es[i + 1], n);
            }
        }
        for (e, v) in term {
            let entry = rest.entry(e.clone()).or_insert_with(Rational::zero);
            *entry -= v;
            if entry.is_zero() {
                rest.remove(&e);
            }
        }
        out.insert(Partition::new(parts), c);
    }
    out
}

/// Signature of the middle-degree intersection form, by exact symmetric elimination.
pub fn intersection_signature(m: &ManifoldData) -> i64 {
    let ring = m.ring();
    let d = ring.dimension();
    assert!(d.is_multiple_of(4));
    let mid = ring.basis_of_degree(d / 2);
    let n = mid.len();
    let mut g: Vec<Vec<Rational>> = mid
        .iter()
        .map(|&a| {
            mid.iter()
                .map(|&b| ring.evaluate(&ring.basis_product(a, b)))
                .collect()
        })
        .collect();
    let (mut pos, mut neg) = (0, 0);
    let mut alive: Vec<usize> = (0..n).collect();
    while !alive.is_empty() {
        let pivot = alive.iter().copied().find(|&i| !g[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                let pair = alive.iter().flat_map(|&i| alive.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !g[i][j].is_zero());
                match pair {
                    // e_i += e_j makes g_ii = 2 g_ij ≠ 0
                    Some((i, j)) => {
                        for k in 0..n {
                            let v = g[j][k].clone();
                            g[i][k] += v;
                        }
                        for k in 0..n {
                            let v = g[k][j].clone();
                            g[k][i] += v;
                        }
                        i
                    }
                    None => break,
                }
            }
        };
        let pivot_value = g[p][p].clone();
        if pivot_value.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        alive.retain(|&i| i != p);
        for &i in &alive {
            let f = &g[i][p] / &pivot_value;
            for &j in &alive {
                let delta = &f * &g[p][j];
                g[i][j] -= delta;
            }
        }
        for &i in &alive {
            g[i][p] = Rational::zero();
            g[p][i] = Rational::zero();
        }
    }
    pos - neg
}

fn lit(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn random_nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=5);
        if num != 0 {
            return rat(num, den);
        }
    }
}

fn random_maybe_zero<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_bool(0.3) {
        Rational::zero()
    } else {
        random_nonzero(rng)
    }
}

/// A rescaled truncated polynomial ring `Q[a]/(a^{r+1})`, `|a| = 4`, with random
/// Pontryagin classes `p_i = β_i e_i`, optionally times a sphere `S^n`.
fn truncated_polynomial<R: Rng>(rng: &mut R, r: u32, sphere: Option<u32>) -> Value {
    let scale: Vec<Rational> = (0..=r)
        .map(|i| if i == 0 { int(1) } else { random_nonzero(rng) })
        .collect();
    let mut basis = vec![];
    let mut ids = vec![];
    for i in 0..=r {
        let id = if i == 0 { "1".to_string() } else { format!("e{i}") };
        basis.push(json!({"id": id, "degree": 4 * i}));
        ids.push(id);
    }
    let mut products = vec![];
    for i in 1..=r {
        for l in i..=r {
            if i + l <= r {
                let c = &scale[i as usize] * &scale[l as usize] / &scale[(i + l) as usize];
                products.push(json!({"left": ids[i as usize], "right": ids[l as usize],
                    "result": {ids[(i + l) as usize].clone(): lit(&c)}}));
            }
        }
    }
    let mut pontryagin = serde_json::Map::new();
    let mut betas: Vec<Rational> = (1..=r).map(|_| random_maybe_zero(rng)).collect();
    if betas.iter().all(Zero::is_zero) {
        let i = rng.gen_range(0..r as usize);
        betas[i] = random_nonzero(rng);
    }
    for (i, beta) in betas.iter().enumerate() {
        if !beta.is_zero() {
            pontryagin.insert((i + 1).to_string(), json!({ids[i + 1].clone(): lit(beta)}));
        }
    }
    let mut dimension = 4 * r;
    let mut fundamental = ids[r as usize].clone();
    if let Some(n) = sphere {
        dimension += n;
        let sid = |i: usize| if i == 0 { "s".to_string() } else { format!("s.{}", ids[i]) };
        for i in 0..=r as usize {
            basis.push(json!({"id": sid(i), "degree": 4 * i as u32 + n}));
        }
        // s·e_i = s.e_i and e_i·s.e_l = (e_i e_l) shifted; all e_i have even degree.
        for i in 1..=r as usize {
            products.push(json!({"left": "s", "right": ids[i], "result": {sid(i): "1"}}));
        }
        for i in 1..=r as usize {
            for l in 1..=r as usize {
                if i + l <= r as usize {
                    let c = &scale[i] * &scale[l] / &scale[i + l];
                    products.push(json!({"left": ids[i], "right": sid(l),
                        "result": {sid(i + l): lit(&c)}}));
                }
            }
        }
        fundamental = sid(r as usize);
    }
    json!({
        "name": format!("P{r}{}", sphere.map(|n| format!("xS{n}")).unwrap_or_default()),
        "dimension": dimension,
        "spin": rng.gen_bool(0.5),
        "simply_connected": sphere != Some(1),
        "basis": basis,
        "products": products,
        "fundamental_class": fundamental,
        "pontryagin": pontryagin,
    })
}

/// `d = 8q` with three middle classes of degree `4q` and a random symmetric form.
fn middle_form<R: Rng>(rng: &mut R, q: u32) -> Value {
    loop {
        let g: Vec<Vec<Rational>> = {
            let mut g = vec![vec![Rational::zero(); 3]; 3];
            for a in 0..3 {
                for b in a..3 {
                    let v = random_maybe_zero(rng);
                    g[a][b] = v.clone();
                    g[b][a] = v;
                }
            }
            g
        };
        let r: Vec<Rational> = (0..3).map(|_| random_maybe_zero(rng)).collect();
        let gr: Vec<Rational> = (0..3)
            .map(|a| (0..3).fold(Rational::zero(), |acc, b| acc + &g[a][b] * &r[b]))
            .collect();
        if gr.iter().all(Zero::is_zero) {
            continue;
        }
        let mut products = vec![];
        for a in 0..3 {
            for b in a..3 {
                if !g[a][b].is_zero() {
                    products.push(json!({"left": format!("y{a}"), "right": format!("y{b}"),
                        "result": {"t": lit(&g[a][b])}}));
                }
            }
        }
        let mut p_low = serde_json::Map::new();
        for (a, v) in r.iter().enumerate() {
            if !v.is_zero() {
                p_low.insert(format!("y{a}"), lit(v));
            }
        }
        let mut pontryagin = serde_json::Map::new();
        pontryagin.insert(q.to_string(), Value::Object(p_low));
        if rng.gen_bool(0.5) {
            pontryagin.insert((2 * q).to_string(), json!({"t": lit(&random_nonzero(rng))}));
        }
        return json!({
            "name": format!("F{q}"),
            "dimension": 8 * q,
            "spin": true,
            "simply_connected": true,
            "basis": [{"id": "1", "degree": 0}, {"id": "y0", "degree": 4 * q},
                      {"id": "y1", "degree": 4 * q}, {"id": "y2", "degree": 4 * q},
                      {"id": "t", "degree": 8 * q}],
            "products": products,
            "fundamental_class": "t",
            "pontryagin": pontryagin,
        });
    }
}

/// A random valid descriptor with `d ≤ 16`, at most 6 basis elements and at least
/// one nonzero Pontryagin class whose pairing is nondegenerate.
pub fn random_descriptor<R: Rng>(rng: &mut R) -> ManifoldData {
    let value = match rng.gen_range(0..3) {
        0 => {
            let r = rng.gen_range(1..=4);
            truncated_polynomial(rng, r, None)
        }
        1 => {
            let r = rng.gen_range(1..=2);
            let n = rng.gen_range(1..=(16 - 4 * r).min(8));
            truncated_polynomial(rng, r, Some(n))
        }
        _ => {
            let q = rng.gen_range(1..=2);
            middle_form(rng, q)
        }
    };
    parse_manifold(&value.to_string()).expect("generated descriptor is valid")
}

/// A random `k` in `1..=12` with `d + k ≡ 0 (4)`.
pub fn random_k<R: Rng>(rng: &mut R, d: u32) -> u32 {
    let base = (4 - d % 4) % 4;
    let base = if base == 0 { 4 } else { base };
    base + 4 * rng.gen_range(0..3)
}
