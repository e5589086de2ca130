mod common;

use std::collections::HashMap;

use genus_forge::fixtures;
use genus_forge::series::{bernoulli, factorial, int, rat};
use genus_forge::{
    char_series, genus_of_manifold, genus_polynomial, partitions, product_with_sphere, Genus,
    Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[test]
fn partitions_match_brute_force() {
    for n in 0..=10 {
        let mut ours: Vec<Vec<u32>> = partitions(n).iter().map(|p| p.parts().to_vec()).collect();
        ours.sort();
        assert_eq!(ours, common::partitions_by_compositions(n), "n = {n}");
    }
}

#[test]
fn genus_tables_match_formal_roots() {
    for kind in [Genus::L, Genus::Ahat] {
        for n in 1..=4 {
            let table = genus_polynomial(kind, n);
            for roots in [n as usize, n as usize + 1] {
                let oracle = common::genus_by_formal_roots(kind, n, roots);
                for (p, c) in &table.coefficients {
                    let expected = oracle.get(p).cloned().unwrap_or_else(Rational::zero);
                    assert_eq!(c, &expected, "{kind}_{n} at {p} with {roots} roots");
                }
                assert!(oracle.keys().all(|p| table.coefficients.contains_key(p)));
            }
        }
    }
}

/// Evaluate `K_n` at `p_i := e_i(y_1, …, y_N)` on concrete rational points and compare
/// with the degree-`n` part of `Π Q(t·y_j)`, read off as the `t^n` coefficient.
#[test]
fn genus_polynomial_reproduces_root_product() {
    let points: Vec<Vec<Rational>> = vec![
        vec![int(1), int(2), int(-3), rat(1, 2)],
        vec![rat(2, 3), int(0), int(5), int(-1)],
    ];
    for kind in [Genus::L, Genus::Ahat] {
        for ys in &points {
            // e_i(y) via Π (1 + y_j t)
            let mut e = vec![Rational::one()];
            for y in ys {
                let mut next = vec![Rational::zero(); e.len() + 1];
                for (i, c) in e.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] += c * y;
                }
                e = next;
            }
            let q = char_series(kind, 4);
            // Π_j Q(t y_j) as a series in t
            let mut product = vec![Rational::zero(); 5];
            product[0] = Rational::one();
            for y in ys {
                let factor: Vec<Rational> = (0..=4)
                    .map(|t| q.coeff(t) * num_traits::pow(y.clone(), t))
                    .collect();
                let mut next = vec![Rational::zero(); 5];
                for i in 0..=4 {
                    for j in 0..=4 - i {
                        next[i + j] += &product[i] * &factor[j];
                    }
                }
                product = next;
            }
            for n in 1..=4u32 {
                let table = genus_polynomial(kind, n);
                let value = table.coefficients.iter().fold(Rational::zero(), |acc, (p, c)| {
                    let mono = p
                        .parts()
                        .iter()
                        .fold(Rational::one(), |m, &i| m * e.get(i as usize).cloned().unwrap_or_default());
                    acc + c * mono
                });
                assert_eq!(value, product[n as usize], "{kind}_{n} at {ys:?}");
            }
        }
    }
}

#[test]
fn leading_l_coefficient_matches_bernoulli_form() {
    // s_n = 2^{2n} (2^{2n-1} - 1) |B_{2n}| / (2n)!
    for n in 1..=6u32 {
        let four_n = Rational::from_integer(BigInt::from(4).pow(n));
        let expected = &four_n * (&four_n / int(2) - int(1)) * bernoulli(2 * n).abs()
            / Rational::from_integer(factorial(2 * n));
        assert_eq!(genus_polynomial(Genus::L, n).coeff(&[n]), expected, "n = {n}");
        // and s_n = (-1)^{n-1} n [z^n] log Q
        let log_q = char_series(Genus::L, n as usize).log().unwrap();
        let sign = if n % 2 == 1 { int(1) } else { int(-1) };
        assert_eq!(expected, sign * int(n as i64) * log_q.coeff(n as usize));
    }
}

#[test]
fn classical_genera() {
    assert_eq!(genus_of_manifold(Genus::L, &fixtures::cp2()).unwrap(), int(1));
    assert_eq!(genus_of_manifold(Genus::L, &fixtures::hp2()).unwrap(), int(1));
    assert_eq!(genus_of_manifold(Genus::L, &fixtures::k3()).unwrap(), int(-16));
    assert_eq!(genus_of_manifold(Genus::Ahat, &fixtures::k3()).unwrap(), int(2));
    assert_eq!(genus_of_manifold(Genus::Ahat, &fixtures::hp2()).unwrap(), int(0));
}

#[test]
fn signature_theorem_against_intersection_forms() {
    for m in fixtures::all() {
        assert_eq!(
            genus_of_manifold(Genus::L, &m).unwrap(),
            int(common::intersection_signature(&m)),
            "{}",
            m.name
        );
    }
}

#[test]
fn genera_vanish_on_sphere_products() {
    for m in fixtures::all() {
        for n in 1..=8 {
            let product = product_with_sphere(&m, n);
            for kind in [Genus::L, Genus::Ahat] {
                assert!(genus_of_manifold(kind, &product).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn non_multiple_of_four_dimension_gives_zero() {
    let m = product_with_sphere(&fixtures::cp2(), 2);
    assert_eq!(m.dimension(), 6);
    assert!(genus_of_manifold(Genus::L, &m).unwrap().is_zero());
}

#[test]
fn memoized_tables_are_shared_across_threads() {
    let handles: Vec<_> = (0..8)
        .map(|i| {
            std::thread::spawn(move || {
                let kind = if i % 2 == 0 { Genus::L } else { Genus::Ahat };
                (kind, genus_polynomial(kind, 6).coefficients.clone())
            })
        })
        .collect();
    let mut seen: HashMap<Genus, _> = HashMap::new();
    for h in handles {
        let (kind, table) = h.join().unwrap();
        if let Some(prev) = seen.insert(kind, table.clone()) {
            assert_eq!(prev, table);
        }
    }
}
