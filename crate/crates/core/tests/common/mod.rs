//! Property bodies shared by the `properties` and `acceptance` targets.
//!
//! Each function returns `Err(description)` on the first failure so the
//! acceptance runner can report it on one line.

#![allow(dead_code)]

use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use symclass::cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicNumber, RationalPoly};
use symclass::dicyclic::{
    brauer_characters, character_table, CharacterFn, CharacterKind, DicyclicElement, DicyclicGroup,
};
use symclass::obasis::{find_orthogonal_basis, OrthogonalityGraph};
use symclass::orbits::{act_poly, act_tensor, MultiIndex, Sequence};
use symclass::symmetrize::{inner_direct, permute_vector, symmetrize_poly, symmetrize_tensor};

pub const ORDERS: [u32; 12] = [1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 20, 24];

pub fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

/// A random element of `Q(ζ_N)` given by a few exponent terms, so that
/// exponents beyond the power basis exercise the reduction.
fn element(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
    let field = CyclotomicField::new(order);
    prop::collection::vec((0..order as i64 * 2, -4i64..=4, 1i64..=3), 0..6).prop_map(move |terms| {
        let terms: Vec<(i64, BigRational)> = terms.into_iter().map(|(e, a, b)| (e - order as i64, q(a, b))).collect();
        field.from_exponents(&terms)
    })
}

fn triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn close(a: &CyclotomicNumber, z: num_complex::Complex64) -> bool {
    (a.to_complex() - z).norm() <= 1e-9 * (1.0 + z.norm())
}

pub fn ring_axioms(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&triple(), |(a, b, c)| {
            let f = a.field().clone();
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a - &b, &a + &(-&b));
            prop_assert_eq!(&a * &f.one(), a.clone());
            prop_assert_eq!(&a + &f.zero(), a.clone());
            if !a.is_zero() {
                let inv = a.inverse().unwrap();
                prop_assert!((&a * &inv).is_one());
            } else {
                prop_assert!(a.inverse().is_none());
            }
            // the complex embedding ζ ↦ e^{2πi/N} is a ring homomorphism
            prop_assert!(close(&(&a * &b), a.to_complex() * b.to_complex()));
            prop_assert!(close(&(&a + &c), a.to_complex() + c.to_complex()));
            Ok(())
        })
        .map_err(|e| format!("ring axioms: {e}"))
}

fn mobius(n: u32) -> i64 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn poly_at_zeta(poly: &RationalPoly, field: &Arc<CyclotomicField>) -> CyclotomicNumber {
    let terms: Vec<(i64, BigRational)> = poly.coeffs().iter().enumerate().map(|(k, c)| (k as i64, c.clone())).collect();
    field.from_exponents(&terms)
}

/// `Σ_k ζ^k = 0`, Ramanujan sums `Σ_{(k,N)=1} ζ^k = μ(N)`, `Φ_N(ζ) = 0`, and
/// `Π_{d|N} Φ_d = x^N - 1`.
pub fn vanishing_sums(max_order: u32) -> Result<(), String> {
    for n in 1..=max_order {
        let f = CyclotomicField::new(n);
        let all = (0..n as i64).fold(f.zero(), |acc, k| &acc + &f.root_of_unity(k));
        if n > 1 && !all.is_zero() {
            return Err(format!("sum of all {n}-th roots of unity is {all}"));
        }
        let primitive = (0..n as i64).filter(|k| k.gcd(&(n as i64)) == 1).fold(f.zero(), |acc, k| &acc + &f.root_of_unity(k));
        if primitive != f.integer(mobius(n)) {
            return Err(format!("Ramanujan sum at N={n} is {primitive}, expected {}", mobius(n)));
        }
        if !poly_at_zeta(&cyclotomic_polynomial(n), &f).is_zero() {
            return Err(format!("Φ_{n}(ζ_{n}) != 0"));
        }
        let product = (1..=n)
            .filter(|d| n % d == 0)
            .fold(RationalPoly::from_ints(&[1]), |acc, d| acc.mul(&cyclotomic_polynomial(d)));
        if product != RationalPoly::x_pow_minus_one(n as usize) {
            return Err(format!("product of Φ_d over d | {n} is {product}"));
        }
    }
    Ok(())
}

pub fn conjugation(cases: u32) -> Result<(), String> {
    runner(cases)
        .run(&triple(), |(a, b, _)| {
            let n = a.order() as i64;
            prop_assert_eq!((&a * &b).conjugate(), &a.conjugate() * &b.conjugate());
            prop_assert_eq!((&a + &b).conjugate(), &a.conjugate() + &b.conjugate());
            prop_assert_eq!(a.conjugate().conjugate(), a.clone());
            let norm = &a * &a.conjugate();
            prop_assert_eq!(norm.conjugate(), norm.clone());
            prop_assert!(norm.to_complex().re >= -1e-9);
            for k in (1..n.max(2)).filter(|k| k.gcd(&n) == 1) {
                prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
            }
            Ok(())
        })
        .map_err(|e| format!("conjugation: {e}"))
}

pub fn lifting(cases: u32) -> Result<(), String> {
    let strat = prop::sample::select(ORDERS.to_vec())
        .prop_flat_map(|n| (element(n), element(n), prop::sample::select(vec![1u32, 2, 3, 4, 5])))
        .prop_map(|(a, b, k)| (a, b, k));
    runner(cases)
        .run(&strat, |(a, b, k)| {
            let big = CyclotomicField::new(a.order() * k);
            let (la, lb) = (a.lift_to(&big), b.lift_to(&big));
            prop_assert_eq!(&la, &a);
            prop_assert_eq!(la.order(), a.order() * k);
            prop_assert_eq!(&(&a * &b).lift_to(&big), &(&la * &lb));
            prop_assert_eq!(&(&a + &b).lift_to(&big), &(&la + &lb));
            // mixed-order operands lift implicitly
            let other = big.root_of_unity(1);
            prop_assert_eq!(&(&a * &other), &(&la * &other));
            Ok(())
        })
        .map_err(|e| format!("lifting: {e}"))
}

/// Relations, associativity, inverses and the regular embedding, scanned
/// over the whole group.
pub fn presentation_scan(max_n: u32) -> Result<(), String> {
    for n in 1..=max_n {
        let g = DicyclicGroup::new(n).map_err(|e| e.to_string())?;
        let (r, s, e) = (g.r(), g.s(), g.identity());
        if r.pow(2 * n as u64) != e || r.pow(n as u64) != s.pow(2) || s.inverse() * r * s != r.inverse() {
            return Err(format!("presentation relations fail at n={n}"));
        }
        if (1..2 * n as u64).any(|k| r.pow(k) == e) {
            return Err(format!("r has order below 2n at n={n}"));
        }
        let els = g.elements();
        for x in els {
            if *x * x.inverse() != e {
                return Err(format!("bad inverse of {x}"));
            }
            for y in els {
                let xy = *x * *y;
                for z in els {
                    if xy * *z != *x * (*y * *z) {
                        return Err(format!("associativity fails at {x},{y},{z}"));
                    }
                }
                // left regular embedding: perm(xy) = perm(x) ∘ perm(y)
                let (px, py, pxy) = (g.regular_permutation(x), g.regular_permutation(y), g.regular_permutation(&xy));
                if (0..els.len()).any(|i| pxy[i] != px[py[i]]) {
                    return Err(format!("regular embedding is not a homomorphism at {x},{y}"));
                }
            }
            let px = g.regular_permutation(x);
            let mut seen = vec![false; els.len()];
            for &i in px {
                seen[i] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(format!("perm({x}) is not a bijection"));
            }
            if *x != e && (0..els.len()).all(|i| px[i] == i) {
                return Err(format!("perm({x}) is trivial"));
            }
        }
    }
    Ok(())
}

fn characters_for(group: &Arc<DicyclicGroup>) -> Vec<CharacterFn> {
    let mut chars = character_table(group).unwrap();
    for p in [2, 3, 5] {
        chars.extend(brauer_characters(group, p).unwrap());
    }
    chars
}

fn composition(len: usize, degree: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..len, degree as usize).prop_map(move |slots| {
        let mut out = vec![0u32; len];
        for s in slots {
            out[s] += 1;
        }
        out
    })
}

/// `σ·X^{α,*} = X^{ασ⁻¹,*}` and `σ·e^*_γ = e^*_{σ.γ}` for every `σ`.
pub fn equivariance(cases: u32) -> Result<(), String> {
    let strat = (1u32..=3).prop_flat_map(|n| {
        let m = 4 * n as usize;
        (Just(n), 1u32..=3, any::<prop::sample::Index>())
            .prop_flat_map(move |(n, d, idx)| (Just(n), composition(m, d), prop::collection::vec(1u32..=2, m), Just(idx)))
    });
    runner(cases)
        .run(&strat, |(n, alpha, gamma, idx)| {
            let g = DicyclicGroup::new(n).unwrap();
            let chars = characters_for(&g);
            let phi = &chars[idx.index(chars.len())];
            let alpha = MultiIndex(alpha);
            let gamma = Sequence(gamma);
            let v = symmetrize_poly(&alpha, phi).unwrap();
            let t = symmetrize_tensor(&gamma, phi, 2).unwrap();
            for sigma in g.elements() {
                let moved = permute_vector(&g, &v, sigma).unwrap();
                let target = symmetrize_poly(&act_poly(&g, &alpha, &sigma.inverse()).unwrap(), phi).unwrap();
                prop_assert!(moved.same_vector(&target), "poly {} {} {}", phi.label(), alpha, sigma);
                let moved = permute_vector(&g, &t, sigma).unwrap();
                let target = symmetrize_tensor(&act_tensor(&g, &gamma, sigma).unwrap(), phi, 2).unwrap();
                prop_assert!(moved.same_vector(&target), "tensor {} {} {}", phi.label(), gamma, sigma);
            }
            Ok(())
        })
        .map_err(|e| format!("equivariance: {e}"))
}

/// On `W = <r> ∩ Ĝ` with `φ` a sum of `d` distinct linear characters `η_i`:
/// `⟨X^{ασ,*}, X^{α,*}⟩ = (d²|W_α|/|W|) Σ_i η_i(σ)(η_i,1)_{W_α}`.
pub fn cyclic_identity(cases: u32) -> Result<(), String> {
    let strat = (1u32..=3, prop::sample::select(vec![2u64, 3, 5]), any::<prop::sample::Index>(), 1u32..=3)
        .prop_flat_map(|(n, p, idx, d)| (Just(n), Just(p), Just(idx), composition(4 * n as usize, d), any::<u64>()));
    runner(cases)
        .run(&strat, |(n, p, idx, alpha, pick)| {
            let g = DicyclicGroup::new(n).unwrap();
            let w: Vec<DicyclicElement> = g.p_regular_elements(p).unwrap().into_iter().filter(|x| !x.has_s()).collect();
            let order = w.len() as u32;
            // W = <r^step>; λ_h on W only depends on h mod |W|
            let step = 2 * n / order;
            let count = 1 + idx.index(order.min(3) as usize) as u32;
            let mut hs: Vec<u32> = Vec::new();
            let mut seed = pick;
            while hs.len() < count as usize {
                let h = (seed % order as u64) as u32;
                seed = seed / order as u64 + 7;
                if !hs.contains(&h) {
                    hs.push(h);
                }
            }
            let field = g.field().clone();
            // λ_h(r^a) = ζ_{2n}^{ah} = ζ_{4n}^{2ah}; h is taken in units of the generator r^step
            let eta = |h: u32, x: &DicyclicElement| field.root_of_unity(2 * (x.r_exp() as i64) * (h * step) as i64);
            let phi = CharacterFn::from_fn(&g, w.iter().map(|x| x.index()).collect(), CharacterKind::Composite, "sum", |x| {
                hs.iter().fold(field.zero(), |acc, &h| &acc + &eta(h, &x))
            })
            .unwrap();
            let alpha = MultiIndex(alpha);
            let w_alpha: Vec<&DicyclicElement> = w.iter().filter(|x| act_poly(&g, &alpha, x).unwrap() == alpha).collect();
            let base = symmetrize_poly(&alpha, &phi).unwrap();
            for sigma in &w {
                let moved = symmetrize_poly(&act_poly(&g, &alpha, sigma).unwrap(), &phi).unwrap();
                let lhs = inner_direct(&moved, &base).unwrap();
                let mut rhs = field.zero();
                for &h in &hs {
                    let avg = w_alpha.iter().fold(field.zero(), |acc, x| &acc + &eta(h, x)).scale(&q(1, w_alpha.len() as i64));
                    rhs = &rhs + &(&eta(h, sigma) * &avg);
                }
                let c = q((count * count) as i64 * w_alpha.len() as i64, w.len() as i64);
                prop_assert_eq!(&lhs, &rhs.scale(&c), "n={} p={} hs={:?} alpha={} sigma={}", n, p, hs, alpha, sigma);
            }
            Ok(())
        })
        .map_err(|e| format!("cyclic identity: {e}"))
}

fn brute_force_clique(adj: &[Vec<bool>], target: usize) -> bool {
    let k = adj.len();
    (0u32..1 << k).any(|mask| {
        mask.count_ones() as usize == target
            && (0..k).all(|i| (0..k).all(|j| i == j || mask & (1 << i) == 0 || mask & (1 << j) == 0 || adj[i][j]))
    })
}

/// The clique verdict matches brute force and ignores vertex order.
pub fn clique_search(cases: u32) -> Result<(), String> {
    let strat = (1usize..=9).prop_flat_map(|k| {
        (
            prop::collection::vec(any::<bool>(), k * k),
            0usize..=k,
            Just((0..k).collect::<Vec<_>>()).prop_shuffle(),
        )
    });
    let g = DicyclicGroup::new(8).unwrap();
    runner(cases)
        .run(&strat, |(bits, target, order)| {
            let k = order.len();
            let adj: Vec<Vec<bool>> =
                (0..k).map(|i| (0..k).map(|j| i != j && bits[i.min(j) * k + i.max(j)]).collect()).collect();
            let graph = OrthogonalityGraph::from_fn(g.elements()[..k].to_vec(), |i, j| adj[i][j]);
            let found = find_orthogonal_basis(&graph, target);
            prop_assert_eq!(found.found(), brute_force_clique(&adj, target));
            prop_assert_eq!(find_orthogonal_basis(&graph.permuted(&order), target).found(), found.found());
            if let symclass::obasis::CliqueSearch::Witness { vertices } = found {
                prop_assert_eq!(vertices.len(), target);
                for (x, &i) in vertices.iter().enumerate() {
                    for &j in &vertices[x + 1..] {
                        prop_assert!(adj[i][j]);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| format!("clique search: {e}"))
}
