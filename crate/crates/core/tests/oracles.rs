//! Cross-checks against independent counts and identities.

use std::collections::BTreeSet;

use symclass::dicyclic::{brauer_characters, brauer_degree_two, character_table, DicyclicGroup, PrimeSplit};
use symclass::dicyclic::CharacterSelector;
use symclass::harness::{cyclic_part_criterion, verify_point, Claim, OrbitScope, ParameterPoint};
use symclass::obasis::{decide_obasis, orbital_rank};
use symclass::orbits::{act_poly, act_tensor, orbit_reps, MultiIndex, Sequence, Space};
use symclass::symmetrize::{gram_matrix_closed, gram_tensor_coset_sum, inner_direct, orbit_vectors};

fn compositions(m: usize, d: u32) -> Vec<Vec<u32>> {
    if m == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|k| {
            compositions(m - 1, d - k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

fn sequences(m: usize, dim: u32) -> Vec<Vec<u32>> {
    (0..(dim as usize).pow(m as u32))
        .map(|mut code| {
            (0..m)
                .map(|_| {
                    let v = (code % dim as usize) as u32 + 1;
                    code /= dim as usize;
                    v
                })
                .collect()
        })
        .collect()
}

#[test]
fn orbit_count_matches_burnside() {
    for (n, space) in [
        (2, Space::Polynomial { degree: 2 }),
        (2, Space::Polynomial { degree: 3 }),
        (3, Space::Polynomial { degree: 2 }),
        (2, Space::Tensor { dim: 2 }),
        (1, Space::Tensor { dim: 3 }),
    ] {
        let g = DicyclicGroup::new(n).unwrap();
        let m = g.order();
        let tuples = match space {
            Space::Polynomial { degree } => compositions(m, degree),
            Space::Tensor { dim } => sequences(m, dim),
        };
        assert_eq!(tuples.len() as u128, space.tuple_count(m));
        let fixed: usize = g
            .elements()
            .iter()
            .map(|x| {
                tuples
                    .iter()
                    .filter(|t| match space {
                        Space::Polynomial { .. } => act_poly(&g, &MultiIndex(t.to_vec()), x).unwrap().0 == **t,
                        Space::Tensor { .. } => act_tensor(&g, &Sequence(t.to_vec()), x).unwrap().0 == **t,
                    })
                    .count()
            })
            .sum();
        let orbits: Vec<_> = orbit_reps(&g, space).unwrap().collect();
        assert_eq!(orbits.len() * m, fixed, "n={n} {space:?}");
        // orbits partition the tuples
        let covered: BTreeSet<Vec<u32>> = orbits.iter().flat_map(|o| o.members.iter().cloned()).collect();
        assert_eq!(covered.len(), tuples.len());
        assert_eq!(orbits.iter().map(|o| o.size()).sum::<usize>(), tuples.len());
        for o in &orbits {
            assert_eq!(o.size() * o.stabilizer.len(), m);
        }
    }
}

#[test]
fn quadratic_polynomials_of_t8() {
    // 36 monomials of degree 2 in 8 variables fall into 5 orbits
    let g = DicyclicGroup::new(2).unwrap();
    let orbits: Vec<_> = orbit_reps(&g, Space::Polynomial { degree: 2 }).unwrap().collect();
    assert_eq!(orbits.len(), 5);
    let mut sizes: Vec<usize> = orbits.iter().map(|o| o.size()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![4, 8, 8, 8, 8]);
}

#[test]
fn gram_matrices_are_hermitian() {
    for n in [2, 3] {
        let g = DicyclicGroup::new(n).unwrap();
        let mut chars = character_table(&g).unwrap();
        chars.extend(brauer_characters(&g, 3).unwrap());
        for space in [Space::Polynomial { degree: 2 }, Space::Tensor { dim: 2 }] {
            if n == 3 && matches!(space, Space::Tensor { .. }) {
                continue;
            }
            for orbit in orbit_reps(&g, space).unwrap() {
                for chi in &chars {
                    let gram = gram_matrix_closed(&orbit, chi);
                    for i in 0..gram.len() {
                        for j in 0..gram.len() {
                            assert_eq!(gram[i][j], gram[j][i].conjugate());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn symmetry_classes_of_distinct_characters_are_orthogonal() {
    let g = DicyclicGroup::new(3).unwrap();
    let table = character_table(&g).unwrap();
    for orbit in orbit_reps(&g, Space::Polynomial { degree: 2 }).unwrap() {
        let classes: Vec<_> = table.iter().map(|chi| orbit_vectors(&orbit, chi)).collect();
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                for v in &classes[a] {
                    for w in &classes[b] {
                        assert!(inner_direct(v, w).unwrap().is_zero());
                    }
                }
            }
        }
        let ranks: usize = table.iter().map(|chi| orbital_rank(&orbit, chi)).sum();
        assert_eq!(ranks, orbit.size());
    }
}

#[test]
fn coset_sum_is_exact_for_ordinary_tensors() {
    let g = DicyclicGroup::new(2).unwrap();
    for chi in character_table(&g).unwrap() {
        for orbit in orbit_reps(&g, Space::Tensor { dim: 2 }).unwrap() {
            let gamma = Sequence(orbit.representative.clone());
            let gram = gram_matrix_closed(&orbit, &chi);
            for (i, s1) in orbit.transversal.iter().enumerate() {
                for (j, s2) in orbit.transversal.iter().enumerate() {
                    assert_eq!(gram_tensor_coset_sum(&gamma, s1, s2, &chi).unwrap(), gram[i][j]);
                }
            }
        }
    }
}

#[test]
fn corrected_criterion_matches_computation() {
    let mut checked = 0;
    for n in 2..=6u32 {
        let g = DicyclicGroup::new(n).unwrap();
        for p in [2u64, 3, 5, 7] {
            let c = PrimeSplit::new(n, p).unwrap().cyclic_regular_order() as u32;
            for h in (1..n).filter(|&h| 2 * h < c) {
                let phi = brauer_degree_two(&g, p, h).unwrap();
                let computed = decide_obasis(&g, Space::Polynomial { degree: 2 }, &phi).unwrap().verdict;
                assert_eq!(cyclic_part_criterion(n, p, h).unwrap(), computed, "n={n} p={p} h={h}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 10);
}

#[test]
fn parity_rule_also_misses_when_p_divides_4n() {
    // n = 15, p = 5: l = 12, so l/gcd(l, h) is 12 and 6, yet λ_h on the 6
    // p-regular rotations is neither real nor ±i-valued
    for h in [1, 2] {
        let point = ParameterPoint {
            claim: Claim::DegreeTwoBrauerPoly,
            n: 15,
            p: Some(5),
            space: Some(Space::Polynomial { degree: 2 }),
            character: Some(CharacterSelector::DegreeTwo(h)),
        };
        let rec = verify_point(&point, u128::MAX, OrbitScope::PrecheckThenFull).unwrap().unwrap();
        assert!(!rec.computed);
        assert!(!cyclic_part_criterion(15, 5, h).unwrap());
        assert!(rec.predicted && !rec.agrees);
        assert!(rec.counterexample.as_ref().is_some_and(|b| b.gram.is_some()));
    }
}
