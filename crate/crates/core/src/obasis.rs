//! Deciding whether a symmetry class has an orthogonal basis of symmetrized
//! monomials (or decomposable symmetrized tensors).
//!
//! The class splits orthogonally into orbital subspaces, one per orbit of the
//! group on exponent tuples, and has such a basis exactly when every orbital
//! subspace does. Inside one orbit, a set of pairwise orthogonal nonzero
//! translates whose size equals the exact rank is automatically a basis, so
//! the question becomes a clique search in the orthogonality graph.

use std::sync::Arc;

use serde::Serialize;

use crate::dicyclic::{CharacterFn, DicyclicElement, DicyclicGroup};
use crate::error::{Result, SymclassError};
use crate::linalg::span_rank;
use crate::orbits::{orbit_reps, OrbitData, Space};
use crate::symmetrize::{dim_orbital, inner_direct, Evaluator, SymmetrizedVector};

/// Vertices are transversal elements whose translated vector is nonzero and
/// differs from every earlier vertex; edges join pairs with a zero Gram entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityGraph {
    vertices: Vec<DicyclicElement>,
    adjacency: Vec<Vec<bool>>,
}

impl OrthogonalityGraph {
    /// Build from a vertex list and a symmetric edge predicate.
    pub fn from_fn(vertices: Vec<DicyclicElement>, mut orthogonal: impl FnMut(usize, usize) -> bool) -> Self {
        let k = vertices.len();
        let mut adjacency = vec![vec![false; k]; k];
        for i in 0..k {
            for j in i + 1..k {
                let edge = orthogonal(i, j);
                adjacency[i][j] = edge;
                adjacency[j][i] = edge;
            }
        }
        OrthogonalityGraph { vertices, adjacency }
    }

    pub fn vertices(&self) -> &[DicyclicElement] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i][j]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].iter().filter(|&&e| e).count()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.vertices.len();
        (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }

    /// The same graph with vertices listed in the given order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.vertices.len());
        OrthogonalityGraph {
            vertices: order.iter().map(|&i| self.vertices[i]).collect(),
            adjacency: order.iter().map(|&i| order.iter().map(|&j| self.adjacency[i][j]).collect()).collect(),
        }
    }
}

/// Outcome of the clique search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "outcome")]
pub enum CliqueSearch {
    /// Vertex positions of the lexicographically first clique of the target size.
    Witness { vertices: Vec<usize> },
    /// No clique of the target size; `largest` is the deepest partial clique
    /// the pruned search reached.
    Exhausted { explored: u64, largest: usize },
}

impl CliqueSearch {
    pub fn found(&self) -> bool {
        matches!(self, CliqueSearch::Witness { .. })
    }
}

/// Complete search for a clique of size `target`.
///
/// Depth-first in vertex order with two cuts: vertices of degree below
/// `target - 1` never start or extend a clique, and a branch stops once the
/// remaining candidates cannot reach the target.
pub fn find_orthogonal_basis(graph: &OrthogonalityGraph, target: usize) -> CliqueSearch {
    if target == 0 {
        return CliqueSearch::Witness { vertices: Vec::new() };
    }
    let usable: Vec<usize> = (0..graph.vertex_count()).filter(|&v| graph.degree(v) + 1 >= target).collect();
    let mut search = Search { graph, target, explored: 0, largest: 0, clique: Vec::new() };
    if search.extend(&usable) {
        CliqueSearch::Witness { vertices: search.clique }
    } else {
        CliqueSearch::Exhausted { explored: search.explored, largest: search.largest }
    }
}

struct Search<'a> {
    graph: &'a OrthogonalityGraph,
    target: usize,
    explored: u64,
    largest: usize,
    clique: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, candidates: &[usize]) -> bool {
        self.largest = self.largest.max(self.clique.len());
        if self.clique.len() == self.target {
            return true;
        }
        for (pos, &v) in candidates.iter().enumerate() {
            if self.clique.len() + candidates.len() - pos < self.target {
                return false;
            }
            self.explored += 1;
            let next: Vec<usize> = candidates[pos + 1..].iter().copied().filter(|&w| self.graph.adjacent(v, w)).collect();
            self.clique.push(v);
            if self.extend(&next) {
                return true;
            }
            self.clique.pop();
        }
        false
    }
}

/// Per-orbit result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub representative: Vec<u32>,
    pub orbit_size: usize,
    pub stabilizer_size: usize,
    /// Exact dimension of the orbital subspace.
    pub rank: usize,
    /// Orbital dimension formula, for ordinary characters.
    pub formula_dimension: Option<u32>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub has_obasis: bool,
    /// Translating elements whose vectors form an orthogonal basis.
    pub witness: Option<Vec<DicyclicElement>>,
    pub search: CliqueSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObasisReport {
    pub n: u32,
    pub space: Space,
    pub character: String,
    pub brauer: bool,
    pub orbits: Vec<OrbitRecord>,
    pub verdict: bool,
    pub dimension: usize,
}

impl ObasisReport {
    pub fn from_records(group: &DicyclicGroup, space: Space, phi: &CharacterFn, orbits: Vec<OrbitRecord>) -> Self {
        ObasisReport {
            n: group.n(),
            space,
            character: phi.label().to_string(),
            brauer: phi.is_brauer(),
            verdict: orbits.iter().all(|o| o.has_obasis),
            dimension: orbits.iter().map(|o| o.rank).sum(),
            orbits,
        }
    }
}

/// Orbit data prepared for one character: vectors and graph vertices.
struct Prepared {
    vectors: Vec<SymmetrizedVector>,
    /// Transversal positions that became vertices.
    vertex_pos: Vec<usize>,
    stab: Vec<usize>,
    transversal: Vec<usize>,
}

fn prepare(ev: &Evaluator, orbit: &OrbitData) -> Prepared {
    let transversal: Vec<usize> = orbit.transversal.iter().map(DicyclicElement::index).collect();
    let vectors: Vec<SymmetrizedVector> = transversal.iter().map(|&t| ev.vector(&orbit.representative, t)).collect();
    let mut vertex_pos: Vec<usize> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if !v.is_zero() && !vertex_pos.iter().any(|&j| vectors[j].same_vector(v)) {
            vertex_pos.push(i);
        }
    }
    Prepared { vectors, vertex_pos, stab: orbit.stabilizer.iter().map(DicyclicElement::index).collect(), transversal }
}

fn graph_of(ev: &Evaluator, orbit: &OrbitData, prep: &Prepared) -> OrthogonalityGraph {
    let vertices = prep.vertex_pos.iter().map(|&i| orbit.transversal[i]).collect();
    OrthogonalityGraph::from_fn(vertices, |i, j| {
        let (a, b) = (prep.transversal[prep.vertex_pos[i]], prep.transversal[prep.vertex_pos[j]]);
        ev.entry(&prep.stab, a, b).is_zero()
    })
}

/// Exact dimension of the span of all translated symmetrized vectors.
pub fn orbital_rank(orbit: &OrbitData, phi: &CharacterFn) -> usize {
    let ev = Evaluator::new(phi, orbit.space);
    let prep = prepare(&ev, orbit);
    let vs: Vec<_> = prep.vertex_pos.iter().map(|&i| prep.vectors[i].clone()).collect();
    span_rank(&vs)
}

pub fn build_orthogonality_graph(orbit: &OrbitData, phi: &CharacterFn) -> OrthogonalityGraph {
    let ev = Evaluator::new(phi, orbit.space);
    let prep = prepare(&ev, orbit);
    graph_of(&ev, orbit, &prep)
}

/// Decide one orbit, re-checking any witness by direct expansion.
pub fn decide_orbit(orbit: &OrbitData, phi: &CharacterFn) -> Result<OrbitRecord> {
    decide_with(&Evaluator::new(phi, orbit.space), orbit, phi)
}

fn decide_with(ev: &Evaluator, orbit: &OrbitData, phi: &CharacterFn) -> Result<OrbitRecord> {
    let prep = prepare(ev, orbit);
    let vertex_vectors: Vec<_> = prep.vertex_pos.iter().map(|&i| prep.vectors[i].clone()).collect();
    let rank = span_rank(&vertex_vectors);
    let graph = graph_of(ev, orbit, &prep);
    let search = find_orthogonal_basis(&graph, rank);
    let witness = match &search {
        CliqueSearch::Witness { vertices } => {
            for (x, &i) in vertices.iter().enumerate() {
                for &j in &vertices[x + 1..] {
                    if !inner_direct(&vertex_vectors[i], &vertex_vectors[j])?.is_zero() {
                        return Err(SymclassError::OracleMismatch(format!(
                            "witness pair {} / {} in orbit {:?} is not orthogonal",
                            graph.vertices()[i],
                            graph.vertices()[j],
                            orbit.representative
                        )));
                    }
                }
            }
            Some(vertices.iter().map(|&i| graph.vertices()[i]).collect())
        }
        CliqueSearch::Exhausted { .. } => None,
    };
    let formula_dimension = if phi.is_total() { Some(dim_orbital(phi, &orbit.stabilizer)?) } else { None };
    Ok(OrbitRecord {
        representative: orbit.representative.clone(),
        orbit_size: orbit.size(),
        stabilizer_size: orbit.stabilizer.len(),
        rank,
        formula_dimension,
        vertex_count: graph.vertex_count(),
        edge_count: graph.edges().len(),
        has_obasis: witness.is_some(),
        witness,
        search,
    })
}

/// Decide the given orbits of `space` for `phi`.
pub fn decide_orbits<'a>(
    phi: &CharacterFn,
    space: Space,
    orbits: impl IntoIterator<Item = &'a OrbitData>,
) -> Result<ObasisReport> {
    let ev = Evaluator::new(phi, space);
    let records = orbits.into_iter().map(|o| decide_with(&ev, o, phi)).collect::<Result<Vec<_>>>()?;
    Ok(ObasisReport::from_records(ev.group(), space, phi, records))
}

/// Decide the whole symmetry class: every orbit of `space`.
pub fn decide_obasis(group: &Arc<DicyclicGroup>, space: Space, phi: &CharacterFn) -> Result<ObasisReport> {
    if !Arc::ptr_eq(group, phi.group()) && group.n() != phi.group().n() {
        return Err(SymclassError::GroupMismatch { left: group.n(), right: phi.group().n() });
    }
    let ev = Evaluator::new(phi, space);
    let mut records = Vec::new();
    for orbit in orbit_reps(group, space)? {
        records.push(decide_with(&ev, &orbit, phi)?);
    }
    Ok(ObasisReport::from_records(group, space, phi, records))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dicyclic::{degree_two_character, linear_character};

    fn path_graph(k: usize) -> OrthogonalityGraph {
        let g = DicyclicGroup::new(8).unwrap();
        let vs = g.elements()[..k].to_vec();
        OrthogonalityGraph::from_fn(vs, |i, j| j == i + 1)
    }

    #[test]
    fn clique_search_basics() {
        let g = path_graph(4);
        assert_eq!(find_orthogonal_basis(&g, 0), CliqueSearch::Witness { vertices: vec![] });
        assert_eq!(find_orthogonal_basis(&g, 1), CliqueSearch::Witness { vertices: vec![0] });
        assert_eq!(find_orthogonal_basis(&g, 2), CliqueSearch::Witness { vertices: vec![0, 1] });
        assert!(!find_orthogonal_basis(&g, 3).found());
    }

    #[test]
    fn triangle_found_after_backtracking() {
        let grp = DicyclicGroup::new(8).unwrap();
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 4)];
        let g = OrthogonalityGraph::from_fn(grp.elements()[..5].to_vec(), |i, j| edges.contains(&(i, j)));
        assert_eq!(find_orthogonal_basis(&g, 3), CliqueSearch::Witness { vertices: vec![2, 3, 4] });
        let rev: Vec<usize> = (0..5).rev().collect();
        assert!(find_orthogonal_basis(&g.permuted(&rev), 3).found());
    }

    #[test]
    fn free_orbit_at_n3_edges_only_cross_the_s_coset() {
        let g = DicyclicGroup::new(3).unwrap();
        let chi = degree_two_character(&g, 1).unwrap();
        let mut alpha = vec![0; 12];
        alpha[0] = 2;
        let orbit = OrbitData::of(&g, Space::Polynomial { degree: 2 }, &alpha).unwrap();
        let graph = build_orthogonality_graph(&orbit, &chi);
        // χ_1 vanishes off <r> and nowhere on it, so translates are orthogonal
        // exactly when they differ by an odd power of s; no triangle exists
        let vs = graph.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                assert_eq!(graph.adjacent(i, j), vs[i].has_s() != vs[j].has_s());
            }
        }
        assert!(!find_orthogonal_basis(&graph, 3).found());
        assert_eq!(orbital_rank(&orbit, &chi), 4);
        let rec = decide_orbit(&orbit, &chi).unwrap();
        assert!(!rec.has_obasis);
        assert_eq!(rec.formula_dimension, Some(4));
    }

    #[test]
    fn free_orbit_at_n2_has_edges() {
        let g = DicyclicGroup::new(2).unwrap();
        let chi = degree_two_character(&g, 1).unwrap();
        let mut alpha = vec![0; 8];
        alpha[0] = 2;
        let orbit = OrbitData::of(&g, Space::Polynomial { degree: 2 }, &alpha).unwrap();
        assert!(!build_orthogonality_graph(&orbit, &chi).edges().is_empty());
        assert!(decide_orbit(&orbit, &chi).unwrap().has_obasis);
    }

    #[test]
    fn linear_characters_always_decide_true() {
        let g = DicyclicGroup::new(2).unwrap();
        for j in 0..4 {
            let psi = linear_character(&g, j).unwrap();
            let report = decide_obasis(&g, Space::Polynomial { degree: 2 }, &psi).unwrap();
            assert!(report.verdict);
            assert!(report.orbits.iter().all(|o| o.rank <= 1));
        }
    }

    #[test]
    fn class_verdicts_at_degree_two() {
        let g2 = DicyclicGroup::new(2).unwrap();
        let g3 = DicyclicGroup::new(3).unwrap();
        let space = Space::Polynomial { degree: 2 };
        assert!(decide_obasis(&g2, space, &degree_two_character(&g2, 1).unwrap()).unwrap().verdict);
        assert!(!decide_obasis(&g3, space, &degree_two_character(&g3, 1).unwrap()).unwrap().verdict);
    }
}
