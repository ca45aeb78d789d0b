//! Symmetrized monomials `X^{α,*}` and symmetrized tensors `e^*_γ`.
//!
//! Vectors are stored sparsely over the monomial (resp. product tensor)
//! basis, which is orthonormal for the induced Hermitian form. Inner
//! products are available two ways: by direct expansion of the vectors and
//! by closed-form double sums over the group. The two must agree exactly.
//!
//! Translates follow the conventions of [`crate::orbits`]: the polynomial
//! translate by `σ` is `X^{ασ,*}`, the tensor translate is `e^*_{σ.γ}`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::{CyclotomicField, CyclotomicNumber};
use crate::dicyclic::{character_table, decompose, trivial_multiplicity, CharacterFn, DicyclicElement, DicyclicGroup};
use crate::error::{Result, SymclassError};
use crate::orbits::{act_raw, stabilizer_raw, MultiIndex, OrbitData, Sequence, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Monomial,
    Tensor,
}

impl BasisKind {
    pub fn of(space: &Space) -> Self {
        match space {
            Space::Polynomial { .. } => BasisKind::Monomial,
            Space::Tensor { .. } => BasisKind::Tensor,
        }
    }
}

/// Where a symmetrized vector came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub tuple: Vec<u32>,
    pub character: String,
    pub domain_size: usize,
    /// Group element the base tuple was translated by.
    pub acting: DicyclicElement,
}

/// A sparse exact vector over the monomial or product-tensor basis.
///
/// Only nonzero coefficients are stored; the zero vector has empty support.
#[derive(Clone, Debug)]
pub struct SymmetrizedVector {
    space: Space,
    field: Arc<CyclotomicField>,
    coeffs: BTreeMap<Vec<u32>, CyclotomicNumber>,
    provenance: Provenance,
}

impl SymmetrizedVector {
    pub fn kind(&self) -> BasisKind {
        BasisKind::of(&self.space)
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<u32>, CyclotomicNumber> {
        &self.coeffs
    }

    pub fn coefficient(&self, basis: &[u32]) -> CyclotomicNumber {
        self.coeffs.get(basis).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.coeffs.keys()
    }

    /// Coefficients agree exactly; provenance is ignored.
    pub fn same_vector(&self, other: &Self) -> bool {
        self.space == other.space && self.coeffs == other.coeffs
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(k, v)| (k.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(SymclassError::BasisKindMismatch);
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            let entry = out.coeffs.entry(k.clone()).or_insert_with(|| self.field.zero());
            *entry += v;
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

/// `⟨v, w⟩ = Σ_β v_β · conj(w_β)` over the shared support.
pub fn inner_direct(v: &SymmetrizedVector, w: &SymmetrizedVector) -> Result<CyclotomicNumber> {
    if v.space != w.space {
        return Err(SymclassError::BasisKindMismatch);
    }
    let (small, large, flip) = if v.coeffs.len() <= w.coeffs.len() { (v, w, false) } else { (w, v, true) };
    let mut acc = v.field.zero();
    for (k, a) in &small.coeffs {
        if let Some(b) = large.coeffs.get(k) {
            let term = if flip { b * &a.conjugate() } else { a * &b.conjugate() };
            acc += &term;
        }
    }
    Ok(acc)
}

/// Precomputed data for fast sums of character values.
///
/// Character values of `T_{4n}` are algebraic integers, so in the power basis
/// they carry integer coefficients; products are then accumulated as integer
/// exponent counts and reduced once at the end.
pub(crate) struct Evaluator {
    group: Arc<DicyclicGroup>,
    space: Space,
    label: String,
    domain: Vec<usize>,
    in_domain: Vec<bool>,
    values: Vec<Option<CyclotomicNumber>>,
    conj_values: Vec<Option<CyclotomicNumber>>,
    int_terms: Option<(Vec<Vec<(usize, i64)>>, Vec<Vec<(usize, i64)>>)>,
    prefactor: BigRational,
    total: bool,
}

impl Evaluator {
    pub(crate) fn new(phi: &CharacterFn, space: Space) -> Self {
        let group = Arc::clone(phi.group());
        let order = group.order();
        let mut in_domain = vec![false; order];
        let mut values = vec![None; order];
        let mut conj_values = vec![None; order];
        for &g in phi.domain_indices() {
            in_domain[g] = true;
            let v = phi.value_at(g).expect("domain value").clone();
            conj_values[g] = Some(v.conjugate());
            values[g] = Some(v);
        }
        let terms = |vals: &[Option<CyclotomicNumber>]| -> Option<Vec<Vec<(usize, i64)>>> {
            vals.iter()
                .map(|v| match v {
                    Some(v) => v.integral_terms(),
                    None => Some(Vec::new()),
                })
                .collect()
        };
        let int_terms = terms(&values).zip(terms(&conj_values));
        let prefactor = BigRational::new(BigInt::from(phi.degree()), BigInt::from(phi.domain_indices().len()));
        Evaluator {
            space,
            label: phi.label().to_string(),
            domain: phi.domain_indices().to_vec(),
            in_domain,
            values,
            conj_values,
            int_terms,
            prefactor,
            total: phi.is_total(),
            group,
        }
    }

    pub(crate) fn group(&self) -> &Arc<DicyclicGroup> {
        &self.group
    }

    fn accumulator(&self) -> Accumulator<'_> {
        let order = self.group.field().order() as usize;
        Accumulator {
            ev: self,
            buf: if self.int_terms.is_some() { vec![0; order] } else { Vec::new() },
            exact: self.group.field().zero(),
        }
    }

    /// Symmetrize a raw tuple translated by group element `acting`.
    pub(crate) fn vector(&self, base: &[u32], acting: usize) -> SymmetrizedVector {
        let tuple = act_raw(&self.group, &self.space, base, acting);
        let mut buckets: BTreeMap<Vec<u32>, Accumulator<'_>> = BTreeMap::new();
        for &g in &self.domain {
            let target = match self.space {
                Space::Polynomial { .. } => act_raw(&self.group, &self.space, &tuple, self.group.inv_index(g)),
                Space::Tensor { .. } => act_raw(&self.group, &self.space, &tuple, g),
            };
            buckets.entry(target).or_insert_with(|| self.accumulator()).add_value(g);
        }
        let coeffs = buckets
            .into_iter()
            .map(|(k, acc)| (k, acc.finish(&self.prefactor)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        SymmetrizedVector {
            space: self.space,
            field: Arc::clone(self.group.field()),
            coeffs,
            provenance: Provenance {
                tuple,
                character: self.label.clone(),
                domain_size: self.domain.len(),
                acting: self.group.element(acting),
            },
        }
    }

    /// Closed-form `⟨X^{ασ₁,*}, X^{ασ₂,*}⟩`:
    /// `c² Σ_{μ∈S} Σ_{τ∈G_α, σ₂μσ₁⁻¹τ∈S} φ(μ) conj φ(σ₂μσ₁⁻¹τ)`.
    fn poly_entry(&self, stab: &[usize], s1: usize, s2: usize) -> CyclotomicNumber {
        let g = &self.group;
        let s1_inv = g.inv_index(s1);
        let mut acc = self.accumulator();
        for &mu in &self.domain {
            let left = g.mul_index(g.mul_index(s2, mu), s1_inv);
            for &tau in stab {
                let x = g.mul_index(left, tau);
                if self.in_domain[x] {
                    acc.add_product(mu, x);
                }
            }
        }
        acc.finish(&(&self.prefactor * &self.prefactor))
    }

    /// Closed-form `⟨e^*_{σ₁.γ}, e^*_{σ₂.γ}⟩`.
    ///
    /// For a total domain this is `(χ(1)/|G|) Σ_{x∈σ₂G_γσ₁⁻¹} χ(x)`. On a
    /// proper domain `S` the coset sum does not survive, and the double sum
    /// `c² Σ_{μ∈S} Σ_{τ∈G_γ, μσ₁τσ₂⁻¹∈S} χ(μ) conj χ(μσ₁τσ₂⁻¹)` is used.
    fn tensor_entry(&self, stab: &[usize], s1: usize, s2: usize) -> CyclotomicNumber {
        if self.total {
            return self.tensor_coset_sum(stab, s1, s2);
        }
        let g = &self.group;
        let s2_inv = g.inv_index(s2);
        let mut acc = self.accumulator();
        for &mu in &self.domain {
            let left = g.mul_index(mu, s1);
            for &tau in stab {
                let x = g.mul_index(g.mul_index(left, tau), s2_inv);
                if self.in_domain[x] {
                    acc.add_product(mu, x);
                }
            }
        }
        acc.finish(&(&self.prefactor * &self.prefactor))
    }

    /// `(χ(1)/|S|) Σ_{x∈σ₂G_γσ₁⁻¹ ∩ S} χ(x)`, literally.
    fn tensor_coset_sum(&self, stab: &[usize], s1: usize, s2: usize) -> CyclotomicNumber {
        let g = &self.group;
        let s1_inv = g.inv_index(s1);
        let mut acc = self.accumulator();
        for &tau in stab {
            let x = g.mul_index(g.mul_index(s2, tau), s1_inv);
            if self.in_domain[x] {
                acc.add_value(x);
            }
        }
        acc.finish(&self.prefactor)
    }

    pub(crate) fn entry(&self, stab: &[usize], s1: usize, s2: usize) -> CyclotomicNumber {
        match self.space {
            Space::Polynomial { .. } => self.poly_entry(stab, s1, s2),
            Space::Tensor { .. } => self.tensor_entry(stab, s1, s2),
        }
    }

    /// `Σ_{σ∈G_α∩S} φ(σ)`.
    pub(crate) fn stabilizer_sum(&self, stab: &[usize]) -> CyclotomicNumber {
        let mut acc = self.accumulator();
        for &g in stab {
            if self.in_domain[g] {
                acc.add_value(g);
            }
        }
        acc.finish(&BigRational::from_integer(1.into()))
    }
}

struct Accumulator<'a> {
    ev: &'a Evaluator,
    buf: Vec<i64>,
    exact: CyclotomicNumber,
}

impl Accumulator<'_> {
    fn add_value(&mut self, x: usize) {
        match &self.ev.int_terms {
            Some((vals, _)) => {
                for &(e, c) in &vals[x] {
                    self.buf[e] += c;
                }
            }
            None => self.exact += self.ev.values[x].as_ref().unwrap(),
        }
    }

    /// Adds `φ(x) · conj φ(y)`.
    fn add_product(&mut self, x: usize, y: usize) {
        match &self.ev.int_terms {
            Some((vals, conj)) => {
                let n = self.buf.len();
                for &(e, c) in &vals[x] {
                    for &(f, d) in &conj[y] {
                        let slot = (e + f) % n;
                        self.buf[slot] += c * d;
                    }
                }
            }
            None => {
                let term = self.ev.values[x].as_ref().unwrap() * self.ev.conj_values[y].as_ref().unwrap();
                self.exact += &term;
            }
        }
    }

    fn finish(self, scale: &BigRational) -> CyclotomicNumber {
        let field = self.ev.group.field();
        let raw = if self.ev.int_terms.is_some() { field.from_integer_buffer(&self.buf) } else { self.exact };
        raw.scale(scale)
    }
}

fn check_length(group: &DicyclicGroup, len: usize) -> Result<()> {
    if len != group.order() {
        return Err(SymclassError::LengthMismatch { expected: group.order(), found: len });
    }
    Ok(())
}

/// `X^{α,*} = (φ(1)/|S|) Σ_{σ∈S} φ(σ) X^{ασ⁻¹}`.
pub fn symmetrize_poly(alpha: &MultiIndex, phi: &CharacterFn) -> Result<SymmetrizedVector> {
    check_length(phi.group(), alpha.len())?;
    let ev = Evaluator::new(phi, Space::Polynomial { degree: alpha.degree() });
    Ok(ev.vector(alpha.entries(), 0))
}

/// `e^*_γ`, with coefficient `(χ(1)/|S|) Σ_{σ∈S, σ.γ=β} χ(σ)` at `e_β`.
pub fn symmetrize_tensor(gamma: &Sequence, chi: &CharacterFn, dim: u32) -> Result<SymmetrizedVector> {
    check_length(chi.group(), gamma.len())?;
    gamma.check_range(dim)?;
    let ev = Evaluator::new(chi, Space::Tensor { dim });
    Ok(ev.vector(gamma.entries(), 0))
}

fn indices(group: &DicyclicGroup, elements: &[&DicyclicElement]) -> Result<Vec<usize>> {
    elements
        .iter()
        .map(|g| {
            group.check(g)?;
            Ok(g.index())
        })
        .collect()
}

/// Closed-form Gram entry `⟨X^{ασ₁,*}, X^{ασ₂,*}⟩`.
///
/// Assumes `φ` is a class function on a conjugation-closed domain, which
/// holds for every ordinary and Brauer character of the group.
pub fn gram_poly_closed(
    alpha: &MultiIndex,
    sigma1: &DicyclicElement,
    sigma2: &DicyclicElement,
    phi: &CharacterFn,
) -> Result<CyclotomicNumber> {
    let group = phi.group();
    check_length(group, alpha.len())?;
    let s = indices(group, &[sigma1, sigma2])?;
    let space = Space::Polynomial { degree: alpha.degree() };
    let stab = stabilizer_raw(group, &space, alpha.entries());
    Ok(Evaluator::new(phi, space).poly_entry(&stab, s[0], s[1]))
}

/// Closed-form Gram entry `⟨e^*_{σ₁.γ}, e^*_{σ₂.γ}⟩`.
pub fn gram_tensor_closed(
    gamma: &Sequence,
    sigma1: &DicyclicElement,
    sigma2: &DicyclicElement,
    chi: &CharacterFn,
) -> Result<CyclotomicNumber> {
    let group = chi.group();
    check_length(group, gamma.len())?;
    let s = indices(group, &[sigma1, sigma2])?;
    let space = Space::Tensor { dim: gamma.entries().iter().copied().max().unwrap_or(1) };
    let stab = stabilizer_raw(group, &space, gamma.entries());
    Ok(Evaluator::new(chi, space).tensor_entry(&stab, s[0], s[1]))
}

/// The single coset sum `(χ(1)/|S|) Σ_{x∈σ₂G_γσ₁⁻¹ ∩ S} χ(x)`.
///
/// Exact for ordinary characters. For Brauer characters it can disagree with
/// the true inner product; [`gram_tensor_closed`] is the correct form there.
pub fn gram_tensor_coset_sum(
    gamma: &Sequence,
    sigma1: &DicyclicElement,
    sigma2: &DicyclicElement,
    chi: &CharacterFn,
) -> Result<CyclotomicNumber> {
    let group = chi.group();
    check_length(group, gamma.len())?;
    let s = indices(group, &[sigma1, sigma2])?;
    let space = Space::Tensor { dim: gamma.entries().iter().copied().max().unwrap_or(1) };
    let stab = stabilizer_raw(group, &space, gamma.entries());
    Ok(Evaluator::new(chi, space).tensor_coset_sum(&stab, s[0], s[1]))
}

/// Symmetrized vectors of every transversal translate of an orbit.
pub fn orbit_vectors(orbit: &OrbitData, phi: &CharacterFn) -> Vec<SymmetrizedVector> {
    let ev = Evaluator::new(phi, orbit.space);
    orbit.transversal.iter().map(|t| ev.vector(&orbit.representative, t.index())).collect()
}

/// Closed-form Gram matrix over the orbit transversal.
pub fn gram_matrix_closed(orbit: &OrbitData, phi: &CharacterFn) -> Vec<Vec<CyclotomicNumber>> {
    let ev = Evaluator::new(phi, orbit.space);
    let stab: Vec<usize> = orbit.stabilizer.iter().map(DicyclicElement::index).collect();
    let ts: Vec<usize> = orbit.transversal.iter().map(DicyclicElement::index).collect();
    ts.iter().map(|&a| ts.iter().map(|&b| ev.entry(&stab, a, b)).collect()).collect()
}

/// Gram matrix over the orbit transversal by direct expansion.
pub fn gram_matrix_direct(orbit: &OrbitData, phi: &CharacterFn) -> Vec<Vec<CyclotomicNumber>> {
    let vs = orbit_vectors(orbit, phi);
    vs.iter()
        .map(|v| vs.iter().map(|w| inner_direct(v, w).expect("same space")).collect())
        .collect()
}

/// Permute the variables of a symmetrized vector by `σ`.
///
/// On monomials `X^β ↦ X^{βσ⁻¹}`; on tensors `e_β ↦ e_{σ.β}`. With these
/// conventions `σ·X^{α,*} = X^{ασ⁻¹,*}` and `σ·e^*_γ = e^*_{σ.γ}`.
pub fn permute_vector(group: &DicyclicGroup, v: &SymmetrizedVector, sigma: &DicyclicElement) -> Result<SymmetrizedVector> {
    group.check(sigma)?;
    let g = match v.space {
        Space::Polynomial { .. } => group.inv_index(sigma.index()),
        Space::Tensor { .. } => sigma.index(),
    };
    let mut out = v.clone();
    out.coeffs = v.coeffs.iter().map(|(k, c)| (act_raw(group, &v.space, k, g), c.clone())).collect();
    Ok(out)
}

/// `Σ_{σ∈G_α∩S} φ(σ)`; nonzero exactly when the coefficient of `X^α` in
/// `X^{α,*}` is nonzero.
pub fn stabilizer_character_sum(phi: &CharacterFn, space: Space, tuple: &[u32]) -> Result<CyclotomicNumber> {
    check_length(phi.group(), tuple.len())?;
    let stab = stabilizer_raw(phi.group(), &space, tuple);
    Ok(Evaluator::new(phi, space).stabilizer_sum(&stab))
}

/// Orbital dimension formula `Σ_i χ_i(e)(χ_i,1)_{G_α}` over the distinct
/// irreducible constituents `χ_i` of an ordinary character.
///
/// For irreducible `χ` this is `χ(1)(χ,1)_{G_α} = (χ(1)/|G_α|) Σ_{σ∈G_α} χ(σ)`.
pub fn dim_orbital(psi: &CharacterFn, stabilizer: &[DicyclicElement]) -> Result<u32> {
    let irr = character_table(psi.group())?;
    let mult = decompose(psi, &irr)?;
    let mut total = 0u32;
    for (chi, &a) in irr.iter().zip(&mult) {
        if a == 0 {
            continue;
        }
        let value = trivial_multiplicity(chi, stabilizer)?.scale(&BigRational::from_integer(chi.degree().into()));
        let k = value
            .to_integer()
            .filter(|k| *k >= BigInt::from(0))
            .and_then(|k| u32::try_from(k).ok())
            .ok_or_else(|| SymclassError::NonInteger(value.to_string()))?;
        total += k;
    }
    Ok(total)
}
