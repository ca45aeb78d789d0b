//! Orbits of `T_{4n}` on exponent tuples `Γ⁺_{m,d}` and index sequences `Γ^m_k`.
//!
//! Both sets are acted on through the left regular embedding `G ⊂ S_{4n}`.
//! Exponent tuples carry the right action `ασ = (α_{σ(1)}, …, α_{σ(m)})`;
//! sequences carry the left action `σ.γ = (γ_{σ^{-1}(1)}, …, γ_{σ^{-1}(m)})`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::dicyclic::{DicyclicElement, DicyclicGroup};
use crate::error::{Result, SymclassError};

/// An exponent tuple `α ∈ Γ⁺_{m,d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }
}

/// An index sequence `γ ∈ Γ^m_k` with entries in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sequence(pub Vec<u32>);

impl Sequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn check_range(&self, dim: u32) -> Result<()> {
        match self.0.iter().position(|&e| e == 0 || e > dim) {
            Some(position) => Err(SymclassError::EntryOutOfRange { position, entry: self.0[position], dim }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[u32]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// Which symmetry class a tuple indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum Space {
    /// Homogeneous polynomials of the given degree in `4n` variables.
    Polynomial { degree: u32 },
    /// `⊗^{4n} V` with `dim V = dim`.
    Tensor { dim: u32 },
}

impl Space {
    /// `|Γ|` for a permutation degree `m`.
    pub fn tuple_count(&self, m: usize) -> u128 {
        match *self {
            Space::Polynomial { degree } => binomial(m as u128 + degree as u128 - 1, degree as u128),
            Space::Tensor { dim } => (dim as u128).checked_pow(m as u32).unwrap_or(u128::MAX),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Polynomial { degree } => write!(f, "polynomial(d={degree})"),
            Space::Tensor { dim } => write!(f, "tensor(dimV={dim})"),
        }
    }
}

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn check_len(group: &DicyclicGroup, len: usize) -> Result<()> {
    if len == group.order() {
        Ok(())
    } else {
        Err(SymclassError::LengthMismatch { expected: group.order(), found: len })
    }
}

#[inline]
fn act_poly_raw(alpha: &[u32], perm: &[usize]) -> Vec<u32> {
    perm.iter().map(|&j| alpha[j]).collect()
}

#[inline]
fn act_tensor_raw(gamma: &[u32], perm: &[usize]) -> Vec<u32> {
    let mut out = vec![0; gamma.len()];
    for (i, &j) in perm.iter().enumerate() {
        out[j] = gamma[i];
    }
    out
}

/// `ασ = (α_{σ(1)}, …, α_{σ(m)})`; a right action.
pub fn act_poly(group: &DicyclicGroup, alpha: &MultiIndex, sigma: &DicyclicElement) -> Result<MultiIndex> {
    group.check(sigma)?;
    check_len(group, alpha.len())?;
    Ok(MultiIndex(act_poly_raw(&alpha.0, group.regular_permutation(sigma))))
}

/// `σ.γ = (γ_{σ^{-1}(1)}, …, γ_{σ^{-1}(m)})`; a left action.
pub fn act_tensor(group: &DicyclicGroup, gamma: &Sequence, sigma: &DicyclicElement) -> Result<Sequence> {
    group.check(sigma)?;
    check_len(group, gamma.len())?;
    Ok(Sequence(act_tensor_raw(&gamma.0, group.regular_permutation(sigma))))
}

/// Apply the action appropriate to `space` to a raw tuple, by element index.
pub(crate) fn act_raw(group: &DicyclicGroup, space: &Space, tuple: &[u32], g: usize) -> Vec<u32> {
    let perm = group.regular_permutation_by_index(g);
    match space {
        Space::Polynomial { .. } => act_poly_raw(tuple, perm),
        Space::Tensor { .. } => act_tensor_raw(tuple, perm),
    }
}

/// Stabilizer indices of a raw tuple.
pub(crate) fn stabilizer_raw(group: &DicyclicGroup, space: &Space, tuple: &[u32]) -> Vec<usize> {
    (0..group.order())
        .filter(|&g| act_raw(group, space, tuple, g) == tuple)
        .collect()
}

/// `G_α` for an exponent tuple under the right action.
pub fn stabilizer_poly(group: &DicyclicGroup, alpha: &MultiIndex) -> Result<Vec<DicyclicElement>> {
    check_len(group, alpha.len())?;
    let space = Space::Polynomial { degree: alpha.degree() };
    Ok(stabilizer_raw(group, &space, &alpha.0).into_iter().map(|g| group.element(g)).collect())
}

/// `G_γ` for a sequence under the left action.
pub fn stabilizer_tensor(group: &DicyclicGroup, gamma: &Sequence) -> Result<Vec<DicyclicElement>> {
    check_len(group, gamma.len())?;
    let space = Space::Tensor { dim: gamma.0.iter().copied().max().unwrap_or(1) };
    Ok(stabilizer_raw(group, &space, &gamma.0).into_iter().map(|g| group.element(g)).collect())
}

/// Lexicographic minimum of the orbit of `tuple`.
pub fn canonicalize(group: &DicyclicGroup, space: &Space, tuple: &[u32]) -> Vec<u32> {
    (0..group.order())
        .map(|g| act_raw(group, space, tuple, g))
        .min()
        .expect("group is nonempty")
}

/// One orbit: canonical representative, a transversal and the stabilizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    pub space: Space,
    /// Lexicographically minimal orbit member.
    pub representative: Vec<u32>,
    /// `transversal[i]` sends the representative to `members[i]`.
    pub transversal: Vec<DicyclicElement>,
    pub members: Vec<Vec<u32>>,
    pub stabilizer: Vec<DicyclicElement>,
}

impl OrbitData {
    /// Orbit of `tuple` computed directly; the representative is its canonical form.
    pub fn of(group: &DicyclicGroup, space: Space, tuple: &[u32]) -> Result<Self> {
        check_len(group, tuple.len())?;
        let rep = canonicalize(group, &space, tuple);
        Ok(Self::from_representative(group, space, rep))
    }

    fn from_representative(group: &DicyclicGroup, space: Space, rep: Vec<u32>) -> Self {
        let mut members: Vec<Vec<u32>> = Vec::new();
        let mut transversal = Vec::new();
        let mut stabilizer = Vec::new();
        for g in 0..group.order() {
            let img = act_raw(group, &space, &rep, g);
            if img == rep {
                stabilizer.push(group.element(g));
            }
            if !members.contains(&img) {
                members.push(img);
                transversal.push(group.element(g));
            }
        }
        OrbitData { space, representative: rep, transversal, members, stabilizer }
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Successor in lexicographic order among tuples of length `m` summing to `d`.
fn next_composition(alpha: &mut [u32]) -> bool {
    let m = alpha.len();
    if m < 2 {
        return false;
    }
    // rightmost position with mass strictly to its right
    let mut suffix = alpha[m - 1];
    for i in (0..m - 1).rev() {
        if suffix > 0 {
            alpha[i] += 1;
            for x in &mut alpha[i + 1..] {
                *x = 0;
            }
            alpha[m - 1] = suffix - 1;
            return true;
        }
        suffix += alpha[i];
    }
    false
}

fn next_sequence(gamma: &mut [u32], dim: u32) -> bool {
    for i in (0..gamma.len()).rev() {
        if gamma[i] < dim {
            gamma[i] += 1;
            for x in &mut gamma[i + 1..] {
                *x = 1;
            }
            return true;
        }
    }
    false
}

/// Streaming enumeration of orbit representatives in increasing order.
///
/// A tuple is emitted iff it is minimal in its own orbit, so `Γ` is never
/// materialized.
pub struct OrbitReps {
    group: Arc<DicyclicGroup>,
    space: Space,
    current: Option<Vec<u32>>,
}

impl Iterator for OrbitReps {
    type Item = OrbitData;

    fn next(&mut self) -> Option<OrbitData> {
        loop {
            let tuple = self.current.clone()?;
            let mut succ = tuple.clone();
            let more = match self.space {
                Space::Polynomial { .. } => next_composition(&mut succ),
                Space::Tensor { dim } => next_sequence(&mut succ, dim),
            };
            self.current = more.then_some(succ);
            let minimal = (1..self.group.order()).all(|g| act_raw(&self.group, &self.space, &tuple, g) >= tuple);
            if minimal {
                return Some(OrbitData::from_representative(&self.group, self.space, tuple));
            }
        }
    }
}

pub fn orbit_reps(group: &Arc<DicyclicGroup>, space: Space) -> Result<OrbitReps> {
    let m = group.order();
    let first = match space {
        Space::Polynomial { degree } => {
            let mut v = vec![0; m];
            v[m - 1] = degree;
            v
        }
        Space::Tensor { dim } => {
            if dim == 0 {
                return Err(SymclassError::InvalidParameter("dim V must be at least 1".into()));
            }
            vec![1; m]
        }
    };
    Ok(OrbitReps { group: Arc::clone(group), space, current: Some(first) })
}

/// Multi-index with trivial stabilizer built from the cycles of `a`.
///
/// Each cycle of the regular permutation of `a` gets its first point set to
/// `Ξ_i` and its other points set to `Θ_i`; fixed points are one-point cycles.
/// Values are the smallest admissible ones (`Θ_i = 0`, `Ξ_i = 1` on
/// nontrivial cycles, `Ξ_i = 0` on fixed points) and the remaining degree is
/// added to the first cycle. The result is checked to have `G_α = {e}`.
pub fn construct_free_multiindex(group: &DicyclicGroup, a: &DicyclicElement, degree: u32) -> Result<MultiIndex> {
    group.check(a)?;
    let perm = group.regular_permutation(a);
    let m = perm.len();
    let mut seen = vec![false; m];
    let mut alpha = vec![0u32; m];
    let mut firsts = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        alpha[start] = u32::from(len > 1);
        firsts.push(start);
    }
    let minimum: u32 = alpha.iter().sum();
    let too_small = SymclassError::DegreeTooSmall { degree, needed: minimum.max(1) };
    if degree < minimum {
        return Err(too_small);
    }
    alpha[firsts[0]] += degree - minimum;
    let alpha = MultiIndex(alpha);
    if stabilizer_poly(group, &alpha)?.len() == 1 {
        Ok(alpha)
    } else {
        Err(SymclassError::DegreeTooSmall { degree, needed: minimum + 1 })
    }
}
