//! Ordinary and Brauer characters of `T_{4n}`.
//!
//! Linear characters are defined by their images on the generators and
//! extended multiplicatively; degree-two characters are induced from the
//! cyclic subgroup `C = <r>`. Brauer characters are restrictions to the set
//! of `p`-regular elements.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::group::{ensure_prime, DicyclicElement, DicyclicGroup};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Result, SymclassError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharacterKind {
    /// `ψ_j`, `0 <= j < 4`.
    OrdinaryLinear { j: u32 },
    /// `χ_h`, `1 <= h <= n-1`.
    OrdinaryDegreeTwo { h: u32 },
    /// `ψ̂_j = ψ_j` restricted to the `p`-regular elements.
    BrauerLinear { j: u32, p: u64 },
    /// `χ̂_h = χ_h` restricted to the `p`-regular elements.
    BrauerDegreeTwo { h: u32, p: u64 },
    /// `λ_h(r^k) = ω^{kh}` on the cyclic subgroup `<r>`.
    CyclicLinear { h: i64 },
    /// Sums and ad hoc restrictions.
    Composite,
}

/// A scalar function on a subset `S` of the group containing the identity.
#[derive(Clone)]
pub struct CharacterFn {
    group: Arc<DicyclicGroup>,
    values: Vec<Option<CyclotomicNumber>>,
    domain: Vec<usize>,
    degree: u32,
    kind: CharacterKind,
    label: String,
}

impl fmt::Debug for CharacterFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CharacterFn")
            .field("n", &self.group.n())
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("domain_size", &self.domain.len())
            .finish()
    }
}

impl CharacterFn {
    /// Build from a value function over `domain` (canonical indices).
    pub fn from_fn(
        group: &Arc<DicyclicGroup>,
        domain: Vec<usize>,
        kind: CharacterKind,
        label: impl Into<String>,
        f: impl Fn(DicyclicElement) -> CyclotomicNumber,
    ) -> Result<Self> {
        let mut domain = domain;
        domain.sort_unstable();
        domain.dedup();
        if domain.first() != Some(&0) {
            return Err(SymclassError::InvalidParameter(
                "character domain must contain the identity".into(),
            ));
        }
        let mut values = vec![None; group.order()];
        for &i in &domain {
            values[i] = Some(f(group.element(i)));
        }
        let degree = values[0]
            .as_ref()
            .unwrap()
            .to_integer()
            .filter(|d| d.is_positive())
            .and_then(|d| u32::try_from(d).ok())
            .ok_or_else(|| {
                SymclassError::InvalidParameter("value at the identity must be a positive integer".into())
            })?;
        Ok(CharacterFn {
            group: Arc::clone(group),
            values,
            domain,
            degree,
            kind,
            label: label.into(),
        })
    }

    pub fn group(&self) -> &Arc<DicyclicGroup> {
        &self.group
    }

    pub fn kind(&self) -> &CharacterKind {
        &self.kind
    }

    /// Short name, `psi:j`, `chi:h`, `lambda:h`, or a composite label.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Whether this is a restriction to `p`-regular elements.
    pub fn is_brauer(&self) -> bool {
        matches!(self.kind, CharacterKind::BrauerLinear { .. } | CharacterKind::BrauerDegreeTwo { .. })
    }

    /// `φ(1)`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Canonical indices of the domain, ascending.
    pub fn domain_indices(&self) -> &[usize] {
        &self.domain
    }

    pub fn domain(&self) -> Vec<DicyclicElement> {
        self.domain.iter().map(|&i| self.group.element(i)).collect()
    }

    /// Defined on all of `G`.
    pub fn is_total(&self) -> bool {
        self.domain.len() == self.group.order()
    }

    pub fn value(&self, g: &DicyclicElement) -> Option<&CyclotomicNumber> {
        if !self.group.contains(g) {
            return None;
        }
        self.values[g.index()].as_ref()
    }

    #[inline]
    pub fn value_at(&self, index: usize) -> Option<&CyclotomicNumber> {
        self.values[index].as_ref()
    }

    /// Restriction to the elements of `subset` that lie in the current domain.
    pub fn restrict(&self, subset: &[DicyclicElement], kind: CharacterKind, label: impl Into<String>) -> Result<Self> {
        for g in subset {
            self.group.check(g)?;
        }
        let domain: Vec<usize> = subset
            .iter()
            .map(|g| g.index())
            .filter(|&i| self.values[i].is_some())
            .collect();
        CharacterFn::from_fn(&self.group, domain, kind, label, |g| {
            self.values[g.index()].clone().unwrap()
        })
    }

    /// Pointwise sum on the common domain.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        if self.group.n() != other.group.n() {
            return Err(SymclassError::GroupMismatch { left: self.group.n(), right: other.group.n() });
        }
        let domain: Vec<usize> = self.domain.iter().copied().filter(|&i| other.values[i].is_some()).collect();
        CharacterFn::from_fn(
            &self.group,
            domain,
            CharacterKind::Composite,
            format!("{}+{}", self.label, other.label),
            |g| self.values[g.index()].as_ref().unwrap() + other.values[g.index()].as_ref().unwrap(),
        )
    }

    /// Constant on every conjugacy class intersected with the domain.
    pub fn is_class_function(&self) -> bool {
        self.group.conjugacy_classes().iter().all(|class| {
            let mut vals = class.iter().filter_map(|g| self.value(g));
            match vals.next() {
                None => true,
                Some(first) => vals.all(|v| v == first),
            }
        })
    }
}

/// `(φ, ψ)_K = (1/|K|) Σ_{σ∈K} φ(σ) ψ(σ^{-1})`; `K` must lie in both domains.
pub fn inner_on(phi: &CharacterFn, psi: &CharacterFn, subset: &[DicyclicElement]) -> Result<CyclotomicNumber> {
    let group = phi.group();
    let mut acc = group.field().zero();
    for g in subset {
        group.check(g)?;
        let a = phi.value(g).ok_or_else(|| outside(phi, g))?;
        let b = psi.value(&g.inverse()).ok_or_else(|| outside(psi, g))?;
        acc += &(a * b);
    }
    Ok(acc.scale(&BigRational::new(1.into(), BigInt::from(subset.len()))))
}

/// `(φ, 1)_K`.
pub fn trivial_multiplicity(phi: &CharacterFn, subset: &[DicyclicElement]) -> Result<CyclotomicNumber> {
    let group = phi.group();
    let mut acc = group.field().zero();
    for g in subset {
        acc += phi.value(g).ok_or_else(|| outside(phi, g))?;
    }
    Ok(acc.scale(&BigRational::new(1.into(), BigInt::from(subset.len()))))
}

fn outside(phi: &CharacterFn, g: &DicyclicElement) -> SymclassError {
    SymclassError::InvalidParameter(format!("{g} is outside the domain of {}", phi.label()))
}

/// Generator images `(exponent of ψ(r), exponent of ψ(s))` in `Q(ζ_{4n})`.
fn linear_generator_exponents(n: u32, j: u32) -> (i64, i64) {
    let n = n as i64;
    if n % 2 == 0 {
        // Klein four quotient: ψ(r), ψ(s) ∈ {±1}
        let (x, y) = [(0, 0), (1, 0), (0, 1), (1, 1)][j as usize];
        (2 * n * x, 2 * n * y)
    } else {
        // cyclic quotient of order 4 generated by s: ψ(s) = i^j, ψ(r) = ψ(s)^2
        let s_exp = n * j as i64;
        (2 * s_exp, s_exp)
    }
}

/// `ψ_j`, `0 <= j < 4`.
pub fn linear_character(group: &Arc<DicyclicGroup>, j: u32) -> Result<CharacterFn> {
    if j >= 4 {
        return Err(SymclassError::InvalidParameter(format!("linear character index {j} must be < 4")));
    }
    let (re, se) = linear_generator_exponents(group.n(), j);
    let field = Arc::clone(group.field());
    CharacterFn::from_fn(
        group,
        (0..group.order()).collect(),
        CharacterKind::OrdinaryLinear { j },
        format!("psi:{j}"),
        |g| field.root_of_unity(re * g.r_exp() as i64 + if g.has_s() { se } else { 0 }),
    )
}

fn induced_values(group: &Arc<DicyclicGroup>, h: i64) -> impl Fn(DicyclicElement) -> CyclotomicNumber {
    let field = Arc::clone(group.field());
    move |g| {
        if g.has_s() {
            field.zero()
        } else {
            // ω = ζ_{2n} = ζ_{4n}^2
            let e = 2 * h * g.r_exp() as i64;
            &field.root_of_unity(e) + &field.root_of_unity(-e)
        }
    }
}

/// `χ_h`, `1 <= h <= n-1`.
pub fn degree_two_character(group: &Arc<DicyclicGroup>, h: u32) -> Result<CharacterFn> {
    if h == 0 || h >= group.n() {
        return Err(SymclassError::InvalidParameter(format!(
            "chi:{h} requires 1 <= h <= {}",
            group.n().saturating_sub(1)
        )));
    }
    CharacterFn::from_fn(
        group,
        (0..group.order()).collect(),
        CharacterKind::OrdinaryDegreeTwo { h },
        format!("chi:{h}"),
        induced_values(group, h as i64),
    )
}

/// `λ_h` on the cyclic subgroup `<r>`.
pub fn cyclic_character(group: &Arc<DicyclicGroup>, h: i64) -> Result<CharacterFn> {
    let field = Arc::clone(group.field());
    CharacterFn::from_fn(
        group,
        (0..2 * group.n() as usize).collect(),
        CharacterKind::CyclicLinear { h },
        format!("lambda:{h}"),
        move |g| field.root_of_unity(2 * h * g.r_exp() as i64),
    )
}

/// The ordinary irreducible characters: `ψ_0..ψ_3` followed by `χ_1..χ_{n-1}`.
pub fn character_table(group: &Arc<DicyclicGroup>) -> Result<Vec<CharacterFn>> {
    let mut table = (0..4).map(|j| linear_character(group, j)).collect::<Result<Vec<_>>>()?;
    for h in 1..group.n() {
        table.push(degree_two_character(group, h)?);
    }
    Ok(table)
}

/// Multiplicities of the irreducible constituents of an ordinary character.
pub fn decompose(psi: &CharacterFn, irreducibles: &[CharacterFn]) -> Result<Vec<u32>> {
    if !psi.is_total() {
        return Err(SymclassError::NotOrdinary(psi.label().to_string()));
    }
    let all = psi.group().elements().to_vec();
    irreducibles
        .iter()
        .map(|chi| {
            let m = inner_on(psi, chi, &all)?;
            m.to_integer()
                .filter(|k| !k.is_negative())
                .and_then(|k| u32::try_from(k).ok())
                .ok_or_else(|| SymclassError::NonInteger(m.to_string()))
        })
        .collect()
}

/// `p`-adic split `4n = p^t · l` with `p ∤ l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeSplit {
    pub p: u64,
    pub t: u32,
    pub l: u64,
}

impl PrimeSplit {
    pub fn new(n: u32, p: u64) -> Result<Self> {
        ensure_prime(p)?;
        let mut l = 4 * n as u64;
        let mut t = 0;
        while l % p == 0 {
            l /= p;
            t += 1;
        }
        Ok(PrimeSplit { p, t, l })
    }

    /// Number of linear Brauer characters: 1 for `p = 2`, else 4.
    pub fn epsilon(&self) -> u32 {
        if self.p == 2 {
            1
        } else {
            4
        }
    }

    /// `|<r> ∩ Ĝ|`: `l` when `p = 2`, `l/2` otherwise.
    pub fn cyclic_regular_order(&self) -> u64 {
        if self.p == 2 {
            self.l
        } else {
            self.l / 2
        }
    }
}

/// `ψ̂_j`, the restriction of `ψ_j` to `Ĝ`.
pub fn brauer_linear(group: &Arc<DicyclicGroup>, p: u64, j: u32) -> Result<CharacterFn> {
    let hat = group.p_regular_elements(p)?;
    linear_character(group, j)?.restrict(&hat, CharacterKind::BrauerLinear { j, p }, format!("psi:{j}"))
}

/// `χ̂_h`, the restriction of `χ_h` to `Ĝ` for any `1 <= h <= n-1`.
pub fn brauer_degree_two(group: &Arc<DicyclicGroup>, p: u64, h: u32) -> Result<CharacterFn> {
    let hat = group.p_regular_elements(p)?;
    degree_two_character(group, h)?.restrict(&hat, CharacterKind::BrauerDegreeTwo { h, p }, format!("chi:{h}"))
}

/// The irreducible Brauer characters: `ψ̂_j` for `j < ε` and `χ̂_h` for
/// `1 <= h < |<r> ∩ Ĝ| / 2`.
///
/// On `<r> ∩ Ĝ` the restriction of `χ_h` only depends on `h` modulo the
/// subgroup order and splits into two equal linear pieces at half of it, so
/// this range lists each irreducible exactly once.
pub fn brauer_characters(group: &Arc<DicyclicGroup>, p: u64) -> Result<Vec<CharacterFn>> {
    let split = PrimeSplit::new(group.n(), p)?;
    let mut out = (0..split.epsilon()).map(|j| brauer_linear(group, p, j)).collect::<Result<Vec<_>>>()?;
    let c_hat = split.cyclic_regular_order();
    for h in 1..group.n() as u64 {
        if 2 * h >= c_hat {
            break;
        }
        out.push(brauer_degree_two(group, p, h as u32)?);
    }
    Ok(out)
}

/// A character named on the command line: `psi:j` or `chi:h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterSelector {
    Linear(u32),
    DegreeTwo(u32),
}

impl CharacterSelector {
    /// The ordinary character, or its `p`-regular restriction when `p` is given.
    pub fn resolve(&self, group: &Arc<DicyclicGroup>, p: Option<u64>) -> Result<CharacterFn> {
        match (*self, p) {
            (CharacterSelector::Linear(j), None) => linear_character(group, j),
            (CharacterSelector::DegreeTwo(h), None) => degree_two_character(group, h),
            (CharacterSelector::Linear(j), Some(p)) => brauer_linear(group, p, j),
            (CharacterSelector::DegreeTwo(h), Some(p)) => brauer_degree_two(group, p, h),
        }
    }
}

impl fmt::Display for CharacterSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSelector::Linear(j) => write!(f, "psi:{j}"),
            CharacterSelector::DegreeTwo(h) => write!(f, "chi:{h}"),
        }
    }
}

impl FromStr for CharacterSelector {
    type Err = SymclassError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || SymclassError::InvalidParameter(format!("character selector {s:?} is not psi:j or chi:h"));
        let (name, idx) = s.split_once(':').ok_or_else(bad)?;
        let idx: u32 = idx.trim().parse().map_err(|_| bad())?;
        match name.trim() {
            "psi" => Ok(CharacterSelector::Linear(idx)),
            "chi" => Ok(CharacterSelector::DegreeTwo(idx)),
            _ => Err(bad()),
        }
    }
}
