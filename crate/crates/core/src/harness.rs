//! Checks the closed-form existence criteria for orthogonal bases against
//! exact computation, together with the counting and decomposition identities
//! they rest on.
//!
//! Every claim has an arithmetic prediction ([`predict`]) and a computed
//! verdict. A sweep produces one [`VerificationRecord`] per parameter point
//! inside the claim's hypotheses; points outside produce nothing.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;
use serde::Serialize;

use crate::cyclotomic::CyclotomicNumber;
use crate::dicyclic::{
    brauer_characters, brauer_degree_two, brauer_linear, character_table, degree_two_character, inner_on,
    CharacterFn, CharacterSelector, DicyclicGroup, PrimeSplit,
};
use crate::error::{Result, SymclassError};
use crate::obasis::{decide_obasis, decide_orbits, ObasisReport, OrbitRecord};
use crate::orbits::{orbit_reps, OrbitData, Space};
use crate::symmetrize::{gram_matrix_closed, gram_matrix_direct, inner_direct, orbit_vectors};

/// Default ceiling on `4n · |Γ|` work units for one parameter point.
pub const DEFAULT_WORK_CEILING: u128 = 2_000_000;

/// Environment variable overriding [`DEFAULT_WORK_CEILING`].
pub const WORK_CEILING_ENV: &str = "SYMCLASS_WORK_CEILING";

pub fn work_ceiling_from_env() -> u128 {
    std::env::var(WORK_CEILING_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_WORK_CEILING)
}

/// A checkable statement about `T_{4n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    /// `H_d(G; ψ̂_j)` has an o-basis iff `p = 2` or `p ∤ 4n`.
    LinearBrauerPoly,
    /// `H_d(G; χ̂_h)` has an o-basis iff `l / gcd(l, h)` is even.
    DegreeTwoBrauerPoly,
    /// `H_d(G; χ_h)` has an o-basis iff `n ≡ 0 mod 2h₂`, `h₂` the 2-part of `h`.
    OrdinaryDegreeTwoPoly,
    /// `V_χ(G)` for `χ = ψ̂_j` has an orthogonal ∗-basis iff `dim V = 1`, `p = 2` or `p ∤ 4n`.
    LinearBrauerTensor,
    /// Same for `χ̂_h`: iff `dim V = 1` or `l / gcd(l, h)` is even.
    DegreeTwoBrauerTensor,
    /// Same for `χ_h` with `dim V >= 2`: iff `n ≡ 0 mod 2h₂`.
    OrdinaryDegreeTwoTensor,
    /// The symmetry classes of the irreducible characters exhaust the space
    /// orthogonally, with orbital dimensions given by the character formula.
    Decomposition,
    /// The number of irreducible Brauer characters equals the number of
    /// `p`-regular classes.
    BrauerCount,
    /// First orthogonality of the ordinary character table.
    CharacterOrthogonality,
}

impl Claim {
    pub const ALL: [Claim; 9] = [
        Claim::LinearBrauerPoly,
        Claim::DegreeTwoBrauerPoly,
        Claim::OrdinaryDegreeTwoPoly,
        Claim::LinearBrauerTensor,
        Claim::DegreeTwoBrauerTensor,
        Claim::OrdinaryDegreeTwoTensor,
        Claim::Decomposition,
        Claim::BrauerCount,
        Claim::CharacterOrthogonality,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Claim::LinearBrauerPoly => "linear-brauer-poly",
            Claim::DegreeTwoBrauerPoly => "degree-two-brauer-poly",
            Claim::OrdinaryDegreeTwoPoly => "ordinary-degree-two-poly",
            Claim::LinearBrauerTensor => "linear-brauer-tensor",
            Claim::DegreeTwoBrauerTensor => "degree-two-brauer-tensor",
            Claim::OrdinaryDegreeTwoTensor => "ordinary-degree-two-tensor",
            Claim::Decomposition => "decomposition",
            Claim::BrauerCount => "brauer-count",
            Claim::CharacterOrthogonality => "character-orthogonality",
        }
    }

    fn needs_prime(&self) -> bool {
        matches!(
            self,
            Claim::LinearBrauerPoly
                | Claim::DegreeTwoBrauerPoly
                | Claim::LinearBrauerTensor
                | Claim::DegreeTwoBrauerTensor
                | Claim::BrauerCount
        )
    }

    fn is_tensor(&self) -> bool {
        matches!(self, Claim::LinearBrauerTensor | Claim::DegreeTwoBrauerTensor | Claim::OrdinaryDegreeTwoTensor)
    }

    fn is_obasis(&self) -> bool {
        !matches!(self, Claim::Decomposition | Claim::BrauerCount | Claim::CharacterOrthogonality)
    }

    fn linear(&self) -> bool {
        matches!(self, Claim::LinearBrauerPoly | Claim::LinearBrauerTensor)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = SymclassError;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.name() == s.trim()).ok_or_else(|| {
            let names: Vec<_> = Claim::ALL.iter().map(Claim::name).collect();
            SymclassError::InvalidParameter(format!("unknown claim {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

/// One point of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterPoint {
    pub claim: Claim,
    pub n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    /// Polynomial degree, or tensor `dim V`.
    pub space: Option<Space>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_selector")]
    pub character: Option<CharacterSelector>,
}

fn ser_selector<S: serde::Serializer>(
    sel: &Option<CharacterSelector>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match sel {
        Some(c) => s.collect_str(c),
        None => s.serialize_none(),
    }
}

impl fmt::Display for ParameterPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.claim, self.n)?;
        if let Some(p) = self.p {
            write!(f, " p={p}")?;
        }
        match self.space {
            Some(Space::Polynomial { degree }) => write!(f, " d={degree}")?,
            Some(Space::Tensor { dim }) => write!(f, " dimV={dim}")?,
            None => {}
        }
        if let Some(c) = self.character {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

fn out_of_hypothesis(point: &ParameterPoint, why: &str) -> SymclassError {
    SymclassError::OutOfHypothesis(format!("{point}: {why}"))
}

/// `2`-part of `h`.
fn two_part(h: u32) -> u32 {
    1 << h.trailing_zeros()
}

fn selector_index(point: &ParameterPoint, want_linear: bool) -> Result<u32> {
    match (point.character, want_linear) {
        (Some(CharacterSelector::Linear(j)), true) => Ok(j),
        (Some(CharacterSelector::DegreeTwo(h)), false) => Ok(h),
        _ => Err(out_of_hypothesis(point, if want_linear { "needs psi:j" } else { "needs chi:h" })),
    }
}

fn tensor_dim(point: &ParameterPoint) -> Result<u32> {
    match point.space {
        Some(Space::Tensor { dim }) if dim >= 1 => Ok(dim),
        _ => Err(out_of_hypothesis(point, "needs dimV >= 1")),
    }
}

fn poly_degree(point: &ParameterPoint) -> Result<u32> {
    match point.space {
        Some(Space::Polynomial { degree }) if degree >= 1 => Ok(degree),
        _ => Err(out_of_hypothesis(point, "needs d >= 1")),
    }
}

fn prime_split(point: &ParameterPoint) -> Result<PrimeSplit> {
    let p = point.p.ok_or_else(|| out_of_hypothesis(point, "needs a prime p"))?;
    PrimeSplit::new(point.n, p)
}

/// `1 <= h < l/2` and `χ_h` exists (`h <= n - 1`).
fn check_brauer_h(point: &ParameterPoint, split: &PrimeSplit, h: u32) -> Result<()> {
    if h == 0 || 2 * h as u64 >= split.l || h >= point.n {
        return Err(out_of_hypothesis(point, &format!("h must satisfy 1 <= h < l/2 = {}/2 and h <= n-1", split.l)));
    }
    Ok(())
}

fn check_ordinary_h(point: &ParameterPoint, h: u32) -> Result<()> {
    if h == 0 || h >= point.n {
        return Err(out_of_hypothesis(point, "h must satisfy 1 <= h <= n-1"));
    }
    Ok(())
}

fn check_linear_j(point: &ParameterPoint, split: &PrimeSplit, j: u32) -> Result<()> {
    if j >= split.epsilon() {
        return Err(out_of_hypothesis(point, &format!("j must be < {}", split.epsilon())));
    }
    Ok(())
}

/// The closed-form verdict for a parameter point.
pub fn predict(point: &ParameterPoint) -> Result<bool> {
    if point.n == 0 {
        return Err(out_of_hypothesis(point, "n must be >= 1"));
    }
    match point.claim {
        Claim::LinearBrauerPoly | Claim::LinearBrauerTensor => {
            let split = prime_split(point)?;
            check_linear_j(point, &split, selector_index(point, true)?)?;
            let easy = split.p == 2 || split.t == 0;
            if point.claim == Claim::LinearBrauerTensor {
                Ok(tensor_dim(point)? == 1 || easy)
            } else {
                poly_degree(point)?;
                Ok(easy)
            }
        }
        Claim::DegreeTwoBrauerPoly | Claim::DegreeTwoBrauerTensor => {
            let split = prime_split(point)?;
            let h = selector_index(point, false)?;
            check_brauer_h(point, &split, h)?;
            let l_prime = split.l / split.l.gcd(&(h as u64));
            let even = l_prime % 2 == 0;
            if point.claim == Claim::DegreeTwoBrauerTensor {
                Ok(tensor_dim(point)? == 1 || even)
            } else {
                poly_degree(point)?;
                Ok(even)
            }
        }
        Claim::OrdinaryDegreeTwoPoly | Claim::OrdinaryDegreeTwoTensor => {
            let h = selector_index(point, false)?;
            check_ordinary_h(point, h)?;
            if point.claim == Claim::OrdinaryDegreeTwoTensor {
                if tensor_dim(point)? < 2 {
                    return Err(out_of_hypothesis(point, "needs dimV >= 2"));
                }
            } else {
                poly_degree(point)?;
            }
            Ok(point.n % (2 * two_part(h)) == 0)
        }
        Claim::Decomposition => {
            match point.space {
                Some(Space::Polynomial { degree }) if degree >= 1 => {}
                Some(Space::Tensor { dim }) if dim >= 1 => {}
                _ => return Err(out_of_hypothesis(point, "needs d >= 1 or dimV >= 1")),
            }
            Ok(true)
        }
        Claim::BrauerCount => {
            prime_split(point)?;
            Ok(true)
        }
        Claim::CharacterOrthogonality => Ok(true),
    }
}

/// Verdict for the o-basis question on degree-two Brauer characters obtained
/// from the structure of `χ̂_h` on `<r> ∩ Ĝ`, of order `c`: an orthogonal
/// basis exists iff `λ_h` is real there (`c | 2h`) or takes the value `±i`
/// there (`4 | c / gcd(c, h)`).
///
/// Agrees with exact computation over the tested range; it coincides with
/// the `n ≡ 0 mod 2h₂` rule when `p ∤ 4n`, where the `l/gcd(l, h)` parity
/// rule can differ.
pub fn cyclic_part_criterion(n: u32, p: u64, h: u32) -> Result<bool> {
    let c = PrimeSplit::new(n, p)?.cyclic_regular_order();
    let h = h as u64;
    Ok((2 * h) % c == 0 || (c / c.gcd(&h)) % 4 == 0)
}

/// Which orbits to decide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitScope {
    /// Every orbit; the space verdict is exact.
    Full,
    /// The free orbit of `(d,0,…,0)` (or `(2,1,…,1)` for tensors) first; if
    /// it already fails the space verdict is false, otherwise fall back to
    /// every orbit.
    PrecheckThenFull,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSpec {
    pub claims: Vec<Claim>,
    pub n_values: Vec<u32>,
    pub primes: Vec<u64>,
    pub degrees: Vec<u32>,
    pub dims: Vec<u32>,
    /// Restrict to these characters; `None` means every character the claim covers.
    #[serde(skip)]
    pub characters: Option<Vec<CharacterSelector>>,
    pub work_ceiling: u128,
    pub halt_on_disagreement: bool,
    pub scope: OrbitScope,
}

impl SweepSpec {
    pub fn new(claims: Vec<Claim>, n_values: Vec<u32>) -> Self {
        SweepSpec {
            claims,
            n_values,
            primes: vec![2, 3, 5],
            degrees: vec![2],
            dims: vec![1, 2],
            characters: None,
            work_ceiling: work_ceiling_from_env(),
            halt_on_disagreement: true,
            scope: OrbitScope::PrecheckThenFull,
        }
    }

    pub fn primes(mut self, primes: Vec<u64>) -> Self {
        self.primes = primes;
        self
    }

    pub fn degrees(mut self, degrees: Vec<u32>) -> Self {
        self.degrees = degrees;
        self
    }

    pub fn dims(mut self, dims: Vec<u32>) -> Self {
        self.dims = dims;
        self
    }

    pub fn characters(mut self, characters: Vec<CharacterSelector>) -> Self {
        self.characters = Some(characters);
        self
    }

    pub fn work_ceiling(mut self, ceiling: u128) -> Self {
        self.work_ceiling = ceiling;
        self
    }

    pub fn scope(mut self, scope: OrbitScope) -> Self {
        self.scope = scope;
        self
    }

    pub fn halt_on_disagreement(mut self, halt: bool) -> Self {
        self.halt_on_disagreement = halt;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.claims.is_empty() || self.n_values.is_empty() {
            return Err(SymclassError::InvalidParameter("sweep needs at least one claim and one n".into()));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n == 0) {
            return Err(SymclassError::InvalidParameter(format!("n = {n} is not allowed; n >= 1")));
        }
        for &p in &self.primes {
            if !crate::dicyclic::is_prime(p) {
                return Err(SymclassError::NotPrime(p));
            }
        }
        Ok(())
    }

    /// Every point the sweep covers, in deterministic order, including
    /// points outside a claim's hypotheses (those are filtered by [`verify`]).
    pub fn points(&self) -> Vec<ParameterPoint> {
        let mut out = Vec::new();
        for &claim in &self.claims {
            for &n in &self.n_values {
                let primes: Vec<Option<u64>> =
                    if claim.needs_prime() { self.primes.iter().map(|&p| Some(p)).collect() } else { vec![None] };
                let spaces: Vec<Option<Space>> = match claim {
                    Claim::BrauerCount | Claim::CharacterOrthogonality => vec![None],
                    Claim::Decomposition => self
                        .degrees
                        .iter()
                        .map(|&degree| Some(Space::Polynomial { degree }))
                        .chain(self.dims.iter().map(|&dim| Some(Space::Tensor { dim })))
                        .collect(),
                    c if c.is_tensor() => self.dims.iter().map(|&dim| Some(Space::Tensor { dim })).collect(),
                    _ => self.degrees.iter().map(|&degree| Some(Space::Polynomial { degree })).collect(),
                };
                let characters: Vec<Option<CharacterSelector>> = if !claim.is_obasis() {
                    vec![None]
                } else {
                    let all: Vec<CharacterSelector> = if claim.linear() {
                        (0..4).map(CharacterSelector::Linear).collect()
                    } else {
                        (1..n).map(CharacterSelector::DegreeTwo).collect()
                    };
                    all.into_iter()
                        .filter(|c| self.characters.as_ref().is_none_or(|keep| keep.contains(c)))
                        .map(Some)
                        .collect()
                };
                for &p in &primes {
                    for &space in &spaces {
                        for &character in &characters {
                            out.push(ParameterPoint { claim, n, p, space, character });
                        }
                    }
                }
            }
        }
        out
    }
}

/// Evidence attached to a record.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "type")]
pub enum Payload {
    Obasis {
        orbits_decided: usize,
        orbits_total: Option<usize>,
        dimension: Option<usize>,
        /// First orbit without an orthogonal basis, if any.
        failing_orbit: Option<OrbitRecord>,
    },
    Decomposition {
        expected_total: u128,
        total: u128,
        per_character: Vec<(String, usize)>,
        formula_mismatches: usize,
        cross_terms_nonzero: usize,
    },
    Count {
        brauer_characters: usize,
        p_regular_classes: usize,
    },
    Orthogonality {
        characters: usize,
        failures: Vec<(String, String)>,
    },
}

/// Reproducible evidence for a disagreement.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleBundle {
    pub point: ParameterPoint,
    /// The orbit whose verdict decided the space verdict, with its exact
    /// Gram matrix by direct expansion.
    pub orbit: Option<OrbitRecord>,
    pub gram: Option<Vec<Vec<CyclotomicNumber>>>,
    pub attempt_log: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub point: ParameterPoint,
    pub predicted: bool,
    pub computed: bool,
    pub agrees: bool,
    pub payload: Payload,
    pub counterexample: Option<CounterexampleBundle>,
}

fn character_for(group: &Arc<DicyclicGroup>, point: &ParameterPoint) -> Result<CharacterFn> {
    match (point.claim, point.character) {
        (Claim::LinearBrauerPoly | Claim::LinearBrauerTensor, Some(CharacterSelector::Linear(j))) => {
            brauer_linear(group, point.p.unwrap(), j)
        }
        (Claim::DegreeTwoBrauerPoly | Claim::DegreeTwoBrauerTensor, Some(CharacterSelector::DegreeTwo(h))) => {
            brauer_degree_two(group, point.p.unwrap(), h)
        }
        (_, Some(CharacterSelector::DegreeTwo(h))) => degree_two_character(group, h),
        _ => Err(out_of_hypothesis(point, "no character for this claim")),
    }
}

fn check_ceiling(point: &ParameterPoint, group: &DicyclicGroup, space: Space, ceiling: u128) -> Result<()> {
    let units = (group.order() as u128).saturating_mul(space.tuple_count(group.order()));
    if units > ceiling {
        return Err(SymclassError::WorkCeiling { point: point.to_string(), units, ceiling });
    }
    Ok(())
}

/// The orbit the necessity arguments single out: `(d,0,…,0)` or `(2,1,…,1)`.
pub fn witness_orbit(group: &DicyclicGroup, space: Space) -> Result<OrbitData> {
    let m = group.order();
    let tuple = match space {
        Space::Polynomial { degree } => {
            let mut t = vec![0; m];
            t[0] = degree;
            t
        }
        Space::Tensor { dim } => {
            let mut t = vec![1; m];
            if dim >= 2 {
                t[0] = 2;
            }
            t
        }
    };
    OrbitData::of(group, space, &tuple)
}

struct ObasisOutcome {
    verdict: bool,
    orbits_decided: usize,
    orbits_total: Option<usize>,
    dimension: Option<usize>,
    failing: Option<(OrbitRecord, OrbitData)>,
    log: Vec<String>,
}

fn run_obasis(
    group: &Arc<DicyclicGroup>,
    phi: &CharacterFn,
    space: Space,
    scope: OrbitScope,
) -> Result<ObasisOutcome> {
    let mut log = Vec::new();
    if scope == OrbitScope::PrecheckThenFull {
        let orbit = witness_orbit(group, space)?;
        let report = decide_orbits(phi, space, [&orbit])?;
        let rec = &report.orbits[0];
        log.push(format!(
            "precheck orbit {:?}: rank {}, {} vertices, {} edges, obasis {}",
            rec.representative, rec.rank, rec.vertex_count, rec.edge_count, rec.has_obasis
        ));
        if !rec.has_obasis {
            return Ok(ObasisOutcome {
                verdict: false,
                orbits_decided: 1,
                orbits_total: None,
                dimension: None,
                failing: Some((rec.clone(), orbit)),
                log,
            });
        }
    }
    let report: ObasisReport = decide_obasis(group, space, phi)?;
    log.push(format!("full sweep: {} orbits, dimension {}, verdict {}", report.orbits.len(), report.dimension, report.verdict));
    let failing = match report.orbits.iter().find(|o| !o.has_obasis) {
        Some(rec) => Some((rec.clone(), OrbitData::of(group, space, &rec.representative)?)),
        None => None,
    };
    Ok(ObasisOutcome {
        verdict: report.verdict,
        orbits_decided: report.orbits.len(),
        orbits_total: Some(report.orbits.len()),
        dimension: Some(report.dimension),
        failing,
        log,
    })
}

fn decomposition_check(group: &Arc<DicyclicGroup>, space: Space) -> Result<(bool, Payload)> {
    let irr = character_table(group)?;
    let expected_total = space.tuple_count(group.order());
    let mut per_character: Vec<(String, usize)> = irr.iter().map(|c| (c.label().to_string(), 0)).collect();
    let mut formula_mismatches = 0;
    let mut cross_terms_nonzero = 0;
    for orbit in orbit_reps(group, space)? {
        let report = decide_orbits(&irr[0], space, [&orbit])?;
        let mut reps = Vec::with_capacity(irr.len());
        for (k, chi) in irr.iter().enumerate() {
            let rec = if k == 0 { report.orbits[0].clone() } else { decide_orbits(chi, space, [&orbit])?.orbits.remove(0) };
            per_character[k].1 += rec.rank;
            if rec.formula_dimension != Some(rec.rank as u32) {
                formula_mismatches += 1;
            }
            reps.push(orbit_vectors(&orbit, chi).remove(0));
        }
        for a in 0..reps.len() {
            for b in a + 1..reps.len() {
                if !inner_direct(&reps[a], &reps[b])?.is_zero() {
                    cross_terms_nonzero += 1;
                }
            }
        }
    }
    let total: u128 = per_character.iter().map(|(_, r)| *r as u128).sum();
    let ok = total == expected_total && formula_mismatches == 0 && cross_terms_nonzero == 0;
    Ok((ok, Payload::Decomposition { expected_total, total, per_character, formula_mismatches, cross_terms_nonzero }))
}

fn orthogonality_check(group: &Arc<DicyclicGroup>) -> Result<(bool, Payload)> {
    let irr = character_table(group)?;
    let all = group.elements().to_vec();
    let mut failures = Vec::new();
    for a in &irr {
        for b in &irr {
            // b(g^{-1}) = conj b(g), so this is the Hermitian product
            let ip = inner_on(a, b, &all)?;
            let expected = if a.label() == b.label() { 1 } else { 0 };
            if ip != group.field().integer(expected) {
                failures.push((a.label().to_string(), b.label().to_string()));
            }
        }
    }
    Ok((failures.is_empty(), Payload::Orthogonality { characters: irr.len(), failures }))
}

/// Evaluate one point; `Ok(None)` when it lies outside the claim's hypotheses.
pub fn verify_point(point: &ParameterPoint, ceiling: u128, scope: OrbitScope) -> Result<Option<VerificationRecord>> {
    let predicted = match predict(point) {
        Ok(v) => v,
        Err(SymclassError::OutOfHypothesis(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let group = DicyclicGroup::new(point.n)?;
    let (computed, payload, bundle) = match point.claim {
        Claim::BrauerCount => {
            let p = point.p.unwrap();
            let count = brauer_characters(&group, p)?.len();
            let classes = group.p_regular_classes(p)?.len();
            (count == classes, Payload::Count { brauer_characters: count, p_regular_classes: classes }, None)
        }
        Claim::CharacterOrthogonality => {
            let (ok, payload) = orthogonality_check(&group)?;
            (ok, payload, None)
        }
        Claim::Decomposition => {
            let space = point.space.unwrap();
            check_ceiling(point, &group, space, ceiling)?;
            let (ok, payload) = decomposition_check(&group, space)?;
            (ok, payload, None)
        }
        _ => {
            let space = point.space.unwrap();
            check_ceiling(point, &group, space, ceiling)?;
            let phi = character_for(&group, point)?;
            let outcome = run_obasis(&group, &phi, space, scope)?;
            let bundle = if outcome.verdict != predicted {
                Some(counterexample(point, &phi, &outcome)?)
            } else {
                None
            };
            let payload = Payload::Obasis {
                orbits_decided: outcome.orbits_decided,
                orbits_total: outcome.orbits_total,
                dimension: outcome.dimension,
                failing_orbit: outcome.failing.map(|(rec, _)| rec),
            };
            (outcome.verdict, payload, bundle)
        }
    };
    Ok(Some(VerificationRecord {
        point: point.clone(),
        predicted,
        computed,
        agrees: predicted == computed,
        payload,
        counterexample: bundle,
    }))
}

/// Re-derive the deciding orbit's Gram matrix by direct expansion and make
/// sure it matches the closed form the decision used.
fn counterexample(point: &ParameterPoint, phi: &CharacterFn, outcome: &ObasisOutcome) -> Result<CounterexampleBundle> {
    let (orbit, gram) = match &outcome.failing {
        Some((rec, data)) => {
            let direct = gram_matrix_direct(data, phi);
            if direct != gram_matrix_closed(data, phi) {
                return Err(SymclassError::OracleMismatch(format!(
                    "{point}: closed-form Gram matrix of orbit {:?} differs from direct expansion",
                    rec.representative
                )));
            }
            (Some(rec.clone()), Some(direct))
        }
        None => (None, None),
    };
    Ok(CounterexampleBundle { point: point.clone(), orbit, gram, attempt_log: outcome.log.clone() })
}

/// Run a sweep. Stops after the first disagreement when the spec asks to.
pub fn verify(spec: &SweepSpec) -> Result<Vec<VerificationRecord>> {
    spec.validate()?;
    let mut out = Vec::new();
    for point in spec.points() {
        if let Some(rec) = verify_point(&point, spec.work_ceiling, spec.scope)? {
            let stop = !rec.agrees && spec.halt_on_disagreement;
            out.push(rec);
            if stop {
                break;
            }
        }
    }
    Ok(out)
}
