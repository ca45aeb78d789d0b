use std::fmt;
use std::sync::Arc;

use crate::cyclotomic::CyclotomicField;
use crate::error::{Result, SymclassError};

/// An element `r^a s^b` of `T_{4n}` in normal form (`0 <= a < 2n`, `b ∈ {0, 1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DicyclicElement {
    n: u32,
    a: u32,
    b: bool,
}

impl DicyclicElement {
    /// `r^a s^b`, reducing `a` mod `2n`.
    pub fn new(n: u32, a: i64, b: bool) -> Self {
        assert!(n >= 1);
        let a = a.rem_euclid(2 * n as i64) as u32;
        DicyclicElement { n, a, b }
    }

    pub fn identity(n: u32) -> Self {
        Self::new(n, 0, false)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Exponent of `r`.
    pub fn r_exp(&self) -> u32 {
        self.a
    }

    /// Whether the `s` factor is present.
    pub fn has_s(&self) -> bool {
        self.b
    }

    pub fn is_identity(&self) -> bool {
        self.a == 0 && !self.b
    }

    /// Position in the canonical enumeration `r^0..r^{2n-1}, s, rs, …, r^{2n-1}s`.
    pub fn index(&self) -> usize {
        self.a as usize + if self.b { 2 * self.n as usize } else { 0 }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(SymclassError::GroupMismatch { left: self.n, right: other.n });
        }
        let (n, a, c) = (self.n as i64, self.a as i64, other.a as i64);
        Ok(match (self.b, other.b) {
            (false, d) => Self::new(self.n, a + c, d),
            // s r^c = r^{-c} s
            (true, false) => Self::new(self.n, a - c, true),
            // s r^c s = r^{-c} s^2 = r^{n-c}
            (true, true) => Self::new(self.n, a - c + n, false),
        })
    }

    pub fn inverse(&self) -> Self {
        if self.b {
            // (r^a s)^2 = r^n, so the inverse is r^{a+n} s
            Self::new(self.n, self.a as i64 + self.n as i64, true)
        } else {
            Self::new(self.n, -(self.a as i64), false)
        }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..k {
            acc = acc * *self;
        }
        acc
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut acc = *self;
        while !acc.is_identity() {
            acc = acc * *self;
            k += 1;
        }
        k
    }

    /// Parse `e`, `r^a`, `r^a*s`, `s`, `r`, `rs`, `r^a s`.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || SymclassError::InvalidParameter(format!("cannot parse group element {text:?}"));
        if t == "e" || t == "1" {
            return Ok(Self::identity(n));
        }
        let (rpart, b) = if let Some(stripped) = t.strip_suffix("*s") {
            (stripped, true)
        } else if let Some(stripped) = t.strip_suffix('s') {
            (stripped, true)
        } else {
            (t.as_str(), false)
        };
        let a = match rpart {
            "" => 0,
            "r" => 1,
            _ => rpart.strip_prefix("r^").ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?,
        };
        Ok(Self::new(n, a, b))
    }
}

impl std::ops::Mul for DicyclicElement {
    type Output = DicyclicElement;

    /// Panics when the elements come from different groups; use
    /// [`DicyclicElement::checked_mul`] to get an error instead.
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("multiplying elements of different dicyclic groups")
    }
}

impl fmt::Display for DicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b {
            write!(f, "r^{}*s", self.a)
        } else {
            write!(f, "r^{}", self.a)
        }
    }
}

impl serde::Serialize for DicyclicElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The dicyclic group `T_{4n} = <r, s | r^{2n} = 1, r^n = s^2, s^{-1} r s = r^{-1}>`
/// with cached multiplication table and left regular permutations.
#[derive(Debug)]
pub struct DicyclicGroup {
    n: u32,
    elements: Vec<DicyclicElement>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    regular: Vec<Vec<usize>>,
    field: Arc<CyclotomicField>,
}

impl DicyclicGroup {
    pub fn new(n: u32) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(SymclassError::InvalidParameter("n must be at least 1".into()));
        }
        let order = 4 * n as usize;
        let elements: Vec<_> = (0..2 * n as i64)
            .map(|a| DicyclicElement::new(n, a, false))
            .chain((0..2 * n as i64).map(|a| DicyclicElement::new(n, a, true)))
            .collect();
        let mut mul = vec![0; order * order];
        for g in &elements {
            for h in &elements {
                mul[g.index() * order + h.index()] = (*g * *h).index();
            }
        }
        let inv = elements.iter().map(|g| g.inverse().index()).collect();
        // regular[g][x] = index of g·x
        let regular = (0..order)
            .map(|g| (0..order).map(|x| mul[g * order + x]).collect())
            .collect();
        Ok(Arc::new(DicyclicGroup {
            n,
            elements,
            mul,
            inv,
            regular,
            field: CyclotomicField::new(4 * n),
        }))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `|G| = 4n`, also the permutation degree of the regular embedding.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[DicyclicElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> DicyclicElement {
        self.elements[index]
    }

    pub fn identity(&self) -> DicyclicElement {
        self.elements[0]
    }

    pub fn r(&self) -> DicyclicElement {
        DicyclicElement::new(self.n, 1, false)
    }

    pub fn s(&self) -> DicyclicElement {
        DicyclicElement::new(self.n, 0, true)
    }

    /// The ambient scalar field `Q(ζ_{4n})`.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn contains(&self, g: &DicyclicElement) -> bool {
        g.n() == self.n
    }

    pub fn check(&self, g: &DicyclicElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(SymclassError::GroupMismatch { left: self.n, right: g.n() })
        }
    }

    pub fn multiply(&self, g: &DicyclicElement, h: &DicyclicElement) -> Result<DicyclicElement> {
        self.check(g)?;
        g.checked_mul(h)
    }

    /// Product by canonical index.
    #[inline]
    pub fn mul_index(&self, g: usize, h: usize) -> usize {
        self.mul[g * self.order() + h]
    }

    #[inline]
    pub fn inv_index(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn element_order(&self, g: &DicyclicElement) -> u64 {
        g.order()
    }

    /// Conjugacy classes by brute-force conjugation, in order of their first
    /// element; each class is sorted canonically.
    pub fn conjugacy_classes(&self) -> Vec<Vec<DicyclicElement>> {
        let order = self.order();
        let mut seen = vec![false; order];
        let mut classes = Vec::new();
        for x in 0..order {
            if seen[x] {
                continue;
            }
            let mut class: Vec<usize> = (0..order)
                .map(|g| self.mul_index(self.mul_index(g, x), self.inv_index(g)))
                .collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class.into_iter().map(|i| self.elements[i]).collect());
        }
        classes
    }

    /// The left regular permutation of `g`: position `x` goes to position `g·x`.
    pub fn regular_permutation(&self, g: &DicyclicElement) -> &[usize] {
        &self.regular[g.index()]
    }

    pub fn regular_permutation_by_index(&self, g: usize) -> &[usize] {
        &self.regular[g]
    }

    /// `Ĝ`: elements whose order is coprime to `p`.
    pub fn p_regular_elements(&self, p: u64) -> Result<Vec<DicyclicElement>> {
        ensure_prime(p)?;
        Ok(self.elements.iter().copied().filter(|g| g.order() % p != 0).collect())
    }

    /// Conjugacy classes contained in `Ĝ`.
    pub fn p_regular_classes(&self, p: u64) -> Result<Vec<Vec<DicyclicElement>>> {
        ensure_prime(p)?;
        Ok(self
            .conjugacy_classes()
            .into_iter()
            .filter(|class| class[0].order() % p != 0)
            .collect())
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub(crate) fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(SymclassError::NotPrime(p))
    }
}
