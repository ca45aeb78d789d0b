//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(N)-1}` after
//! reduction modulo the cyclotomic polynomial `Φ_N`, so equality and
//! zero-testing are decided on coefficients alone. Values of different
//! orders are lifted to the least common multiple before combining.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Dense polynomial with rational coefficients, lowest degree first.
///
/// The zero polynomial has an empty coefficient list; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[0] = -BigRational::one();
        coeffs[n] = BigRational::one();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let ddeg = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[ddeg].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - ddeg];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + ddeg] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(ddeg);
        (Self::new(quot), Self::new(rem))
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_power_sum(f, &self.coeffs, "x")
    }
}

fn write_power_sum(f: &mut fmt::Formatter<'_>, coeffs: &[BigRational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{mag}*{mono}")?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count() as u32
}

/// The cyclotomic polynomial `Φ_N`, computed by exact division of `x^N - 1`
/// by `Φ_d` for every proper divisor `d` of `N`.
pub fn cyclotomic_polynomial(order: u32) -> RationalPoly {
    assert!(order >= 1, "cyclotomic order must be positive");
    let mut known: HashMap<u32, RationalPoly> = HashMap::new();
    for d in divisors(order) {
        let mut poly = RationalPoly::x_pow_minus_one(d as usize);
        for e in divisors(d) {
            if e < d {
                let (q, r) = poly.div_rem(&known[&e]);
                debug_assert!(r.is_zero());
                poly = q;
            }
        }
        known.insert(d, poly);
    }
    known.remove(&order).unwrap()
}

/// Reduction data for one cyclotomic field `Q(ζ_N)`.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    degree: usize,
    modulus: RationalPoly,
    /// `ζ^e` in the power basis for every `0 <= e < N`.
    powers: Vec<Vec<BigRational>>,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.degree().unwrap();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![BigRational::zero(); degree];
        cur[0] = BigRational::one();
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by x and fold x^degree back using the monic modulus
            let top = cur.pop().unwrap();
            cur.insert(0, BigRational::zero());
            if !top.is_zero() {
                for (j, m) in modulus.coeffs()[..degree].iter().enumerate() {
                    cur[j] -= &top * m;
                }
            }
        }
        Arc::new(CyclotomicField { order, degree, modulus, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &RationalPoly {
        &self.modulus
    }

    /// Reduce a coefficient vector indexed by exponents taken mod `N`.
    fn fold(&self, by_exponent: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.degree];
        for (e, c) in by_exponent.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < self.degree {
                out[e] += c;
            } else {
                for (slot, p) in out.iter_mut().zip(&self.powers[e]) {
                    if !p.is_zero() {
                        *slot += c * p;
                    }
                }
            }
        }
        out
    }

    fn value(self: &Arc<Self>, coeffs: Vec<BigRational>) -> CyclotomicNumber {
        debug_assert_eq!(coeffs.len(), self.degree);
        CyclotomicNumber { field: Arc::clone(self), coeffs }
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicNumber {
        self.value(vec![BigRational::zero(); self.degree])
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicNumber {
        self.rational(BigRational::one())
    }

    pub fn rational(self: &Arc<Self>, q: BigRational) -> CyclotomicNumber {
        let mut coeffs = vec![BigRational::zero(); self.degree];
        coeffs[0] = q;
        self.value(coeffs)
    }

    pub fn integer(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        self.rational(BigRational::from_integer(k.into()))
    }

    /// `ζ_N^k`, with `k` reduced mod `N`.
    pub fn root_of_unity(self: &Arc<Self>, k: i64) -> CyclotomicNumber {
        let e = k.rem_euclid(self.order as i64) as usize;
        self.value(self.powers[e].clone())
    }

    /// Build `Σ buf[e] ζ^e` from an integer buffer indexed by exponent mod `N`.
    pub fn from_integer_buffer(self: &Arc<Self>, buf: &[i64]) -> CyclotomicNumber {
        let mut by_exp = vec![BigRational::zero(); self.order as usize];
        for (e, &c) in buf.iter().enumerate() {
            if c != 0 {
                by_exp[e % self.order as usize] += BigRational::from_integer(c.into());
            }
        }
        self.value(self.fold(&by_exp))
    }

    /// Build `Σ c_e ζ^e` from arbitrary exponents.
    pub fn from_exponents(self: &Arc<Self>, terms: &[(i64, BigRational)]) -> CyclotomicNumber {
        let mut buf = vec![BigRational::zero(); self.order as usize];
        for (e, c) in terms {
            buf[e.rem_euclid(self.order as i64) as usize] += c;
        }
        self.value(self.fold(&buf))
    }
}

/// `ζ_N^k` in a freshly built field of order `N`.
pub fn root_of_unity(order: u32, k: i64) -> CyclotomicNumber {
    CyclotomicField::new(order).root_of_unity(k)
}

/// An exact element of `Q(ζ_N)` in canonical reduced form.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Power-basis coefficients, length `φ(N)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Nonzero power-basis terms `(exponent, coefficient)` when every
    /// coefficient is an integer that fits in `i64`.
    pub fn integral_terms(&self) -> Option<Vec<(usize, i64)>> {
        let mut out = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_integer() {
                return None;
            }
            out.push((j, c.to_integer().to_i64()?));
        }
        Some(out)
    }

    /// Re-express in the larger field `target`, whose order must be a
    /// multiple of this element's order.
    pub fn lift_to(&self, target: &Arc<CyclotomicField>) -> CyclotomicNumber {
        if Arc::ptr_eq(&self.field, target) || target.order == self.field.order {
            return target.value(self.coeffs.clone());
        }
        assert!(
            target.order % self.field.order == 0,
            "cannot lift Q(ζ_{}) into Q(ζ_{})",
            self.field.order,
            target.order
        );
        let step = (target.order / self.field.order) as usize;
        let mut buf = vec![BigRational::zero(); target.order as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            buf[j * step] += c;
        }
        target.value(target.fold(&buf))
    }

    fn align<'a>(
        a: &'a CyclotomicNumber,
        b: &'a CyclotomicNumber,
    ) -> (std::borrow::Cow<'a, CyclotomicNumber>, std::borrow::Cow<'a, CyclotomicNumber>) {
        use std::borrow::Cow;
        if a.field.order == b.field.order {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        if a.field.order % b.field.order == 0 {
            return (Cow::Borrowed(a), Cow::Owned(b.lift_to(&a.field)));
        }
        if b.field.order % a.field.order == 0 {
            return (Cow::Owned(a.lift_to(&b.field)), Cow::Borrowed(b));
        }
        let common = CyclotomicField::new(a.field.order.lcm(&b.field.order));
        (Cow::Owned(a.lift_to(&common)), Cow::Owned(b.lift_to(&common)))
    }

    pub fn scale(&self, q: &BigRational) -> CyclotomicNumber {
        self.field.value(self.coeffs.iter().map(|c| c * q).collect())
    }

    /// Image under the Galois automorphism `ζ ↦ ζ^k`; `k` must be a unit mod `N`.
    pub fn galois(&self, k: i64) -> CyclotomicNumber {
        let n = self.field.order as i64;
        debug_assert_eq!(k.rem_euclid(n).gcd(&n), 1);
        let mut buf = vec![BigRational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            buf[(j as i64 * k).rem_euclid(n) as usize] += c;
        }
        self.field.value(self.field.fold(&buf))
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conjugate(&self) -> CyclotomicNumber {
        self.galois(-1)
    }

    /// Multiplicative inverse via the field norm, `None` for zero.
    pub fn inverse(&self) -> Option<CyclotomicNumber> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(self.field.rational(q.recip()));
        }
        let n = self.field.order as i64;
        let mut cofactor = self.field.one();
        for k in 2..n {
            if k.gcd(&n) == 1 {
                cofactor = &cofactor * &self.galois(k);
            }
        }
        let norm = (self * &cofactor)
            .to_rational()
            .expect("norm of a cyclotomic element is rational");
        Some(cofactor.scale(&norm.recip()))
    }

    /// Floating evaluation at `ζ_N = exp(2πi/N)`; diagnostics only.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let angle = 2.0 * std::f64::consts::PI * j as f64 / n;
                Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

/// Serialized as the exact power-basis coefficients plus a complex approximation.
impl serde::Serialize for CyclotomicNumber {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let z = self.to_complex();
        let mut st = serializer.serialize_struct("CyclotomicNumber", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("approx", &[z.re, z.im])?;
        st.end()
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Self::align(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc<{}>({})", self.field.order, self)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_power_sum(f, &self.coeffs, &format!("z{}", self.field.order))
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::align(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        a.field.value(coeffs)
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::align(self, rhs);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        a.field.value(coeffs)
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::align(self, rhs);
        let field = &a.field;
        let n = field.order as usize;
        let mut buf = vec![BigRational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    buf[(i + j) % n] += x * y;
                }
            }
        }
        field.value(field.fold(&buf))
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        self.field.value(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        if self.field.order == rhs.field.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        if self.field.order == rhs.field.order {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}
