//! Finite field arithmetic over GF(q), q = p^m.
//!
//! Elements are stored in canonical integer form: the residue itself when
//! m = 1, and the little-endian coefficient vector read as a base-p integer
//! when m > 1 (so `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`). The ordering of
//! these integers is the ordering used for "smallest primitive element".
//!
//! Fields of order at most 2^16 multiply through log/antilog tables built
//! once at construction; larger fields reduce directly.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

/// Largest supported field order. Products of two canonical values must fit
/// in a `u64`.
pub const MAX_ORDER: u64 = 1 << 31;

/// Largest order for which log/antilog tables are built by default.
pub const TABLE_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus must be monic")]
    NonMonicModulus,
    #[error("modulus coefficient {0} is not reduced mod p")]
    BadCoefficient(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("element {value} is not in a field of order {order}")]
    OutOfRange { value: u64, order: u64 },
    #[error("element {0} is not a primitive element")]
    NotPrimitive(u64),
    #[error("division by zero")]
    DivisionByZero,
}

/// Arithmetic context for a finite field.
///
/// Elements are plain `Copy` values; every operation goes through the field
/// so that element types stay small and tables are shared. Algorithms in
/// this crate (polynomials, matrices, decoders) are written against this
/// trait.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    /// Number of elements q.
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem, GfError>;

    /// The fixed primitive element α.
    fn primitive(&self) -> Self::Elem;

    fn from_canonical(&self, value: u64) -> Result<Self::Elem, GfError>;
    fn to_canonical(&self, a: Self::Elem) -> u64;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem, GfError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    /// `a^e`; the exponent is reduced modulo q - 1 for nonzero `a`.
    fn pow(&self, a: Self::Elem, e: i64) -> Result<Self::Elem, GfError> {
        if self.is_zero(a) {
            return match e {
                0 => Ok(self.one()),
                e if e > 0 => Ok(self.zero()),
                _ => Err(GfError::DivisionByZero),
            };
        }
        let group = (self.order() - 1) as i128;
        let mut exp = (e as i128).rem_euclid(group) as u64;
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        Ok(acc)
    }

    /// α^e for any integer e.
    fn alpha_pow(&self, e: i64) -> Self::Elem {
        self.pow(self.primitive(), e)
            .expect("primitive element is nonzero")
    }

    /// Image of an integer under the ring map Z -> GF(q).
    fn from_int(&self, value: i64) -> Self::Elem {
        let p = self.characteristic() as i64;
        let r = value.rem_euclid(p) as u64;
        self.from_canonical(r)
            .expect("residue below p is a field element")
    }

    /// Every element in canonical order.
    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order())
            .map(|v| self.from_canonical(v).expect("value below order"))
            .collect()
    }
}

/// Element of a [`Gf`] in canonical integer form.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Multiplication strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    /// Log/antilog lookup tables.
    Tables,
    /// Modular reduction on every product.
    Direct,
}

/// Static description of a field: characteristic, degree, modulus and α.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub m: usize,
    pub q: u64,
    /// Monic irreducible modulus, low-to-high, length m + 1. `None` when m = 1.
    pub modulus: Option<Vec<u64>>,
    /// Canonical value of the primitive element.
    pub alpha: u64,
}

struct Tables {
    // exp has length 2(q - 1) so that log a + log b never needs reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    spec: FieldSpec,
    // p^i for i in 0..m
    place: Vec<u64>,
    // modulus as a bit mask, p = 2 only
    binary_modulus: Option<u64>,
    tables: Option<Tables>,
}

/// A concrete finite field GF(p^m) with a fixed primitive element.
///
/// Cloning is cheap; the tables live behind an `Arc`.
#[derive(Clone)]
pub struct Gf {
    inner: Arc<Inner>,
}

/// Builder for [`Gf`] when the defaults need overriding.
#[derive(Debug, Clone)]
pub struct GfBuilder {
    p: u64,
    m: usize,
    modulus: Option<Vec<u64>>,
    alpha: Option<u64>,
    backend: Option<Backend>,
}

impl GfBuilder {
    pub fn modulus(mut self, coeffs: Vec<u64>) -> Self {
        self.modulus = Some(coeffs);
        self
    }

    pub fn alpha(mut self, alpha: u64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn backend(mut self, backend: Backend) -> Self {
        self.backend = Some(backend);
        self
    }

    pub fn build(self) -> Result<Gf, GfError> {
        let GfBuilder {
            p,
            m,
            modulus,
            alpha,
            backend,
        } = self;
        if !is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if m == 0 {
            return Err(GfError::ZeroDegree);
        }
        let q = checked_order(p, m)?;

        let modulus = match (m, modulus) {
            (1, None) => None,
            (1, Some(c)) => {
                return Err(GfError::DegreeMismatch {
                    expected: 0,
                    found: c.len().saturating_sub(1),
                })
            }
            (_, Some(c)) => {
                validate_modulus(p, m, &c)?;
                Some(c)
            }
            (_, None) => Some(default_modulus(p, m)),
        };

        let place: Vec<u64> = (0..m).map(|i| p.pow(i as u32)).collect();
        let binary_modulus = match (&modulus, p) {
            (Some(c), 2) => Some(
                c.iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, &b)| acc | (b << i)),
            ),
            _ => None,
        };

        let mut inner = Inner {
            spec: FieldSpec {
                p,
                m,
                q,
                modulus,
                alpha: 0,
            },
            place,
            binary_modulus,
            tables: None,
        };

        let alpha = match alpha {
            Some(a) => {
                if a >= q {
                    return Err(GfError::OutOfRange { value: a, order: q });
                }
                if !inner.is_primitive(a as u32) {
                    return Err(GfError::NotPrimitive(a));
                }
                a
            }
            None => inner.smallest_primitive() as u64,
        };
        inner.spec.alpha = alpha;

        let backend = backend.unwrap_or(if q <= TABLE_LIMIT {
            Backend::Tables
        } else {
            Backend::Direct
        });
        if backend == Backend::Tables {
            inner.tables = Some(inner.build_tables());
        }
        Ok(Gf {
            inner: Arc::new(inner),
        })
    }
}

impl Gf {
    pub fn builder(p: u64, m: usize) -> GfBuilder {
        GfBuilder {
            p,
            m,
            modulus: None,
            alpha: None,
            backend: None,
        }
    }

    /// GF(p^m) with the default modulus and the smallest primitive element.
    pub fn new(p: u64, m: usize) -> Result<Self, GfError> {
        Self::builder(p, m).build()
    }

    /// Prime field GF(p).
    pub fn prime(p: u64) -> Result<Self, GfError> {
        Self::new(p, 1)
    }

    /// Field of order q, where q must be a prime power.
    pub fn with_order(q: u64) -> Result<Self, GfError> {
        let (p, m) = prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        Self::new(p, m)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn degree(&self) -> usize {
        self.inner.spec.m
    }

    pub fn backend(&self) -> Backend {
        if self.inner.tables.is_some() {
            Backend::Tables
        } else {
            Backend::Direct
        }
    }

    /// Checked conversion from a canonical integer.
    pub fn element(&self, value: u64) -> Result<FieldElement, GfError> {
        self.from_canonical(value)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64, GfError> {
        if a.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        let group = self.order() - 1;
        let mut order = group;
        for r in prime_factors(group) {
            while order.is_multiple_of(r) && self.inner.pow_direct(a.0, order / r) == 1 {
                order /= r;
            }
        }
        Ok(order)
    }

    /// Smallest element (in canonical order) of multiplicative order q - 1.
    pub fn find_primitive(&self) -> FieldElement {
        FieldElement(self.inner.smallest_primitive())
    }

    /// Reference product that never touches the tables.
    pub fn mul_direct(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.mul_direct(a.0, b.0))
    }

    /// Discrete log base α of a nonzero element.
    pub fn log(&self, a: FieldElement) -> Result<u64, GfError> {
        if a.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        if let Some(t) = &self.inner.tables {
            return Ok(t.log[a.0 as usize] as u64);
        }
        let alpha = self.inner.spec.alpha as u32;
        let mut x = 1u32;
        for i in 0..self.order() - 1 {
            if x == a.0 {
                return Ok(i);
            }
            x = self.inner.mul_direct(x, alpha);
        }
        unreachable!("α generates every nonzero element")
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }
}

impl Eq for Gf {}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.inner.spec;
        if s.m == 1 {
            write!(f, "GF({}; α={})", s.p, s.alpha)
        } else {
            write!(f, "GF({}^{}; α={})", s.p, s.m, s.alpha)
        }
    }
}

impl Field for Gf {
    type Elem = FieldElement;

    fn order(&self) -> u64 {
        self.inner.spec.q
    }

    fn characteristic(&self) -> u64 {
        self.inner.spec.p
    }

    fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.inner.add(a.0, b.0))
    }

    fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.inner.neg(a.0))
    }

    fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        match &self.inner.tables {
            Some(t) => FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => FieldElement(self.inner.mul_direct(a.0, b.0)),
        }
    }

    fn inv(&self, a: FieldElement) -> Result<FieldElement, GfError> {
        if a.0 == 0 {
            return Err(GfError::DivisionByZero);
        }
        let group = self.order() - 1;
        match &self.inner.tables {
            Some(t) => Ok(FieldElement(
                t.exp[((group - t.log[a.0 as usize] as u64) % group) as usize],
            )),
            None => Ok(FieldElement(self.inner.pow_direct(a.0, group - 1))),
        }
    }

    fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement, GfError> {
        match (&self.inner.tables, a.0) {
            (Some(t), v) if v != 0 => {
                let group = (self.order() - 1) as i128;
                let l = t.log[v as usize] as i128;
                Ok(FieldElement(
                    t.exp[(l * e as i128).rem_euclid(group) as usize],
                ))
            }
            (None, v) if v != 0 => {
                let group = (self.order() - 1) as i128;
                let r = (e as i128).rem_euclid(group) as u64;
                Ok(FieldElement(self.inner.pow_direct(v, r)))
            }
            _ => match e {
                0 => Ok(self.one()),
                e if e > 0 => Ok(self.zero()),
                _ => Err(GfError::DivisionByZero),
            },
        }
    }

    fn alpha_pow(&self, e: i64) -> FieldElement {
        match &self.inner.tables {
            Some(t) => {
                let group = (self.order() - 1) as i64;
                FieldElement(t.exp[e.rem_euclid(group) as usize])
            }
            None => self
                .pow(FieldElement(self.inner.spec.alpha as u32), e)
                .expect("α is nonzero"),
        }
    }

    fn primitive(&self) -> FieldElement {
        FieldElement(self.inner.spec.alpha as u32)
    }

    fn from_canonical(&self, value: u64) -> Result<FieldElement, GfError> {
        if value >= self.order() {
            return Err(GfError::OutOfRange {
                value,
                order: self.order(),
            });
        }
        Ok(FieldElement(value as u32))
    }

    fn to_canonical(&self, a: FieldElement) -> u64 {
        a.0 as u64
    }
}

impl Inner {
    fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        if self.spec.m == 1 {
            return ((a as u64 + b as u64) % p) as u32;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a as u64, b as u64);
        let mut out = 0u64;
        for &w in &self.place {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
        }
        out as u32
    }

    fn neg(&self, a: u32) -> u32 {
        let p = self.spec.p;
        if p == 2 {
            return a;
        }
        if self.spec.m == 1 {
            return ((p - a as u64) % p) as u32;
        }
        let mut a = a as u64;
        let mut out = 0u64;
        for &w in &self.place {
            out += ((p - a % p) % p) * w;
            a /= p;
        }
        out as u32
    }

    fn mul_direct(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p;
        let m = self.spec.m;
        if m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        if let Some(modulus) = self.binary_modulus {
            let mut prod = clmul(a as u64, b as u64);
            for bit in (m..2 * m - 1).rev() {
                if prod >> bit & 1 == 1 {
                    prod ^= modulus << (bit - m);
                }
            }
            return prod as u32;
        }
        let modulus = self.spec.modulus.as_ref().expect("m > 1 has a modulus");
        let da = digits(a as u64, p, m);
        let db = digits(b as u64, p, m);
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // x^m = -(c_0 + ... + c_{m-1} x^{m-1})
        for top in (m..2 * m - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &mc) in modulus[..m].iter().enumerate() {
                let idx = top - m + j;
                prod[idx] = (prod[idx] + (p - c) * mc) % p;
            }
        }
        prod[..m]
            .iter()
            .zip(&self.place)
            .map(|(c, w)| c * w)
            .sum::<u64>() as u32
    }

    fn pow_direct(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_direct(acc, base);
            }
            base = self.mul_direct(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        let group = self.spec.q - 1;
        prime_factors(group)
            .into_iter()
            .all(|r| self.pow_direct(a, group / r) != 1)
    }

    fn smallest_primitive(&self) -> u32 {
        (1..self.spec.q as u32)
            .find(|&a| self.is_primitive(a))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build_tables(&self) -> Tables {
        let group = (self.spec.q - 1) as usize;
        let alpha = self.spec.alpha as u32;
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; self.spec.q as usize];
        let mut x = 1u32;
        for i in 0..group {
            exp[i] = x;
            exp[i + group] = x;
            log[x as usize] = i as u32;
            x = self.mul_direct(x, alpha);
        }
        Tables { exp, log }
    }
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            out ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    out
}

fn digits(mut v: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

fn checked_order(p: u64, m: usize) -> Result<u64, GfError> {
    let mut q = 1u64;
    for _ in 0..m {
        q = q
            .checked_mul(p)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(GfError::TooLarge(
                p.saturating_pow(m.min(u32::MAX as usize) as u32),
            ))?;
    }
    Ok(q)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits q = p^m, or `None` if q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    let factors = prime_factors(q);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut m = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        m += 1;
    }
    Some((p, m))
}

fn validate_modulus(p: u64, m: usize, coeffs: &[u64]) -> Result<(), GfError> {
    if let Some(&c) = coeffs.iter().find(|&&c| c >= p) {
        return Err(GfError::BadCoefficient(c));
    }
    let found = coeffs.iter().rposition(|&c| c != 0).unwrap_or(0);
    if coeffs.len() != m + 1 || found != m {
        return Err(GfError::DegreeMismatch { expected: m, found });
    }
    if coeffs[m] != 1 {
        return Err(GfError::NonMonicModulus);
    }
    if !fp::is_irreducible(coeffs, p) {
        return Err(GfError::ReducibleModulus { p });
    }
    Ok(())
}

/// Default modulus: x^8+x^4+x^3+x^2+1 for GF(2^8); otherwise the monic
/// irreducible whose lower coefficients, read as a little-endian base-p
/// integer, are smallest.
pub fn default_modulus(p: u64, m: usize) -> Vec<u64> {
    if p == 2 && m == 8 {
        return vec![1, 0, 1, 1, 1, 0, 0, 0, 1];
    }
    let count = p.pow(m as u32);
    (0..count)
        .map(|lower| {
            let mut c = digits(lower, p, m);
            c.push(1);
            c
        })
        .find(|c| fp::is_irreducible(c, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Polynomials over the prime field with `u64` coefficients, used only to
/// validate and search for moduli.
mod fp {
    fn trim(a: &mut Vec<u64>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    fn inv(a: u64, p: u64) -> u64 {
        // p is prime, so a^(p-2) is the inverse
        let mut base = a % p;
        let mut e = p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv(b[db], p);
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            for (j, &bj) in b.iter().enumerate() {
                let idx = top - db + j;
                r[idx] = (r[idx] + (p - c) * bj % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        rem(&out, f, p)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        let mut b = b.to_vec();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// Ben-Or: f of degree m is irreducible iff gcd(f, x^(p^i) - x) = 1
    /// for every i <= m/2.
    pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
        let m = f.len() - 1;
        if m == 1 {
            return true;
        }
        let x = vec![0, 1];
        let mut h = rem(&x, f, p);
        for _ in 0..m / 2 {
            // h <- h^p mod f
            let mut base = h.clone();
            let mut acc = vec![1u64];
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mulmod(&acc, &base, f, p);
                }
                base = mulmod(&base, &base, f, p);
                e >>= 1;
            }
            h = acc;
            let mut diff = h.clone();
            diff.resize(diff.len().max(2), 0);
            diff[1] = (diff[1] + p - 1) % p;
            trim(&mut diff);
            let g = gcd(f, &diff, p);
            if g.len() != 1 {
                return false;
            }
        }
        true
    }

}
