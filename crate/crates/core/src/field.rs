//! Exact arithmetic in finite fields F_q, q = p^r with p an odd prime.
//!
//! A [`Field`] is built once from a [`FieldSpec`] and interned for the life of
//! the process, so every [`FieldElement`] can carry a `&'static Field` and stay
//! `Copy`. Two specs with the same `(p, r, modulus)` resolve to the same
//! interned field, which is how operands from "the same field" are recognised.
//!
//! Elements are stored as the integer whose base-`p` digits are the polynomial
//! coefficients (constant term least significant). That integer is also the
//! canonical order used by every enumeration in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly;

/// Largest field order for which extension fields are supported.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 22;

/// Description of F_{p^r}: the prime, the degree and the defining polynomial.
///
/// The modulus is monic, constant term first. For `r = 1` it is the
/// placeholder `x` (`[0, 1]`); an empty modulus is filled in on construction
/// (with the smallest irreducible polynomial when `r >= 2`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u64,
    #[serde(default = "one_u32")]
    pub r: u32,
    #[serde(default)]
    pub modulus: Vec<u64>,
}

fn one_u32() -> u32 {
    1
}

impl FieldSpec {
    pub fn prime(p: u64) -> Self {
        FieldSpec { p, r: 1, modulus: vec![0, 1] }
    }

    /// F_{p^r} with the smallest irreducible modulus (see [`find_irreducible`]).
    pub fn extension(p: u64, r: u32) -> Self {
        if r <= 1 {
            return Self::prime(p);
        }
        FieldSpec { p, r, modulus: find_irreducible(p, r) }
    }

    pub fn order(&self) -> u64 {
        self.p.saturating_pow(self.r)
    }

    fn normalized(mut self) -> Result<Self> {
        if self.p < 3 || !poly::is_prime(self.p) {
            return Err(Error::InvalidField(format!("p = {} is not an odd prime", self.p)));
        }
        if self.r == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        if self.r == 1 {
            if !(self.modulus.is_empty() || self.modulus == [0, 1]) {
                return Err(Error::InvalidField("for r = 1 the modulus must be [0, 1]".into()));
            }
            self.modulus = vec![0, 1];
            if self.p > u32::MAX as u64 / 2 {
                return Err(Error::InvalidField(format!("p = {} is too large", self.p)));
            }
            return Ok(self);
        }
        if self.order() > MAX_EXTENSION_ORDER {
            return Err(Error::InvalidField(format!(
                "extension order {}^{} exceeds the supported maximum {}",
                self.p, self.r, MAX_EXTENSION_ORDER
            )));
        }
        if self.modulus.is_empty() {
            self.modulus = find_irreducible(self.p, self.r);
        }
        let m = &self.modulus;
        if m.len() != self.r as usize + 1 || *m.last().unwrap() != 1 {
            return Err(Error::InvalidField("modulus must be monic of degree r".into()));
        }
        if m.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if !poly::is_irreducible(m, self.p) {
            return Err(Error::InvalidField(format!("modulus {:?} is reducible over F_{}", m, self.p)));
        }
        Ok(self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}^{} mod {:?}", self.p, self.r, self.modulus)
        }
    }
}

/// Smallest monic irreducible polynomial of degree `r >= 2` over F_p,
/// coefficients constant term first.
pub fn find_irreducible(p: u64, r: u32) -> Vec<u64> {
    poly::find_irreducible(p, r)
}

/// An interned finite field. Obtain one through [`Field::new`], [`Field::prime`]
/// or [`Field::extension`].
pub struct Field {
    spec: FieldSpec,
    order: u32,
    // discrete log tables, extension fields only
    exp: Vec<u32>,
    log: Vec<u32>,
    non_residue: u32,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec)
    }
}

// Interned, so spec equality coincides with identity.
impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.spec.hash(state);
    }
}

static REGISTRY: OnceLock<Mutex<Vec<&'static Field>>> = OnceLock::new();

impl Field {
    pub fn new(spec: FieldSpec) -> Result<&'static Field> {
        let spec = spec.normalized()?;
        let registry = REGISTRY.get_or_init(|| Mutex::new(Vec::new()));
        let mut fields = registry.lock().expect("field registry poisoned");
        if let Some(f) = fields.iter().find(|f| f.spec == spec) {
            return Ok(f);
        }
        let field: &'static Field = Box::leak(Box::new(Field::build(spec)));
        fields.push(field);
        Ok(field)
    }

    pub fn prime(p: u64) -> Result<&'static Field> {
        Field::new(FieldSpec::prime(p))
    }

    pub fn extension(p: u64, r: u32) -> Result<&'static Field> {
        Field::new(FieldSpec::extension(p, r))
    }

    fn build(spec: FieldSpec) -> Field {
        let order = spec.order() as u32;
        let mut field = Field { spec, order, exp: Vec::new(), log: Vec::new(), non_residue: 0 };
        if field.spec.r > 1 {
            field.build_log_tables();
        }
        field.non_residue = (1..order).find(|&x| !field.is_square_raw(x)).expect("odd order fields have non-squares");
        field
    }

    fn build_log_tables(&mut self) {
        let q = self.order as u64;
        let factors = poly::prime_factors(q - 1);
        let generator = (2..q as u32)
            .find(|&g| factors.iter().all(|&l| self.slow_pow(g, (q - 1) / l) != 1))
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) as u32 {
            exp.push(x);
            log[x as usize] = i;
            x = self.slow_mul(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }

    fn unpack(&self, x: u32) -> Vec<u64> {
        poly::digits(x as u64, self.spec.p, self.spec.r as usize)
    }

    fn pack(&self, coeffs: &[u64]) -> u32 {
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.spec.p + c) as u32
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let prod = poly::mul_mod(&self.unpack(a), &self.unpack(b), &self.spec.modulus, self.spec.p);
        self.pack(&prod)
    }

    fn slow_pow(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, b);
            }
            b = self.slow_mul(b, b);
            e >>= 1;
        }
        acc
    }

    // raw arithmetic on packed representatives

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p as u32;
        if self.spec.r == 1 {
            return ((a as u64 + b as u64) % p as u64) as u32;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.spec.r {
            let d = (a % p + b % p) % p;
            out += d * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn neg_raw(&self, a: u32) -> u32 {
        let p = self.spec.p as u32;
        if self.spec.r == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..self.spec.r {
            let d = (p - a % p) % p;
            out += d * place;
            a /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        if self.spec.r == 1 {
            return poly::mul_mod_p(a as u64, b as u64, self.spec.p) as u32;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.order - 1;
        let s = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % n as u64;
        self.exp[s as usize]
    }

    fn inv_raw(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        if self.spec.r == 1 {
            return poly::inv_mod_p(a as u64, self.spec.p) as u32;
        }
        let n = self.order - 1;
        let l = self.log[a as usize];
        self.exp[((n - l) % n) as usize]
    }

    fn pow_raw(&self, base: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            b = self.mul_raw(b, b);
            e >>= 1;
        }
        acc
    }

    fn is_square_raw(&self, a: u32) -> bool {
        a == 0 || self.pow_raw(a, (self.order as u64 - 1) / 2) == 1
    }

    // public surface

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.r
    }

    pub fn order(&self) -> u64 {
        self.order as u64
    }

    pub fn zero(&'static self) -> FieldElement {
        FieldElement { field: self, value: 0 }
    }

    pub fn one(&'static self) -> FieldElement {
        FieldElement { field: self, value: 1 }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&'static self, n: i64) -> FieldElement {
        let value = n.rem_euclid(self.spec.p as i64) as u32;
        FieldElement { field: self, value }
    }

    /// Element with the given coefficients (constant term first); shorter
    /// lists are zero-padded.
    pub fn from_coeffs(&'static self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.spec.r as usize {
            return Err(Error::InvalidInput(format!(
                "{} coefficients given for a degree-{} field",
                coeffs.len(),
                self.spec.r
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.spec.p) {
            return Err(Error::InvalidInput(format!("coefficient {c} is not reduced mod {}", self.spec.p)));
        }
        Ok(FieldElement { field: self, value: self.pack(coeffs) })
    }

    /// Element by canonical index in `[0, q)`.
    pub fn from_index(&'static self, index: u64) -> Result<FieldElement> {
        if index >= self.order as u64 {
            return Err(Error::InvalidInput(format!("index {index} out of range for a field of order {}", self.order)));
        }
        Ok(FieldElement { field: self, value: index as u32 })
    }

    /// All elements in canonical order.
    pub fn elements(&'static self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order).map(move |value| FieldElement { field: self, value })
    }

    /// Whether -1 is a square, i.e. q ≡ 1 (mod 4).
    pub fn has_sqrt_minus_one(&self) -> bool {
        self.order % 4 == 1
    }

    /// Quadratic character of -1.
    pub fn chi_minus_one(&self) -> i64 {
        if self.has_sqrt_minus_one() {
            1
        } else {
            -1
        }
    }

    /// The smallest non-square in canonical order.
    pub fn non_residue(&'static self) -> FieldElement {
        FieldElement { field: self, value: self.non_residue }
    }

    pub fn same_as(&self, other: &Field) -> bool {
        std::ptr::eq(self, other)
    }
}

/// Element of an interned [`Field`].
#[derive(Clone, Copy)]
pub struct FieldElement {
    field: &'static Field,
    value: u32,
}

/// Tag for [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Checked binary arithmetic. `Neg` ignores `b` except for the field check.
pub fn arith(op: ArithOp, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
    a.check_same(&b)?;
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Neg => -a,
    })
}

impl FieldElement {
    pub fn field(&self) -> &'static Field {
        self.field
    }

    /// Canonical index in `[0, q)`.
    pub fn index(&self) -> u64 {
        self.value as u64
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.unpack(self.value)
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    pub fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.field.same_as(other.field) {
            Ok(())
        } else {
            Err(Error::SpecMismatch { left: self.field.spec.to_string(), right: other.field.spec.to_string() })
        }
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    pub fn double(self) -> FieldElement {
        self + self
    }

    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement { field: self.field, value: self.field.pow_raw(self.value, e) }
    }

    pub fn inverse(self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement { field: self.field, value: self.field.inv_raw(self.value) })
    }

    pub fn checked_div(self, rhs: FieldElement) -> Result<FieldElement> {
        self.check_same(&rhs)?;
        Ok(self * rhs.inverse()?)
    }

    pub fn is_square(&self) -> bool {
        self.field.is_square_raw(self.value)
    }

    /// Quadratic character: 0, 1 or -1.
    pub fn legendre(&self) -> i64 {
        if self.is_zero() {
            0
        } else if self.is_square() {
            1
        } else {
            -1
        }
    }

    /// One square root (the canonically smaller of the two), if any.
    pub fn sqrt(&self) -> Option<FieldElement> {
        if self.is_zero() {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        let root = self.tonelli_shanks();
        Some(root.min(-root))
    }

    /// All square roots in canonical order: empty, `[0]`, or `[b, -b]`.
    pub fn square_roots(&self) -> Vec<FieldElement> {
        match self.sqrt() {
            None => Vec::new(),
            Some(b) if b.is_zero() => vec![b],
            Some(b) => vec![b, -b],
        }
    }

    fn tonelli_shanks(&self) -> FieldElement {
        let q = self.field.order as u64;
        if q % 4 == 3 {
            return self.pow((q + 1) / 4);
        }
        let mut odd = q - 1;
        let mut s = 0u32;
        while odd.is_multiple_of(2) {
            odd /= 2;
            s += 1;
        }
        let one = self.field.one();
        let mut m = s;
        let mut c = self.field.non_residue().pow(odd);
        let mut t = self.pow(odd);
        let mut root = self.pow(odd.div_ceil(2));
        while t != one {
            let mut i = 0u32;
            let mut t2 = t;
            while t2 != one {
                t2 = t2.square();
                i += 1;
            }
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = b.square();
            }
            m = i;
            c = b.square();
            t = t * c;
            root = root * b;
        }
        root
    }
}

fn assert_same(a: &FieldElement, b: &FieldElement) {
    if let Err(e) = a.check_same(b) {
        panic!("{e}");
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_same(&self, &rhs);
        FieldElement { field: self.field, value: self.field.add_raw(self.value, rhs.value) }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_same(&self, &rhs);
        let neg = self.field.neg_raw(rhs.value);
        FieldElement { field: self.field, value: self.field.add_raw(self.value, neg) }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_same(&self, &rhs);
        FieldElement { field: self.field, value: self.field.mul_raw(self.value, rhs.value) }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    /// Panics on a zero divisor; use [`FieldElement::checked_div`] otherwise.
    fn div(self, rhs: FieldElement) -> FieldElement {
        self.checked_div(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { field: self.field, value: self.field.neg_raw(self.value) }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.same_as(other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.spec.r == 1 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{:?}", self.coeffs())
        }
    }
}

/// JSON form of a single element: a bare integer (prime fields) or a
/// coefficient array, constant term first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRepr {
    Int(i64),
    Coeffs(Vec<u64>),
}

impl ElementRepr {
    pub fn of(x: FieldElement) -> Self {
        if x.field.degree() == 1 {
            ElementRepr::Int(x.value as i64)
        } else {
            ElementRepr::Coeffs(x.coeffs())
        }
    }

    pub fn resolve(&self, field: &'static Field) -> Result<FieldElement> {
        match self {
            ElementRepr::Int(n) => {
                if field.degree() == 1 || (*n >= 0 && (*n as u64) < field.characteristic()) {
                    Ok(field.from_int(*n))
                } else {
                    Err(Error::InvalidInput(format!("bare integer {n} is not a prime-subfield residue")))
                }
            }
            ElementRepr::Coeffs(c) => field.from_coeffs(c),
        }
    }
}

impl Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr::of(*self).serialize(s)
    }
}

/// A field homomorphism F_{p^r} -> F_{p^{rk}}, given by the image of the
/// generator `x` of the small field.
#[derive(Debug, Clone, Copy)]
pub struct Embedding {
    source: &'static Field,
    target: &'static Field,
    generator_image: FieldElement,
}

impl Embedding {
    /// Embeds `source` into `target`, sending `x` to the canonically smallest
    /// root of the source modulus in the target.
    pub fn new(source: &'static Field, target: &'static Field) -> Result<Embedding> {
        if source.characteristic() != target.characteristic() || !target.degree().is_multiple_of(source.degree()) {
            return Err(Error::InvalidField(format!("{} does not embed in {}", source.spec, target.spec)));
        }
        let modulus = &source.spec.modulus;
        let generator_image = if source.degree() == 1 {
            target.zero()
        } else {
            target
                .elements()
                .find(|&a| {
                    let mut acc = target.zero();
                    for &c in modulus.iter().rev() {
                        acc = acc * a + target.from_int(c as i64);
                    }
                    acc.is_zero()
                })
                .ok_or_else(|| Error::InvalidField("modulus has no root in the target".into()))?
        };
        Ok(Embedding { source, target, generator_image })
    }

    pub fn source(&self) -> &'static Field {
        self.source
    }

    pub fn target(&self) -> &'static Field {
        self.target
    }

    pub fn apply(&self, x: FieldElement) -> FieldElement {
        assert!(x.field.same_as(self.source), "element is not in the embedding's source field");
        let mut acc = self.target.zero();
        for c in x.coeffs().into_iter().rev() {
            acc = acc * self.generator_image + self.target.from_int(c as i64);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn arith_examples() {
        let f5 = f(5);
        assert_eq!(arith(ArithOp::Add, f5.from_int(3), f5.from_int(4)).unwrap(), f5.from_int(2));
        let f7 = f(7);
        assert_eq!(arith(ArithOp::Neg, f7.zero(), f7.zero()).unwrap(), f7.zero());
        let f9 = Field::extension(3, 2).unwrap();
        let x = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(x * x, f9.from_int(2));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = f(5).one();
        let b = f(7).one();
        assert!(matches!(arith(ArithOp::Add, a, b), Err(Error::SpecMismatch { .. })));
    }

    #[test]
    fn inverses() {
        assert_eq!(f(5).from_int(2).inverse().unwrap(), f(5).from_int(3));
        assert_eq!(f(11).one().inverse().unwrap(), f(11).one());
        let f9 = Field::extension(3, 2).unwrap();
        let x = f9.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(x.inverse().unwrap(), f9.from_coeffs(&[0, 2]).unwrap());
        assert_eq!(f(7).zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn squares_and_roots() {
        assert!(!f(7).from_int(-1).is_square());
        assert!(f(7).zero().is_square());
        assert!(f(13).from_int(-1).is_square());
        assert_eq!(f(7).from_int(2).square_roots(), vec![f(7).from_int(3), f(7).from_int(4)]);
        assert_eq!(f(7).zero().square_roots(), vec![f(7).zero()]);
        assert!(f(7).from_int(3).square_roots().is_empty());
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(find_irreducible(3, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible(7, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 2), vec![2, 0, 1]);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(Field::prime(2).is_err());
        assert!(Field::prime(9).is_err());
        assert!(Field::new(FieldSpec { p: 5, r: 2, modulus: vec![1, 0, 1] }).is_err());
        assert!(Field::new(FieldSpec { p: 5, r: 2, modulus: vec![2, 0, 2] }).is_err());
    }

    #[test]
    fn interning_identifies_equal_specs() {
        let a = Field::new(FieldSpec { p: 3, r: 2, modulus: vec![] }).unwrap();
        let b = Field::new(FieldSpec { p: 3, r: 2, modulus: vec![1, 0, 1] }).unwrap();
        assert!(a.same_as(b));
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = Field::extension(3, 2).unwrap();
        let big = Field::extension(3, 4).unwrap();
        let e = Embedding::new(small, big).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                assert_eq!(e.apply(a * b), e.apply(a) * e.apply(b));
                assert_eq!(e.apply(a + b), e.apply(a) + e.apply(b));
            }
        }
    }

    #[test]
    fn spec_json_shape() {
        let spec: FieldSpec = serde_json::from_str(r#"{"p": 7}"#).unwrap();
        assert_eq!(Field::new(spec).unwrap().spec(), &FieldSpec::prime(7));
        let json = serde_json::to_string(&FieldSpec::extension(3, 2)).unwrap();
        assert_eq!(json, r#"{"p":3,"r":2,"modulus":[1,0,1]}"#);
    }
}
