//! Cl(V, Q) for V = F³ with e1² = 1, e2² = −λ, e3² = 0, and its even subalgebra.
//!
//! Basis blades are bitmasks over {e1, e2, e3}: e1 = 0b001, e2 = 0b010,
//! e3 = 0b100, so e12 = 3, e13 = 5, e23 = 6, e123 = 7.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::motions::RigidMotion;

/// Sign rule for products of distinct generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CommutationRule {
    /// eᵢeⱼ = −eⱼeᵢ; the rule every other formula depends on.
    Anticommuting,
    /// eᵢeⱼ = eⱼeᵢ; kept only to show it is inconsistent with the rest.
    Commuting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticFormSpec {
    lambda: FieldElement,
    rule: CommutationRule,
}

impl QuadraticFormSpec {
    pub fn new(lambda: FieldElement) -> Result<QuadraticFormSpec> {
        if lambda.is_zero() {
            return Err(Error::InvalidInput("lambda must be nonzero".into()));
        }
        Ok(QuadraticFormSpec { lambda, rule: CommutationRule::Anticommuting })
    }

    /// λ = −1, i.e. Q(x, y, z) = x² + y².
    pub fn euclidean(field: &'static Field) -> QuadraticFormSpec {
        QuadraticFormSpec { lambda: -field.one(), rule: CommutationRule::Anticommuting }
    }

    pub fn with_rule(self, rule: CommutationRule) -> QuadraticFormSpec {
        QuadraticFormSpec { rule, ..self }
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn rule(&self) -> CommutationRule {
        self.rule
    }

    pub fn field(&self) -> &'static Field {
        self.lambda.field()
    }

    fn generator_square(&self, bit: usize) -> FieldElement {
        let f = self.field();
        match bit {
            0 => f.one(),
            1 => -self.lambda,
            _ => f.zero(),
        }
    }

    /// e_a · e_b = coeff · e_(a xor b).
    fn blade_product(&self, a: usize, b: usize) -> FieldElement {
        let f = self.field();
        let mut coeff = f.one();
        if self.rule == CommutationRule::Anticommuting {
            let mut swaps = 0;
            for i in 0..3 {
                if a >> i & 1 == 1 {
                    swaps += (b & ((1 << i) - 1)).count_ones();
                }
            }
            if swaps % 2 == 1 {
                coeff = -coeff;
            }
        }
        for i in 0..3 {
            if (a & b) >> i & 1 == 1 {
                coeff = coeff * self.generator_square(i);
            }
        }
        coeff
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Blade {
    E0,
    E1,
    E2,
    E3,
    E12,
    E13,
    E23,
    E123,
}

impl Blade {
    /// Display order.
    pub const ALL: [Blade; 8] =
        [Blade::E0, Blade::E1, Blade::E2, Blade::E3, Blade::E12, Blade::E13, Blade::E23, Blade::E123];

    pub fn mask(self) -> usize {
        match self {
            Blade::E0 => 0,
            Blade::E1 => 1,
            Blade::E2 => 2,
            Blade::E3 => 4,
            Blade::E12 => 3,
            Blade::E13 => 5,
            Blade::E23 => 6,
            Blade::E123 => 7,
        }
    }

    pub fn grade(self) -> u32 {
        self.mask().count_ones()
    }
}

fn grade_of(mask: usize) -> u32 {
    mask.count_ones()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct CliffordElement {
    form: QuadraticFormSpec,
    coeffs: [FieldElement; 8],
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = Blade::ALL.iter().map(|b| self.coeff(*b).to_string()).collect();
        write!(f, "Cl({})", parts.join(", "))
    }
}

impl CliffordElement {
    pub fn zero(form: QuadraticFormSpec) -> CliffordElement {
        CliffordElement { form, coeffs: [form.field().zero(); 8] }
    }

    pub fn basis(form: QuadraticFormSpec, blade: Blade) -> CliffordElement {
        let mut out = CliffordElement::zero(form);
        out.coeffs[blade.mask()] = form.field().one();
        out
    }

    pub fn scalar(form: QuadraticFormSpec, k: FieldElement) -> CliffordElement {
        let mut out = CliffordElement::zero(form);
        out.coeffs[0] = k;
        out
    }

    /// Coefficients given in display order (e0, e1, e2, e3, e12, e13, e23, e123).
    pub fn from_coeffs(form: QuadraticFormSpec, coeffs: [FieldElement; 8]) -> Result<CliffordElement> {
        let mut out = CliffordElement::zero(form);
        for (b, c) in Blade::ALL.iter().zip(coeffs) {
            if !form.field().same_as(c.field()) {
                return Err(Error::SpecMismatch {
                    left: form.field().spec().to_string(),
                    right: c.field().spec().to_string(),
                });
            }
            out.coeffs[b.mask()] = c;
        }
        Ok(out)
    }

    pub fn vector(form: QuadraticFormSpec, x: FieldElement, y: FieldElement, z: FieldElement) -> CliffordElement {
        let mut out = CliffordElement::zero(form);
        out.coeffs[1] = x;
        out.coeffs[2] = y;
        out.coeffs[4] = z;
        out
    }

    pub fn form(&self) -> QuadraticFormSpec {
        self.form
    }

    pub fn coeff(&self, blade: Blade) -> FieldElement {
        self.coeffs[blade.mask()]
    }

    /// Coefficients in display order.
    pub fn coeffs(&self) -> [FieldElement; 8] {
        Blade::ALL.map(|b| self.coeff(b))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_even(&self) -> bool {
        (0..8).all(|m| grade_of(m).is_multiple_of(2) || self.coeffs[m].is_zero())
    }

    pub fn is_vector(&self) -> bool {
        (0..8).all(|m| grade_of(m) == 1 || self.coeffs[m].is_zero())
    }

    /// The scalar part if every other coefficient vanishes.
    pub fn as_scalar(&self) -> Option<FieldElement> {
        (1..8).all(|m| self.coeffs[m].is_zero()).then_some(self.coeffs[0])
    }

    pub fn scale(&self, k: FieldElement) -> CliffordElement {
        CliffordElement { form: self.form, coeffs: self.coeffs.map(|c| c * k) }
    }

    pub fn multiply(&self, other: &CliffordElement) -> Result<CliffordElement> {
        if self.form != other.form {
            return Err(Error::SpecMismatch { left: format!("{:?}", self.form), right: format!("{:?}", other.form) });
        }
        let mut out = CliffordElement::zero(self.form);
        for a in 0..8 {
            if self.coeffs[a].is_zero() {
                continue;
            }
            for b in 0..8 {
                if other.coeffs[b].is_zero() {
                    continue;
                }
                let k = self.form.blade_product(a, b);
                out.coeffs[a ^ b] = out.coeffs[a ^ b] + k * self.coeffs[a] * other.coeffs[b];
            }
        }
        Ok(out)
    }

    /// Sign (−1)^(k(k+1)/2) on grade k.
    pub fn conjugate(&self) -> CliffordElement {
        let mut out = *self;
        for m in 0..8 {
            let k = grade_of(m);
            if (k * (k + 1) / 2) % 2 == 1 {
                out.coeffs[m] = -out.coeffs[m];
            }
        }
        out
    }

    /// Sign (−1)^k on grade k.
    pub fn main_involution(&self) -> CliffordElement {
        let mut out = *self;
        for m in 0..8 {
            if grade_of(m) % 2 == 1 {
                out.coeffs[m] = -out.coeffs[m];
            }
        }
        out
    }

    /// a·a*.
    pub fn norm_element(&self) -> CliffordElement {
        self.multiply(&self.conjugate()).expect("same form")
    }

    /// a·a* when it is a scalar.
    pub fn norm(&self) -> Option<FieldElement> {
        self.norm_element().as_scalar()
    }
}

impl Add for CliffordElement {
    type Output = CliffordElement;
    fn add(self, o: CliffordElement) -> CliffordElement {
        assert_eq!(self.form, o.form, "mixing Clifford algebras");
        let mut out = self;
        for m in 0..8 {
            out.coeffs[m] = self.coeffs[m] + o.coeffs[m];
        }
        out
    }
}

impl Sub for CliffordElement {
    type Output = CliffordElement;
    fn sub(self, o: CliffordElement) -> CliffordElement {
        self + (-o)
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;
    fn neg(self) -> CliffordElement {
        CliffordElement { form: self.form, coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Mul for CliffordElement {
    type Output = CliffordElement;
    fn mul(self, o: CliffordElement) -> CliffordElement {
        self.multiply(&o).expect("mixing Clifford algebras")
    }
}

/// g0·e0 + g12·e12 + g13·e13 + g23·e23.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct EvenCliffordElement {
    form: QuadraticFormSpec,
    g: [FieldElement; 4],
}

impl fmt::Debug for EvenCliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Even({}, {}, {}, {})", self.g[0], self.g[1], self.g[2], self.g[3])
    }
}

const EVEN_MASKS: [usize; 4] = [0, 3, 5, 6];

impl EvenCliffordElement {
    pub fn new(form: QuadraticFormSpec, g: [FieldElement; 4]) -> Result<EvenCliffordElement> {
        for c in &g {
            if !form.field().same_as(c.field()) {
                return Err(Error::SpecMismatch {
                    left: form.field().spec().to_string(),
                    right: c.field().spec().to_string(),
                });
            }
        }
        Ok(EvenCliffordElement { form, g })
    }

    pub fn from_ints(form: QuadraticFormSpec, g: [i64; 4]) -> EvenCliffordElement {
        EvenCliffordElement { form, g: g.map(|x| form.field().from_int(x)) }
    }

    pub fn one(form: QuadraticFormSpec) -> EvenCliffordElement {
        EvenCliffordElement::from_ints(form, [1, 0, 0, 0])
    }

    pub fn form(&self) -> QuadraticFormSpec {
        self.form
    }

    /// (g0, g12, g13, g23).
    pub fn coords(&self) -> [FieldElement; 4] {
        self.g
    }

    pub fn to_full(&self) -> CliffordElement {
        let mut out = CliffordElement::zero(self.form);
        for (m, c) in EVEN_MASKS.iter().zip(self.g) {
            out.coeffs[*m] = c;
        }
        out
    }

    pub fn from_full(a: &CliffordElement) -> Option<EvenCliffordElement> {
        a.is_even().then(|| EvenCliffordElement { form: a.form, g: EVEN_MASKS.map(|m| a.coeffs[m]) })
    }

    pub fn multiply(&self, other: &EvenCliffordElement) -> Result<EvenCliffordElement> {
        let full = self.to_full().multiply(&other.to_full())?;
        Ok(EvenCliffordElement::from_full(&full).expect("even subalgebra is closed"))
    }

    pub fn scale(&self, k: FieldElement) -> EvenCliffordElement {
        EvenCliffordElement { form: self.form, g: self.g.map(|c| c * k) }
    }

    pub fn conjugate(&self) -> EvenCliffordElement {
        let [g0, g12, g13, g23] = self.g;
        EvenCliffordElement { form: self.form, g: [g0, -g12, -g13, -g23] }
    }

    /// g0² − λ·g12².
    pub fn norm(&self) -> FieldElement {
        self.g[0].square() - self.form.lambda * self.g[1].square()
    }

    pub fn is_unit(&self) -> bool {
        !self.norm().is_zero()
    }

    pub fn is_central(&self) -> bool {
        self.g[1..].iter().all(|c| c.is_zero())
    }
}

pub fn invert_even(g: &EvenCliffordElement) -> Result<EvenCliffordElement> {
    let n = g.norm().inverse().map_err(|_| Error::NonUnit)?;
    Ok(g.conjugate().scale(n))
}

/// g v g⁻¹ for a vector v.
pub fn sandwich(g: &EvenCliffordElement, v: &CliffordElement) -> Result<CliffordElement> {
    if !v.is_vector() {
        return Err(Error::InvalidInput("sandwich expects a grade-1 element".into()));
    }
    let inv = invert_even(g)?;
    g.to_full().multiply(v)?.multiply(&inv.to_full())
}

pub type Matrix3 = [[FieldElement; 3]; 3];

/// The matrix of v ↦ g v g⁻¹ on (e1, e2, e3): column j is the image of e_j.
pub fn rho_matrix(g: &EvenCliffordElement) -> Result<Matrix3> {
    let f = g.form.field();
    let mut m = [[f.zero(); 3]; 3];
    for (j, blade) in [Blade::E1, Blade::E2, Blade::E3].into_iter().enumerate() {
        let img = sandwich(g, &CliffordElement::basis(g.form, blade))?;
        for (i, b) in [Blade::E1, Blade::E2, Blade::E3].into_iter().enumerate() {
            m[i][j] = img.coeff(b);
        }
    }
    Ok(m)
}

/// The closed-form contragredient matrix, evaluated at g as displayed.
/// Its rows are the coordinates of g e1 g⁻¹, g e2 g⁻¹, g e3 g⁻¹, so it equals
/// ρ(g)ᵀ and reverses products.
pub fn contragredient_display(g: &EvenCliffordElement) -> Result<Matrix3> {
    let n = g.norm();
    let inv = n.inverse().map_err(|_| Error::NonUnit)?;
    let [g0, g12, g13, g23] = g.g;
    let lam = g.form.lambda;
    let f = g.form.field();
    let two = f.from_int(2);
    let diag = (g0.square() + lam * g12.square()) * inv;
    Ok([
        [diag, -(two * g0 * g12) * inv, -(two * (g0 * g13 + lam * g12 * g23)) * inv],
        [-(two * lam * g0 * g12) * inv, diag, two * lam * (g0 * g23 + g12 * g13) * inv],
        [f.zero(), f.zero(), f.one()],
    ])
}

/// ρ*(g) as an affine matrix acting on columns (x, y, 1). Evaluating the
/// displayed matrix at g* turns the anti-homomorphism into a homomorphism.
pub fn rho_star_matrix(g: &EvenCliffordElement) -> Result<Matrix3> {
    contragredient_display(&g.conjugate())
}

/// ρ*(g) as a rigid motion; needs λ = −1 so that rotations satisfy u² + v² = 1.
pub fn rho_star(g: &EvenCliffordElement) -> Result<RigidMotion> {
    if g.form.lambda != -g.form.field().one() {
        return Err(Error::InvalidInput("rigid motions need lambda = -1".into()));
    }
    let m = rho_star_matrix(g)?;
    RigidMotion::new(m[0][0], m[1][0], m[0][2], m[1][2])
}

/// Every unit of the even subalgebra (q⁴ candidates, so small fields only).
pub fn even_units(form: QuadraticFormSpec) -> Vec<EvenCliffordElement> {
    let elems: Vec<FieldElement> = form.field().elements().collect();
    let mut out = Vec::new();
    for &a in &elems {
        for &b in &elems {
            for &c in &elems {
                for &d in &elems {
                    let g = EvenCliffordElement { form, g: [a, b, c, d] };
                    if g.is_unit() {
                        out.push(g);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(p: u64) -> QuadraticFormSpec {
        QuadraticFormSpec::euclidean(Field::prime(p).unwrap())
    }

    fn e(fm: QuadraticFormSpec, b: Blade) -> CliffordElement {
        CliffordElement::basis(fm, b)
    }

    #[test]
    fn basis_products() {
        let fm = form(7);
        let f = fm.field();
        assert_eq!(e(fm, Blade::E12) * e(fm, Blade::E12), CliffordElement::scalar(fm, -f.one()));
        assert!((e(fm, Blade::E13) * e(fm, Blade::E13)).is_zero());
        assert_eq!(e(fm, Blade::E1) * e(fm, Blade::E2), e(fm, Blade::E12));
        assert_eq!(e(fm, Blade::E2) * e(fm, Blade::E1), -e(fm, Blade::E12));
        let a = CliffordElement::from_coeffs(fm, [1, 2, 3, 4, 5, 6, 0, 1].map(|x| f.from_int(x))).unwrap();
        assert_eq!(e(fm, Blade::E0) * a, a);
    }

    #[test]
    fn lambda_must_be_nonzero() {
        assert!(QuadraticFormSpec::new(Field::prime(5).unwrap().zero()).is_err());
    }

    #[test]
    fn conjugation_and_norm() {
        let fm = form(5);
        assert_eq!(e(fm, Blade::E12).conjugate(), -e(fm, Blade::E12));
        assert_eq!(e(fm, Blade::E0).norm(), Some(fm.field().one()));
        let g = EvenCliffordElement::from_ints(fm, [1, 1, 0, 0]);
        assert_eq!(g.norm(), fm.field().from_int(2));
        assert_eq!(g.to_full().norm(), Some(fm.field().from_int(2)));
    }

    #[test]
    fn inverses() {
        let fm = form(5);
        let one = EvenCliffordElement::one(fm);
        assert_eq!(invert_even(&one).unwrap(), one);
        let g = EvenCliffordElement::from_ints(fm, [1, 1, 0, 0]);
        let inv = invert_even(&g).unwrap();
        assert_eq!(inv, EvenCliffordElement::from_ints(fm, [3, 2, 0, 0]));
        assert_eq!(g.multiply(&inv).unwrap(), one);
        // 2² = −1 = λ·1² in F_5
        let bad = EvenCliffordElement::from_ints(fm, [2, 1, 0, 0]);
        assert_eq!(invert_even(&bad), Err(Error::NonUnit));
    }

    #[test]
    fn sandwich_examples() {
        let fm = form(7);
        let v = CliffordElement::vector(fm, fm.field().from_int(3), fm.field().from_int(5), fm.field().from_int(1));
        assert_eq!(sandwich(&EvenCliffordElement::one(fm), &v).unwrap(), v);
        let g = EvenCliffordElement::from_ints(fm, [1, 1, 0, 0]);
        assert_eq!(sandwich(&g, &e(fm, Blade::E1)).unwrap(), -e(fm, Blade::E2));
        let h = EvenCliffordElement::from_ints(fm, [2, 3, 4, 5]);
        assert_eq!(sandwich(&h, &e(fm, Blade::E3)).unwrap(), e(fm, Blade::E3));
        assert!(sandwich(&h, &e(fm, Blade::E12)).is_err());
    }

    #[test]
    fn rho_star_examples() {
        let fm = form(7);
        assert!(rho_star(&EvenCliffordElement::one(fm)).unwrap().is_identity());
        let g = EvenCliffordElement::from_ints(fm, [1, 1, 0, 0]);
        let shown = contragredient_display(&g).unwrap();
        assert_eq!((shown[0][0], shown[1][0]), (fm.field().zero(), fm.field().one()));
        // the homomorphic version rotates the other way
        let m = rho_star(&g).unwrap();
        assert_eq!((m.u(), m.v()), (fm.field().zero(), -fm.field().one()));
        assert_eq!(rho_star(&g.scale(fm.field().from_int(3))).unwrap(), m);
    }
}
