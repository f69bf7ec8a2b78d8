//! The kinematic map κ: SF → PF³ \ {X0² + X1² = 0} and the projective
//! objects around it.

use std::fmt;

use serde::Serialize;

use crate::clifford::{EvenCliffordElement, QuadraticFormSpec};
use crate::error::{Error, Result};
use crate::field::{ElementRepr, Field, FieldElement};
use crate::geometry::{Line, Point};
use crate::linalg;
use crate::motions::{transporter_set, RigidMotion};

fn check_fields(c: &[FieldElement]) -> Result<()> {
    for x in &c[1..] {
        c[0].check_same(x)?;
    }
    Ok(())
}

/// Scale so the first nonzero coordinate is 1.
fn normalize(c: [FieldElement; 4]) -> Result<[FieldElement; 4]> {
    let lead = c.iter().find(|x| !x.is_zero()).ok_or(Error::ZeroProjective)?;
    let inv = lead.inverse()?;
    Ok(c.map(|x| x * inv))
}

fn serialize_coords<S: serde::Serializer>(c: &[FieldElement; 4], s: S) -> std::result::Result<S::Ok, S::Error> {
    c.map(ElementRepr::of).serialize(s)
}

fn write_coords(f: &mut fmt::Formatter<'_>, c: &[FieldElement; 4]) -> fmt::Result {
    write!(f, "[{}:{}:{}:{}]", c[0], c[1], c[2], c[3])
}

/// A point [X0 : X1 : X2 : X3] of PF³ in canonical form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    c: [FieldElement; 4],
}

impl ProjPoint {
    pub fn new(c: [FieldElement; 4]) -> Result<ProjPoint> {
        check_fields(&c)?;
        Ok(ProjPoint { c: normalize(c)? })
    }

    pub fn from_ints(field: &'static Field, c: [i64; 4]) -> Result<ProjPoint> {
        ProjPoint::new(c.map(|x| field.from_int(x)))
    }

    pub fn coords(&self) -> [FieldElement; 4] {
        self.c
    }

    pub fn field(&self) -> &'static Field {
        self.c[0].field()
    }

    /// X0² + X1² = 0.
    pub fn is_exceptional(&self) -> bool {
        (self.c[0].square() + self.c[1].square()).is_zero()
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_coords(f, &self.c)
    }
}

impl Serialize for ProjPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coords(&self.c, s)
    }
}

/// The plane Σ cᵢXᵢ = 0, canonically scaled.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPlane {
    c: [FieldElement; 4],
}

impl ProjPlane {
    pub fn new(c: [FieldElement; 4]) -> Result<ProjPlane> {
        check_fields(&c)?;
        Ok(ProjPlane { c: normalize(c)? })
    }

    pub fn from_ints(field: &'static Field, c: [i64; 4]) -> Result<ProjPlane> {
        ProjPlane::new(c.map(|x| field.from_int(x)))
    }

    pub fn coeffs(&self) -> [FieldElement; 4] {
        self.c
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let x = p.c;
        (self.c[0] * x[0] + self.c[1] * x[1] + self.c[2] * x[2] + self.c[3] * x[3]).is_zero()
    }

    /// The plane spanned by the given points, if they span exactly a plane.
    pub fn through(points: &[ProjPoint]) -> Option<ProjPlane> {
        let field = points.first()?.field();
        let rows: Vec<Vec<FieldElement>> = points.iter().map(|p| p.c.to_vec()).collect();
        let kernel = linalg::nullspace(field, &rows, 4);
        if kernel.len() != 1 {
            return None;
        }
        ProjPlane::new([kernel[0][0], kernel[0][1], kernel[0][2], kernel[0][3]]).ok()
    }

    /// All q³ + q² + q + 1 planes.
    pub fn all(field: &'static Field) -> Vec<ProjPlane> {
        all_proj_points(field).into_iter().map(|p| ProjPlane { c: p.c }).collect()
    }
}

impl fmt::Debug for ProjPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plane")?;
        write_coords(f, &self.c)
    }
}

impl Serialize for ProjPlane {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_coords(&self.c, s)
    }
}

/// A line of PF³, stored as the reduced row echelon basis of its span.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjLine {
    rows: [[FieldElement; 4]; 2],
}

impl ProjLine {
    pub fn through(a: &ProjPoint, b: &ProjPoint) -> Result<ProjLine> {
        a.c[0].check_same(&b.c[0])?;
        let mut m = vec![a.c.to_vec(), b.c.to_vec()];
        if linalg::rref(&mut m).len() != 2 {
            return Err(Error::InvalidInput("a line needs two distinct points".into()));
        }
        let row = |r: &Vec<FieldElement>| [r[0], r[1], r[2], r[3]];
        Ok(ProjLine { rows: [row(&m[0]), row(&m[1])] })
    }

    pub fn basis(&self) -> [ProjPoint; 2] {
        self.rows.map(|c| ProjPoint { c })
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        let m = vec![self.rows[0].to_vec(), self.rows[1].to_vec(), p.c.to_vec()];
        linalg::rank(&m) == 2
    }
}

impl fmt::Debug for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line(")?;
        write_coords(f, &self.rows[0])?;
        write!(f, ", ")?;
        write_coords(f, &self.rows[1])?;
        write!(f, ")")
    }
}

/// Rank of the coordinate matrix of a list of projective points.
pub fn coordinate_rank(points: &[ProjPoint]) -> usize {
    let rows: Vec<Vec<FieldElement>> = points.iter().map(|p| p.c.to_vec()).collect();
    linalg::rank(&rows)
}

/// An invertible 4×4 matrix up to scalars.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjMap {
    m: [[FieldElement; 4]; 4],
}

impl fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjMap(")?;
        for r in &self.m {
            write_coords(f, r)?;
        }
        write!(f, ")")
    }
}

impl ProjMap {
    pub fn new(m: [[FieldElement; 4]; 4]) -> Result<ProjMap> {
        let flat: Vec<FieldElement> = m.iter().flatten().copied().collect();
        check_fields(&flat)?;
        let field = flat[0].field();
        let rows: Vec<Vec<FieldElement>> = m.iter().map(|r| r.to_vec()).collect();
        if linalg::determinant(field, &rows).is_zero() {
            return Err(Error::SingularMap);
        }
        let lead = flat.iter().find(|x| !x.is_zero()).expect("nonsingular").inverse()?;
        Ok(ProjMap { m: m.map(|r| r.map(|x| x * lead)) })
    }

    pub fn identity(field: &'static Field) -> ProjMap {
        let mut m = [[field.zero(); 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = field.one();
        }
        ProjMap { m }
    }

    pub fn matrix(&self) -> [[FieldElement; 4]; 4] {
        self.m
    }

    fn field(&self) -> &'static Field {
        self.m[0][0].field()
    }

    fn rows(&self) -> Vec<Vec<FieldElement>> {
        self.m.iter().map(|r| r.to_vec()).collect()
    }

    fn from_rows(rows: &[Vec<FieldElement>]) -> Result<ProjMap> {
        let row = |r: &Vec<FieldElement>| [r[0], r[1], r[2], r[3]];
        ProjMap::new([row(&rows[0]), row(&rows[1]), row(&rows[2]), row(&rows[3])])
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let y = linalg::mat_vec(&self.rows(), &p.c);
        ProjPoint::new([y[0], y[1], y[2], y[3]]).expect("nonsingular map")
    }

    /// Image of a plane: c ↦ c·M⁻¹, so that incidences are preserved.
    pub fn apply_plane(&self, plane: &ProjPlane) -> ProjPlane {
        let inv = linalg::inverse(self.field(), &self.rows()).expect("nonsingular map");
        let c = linalg::mat_mul(&[plane.c.to_vec()], &inv);
        ProjPlane::new([c[0][0], c[0][1], c[0][2], c[0][3]]).expect("nonsingular map")
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ProjMap) -> ProjMap {
        ProjMap::from_rows(&linalg::mat_mul(&self.rows(), &other.rows())).expect("product of invertibles")
    }

    pub fn inverse(&self) -> ProjMap {
        let inv = linalg::inverse(self.field(), &self.rows()).expect("nonsingular map");
        ProjMap::from_rows(&inv).expect("inverse is invertible")
    }

    pub fn is_identity(&self) -> bool {
        *self == ProjMap::identity(self.field())
    }
}

/// The single square-root-free formula [2(u+1) : 2v : s(u+1)+tv : sv−t(u+1)]
/// before projectivization. It is the zero vector at u = −1.
pub fn kappa_chart_a_raw(g: &RigidMotion) -> [FieldElement; 4] {
    let f = g.field();
    let a = g.u() + f.one();
    let (v, s, t) = (g.v(), g.s(), g.t());
    [a.double(), v.double(), s * a + t * v, s * v - t * a]
}

/// [2v : 2(1−u) : sv+t(1−u) : s(1−u)−tv] before projectivization; zero at u = 1.
pub fn kappa_chart_b_raw(g: &RigidMotion) -> [FieldElement; 4] {
    let f = g.field();
    let b = f.one() - g.u();
    let (v, s, t) = (g.v(), g.s(), g.t());
    [v.double(), b.double(), s * v + t * b, s * b - t * v]
}

pub fn kappa(g: &RigidMotion) -> ProjPoint {
    let raw = if g.u() != -g.field().one() { kappa_chart_a_raw(g) } else { kappa_chart_b_raw(g) };
    ProjPoint::new(raw).expect("each chart is nonzero where it is used")
}

pub fn kappa_inv(p: &ProjPoint) -> Result<RigidMotion> {
    let [x0, x1, x2, x3] = p.c;
    let n = x0.square() + x1.square();
    let inv = n.inverse().map_err(|_| Error::NotInImage)?;
    let u = (x0.square() - x1.square()) * inv;
    let v = (x0 * x1).double() * inv;
    let s = (x1 * x3 + x0 * x2).double() * inv;
    let t = (x1 * x2 - x0 * x3).double() * inv;
    RigidMotion::new(u, v, s, t)
}

/// All (q⁴ − 1)/(q − 1) points of PF³ in canonical order.
pub fn all_proj_points(field: &'static Field) -> Vec<ProjPoint> {
    let elems: Vec<FieldElement> = field.elements().collect();
    let (zero, one) = (field.zero(), field.one());
    let mut out = Vec::new();
    for lead in (0..4).rev() {
        let free = 3 - lead;
        let count = elems.len().pow(free as u32);
        for n in 0..count {
            let mut c = [zero; 4];
            c[lead] = one;
            let mut k = n;
            for slot in (lead + 1..4).rev() {
                c[slot] = elems[k % elems.len()];
                k /= elems.len();
            }
            out.push(ProjPoint { c });
        }
    }
    out.sort();
    out
}

/// {X0² + X1² = 0}: a line when −1 is a non-square, two planes otherwise.
pub fn exceptional_set(field: &'static Field) -> Vec<ProjPoint> {
    all_proj_points(field).into_iter().filter(ProjPoint::is_exceptional).collect()
}

/// Coordinates (g0, g12, g13, g23) of an even Clifford representative of g.
pub fn clifford_rep(g: &RigidMotion) -> EvenCliffordElement {
    let [x0, x1, x2, x3] = kappa(g).c;
    EvenCliffordElement::new(QuadraticFormSpec::euclidean(g.field()), [x0, -x1, x2, -x3]).expect("same field")
}

fn sign_twist(m: [[FieldElement; 4]; 4]) -> [[FieldElement; 4]; 4] {
    let mut out = m;
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            if (i + j) % 2 == 1 {
                *x = -*x;
            }
        }
    }
    out
}

fn multiplication_matrix(g: &RigidMotion, left: bool) -> ProjMap {
    let rep = clifford_rep(g);
    let form = rep.form();
    let f = g.field();
    let mut m = [[f.zero(); 4]; 4];
    for j in 0..4 {
        let mut basis = [f.zero(); 4];
        basis[j] = f.one();
        let b = EvenCliffordElement::new(form, basis).expect("same field");
        let prod = if left { rep.multiply(&b) } else { b.multiply(&rep) }.expect("same form");
        for (i, c) in prod.coords().into_iter().enumerate() {
            m[i][j] = c;
        }
    }
    ProjMap::new(sign_twist(m)).expect("multiplication by a unit is invertible")
}

/// φ_g with κ(g·x) = φ_g(κ(x)).
pub fn phi_left(g: &RigidMotion) -> ProjMap {
    multiplication_matrix(g, true)
}

/// φ^g with κ(x·g) = φ^g(κ(x)).
pub fn phi_right(g: &RigidMotion) -> ProjMap {
    multiplication_matrix(g, false)
}

/// κ(T_xy) for every transporter, in the order of [`transporter_set`].
pub fn transporter_image(x: Point, y: Point) -> Vec<ProjPoint> {
    transporter_set(x, y).iter().map(kappa).collect()
}

/// The projective line containing κ(T_xy).
pub fn transporter_line(x: Point, y: Point) -> ProjLine {
    let pts = transporter_image(x, y);
    ProjLine::through(&pts[0], &pts[1]).expect("κ is injective and |SO₂| ≥ 2")
}

/// The plane c·X1 − n2·X2 − n1·X3 = 0 for the axis n·x = c. It contains κ of
/// every rotation about a point of the axis and of every translation normal to it.
pub fn r_tau_plane(axis: &Line) -> Result<ProjPlane> {
    if axis.is_isotropic() {
        return Err(Error::IsotropicAxis);
    }
    let n = axis.normal();
    ProjPlane::new([axis.field().zero(), axis.offset(), -n.y, -n.x])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motions::r_tau_set;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn kappa_examples() {
        let f7 = f(7);
        assert_eq!(kappa(&RigidMotion::identity(f7)), ProjPoint::from_ints(f7, [1, 0, 0, 0]).unwrap());
        let half = RigidMotion::from_ints(f7, -1, 0, 0, 0).unwrap();
        assert_eq!(kappa(&half), ProjPoint::from_ints(f7, [0, 1, 0, 0]).unwrap());
        let shift = RigidMotion::from_ints(f7, 1, 0, 1, 2).unwrap();
        assert_eq!(kappa(&shift), ProjPoint::from_ints(f7, [1, 0, 4, 6]).unwrap());
        assert!(kappa_chart_a_raw(&half).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn kappa_inverse_examples() {
        let f7 = f(7);
        assert!(kappa_inv(&ProjPoint::from_ints(f7, [1, 0, 0, 0]).unwrap()).unwrap().is_identity());
        let r = kappa_inv(&ProjPoint::from_ints(f7, [1, 1, 0, 0]).unwrap()).unwrap();
        assert_eq!(r, RigidMotion::from_ints(f7, 0, 1, 0, 0).unwrap());
        assert_eq!(kappa_inv(&ProjPoint::from_ints(f7, [0, 0, 1, 0]).unwrap()), Err(Error::NotInImage));
    }

    #[test]
    fn exceptional_sizes() {
        assert_eq!(all_proj_points(f(3)).len(), 40);
        assert_eq!(exceptional_set(f(3)).len(), 4);
        assert_eq!(exceptional_set(f(5)).len(), 56);
        assert_eq!(exceptional_set(f(7)).len(), 8);
    }

    #[test]
    fn phi_identity_and_inverse() {
        let f7 = f(7);
        assert!(phi_left(&RigidMotion::identity(f7)).is_identity());
        let g = RigidMotion::from_ints(f7, 0, 1, 3, 5).unwrap();
        assert!(phi_left(&g).compose(&phi_left(&g.inverse())).is_identity());
        let x = RigidMotion::from_ints(f7, 0, 6, 2, 1).unwrap();
        assert_eq!(kappa(&g.compose(&x)), phi_left(&g).apply(&kappa(&x)));
        assert_eq!(kappa(&x.compose(&g)), phi_right(&g).apply(&kappa(&x)));
    }

    #[test]
    fn rotation_line() {
        let f5 = f(5);
        let o = Point::origin(f5);
        let line = transporter_line(o, o);
        for p in all_proj_points(f5) {
            assert_eq!(line.contains(&p), p.coords()[2].is_zero() && p.coords()[3].is_zero());
        }
        let pts = transporter_image(Point::origin(f(3)), Point::from_ints(f(3), 1, 0));
        assert_eq!(pts.len(), 4);
        assert_eq!(coordinate_rank(&pts), 2);
    }

    #[test]
    fn axis_planes() {
        let f3 = f(3);
        let x_axis = Line::from_ints(f3, 0, 1, 0).unwrap();
        assert_eq!(r_tau_plane(&x_axis).unwrap(), ProjPlane::from_ints(f3, [0, 0, 1, 0]).unwrap());
        let y_axis = Line::from_ints(f(7), 1, 0, 0).unwrap();
        let plane = r_tau_plane(&y_axis).unwrap();
        assert!(r_tau_set(&y_axis).unwrap().iter().all(|g| plane.contains(&kappa(g))));
        let iso = Line::from_ints(f(5), 1, 2, 0).unwrap();
        assert_eq!(r_tau_plane(&iso), Err(Error::IsotropicAxis));
    }
}
