//! SO₂(F) and the group SF(F) of orientation-preserving rigid motions.
//!
//! A motion is stored as `(u, v, s, t)` and acts by
//! `x ↦ (u·x1 − v·x2 + s, v·x1 + u·x2 + t)` with `u² + v² = 1`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::geometry::{Line, Point, Segment};

/// Rotation matrix [[u, −v], [v, u]] with u² + v² = 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rotation {
    u: FieldElement,
    v: FieldElement,
}

impl Rotation {
    pub fn new(u: FieldElement, v: FieldElement) -> Result<Rotation> {
        u.check_same(&v)?;
        if !(u.square() + v.square()).is_one() {
            return Err(Error::NotARotation);
        }
        Ok(Rotation { u, v })
    }

    pub fn u(&self) -> FieldElement {
        self.u
    }

    pub fn v(&self) -> FieldElement {
        self.v
    }

    pub fn apply(&self, x: Point) -> Point {
        Point { x: self.u * x.x - self.v * x.y, y: self.v * x.x + self.u * x.y }
    }
}

/// All of SO₂(F_q) in canonical order; there are q − χ(−1) of them.
pub fn enumerate_rotations(field: &'static Field) -> Vec<Rotation> {
    let one = field.one();
    let mut out = Vec::new();
    for u in field.elements() {
        let rest = one - u.square();
        for v in rest.square_roots() {
            out.push(Rotation { u, v });
        }
    }
    out.sort();
    out
}

/// An element of SF(F).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RigidMotion {
    u: FieldElement,
    v: FieldElement,
    s: FieldElement,
    t: FieldElement,
}

impl fmt::Debug for RigidMotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Motion(u={}, v={}, s={}, t={})", self.u, self.v, self.s, self.t)
    }
}

impl RigidMotion {
    pub fn new(u: FieldElement, v: FieldElement, s: FieldElement, t: FieldElement) -> Result<RigidMotion> {
        let rot = Rotation::new(u, v)?;
        u.check_same(&s)?;
        u.check_same(&t)?;
        Ok(RigidMotion { u: rot.u, v: rot.v, s, t })
    }

    pub fn from_ints(field: &'static Field, u: i64, v: i64, s: i64, t: i64) -> Result<RigidMotion> {
        RigidMotion::new(field.from_int(u), field.from_int(v), field.from_int(s), field.from_int(t))
    }

    pub fn identity(field: &'static Field) -> RigidMotion {
        let (z, o) = (field.zero(), field.one());
        RigidMotion { u: o, v: z, s: z, t: z }
    }

    pub fn translation(by: Point) -> RigidMotion {
        let f = by.field();
        RigidMotion { u: f.one(), v: f.zero(), s: by.x, t: by.y }
    }

    pub fn rotation(rot: Rotation) -> RigidMotion {
        let f = rot.u.field();
        RigidMotion { u: rot.u, v: rot.v, s: f.zero(), t: f.zero() }
    }

    /// Rotation by `rot` about `center`.
    pub fn rotation_about(center: Point, rot: Rotation) -> RigidMotion {
        let w = center - rot.apply(center);
        RigidMotion { u: rot.u, v: rot.v, s: w.x, t: w.y }
    }

    pub fn field(&self) -> &'static Field {
        self.u.field()
    }

    pub fn u(&self) -> FieldElement {
        self.u
    }
    pub fn v(&self) -> FieldElement {
        self.v
    }
    pub fn s(&self) -> FieldElement {
        self.s
    }
    pub fn t(&self) -> FieldElement {
        self.t
    }

    pub fn rotation_part(&self) -> Rotation {
        Rotation { u: self.u, v: self.v }
    }

    pub fn translation_part(&self) -> Point {
        Point { x: self.s, y: self.t }
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.v.is_zero() && self.s.is_zero() && self.t.is_zero()
    }

    pub fn is_translation(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    pub fn apply(&self, x: Point) -> Point {
        self.rotation_part().apply(x) + self.translation_part()
    }

    pub fn apply_segment(&self, seg: &Segment) -> Segment {
        Segment { head: self.apply(seg.head), tail: self.apply(seg.tail) }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RigidMotion) -> RigidMotion {
        let rot = self.rotation_part();
        let r = rot.apply(Point { x: other.u, y: other.v });
        let w = rot.apply(other.translation_part()) + self.translation_part();
        RigidMotion { u: r.x, v: r.y, s: w.x, t: w.y }
    }

    pub fn checked_compose(&self, other: &RigidMotion) -> Result<RigidMotion> {
        self.u.check_same(&other.u)?;
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> RigidMotion {
        let inv = Rotation { u: self.u, v: -self.v };
        let w = inv.apply(self.translation_part());
        RigidMotion { u: self.u, v: -self.v, s: -w.x, t: -w.y }
    }

    /// The unique fixed point of a non-translation.
    pub fn fixed_point(&self) -> Option<Point> {
        if self.u.is_one() {
            return None;
        }
        let one = self.field().one();
        let a = one - self.u;
        let det = a.square() + self.v.square();
        let inv = det.inverse().ok()?;
        Some(Point { x: (a * self.s - self.v * self.t) * inv, y: (self.v * self.s + a * self.t) * inv })
    }

    /// Whether the motion fixes at least one point of `line`.
    pub fn fixes_point_on(&self, line: &Line) -> bool {
        if self.is_translation() {
            return self.is_identity();
        }
        self.fixed_point().is_some_and(|c| line.contains(c))
    }
}

/// As `[u, v, s, t]`.
impl Serialize for RigidMotion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v, self.s, self.t].serialize(s)
    }
}

/// Every motion of SF(F_q): |SO₂|·q² elements in canonical order.
pub fn enumerate_motions(field: &'static Field) -> Vec<RigidMotion> {
    let rots = enumerate_rotations(field);
    let mut out = Vec::with_capacity(rots.len() * (field.order() * field.order()) as usize);
    for r in &rots {
        for s in field.elements() {
            for t in field.elements() {
                out.push(RigidMotion { u: r.u, v: r.v, s, t });
            }
        }
    }
    out.sort();
    out
}

/// The unique g ∈ SF with g(src) = dst, for segments of equal nonzero length.
pub fn motion_between_segments(src: &Segment, dst: &Segment) -> Result<RigidMotion> {
    src.head.x.check_same(&dst.head.x)?;
    let w = src.tail - src.head;
    let w2 = dst.tail - dst.head;
    let r = w.norm();
    if r.is_zero() || r != w2.norm() {
        return Err(Error::NoTransporter);
    }
    let inv = r.inverse()?;
    // (u + iv) = w2 / w in F[i]/(i² + 1)
    let u = (w2.x * w.x + w2.y * w.y) * inv;
    let v = (w2.y * w.x - w2.x * w.y) * inv;
    let rot = Rotation { u, v };
    let shift = dst.head - rot.apply(src.head);
    Ok(RigidMotion { u, v, s: shift.x, t: shift.y })
}

/// T_xy = {g : g(x) = y}, one element per rotation, in canonical order.
pub fn transporter_set(x: Point, y: Point) -> Vec<RigidMotion> {
    let mut out: Vec<RigidMotion> = enumerate_rotations(x.field())
        .into_iter()
        .map(|rot| {
            let w = y - rot.apply(x);
            RigidMotion { u: rot.u, v: rot.v, s: w.x, t: w.y }
        })
        .collect();
    out.sort();
    out
}

fn require_non_isotropic(line: &Line) -> Result<()> {
    if line.is_isotropic() {
        Err(Error::IsotropicAxis)
    } else {
        Ok(())
    }
}

/// R_τ: all rotations about points of `axis`, deduplicated (the identity
/// arises once per center).
pub fn r_tau_set(axis: &Line) -> Result<Vec<RigidMotion>> {
    require_non_isotropic(axis)?;
    let rots = enumerate_rotations(axis.field());
    let mut out = BTreeSet::new();
    for center in axis.points() {
        for rot in &rots {
            out.insert(RigidMotion::rotation_about(center, *rot));
        }
    }
    Ok(out.into_iter().collect())
}

/// Affine form (matrix rows, translation) of the reflection in a non-isotropic line.
fn reflection_affine(line: &Line) -> ([[FieldElement; 2]; 2], Point) {
    let n = line.normal();
    let nn_inv = n.norm().inverse().expect("non-isotropic");
    let two = line.field().from_int(2);
    let (a, b) = (n.x, n.y);
    let m = [
        [(b.square() - a.square()) * nn_inv, -(two * a * b) * nn_inv],
        [-(two * a * b) * nn_inv, (a.square() - b.square()) * nn_inv],
    ];
    let k = two * line.offset() * nn_inv;
    (m, n.scale(k))
}

/// σ_ℓ ∘ σ_τ: reflect in `axis` first, then in `line`.
pub fn axial_to_motion(line: &Line, axis: &Line) -> Result<RigidMotion> {
    line.normal().x.check_same(&axis.normal().x)?;
    require_non_isotropic(line)?;
    require_non_isotropic(axis)?;
    let (ml, tl) = reflection_affine(line);
    let (ma, ta) = reflection_affine(axis);
    let mul = |i: usize, j: usize| ml[i][0] * ma[0][j] + ml[i][1] * ma[1][j];
    let (u, v) = (mul(0, 0), mul(1, 0));
    debug_assert_eq!(mul(1, 1), u);
    debug_assert_eq!(mul(0, 1), -v);
    let w = Point { x: ml[0][0] * ta.x + ml[0][1] * ta.y + tl.x, y: ml[1][0] * ta.x + ml[1][1] * ta.y + tl.y };
    RigidMotion::new(u, v, w.x, w.y)
}

/// {σ_ℓ ∘ σ_τ : ℓ non-isotropic}: R_τ together with the translations normal
/// to the axis (from axes parallel to it).
pub fn axial_image_set(axis: &Line) -> Result<Vec<RigidMotion>> {
    require_non_isotropic(axis)?;
    let mut out: BTreeSet<RigidMotion> = r_tau_set(axis)?.into_iter().collect();
    for k in axis.field().elements() {
        out.insert(RigidMotion::translation(axis.normal().scale(k)));
    }
    Ok(out.into_iter().collect())
}

/// Membership in [`axial_image_set`] without enumerating it.
pub fn is_axial_image(g: &RigidMotion, axis: &Line) -> bool {
    if g.is_translation() {
        let w = g.translation_part();
        let n = axis.normal();
        return (w.x * n.y - w.y * n.x).is_zero();
    }
    g.fixes_point_on(axis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::reflect;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    fn pt(p: u64, x: i64, y: i64) -> Point {
        Point::from_ints(f(p), x, y)
    }

    #[test]
    fn rotation_requires_unit_circle() {
        assert!(Rotation::new(f(5).one(), f(5).one()).is_err());
        assert!(RigidMotion::from_ints(f(5), 0, 1, 3, 4).is_ok());
    }

    #[test]
    fn group_basics() {
        let g = RigidMotion::from_ints(f(7), 0, 1, 3, 5).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        let quarter = RigidMotion::from_ints(f(7), 0, 1, 0, 0).unwrap();
        assert_eq!(quarter.apply(pt(7, 1, 0)), pt(7, 0, 1));
        let shift = RigidMotion::from_ints(f(5), 1, 0, 1, 2).unwrap();
        assert_eq!(shift.apply(pt(5, 3, 3)), pt(5, 4, 0));
    }

    #[test]
    fn rotation_counts() {
        let r3 = enumerate_rotations(f(3));
        let expect: Vec<(i64, i64)> = vec![(0, 1), (0, 2), (1, 0), (2, 0)];
        let got: Vec<(i64, i64)> = r3.iter().map(|r| (r.u.index() as i64, r.v.index() as i64)).collect();
        assert_eq!(got, expect);
        assert_eq!(enumerate_rotations(f(5)).len(), 4);
        assert_eq!(enumerate_rotations(f(7)).len(), 8);
    }

    #[test]
    fn segment_transport_examples() {
        let o = pt(7, 0, 0);
        let g = motion_between_segments(&Segment::new(o, pt(7, 1, 0)), &Segment::new(o, pt(7, 0, 1))).unwrap();
        assert_eq!(g, RigidMotion::from_ints(f(7), 0, 1, 0, 0).unwrap());
        let s = Segment::new(pt(7, 2, 3), pt(7, 4, 1));
        assert!(motion_between_segments(&s, &s).unwrap().is_identity());
        let g =
            motion_between_segments(&Segment::new(o, pt(7, 1, 0)), &Segment::new(pt(7, 1, 1), pt(7, 2, 1))).unwrap();
        assert_eq!(g, RigidMotion::from_ints(f(7), 1, 0, 1, 1).unwrap());
        let bad = motion_between_segments(&Segment::new(o, pt(7, 1, 0)), &Segment::new(o, pt(7, 2, 0)));
        assert_eq!(bad, Err(Error::NoTransporter));
    }

    #[test]
    fn transporters() {
        let o = pt(3, 0, 0);
        let stab = transporter_set(o, o);
        assert_eq!(stab.len(), 4);
        assert!(stab.iter().all(|g| g.translation_part().is_zero()));
        let x = pt(3, 1, 2);
        let y = pt(3, 2, 2);
        let t = transporter_set(x, y);
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|g| g.apply(x) == y));
    }

    #[test]
    fn r_tau_examples() {
        let axis = Line::from_ints(f(3), 0, 1, 0).unwrap();
        let set = r_tau_set(&axis).unwrap();
        assert_eq!(set.len(), 10);
        assert!(set.contains(&RigidMotion::from_ints(f(3), 0, 1, 1, -1).unwrap()));
        assert!(set.contains(&RigidMotion::identity(f(3))));
        // explicit x-axis form: s = x0(1 − u), t = −x0 v
        for g in &set {
            if g.is_identity() {
                continue;
            }
            let c = g.fixed_point().unwrap();
            assert!(c.y.is_zero());
            assert_eq!(g.s(), c.x * (f(3).one() - g.u()));
            assert_eq!(g.t(), -(c.x * g.v()));
        }
    }

    #[test]
    fn axial_examples() {
        let field = f(7);
        let axis = Line::from_ints(field, 0, 1, 0).unwrap();
        assert!(axial_to_motion(&axis, &axis).unwrap().is_identity());
        // perpendicular axes through (2, 0): half turn
        let perp = Line::from_ints(field, 1, 0, 2).unwrap();
        let g = axial_to_motion(&perp, &axis).unwrap();
        assert_eq!((g.u(), g.v()), (field.from_int(-1), field.zero()));
        assert_eq!(g.fixed_point().unwrap(), pt(7, 2, 0));
        // parallel axes: translation normal to both
        let par = Line::from_ints(field, 0, 1, 3).unwrap();
        let g = axial_to_motion(&par, &axis).unwrap();
        assert!(g.is_translation());
        assert_eq!(g.translation_part(), pt(7, 0, 6));
        for x in crate::geometry::all_points(field) {
            assert_eq!(g.apply(x), reflect(&par, reflect(&axis, x).unwrap()).unwrap());
        }
        let iso = Line::from_ints(f(5), 1, 2, 0).unwrap();
        let ax5 = Line::from_ints(f(5), 0, 1, 0).unwrap();
        assert_eq!(axial_to_motion(&iso, &ax5), Err(Error::IsotropicAxis));
    }

    #[test]
    fn fixed_points() {
        let rot = enumerate_rotations(f(11))[3];
        let c = pt(11, 4, 9);
        let g = RigidMotion::rotation_about(c, rot);
        if !g.is_identity() {
            assert_eq!(g.fixed_point(), Some(c));
        }
    }
}
