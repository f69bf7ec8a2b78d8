//! The plane F_q^2 with the quadratic distance d(x, y) = (x1-y1)^2 + (x2-y2)^2.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{ElementRepr, Field, FieldElement, FieldSpec};

/// A point (or vector) of F_q^2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Point {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<Point> {
        x.check_same(&y)?;
        Ok(Point { x, y })
    }

    /// Point with prime-subfield coordinates.
    pub fn from_ints(field: &'static Field, x: i64, y: i64) -> Point {
        Point { x: field.from_int(x), y: field.from_int(y) }
    }

    pub fn origin(field: &'static Field) -> Point {
        Point { x: field.zero(), y: field.zero() }
    }

    pub fn field(&self) -> &'static Field {
        self.x.field()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(self, k: FieldElement) -> Point {
        Point { x: self.x * k, y: self.y * k }
    }

    pub fn dot(self, o: Point) -> FieldElement {
        self.x * o.x + self.y * o.y
    }

    /// ‖v‖² = v·v.
    pub fn norm(self) -> FieldElement {
        self.dot(self)
    }

    /// d(self, other); panics if the points live in different fields.
    pub fn distance_to(self, other: Point) -> FieldElement {
        (self - other).norm()
    }
}

impl std::ops::Add for Point {
    type Output = Point;

    fn add(self, o: Point) -> Point {
        Point { x: self.x + o.x, y: self.y + o.y }
    }
}

impl std::ops::Sub for Point {
    type Output = Point;

    fn sub(self, o: Point) -> Point {
        Point { x: self.x - o.x, y: self.y - o.y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn distance(a: Point, b: Point) -> Result<FieldElement> {
    a.x.check_same(&b.x)?;
    Ok(a.distance_to(b))
}

/// True iff `v` is a nonzero vector with v·v = 0.
pub fn is_isotropic_vector(v: Point) -> Result<bool> {
    if v.is_zero() {
        return Err(Error::InvalidInput("the zero vector has no isotropy type".into()));
    }
    Ok(v.norm().is_zero())
}

/// Ordered pair of points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Segment {
    pub head: Point,
    pub tail: Point,
}

impl Segment {
    pub fn new(head: Point, tail: Point) -> Segment {
        Segment { head, tail }
    }

    pub fn length(&self) -> FieldElement {
        self.head.distance_to(self.tail)
    }

    pub fn reversed(&self) -> Segment {
        Segment { head: self.tail, tail: self.head }
    }
}

/// The line n·x = c, stored with the first nonzero normal coordinate equal to 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    n1: FieldElement,
    n2: FieldElement,
    c: FieldElement,
}

impl Line {
    pub fn new(n1: FieldElement, n2: FieldElement, c: FieldElement) -> Result<Line> {
        n1.check_same(&n2)?;
        n1.check_same(&c)?;
        let lead = if !n1.is_zero() {
            n1
        } else if !n2.is_zero() {
            n2
        } else {
            return Err(Error::InvalidInput("line normal must be nonzero".into()));
        };
        let k = lead.inverse()?;
        Ok(Line { n1: n1 * k, n2: n2 * k, c: c * k })
    }

    pub fn from_ints(field: &'static Field, n1: i64, n2: i64, c: i64) -> Result<Line> {
        Line::new(field.from_int(n1), field.from_int(n2), field.from_int(c))
    }

    /// The line through two distinct points.
    pub fn through(a: Point, b: Point) -> Result<Line> {
        a.x.check_same(&b.x)?;
        if a == b {
            return Err(Error::InvalidInput("a line needs two distinct points".into()));
        }
        let d = b - a;
        let n = Point { x: -d.y, y: d.x };
        Line::new(n.x, n.y, n.dot(a))
    }

    pub fn field(&self) -> &'static Field {
        self.n1.field()
    }

    pub fn normal(&self) -> Point {
        Point { x: self.n1, y: self.n2 }
    }

    pub fn offset(&self) -> FieldElement {
        self.c
    }

    pub fn direction(&self) -> Point {
        Point { x: -self.n2, y: self.n1 }
    }

    pub fn is_isotropic(&self) -> bool {
        self.normal().norm().is_zero()
    }

    pub fn contains(&self, x: Point) -> bool {
        self.normal().dot(x) == self.c
    }

    /// Whether the two lines have the same direction.
    pub fn is_parallel(&self, other: &Line) -> bool {
        self.n1 == other.n1 && self.n2 == other.n2
    }

    /// The points of the line, in canonical order.
    pub fn points(&self) -> Vec<Point> {
        let field = self.field();
        let mut pts: Vec<Point> = if self.n2.is_zero() {
            // x = c
            field.elements().map(|y| Point { x: self.c, y }).collect()
        } else {
            let inv = self.n2.inverse().expect("nonzero");
            field.elements().map(|x| Point { x, y: (self.c - self.n1 * x) * inv }).collect()
        };
        pts.sort();
        pts
    }

    /// Number of points of `set` on the line (i_A).
    pub fn incidence_count(&self, set: &PointSet) -> usize {
        set.iter().filter(|p| self.contains(**p)).count()
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·x1 + {}·x2 = {}", self.n1, self.n2, self.c)
    }
}

/// Every line of F_q^2 in canonical order (normal (0,1) first, then (1,b)).
pub fn all_lines(field: &'static Field) -> Vec<Line> {
    let mut out = Vec::with_capacity((field.order() * (field.order() + 1)) as usize);
    for c in field.elements() {
        out.push(Line { n1: field.zero(), n2: field.one(), c });
    }
    for b in field.elements() {
        for c in field.elements() {
            out.push(Line { n1: field.one(), n2: b, c });
        }
    }
    out.sort();
    out
}

pub fn all_points(field: &'static Field) -> Vec<Point> {
    let mut out = Vec::with_capacity((field.order() * field.order()) as usize);
    for x in field.elements() {
        for y in field.elements() {
            out.push(Point { x, y });
        }
    }
    out
}

/// The perpendicular bisector {x : d(a,x) = d(b,x)}, defined when d(a,b) ≠ 0.
pub fn bisector(a: Point, b: Point) -> Result<Line> {
    a.x.check_same(&b.x)?;
    if a.distance_to(b).is_zero() {
        return Err(Error::UndefinedBisector);
    }
    let n = (b - a).scale(a.field().from_int(2));
    Line::new(n.x, n.y, b.norm() - a.norm())
}

/// Reflection through a non-isotropic line.
pub fn reflect(line: &Line, x: Point) -> Result<Point> {
    line.n1.check_same(&x.x)?;
    let n = line.normal();
    let nn = n.norm();
    if nn.is_zero() {
        return Err(Error::IsotropicAxis);
    }
    Ok(reflect_unchecked(line, nn, x))
}

#[inline]
pub(crate) fn reflect_unchecked(line: &Line, normal_norm: FieldElement, x: Point) -> Point {
    let n = line.normal();
    let k = (n.dot(x) - line.c) / normal_norm;
    x - n.scale(k.double())
}

/// Circle {x : d(x, center) = radius_sq}; `radius_sq` may be zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Circle {
    pub center: Point,
    pub radius_sq: FieldElement,
}

impl Circle {
    pub fn contains(&self, x: Point) -> bool {
        x.distance_to(self.center) == self.radius_sq
    }
}

/// A line or a circle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Curve {
    Line(Line),
    Circle(Circle),
}

impl Curve {
    pub fn contains(&self, x: Point) -> bool {
        match self {
            Curve::Line(l) => l.contains(x),
            Curve::Circle(c) => c.contains(x),
        }
    }
}

/// The circle through three distinct points, or `None` if they are collinear.
///
/// The center solves 2(b−a)·z = ‖b‖²−‖a‖², 2(c−a)·z = ‖c‖²−‖a‖² exactly.
pub fn circle_through(a: Point, b: Point, c: Point) -> Result<Option<Circle>> {
    a.x.check_same(&b.x)?;
    a.x.check_same(&c.x)?;
    if a == b || b == c || a == c {
        return Err(Error::InvalidInput("duplicate points".into()));
    }
    let two = a.field().from_int(2);
    let r1 = (b - a).scale(two);
    let r2 = (c - a).scale(two);
    let rhs1 = b.norm() - a.norm();
    let rhs2 = c.norm() - a.norm();
    let det = r1.x * r2.y - r1.y * r2.x;
    if det.is_zero() {
        return Ok(None);
    }
    let inv = det.inverse()?;
    let center = Point { x: (rhs1 * r2.y - r1.y * rhs2) * inv, y: (r1.x * rhs2 - rhs1 * r2.x) * inv };
    Ok(Some(Circle { center, radius_sq: center.distance_to(a) }))
}

/// Line through two points or circle through three.
pub fn curve_through(points: &[Point]) -> Result<Option<Curve>> {
    match points {
        [a, b] => Ok(Some(Curve::Line(Line::through(*a, *b)?))),
        [a, b, c] => Ok(circle_through(*a, *b, *c)?.map(Curve::Circle)),
        _ => Err(Error::InvalidInput(format!("curve_through takes 2 or 3 points, got {}", points.len()))),
    }
}

/// A finite set of distinct points in canonical (sorted) order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    field: &'static Field,
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(field: &'static Field, points: impl IntoIterator<Item = Point>) -> Result<PointSet> {
        let mut set = BTreeSet::new();
        for p in points {
            if !p.field().same_as(field) || !p.y.field().same_as(field) {
                return Err(Error::SpecMismatch {
                    left: field.spec().to_string(),
                    right: p.field().spec().to_string(),
                });
            }
            set.insert(p);
        }
        Ok(PointSet { field, points: set.into_iter().collect() })
    }

    pub fn empty(field: &'static Field) -> PointSet {
        PointSet { field, points: Vec::new() }
    }

    pub fn from_ints(field: &'static Field, coords: &[(i64, i64)]) -> PointSet {
        PointSet::new(field, coords.iter().map(|&(x, y)| Point::from_ints(field, x, y))).expect("same field")
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Points not on the curve.
    pub fn without_curve(&self, curve: &Curve) -> PointSet {
        PointSet { field: self.field, points: self.points.iter().copied().filter(|p| !curve.contains(*p)).collect() }
    }

    /// Image under a map into a (possibly different) field.
    pub fn map_into(&self, field: &'static Field, f: impl Fn(Point) -> Point) -> Result<PointSet> {
        PointSet::new(field, self.points.iter().map(|p| f(*p)))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// i_A(ℓ).
pub fn incidence_count_line(set: &PointSet, line: &Line) -> usize {
    line.incidence_count(set)
}

#[derive(Serialize, Deserialize)]
struct PointSetJson {
    field: FieldSpec,
    points: Vec<[ElementRepr; 2]>,
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.head, self.tail].serialize(s)
    }
}

/// As `[n1, n2, c]`.
impl Serialize for Line {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.n1, self.n2, self.c].serialize(s)
    }
}

impl Serialize for PointSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PointSetJson {
            field: self.field.spec().clone(),
            points: self.points.iter().map(|p| [ElementRepr::of(p.x), ElementRepr::of(p.y)]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PointSetJson::deserialize(deserializer)?;
        let field = Field::new(raw.field).map_err(D::Error::custom)?;
        let mut pts = Vec::with_capacity(raw.points.len());
        for [x, y] in &raw.points {
            let x = x.resolve(field).map_err(D::Error::custom)?;
            let y = y.resolve(field).map_err(D::Error::custom)?;
            pts.push(Point { x, y });
        }
        PointSet::new(field, pts).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    fn pt(p: u64, x: i64, y: i64) -> Point {
        Point::from_ints(f(p), x, y)
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(pt(7, 0, 0), pt(7, 1, 0)).unwrap(), f(7).one());
        assert_eq!(distance(pt(5, 0, 0), pt(5, 1, 2)).unwrap(), f(5).zero());
        assert_eq!(distance(pt(3, 0, 0), pt(3, 1, 1)).unwrap(), f(3).from_int(2));
        assert!(distance(pt(3, 0, 0), pt(5, 0, 0)).is_err());
    }

    #[test]
    fn isotropy() {
        assert!(is_isotropic_vector(pt(5, 1, 2)).unwrap());
        assert!(!is_isotropic_vector(pt(5, 1, 0)).unwrap());
        assert!(is_isotropic_vector(pt(5, 0, 0)).is_err());
        assert!(all_lines(f(7)).iter().all(|l| !l.is_isotropic()));
    }

    #[test]
    fn bisector_examples() {
        assert_eq!(bisector(pt(5, 0, 0), pt(5, 2, 0)).unwrap(), Line::from_ints(f(5), 1, 0, 1).unwrap());
        assert_eq!(bisector(pt(7, 0, 0), pt(7, 0, 2)).unwrap(), Line::from_ints(f(7), 0, 1, 1).unwrap());
        assert_eq!(bisector(pt(5, 0, 0), pt(5, 1, 2)), Err(Error::UndefinedBisector));
    }

    #[test]
    fn reflect_examples() {
        let l = Line::from_ints(f(5), 1, 0, 1).unwrap();
        assert_eq!(reflect(&l, pt(5, 0, 0)).unwrap(), pt(5, 2, 0));
        assert_eq!(reflect(&l, pt(5, 1, 3)).unwrap(), pt(5, 1, 3));
        let axis = Line::from_ints(f(7), 0, 1, 0).unwrap();
        assert_eq!(reflect(&axis, pt(7, 3, 4)).unwrap(), pt(7, 3, 3));
        let iso = Line::from_ints(f(5), 1, 2, 0).unwrap();
        assert_eq!(reflect(&iso, pt(5, 1, 1)), Err(Error::IsotropicAxis));
    }

    #[test]
    fn curve_examples() {
        let l = curve_through(&[pt(7, 0, 0), pt(7, 1, 0)]).unwrap().unwrap();
        assert_eq!(l, Curve::Line(Line::from_ints(f(7), 0, 1, 0).unwrap()));
        let c = circle_through(pt(5, 0, 0), pt(5, 2, 0), pt(5, 0, 2)).unwrap().unwrap();
        assert_eq!(c.center, pt(5, 1, 1));
        assert_eq!(c.radius_sq, f(5).from_int(2));
        assert_eq!(circle_through(pt(7, 0, 0), pt(7, 1, 0), pt(7, 2, 0)).unwrap(), None);
        assert!(curve_through(&[pt(7, 0, 0), pt(7, 0, 0)]).is_err());
    }

    #[test]
    fn line_incidences() {
        let grid = PointSet::from_ints(f(7), &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2)]);
        let row = Line::from_ints(f(7), 0, 1, 1).unwrap();
        assert_eq!(incidence_count_line(&grid, &row), 3);
        assert_eq!(incidence_count_line(&PointSet::empty(f(7)), &row), 0);
        let plane = PointSet::new(f(3), all_points(f(3))).unwrap();
        assert!(all_lines(f(3)).iter().all(|l| incidence_count_line(&plane, l) == 3));
    }

    #[test]
    fn line_enumeration_counts() {
        for p in [3, 5, 7] {
            let lines = all_lines(f(p));
            assert_eq!(lines.len() as u64, p * p + p);
            for l in &lines {
                assert_eq!(l.points().len() as u64, p);
            }
        }
    }

    #[test]
    fn point_set_json_round_trip() {
        let set = PointSet::from_ints(f(5), &[(0, 0), (2, 0)]);
        let json = serde_json::to_string(&set).unwrap();
        assert_eq!(json, r#"{"field":{"p":5,"r":1,"modulus":[0,1]},"points":[[0,0],[2,0]]}"#);
        let back: PointSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, set);
        let f9: PointSet = serde_json::from_str(r#"{"field":{"p":3,"r":2},"points":[[[0,1],[1]],[1,2]]}"#).unwrap();
        assert_eq!(f9.len(), 2);
    }
}
