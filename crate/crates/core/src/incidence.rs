//! Point-plane incidences in PF³ and the reduction of axial-symmetry counts
//! for a segment class S_r to such an incidence problem.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Embedding, Field, FieldElement, FieldSpec};
use crate::geometry::{bisector, Line, Point, PointSet, Segment};
use crate::kinematic::{all_proj_points, kappa, phi_left, r_tau_plane, ProjLine, ProjPlane, ProjPoint};
use crate::linalg;
use crate::motions::{motion_between_segments, RigidMotion};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IncidenceStrategy {
    /// Test every (point, plane) pair.
    Sweep,
    /// Enumerate the q² + q + 1 points of each plane and look them up.
    PlaneEnumeration,
}

pub fn count_incidences(points: &[ProjPoint], planes: &[ProjPlane]) -> u64 {
    count_incidences_with(points, planes, IncidenceStrategy::Sweep)
}

pub fn count_incidences_with(points: &[ProjPoint], planes: &[ProjPlane], strategy: IncidenceStrategy) -> u64 {
    match strategy {
        IncidenceStrategy::Sweep => {
            planes.iter().map(|pl| points.iter().filter(|p| pl.contains(p)).count() as u64).sum()
        }
        IncidenceStrategy::PlaneEnumeration => {
            let Some(first) = points.first() else {
                return 0;
            };
            let field = first.field();
            let lookup: HashMap<ProjPoint, u64> = points.iter().fold(HashMap::new(), |mut m, p| {
                *m.entry(*p).or_default() += 1;
                m
            });
            let coords = plane_coordinates(field);
            planes.iter().map(|pl| points_of_plane(pl, &coords).iter().filter_map(|p| lookup.get(p)).sum::<u64>()).sum()
        }
    }
}

/// Points of PF² used as coordinates on a plane.
fn plane_coordinates(field: &'static Field) -> Vec<[FieldElement; 3]> {
    let (zero, one) = (field.zero(), field.one());
    let mut out = vec![[zero, zero, one]];
    for b in field.elements() {
        out.push([zero, one, b]);
    }
    for b in field.elements() {
        for c in field.elements() {
            out.push([one, b, c]);
        }
    }
    out
}

fn points_of_plane(plane: &ProjPlane, coords: &[[FieldElement; 3]]) -> Vec<ProjPoint> {
    let field = plane.coeffs()[0].field();
    let basis = linalg::nullspace(field, &[plane.coeffs().to_vec()], 4);
    coords
        .iter()
        .map(|c| {
            let v: Vec<FieldElement> =
                (0..4).map(|j| c[0] * basis[0][j] + c[1] * basis[1][j] + c[2] * basis[2][j]).collect();
            ProjPoint::new([v[0], v[1], v[2], v[3]]).expect("basis vectors are independent")
        })
        .collect()
}

/// Maximum number of collinear points, over lines spanned by pairs.
pub fn max_collinear(points: &[ProjPoint]) -> usize {
    let distinct: Vec<ProjPoint> = points.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if distinct.len() < 2 {
        return distinct.len();
    }
    let mut pairs: HashMap<ProjLine, usize> = HashMap::new();
    for (i, a) in distinct.iter().enumerate() {
        for b in &distinct[i + 1..] {
            *pairs.entry(ProjLine::through(a, b).expect("distinct")).or_default() += 1;
        }
    }
    let most = pairs.values().copied().max().unwrap_or(1);
    (2..=distinct.len()).find(|k| k * (k - 1) / 2 == most).expect("pair count is triangular")
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn isqrt_ceil(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r * r < n {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= n {
        r -= 1;
    }
    r
}

/// I / (√|P|·|Π| + k·|Π|) with |P| ≤ |Π| arranged by duality.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IncidenceRatio {
    pub incidences: u64,
    pub points: usize,
    pub planes: usize,
    pub k: usize,
    /// Roles of points and planes were exchanged.
    pub dual: bool,
    pub ratio: f64,
    /// I / (⌈√|P|⌉·|Π| + k·|Π|) as a reduced fraction.
    pub surrogate_num: u128,
    pub surrogate_den: u128,
    pub surrogate: f64,
    /// |P| ≤ p².
    pub side_condition: bool,
}

pub fn incidence_ratio(points: &[ProjPoint], planes: &[ProjPlane]) -> Result<IncidenceRatio> {
    if planes.is_empty() || points.is_empty() {
        return Err(Error::InvalidInput("incidence ratio needs points and planes".into()));
    }
    let incidences = count_incidences(points, planes);
    let dual = points.len() > planes.len();
    let (np, npl, k) = if dual {
        let as_points: Vec<ProjPoint> = planes.iter().map(|pl| ProjPoint::new(pl.coeffs()).expect("nonzero")).collect();
        (planes.len(), points.len(), max_collinear(&as_points))
    } else {
        (points.len(), planes.len(), max_collinear(points))
    };
    let p = points[0].field().characteristic() as u128;
    let ratio = incidences as f64 / ((np as f64).sqrt() * npl as f64 + (k * npl) as f64);
    let den = (isqrt_ceil(np as u128) + k as u128) * npl as u128;
    let g = gcd(incidences as u128, den).max(1);
    Ok(IncidenceRatio {
        incidences,
        points: np,
        planes: npl,
        k,
        dual,
        ratio,
        surrogate_num: incidences as u128 / g,
        surrogate_den: den / g,
        surrogate: incidences as f64 / den as f64,
        side_condition: (np as u128) <= p * p,
    })
}

/// Ordered index pairs grouped by distance.
type IndexClasses = BTreeMap<FieldElement, Vec<(usize, usize)>>;

fn indexed_classes(a: &PointSet) -> (Vec<Vec<FieldElement>>, IndexClasses) {
    let pts = a.points();
    let dm: Vec<Vec<FieldElement>> = pts.iter().map(|x| pts.iter().map(|y| x.distance_to(*y)).collect()).collect();
    let mut classes: BTreeMap<FieldElement, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, row) in dm.iter().enumerate() {
        for (j, d) in row.iter().enumerate() {
            classes.entry(*d).or_default().push((i, j));
        }
    }
    (dm, classes)
}

fn bisector_table(a: &PointSet, dm: &[Vec<FieldElement>]) -> Vec<Vec<Option<Line>>> {
    let pts = a.points();
    (0..pts.len())
        .map(|i| {
            (0..pts.len())
                .map(|j| (!dm[i][j].is_zero()).then(|| bisector(pts[i], pts[j]).expect("nonzero distance")))
                .collect()
        })
        .collect()
}

/// #{((a,b),(c,d)) ∈ class² : a ≠ c, b ≠ d, bisector(a,c) = bisector(b,d)}.
fn mirror_pairs(class: &[(usize, usize)], bis: &[Vec<Option<Line>>]) -> u128 {
    let mut count = 0;
    for &(a, b) in class {
        for &(c, d) in class {
            if a == c || b == d {
                continue;
            }
            if let (Some(l1), Some(l2)) = (&bis[a][c], &bis[b][d]) {
                if l1 == l2 {
                    count += 1;
                }
            }
        }
    }
    count
}

/// I_ax(S_r) for every nonzero length r.
pub fn axial_pair_counts(a: &PointSet) -> BTreeMap<FieldElement, u128> {
    let (dm, classes) = indexed_classes(a);
    let bis = bisector_table(a, &dm);
    classes.iter().filter(|(r, _)| !r.is_zero()).map(|(r, class)| (*r, mirror_pairs(class, &bis))).collect()
}

pub fn axial_pair_count(a: &PointSet, r: FieldElement) -> Result<u128> {
    if r.is_zero() {
        return Err(Error::InvalidInput("axial pair count needs r != 0".into()));
    }
    let (dm, classes) = indexed_classes(a);
    let bis = bisector_table(a, &dm);
    Ok(classes.get(&r).map_or(0, |class| mirror_pairs(class, &bis)))
}

/// ℰ: the same mirror-pair count over the zero-length segments.
pub fn epsilon_term(a: &PointSet) -> u128 {
    let (dm, classes) = indexed_classes(a);
    let bis = bisector_table(a, &dm);
    classes.iter().filter(|(r, _)| r.is_zero()).map(|(_, class)| mirror_pairs(class, &bis)).sum()
}

/// Pairs in S_r² that are mirror images across a non-isotropic axis through at
/// least one endpoint. Includes the |S_r| diagonal pairs (axis through the segment).
pub fn on_axis_pairs(a: &PointSet, r: FieldElement) -> u128 {
    let pts = a.points();
    let class: Vec<(usize, usize)> = (0..pts.len())
        .flat_map(|i| (0..pts.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| pts[i].distance_to(pts[j]) == r)
        .collect();
    let mut count = 0;
    for &(a1, b1) in &class {
        for &(c1, d1) in &class {
            let fixed_head = a1 == c1;
            let fixed_tail = b1 == d1;
            count += match (fixed_head, fixed_tail) {
                (true, true) => 1,
                (true, false) => u128::from(!pts[b1].distance_to(pts[d1]).is_zero()),
                (false, true) => u128::from(!pts[a1].distance_to(pts[c1]).is_zero()),
                (false, false) => 0,
            };
        }
    }
    count
}

/// Motions g with g(a, a') = s_r, one per segment of the class.
fn transporters_to(class: &[Segment], target: &Segment) -> Vec<RigidMotion> {
    class.iter().map(|seg| motion_between_segments(seg, target).expect("equal nonzero lengths")).collect()
}

/// The first non-isotropic line, in canonical order, on which no g⁻¹h with
/// g ≠ h in `motions` has a fixed point.
pub fn find_axis(field: &'static Field, motions: &[RigidMotion]) -> Option<Line> {
    let centers = relative_centers(motions);
    let (zero, one) = (field.zero(), field.one());
    let normals = std::iter::once(Point { x: zero, y: one }).chain(field.elements().map(|y| Point { x: one, y }));
    for n in normals {
        if n.norm().is_zero() {
            continue;
        }
        let forbidden: HashSet<FieldElement> = centers.iter().map(|c| n.dot(*c)).collect();
        if let Some(c) = field.elements().find(|c| !forbidden.contains(c)) {
            return Some(Line::new(n.x, n.y, c).expect("nonzero normal"));
        }
    }
    None
}

/// Fixed points of the rotations g⁻¹h, g ≠ h.
fn relative_centers(motions: &[RigidMotion]) -> BTreeSet<Point> {
    let mut centers = BTreeSet::new();
    for (i, g) in motions.iter().enumerate() {
        let gi = g.inverse();
        for (j, h) in motions.iter().enumerate() {
            if i != j {
                centers.extend(gi.compose(h).fixed_point());
            }
        }
    }
    centers
}

/// Whether `axis` meets the fixed point of some g⁻¹h, g ≠ h.
pub fn axis_is_admissible(axis: &Line, motions: &[RigidMotion]) -> bool {
    !axis.is_isotropic() && relative_centers(motions).iter().all(|c| !axis.contains(*c))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// I(P, Π) = I_ax(S_r).
    Equal,
    /// The excess is exactly the on-axis mirror pairs.
    Explained,
    Unexplained,
}

/// A replayable record of the reduction for one segment class.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionWitness {
    pub field: FieldSpec,
    /// The set was embedded in a quadratic extension to find an axis.
    pub lifted: bool,
    pub r: FieldElement,
    pub s_r: Segment,
    pub axis: Line,
    pub segments: Vec<Segment>,
    pub g_r: Vec<RigidMotion>,
    pub g_r_prime: Vec<RigidMotion>,
    pub points: Vec<ProjPoint>,
    pub planes: Vec<ProjPlane>,
    pub axial_pairs: u128,
    pub incidences: u64,
    pub on_axis_pairs: u128,
    pub k: usize,
    pub axis_admissible: bool,
    pub sizes_match: bool,
    pub planes_distinct: bool,
    pub points_avoid_exceptional: bool,
    pub verdict: Verdict,
}

impl ReductionWitness {
    pub fn structurally_valid(&self) -> bool {
        self.sizes_match && self.planes_distinct && self.points_avoid_exceptional
    }
}

/// Builds P = κ(G_r') and Π = {φ_g(plane of ℓ_τ) : g ∈ G_r} for the class S_r.
pub fn reduce_to_incidences(a: &PointSet, r: FieldElement) -> Result<ReductionWitness> {
    if r.is_zero() {
        return Err(Error::InvalidInput("reduction needs r != 0".into()));
    }
    let class: Vec<Segment> = segments_of_length(a, r);
    if class.is_empty() {
        return Err(Error::EmptySegmentClass);
    }
    let g_r = transporters_to(&class, &class[0]);
    if let Some(axis) = find_axis(a.field(), &g_r) {
        return Ok(build_witness(a, r, &class, g_r, axis, false));
    }
    // retry over F_{q²}
    let small = a.field();
    let spec = small.spec();
    let big = Field::extension(spec.p, spec.r * 2)?;
    let emb = Embedding::new(small, big)?;
    let lift = |p: Point| Point { x: emb.apply(p.x), y: emb.apply(p.y) };
    let lifted = a.map_into(big, lift)?;
    let big_class: Vec<Segment> = class.iter().map(|s| Segment::new(lift(s.head), lift(s.tail))).collect();
    let big_r = emb.apply(r);
    let g_r = transporters_to(&big_class, &big_class[0]);
    match find_axis(big, &g_r) {
        Some(axis) => Ok(build_witness(&lifted, big_r, &big_class, g_r, axis, true)),
        None => Err(Error::ReductionUnavailable(format!(
            "{} segments of length {r} over {} and its quadratic extension",
            class.len(),
            spec
        ))),
    }
}

/// The reduction with a caller-supplied axis, valid or not.
pub fn reduce_to_incidences_with_axis(a: &PointSet, r: FieldElement, axis: Line) -> Result<ReductionWitness> {
    if axis.is_isotropic() {
        return Err(Error::IsotropicAxis);
    }
    let class = segments_of_length(a, r);
    if r.is_zero() || class.is_empty() {
        return Err(Error::EmptySegmentClass);
    }
    let g_r = transporters_to(&class, &class[0]);
    Ok(build_witness(a, r, &class, g_r, axis, false))
}

fn segments_of_length(a: &PointSet, r: FieldElement) -> Vec<Segment> {
    let mut out = Vec::new();
    for &x in a {
        for &y in a {
            if x.distance_to(y) == r {
                out.push(Segment::new(x, y));
            }
        }
    }
    out
}

fn build_witness(
    a: &PointSet,
    r: FieldElement,
    class: &[Segment],
    g_r: Vec<RigidMotion>,
    axis: Line,
    lifted: bool,
) -> ReductionWitness {
    let s_r = class[0];
    let mirrored: Vec<Segment> = class
        .iter()
        .map(|s| {
            Segment::new(
                crate::geometry::reflect(&axis, s.head).expect("non-isotropic axis"),
                crate::geometry::reflect(&axis, s.tail).expect("non-isotropic axis"),
            )
        })
        .collect();
    let g_r_prime = transporters_to(&mirrored, &s_r);
    let points: Vec<ProjPoint> = g_r_prime.iter().map(kappa).collect();
    let base = r_tau_plane(&axis).expect("non-isotropic axis");
    let planes: Vec<ProjPlane> = g_r.iter().map(|g| phi_left(g).apply_plane(&base)).collect();
    let incidences = count_incidences(&points, &planes);
    let axial_pairs = axial_pair_count(a, r).expect("r != 0");
    let on_axis = on_axis_pairs(a, r);
    let verdict = if incidences as u128 == axial_pairs {
        Verdict::Equal
    } else if incidences as u128 == axial_pairs + on_axis {
        Verdict::Explained
    } else {
        Verdict::Unexplained
    };
    let distinct_planes: BTreeSet<ProjPlane> = planes.iter().copied().collect();
    let distinct_points: BTreeSet<ProjPoint> = points.iter().copied().collect();
    ReductionWitness {
        field: a.field().spec().clone(),
        lifted,
        r,
        s_r,
        axis,
        segments: class.to_vec(),
        sizes_match: points.len() == class.len() && planes.len() == class.len() && distinct_points.len() == class.len(),
        planes_distinct: distinct_planes.len() == planes.len(),
        points_avoid_exceptional: points.iter().all(|p| !p.is_exceptional()),
        k: max_collinear(&points),
        axis_admissible: axis_is_admissible(&axis, &g_r),
        g_r,
        g_r_prime,
        points,
        planes,
        axial_pairs,
        incidences,
        on_axis_pairs: on_axis,
        verdict,
    }
}

/// Every projective point lying on a plane, in canonical order.
pub fn plane_points(plane: &ProjPlane) -> Vec<ProjPoint> {
    let field = plane.coeffs()[0].field();
    let mut pts = points_of_plane(plane, &plane_coordinates(field));
    pts.sort();
    pts
}

/// Points of PF³ on none of the given planes; used to build incidence-free instances.
pub fn points_off_planes(field: &'static Field, planes: &[ProjPlane]) -> Vec<ProjPoint> {
    all_proj_points(field).into_iter().filter(|p| planes.iter().all(|pl| !pl.contains(p))).collect()
}
