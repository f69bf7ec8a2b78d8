//! Exact counting over a finite point set A ⊂ F_q²: pinned distances, segment
//! classes, isosceles triples, bisector energy, collinear/cocircular maxima,
//! the identities tying them together, and curve pruning.
//!
//! All tuple counts are ordered.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldElement;
use crate::geometry::{all_lines, bisector, circle_through, reflect_unchecked, Circle, Curve, Line, PointSet, Segment};
use crate::incidence::{axial_pair_counts, epsilon_term};

fn distance_matrix(a: &PointSet) -> Vec<Vec<FieldElement>> {
    let pts = a.points();
    pts.iter().map(|x| pts.iter().map(|y| x.distance_to(*y)).collect()).collect()
}

#[derive(Clone, Debug)]
pub struct DistanceStats {
    /// Δ(A, a) including 0, indexed like `A.points()`.
    pub per_point: Vec<BTreeSet<FieldElement>>,
    /// Δ(A).
    pub distances: BTreeSet<FieldElement>,
    pub pind: usize,
    /// max_a |Δ(A, a) \ {0}|.
    pub pind_nonzero: usize,
    /// D(A) = #{(a, b) : d(a, b) ≠ 0}.
    pub nonzero_pairs: u64,
}

impl DistanceStats {
    pub fn distinct(&self) -> usize {
        self.distances.len()
    }
}

pub fn distance_stats(a: &PointSet) -> DistanceStats {
    let dm = distance_matrix(a);
    let per_point: Vec<BTreeSet<FieldElement>> = dm.iter().map(|row| row.iter().copied().collect()).collect();
    let distances = per_point.iter().flatten().copied().collect();
    let pind = per_point.iter().map(BTreeSet::len).max().unwrap_or(0);
    let pind_nonzero = per_point.iter().map(|s| s.iter().filter(|d| !d.is_zero()).count()).max().unwrap_or(0);
    let nonzero_pairs = dm.iter().flatten().filter(|d| !d.is_zero()).count() as u64;
    DistanceStats { per_point, distances, pind, pind_nonzero, nonzero_pairs }
}

/// Ordered segments grouped by length, including r = 0 (trivial and isotropic).
#[derive(Clone, Debug)]
pub struct SegmentClasses {
    pub classes: BTreeMap<FieldElement, Vec<Segment>>,
}

impl SegmentClasses {
    pub fn get(&self, r: FieldElement) -> &[Segment] {
        self.classes.get(&r).map_or(&[], Vec::as_slice)
    }

    /// Q(A) = Σ_{r≠0} |S_r|².
    pub fn quadruples(&self) -> u128 {
        self.classes.iter().filter(|(r, _)| !r.is_zero()).map(|(_, s)| (s.len() as u128).pow(2)).sum()
    }

    pub fn max_nonzero_class(&self) -> usize {
        self.classes.iter().filter(|(r, _)| !r.is_zero()).map(|(_, s)| s.len()).max().unwrap_or(0)
    }

    pub fn nonzero_lengths(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.classes.keys().copied().filter(|r| !r.is_zero())
    }
}

pub fn segment_classes(a: &PointSet) -> SegmentClasses {
    let mut classes: BTreeMap<FieldElement, Vec<Segment>> = BTreeMap::new();
    for &x in a {
        for &y in a {
            classes.entry(x.distance_to(y)).or_default().push(Segment::new(x, y));
        }
    }
    SegmentClasses { classes }
}

/// Q(A) by enumerating ordered quadruples; O(|A|⁴).
pub fn quadruple_count_brute(a: &PointSet) -> u128 {
    let dm = distance_matrix(a);
    let n = dm.len();
    let mut q = 0u128;
    for i in 0..n {
        for j in 0..n {
            let r = dm[i][j];
            if r.is_zero() {
                continue;
            }
            q += dm.iter().flatten().filter(|&&d| d == r).count() as u128;
        }
    }
    q
}

/// T(A) and T_all(A).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsoscelesCounts {
    /// Triples (a, b, b') with d(a,b) = d(a,b') ≠ 0 and d(b,b') ≠ 0.
    pub t: u128,
    /// The same without requiring the legs to be nonzero.
    pub t_all: u128,
}

/// Direct triple enumeration; O(|A|³).
pub fn isosceles_count_brute(a: &PointSet) -> IsoscelesCounts {
    let dm = distance_matrix(a);
    let n = dm.len();
    let (mut t, mut t_all) = (0u128, 0u128);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if j == k || dm[i][j] != dm[i][k] || dm[j][k].is_zero() {
                    continue;
                }
                t_all += 1;
                if !dm[i][j].is_zero() {
                    t += 1;
                }
            }
        }
    }
    IsoscelesCounts { t, t_all }
}

/// Per-apex histograms, parallel over apexes.
///
/// Two distinct points at the same nonzero distance from an apex never span an
/// isotropic base, so T = Σ_a Σ_{r≠0} n_r(n_r − 1).
pub fn isosceles_count(a: &PointSet) -> IsoscelesCounts {
    let pts = a.points();
    let (t, extra) = pts
        .par_iter()
        .map(|&apex| {
            let mut hist: HashMap<FieldElement, u128> = HashMap::new();
            let mut zero_class = Vec::new();
            for &b in pts {
                let d = apex.distance_to(b);
                if d.is_zero() {
                    zero_class.push(b);
                } else {
                    *hist.entry(d).or_default() += 1;
                }
            }
            let t: u128 = hist.values().map(|&c| c * (c - 1)).sum();
            let mut extra = 0u128;
            for &b in &zero_class {
                for &c in &zero_class {
                    if !b.distance_to(c).is_zero() {
                        extra += 1;
                    }
                }
            }
            (t, extra)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    IsoscelesCounts { t, t_all: t + extra }
}

/// Σ_a Σ_{r≠0} |A ∩ (a + C_r)|².
pub fn circle_second_moment(a: &PointSet) -> u128 {
    let pts = a.points();
    pts.par_iter()
        .map(|&apex| {
            let mut hist: HashMap<FieldElement, u128> = HashMap::new();
            for &b in pts {
                let d = apex.distance_to(b);
                if !d.is_zero() {
                    *hist.entry(d).or_default() += 1;
                }
            }
            hist.values().map(|c| c * c).sum::<u128>()
        })
        .sum()
}

/// max_a |A ∩ (a + C₀)|, the isotropic cone occupancy (counting a itself).
pub fn isotropic_cone_occupancy(a: &PointSet) -> usize {
    let pts = a.points();
    pts.iter().map(|&x| pts.iter().filter(|&&y| x.distance_to(y).is_zero()).count()).max().unwrap_or(0)
}

/// Whether some pair of distinct points is at distance zero.
pub fn has_isotropic_segment(a: &PointSet) -> bool {
    let pts = a.points();
    pts.iter().enumerate().any(|(i, x)| pts[i + 1..].iter().any(|y| x.distance_to(*y).is_zero()))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LineStats {
    /// i_A(ℓ).
    pub on_line: u64,
    /// b_A(ℓ): ordered pairs a ≠ b with {x : d(x,a) = d(x,b)} = ℓ.
    pub b: u64,
    /// b*_A(ℓ) = #{a ∉ ℓ : σ_ℓ(a) ∈ A}; zero on isotropic lines.
    pub b_star: u64,
}

#[derive(Clone, Debug)]
pub struct BisectorStats {
    /// Lines with b or b* nonzero or holding at least two points.
    pub lines: BTreeMap<Line, LineStats>,
    /// B(A) = Σ b_A(ℓ)².
    pub b_energy: u128,
    /// B*(A) = Σ b*_A(ℓ)².
    pub b_star_energy: u128,
    /// N = max_a |A ∩ (a + C₀)| − 1.
    pub isotropic_points: u64,
    /// The relation b = i·N + b* is expected when N = 0 and no distinct pair is at distance zero.
    pub relation_hypothesis: bool,
    /// Lines on which b = i·N + b* fails.
    pub relation_failures: usize,
}

fn finish_bisector_stats(a: &PointSet, lines: BTreeMap<Line, LineStats>) -> BisectorStats {
    let n = isotropic_cone_occupancy(a).saturating_sub(1) as u64;
    let b_energy = lines.values().map(|s| (s.b as u128).pow(2)).sum();
    let b_star_energy = lines.values().map(|s| (s.b_star as u128).pow(2)).sum();
    let relation_failures = lines.values().filter(|s| s.b != s.on_line * n + s.b_star).count();
    BisectorStats {
        lines,
        b_energy,
        b_star_energy,
        isotropic_points: n,
        relation_hypothesis: n == 0 && !has_isotropic_segment(a),
        relation_failures,
    }
}

fn pair_loci(a: &PointSet) -> HashMap<Line, u64> {
    let mut b: HashMap<Line, u64> = HashMap::new();
    for &x in a {
        for &y in a {
            if x == y {
                continue;
            }
            let locus = if x.distance_to(y).is_zero() {
                Line::through(x, y).expect("distinct points")
            } else {
                bisector(x, y).expect("nonzero distance")
            };
            *b.entry(locus).or_default() += 1;
        }
    }
    b
}

/// Sweep over every line of the plane, reflecting each point.
pub fn bisector_stats_sweep(a: &PointSet) -> BisectorStats {
    let loci = pair_loci(a);
    let lines: Vec<Line> = all_lines(a.field());
    let per_line: Vec<(Line, LineStats)> = lines
        .par_iter()
        .filter_map(|line| {
            let on_line = line.incidence_count(a) as u64;
            let nn = line.normal().norm();
            let b_star = if nn.is_zero() {
                0
            } else {
                a.iter().filter(|&&x| !line.contains(x) && a.contains(&reflect_unchecked(line, nn, x))).count() as u64
            };
            let b = loci.get(line).copied().unwrap_or(0);
            let s = LineStats { on_line, b, b_star };
            (b > 0 || b_star > 0 || on_line >= 2).then_some((*line, s))
        })
        .collect();
    finish_bisector_stats(a, per_line.into_iter().collect())
}

/// Only bisectors of pairs of A and lines through two points of A can carry
/// nonzero statistics.
pub fn bisector_stats(a: &PointSet) -> BisectorStats {
    let mut lines: BTreeMap<Line, LineStats> = BTreeMap::new();
    for &x in a {
        for &y in a {
            if x == y {
                continue;
            }
            if x.distance_to(y).is_zero() {
                lines.entry(Line::through(x, y).expect("distinct")).or_default().b += 1;
            } else {
                let s = lines.entry(bisector(x, y).expect("nonzero distance")).or_default();
                s.b += 1;
                s.b_star += 1;
            }
        }
    }
    let mut support: BTreeSet<Line> = lines.keys().copied().collect();
    let pts = a.points();
    for (i, &x) in pts.iter().enumerate() {
        for &y in &pts[i + 1..] {
            support.insert(Line::through(x, y).expect("distinct"));
        }
    }
    for line in support {
        let count = line.incidence_count(a) as u64;
        lines.entry(line).or_default().on_line = count;
    }
    finish_bisector_stats(a, lines)
}

#[derive(Clone, Debug)]
pub struct CurveMaxima {
    /// Max over lines and nonzero-radius circles.
    pub m: usize,
    pub m_line: usize,
    pub m_circle: usize,
    pub heaviest: Option<(Curve, usize)>,
}

/// Points per curve: every line through two points of A and every
/// nonzero-radius circle through three.
pub fn curve_occupancy(a: &PointSet) -> BTreeMap<Curve, usize> {
    let pts = a.points();
    let n = pts.len();
    let mut line_pairs: HashMap<Line, usize> = HashMap::new();
    for i in 0..n {
        for j in i + 1..n {
            *line_pairs.entry(Line::through(pts[i], pts[j]).expect("distinct")).or_default() += 1;
        }
    }
    let circle_triples: HashMap<Circle, usize> = (0..n)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<Circle, usize>, i| {
            for j in i + 1..n {
                for k in j + 1..n {
                    if let Some(c) = circle_through(pts[i], pts[j], pts[k]).expect("distinct") {
                        if !c.radius_sq.is_zero() {
                            *acc.entry(c).or_default() += 1;
                        }
                    }
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut x, y| {
            for (c, k) in y {
                *x.entry(c).or_default() += k;
            }
            x
        });
    let mut out = BTreeMap::new();
    // k points give k(k−1)/2 pairs and k(k−1)(k−2)/6 triples
    for (line, pairs) in line_pairs {
        let k = (1..=n).find(|k| k * (k - 1) / 2 == pairs).expect("pair count is triangular");
        out.insert(Curve::Line(line), k);
    }
    for (circle, triples) in circle_triples {
        let k =
            (1..=n).find(|k| k * (k - 1) * (k.saturating_sub(2)) / 6 == triples).expect("triple count is tetrahedral");
        out.insert(Curve::Circle(circle), k);
    }
    out
}

pub fn max_collinear_cocircular(a: &PointSet) -> CurveMaxima {
    let occ = curve_occupancy(a);
    let m_line = occ.iter().filter(|(c, _)| matches!(c, Curve::Line(_))).map(|(_, k)| *k).max();
    let m_circle = occ.iter().filter(|(c, _)| matches!(c, Curve::Circle(_))).map(|(_, k)| *k).max();
    // heaviest first, then smallest curve
    let heaviest = occ.iter().max_by(|x, y| x.1.cmp(y.1).then(y.0.cmp(x.0))).map(|(c, k)| (*c, *k));
    let base = a.len().min(1);
    let m_line = m_line.unwrap_or(base);
    let m_circle = m_circle.unwrap_or(0);
    CurveMaxima { m: m_line.max(m_circle), m_line, m_circle, heaviest }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: u128,
    pub rhs: u128,
    pub relation: String,
    pub pass: bool,
    /// Informational checks never fail a run.
    pub hard: bool,
}

impl IdentityCheck {
    fn new(name: &str, lhs: u128, rhs: u128, relation: &str, hard: bool) -> IdentityCheck {
        let pass = match relation {
            "=" => lhs == rhs,
            "<=" => lhs <= rhs,
            _ => unreachable!("unknown relation {relation}"),
        };
        IdentityCheck { name: name.into(), lhs, rhs, relation: relation.into(), pass, hard }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub points: usize,
    pub checks: Vec<IdentityCheck>,
    /// |A|² − D(A), the gap between the exact and the overcounted right side.
    pub diagonal_gap: u128,
    /// Whether Σ_r |S_r|² ≤ |A|·Σ_a Σ_r n_r(a)² is an equality.
    pub cauchy_schwarz_tight: bool,
    pub isotropic_cone_occupancy: usize,
}

impl IdentityReport {
    pub fn hard_failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| c.hard && !c.pass).collect()
    }

    pub fn passed(&self) -> bool {
        self.hard_failures().is_empty()
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Largest set for which triples are recounted by direct enumeration.
const BRUTE_TRIPLES_MAX: usize = 150;
const BRUTE_QUADRUPLES_MAX: usize = 40;

pub fn verify_identities(a: &PointSet) -> IdentityReport {
    let n = a.len() as u128;
    let stats = distance_stats(a);
    let classes = segment_classes(a);
    let iso = if a.len() <= BRUTE_TRIPLES_MAX { isosceles_count_brute(a) } else { isosceles_count(a) };
    let t = iso.t;
    let d = stats.nonzero_pairs as u128;
    let maxima = max_collinear_cocircular(a);
    let bis = bisector_stats_sweep(a);
    let mut checks = Vec::new();

    let second = circle_second_moment(a);
    checks.push(IdentityCheck::new("isosceles_second_moment", second, t + d, "=", true));
    checks.push(IdentityCheck::new("isosceles_second_moment_overcount", second, t + n * n, "<=", true));

    let q = classes.quadruples();
    let q_independent = if a.len() <= BRUTE_QUADRUPLES_MAX {
        quadruple_count_brute(a)
    } else {
        let mut hist: HashMap<FieldElement, u128> = HashMap::new();
        for &x in a {
            for &y in a {
                *hist.entry(x.distance_to(y)).or_default() += 1;
            }
        }
        hist.iter().filter(|(r, _)| !r.is_zero()).map(|(_, c)| c * c).sum()
    };
    checks.push(IdentityCheck::new("quadruple_class_sum", q, q_independent, "=", true));
    checks.push(IdentityCheck::new("quadruple_bound", q, n * (t + d), "<=", true));
    checks.push(IdentityCheck::new("quadruple_bound_uncorrected", q, n * t, "<=", false));

    let m_line = maxima.m_line as i128;
    let gap = a.len() as i128 - 2 * m_line + 1;
    let lhs = n * (gap * gap) as u128;
    let rhs = (stats.pind_nonzero as u128 + 1) * (t + n * n);
    checks.push(IdentityCheck::new("pinned_lower_bound", lhs, rhs, "<=", true));

    checks.push(IdentityCheck::new("isosceles_bisector_bound", t * t, n * n * bis.b_star_energy, "<=", true));

    let i_ax: u128 = axial_pair_counts(a).values().sum();
    let eps = epsilon_term(a);
    checks.push(IdentityCheck::new("bisector_energy_decomposition", bis.b_star_energy, i_ax + eps, "=", true));
    checks.push(IdentityCheck::new("epsilon_bound", eps, 2 * maxima.m as u128 * n * n, "<=", true));

    if bis.relation_hypothesis {
        checks.push(IdentityCheck::new("bisector_relation_failures", bis.relation_failures as u128, 0, "=", true));
    }

    // |S_r|² ≤ |A|·Σ_a n_r(a)² is tight iff n_r(a) does not depend on a
    let pts = a.points();
    let mut per_length: HashMap<FieldElement, Vec<u64>> = HashMap::new();
    for (i, &x) in pts.iter().enumerate() {
        for &y in pts {
            let r = x.distance_to(y);
            if !r.is_zero() {
                per_length.entry(r).or_insert_with(|| vec![0; pts.len()])[i] += 1;
            }
        }
    }
    let cauchy_schwarz_tight = per_length.values().all(|counts| counts.iter().all(|c| *c == counts[0]));

    IdentityReport {
        points: a.len(),
        checks,
        diagonal_gap: n * n - d,
        cauchy_schwarz_tight,
        isotropic_cone_occupancy: isotropic_cone_occupancy(a),
    }
}

#[derive(Clone, Debug)]
pub struct PruneCurveCheck {
    pub remaining: PointSet,
    pub t_before: u128,
    pub t_after: u128,
    pub bound: u128,
    pub holds: bool,
}

/// B = A \ γ together with the check T(A) ≤ T(B) + 8|A|².
pub fn prune_curve(a: &PointSet, curve: &Curve) -> PruneCurveCheck {
    let remaining = a.without_curve(curve);
    let t_before = isosceles_count_brute(a).t;
    let t_after = isosceles_count_brute(&remaining).t;
    let n = a.len() as u128;
    let bound = t_after + 8 * n * n;
    PruneCurveCheck { remaining, t_before, t_after, bound, holds: t_before <= bound }
}

#[derive(Clone, Debug)]
pub struct PruneResult {
    pub remaining: PointSet,
    pub removed: Vec<(Curve, usize)>,
    pub steps: usize,
    pub step_limit: usize,
    /// M(A') with M(A')³ ≤ |A|².
    pub final_m: usize,
    pub threshold_met: bool,
}

fn ceil_cbrt(n: usize) -> usize {
    (0..=n).find(|k| k * k * k >= n).unwrap_or(0)
}

/// Greedily removes the heaviest line or circle while it holds more than
/// |A|^{2/3} points, with |A| fixed at the original size.
pub fn prune_heavy(a: &PointSet) -> PruneResult {
    let n2 = (a.len() * a.len()) as u128;
    let heavy = |k: usize| (k as u128).pow(3) > n2;
    let mut current = a.clone();
    let mut removed = Vec::new();
    let final_m = loop {
        let maxima = max_collinear_cocircular(&current);
        match maxima.heaviest {
            Some((curve, k)) if heavy(k) => {
                current = current.without_curve(&curve);
                removed.push((curve, k));
            }
            _ => break maxima.m,
        }
    };
    PruneResult {
        remaining: current,
        steps: removed.len(),
        removed,
        step_limit: ceil_cbrt(a.len()) + 1,
        final_m,
        threshold_met: !heavy(final_m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    fn set(p: u64, pts: &[(i64, i64)]) -> PointSet {
        PointSet::from_ints(f(p), pts)
    }

    const COLLINEAR: &[(i64, i64)] = &[(0, 0), (1, 0), (2, 0)];

    #[test]
    fn distance_examples() {
        let all = PointSet::new(f(3), crate::geometry::all_points(f(3))).unwrap();
        assert_eq!(distance_stats(&all).distinct(), 3);
        let s = distance_stats(&set(7, COLLINEAR));
        assert_eq!(s.pind, 3);
        let expect: BTreeSet<FieldElement> = [0, 1, 4].iter().map(|&x| f(7).from_int(x)).collect();
        assert_eq!(s.per_point[0], expect);
        let single = distance_stats(&set(7, &[(3, 3)]));
        assert_eq!((single.distinct(), single.pind), (1, 1));
    }

    #[test]
    fn segment_examples() {
        let c = segment_classes(&set(7, COLLINEAR));
        assert_eq!(c.get(f(7).one()).len(), 4);
        assert_eq!(c.get(f(7).from_int(4)).len(), 2);
        assert_eq!(c.quadruples(), 20);
        assert_eq!(segment_classes(&PointSet::empty(f(7))).quadruples(), 0);
    }

    #[test]
    fn isosceles_examples() {
        let tri = set(7, &[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(isosceles_count_brute(&tri).t, 2);
        assert_eq!(isosceles_count(&tri), isosceles_count_brute(&tri));
        assert_eq!(isosceles_count_brute(&set(7, COLLINEAR)).t, 2);
        assert_eq!(isosceles_count(&set(7, &[(0, 0), (5, 2)])).t, 0);
    }

    #[test]
    fn bisector_example() {
        let a = set(5, &[(0, 0), (2, 0)]);
        let stats = bisector_stats_sweep(&a);
        assert_eq!(stats.b_star_energy, 4);
        let axis = Line::from_ints(f(5), 1, 0, 1).unwrap();
        assert_eq!(stats.lines[&axis].b_star, 2);
        assert_eq!(stats.lines.values().filter(|s| s.b_star > 0).count(), 1);
        let fast = bisector_stats(&a);
        assert_eq!(fast.lines, stats.lines);
        assert_eq!(bisector_stats(&PointSet::empty(f(5))).b_star_energy, 0);
    }

    #[test]
    fn curve_maxima() {
        assert_eq!(max_collinear_cocircular(&set(11, &[(0, 0), (1, 0), (2, 0), (5, 0)])).m, 4);
        assert_eq!(max_collinear_cocircular(&set(11, &[(0, 0), (1, 3)])).m, 2);
        assert_eq!(max_collinear_cocircular(&set(11, &[(4, 4)])).m, 1);
        let grid: Vec<(i64, i64)> = (0..3).flat_map(|x| (0..3).map(move |y| (x, y))).collect();
        assert_eq!(max_collinear_cocircular(&set(7, &grid)).m_line, 3);
    }

    #[test]
    fn identity_examples() {
        let r = verify_identities(&set(7, COLLINEAR));
        assert!(r.passed(), "{r:?}");
        let qb = r.check("quadruple_bound").unwrap();
        assert_eq!((qb.lhs, qb.rhs), (20, 24));
        let pl = r.check("pinned_lower_bound").unwrap();
        assert_eq!((pl.lhs, pl.rhs), (12, 33));
        let r = verify_identities(&set(5, &[(0, 0), (2, 0)]));
        assert!(r.passed(), "{r:?}");
        let dec = r.check("bisector_energy_decomposition").unwrap();
        assert_eq!((dec.lhs, dec.rhs), (4, 4));
    }

    #[test]
    fn pruning_examples() {
        let a = set(11, &[(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (0, 1)]);
        let x_axis = Curve::Line(Line::from_ints(f(11), 0, 1, 0).unwrap());
        let check = prune_curve(&a, &x_axis);
        assert_eq!(check.remaining, set(11, &[(0, 1)]));
        assert_eq!(check.t_after, 0);
        assert!(check.holds);
        let res = prune_heavy(&a);
        assert_eq!((res.steps, res.remaining.len()), (1, 1));
        let empty = prune_heavy(&PointSet::empty(f(11)));
        assert_eq!(empty.steps, 0);
        let unchanged = prune_curve(&set(11, &[(1, 1), (2, 5)]), &x_axis);
        assert_eq!(unchanged.t_before, unchanged.t_after);
    }
}
