use findist_core::geometry::{all_points, Line};
use findist_core::incidence::{
    count_incidences, count_incidences_with, incidence_ratio, plane_points, points_off_planes, reduce_to_incidences,
    reduce_to_incidences_with_axis, IncidenceStrategy, Verdict,
};
use findist_core::kinematic::{all_proj_points, ProjPlane};
use findist_core::{Field, PointSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn strategies_agree_with_direct_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for f in [Field::prime(3).unwrap(), Field::prime(5).unwrap()] {
        let all_pts = all_proj_points(f);
        let all_planes: Vec<ProjPlane> = ProjPlane::all(f);
        for _ in 0..10 {
            let pts: Vec<_> = all_pts.choose_multiple(&mut rng, 25).copied().collect();
            let planes: Vec<_> = all_planes.choose_multiple(&mut rng, 12).copied().collect();
            let direct = pts
                .iter()
                .map(|p| {
                    planes
                        .iter()
                        .filter(|pl| {
                            let c = pl.coeffs();
                            let x = p.coords();
                            (c[0] * x[0] + c[1] * x[1] + c[2] * x[2] + c[3] * x[3]).is_zero()
                        })
                        .count() as u64
                })
                .sum::<u64>();
            assert_eq!(count_incidences_with(&pts, &planes, IncidenceStrategy::Sweep), direct);
            assert_eq!(count_incidences_with(&pts, &planes, IncidenceStrategy::PlaneEnumeration), direct);
        }
        let q = f.order() as usize;
        for plane in all_planes.iter().take(5) {
            assert_eq!(plane_points(plane).len(), q * q + q + 1);
        }
        let off = points_off_planes(f, &all_planes[..1]);
        assert_eq!(count_incidences(&off, &all_planes[..1]), 0);
        assert_eq!(off.len(), q * q * q);
    }
}

#[test]
fn incidence_ratio_stays_bounded_on_random_instances() {
    let f = Field::prime(5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let all_pts = all_proj_points(f);
    let all_planes = ProjPlane::all(f);
    for _ in 0..10 {
        let pts: Vec<_> = all_pts.choose_multiple(&mut rng, 40).copied().collect();
        let planes: Vec<_> = all_planes.choose_multiple(&mut rng, 40).copied().collect();
        let r = incidence_ratio(&pts, &planes).unwrap();
        assert!(r.ratio.is_finite() && r.ratio > 0.0);
        assert_eq!(r.incidences, count_incidences(&pts, &planes));
    }
}

#[test]
fn reductions_are_explained_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut lifted = 0;
    for f in
        [Field::prime(3).unwrap(), Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::extension(3, 2).unwrap()]
    {
        let pts = all_points(f);
        for _ in 0..6 {
            let n = rng.gen_range(2..=8);
            let a = PointSet::new(f, pts.choose_multiple(&mut rng, n).copied()).unwrap();
            let r = a.points()[0].distance_to(a.points()[1]);
            if r.is_zero() {
                continue;
            }
            let w = reduce_to_incidences(&a, r).unwrap();
            assert!(w.structurally_valid());
            assert!(w.axis_admissible);
            assert_ne!(w.verdict, Verdict::Unexplained);
            assert_eq!(w.incidences as u128, w.axial_pairs + w.on_axis_pairs);
            assert_eq!(w.points.len(), w.segments.len());
            lifted += usize::from(w.lifted);
        }
    }
    assert!(lifted > 0);
}

#[test]
fn an_inadmissible_axis_is_flagged() {
    let f = Field::prime(7).unwrap();
    let a = PointSet::from_ints(f, &[(0, 0), (1, 0), (0, 1), (1, 1)]);
    let r = f.one();
    let good = reduce_to_incidences(&a, r).unwrap();
    assert!(good.axis_admissible);
    // x = 0 contains the origin, the centre of quarter turns relating the unit segments
    let bad = reduce_to_incidences_with_axis(&a, r, Line::from_ints(f, 1, 0, 0).unwrap()).unwrap();
    assert!(!bad.axis_admissible);
    let iso = Line::from_ints(Field::prime(5).unwrap(), 1, 2, 0).unwrap();
    assert!(reduce_to_incidences_with_axis(
        &PointSet::from_ints(iso.field(), &[(0, 0), (1, 0)]),
        iso.field().one(),
        iso
    )
    .is_err());
}
