use std::collections::BTreeSet;

use findist_core::field::Field;
use findist_core::geometry::{all_lines, all_points, bisector, reflect, Line, Point, Segment};
use findist_core::motions::{
    axial_image_set, axial_to_motion, enumerate_motions, enumerate_rotations, motion_between_segments, r_tau_set,
    transporter_set, RigidMotion,
};

fn small_fields() -> Vec<&'static Field> {
    vec![Field::prime(3).unwrap(), Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::extension(3, 2).unwrap()]
}

#[test]
fn group_order() {
    for f in small_fields() {
        let q = f.order() as i64;
        let so2 = (q - f.chi_minus_one()) as usize;
        assert_eq!(enumerate_rotations(f).len(), so2);
        assert_eq!(enumerate_motions(f).len(), so2 * (q * q) as usize);
    }
}

#[test]
fn composition_agrees_with_pointwise_action() {
    let f = Field::prime(5).unwrap();
    let motions = enumerate_motions(f);
    let pts = all_points(f);
    for g in motions.iter().step_by(7) {
        for h in motions.iter().step_by(11) {
            let gh = g.compose(h);
            for x in &pts {
                assert_eq!(gh.apply(*x), g.apply(h.apply(*x)));
            }
            assert!(gh.compose(&gh.inverse()).is_identity());
        }
    }
}

#[test]
fn motions_preserve_distance() {
    let f = Field::extension(3, 2).unwrap();
    let pts = all_points(f);
    for g in enumerate_motions(f).iter().step_by(13) {
        for (i, a) in pts.iter().enumerate().step_by(5) {
            for b in &pts[i..] {
                assert_eq!(g.apply(*a).distance_to(g.apply(*b)), a.distance_to(*b));
            }
        }
    }
}

#[test]
fn segment_transport_is_unique() {
    let f = Field::prime(7).unwrap();
    let pts = all_points(f);
    let motions = enumerate_motions(f);
    let src = Segment::new(pts[3], pts[17]);
    for (i, a) in pts.iter().enumerate().step_by(3) {
        for b in &pts[i + 1..] {
            let dst = Segment::new(*a, *b);
            let brute: Vec<&RigidMotion> =
                motions.iter().filter(|g| g.apply(src.head) == dst.head && g.apply(src.tail) == dst.tail).collect();
            match motion_between_segments(&src, &dst) {
                Ok(g) => assert_eq!(brute, vec![&g]),
                Err(_) => assert!(brute.is_empty()),
            }
        }
    }
}

#[test]
fn transporters_match_brute_force() {
    let f = Field::prime(5).unwrap();
    let motions = enumerate_motions(f);
    let x = Point::from_ints(f, 1, 2);
    let y = Point::from_ints(f, 4, 0);
    let brute: Vec<RigidMotion> = motions.into_iter().filter(|g| g.apply(x) == y).collect();
    assert_eq!(transporter_set(x, y), brute);
}

#[test]
fn bisector_is_the_equidistant_locus() {
    let f = Field::prime(7).unwrap();
    let pts = all_points(f);
    for a in pts.iter().step_by(5) {
        for b in &pts {
            match bisector(*a, *b) {
                Ok(l) => {
                    for x in &pts {
                        assert_eq!(l.contains(*x), x.distance_to(*a) == x.distance_to(*b));
                    }
                }
                Err(_) => assert!(a.distance_to(*b).is_zero()),
            }
        }
    }
}

#[test]
fn reflections_are_isometric_involutions() {
    for f in small_fields() {
        let pts = all_points(f);
        for l in all_lines(f).iter().filter(|l| !l.is_isotropic()).step_by(3) {
            for x in &pts {
                let y = reflect(l, *x).unwrap();
                assert_eq!(reflect(l, y).unwrap(), *x);
                assert_eq!(l.contains(*x), y == *x);
                for z in pts.iter().step_by(4) {
                    assert_eq!(y.distance_to(reflect(l, *z).unwrap()), x.distance_to(*z));
                }
            }
        }
    }
}

#[test]
fn axial_images() {
    for f in small_fields() {
        let pts = all_points(f);
        let lines: Vec<Line> = all_lines(f).into_iter().filter(|l| !l.is_isotropic()).collect();
        let axis = lines[lines.len() / 2];
        let mut images = BTreeSet::new();
        for l in &lines {
            let g = axial_to_motion(l, &axis).unwrap();
            for x in &pts {
                assert_eq!(g.apply(*x), reflect(l, reflect(&axis, *x).unwrap()).unwrap());
            }
            images.insert(g);
        }
        let expected: BTreeSet<RigidMotion> = axial_image_set(&axis).unwrap().into_iter().collect();
        assert_eq!(images, expected);
        let q = f.order() as usize;
        let so2 = enumerate_rotations(f).len();
        assert_eq!(expected.len(), q * so2);
        assert_eq!(r_tau_set(&axis).unwrap().len(), q * (so2 - 1) + 1);
        let r_tau: BTreeSet<RigidMotion> = r_tau_set(&axis).unwrap().into_iter().collect();
        for g in &expected {
            assert_eq!(r_tau.contains(g), !g.is_translation() || g.is_identity());
        }
    }
}
