use findist_core::field::ElementRepr;
use findist_core::geometry::{all_points, Line};
use findist_core::{Field, FieldElement, Point, PointSet};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// Point-set families. Integer parameters are read in the prime subfield.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Generator {
    #[default]
    FullPlane,
    Random {
        size: usize,
    },
    Grid {
        width: u64,
        height: u64,
    },
    OnLine {
        line: [i64; 3],
        #[serde(default)]
        size: Option<usize>,
    },
    OnCircle {
        center: [i64; 2],
        radius_sq: i64,
        #[serde(default)]
        size: Option<usize>,
    },
    /// F_p × F_p inside a proper extension.
    Subfield,
    /// Points of the isotropic line through `offset` with direction (1, i).
    IsotropicLine {
        #[serde(default)]
        offset: [i64; 2],
        #[serde(default)]
        size: Option<usize>,
    },
    /// An explicit list, each coordinate an integer or a coefficient array.
    Points {
        points: Vec<[ElementRepr; 2]>,
    },
}

impl Generator {
    pub fn label(&self) -> String {
        match self {
            Generator::FullPlane => "full-plane".into(),
            Generator::Random { size } => format!("random({size})"),
            Generator::Grid { width, height } => format!("grid({width}x{height})"),
            Generator::OnLine { line, .. } => format!("on-line({}:{}:{})", line[0], line[1], line[2]),
            Generator::OnCircle { center, radius_sq, .. } => {
                format!("on-circle({}:{};{})", center[0], center[1], radius_sq)
            }
            Generator::Subfield => "subfield".into(),
            Generator::IsotropicLine { .. } => "isotropic-line".into(),
            Generator::Points { points } => format!("points({})", points.len()),
        }
    }
}

fn core(e: findist_core::Error) -> HarnessError {
    HarnessError::Config(e.to_string())
}

fn subsample(mut pts: Vec<Point>, size: Option<usize>, rng: &mut ChaCha8Rng) -> Result<Vec<Point>, HarnessError> {
    match size {
        None => Ok(pts),
        Some(k) if k > pts.len() => {
            Err(HarnessError::Config(format!("requested {k} points but only {} are available", pts.len())))
        }
        Some(k) => {
            pts.shuffle(rng);
            pts.truncate(k);
            Ok(pts)
        }
    }
}

/// Deterministic for fixed (generator, field, seed).
pub fn generate(gen: &Generator, field: &'static Field, seed: u64) -> Result<PointSet, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let int = |n: i64| field.from_int(n);
    let pts: Vec<Point> = match gen {
        Generator::FullPlane => all_points(field),
        Generator::Random { size } => subsample(all_points(field), Some(*size), &mut rng)?,
        Generator::Grid { width, height } => {
            let p = field.characteristic();
            if *width > p || *height > p {
                return Err(HarnessError::Config(format!("grid sides must not exceed p = {p}")));
            }
            (0..*width as i64).flat_map(|x| (0..*height as i64).map(move |y| Point { x: int(x), y: int(y) })).collect()
        }
        Generator::OnLine { line, size } => {
            let l = Line::new(int(line[0]), int(line[1]), int(line[2])).map_err(core)?;
            subsample(l.points(), *size, &mut rng)?
        }
        Generator::OnCircle { center, radius_sq, size } => {
            let c = Point { x: int(center[0]), y: int(center[1]) };
            let r = int(*radius_sq);
            let on: Vec<Point> = all_points(field).into_iter().filter(|x| x.distance_to(c) == r).collect();
            subsample(on, *size, &mut rng)?
        }
        Generator::Subfield => {
            if field.degree() < 2 {
                return Err(HarnessError::UnsupportedGenerator("subfield needs a proper extension field".into()));
            }
            let p = field.characteristic() as i64;
            (0..p).flat_map(|x| (0..p).map(move |y| Point { x: int(x), y: int(y) })).collect()
        }
        Generator::IsotropicLine { offset, size } => {
            let i = field
                .from_int(-1)
                .sqrt()
                .ok_or_else(|| HarnessError::UnsupportedGenerator(format!("-1 is not a square in {}", field.spec())))?;
            let o = Point { x: int(offset[0]), y: int(offset[1]) };
            let on: Vec<Point> = field.elements().map(|t| o + Point { x: t, y: t * i }).collect();
            subsample(on, *size, &mut rng)?
        }
        Generator::Points { points } => points
            .iter()
            .map(|[x, y]| -> Result<Point, HarnessError> {
                let x: FieldElement = x.resolve(field).map_err(core)?;
                Ok(Point { x, y: y.resolve(field).map_err(core)? })
            })
            .collect::<Result<_, _>>()?,
    };
    PointSet::new(field, pts).map_err(core)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> &'static Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn small_families() {
        let grid = generate(&Generator::Grid { width: 3, height: 3 }, f(7), 0).unwrap();
        assert_eq!(grid.len(), 9);
        assert!(grid.contains(&Point::from_ints(f(7), 2, 2)));
        assert_eq!(generate(&Generator::FullPlane, f(3), 0).unwrap().len(), 9);
        let circle = generate(&Generator::OnCircle { center: [0, 0], radius_sq: 1, size: None }, f(7), 0).unwrap();
        assert_eq!(circle.len(), 8);
        let line = generate(&Generator::OnLine { line: [1, 1, 2], size: Some(4) }, f(11), 3).unwrap();
        assert_eq!(line.len(), 4);
    }

    #[test]
    fn random_sets_are_reproducible() {
        let g = Generator::Random { size: 10 };
        let a = generate(&g, f(11), 1).unwrap();
        assert_eq!(a, generate(&g, f(11), 1).unwrap());
        assert_eq!(a.len(), 10);
        assert_ne!(a, generate(&g, f(11), 2).unwrap());
        assert!(generate(&Generator::Random { size: 50 }, f(5), 0).is_err());
    }

    #[test]
    fn subfield_and_isotropic_lines() {
        let f9 = Field::extension(3, 2).unwrap();
        let sub = generate(&Generator::Subfield, f9, 0).unwrap();
        assert_eq!(sub.len(), 9);
        assert!(sub.iter().all(|p| p.x.pow(3) == p.x && p.y.pow(3) == p.y));
        assert!(matches!(generate(&Generator::Subfield, f(7), 0), Err(HarnessError::UnsupportedGenerator(_))));
        let iso = generate(&Generator::IsotropicLine { offset: [1, 0], size: None }, f(5), 0).unwrap();
        assert_eq!(iso.len(), 5);
        let pts = iso.points();
        assert!(pts[0].distance_to(pts[1]).is_zero());
        let err = generate(&Generator::IsotropicLine { offset: [0, 0], size: None }, f(7), 0);
        assert!(matches!(err, Err(HarnessError::UnsupportedGenerator(_))));
    }

    #[test]
    fn explicit_points() {
        let g: Generator = serde_json::from_str(r#"{"kind": "points", "points": [[0, 0], [2, 0]]}"#).unwrap();
        assert_eq!(generate(&g, f(5), 0).unwrap(), PointSet::from_ints(f(5), &[(0, 0), (2, 0)]));
    }
}
