//! Exact finite-field plane geometry for the Erdős distinct-distances problem
//! over F_q: rigid motions, the kinematic map into PF³, the even Clifford
//! algebra picture, isosceles/bisector-energy counting and the reduction of
//! bisector energy to point-plane incidences.

pub mod clifford;
pub mod counting;
pub mod error;
pub mod field;
pub mod geometry;
pub mod incidence;
pub mod kinematic;
pub mod linalg;
pub mod motions;
mod poly;

pub use error::{Error, Result};
pub use field::{Field, FieldElement, FieldSpec};
pub use geometry::{Line, Point, PointSet, Segment};
pub use motions::{RigidMotion, Rotation};
