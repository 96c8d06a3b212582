//! The bundled task generators and their reference verifiers.

pub mod column_gravity;
pub mod crossing_ring;
pub mod diagonal_stripes;
pub mod framed_boxes;

use crate::framework::TaskGenerator;

pub use column_gravity::ColumnGravity;
pub use crossing_ring::CrossingRing;
pub use diagonal_stripes::DiagonalStripes;
pub use framed_boxes::{BoxLayout, FramedBoxes};

pub fn all() -> Vec<Box<dyn TaskGenerator>> {
    vec![
        Box::new(FramedBoxes),
        Box::new(ColumnGravity),
        Box::new(CrossingRing),
        Box::new(DiagonalStripes),
    ]
}
