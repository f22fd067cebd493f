//! Balanced 4-holes in bicolored planar point sets.

pub mod classify;
pub mod decide;
pub mod error;
pub mod generators;
pub mod geometry;
pub mod holes;
pub mod oracle;
pub mod pointset;
pub mod render;
pub mod report;

pub use error::{Error, Result};
pub use geometry::{Color, Orientation, Point, Wedge};
pub use holes::{EmptyTriangle, HolePolygon};
pub use pointset::{BicoloredSet, Validation};
