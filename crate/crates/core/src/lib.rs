//! Exact counting of the orderings a finite point set can present to one or
//! two moving observers, in the line, the plane and on the sphere.

pub mod acceptance;
pub mod arrangement2d;
pub mod constructions;
pub mod error;
pub mod exactnum;
pub mod formulas;
pub mod geometry;
pub mod par;
pub mod search;
pub mod sphere;
pub mod twovantage;

pub use error::{Error, Result};
