//! Constructive colorers. Each returns a coloring whose palette size is the
//! bound the construction guarantees, and every output passes the verifier.

mod cycle_data;

pub mod cycle;
pub mod fat_triangle;
pub mod grid;
pub mod outerplanar;
pub mod path;
pub mod planar;
pub mod sparse;

use thiserror::Error;

use crate::coloring::ColoringError;
use crate::density::Density;
use crate::graph::GraphError;

pub use cycle::{block_table, color_cycle, cycle_tau, decompose, BlockTable};
pub use fat_triangle::color_fat_triangle;
pub use grid::color_grid;
pub use outerplanar::color_outerplanar;
pub use path::color_path;
pub use planar::color_planar;
pub use sparse::color_sparse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{what} must be at least {min}, got {value}")]
    BelowMinimum {
        what: &'static str,
        value: usize,
        min: usize,
    },
    #[error("no construction for tone t = {0}")]
    UnsupportedTone(usize),
    #[error("input not outerplanar: no vertex of degree 1, or of degree 2 next to a vertex of degree at most 4")]
    NotOuterplanar,
    #[error("input not planar: no vertex of degree at most 5 with at most two neighbors of degree 11 or more")]
    NotPlanar,
    #[error("maximum average degree {0} is not below 12/5")]
    MadTooLarge(Density),
    /// A step the underlying theorem guarantees did not go through.
    #[error("construction got stuck at vertex {0}")]
    Stuck(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

fn at_least(what: &'static str, value: usize, min: usize) -> Result<(), ConstructionError> {
    if value < min {
        return Err(ConstructionError::BelowMinimum { what, value, min });
    }
    Ok(())
}
