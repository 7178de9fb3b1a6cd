//! Constructive interval representations: decomposition colorings and the
//! triangle-free outerplanar pipeline.

pub mod coloring;
pub mod decomposition;
pub mod path;
pub mod triangle_free;

pub use coloring::{color_forest_2independent, color_nearly_2independent};
pub use decomposition::{
    decompose_forest_2independent, decompose_girth5_outerplanar, validate_decomposition,
    validate_nearly_2independent, DecomposeMode, Decomposition, IPair,
};
pub use path::{assign_path, assign_path_dp};
pub use triangle_free::{augment_to_2connected, represent_triangle_free_outerplanar};
