//! File formats, rendering and parallel enumeration on top of `sfa-core`.

pub mod audit;
pub mod catalog_file;
pub mod cli;
pub mod parallel;
pub mod render;

pub use catalog_file::{read_catalog, write_catalog, CatalogError, Format, FORMAT_VERSION};
pub use parallel::enumerate_parallel;
pub use render::render;
