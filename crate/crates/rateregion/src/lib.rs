//! File formats, SVG rendering and the command-line tool built on
//! `rateregion-core`.
//!
//! Gain matrices are row-per-receiver: `gains[i][j]` is the power gain from
//! transmitter `j + 1` at receiver `i + 1`.

pub mod channel_file;
pub mod cli;
pub mod formats;
pub mod svg;

pub use channel_file::{parse_channel, read_channel, write_channel, FileError};
pub use svg::render_region_svg;
