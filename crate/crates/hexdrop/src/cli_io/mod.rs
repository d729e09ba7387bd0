//! File formats and the command-line surface: the line-oriented network
//! config, CSV/JSON point serialization, SVG rendering, and the CLI driver.

mod cli;
mod config;
mod output;
mod svg;

pub use cli::cli_main;
pub use config::{parse_config, serialize_config, ConfigFileError};
pub use output::{write_points, OutputFormat};
pub use svg::render_svg;
