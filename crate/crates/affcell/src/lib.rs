//! File formats, expression syntax and the `affcell` command line on top of
//! [`affcell_core`].

pub mod cli;
pub mod datum;
pub mod element;
pub mod error;
pub mod expr;

pub use cli::{run, run_command, Cli, Output};
pub use datum::{parse_cell_datum, parse_datum_unchecked, write_datum};
pub use element::parse_element;
pub use error::{Error, Result, SyntaxError};
pub use expr::parse_poly;
