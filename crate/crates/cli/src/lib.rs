//! Expression language, evaluator and value printing behind the `gt` tool.

pub mod eval;
pub mod expr;
pub mod value;

pub use eval::{CliError, Context};
pub use expr::{parse, Expr, ParseError};
pub use value::{parse_output, Datum, Value};
