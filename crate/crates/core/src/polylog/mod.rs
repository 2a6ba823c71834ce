//! p-adic dilogarithms: point values and closed-form Coleman functions.

pub mod expr;
pub mod values;

pub use expr::{ColemanExpression, LogRationalForm, LtwoArg, Shape, Term};
pub use values::{li2, lmod2, ltwo, Arg, ColemanValue, Route};
