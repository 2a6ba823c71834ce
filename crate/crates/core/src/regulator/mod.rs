//! Symbol elements, their membership conditions and the regulator formulas.

pub mod formulas;
pub mod symbols;

pub use formulas::{regmap, Formula, LocalKind, LocalTerm, Omega, Regulator, RegulatorReport, TermReport};
pub use symbols::{
    check_ccond_numeric, check_ocond, check_special_units, check_tilde, FactorBaseVector, FactorBasis, PointCheck,
    PointStatus, SymbolElement, SymbolTerm,
};
