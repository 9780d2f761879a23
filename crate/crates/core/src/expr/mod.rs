//! Grassmann's notation: parsing, printing and evaluation.

mod eval;
mod parser;

pub use eval::{eval_numeric, eval_str, eval_symbolic, expand, Environment, SymValue};
pub use parser::{name_kind, parse, pretty_print, tokenize, Expr, Expression, Token};
