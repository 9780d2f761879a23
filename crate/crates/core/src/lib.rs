//! Exact incidence algebra in the projective plane and straightedge
//! constructions on plane cubic curves.
//!
//! Points and lines are homogeneous triples of exact rationals. Meets and
//! joins are cross products, and degenerate constructions yield zero
//! objects rather than errors. Expressions are written in Grassmann's
//! juxtaposition notation, for example `(xaAa_1.xbBkCb_1.xc)=0`, and can be
//! evaluated numerically or expanded into polynomials in `x`.

pub mod construct;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod geom;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use expr::{eval_numeric, eval_symbolic, parse, pretty_print, Environment, Expr};
pub use geom::{GeomObject, Kind, Line, Point};
pub use poly::HomPoly;
pub use scalar::Scalar;
