use std::collections::BTreeMap;

use super::parser::{name_kind, parse, Expr};
use crate::error::{Error, Result};
use crate::geom::{product, GeomObject, Kind, Line, Point};
use crate::poly::{HomPoly, PolyVector};

/// Bindings for the operand names of an expression, plus an optional value
/// for the variable `x`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Environment {
    bindings: BTreeMap<String, GeomObject>,
    x: Option<Point>,
}

impl Environment {
    pub fn new() -> Self {
        Environment::default()
    }

    /// Binds `name`, checking that its case matches the kind of `value`.
    pub fn bind(&mut self, name: &str, value: impl Into<GeomObject>) -> Result<()> {
        let value = value.into();
        let expected = name_kind(name).ok_or_else(|| Error::Syntax {
            pos: 0,
            message: format!("`{name}` is not a valid operand name"),
        })?;
        if value.kind() != expected {
            return Err(Error::BindingKind {
                name: name.to_string(),
                expected,
            });
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    /// Builder form of [`Environment::bind`].
    pub fn with(mut self, name: &str, value: impl Into<GeomObject>) -> Result<Self> {
        self.bind(name, value)?;
        Ok(self)
    }

    pub fn set_x(&mut self, p: Point) {
        self.x = Some(p);
    }

    pub fn with_x(mut self, p: Point) -> Self {
        self.x = Some(p);
        self
    }

    pub fn clear_x(&mut self) {
        self.x = None;
    }

    pub fn x(&self) -> Option<&Point> {
        self.x.as_ref()
    }

    pub fn get(&self, name: &str) -> Option<&GeomObject> {
        self.bindings.get(name)
    }

    pub fn point(&self, name: &str) -> Result<&Point> {
        match self.get(name) {
            Some(GeomObject::Point(p)) => Ok(p),
            Some(_) => Err(Error::BindingKind {
                name: name.to_string(),
                expected: Kind::Point,
            }),
            None => Err(Error::Unbound(name.to_string())),
        }
    }

    pub fn line(&self, name: &str) -> Result<&Line> {
        match self.get(name) {
            Some(GeomObject::Line(l)) => Ok(l),
            Some(_) => Err(Error::BindingKind {
                name: name.to_string(),
                expected: Kind::Line,
            }),
            None => Err(Error::Unbound(name.to_string())),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &GeomObject)> {
        self.bindings.iter()
    }
}

/// Value type of an evaluator: anything with the typed juxtaposition product.
trait Algebra: Sized {
    fn product(&self, other: &Self) -> Result<Self>;
}

impl Algebra for GeomObject {
    fn product(&self, other: &Self) -> Result<Self> {
        product(self, other)
    }
}

fn fold<V: Algebra>(e: &Expr, leaf: &dyn Fn(&Expr) -> Result<V>) -> Result<V> {
    match e {
        Expr::Operand(_) | Expr::Var => leaf(e),
        Expr::Chain(items) | Expr::Group(items) => {
            let mut it = items.iter();
            let first = it.next().ok_or_else(|| Error::Syntax {
                pos: 0,
                message: "empty expression".into(),
            })?;
            let mut acc = fold(first, leaf)?;
            for item in it {
                acc = acc.product(&fold(item, leaf)?)?;
            }
            Ok(acc)
        }
    }
}

/// Evaluates `e` with exact arithmetic. Degenerate steps produce zero
/// objects, which propagate through the rest of the fold.
pub fn eval_numeric(e: &Expr, env: &Environment) -> Result<GeomObject> {
    fold(e, &|leaf| match leaf {
        Expr::Operand(n) => env.get(n).cloned().ok_or_else(|| Error::Unbound(n.clone())),
        Expr::Var => env
            .x
            .clone()
            .map(GeomObject::Point)
            .ok_or_else(|| Error::Unbound("x".into())),
        _ => unreachable!(),
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, env: &Environment) -> Result<GeomObject> {
    eval_numeric(&parse(text)?.expr, env)
}

/// Result of symbolic evaluation: a point, line or scalar whose entries are
/// forms in the coordinates of `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymValue {
    Point(PolyVector),
    Line(PolyVector),
    Scalar(HomPoly),
}

impl SymValue {
    pub fn kind(&self) -> Kind {
        match self {
            SymValue::Point(_) => Kind::Point,
            SymValue::Line(_) => Kind::Line,
            SymValue::Scalar(_) => Kind::Scalar,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            SymValue::Point(v) | SymValue::Line(v) => v.degree(),
            SymValue::Scalar(f) => f.degree(),
        }
    }

    pub fn as_scalar(&self) -> Option<&HomPoly> {
        match self {
            SymValue::Scalar(f) => Some(f),
            _ => None,
        }
    }

    /// Substitutes a concrete point for `x`.
    pub fn substitute(&self, p: &Point) -> GeomObject {
        match self {
            SymValue::Point(v) => GeomObject::Point(Point(v.evaluate(p))),
            SymValue::Line(v) => GeomObject::Line(Line(v.evaluate(p))),
            SymValue::Scalar(f) => GeomObject::Scalar(f.evaluate(p)),
        }
    }

    fn constant(g: &GeomObject) -> SymValue {
        match g {
            GeomObject::Point(p) => SymValue::Point(PolyVector::from_point(p)),
            GeomObject::Line(l) => SymValue::Line(PolyVector::from_line(l)),
            GeomObject::Scalar(s) => SymValue::Scalar(HomPoly::constant(s.clone())),
        }
    }
}

impl Algebra for SymValue {
    fn product(&self, other: &Self) -> Result<Self> {
        use SymValue::*;
        Ok(match (self, other) {
            (Point(u), Point(v)) => Line(u.cross(v)),
            (Line(u), Line(v)) => Point(u.cross(v)),
            (Line(u), Point(v)) | (Point(u), Line(v)) => Scalar(u.dot(v)),
            (Scalar(_), Scalar(_)) => return Err(Error::ScalarProduct),
            (Scalar(f), Point(v)) | (Point(v), Scalar(f)) => Point(v.scale(f)),
            (Scalar(f), Line(v)) | (Line(v), Scalar(f)) => Line(v.scale(f)),
        })
    }
}

/// Evaluates `e` with `x` left free, expanding every step into forms in
/// `x0, x1, x2`.
pub fn eval_symbolic(e: &Expr, env: &Environment) -> Result<SymValue> {
    fold(e, &|leaf| match leaf {
        Expr::Operand(n) => env
            .get(n)
            .map(SymValue::constant)
            .ok_or_else(|| Error::Unbound(n.clone())),
        Expr::Var => Ok(SymValue::Point(PolyVector::variable())),
        _ => unreachable!(),
    })
}

/// Expands a scalar-valued expression such as `(xaAa_1.xbBkCb_1.xc)` into
/// the polynomial whose zero set it describes.
pub fn expand(text: &str, env: &Environment) -> Result<HomPoly> {
    let parsed = parse(text)?;
    match eval_symbolic(&parsed.expr, env)? {
        SymValue::Scalar(f) => Ok(f),
        other => Err(Error::KindMismatch {
            op: "expansion",
            left: other.kind(),
            right: Kind::Scalar,
        }),
    }
}
