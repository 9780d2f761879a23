//! Points, lines and the typed juxtaposition product.
//!
//! Points and lines of the projective plane are homogeneous triples. The
//! all-zero triple is kept as a bookkeeping value (the zero-point and the
//! zero-line) so that every construction stays total: a degenerate step
//! yields a zero object instead of failing, and the zero propagates through
//! every later product.
//!
//! | left   | right  | product            |
//! |--------|--------|--------------------|
//! | point  | point  | join (line)        |
//! | line   | line   | meet (point)       |
//! | line   | point  | incidence (scalar) |
//! | scalar | any    | scaling            |

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{primitive, Scalar};

pub type Triple = [Scalar; 3];

pub(crate) fn cross(u: &Triple, v: &Triple) -> Triple {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

pub(crate) fn dot(u: &Triple, v: &Triple) -> Scalar {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn is_zero_triple(t: &Triple) -> bool {
    t.iter().all(Scalar::is_zero)
}

fn canonical_triple(t: &Triple) -> Triple {
    let v = primitive(t);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

fn triple_from<T: Into<Scalar>>(x0: T, x1: T, x2: T) -> Triple {
    [x0.into(), x1.into(), x2.into()]
}

fn same_class(u: &Triple, v: &Triple) -> bool {
    match (is_zero_triple(u), is_zero_triple(v)) {
        (true, true) => true,
        (false, false) => is_zero_triple(&cross(u, v)),
        _ => false,
    }
}

/// A point `[x0:x1:x2]` of the projective plane.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Point(pub Triple);

/// The line `L0·x0 + L1·x1 + L2·x2 = 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line(pub Triple);

impl Point {
    pub fn new<T: Into<Scalar>>(x0: T, x1: T, x2: T) -> Self {
        Point(triple_from(x0, x1, x2))
    }

    /// The affine point `(x, y)` as `[1:x:y]`.
    pub fn affine<T: Into<Scalar>>(x: T, y: T) -> Self {
        Point([Scalar::one(), x.into(), y.into()])
    }

    pub fn zero() -> Self {
        Point([Scalar::zero(), Scalar::zero(), Scalar::zero()])
    }

    pub fn coords(&self) -> &Triple {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        is_zero_triple(&self.0)
    }

    /// Projective equality; a zero-point is equivalent only to itself.
    pub fn equiv(&self, other: &Point) -> bool {
        same_class(&self.0, &other.0)
    }

    pub fn canonical(&self) -> Point {
        Point(canonical_triple(&self.0))
    }

    pub fn scaled(&self, s: &Scalar) -> Point {
        Point(self.0.clone().map(|c| c * s))
    }

    /// `s·self + t·other`.
    pub fn combine(&self, s: &Scalar, other: &Point, t: &Scalar) -> Point {
        Point([
            s * &self.0[0] + t * &other.0[0],
            s * &self.0[1] + t * &other.0[1],
            s * &self.0[2] + t * &other.0[2],
        ])
    }

    /// Reads the point as a line with the same coordinates (the duality of
    /// the plane).
    pub fn dual(&self) -> Line {
        Line(self.0.clone())
    }
}

impl Line {
    pub fn new<T: Into<Scalar>>(l0: T, l1: T, l2: T) -> Self {
        Line(triple_from(l0, l1, l2))
    }

    pub fn zero() -> Self {
        Line([Scalar::zero(), Scalar::zero(), Scalar::zero()])
    }

    pub fn coeffs(&self) -> &Triple {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        is_zero_triple(&self.0)
    }

    pub fn equiv(&self, other: &Line) -> bool {
        same_class(&self.0, &other.0)
    }

    pub fn canonical(&self) -> Line {
        Line(canonical_triple(&self.0))
    }

    pub fn scaled(&self, s: &Scalar) -> Line {
        Line(self.0.clone().map(|c| c * s))
    }

    pub fn contains(&self, p: &Point) -> bool {
        incidence(self, p).is_zero()
    }

    pub fn dual(&self) -> Point {
        Point(self.0.clone())
    }
}

fn fmt_triple(f: &mut fmt::Formatter<'_>, t: &Triple) -> fmt::Result {
    write!(f, "[{}:{}:{}]", t[0], t[1], t[2])
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(f, &self.0)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Point")?;
        fmt_triple(f, &self.0)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_triple(f, &self.0)
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line")?;
        fmt_triple(f, &self.0)
    }
}

/// The three value kinds of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Point,
    Line,
    Scalar,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Scalar => "scalar",
        })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub enum GeomObject {
    Point(Point),
    Line(Line),
    Scalar(Scalar),
}

impl GeomObject {
    pub fn kind(&self) -> Kind {
        match self {
            GeomObject::Point(_) => Kind::Point,
            GeomObject::Line(_) => Kind::Line,
            GeomObject::Scalar(_) => Kind::Scalar,
        }
    }

    /// Zero-point, zero-line or the scalar 0.
    pub fn is_zero(&self) -> bool {
        match self {
            GeomObject::Point(p) => p.is_zero(),
            GeomObject::Line(l) => l.is_zero(),
            GeomObject::Scalar(s) => s.is_zero(),
        }
    }

    pub fn as_point(&self) -> Option<&Point> {
        match self {
            GeomObject::Point(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_line(&self) -> Option<&Line> {
        match self {
            GeomObject::Line(l) => Some(l),
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&Scalar> {
        match self {
            GeomObject::Scalar(s) => Some(s),
            _ => None,
        }
    }

    /// Primitive integer representative; scalars are returned unchanged.
    pub fn canonical(&self) -> GeomObject {
        match self {
            GeomObject::Point(p) => GeomObject::Point(p.canonical()),
            GeomObject::Line(l) => GeomObject::Line(l.canonical()),
            GeomObject::Scalar(s) => GeomObject::Scalar(s.clone()),
        }
    }
}

impl fmt::Display for GeomObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeomObject::Point(p) => write!(f, "point {p}"),
            GeomObject::Line(l) => write!(f, "line {l}"),
            GeomObject::Scalar(s) => write!(f, "scalar {s}"),
        }
    }
}

impl fmt::Debug for GeomObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Point> for GeomObject {
    fn from(p: Point) -> Self {
        GeomObject::Point(p)
    }
}

impl From<Line> for GeomObject {
    fn from(l: Line) -> Self {
        GeomObject::Line(l)
    }
}

impl From<Scalar> for GeomObject {
    fn from(s: Scalar) -> Self {
        GeomObject::Scalar(s)
    }
}

/// Intersection of two lines; the zero-point when they coincide or either
/// is the zero-line.
pub fn meet(l: &Line, m: &Line) -> Point {
    Point(cross(&l.0, &m.0))
}

/// Line through two points; the zero-line when they coincide or either is
/// the zero-point.
pub fn join(p: &Point, q: &Point) -> Line {
    Line(cross(&p.0, &q.0))
}

/// `L·p`, zero exactly when `p` lies on `L` (or either is a zero object).
pub fn incidence(l: &Line, p: &Point) -> Scalar {
    dot(&l.0, &p.0)
}

/// Scalar triple product `a·(b×c)` of three points or three lines.
pub fn bracket(a: &GeomObject, b: &GeomObject, c: &GeomObject) -> Result<Scalar> {
    let triple = |g: &GeomObject| -> Option<Triple> {
        match g {
            GeomObject::Point(p) => Some(p.0.clone()),
            GeomObject::Line(l) => Some(l.0.clone()),
            GeomObject::Scalar(_) => None,
        }
    };
    for (x, y) in [(a, b), (b, c)] {
        if x.kind() != y.kind() || x.kind() == Kind::Scalar {
            return Err(Error::KindMismatch {
                op: "bracket",
                left: x.kind(),
                right: y.kind(),
            });
        }
    }
    let (ta, tb, tc) = (triple(a).unwrap(), triple(b).unwrap(), triple(c).unwrap());
    Ok(dot(&ta, &cross(&tb, &tc)))
}

/// `(p.q.r)` for three points.
pub fn point_bracket(p: &Point, q: &Point, r: &Point) -> Scalar {
    dot(&p.0, &cross(&q.0, &r.0))
}

pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    point_bracket(p, q, r).is_zero()
}

/// Multiplies `g` by `s`. A zero scalar yields the zero object of `g`'s kind.
pub fn scale(s: &Scalar, g: &GeomObject) -> GeomObject {
    match g {
        GeomObject::Point(p) => GeomObject::Point(p.scaled(s)),
        GeomObject::Line(l) => GeomObject::Line(l.scaled(s)),
        GeomObject::Scalar(t) => GeomObject::Scalar(s * t),
    }
}

/// The juxtaposition product used to evaluate every chain.
pub fn product(g: &GeomObject, h: &GeomObject) -> Result<GeomObject> {
    use GeomObject::*;
    Ok(match (g, h) {
        (Point(p), Point(q)) => Line(join(p, q)),
        (Line(l), Line(m)) => Point(meet(l, m)),
        (Line(l), Point(p)) | (Point(p), Line(l)) => Scalar(incidence(l, p)),
        (Scalar(_), Scalar(_)) => return Err(Error::ScalarProduct),
        (Scalar(s), other) | (other, Scalar(s)) => scale(s, other),
    })
}

/// Projective equivalence. Scalars compare by zero/nonzero class; points
/// and lines by proportionality, a zero object matching only another zero
/// object of its kind.
pub fn projectively_equal(g: &GeomObject, h: &GeomObject) -> Result<bool> {
    use GeomObject::*;
    match (g, h) {
        (Scalar(a), Scalar(b)) => Ok(a.equivalent(b)),
        (Point(p), Point(q)) => Ok(p.equiv(q)),
        (Line(l), Line(m)) => Ok(l.equiv(m)),
        _ => Err(Error::KindMismatch {
            op: "projective equality",
            left: g.kind(),
            right: h.kind(),
        }),
    }
}
