use std::fmt;

use super::HomPoly;
use crate::geom::{Line, Point};
use crate::scalar::Scalar;

/// A point or line whose coordinates are forms in `x0, x1, x2`.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVector {
    entries: [HomPoly; 3],
}

impl PolyVector {
    pub fn new(entries: [HomPoly; 3]) -> Self {
        let d = entries[0].degree();
        assert!(
            entries.iter().all(|e| e.degree() == d),
            "entries of a polynomial vector must share one degree"
        );
        PolyVector { entries }
    }

    /// The variable point `x = (x0, x1, x2)`.
    pub fn variable() -> Self {
        PolyVector::new([
            HomPoly::variable(0),
            HomPoly::variable(1),
            HomPoly::variable(2),
        ])
    }

    pub fn constant(t: &[Scalar; 3]) -> Self {
        PolyVector::new(t.clone().map(HomPoly::constant))
    }

    pub fn from_point(p: &Point) -> Self {
        PolyVector::constant(p.coords())
    }

    pub fn from_line(l: &Line) -> Self {
        PolyVector::constant(l.coeffs())
    }

    pub fn degree(&self) -> u32 {
        self.entries[0].degree()
    }

    pub fn entries(&self) -> &[HomPoly; 3] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(HomPoly::is_zero)
    }

    pub fn scale(&self, f: &HomPoly) -> PolyVector {
        PolyVector::new([
            &self.entries[0] * f,
            &self.entries[1] * f,
            &self.entries[2] * f,
        ])
    }

    /// Substitutes a concrete point for `x`.
    pub fn evaluate(&self, p: &Point) -> [Scalar; 3] {
        [
            self.entries[0].evaluate(p),
            self.entries[1].evaluate(p),
            self.entries[2].evaluate(p),
        ]
    }
}

/// Cross product with polynomial entries; the degree is `deg u + deg v`.
pub fn poly_cross(u: &PolyVector, v: &PolyVector) -> PolyVector {
    let (a, b) = (&u.entries, &v.entries);
    PolyVector::new([
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ])
}

/// Dot product with polynomial entries; the degree is `deg u + deg v`.
pub fn poly_dot(u: &PolyVector, v: &PolyVector) -> HomPoly {
    let (a, b) = (&u.entries, &v.entries);
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

impl PolyVector {
    pub fn cross(&self, other: &PolyVector) -> PolyVector {
        poly_cross(self, other)
    }

    pub fn dot(&self, other: &PolyVector) -> HomPoly {
        poly_dot(self, other)
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.entries[0], self.entries[1], self.entries[2]
        )
    }
}
