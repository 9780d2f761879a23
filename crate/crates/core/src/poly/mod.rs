//! Homogeneous polynomials in `x0, x1, x2` with exact coefficients.

mod binary;
mod fit;
mod vector;

pub use binary::{restrict_to_line, BinaryForm};
pub use fit::{matrix_rank, nullspace_fit, rank_of_points};
pub use vector::PolyVector;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::geom::{Line, Point};
use crate::scalar::{primitive, Scalar};

/// Exponents `(i, j, k)` of `x0^i x1^j x2^k`.
pub type Monomial = [u32; 3];

/// All monomials of the given degree, `x0^d` first, in the order used for
/// coefficient vectors: `x0^3, x0^2x1, x0^2x2, x0x1^2, x0x1x2, x0x2^2,
/// x1^3, x1^2x2, x1x2^2, x2^3` for cubics.
pub fn monomials(degree: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((degree + 1) * (degree + 2) / 2) as usize);
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            out.push([i, j, degree - i - j]);
        }
    }
    out
}

/// Value of a monomial at a point.
pub fn monomial_at(m: &Monomial, p: &Point) -> Scalar {
    let c = p.coords();
    c[0].pow(m[0]) * c[1].pow(m[1]) * c[2].pow(m[2])
}

/// A homogeneous polynomial. Zero coefficients are never stored, and every
/// stored monomial has total degree `degree`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomPoly {
    degree: u32,
    terms: BTreeMap<Monomial, Scalar>,
}

impl HomPoly {
    pub fn zero(degree: u32) -> Self {
        HomPoly {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = HomPoly::zero(0);
        p.add_term([0, 0, 0], c);
        p
    }

    /// The coordinate function `x_index`.
    pub fn variable(index: usize) -> Self {
        let mut m = [0; 3];
        m[index] = 1;
        let mut p = HomPoly::zero(1);
        p.add_term(m, Scalar::one());
        p
    }

    /// The linear form `L0·x0 + L1·x1 + L2·x2` of a line.
    pub fn linear(l: &Line) -> Self {
        let mut p = HomPoly::zero(1);
        for (i, c) in l.coeffs().iter().enumerate() {
            let mut m = [0; 3];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    /// Builds a polynomial from coefficients listed in [`monomials`] order.
    pub fn from_coefficients(degree: u32, coeffs: &[Scalar]) -> Self {
        let mons = monomials(degree);
        assert_eq!(
            mons.len(),
            coeffs.len(),
            "coefficient count for degree {degree}"
        );
        let mut p = HomPoly::zero(degree);
        for (m, c) in mons.into_iter().zip(coeffs) {
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficients in [`monomials`] order, zeros included.
    pub fn coefficients(&self) -> Vec<Scalar> {
        monomials(self.degree)
            .iter()
            .map(|m| self.coefficient(m))
            .collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert_eq!(m.iter().sum::<u32>(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Scalar::zero);
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, s: &Scalar) -> HomPoly {
        if s.is_zero() {
            return HomPoly::zero(self.degree);
        }
        HomPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    /// Exact substitution `f(p)`.
    pub fn evaluate(&self, p: &Point) -> Scalar {
        let c = p.coords();
        // powers of each coordinate up to the degree
        let powers: Vec<Vec<Scalar>> = c
            .iter()
            .map(|x| {
                let mut v = Vec::with_capacity(self.degree as usize + 1);
                v.push(Scalar::one());
                for k in 0..self.degree as usize {
                    let next = &v[k] * x;
                    v.push(next);
                }
                v
            })
            .collect();
        self.terms
            .iter()
            .map(|(m, coeff)| {
                coeff
                    * &powers[0][m[0] as usize]
                    * &powers[1][m[1] as usize]
                    * &powers[2][m[2] as usize]
            })
            .sum()
    }

    /// Partial derivative with respect to `x_index`.
    pub fn derivative(&self, index: usize) -> HomPoly {
        let mut out = HomPoly::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            if m[index] == 0 {
                continue;
            }
            let mut n = *m;
            n[index] -= 1;
            out.add_term(n, c * &Scalar::from(m[index]));
        }
        out
    }

    pub fn gradient(&self) -> [HomPoly; 3] {
        [self.derivative(0), self.derivative(1), self.derivative(2)]
    }

    /// Same curve: coefficient vectors proportional by a nonzero factor.
    /// Two zero polynomials of equal degree compare equal.
    pub fn projectively_equal(&self, other: &HomPoly) -> bool {
        if self.degree != other.degree {
            return false;
        }
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return true,
            (false, false) => {}
            _ => return false,
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let (m0, c0) = self.terms.iter().next().unwrap();
        let Some(d0) = other.terms.get(m0) else {
            return false;
        };
        // f ~ g iff d0·f == c0·g
        self.terms.iter().all(|(m, c)| match other.terms.get(m) {
            Some(d) => c * d0 == d * c0,
            None => false,
        })
    }

    /// Primitive integer representative with positive leading coefficient
    /// (in [`monomials`] order).
    pub fn canonical(&self) -> HomPoly {
        let coeffs = primitive(&self.coefficients());
        HomPoly::from_coefficients(self.degree, &coeffs)
    }
}

impl Add<&HomPoly> for &HomPoly {
    type Output = HomPoly;
    fn add(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&HomPoly> for &HomPoly {
    type Output = HomPoly;
    fn sub(self, rhs: &HomPoly) -> HomPoly {
        assert_eq!(
            self.degree, rhs.degree,
            "subtracting forms of different degree"
        );
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul<&HomPoly> for &HomPoly {
    type Output = HomPoly;
    fn mul(self, rhs: &HomPoly) -> HomPoly {
        let mut out = HomPoly::zero(self.degree + rhs.degree);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term([m[0] + n[0], m[1] + n[1], m[2] + n[2]], c * d);
            }
        }
        out
    }
}

impl Neg for &HomPoly {
    type Output = HomPoly;
    fn neg(self) -> HomPoly {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for m in monomials(self.degree) {
            let Some(c) = self.terms.get(&m) else {
                continue;
            };
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let is_const = m == [0, 0, 0];
            let unit = mag == Scalar::one();
            if !unit || is_const {
                write!(f, "{mag}")?;
            }
            let mut star = !unit && !is_const;
            for (i, e) in m.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                if star {
                    f.write_str("*")?;
                }
                star = true;
                write!(f, "x{i}")?;
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomPoly[{}]({})", self.degree, self)
    }
}
