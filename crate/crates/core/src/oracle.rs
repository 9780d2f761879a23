//! Brute-force checks that never go through the straightedge constructions:
//! exact polynomial evaluation, gradients, Hessians and root deflation of
//! restrictions to lines.

use crate::error::{Error, Result};
use crate::geom::{cross, dot, Line, Point};
use crate::poly::{matrix_rank, rank_of_points, restrict_to_line, BinaryForm, HomPoly};
use crate::scalar::Scalar;

/// Whether `p` lies on the curve `f = 0`.
pub fn cubic_membership(f: &HomPoly, p: &Point) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.evaluate(p).is_zero())
}

/// The line `∇f(a)`. It is the zero-line exactly when `a` is singular.
pub fn gradient_tangent(f: &HomPoly, a: &Point) -> Line {
    let g = f.gradient();
    Line([g[0].evaluate(a), g[1].evaluate(a), g[2].evaluate(a)])
}

/// A point of `l` other than `a`, taken from the meets of `l` with the
/// coordinate lines.
fn other_point_on(l: &Line, a: &Point) -> Option<Point> {
    [Line::new(1, 0, 0), Line::new(0, 1, 0), Line::new(0, 0, 1)]
        .iter()
        .map(|m| Point(cross(l.coeffs(), m.coeffs())))
        .find(|p| !p.is_zero() && !p.equiv(a))
}

/// Order of vanishing of `f` restricted to line `pq` at the point `at`,
/// which must be `p` or `q`.
pub fn root_multiplicity(f: &HomPoly, p: &Point, q: &Point, at: &Point) -> Result<usize> {
    let r = restrict_to_line(f, p, q)?;
    if r.is_zero() {
        return Err(Error::LineContained);
    }
    let (alpha, beta) = if at.equiv(p) {
        (Scalar::one(), Scalar::zero())
    } else if at.equiv(q) {
        (Scalar::zero(), Scalar::one())
    } else {
        return Err(Error::DegenerateInput(
            "multiplicity is measured at one of the two line points".into(),
        ));
    };
    Ok(r.multiplicity(&alpha, &beta))
}

/// Order of contact of the line `l` with `f = 0` at `a`.
pub fn contact_order(f: &HomPoly, l: &Line, a: &Point) -> Result<usize> {
    if l.is_zero() || !l.contains(a) {
        return Err(Error::DegenerateInput(
            "the point is not on the line".into(),
        ));
    }
    let q = other_point_on(l, a).expect("a nonzero line has two distinct points");
    root_multiplicity(f, a, &q, a)
}

/// Matrix of second partial derivatives.
pub fn hessian(f: &HomPoly) -> [[HomPoly; 3]; 3] {
    let g = f.gradient();
    [0, 1, 2].map(|i| [0, 1, 2].map(|j| g[i].derivative(j)))
}

pub fn hessian_determinant(f: &HomPoly, p: &Point) -> Scalar {
    let h = hessian(f);
    let m: Vec<[Scalar; 3]> = h
        .iter()
        .map(|row| row.clone().map(|e| e.evaluate(p)))
        .collect();
    dot(&m[0], &cross(&m[1], &m[2]))
}

/// Hessian criterion: a smooth point of a cubic is a flex iff the Hessian
/// determinant vanishes there.
pub fn hessian_flex_oracle(f: &HomPoly, p: &Point) -> bool {
    hessian_determinant(f, p).is_zero()
}

/// Point `s·p + t·q` for a root `(s:t)`.
fn point_at(p: &Point, q: &Point, root: &(Scalar, Scalar)) -> Point {
    p.combine(&root.0, q, &root.1).canonical()
}

fn remaining_root(r: &BinaryForm, known: &[(Scalar, Scalar)]) -> Result<(Scalar, Scalar)> {
    if r.is_zero() {
        return Err(Error::LineContained);
    }
    let mut f = r.clone();
    for (alpha, beta) in known {
        f = f
            .deflate(alpha, beta)
            .ok_or_else(|| Error::NotOnCurve("a known intersection".into()))?;
    }
    f.linear_root()
        .ok_or_else(|| Error::DegenerateInput("restriction is not of the expected degree".into()))
}

/// Third intersection of line `pq` with the cubic, by restricting and
/// dividing out the roots at `p` and `q`.
pub fn chord_third_root(f: &HomPoly, p: &Point, q: &Point) -> Result<Point> {
    let r = restrict_to_line(f, p, q)?;
    let root = remaining_root(
        &r,
        &[
            (Scalar::one(), Scalar::zero()),
            (Scalar::zero(), Scalar::one()),
        ],
    )?;
    Ok(point_at(p, q, &root))
}

/// Third intersection of the gradient tangent at `a` with the cubic, after
/// dividing out the double root at `a`. Equals `a` at a flex.
pub fn tangent_third_root(f: &HomPoly, a: &Point) -> Result<Point> {
    let t = gradient_tangent(f, a);
    if t.is_zero() {
        return Err(Error::DegenerateInput(
            "singular point has no tangent".into(),
        ));
    }
    let q = other_point_on(&t, a).expect("a nonzero line has two distinct points");
    let r = restrict_to_line(f, a, &q)?;
    let at_a = (Scalar::one(), Scalar::zero());
    let root = remaining_root(&r, &[at_a.clone(), at_a])?;
    Ok(point_at(a, &q, &root))
}

/// Second intersection of the line `known q` with the conic `f = 0`, after
/// dividing out the root at `known`.
pub fn conic_second_root(f: &HomPoly, known: &Point, q: &Point) -> Result<Point> {
    let r = restrict_to_line(f, known, q)?;
    let root = remaining_root(&r, &[(Scalar::one(), Scalar::zero())])?;
    Ok(point_at(known, q, &root))
}

/// Symmetric matrix `M` with `2·f(x) = xᵀ M x` for a conic `f`.
pub fn conic_matrix(f: &HomPoly) -> [[Scalar; 3]; 3] {
    assert_eq!(f.degree(), 2, "conic matrix of a non-quadratic form");
    let mut m: [[Scalar; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = f.coefficient(&e);
            m[i][j] = if i == j { &c * &Scalar::from(2) } else { c };
        }
    }
    m
}

/// Rank of the conic matrix: 3 smooth, 2 a line pair, 1 a double line.
pub fn conic_rank(f: &HomPoly) -> usize {
    let m = conic_matrix(f);
    matrix_rank(&m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Whether six points lie on a common conic.
pub fn six_on_a_conic(points: &[Point; 6]) -> bool {
    rank_of_points(points, 2) < 6
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> HomPoly {
        HomPoly::variable(i)
    }

    fn cube(i: usize) -> HomPoly {
        &(&x(i) * &x(i)) * &x(i)
    }

    fn fermat() -> HomPoly {
        &(&cube(0) + &cube(1)) + &cube(2)
    }

    #[test]
    fn membership() {
        let f = fermat();
        assert!(cubic_membership(&f, &Point::new(1, -1, 0)).unwrap());
        assert!(!cubic_membership(&f, &Point::new(1, 1, 1)).unwrap());
        assert_eq!(
            cubic_membership(&HomPoly::zero(3), &Point::new(1, 0, 0)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn node_has_zero_gradient() {
        // x2 x0^2 - x1^2 (x0 + x2) has a node at [0:0:1]
        let f = &(&(&x(2) * &x(0)) * &x(0)) - &(&(&x(1) * &x(1)) * &(&x(0) + &x(2)));
        assert!(gradient_tangent(&f, &Point::new(0, 0, 1)).is_zero());
    }

    #[test]
    fn euler_relation() {
        let f = &fermat() + &(&(&x(0) * &x(1)) * &x(2)).scale(&Scalar::from(-5));
        let p = Point::new(3, -2, 7);
        let g = gradient_tangent(&f, &p);
        assert_eq!(
            dot(g.coeffs(), p.coords()),
            &Scalar::from(3) * &f.evaluate(&p)
        );
    }

    #[test]
    fn fermat_flexes() {
        let f = fermat();
        let p = Point::new(1, -1, 0);
        assert!(hessian_flex_oracle(&f, &p));
        let t = gradient_tangent(&f, &p);
        assert_eq!(contact_order(&f, &t, &p).unwrap(), 3);
        assert!(tangent_third_root(&f, &p).unwrap().equiv(&p));
        // x0^3 + x1^3 = 9 x2^3 at [1:2:1] is not a flex
        let g = &(&cube(0) + &cube(1)) - &cube(2).scale(&Scalar::from(9));
        let q = Point::new(1, 2, 1);
        assert!(g.evaluate(&q).is_zero());
        assert!(!hessian_flex_oracle(&g, &q));
        let tq = gradient_tangent(&g, &q);
        assert_eq!(contact_order(&g, &tq, &q).unwrap(), 2);
        let w = tangent_third_root(&g, &q).unwrap();
        assert!(g.evaluate(&w).is_zero());
        assert!(tq.contains(&w));
    }

    #[test]
    fn chord_root_is_on_curve() {
        let g = &(&cube(0) + &cube(1)) - &cube(2).scale(&Scalar::from(9));
        let p = Point::new(1, 2, 1);
        let q = Point::new(2, 1, 1);
        let r = chord_third_root(&g, &p, &q).unwrap();
        assert!(g.evaluate(&r).is_zero());
        assert!(crate::geom::collinear(&p, &q, &r));
        assert!(r.equiv(&Point::new(1, -1, 0)));
        assert_eq!(root_multiplicity(&g, &p, &q, &p).unwrap(), 1);
    }

    #[test]
    fn line_inside_curve() {
        let f = &(&x(0) * &x(1)) * &x(2);
        let r = root_multiplicity(
            &f,
            &Point::new(1, 0, 0),
            &Point::new(0, 1, 0),
            &Point::new(1, 0, 0),
        );
        assert_eq!(r, Err(Error::LineContained));
    }

    #[test]
    fn conic_ranks() {
        let smooth = &(&x(0) * &x(1)) - &(&x(2) * &x(2));
        assert_eq!(conic_rank(&smooth), 3);
        assert_eq!(conic_rank(&(&x(0) * &x(1))), 2);
        let l = &x(0) + &x(2);
        assert_eq!(conic_rank(&(&l * &l)), 1);
        let q = conic_second_root(&smooth, &Point::new(1, 1, 1), &Point::new(1, 0, 0)).unwrap();
        assert!(smooth.evaluate(&q).is_zero());
        assert!(q.equiv(&Point::new(1, 0, 0)));
    }

    #[test]
    fn six_points_on_a_conic() {
        // x0 x1 = x2^2 contains [t^2 : 1 : t]
        let on: [Point; 6] = [0, 1, 2, 3, -1, 5].map(|t| Point::new(t * t, 1, t));
        assert!(six_on_a_conic(&on));
        let mut off = on.clone();
        off[5] = Point::new(1, 2, 3);
        assert!(!six_on_a_conic(&off));
    }
}
