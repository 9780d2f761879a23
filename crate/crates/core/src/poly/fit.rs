use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{monomial_at, monomials, HomPoly};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::{primitive, Scalar};

/// Integer rows with common content removed.
fn integer_rows(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            primitive(r)
                .into_iter()
                .map(|s| s.numer().clone())
                .collect()
        })
        .collect()
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Fraction-free reduction to reduced echelon form. Returns the pivot
/// columns; `rows` is left reduced, pivot row `i` owning column `pivots[i]`.
fn reduce(rows: &mut [Vec<BigInt>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let pivot_row = rows[r].clone();
        let p = &pivot_row[col];
        for (j, row) in rows.iter_mut().enumerate() {
            if j == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * p - y * &f;
            }
            remove_content(row);
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact rank of a rational matrix.
pub fn matrix_rank(rows: &[Vec<Scalar>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut m = integer_rows(rows);
    reduce(&mut m, ncols).len()
}

fn evaluation_matrix(points: &[Point], degree: u32) -> Vec<Vec<Scalar>> {
    let mons = monomials(degree);
    points
        .iter()
        .map(|p| mons.iter().map(|m| monomial_at(m, p)).collect())
        .collect()
}

/// Rank of the monomial-evaluation matrix of `points` in the given degree.
pub fn rank_of_points(points: &[Point], degree: u32) -> usize {
    matrix_rank(&evaluation_matrix(points, degree))
}

/// The unique curve of the given degree through `points`, found as the
/// one-dimensional nullspace of the monomial-evaluation matrix. The result
/// is a primitive integer form.
pub fn nullspace_fit(points: &[Point], degree: u32) -> Result<HomPoly> {
    let ncols = monomials(degree).len();
    let mut m = integer_rows(&evaluation_matrix(points, degree));
    let pivots = reduce(&mut m, ncols);
    let rank = pivots.len();
    if rank == ncols {
        return Err(Error::NoCurve {
            degree,
            count: points.len(),
        });
    }
    if rank + 1 < ncols {
        return Err(Error::RankDeficient {
            rank,
            needed: ncols - 1,
        });
    }
    let free = (0..ncols).find(|c| !pivots.contains(c)).unwrap();
    let mut v = vec![Scalar::zero(); ncols];
    v[free] = Scalar::one();
    for (i, &pc) in pivots.iter().enumerate() {
        let num = -&m[i][free];
        let den = &m[i][pc];
        if den.is_negative() {
            v[pc] = Scalar::ratio(-num, -den.clone());
        } else {
            v[pc] = Scalar::ratio(num, den.clone());
        }
    }
    Ok(HomPoly::from_coefficients(degree, &primitive(&v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conic_through_five_points() {
        let pts = [
            Point::new(1, 0, 0),
            Point::new(0, 1, 0),
            Point::new(0, 0, 1),
            Point::new(1, 1, 1),
            Point::new(1, 2, 3),
        ];
        let c = nullspace_fit(&pts, 2).unwrap();
        assert_eq!(c.degree(), 2);
        for p in &pts {
            assert!(c.evaluate(p).is_zero());
        }
        // through the coordinate triangle: no square terms
        assert!(c.coefficient(&[2, 0, 0]).is_zero());
        assert!(c.coefficient(&[0, 2, 0]).is_zero());
        assert!(c.coefficient(&[0, 0, 2]).is_zero());
        // hand solution: 3 x0x1 - 4 x0x2 + x1x2 up to scale
        let want = HomPoly::from_coefficients(2, &[0, 3, -4, 0, 1, 0].map(Scalar::from));
        assert!(c.projectively_equal(&want));
    }

    #[test]
    fn too_many_collinear_points_are_rank_deficient() {
        // Six points on x2 = 0 impose only four conditions on cubics.
        let mut pts: Vec<Point> = (0..6).map(|i| Point::new(1, i, 0)).collect();
        pts.extend([
            Point::new(0, 0, 1),
            Point::new(1, 1, 1),
            Point::new(2, 1, 5),
        ]);
        match nullspace_fit(&pts, 3) {
            Err(Error::RankDeficient { rank, needed }) => {
                assert_eq!(needed, 9);
                assert_eq!(rank, 7);
            }
            other => panic!("expected rank deficiency, got {other:?}"),
        }
    }

    #[test]
    fn six_generic_points_have_no_conic() {
        let pts: Vec<Point> = [(0, 0), (1, 0), (0, 1), (2, 3), (5, -1), (-3, 7)]
            .iter()
            .map(|&(x, y)| Point::affine(x, y))
            .collect();
        assert!(matches!(nullspace_fit(&pts, 2), Err(Error::NoCurve { .. })));
        assert_eq!(rank_of_points(&pts, 2), 6);
    }

    #[test]
    fn rank_of_small_matrices() {
        let m = vec![
            vec![Scalar::from(1), Scalar::from(2)],
            vec![Scalar::ratio(1, 2), Scalar::from(1)],
        ];
        assert_eq!(matrix_rank(&m), 1);
        assert_eq!(matrix_rank(&[]), 0);
    }
}
