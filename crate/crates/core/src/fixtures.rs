//! Deterministic test configurations: random general-position scenes,
//! extra cubic points by chords, and cubics with known rational flexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::{third_point_general, NinePoints};
use crate::error::{Error, Result};
use crate::geom::{collinear, Point};
use crate::oracle::{chord_third_root, hessian_flex_oracle, tangent_third_root};
use crate::poly::{nullspace_fit, HomPoly};
use crate::scalar::Scalar;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `count` points `[1:x:y]` with integer `x, y` in `[-range, range]`, no
/// three collinear. Candidates that would break general position are
/// redrawn.
pub fn random_general_position(rng: &mut impl Rng, count: usize, range: i64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(count);
    let mut draws = 0;
    while out.len() < count {
        draws += 1;
        assert!(
            draws < 100_000,
            "grid too small for {count} points in general position"
        );
        let p = Point::affine(rng.gen_range(-range..=range), rng.gen_range(-range..=range));
        if out.iter().any(|q| q.equiv(&p)) {
            continue;
        }
        let ok =
            (0..out.len()).all(|i| (i + 1..out.len()).all(|j| !collinear(&out[i], &out[j], &p)));
        if ok {
            out.push(p);
        }
    }
    out
}

/// Nine general-position grid points from a seed.
pub fn random_nine(seed: u64) -> NinePoints {
    let pts = random_general_position(&mut rng(seed), 9, 10);
    NinePoints::from_slice(&pts).expect("generator keeps general position")
}

/// Further rational points on the cubic through `nine`, each the third
/// point of a chord between two earlier points, taken in order of pairs.
pub fn chord_bootstrap(nine: &NinePoints, count: usize) -> Result<Vec<Point>> {
    let mut known: Vec<Point> = nine.points().to_vec();
    let mut extra = Vec::new();
    'outer: for i in 0..9 {
        for j in i + 1..9 {
            if extra.len() == count {
                break 'outer;
            }
            let (p, q) = (known[i].clone(), known[j].clone());
            let r = match third_point_general(&known[..9], &p, &q) {
                Ok(o) => o.value.canonical(),
                Err(Error::InsufficientPoints(_)) => continue,
                Err(e) => return Err(e),
            };
            if known.iter().any(|k| k.equiv(&r)) {
                continue;
            }
            known.push(r.clone());
            extra.push(r);
        }
    }
    Ok(extra)
}

/// A point near `p` that is not on the cubic `f`: `p` moved by small
/// multiples of `x0` along the other two coordinates.
pub fn off_curve_near(f: &HomPoly, p: &Point) -> Point {
    let c = p.coords();
    let unit = if c[0].is_zero() {
        Scalar::one()
    } else {
        c[0].clone()
    };
    for d in 1i64.. {
        for step in [[0, d, 0], [0, 0, d], [0, d, d], [0, -d, 0], [0, 0, -d]] {
            let q = Point([0, 1, 2].map(|i| &c[i] + &(&Scalar::from(step[i]) * &unit)));
            if !q.is_zero() && !f.evaluate(&q).is_zero() {
                return q;
            }
        }
    }
    unreachable!()
}

/// A cubic with a known rational flex and nine of its points in general
/// position, the flex first.
#[derive(Debug, Clone)]
pub struct FlexFixture {
    pub name: String,
    pub cubic: HomPoly,
    pub flex: Point,
    pub points: Vec<Point>,
}

fn height(p: &Point) -> usize {
    p.coords()
        .iter()
        .map(Scalar::height_digits)
        .max()
        .unwrap_or(0)
}

/// `x0^3 + x1^3 - k x2^3`.
pub fn fermat_cubic(k: i64) -> HomPoly {
    let mut f = HomPoly::zero(3);
    f.add_term([3, 0, 0], Scalar::one());
    f.add_term([0, 3, 0], Scalar::one());
    f.add_term([0, 0, 3], Scalar::from(-k));
    f
}

/// Grows a set of curve points by chords and tangents (oracle arithmetic)
/// and keeps nine in general position of smallest height, `first` leading.
fn grow_nine(f: &HomPoly, first: &Point, seeds: &[Point]) -> Option<Vec<Point>> {
    let mut pts: Vec<Point> = vec![first.canonical()];
    for s in seeds {
        let s = s.canonical();
        if !pts.contains(&s) {
            pts.push(s);
        }
    }
    for _ in 0..8 {
        let mut new: Vec<Point> = Vec::new();
        let push = |p: Point, new: &mut Vec<Point>, pts: &[Point]| {
            let p = p.canonical();
            if !pts.contains(&p) && !new.contains(&p) {
                new.push(p);
            }
        };
        for p in &pts {
            if let Ok(m) = tangent_third_root(f, p) {
                push(m, &mut new, &pts);
            }
        }
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if let Ok(m) = chord_third_root(f, &pts[i], &pts[j]) {
                    push(m, &mut new, &pts);
                }
            }
        }
        new.sort_by_key(height);
        pts.extend(new.into_iter().take(4));
        let chosen = pick_general(&pts, first);
        if chosen.len() == 9 {
            return Some(chosen);
        }
    }
    None
}

fn pick_general(pts: &[Point], first: &Point) -> Vec<Point> {
    let mut sorted: Vec<&Point> = pts.iter().filter(|p| !p.equiv(first)).collect();
    sorted.sort_by_key(|p| height(p));
    let mut chosen = vec![first.canonical()];
    for p in sorted {
        if chosen.len() == 9 {
            break;
        }
        let ok = (0..chosen.len())
            .all(|i| (i + 1..chosen.len()).all(|j| !collinear(&chosen[i], &chosen[j], p)));
        if ok {
            chosen.push(p.clone());
        }
    }
    chosen
}

/// Maps points through an integer matrix; the image cubic is refitted.
fn transform(m: &[[i64; 3]; 3], p: &Point) -> Point {
    let c = p.coords();
    Point([0, 1, 2].map(|i| (0..3).map(|j| &Scalar::from(m[i][j]) * &c[j]).sum())).canonical()
}

/// Flex fixtures on the curves `x0^3 + x1^3 = k x2^3`, whose point
/// `[1:-1:0]` is a flex, and on projective images of some of them.
pub fn fermat_fixtures() -> Vec<FlexFixture> {
    let seeds: [(i64, [i64; 3]); 11] = [
        (7, [2, -1, 1]),
        (9, [2, 1, 1]),
        (19, [3, -2, 1]),
        (26, [3, -1, 1]),
        (28, [3, 1, 1]),
        (35, [3, 2, 1]),
        (37, [4, -3, 1]),
        (63, [4, -1, 1]),
        (65, [4, 1, 1]),
        (13, [7, 2, 3]),
        (20, [19, 1, 7]),
    ];
    let images: [[[i64; 3]; 3]; 3] = [
        [[1, 1, 0], [0, 1, 1], [1, 0, 1]],
        [[2, 1, 0], [1, 0, 1], [0, 1, 3]],
        [[1, 0, 2], [1, 3, 0], [0, 1, 1]],
    ];
    let flex = Point::new(1, -1, 0);
    let mut out = Vec::new();
    for (idx, (k, s)) in seeds.iter().enumerate() {
        let f = fermat_cubic(*k);
        let p = Point::new(s[0], s[1], s[2]);
        let swapped = Point::new(s[1], s[0], s[2]);
        debug_assert!(f.evaluate(&p).is_zero());
        let Some(points) = grow_nine(&f, &flex, &[p, swapped]) else {
            continue;
        };
        out.push(FlexFixture {
            name: format!("x0^3 + x1^3 = {k} x2^3"),
            cubic: f.clone(),
            flex: flex.clone(),
            points: points.clone(),
        });
        if idx < images.len() {
            let m = &images[idx];
            let moved: Vec<Point> = points.iter().map(|q| transform(m, q)).collect();
            let Ok(g) = nullspace_fit(&moved, 3) else {
                continue;
            };
            let chosen = pick_general(&moved, &moved[0]);
            if chosen.len() == 9 && hessian_flex_oracle(&g, &moved[0]) {
                out.push(FlexFixture {
                    name: format!("image {} of x0^3 + x1^3 = {k} x2^3", idx + 1),
                    cubic: g,
                    flex: moved[0].clone(),
                    points: chosen,
                });
            }
        }
    }
    out
}

/// The curve `y^2 + y = x^3 - 7x + 6` with affine points `[1:x:y]`, its
/// flex `[0:0:1]` at infinity, and its integral points with
/// `|x| <= x_max`, ordered by `|x|` then `y`.
pub fn weierstrass_fixture(x_max: i64) -> (HomPoly, Point, Vec<Point>) {
    // x0 x2^2 + x0^2 x2 - x1^3 + 7 x0^2 x1 - 6 x0^3
    let mut f = HomPoly::zero(3);
    f.add_term([1, 0, 2], Scalar::one());
    f.add_term([2, 0, 1], Scalar::one());
    f.add_term([0, 3, 0], Scalar::from(-1));
    f.add_term([2, 1, 0], Scalar::from(7));
    f.add_term([3, 0, 0], Scalar::from(-6));
    let o = Point::new(0, 0, 1);
    let mut pts = Vec::new();
    for x in -x_max..=x_max {
        let rhs = x as i128 * x as i128 * x as i128 - 7 * x as i128 + 6;
        let disc = 1 + 4 * rhs;
        if disc < 0 {
            continue;
        }
        let r = (disc as f64).sqrt() as i128;
        for s in [r - 1, r, r + 1] {
            if s >= 0 && s * s == disc {
                for y in [(s - 1) / 2, (-s - 1) / 2] {
                    let p = Point::affine(x, y as i64);
                    if !pts.contains(&p) {
                        pts.push(p);
                    }
                }
            }
        }
    }
    pts.sort_by_key(|p: &Point| {
        let c = p.coords();
        (c[1].abs(), c[2].clone())
    });
    (f, o, pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scenes_are_deterministic() {
        assert_eq!(random_nine(7), random_nine(7));
        assert_ne!(random_nine(7), random_nine(8));
    }

    #[test]
    fn bootstrap_points_lie_on_the_cubic() {
        let nine = random_nine(1);
        let f = nullspace_fit(nine.points(), 3).unwrap();
        let extra = chord_bootstrap(&nine, 2).unwrap();
        assert_eq!(extra.len(), 2);
        for p in &extra {
            assert!(f.evaluate(p).is_zero());
        }
        let off = off_curve_near(&f, &extra[0]);
        assert!(!f.evaluate(&off).is_zero());
    }

    #[test]
    fn fermat_fixtures_have_flexes() {
        let fx = fermat_fixtures();
        assert!(fx.len() >= 10, "only {} fixtures", fx.len());
        for x in &fx {
            assert_eq!(x.points.len(), 9, "{}", x.name);
            assert!(x.points[0].equiv(&x.flex));
            assert!(hessian_flex_oracle(&x.cubic, &x.flex), "{}", x.name);
            for p in &x.points {
                assert!(x.cubic.evaluate(p).is_zero(), "{}", x.name);
            }
            NinePoints::from_slice(&x.points).unwrap();
        }
    }

    #[test]
    fn weierstrass_points() {
        let (f, o, pts) = weierstrass_fixture(100);
        assert!(f.evaluate(&o).is_zero());
        assert!(hessian_flex_oracle(&f, &o));
        assert!(pts.len() >= 20, "{}", pts.len());
        for p in &pts {
            assert!(f.evaluate(p).is_zero());
        }
    }
}
