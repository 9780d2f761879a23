//! Random inputs shared by the acceptance and property tests.

#![allow(dead_code)]

use grassmann::geom::{join, meet};
use grassmann::{Environment, Line, Point};
use rand::seq::SliceRandom;
use rand::Rng;

pub const POINTS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
pub const LINES: [&str; 4] = ["A", "B", "C", "D"];

pub fn point(rng: &mut impl Rng) -> Point {
    loop {
        let p = Point::new(
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
            rng.gen_range(-9..=9),
        );
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn line(rng: &mut impl Rng) -> Line {
    point(rng).dual()
}

/// A point on `l` other than the zero point.
pub fn point_on(rng: &mut impl Rng, l: &Line) -> Point {
    loop {
        let p = meet(l, &line(rng));
        if !p.is_zero() {
            return p;
        }
    }
}

/// A line through `p`.
pub fn line_through(rng: &mut impl Rng, p: &Point) -> Line {
    loop {
        let l = join(p, &point(rng));
        if !l.is_zero() {
            return l;
        }
    }
}

/// Points `a`..`f` and lines `A`..`D` drawn at random.
pub fn environment(rng: &mut impl Rng) -> Environment {
    let mut env = Environment::new();
    for n in POINTS {
        env.bind(n, point(rng)).unwrap();
    }
    for n in LINES {
        env.bind(n, line(rng)).unwrap();
    }
    env
}

/// Six distinct points on a random nondegenerate conic: the image of
/// `[s^2+t^2 : 2st : s^2-t^2]` on `x0^2 = x1^2 + x2^2` under an invertible
/// integer matrix.
pub fn six_on_conic(rng: &mut impl Rng) -> [Point; 6] {
    let m = loop {
        let m: [[i64; 3]; 3] =
            std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-5..=5)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            break m;
        }
    };
    let mut out: Vec<Point> = Vec::new();
    while out.len() < 6 {
        let (s, t): (i64, i64) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        if s == 0 && t == 0 {
            continue;
        }
        let v = [s * s + t * t, 2 * s * t, s * s - t * t];
        let w: [i64; 3] = std::array::from_fn(|i| (0..3).map(|j| m[i][j] * v[j]).sum());
        let p = Point::new(w[0], w[1], w[2]);
        if !out.iter().any(|q| q.equiv(&p)) {
            out.push(p);
        }
    }
    out.try_into().unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K {
    P,
    L,
    S,
}

/// Ways to obtain each kind as a product of two.
fn factors(k: K) -> &'static [(K, K)] {
    match k {
        K::P => &[(K::L, K::L), (K::S, K::P), (K::P, K::S)],
        K::L => &[(K::P, K::P), (K::S, K::L), (K::L, K::S)],
        K::S => &[(K::P, K::L), (K::L, K::P)],
    }
}

/// A random expression of kind `k` over `a`..`f`, `A`..`D` and `x`,
/// written with juxtaposition, parentheses and periods.
pub fn typed_expression(rng: &mut impl Rng, k: K, depth: u32) -> String {
    if depth == 0 || (k != K::S && rng.gen_bool(0.3)) {
        match k {
            K::P if rng.gen_bool(0.25) => return "x".into(),
            K::P => return POINTS.choose(rng).unwrap().to_string(),
            K::L => return LINES.choose(rng).unwrap().to_string(),
            K::S => {}
        }
    }
    let depth = depth.saturating_sub(1);
    let &(l, r) = factors(k).choose(rng).unwrap();
    let left = typed_expression(rng, l, depth);
    let right = typed_expression(rng, r, depth);
    if rng.gen_bool(0.3) {
        format!("({left}.{right})")
    } else if right.len() == 1 {
        // chains fold from the left, so only the right factor needs brackets
        format!("{left}{right}")
    } else {
        format!("{left}({right})")
    }
}

/// A syntactically well-formed string, not necessarily well typed:
/// subscripted names, nested groups, periods, spaces and `=0`.
pub fn fuzz_string(rng: &mut impl Rng) -> String {
    fn name(rng: &mut impl Rng) -> String {
        if rng.gen_bool(0.15) {
            return "x".into();
        }
        let letters: &[u8] = if rng.gen_bool(0.6) {
            b"abcdefghijklmnopqrstuvwyz"
        } else {
            b"ABCDEFGHIJKLMNOPQRSTUVWXYZ"
        };
        let base = *letters.choose(rng).unwrap() as char;
        if rng.gen_bool(0.2) {
            format!("{base}_{}", rng.gen_range(0..12))
        } else {
            base.to_string()
        }
    }
    fn items(rng: &mut impl Rng, depth: u32) -> String {
        let n = if rng.gen_bool(0.5) {
            1
        } else {
            rng.gen_range(2..=3)
        };
        (0..n)
            .map(|_| chain(rng, depth))
            .collect::<Vec<_>>()
            .join(if rng.gen_bool(0.2) { " . " } else { "." })
    }
    fn chain(rng: &mut impl Rng, depth: u32) -> String {
        let n = rng.gen_range(1..=4);
        let mut s = String::new();
        for _ in 0..n {
            if depth > 0 && rng.gen_bool(0.25) {
                s.push('(');
                s.push_str(&items(rng, depth - 1));
                s.push(')');
            } else {
                s.push_str(&name(rng));
            }
            if rng.gen_bool(0.05) {
                s.push(' ');
            }
        }
        s
    }
    let mut s = items(rng, 3);
    if rng.gen_bool(0.2) {
        s.push_str(if rng.gen_bool(0.5) { "=0" } else { " = 0" });
    }
    s
}
