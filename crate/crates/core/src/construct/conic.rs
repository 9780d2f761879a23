use super::{
    fit_nine_points, fit_permuting, search_labellings, third_point_general,
    third_point_on_chord_ab, Diagnostic, NinePoints, Outcome, Recipe,
};
use crate::error::{Error, Result};
use crate::expr::{eval_str, Environment};
use crate::geom::{collinear, join, meet, GeomObject, Line, Point};

/// The conic through `a`, `c`, `AB`, `abB` and `bcA`.
pub const CONIC: &str = "xaAbBcx";

/// Five points on the conic `xaAbBcx=0`: `a`, `c`, `AB`, `abB`, `bcA`.
///
/// Requires `a`, `b`, `c` not collinear, none of them on `A` or `B`, and
/// `A ≢ B`.
pub fn conic_five_points(
    a: &Point,
    b: &Point,
    c: &Point,
    la: &Line,
    lb: &Line,
) -> Result<[Point; 5]> {
    if [a, b, c].iter().any(|p| p.is_zero()) || la.is_zero() || lb.is_zero() {
        return Err(Error::Hypothesis("zero point or line".into()));
    }
    if collinear(a, b, c) {
        return Err(Error::Hypothesis("a, b, c are collinear".into()));
    }
    for (n, p) in [("a", a), ("b", b), ("c", c)] {
        for (m, l) in [("A", la), ("B", lb)] {
            if l.contains(p) {
                return Err(Error::Hypothesis(format!("{n} lies on {m}")));
            }
        }
    }
    if la.equiv(lb) {
        return Err(Error::Hypothesis("A and B coincide".into()));
    }
    let env = Environment::new()
        .with("a", a.clone())?
        .with("b", b.clone())?
        .with("c", c.clone())?
        .with("A", la.clone())?
        .with("B", lb.clone())?;
    let mut out = Vec::with_capacity(5);
    for text in ["a", "c", "AB", "abB", "bcA"] {
        let p = eval_str(text, &env)?;
        out.push(p.as_point().unwrap().canonical());
    }
    Ok(out.try_into().unwrap())
}

/// The meets `(ab_1)(a_1b)`, `(ac_1)(a_1c)`, `(bc_1)(b_1c)`. They are
/// collinear when the six points lie on a conic. Repeated points give zero
/// points rather than errors.
pub fn pascal_points(
    a: &Point,
    b: &Point,
    c: &Point,
    a_1: &Point,
    b_1: &Point,
    c_1: &Point,
) -> [Point; 3] {
    let m = |p: &Point, q: &Point, r: &Point, s: &Point| meet(&join(p, q), &join(r, s));
    [m(a, b_1, a_1, b), m(a, c_1, a_1, c), m(b, c_1, b_1, c)]
}

/// Every ordering of four of `pts`.
fn arrangements(pts: &[Point]) -> Vec<[Point; 4]> {
    let n = pts.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let idx = [i, j, k, l];
                    let distinct = (0..4).all(|u| (u + 1..4).all(|v| idx[u] != idx[v]));
                    if distinct {
                        out.push(idx.map(|t| pts[t].clone()));
                    }
                }
            }
        }
    }
    out
}

/// Second point where the line `l` through `known` meets the conic through
/// `points` (at least five of them distinct, repeats and zero points are
/// skipped), by Pascal's theorem on the hexagon `s p_1 p_2 p_3 p_4 p_5` with
/// `p_1 = known`: `u = L.p_3p_4`, `v = p_1p_2.p_4p_5`, `w = p_2p_3.uv`,
/// `s = L.p_5w`.
pub fn conic_line_second_intersection(
    points: &[Point],
    l: &Line,
    known: &Point,
) -> Result<Outcome<Point>> {
    if l.is_zero() || known.is_zero() || !l.contains(known) {
        return Err(Error::Hypothesis(
            "the known point must lie on the line".into(),
        ));
    }
    let mut others: Vec<Point> = Vec::new();
    for p in points {
        if !p.is_zero() && !p.equiv(known) && !others.iter().any(|o| o.equiv(p)) {
            others.push(p.canonical());
        }
    }
    let mut r = Recipe::new(
        Environment::new()
            .with("L", l.clone())?
            .with("p_1", known.clone())?,
    );
    let on_line: Vec<&Point> = others.iter().filter(|p| l.contains(p)).collect();
    match on_line.len() {
        0 => {}
        1 => {
            let x = on_line[0].clone();
            r.set("s", "conic point on L", GeomObject::Point(x.clone()))?;
            return Ok(r.finish(x));
        }
        _ => return Err(Error::DegenerateInput("the line lies on the conic".into())),
    }
    if others.len() < 4 {
        return Err(Error::InsufficientPoints(format!(
            "need four conic points besides the known one, have {}",
            others.len()
        )));
    }
    for arr in arrangements(&others) {
        let mut t = r.clone();
        for (n, p) in ["p_2", "p_3", "p_4", "p_5"].iter().zip(&arr) {
            t.set(n, "", GeomObject::Point(p.clone()))?;
        }
        let attempt = (|| -> Result<Point> {
            t.step("u", "L.p_3p_4")?;
            t.step("v", "p_1p_2.p_4p_5")?;
            t.step("w", "p_2p_3.uv")?;
            t.point_step("s", "L.p_5w")
        })();
        match attempt {
            Ok(x) => {
                if x.equiv(known) {
                    t.note(Diagnostic::TangentLine);
                }
                return Ok(t.finish(x));
            }
            Err(Error::DegenerateIntermediate { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InsufficientPoints(
        "every ordering of the conic points degenerates".into(),
    ))
}

/// The sixth common point of the cubic through nine points and the conic
/// through `a`, `c`, `d`, `e`, `f`.
///
/// With `A = de`, `B = fe`, `a_1 = af.dc` the conic is `xaAa_1Bcx=0`. The
/// cubic `(xa_1Aa.xb_1CkBb.xc)=0` passes through `e`, `f`, `c`, `a_1`,
/// `b_1`, `baAa_1.bc`, `g_1`, `h_1`, `i_1`; refitting it with `e` and `f`
/// in the first slots gives `y`, its third point on `ef`, and then
/// `z = yc.ya_1Aa`.
pub fn conic_cubic_sixth(nine: &NinePoints) -> Result<Outcome<Point>> {
    // only b, g, h, i may move without changing the conic
    let trace = fit_permuting(nine, &[1, 6, 7, 8])?;
    let mut r = Recipe::new(trace.environment());
    for (name, text) in [("A", "de"), ("B", "fe"), ("a_1", "af.dc")] {
        let v = r.eval(text)?;
        let same = match (&v, r.env().get(name)) {
            (GeomObject::Line(l), Some(GeomObject::Line(m))) => l.equiv(m),
            (GeomObject::Point(p), Some(GeomObject::Point(q))) => p.equiv(q),
            _ => false,
        };
        r.check(format!("{name} = {text}"), same);
    }
    let conic = "xaAa_1Bcx";
    for name in ["a", "c", "d", "e", "f"] {
        let ok = r.vanishes_at(conic, &r.point(name)?)?;
        r.check(format!("{conic}=0 passes through {name}"), ok);
    }

    let aux = "(xa_1Aa.xb_1CkBb.xc)";
    r.step("n", "baAa_1.bc")?;
    let names = ["e", "f", "c", "a_1", "b_1", "n", "g_1", "h_1", "i_1"];
    let mut aux_points = Vec::new();
    for name in names {
        let p = r.point(name)?;
        let ok = r.vanishes_at(aux, &p)?;
        if !ok && (name == "e" || name == "f") {
            return Err(Error::Hypothesis(format!("{aux}=0 misses {name}")));
        }
        r.check(format!("{aux}=0 passes through {name}"), ok);
        aux_points.push(p);
    }

    // refit the auxiliary cubic with e, f first, rotating the other seven
    // through the slots until the construction does not degenerate
    let (ef, rest) = aux_points.split_at(2);
    let mut found = None;
    let mut last = None;
    for shift in 0..rest.len() {
        let mut order = rest.to_vec();
        order.rotate_left(shift);
        let res = search_labellings(&order, ef, |n9, _| {
            let t = fit_nine_points(n9)?;
            third_point_on_chord_ab(&t.params)
        });
        match res {
            Ok(o) => {
                found = Some(o);
                break;
            }
            Err(e @ Error::InsufficientPoints(_)) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    let y = match found {
        Some(o) => {
            r.absorb("auxiliary refit", &o);
            o.value
        }
        None => return Err(last.unwrap()),
    };
    r.set(
        "y",
        "third point of ef on the auxiliary cubic",
        GeomObject::Point(y.clone()),
    )?;
    r.check(format!("{aux}=0 passes through y"), r.vanishes_at(aux, &y)?);
    let z = r.point_step("z", "yc.ya_1Aa")?;
    r.check(
        format!("{conic}=0 passes through z"),
        r.vanishes_at(conic, &z)?,
    );
    r.check("z lies on the cubic", trace.params.contains(&z)?);
    for name in ["a", "c", "d", "e", "f"] {
        if z.equiv(&r.point(name)?) {
            r.note(Diagnostic::Coincidence(name.into()));
        }
    }
    Ok(r.finish(z))
}

/// The same point by chords: `r = [c,d]`, `s = [e,f]`, `t = [r,s]`,
/// `z = [a,t]`.
pub fn conic_cubic_sixth_via_89(nine: &NinePoints) -> Result<Outcome<Point>> {
    let known = nine.points();
    let get = |l: &str| nine.get(l).unwrap().clone();
    let mut r = Recipe::new(nine.environment());
    let third = |p: &Point, q: &Point| -> Result<Point> {
        if p.equiv(q) {
            return Err(Error::DegenerateIntermediate {
                step: "chord".into(),
                expr: "coincident points".into(),
            });
        }
        Ok(third_point_general(known, p, q)?.value)
    };
    let rr = third(&get("c"), &get("d"))?;
    r.set("r", "[c,d]", GeomObject::Point(rr.clone()))?;
    let s = third(&get("e"), &get("f"))?;
    r.set("s", "[e,f]", GeomObject::Point(s.clone()))?;
    let t = third(&rr, &s)?;
    r.set("t", "[r,s]", GeomObject::Point(t.clone()))?;
    let z = third(&get("a"), &t)?;
    r.set("z", "[a,t]", GeomObject::Point(z.clone()))?;
    r.check("z lies on at", collinear(&get("a"), &t, &z));
    Ok(r.finish(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::expand;

    #[test]
    fn five_points_on_the_conic() {
        let (a, b, c) = (
            Point::new(1, 0, 0),
            Point::new(0, 1, 0),
            Point::new(0, 0, 1),
        );
        let (la, lb) = (Line::new(1, 2, 3), Line::new(2, -1, 5));
        let five = conic_five_points(&a, &b, &c, &la, &lb).unwrap();
        let env = Environment::new()
            .with("a", a.clone())
            .unwrap()
            .with("b", b.clone())
            .unwrap()
            .with("c", c)
            .unwrap()
            .with("A", la.clone())
            .unwrap()
            .with("B", lb)
            .unwrap();
        let f = expand(CONIC, &env).unwrap();
        for p in &five {
            assert!(f.evaluate(p).is_zero());
        }
        assert!(!f.evaluate(&b).is_zero());
        assert!(conic_five_points(&a, &b, &Point::new(1, 1, 0), &la, &la).is_err());
    }

    #[test]
    fn pascal_line_on_a_conic() {
        // x0 x1 = x2^2 contains [t^2 : 1 : t]
        let p = |t: i64| Point::new(t * t, 1, t);
        let m = pascal_points(&p(0), &p(1), &p(2), &p(3), &p(-1), &p(5));
        assert!(collinear(&m[0], &m[1], &m[2]));
        let off = pascal_points(&p(0), &p(1), &p(2), &p(3), &p(-1), &Point::new(1, 2, 3));
        assert!(!collinear(&off[0], &off[1], &off[2]));
    }

    #[test]
    fn second_intersection_by_pascal() {
        let p = |t: i64| Point::new(t * t, 1, t);
        let five = [p(0), p(1), p(2), p(3), p(-1)];
        let l = join(&p(0), &p(4));
        let x = conic_line_second_intersection(&five, &l, &p(0)).unwrap();
        assert!(x.value.equiv(&p(4)));
        assert!(x.diagnostics.is_empty());
        // the tangent at [1:1:1] is x0 + x1 - 2 x2 = 0
        let t = Line::new(1, 1, -2);
        let x = conic_line_second_intersection(&five, &t, &p(1)).unwrap();
        assert!(x.value.equiv(&p(1)));
        assert_eq!(x.diagnostics, [Diagnostic::TangentLine]);
        // another of the five on the line is returned directly
        let x = conic_line_second_intersection(&five, &join(&p(2), &p(3)), &p(2)).unwrap();
        assert!(x.value.equiv(&p(3)));
    }
}
