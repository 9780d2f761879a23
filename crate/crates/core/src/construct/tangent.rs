use super::{conic_line_second_intersection, CubicParams, Diagnostic, Outcome, Recipe};
use crate::error::Result;
use crate::geom::{GeomObject, Line, Point};

/// The tangent at `a`: `(abBkCb_1.ac)a_1Aa`.
///
/// At a singular point the formula still returns some line through `a`;
/// this is flagged with [`Diagnostic::SingularPoint`].
pub fn tangent_at_a(params: &CubicParams) -> Result<Outcome<Line>> {
    let mut r = Recipe::new(params.environment());
    r.step("p", "abBkCb_1.ac")?;
    let t = r.step("T", "pa_1Aa")?.as_line().unwrap().clone();
    r.check("T passes through a", t.contains(&params.a));
    let f = params.expand()?;
    let g = f.gradient();
    if g.iter().all(|d| d.evaluate(&params.a).is_zero()) {
        r.note(Diagnostic::SingularPoint);
    }
    Ok(r.finish(t))
}

/// The third point where the tangent at `a` meets the cubic.
///
/// Steps: `q = (abBkCb_1.ac)a_1A` is where the tangent meets `A`; `y` is
/// the second point of the line `cb_1CkBb` on the conic `xbBkCb_1x=0`,
/// found by Pascal's construction from the conic points `b`, `b_1`, `BC`,
/// `b_1kB`, `bkC` and, for lines `l` through `b`, `l.lBkCb_1`; `z = b_1cCkBb.b_1c`. In practice `y` and `z` coincide,
/// and then `w = aq.y(bz.(ab.yc)(aq.zc))` collapses to the zero point. The
/// line through `b` in that formula is then replaced by the tangent
/// `T = (qa_1.bc)b_1CkBb` of the conic `(qa_1.xc.xbBkCb_1)=0` at `b`,
/// giving `w = aq.y(T.(ab.yc)(aq.bc))`. Both substitutions are reported as
/// diagnostics.
pub fn tangent_third_point(params: &CubicParams) -> Result<Outcome<Point>> {
    let mut r = Recipe::new(params.environment());
    r.step("p", "abBkCb_1.ac")?;
    let q = r.point_step("q", "(abBkCb_1.ac)a_1A")?;
    let literal_q = "(abBkCb_1.ac).a_1A";
    let literal_ok = matches!(r.eval(literal_q)?, GeomObject::Point(ref v) if v.equiv(&q));
    if !literal_ok {
        r.note(Diagnostic::LiteralReading {
            expr: literal_q.into(),
            note: "the period makes a_1A a scalar, giving a multiple of abBkCb_1.ac instead of a point of A; \
                   used (abBkCb_1.ac)a_1A"
                .into(),
        });
    }
    let tangent = r.step("L", "aq")?.as_line().unwrap().clone();
    let formula_tangent = r.eval("(abBkCb_1.ac)a_1Aa")?;
    r.check(
        "aq is the tangent (abBkCb_1.ac)a_1Aa",
        matches!(formula_tangent, GeomObject::Line(ref l) if l.equiv(&tangent)),
    );

    // second point of the line through b on the conic xbBkCb_1x=0; beyond
    // the five named points, a line l through b meets the conic again at
    // l.lBkCb_1
    let chord = r.step("M", "cb_1CkBb")?.as_line().unwrap().clone();
    let mut conic_points = Vec::new();
    for text in [
        "b",
        "b_1",
        "BC",
        "b_1kB",
        "bkC",
        "ba.baBkCb_1",
        "bc.bcBkCb_1",
        "ba_1.ba_1BkCb_1",
    ] {
        if let GeomObject::Point(p) = r.eval(text)? {
            if !p.is_zero() {
                let ok = r.vanishes_at("xbBkCb_1x", &p)?;
                r.check(format!("{text} lies on xbBkCb_1x=0"), ok);
                conic_points.push(p);
            }
        }
    }
    let second = conic_line_second_intersection(&conic_points, &chord, &params.b)?;
    r.absorb("second intersection", &second);
    let y = second.value;
    r.set(
        "y",
        "second point of cb_1CkBb on xbBkCb_1x=0",
        GeomObject::Point(y.clone()),
    )?;
    r.check("y lies on xbBkCb_1x=0", r.vanishes_at("xbBkCb_1x", &y)?);

    let same_line = matches!(r.eval("b_1cCkBb")?, GeomObject::Line(ref l) if l.equiv(&chord));
    r.check("b_1cCkBb and cb_1CkBb are the same line", same_line);
    let z = r.point_step("z", "b_1cCkBb.b_1c")?;

    let aux = "(qa_1.xc.xbBkCb_1)";
    for name in ["a", "b", "c", "y", "z"] {
        let p = r.point(name)?;
        let ok = r.vanishes_at(aux, &p)?;
        r.check(format!("{aux}=0 passes through {name}"), ok);
    }

    let literal_w = "aq.y(bz.(ab.yc)(aq.zc))";
    let w = if !y.equiv(&z) {
        r.point_step("w", literal_w)?
    } else {
        let collapsed = r.eval(literal_w)?.is_zero();
        r.note(Diagnostic::LiteralReading {
            expr: literal_w.into(),
            note: format!(
                "y and z coincide{}; used T = (qa_1.bc)b_1CkBb, the tangent to the auxiliary conic at b, \
                 and w = aq.y(T.(ab.yc)(aq.bc))",
                if collapsed { " and the formula gives the zero point" } else { "" }
            ),
        });
        r.step("T", "(qa_1.bc)b_1CkBb")?;
        r.point_step("w", "aq.y(T.(ab.yc)(aq.bc))")?
    };
    r.check("w lies on the tangent aq", tangent.contains(&w));
    r.check("w lies on the cubic", params.contains(&w)?);
    if w.equiv(&params.a) {
        r.note(Diagnostic::FlexDegeneracy);
    }
    Ok(r.finish(w))
}

/// Whether `a` is a flex: the tangent's third point is `a` itself.
pub fn is_flex(params: &CubicParams) -> Result<bool> {
    Ok(tangent_third_point(params)?.value.equiv(&params.a))
}
