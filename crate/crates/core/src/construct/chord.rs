use super::{
    fit_nine_points, is_flex, is_unlucky, search_labellings, tangent_third_point, CubicParams,
    Diagnostic, Outcome, Recipe,
};
use crate::error::{Error, Result};
use crate::geom::{join, GeomObject, Point};

/// Third intersection of line `ab` with the cubic: `(abAa_1.abBkCb_1)c.ab`.
pub fn third_point_on_chord_ab(params: &CubicParams) -> Result<Outcome<Point>> {
    let mut r = Recipe::new(params.environment());
    r.step("p", "abAa_1.abBkCb_1")?;
    let y = r.point_step("y", "pc.ab")?;
    r.check("y lies on ab", join(&params.a, &params.b).contains(&y));
    r.check("y lies on the cubic", params.contains(&y)?);
    Ok(r.finish(y))
}

/// Refits the cubic through `known` with `p` and `q` in the first two slots
/// and returns the third point of the chord `pq`. Known points left out of
/// the refit must lie on the refitted cubic. If no labelling works, `q`
/// and `p` are swapped (a flex in slot `b` makes the construction
/// degenerate).
pub fn third_point_general(known: &[Point], p: &Point, q: &Point) -> Result<Outcome<Point>> {
    if p.equiv(q) || p.is_zero() || q.is_zero() {
        return Err(Error::DegenerateInput(
            "a chord needs two distinct points".into(),
        ));
    }
    let attempt = |a: &Point, b: &Point| {
        search_labellings(known, &[a.clone(), b.clone()], |nine, unused| {
            let trace = fit_nine_points(nine)?;
            for u in unused {
                if !trace.params.contains(u)? {
                    return Err(Error::NotOnCurve(u.canonical().to_string()));
                }
            }
            third_point_on_chord_ab(&trace.params)
        })
    };
    match attempt(p, q) {
        Err(e) if is_unlucky(&e) => attempt(q, p).map_err(|_| e),
        done => done,
    }
}

/// Third point of the tangent at `a`, after refitting with `a` in the
/// first slot.
pub fn tangent_third_general(known: &[Point], a: &Point) -> Result<Outcome<Point>> {
    search_labellings(known, std::slice::from_ref(a), |nine, unused| {
        let trace = fit_nine_points(nine)?;
        for u in unused {
            if !trace.params.contains(u)? {
                return Err(Error::NotOnCurve(u.canonical().to_string()));
            }
        }
        tangent_third_point(&trace.params)
    })
}

/// `[p,q]`: the third point of line `pq`, or of the tangent when `p ≡ q`.
pub fn chord(known: &[Point], p: &Point, q: &Point) -> Result<Point> {
    if p.equiv(q) {
        Ok(tangent_third_general(known, p)?.value)
    } else {
        Ok(third_point_general(known, p, q)?.value)
    }
}

/// Third point of the tangent at `a` using chords only: with
/// `p_2 = [p_1,a]`, `q_2 = [q_1,a]`, `r_1 = [p_1,q_1]`, `r_2 = [p_2,q_2]`,
/// the point `r_3 = [r_1,r_2]` lies on the tangent at `a`.
pub fn tangent_third_via_89(known: &[Point], a: &Point) -> Result<Outcome<Point>> {
    let others: Vec<&Point> = known
        .iter()
        .filter(|p| !p.is_zero() && !p.equiv(a))
        .collect();
    let mut last = None;
    for (i, p1) in others.iter().enumerate() {
        for q1 in &others[i + 1..] {
            if p1.equiv(q1) {
                continue;
            }
            match tangent_chain(known, a, p1, q1) {
                Ok(o) => return Ok(o),
                Err(e) if super::is_unlucky(&e) || matches!(e, Error::DegenerateInput(_)) => {
                    last = Some(e)
                }
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::InsufficientPoints(match last {
        Some(e) => format!("no usable pair p_1, q_1 ({e})"),
        None => "need two known points other than a".into(),
    }))
}

fn tangent_chain(known: &[Point], a: &Point, p1: &Point, q1: &Point) -> Result<Outcome<Point>> {
    let third = |u: &Point, v: &Point| -> Result<Point> {
        if u.equiv(v) {
            return Err(Error::DegenerateInput("coincident chord points".into()));
        }
        Ok(third_point_general(known, u, v)?.value)
    };
    let mut r = Recipe::new(Default::default());
    let p2 = third(p1, a)?;
    let q2 = third(q1, a)?;
    let r1 = third(p1, q1)?;
    let r2 = third(&p2, &q2)?;
    let r3 = third(&r1, &r2)?;
    for (name, text, v) in [
        ("p_1", "", p1),
        ("q_1", "", q1),
        ("p_2", "[p_1,a]", &p2),
        ("q_2", "[q_1,a]", &q2),
        ("r_1", "[p_1,q_1]", &r1),
        ("r_2", "[p_2,q_2]", &r2),
        ("r_3", "[r_1,r_2]", &r3),
    ] {
        r.set(name, text, GeomObject::Point(v.clone()))?;
    }
    Ok(r.finish(r3))
}

/// Chord-and-tangent addition `p + q = [o,[p,q]]` on the cubic through the
/// known points, with identity `o`.
#[derive(Debug, Clone)]
pub struct GroupLaw {
    known: Vec<Point>,
    o: Point,
}

impl GroupLaw {
    /// Sets up the law, checking with the tangent construction whether `o`
    /// is a flex. A non-flex identity is accepted with a diagnostic.
    pub fn new(known: &[Point], o: &Point) -> Result<Outcome<GroupLaw>> {
        let flex = search_labellings(known, std::slice::from_ref(o), |nine, _| {
            let trace = fit_nine_points(nine)?;
            is_flex(&trace.params)
        })?;
        let mut r = Recipe::new(Default::default());
        r.check("o is a flex", flex);
        if !flex {
            r.note(Diagnostic::UnverifiedIdentity);
        }
        Ok(r.finish(GroupLaw::unchecked(known, o)))
    }

    /// Sets up the law without checking the identity.
    pub fn unchecked(known: &[Point], o: &Point) -> GroupLaw {
        GroupLaw {
            known: known.to_vec(),
            o: o.clone(),
        }
    }

    pub fn identity(&self) -> &Point {
        &self.o
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point> {
        let pq = chord(&self.known, p, q)?;
        Ok(chord(&self.known, &self.o, &pq)?.canonical())
    }
}

/// `p + q` with identity `o`; see [`GroupLaw`].
pub fn group_add(known: &[Point], o: &Point, p: &Point, q: &Point) -> Result<Outcome<Point>> {
    let law = GroupLaw::new(known, o)?;
    let mut r = Recipe::new(Default::default());
    r.absorb("identity", &law);
    let s = chord(known, p, q)?.canonical();
    r.set("s", "[p,q]", GeomObject::Point(s.clone()))?;
    let sum = chord(known, o, &s)?.canonical();
    r.set("w", "[o,s]", GeomObject::Point(sum.clone()))?;
    Ok(r.finish(sum))
}
