use super::{CubicParams, NinePoints, Recipe, Step};
use crate::error::{Error, Result};
use crate::expr::{eval_str, Environment};
use crate::geom::{GeomObject, Point};

/// The cubic in Grassmann form.
pub const CUBIC: &str = "(xaAa_1.xbBkCb_1.xc)";

/// The product of three lines through `x` used to certify `k`.
pub const AUX_CUBIC: &str = "(xf.xg_2Cg_1.xh_2Ch_1)";

const FIT_STEPS: [(&str, &str); 15] = [
    ("A", "de"),
    ("B", "ef"),
    ("a_1", "af.cd"),
    ("g_1", "gaAa_1.gc"),
    ("g_2", "gbB"),
    ("h_1", "haAa_1.hc"),
    ("h_2", "hbB"),
    ("i_1", "iaAa_1.ic"),
    ("i_2", "ibB"),
    ("C", "ei_1"),
    ("y", "h_1g_1Cg_2.fh_1"),
    ("z", "g_1h_1Ch_2.fg_1"),
    ("K", "yz"),
    ("k", "K.i_1i_2"),
    ("b_1", "kg_2Cg_1.kf"),
];

/// A nine-point fit with all of its intermediates. `nine` holds the
/// labelling actually used, which differs from the input when
/// `relabelled` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitTrace {
    pub nine: NinePoints,
    pub params: CubicParams,
    pub steps: Vec<Step>,
    pub relabelled: bool,
}

impl FitTrace {
    /// The nine labelled points together with every named intermediate.
    pub fn environment(&self) -> Environment {
        let mut env = self.nine.environment();
        for s in &self.steps {
            env.bind(&s.name, s.value.clone())
                .expect("step names match their kinds");
        }
        env
    }
}

/// Parameters of the cubic through nine points in general position, built
/// step by step with a straightedge, using the labels exactly as given.
///
/// No three collinear does not rule out every coincidence: when, for
/// instance, `f`, `g_2` and `g_1h_1C` are collinear, `y` and `z` both fall
/// on `f` and `K = yz` is the zero line. Such cases fail here with
/// [`Error::DegenerateIntermediate`]; [`fit_nine_points`] relabels instead.
pub fn fit_exact_labels(nine: &NinePoints) -> Result<FitTrace> {
    let mut r = Recipe::new(nine.environment());
    for (name, text) in FIT_STEPS {
        r.step(name, text)?;
    }
    let params = CubicParams::from_environment(r.env())?;
    Ok(FitTrace {
        nine: nine.clone(),
        params,
        steps: r.steps,
        relabelled: false,
    })
}

/// Like [`fit_exact_labels`], but when the recipe degenerates, or one of
/// the incidences its argument relies on fails (see [`replay_fit_proof`]),
/// retries with the points in the `free` slots permuted (lexicographically)
/// until both succeed. The cubic is the same for every labelling.
pub fn fit_permuting(nine: &NinePoints, free: &[usize]) -> Result<FitTrace> {
    let mut first_err = None;
    let mut perm: Vec<usize> = (0..free.len()).collect();
    loop {
        let mut pts = nine.points().clone();
        for (slot, &src) in free.iter().zip(&perm) {
            pts[*slot] = nine.points()[free[src]].clone();
        }
        let relabelled = first_err.is_some();
        match fit_exact_labels(&NinePoints::new(pts)?) {
            Ok(mut t) => {
                let failed = replay_fit_proof(&t)?.into_iter().find(|(_, ok)| !ok);
                match failed {
                    None => {
                        t.relabelled = relabelled;
                        return Ok(t);
                    }
                    Some((claim, _)) => {
                        first_err.get_or_insert(Error::Hypothesis(format!(
                            "fit argument fails: {claim}"
                        )));
                    }
                }
            }
            Err(e @ Error::DegenerateIntermediate { .. }) => {
                first_err.get_or_insert(e);
            }
            Err(e) => return Err(e),
        }
        if !next_permutation(&mut perm) {
            return Err(first_err.unwrap());
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Parameters of the cubic through nine points in general position. Points
/// `a` and `b` keep their slots; the other seven are relabelled if the
/// given labelling degenerates.
pub fn fit_nine_points(nine: &NinePoints) -> Result<FitTrace> {
    fit_permuting(nine, &[2, 3, 4, 5, 6, 7, 8])
}

/// Re-checks every incidence claim made in the argument that the fitted
/// cubic passes through all nine points. Returns `(claim, holds)` pairs.
pub fn replay_fit_proof(trace: &FitTrace) -> Result<Vec<(String, bool)>> {
    let env = trace.environment();
    let at = |text: &str, p: &Point| -> Result<bool> {
        Ok(eval_str(text, &env.clone().with_x(p.clone()))?.is_zero())
    };
    let mut out = Vec::new();

    for (label, p) in super::LABELS.iter().zip(trace.nine.points()) {
        out.push((format!("cubic vanishes at {label}"), at(CUBIC, p)?));
    }

    // at x = d the first and third factors are the same line
    let left = eval_str("daAa_1", &env)?;
    let right = eval_str("dc", &env)?;
    let same = match (&left, &right) {
        (GeomObject::Line(l), GeomObject::Line(m)) => !l.is_zero() && l.equiv(m),
        _ => false,
    };
    out.push(("daAa_1 and dc are the same line".into(), same));

    for name in ["y", "z", "k"] {
        let p = env.point(name)?;
        out.push((format!("{name} lies on {AUX_CUBIC}"), at(AUX_CUBIC, p)?));
    }
    for name in ["y", "z"] {
        let p = env.point(name)?;
        for line in ["B", "C"] {
            let off = !env.line(line)?.contains(p);
            out.push((format!("{name} is off {line}"), off));
        }
    }
    Ok(out)
}

/// Whether a tenth point lies on the cubic through nine points in general
/// position, decided by fitting the cubic and evaluating it at `p`.
pub fn check_ten_points(nine: &NinePoints, p: &Point) -> Result<bool> {
    let trace = fit_nine_points(nine)?;
    trace.params.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::nullspace_fit;

    fn sample() -> NinePoints {
        let pts = [
            (0, 0),
            (1, 0),
            (0, 1),
            (2, 3),
            (5, -1),
            (-3, 7),
            (4, 4),
            (-2, -5),
            (6, 1),
        ]
        .map(|(x, y)| Point::affine(x, y));
        NinePoints::new(pts).unwrap()
    }

    #[test]
    fn fit_matches_nullspace() {
        let nine = sample();
        let trace = fit_nine_points(&nine).unwrap();
        trace.params.validate().unwrap();
        let f = trace.params.expand().unwrap();
        assert_eq!(f.degree(), 3);
        let g = nullspace_fit(nine.points(), 3).unwrap();
        assert!(f.projectively_equal(&g));
    }

    #[test]
    fn proof_claims_hold() {
        let trace = fit_nine_points(&sample()).unwrap();
        for (claim, ok) in replay_fit_proof(&trace).unwrap() {
            assert!(ok, "{claim}");
        }
    }

    #[test]
    fn ten_points() {
        let nine = sample();
        assert!(check_ten_points(&nine, &Point::affine(4, 4)).unwrap());
        assert!(!check_ten_points(&nine, &Point::affine(1, 1)).unwrap());
    }

    #[test]
    fn degenerate_labelling_is_relabelled() {
        // f, g_2 and g_1h_1C are collinear here, so y = z = f
        let pts = [
            (-9, 6),
            (5, 0),
            (2, -5),
            (-6, -3),
            (6, -7),
            (-8, 6),
            (-9, -9),
            (2, -8),
            (-2, 9),
        ]
        .map(|(x, y)| Point::affine(x, y));
        let nine = NinePoints::new(pts).unwrap();
        assert!(matches!(
            fit_exact_labels(&nine),
            Err(Error::DegenerateIntermediate { ref step, .. }) if step == "K"
        ));
        let trace = fit_nine_points(&nine).unwrap();
        assert!(trace.relabelled);
        assert_eq!(trace.nine.get("a"), nine.get("a"));
        assert_eq!(trace.nine.get("b"), nine.get("b"));
        let g = nullspace_fit(nine.points(), 3).unwrap();
        assert!(trace.params.expand().unwrap().projectively_equal(&g));
        for (claim, ok) in replay_fit_proof(&trace).unwrap() {
            assert!(ok, "{claim}");
        }
    }

    #[test]
    fn permutations_are_enumerated() {
        let mut v = vec![0, 1, 2];
        let mut n = 1;
        while next_permutation(&mut v) {
            n += 1;
        }
        assert_eq!(n, 6);
        assert_eq!(v, [2, 1, 0]);
    }

    #[test]
    fn collinear_triple_is_rejected() {
        let mut pts = sample().points().clone();
        pts[8] = Point::affine(3, 0);
        assert_eq!(
            NinePoints::new(pts),
            Err(Error::GeneralPosition("a".into(), "b".into(), "i".into()))
        );
    }
}
