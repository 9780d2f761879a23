//! Straightedge constructions on a cubic given in Grassmann form
//! `(xaAa_1.xbBkCb_1.xc)=0`.
//!
//! Every construction is a list of named steps, each an expression in the
//! notation evaluated with exact arithmetic. A step that produces a zero
//! object aborts with [`Error::DegenerateIntermediate`].

mod chord;
mod conic;
mod fit;
mod tangent;

pub use chord::{
    chord, group_add, tangent_third_general, tangent_third_via_89, third_point_general,
    third_point_on_chord_ab, GroupLaw,
};
pub use conic::{
    conic_cubic_sixth, conic_cubic_sixth_via_89, conic_five_points, conic_line_second_intersection,
    pascal_points, CONIC,
};
pub use fit::{
    check_ten_points, fit_exact_labels, fit_nine_points, fit_permuting, replay_fit_proof, FitTrace,
    AUX_CUBIC, CUBIC,
};
pub use tangent::{is_flex, tangent_at_a, tangent_third_point};

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{eval_str, Environment};
use crate::geom::{point_bracket, GeomObject, Line, Point};
use crate::poly::HomPoly;

/// The nine parameters of the cubic `(xaAa_1.xbBkCb_1.xc)=0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicParams {
    pub a: Point,
    pub a_1: Point,
    pub b: Point,
    pub b_1: Point,
    pub c: Point,
    pub k: Point,
    pub line_a: Line,
    pub line_b: Line,
    pub line_c: Line,
}

impl CubicParams {
    /// Checks that no parameter is zero and that `A`, `B`, `C` are distinct
    /// concurrent lines.
    pub fn validate(&self) -> Result<()> {
        for (name, p) in self.points() {
            if p.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "parameter {name} is the zero point"
                )));
            }
        }
        let lines = [
            ("A", &self.line_a),
            ("B", &self.line_b),
            ("C", &self.line_c),
        ];
        for (name, l) in lines {
            if l.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "parameter {name} is the zero line"
                )));
            }
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if lines[i].1.equiv(lines[j].1) {
                    return Err(Error::Hypothesis(format!(
                        "lines {} and {} coincide",
                        lines[i].0, lines[j].0
                    )));
                }
            }
        }
        let abc = point_bracket(
            &self.line_a.dual(),
            &self.line_b.dual(),
            &self.line_c.dual(),
        );
        if !abc.is_zero() {
            return Err(Error::Hypothesis("lines A, B, C are not concurrent".into()));
        }
        Ok(())
    }

    pub fn points(&self) -> [(&'static str, &Point); 6] {
        [
            ("a", &self.a),
            ("a_1", &self.a_1),
            ("b", &self.b),
            ("b_1", &self.b_1),
            ("c", &self.c),
            ("k", &self.k),
        ]
    }

    pub fn lines(&self) -> [(&'static str, &Line); 3] {
        [
            ("A", &self.line_a),
            ("B", &self.line_b),
            ("C", &self.line_c),
        ]
    }

    pub fn environment(&self) -> Environment {
        let mut env = Environment::new();
        for (n, p) in self.points() {
            env.bind(n, p.clone()).expect("parameter names are points");
        }
        for (n, l) in self.lines() {
            env.bind(n, l.clone()).expect("parameter names are lines");
        }
        env
    }

    /// Reads the parameters back out of an environment.
    pub fn from_environment(env: &Environment) -> Result<Self> {
        Ok(CubicParams {
            a: env.point("a")?.clone(),
            a_1: env.point("a_1")?.clone(),
            b: env.point("b")?.clone(),
            b_1: env.point("b_1")?.clone(),
            c: env.point("c")?.clone(),
            k: env.point("k")?.clone(),
            line_a: env.line("A")?.clone(),
            line_b: env.line("B")?.clone(),
            line_c: env.line("C")?.clone(),
        })
    }

    /// Whether `p` satisfies the cubic, by direct evaluation with `x = p`.
    pub fn contains(&self, p: &Point) -> Result<bool> {
        let env = self.environment().with_x(p.clone());
        Ok(eval_str(CUBIC, &env)?.is_zero())
    }

    /// The cubic form, expanded symbolically.
    pub fn expand(&self) -> Result<HomPoly> {
        crate::expr::expand(CUBIC, &self.environment())
    }
}

/// Labels of the nine points of a fit, in slot order.
pub const LABELS: [&str; 9] = ["a", "b", "c", "d", "e", "f", "g", "h", "i"];

/// Nine points with no three collinear, labelled `a` to `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NinePoints([Point; 9]);

impl NinePoints {
    pub fn new(points: [Point; 9]) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.is_zero() {
                return Err(Error::DegenerateInput(format!(
                    "point {} is the zero point",
                    LABELS[i]
                )));
            }
        }
        for i in 0..9 {
            for j in i + 1..9 {
                for k in j + 1..9 {
                    if point_bracket(&points[i], &points[j], &points[k]).is_zero() {
                        return Err(Error::GeneralPosition(
                            LABELS[i].into(),
                            LABELS[j].into(),
                            LABELS[k].into(),
                        ));
                    }
                }
            }
        }
        Ok(NinePoints(points))
    }

    pub fn from_slice(points: &[Point]) -> Result<Self> {
        let arr: [Point; 9] = points.to_vec().try_into().map_err(|v: Vec<Point>| {
            Error::DegenerateInput(format!("expected 9 points, got {}", v.len()))
        })?;
        NinePoints::new(arr)
    }

    pub fn points(&self) -> &[Point; 9] {
        &self.0
    }

    pub fn get(&self, label: &str) -> Option<&Point> {
        LABELS.iter().position(|l| *l == label).map(|i| &self.0[i])
    }

    pub fn environment(&self) -> Environment {
        let mut env = Environment::new();
        for (l, p) in LABELS.iter().zip(&self.0) {
            env.bind(l, p.clone()).expect("labels are point names");
        }
        env
    }
}

/// Non-fatal findings attached to a construction result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    /// The gradient of the cubic vanishes at the point, so the tangent is
    /// not determined.
    SingularPoint,
    /// The tangent's third point is the point of tangency itself.
    FlexDegeneracy,
    /// The line meets the conic only at the known point.
    TangentLine,
    /// The constructed point coincides with a named input point.
    Coincidence(String),
    /// A formula taken as written failed its check; `note` says what was
    /// used instead.
    LiteralReading { expr: String, note: String },
    /// The chosen identity of the group law is not a flex.
    UnverifiedIdentity,
}

impl Diagnostic {
    pub fn code(&self) -> &'static str {
        match self {
            Diagnostic::SingularPoint => "singular-point",
            Diagnostic::FlexDegeneracy => "flex-degeneracy",
            Diagnostic::TangentLine => "tangent-line",
            Diagnostic::Coincidence(_) => "coincidence",
            Diagnostic::LiteralReading { .. } => "literal-reading",
            Diagnostic::UnverifiedIdentity => "unverified-identity",
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::SingularPoint => {
                f.write_str("the point is singular; the returned line is one of many")
            }
            Diagnostic::FlexDegeneracy => {
                f.write_str("the point is a flex; the tangent meets the cubic only there")
            }
            Diagnostic::TangentLine => {
                f.write_str("the line is tangent to the conic at the known point")
            }
            Diagnostic::Coincidence(n) => write!(f, "the result coincides with {n}"),
            Diagnostic::LiteralReading { expr, note } => write!(f, "`{expr}` as written: {note}"),
            Diagnostic::UnverifiedIdentity => f.write_str("the identity point is not a flex"),
        }
    }
}

/// A named intermediate of a construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub name: String,
    pub expr: String,
    pub value: GeomObject,
}

/// An exact incidence claim checked while constructing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

/// A construction result with its intermediates, self-checks and findings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome<T> {
    pub value: T,
    pub steps: Vec<Step>,
    pub checks: Vec<Check>,
    pub diagnostics: Vec<Diagnostic>,
}

impl<T> Outcome<T> {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Evaluates construction steps in a growing environment.
#[derive(Debug, Clone)]
pub(crate) struct Recipe {
    env: Environment,
    steps: Vec<Step>,
    checks: Vec<Check>,
    diagnostics: Vec<Diagnostic>,
}

impl Recipe {
    pub(crate) fn new(env: Environment) -> Self {
        Recipe {
            env,
            steps: Vec::new(),
            checks: Vec::new(),
            diagnostics: Vec::new(),
        }
    }

    /// Evaluates `text`, rejects a zero result, and binds the canonical
    /// value to `name`.
    pub(crate) fn step(&mut self, name: &str, text: &str) -> Result<GeomObject> {
        let value = eval_str(text, &self.env)?;
        if value.is_zero() {
            return Err(Error::DegenerateIntermediate {
                step: name.into(),
                expr: text.into(),
            });
        }
        self.set(name, text, value.canonical())
    }

    /// Binds an externally computed value as a step.
    pub(crate) fn set(&mut self, name: &str, text: &str, value: GeomObject) -> Result<GeomObject> {
        self.env.bind(name, value.clone())?;
        self.steps.push(Step {
            name: name.into(),
            expr: text.into(),
            value: value.clone(),
        });
        Ok(value)
    }

    pub(crate) fn point_step(&mut self, name: &str, text: &str) -> Result<Point> {
        Ok(self
            .step(name, text)?
            .as_point()
            .expect("point-valued step")
            .clone())
    }

    pub(crate) fn eval(&self, text: &str) -> Result<GeomObject> {
        eval_str(text, &self.env)
    }

    /// Evaluates a scalar expression in `x` at the point `p`.
    pub(crate) fn vanishes_at(&self, text: &str, p: &Point) -> Result<bool> {
        let env = self.env.clone().with_x(p.clone());
        Ok(eval_str(text, &env)?.is_zero())
    }

    pub(crate) fn point(&self, name: &str) -> Result<Point> {
        self.env.point(name).cloned()
    }

    pub(crate) fn env(&self) -> &Environment {
        &self.env
    }

    pub(crate) fn check(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(Check {
            name: name.into(),
            ok,
        });
    }

    pub(crate) fn note(&mut self, d: Diagnostic) {
        if !self.diagnostics.contains(&d) {
            self.diagnostics.push(d);
        }
    }

    pub(crate) fn absorb<T>(&mut self, prefix: &str, o: &Outcome<T>) {
        for c in &o.checks {
            self.check(format!("{prefix}: {}", c.name), c.ok);
        }
        for d in &o.diagnostics {
            self.note(d.clone());
        }
    }

    pub(crate) fn finish<T>(self, value: T) -> Outcome<T> {
        Outcome {
            value,
            steps: self.steps,
            checks: self.checks,
            diagnostics: self.diagnostics,
        }
    }
}

/// Errors that mean "this labelling is unlucky, try another one".
pub(crate) fn is_unlucky(e: &Error) -> bool {
    matches!(
        e,
        Error::DegenerateIntermediate { .. }
            | Error::GeneralPosition(..)
            | Error::RankDeficient { .. }
            | Error::InsufficientPoints(_)
            | Error::Hypothesis(_)
    )
}

/// Upper bound on complete labellings tried by a relabelling search.
const MAX_LABELLINGS: usize = 200;

/// Tries general-position nine-point labellings made of `fixed` (in the
/// first slots) and points of `known` until `attempt` succeeds. `attempt`
/// also receives the candidates left out of the nine.
///
/// The order is deterministic: first the cyclic rotations of the candidate
/// list (so that every candidate gets a turn right after the fixed points,
/// where special positions such as a flex in slot `b` do the most harm),
/// then increasing index sequences in lexicographic order.
pub(crate) fn search_labellings<T>(
    known: &[Point],
    fixed: &[Point],
    mut attempt: impl FnMut(&NinePoints, &[Point]) -> Result<T>,
) -> Result<T> {
    let mut candidates: Vec<Point> = Vec::new();
    for p in known {
        if p.is_zero() || fixed.iter().any(|f| f.equiv(p)) || candidates.iter().any(|c| c.equiv(p))
        {
            continue;
        }
        candidates.push(p.clone());
    }
    let n = candidates.len();
    let need = 9 - fixed.len();
    if n < need {
        return Err(Error::InsufficientPoints(format!(
            "need {need} further points, have {n}"
        )));
    }

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut tried = 0;
    let mut last_err = None;
    let mut run = |chosen: &[usize], last_err: &mut Option<Error>| -> Option<Result<T>> {
        if !seen.insert(chosen.to_vec()) {
            return None;
        }
        let mut nine: Vec<Point> = fixed.to_vec();
        nine.extend(chosen.iter().map(|&i| candidates[i].clone()));
        let nine = NinePoints::from_slice(&nine).ok()?;
        let unused: Vec<Point> = (0..n)
            .filter(|i| !chosen.contains(i))
            .map(|i| candidates[i].clone())
            .collect();
        tried += 1;
        match attempt(&nine, &unused) {
            Ok(v) => Some(Ok(v)),
            Err(e) if is_unlucky(&e) => {
                *last_err = Some(e);
                (tried >= MAX_LABELLINGS).then(|| Err(exhausted(last_err.take())))
            }
            Err(e) => Some(Err(e)),
        }
    };

    for r in 0..n {
        let chosen: Vec<usize> = (0..need).map(|t| (r + t) % n).collect();
        if let Some(done) = run(&chosen, &mut last_err) {
            return done;
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(need);
    // depth-first over increasing index sequences
    let mut next = 0;
    loop {
        if chosen.len() == need {
            if let Some(done) = run(&chosen, &mut last_err) {
                return done;
            }
            next = chosen.pop().unwrap() + 1;
            continue;
        }
        if next >= n {
            match chosen.pop() {
                Some(i) => {
                    next = i + 1;
                    continue;
                }
                None => break,
            }
        }
        let p = &candidates[next];
        let current: Vec<&Point> = fixed
            .iter()
            .chain(chosen.iter().map(|&i| &candidates[i]))
            .collect();
        let general = (0..current.len()).all(|i| {
            (i + 1..current.len()).all(|j| !point_bracket(current[i], current[j], p).is_zero())
        });
        if general {
            chosen.push(next);
        }
        next += 1;
    }
    Err(exhausted(last_err))
}

fn exhausted(last_err: Option<Error>) -> Error {
    Error::InsufficientPoints(match last_err {
        Some(e) => format!("every usable labelling degenerates ({e})"),
        None => "no nine of the points are in general position".into(),
    })
}
