//! One function per command. Each returns a finished [`Report`]; commands
//! that produce a file also return it as an [`Artifact`].

use std::fmt;
use std::str::FromStr;

use super::report::{digest, Report, Source, Value};
use super::scene::Scene;
use super::svg::{fit_viewport, Canvas, Style};
use crate::construct::{
    check_ten_points, conic_cubic_sixth, conic_cubic_sixth_via_89, fit_nine_points, group_add,
    pascal_points, replay_fit_proof, search_labellings, tangent_at_a, tangent_third_general,
    tangent_third_via_89, third_point_general, NinePoints, LABELS,
};
use crate::error::{Error, Result};
use crate::expr::{eval_numeric, eval_symbolic, parse, SymValue};
use crate::fixtures::{chord_bootstrap, random_nine};
use crate::geom::{collinear, GeomObject, Point};
use crate::oracle::{
    chord_third_root, contact_order, cubic_membership, gradient_tangent, hessian_flex_oracle,
    six_on_a_conic, tangent_third_root,
};
use crate::poly::{nullspace_fit, rank_of_points, HomPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Command {
    Fit9,
    Check10,
    Eval,
    ThirdPoint,
    Tangent,
    TangentThird,
    IsFlex,
    ConicSixth,
    GroupAdd,
    Pascal,
    Random,
    Plot,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Fit9,
        Command::Check10,
        Command::Eval,
        Command::ThirdPoint,
        Command::Tangent,
        Command::TangentThird,
        Command::IsFlex,
        Command::ConicSixth,
        Command::GroupAdd,
        Command::Pascal,
        Command::Random,
        Command::Plot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Fit9 => "fit9",
            Command::Check10 => "check10",
            Command::Eval => "eval",
            Command::ThirdPoint => "third-point",
            Command::Tangent => "tangent",
            Command::TangentThird => "tangent-third",
            Command::IsFlex => "is-flex",
            Command::ConicSixth => "conic-sixth",
            Command::GroupAdd => "group-add",
            Command::Pascal => "pascal",
            Command::Random => "random",
            Command::Plot => "plot",
        }
    }

    pub fn about(self) -> &'static str {
        match self {
            Command::Fit9 => "fit the cubic through points a..i by straightedge steps",
            Command::Check10 => "decide whether --point lies on the cubic through a..i",
            Command::Eval => "evaluate --expr in the scene, symbolically in x when x is unbound",
            Command::ThirdPoint => {
                "third point of the chord through two --point names (default a, b)"
            }
            Command::Tangent => "tangent line at --point (default a)",
            Command::TangentThird => "third point of the tangent at --point (default a)",
            Command::IsFlex => "decide whether --point (default a) is a flex",
            Command::ConicSixth => "sixth point of the conic through a, c, d, e, f on the cubic",
            Command::GroupAdd => {
                "sum of two points with a third as identity: --point o --point p --point q"
            }
            Command::Pascal => "Pascal points of a, b, c, d, e, f and whether they are collinear",
            Command::Random => "random scene from --seed with --count extra points on the cubic",
            Command::Plot => "SVG drawing of the scene, its cubic and its expressions",
        }
    }

    /// Whether the command needs a scene.
    pub fn needs_scene(self) -> bool {
        self != Command::Random
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Command> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub expr: Option<String>,
    pub seed: Option<u64>,
    pub count: Option<usize>,
    pub points: Vec<String>,
    pub verbose: bool,
}

impl Options {
    fn canonical(&self) -> String {
        format!(
            "expr={:?} seed={:?} count={:?} points={:?} verbose={}",
            self.expr, self.seed, self.count, self.points, self.verbose
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Artifact {
    Scene(String),
    Svg(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Response {
    pub report: Report,
    pub artifact: Option<Artifact>,
}

/// Parses the scene text (if the command needs one) and runs the command.
/// Every failure ends up in the report.
pub fn run(cmd: Command, scene_text: Option<&str>, opts: &Options) -> Response {
    let scene = match (cmd.needs_scene(), scene_text) {
        (false, _) => Ok(Scene::default()),
        (true, None) => Err(Error::Usage(format!("{cmd} needs a scene (--in FILE)"))),
        (true, Some(t)) => Scene::parse(t),
    };
    match scene {
        Ok(s) => match cmd {
            Command::Random => {
                let (report, scene) = cmd_random(opts);
                Response {
                    report,
                    artifact: scene.map(|s| Artifact::Scene(s.to_toml())),
                }
            }
            Command::Plot => {
                let (report, svg) = cmd_plot(&s, opts);
                Response {
                    report,
                    artifact: svg.map(Artifact::Svg),
                }
            }
            _ => Response {
                report: dispatch(cmd, &s, opts),
                artifact: None,
            },
        },
        Err(e) => {
            let raw = scene_text.unwrap_or("");
            let mut r = Report::new(cmd.name(), digest(&[cmd.name(), &opts.canonical(), raw]));
            r.fail(&e);
            Response {
                report: r.finish(),
                artifact: None,
            }
        }
    }
}

fn dispatch(cmd: Command, scene: &Scene, opts: &Options) -> Report {
    match cmd {
        Command::Fit9 => cmd_fit9(scene, opts),
        Command::Check10 => cmd_check10(scene, opts),
        Command::Eval => cmd_eval(scene, opts),
        Command::ThirdPoint => cmd_third_point(scene, opts),
        Command::Tangent => cmd_tangent(scene, opts),
        Command::TangentThird => cmd_tangent_third(scene, opts),
        Command::IsFlex => cmd_is_flex(scene, opts),
        Command::ConicSixth => cmd_conic_sixth(scene, opts),
        Command::GroupAdd => cmd_group_add(scene, opts),
        Command::Pascal => cmd_pascal(scene, opts),
        Command::Random => cmd_random(opts).0,
        Command::Plot => cmd_plot(scene, opts).0,
    }
}

fn start(cmd: Command, scene: &Scene, opts: &Options) -> Report {
    Report::new(
        cmd.name(),
        digest(&[cmd.name(), &opts.canonical(), &scene.to_toml()]),
    )
}

fn finish(mut r: Report, body: Result<()>) -> Report {
    if let Err(e) = body {
        r.fail(&e);
    }
    r.finish()
}

/// The `i`-th `--point` name, or `default`.
fn point_arg<'a>(
    scene: &'a Scene,
    opts: &'a Options,
    i: usize,
    default: Option<&'a str>,
) -> Result<(&'a str, &'a Point)> {
    let name = opts
        .points
        .get(i)
        .map(String::as_str)
        .or(default)
        .ok_or_else(|| Error::Usage(format!("missing --point number {}", i + 1)))?;
    Ok((name, scene.point(name)?))
}

/// The nine points `a`..`i`, then every other scene point on their cubic,
/// by name. Constructions that relabel draw on all of them.
fn curve_points(scene: &Scene, nine: &NinePoints) -> Result<Vec<Point>> {
    let params = fit_nine_points(nine)?.params;
    let mut out = nine.points().to_vec();
    for (name, p) in &scene.points {
        if name == "x" || LABELS.contains(&name.as_str()) {
            continue;
        }
        if params.contains(p)? {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn oracle_cubic(nine: &NinePoints) -> Result<HomPoly> {
    nullspace_fit(nine.points(), 3)
}

/// `[p,q]` by deflating the restriction of `f`, never by construction.
fn oracle_chord(f: &HomPoly, p: &Point, q: &Point) -> Result<Point> {
    if p.equiv(q) {
        tangent_third_root(f, p)
    } else {
        chord_third_root(f, p, q)
    }
}

fn on_curve_check(r: &mut Report, f: &HomPoly, name: &str, p: &Point) -> Result<()> {
    r.verify(
        format!("{name} lies on the nullspace cubic"),
        Source::Oracle,
        cubic_membership(f, p)?,
    );
    Ok(())
}

pub fn cmd_fit9(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::Fit9, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let trace = fit_nine_points(&nine)?;
        if trace.relabelled {
            let order: Vec<&str> = trace
                .nine
                .points()
                .iter()
                .map(|p| LABELS[nine.points().iter().position(|q| q == p).unwrap()])
                .collect();
            r.diagnose(
                "relabelled",
                format!(
                    "the given labels make a construction step degenerate; slots a..i were filled by {}",
                    order.join(", ")
                ),
            );
        }
        for (name, p) in trace.params.points() {
            r.output(name, Value::point(p));
        }
        for (name, l) in trace.params.lines() {
            r.output(name, Value::line(l));
        }
        let f = trace.params.expand()?;
        r.output("cubic", Value::polynomial(&f));
        if opts.verbose {
            r.steps(&trace.steps);
        }
        let g = oracle_cubic(&nine)?;
        r.verify(
            "expanded cubic equals the nullspace cubic",
            Source::Oracle,
            f.projectively_equal(&g),
        );
        for (claim, ok) in replay_fit_proof(&trace)? {
            r.verify(claim, Source::Proof, ok);
        }
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_check10(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::Check10, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (name, p) = point_arg(scene, opts, 0, None)?;
        let on = check_ten_points(&nine, p)?;
        r.answer = Some(on);
        r.output(name, Value::point(p));
        r.output("on_cubic", Value::Boolean { value: on });
        let g = oracle_cubic(&nine)?;
        r.verify(
            format!(
                "nullspace cubic agrees that {name} is {}",
                if on { "on it" } else { "off it" }
            ),
            Source::Oracle,
            cubic_membership(&g, p)? == on,
        );
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_eval(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::Eval, scene, opts);
    let body = (|| {
        let text = opts
            .expr
            .as_deref()
            .ok_or_else(|| Error::Usage("eval needs --expr".into()))?;
        let parsed = parse(text)?;
        let env = scene.environment();
        let mut free = env.clone();
        free.clear_x();
        let sym = eval_symbolic(&parsed.expr, &free)?;
        if parsed.expr.contains_var() && env.x().is_none() {
            let value = match &sym {
                SymValue::Scalar(f) => Value::polynomial(f),
                SymValue::Point(v) => Value::forms("point", v),
                SymValue::Line(v) => Value::forms("line", v),
            };
            r.output("value", value);
            let mut probes: Vec<(String, Point)> = scene
                .points
                .iter()
                .filter(|(n, _)| n.as_str() != "x")
                .map(|(n, p)| (n.clone(), p.clone()))
                .collect();
            for (i, p) in [
                Point::new(1, 0, 0),
                Point::new(0, 1, 0),
                Point::new(0, 0, 1),
                Point::new(1, 1, 1),
            ]
            .into_iter()
            .enumerate()
            {
                probes.push((format!("e_{i}"), p));
            }
            for (n, p) in probes {
                let numeric = eval_numeric(&parsed.expr, &env.clone().with_x(p.clone()))?;
                r.verify(
                    format!("substituting x = {n} equals numeric evaluation"),
                    Source::Oracle,
                    sym.substitute(&p) == numeric,
                );
            }
        } else {
            let v = eval_numeric(&parsed.expr, &env)?;
            r.output("value", Value::object(&v));
            if parsed.equation {
                r.answer = Some(v.is_zero());
            }
            let at = env.x().cloned().unwrap_or_else(|| Point::new(1, 0, 0));
            r.verify(
                "symbolic evaluation agrees after substitution",
                Source::Oracle,
                sym.substitute(&at) == v,
            );
        }
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_third_point(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::ThirdPoint, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (pn, p) = point_arg(scene, opts, 0, Some("a"))?;
        let (qn, q) = point_arg(scene, opts, 1, Some("b"))?;
        let out = third_point_general(&curve_points(scene, &nine)?, p, q)?;
        r.output("r", Value::point(&out.value));
        r.absorb(&out, opts.verbose);
        let g = oracle_cubic(&nine)?;
        let expected = chord_third_root(&g, p, q)?;
        r.verify(
            format!("r equals the deflated third root on {pn}{qn}"),
            Source::Oracle,
            expected.equiv(&out.value),
        );
        on_curve_check(&mut r, &g, "r", &out.value)
    })();
    finish(r, body)
}

/// Cubic parameters with `a` in the first slot.
fn params_at(known: &[Point], a: &Point) -> Result<crate::construct::FitTrace> {
    search_labellings(known, std::slice::from_ref(a), |n, unused| {
        let trace = fit_nine_points(n)?;
        for u in unused {
            if !trace.params.contains(u)? {
                return Err(Error::NotOnCurve(u.canonical().to_string()));
            }
        }
        Ok(trace)
    })
}

pub fn cmd_tangent(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::Tangent, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (an, a) = point_arg(scene, opts, 0, Some("a"))?;
        let trace = params_at(&curve_points(scene, &nine)?, a)?;
        let out = tangent_at_a(&trace.params)?;
        r.output("T", Value::line(&out.value));
        r.absorb(&out, opts.verbose);
        let g = oracle_cubic(&nine)?;
        let grad = gradient_tangent(&g, a);
        if grad.is_zero() {
            r.verify(
                format!("gradient vanishes at {an}, matching the singular-point diagnostic"),
                Source::Oracle,
                out.diagnostics.iter().any(|d| d.code() == "singular-point"),
            );
        } else {
            r.verify(
                "T equals the gradient tangent",
                Source::Oracle,
                grad.equiv(&out.value),
            );
            let order = contact_order(&g, &out.value, a)?;
            r.verify(
                format!("T meets the cubic at {an} with multiplicity >= 2"),
                Source::Oracle,
                order >= 2,
            );
        }
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_tangent_third(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::TangentThird, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (an, a) = point_arg(scene, opts, 0, Some("a"))?;
        let known = curve_points(scene, &nine)?;
        let out = tangent_third_general(&known, a)?;
        r.output("w", Value::point(&out.value));
        r.absorb(&out, opts.verbose);
        let g = oracle_cubic(&nine)?;
        let expected = tangent_third_root(&g, a)?;
        r.verify(
            format!("w equals the deflated remaining root of the tangent at {an}"),
            Source::Oracle,
            expected.equiv(&out.value),
        );
        on_curve_check(&mut r, &g, "w", &out.value)?;
        let other = tangent_third_via_89(&known, a)?;
        r.verify(
            "the chord-only construction gives the same point",
            Source::CrossCheck,
            other.value.equiv(&out.value),
        );
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_is_flex(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::IsFlex, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (an, a) = point_arg(scene, opts, 0, Some("a"))?;
        let known = curve_points(scene, &nine)?;
        let out = tangent_third_general(&known, a)?;
        let flex = out.value.equiv(a);
        r.answer = Some(flex);
        r.output("w", Value::point(&out.value));
        r.output("flex", Value::Boolean { value: flex });
        r.absorb(&out, opts.verbose);
        let g = oracle_cubic(&nine)?;
        r.verify(
            format!("Hessian criterion agrees on {an}"),
            Source::Oracle,
            hessian_flex_oracle(&g, a) == flex,
        );
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_conic_sixth(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::ConicSixth, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let out = conic_cubic_sixth(&nine)?;
        let z = &out.value;
        r.output("z", Value::point(z));
        r.absorb(&out, opts.verbose);
        let five: Vec<Point> = ["a", "c", "d", "e", "f"]
            .iter()
            .map(|l| nine.get(l).unwrap().clone())
            .collect();
        let conic = nullspace_fit(&five, 2)?;
        r.output("conic", Value::polynomial(&conic));
        r.verify(
            "z lies on the nullspace conic through a, c, d, e, f",
            Source::Oracle,
            conic.evaluate(z).is_zero(),
        );
        on_curve_check(&mut r, &oracle_cubic(&nine)?, "z", z)?;
        let other = conic_cubic_sixth_via_89(&nine)?;
        r.verify(
            "the chord-only construction gives the same point",
            Source::CrossCheck,
            other.value.equiv(z),
        );
        Ok(())
    })();
    finish(r, body)
}

pub fn cmd_group_add(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::GroupAdd, scene, opts);
    let body = (|| {
        let nine = scene.nine()?;
        let (_, o) = point_arg(scene, opts, 0, None)?;
        let (pn, p) = point_arg(scene, opts, 1, None)?;
        let (qn, q) = point_arg(scene, opts, 2, None)?;
        let out = group_add(&curve_points(scene, &nine)?, o, p, q)?;
        r.output("sum", Value::point(&out.value));
        r.absorb(&out, opts.verbose);
        let g = oracle_cubic(&nine)?;
        let s = oracle_chord(&g, p, q)?;
        let expected = oracle_chord(&g, o, &s)?;
        r.verify(
            format!("{pn} + {qn} equals the sum by deflation"),
            Source::Oracle,
            expected.equiv(&out.value),
        );
        on_curve_check(&mut r, &g, "the sum", &out.value)
    })();
    finish(r, body)
}

pub fn cmd_pascal(scene: &Scene, opts: &Options) -> Report {
    let mut r = start(Command::Pascal, scene, opts);
    let body = (|| {
        let six: Vec<Point> = LABELS[..6]
            .iter()
            .map(|l| scene.point(l).cloned())
            .collect::<Result<_>>()?;
        let pts = pascal_points(&six[0], &six[1], &six[2], &six[3], &six[4], &six[5]);
        for (i, p) in pts.iter().enumerate() {
            if p.is_zero() {
                return Err(Error::DegenerateInput(format!(
                    "Pascal point {} is the zero point",
                    i + 1
                )));
            }
        }
        for (i, p) in pts.iter().enumerate() {
            r.output(&format!("p_{}", i + 1), Value::point(p));
        }
        let on_line = collinear(&pts[0], &pts[1], &pts[2]);
        r.answer = Some(on_line);
        r.output("collinear", Value::Boolean { value: on_line });
        let six: [Point; 6] = six.try_into().unwrap();
        r.verify(
            "collinearity matches the conic rank test on the six points",
            Source::Oracle,
            six_on_a_conic(&six) == on_line,
        );
        Ok(())
    })();
    finish(r, body)
}

/// Nine random grid points `a`..`i` and `--count` further points
/// `p_1, p_2, ...` on their cubic, found by chords.
pub fn cmd_random(opts: &Options) -> (Report, Option<Scene>) {
    let mut r = Report::new(
        Command::Random.name(),
        digest(&[Command::Random.name(), &opts.canonical()]),
    );
    let seed = opts.seed.unwrap_or(0);
    let count = opts.count.unwrap_or(0);
    let mut scene = Scene::default();
    scene.render.labels = true;
    let body = (|| {
        if count > 27 {
            return Err(Error::Usage("--count is at most 27".into()));
        }
        let nine = random_nine(seed);
        for (l, p) in LABELS.iter().zip(nine.points()) {
            scene.points.insert(l.to_string(), p.clone());
        }
        let extra = chord_bootstrap(&nine, count)?;
        if extra.len() < count {
            r.diagnose(
                "short",
                format!("only {} further points found", extra.len()),
            );
        }
        let g = oracle_cubic(&nine)?;
        r.output("cubic", Value::polynomial(&g));
        for (i, p) in extra.iter().enumerate() {
            let name = format!("p_{}", i + 1);
            r.output(&name, Value::point(p));
            on_curve_check(&mut r, &g, &name, p)?;
            scene.points.insert(name, p.clone());
        }
        r.verify(
            "a..i impose independent conditions on cubics",
            Source::Oracle,
            rank_of_points(nine.points(), 3) == 9,
        );
        Ok(())
    })();
    let ok = body.is_ok();
    let report = finish(r, body);
    (report, ok.then_some(scene))
}

/// Draws the scene's points and lines, the cubic through `a`..`i` when all
/// nine are present, and each expression: points and lines directly, and
/// scalars with a free `x` as curves.
pub fn cmd_plot(scene: &Scene, opts: &Options) -> (Report, Option<String>) {
    let mut r = start(Command::Plot, scene, opts);
    r.notes.push(
        "drawing coordinates are floating-point approximations for display only; \
         every verdict in this report uses exact rational arithmetic"
            .into(),
    );
    let mut svg = None;
    let body = (|| {
        let mut all: Vec<Point> = scene.points.values().cloned().collect();
        let env = scene.environment();
        let mut free = env.clone();
        free.clear_x();
        let mut drawn: Vec<(String, GeomObject)> = Vec::new();
        let mut curves: Vec<(String, HomPoly)> = Vec::new();

        if LABELS.iter().all(|l| scene.points.contains_key(*l)) {
            let nine = scene.nine()?;
            let trace = fit_nine_points(&nine)?;
            let f = trace.params.expand()?;
            r.verify(
                "drawn cubic equals the nullspace cubic",
                Source::Oracle,
                f.projectively_equal(&oracle_cubic(&nine)?),
            );
            r.output("cubic", Value::polynomial(&f));
            curves.push(("cubic".into(), f));
        }
        for (name, text) in &scene.exprs {
            let parsed = parse(text)?;
            if parsed.expr.contains_var() && env.x().is_none() {
                match eval_symbolic(&parsed.expr, &free)? {
                    SymValue::Scalar(f) if !f.is_zero() => {
                        r.output(name, Value::polynomial(&f));
                        curves.push((name.clone(), f));
                    }
                    _ => r.diagnose("not-drawn", format!("`{name}` is not a curve")),
                }
            } else {
                let v = eval_numeric(&parsed.expr, &env)?;
                r.output(name, Value::object(&v));
                if let GeomObject::Point(p) = &v {
                    if !p.is_zero() {
                        all.push(p.clone());
                    }
                }
                drawn.push((name.clone(), v));
            }
        }
        for (name, f) in &curves {
            let on: Vec<&String> = scene
                .points
                .iter()
                .filter(|(n, p)| n.as_str() != "x" && f.evaluate(p).is_zero())
                .map(|(n, _)| n)
                .collect();
            if !on.is_empty() {
                let names: Vec<&str> = on.iter().map(|s| s.as_str()).collect();
                r.output(
                    &format!("on {name}"),
                    Value::Text {
                        value: names.join(" "),
                    },
                );
            }
        }

        let view = scene.render.viewport.unwrap_or_else(|| fit_viewport(&all));
        let mut c = Canvas::new(view, scene.render.labels);
        for (_, f) in &curves {
            c.curve(f, Style::Curve);
        }
        for (name, l) in &scene.lines {
            c.line(l, Some(name), Style::Construction);
        }
        for (name, v) in &drawn {
            if let GeomObject::Line(l) = v {
                c.line(l, Some(name), Style::Highlight);
            }
        }
        let mut hidden = Vec::new();
        for (name, p) in &scene.points {
            if !c.point(p, Some(name), Style::Curve) {
                hidden.push(name.clone());
            }
        }
        for (name, v) in &drawn {
            if let GeomObject::Point(p) = v {
                if !c.point(p, Some(name), Style::Highlight) {
                    hidden.push(name.clone());
                }
            }
        }
        if !hidden.is_empty() {
            r.diagnose(
                "outside-viewport",
                format!(
                    "not shown (at infinity or outside the viewport): {}",
                    hidden.join(", ")
                ),
            );
        }
        svg = Some(c.finish());
        Ok(())
    })();
    let report = finish(r, body);
    let svg = if report.error.is_none() { svg } else { None };
    (report, svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scene() -> Scene {
        let mut s = Scene::default();
        s.render.labels = true;
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
        ];
        for (l, (x, y)) in LABELS.iter().zip(pts) {
            s.points.insert(l.to_string(), Point::affine(x, y));
        }
        s
    }

    fn opts(points: &[&str]) -> Options {
        Options {
            points: points.iter().map(|s| s.to_string()).collect(),
            ..Options::default()
        }
    }

    #[test]
    fn names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("fit".parse::<Command>().is_err());
    }

    #[test]
    fn construction_commands_verify() {
        let s = scene();
        for (cmd, pts) in [
            (Command::Fit9, vec![]),
            (Command::ThirdPoint, vec!["c", "e"]),
            (Command::Tangent, vec!["d"]),
            (Command::TangentThird, vec![]),
            (Command::IsFlex, vec![]),
            (Command::ConicSixth, vec![]),
        ] {
            let rep = dispatch(cmd, &s, &opts(&pts));
            assert!(rep.error.is_none(), "{cmd}: {:?}", rep.error);
            assert!(!rep.verification.is_empty(), "{cmd}");
            assert!(rep.verified(), "{cmd}: {:?}", rep.verification);
        }
        assert_eq!(dispatch(Command::IsFlex, &s, &opts(&[])).exit_code, 1);
    }

    #[test]
    fn check10_exit_codes() {
        let mut s = scene();
        s.points.insert("j".into(), Point::affine(1, 1));
        assert_eq!(cmd_check10(&s, &opts(&["j"])).exit_code, 1);
        assert_eq!(cmd_check10(&s, &opts(&["g"])).exit_code, 0);
        assert_eq!(cmd_check10(&s, &opts(&[])).exit_code, 3);
        s.points.insert("i".into(), Point::affine(3, 0));
        let rep = cmd_check10(&s, &opts(&["j"]));
        assert_eq!(
            (rep.exit_code, rep.error.unwrap().code.as_str()),
            (2, "general-position")
        );
    }

    #[test]
    fn eval_symbolic_and_numeric() {
        let s = scene();
        let mut o = opts(&[]);
        o.expr = Some("xab".into());
        let rep = cmd_eval(&s, &o);
        assert!(rep.verified() && rep.exit_code == 0);
        assert!(matches!(
            rep.outputs[0].value,
            Value::Polynomial { degree: 1, .. }
        ));
        o.expr = Some("(ab.cd)=0".into());
        assert_eq!(cmd_eval(&s, &o).exit_code, 1);
        o.expr = Some("ab(".into());
        assert_eq!(cmd_eval(&s, &o).exit_code, 3);
    }

    #[test]
    fn random_is_deterministic() {
        let o = Options {
            seed: Some(5),
            count: Some(3),
            ..Options::default()
        };
        let (r1, s1) = cmd_random(&o);
        let (r2, s2) = cmd_random(&o);
        assert_eq!(r1.to_json(), r2.to_json());
        let s1 = s1.unwrap();
        assert_eq!(s1.to_toml(), s2.unwrap().to_toml());
        assert_eq!(s1.points.len(), 12);
        assert_eq!(cmd_check10(&s1, &opts(&["p_3"])).exit_code, 0);
    }

    #[test]
    fn plot_draws_the_cubic() {
        let mut s = scene();
        s.exprs.insert("m".into(), "ab.cd".into());
        let (rep, svg) = cmd_plot(&s, &opts(&[]));
        assert_eq!(rep.exit_code, 0, "{:?}", rep.error);
        let svg = svg.unwrap();
        assert!(svg.contains("<path") && svg.contains(">m</text>"));
    }
}
