//! Scene files: named points and lines with exact rational coordinates.
//!
//! ```toml
//! format = 1
//!
//! [points]
//! a = ["1", "-9", "6"]     # homogeneous [x0:x1:x2]
//! b = [5, 0]               # affine, read as [1:5:0]
//!
//! [lines]
//! A = ["0", "1", "-1/2"]
//!
//! [exprs]
//! cubic = "(xaAa_1.xbBkCb_1.xc)"
//!
//! [render]
//! viewport = [-12.0, -12.0, 12.0, 12.0]
//! labels = true
//! ```
//!
//! Numbers may be integers or strings holding integers or fractions. A
//! point named `x` is the value of the variable `x`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Deserialize;

use crate::construct::{NinePoints, LABELS};
use crate::error::{Error, Result};
use crate::expr::{name_kind, Environment};
use crate::geom::{Kind, Line, Point};
use crate::scalar::Scalar;

pub const FORMAT: i64 = 1;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Render {
    /// `[xmin, ymin, xmax, ymax]` in affine coordinates.
    pub viewport: Option<[f64; 4]>,
    pub labels: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scene {
    pub points: BTreeMap<String, Point>,
    pub lines: BTreeMap<String, Line>,
    pub exprs: BTreeMap<String, String>,
    pub render: Render,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRender {
    viewport: Option<[f64; 4]>,
    labels: Option<bool>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScene {
    format: i64,
    #[serde(default)]
    points: BTreeMap<String, Vec<Num>>,
    #[serde(default)]
    lines: BTreeMap<String, Vec<Num>>,
    #[serde(default)]
    exprs: BTreeMap<String, String>,
    render: Option<RawRender>,
}

fn scalars(name: &str, raw: &[Num]) -> Result<Vec<Scalar>> {
    raw.iter()
        .map(|n| match n {
            Num::Int(i) => Ok(Scalar::from(*i)),
            Num::Text(s) => s
                .parse::<Scalar>()
                .map_err(|_| Error::Scene(format!("`{name}`: {s:?} is not a rational number"))),
        })
        .collect()
}

impl Scene {
    pub fn parse(text: &str) -> Result<Scene> {
        let raw: RawScene =
            toml::from_str(text).map_err(|e| Error::Scene(e.message().to_string()))?;
        if raw.format != FORMAT {
            return Err(Error::Scene(format!(
                "unsupported format {}, expected {FORMAT}",
                raw.format
            )));
        }
        let mut scene = Scene::default();
        for (name, v) in &raw.points {
            if name != "x" && name_kind(name) != Some(Kind::Point) {
                return Err(Error::Scene(format!("`{name}` is not a point name")));
            }
            let c = scalars(name, v)?;
            let p = match c.as_slice() {
                [x, y] => Point([Scalar::one(), x.clone(), y.clone()]),
                [x0, x1, x2] => Point([x0.clone(), x1.clone(), x2.clone()]),
                _ => {
                    return Err(Error::Scene(format!(
                        "point `{name}` needs 2 or 3 coordinates"
                    )))
                }
            };
            if p.is_zero() {
                return Err(Error::Scene(format!("point `{name}` is the zero triple")));
            }
            scene.points.insert(name.clone(), p);
        }
        for (name, v) in &raw.lines {
            if name_kind(name) != Some(Kind::Line) {
                return Err(Error::Scene(format!("`{name}` is not a line name")));
            }
            let c = scalars(name, v)?;
            let [l0, l1, l2] = c.as_slice() else {
                return Err(Error::Scene(format!("line `{name}` needs 3 coefficients")));
            };
            let l = Line([l0.clone(), l1.clone(), l2.clone()]);
            if l.is_zero() {
                return Err(Error::Scene(format!("line `{name}` is the zero triple")));
            }
            scene.lines.insert(name.clone(), l);
        }
        scene.exprs = raw.exprs;
        if let Some(r) = raw.render {
            if let Some([x0, y0, x1, y1]) = r.viewport {
                if !(x0 < x1 && y0 < y1) || [x0, y0, x1, y1].iter().any(|v| !v.is_finite()) {
                    return Err(Error::Scene(
                        "viewport must be [xmin, ymin, xmax, ymax]".into(),
                    ));
                }
            }
            scene.render = Render {
                viewport: r.viewport,
                labels: r.labels.unwrap_or(true),
            };
        } else {
            scene.render.labels = true;
        }
        Ok(scene)
    }

    /// Canonical text form: sections and keys sorted, every number a
    /// string, points homogeneous.
    pub fn to_toml(&self) -> String {
        let triple = |t: &[Scalar; 3]| format!("[\"{}\", \"{}\", \"{}\"]", t[0], t[1], t[2]);
        let mut s = format!("format = {FORMAT}\n");
        if !self.points.is_empty() {
            s.push_str("\n[points]\n");
            for (n, p) in &self.points {
                let _ = writeln!(s, "{n} = {}", triple(p.coords()));
            }
        }
        if !self.lines.is_empty() {
            s.push_str("\n[lines]\n");
            for (n, l) in &self.lines {
                let _ = writeln!(s, "{n} = {}", triple(l.coeffs()));
            }
        }
        if !self.exprs.is_empty() {
            s.push_str("\n[exprs]\n");
            for (n, e) in &self.exprs {
                let _ = writeln!(s, "{} = {}", toml_key(n), toml_string(e));
            }
        }
        let r = &self.render;
        if r.viewport.is_some() || !r.labels {
            s.push_str("\n[render]\n");
            if let Some(v) = r.viewport {
                let _ = writeln!(
                    s,
                    "viewport = [{:?}, {:?}, {:?}, {:?}]",
                    v[0], v[1], v[2], v[3]
                );
            }
            let _ = writeln!(s, "labels = {}", r.labels);
        }
        s
    }

    pub fn point(&self, name: &str) -> Result<&Point> {
        self.points
            .get(name)
            .ok_or_else(|| Error::Scene(format!("no point named `{name}`")))
    }

    /// The points labelled `a` through `i`.
    pub fn nine(&self) -> Result<NinePoints> {
        let pts: Vec<Point> = LABELS
            .iter()
            .map(|l| self.point(l).cloned())
            .collect::<Result<_>>()?;
        NinePoints::from_slice(&pts)
    }

    /// Every point and line, with `x` bound if the scene has it.
    pub fn environment(&self) -> Environment {
        let mut env = Environment::new();
        for (n, p) in &self.points {
            if n == "x" {
                env.set_x(p.clone());
            } else {
                env.bind(n, p.clone()).expect("names checked on parse");
            }
        }
        for (n, l) in &self.lines {
            env.bind(n, l.clone()).expect("names checked on parse");
        }
        env
    }
}

fn toml_key(k: &str) -> String {
    if !k.is_empty()
        && k.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
    {
        k.to_string()
    } else {
        toml_string(k)
    }
}

fn toml_string(v: &str) -> String {
    let mut out = String::from("\"");
    for c in v.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if c.is_control() => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
format = 1

[points]
a = ["1", "-9", "6"]
b = [5, 0]
x = ["2", "1/3", "-4"]

[lines]
A = ["0", "1", "-1/2"]

[exprs]
"the cubic" = "(xaAa_1.xbBkCb_1.xc)"
"#;

    #[test]
    fn parses_and_round_trips() {
        let s = Scene::parse(SAMPLE).unwrap();
        assert_eq!(s.points["b"], Point::new(1, 5, 0));
        assert_eq!(
            s.lines["A"],
            Line([0.into(), 1.into(), Scalar::ratio(-1, 2)])
        );
        assert!(s.render.labels);
        let text = s.to_toml();
        assert_eq!(Scene::parse(&text).unwrap(), s);
        assert_eq!(Scene::parse(&text).unwrap().to_toml(), text);
        assert_eq!(
            s.environment().x(),
            Some(&Point([2.into(), Scalar::ratio(1, 3), (-4).into()]))
        );
    }

    #[test]
    fn rejects_bad_input() {
        let cases = [
            "format = 2",
            "points = 3",
            "format = 1\n[points]\nA = [1, 2]",
            "format = 1\n[lines]\na = [1, 2, 3]",
            "format = 1\n[points]\na = [1]",
            "format = 1\n[points]\na = [0, 0, 0]",
            "format = 1\n[points]\na = [\"1/0\", 2]",
            "format = 1\n[render]\nviewport = [1.0, 0.0, 0.0, 1.0]",
            "format = 1\ncolour = 3",
        ];
        for c in cases {
            assert!(matches!(Scene::parse(c), Err(Error::Scene(_))), "{c}");
        }
    }
}
