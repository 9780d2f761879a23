//! Browser bindings: a random scene, its drawing, and constructions whose
//! result is added to the scene and drawn.

use grassmann::io::report::Value;
use grassmann::io::{run, Artifact, Command, Options, Report, Scene};
use grassmann::{Line, Point, Scalar};
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Scene TOML with nine random points in general position.
#[wasm_bindgen]
pub fn random_scene(seed: u32) -> String {
    let opts = Options {
        seed: Some(seed.into()),
        ..Options::default()
    };
    match run(Command::Random, None, &opts).artifact {
        Some(Artifact::Scene(text)) => text,
        _ => String::new(),
    }
}

/// Runs `command` on the scene with comma-separated point names, adds the
/// constructed point or line to the scene and draws it. Returns JSON with
/// `report`, `scene` and `svg` (empty when nothing could be drawn).
#[wasm_bindgen]
pub fn apply(command: &str, scene: &str, points: &str) -> String {
    let cmd = match command.parse::<Command>() {
        Ok(c) => c,
        Err(e) => return json!({ "error": e.to_string() }).to_string(),
    };
    let opts = Options {
        points: points
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect(),
        ..Options::default()
    };
    let report = run(cmd, Some(scene), &opts).report;
    let scene = extend(scene, &report);
    let svg = draw(&scene);
    json!({
        "report": serde_json::to_value(&report).unwrap_or_default(),
        "scene": scene,
        "svg": svg,
    })
    .to_string()
}

/// The SVG drawing of a scene, or an empty string.
#[wasm_bindgen]
pub fn draw(scene: &str) -> String {
    match run(Command::Plot, Some(scene), &Options::default()).artifact {
        Some(Artifact::Svg(svg)) => svg,
        _ => String::new(),
    }
}

fn triple(v: &[String; 3]) -> Option<[Scalar; 3]> {
    let [a, b, c] = v;
    Some([a.parse().ok()?, b.parse().ok()?, c.parse().ok()?])
}

/// The scene with the report's point and line outputs added under their
/// output names.
fn extend(text: &str, report: &Report) -> String {
    let Ok(mut scene) = Scene::parse(text) else {
        return text.to_string();
    };
    for out in &report.outputs {
        match &out.value {
            Value::Point { coords } => {
                if let Some([a, b, c]) = triple(coords) {
                    scene.points.insert(out.name.clone(), Point::new(a, b, c));
                }
            }
            Value::Line { coeffs } => {
                if let Some([a, b, c]) = triple(coeffs) {
                    scene.lines.insert(out.name.clone(), Line::new(a, b, c));
                }
            }
            _ => {}
        }
    }
    scene.to_toml()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_point_is_added_and_drawn() {
        let scene = random_scene(3);
        assert!(scene.contains("[points]"));
        let out: serde_json::Value =
            serde_json::from_str(&apply("third-point", &scene, "a,b")).unwrap();
        assert_eq!(out["report"]["status"], "ok");
        assert!(out["scene"].as_str().unwrap().contains("\nr = "));
        assert!(out["svg"].as_str().unwrap().starts_with("<svg"));
    }

    #[test]
    fn tangent_line_is_added() {
        let scene = random_scene(5);
        let out: serde_json::Value = serde_json::from_str(&apply("tangent", &scene, "c")).unwrap();
        assert_eq!(out["report"]["exit_code"], 0);
        assert!(out["scene"].as_str().unwrap().contains("[lines]\nT = "));
    }

    #[test]
    fn bad_input_is_reported() {
        let out: serde_json::Value =
            serde_json::from_str(&apply("check10", "format = 1\n", "j")).unwrap();
        assert_eq!(out["report"]["status"], "error");
        assert!(!out["svg"].as_str().unwrap().contains("<circle"));
        let out: serde_json::Value = serde_json::from_str(&apply("nonsense", "", "")).unwrap();
        assert!(out["error"].is_string());
    }
}
