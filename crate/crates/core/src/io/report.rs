//! Command reports, serialized as JSON with a fixed field order.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::construct::{Diagnostic, Outcome, Step};
use crate::error::Error;
use crate::geom::{GeomObject, Line, Point};
use crate::poly::{HomPoly, PolyVector};

/// Exit status when a result fails its oracle verification.
pub const VERIFICATION_FAILED: i32 = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Value {
    Point {
        coords: [String; 3],
    },
    Line {
        coeffs: [String; 3],
    },
    Scalar {
        value: String,
    },
    Polynomial {
        degree: u32,
        coefficients: Vec<String>,
        text: String,
    },
    /// A point or line whose coordinates are forms in `x`.
    Forms {
        of: String,
        entries: [String; 3],
    },
    Boolean {
        value: bool,
    },
    Text {
        value: String,
    },
}

impl Value {
    pub fn point(p: &Point) -> Value {
        Value::Point {
            coords: p.canonical().coords().clone().map(|s| s.to_string()),
        }
    }

    pub fn line(l: &Line) -> Value {
        Value::Line {
            coeffs: l.canonical().coeffs().clone().map(|s| s.to_string()),
        }
    }

    pub fn object(g: &GeomObject) -> Value {
        match g {
            GeomObject::Point(p) => Value::point(p),
            GeomObject::Line(l) => Value::line(l),
            GeomObject::Scalar(s) => Value::Scalar {
                value: s.to_string(),
            },
        }
    }

    pub fn polynomial(f: &HomPoly) -> Value {
        let f = f.canonical();
        Value::Polynomial {
            degree: f.degree(),
            coefficients: f.coefficients().iter().map(|c| c.to_string()).collect(),
            text: f.to_string(),
        }
    }

    pub fn forms(of: &str, v: &PolyVector) -> Value {
        Value::Forms {
            of: of.into(),
            entries: v.entries().clone().map(|e| e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Output {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    #[serde(flatten)]
    pub value: Value,
}

/// Where a verification entry comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Independent brute-force computation that shares no code with the
    /// construction.
    Oracle,
    /// An incidence the construction itself checks.
    Construction,
    /// A second construction of the same object.
    CrossCheck,
    /// A claim from the argument that the construction is correct.
    Proof,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub name: String,
    pub source: Source,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Note {
    pub code: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs_digest: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub answer: Option<bool>,
    pub outputs: Vec<Output>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<Output>,
    pub verification: Vec<Verification>,
    pub diagnostics: Vec<Note>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Note>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub exit_code: i32,
}

/// `sha256:` followed by the hex digest of `parts` joined by newlines.
pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            h.update(b"\n");
        }
        h.update(p.as_bytes());
    }
    let bytes = h.finalize();
    let mut s = String::from("sha256:");
    for b in bytes.iter() {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

impl Report {
    pub fn new(command: &str, inputs_digest: String) -> Report {
        Report {
            command: command.into(),
            inputs_digest,
            status: String::new(),
            answer: None,
            outputs: Vec::new(),
            steps: Vec::new(),
            verification: Vec::new(),
            diagnostics: Vec::new(),
            error: None,
            notes: Vec::new(),
            exit_code: 0,
        }
    }

    pub fn output(&mut self, name: &str, value: Value) {
        self.outputs.push(Output {
            name: name.into(),
            expr: None,
            value,
        });
    }

    pub fn verify(&mut self, name: impl Into<String>, source: Source, ok: bool) {
        self.verification.push(Verification {
            name: name.into(),
            source,
            ok,
        });
    }

    pub fn diagnose(&mut self, code: &str, message: impl Into<String>) {
        self.diagnostics.push(Note {
            code: code.into(),
            message: message.into(),
        });
    }

    pub fn steps(&mut self, steps: &[Step]) {
        for s in steps {
            self.steps.push(Output {
                name: s.name.clone(),
                expr: (!s.expr.is_empty()).then(|| s.expr.clone()),
                value: Value::object(&s.value),
            });
        }
    }

    /// Takes over the checks and diagnostics of a construction, and its
    /// steps when `verbose`.
    pub fn absorb<T>(&mut self, o: &Outcome<T>, verbose: bool) {
        if verbose {
            self.steps(&o.steps);
        }
        for c in &o.checks {
            self.verify(c.name.clone(), Source::Construction, c.ok);
        }
        for d in &o.diagnostics {
            self.diagnostic(d);
        }
    }

    pub fn diagnostic(&mut self, d: &Diagnostic) {
        self.diagnose(d.code(), d.to_string());
    }

    pub fn fail(&mut self, e: &Error) {
        self.error = Some(Note {
            code: e.code().into(),
            message: e.to_string(),
        });
        self.exit_code = e.exit_code();
    }

    pub fn verified(&self) -> bool {
        self.verification.iter().all(|v| v.ok)
    }

    /// Sets `status` and `exit_code`: the error's code if there is one,
    /// then 4 for a failed verification, then 1 for a negative answer.
    pub fn finish(mut self) -> Report {
        let (status, code) = if self.error.is_some() {
            ("error", self.exit_code)
        } else if !self.verified() {
            ("verification-failed", VERIFICATION_FAILED)
        } else {
            match self.answer {
                Some(true) => ("true", 0),
                Some(false) => ("false", 1),
                None => ("ok", 0),
            }
        };
        self.status = status.into();
        self.exit_code = code;
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
