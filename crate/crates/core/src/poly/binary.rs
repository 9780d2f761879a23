use std::fmt;

use super::HomPoly;
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::Scalar;

/// A binary form `Σ c_i · s^(d-i) · t^i`. A root `(α:β)` is a ratio at which
/// the form vanishes; it corresponds to the linear factor `β·s - α·t`.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Scalar>,
}

impl BinaryForm {
    /// `coeffs[i]` multiplies `s^(d-i) t^i`, `d = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a binary form needs at least one coefficient"
        );
        BinaryForm { coeffs }
    }

    /// The linear form `a·s + b·t`.
    pub fn linear(a: Scalar, b: Scalar) -> Self {
        BinaryForm::new(vec![a, b])
    }

    pub fn one() -> Self {
        BinaryForm::new(vec![Scalar::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BinaryForm::new(out)
    }

    pub fn evaluate(&self, s: &Scalar, t: &Scalar) -> Scalar {
        let d = self.degree() as u32;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &s.pow(d - i as u32) * t.pow(i as u32))
            .sum()
    }

    /// Divides out the linear factor of the root `(α:β)`. Fails with
    /// `None` if `(α:β)` is not a root or is `(0:0)`.
    pub fn deflate(&self, alpha: &Scalar, beta: &Scalar) -> Option<BinaryForm> {
        let d = self.degree();
        if d == 0 || (alpha.is_zero() && beta.is_zero()) {
            return None;
        }
        let c = &self.coeffs;
        let mut g = Vec::with_capacity(d);
        if !beta.is_zero() {
            // c_i = β g_i - α g_{i-1}
            let mut prev = Scalar::zero();
            for ci in c.iter().take(d) {
                let gi = (ci + &(alpha * &prev)) / beta;
                g.push(gi.clone());
                prev = gi;
            }
            if !(&c[d] + &(alpha * &prev)).is_zero() {
                return None;
            }
        } else {
            // factor is -α t, so c_0 must vanish and g_{i-1} = -c_i / α
            if !c[0].is_zero() {
                return None;
            }
            for ci in c.iter().skip(1) {
                g.push(-(ci / alpha));
            }
        }
        Some(BinaryForm::new(g))
    }

    /// Order of vanishing at `(α:β)`. Panics on the zero form, whose
    /// multiplicity is unbounded.
    pub fn multiplicity(&self, alpha: &Scalar, beta: &Scalar) -> usize {
        assert!(!self.is_zero(), "multiplicity of the zero form");
        let mut f = self.clone();
        let mut m = 0;
        while let Some(g) = f.deflate(alpha, beta) {
            m += 1;
            f = g;
        }
        m
    }

    /// The root `(α:β)` of a nonzero linear form.
    pub fn linear_root(&self) -> Option<(Scalar, Scalar)> {
        if self.degree() != 1 || self.is_zero() {
            return None;
        }
        Some((self.coeffs[1].clone(), -&self.coeffs[0]))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm{:?}", self.coeffs)
    }
}

/// Restricts `f` to the line through `p` and `q` by substituting
/// `x = s·p + t·q`. The roots `(s:t)` of the result are the intersections of
/// the line with the curve `f = 0`; `(1:0)` is `p` and `(0:1)` is `q`.
pub fn restrict_to_line(f: &HomPoly, p: &Point, q: &Point) -> Result<BinaryForm> {
    if p.is_zero() || q.is_zero() || p.equiv(q) {
        return Err(Error::DegenerateInput(
            "restriction needs two distinct points".into(),
        ));
    }
    let d = f.degree() as usize;
    let lin: Vec<BinaryForm> = (0..3)
        .map(|i| BinaryForm::linear(p.coords()[i].clone(), q.coords()[i].clone()))
        .collect();
    // powers[i][e] = (p_i s + q_i t)^e
    let powers: Vec<Vec<BinaryForm>> = lin
        .iter()
        .map(|l| {
            let mut v = vec![BinaryForm::one()];
            for k in 0..d {
                let next = v[k].mul(l);
                v.push(next);
            }
            v
        })
        .collect();
    let mut out = vec![Scalar::zero(); d + 1];
    for (m, c) in f.terms() {
        let term = powers[0][m[0] as usize]
            .mul(&powers[1][m[1] as usize])
            .mul(&powers[2][m[2] as usize]);
        for (acc, t) in out.iter_mut().zip(term.coeffs()) {
            *acc += &(c * t);
        }
    }
    Ok(BinaryForm::new(out))
}
