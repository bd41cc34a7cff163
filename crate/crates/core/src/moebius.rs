//! Möbius transformations `z ↦ (az + b)/(cz + d)` with `ad − bc = 1` and
//! the Schottky coordinates of a loxodromic map: attracting fixed point
//! `z`, repelling fixed point `w` and multiplier `λ` (`0 < |λ| < 1`).
//!
//! This is the only floating-point module of the crate.  All comparisons
//! use the absolute tolerance [`TOLERANCE`].

use core::fmt;
use core::ops::Mul;

use num_complex::Complex64;

/// Absolute tolerance for all comparisons on complex entries.
pub const TOLERANCE: f64 = 1e-9;

/// Errors raised by Möbius computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MoebiusError {
    #[error("matrix is singular")]
    Singular,
    #[error("map has a fixed point at infinity (c = 0); conjugate it first")]
    DegenerateForm,
    #[error("map is {0}, not loxodromic")]
    NotLoxodromic(Classification),
    #[error("invalid fixed-point data: {0}")]
    DegenerateInput(&'static str),
}

/// Trace classification of a Möbius transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Classification {
    Identity,
    Parabolic,
    Elliptic,
    Loxodromic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Identity => "identity",
            Classification::Parabolic => "parabolic",
            Classification::Elliptic => "elliptic",
            Classification::Loxodromic => "loxodromic",
        })
    }
}

/// A normalized Möbius transformation, defined up to a global sign.
#[derive(Clone, Copy, Debug)]
pub struct MoebiusMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl MoebiusMap {
    /// Normalizes the entries by a square root of the determinant.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<MoebiusMap, MoebiusError> {
        let det = a * d - b * c;
        if det.norm() < TOLERANCE {
            return Err(MoebiusError::Singular);
        }
        let r = det.sqrt();
        Ok(MoebiusMap { a: a / r, b: b / r, c: c / r, d: d / r })
    }

    /// A map from real entries.
    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Result<MoebiusMap, MoebiusError> {
        MoebiusMap::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> MoebiusMap {
        let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        MoebiusMap { a: one, b: zero, c: zero, d: one }
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// The image of a finite point (infinite or NaN when `cz + d = 0`).
    pub fn apply(&self, z: Complex64) -> Complex64 {
        (self.a * z + self.b) / (self.c * z + self.d)
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &MoebiusMap) -> MoebiusMap {
        *g * *self * g.inverse()
    }

    /// Equality up to a global sign within `tol`.
    pub fn approx_eq(&self, o: &MoebiusMap, tol: f64) -> bool {
        let e = [self.a, self.b, self.c, self.d];
        let f = [o.a, o.b, o.c, o.d];
        let close = |s: f64| e.iter().zip(&f).all(|(x, y)| (*x - *y * s).norm() <= tol);
        close(1.0) || close(-1.0)
    }

    /// Trace classification with tolerance [`TOLERANCE`].
    pub fn classify(&self) -> Classification {
        if self.approx_eq(&MoebiusMap::identity(), TOLERANCE) {
            return Classification::Identity;
        }
        let t = self.trace();
        let t2 = t * t;
        if (t2 - 4.0).norm() <= TOLERANCE {
            Classification::Parabolic
        } else if t.im.abs() <= TOLERANCE && t2.re < 4.0 {
            Classification::Elliptic
        } else {
            Classification::Loxodromic
        }
    }

    /// Fixed points and multiplier of a loxodromic map with `c ≠ 0`.  The
    /// derivative at a fixed point `v` is `1/(cv + d)²`; the attracting
    /// point is the one where it has modulus below 1, and that derivative
    /// is the multiplier.
    pub fn fixed_data(&self) -> Result<FixedPointData, MoebiusError> {
        let class = self.classify();
        if class != Classification::Loxodromic {
            return Err(MoebiusError::NotLoxodromic(class));
        }
        if self.c.norm() < TOLERANCE {
            return Err(MoebiusError::DegenerateForm);
        }
        let t = self.trace();
        let root = (t * t - 4.0).sqrt();
        let v1 = (self.a - self.d + root) / (self.c * 2.0);
        let v2 = (self.a - self.d - root) / (self.c * 2.0);
        let deriv = |v: Complex64| {
            let k = self.c * v + self.d;
            (k * k).inv()
        };
        let (l1, l2) = (deriv(v1), deriv(v2));
        let (z, w, lambda) = if l1.norm() < l2.norm() { (v1, v2, l1) } else { (v2, v1, l2) };
        Ok(FixedPointData { z, w, lambda })
    }

    /// Conjugates away a fixed point at infinity: returns `h · self · h⁻¹`
    /// and `h`, where `h = (z + 1)/(z + 2)` when `c = 0` and `h = id`
    /// otherwise.  Fixed data of the result are the `h`-images of those of
    /// `self`; the multiplier is unchanged.
    pub fn normalize_placement(&self) -> (MoebiusMap, MoebiusMap) {
        if self.c.norm() >= TOLERANCE {
            return (*self, MoebiusMap::identity());
        }
        let h = MoebiusMap::real(1.0, 1.0, 1.0, 2.0).expect("det 1");
        (self.conjugate_by(&h), h)
    }

    /// The multiplier of a loxodromic map in any placement.
    pub fn multiplier(&self) -> Result<Complex64, MoebiusError> {
        Ok(self.normalize_placement().0.fixed_data()?.lambda)
    }

    /// The loxodromic map with the given fixed points and multiplier: with
    /// `r = z + w`, `s = zw`, `t = λ + 1/λ` it has
    /// `c = √((t − 2)/(r² − 4s))` (branch in the upper half plane),
    /// trace `√(t + 2)`, `a − d = rc`, and `b = (ad − 1)/c`.  The sign of
    /// the trace is the one making `z` attracting with multiplier `λ`.
    pub fn from_fixed_data(f: &FixedPointData) -> Result<MoebiusMap, MoebiusError> {
        f.validate()?;
        let (z, w, lambda) = (f.z, f.w, f.lambda);
        let r = z + w;
        let s = z * w;
        let t = lambda + lambda.inv();
        let mut c = ((t - 2.0) / (r * r - s * 4.0)).sqrt();
        if c.im < -TOLERANCE || (c.im.abs() <= TOLERANCE && c.re < 0.0) {
            c = -c;
        }
        let trace = (t + 2.0).sqrt();
        let build = |tr: Complex64| {
            let a = (r * c + tr) / 2.0;
            let d = (-r * c + tr) / 2.0;
            let b = (a * d - 1.0) / c;
            MoebiusMap { a, b, c, d }
        };
        let candidate = |m: &MoebiusMap| {
            let k = m.c * z + m.d;
            ((k * k).inv() - lambda).norm()
        };
        let (m1, m2) = (build(trace), build(-trace));
        Ok(if candidate(&m1) <= candidate(&m2) { m1 } else { m2 })
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, o: MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }
}

/// Schottky coordinates of a loxodromic map.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FixedPointData {
    /// Attracting fixed point.
    pub z: Complex64,
    /// Repelling fixed point.
    pub w: Complex64,
    /// Multiplier, `0 < |λ| < 1`.
    pub lambda: Complex64,
}

impl FixedPointData {
    pub fn validate(&self) -> Result<(), MoebiusError> {
        if (self.z - self.w).norm() <= TOLERANCE {
            return Err(MoebiusError::DegenerateInput("fixed points coincide"));
        }
        let n = self.lambda.norm();
        if n <= TOLERANCE || n >= 1.0 - TOLERANCE {
            return Err(MoebiusError::DegenerateInput("multiplier must satisfy 0 < |λ| < 1"));
        }
        if !(self.z.is_finite() && self.w.is_finite() && self.lambda.is_finite()) {
            return Err(MoebiusError::DegenerateInput("non-finite entry"));
        }
        Ok(())
    }

    /// Componentwise comparison within `tol`.
    pub fn approx_eq(&self, o: &FixedPointData, tol: f64) -> bool {
        (self.z - o.z).norm() <= tol && (self.w - o.w).norm() <= tol && (self.lambda - o.lambda).norm() <= tol
    }
}
