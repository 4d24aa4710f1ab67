//! Closed-form reference mappings with known distortion data.
//!
//! Every entry carries exact jets, its source term `g = Δf`, and — where it
//! makes sense — the exact quasiconformal constant. The catalog is the
//! ground truth the verifiers are exercised against.

use crate::boundary::{BoundaryData, SourceField};
use crate::error::{Error, Result};
use crate::jet::WirtingerJet;
use crate::solver::DiskMap;
use crate::{c64, Complex64};
use std::f64::consts::TAU;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CatalogKind {
    /// `f(z) = z`
    Identity,
    /// `f(z) = M z`, `M > 0`
    Scale(f64),
    /// `f(z) = z + β z̄`, `|β| < 1`; `K = (1+|β|)/(1-|β|)`
    Shear(f64),
    /// `f(z) = z + c |z|²`, `0 <= c < 1/2`; `Δf = 4c`, `K = 1/(1-2c)`
    QuadraticSource(f64),
    /// `f(z) = z + c z |z|²`, `c >= 0`; `Δf = 8cz`, `K = (1+3c)/(1+c)`
    CubicSource(f64),
    /// `f(z) = v`: degenerate, used to exercise error paths
    Constant(Complex64),
}

#[derive(Debug, Clone)]
pub struct CatalogMap {
    kind: CatalogKind,
    label: String,
    source: SourceField,
    params: Vec<(&'static str, f64)>,
}

impl CatalogMap {
    pub fn new(kind: CatalogKind) -> Result<Self> {
        let (label, params) = match kind {
            CatalogKind::Identity => ("identity".to_string(), vec![]),
            CatalogKind::Scale(m) => {
                if !(m > 0.0 && m.is_finite()) {
                    return Err(Error::InvalidParameter(format!(
                        "scale factor must be positive and finite, got {m}"
                    )));
                }
                (format!("scale:{m}"), vec![("m", m)])
            }
            CatalogKind::Shear(beta) => {
                if !(beta.abs() < 1.0) {
                    return Err(Error::InvalidParameter(format!(
                        "shear needs |beta| < 1, got {beta}"
                    )));
                }
                (format!("shear:{beta}"), vec![("beta", beta)])
            }
            CatalogKind::QuadraticSource(c) => {
                if !(0.0..0.5).contains(&c) {
                    return Err(Error::InvalidParameter(format!(
                        "quadratic-source needs 0 <= c < 1/2 for a sense-preserving map, got {c}"
                    )));
                }
                (format!("quadratic-source:{c}"), vec![("c", c)])
            }
            CatalogKind::CubicSource(c) => {
                if !(c >= 0.0 && c.is_finite()) {
                    return Err(Error::InvalidParameter(format!(
                        "cubic-source needs c >= 0, got {c}"
                    )));
                }
                (format!("cubic-source:{c}"), vec![("c", c)])
            }
            CatalogKind::Constant(v) => (
                format!("constant:{},{}", v.re, v.im),
                vec![("re", v.re), ("im", v.im)],
            ),
        };
        let source = match kind {
            CatalogKind::QuadraticSource(c) => SourceField::constant(c64(4.0 * c, 0.0)),
            CatalogKind::CubicSource(c) => {
                SourceField::new(format!("{}*8*z", c), move |w| 8.0 * c * w)
            }
            _ => SourceField::zero(),
        };
        let map = Self {
            kind,
            label,
            source,
            params,
        };
        map.verify_consistency()?;
        Ok(map)
    }

    /// `label` syntax: `identity`, `scale:M`, `shear:B`, `quadratic-source:C`,
    /// `cubic-source:C`, `constant:RE[,IM]`.
    pub fn parse(label: &str) -> Result<Self> {
        let unknown = || Error::UnknownLabel(label.to_string());
        let mut parts = label.splitn(2, ':');
        let head = parts.next().ok_or_else(unknown)?;
        let arg = parts.next();
        let parse_f = |s: Option<&str>| -> Result<f64> {
            s.ok_or_else(unknown)?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::InvalidParameter(format!("bad parameter in '{label}': {e}")))
        };
        match head {
            "identity" => Self::new(CatalogKind::Identity),
            "scale" => Self::new(CatalogKind::Scale(parse_f(arg)?)),
            "shear" => Self::new(CatalogKind::Shear(parse_f(arg)?)),
            "quadratic-source" => Self::new(CatalogKind::QuadraticSource(parse_f(arg)?)),
            "cubic-source" => Self::new(CatalogKind::CubicSource(parse_f(arg)?)),
            "constant" => {
                let arg = arg.ok_or_else(unknown)?;
                let mut nums = arg.split(',');
                let re = nums
                    .next()
                    .unwrap_or("0")
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| Error::InvalidParameter(e.to_string()))?;
                let im = match nums.next() {
                    Some(s) => s
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| Error::InvalidParameter(e.to_string()))?,
                    None => 0.0,
                };
                Self::new(CatalogKind::Constant(c64(re, im)))
            }
            _ => Err(unknown()),
        }
    }

    pub fn kind(&self) -> CatalogKind {
        self.kind
    }

    pub fn params(&self) -> &[(&'static str, f64)] {
        &self.params
    }

    /// Maps exercised by `verify` when no explicit map is given.
    pub fn default_set() -> Vec<CatalogMap> {
        [
            "identity",
            "scale:2",
            "scale:5",
            "shear:0.5",
            "quadratic-source:0.1",
            "cubic-source:0.1",
        ]
        .iter()
        .map(|l| CatalogMap::parse(l).expect("default catalog entries are valid"))
        .collect()
    }

    /// One-line descriptions for the `catalog` command.
    pub fn listing() -> Vec<(String, String)> {
        vec![
            (
                "identity".into(),
                "f(z) = z; K = 1, g = 0; sharp case of the perimeter coefficient bound".into(),
            ),
            (
                "scale:M".into(),
                "f(z) = Mz, M > 0; K = 1, g = 0; sharp case of the radial coefficient bound".into(),
            ),
            (
                "shear:B".into(),
                "f(z) = z + B z̄, |B| < 1; K = (1+|B|)/(1-|B|), g = 0".into(),
            ),
            (
                "quadratic-source:C".into(),
                "f(z) = z + C |z|², 0 <= C < 1/2; Δf = 4C, K = 1/(1-2C)".into(),
            ),
            (
                "cubic-source:C".into(),
                "f(z) = z + C z |z|², C >= 0; Δf = 8Cz, K = (1+3C)/(1+C)".into(),
            ),
            (
                "constant:RE[,IM]".into(),
                "f(z) = const; degenerate differential, exercises error paths".into(),
            ),
        ]
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self.kind, CatalogKind::Constant(_))
    }

    fn jet_at(&self, z: Complex64) -> WirtingerJet {
        match self.kind {
            CatalogKind::Identity => WirtingerJet::new(z, c64(1.0, 0.0), c64(0.0, 0.0)),
            CatalogKind::Scale(m) => WirtingerJet::new(m * z, c64(m, 0.0), c64(0.0, 0.0)),
            CatalogKind::Shear(b) => {
                WirtingerJet::new(z + b * z.conj(), c64(1.0, 0.0), c64(b, 0.0))
            }
            CatalogKind::QuadraticSource(c) => WirtingerJet::new(
                z + c * z.norm_sqr(),
                1.0 + c * z.conj(),
                c * z,
            ),
            CatalogKind::CubicSource(c) => WirtingerJet::new(
                z * (1.0 + c * z.norm_sqr()),
                c64(1.0 + 2.0 * c * z.norm_sqr(), 0.0),
                c * z * z,
            ),
            CatalogKind::Constant(v) => WirtingerJet::new(v, c64(0.0, 0.0), c64(0.0, 0.0)),
        }
    }

    /// Construction-time check: `4 ∂_z̄ f_z = g` and the exact K dominates the
    /// grid distortion ratio.
    fn verify_consistency(&self) -> Result<()> {
        let h = 1e-6;
        let k_bound = self.exact_k();
        for i in 0..5 {
            for j in 0..8 {
                let r = 0.95 * (i as f64 + 0.5) / 5.0;
                let z = Complex64::from_polar(r, TAU * j as f64 / 8.0);
                let fz = |p: Complex64| self.jet_at(p).fz;
                let fx = (fz(z + h) - fz(z - h)) / (2.0 * h);
                let fy = (fz(z + c64(0.0, h)) - fz(z - c64(0.0, h))) / (2.0 * h);
                let dzbar_fz = 0.5 * (fx + c64(0.0, 1.0) * fy);
                let lap = 4.0 * dzbar_fz;
                let g = self.source.eval(z);
                if (lap - g).norm() > 1e-5 * (1.0 + g.norm()) {
                    return Err(Error::InvalidParameter(format!(
                        "catalog '{}' violates 4 ∂z̄ fz = g at {z}: {lap} vs {g}",
                        self.label
                    )));
                }
                if let Some(k) = k_bound {
                    let jet = self.jet_at(z);
                    let lambda = jet.min_stretch();
                    if lambda > 1e-12 && jet.op_norm() / lambda > k * (1.0 + 1e-6) {
                        return Err(Error::InvalidParameter(format!(
                            "catalog '{}' exceeds its exact K at {z}",
                            self.label
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl DiskMap for CatalogMap {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn value(&self, z: Complex64) -> Complex64 {
        self.jet_at(z).value
    }

    fn jet(&self, z: Complex64) -> WirtingerJet {
        self.jet_at(z)
    }

    fn boundary_data(&self, n: usize) -> Result<BoundaryData> {
        BoundaryData::from_fn(n, |t| self.value(Complex64::from_polar(1.0, t)))
    }

    fn source(&self) -> &SourceField {
        &self.source
    }

    fn exact_k(&self) -> Option<f64> {
        match self.kind {
            CatalogKind::Identity | CatalogKind::Scale(_) => Some(1.0),
            CatalogKind::Shear(b) => Some((1.0 + b.abs()) / (1.0 - b.abs())),
            CatalogKind::QuadraticSource(c) => Some(1.0 / (1.0 - 2.0 * c)),
            CatalogKind::CubicSource(c) => Some((1.0 + 3.0 * c) / (1.0 + c)),
            CatalogKind::Constant(_) => None,
        }
    }

    fn closed_disk(&self) -> bool {
        true
    }
}
