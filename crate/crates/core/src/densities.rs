//! Determinant density, volume-bound formulas and the `ξ_n` factor.

use crate::adequacy::adequacy_report;
use crate::diagram::{is_alternating, is_reduced, twist_regions, LinkDiagram};
use crate::error::{Error, Result};
use crate::invariants::determinant;
use num_bigint::BigUint;
use std::collections::HashMap;
use std::f64::consts::{LN_2, PI};
use std::path::Path;

/// Volume of the regular ideal octahedron, four times Catalan's constant.
pub const V8: f64 = 3.663862376708876;
/// Volume of the regular ideal tetrahedron.
pub const V3: f64 = 1.014941606409653;

/// Natural log of a positive big integer from its top 64 bits.
pub fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        let v = n.iter_u64_digits().next().unwrap_or(0);
        return (v as f64).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).iter_u64_digits().next().unwrap_or(0);
    (top as f64).ln() + shift as f64 * LN_2
}

/// `2π ln(det) / c`; zero determinant gives `-∞`.
pub fn density_of(det: &BigUint, crossings: usize) -> f64 {
    if det.bits() == 0 {
        return f64::NEG_INFINITY;
    }
    2.0 * PI * ln_big(det) / crossings as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct DensityReport {
    pub id: String,
    pub crossings: usize,
    pub determinant: BigUint,
    pub det_density: f64,
    /// The diagram is adequate, so `crossings` is the crossing number.
    pub certified_crossing: bool,
    /// Determinant zero; density is `-∞`.
    pub degenerate: bool,
}

pub fn det_density(d: &LinkDiagram, id: &str) -> Result<DensityReport> {
    let c = d.crossing_count();
    if c == 0 {
        return Err(Error::domain("determinant density is undefined for a diagram without crossings"));
    }
    let det = determinant(d)?;
    Ok(DensityReport {
        id: id.to_string(),
        crossings: c,
        det_density: density_of(&det, c),
        degenerate: det.bits() == 0,
        determinant: det,
        certified_crossing: adequacy_report(d)?.adequate,
    })
}

/// `(1 - (8π / (11.524 + n·2^{1/4}))²)^{3/2}`, for `n ≥ 12`.
pub fn xi(n: u64) -> Result<f64> {
    if n < 12 {
        return Err(Error::domain(format!(
            "xi(n) requires n >= 12 (hypothesis of the belted-sum volume estimate), got {n}"
        )));
    }
    let r = 8.0 * PI / (11.524 + n as f64 * 2f64.powf(0.25));
    Ok((1.0 - r * r).powf(1.5))
}

/// `10·v3·(tw - 1)` for a reduced diagram with at least two twist regions.
pub fn lackenby_upper(d: &LinkDiagram) -> Result<f64> {
    if !is_reduced(d)? {
        return Err(Error::domain("twist-region volume bound needs a reduced diagram"));
    }
    let tw = twist_regions(d)?;
    if tw < 2 {
        return Err(Error::domain(format!(
            "twist-region volume bound needs at least 2 twist regions, found {tw}"
        )));
    }
    Ok(10.0 * V3 * (tw - 1) as f64)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdamsBound {
    pub value: f64,
    /// Computed from a certified crossing number rather than a diagram count.
    pub certified: bool,
}

/// `(c - 5)·v8 + 4·v3` for `c ≥ 5`.
pub fn adams_upper(d: &LinkDiagram) -> Result<AdamsBound> {
    let c = d.crossing_count();
    if c < 5 {
        return Err(Error::domain(format!("crossing-number volume bound needs c >= 5, got {c}")));
    }
    Ok(AdamsBound {
        value: (c as f64 - 5.0) * V8 + 4.0 * V3,
        certified: adequacy_report(d)?.adequate,
    })
}

/// Externally computed hyperbolic volumes keyed by diagram id.
#[derive(Clone, Debug, Default)]
pub struct VolumeOracle {
    entries: HashMap<String, (f64, String)>,
}

impl VolumeOracle {
    /// Reads a CSV file with header `id,volume,source`.
    pub fn load(path: &Path) -> Result<Self> {
        Self::from_reader(std::fs::File::open(path)?)
    }

    pub fn from_reader<R: std::io::Read>(r: R) -> Result<Self> {
        let mut rdr = csv::Reader::from_reader(r);
        let headers = rdr.headers()?.clone();
        if headers.iter().collect::<Vec<_>>() != ["id", "volume", "source"] {
            return Err(Error::domain(format!(
                "volume file header must be `id,volume,source`, got `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            )));
        }
        let mut entries = HashMap::new();
        for (i, rec) in rdr.records().enumerate() {
            let rec = rec?;
            let line = i + 2;
            let vol: f64 = rec[1]
                .trim()
                .parse()
                .map_err(|_| Error::parse(line, format!("volume `{}` is not a number", &rec[1])))?;
            if !(vol > 0.0 && vol.is_finite()) {
                return Err(Error::parse(line, format!("volume must be positive, got {vol}")));
            }
            entries.insert(rec[0].trim().to_string(), (vol, rec[2].trim().to_string()));
        }
        Ok(VolumeOracle { entries })
    }

    pub fn insert(&mut self, id: &str, volume: f64, source: &str) {
        self.entries.insert(id.to_string(), (volume, source.to_string()));
    }

    pub fn get(&self, id: &str) -> Option<(f64, &str)> {
        self.entries.get(id).map(|(v, s)| (*v, s.as_str()))
    }
}

/// Bounds on volume divided by crossing count.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeBoundInterval {
    pub lower: f64,
    pub upper: f64,
    pub basis: Vec<String>,
}

pub fn vol_density_interval(
    d: &LinkDiagram,
    id: &str,
    oracle: Option<&VolumeOracle>,
) -> Result<VolumeBoundInterval> {
    let c = d.crossing_count();
    if c == 0 {
        return Err(Error::domain("volume density is undefined for a diagram without crossings"));
    }
    let mut basis = vec!["octahedral: vol < v8 * c".to_string()];
    let mut upper = V8 * c as f64;
    if is_reduced(d)? && is_alternating(d)? {
        if let Ok(l) = lackenby_upper(d) {
            basis.push(format!("twist regions: vol <= 10 * v3 * (tw - 1) = {l:.12}"));
            upper = upper.min(l);
        }
    }
    if let Ok(a) = adams_upper(d) {
        let tag = if a.certified { "certified c" } else { "diagram c" };
        basis.push(format!("crossings: vol <= (c - 5) * v8 + 4 * v3 = {:.12} ({tag})", a.value));
        upper = upper.min(a.value);
    }
    let mut lower = 0.0;
    if let Some((vol, source)) = oracle.and_then(|o| o.get(id)) {
        if vol > upper * (1.0 + 1e-12) {
            return Err(Error::Inconsistency(format!(
                "oracle volume {vol} for `{id}` exceeds the upper bound {upper}"
            )));
        }
        basis.push(format!("oracle: vol = {vol} ({source})"));
        lower = vol / c as f64;
    }
    Ok(VolumeBoundInterval {
        lower,
        upper: upper / c as f64,
        basis,
    })
}
