//! Structured results of inequality checks, with deterministic JSON and
//! CSV serialization.

use std::collections::BTreeMap;

use serde::Serialize;

/// Discretization sizes behind a report, so a reader can judge how much
/// trust the sampled suprema deserve.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ResolutionRecord {
    pub boundary_nodes: usize,
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    /// Evaluation points the extremal scan visited.
    pub grid_points: usize,
    /// Point pairs used, when the check is pairwise.
    pub pairs: usize,
}

/// Outcome of one quantitative check: the measured left- and right-hand
/// sides, the worst margin `rhs - lhs`, and whether the bound held (and
/// was attained, up to tolerance).
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub case: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub holds: bool,
    pub sharp: bool,
    /// Named constants that entered the bound (distortion, perimeter, ...).
    pub constants: BTreeMap<String, f64>,
    pub resolution: ResolutionRecord,
    pub notes: Vec<String>,
}

impl VerificationReport {
    /// Build a report from measured sides. `tol` is the slack allowed before
    /// declaring failure; `sharp_tol` is the relative window around zero
    /// margin that counts as equality.
    pub fn new(
        theorem_id: impl Into<String>,
        case: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
        sharp_tol: f64,
    ) -> Self {
        let margin = rhs - lhs;
        let holds = margin >= -tol;
        let sharp = holds && margin.abs() <= sharp_tol * rhs.abs().max(1.0);
        VerificationReport {
            theorem_id: theorem_id.into(),
            case: case.into(),
            lhs,
            rhs,
            margin,
            holds,
            sharp,
            constants: BTreeMap::new(),
            resolution: ResolutionRecord::default(),
            notes: Vec::new(),
        }
    }

    pub fn with_constant(mut self, key: &str, value: f64) -> Self {
        self.constants.insert(key.to_string(), value);
        self
    }

    pub fn with_resolution(mut self, resolution: ResolutionRecord) -> Self {
        self.resolution = resolution;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// Order reports by `(theorem_id, case)` so serialized output is stable
/// across runs regardless of assembly order.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| {
        (a.theorem_id.as_str(), a.case.as_str()).cmp(&(b.theorem_id.as_str(), b.case.as_str()))
    });
}

/// Pretty JSON array with a trailing newline.
pub fn to_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// CSV with a fixed header; constants are packed as `key=value;...` and
/// notes joined with `|` so each report stays on one line.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(
        "theorem_id,case,lhs,rhs,margin,holds,sharp,boundary_nodes,radial_nodes,angular_nodes,grid_points,pairs,constants,notes\n",
    );
    for r in reports {
        let constants = r
            .constants
            .iter()
            .map(|(k, v)| format!("{k}={v:e}"))
            .collect::<Vec<_>>()
            .join(";");
        let notes = r.notes.join("|");
        out.push_str(&format!(
            "{},{},{:e},{:e},{:e},{},{},{},{},{},{},{},{},{}\n",
            csv_escape(&r.theorem_id),
            csv_escape(&r.case),
            r.lhs,
            r.rhs,
            r.margin,
            r.holds,
            r.sharp,
            r.resolution.boundary_nodes,
            r.resolution.radial_nodes,
            r.resolution.angular_nodes,
            r.resolution.grid_points,
            r.resolution.pairs,
            csv_escape(&constants),
            csv_escape(&notes),
        ));
    }
    out
}
