//! Serializable reports and their text/CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use flatfocal::focal::{FocalClass, Zone};
use flatfocal::spectra::{Discrepancy, FocalSpectrum, LengthSpectrum, Multiplicity, SpectrumDiff, Verdict};
use flatfocal::Scalar;
use serde::{Deserialize, Serialize};

pub fn s(x: &Scalar) -> String {
    x.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shell {
    pub norm2: String,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfoReport {
    pub name: Option<String>,
    pub rank: usize,
    pub gram: Vec<Vec<String>>,
    pub determinant: String,
    pub minimal_norm2: String,
    pub minimal_vectors: u64,
    pub cutoff2: String,
    pub shells: Vec<Shell>,
}

impl InfoReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        if let Some(name) = &self.name {
            writeln!(out, "name: {name}").unwrap();
        }
        writeln!(out, "rank: {}", self.rank).unwrap();
        writeln!(out, "determinant: {}", self.determinant).unwrap();
        writeln!(out, "minimal norm2: {}", self.minimal_norm2).unwrap();
        writeln!(out, "minimal vectors: {}", self.minimal_vectors).unwrap();
        writeln!(out, "gram:").unwrap();
        for row in &self.gram {
            writeln!(out, "  {}", row.join(" ")).unwrap();
        }
        writeln!(out, "shells (norm2 <= {}):", self.cutoff2).unwrap();
        for sh in &self.shells {
            writeln!(out, "  {} {}", sh.norm2, sh.count).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub point: Vec<String>,
    pub mu: u64,
    pub iota: u64,
    pub brillouin: u64,
    pub sigma_index: u64,
    /// Zone index when the point is interior to a zone.
    pub zone: Option<u64>,
    pub boundary: bool,
    pub nu: usize,
    pub incident: Vec<Vec<i64>>,
}

impl ClassifyReport {
    pub fn new(point: &flatfocal::QVector, c: &FocalClass) -> Self {
        ClassifyReport {
            point: point.0.iter().map(s).collect(),
            mu: c.mu,
            iota: c.iota,
            brillouin: c.brillouin,
            sigma_index: c.sigma_index,
            zone: match c.zone {
                Zone::Interior(k) => Some(k),
                Zone::Boundary => None,
            },
            boundary: c.zone == Zone::Boundary,
            nu: c.nu,
            incident: c.incident.iter().map(|p| p.0.clone()).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "point: ({})", self.point.join(", ")).unwrap();
        writeln!(out, "mu: {}", self.mu).unwrap();
        writeln!(out, "iota: {}", self.iota).unwrap();
        writeln!(out, "brillouin: {}", self.brillouin).unwrap();
        writeln!(out, "sigma: {}", self.sigma_index).unwrap();
        match self.zone {
            Some(k) => writeln!(out, "zone: interior of B_{k}").unwrap(),
            None => writeln!(out, "zone: boundary").unwrap(),
        }
        writeln!(out, "nu: {}", self.nu).unwrap();
        let inc: Vec<String> = self
            .incident
            .iter()
            .map(|p| format!("({})", p.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        writeln!(out, "incident: {}", inc.join(" ")).unwrap();
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annulus {
    pub k: u64,
    pub r2_min: String,
    pub r2_max: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZonesReport {
    pub lattice: Option<String>,
    pub directions: usize,
    pub annuli: Vec<Annulus>,
}

impl ZonesReport {
    pub fn text(&self) -> String {
        let mut out = String::from("k r2_min r2_max\n");
        for a in &self.annuli {
            writeln!(out, "{} {} {}", a.k, a.r2_min, a.r2_max).unwrap();
        }
        out
    }
}

/// One spectrum row. `codim` maps each codimension to its share of the
/// multiplicity (focal spectra only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub rho2_num: String,
    pub rho2_den: String,
    pub multiplicity: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<BTreeMap<usize, u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub kind: String,
    pub lattice: Option<String>,
    pub cutoff2: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_codim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity_convention: Option<String>,
    pub entries: Vec<SpectrumRow>,
}

fn row(r: &Scalar, m: u64, codim: Option<BTreeMap<usize, u64>>) -> SpectrumRow {
    SpectrumRow {
        rho2_num: r.numer().to_string(),
        rho2_den: r.denom().to_string(),
        multiplicity: m,
        codim,
    }
}

pub fn convention_name(m: Multiplicity) -> &'static str {
    match m {
        Multiplicity::PointSet => "point-set",
        Multiplicity::GeneratingSubsets => "generating-subsets",
    }
}

impl SpectrumReport {
    pub fn length(name: Option<&str>, sp: &LengthSpectrum) -> Self {
        SpectrumReport {
            kind: "length".into(),
            lattice: name.map(str::to_owned),
            cutoff2: s(&sp.cutoff2),
            max_codim: None,
            multiplicity_convention: None,
            entries: sp.entries.iter().map(|(r, m)| row(r, *m, None)).collect(),
        }
    }

    pub fn focal(name: Option<&str>, sp: &FocalSpectrum) -> Self {
        SpectrumReport {
            kind: "focal".into(),
            lattice: name.map(str::to_owned),
            cutoff2: s(&sp.cutoff2),
            max_codim: Some(sp.max_codim),
            multiplicity_convention: Some(convention_name(sp.convention).into()),
            entries: sp
                .entries
                .iter()
                .map(|e| row(&e.rho2, e.multiplicity, Some(e.by_codim.clone())))
                .collect(),
        }
    }

    /// `rho2_num,rho2_den,multiplicity[,codim]`; the codim column reads
    /// `1:4;2:4`.
    pub fn csv(&self) -> String {
        let focal = self.kind == "focal";
        let mut out = String::from(if focal {
            "rho2_num,rho2_den,multiplicity,codim\n"
        } else {
            "rho2_num,rho2_den,multiplicity\n"
        });
        for r in &self.entries {
            write!(out, "{},{},{}", r.rho2_num, r.rho2_den, r.multiplicity).unwrap();
            if focal {
                let parts: Vec<String> = r.codim.iter().flatten().map(|(c, m)| format!("{c}:{m}")).collect();
                write!(out, ",{}", parts.join(";")).unwrap();
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffReport {
    pub equal: bool,
    pub first_discrepancy: Option<DiscrepancyReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub radius2: String,
    pub left: u64,
    pub right: u64,
}

impl From<&Discrepancy> for DiscrepancyReport {
    fn from(d: &Discrepancy) -> Self {
        DiscrepancyReport {
            radius2: s(&d.radius2),
            left: d.left,
            right: d.right,
        }
    }
}

impl From<&SpectrumDiff> for DiffReport {
    fn from(d: &SpectrumDiff) -> Self {
        DiffReport {
            equal: d.verdict == Verdict::EqualUpToCutoff,
            first_discrepancy: d.first_discrepancy.as_ref().map(DiscrepancyReport::from),
        }
    }
}

impl DiffReport {
    pub fn text(&self) -> String {
        match &self.first_discrepancy {
            None => "equal".into(),
            Some(d) => format!("differ at {}: {} vs {}", d.radius2, d.left, d.right),
        }
    }
}

/// Outcome of one step of a comparison: a value, a skip, or an error such
/// as an exhausted budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase<T> {
    Done(T),
    Skipped(String),
    Error(String),
}

impl<T> Phase<T> {
    pub fn map_text(&self, f: impl Fn(&T) -> String) -> String {
        match self {
            Phase::Done(t) => f(t),
            Phase::Skipped(why) => format!("skipped ({why})"),
            Phase::Error(e) => format!("not computed: {e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair<T> {
    pub left: T,
    pub right: T,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "result")]
pub enum IsometryReport {
    Certificate { scale: String, transform: Vec<Vec<String>> },
    SphereCount { norm2: String, left: u64, right: u64 },
    Determinant { left: String, right: String },
    SearchExhausted,
}

impl IsometryReport {
    pub fn text(&self) -> String {
        match self {
            IsometryReport::Certificate { scale, transform } => {
                let rows: Vec<String> = transform.iter().map(|r| format!("[{}]", r.join(", "))).collect();
                format!("isometric: {scale} * U^T G1 U = G2 with U = [{}]", rows.join(", "))
            }
            IsometryReport::SphereCount { norm2, left, right } => {
                format!("not isometric: {left} vs {right} vectors of normalized norm2 {norm2}")
            }
            IsometryReport::Determinant { left, right } => {
                format!("not isometric: normalized determinants {left} vs {right}")
            }
            IsometryReport::SearchExhausted => "not isometric: no basis image exists".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub left: Option<String>,
    pub right: Option<String>,
    pub rank: usize,
    pub scales: Pair<String>,
    pub isometry: Phase<IsometryReport>,
    pub length_spectrum: Phase<DiffReport>,
    pub root_graph_components: Phase<Pair<u64>>,
    pub focal_spectrum: Phase<DiffReport>,
    /// `equivalent`, `distinguished` or `inconclusive`.
    pub verdict: String,
    pub distinguished_by: Option<String>,
}

impl CompareReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        let name = |n: &Option<String>| n.clone().unwrap_or_else(|| "(unnamed)".into());
        writeln!(out, "left: {} (minimal norm2 {})", name(&self.left), self.scales.left).unwrap();
        writeln!(
            out,
            "right: {} (minimal norm2 {})",
            name(&self.right),
            self.scales.right
        )
        .unwrap();
        writeln!(out, "rank: {}", self.rank).unwrap();
        writeln!(out, "isometry: {}", self.isometry.map_text(IsometryReport::text)).unwrap();
        writeln!(
            out,
            "length spectrum: {}",
            self.length_spectrum.map_text(DiffReport::text)
        )
        .unwrap();
        writeln!(
            out,
            "root graph components: {}",
            self.root_graph_components
                .map_text(|p| format!("{} vs {}", p.left, p.right))
        )
        .unwrap();
        writeln!(
            out,
            "focal spectrum: {}",
            self.focal_spectrum.map_text(DiffReport::text)
        )
        .unwrap();
        match &self.distinguished_by {
            Some(by) => writeln!(out, "verdict: {} by {by}", self.verdict).unwrap(),
            None => writeln!(out, "verdict: {}", self.verdict).unwrap(),
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WittReport {
    pub lattices: Pair<String>,
    pub cutoff2: String,
    pub length_spectra: Phase<Pair<SpectrumReport>>,
    pub length_comparison: Phase<DiffReport>,
    pub root_graph_components: Phase<Pair<u64>>,
    pub focal_cutoff2: String,
    pub max_codim: usize,
    pub focal_spectra: Pair<Phase<SpectrumReport>>,
    pub focal_comparison: Phase<DiffReport>,
}

fn rows_text(sp: &SpectrumReport) -> String {
    sp.entries
        .iter()
        .map(|r| {
            let r2 = if r.rho2_den == "1" {
                r.rho2_num.clone()
            } else {
                format!("{}/{}", r.rho2_num, r.rho2_den)
            };
            format!("({r2}, {})", r.multiplicity)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl WittReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "lattices: {} vs {}", self.lattices.left, self.lattices.right).unwrap();
        writeln!(out, "length spectra (norm2 <= {}):", self.cutoff2).unwrap();
        match &self.length_spectra {
            Phase::Done(p) => {
                writeln!(out, "  {}: {}", self.lattices.left, rows_text(&p.left)).unwrap();
                writeln!(out, "  {}: {}", self.lattices.right, rows_text(&p.right)).unwrap();
            }
            other => writeln!(out, "  {}", other.map_text(|_| String::new())).unwrap(),
        }
        writeln!(
            out,
            "length comparison: {}",
            self.length_comparison.map_text(DiffReport::text)
        )
        .unwrap();
        writeln!(
            out,
            "root graph components: {}",
            self.root_graph_components
                .map_text(|p| format!("{} vs {}", p.left, p.right))
        )
        .unwrap();
        writeln!(
            out,
            "focal spectra (rho2 <= {}, codim <= {}):",
            self.focal_cutoff2, self.max_codim
        )
        .unwrap();
        writeln!(
            out,
            "  {}: {}",
            self.lattices.left,
            self.focal_spectra.left.map_text(rows_text)
        )
        .unwrap();
        writeln!(
            out,
            "  {}: {}",
            self.lattices.right,
            self.focal_spectra.right.map_text(rows_text)
        )
        .unwrap();
        writeln!(
            out,
            "focal comparison: {}",
            self.focal_comparison.map_text(DiffReport::text)
        )
        .unwrap();
        out
    }
}
