use std::time::Duration;

use anyhow::{bail, Context, Result};
use flatfocal::focal::{classify, farey_directions, zone_annuli};
use flatfocal::isometry::{is_isometric_up_to_scale, normalize_scale, Isometry, Witness, MAX_EXACT_RANK};
use flatfocal::lattice::{minimal_norm2, parse_lattice, Budget};
use flatfocal::quadspace::{int, parse_point, parse_scalar};
use flatfocal::spectra::{
    compare, focal_spectrum_with, length_spectrum_with, root_graph_components, Multiplicity, Spectrum, SpectrumDiff,
};
use flatfocal::{catalog, Lattice, Scalar};

use crate::args::{
    ClassifyArgs, CompareArgs, CsvOrJson, InfoArgs, Kind, LatticeSource, MultiplicityArg, SpectraArgs, TextOrJson,
    WittArgs, ZonesArgs,
};
use crate::report::*;
use crate::svg;

/// What a command prints and the exit code it asks for.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_points: u64,
    pub time_cap: Duration,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget::new(self.max_points, Some(self.time_cap))
    }
}

/// `catalog:NAME` or a path to a lattice file.
pub fn load(spec: &str) -> Result<Lattice> {
    if let Some(name) = spec.strip_prefix("catalog:") {
        return Ok(catalog(name)?);
    }
    let text = std::fs::read_to_string(spec).with_context(|| format!("cannot read {spec}"))?;
    parse_lattice(&text).with_context(|| format!("{spec}"))
}

fn load_source(src: &LatticeSource) -> Result<Lattice> {
    match (&src.catalog, &src.lattice) {
        (Some(name), _) => Ok(catalog(name)?),
        (None, Some(spec)) => load(spec),
        (None, None) => bail!("no lattice given"),
    }
}

fn scalar(flag: &str, text: &str) -> Result<Scalar> {
    parse_scalar(text).map_err(|e| anyhow::anyhow!("--{flag}: {e}"))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn info(args: &InfoArgs, limits: Limits) -> Result<Outcome> {
    let l = load_source(&args.source)?;
    let m = minimal_norm2(&l)?;
    let cutoff2 = match &args.cutoff2 {
        Some(c) => scalar("cutoff2", c)?,
        None => &m * int(2),
    };
    let sp = length_spectrum_with(&l, &cutoff2, &limits.budget())?;
    let report = InfoReport {
        name: l.name().map(str::to_owned),
        rank: l.rank(),
        gram: l.gram().rows().iter().map(|r| r.iter().map(s).collect()).collect(),
        determinant: s(&l.gram().determinant()),
        minimal_norm2: s(&m),
        minimal_vectors: sp.entries.iter().find(|(r, _)| *r == m).map_or(0, |e| e.1),
        cutoff2: s(&cutoff2),
        shells: sp
            .entries
            .iter()
            .map(|(r, c)| Shell { norm2: s(r), count: *c })
            .collect(),
    };
    Ok(Outcome::ok(match args.format {
        TextOrJson::Text => report.text(),
        TextOrJson::Json => json(&report),
    }))
}

pub fn classify_cmd(args: &ClassifyArgs) -> Result<Outcome> {
    let l = load_source(&args.source)?;
    let v = parse_point(&args.point).map_err(|e| anyhow::anyhow!("--point: {e}"))?;
    let report = ClassifyReport::new(&v, &classify(&l, &v)?);
    Ok(Outcome::ok(match args.format {
        TextOrJson::Text => report.text(),
        TextOrJson::Json => json(&report),
    }))
}

pub fn zones(args: &ZonesArgs) -> Result<Outcome> {
    let l = load_source(&args.source)?;
    if l.rank() != 2 {
        bail!("zones needs a rank-2 lattice, got rank {}", l.rank());
    }
    if args.k_max == 0 || args.directions == 0 {
        bail!("--k-max and --directions must be positive");
    }
    let dirs = farey_directions(args.directions);
    let annuli = zone_annuli(&l, args.k_max, &dirs)?;
    if let Some(path) = &args.svg {
        let doc = svg::zone_fan(&l, &dirs, &annuli)?;
        std::fs::write(path, doc).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let report = ZonesReport {
        lattice: l.name().map(str::to_owned),
        directions: dirs.len(),
        annuli: annuli
            .iter()
            .zip(1..)
            .map(|((lo, hi), k)| Annulus {
                k,
                r2_min: s(lo),
                r2_max: s(hi),
            })
            .collect(),
    };
    Ok(Outcome::ok(match args.format {
        TextOrJson::Text => report.text(),
        TextOrJson::Json => json(&report),
    }))
}

fn convention(m: MultiplicityArg) -> Multiplicity {
    match m {
        MultiplicityArg::PointSet => Multiplicity::PointSet,
        MultiplicityArg::GeneratingSubsets => Multiplicity::GeneratingSubsets,
    }
}

pub fn spectra(args: &SpectraArgs, limits: Limits) -> Result<Outcome> {
    let l = load_source(&args.source)?;
    let cutoff2 = scalar("cutoff2", &args.cutoff2)?;
    let budget = limits.budget();
    let report = match args.kind {
        Kind::Length => SpectrumReport::length(l.name(), &length_spectrum_with(&l, &cutoff2, &budget)?),
        Kind::Focal => SpectrumReport::focal(
            l.name(),
            &focal_spectrum_with(&l, &cutoff2, args.max_codim, convention(args.multiplicity), &budget)?,
        ),
    };
    Ok(Outcome::ok(match args.format {
        CsvOrJson::Csv => report.csv(),
        CsvOrJson::Json => json(&report),
    }))
}

fn phase<T>(r: flatfocal::Result<T>) -> Phase<T> {
    match r {
        Ok(t) => Phase::Done(t),
        Err(e) => Phase::Error(e.to_string()),
    }
}

fn spec_diff<S: Spectrum>(a: flatfocal::Result<S>, b: flatfocal::Result<S>) -> flatfocal::Result<SpectrumDiff> {
    compare(&a?, &b?)
}

fn differs(p: &Phase<DiffReport>) -> bool {
    matches!(p, Phase::Done(d) if !d.equal)
}

fn isometry_report(i: &Isometry) -> IsometryReport {
    match i {
        Isometry::Certificate(c) => IsometryReport::Certificate {
            scale: s(&c.scale),
            transform: c
                .transform
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        },
        Isometry::NotIsometric(Witness::SphereCount { norm2, left, right }) => IsometryReport::SphereCount {
            norm2: s(norm2),
            left: *left,
            right: *right,
        },
        Isometry::NotIsometric(Witness::Determinant { left, right }) => IsometryReport::Determinant {
            left: s(left),
            right: s(right),
        },
        Isometry::NotIsometric(Witness::SearchExhausted) => IsometryReport::SearchExhausted,
    }
}

/// Cutoffs are in the units of the left lattice; both lattices are
/// normalized to minimal norm 1 before comparing.
pub fn compare_cmd(args: &CompareArgs, limits: Limits) -> Result<Outcome> {
    let left = load(&args.left)?;
    let right = load(&args.right)?;
    if left.rank() != right.rank() {
        return Err(flatfocal::Error::RankMismatch {
            left: left.rank(),
            right: right.rank(),
        }
        .into());
    }
    let cutoff2 = scalar("cutoff2", &args.cutoff2)?;
    let focal_cutoff2 = scalar("focal-cutoff2", &args.focal_cutoff2)?;
    let (nl, ml) = normalize_scale(&left)?;
    let (nr, mr) = normalize_scale(&right)?;
    let (cutoff2, focal_cutoff2) = (&cutoff2 / &ml, &focal_cutoff2 / &ml);
    let rank = left.rank();

    let skipped = if rank <= MAX_EXACT_RANK {
        "exact decision made"
    } else {
        "an earlier invariant differs"
    };
    let mut report = CompareReport {
        left: left.name().map(str::to_owned),
        right: right.name().map(str::to_owned),
        rank,
        scales: Pair {
            left: s(&ml),
            right: s(&mr),
        },
        isometry: Phase::Skipped(format!("rank {rank} exceeds {MAX_EXACT_RANK}")),
        length_spectrum: Phase::Skipped(skipped.into()),
        root_graph_components: Phase::Skipped(skipped.into()),
        focal_spectrum: Phase::Skipped(skipped.into()),
        verdict: "inconclusive".into(),
        distinguished_by: None,
    };

    if rank <= MAX_EXACT_RANK {
        let iso = is_isometric_up_to_scale(&left, &right)?;
        report.isometry = Phase::Done(isometry_report(&iso));
        match iso {
            Isometry::Certificate(_) => report.verdict = "equivalent".into(),
            Isometry::NotIsometric(w) => {
                report.verdict = "distinguished".into();
                report.distinguished_by = Some(
                    match w {
                        Witness::SphereCount { .. } => "sphere counts",
                        Witness::Determinant { .. } => "determinant",
                        Witness::SearchExhausted => "isometry search",
                    }
                    .into(),
                );
            }
        }
        return Ok(finish(report, args.format));
    }

    report.length_spectrum = phase(
        spec_diff(
            length_spectrum_with(&nl, &cutoff2, &limits.budget()),
            length_spectrum_with(&nr, &cutoff2, &limits.budget()),
        )
        .map(|d| DiffReport::from(&d)),
    );
    if differs(&report.length_spectrum) {
        return Ok(finish(distinguished(report, "length spectrum"), args.format));
    }
    report.root_graph_components = phase(root_graph_components(&nl).and_then(|a| {
        Ok(Pair {
            left: a,
            right: root_graph_components(&nr)?,
        })
    }));
    if matches!(&report.root_graph_components, Phase::Done(p) if p.left != p.right) {
        return Ok(finish(distinguished(report, "root graph components"), args.format));
    }
    let max_codim = args.max_codim.min(rank);
    let focal =
        |l: &Lattice| focal_spectrum_with(l, &focal_cutoff2, max_codim, Multiplicity::PointSet, &limits.budget());
    report.focal_spectrum = phase(spec_diff(focal(&nl), focal(&nr)).map(|d| DiffReport::from(&d)));
    if differs(&report.focal_spectrum) {
        return Ok(finish(distinguished(report, "focal spectrum"), args.format));
    }
    Ok(finish(report, args.format))
}

fn distinguished(mut r: CompareReport, by: &str) -> CompareReport {
    r.verdict = "distinguished".into();
    r.distinguished_by = Some(by.into());
    r
}

fn finish(report: CompareReport, format: TextOrJson) -> Outcome {
    let code = match report.verdict.as_str() {
        "equivalent" => 0,
        "distinguished" => 1,
        _ => 2,
    };
    let stdout = match format {
        TextOrJson::Text => report.text(),
        TextOrJson::Json => json(&report),
    };
    Outcome { stdout, code }
}

/// Every phase runs with its own budget; a phase that fails is reported and
/// the rest still run.
pub fn witt(args: &WittArgs, limits: Limits) -> Result<Outcome> {
    let cutoff2 = scalar("cutoff2", &args.cutoff2)?;
    let focal_cutoff2 = match &args.focal_cutoff2 {
        Some(c) => scalar("focal-cutoff2", c)?,
        None => cutoff2.clone().min(int(2)),
    };
    let (a, b) = (catalog("E8xE8")?, catalog("D16plus")?);

    let lengths = length_spectrum_with(&a, &cutoff2, &limits.budget())
        .and_then(|x| Ok((x, length_spectrum_with(&b, &cutoff2, &limits.budget())?)));
    let length_comparison = match &lengths {
        Ok((x, y)) => phase(compare(x, y).map(|d| DiffReport::from(&d))),
        Err(e) => Phase::Error(e.to_string()),
    };
    let length_spectra = phase(lengths.map(|(x, y)| Pair {
        left: SpectrumReport::length(a.name(), &x),
        right: SpectrumReport::length(b.name(), &y),
    }));
    let root_graph_components = phase(root_graph_components(&a).and_then(|x| {
        Ok(Pair {
            left: x,
            right: root_graph_components(&b)?,
        })
    }));

    let focal = |l: &Lattice| {
        focal_spectrum_with(
            l,
            &focal_cutoff2,
            args.max_codim,
            Multiplicity::PointSet,
            &limits.budget(),
        )
    };
    let (fa, fb) = (focal(&a), focal(&b));
    let focal_comparison = match (&fa, &fb) {
        (Ok(x), Ok(y)) => phase(compare(x, y).map(|d| DiffReport::from(&d))),
        _ => Phase::Skipped("a focal spectrum is missing".into()),
    };
    let report = WittReport {
        lattices: Pair {
            left: "E8xE8".into(),
            right: "D16plus".into(),
        },
        cutoff2: s(&cutoff2),
        length_spectra,
        length_comparison,
        root_graph_components,
        focal_cutoff2: s(&focal_cutoff2),
        max_codim: args.max_codim,
        focal_spectra: Pair {
            left: phase(fa.map(|x| SpectrumReport::focal(a.name(), &x))),
            right: phase(fb.map(|x| SpectrumReport::focal(b.name(), &x))),
        },
        focal_comparison,
    };
    Ok(Outcome::ok(match args.format {
        TextOrJson::Text => report.text(),
        TextOrJson::Json => json(&report),
    }))
}
