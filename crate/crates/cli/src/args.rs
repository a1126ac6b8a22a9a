use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "flatfocal",
    version,
    about = "Focal decomposition, Brillouin zones and spectra of flat tori"
)]
pub struct Cli {
    /// Worker threads (default: available cores).
    #[arg(long, global = true, env = "FOCAL_THREADS")]
    pub threads: Option<usize>,

    /// Maximum number of lattice points a spectrum computation may enumerate.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_points: u64,

    /// Wall-clock cap in seconds for a spectrum computation.
    #[arg(long, global = true, default_value_t = 300)]
    pub time_cap: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, Gram matrix, minimal norm and sphere counts.
    Info(InfoArgs),
    /// Indices and zone of a point.
    Classify(ClassifyArgs),
    /// Brillouin zone annuli of a rank-2 lattice, with an SVG fan.
    Zones(ZonesArgs),
    /// Length or focal spectrum.
    Spectra(SpectraArgs),
    /// Isometry up to scale, spectra and root graphs of two lattices.
    Compare(CompareArgs),
    /// The E8⊕E8 / D16⁺ experiment.
    Witt(WittArgs),
}

/// A lattice given as a file path or `catalog:NAME`, or by `--catalog NAME`.
#[derive(Debug, Args)]
pub struct LatticeSource {
    /// Lattice file, or `catalog:NAME`.
    #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
    pub lattice: Option<String>,

    /// Catalog lattice: Z<n>, A2, D<n>, E8, E8xE8, D16plus.
    #[arg(long)]
    pub catalog: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextOrJson {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CsvOrJson {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Length,
    Focal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MultiplicityArg {
    PointSet,
    GeneratingSubsets,
}

#[derive(Debug, Args)]
pub struct InfoArgs {
    #[command(flatten)]
    pub source: LatticeSource,

    /// Sphere counts up to this squared norm (default: twice the minimal norm).
    #[arg(long)]
    pub cutoff2: Option<String>,

    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub source: LatticeSource,

    /// Point in basis coordinates, e.g. `1/2,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,

    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct ZonesArgs {
    #[command(flatten)]
    pub source: LatticeSource,

    /// Highest zone index.
    #[arg(long, default_value_t = 3)]
    pub k_max: u64,

    /// Number of sampled directions.
    #[arg(long, default_value_t = 1000)]
    pub directions: usize,

    /// Write the zone fan here.
    #[arg(long)]
    pub svg: Option<std::path::PathBuf>,

    #[arg(long, value_enum, default_value_t = TextOrJson::Json)]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct SpectraArgs {
    #[command(flatten)]
    pub source: LatticeSource,

    #[arg(long, value_enum, default_value_t = Kind::Length)]
    pub kind: Kind,

    /// Largest squared radius, `p/q`.
    #[arg(long, default_value = "4")]
    pub cutoff2: String,

    /// Highest codimension of flats in the focal spectrum.
    #[arg(long, default_value_t = 2)]
    pub max_codim: usize,

    #[arg(long, value_enum, default_value_t = MultiplicityArg::PointSet)]
    pub multiplicity: MultiplicityArg,

    #[arg(long, value_enum, default_value_t = CsvOrJson::Csv)]
    pub format: CsvOrJson,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// First lattice: file or `catalog:NAME`.
    pub left: String,

    /// Second lattice: file or `catalog:NAME`.
    pub right: String,

    /// Length spectrum cutoff after normalizing the minimal norm to 1.
    #[arg(long, default_value = "4")]
    pub cutoff2: String,

    /// Focal spectrum cutoff after normalizing the minimal norm to 1.
    #[arg(long, default_value = "1/2")]
    pub focal_cutoff2: String,

    #[arg(long, default_value_t = 2)]
    pub max_codim: usize,

    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
}

#[derive(Debug, Args)]
pub struct WittArgs {
    /// Length spectrum cutoff.
    #[arg(long, default_value = "4")]
    pub cutoff2: String,

    /// Focal spectrum cutoff (default: the smaller of `cutoff2` and 2).
    #[arg(long)]
    pub focal_cutoff2: Option<String>,

    #[arg(long, default_value_t = 1)]
    pub max_codim: usize,

    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    pub format: TextOrJson,
}
