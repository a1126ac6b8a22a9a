use std::path::PathBuf;
use std::process::{Command, Output};

use flatfocal_cli::report::{
    ClassifyReport, CompareReport, InfoReport, Phase, SpectrumReport, WittReport, ZonesReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatfocal"))
        .args(args)
        .env_remove("FOCAL_THREADS")
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Parses a JSON report and checks it re-serializes to the same bytes.
fn parse<T: DeserializeOwned + Serialize>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

#[test]
fn info_reports_minimal_vectors() {
    let e8: InfoReport = parse(&stdout(&["info", "--catalog", "E8", "--format", "json"]));
    assert_eq!((e8.rank, e8.minimal_norm2.as_str(), e8.minimal_vectors), (8, "2", 240));
    assert_eq!(e8.determinant, "1");
    let z2: InfoReport = parse(&stdout(&["info", "catalog:Z2", "--format", "json"]));
    assert_eq!((z2.rank, z2.minimal_norm2.as_str(), z2.minimal_vectors), (2, "1", 4));
    assert_eq!(z2.gram, vec![vec!["1", "0"], vec!["0", "1"]]);
    let text = stdout(&["info", "--catalog", "Z2"]);
    assert!(text.contains("minimal vectors: 4"));
}

#[test]
fn malformed_files_name_the_line() {
    let out = run(&["info", &data("malformed.txt")]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("malformed.txt") && err.contains("line 4"), "{err}");
    let err = String::from_utf8(run(&["info", &data("indefinite.txt")]).stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("positive definite"), "{err}");
    let out = run(&["info", "/no/such/file"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["info", "--catalog", "Q3"]).status.code(), Some(3));
    assert_eq!(run(&["info"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_examples() {
    let c: ClassifyReport = parse(&stdout(&[
        "classify",
        "--catalog",
        "Z2",
        "--point",
        "1/2,1/2",
        "--format",
        "json",
    ]));
    assert_eq!(
        (c.mu, c.iota, c.brillouin, c.sigma_index, c.zone, c.boundary, c.nu),
        (3, 0, 4, 4, None, true, 2)
    );
    assert_eq!(c.incident, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    for (p, zone) in [("1/4,0", 1), ("3/4,0", 2)] {
        let c: ClassifyReport = parse(&stdout(&[
            "classify",
            "--catalog",
            "Z2",
            "--point",
            p,
            "--format",
            "json",
        ]));
        assert_eq!((c.sigma_index, c.zone, c.boundary), (1, Some(zone), false));
    }
    let c: ClassifyReport = parse(&stdout(&[
        "classify",
        "--catalog",
        "Z2",
        "--point",
        "-3/4,0",
        "--format",
        "json",
    ]));
    assert_eq!(c.zone, Some(2));
    let out = run(&["classify", "--catalog", "Z2", "--point", "1,2,3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));
    assert_eq!(
        run(&["classify", "--catalog", "Z2", "--point", "1/0,1"]).status.code(),
        Some(3)
    );
}

#[test]
fn zones_tables_and_svg() {
    let z: ZonesReport = parse(&stdout(&["zones", "--catalog", "Z2", "--k-max", "3"]));
    let rows: Vec<_> = z
        .annuli
        .iter()
        .map(|a| (a.k, a.r2_min.as_str(), a.r2_max.as_str()))
        .collect();
    assert_eq!(rows, [(1, "1/4", "1/2"), (2, "1/4", "1"), (3, "1/2", "5/4")]);
    let a: ZonesReport = parse(&stdout(&["zones", "--catalog", "A2", "--k-max", "1"]));
    assert_eq!(
        (a.annuli[0].r2_min.as_str(), a.annuli[0].r2_max.as_str()),
        ("1/2", "2/3")
    );

    let dir = std::env::temp_dir().join(format!("flatfocal-zones-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (p1, p2) = (dir.join("a.svg"), dir.join("b.svg"));
    for p in [&p1, &p2] {
        stdout(&[
            "zones",
            "--catalog",
            "A2",
            "--k-max",
            "4",
            "--directions",
            "200",
            "--svg",
            p.to_str().unwrap(),
        ]);
    }
    let (a, b) = (std::fs::read(&p1).unwrap(), std::fs::read(&p2).unwrap());
    assert_eq!(a, b);
    assert!(a.starts_with(b"<svg"));
    std::fs::remove_dir_all(&dir).unwrap();

    let out = run(&["zones", "--catalog", "Z3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank-2"));
}

#[test]
fn spectra_csv_and_json() {
    assert_eq!(
        stdout(&["spectra", "--catalog", "Z2", "--cutoff2", "2"]),
        "rho2_num,rho2_den,multiplicity\n1,1,4\n2,1,4\n"
    );
    assert_eq!(
        stdout(&[
            "spectra",
            "--catalog",
            "Z2",
            "--kind",
            "focal",
            "--cutoff2",
            "1/2",
            "--max-codim",
            "2"
        ]),
        "rho2_num,rho2_den,multiplicity,codim\n1,4,4,1:4\n1,2,8,1:4;2:4\n"
    );
    let e8: SpectrumReport = parse(&stdout(&[
        "spectra",
        "--catalog",
        "E8",
        "--cutoff2",
        "4",
        "--format",
        "json",
    ]));
    let rows: Vec<_> = e8
        .entries
        .iter()
        .map(|r| (r.rho2_num.as_str(), r.multiplicity))
        .collect();
    assert_eq!(rows, [("2", 240), ("4", 2160)]);
    let gs = stdout(&[
        "spectra",
        "--catalog",
        "Z2",
        "--kind",
        "focal",
        "--cutoff2",
        "1/2",
        "--multiplicity",
        "generating-subsets",
    ]);
    assert!(gs.ends_with("1,2,16,1:4;2:12\n"), "{gs}");
    let focal: SpectrumReport = parse(&stdout(&[
        "spectra",
        "--catalog",
        "A2",
        "--kind",
        "focal",
        "--cutoff2",
        "1",
        "--format",
        "json",
    ]));
    assert_eq!(focal.multiplicity_convention.as_deref(), Some("point-set"));
}

#[test]
fn budgets_are_errors_not_truncation() {
    let out = run(&["--max-points", "100", "spectra", "--catalog", "E8", "--cutoff2", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    assert_eq!(
        run(&["--max-points", "0", "info", "--catalog", "Z2"]).status.code(),
        Some(3)
    );
    let out = run(&["spectra", "--catalog", "Z2", "--kind", "focal", "--max-codim", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn compare_exit_codes() {
    let out = run(&["compare", "catalog:Z2", &data("scaled_z2.txt"), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: CompareReport = parse(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r.verdict, "equivalent");
    assert!(
        matches!(r.isometry, Phase::Done(flatfocal_cli::report::IsometryReport::Certificate { ref scale, .. }) if scale == "3")
    );

    let out = run(&["compare", "catalog:Z2", "catalog:A2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4 vs 6") && text.contains("distinguished"), "{text}");

    let out = run(&[
        "compare",
        "catalog:E8xE8",
        "catalog:D16plus",
        "--cutoff2",
        "6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r: CompareReport = parse(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r.distinguished_by.as_deref(), Some("root graph components"));
    assert!(matches!(r.length_spectrum, Phase::Done(ref d) if d.equal));

    let out = run(&["compare", "catalog:Z2", "catalog:Z3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank mismatch"));
}

#[test]
fn compare_is_inconclusive_when_every_invariant_agrees_above_rank_eight() {
    let out = run(&[
        "compare",
        "catalog:Z9",
        "catalog:Z9",
        "--cutoff2",
        "2",
        "--focal-cutoff2",
        "1/2",
    ]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn witt_reports_every_phase() {
    let w: WittReport = parse(&stdout(&[
        "witt",
        "--cutoff2",
        "4",
        "--focal-cutoff2",
        "1",
        "--format",
        "json",
    ]));
    let Phase::Done(lengths) = &w.length_spectra else {
        panic!("length phase failed")
    };
    for side in [&lengths.left, &lengths.right] {
        let rows: Vec<_> = side
            .entries
            .iter()
            .map(|r| (r.rho2_num.as_str(), r.multiplicity))
            .collect();
        assert_eq!(rows, [("2", 480), ("4", 61920)]);
    }
    assert!(matches!(&w.root_graph_components, Phase::Done(p) if (p.left, p.right) == (2, 1)));
    assert!(matches!(&w.focal_comparison, Phase::Done(d) if d.equal));

    // A tiny budget fails every enumerating phase but the report still comes out.
    let w: WittReport = parse(&stdout(&["--max-points", "1000", "witt", "--format", "json"]));
    assert!(matches!(w.length_spectra, Phase::Error(_)));
    assert!(matches!(w.root_graph_components, Phase::Done(_)));
    assert!(matches!(w.focal_spectra.left, Phase::Error(_)));
    assert!(matches!(w.focal_comparison, Phase::Skipped(_)));
}

#[test]
fn thread_count_does_not_change_output() {
    let cmds: [&[&str]; 3] = [
        &[
            "spectra",
            "--catalog",
            "D4",
            "--kind",
            "focal",
            "--cutoff2",
            "1",
            "--max-codim",
            "3",
        ],
        &["zones", "--catalog", "A2", "--k-max", "5", "--directions", "300"],
        &["info", "--catalog", "E8", "--cutoff2", "6"],
    ];
    for cmd in cmds {
        let one = stdout(&[&["--threads", "1"], cmd].concat());
        let four = stdout(&[&["--threads", "4"], cmd].concat());
        assert_eq!(one, four, "{cmd:?}");
        let env = Command::new(env!("CARGO_BIN_EXE_flatfocal"))
            .args(cmd)
            .env("FOCAL_THREADS", "3")
            .output()
            .unwrap();
        assert_eq!(String::from_utf8(env.stdout).unwrap(), one);
    }
}
