//! Zone fans: each sampled ray is cut at its crossings and the pieces are
//! colored by zone index, with the annulus circles on top. Everything up to
//! here is exact; floats appear only in this file.

use std::fmt::Write as _;

use anyhow::Result;
use flatfocal::focal::radial_profile;
use flatfocal::quadspace::{to_f64, QVector};
use flatfocal::{Lattice, Scalar};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;
const PALETTE: [&str; 12] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
    "#1b9e77", "#7570b3",
];

fn f(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

pub fn color(k: u64) -> &'static str {
    PALETTE[((k - 1) % PALETTE.len() as u64) as usize]
}

/// `annuli[k - 1]` is the squared-radius range of zone `k`.
pub fn zone_fan(lattice: &Lattice, directions: &[QVector], annuli: &[(Scalar, Scalar)]) -> Result<String> {
    let k_max = annuli.len();
    let basis = lattice.render_embedding();
    let embed = |v: &QVector| -> (f64, f64) {
        let (a, b) = (to_f64(&v.0[0]), to_f64(&v.0[1]));
        (a * basis[0][0] + b * basis[1][0], a * basis[0][1] + b * basis[1][1])
    };
    let outer = annuli.iter().map(|(_, hi)| to_f64(hi)).fold(0.0, f64::max).sqrt();
    let scale = (SIZE / 2.0 - MARGIN) / outer;
    let c = SIZE / 2.0;
    let screen = |(x, y): (f64, f64)| (c + x * scale, c - y * scale);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE as u32
    )?;
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    writeln!(out, r#"<g stroke-width="1" stroke-linecap="round">"#)?;
    for u in directions {
        let profile = radial_profile(lattice, u, k_max)?;
        let mut start = Scalar::default();
        for (i, cross) in profile.crossings.iter().enumerate() {
            let zone = if i == 0 { 1 } else { profile.zone_after(i - 1) };
            if zone as usize > k_max {
                break;
            }
            let (x1, y1) = screen(embed(&u.scale(&start)));
            let (x2, y2) = screen(embed(&u.scale(&cross.t)));
            writeln!(
                out,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}"/>"#,
                f(x1),
                f(y1),
                f(x2),
                f(y2),
                color(zone)
            )?;
            start = cross.t.clone();
        }
    }
    writeln!(out, "</g>")?;
    writeln!(out, r#"<g fill="none" stroke-width="1.5">"#)?;
    for (k, (lo, hi)) in (1u64..).zip(annuli) {
        let (r, big) = (to_f64(lo).sqrt() * scale, to_f64(hi).sqrt() * scale);
        writeln!(
            out,
            r#"<circle cx="{0}" cy="{0}" r="{1}" stroke="{2}" stroke-dasharray="4 3"/>"#,
            f(c),
            f(r),
            color(k)
        )?;
        writeln!(
            out,
            r#"<circle cx="{0}" cy="{0}" r="{1}" stroke="{2}"/>"#,
            f(c),
            f(big),
            color(k)
        )?;
    }
    writeln!(out, "</g>")?;
    writeln!(out, "</svg>")?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use flatfocal::focal::{farey_directions, zone_annuli};

    #[test]
    fn formatting_has_no_negative_zero() {
        assert_eq!(f(-0.0001), "0.000");
        assert_eq!(f(-1.5), "-1.500");
    }

    #[test]
    fn palette_cycles() {
        assert_eq!(color(1), color(13));
        assert_ne!(color(1), color(2));
    }

    #[test]
    fn fan_has_a_line_per_zone_piece_and_two_circles_per_zone() {
        let l = flatfocal::catalog("Z2").unwrap();
        let dirs = farey_directions(8);
        let annuli = zone_annuli(&l, 2, &dirs).unwrap();
        let doc = zone_fan(&l, &dirs, &annuli).unwrap();
        assert!(doc.starts_with("<svg") && doc.ends_with("</svg>\n"));
        assert_eq!(doc.matches("<circle").count(), 4);
        assert!(doc.matches("<line").count() >= 8);
        assert_eq!(doc, zone_fan(&l, &dirs, &annuli).unwrap());
    }
}
