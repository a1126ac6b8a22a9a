//! Text format for lattices:
//!
//! ```text
//! rank 2
//! # A2
//! 2 1
//! 1 2
//! ```
//!
//! Line 1 is `rank n`. The next `n` non-comment lines hold the Gram matrix
//! as rationals (`p/q` or `p`) separated by single spaces. Lines starting
//! with `#` are comments; the first one names the lattice.

use crate::error::{Error, Result};
use crate::quadspace::{parse_scalar, GramForm, Scalar};

use super::Lattice;

const MAX_RANK: usize = 256;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the lattice text format. Errors carry 1-based line numbers.
pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input, expected `rank n`"))?;
    let rank = header
        .strip_prefix("rank ")
        .and_then(|r| r.trim().parse::<usize>().ok())
        .filter(|&n| (1..=MAX_RANK).contains(&n))
        .ok_or_else(|| {
            err(
                1,
                format!("expected `rank n` with 1 ≤ n ≤ {MAX_RANK}, found `{header}`"),
            )
        })?;

    let mut name = None;
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(rank);
    let mut last_line = 1;
    for (lineno, line) in lines {
        last_line = lineno;
        if let Some(comment) = line.strip_prefix('#') {
            if name.is_none() {
                name = Some(comment.trim().to_owned());
            }
            continue;
        }
        if line.trim().is_empty() {
            return Err(err(lineno, "blank line"));
        }
        if rows.len() == rank {
            return Err(err(lineno, format!("more than {rank} matrix rows")));
        }
        let row = line
            .split(' ')
            .map(|tok| parse_scalar(tok).map_err(|m| err(lineno, m)))
            .collect::<Result<Vec<Scalar>>>()?;
        if row.len() != rank {
            return Err(err(lineno, format!("expected {rank} entries, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != rank {
        return Err(err(
            last_line,
            format!("expected {rank} matrix rows, found {}", rows.len()),
        ));
    }
    // Asymmetry and indefiniteness are reported on the first row involved.
    let first_row_line = |row: usize| -> usize {
        text.lines()
            .enumerate()
            .skip(1)
            .filter(|(_, l)| !l.starts_with('#'))
            .nth(row)
            .map_or(1, |(i, _)| i + 1)
    };
    let gram = GramForm::new(rows).map_err(|e| match e {
        Error::NotSymmetric { row, col } => err(
            first_row_line(row),
            format!("matrix is not symmetric at ({}, {})", row + 1, col + 1),
        ),
        Error::NotPositiveDefinite { minor } => err(
            first_row_line(minor - 1),
            format!("matrix is not positive definite (leading minor {minor})"),
        ),
        other => other,
    })?;
    Ok(Lattice::new(gram, name.filter(|n| !n.is_empty())))
}

/// Canonical text form; `parse_lattice` inverts it exactly.
pub fn write_lattice(lattice: &Lattice) -> String {
    let mut out = format!("rank {}\n", lattice.rank());
    if let Some(name) = lattice.name() {
        out.push_str("# ");
        out.push_str(name);
        out.push('\n');
    }
    for row in lattice.gram().rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
