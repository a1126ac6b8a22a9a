//! Exact linear algebra over a positive-definite rational quadratic form.
//!
//! Every vector lives in lattice-basis coordinates and every inner product is
//! taken against a [`GramForm`]. Irrational embeddings (hexagonal, `E8`) never
//! enter: all equality tests are decided over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::focal::BPlane;

/// Exact rational number in canonical reduced form.
pub type Scalar = BigRational;

/// `n` as a scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// `num / den` as a scalar. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q`, `p`, or a signed variant of either.
pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty number".into());
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = parse_integer(num)?;
    let den: BigInt = parse_integer(den)?;
    if den.is_zero() {
        return Err(format!("zero denominator in `{text}`"));
    }
    Ok(Scalar::new(num, den))
}

fn parse_integer(text: &str) -> std::result::Result<BigInt, String> {
    let digits = text.strip_prefix(['-', '+']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{text}` is not an integer"));
    }
    text.parse::<BigInt>().map_err(|e| format!("`{text}`: {e}"))
}

/// Parses a point such as `1/2,-3/4` or `(1/2, -3/4)`.
pub fn parse_point(text: &str) -> std::result::Result<QVector, String> {
    let text = text.trim();
    let inner = match text.strip_prefix('(') {
        Some(rest) => rest
            .strip_suffix(')')
            .ok_or_else(|| format!("unbalanced parenthesis in `{text}`"))?,
        None => text,
    };
    if inner.trim().is_empty() {
        return Err("empty point".into());
    }
    inner
        .split(',')
        .map(parse_scalar)
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(QVector)
}

/// Lossy conversion for the render path only.
pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 gives up when both parts overflow f64.
        let shift = x.numer().bits().max(x.denom().bits()).saturating_sub(1000);
        let n = (x.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (x.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// A vector of rational coordinates relative to the lattice basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QVector(pub Vec<Scalar>);

impl QVector {
    pub fn zeros(n: usize) -> Self {
        QVector(vec![Scalar::zero(); n])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn from_fracs(coords: &[(i64, i64)]) -> Self {
        QVector(coords.iter().map(|&(n, d)| frac(n, d)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &QVector) -> QVector {
        QVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Scalar) -> QVector {
        QVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> QVector {
        QVector(self.0.iter().map(|a| -a).collect())
    }

    /// Euclidean dot product of coordinates (no Gram form involved).
    pub fn dot(&self, other: &QVector) -> Scalar {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Common denominator `q > 0` and integer numerators `p` with `self = p / q`.
    pub fn common_denominator(&self) -> (BigInt, Vec<BigInt>) {
        let q = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let p = self.0.iter().map(|x| x.numer() * (&q / x.denom())).collect();
        (q, p)
    }
}

impl fmt::Display for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// A symmetric positive-definite rational matrix, `⟨u, v⟩ = uᵀ G v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GramForm {
    entries: Vec<Vec<Scalar>>,
}

impl GramForm {
    /// Validates symmetry and positive definiteness (all leading principal
    /// minors strictly positive).
    pub fn new(entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        for (row, r) in entries.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    row,
                    len: r.len(),
                });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        if let Some(minor) = first_nonpositive_leading_minor(&entries) {
            return Err(Error::NotPositiveDefinite { minor });
        }
        Ok(GramForm { entries })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        GramForm { entries }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// `G v` as a covector.
    pub fn apply(&self, v: &QVector) -> QVector {
        QVector(self.entries.iter().map(|row| QVector(row.clone()).dot(v)).collect())
    }

    /// `c · G` for `c > 0`.
    pub fn scaled(&self, c: &Scalar) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidArgument(format!("scale {c} is not positive")));
        }
        Ok(GramForm {
            entries: self.entries.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        })
    }

    /// `Uᵀ G U` for an integer matrix `U` (given row-major).
    pub fn transform(&self, u: &[Vec<BigInt>]) -> Result<Self> {
        let n = self.rank();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.len(),
            });
        }
        let col = |j: usize| QVector(u.iter().map(|r| Scalar::from_integer(r[j].clone())).collect());
        let cols: Vec<QVector> = (0..n).map(col).collect();
        let gcols: Vec<QVector> = cols.iter().map(|c| self.apply(c)).collect();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| cols[i].dot(&gcols[j])).collect())
            .collect();
        GramForm::new(entries)
    }

    pub fn determinant(&self) -> Scalar {
        let (d, m) = self.integer_scaled();
        let det = bareiss_determinant(m);
        Scalar::new(det, num_traits::pow(d, self.rank()))
    }

    /// Returns `(D, D·G)` where `D > 0` is the least common denominator.
    pub fn integer_scaled(&self) -> (BigInt, Vec<Vec<BigInt>>) {
        let d = self
            .entries
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let m = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&d / x.denom())).collect())
            .collect();
        (d, m)
    }
}

fn first_nonpositive_leading_minor(entries: &[Vec<Scalar>]) -> Option<usize> {
    let rows: Vec<Vec<BigInt>> = scale_rows_to_integers(entries);
    // Row scaling by positive factors keeps every leading-minor sign; Bareiss
    // without pivoting leaves the k-th leading minor on the diagonal.
    let n = rows.len();
    let mut m = rows;
    let mut prev = BigInt::one();
    for k in 0..n {
        if !m[k][k].is_positive() {
            return Some(k + 1);
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    None
}

fn scale_rows_to_integers(rows: &[Vec<Scalar>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let d = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&d / x.denom())).collect()
        })
        .collect()
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&i| !m[i][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                m[i][j] = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Row echelon form by fraction-free (Bareiss) elimination over the
/// integer-scaled rows. Returns the reduced rows and the pivot columns.
fn fraction_free_echelon(rows: &[Vec<Scalar>], pivot_cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m = scale_rows_to_integers(rows);
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols.min(ncols) {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..nrows {
            for j in (c + 1)..ncols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

/// Rank of a list of rational row vectors.
pub fn rank_of(rows: &[QVector]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let raw: Vec<Vec<Scalar>> = rows.iter().map(|r| r.0.clone()).collect();
    let n = raw[0].len();
    fraction_free_echelon(&raw, n).1.len()
}

/// Affine solution set of `A x = b`: a particular solution and a nullspace
/// basis, or `None` when the system is inconsistent.
pub fn solve_affine(a: &[QVector], b: &[Scalar]) -> Option<(QVector, Vec<QVector>)> {
    let n = a.first().map_or(0, QVector::dim);
    let aug: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.0.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (m, pivots) = fraction_free_echelon(&aug, n);
    // Rows past the rank must have a zero right-hand side.
    if m.iter().skip(pivots.len()).any(|row| !row[n].is_zero()) {
        return None;
    }
    let rank = pivots.len();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();

    let back_substitute = |rhs: &dyn Fn(usize) -> Scalar, fixed: &[(usize, Scalar)]| -> QVector {
        let mut x = vec![Scalar::zero(); n];
        for (c, v) in fixed {
            x[*c] = v.clone();
        }
        for r in (0..rank).rev() {
            let pc = pivots[r];
            let mut acc = rhs(r);
            for c in (pc + 1)..n {
                if !m[r][c].is_zero() && !x[c].is_zero() {
                    acc -= Scalar::from_integer(m[r][c].clone()) * &x[c];
                }
            }
            x[pc] = acc / Scalar::from_integer(m[r][pc].clone());
        }
        QVector(x)
    };

    let particular = back_substitute(&|r| Scalar::from_integer(m[r][n].clone()), &[]);
    let nullspace = free
        .iter()
        .map(|&f| back_substitute(&|_| Scalar::zero(), &[(f, Scalar::one())]))
        .collect();
    Some((particular, nullspace))
}

/// Reduced row echelon form with zero rows dropped; canonical for the row span.
pub fn rref(rows: &[QVector]) -> Vec<QVector> {
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.0.clone()).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m.into_iter().map(QVector).collect()
}

/// An affine subspace `base + span(directions)` of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineFlat {
    pub base: QVector,
    pub directions: Vec<QVector>,
    pub codim: usize,
}

fn check_dim(expected: usize, v: &QVector) -> Result<()> {
    if v.dim() != expected {
        return Err(Error::DimensionMismatch {
            expected,
            found: v.dim(),
        });
    }
    Ok(())
}

/// `uᵀ G v`.
pub fn inner(u: &QVector, v: &QVector, gram: &GramForm) -> Result<Scalar> {
    check_dim(gram.rank(), u)?;
    check_dim(gram.rank(), v)?;
    Ok(u.dot(&gram.apply(v)))
}

/// Squared distance `⟨u − v, u − v⟩`.
pub fn dist2(u: &QVector, v: &QVector, gram: &GramForm) -> Result<Scalar> {
    check_dim(gram.rank(), u)?;
    check_dim(gram.rank(), v)?;
    let d = u.sub(v);
    inner(&d, &d, gram)
}

/// Squared norm `⟨v, v⟩`.
pub fn norm2(v: &QVector, gram: &GramForm) -> Result<Scalar> {
    inner(v, v, gram)
}

/// Intersection of B-planes `{ x : 2⟨x, λ⟩ = ⟨λ, λ⟩ }`, or `None` when the
/// system is inconsistent. The codimension is the rank of the `λ` span.
pub fn flat_intersection(planes: &[BPlane], gram: &GramForm) -> Result<Option<AffineFlat>> {
    let n = gram.rank();
    if planes.is_empty() {
        return Err(Error::InvalidArgument("no planes to intersect".into()));
    }
    for p in planes {
        check_dim(n, p.normal())?;
    }
    let rows: Vec<QVector> = planes.iter().map(|p| p.normal().clone()).collect();
    let rhs: Vec<Scalar> = planes.iter().map(|p| p.offset().clone()).collect();
    Ok(solve_affine(&rows, &rhs).map(|(base, directions)| AffineFlat {
        codim: n - directions.len(),
        base,
        directions,
    }))
}

/// G-orthogonal projection of the origin onto `flat`, with its squared norm.
pub fn foot_of_origin(flat: &AffineFlat, gram: &GramForm) -> Result<(QVector, Scalar)> {
    check_dim(gram.rank(), &flat.base)?;
    let k = flat.directions.len();
    let point = if k == 0 {
        flat.base.clone()
    } else {
        // Normal equations: (DᵀGD) t = −DᵀG·base.
        let gd: Vec<QVector> = flat.directions.iter().map(|d| gram.apply(d)).collect();
        let system: Vec<QVector> = (0..k)
            .map(|i| QVector((0..k).map(|j| flat.directions[j].dot(&gd[i])).collect()))
            .collect();
        let rhs: Vec<Scalar> = gd.iter().map(|g| -g.dot(&flat.base)).collect();
        let (t, _) =
            solve_affine(&system, &rhs).ok_or(Error::InvalidArgument("flat directions are dependent".into()))?;
        flat.directions
            .iter()
            .zip(&t.0)
            .fold(flat.base.clone(), |acc, (d, ti)| acc.add(&d.scale(ti)))
    };
    let r2 = norm2(&point, gram)?;
    Ok((point, r2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> GramForm {
        GramForm::from_ints(&[vec![2, 1], vec![1, 2]]).unwrap()
    }

    fn planes(lams: &[&[i64]], g: &GramForm) -> Vec<BPlane> {
        lams.iter()
            .map(|l| BPlane::new(crate::LatticePoint(l.to_vec()), g).unwrap())
            .collect()
    }

    #[test]
    fn inner_reads_gram_entries() {
        let id = GramForm::identity(2);
        let e1 = QVector::from_ints(&[1, 0]);
        let e2 = QVector::from_ints(&[0, 1]);
        assert_eq!(inner(&e1, &e2, &id).unwrap(), int(0));
        assert_eq!(inner(&e1, &e1, &a2()).unwrap(), int(2));
        assert_eq!(inner(&e1, &e2, &a2()).unwrap(), int(1));
        assert!(matches!(
            inner(&e1, &QVector::from_ints(&[1, 0, 0]), &id),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dist2_examples() {
        let id = GramForm::identity(2);
        let u = QVector::from_fracs(&[(1, 2), (1, 2)]);
        assert_eq!(dist2(&u, &QVector::from_ints(&[1, 1]), &id).unwrap(), frac(1, 2));
        assert_eq!(dist2(&u, &u, &id).unwrap(), int(0));
        let e1 = QVector::from_ints(&[1, 0]);
        let e2 = QVector::from_ints(&[0, 1]);
        assert_eq!(dist2(&e1, &e2, &a2()).unwrap(), int(2));
    }

    #[test]
    fn rejects_bad_gram() {
        assert_eq!(
            GramForm::from_ints(&[vec![1, 2], vec![2, 1]]),
            Err(Error::NotPositiveDefinite { minor: 2 })
        );
        assert_eq!(
            GramForm::from_ints(&[vec![1, 2], vec![0, 1]]),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        );
        assert_eq!(
            GramForm::from_ints(&[vec![0, 0], vec![0, 1]]),
            Err(Error::NotPositiveDefinite { minor: 1 })
        );
        assert!(matches!(
            GramForm::from_ints(&[vec![1, 0], vec![0]]),
            Err(Error::NotSquare { .. })
        ));
        assert_eq!(GramForm::new(vec![]), Err(Error::Empty));
    }

    #[test]
    fn intersections() {
        let id = GramForm::identity(2);
        let f = flat_intersection(&planes(&[&[1, 0]], &id), &id).unwrap().unwrap();
        assert_eq!(f.codim, 1);
        assert_eq!(f.base.0[0], frac(1, 2));

        let f = flat_intersection(&planes(&[&[1, 0], &[0, 1]], &id), &id)
            .unwrap()
            .unwrap();
        assert_eq!(f.codim, 2);
        assert_eq!(f.base, QVector::from_fracs(&[(1, 2), (1, 2)]));

        assert!(flat_intersection(&planes(&[&[1, 0], &[2, 0]], &id), &id)
            .unwrap()
            .is_none());
    }

    #[test]
    fn feet() {
        let id = GramForm::identity(2);
        let line = flat_intersection(&planes(&[&[1, 0]], &id), &id).unwrap().unwrap();
        let (p, r2) = foot_of_origin(&line, &id).unwrap();
        assert_eq!(p, QVector::from_fracs(&[(1, 2), (0, 1)]));
        assert_eq!(r2, frac(1, 4));

        let pt = flat_intersection(&planes(&[&[1, 0], &[0, 1]], &id), &id)
            .unwrap()
            .unwrap();
        assert_eq!(foot_of_origin(&pt, &id).unwrap().1, frac(1, 2));

        // Along {x = 1/2} the form 2x² + 2xy + 2y² is smallest at y = −1/4.
        let g = a2();
        let line = AffineFlat {
            base: QVector::from_fracs(&[(1, 2), (0, 1)]),
            directions: vec![QVector::from_ints(&[0, 1])],
            codim: 1,
        };
        let (p, r2) = foot_of_origin(&line, &g).unwrap();
        assert_eq!(p, QVector::from_fracs(&[(1, 2), (-1, 4)]));
        assert_eq!(r2, frac(3, 8));
    }

    #[test]
    fn foot_agrees_with_scan_oracle() {
        // 1-D scan over t = k/64 of 2·(1/4) + 2·(1/2)t + 2t² on the line x = 1/2.
        let g = a2();
        let best = (-128..=128)
            .map(|k| frac(k, 64))
            .map(|t| {
                let v = QVector(vec![frac(1, 2), t]);
                norm2(&v, &g).unwrap()
            })
            .min()
            .unwrap();
        assert_eq!(best, frac(3, 8));
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar(" +2/-4 ").unwrap(), frac(-1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("--1").is_err());
        assert!(parse_scalar("/3").is_err());
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(a2().determinant(), int(3));
        let rows = vec![
            QVector::from_ints(&[1, 0]),
            QVector::from_ints(&[0, 1]),
            QVector::from_ints(&[1, 1]),
        ];
        assert_eq!(rank_of(&rows), 2);
        assert_eq!(
            rref(&rows),
            vec![QVector::from_ints(&[1, 0]), QVector::from_ints(&[0, 1])]
        );
    }

    #[test]
    fn point_parsing() {
        assert_eq!(
            parse_point("1/2,-3/4").unwrap(),
            QVector::from_fracs(&[(1, 2), (-3, 4)])
        );
        assert_eq!(
            parse_point(" (1/2, 0) ").unwrap(),
            QVector::from_fracs(&[(1, 2), (0, 1)])
        );
        assert_eq!(parse_point("7").unwrap(), QVector::from_ints(&[7]));
        for bad in ["", "()", "(1,2", "1,,2", "1/0", "a", "1 2"] {
            assert!(parse_point(bad).is_err(), "{bad:?}");
        }
    }
}
