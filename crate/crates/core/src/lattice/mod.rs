//! Lattices given by exact Gram matrices, the named catalog, and ball
//! enumeration.

mod enumerate;
mod io;
mod reduce;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::quadspace::{frac, int, GramForm, QVector, Scalar};

pub use enumerate::{count_ball, enumerate_ball, enumerate_ball_with, fold_ball, BallMode, Budget, Hit, Wide};
pub use io::{parse_lattice, write_lattice};
pub use reduce::lll_reduce_gram;

pub(crate) use enumerate::Kernel;

/// Integer coordinates of a lattice vector relative to the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_qvector(&self) -> QVector {
        QVector::from_ints(&self.0)
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A rank-`n` lattice, i.e. the translation group of a flat torus, given by
/// its Gram matrix.
#[derive(Clone)]
pub struct Lattice {
    gram: GramForm,
    name: Option<String>,
    embedding: Option<Vec<Vec<f64>>>,
    kernel: OnceLock<std::result::Result<Arc<Kernel>, Error>>,
    min_norm: OnceLock<std::result::Result<Scalar, Error>>,
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("name", &self.name)
            .field("gram", &self.gram)
            .finish()
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram && self.name == other.name
    }
}

impl Eq for Lattice {}

impl Lattice {
    pub fn new(gram: GramForm, name: Option<String>) -> Self {
        Lattice {
            gram,
            name,
            embedding: None,
            kernel: OnceLock::new(),
            min_norm: OnceLock::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.gram.rank()
    }

    pub fn gram(&self) -> &GramForm {
        &self.gram
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Attaches basis coordinates in ℝⁿ (one row per basis vector). Their
    /// floating Gram must match the exact Gram to within 1e-9 per entry.
    pub fn with_embedding(mut self, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = self.rank();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: rows.len(),
            });
        }
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum();
                let exact = crate::quadspace::to_f64(self.gram.entry(i, j));
                if (dot - exact).abs() > 1e-9 * exact.abs().max(1.0) {
                    return Err(Error::InvalidArgument(format!(
                        "embedding Gram entry ({i}, {j}) is {dot}, expected {exact}"
                    )));
                }
            }
        }
        self.embedding = Some(rows);
        Ok(self)
    }

    pub fn embedding(&self) -> Option<&[Vec<f64>]> {
        self.embedding.as_deref()
    }

    /// The attached embedding, or a lower-triangular one from the Cholesky
    /// factor of the Gram matrix (rational elimination, square roots last).
    pub fn render_embedding(&self) -> Vec<Vec<f64>> {
        if let Some(e) = &self.embedding {
            return e.clone();
        }
        let n = self.rank();
        let (diag, upper) = exact_ldl(&self.gram);
        // G = Lᵀ D L with L unit upper; basis vector j has coordinate
        // sqrt(d_i)·L[i][j] along the i-th orthonormal axis.
        let mut rows = vec![vec![0.0; n]; n];
        for j in 0..n {
            for i in 0..=j {
                let l = if i == j {
                    1.0
                } else {
                    crate::quadspace::to_f64(&upper[i][j])
                };
                rows[j][i] = crate::quadspace::to_f64(&diag[i]).sqrt() * l;
            }
        }
        rows
    }

    /// Squared norm of a lattice vector.
    pub fn norm2(&self, v: &LatticePoint) -> Result<Scalar> {
        crate::quadspace::norm2(&v.to_qvector(), &self.gram)
    }

    /// Inner product of two lattice vectors.
    pub fn inner(&self, a: &LatticePoint, b: &LatticePoint) -> Result<Scalar> {
        crate::quadspace::inner(&a.to_qvector(), &b.to_qvector(), &self.gram)
    }

    pub(crate) fn kernel(&self) -> Result<Arc<Kernel>> {
        self.kernel
            .get_or_init(|| Kernel::build(&self.gram).map(Arc::new))
            .clone()
    }
}

/// `(d, m)` with `G = Σ_i d_i (x_i + Σ_{j>i} m_ij x_j)²`, computed exactly.
pub(crate) fn exact_ldl(gram: &GramForm) -> (Vec<Scalar>, Vec<Vec<Scalar>>) {
    let n = gram.rank();
    let mut q: Vec<Vec<Scalar>> = gram.rows().to_vec();
    for i in 0..n {
        for j in (i + 1)..n {
            q[j][i] = q[i][j].clone();
            q[i][j] = &q[i][j] / &q[i][i];
        }
        for k in (i + 1)..n {
            for l in k..n {
                let t = &q[k][i] * &q[i][l];
                q[k][l] -= t;
            }
        }
    }
    let diag = (0..n).map(|i| q[i][i].clone()).collect();
    let upper = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if j > i { q[i][j].clone() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    (diag, upper)
}

/// Validates a square rational matrix as a Gram matrix and wraps it.
pub fn make_lattice(gram: Vec<Vec<Scalar>>, name: Option<&str>) -> Result<Lattice> {
    Ok(Lattice::new(GramForm::new(gram)?, name.map(str::to_owned)))
}

fn from_basis(name: &str, basis: Vec<Vec<Scalar>>) -> Lattice {
    let n = basis.len();
    let gram = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| QVector(basis[i].clone()).dot(&QVector(basis[j].clone())))
                .collect()
        })
        .collect();
    let floats: Vec<Vec<f64>> = basis
        .iter()
        .map(|r| r.iter().map(crate::quadspace::to_f64).collect())
        .collect();
    Lattice::new(
        GramForm::new(gram).expect("catalog basis is independent"),
        Some(name.into()),
    )
    .with_embedding(floats)
    .expect("catalog embedding is exact")
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Basis of `D_n = { x ∈ Zⁿ : Σ x_i even }`: `e_i − e_{i+1}` and `e_{n−1} + e_n`.
fn d_basis(n: usize) -> Vec<Vec<Scalar>> {
    let mut basis: Vec<Vec<Scalar>> = (0..n - 1)
        .map(|i| {
            let mut v = unit(n, i);
            v[i + 1] = int(-1);
            v
        })
        .collect();
    let mut last = unit(n, n - 1);
    last[n - 2] = int(1);
    basis.push(last);
    basis
}

/// Basis of `D_n⁺ = D_n ∪ (D_n + (½,…,½))`: `2e_1`, `e_i − e_{i−1}` for
/// `2 ≤ i ≤ n−1`, and the glue vector. Its determinant is 2 · ½ = 1.
fn d_plus_basis(n: usize) -> Vec<Vec<Scalar>> {
    let mut basis = Vec::with_capacity(n);
    let mut first = vec![Scalar::zero(); n];
    first[0] = int(2);
    basis.push(first);
    for i in 1..n - 1 {
        let mut v = unit(n, i);
        v[i - 1] = int(-1);
        basis.push(v);
    }
    basis.push(vec![frac(1, 2); n]);
    basis
}

fn block_sum(name: &str, a: &Lattice, b: &Lattice) -> Lattice {
    let (na, nb) = (a.rank(), b.rank());
    let n = na + nb;
    let mut g = vec![vec![Scalar::zero(); n]; n];
    for i in 0..na {
        for j in 0..na {
            g[i][j] = a.gram().entry(i, j).clone();
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            g[na + i][na + j] = b.gram().entry(i, j).clone();
        }
    }
    let mut emb = vec![vec![0.0; n]; n];
    let (ea, eb) = (a.render_embedding(), b.render_embedding());
    for i in 0..na {
        emb[i][..na].copy_from_slice(&ea[i]);
    }
    for i in 0..nb {
        emb[na + i][na..].copy_from_slice(&eb[i]);
    }
    Lattice::new(
        GramForm::new(g).expect("block sum of definite forms"),
        Some(name.into()),
    )
    .with_embedding(emb)
    .expect("block embedding is exact")
}

/// Names accepted by [`catalog`].
pub const CATALOG_NAMES: &[&str] = &["Z<n>", "A2", "D<n>", "E8", "E8xE8", "D16plus"];

/// Looks up a named lattice: `Z<n>`, `A2`, `D<n>` (n ≥ 2), `E8`, `E8xE8`,
/// `D16plus`.
pub fn catalog(name: &str) -> Result<Lattice> {
    let unknown = || Error::UnknownLattice(name.to_owned());
    let sized = |prefix: char| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) || rest.starts_with('0') {
            return None;
        }
        rest.parse().ok().filter(|&n| (1..=64).contains(&n))
    };
    match name {
        "A2" => {
            let s3 = 3f64.sqrt();
            Lattice::new(GramForm::from_ints(&[vec![2, 1], vec![1, 2]])?, Some("A2".into()))
                .with_embedding(vec![vec![2f64.sqrt(), 0.0], vec![2f64.sqrt() / 2.0, s3 / 2f64.sqrt()]])
        }
        "E8" => Ok(from_basis("E8", d_plus_basis(8))),
        "D16plus" => Ok(from_basis("D16plus", d_plus_basis(16))),
        "E8xE8" => {
            let e8 = catalog("E8")?;
            Ok(block_sum("E8xE8", &e8, &e8))
        }
        _ => {
            if let Some(n) = sized('Z') {
                Ok(from_basis(name, (0..n).map(|i| unit(n, i)).collect()))
            } else if let Some(n) = sized('D').filter(|&n| n >= 2) {
                Ok(from_basis(name, d_basis(n)))
            } else {
                Err(unknown())
            }
        }
    }
}

/// Smallest nonzero squared norm. The search radius starts at the smallest
/// diagonal Gram entry, which a basis vector attains.
pub fn minimal_norm2(lattice: &Lattice) -> Result<Scalar> {
    lattice.min_norm.get_or_init(|| search_minimal_norm2(lattice)).clone()
}

fn search_minimal_norm2(lattice: &Lattice) -> Result<Scalar> {
    let n = lattice.rank();
    let mut r2 = (0..n)
        .map(|i| lattice.gram().entry(i, i).clone())
        .min()
        .expect("rank ≥ 1");
    let origin = QVector::zeros(n);
    loop {
        let best = fold_ball(
            lattice,
            &origin,
            &r2,
            BallMode::Closed,
            &Budget::unlimited(),
            || None::<Scalar>,
            |acc, hit| {
                if hit.coords.iter().any(|&c| c != 0) {
                    let d = hit.dist2();
                    if acc.as_ref().is_none_or(|b| d < *b) {
                        *acc = Some(d);
                    }
                }
            },
            |a, b| match (a, b) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
        )?;
        if let Some(b) = best {
            return Ok(b);
        }
        r2 *= int(2);
    }
}

/// LLL-reduced Gram (δ = 3/4) with the unimodular transform `U`
/// (row-major; column `j` is the `j`-th reduced basis vector in input
/// coordinates), so that `Uᵀ G U` equals the returned Gram.
pub fn reduce_basis(lattice: &Lattice) -> (Lattice, Vec<Vec<BigInt>>) {
    let (gram, u) = lll_reduce_gram(lattice.gram());
    (Lattice::new(gram, lattice.name.clone()), u)
}

/// Determinant of an integer matrix.
pub fn integer_determinant(m: &[Vec<BigInt>]) -> BigInt {
    crate::quadspace::bareiss_determinant(m.to_vec())
}

/// Inverse of a unimodular integer matrix.
pub fn unimodular_inverse(u: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = u.len();
    let det = integer_determinant(u);
    if det.abs() != BigInt::one() {
        return Err(Error::InvalidArgument(format!("matrix has determinant {det}, not ±1")));
    }
    let rows: Vec<QVector> = u
        .iter()
        .map(|r| QVector(r.iter().map(|x| Scalar::from_integer(x.clone())).collect()))
        .collect();
    let mut inv = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        let e: Vec<Scalar> = (0..n)
            .map(|i| if i == j { Scalar::one() } else { Scalar::zero() })
            .collect();
        let (x, _) = crate::quadspace::solve_affine(&rows, &e).expect("unimodular system is solvable");
        for i in 0..n {
            debug_assert!(x.0[i].is_integer());
            inv[i][j] = x.0[i].to_integer();
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_lattice_examples() {
        let z2 = make_lattice(vec![vec![int(1), int(0)], vec![int(0), int(1)]], Some("Z2")).unwrap();
        assert_eq!(z2.rank(), 2);
        let a2 = make_lattice(vec![vec![int(2), int(1)], vec![int(1), int(2)]], None).unwrap();
        assert_eq!(minimal_norm2(&a2).unwrap(), int(2));
        assert_eq!(
            make_lattice(vec![vec![int(1), int(2)], vec![int(2), int(1)]], None).unwrap_err(),
            Error::NotPositiveDefinite { minor: 2 }
        );
    }

    #[test]
    fn catalog_shapes() {
        assert_eq!(catalog("D16plus").unwrap().rank(), 16);
        assert_eq!(catalog("Z5").unwrap().gram(), &GramForm::identity(5));
        assert_eq!(catalog("E8").unwrap().gram().determinant(), int(1));
        assert_eq!(catalog("D16plus").unwrap().gram().determinant(), int(1));
        assert_eq!(catalog("D4").unwrap().gram().determinant(), int(4));
        let e8 = catalog("E8").unwrap();
        let ee = catalog("E8xE8").unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let expected = match (i < 8, j < 8) {
                    (true, true) => e8.gram().entry(i, j).clone(),
                    (false, false) => e8.gram().entry(i - 8, j - 8).clone(),
                    _ => Scalar::zero(),
                };
                assert_eq!(ee.gram().entry(i, j), &expected);
            }
        }
        for bad in ["Z0", "Z", "Z02", "D1", "E7", "Z2 ", "foo"] {
            assert!(matches!(catalog(bad), Err(Error::UnknownLattice(_))), "{bad}");
        }
    }

    #[test]
    fn minimal_norms() {
        assert_eq!(minimal_norm2(&catalog("Z2").unwrap()).unwrap(), int(1));
        assert_eq!(minimal_norm2(&catalog("A2").unwrap()).unwrap(), int(2));
        assert_eq!(minimal_norm2(&catalog("E8").unwrap()).unwrap(), int(2));
        assert_eq!(minimal_norm2(&catalog("D16plus").unwrap()).unwrap(), int(2));
    }

    #[test]
    fn cholesky_embedding_reproduces_gram() {
        let g = GramForm::from_ints(&[vec![3, 1, -1], vec![1, 2, 0], vec![-1, 0, 5]]).unwrap();
        let l = Lattice::new(g, None);
        let rows = l.render_embedding();
        assert!(l.clone().with_embedding(rows).is_ok());
        assert!(catalog("A2").unwrap().embedding().is_some());
    }

    #[test]
    fn bad_embedding_rejected() {
        let l = catalog("Z2").unwrap();
        assert!(l.with_embedding(vec![vec![1.0, 0.0], vec![0.5, 1.0]]).is_err());
    }
}
