//! Isometry of lattices up to rescaling.
//!
//! Two lattices are related by a scaled orthogonal map exactly when their
//! Gram matrices are: if an orthogonal `A` maps `√c Λ₁` onto `Λ₂`, then
//! `A √c B₁ U = B₂` for an integral unimodular `U`, and `G = BᵀB` turns this
//! into `c Uᵀ G₁ U = G₂`. Conversely such a `U` defines the orthogonal map
//! `B₂ (√c B₁ U)⁻¹`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{
    enumerate_ball, integer_determinant, minimal_norm2, reduce_basis, unimodular_inverse, BallMode, Lattice,
    LatticePoint,
};
use crate::quadspace::{GramForm, QVector, Scalar};
use crate::spectra::{compare, length_spectrum, Verdict};

/// Largest rank for the exact decision.
pub const MAX_EXACT_RANK: usize = 8;

/// `scale · Uᵀ G₁ U = G₂` with `U` integral and `det U = ±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryCertificate {
    pub scale: Scalar,
    /// Row-major; column `j` is the image of the `j`-th basis vector of the
    /// second lattice, in coordinates of the first.
    pub transform: Vec<Vec<BigInt>>,
}

impl IsometryCertificate {
    /// Re-checks the defining identity exactly.
    pub fn verify(&self, left: &GramForm, right: &GramForm) -> bool {
        self.scale.is_positive()
            && integer_determinant(&self.transform).abs() == BigInt::one()
            && left
                .transform(&self.transform)
                .and_then(|g| g.scaled(&self.scale))
                .is_ok_and(|g| &g == right)
    }

    /// The certificate for the swapped pair.
    pub fn inverse(&self) -> Result<IsometryCertificate> {
        Ok(IsometryCertificate {
            scale: self.scale.recip(),
            transform: unimodular_inverse(&self.transform)?,
        })
    }
}

/// Why two lattices are not isometric up to scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// After normalizing the minimal norm to 1, the number of vectors of
    /// this squared norm differs.
    SphereCount { norm2: Scalar, left: u64, right: u64 },
    /// Normalized determinants differ.
    Determinant { left: Scalar, right: Scalar },
    /// All invariants agree but no isometry exists.
    SearchExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isometry {
    Certificate(IsometryCertificate),
    NotIsometric(Witness),
}

/// The lattice rescaled to minimal norm 1, and the minimal norm divided out.
pub fn normalize_scale(lattice: &Lattice) -> Result<(Lattice, Scalar)> {
    let m = minimal_norm2(lattice)?;
    let gram = lattice.gram().scaled(&m.recip())?;
    let mut out = Lattice::new(gram, lattice.name().map(str::to_owned));
    if let Some(e) = lattice.embedding() {
        let s = crate::quadspace::to_f64(&m).sqrt();
        out = out.with_embedding(e.iter().map(|r| r.iter().map(|x| x / s).collect()).collect())?;
    }
    Ok((out, m))
}

fn integer_matrix_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Decides whether `L₁` and `L₂` are isometric up to a positive rescaling.
///
/// Both are normalized to minimal norm 1. Sphere counts up to the longest
/// reduced basis vector and the determinants are compared first; then an
/// LLL-reduced basis of `L₂` is mapped vector by vector onto vectors of `L₁`
/// with the same norms and pairwise inner products, trying candidates in
/// decreasing lexicographic order (so a basis maps to itself when it can).
pub fn is_isometric_up_to_scale(left: &Lattice, right: &Lattice) -> Result<Isometry> {
    let n = left.rank();
    if n != right.rank() {
        return Err(Error::RankMismatch {
            left: n,
            right: right.rank(),
        });
    }
    if n > MAX_EXACT_RANK {
        return Err(Error::RankTooLarge {
            rank: n,
            max: MAX_EXACT_RANK,
        });
    }
    let (l1, m1) = normalize_scale(left)?;
    let (l2, m2) = normalize_scale(right)?;
    let (r1, _) = reduce_basis(&l1);
    let (r2, v) = reduce_basis(&l2);
    let g1 = l1.gram();
    let target = r2.gram();

    let longest = |g: &GramForm| (0..n).map(|i| g.entry(i, i).clone()).max().expect("rank ≥ 1");
    let reach = longest(r1.gram()).max(longest(target));
    let diff = compare(&length_spectrum(&l1, &reach)?, &length_spectrum(&l2, &reach)?)?;
    if diff.verdict == Verdict::Differ {
        let d = diff.first_discrepancy.expect("differ has a discrepancy");
        return Ok(Isometry::NotIsometric(Witness::SphereCount {
            norm2: d.radius2,
            left: d.left,
            right: d.right,
        }));
    }
    let (d1, d2) = (g1.determinant(), l2.gram().determinant());
    if d1 != d2 {
        return Ok(Isometry::NotIsometric(Witness::Determinant { left: d1, right: d2 }));
    }

    // Candidate images for each reduced basis vector of L₂, by norm.
    let origin = QVector::zeros(n);
    let mut by_norm: Vec<(Scalar, Vec<LatticePoint>)> = Vec::new();
    let mut candidates: Vec<usize> = Vec::with_capacity(n);
    for j in 0..n {
        let norm = target.entry(j, j).clone();
        let idx = match by_norm.iter().position(|(r, _)| *r == norm) {
            Some(i) => i,
            None => {
                let mut pts = enumerate_ball(&l1, &origin, &norm, BallMode::Sphere)?;
                pts.reverse();
                by_norm.push((norm.clone(), pts));
                by_norm.len() - 1
            }
        };
        candidates.push(idx);
    }
    let images: Vec<Vec<(LatticePoint, QVector)>> = by_norm
        .iter()
        .map(|(_, pts)| pts.iter().map(|p| (p.clone(), g1.apply(&p.to_qvector()))).collect())
        .collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let found = search(&images, &candidates, target, &mut chosen);
    let Some(choice) = found else {
        return Ok(Isometry::NotIsometric(Witness::SearchExhausted));
    };
    // W has the chosen images as columns: Wᵀ G₁ W = R₂ = Vᵀ G₂ V.
    let w: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(images[candidates[j]][choice[j]].0 .0[i]))
                .collect()
        })
        .collect();
    let u = integer_matrix_mul(&w, &unimodular_inverse(&v)?);
    let cert = IsometryCertificate {
        scale: &m2 / &m1,
        transform: u,
    };
    assert!(
        cert.verify(left.gram(), right.gram()),
        "isometry search produced an invalid certificate"
    );
    Ok(Isometry::Certificate(cert))
}

fn search(
    images: &[Vec<(LatticePoint, QVector)>],
    candidates: &[usize],
    target: &GramForm,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let j = chosen.len();
    if j == candidates.len() {
        return Some(chosen.clone());
    }
    let pool = &images[candidates[j]];
    'next: for (k, (p, _)) in pool.iter().enumerate() {
        let x = p.to_qvector();
        for (i, &c) in chosen.iter().enumerate() {
            if images[candidates[i]][c].1.dot(&x) != *target.entry(i, j) {
                continue 'next;
            }
        }
        chosen.push(k);
        if let Some(found) = search(images, candidates, target, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// A unimodular matrix from elementary column moves `col_a += c · col_b`.
pub fn elementary_unimodular(n: usize, moves: &[(usize, usize, i64)]) -> Vec<Vec<BigInt>> {
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for &(a, b, c) in moves {
        let (a, b) = (a % n, b % n);
        if a != b {
            for row in u.iter_mut() {
                let t = &row[b] * c;
                row[a] += t;
            }
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::catalog;
    use crate::quadspace::{frac, int};
    use proptest::prelude::*;

    fn lat(rows: &[Vec<i64>]) -> Lattice {
        Lattice::new(GramForm::from_ints(rows).unwrap(), None)
    }

    #[test]
    fn normalize_examples() {
        let (a, s) = normalize_scale(&catalog("A2").unwrap()).unwrap();
        assert_eq!(s, int(2));
        assert_eq!(a.gram().rows(), &[vec![int(1), frac(1, 2)], vec![frac(1, 2), int(1)]]);
        let (z, s) = normalize_scale(&catalog("Z2").unwrap()).unwrap();
        assert_eq!((z.gram(), s), (&GramForm::identity(2), int(1)));
    }

    #[test]
    fn z2_vs_twice_z2() {
        let r = is_isometric_up_to_scale(&catalog("Z2").unwrap(), &lat(&[vec![2, 0], vec![0, 2]])).unwrap();
        let Isometry::Certificate(c) = r else { panic!("{r:?}") };
        assert_eq!(c.scale, int(2));
        assert_eq!(c.transform, elementary_unimodular(2, &[]));
    }

    #[test]
    fn z2_vs_a2() {
        let r = is_isometric_up_to_scale(&catalog("Z2").unwrap(), &catalog("A2").unwrap()).unwrap();
        assert_eq!(
            r,
            Isometry::NotIsometric(Witness::SphereCount {
                norm2: int(1),
                left: 4,
                right: 6
            })
        );
    }

    #[test]
    fn z3_vs_a3() {
        let a3 = lat(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        let r = is_isometric_up_to_scale(&catalog("Z3").unwrap(), &a3).unwrap();
        assert!(matches!(r, Isometry::NotIsometric(Witness::SphereCount { .. })));
        // D3 is A3 in another basis.
        let r = is_isometric_up_to_scale(&catalog("D3").unwrap(), &a3).unwrap();
        assert!(matches!(r, Isometry::Certificate(_)));
    }

    #[test]
    fn diagonal_forms_differ() {
        let r = is_isometric_up_to_scale(&lat(&[vec![1, 0], vec![0, 2]]), &lat(&[vec![1, 0], vec![0, 3]])).unwrap();
        assert!(matches!(r, Isometry::NotIsometric(Witness::SphereCount { .. })));
    }

    #[test]
    fn errors() {
        let z2 = catalog("Z2").unwrap();
        assert_eq!(
            is_isometric_up_to_scale(&z2, &catalog("Z3").unwrap()),
            Err(Error::RankMismatch { left: 2, right: 3 })
        );
        let z9 = catalog("Z9").unwrap();
        assert_eq!(
            is_isometric_up_to_scale(&z9, &z9),
            Err(Error::RankTooLarge { rank: 9, max: 8 })
        );
    }

    #[test]
    fn catalog_reflexive() {
        for name in ["Z2", "A2", "Z3", "D4", "E8"] {
            let l = catalog(name).unwrap();
            let r = is_isometric_up_to_scale(&l, &l).unwrap();
            let Isometry::Certificate(c) = r else { panic!("{name}") };
            assert_eq!(c.scale, int(1));
            let back = c.inverse().unwrap();
            assert!(back.verify(l.gram(), l.gram()));
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn recovers_random_transform(
            n in 2usize..4,
            base in 0usize..3,
            moves in prop::collection::vec((0usize..3, 0usize..3, -3i64..4), 0..8),
            (p, q) in (1i64..7, 1i64..7),
        ) {
            let g = match base {
                0 => GramForm::identity(n),
                1 => catalog(&format!("D{n}")).unwrap().gram().clone(),
                _ => GramForm::new((0..n).map(|i| (0..n).map(|j| if i == j { int(4) } else { int(1) }).collect()).collect()).unwrap(),
            };
            let u = elementary_unimodular(n, &moves);
            let c = frac(p, q);
            let other = g.transform(&u).unwrap().scaled(&c).unwrap();
            let (l1, l2) = (Lattice::new(g.clone(), None), Lattice::new(other.clone(), None));
            let Isometry::Certificate(cert) = is_isometric_up_to_scale(&l1, &l2).unwrap() else {
                return Err(TestCaseError::fail("no certificate"));
            };
            prop_assert!(cert.verify(&g, &other));
            prop_assert_eq!(&cert.scale, &c);
            let back = cert.inverse().unwrap();
            prop_assert!(back.verify(&other, &g));
        }
    }
}
