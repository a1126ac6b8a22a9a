//! Length spectra, focal spectra and their comparison.
//!
//! The focal spectrum is taken to be the set of critical values of the
//! distance from the origin on the B-plane arrangement: for every
//! intersection flat `F` of codimension at most `max_codim`, the squared
//! norm of the foot of the perpendicular from `0` to `F`. Codimension one
//! gives the tangency radii `⟨λ,λ⟩ / 4`.
//!
//! Flats are grown one plane at a time. If `F` has foot `p` and `G`-orthogonal
//! normal basis `N`, adding `V_μ` with `μ⊥ = μ − proj_N μ ≠ 0` moves the foot
//! to `p + s μ⊥` with `s = (|μ|²/2 − ⟨p, μ⟩) / |μ⊥|²`, and the squared
//! radius grows by `s² |μ⊥|²`. A child with squared radius at most `c` has
//! `|μ| ≤ 2√c` and `|μ − p| ≤ √c + √(c − |p|²)`, which bounds the candidate
//! planes; every flat with small foot is reached from a parent with a
//! smaller one.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_ball_with, fold_ball, minimal_norm2, BallMode, Budget, Lattice, LatticePoint, Wide};
use crate::quadspace::{frac, int, rank_of, rref, to_f64, GramForm, QVector, Scalar};

/// Sphere counts `(norm², count)` of nonzero lattice vectors up to a cutoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthSpectrum {
    pub cutoff2: Scalar,
    pub entries: Vec<(Scalar, u64)>,
}

impl LengthSpectrum {
    /// The spectrum of the lattice with Gram `c·G`.
    pub fn scaled(&self, c: &Scalar) -> LengthSpectrum {
        LengthSpectrum {
            cutoff2: &self.cutoff2 * c,
            entries: self.entries.iter().map(|(r, m)| (r * c, *m)).collect(),
        }
    }
}

/// How flats are counted in a focal spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Multiplicity {
    /// Each distinct flat (as a point set) counts once.
    #[default]
    PointSet,
    /// A codim-`k` flat counts once per `k`-subset of its incident planes
    /// that cuts it out.
    GeneratingSubsets,
}

/// One squared radius of the focal spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FocalEntry {
    pub rho2: Scalar,
    pub multiplicity: u64,
    /// Contribution of each codimension; sums to `multiplicity`.
    pub by_codim: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FocalSpectrum {
    pub cutoff2: Scalar,
    pub max_codim: usize,
    pub convention: Multiplicity,
    pub entries: Vec<FocalEntry>,
}

impl FocalSpectrum {
    /// Entries restricted to one codimension.
    pub fn codim_part(&self, codim: usize) -> Vec<(Scalar, u64)> {
        self.entries
            .iter()
            .filter_map(|e| e.by_codim.get(&codim).map(|&m| (e.rho2.clone(), m)))
            .collect()
    }

    pub fn scaled(&self, c: &Scalar) -> FocalSpectrum {
        FocalSpectrum {
            cutoff2: &self.cutoff2 * c,
            entries: self
                .entries
                .iter()
                .map(|e| FocalEntry {
                    rho2: &e.rho2 * c,
                    ..e.clone()
                })
                .collect(),
            ..self.clone()
        }
    }
}

/// Outcome of comparing two spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    EqualUpToCutoff,
    Differ,
}

/// Smallest squared radius at which two spectra differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub radius2: Scalar,
    pub left: u64,
    pub right: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumDiff {
    pub verdict: Verdict,
    pub first_discrepancy: Option<Discrepancy>,
}

/// Common view of the two spectrum kinds for [`compare`].
pub trait Spectrum {
    fn cutoff2(&self) -> &Scalar;
    fn counts(&self) -> Vec<(Scalar, u64)>;
    fn check_comparable(&self, other: &Self) -> Result<()>;
}

impl Spectrum for LengthSpectrum {
    fn cutoff2(&self) -> &Scalar {
        &self.cutoff2
    }

    fn counts(&self) -> Vec<(Scalar, u64)> {
        self.entries.clone()
    }

    fn check_comparable(&self, _other: &Self) -> Result<()> {
        Ok(())
    }
}

impl Spectrum for FocalSpectrum {
    fn cutoff2(&self) -> &Scalar {
        &self.cutoff2
    }

    fn counts(&self) -> Vec<(Scalar, u64)> {
        self.entries.iter().map(|e| (e.rho2.clone(), e.multiplicity)).collect()
    }

    fn check_comparable(&self, other: &Self) -> Result<()> {
        if self.max_codim != other.max_codim {
            return Err(Error::CutoffMismatch(format!(
                "max_codim {} vs {}",
                self.max_codim, other.max_codim
            )));
        }
        if self.convention != other.convention {
            return Err(Error::CutoffMismatch("different multiplicity conventions".into()));
        }
        Ok(())
    }
}

/// Entrywise exact comparison of two spectra with the same cutoff.
pub fn compare<S: Spectrum>(left: &S, right: &S) -> Result<SpectrumDiff> {
    if left.cutoff2() != right.cutoff2() {
        return Err(Error::CutoffMismatch(format!(
            "cutoff2 {} vs {}",
            left.cutoff2(),
            right.cutoff2()
        )));
    }
    left.check_comparable(right)?;
    let (a, b) = (left.counts(), right.counts());
    let (mut i, mut j) = (0, 0);
    loop {
        let (ra, rb) = (a.get(i), b.get(j));
        let d = match (ra, rb) {
            (None, None) => {
                return Ok(SpectrumDiff {
                    verdict: Verdict::EqualUpToCutoff,
                    first_discrepancy: None,
                })
            }
            (Some((x, m)), Some((y, k))) if x == y => {
                if m == k {
                    i += 1;
                    j += 1;
                    continue;
                }
                Discrepancy {
                    radius2: x.clone(),
                    left: *m,
                    right: *k,
                }
            }
            (Some((x, m)), Some((y, _))) if x < y => Discrepancy {
                radius2: x.clone(),
                left: *m,
                right: 0,
            },
            (Some((x, m)), None) => Discrepancy {
                radius2: x.clone(),
                left: *m,
                right: 0,
            },
            (_, Some((y, k))) => Discrepancy {
                radius2: y.clone(),
                left: 0,
                right: *k,
            },
        };
        return Ok(SpectrumDiff {
            verdict: Verdict::Differ,
            first_discrepancy: Some(d),
        });
    }
}

fn check_cutoff(cutoff2: &Scalar) -> Result<()> {
    if !cutoff2.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "cutoff2 must be positive, got {cutoff2}"
        )));
    }
    Ok(())
}

/// Length spectrum up to `cutoff2`, without a budget.
pub fn length_spectrum(lattice: &Lattice, cutoff2: &Scalar) -> Result<LengthSpectrum> {
    length_spectrum_with(lattice, cutoff2, &Budget::unlimited())
}

pub fn length_spectrum_with(lattice: &Lattice, cutoff2: &Scalar, budget: &Budget) -> Result<LengthSpectrum> {
    check_cutoff(cutoff2)?;
    let origin = QVector::zeros(lattice.rank());
    let buckets = fold_ball(
        lattice,
        &origin,
        cutoff2,
        BallMode::Closed,
        budget,
        BTreeMap::<Wide, (u64, Scalar)>::new,
        |acc, hit| {
            if hit.coords.iter().any(|&c| c != 0) {
                acc.entry(hit.value.clone()).or_insert_with(|| (0, hit.dist2())).0 += 1;
            }
        },
        merge_buckets,
    )?;
    Ok(LengthSpectrum {
        cutoff2: cutoff2.clone(),
        entries: buckets.into_values().map(|(m, r)| (r, m)).collect(),
    })
}

fn merge_buckets(
    mut a: BTreeMap<Wide, (u64, Scalar)>,
    b: BTreeMap<Wide, (u64, Scalar)>,
) -> BTreeMap<Wide, (u64, Scalar)> {
    for (k, (m, r)) in b {
        a.entry(k).or_insert_with(|| (0, r)).0 += m;
    }
    a
}

/// An intersection flat of B-planes, with its foot and an orthogonal basis
/// of its normal space.
#[derive(Debug, Clone)]
struct Flat {
    foot: QVector,
    rho2: Scalar,
    normals: Vec<QVector>,
    /// `G n` and `⟨n, n⟩` for each normal.
    g_normals: Vec<QVector>,
    normal_norms: Vec<Scalar>,
}

/// A flat as a point set: its foot and the row-reduced normal span.
type FlatKey = (QVector, Vec<QVector>);

impl Flat {
    fn plane(gram: &GramForm, lambda: &LatticePoint) -> Flat {
        let l = lambda.to_qvector();
        let gl = gram.apply(&l);
        let n2 = gl.dot(&l);
        Flat {
            foot: l.scale(&frac(1, 2)),
            rho2: &n2 / int(4),
            normals: vec![l],
            g_normals: vec![gl],
            normal_norms: vec![n2],
        }
    }

    fn codim(&self) -> usize {
        self.normals.len()
    }

    fn key(&self) -> FlatKey {
        (self.foot.clone(), rref(&self.normals))
    }

    /// Component of `m` orthogonal to the normal space.
    fn reject(&self, m: &QVector) -> QVector {
        self.normals
            .iter()
            .zip(&self.g_normals)
            .zip(&self.normal_norms)
            .fold(m.clone(), |acc, ((n, gn), nn)| acc.sub(&n.scale(&(gn.dot(m) / nn))))
    }

    /// `F ∩ V_μ` when it is a flat of one higher codimension.
    fn extend(&self, gram: &GramForm, mu: &LatticePoint) -> Option<Flat> {
        let m = mu.to_qvector();
        let perp = self.reject(&m);
        if perp.is_zero() {
            return None;
        }
        let gm = gram.apply(&m);
        let g_perp = gram.apply(&perp);
        let perp2 = g_perp.dot(&perp);
        let s = (gm.dot(&m) / int(2) - gm.dot(&self.foot)) / &perp2;
        let rho2 = &self.rho2 + &s * &s * &perp2;
        let foot = self.foot.add(&perp.scale(&s));
        let mut normals = self.normals.clone();
        let mut g_normals = self.g_normals.clone();
        let mut normal_norms = self.normal_norms.clone();
        normals.push(perp);
        g_normals.push(g_perp);
        normal_norms.push(perp2);
        Some(Flat {
            foot,
            rho2,
            normals,
            g_normals,
            normal_norms,
        })
    }
}

/// A rational upper bound for `√x`, `x ≥ 0`.
fn sqrt_upper(x: &Scalar) -> Scalar {
    if !x.is_positive() {
        return Scalar::zero();
    }
    let mut s = Scalar::from_float(to_f64(x).sqrt() * (1.0 + 1e-9) + 1e-12).unwrap_or_else(|| x + Scalar::one());
    while &(&s * &s) < x {
        s = &s * frac(2, 1) + Scalar::one();
    }
    s
}

/// Squared radius of a ball about the foot of `flat` that contains every `μ`
/// whose plane yields a child with squared radius at most `cutoff2`.
fn child_radius2(flat: &Flat, cutoff2: &Scalar) -> Scalar {
    let r = sqrt_upper(cutoff2) + sqrt_upper(&(cutoff2 - &flat.rho2));
    &r * &r
}

/// Children of `flat` within the cutoff, keyed as point sets.
fn children(lattice: &Lattice, flat: &Flat, cutoff2: &Scalar, budget: &Budget) -> Result<BTreeMap<FlatKey, Flat>> {
    let gram = lattice.gram();
    let mut out = BTreeMap::new();
    for mu in enumerate_ball_with(
        lattice,
        &flat.foot,
        &child_radius2(flat, cutoff2),
        BallMode::Closed,
        budget,
    )? {
        if mu.is_zero() {
            continue;
        }
        if let Some(child) = flat.extend(gram, &mu) {
            if &child.rho2 <= cutoff2 {
                out.entry(child.key()).or_insert(child);
            }
        }
    }
    Ok(out)
}

fn merge_flats(mut a: BTreeMap<FlatKey, Flat>, b: BTreeMap<FlatKey, Flat>) -> BTreeMap<FlatKey, Flat> {
    for (k, f) in b {
        a.entry(k).or_insert(f);
    }
    a
}

/// Number of `k`-subsets of the planes through `flat` that cut it out.
fn generating_subsets(lattice: &Lattice, flat: &Flat, budget: &Budget) -> Result<u64> {
    let k = flat.codim();
    if k == 1 {
        return Ok(1);
    }
    let incident: Vec<QVector> = enumerate_ball_with(lattice, &flat.foot, &flat.rho2, BallMode::Sphere, budget)?
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.to_qvector())
        .filter(|v| flat.reject(v).is_zero())
        .collect();
    let mut count = 0u64;
    let mut idx: Vec<usize> = (0..k).collect();
    let m = incident.len();
    if m < k {
        return Ok(0);
    }
    loop {
        let subset: Vec<QVector> = idx.iter().map(|&i| incident[i].clone()).collect();
        if rank_of(&subset) == k {
            count += 1;
        }
        // next combination in lexicographic order
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
            return Ok(count);
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

/// Focal spectrum with point-set multiplicity and no budget.
pub fn focal_spectrum(lattice: &Lattice, cutoff2: &Scalar, max_codim: usize) -> Result<FocalSpectrum> {
    focal_spectrum_with(
        lattice,
        cutoff2,
        max_codim,
        Multiplicity::PointSet,
        &Budget::unlimited(),
    )
}

pub fn focal_spectrum_with(
    lattice: &Lattice,
    cutoff2: &Scalar,
    max_codim: usize,
    convention: Multiplicity,
    budget: &Budget,
) -> Result<FocalSpectrum> {
    check_cutoff(cutoff2)?;
    if max_codim == 0 || max_codim > lattice.rank() {
        return Err(Error::InvalidArgument(format!(
            "max_codim must be between 1 and the rank {}, got {max_codim}",
            lattice.rank()
        )));
    }
    let gram = lattice.gram();
    let mut table: BTreeMap<Scalar, BTreeMap<usize, u64>> = BTreeMap::new();

    // Planes with ⟨λ,λ⟩/4 ≤ c. Their codim-2 children are found in the same
    // pass so the planes themselves need not be stored.
    #[derive(Default)]
    struct Level1 {
        tangency: BTreeMap<Wide, (u64, Scalar)>,
        children: BTreeMap<FlatKey, Flat>,
        error: Option<Error>,
    }
    let level1 = fold_ball(
        lattice,
        &QVector::zeros(lattice.rank()),
        &(cutoff2 * int(4)),
        BallMode::Closed,
        budget,
        Level1::default,
        |acc, hit| {
            if acc.error.is_some() || hit.coords.iter().all(|&c| c == 0) {
                return;
            }
            acc.tangency
                .entry(hit.value.clone())
                .or_insert_with(|| (0, hit.dist2() / int(4)))
                .0 += 1;
            if max_codim >= 2 {
                let plane = Flat::plane(gram, &hit.point());
                match children(lattice, &plane, cutoff2, budget) {
                    Ok(c) => acc.children = merge_flats(std::mem::take(&mut acc.children), c),
                    Err(e) => acc.error = Some(e),
                }
            }
        },
        |mut a, b| {
            a.tangency = merge_buckets(a.tangency, b.tangency);
            a.children = merge_flats(a.children, b.children);
            a.error = a.error.or(b.error);
            a
        },
    )?;
    if let Some(e) = level1.error {
        return Err(e);
    }
    for (m, r) in level1.tangency.into_values() {
        table.entry(r).or_default().insert(1, m);
    }

    let mut level = level1.children;
    for codim in 2..=max_codim {
        let flats: Vec<&Flat> = level.values().collect();
        let counts = flats
            .par_iter()
            .map(|f| match convention {
                Multiplicity::PointSet => Ok((f.rho2.clone(), 1)),
                Multiplicity::GeneratingSubsets => Ok((f.rho2.clone(), generating_subsets(lattice, f, budget)?)),
            })
            .collect::<Result<Vec<_>>>()?;
        for (r, m) in counts {
            *table.entry(r).or_default().entry(codim).or_insert(0) += m;
        }
        budget.check_time()?;
        if codim == max_codim {
            break;
        }
        level = flats
            .par_iter()
            .map(|f| children(lattice, f, cutoff2, budget))
            .try_reduce(BTreeMap::new, |a, b| Ok(merge_flats(a, b)))?;
    }

    Ok(FocalSpectrum {
        cutoff2: cutoff2.clone(),
        max_codim,
        convention,
        entries: table
            .into_iter()
            .map(|(rho2, by_codim)| FocalEntry {
                rho2,
                multiplicity: by_codim.values().sum(),
                by_codim,
            })
            .collect(),
    })
}

/// Connected components of the graph on minimal vectors modulo `±`, with an
/// edge wherever two classes are not orthogonal.
pub fn root_graph_components(lattice: &Lattice) -> Result<u64> {
    let m = minimal_norm2(lattice)?;
    let roots: Vec<LatticePoint> =
        crate::lattice::enumerate_ball(lattice, &QVector::zeros(lattice.rank()), &m, BallMode::Sphere)?
            .into_iter()
            .filter(|p| p.0.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0))
            .collect();
    let (_, g) = lattice.gram().integer_scaled();
    let images: Vec<Vec<num_bigint::BigInt>> = roots
        .iter()
        .map(|r| {
            g.iter()
                .map(|row| row.iter().zip(&r.0).map(|(a, &x)| a * x).sum())
                .collect()
        })
        .collect();
    let mut parent: Vec<usize> = (0..roots.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..roots.len() {
        for j in (i + 1)..roots.len() {
            let ip: num_bigint::BigInt = images[i].iter().zip(&roots[j].0).map(|(a, &x)| a * x).sum();
            if !ip.is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    Ok((0..roots.len()).filter(|&i| find(&mut parent, i) == i).count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focal::BPlane;
    use crate::lattice::catalog;
    use crate::quadspace::flat_intersection;
    use std::collections::BTreeSet;

    fn spectrum(entries: &[(Scalar, u64)], cutoff2: Scalar) -> LengthSpectrum {
        LengthSpectrum {
            cutoff2,
            entries: entries.to_vec(),
        }
    }

    #[test]
    fn length_examples() {
        let z2 = catalog("Z2").unwrap();
        assert_eq!(
            length_spectrum(&z2, &int(2)).unwrap().entries,
            vec![(int(1), 4), (int(2), 4)]
        );
        let e8 = catalog("E8").unwrap();
        assert_eq!(
            length_spectrum(&e8, &int(4)).unwrap().entries,
            vec![(int(2), 240), (int(4), 2160)]
        );
        assert!(length_spectrum(&z2, &int(0)).is_err());
    }

    #[test]
    fn compare_examples() {
        let z2 = length_spectrum(&catalog("Z2").unwrap(), &int(2)).unwrap();
        let a2 = length_spectrum(&catalog("A2").unwrap(), &int(2)).unwrap();
        let d = compare(&z2, &a2).unwrap();
        assert_eq!(d.verdict, Verdict::Differ);
        assert_eq!(
            d.first_discrepancy,
            Some(Discrepancy {
                radius2: int(1),
                left: 4,
                right: 0
            })
        );
        assert_eq!(compare(&z2, &z2).unwrap().verdict, Verdict::EqualUpToCutoff);
        let other = length_spectrum(&catalog("Z2").unwrap(), &int(3)).unwrap();
        assert!(matches!(compare(&z2, &other), Err(Error::CutoffMismatch(_))));
        let a = spectrum(&[(int(1), 2), (int(3), 1)], int(4));
        let b = spectrum(&[(int(1), 2), (int(2), 5)], int(4));
        assert_eq!(
            compare(&a, &b).unwrap().first_discrepancy,
            Some(Discrepancy {
                radius2: int(2),
                left: 0,
                right: 5
            })
        );
    }

    /// Every pair of planes with |λ|² ≤ bound, intersected exactly.
    fn pair_oracle(lattice: &Lattice, cutoff2: &Scalar, norm_bound: i64) -> BTreeMap<Scalar, u64> {
        let gram = lattice.gram();
        let lambdas: Vec<LatticePoint> = (-3..=3)
            .flat_map(|x| (-3..=3).map(move |y| LatticePoint(vec![x, y])))
            .filter(|p| !p.is_zero() && lattice.norm2(p).unwrap() <= int(norm_bound))
            .collect();
        let mut flats: BTreeSet<(QVector, usize)> = BTreeSet::new();
        for (i, a) in lambdas.iter().enumerate() {
            let pa = BPlane::new(a.clone(), gram).unwrap();
            let f = flat_intersection(std::slice::from_ref(&pa), gram).unwrap().unwrap();
            flats.insert((crate::quadspace::foot_of_origin(&f, gram).unwrap().0, 1));
            for b in &lambdas[i + 1..] {
                let pb = BPlane::new(b.clone(), gram).unwrap();
                if let Some(f) = flat_intersection(&[pa.clone(), pb], gram).unwrap() {
                    if f.codim == 2 {
                        flats.insert((crate::quadspace::foot_of_origin(&f, gram).unwrap().0, 2));
                    }
                }
            }
        }
        let mut out = BTreeMap::new();
        for (foot, _) in flats {
            let r = crate::quadspace::norm2(&foot, gram).unwrap();
            if &r <= cutoff2 {
                *out.entry(r).or_insert(0) += 1;
            }
        }
        out
    }

    #[test]
    fn z2_focal_codim2() {
        let z2 = catalog("Z2").unwrap();
        let c = frac(1, 2);
        let oracle = pair_oracle(&z2, &c, 2);
        assert_eq!(
            oracle.into_iter().collect::<Vec<_>>(),
            vec![(frac(1, 4), 4), (frac(1, 2), 8)]
        );
        let s = focal_spectrum(&z2, &c, 2).unwrap();
        let got: Vec<(Scalar, u64)> = s.entries.iter().map(|e| (e.rho2.clone(), e.multiplicity)).collect();
        assert_eq!(got, vec![(frac(1, 4), 4), (frac(1, 2), 8)]);
        assert_eq!(s.entries[1].by_codim, BTreeMap::from([(1, 4), (2, 4)]));
        let g = focal_spectrum_with(&z2, &c, 2, Multiplicity::GeneratingSubsets, &Budget::unlimited()).unwrap();
        assert_eq!(g.entries[1].multiplicity, 4 + 4 * 3);
    }

    #[test]
    fn a2_focal_codim2_matches_pair_oracle() {
        let a2 = catalog("A2").unwrap();
        for c in [frac(1, 2), frac(2, 3), int(1), int(2)] {
            // |λ|² ≤ 4c suffices for both planes through a foot of norm² ≤ c.
            let bound = (&c * int(4)).floor().to_integer().try_into().unwrap();
            let oracle: Vec<(Scalar, u64)> = pair_oracle(&a2, &c, bound).into_iter().collect();
            assert_eq!(focal_spectrum(&a2, &c, 2).unwrap().counts(), oracle, "cutoff {c}");
        }
    }

    #[test]
    fn codim1_is_quarter_length() {
        for name in ["Z2", "A2", "Z3", "D4"] {
            let l = catalog(name).unwrap();
            let f = focal_spectrum(&l, &int(2), 1).unwrap();
            let len = length_spectrum(&l, &int(8)).unwrap();
            let quarter: Vec<(Scalar, u64)> = len.entries.iter().map(|(r, m)| (r / int(4), *m)).collect();
            assert_eq!(f.codim_part(1), quarter);
            assert_eq!(f.counts(), quarter);
        }
    }

    #[test]
    fn focal_rejects_bad_codim() {
        let z2 = catalog("Z2").unwrap();
        assert!(focal_spectrum(&z2, &int(1), 0).is_err());
        assert!(focal_spectrum(&z2, &int(1), 3).is_err());
    }

    #[test]
    fn focal_budget_is_an_error() {
        let d4 = catalog("D4").unwrap();
        let budget = Budget::new(50, None);
        let r = focal_spectrum_with(&d4, &int(2), 2, Multiplicity::PointSet, &budget);
        assert!(matches!(r, Err(Error::BudgetExceeded { limit: 50 })));
    }

    #[test]
    fn root_graphs() {
        assert_eq!(root_graph_components(&catalog("Z2").unwrap()).unwrap(), 2);
        assert_eq!(root_graph_components(&catalog("A2").unwrap()).unwrap(), 1);
        assert_eq!(root_graph_components(&catalog("D4").unwrap()).unwrap(), 1);
        assert_eq!(root_graph_components(&catalog("E8").unwrap()).unwrap(), 1);
    }

    #[test]
    fn sqrt_upper_bounds() {
        for x in [frac(1, 2), int(2), int(9), frac(1, 1_000_000), int(0)] {
            let s = sqrt_upper(&x);
            assert!(&s * &s >= x);
        }
    }
}
