//! Focal decomposition of a flat torus at its basepoint.
//!
//! For a lattice `Λ` every nonzero `λ` defines the B-plane
//! `V_λ = { v : |v| = |v − λ| } = { v : 2⟨v, λ⟩ = ⟨λ, λ⟩ }`. The indices of a
//! tangent vector `v` are
//!
//! * `μ(v)`: B-planes through `v`,
//! * `ι(v)`: B-planes meeting the open segment `(0, v)`,
//! * `B(v)`: lattice points in the closed ball of radius `|v|` about `v`.
//!
//! `v` lies in the focal component `σ_{μ+1}`, and in the interior of the
//! Brillouin zone `B_{ι+1}` exactly when `μ(v) = 0`.
//!
//! Counting `ι` over lattice vectors: `V_λ` meets `(0, v)` at the parameter
//! `t = ⟨λ,λ⟩ / 2⟨v,λ⟩`, which lies in `(0, 1)` iff `⟨v,λ⟩ > 0` and
//! `⟨λ,λ⟩ < 2⟨v,λ⟩`, i.e. iff `|v − λ|² < |v|²`. So `ι(v)` is also the number
//! of lattice points strictly inside the ball, and `B = 1 + ι + μ` (the
//! origin sits on the sphere). Both routes to `ι` are implemented and are
//! checked against each other.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattice::{count_ball, enumerate_ball, minimal_norm2, BallMode, Lattice, LatticePoint};
use crate::quadspace::{frac, int, norm2, rank_of, to_f64, GramForm, QVector, Scalar};

/// The perpendicular bisector of `0` and a nonzero lattice vector `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BPlane {
    lambda: LatticePoint,
    normal: QVector,
    offset: Scalar,
}

impl BPlane {
    pub fn new(lambda: LatticePoint, gram: &GramForm) -> Result<Self> {
        if lambda.dim() != gram.rank() {
            return Err(Error::DimensionMismatch {
                expected: gram.rank(),
                found: lambda.dim(),
            });
        }
        if lambda.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g_lambda = gram.apply(&lambda.to_qvector());
        let offset = g_lambda.dot(&lambda.to_qvector());
        let normal = g_lambda.scale(&int(2));
        Ok(BPlane { lambda, normal, offset })
    }

    pub fn lambda(&self) -> &LatticePoint {
        &self.lambda
    }

    /// Coefficients `2Gλ` of the plane equation `⟨2Gλ, v⟩ = ⟨λ, λ⟩`.
    pub fn normal(&self) -> &QVector {
        &self.normal
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    /// Sign of `2⟨v, λ⟩ − ⟨λ, λ⟩`: `Less` on the origin's side.
    pub fn side(&self, v: &QVector) -> Ordering {
        (self.normal.dot(v) - &self.offset).cmp(&Scalar::zero())
    }

    pub fn contains(&self, v: &QVector) -> bool {
        self.side(v) == Ordering::Equal
    }
}

/// Whether a B-plane separates two points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separation {
    Yes,
    No,
    Incident,
}

pub fn separates(plane: &BPlane, v: &QVector, w: &QVector) -> Separation {
    match (plane.side(v), plane.side(w)) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Separation::Incident,
        (a, b) if a != b => Separation::Yes,
        _ => Separation::No,
    }
}

/// Zone membership of a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Zone {
    /// In the interior of the `k`-th Brillouin zone.
    Interior(u64),
    /// On at least one B-plane.
    Boundary,
}

/// Exact classification of a tangent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FocalClass {
    pub mu: u64,
    pub iota: u64,
    pub brillouin: u64,
    pub sigma_index: u64,
    pub zone: Zone,
    /// Dimension of the span of the incident `λ`s.
    pub nu: usize,
    /// The `λ`s whose B-planes pass through the point, in lexicographic order.
    pub incident: Vec<LatticePoint>,
}

fn check_dim(lattice: &Lattice, v: &QVector) -> Result<()> {
    if v.dim() != lattice.rank() {
        return Err(Error::DimensionMismatch {
            expected: lattice.rank(),
            found: v.dim(),
        });
    }
    Ok(())
}

/// Nonzero `λ` whose B-plane passes through `v`, in lexicographic order.
pub fn incident_lambdas(lattice: &Lattice, v: &QVector) -> Result<Vec<LatticePoint>> {
    check_dim(lattice, v)?;
    let r2 = norm2(v, lattice.gram())?;
    let mut points = enumerate_ball(lattice, v, &r2, BallMode::Sphere)?;
    points.retain(|p| !p.is_zero());
    Ok(points)
}

/// `μ(v)` and the B-planes through `v`.
pub fn mu(lattice: &Lattice, v: &QVector) -> Result<(u64, Vec<BPlane>)> {
    let planes = incident_lambdas(lattice, v)?
        .into_iter()
        .map(|p| BPlane::new(p, lattice.gram()))
        .collect::<Result<Vec<_>>>()?;
    Ok((planes.len() as u64, planes))
}

/// Integer form of the segment test `⟨λ,λ⟩ < 2⟨v,λ⟩`, `⟨v,λ⟩ > 0`.
struct SegmentTest {
    /// `D` with `D·G` integral, and `D·G` itself.
    d: BigInt,
    gram: Vec<Vec<BigInt>>,
    /// `G v = w / qw` with `w` integral.
    w: Vec<BigInt>,
    qw: BigInt,
    small: Option<(i128, Vec<i128>, Vec<i128>, i128)>,
}

impl SegmentTest {
    fn new(gram: &GramForm, v: &QVector) -> Self {
        let (d, gi) = gram.integer_scaled();
        let (qw, w) = gram.apply(v).common_denominator();
        let small = (|| {
            let g = gi.iter().flatten().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()?;
            let wv = w.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()?;
            Some((d.to_i128()?, g, wv, qw.to_i128()?))
        })();
        SegmentTest {
            d,
            gram: gi,
            w,
            qw,
            small,
        }
    }

    fn crosses_small(&self, x: &[i64]) -> Option<bool> {
        let (d, g, w, qw) = self.small.as_ref()?;
        let n = x.len();
        let mut s: i128 = 0;
        for i in 0..n {
            s = s.checked_add(w[i].checked_mul(x[i] as i128)?)?;
        }
        if s <= 0 {
            return Some(false);
        }
        let mut norm: i128 = 0;
        for i in 0..n {
            let mut row: i128 = 0;
            for j in 0..n {
                row = row.checked_add(g[i * n + j].checked_mul(x[j] as i128)?)?;
            }
            norm = norm.checked_add(row.checked_mul(x[i] as i128)?)?;
        }
        // norm/D < 2 s/qw
        Some(qw.checked_mul(norm)? < d.checked_mul(2)?.checked_mul(s)?)
    }

    fn crosses(&self, x: &[i64]) -> bool {
        if let Some(r) = self.crosses_small(x) {
            return r;
        }
        let n = x.len();
        let s: BigInt = (0..n).map(|i| &self.w[i] * x[i]).sum();
        if !s.is_positive() {
            return false;
        }
        let norm: BigInt = (0..n)
            .map(|i| (0..n).map(|j| &self.gram[i][j] * x[j]).sum::<BigInt>() * x[i])
            .sum();
        &self.qw * norm < &self.d * 2 * s
    }
}

/// `ι(v)` by the segment parameter: counts `λ` whose B-plane meets the open
/// segment `(0, v)`. Candidates come from the closed ball of radius `|v|`
/// about `v`; the test itself rejects the origin and the planes through `v`.
pub fn iota(lattice: &Lattice, v: &QVector) -> Result<u64> {
    check_dim(lattice, v)?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let gram = lattice.gram();
    let r2 = norm2(v, gram)?;
    let test = SegmentTest::new(gram, v);
    crate::lattice::fold_ball(
        lattice,
        v,
        &r2,
        BallMode::Closed,
        &crate::lattice::Budget::unlimited(),
        || 0u64,
        |acc, hit| {
            if test.crosses(hit.coords) {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// `ι(v)` as the number of lattice points strictly closer to `v` than the
/// origin is.
pub fn iota_by_strict_ball(lattice: &Lattice, v: &QVector) -> Result<u64> {
    check_dim(lattice, v)?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    count_ball(lattice, v, &norm2(v, lattice.gram())?, BallMode::Strict)
}

/// Segment parameter `t = ⟨λ,λ⟩ / 2⟨u,λ⟩` at which the ray `t ↦ t·u` meets
/// `V_λ`, when it does (`⟨u,λ⟩ > 0`).
pub fn crossing_parameter(gram: &GramForm, u: &QVector, lambda: &LatticePoint) -> Option<Scalar> {
    let l = lambda.to_qvector();
    let gl = gram.apply(&l);
    let s = gl.dot(u);
    s.is_positive().then(|| gl.dot(&l) / (s * int(2)))
}

/// Brillouin index `B(v)`: lattice points in the closed ball of radius `|v|`
/// about `v`.
pub fn brillouin_index(lattice: &Lattice, v: &QVector) -> Result<u64> {
    check_dim(lattice, v)?;
    count_ball(lattice, v, &norm2(v, lattice.gram())?, BallMode::Closed)
}

/// Full classification of `v`. Panics if `B = 1 + ι + μ` fails, which would
/// mean the enumeration kernel is wrong.
pub fn classify(lattice: &Lattice, v: &QVector) -> Result<FocalClass> {
    let incident = incident_lambdas(lattice, v)?;
    let mu = incident.len() as u64;
    let iota = if v.is_zero() { 0 } else { iota(lattice, v)? };
    let brillouin = brillouin_index(lattice, v)?;
    assert_eq!(
        brillouin,
        1 + iota + mu,
        "counting identity violated at {v}: B = {brillouin}, ι = {iota}, μ = {mu}"
    );
    let nu = rank_of(&incident.iter().map(LatticePoint::to_qvector).collect::<Vec<_>>());
    Ok(FocalClass {
        mu,
        iota,
        brillouin,
        sigma_index: mu + 1,
        zone: if mu == 0 {
            Zone::Interior(iota + 1)
        } else {
            Zone::Boundary
        },
        nu,
        incident,
    })
}

/// One parameter along a ray where B-planes are crossed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub t: Scalar,
    pub entering: Vec<LatticePoint>,
}

/// Crossings of the ray `t ↦ t·u` with the B-planes, in increasing `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialProfile {
    pub direction: QVector,
    pub crossings: Vec<Crossing>,
}

impl RadialProfile {
    /// Zone of the open interval just after crossing `i` (and before
    /// crossing `i + 1`): one more than the number of planes crossed so far.
    pub fn zone_after(&self, i: usize) -> u64 {
        1 + self.crossings[..=i]
            .iter()
            .map(|c| c.entering.len() as u64)
            .sum::<u64>()
    }

    /// Predicted zone at parameter `t > 0`, valid up to the last crossing.
    pub fn zone_at(&self, t: &Scalar) -> Zone {
        let mut passed = 0u64;
        for c in &self.crossings {
            match t.cmp(&c.t) {
                Ordering::Less => break,
                Ordering::Equal => return Zone::Boundary,
                Ordering::Greater => passed += c.entering.len() as u64,
            }
        }
        Zone::Interior(passed + 1)
    }
}

/// The first `k_max` distinct crossing parameters along `t ↦ t·u`.
///
/// `λ` is crossed by time `T` iff `|λ − T u|² ≤ T²|u|²`, so doubling `T`
/// and enumerating that closed ball finds every crossing up to `T`.
pub fn radial_profile(lattice: &Lattice, u: &QVector, k_max: usize) -> Result<RadialProfile> {
    check_dim(lattice, u)?;
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let gram = lattice.gram();
    let u2 = norm2(u, gram)?;
    // Every crossing satisfies t ≥ |λ| / 2|u| ≥ sqrt(min) / 2|u|.
    let first = (to_f64(&minimal_norm2(lattice)?) / to_f64(&u2)).sqrt() / 2.0;
    let mut t_max = pow2_at_least(first);
    loop {
        let center = u.scale(&t_max);
        let r2 = &t_max * &t_max * &u2;
        let mut groups: BTreeMap<Scalar, Vec<LatticePoint>> = BTreeMap::new();
        for p in enumerate_ball(lattice, &center, &r2, BallMode::Closed)? {
            if let Some(t) = crossing_parameter(gram, u, &p) {
                groups.entry(t).or_default().push(p);
            }
        }
        if groups.len() >= k_max {
            let crossings = groups
                .into_iter()
                .take(k_max)
                .map(|(t, entering)| Crossing { t, entering })
                .collect();
            return Ok(RadialProfile {
                direction: u.clone(),
                crossings,
            });
        }
        t_max *= int(2);
    }
}

fn pow2_at_least(x: f64) -> Scalar {
    let e = if x.is_finite() && x > 0.0 {
        x.log2().ceil() as i32
    } else {
        0
    };
    let e = e.clamp(-200, 200);
    if e >= 0 {
        Scalar::from_integer(BigInt::from(1) << e as usize)
    } else {
        Scalar::new(BigInt::from(1), BigInt::from(1) << (-e) as usize)
    }
}

/// Squared radii `(r², R²)` of the annulus about the origin that contains
/// zone `k` along the sampled rays.
///
/// A crossing where the planes crossed so far go from `C` to `C + m` lies in
/// the closure of zones `C + 1 ..= C + m + 1` (a generic line through the
/// meeting point of `m` planes passes through each count in between), so
/// those are the points that bound zone `k` on the ray.
pub fn zone_annulus(lattice: &Lattice, k: u64, directions: &[QVector]) -> Result<(Scalar, Scalar)> {
    if k == 0 {
        return Err(Error::InvalidArgument("zone index starts at 1".into()));
    }
    Ok(zone_annuli(lattice, k, directions)?.pop().expect("k ≥ 1"))
}

/// [`zone_annulus`] for every `k` in `1..=k_max`, from one radial profile
/// per direction.
pub fn zone_annuli(lattice: &Lattice, k_max: u64, directions: &[QVector]) -> Result<Vec<(Scalar, Scalar)>> {
    if directions.is_empty() {
        return Err(Error::InvalidArgument("no directions".into()));
    }
    use rayon::prelude::*;
    let k_max = k_max as usize;
    let per_direction = directions
        .par_iter()
        .map(|u| -> Result<Vec<(Scalar, Scalar)>> {
            let profile = radial_profile(lattice, u, k_max)?;
            let u2 = norm2(u, lattice.gram())?;
            let mut bounds: Vec<Option<(Scalar, Scalar)>> = vec![None; k_max];
            let mut before = 0usize;
            for c in &profile.crossings {
                let after = before + c.entering.len();
                let r2 = &c.t * &c.t * &u2;
                for b in bounds.iter_mut().take((after + 1).min(k_max)).skip(before) {
                    *b = Some(match b.take() {
                        None => (r2.clone(), r2.clone()),
                        Some((lo, hi)) => (lo.min(r2.clone()), hi.max(r2.clone())),
                    });
                }
                before = after;
            }
            Ok(bounds.into_iter().map(|b| b.expect("zone k meets every ray")).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((0..k_max)
        .map(|k| {
            let lo = per_direction.iter().map(|d| &d[k].0).min().expect("nonempty");
            let hi = per_direction.iter().map(|d| &d[k].1).max().expect("nonempty");
            (lo.clone(), hi.clone())
        })
        .collect())
}

/// `count` primitive integer directions in the plane, spread evenly by
/// angle: all primitive `(x, y)` with `max(|x|, |y|) ≤ m` (the Farey
/// fractions of order `m` in every octant), for the least `m` that gives
/// enough, then subsampled at evenly spaced indices.
pub fn farey_directions(count: usize) -> Vec<QVector> {
    if count == 0 {
        return Vec::new();
    }
    let mut m = 1i64;
    loop {
        let mut dirs: Vec<(i64, i64)> = Vec::new();
        for x in -m..=m {
            for y in -m..=m {
                if (x, y) != (0, 0) && num_integer::gcd(x, y) == 1 {
                    dirs.push((x, y));
                }
            }
        }
        if dirs.len() >= count {
            dirs.sort_by(|a, b| angle_cmp(*a, *b));
            let len = dirs.len();
            return (0..count)
                .map(|i| dirs[i * len / count])
                .map(|(x, y)| QVector::from_ints(&[x, y]))
                .collect();
        }
        m += 1;
    }
}

/// Exact angular order starting at the positive x-axis.
fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    let half = |(x, y): (i64, i64)| if y > 0 || (y == 0 && x > 0) { 0 } else { 1 };
    half(a).cmp(&half(b)).then_with(|| (a.1 * b.0).cmp(&(a.0 * b.1)))
}

/// `count` nonzero rational directions with coordinates in `[-1, 1]` and
/// denominators up to 16, from a fixed seed.
pub fn random_directions(rank: usize, count: usize, seed: u64) -> Vec<QVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v = QVector(
            (0..rank)
                .map(|_| {
                    let d: i64 = rng.gen_range(1..=16);
                    frac(rng.gen_range(-d..=d), d)
                })
                .collect(),
        );
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// Default direction sample: Farey directions in the plane, seeded random
/// ones otherwise.
pub fn sample_directions(rank: usize, count: usize) -> Vec<QVector> {
    if rank == 2 {
        farey_directions(count)
    } else {
        random_directions(rank, count, 0x5eed)
    }
}
