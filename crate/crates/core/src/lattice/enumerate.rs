//! Lattice points in a ball, by recursive (Fincke–Pohst) enumeration over an
//! LLL-reduced basis.
//!
//! Floating point is used only to bound the coordinate ranges at each level,
//! and those bounds are widened by a slack far above the rounding error of a
//! reduced basis. Every candidate leaf is then accepted or rejected by an
//! exact integer comparison, so the output never depends on rounding.

use std::cmp::Ordering;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::{exact_ldl, lll_reduce_gram, unimodular_inverse, Lattice, LatticePoint};
use crate::error::{Error, Result};
use crate::quadspace::{to_f64, GramForm, QVector, Scalar};

/// Which part of the ball to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BallMode {
    /// `dist2 < r2`
    Strict,
    /// `dist2 ≤ r2`
    Closed,
    /// `dist2 = r2`
    Sphere,
}

/// Caps the number of accepted points and, optionally, the wall-clock time of
/// every enumeration it is passed to. Exceeding either is an error.
#[derive(Debug)]
pub struct Budget {
    max_points: Option<u64>,
    cap: Option<(Instant, Duration)>,
    used: AtomicU64,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_points: None,
            cap: None,
            used: AtomicU64::new(0),
        }
    }

    pub fn new(max_points: u64, time_cap: Option<Duration>) -> Self {
        Budget {
            max_points: Some(max_points),
            cap: time_cap.map(|d| (Instant::now(), d)),
            used: AtomicU64::new(0),
        }
    }

    /// Points accepted so far across all enumerations.
    pub fn used(&self) -> u64 {
        self.used.load(AtomicOrdering::Relaxed)
    }

    pub fn charge(&self, points: u64) -> Result<()> {
        let total = self.used.fetch_add(points, AtomicOrdering::Relaxed) + points;
        if let Some(limit) = self.max_points {
            if total > limit {
                return Err(Error::BudgetExceeded { limit });
            }
        }
        self.check_time()
    }

    pub fn check_time(&self) -> Result<()> {
        match self.cap {
            Some((start, cap)) if start.elapsed() > cap => Err(Error::TimeCapExceeded { seconds: cap.as_secs() }),
            _ => Ok(()),
        }
    }
}

/// Exact integer that is stored inline whenever it fits in an `i128`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Wide {
    Small(i128),
    Big(BigInt),
}

impl Wide {
    fn from_big(b: BigInt) -> Wide {
        match b.to_i128() {
            Some(v) => Wide::Small(v),
            None => Wide::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Wide::Small(v) => BigInt::from(*v),
            Wide::Big(b) => b.clone(),
        }
    }
}

impl Ord for Wide {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Wide::Small(a), Wide::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Wide {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One accepted lattice point. `value / scale` is its exact squared distance
/// to the center; `scale` is fixed for the whole enumeration, so `value`
/// alone is a valid bucketing key.
pub struct Hit<'a> {
    pub coords: &'a [i64],
    pub value: &'a Wide,
    scale: &'a BigInt,
}

impl Hit<'_> {
    pub fn dist2(&self) -> Scalar {
        Scalar::new(self.value.to_big(), self.scale.clone())
    }

    pub fn point(&self) -> LatticePoint {
        LatticePoint(self.coords.to_vec())
    }
}

/// Reduced-basis data shared by every enumeration over one lattice.
#[derive(Debug)]
pub(crate) struct Kernel {
    n: usize,
    /// Column `j` is reduced basis vector `j` in input coordinates.
    u: Vec<Vec<i64>>,
    u_inv: Vec<Vec<BigInt>>,
    /// `D` with `D · G_reduced` integral.
    denom: BigInt,
    gram_big: Vec<Vec<BigInt>>,
    gram_small: Option<Vec<i128>>,
    diag: Vec<f64>,
    upper: Vec<Vec<f64>>,
}

impl Kernel {
    pub(crate) fn build(gram: &GramForm) -> Result<Kernel> {
        let n = gram.rank();
        let (reduced, u_big) = lll_reduce_gram(gram);
        let u = u_big
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow("basis transform")))
                    .collect()
            })
            .collect::<Result<Vec<Vec<i64>>>>()?;
        let u_inv = unimodular_inverse(&u_big)?;
        let (denom, gram_big) = reduced.integer_scaled();
        let gram_small = gram_big
            .iter()
            .flatten()
            .map(|x| x.to_i64().map(i128::from))
            .collect::<Option<Vec<i128>>>();
        let (d, m) = exact_ldl(&reduced);
        Ok(Kernel {
            n,
            u,
            u_inv,
            denom,
            gram_big,
            gram_small,
            diag: d.iter().map(to_f64).collect(),
            upper: m.iter().map(|r| r.iter().map(to_f64).collect()).collect(),
        })
    }
}

/// Exact acceptance test for one (center, r2, mode) query, in reduced
/// coordinates: with center `c' = p / q`, `dist2 = V / (q² D)` where
/// `V = (q x − p)ᵀ (D G') (q x − p)`, and `dist2 ⋚ a / b ⟺ b V ⋚ a q² D`.
struct Query<'k> {
    k: &'k Kernel,
    mode: BallMode,
    q: BigInt,
    p: Vec<BigInt>,
    small: Option<(i128, Vec<i128>, i128, i128)>,
    lhs: BigInt,
    rhs: BigInt,
    scale: BigInt,
    center_f: Vec<f64>,
    r2_f: f64,
}

impl<'k> Query<'k> {
    fn new(k: &'k Kernel, center: &QVector, r2: &Scalar, mode: BallMode) -> Query<'k> {
        let n = k.n;
        let reduced: Vec<Scalar> = (0..n)
            .map(|i| {
                (0..n).fold(Scalar::zero(), |acc, j| {
                    acc + Scalar::from_integer(k.u_inv[i][j].clone()) * &center.0[j]
                })
            })
            .collect();
        let (q, p) = QVector(reduced.clone()).common_denominator();
        let scale = &q * &q * &k.denom;
        let lhs = r2.denom().clone();
        let rhs = r2.numer() * &scale;
        let small = (|| {
            Some((
                q.to_i128()?,
                p.iter().map(|x| x.to_i128()).collect::<Option<Vec<_>>>()?,
                lhs.to_i128()?,
                rhs.to_i128()?,
            ))
        })();
        Query {
            k,
            mode,
            q,
            p,
            small,
            lhs,
            rhs,
            scale,
            center_f: reduced.iter().map(to_f64).collect(),
            r2_f: to_f64(r2),
        }
    }

    fn accepts(&self, ord: Ordering) -> bool {
        match self.mode {
            BallMode::Strict => ord == Ordering::Less,
            BallMode::Closed => ord != Ordering::Greater,
            BallMode::Sphere => ord == Ordering::Equal,
        }
    }

    fn test_small(&self, x: &[i64], y: &mut [i128]) -> Option<Option<Wide>> {
        let (q, p, lhs, rhs) = self.small.as_ref()?;
        let g = self.k.gram_small.as_ref()?;
        let n = self.k.n;
        for i in 0..n {
            y[i] = q.checked_mul(x[i] as i128)?.checked_sub(p[i])?;
        }
        let mut v: i128 = 0;
        for i in 0..n {
            if y[i] == 0 {
                continue;
            }
            let mut row: i128 = 0;
            for j in 0..n {
                row = row.checked_add(g[i * n + j].checked_mul(y[j])?)?;
            }
            v = v.checked_add(y[i].checked_mul(row)?)?;
        }
        let ord = lhs.checked_mul(v)?.cmp(rhs);
        Some(self.accepts(ord).then_some(Wide::Small(v)))
    }

    fn test_big(&self, x: &[i64]) -> Option<Wide> {
        let n = self.k.n;
        let y: Vec<BigInt> = (0..n).map(|i| &self.q * x[i] - &self.p[i]).collect();
        let mut v = BigInt::zero();
        for i in 0..n {
            let row = (0..n).fold(BigInt::zero(), |acc, j| acc + &self.k.gram_big[i][j] * &y[j]);
            v += &y[i] * row;
        }
        let ord = (&self.lhs * &v).cmp(&self.rhs);
        self.accepts(ord).then(|| Wide::from_big(v))
    }

    fn test(&self, x: &[i64], scratch: &mut [i128]) -> Option<Wide> {
        match self.test_small(x, scratch) {
            Some(r) => r,
            None => self.test_big(x),
        }
    }
}

const FLUSH_EVERY: u64 = 1024;
const PARALLEL_MIN_RANK: usize = 5;
const TARGET_PREFIXES: usize = 256;

struct Walker<'q, 'k, A, V> {
    query: &'q Query<'k>,
    budget: &'q Budget,
    visit: &'q V,
    acc: A,
    x: Vec<i64>,
    orig: Vec<i64>,
    scratch: Vec<i128>,
    pending: u64,
    leaves: u64,
}

/// Integer range of coordinate `level` given the coordinates above it, and
/// the real center of that range.
fn level_range(query: &Query<'_>, x: &[i64], level: usize, rem: f64) -> Option<(i64, i64, f64)> {
    let k = query.k;
    let slack = 1e-9 * (1.0 + query.r2_f);
    if rem < -slack {
        return None;
    }
    let c = &query.center_f;
    let mut ctr = c[level];
    for j in (level + 1)..k.n {
        ctr -= k.upper[level][j] * (x[j] as f64 - c[j]);
    }
    let half = (rem.max(0.0) / k.diag[level]).sqrt();
    let pad = 1e-6 + 1e-9 * ctr.abs();
    let lo = (ctr - half - pad).ceil();
    let hi = (ctr + half + pad).floor();
    // past 2^53 the walk itself is hopeless, whatever the leaf test says
    if lo > hi || lo.abs() > 9e15 || hi.abs() > 9e15 {
        return None;
    }
    Some((lo as i64, hi as i64, ctr))
}

impl<A, V> Walker<'_, '_, A, V>
where
    V: Fn(&mut A, &Hit<'_>),
{
    fn descend(&mut self, level: usize, rem: f64) -> Result<()> {
        let Some((lo, hi, ctr)) = level_range(self.query, &self.x, level, rem) else {
            return Ok(());
        };
        let d = self.query.k.diag[level];
        for xi in lo..=hi {
            self.x[level] = xi;
            let t = xi as f64 - ctr;
            let next = rem - d * t * t;
            if level == 0 {
                self.leaf()?;
            } else {
                self.descend(level - 1, next)?;
            }
        }
        Ok(())
    }

    fn leaf(&mut self) -> Result<()> {
        self.leaves += 1;
        if self.leaves % (1 << 16) == 0 {
            self.budget.check_time()?;
        }
        let Some(value) = self.query.test(&self.x, &mut self.scratch) else {
            return Ok(());
        };
        let k = self.query.k;
        for i in 0..k.n {
            self.orig[i] = (0..k.n).map(|j| k.u[i][j] * self.x[j]).sum();
        }
        let hit = Hit {
            coords: &self.orig,
            value: &value,
            scale: &self.query.scale,
        };
        (self.visit)(&mut self.acc, &hit);
        self.pending += 1;
        if self.pending == FLUSH_EVERY {
            self.budget.charge(self.pending)?;
            self.pending = 0;
        }
        Ok(())
    }

    fn finish(mut self) -> Result<A> {
        if self.pending > 0 {
            self.budget.charge(self.pending)?;
            self.pending = 0;
        }
        Ok(self.acc)
    }
}

/// A partially fixed walk: coordinates above `level` are set.
struct Prefix {
    x: Vec<i64>,
    level: usize,
    rem: f64,
}

/// Folds `visit` over every lattice point in the ball. Work is split across
/// the rayon pool for larger ranks; partial accumulators are combined with
/// `merge`, so `merge` must not depend on the order of its inputs for the
/// result to be deterministic.
#[allow(clippy::too_many_arguments)]
pub fn fold_ball<A, I, V, M>(
    lattice: &Lattice,
    center: &QVector,
    r2: &Scalar,
    mode: BallMode,
    budget: &Budget,
    init: I,
    visit: V,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &Hit<'_>) + Sync,
    M: Fn(A, A) -> A + Sync + Send,
{
    let n = lattice.rank();
    if center.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: center.dim(),
        });
    }
    if r2.is_negative() {
        return Err(Error::InvalidArgument(format!("negative squared radius {r2}")));
    }
    let kernel = lattice.kernel()?;
    let query = Query::new(&kernel, center, r2, mode);
    let root_rem = query.r2_f * (1.0 + 1e-9) + 1e-12;

    let walker = |x: Vec<i64>| Walker {
        query: &query,
        budget,
        visit: &visit,
        acc: init(),
        x,
        orig: vec![0; n],
        scratch: vec![0; n],
        pending: 0,
        leaves: 0,
    };

    let mut prefixes = vec![Prefix {
        x: vec![0; n],
        level: n - 1,
        rem: root_rem,
    }];
    if n >= PARALLEL_MIN_RANK {
        while prefixes.len() < TARGET_PREFIXES && prefixes[0].level > 1 {
            let mut next = Vec::new();
            for p in &prefixes {
                let Some((lo, hi, ctr)) = level_range(&query, &p.x, p.level, p.rem) else {
                    continue;
                };
                for xi in lo..=hi {
                    let mut x = p.x.clone();
                    x[p.level] = xi;
                    let t = xi as f64 - ctr;
                    next.push(Prefix {
                        x,
                        level: p.level - 1,
                        rem: p.rem - kernel.diag[p.level] * t * t,
                    });
                }
            }
            if next.is_empty() {
                return Ok(init());
            }
            prefixes = next;
        }
    }

    if prefixes.len() == 1 {
        let p = prefixes.pop().expect("one prefix");
        let mut w = walker(p.x);
        w.descend(p.level, p.rem)?;
        return w.finish();
    }
    prefixes
        .into_par_iter()
        .map(|p| {
            let mut w = walker(p.x);
            w.descend(p.level, p.rem)?;
            w.finish()
        })
        .try_reduce(&init, |a, b| Ok(merge(a, b)))
}

/// Every lattice point `λ` with `dist2(center, λ)` `<`, `≤` or `=` `r2`,
/// sorted lexicographically by coordinates.
pub fn enumerate_ball(lattice: &Lattice, center: &QVector, r2: &Scalar, mode: BallMode) -> Result<Vec<LatticePoint>> {
    enumerate_ball_with(lattice, center, r2, mode, &Budget::unlimited())
}

/// [`enumerate_ball`] under a resource budget.
pub fn enumerate_ball_with(
    lattice: &Lattice,
    center: &QVector,
    r2: &Scalar,
    mode: BallMode,
    budget: &Budget,
) -> Result<Vec<LatticePoint>> {
    let mut points = fold_ball(
        lattice,
        center,
        r2,
        mode,
        budget,
        Vec::new,
        |acc: &mut Vec<LatticePoint>, hit| acc.push(hit.point()),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    points.sort_unstable();
    Ok(points)
}

/// Number of lattice points in the ball.
pub fn count_ball(lattice: &Lattice, center: &QVector, r2: &Scalar, mode: BallMode) -> Result<u64> {
    fold_ball(
        lattice,
        center,
        r2,
        mode,
        &Budget::unlimited(),
        || 0u64,
        |acc, _| *acc += 1,
        |a, b| a + b,
    )
}
