// LLL reduction driven by the Gram matrix alone (Cohen, "A Course in
// Computational Algebraic Number Theory", Algorithm 2.6.3), in exact rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::quadspace::{frac, GramForm, Scalar};

struct Lll {
    n: usize,
    g: Vec<Vec<Scalar>>,
    u: Vec<Vec<BigInt>>,
    mu: Vec<Vec<Scalar>>,
    bstar: Vec<Scalar>,
}

fn round_half_up(x: &Scalar) -> BigInt {
    (x + frac(1, 2)).floor().to_integer()
}

impl Lll {
    fn size_reduce(&mut self, k: usize, l: usize) {
        if self.mu[k][l].abs() * BigInt::from(2) <= Scalar::one() {
            return;
        }
        let q = round_half_up(&self.mu[k][l]);
        let qs = Scalar::from_integer(q.clone());
        for row in self.u.iter_mut() {
            let t = &q * &row[l];
            row[k] -= t;
        }
        // b_k ← b_k − q b_l
        let new_kk = &self.g[k][k] - &qs * &self.g[k][l] * BigInt::from(2) + &qs * &qs * &self.g[l][l];
        for j in 0..self.n {
            if j != k {
                let v = &self.g[k][j] - &qs * &self.g[l][j];
                self.g[k][j] = v.clone();
                self.g[j][k] = v;
            }
        }
        self.g[k][k] = new_kk;
        self.mu[k][l] -= &qs;
        for i in 0..l {
            let t = &qs * &self.mu[l][i];
            self.mu[k][i] -= t;
        }
    }

    fn swap(&mut self, k: usize, kmax: usize) {
        for row in self.u.iter_mut() {
            row.swap(k, k - 1);
        }
        self.g.swap(k, k - 1);
        for row in self.g.iter_mut() {
            row.swap(k, k - 1);
        }
        for j in 0..k - 1 {
            let t = self.mu[k][j].clone();
            self.mu[k][j] = std::mem::replace(&mut self.mu[k - 1][j], t);
        }
        let m = self.mu[k][k - 1].clone();
        let b = &self.bstar[k] + &m * &m * &self.bstar[k - 1];
        self.mu[k][k - 1] = &m * &self.bstar[k - 1] / &b;
        self.bstar[k] = &self.bstar[k - 1] * &self.bstar[k] / &b;
        self.bstar[k - 1] = b;
        for i in (k + 1)..=kmax {
            let t = self.mu[i][k].clone();
            self.mu[i][k] = &self.mu[i][k - 1] - &m * &t;
            self.mu[i][k - 1] = t + &self.mu[k][k - 1] * &self.mu[i][k];
        }
    }

    fn gso_row(&mut self, k: usize) {
        for j in 0..k {
            let mut acc = self.g[k][j].clone();
            for i in 0..j {
                acc -= &self.mu[j][i] * &self.mu[k][i] * &self.bstar[i];
            }
            self.mu[k][j] = acc / &self.bstar[j];
        }
        let mut b = self.g[k][k].clone();
        for j in 0..k {
            b -= &self.mu[k][j] * &self.mu[k][j] * &self.bstar[j];
        }
        self.bstar[k] = b;
    }
}

/// LLL-reduces a Gram matrix with δ = 3/4. Returns the reduced Gram and the
/// unimodular `U` (row-major, basis change by columns) with `Uᵀ G U` equal to
/// it.
pub fn lll_reduce_gram(gram: &GramForm) -> (GramForm, Vec<Vec<BigInt>>) {
    let n = gram.rank();
    let identity = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut s = Lll {
        n,
        g: gram.rows().to_vec(),
        u: identity,
        mu: vec![vec![Scalar::zero(); n]; n],
        bstar: vec![Scalar::zero(); n],
    };
    let delta = frac(3, 4);
    s.bstar[0] = s.g[0][0].clone();
    let (mut k, mut kmax) = (1, 0);
    while k < n {
        if k > kmax {
            kmax = k;
            s.gso_row(k);
        }
        s.size_reduce(k, k - 1);
        let lovasz = (&delta - &s.mu[k][k - 1] * &s.mu[k][k - 1]) * &s.bstar[k - 1];
        if s.bstar[k] < lovasz {
            s.swap(k, kmax);
            k = (k - 1).max(1);
        } else {
            for l in (0..k - 1).rev() {
                s.size_reduce(k, l);
            }
            k += 1;
        }
    }
    let reduced = GramForm::new(s.g).expect("unimodular image of a definite form is definite");
    (reduced, s.u)
}
