use super::lattice::IntegerLattice;
use crate::error::{domain, resource, Result};
use crate::scalar::IntScalar;

/// Limits for the exhaustive successive-minima search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MinimaConfig {
    pub dim_cap: usize,
    /// Maximum number of lattice points visited over all shells.
    pub point_budget: u64,
}

impl Default for MinimaConfig {
    fn default() -> Self {
        Self { dim_cap: 6, point_budget: 200_000_000 }
    }
}

/// Successive minima under the sup norm with lexicographically smallest
/// witnesses (each normalised to a positive leading entry).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuccessiveMinima<T> {
    pub minima: Vec<T>,
    pub witnesses: Vec<Vec<T>>,
}

impl<T: IntScalar> SuccessiveMinima<T> {
    pub fn product(&self) -> T {
        self.minima.iter().fold(T::one(), |a, b| a * b.clone())
    }
}

/// Incremental row echelon form over ℚ, kept integral.
struct Span {
    rows: Vec<(usize, Vec<i128>)>,
}

impl Span {
    fn reduce(&self, v: &[i64]) -> Vec<i128> {
        let mut w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for (p, r) in &self.rows {
            if w[*p] != 0 {
                let (a, b) = (r[*p], w[*p]);
                for (wi, ri) in w.iter_mut().zip(r) {
                    *wi = *wi * a - b * ri;
                }
                let g = w.iter().fold(0i128, |g, &x| gcd128(g, x));
                if g > 1 {
                    w.iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        w
    }

    fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    fn insert(&mut self, v: &[i64]) -> bool {
        let w = self.reduce(v);
        match w.iter().position(|&x| x != 0) {
            Some(p) => {
                self.rows.push((p, w));
                true
            }
            None => false,
        }
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn norm(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

struct Enumerator<'a> {
    basis: &'a [Vec<i64>],
    n: usize,
    radius: i64,
    inner: i64,
    visited: u64,
    budget: u64,
    out: Vec<Vec<i64>>,
}

impl Enumerator<'_> {
    fn run(&mut self, i: usize, v: &mut Vec<i64>, span: &Span) -> Result<()> {
        if i == self.n {
            self.visited += 1;
            if self.visited > self.budget {
                return Err(resource!(
                    "successive minima search exceeded the point budget of {}",
                    self.budget
                ));
            }
            let nv = norm(v);
            if nv > self.inner && v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) && !span.contains(v) {
                self.out.push(v.clone());
            }
            return Ok(());
        }
        let partial: i64 = v[i];
        let d = self.basis[i][i];
        let lo = (-self.radius - partial).div_euclid(d) + i64::from((-self.radius - partial).rem_euclid(d) != 0);
        let hi = (self.radius - partial).div_euclid(d);
        for c in lo..=hi {
            let saved: Vec<i64> = v[i..].to_vec();
            for k in i..self.n {
                v[k] += c * self.basis[i][k];
            }
            self.run(i + 1, v, span)?;
            v[i..].copy_from_slice(&saved);
        }
        Ok(())
    }
}

/// Exact sup-norm successive minima of a full-rank lattice by enumeration
/// of lattice points in boxes of doubling radius.
pub fn successive_minima<T: IntScalar>(
    lattice: &IntegerLattice<T>,
    config: &MinimaConfig,
) -> Result<SuccessiveMinima<T>> {
    let n = lattice.ambient_dim();
    if !lattice.is_full_rank() {
        return Err(domain!("successive minima need a full-rank lattice (rank {} < {})", lattice.rank(), n));
    }
    if n > config.dim_cap {
        return Err(resource!(
            "dimension {} exceeds the successive-minima dimension cap {}",
            n,
            config.dim_cap
        ));
    }
    let basis: Vec<Vec<i64>> = lattice
        .basis()
        .iter()
        .map(|b| b.iter().map(|x| x.to_i64()).collect::<Option<Vec<i64>>>())
        .collect::<Option<_>>()
        .ok_or_else(|| resource!("lattice entries exceed 64 bits"))?;
    let mut span = Span { rows: Vec::new() };
    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut inner = 0i64;
    let mut radius = 1i64;
    let mut visited = 0u64;
    while found.len() < n {
        let mut e = Enumerator {
            basis: &basis,
            n,
            radius,
            inner,
            visited,
            budget: config.point_budget,
            out: Vec::new(),
        };
        e.run(0, &mut vec![0; n], &span)?;
        visited = e.visited;
        let mut cands = e.out;
        cands.sort_by(|a, b| norm(a).cmp(&norm(b)).then_with(|| a.cmp(b)));
        for c in cands {
            if found.len() == n {
                break;
            }
            if span.insert(&c) {
                found.push(c);
            }
        }
        inner = radius;
        radius = radius.checked_mul(2).ok_or_else(|| resource!("search radius overflow"))?;
    }
    let conv = |x: i64| T::from_i64(x).unwrap();
    Ok(SuccessiveMinima {
        minima: found.iter().map(|w| conv(norm(w))).collect(),
        witnesses: found.iter().map(|w| w.iter().map(|&x| conv(x)).collect()).collect(),
    })
}
