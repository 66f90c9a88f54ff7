#![allow(dead_code)]

use gmtors::field::{Cyclotomic, Field, GaloisField, PrimeField, Rationals};
use gmtors::intlat::{subsets, IntMatrix};
use gmtors::variety::{divide_by_binomial, LaurentPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn random_matrix(r: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntMatrix<BigInt> {
    let data = (0..rows * cols).map(|_| big(r.gen_range(-bound..=bound))).collect();
    IntMatrix::new(rows, cols, data).unwrap()
}

/// Product of random elementary row operations.
pub fn random_unimodular(r: &mut impl Rng, n: usize) -> IntMatrix<BigInt> {
    let mut m = IntMatrix::<BigInt>::identity(n);
    for _ in 0..3 * n {
        let i = r.gen_range(0..n);
        let j = r.gen_range(0..n);
        if i == j {
            if r.gen_bool(0.5) {
                for c in 0..n {
                    m[(i, c)] = -m[(i, c)].clone();
                }
            }
            continue;
        }
        let k = big(r.gen_range(-2..=2));
        for c in 0..n {
            let add = m[(j, c)].clone() * &k;
            m[(i, c)] += add;
        }
    }
    m
}

/// det(AB) by the Cauchy–Binet expansion over k-subsets of the inner index.
pub fn cauchy_binet(a: &IntMatrix<BigInt>, b: &IntMatrix<BigInt>) -> BigInt {
    let k = a.rows();
    let rows: Vec<usize> = (0..k).collect();
    subsets(a.cols(), k)
        .into_iter()
        .map(|s| a.submatrix(&rows, &s).det().unwrap() * b.submatrix(&s, &rows).det().unwrap())
        .sum()
}

/// Numerator vectors a ∈ [0, N)^n with gcd(a, N) = 1: the points of exact order N.
pub fn exact_order_points(n: usize, order: u64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut a = vec![0i64; n];
    loop {
        if a.iter().fold(order as i64, |g, &x| g.gcd(&x)) == 1 {
            out.push(a.clone());
        }
        let mut i = 0;
        while i < n {
            a[i] += 1;
            if a[i] < order as i64 {
                break;
            }
            a[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Whether the point a/N satisfies x^v = 1 for every v in `relations`.
pub fn satisfies(relations: &[Vec<i64>], a: &[i64], order: i64) -> bool {
    relations.iter().all(|v| v.iter().zip(a).map(|(x, y)| x * y).sum::<i64>().rem_euclid(order) == 0)
}

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).unwrap()).collect()
}

/// Evaluate P at the torsion point with exponents a/N in ℚ(ζ_N) or F_{p^l}.
pub fn vanishes_q(p: &LaurentPoly<Rationals>, a: &[i64], order: u64) -> bool {
    let k = Cyclotomic::new(order).unwrap();
    let mut acc = k.zero();
    for (e, c) in p.terms() {
        let s: i64 = e.iter().zip(a).map(|(x, y)| x * y).sum();
        let term: Vec<BigRational> = k.root_power(s).into_iter().map(|x| x * c).collect();
        acc = k.add(&acc, &term);
    }
    k.is_zero(&acc)
}

pub fn vanishes_fp(p: &LaurentPoly<PrimeField>, a: &[i64], order: u64) -> bool {
    let ch = p.field().modulus();
    let l = gmtors::ffield::minimal_field_degree(order, ch).unwrap() as u32;
    let f = gmtors::ffield::make_field(ch, l, &Default::default()).unwrap();
    let w = f.root_of_unity(order).unwrap();
    let mut acc = 0;
    for (e, c) in p.terms() {
        let s: i64 = e.iter().zip(a).map(|(x, y)| x * y).sum();
        acc = f.add(acc, f.mul(*c, f.pow(w, s.rem_euclid(order as i64) as u64)));
    }
    acc == 0
}

// ---------------------------------------------------------------------------
// admissibility oracle: try every binomial X^u − ζ

/// Primitive u ∈ ℤ² with |u|∞ ≤ 4 and positive leading entry.
pub fn primitive_directions(bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            let lead = if a != 0 { a } else { b };
            if lead > 0 && a.gcd(&b) == 1 {
                out.push(vec![a, b]);
            }
        }
    }
    out
}

/// Over ℚ: some X^u − ζ with ord ζ ≤ 12 divides P (coefficients in ℚ(ζ)).
pub fn binomial_divisor_q(p: &LaurentPoly<Rationals>) -> bool {
    let dirs = primitive_directions(4);
    (1..=12u64).any(|m| {
        let k = Cyclotomic::new(m).unwrap();
        let pk = p.map_field(k.clone(), |c| k.from_rational(c).unwrap());
        (0..m as i64).filter(|&j| j.gcd(&(m as i64)) == 1).any(|j| {
            let zeta = k.root_power(j);
            dirs.iter().any(|u| divide_by_binomial(&pk, u, &zeta).unwrap().is_some())
        })
    })
}

/// Over F̄_2: some X^u − ζ with ζ of odd order in `orders` divides P.
pub fn binomial_divisor_f2(p: &LaurentPoly<PrimeField>, orders: &[u64]) -> bool {
    let dirs = primitive_directions(4);
    orders.iter().any(|&m| {
        let l = gmtors::ffield::minimal_field_degree(m, 2).unwrap() as u32;
        let f = std::sync::Arc::new(gmtors::ffield::make_field(2, l, &Default::default()).unwrap());
        let g = GaloisField(f.clone());
        let pg = p.map_field(g.clone(), |c| *c);
        let w = f.root_of_unity(m).unwrap();
        (1..=m).filter(|&j| j.gcd(&m) == 1).any(|j| {
            let zeta = f.pow(w, j);
            dirs.iter().any(|u| divide_by_binomial(&pg, u, &zeta).unwrap().is_some())
        })
    })
}

/// Random bivariate polynomial with support in [−2,2]² and unit coefficients;
/// about half are built as a product with a cyclotomic binomial factor.
pub fn random_box_poly(r: &mut impl Rng, ch: u64) -> (Vec<(Vec<i64>, i64)>, bool) {
    loop {
        let mut terms: std::collections::BTreeMap<Vec<i64>, i64> = Default::default();
        let planted = r.gen_bool(0.5);
        if planted {
            // Φ_m(X^u) · Q for small m and u
            let u = [r.gen_range(-2..=2), r.gen_range(-2..=2)];
            let phi: Vec<i64> = match r.gen_range(0..4) {
                0 => vec![-1, 1],
                1 => vec![1, 1],
                2 => vec![1, 1, 1],
                _ => vec![1, 0, 1],
            };
            let q: Vec<(Vec<i64>, i64)> = (0..r.gen_range(1..=2))
                .map(|_| (vec![r.gen_range(-1..=1), r.gen_range(-1..=1)], if r.gen_bool(0.5) { 1 } else { -1 }))
                .collect();
            for (k, &c) in phi.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (e, d) in &q {
                    let key = vec![e[0] + k as i64 * u[0], e[1] + k as i64 * u[1]];
                    *terms.entry(key).or_insert(0) += c * d;
                }
            }
        } else {
            for _ in 0..r.gen_range(2..=5) {
                let key = vec![r.gen_range(-2..=2), r.gen_range(-2..=2)];
                *terms.entry(key).or_insert(0) += if r.gen_bool(0.5) { 1 } else { -1 };
            }
        }
        let reduce = |c: i64| if ch == 0 { c } else { c.rem_euclid(ch as i64) };
        let out: Vec<(Vec<i64>, i64)> =
            terms.into_iter().map(|(e, c)| (e, reduce(c))).filter(|(_, c)| *c != 0).collect();
        let in_box = out.iter().all(|(e, _)| e.iter().all(|x| x.abs() <= 2));
        let units = out.iter().all(|(_, c)| c.abs() == 1);
        if out.len() >= 2 && in_box && units {
            return (out, planted);
        }
    }
}
