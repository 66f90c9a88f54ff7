//! Coefficient fields for Laurent polynomials, dense univariate polynomial
//! helpers over any of them, and cyclotomic polynomials.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, Result};
use crate::ffield::FiniteField;

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Image of a rational number; fails when the denominator vanishes.
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_rational(&BigRational::from(BigInt::from(v))).expect("integers embed in every field")
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// a^e for a signed exponent; a must be nonzero when e < 0.
    fn pow_signed(&self, a: &Self::Elem, e: i64) -> Option<Self::Elem> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|b| self.pow(&b, e.unsigned_abs()))
        }
    }
}

/// ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn from_rational(&self, r: &BigRational) -> Result<BigRational> {
        Ok(r.clone())
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

/// F_p with elements as residues 0..p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(domain!("{p} is not prime"));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a % self.p) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| crate::arith::pow_mod(*a, self.p - 2, self.p))
    }
    fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let p = BigInt::from(self.p);
        let num = r.numer().mod_floor(&p).to_u64().unwrap();
        let den = r.denom().mod_floor(&p).to_u64().unwrap();
        if den == 0 {
            return Err(domain!("denominator of {r} vanishes modulo {}", self.p));
        }
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

/// F_{p^l} through a shared table-backed field.
#[derive(Debug, Clone)]
pub struct GaloisField(pub Arc<FiniteField>);

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        *self.0 == *other.0
    }
}

impl Field for GaloisField {
    type Elem = u64;

    fn characteristic(&self) -> u64 {
        self.0.characteristic()
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.0.add(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.0.neg(*a)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.0.mul(*a, *b)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        self.0.inv(*a).ok()
    }
    fn from_rational(&self, r: &BigRational) -> Result<u64> {
        let c = PrimeField::new(self.characteristic())?.from_rational(r)?;
        Ok(c)
    }
    fn format(&self, a: &u64) -> String {
        format!("{:?}", self.0.coefficients(*a))
    }
    fn pow(&self, a: &u64, e: u64) -> u64 {
        self.0.pow(*a, e)
    }
}

/// ℚ(ζ_N) = ℚ[X]/(Φ_N), elements as coefficient vectors of length φ(N).
#[derive(Debug, Clone, PartialEq)]
pub struct Cyclotomic {
    n: u64,
    phi: Arc<Vec<BigInt>>,
}

impl Cyclotomic {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(domain!("conductor must be positive"));
        }
        Ok(Self { n, phi: cyclotomic_polynomial(n) })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    fn dim(&self) -> usize {
        self.phi.len() - 1
    }

    /// ζ_N^e.
    pub fn root_power(&self, e: i64) -> Vec<BigRational> {
        let e = e.rem_euclid(self.n as i64) as usize;
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = BigRational::one();
        self.reduce(v)
    }

    /// Reduce an arbitrary coefficient vector modulo Φ_N.
    pub fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.dim();
        for k in (d..v.len()).rev() {
            if v[k].is_zero() {
                continue;
            }
            let c = v[k].clone();
            for (j, pj) in self.phi.iter().enumerate() {
                let t = &c * BigRational::from(pj.clone());
                v[k - d + j] -= t;
            }
        }
        v.resize(d, BigRational::zero());
        v
    }
}

impl Field for Cyclotomic {
    type Elem = Vec<BigRational>;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> Self::Elem {
        vec![BigRational::zero(); self.dim()]
    }
    fn one(&self) -> Self::Elem {
        self.root_power(0)
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(Zero::is_zero)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| -x).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = vec![BigRational::zero(); (a.len() + b.len()).saturating_sub(1)];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        self.reduce(out)
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        if self.is_zero(a) {
            return None;
        }
        let q = Rationals;
        let m: Vec<BigRational> = self.phi.iter().map(|c| BigRational::from(c.clone())).collect();
        let (g, s, _) = upoly::xgcd(&q, a, &m);
        debug_assert_eq!(g.len(), 1);
        let c = g[0].recip();
        let mut s: Vec<BigRational> = s.into_iter().map(|x| x * &c).collect();
        s.resize(self.dim().max(s.len()), BigRational::zero());
        Some(self.reduce(s))
    }
    fn from_rational(&self, r: &BigRational) -> Result<Self::Elem> {
        let mut v = self.zero();
        v[0] = r.clone();
        Ok(v)
    }
    fn format(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(|c| Rationals.format(c)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Φ_m by exact division of X^m − 1 by the Φ_d, d | m, d < m; cached.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&m) {
        return v.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in crate::arith::divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        num = int_exact_div(&num, &phi_d);
    }
    let out = Arc::new(num);
    cache.lock().unwrap().insert(m, out.clone());
    out
}

fn int_exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b monic
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let c = r[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            r[k - db + j] -= &c * bj;
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

/// Dense univariate polynomials over a [`Field`], constant term first.
pub mod upoly {
    use super::Field;

    pub fn trim<F: Field>(f: &F, a: &mut Vec<F::Elem>) {
        while a.last().is_some_and(|c| f.is_zero(c)) {
            a.pop();
        }
    }

    pub fn degree<F: Field>(f: &F, a: &[F::Elem]) -> Option<usize> {
        a.iter().rposition(|c| !f.is_zero(c))
    }

    pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let n = a.len().max(b.len());
        let z = f.zero();
        let mut out: Vec<F::Elem> =
            (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
        trim(f, &mut out);
        out
    }

    pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let nb: Vec<F::Elem> = b.iter().map(|c| f.neg(c)).collect();
        add(f, a, &nb)
    }

    pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> Vec<F::Elem> {
        let mut out: Vec<F::Elem> = a.iter().map(|x| f.mul(x, c)).collect();
        trim(f, &mut out);
        out
    }

    pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![f.zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(x, y));
            }
        }
        trim(f, &mut out);
        out
    }

    /// (quotient, remainder); `b` must be nonzero.
    pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
        let db = degree(f, b).expect("division by zero polynomial");
        let mut r = a.to_vec();
        trim(f, &mut r);
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let li = f.inv(&b[db]).unwrap();
        let mut q = vec![f.zero(); r.len() - db];
        while let Some(dr) = degree(f, &r) {
            if dr < db {
                break;
            }
            let c = f.mul(&r[dr], &li);
            let s = dr - db;
            for (j, bj) in b[..=db].iter().enumerate() {
                r[s + j] = f.sub(&r[s + j], &f.mul(&c, bj));
            }
            q[s] = c;
            trim(f, &mut r);
        }
        trim(f, &mut q);
        (q, r)
    }

    pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
        match degree(f, a) {
            Some(d) => scale(f, a, &f.inv(&a[d]).unwrap()),
            None => Vec::new(),
        }
    }

    /// Monic gcd (empty for gcd(0, 0)).
    pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        trim(f, &mut a);
        trim(f, &mut b);
        while !b.is_empty() {
            let r = divrem(f, &a, &b).1;
            a = b;
            b = r;
        }
        monic(f, &a)
    }

    /// (g, s, t) with s·a + t·b = g (g not normalised).
    pub fn xgcd<F: Field>(
        f: &F,
        a: &[F::Elem],
        b: &[F::Elem],
    ) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        trim(f, &mut r0);
        trim(f, &mut r1);
        let (mut s0, mut s1) = (vec![f.one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![f.one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(f, &r0, &r1);
            let s = sub(f, &s0, &mul(f, &q, &s1));
            let t = sub(f, &t0, &mul(f, &q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        (r0, s0, t0)
    }

    pub fn eval<F: Field>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
        a.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(*cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
        // Φ_105 famously has a coefficient −2
        assert!(cyclotomic_polynomial(105).iter().any(|c| *c == BigInt::from(-2)));
        for m in 1..60u64 {
            assert_eq!(cyclotomic_polynomial(m).len() as u64 - 1, crate::arith::euler_phi(m));
        }
    }

    #[test]
    fn cyclotomic_field_arithmetic() {
        let k = Cyclotomic::new(3).unwrap();
        let z = k.root_power(1);
        let s = k.add(&k.add(&k.one(), &z), &k.root_power(2));
        assert!(k.is_zero(&s));
        assert_eq!(k.mul(&z, &k.root_power(2)), k.one());
        let a = k.add(&z, &k.from_i64(2));
        let ai = k.inv(&a).unwrap();
        assert_eq!(k.mul(&a, &ai), k.one());
    }

    #[test]
    fn prime_field_embedding() {
        let f = PrimeField::new(7).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), 4);
        assert!(f.from_rational(&BigRational::new(1.into(), 7.into())).is_err());
        assert_eq!(f.from_i64(-1), 6);
        assert!(BigRational::new((-3).into(), 2.into()).is_negative());
    }
}
