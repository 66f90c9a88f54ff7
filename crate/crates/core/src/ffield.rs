//! Finite fields F_{p^l} with elements encoded as integers: the element
//! Σ c_i x^i (c_i ∈ F_p, constant term first) is stored as Σ c_i p^i.

use crate::arith::{factorize_with_budget, multiplicative_order_mod};
use crate::error::{domain, input, resource, Result};
use crate::fpoly;

/// Fields up to this size get exp/log tables.
pub const TABLE_BITS: u32 = 24;
const HARD_BITS: u32 = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldConfig {
    /// Upper bound on log2(p^l).
    pub max_field_bits: u32,
    /// Pollard-rho iteration budget for factoring p^l − 1.
    pub factor_budget: u64,
}

impl Default for FieldConfig {
    fn default() -> Self {
        Self { max_field_bits: 48, factor_budget: 1 << 22 }
    }
}

#[derive(Clone)]
struct Tables {
    generator: u64,
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// The field F_{p^l} = F_p[x]/(f) for the lexicographically smallest monic
/// irreducible f of degree l (coefficients compared constant term first).
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    l: u32,
    q: u64,
    modulus: Vec<u64>,
    factorization: Vec<(u64, u32)>,
    // p = 2: x^l reduction mask (modulus without the leading term)
    mask2: u64,
    tables: Option<Tables>,
}

impl std::fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.p, self.l, self.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.l == other.l
    }
}

impl Eq for FiniteField {}

pub fn make_field(p: u64, l: u32, config: &FieldConfig) -> Result<FiniteField> {
    FiniteField::new(p, l, config)
}

fn field_size(p: u64, l: u32) -> Option<u64> {
    p.checked_pow(l)
}

/// Candidate number `idx` in lexicographic order of (c_0, …, c_{l−1}).
fn candidate(idx: u64, p: u64, l: u32) -> Vec<u64> {
    let mut c = vec![0u64; l as usize + 1];
    let mut v = idx;
    for j in (0..l as usize).rev() {
        c[j] = v % p;
        v /= p;
    }
    c[l as usize] = 1;
    c
}

impl FiniteField {
    pub fn new(p: u64, l: u32, config: &FieldConfig) -> Result<Self> {
        if !crate::arith::is_prime(p) {
            return Err(domain!("{p} is not prime"));
        }
        if l == 0 {
            return Err(domain!("extension degree must be positive"));
        }
        let bits_cap = config.max_field_bits.min(HARD_BITS);
        let q = field_size(p, l)
            .filter(|&q| q <= 1u64 << bits_cap)
            .ok_or_else(|| resource!("field size {p}^{l} exceeds the cap of 2^{bits_cap} (max_field_bits)"))?;
        let modulus = if l == 1 {
            vec![0, 1]
        } else {
            // c_0 is the leading digit of idx; c_0 = 0 is never irreducible
            (q / p..q)
                .map(|idx| candidate(idx, p, l))
                .find(|f| fpoly::is_irreducible(f, p))
                .expect("irreducible polynomials exist in every degree")
        };
        let factorization = factorize_with_budget(q - 1, config.factor_budget)
            .ok_or_else(|| resource!("factorisation of {p}^{l} - 1 exceeded its budget"))?;
        let mask2 = if p == 2 {
            modulus[..l as usize].iter().enumerate().fold(0u64, |m, (i, &c)| m | (c << i))
        } else {
            0
        };
        let mut field = Self { p, l, q, modulus, factorization, mask2, tables: None };
        if q <= 1u64 << TABLE_BITS {
            field.build_tables();
        }
        Ok(field)
    }

    fn build_tables(&mut self) {
        let g = self.smallest_primitive();
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; self.q as usize];
        let mut cur = 1u64;
        for i in 0..n {
            exp.push(cur as u32);
            log[cur as usize] = i as u32;
            cur = self.mul_generic(cur, g);
        }
        debug_assert_eq!(cur, 1);
        self.tables = Some(Tables { generator: g, exp, log });
    }

    fn smallest_primitive(&self) -> u64 {
        (1..self.q).find(|&c| self.order_generic(c) == self.q - 1).unwrap()
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.l
    }

    /// q = p^l.
    pub fn size(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients, constant term first, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn group_order_factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Primitive element with the smallest encoding.
    pub fn primitive_element(&self) -> u64 {
        match &self.tables {
            Some(t) => t.generator,
            None => self.smallest_primitive(),
        }
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    pub fn from_coefficients(&self, coeffs: &[u64]) -> Result<u64> {
        if coeffs.len() > self.l as usize {
            return Err(input!("{} coefficients for a degree-{} field", coeffs.len(), self.l));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(input!("coefficients must be reduced modulo {}", self.p));
        }
        Ok(coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c))
    }

    pub fn coefficients(&self, a: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.l as usize);
        let mut v = a;
        for _ in 0..self.l {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        if self.l == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.l {
            let d = (a % self.p + b % self.p) % self.p;
            out += d * scale;
            scale = scale.wrapping_mul(self.p);
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.p == 2 {
            return a;
        }
        if self.l == 1 {
            return if a == 0 { 0 } else { self.p - a };
        }
        let mut v = a;
        let mut out = 0u64;
        let mut scale = 1u64;
        for _ in 0..self.l {
            let d = v % self.p;
            out += ((self.p - d) % self.p) * scale;
            scale = scale.wrapping_mul(self.p);
            v /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                let n = self.q - 1;
                t.exp[(if s >= n { s - n } else { s }) as usize] as u64
            }
            None => self.mul_generic(a, b),
        }
    }

    fn mul_generic(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let l = self.l as usize;
        if l == 1 {
            return ((a as u128 * b as u128) % p as u128) as u64;
        }
        if p == 2 {
            let mut prod: u128 = 0;
            let mut bb = b;
            let mut i = 0;
            while bb != 0 {
                if bb & 1 == 1 {
                    prod ^= (a as u128) << i;
                }
                bb >>= 1;
                i += 1;
            }
            for d in (l..2 * l - 1).rev() {
                if (prod >> d) & 1 == 1 {
                    prod ^= 1u128 << d;
                    prod ^= (self.mask2 as u128) << (d - l);
                }
            }
            return prod as u64;
        }
        let x = self.coefficients(a);
        let y = self.coefficients(b);
        let mut prod = fpoly::mul(&x, &y, p);
        prod = fpoly::rem(&prod, &self.modulus, p);
        prod.resize(l, 0);
        prod.iter().rev().fold(0u64, |acc, &c| acc * p + c)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let n = self.q - 1;
            let k = ((t.log[a as usize] as u128 * e as u128) % n as u128) as usize;
            return t.exp[k] as u64;
        }
        let mut result = 1u64;
        let mut base = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_generic(result, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(domain!("zero has no inverse"));
        }
        Ok(self.pow(a, self.q - 2))
    }

    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Discrete logarithm to the base `primitive_element()`, when tables exist.
    pub fn log(&self, a: u64) -> Option<u64> {
        let t = self.tables.as_ref()?;
        (a != 0).then(|| t.log[a as usize] as u64)
    }

    /// g^k for the primitive element g.
    pub fn exp(&self, k: u64) -> u64 {
        match &self.tables {
            Some(t) => t.exp[(k % (self.q - 1)) as usize] as u64,
            None => self.pow(self.primitive_element(), k % (self.q - 1)),
        }
    }

    fn order_generic(&self, a: u64) -> u64 {
        let mut ord = self.q - 1;
        for &(r, _) in &self.factorization {
            while ord.is_multiple_of(r) && self.pow_generic(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }

    fn pow_generic(&self, a: u64, mut e: u64) -> u64 {
        let mut result = 1u64;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_generic(result, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        result
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(domain!("zero has no multiplicative order"));
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                Ok(n / num_integer::gcd(n, t.log[a as usize] as u64))
            }
            None => Ok(self.order_generic(a)),
        }
    }

    /// A fixed element of exact order N (requires N | q − 1): g^{(q−1)/N}.
    pub fn root_of_unity(&self, n: u64) -> Result<u64> {
        if n == 0 || !(self.q - 1).is_multiple_of(n) {
            return Err(domain!("F_{}^{} has no element of order {}", self.p, self.l, n));
        }
        Ok(self.exp((self.q - 1) / n))
    }
}

/// lcm of the coordinate orders of a point of 𝔾ₘⁿ(F_q).
pub fn point_order_charp(field: &FiniteField, coords: &[u64]) -> Result<u64> {
    coords.iter().try_fold(1u64, |acc, &c| {
        if c == 0 {
            return Err(domain!("zero coordinate is not a point of the torus"));
        }
        Ok(num_integer::lcm(acc, field.mult_order(c)?))
    })
}

/// ord_N(p): the least l with μ_N ⊂ F_{p^l}.
pub fn minimal_field_degree(n: u64, p: u64) -> Result<u64> {
    if n == 0 {
        return Err(domain!("order must be positive"));
    }
    multiplicative_order_mod(p, n).ok_or_else(|| domain!("{p} divides {n}: no roots of unity of that order"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64, l: u32) -> FiniteField {
        make_field(p, l, &FieldConfig::default()).unwrap()
    }

    #[test]
    fn make_field_examples() {
        assert_eq!(f(2, 2).modulus(), &[1, 1, 1]);
        assert_eq!(f(2, 1).modulus(), &[0, 1]);
        assert_eq!(f(3, 2).modulus(), &[1, 0, 1]);
        assert_eq!(f(2, 3).modulus(), &[1, 0, 1, 1]);
        let big = make_field(2, 30, &FieldConfig::default()).unwrap();
        assert!(!big.has_tables());
        let prod: u64 = big.group_order_factorization().iter().map(|&(r, e)| r.pow(e)).product();
        assert_eq!(prod, (1 << 30) - 1);
        assert!(make_field(2, 30, &FieldConfig { max_field_bits: 24, ..Default::default() }).is_err());
        assert!(make_field(4, 1, &FieldConfig::default()).is_err());
    }

    #[test]
    fn order_examples() {
        let f4 = f(2, 2);
        assert_eq!(f4.mult_order(1).unwrap(), 1);
        let w = 2; // x
        assert_eq!(f4.mult_order(w).unwrap(), 3);
        assert_eq!(point_order_charp(&f4, &[w, f4.mul(w, w)]).unwrap(), 3);
        let f8 = f(2, 3);
        for a in 2..8 {
            assert_eq!(f8.mult_order(a).unwrap(), 7);
        }
        assert!(f8.mult_order(0).is_err());
        assert!(point_order_charp(&f8, &[1, 0]).is_err());
        assert_eq!(minimal_field_degree(1, 5).unwrap(), 1);
        assert_eq!(minimal_field_degree(7, 2).unwrap(), 3);
        assert_eq!(minimal_field_degree(5, 2).unwrap(), 4);
        assert!(minimal_field_degree(6, 2).is_err());
    }

    #[test]
    fn table_and_generic_arithmetic_agree() {
        for (p, l) in [(2, 5), (3, 3), (5, 2), (7, 1)] {
            let fld = f(p, l);
            let mut plain = fld.clone();
            plain.tables = None;
            for a in 0..fld.size() {
                for b in [1, 2, fld.size() - 1, a / 2 + 1] {
                    let b = b % fld.size();
                    assert_eq!(fld.mul(a, b), plain.mul(a, b));
                }
                if a != 0 {
                    assert_eq!(fld.mult_order(a).unwrap(), plain.mult_order(a).unwrap());
                    assert_eq!(fld.mul(a, fld.inv(a).unwrap()), 1);
                }
                assert_eq!(fld.add(a, fld.neg(a)), 0);
            }
            assert_eq!(fld.pow(fld.primitive_element(), fld.size() - 1), 1);
        }
    }

    #[test]
    fn roots_of_unity() {
        let f16 = f(2, 4);
        let z = f16.root_of_unity(5).unwrap();
        assert_eq!(f16.mult_order(z).unwrap(), 5);
        assert!(f16.root_of_unity(7).is_err());
    }
}
