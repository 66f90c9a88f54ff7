//! Dense univariate polynomials over a prime field F_p, coefficients stored
//! constant term first and kept trimmed (no trailing zeros).

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

pub fn trim(f: &mut Vec<u64>) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

/// Degree, or `None` for the zero polynomial.
pub fn degree(f: &[u64]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    divrem(a, b, p).1
}

pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = mulmod(r[dr], lead_inv, p);
        let s = dr - db;
        q[s] = c;
        for (j, &bj) in b[..=db].iter().enumerate() {
            r[s + j] = (r[s + j] + p - mulmod(c, bj, p)) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

pub fn make_monic(f: &mut [u64], p: u64) {
    if let Some(d) = degree(f) {
        let inv = inv_mod(f[d], p);
        f.iter_mut().for_each(|c| *c = mulmod(*c, inv, p));
    }
}

/// Monic gcd.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(&mut a, p);
    a
}

pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

pub fn pow_mod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(&result, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

/// Rabin's irreducibility test for a polynomial of degree ≥ 1.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(n) = degree(f) else { return false };
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // frob[i] = x^{p^i} mod f
    let mut frob = vec![rem(&x, f, p)];
    for i in 1..=n {
        let next = pow_mod(&frob[i - 1], p as u128, f, p);
        frob.push(next);
    }
    if !sub(&frob[n], &x, p).is_empty() {
        return false;
    }
    for (r, _) in crate::arith::factorize(n as u64) {
        let h = sub(&frob[n / r as usize], &x, p);
        if degree(&gcd(f, &h, p)).unwrap_or(usize::MAX) != 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        assert!(!is_irreducible(&[0, 1, 1], 2));
        // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn gcd_and_division() {
        // (x-1)(x-2) and (x-1)(x-3) over F_7
        let a = mul(&[6, 1], &[5, 1], 7);
        let b = mul(&[6, 1], &[4, 1], 7);
        assert_eq!(gcd(&a, &b, 7), vec![6, 1]);
        let (q, r) = divrem(&a, &[6, 1], 7);
        assert_eq!(q, vec![5, 1]);
        assert!(r.is_empty());
    }
}
