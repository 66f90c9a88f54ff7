//! Laurent polynomials over ℚ or a finite field and the hypersurface tools
//! built on them: Laurent degree, monomial substitution, binomial division,
//! admissibility, stabilizer lattice and torsion-coset membership.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{domain, input, resource, Result};
use crate::ffield::{make_field, minimal_field_degree, FieldConfig};
use crate::field::{cyclotomic_polynomial, upoly, Field, GaloisField, PrimeField, Rationals};
use crate::intlat::{basis_extension, IntMatrix, IntegerLattice};
use crate::torsion::TorsionCoset;

/// Finitely supported map ℤⁿ → F, terms in lexicographic exponent order.
#[derive(Clone)]
pub struct LaurentPoly<F: Field> {
    field: F,
    n: usize,
    terms: BTreeMap<Vec<i64>, F::Elem>,
}

impl<F: Field> PartialEq for LaurentPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(field: F, n: usize) -> Self {
        Self { field, n, terms: BTreeMap::new() }
    }

    pub fn from_terms(field: F, n: usize, terms: impl IntoIterator<Item = (Vec<i64>, F::Elem)>) -> Result<Self> {
        let mut p = Self::zero(field, n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(input!("exponent vector of length {} in {} variables", e.len(), n));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn monomial(field: F, exps: Vec<i64>, c: F::Elem) -> Self {
        let n = exps.len();
        let mut p = Self::zero(field, n);
        p.add_term(exps, c);
        p
    }

    pub fn constant(field: F, n: usize, c: F::Elem) -> Self {
        Self::monomial(field, vec![0; n], c)
    }

    fn add_term(&mut self, e: Vec<i64>, c: F::Elem) {
        let f = &self.field;
        let merged = match self.terms.remove(&e) {
            Some(old) => f.add(&old, &c),
            None => c,
        };
        if !f.is_zero(&merged) {
            self.terms.insert(e, merged);
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, F::Elem> {
        &self.terms
    }

    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Units of the Laurent ring are the nonzero monomials.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coefficient(&self, e: &[i64]) -> F::Elem {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        Self { field: self.field.clone(), n: self.n, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.field.clone(), self.n);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), self.field.mul(x, c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.field.clone(), self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, self.field.mul(c1, c2));
            }
        }
        out
    }

    /// X^v·P.
    pub fn shift(&self, v: &[i64]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(v).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        Self { field: self.field.clone(), n: self.n, terms }
    }

    /// Apply an exponent map i ↦ M·i (M is n′×n).
    pub fn transform_exponents(&self, m: &IntMatrix<i64>) -> Result<Self> {
        if m.cols() != self.n {
            return Err(input!("exponent map has {} columns for {} variables", m.cols(), self.n));
        }
        let mut out = Self::zero(self.field.clone(), m.rows());
        for (e, c) in &self.terms {
            out.add_term(m.mul_vec(e), c.clone());
        }
        Ok(out)
    }

    /// Coordinatewise minimum exponent (zero vector for P = 0).
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.n];
        for e in self.terms.keys() {
            for (mi, ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(*ei);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        m
    }

    /// Ldeg(P) = deg Q where P = monomial·Q and Q is coprime to X₁⋯X_n.
    pub fn laurent_degree(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(domain!("the zero polynomial has no Laurent degree"));
        }
        let m = self.min_exponents();
        Ok(self
            .terms
            .keys()
            .map(|e| e.iter().zip(&m).map(|(a, b)| (a - b) as u64).sum::<u64>())
            .max()
            .unwrap())
    }

    pub fn map_field<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> LaurentPoly<G> {
        let mut out = LaurentPoly::zero(target, self.n);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// P(x) for x ∈ (F^*)ⁿ.
    pub fn eval(&self, x: &[F::Elem]) -> Result<F::Elem> {
        if x.len() != self.n {
            return Err(input!("point has {} coordinates, expected {}", x.len(), self.n));
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &ei) in x.iter().zip(e) {
                let pw = f.pow_signed(xi, ei).ok_or_else(|| domain!("zero coordinate is not in the torus"))?;
                t = f.mul(&t, &pw);
            }
            acc = f.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Canonical text: terms in lexicographic exponent order joined by " + ".
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a != 0)
                    .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                    .collect();
                let coeff = self.field.format(c);
                match (mono.is_empty(), coeff.as_str()) {
                    (true, _) => coeff,
                    (false, "1") => mono.join("*"),
                    (false, _) => format!("{coeff}*{}", mono.join("*")),
                }
            })
            .collect();
        parts.join(" + ")
    }

    /// Parse the text format. `n` defaults to the largest variable index used.
    pub fn parse(text: &str, field: F, n: Option<usize>) -> Result<Self> {
        let raw = parse_terms(text)?;
        let used = raw.iter().flat_map(|(_, f)| f.iter().map(|(i, _)| *i)).max().unwrap_or(0);
        let n = match n {
            Some(n) if used > n => {
                return Err(input!("variable x{used} used in a polynomial in {n} variables"));
            }
            Some(n) => n,
            None => used.max(1),
        };
        let mut p = Self::zero(field, n);
        for (c, factors) in raw {
            let mut e = vec![0i64; n];
            for (i, a) in factors {
                e[i - 1] += a;
            }
            let c = p.field.from_rational(&c)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

// ---------------------------------------------------------------------------
// text format

struct Scanner<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(input!("expected a number at position {}", start));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let paren = self.eat(b'(');
        let mut neg = false;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            neg ^= c == b'-';
            self.pos += 1;
        }
        let v = self.uint()?;
        if paren && !self.eat(b')') {
            return Err(input!("missing ')' at position {}", self.pos));
        }
        Ok(if neg { -v } else { v })
    }

    fn rational(&mut self) -> Result<BigRational> {
        let paren = self.eat(b'(');
        let mut neg = false;
        if paren {
            while let Some(c @ (b'+' | b'-')) = self.peek() {
                neg ^= c == b'-';
                self.pos += 1;
            }
        }
        let num = self.uint()?;
        let den = if self.eat(b'/') { self.uint()? } else { BigInt::one() };
        if den.is_zero() {
            return Err(input!("zero denominator"));
        }
        if paren && !self.eat(b')') {
            return Err(input!("missing ')' at position {}", self.pos));
        }
        let r = BigRational::new(num, den);
        Ok(if neg { -r } else { r })
    }
}

type RawTerm = (BigRational, Vec<(usize, i64)>);

fn parse_terms(text: &str) -> Result<Vec<RawTerm>> {
    let mut sc = Scanner { s: text.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    if sc.peek().is_none() {
        return Err(input!("empty polynomial"));
    }
    loop {
        let mut neg = false;
        while let Some(c @ (b'+' | b'-')) = sc.peek() {
            neg ^= c == b'-';
            sc.pos += 1;
        }
        let mut coef = BigRational::one();
        let mut factors = Vec::new();
        loop {
            match sc.peek() {
                Some(b'x' | b'X') => {
                    sc.pos += 1;
                    let idx = sc.uint()?.to_usize().filter(|&i| i >= 1).ok_or_else(|| {
                        input!("variables are named x1, x2, … (position {})", sc.pos)
                    })?;
                    let e = if sc.eat(b'^') {
                        sc.signed_int()?.to_i64().ok_or_else(|| input!("exponent out of range"))?
                    } else {
                        1
                    };
                    factors.push((idx, e));
                }
                Some(c) if c.is_ascii_digit() || c == b'(' => coef *= sc.rational()?,
                Some(c) => return Err(input!("unexpected '{}' at position {}", c as char, sc.pos)),
                None => return Err(input!("polynomial ends in the middle of a term")),
            }
            if !sc.eat(b'*') {
                break;
            }
        }
        out.push((if neg { -coef } else { coef }, factors));
        match sc.peek() {
            None => return Ok(out),
            Some(b'+' | b'-') => {}
            Some(c) => return Err(input!("unexpected '{}' at position {}", c as char, sc.pos)),
        }
    }
}

// ---------------------------------------------------------------------------
// monomial substitutions and binomial division

fn to_i64_matrix(m: &IntMatrix<BigInt>) -> Result<IntMatrix<i64>> {
    let data: Option<Vec<i64>> = m.data().iter().map(|x| x.to_i64()).collect();
    IntMatrix::new(m.rows(), m.cols(), data.ok_or_else(|| resource!("coordinate change overflows 64 bits"))?)
}

fn primitive_part(u: &[i64]) -> (Vec<i64>, i64) {
    let g = u.iter().fold(0i64, |g, &x| g.gcd(&x));
    (u.iter().map(|x| x / g).collect(), g)
}

/// Unimodular U with U·e₁ = u for a primitive u, together with U⁻¹.
fn unimodular_with_first_column(u: &[i64]) -> Result<(IntMatrix<i64>, IntMatrix<i64>)> {
    let n = u.len();
    let lat: IntegerLattice<BigInt> =
        IntegerLattice::from_generators(n, &[u.iter().map(|&x| BigInt::from(x)).collect()])?;
    let be = basis_extension(&lat);
    let mut m = to_i64_matrix(&be.matrix)?;
    let mut inv = to_i64_matrix(&be.inverse)?;
    if m.column(0) != u {
        // U·e₁ = −u: flip the first column of U and the first row of U⁻¹
        for i in 0..n {
            m[(i, 0)] = -m[(i, 0)];
            inv[(0, i)] = -inv[(0, i)];
        }
    }
    debug_assert_eq!(m.column(0), u);
    Ok((m, inv))
}

/// Q(Y) = P(y·Y^u), a Laurent polynomial in one variable.
pub fn substitute_monomial_curve<F: Field>(p: &LaurentPoly<F>, y: &[F::Elem], u: &[i64]) -> Result<LaurentPoly<F>> {
    if y.len() != p.n || u.len() != p.n {
        return Err(input!("point and direction must have {} coordinates", p.n));
    }
    let f = &p.field;
    let mut out = LaurentPoly::zero(f.clone(), 1);
    for (e, c) in &p.terms {
        let mut t = c.clone();
        for (yi, &ei) in y.iter().zip(e) {
            let pw = f.pow_signed(yi, ei).ok_or_else(|| input!("substitution point has a zero coordinate"))?;
            t = f.mul(&t, &pw);
        }
        let k: i64 = e.iter().zip(u).map(|(a, b)| a * b).sum();
        out.add_term(vec![k], t);
    }
    Ok(out)
}

/// Slices of P after the change of variables X = Y^{U⁻¹}: for each exponent
/// tail (i′₂, …, i′ₙ) a univariate Laurent polynomial in Y₁ given as
/// (lowest exponent, dense coefficients).
type Slices<E> = BTreeMap<Vec<i64>, (i64, Vec<E>)>;

fn slices<F: Field>(p: &LaurentPoly<F>, u_inv: &IntMatrix<i64>) -> Slices<F::Elem> {
    let f = &p.field;
    let mut sparse: BTreeMap<Vec<i64>, BTreeMap<i64, F::Elem>> = BTreeMap::new();
    for (e, c) in &p.terms {
        let e2 = u_inv.mul_vec(e);
        sparse.entry(e2[1..].to_vec()).or_default().insert(e2[0], c.clone());
    }
    sparse
        .into_iter()
        .map(|(tail, m)| {
            let lo = *m.keys().next().unwrap();
            let hi = *m.keys().last().unwrap();
            let mut dense = vec![f.zero(); (hi - lo + 1) as usize];
            for (k, c) in m {
                dense[(k - lo) as usize] = c;
            }
            (tail, (lo, dense))
        })
        .collect()
}

/// Q with P = (X^u − c)·Q, if it exists.
pub fn divide_by_binomial<F: Field>(p: &LaurentPoly<F>, u: &[i64], c: &F::Elem) -> Result<Option<LaurentPoly<F>>> {
    if u.len() != p.n {
        return Err(input!("direction must have {} coordinates", p.n));
    }
    if u.iter().all(|&x| x == 0) {
        return Err(domain!("the direction u must be nonzero"));
    }
    let f = &p.field;
    if f.is_zero(c) {
        return Err(domain!("X^u − 0 is a unit times a monomial; c must be nonzero"));
    }
    let (prim, k) = primitive_part(u);
    let (m, m_inv) = unimodular_with_first_column(&prim)?;
    // X^u = Y₁^k; divide each slice by Y₁^k − c
    let mut divisor = vec![f.zero(); k as usize + 1];
    divisor[0] = f.neg(c);
    divisor[k as usize] = f.one();
    let mut q_terms: Vec<(Vec<i64>, F::Elem)> = Vec::new();
    for (tail, (lo, dense)) in slices(p, &m_inv) {
        let (q, r) = upoly::divrem(f, &dense, &divisor);
        if !r.is_empty() {
            return Ok(None);
        }
        for (j, cj) in q.into_iter().enumerate() {
            if f.is_zero(&cj) {
                continue;
            }
            let mut e2 = vec![lo + j as i64];
            e2.extend_from_slice(&tail);
            q_terms.push((m.mul_vec(&e2), cj));
        }
    }
    let q = LaurentPoly::from_terms(f.clone(), p.n, q_terms)?;
    let binom = LaurentPoly::from_terms(f.clone(), p.n, [(u.to_vec(), f.one()), (vec![0; p.n], f.neg(c))])?;
    debug_assert!(binom.mul(&q) == *p);
    Ok(Some(q))
}

/// Primitive normalisations (first nonzero entry positive) of all support
/// differences, sorted and without repeats.
pub fn candidate_torus_directions<F: Field>(p: &LaurentPoly<F>) -> Vec<Vec<i64>> {
    let supp = p.support();
    let mut out = BTreeSet::new();
    for (a, i) in supp.iter().enumerate() {
        for j in &supp[a + 1..] {
            let d: Vec<i64> = j.iter().zip(i).map(|(x, y)| x - y).collect();
            let (mut v, _) = primitive_part(&d);
            if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                v.iter_mut().for_each(|x| *x = -*x);
            }
            out.insert(v);
        }
    }
    out.into_iter().collect()
}

// ---------------------------------------------------------------------------
// admissibility

/// A root of unity ζ found among the roots of a univariate polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootWitness {
    /// Exact order of ζ when determined.
    pub order: Option<u64>,
    /// Polynomial (in y) whose roots are the witnessing roots of unity.
    pub polynomial: String,
}

/// Fields in which the roots of unity of a polynomial can be detected.
pub trait RootsOfUnity: Field {
    /// A root of unity of least order among the roots of g, where g has a
    /// nonzero constant term.
    fn root_of_unity(&self, g: &[Self::Elem]) -> Option<RootWitness>;
}

fn univariate_text<F: Field>(f: &F, g: &[F::Elem]) -> String {
    let mut parts = Vec::new();
    for (k, c) in g.iter().enumerate() {
        if f.is_zero(c) {
            continue;
        }
        let cs = f.format(c);
        let y = if k == 1 { "y".to_string() } else { format!("y^{k}") };
        parts.push(match (k, cs.as_str()) {
            (0, _) => cs,
            (_, "1") => y,
            _ => format!("{cs}*{y}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

impl RootsOfUnity for Rationals {
    fn root_of_unity(&self, g: &[BigRational]) -> Option<RootWitness> {
        let d = upoly::degree(self, g)? as u64;
        // φ(m) ≥ √(m/2), so φ(m) ≤ d forces m ≤ 2d²
        for m in 1..=2 * d * d + 2 {
            if crate::arith::euler_phi(m) > d {
                continue;
            }
            let phi: Vec<BigRational> = cyclotomic_polynomial(m).iter().map(|c| BigRational::from(c.clone())).collect();
            if upoly::divrem(self, g, &phi).1.is_empty() {
                return Some(RootWitness { order: Some(m), polynomial: univariate_text(self, &phi) });
            }
        }
        None
    }
}

const ORDER_SEARCH_LIMIT: u64 = 1_000_000;

fn finite_root_of_unity<F: Field>(f: &F, g: &[F::Elem]) -> Option<RootWitness> {
    let g = upoly::monic(f, g);
    if upoly::degree(f, &g)? == 0 {
        return None;
    }
    let p = f.characteristic();
    // walk x^N mod g until gcd(g, x^N − 1) is nontrivial
    let x = vec![f.zero(), f.one()];
    let mut xn = upoly::divrem(f, &[f.one()], &g).1;
    for n in 1..=ORDER_SEARCH_LIMIT {
        xn = upoly::divrem(f, &upoly::mul(f, &xn, &x), &g).1;
        if n % p == 0 {
            continue;
        }
        let h = upoly::gcd(f, &g, &upoly::sub(f, &xn, &[f.one()]));
        if upoly::degree(f, &h).is_some_and(|d| d > 0) {
            return Some(RootWitness { order: Some(n), polynomial: univariate_text(f, &h) });
        }
    }
    Some(RootWitness { order: None, polynomial: univariate_text(f, &g) })
}

impl RootsOfUnity for PrimeField {
    fn root_of_unity(&self, g: &[u64]) -> Option<RootWitness> {
        finite_root_of_unity(self, g)
    }
}

impl RootsOfUnity for GaloisField {
    fn root_of_unity(&self, g: &[u64]) -> Option<RootWitness> {
        finite_root_of_unity(self, g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityWitness {
    /// Primitive direction with X^u − ζ dividing P.
    pub u: Vec<i64>,
    pub zeta: RootWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    pub witness: Option<AdmissibilityWitness>,
    pub directions_checked: usize,
}

/// Decide whether Z(P) contains no torsion coset of dimension n − 1, i.e.
/// whether no X^u − ζ (u primitive, ζ a root of unity) divides P.
pub fn is_admissible_hypersurface<F: RootsOfUnity>(p: &LaurentPoly<F>) -> Result<AdmissibilityReport> {
    if p.is_zero() {
        return Err(domain!("the zero polynomial does not define a hypersurface"));
    }
    if p.is_unit() {
        return Err(domain!("a monomial is a unit and defines the empty set"));
    }
    if p.n == 1 {
        // Z(P) is finite
        return Ok(AdmissibilityReport { admissible: true, witness: None, directions_checked: 0 });
    }
    let f = &p.field;
    let dirs = candidate_torus_directions(p);
    for (idx, u) in dirs.iter().enumerate() {
        let (_, m_inv) = unimodular_with_first_column(u)?;
        let mut g: Vec<F::Elem> = Vec::new();
        for (_, (_, dense)) in slices(p, &m_inv) {
            g = upoly::gcd(f, &g, &dense);
            if upoly::degree(f, &g) == Some(0) {
                break;
            }
        }
        if upoly::degree(f, &g).is_some_and(|d| d > 0) {
            if let Some(zeta) = f.root_of_unity(&g) {
                return Ok(AdmissibilityReport {
                    admissible: false,
                    witness: Some(AdmissibilityWitness { u: u.clone(), zeta }),
                    directions_checked: idx + 1,
                });
            }
        }
    }
    Ok(AdmissibilityReport { admissible: true, witness: None, directions_checked: dirs.len() })
}

// ---------------------------------------------------------------------------
// stabilizer

pub const STABILIZER_CAVEAT: &str =
    "n - rank is a lower bound for dim Stab(Z(P)); it is exact when P generates the ideal of Z(P)";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerReport {
    pub lattice: IntegerLattice<BigInt>,
    pub dimension: usize,
    pub caveat: &'static str,
}

/// Λ = ⟨i − j : i, j ∈ Supp(P)⟩ and the dimension n − rank Λ.
pub fn stabilizer_lattice<F: Field>(p: &LaurentPoly<F>) -> Result<StabilizerReport> {
    if p.is_zero() {
        return Err(domain!("the zero polynomial has no support"));
    }
    let supp = p.support();
    let base = &supp[0];
    let gens: Vec<Vec<BigInt>> =
        supp[1..].iter().map(|i| i.iter().zip(base).map(|(a, b)| BigInt::from(a - b)).collect()).collect();
    let lattice = IntegerLattice::from_generators(p.n, &gens)?;
    let dimension = p.n - lattice.rank();
    Ok(StabilizerReport { lattice, dimension, caveat: STABILIZER_CAVEAT })
}

// ---------------------------------------------------------------------------
// coset membership

/// Fields in which sums Σ c·ζ_N^e can be evaluated exactly.
pub trait TorsionEval: Field {
    /// Whether every class sum Σ c·ζ_N^e vanishes for a fixed primitive N-th root ζ_N.
    fn class_sums_vanish(&self, n: u64, classes: &[Vec<(Self::Elem, u64)>], config: &FieldConfig) -> Result<bool>;
}

impl TorsionEval for Rationals {
    fn class_sums_vanish(&self, n: u64, classes: &[Vec<(BigRational, u64)>], _: &FieldConfig) -> Result<bool> {
        let k = crate::field::Cyclotomic::new(n)?;
        for class in classes {
            let mut v = vec![BigRational::zero(); n as usize];
            for (c, e) in class {
                v[*e as usize] += c;
            }
            if !k.is_zero(&k.reduce(v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl TorsionEval for PrimeField {
    fn class_sums_vanish(&self, n: u64, classes: &[Vec<(u64, u64)>], config: &FieldConfig) -> Result<bool> {
        let p = self.modulus();
        let l = minimal_field_degree(n, p)?;
        let l = u32::try_from(l)
            .ok()
            .filter(|&l| (l as f64) * (p as f64).log2() <= config.max_field_bits as f64)
            .ok_or_else(|| {
                resource!("order {n} needs F_{p}^{l}, beyond the 2^{} field cap (max_field_bits)", config.max_field_bits)
            })?;
        let fld = make_field(p, l, config)?;
        let w = fld.root_of_unity(n)?;
        for class in classes {
            let s = class.iter().fold(0u64, |acc, &(c, e)| fld.add(acc, fld.mul(c, fld.pow(w, e))));
            if s != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether ζG ⊂ Z(P): Supp(P) is split into classes of equal character on G
/// (i − j ∈ Λ_G) and each class sum Σ p_i ζ^i must vanish.
pub fn coset_in_variety<F: TorsionEval>(c: &TorsionCoset, p: &LaurentPoly<F>, config: &FieldConfig) -> Result<bool> {
    if c.characteristic() != p.field.characteristic() {
        return Err(input!(
            "coset in characteristic {} but polynomial in characteristic {}",
            c.characteristic(),
            p.field.characteristic()
        ));
    }
    if c.ambient_dim() != p.n {
        return Err(input!("coset in dimension {} but polynomial in {} variables", c.ambient_dim(), p.n));
    }
    let rep = c.rep();
    let n = rep.order().to_u64().ok_or_else(|| resource!("coset order exceeds 64 bits"))?;
    let nums: Vec<BigInt> = rep.numerators().to_vec();
    let lat = c.group().lattice();
    let mut classes: BTreeMap<Vec<BigInt>, Vec<(F::Elem, u64)>> = BTreeMap::new();
    for (e, coef) in &p.terms {
        let eb: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
        let key = lat.reduce(&eb);
        let s = eb.iter().zip(&nums).fold(BigInt::zero(), |acc, (a, b)| acc + a * b);
        let ex = s.mod_floor(&BigInt::from(n)).to_u64().unwrap();
        classes.entry(key).or_default().push((coef.clone(), ex));
    }
    let classes: Vec<_> = classes.into_values().collect();
    p.field.class_sums_vanish(n, &classes, config)
}
