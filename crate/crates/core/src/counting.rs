//! Counting torsion points of bounded order: exact #X_T over F̄_p, Fink's
//! curve, Lang–Weil checks, exponent calculators and char-0 main terms.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{divisors, mobius, multiplicative_order_mod, SymbolicMainTerm};
use crate::error::{domain, input, resource, Result};
use crate::ffield::{FieldConfig, FiniteField, TABLE_BITS};
use crate::field::{Field, PrimeField};
use crate::fpoly;
use crate::intlat::{successive_minima, MinimaConfig, SuccessiveMinima};
use crate::scalar::{from_u64, IntScalar};
use crate::torsion::{TorsionCoset, TorsionPoint};
use crate::variety::LaurentPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Graph gcd when the curve has the shape x₂^{±1} = h(x₁), else enumeration.
    Auto,
    /// Enumerate 𝔾ₘⁿ(F_{p^l}) for every field the orders ≤ T need.
    Enumerate,
    /// For x₂^{±1} = h(x₁): #{x ∈ μ_N : h(x) ∈ μ_N} = deg gcd(X^N − 1, h^N − 1).
    /// In one variable: #{x ∈ μ_N : P(x) = 0} = deg gcd(X^N − 1, P).
    GraphGcd,
}

impl CountMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            CountMethod::Auto => "auto",
            CountMethod::Enumerate => "enumerate",
            CountMethod::GraphGcd => "graph-gcd",
        }
    }
}

impl std::str::FromStr for CountMethod {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(CountMethod::Auto),
            "enumerate" => Ok(CountMethod::Enumerate),
            "graph-gcd" => Ok(CountMethod::GraphGcd),
            _ => Err(input!("unknown count method '{s}' (auto, enumerate, graph-gcd)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountConfig {
    /// Every enumerated field satisfies p^l ≤ 2^max_field_bits.
    pub max_field_bits: u32,
    /// Budget on enumerated points (graph route: Σ N over the orders used).
    pub max_points: u64,
    pub method: CountMethod,
    pub factor_budget: u64,
}

impl Default for CountConfig {
    fn default() -> Self {
        Self { max_field_bits: 24, max_points: 1_000_000_000, method: CountMethod::Auto, factor_budget: 1 << 22 }
    }
}

impl CountConfig {
    fn field_config(&self) -> FieldConfig {
        FieldConfig { max_field_bits: self.max_field_bits, factor_budget: self.factor_budget }
    }

    fn to_params(self, params: &mut BTreeMap<String, Value>) {
        params.insert("max_field_bits".into(), json!(self.max_field_bits));
        params.insert("max_points".into(), json!(self.max_points));
    }
}

/// Result of a counting run. `exact` is #X_T and equals the histogram total.
#[derive(Debug, Clone, PartialEq)]
pub struct CountReport {
    pub label: String,
    pub params: BTreeMap<String, Value>,
    pub exact: u64,
    pub main_term: Option<f64>,
    pub upper_bound: Option<f64>,
    pub lower_bound: Option<f64>,
    pub ratio: Option<f64>,
    /// order N → number of points of order exactly N
    pub histogram: BTreeMap<u64, u64>,
}

impl CountReport {
    pub fn histogram_total(&self) -> u64 {
        self.histogram.values().sum()
    }

    pub fn bounds_hold(&self) -> bool {
        let x = self.exact as f64;
        self.lower_bound.is_none_or(|lo| lo <= x) && self.upper_bound.is_none_or(|hi| x <= hi)
    }

    pub fn to_json(&self) -> Value {
        let hist: serde_json::Map<String, Value> =
            self.histogram.iter().map(|(n, c)| (n.to_string(), json!(c))).collect();
        json!({
            "label": self.label,
            "params": self.params,
            "exact": self.exact,
            "main_term": self.main_term,
            "upper_bound": self.upper_bound,
            "lower_bound": self.lower_bound,
            "ratio": self.ratio,
            "histogram": hist,
        })
    }
}

// ---------------------------------------------------------------------------
// enumeration over one field

fn mod_inv(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    e.x.rem_euclid(m as i128) as u64
}

struct Group {
    /// exponent of the last coordinate
    e: i64,
    /// (log of coefficient, exponents of the other coordinates mod q − 1)
    terms: Vec<(u64, Vec<u64>)>,
}

/// Points of Z(P) ⊂ 𝔾ₘⁿ(F_q) in log coordinates: the first n − 1 coordinates
/// run over all of F_q^*, the last one is solved for.
struct Enumerator<'a> {
    field: &'a FiniteField,
    m: u64,
    n: usize,
    groups: Vec<Group>,
}

fn last_exponents(p: &LaurentPoly<PrimeField>) -> usize {
    let n = p.ambient_dim();
    let mut es: Vec<i64> = p.terms().keys().map(|e| e[n - 1]).collect();
    es.sort_unstable();
    es.dedup();
    es.len()
}

impl<'a> Enumerator<'a> {
    fn new(p: &LaurentPoly<PrimeField>, field: &'a FiniteField) -> Result<Self> {
        let m = field.size() - 1;
        let n = p.ambient_dim();
        let mut by_e: BTreeMap<i64, Vec<(u64, Vec<u64>)>> = BTreeMap::new();
        for (exps, c) in p.terms() {
            let lc = field.log(*c).ok_or_else(|| resource!("enumeration needs exp/log tables"))?;
            let rest = exps[..n - 1].iter().map(|&e| e.rem_euclid(m as i64) as u64).collect();
            by_e.entry(exps[n - 1]).or_default().push((lc, rest));
        }
        let groups = by_e.into_iter().map(|(e, terms)| Group { e, terms }).collect();
        Ok(Self { field, m, n, groups })
    }

    /// Histogram of point orders over all of Z(P)(F_q).
    fn histogram(&self) -> HashMap<u64, u64> {
        let m = self.m;
        if self.n == 1 {
            let mut h = HashMap::new();
            self.solve_last(&[], m, &mut h);
            return h;
        }
        (0..m)
            .into_par_iter()
            .fold(HashMap::new, |mut h, a0| {
                let mut a = vec![0u64; self.n - 1];
                a[0] = a0;
                loop {
                    let g0 = a.iter().fold(m, |g, &x| g.gcd(&x));
                    self.solve_last(&a, g0, &mut h);
                    // odometer over a[1..]
                    let mut i = 1;
                    while i < a.len() {
                        a[i] += 1;
                        if a[i] < m {
                            break;
                        }
                        a[i] = 0;
                        i += 1;
                    }
                    if i == a.len() {
                        break;
                    }
                }
                h
            })
            .reduce(HashMap::new, merge)
    }

    fn solve_last(&self, a: &[u64], g0: u64, h: &mut HashMap<u64, u64>) {
        let (f, m) = (self.field, self.m);
        let mut record = |l: u64| *h.entry(m / g0.gcd(&l)).or_insert(0) += 1;
        let coeffs: Vec<(i64, u64)> = self
            .groups
            .iter()
            .filter_map(|g| {
                let s = g.terms.iter().fold(0u64, |s, (lc, es)| {
                    let idx = es.iter().zip(a).fold(*lc as u128, |acc, (&e, &x)| acc + e as u128 * x as u128);
                    f.add(s, f.exp((idx % m as u128) as u64))
                });
                (s != 0).then_some((g.e, s))
            })
            .collect();
        match coeffs.len() {
            0 => (0..m).for_each(&mut record),
            1 => {}
            2 => {
                // c_a x^{e_a} + c_b x^{e_b} = 0  ⇔  x^{e_b − e_a} = −c_a / c_b
                let (ea, ca) = coeffs[0];
                let (eb, cb) = coeffs[1];
                let t = (f.log(f.neg(ca)).unwrap() + m - f.log(cb).unwrap()) % m;
                let d = (eb - ea).rem_euclid(m as i64) as u64;
                let g = d.gcd(&m);
                if t % g != 0 {
                    return;
                }
                let mp = m / g;
                let l0 = if mp == 1 { 0 } else { ((t / g) as u128 * mod_inv(d / g, mp) as u128 % mp as u128) as u64 };
                (0..g).for_each(|s| record(l0 + s * mp));
            }
            _ => {
                let logs: Vec<(u64, u64)> = coeffs
                    .iter()
                    .map(|&(e, c)| (e.rem_euclid(m as i64) as u64, f.log(c).unwrap()))
                    .collect();
                for l in 0..m {
                    let s = logs.iter().fold(0u64, |s, &(e, lc)| {
                        f.add(s, f.exp(((lc as u128 + e as u128 * l as u128) % m as u128) as u64))
                    });
                    if s == 0 {
                        record(l);
                    }
                }
            }
        }
    }
}

fn merge(mut a: HashMap<u64, u64>, b: HashMap<u64, u64>) -> HashMap<u64, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn enumeration_cost(q: u64, n: usize, scan: bool) -> u64 {
    let m = q - 1;
    let outer = (0..n - 1).try_fold(1u64, |acc, _| acc.checked_mul(m)).unwrap_or(u64::MAX);
    if scan {
        outer.saturating_mul(m)
    } else {
        outer
    }
}

fn check_field(p: u64, l: u64, cfg: &CountConfig) -> Option<u64> {
    let q = u32::try_from(l).ok().and_then(|l| p.checked_pow(l))?;
    let bits = cfg.max_field_bits.min(TABLE_BITS);
    (q <= 1u64 << bits).then_some(q)
}

/// All points of Z(P) in 𝔾ₘⁿ(F_{p^l}), by order.
fn field_histogram(p: &LaurentPoly<PrimeField>, l: u64, cfg: &CountConfig) -> Result<(u64, HashMap<u64, u64>)> {
    let ch = p.field().modulus();
    let q = check_field(ch, l, cfg).ok_or_else(|| {
        resource!(
            "F_{ch}^{l} exceeds the field cap 2^{} (max_field_bits, enumeration limit 2^{TABLE_BITS})",
            cfg.max_field_bits
        )
    })?;
    let cost = enumeration_cost(q, p.ambient_dim(), last_exponents(p) > 2);
    if cost > cfg.max_points {
        return Err(resource!("enumerating F_{ch}^{l} needs {cost} points, above max_points = {}", cfg.max_points));
    }
    let field = FiniteField::new(ch, l as u32, &cfg.field_config())?;
    Ok((q, Enumerator::new(p, &field)?.histogram()))
}

/// Field degrees l = lcm(ord_N(p), k) needed for the orders N ≤ T, p ∤ N.
fn needed_fields(ch: u64, k: u64, t: u64) -> BTreeMap<u64, Vec<u64>> {
    let mut out: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for n in (1..=t).filter(|n| n % ch != 0) {
        let d = multiplicative_order_mod(ch, n).expect("p does not divide N");
        out.entry(d.lcm(&k)).or_default().push(n);
    }
    out
}

fn enumerate_orders(p: &LaurentPoly<PrimeField>, k: u64, t: u64, cfg: &CountConfig) -> Result<BTreeMap<u64, u64>> {
    let ch = p.field().modulus();
    let fields = needed_fields(ch, k, t);
    let mut offenders: Vec<(u64, u64)> = fields
        .iter()
        .filter(|(&l, _)| check_field(ch, l, cfg).is_none())
        .flat_map(|(&l, ns)| ns.iter().map(move |&n| (n, l)))
        .collect();
    if !offenders.is_empty() {
        offenders.sort_unstable();
        let shown: Vec<String> = offenders.iter().take(8).map(|(n, l)| format!("N={n} (F_{ch}^{l})")).collect();
        return Err(resource!(
            "order N = {} needs F_{}^{}, beyond the field cap 2^{} (max_field_bits, enumeration limit 2^{}); {} offending orders: {}{}",
            offenders[0].0,
            ch,
            offenders[0].1,
            cfg.max_field_bits,
            TABLE_BITS,
            offenders.len(),
            shown.join(", "),
            if offenders.len() > 8 { ", …" } else { "" }
        ));
    }
    let scan = last_exponents(p) > 2;
    let total = fields
        .keys()
        .map(|&l| enumeration_cost(check_field(ch, l, cfg).unwrap(), p.ambient_dim(), scan))
        .fold(0u64, u64::saturating_add);
    if total > cfg.max_points {
        return Err(resource!("enumeration needs {total} points, above max_points = {}", cfg.max_points));
    }
    let mut hist = BTreeMap::new();
    for (l, orders) in &fields {
        let (_, h) = field_histogram(p, *l, cfg)?;
        for n in orders {
            if let Some(&c) = h.get(n) {
                hist.insert(*n, c);
            }
        }
    }
    Ok(hist)
}

// ---------------------------------------------------------------------------
// graph route

/// x_dep^{±1} = Σ c·x_free^e over F_p.
#[derive(Debug, Clone)]
struct GraphForm {
    h: Vec<(i64, u64)>,
}

fn graph_form(p: &LaurentPoly<PrimeField>) -> Option<GraphForm> {
    if p.ambient_dim() != 2 {
        return None;
    }
    let f = p.field();
    for dep in [1usize, 0] {
        let mut by_e: BTreeMap<i64, Vec<(i64, u64)>> = BTreeMap::new();
        for (e, c) in p.terms() {
            by_e.entry(e[dep]).or_default().push((e[1 - dep], *c));
        }
        if by_e.len() != 2 {
            continue;
        }
        let mut it = by_e.into_iter();
        let (e0, g0) = it.next().unwrap();
        let (e1, g1) = it.next().unwrap();
        if e1 - e0 != 1 {
            continue;
        }
        // A x^{e0} + B x^{e1} = 0 with B (or A) a single monomial c·t^b
        let (mono, other) = match (g0.len(), g1.len()) {
            (_, 1) => (g1[0], g0),
            (1, _) => (g0[0], g1),
            _ => continue,
        };
        let (b, c) = mono;
        let s = f.neg(&f.inv(&c).unwrap());
        let h = other.into_iter().map(|(e, a)| (e - b, f.mul(&s, &a))).collect();
        return Some(GraphForm { h });
    }
    None
}

mod gf2 {
    pub fn get(src: &[u64], pos: usize, w: usize) -> u64 {
        let (i, s) = (pos / 64, pos % 64);
        let mut v = src[i] >> s;
        if s > 0 && i + 1 < src.len() {
            v |= src[i + 1] << (64 - s);
        }
        if w < 64 {
            v &= (1u64 << w) - 1;
        }
        v
    }

    pub fn xor_at(dst: &mut [u64], pos: usize, v: u64, w: usize) {
        let (i, s) = (pos / 64, pos % 64);
        dst[i] ^= v << s;
        if s > 0 && s + w > 64 {
            dst[i + 1] ^= v >> (64 - s);
        }
    }

    /// dst[dpos..dpos+len] ^= src[spos..spos+len] (bit ranges).
    pub fn xor_range(dst: &mut [u64], dpos: usize, src: &[u64], spos: usize, len: usize) {
        let mut c = 0;
        while c < len {
            let w = (len - c).min(64);
            xor_at(dst, dpos + c, get(src, spos + c, w), w);
            c += w;
        }
    }

    /// dst ^= src · X^e  in F_2[X]/(X^n − 1).
    pub fn rotate_xor(dst: &mut [u64], src: &[u64], e: usize, n: usize) {
        xor_range(dst, e, src, 0, n - e);
        xor_range(dst, 0, src, n - e, e);
    }

    fn degree(a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&w| w != 0).map(|i| i * 64 + 63 - a[i].leading_zeros() as usize)
    }

    /// Degree of gcd(a, b) for nonzero a.
    pub fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        loop {
            let Some(db) = degree(&b) else {
                return degree(&a).expect("gcd of zero polynomials");
            };
            let bw = db / 64 + 1;
            while let Some(da) = degree(&a) {
                if da < db {
                    break;
                }
                let s = da - db;
                let (ws, bs) = (s / 64, s % 64);
                for i in 0..bw {
                    let w = b[i];
                    a[i + ws] ^= w << bs;
                    if bs > 0 && i + ws + 1 < a.len() {
                        a[i + ws + 1] ^= w >> (64 - bs);
                    }
                }
            }
            a.truncate(db / 64 + 1);
            std::mem::swap(&mut a, &mut b);
        }
    }
}

/// D(N) = #{x ∈ μ_N : h(x) ∈ μ_N} over F̄_p.
fn graph_divisor_count(h: &[(i64, u64)], p: u64, n: u64) -> u64 {
    let nn = n as usize;
    // factor h(X^{p^j}) mod X^N − 1 for the base-p digits of N
    let mut digits = Vec::new();
    let (mut rest, mut pj) = (n, 1u64 % n);
    while rest > 0 {
        digits.push((rest % p, pj));
        rest /= p;
        pj = ((pj as u128 * p as u128) % n as u128) as u64;
    }
    let factor = |pj: u64| -> Vec<(usize, u64)> {
        h.iter()
            .map(|&(e, c)| ((e.rem_euclid(n as i64) as u128 * pj as u128 % n as u128) as usize, c))
            .collect()
    };
    if p == 2 {
        let words = nn.div_ceil(64);
        let mut f = vec![0u64; words];
        f[0] = 1;
        for &(d, pj) in &digits {
            if d == 0 {
                continue;
            }
            let mut g = vec![0u64; words];
            for (e, _) in factor(pj) {
                gf2::rotate_xor(&mut g, &f, e, nn);
            }
            f = g;
        }
        f[0] ^= 1;
        let mut a = vec![0u64; (nn + 1).div_ceil(64)];
        a[0] ^= 1;
        a[nn / 64] ^= 1 << (nn % 64);
        gf2::gcd_degree(a, f) as u64
    } else {
        let mut f = vec![0u64; nn];
        f[0] = 1;
        for &(d, pj) in &digits {
            let fac = factor(pj);
            for _ in 0..d {
                let mut g = vec![0u64; nn];
                for (i, &x) in f.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for &(e, c) in &fac {
                        let j = (i + e) % nn;
                        g[j] = ((g[j] as u128 + x as u128 * c as u128) % p as u128) as u64;
                    }
                }
                f = g;
            }
        }
        f[0] = (f[0] + p - 1) % p;
        let mut a = vec![0u64; nn + 1];
        a[0] = p - 1;
        a[nn] = 1;
        fpoly::trim(&mut f);
        if f.is_empty() {
            return n;
        }
        fpoly::degree(&fpoly::gcd(&a, &f, p)).unwrap() as u64
    }
}

fn graph_orders(g: &GraphForm, p: u64, t: u64, cfg: &CountConfig) -> Result<BTreeMap<u64, u64>> {
    let ns: Vec<u64> = (1..=t).filter(|n| n % p != 0).collect();
    let work = ns.iter().fold(0u64, |a, &n| a.saturating_add(n));
    if work > cfg.max_points {
        return Err(resource!("graph route examines {work} points of μ_N, above max_points = {}", cfg.max_points));
    }
    let d: HashMap<u64, u64> =
        ns.par_iter().map(|&n| (n, graph_divisor_count(&g.h, p, n))).collect::<Vec<_>>().into_iter().collect();
    Ok(mobius_histogram(&ns, &d))
}

fn mobius_histogram(ns: &[u64], d: &HashMap<u64, u64>) -> BTreeMap<u64, u64> {
    let mut hist = BTreeMap::new();
    for &n in ns {
        let a: i64 = divisors(n).iter().map(|&e| mobius(n / e) as i64 * d[&e] as i64).sum();
        if a > 0 {
            hist.insert(n, a as u64);
        }
    }
    hist
}

fn univariate_orders(p: &LaurentPoly<PrimeField>, ch: u64, t: u64) -> BTreeMap<u64, u64> {
    let lo = p.min_exponents()[0];
    let deg = p.terms().keys().map(|e| e[0] - lo).max().unwrap() as usize;
    let mut f = vec![0u64; deg + 1];
    for (e, c) in p.terms() {
        f[(e[0] - lo) as usize] = *c;
    }
    let ns: Vec<u64> = (1..=t).filter(|n| n % ch != 0).collect();
    let d: HashMap<u64, u64> = ns
        .par_iter()
        .map(|&n| {
            // X^N − 1 mod f, then the gcd with f
            let mut r = fpoly::pow_mod(&[0, 1], n as u128, &f, ch);
            r.resize(r.len().max(1), 0);
            r[0] = (r[0] + ch - 1) % ch;
            fpoly::trim(&mut r);
            let g = if r.is_empty() { f.clone() } else { fpoly::gcd(&f, &r, ch) };
            (n, fpoly::degree(&g).unwrap_or(0) as u64)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    mobius_histogram(&ns, &d)
}

// ---------------------------------------------------------------------------
// reports

/// Exact #X_T for X = Z(P) ⊂ 𝔾ₘⁿ over F̄_p, P with coefficients in F_p ⊂ F_{p^k}.
/// Enumeration counts a point of order N in F_{p^l} only for l = lcm(ord_N(p), k),
/// so every torsion point is seen in exactly one field.
pub fn count_variety_charp(p: &LaurentPoly<PrimeField>, k: u32, t: u64, cfg: &CountConfig) -> Result<CountReport> {
    if p.is_zero() {
        return Err(domain!("the zero polynomial defines the whole torus"));
    }
    if p.ambient_dim() == 0 {
        return Err(domain!("need at least one variable"));
    }
    if k == 0 {
        return Err(domain!("coefficient field degree k must be positive"));
    }
    let ch = p.field().modulus();
    let graph = graph_form(p);
    let (method, hist) = match (cfg.method, graph) {
        (CountMethod::Auto | CountMethod::GraphGcd, _) if p.ambient_dim() == 1 => {
            (CountMethod::GraphGcd, univariate_orders(p, ch, t))
        }
        (CountMethod::Enumerate, _) | (CountMethod::Auto, None) => {
            (CountMethod::Enumerate, enumerate_orders(p, k as u64, t, cfg)?)
        }
        (_, Some(g)) => (CountMethod::GraphGcd, graph_orders(&g, ch, t, cfg)?),
        (CountMethod::GraphGcd, None) => {
            return Err(domain!("graph route needs a curve of the form x2^(±1) = h(x1) or x1^(±1) = h(x2)"))
        }
    };
    let exact: u64 = hist.values().sum();
    let mut params = BTreeMap::new();
    params.insert("p".into(), json!(ch));
    params.insert("k".into(), json!(k));
    params.insert("T".into(), json!(t));
    params.insert("polynomial".into(), json!(p.to_text()));
    params.insert("method".into(), json!(method.as_str()));
    cfg.to_params(&mut params);
    let d = p.ambient_dim() as i32 - 1;
    let ratio = (t > 0).then(|| exact as f64 / (t as f64).powi(d));
    Ok(CountReport {
        label: "count-charp".into(),
        params,
        exact,
        main_term: None,
        upper_bound: None,
        lower_bound: None,
        ratio,
        histogram: hist,
    })
}

pub const FINK_CURVE: &str = "x1 + x2 - 1";

/// Fink's curve x₁ + x₂ = 1: exact counts with the 16T^{3/2} upper bound and,
/// in characteristic 2, the lower bound T/2 − 2 (T − 1 when T = 2^k − 1).
pub fn verify_fink(p: u64, ts: &[u64], cfg: &CountConfig) -> Result<Vec<CountReport>> {
    let field = PrimeField::new(p)?;
    if ts.contains(&0) {
        return Err(domain!("T must be positive"));
    }
    let Some(&tmax) = ts.iter().max() else { return Ok(Vec::new()) };
    let poly = LaurentPoly::parse(FINK_CURVE, field, Some(2))?;
    let base = count_variety_charp(&poly, 1, tmax, cfg)?;
    Ok(ts
        .iter()
        .map(|&t| {
            let histogram: BTreeMap<u64, u64> = base.histogram.range(..=t).map(|(&n, &c)| (n, c)).collect();
            let exact = histogram.values().sum();
            let tf = t as f64;
            let (lower, rule) = match p {
                2 if t >= 3 && (t + 1).is_power_of_two() => (Some(tf - 1.0), "T-1"),
                2 => (Some(tf / 2.0 - 2.0), "T/2-2"),
                _ => (None, "none"),
            };
            let mut params = base.params.clone();
            params.insert("T".into(), json!(t));
            params.insert("lower_bound_rule".into(), json!(rule));
            CountReport {
                label: "fink".into(),
                params,
                exact,
                main_term: None,
                upper_bound: Some(16.0 * tf.powf(1.5)),
                lower_bound: lower,
                ratio: Some(exact as f64 / tf),
                histogram,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct LangWeilRow {
    pub l: u32,
    pub q: u64,
    pub count: u64,
    /// |count − q^r| / q^{r − 1/2}
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LangWeilReport {
    pub p: u64,
    pub k: u32,
    pub r: u32,
    pub polynomial: String,
    pub rows: Vec<LangWeilRow>,
    /// The last deviation exceeds twice the largest earlier one (and 1).
    pub flagged: bool,
}

impl LangWeilReport {
    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| json!({"l": r.l, "q": r.q, "count": r.count, "deviation": r.deviation}))
            .collect();
        json!({
            "label": "langweil",
            "params": {"p": self.p, "k": self.k, "r": self.r, "polynomial": self.polynomial},
            "rows": rows,
            "flagged": self.flagged,
        })
    }
}

/// #Z(P)(F_{p^l}) for each l (a multiple of k), against q^r.
pub fn lang_weil_check(
    p: &LaurentPoly<PrimeField>,
    k: u32,
    r: u32,
    ls: &[u32],
    cfg: &CountConfig,
) -> Result<LangWeilReport> {
    if p.is_zero() || p.ambient_dim() == 0 {
        return Err(domain!("need a nonzero polynomial in at least one variable"));
    }
    if k == 0 {
        return Err(domain!("coefficient field degree k must be positive"));
    }
    let mut rows = Vec::new();
    for &l in ls {
        if l == 0 || l % k != 0 {
            return Err(domain!("field degree {l} is not a positive multiple of k = {k}"));
        }
        let (q, h) = field_histogram(p, l as u64, cfg)?;
        let count: u64 = h.values().sum();
        let qf = q as f64;
        let deviation = (count as f64 - qf.powi(r as i32)).abs() / qf.powf(r as f64 - 0.5);
        rows.push(LangWeilRow { l, q, count, deviation });
    }
    let flagged = match rows.split_last() {
        Some((last, earlier)) if !earlier.is_empty() => {
            let prev = earlier.iter().map(|r| r.deviation).fold(1.0, f64::max);
            last.deviation > 2.0 * prev
        }
        _ => false,
    };
    Ok(LangWeilReport { p: p.field().modulus(), k, r, polynomial: p.to_text(), rows, flagged })
}

// ---------------------------------------------------------------------------
// exponents

/// d + 1 − 1/(d − δ + 1).
pub fn bound_exponent<T: IntScalar>(d: u64, delta: u64) -> Result<Ratio<T>> {
    if delta > d {
        return Err(domain!("stabilizer dimension {delta} exceeds the dimension {d}"));
    }
    let one = Ratio::from_integer(T::one());
    Ok(Ratio::from_integer(from_u64::<T>(d + 1)) - one / Ratio::from_integer(from_u64::<T>(d - delta + 1)))
}

pub fn general_bound_exponent(d: u64) -> u64 {
    d + 1
}

/// n − 1/n.
pub fn hypersurface_exponent<T: IntScalar>(n: u64) -> Result<Ratio<T>> {
    if n == 0 {
        return Err(domain!("ambient dimension must be positive"));
    }
    let nn = Ratio::from_integer(from_u64::<T>(n));
    Ok(nn.clone() - Ratio::from_integer(T::one()) / nn)
}

// ---------------------------------------------------------------------------
// characteristic zero

#[derive(Debug, Clone, PartialEq)]
pub struct Char0MainTerm {
    /// largest coset dimension
    pub a: usize,
    /// b = coefficient / ζ(a + 1); absent when a = 0
    pub b: Option<SymbolicMainTerm>,
    /// b·T^{a+1}, or the finite count when a = 0
    pub main: f64,
    /// #X_T when every coset is a point
    pub finite_count: Option<u64>,
}

impl Char0MainTerm {
    pub fn b_value(&self) -> Option<f64> {
        self.b.as_ref().map(|b| b.to_float::<f64>())
    }
}

/// #X_T ~ b T^{a+1} for X ∩ tors = C₁ ∪ … ∪ C_m, with b summing 1/ord over the
/// connected top-dimensional pieces.
pub fn char0_main_term(decomp: &[TorsionCoset], t: u64) -> Result<Char0MainTerm> {
    let first = decomp.first().ok_or_else(|| domain!("empty coset decomposition"))?;
    let n = first.ambient_dim();
    for c in decomp {
        if c.characteristic() != 0 {
            return Err(domain!("char0_main_term needs characteristic 0 cosets"));
        }
        if c.ambient_dim() != n {
            return Err(input!("cosets of ambient dimensions {n} and {}", c.ambient_dim()));
        }
    }
    let a = decomp.iter().map(|c| c.dim()).max().unwrap();
    if a == 0 {
        let mut pts: Vec<&TorsionPoint> = decomp.iter().map(|c| c.rep()).collect();
        pts.sort();
        pts.dedup();
        let count = pts.iter().filter(|x| x.order() <= BigInt::from(t)).count() as u64;
        return Ok(Char0MainTerm { a, b: None, main: count as f64, finite_count: Some(count) });
    }
    let mut pieces: Vec<TorsionCoset> = decomp.iter().filter(|c| c.dim() == a).flat_map(|c| c.connected_pieces()).collect();
    pieces.sort_by(|x, y| x.rep().cmp(y.rep()).then_with(|| x.group().lattice().basis().cmp(y.group().lattice().basis())));
    pieces.dedup();
    let sum: BigRational = pieces.iter().map(|c| BigRational::new(1.into(), c.order())).fold(BigRational::zero(), |s, x| s + x);
    let b = SymbolicMainTerm { coefficient: sum / BigInt::from(a + 1), zeta_arg: a as u32 + 1 };
    let main = b.to_float::<f64>() * (t as f64).powi(a as i32 + 1);
    Ok(Char0MainTerm { a, b: Some(b), main, finite_count: None })
}

// ---------------------------------------------------------------------------
// empirical exponent and relation vectors

/// Least-squares slope of log(count) against log(T); points with a
/// nonpositive T or count are dropped.
pub fn empirical_exponent(series: &[(f64, f64)]) -> Result<f64> {
    let pts: Vec<(f64, f64)> =
        series.iter().filter(|(t, c)| *t > 0.0 && *c > 0.0).map(|(t, c)| (t.ln(), c.ln())).collect();
    if pts.len() < 3 {
        return Err(domain!("need at least 3 points with positive T and count, got {}", pts.len()));
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(domain!("all T values coincide"));
    }
    Ok(sxy / sxx)
}

/// Short independent relations a_i with ζ^{a_i} = 1: the successive-minima
/// witnesses of the relation lattice, so ∏|a_i| ≤ ord(ζ).
pub fn minkowski_relations<T: IntScalar>(z: &TorsionPoint<T>, cfg: &MinimaConfig) -> Result<SuccessiveMinima<T>> {
    successive_minima(&z.relation_lattice(), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fink(p: u64) -> LaurentPoly<PrimeField> {
        LaurentPoly::parse(FINK_CURVE, PrimeField::new(p).unwrap(), Some(2)).unwrap()
    }

    fn cfg(method: CountMethod) -> CountConfig {
        CountConfig { method, ..CountConfig::default() }
    }

    #[test]
    fn fink_counts_both_routes() {
        for method in [CountMethod::Enumerate, CountMethod::GraphGcd] {
            let c = cfg(method);
            let got: Vec<u64> =
                [1, 3, 7].iter().map(|&t| count_variety_charp(&fink(2), 1, t, &c).unwrap().exact).collect();
            assert_eq!(got, vec![0, 2, 8], "{method:?}");
        }
    }

    #[test]
    fn routes_agree() {
        for p in [2u64, 3, 5] {
            for text in [FINK_CURVE, "x1^2 + x1*x2 + 1", "x2 - x1^3 - x1^-1", "x1^2*x2^-1 + x1 + 1"] {
                let poly = LaurentPoly::parse(text, PrimeField::new(p).unwrap(), Some(2)).unwrap();
                let t = 16;
                let a = count_variety_charp(&poly, 1, t, &cfg(CountMethod::Enumerate)).unwrap();
                let b = count_variety_charp(&poly, 1, t, &cfg(CountMethod::GraphGcd)).unwrap();
                assert_eq!(a.histogram, b.histogram, "p={p} {text}");
            }
        }
    }

    #[test]
    fn k_does_not_change_the_count() {
        let c = cfg(CountMethod::Enumerate);
        for k in 1..=3 {
            assert_eq!(count_variety_charp(&fink(2), k, 7, &c).unwrap().exact, 8);
        }
    }

    #[test]
    fn cap_names_smallest_offender() {
        let c = CountConfig { max_field_bits: 3, method: CountMethod::Enumerate, ..CountConfig::default() };
        let e = count_variety_charp(&fink(2), 1, 7, &c).unwrap_err();
        assert_eq!(e.kind(), "resource");
        assert!(e.message().contains("N = 5"), "{}", e.message());
    }

    #[test]
    fn point_curve() {
        let p = LaurentPoly::parse("x1 - 1", PrimeField::new(3).unwrap(), Some(1)).unwrap();
        for t in [1, 5, 16] {
            assert_eq!(count_variety_charp(&p, 1, t, &CountConfig::default()).unwrap().exact, 1);
        }
    }

    #[test]
    fn fink_reports() {
        let r = verify_fink(2, &[1, 3, 7], &CountConfig::default()).unwrap();
        assert_eq!(r.iter().map(|x| x.exact).collect::<Vec<_>>(), vec![0, 2, 8]);
        assert_eq!(r[0].lower_bound, Some(-1.5));
        assert_eq!(r[2].lower_bound, Some(6.0));
        assert!((r[1].upper_bound.unwrap() - 83.138).abs() < 1e-3);
        assert!(r.iter().all(|x| x.bounds_hold() && x.exact == x.histogram_total()));
    }

    #[test]
    fn lang_weil_examples() {
        let rep = lang_weil_check(&fink(2), 1, 1, &[1, 2, 3], &CountConfig::default()).unwrap();
        let counts: Vec<u64> = rep.rows.iter().map(|r| r.count).collect();
        assert_eq!(counts, vec![0, 2, 6]);
        assert!((rep.rows[2].deviation - 2.0 / 8f64.sqrt()).abs() < 1e-12);
        assert!((rep.rows[0].deviation - 2.0 / 2f64.sqrt()).abs() < 1e-12);
        assert!(!rep.flagged);
        assert!(lang_weil_check(&fink(2), 2, 1, &[3], &CountConfig::default()).is_err());
    }

    #[test]
    fn exponents() {
        let e = |d, delta| bound_exponent::<BigInt>(d, delta).unwrap();
        assert_eq!(e(1, 0), Ratio::new(3.into(), 2.into()));
        assert_eq!(e(2, 1), Ratio::new(5.into(), 2.into()));
        assert_eq!(e(3, 0), Ratio::new(15.into(), 4.into()));
        assert_eq!(bound_exponent::<i64>(3, 3).unwrap(), Ratio::from_integer(3));
        assert!(bound_exponent::<i64>(1, 2).is_err());
        assert_eq!(general_bound_exponent(2), 3);
        assert_eq!(hypersurface_exponent::<i64>(2).unwrap(), Ratio::new(3, 2));
    }

    #[test]
    fn empirical_slopes() {
        let sq: Vec<(f64, f64)> = (1..10).map(|t| (t as f64, (t * t) as f64)).collect();
        assert!((empirical_exponent(&sq).unwrap() - 2.0).abs() < 1e-12);
        let flat: Vec<(f64, f64)> = (1..10).map(|t| (t as f64, 5.0)).collect();
        assert!(empirical_exponent(&flat).unwrap().abs() < 1e-12);
        assert!(empirical_exponent(&[(1.0, 1.0), (2.0, 0.0), (3.0, 2.0)]).is_err());
    }
}
