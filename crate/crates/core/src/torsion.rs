//! Torsion points, algebraic subgroups H_Λ and torsion cosets, all modelled
//! by exponent vectors in (ℚ/ℤ)ⁿ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use crate::arith::{is_prime, jordan_totient};
use crate::error::{domain, input, Result};
use crate::intlat::{basis_extension, kernel_basis, IntMatrix, IntegerLattice};
use crate::scalar::{from_u64, modulo, IntScalar};

fn check_characteristic(p: u64) -> Result<()> {
    if p != 0 && !is_prime(p) {
        return Err(domain!("characteristic {p} is neither 0 nor prime"));
    }
    Ok(())
}

/// A point of (𝔾ₘⁿ)_tors written as exponents: coordinate `nums[i]/den`
/// stands for a primitive `den`-th root of unity raised to `nums[i]`. The
/// representation is reduced, so `den` is the order of the point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorsionPoint<T = BigInt> {
    den: T,
    nums: Vec<T>,
    p: u64,
}

impl<T: IntScalar> TorsionPoint<T> {
    /// Point with exponents `nums[i]/den` (any integers, any common denominator).
    pub fn from_parts(den: T, nums: Vec<T>, p: u64) -> Result<Self> {
        check_characteristic(p)?;
        if !den.is_positive() {
            return Err(input!("denominator must be positive"));
        }
        let mut nums: Vec<T> = nums.iter().map(|x| modulo(x, &den)).collect();
        let g = nums.iter().fold(den.clone(), |g, x| g.gcd(x));
        let den = den / g.clone();
        nums.iter_mut().for_each(|x| *x = x.clone() / g.clone());
        if p != 0 && den.is_multiple_of(&from_u64(p)) {
            return Err(domain!(
                "torsion point of order {den} does not exist in characteristic {p}"
            ));
        }
        Ok(Self { den, nums, p })
    }

    pub fn new(coords: &[Ratio<T>], p: u64) -> Result<Self> {
        let den = coords.iter().fold(T::one(), |l, c| l.lcm(c.denom()));
        let nums = coords
            .iter()
            .map(|c| c.numer().clone() * (den.clone() / c.denom().clone()))
            .collect();
        Self::from_parts(den, nums, p)
    }

    pub fn identity(n: usize, p: u64) -> Self {
        Self { den: T::one(), nums: vec![T::zero(); n], p }
    }

    pub fn ambient_dim(&self) -> usize {
        self.nums.len()
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Order = lcm of coordinate denominators.
    pub fn order(&self) -> T {
        self.den.clone()
    }

    pub fn denominator(&self) -> &T {
        &self.den
    }

    pub fn numerators(&self) -> &[T] {
        &self.nums
    }

    pub fn is_identity(&self) -> bool {
        self.den.is_one()
    }

    pub fn coords(&self) -> Vec<Ratio<T>> {
        self.nums.iter().map(|x| Ratio::new(x.clone(), self.den.clone())).collect()
    }

    /// Group law (coordinatewise product of roots of unity).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim() != other.ambient_dim() || self.p != other.p {
            return Err(input!("points live in different tori"));
        }
        let den = self.den.lcm(&other.den);
        let (a, b) = (den.clone() / self.den.clone(), den.clone() / other.den.clone());
        let nums =
            self.nums.iter().zip(&other.nums).map(|(x, y)| x.clone() * a.clone() + y.clone() * b.clone()).collect();
        Self::from_parts(den, nums, self.p)
    }

    pub fn inverse(&self) -> Self {
        let nums = self.nums.iter().map(|x| -x.clone()).collect();
        Self::from_parts(self.den.clone(), nums, self.p).unwrap()
    }

    /// ζ^v as an exponent numerator modulo `den`.
    pub fn pair(&self, v: &[T]) -> T {
        let s = v.iter().zip(&self.nums).fold(T::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
        modulo(&s, &self.den)
    }

    /// ζ^A for an n×m matrix A: coordinate j is Σ_i A_ij ζ_i mod 1.
    pub fn monomial_map(&self, a: &IntMatrix<T>) -> Result<Self> {
        if a.rows() != self.ambient_dim() {
            return Err(input!(
                "matrix has {} rows but the point has {} coordinates",
                a.rows(),
                self.ambient_dim()
            ));
        }
        let nums = (0..a.cols()).map(|j| self.pair(&a.column(j))).collect();
        Self::from_parts(self.den.clone(), nums, self.p)
    }

    /// Λ_ζ = {a ∈ ℤⁿ : ζ^a = 1}.
    pub fn relation_lattice(&self) -> IntegerLattice<T> {
        let n = self.ambient_dim();
        let mut row = self.nums.clone();
        row.push(self.den.clone());
        let k = kernel_basis(&IntMatrix::new(1, n + 1, row).unwrap());
        let gens: Vec<Vec<T>> = k.basis().iter().map(|v| v[..n].to_vec()).collect();
        IntegerLattice::from_generators(n, &gens).unwrap()
    }

    fn lex_cmp(&self, other: &Self) -> Ordering {
        // compare nums[i]/den lexicographically
        for (x, y) in self.nums.iter().zip(&other.nums) {
            let c = (x.clone() * other.den.clone()).cmp(&(y.clone() * self.den.clone()));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }
}

impl<T: IntScalar> PartialOrd for TorsionPoint<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: IntScalar> Ord for TorsionPoint<T> {
    /// By order, then lexicographically by exponent vector.
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.lex_cmp(other))
    }
}

impl<T: IntScalar> fmt::Debug for TorsionPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// H_Λ = {x : x^v = 1 for all v ∈ Λ} with Λ stored p-full.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusSubgroup<T = BigInt> {
    lattice: IntegerLattice<T>,
    p: u64,
}

impl<T: IntScalar> TorusSubgroup<T> {
    pub fn new(lattice: IntegerLattice<T>, p: u64) -> Result<Self> {
        check_characteristic(p)?;
        Ok(Self { lattice: lattice.p_saturation(p), p })
    }

    /// The whole torus 𝔾ₘⁿ (Λ = 0).
    pub fn full_torus(n: usize, p: u64) -> Self {
        Self { lattice: IntegerLattice::zero(n), p }
    }

    /// The trivial group {1} (Λ = ℤⁿ).
    pub fn trivial(n: usize, p: u64) -> Self {
        Self { lattice: IntegerLattice::full(n), p }
    }

    pub fn lattice(&self) -> &IntegerLattice<T> {
        &self.lattice
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    /// dim H_Λ = n − rank Λ.
    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.lattice.rank()
    }

    /// Number of connected components, [Λ̃ : Λ].
    pub fn components(&self) -> T {
        self.lattice.index_in(&self.lattice.saturation()).unwrap()
    }

    pub fn is_connected(&self) -> bool {
        self.lattice.is_primitive()
    }

    /// G⁰ = H_{Λ̃}.
    pub fn identity_component(&self) -> Self {
        Self { lattice: self.lattice.saturation(), p: self.p }
    }

    pub fn contains(&self, x: &TorsionPoint<T>) -> bool {
        x.ambient_dim() == self.ambient_dim() && self.lattice.basis().iter().all(|v| x.pair(v).is_zero())
    }
}

/// ζ·G with a canonical representative: the lexicographically smallest
/// exponent vector among the points of minimal order in the coset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TorsionCoset<T = BigInt> {
    rep: TorsionPoint<T>,
    group: TorusSubgroup<T>,
}

impl<T: IntScalar> fmt::Debug for TorsionCoset<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}·H{:?}", self.rep, self.group.lattice().basis())
    }
}

/// One connected piece η·G⁰ of a coset, before canonicalisation.
struct Piece<T> {
    point: TorsionPoint<T>,
}

impl<T: IntScalar> TorsionCoset<T> {
    pub fn new(rep: TorsionPoint<T>, group: TorusSubgroup<T>) -> Result<Self> {
        if rep.characteristic() != group.characteristic() {
            return Err(input!(
                "representative in characteristic {} but group in characteristic {}",
                rep.characteristic(),
                group.characteristic()
            ));
        }
        if rep.ambient_dim() != group.ambient_dim() {
            return Err(input!("representative and group have different ambient dimensions"));
        }
        let pieces = pieces(&rep, &group);
        let g0 = group.identity_component();
        let best = pieces.iter().map(|p| p.point.order()).min().expect("a coset has at least one piece");
        let rep = pieces
            .iter()
            .filter(|p| p.point.order() == best)
            .map(|p| lex_min_in_component(&p.point, &g0))
            .min()
            .unwrap();
        Ok(Self { rep, group })
    }

    pub fn point(rep: TorsionPoint<T>) -> Self {
        let n = rep.ambient_dim();
        let p = rep.characteristic();
        Self::new(rep, TorusSubgroup::trivial(n, p)).unwrap()
    }

    pub fn rep(&self) -> &TorsionPoint<T> {
        &self.rep
    }

    pub fn group(&self) -> &TorusSubgroup<T> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.group.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.group.ambient_dim()
    }

    pub fn characteristic(&self) -> u64 {
        self.group.characteristic()
    }

    /// ord(ζG): the least order of a point in the coset.
    pub fn order(&self) -> T {
        self.rep.order()
    }

    pub fn contains(&self, x: &TorsionPoint<T>) -> bool {
        x.characteristic() == self.characteristic()
            && x.ambient_dim() == self.ambient_dim()
            && self.group.contains(&x.mul(&self.rep.inverse()).unwrap())
    }

    /// The [G:G⁰] cosets of G⁰ making up this coset, each canonical.
    pub fn connected_pieces(&self) -> Vec<TorsionCoset<T>> {
        let g0 = self.group.identity_component();
        let mut out: Vec<TorsionCoset<T>> = pieces(&self.rep, &self.group)
            .into_iter()
            .map(|p| TorsionCoset::new(p.point, g0.clone()).unwrap())
            .collect();
        out.sort_by(|a, b| a.rep.cmp(&b.rep));
        out
    }

    /// Orders of the connected pieces (with multiplicity).
    pub fn piece_orders(&self) -> Vec<T> {
        pieces(&self.rep, &self.group).into_iter().map(|p| p.point.order()).collect()
    }
}

/// Through ψ(x) = Bᵀx with B from the basis extension of Λ the coset becomes
/// ∏_{i≤r} (y_i + (1/α_i)ℤ) × 𝔾ₘ^d; each choice of offsets is one piece,
/// whose point of least order is (η, 0).
fn pieces<T: IntScalar>(rep: &TorsionPoint<T>, group: &TorusSubgroup<T>) -> Vec<Piece<T>> {
    let be = basis_extension(group.lattice());
    let n = rep.ambient_dim();
    let p = rep.characteristic();
    let r = be.divisors.len();
    let y = rep.monomial_map(&be.matrix).unwrap();
    let back = be.inverse.clone();
    let alpha = &be.divisors;
    let mut out = Vec::new();
    let mut k: Vec<T> = vec![T::zero(); r];
    loop {
        let den = alpha.iter().fold(y.denominator().clone(), |l, a| l.lcm(a));
        let mut nums: Vec<T> = vec![T::zero(); n];
        for i in 0..r {
            let s = den.clone() / y.denominator().clone();
            let t = den.clone() / alpha[i].clone();
            nums[i] = y.numerators()[i].clone() * s + k[i].clone() * t;
        }
        let eta = TorsionPoint::from_parts(den, nums, p).unwrap();
        out.push(Piece { point: eta.monomial_map(&back).unwrap() });
        // odometer over k ∈ ∏ [0, α_i)
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            k[i] = k[i].clone() + T::one();
            if k[i] < alpha[i] {
                break;
            }
            k[i] = T::zero();
            i += 1;
        }
    }
}

/// Lexicographically smallest point of order dividing ord(x) in x·G⁰, where
/// x is already of least order in that coset.
fn lex_min_in_component<T: IntScalar>(x: &TorsionPoint<T>, g0: &TorusSubgroup<T>) -> TorsionPoint<T> {
    let g = x.order();
    let n = x.ambient_dim();
    let sat = g0.lattice();
    let r = sat.rank();
    // L = {H ∈ ℤⁿ : v·H ≡ 0 (mod g) for v ∈ Λ̃}
    let mut rows: Vec<T> = Vec::with_capacity(r * (n + r));
    for (i, v) in sat.basis().iter().enumerate() {
        rows.extend(v.iter().cloned());
        rows.extend((0..r).map(|j| if i == j { g.clone() } else { T::zero() }));
    }
    let l = if r == 0 {
        IntegerLattice::full(n)
    } else {
        let k = kernel_basis(&IntMatrix::new(r, n + r, rows).unwrap());
        let gens: Vec<Vec<T>> = k.basis().iter().map(|v| v[..n].to_vec()).collect();
        IntegerLattice::from_generators(n, &gens).unwrap()
    };
    let mut h: Vec<T> = x.numerators().to_vec();
    for (b, &pr) in l.basis().iter().zip(l.pivot_rows()) {
        let q = h[pr].div_floor(&b[pr]);
        if !q.is_zero() {
            for (hi, bi) in h.iter_mut().zip(b) {
                *hi = hi.clone() - q.clone() * bi.clone();
            }
        }
    }
    TorsionPoint::from_parts(g, h, x.characteristic()).unwrap()
}

// ---------------------------------------------------------------------------
// counting

/// Σ_{n : lcm(g, n) ≤ T, p ∤ n} J_d(n) for one connected piece of order g.
fn count_piece(g: u64, d: u32, p: u64, t: u64, jd: &[BigInt]) -> BigInt {
    if g > t {
        return BigInt::zero();
    }
    if d == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for n in 1..=t {
        if p != 0 && n % p == 0 {
            continue;
        }
        let l = g / num_integer::gcd(g, n) * n;
        if l <= t {
            acc += &jd[n as usize];
        }
    }
    acc
}

fn to_u64<T: IntScalar>(x: &T, what: &str) -> Result<u64> {
    x.to_u64().ok_or_else(|| domain!("{what} {x} does not fit in 64 bits"))
}

/// Exact number of points of order ≤ T in the coset.
pub fn count_coset_exact<T: IntScalar>(c: &TorsionCoset<T>, t: u64) -> Result<BigInt> {
    let d = c.dim() as u32;
    let p = c.characteristic();
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for o in c.piece_orders() {
        *by_order.entry(to_u64(&o, "coset order")?).or_default() += 1;
    }
    let jd: Vec<BigInt> = if d == 0 {
        Vec::new()
    } else {
        std::iter::once(BigInt::zero()).chain((1..=t).map(|n| jordan_totient(d, n))).collect()
    };
    let mut total = BigInt::zero();
    for (g, mult) in by_order {
        total += count_piece(g, d, p, t, &jd) * mult;
    }
    Ok(total)
}

/// [G:G⁰]·T^{d+1}/ord(C).
pub fn coset_upper_bound<T: IntScalar>(c: &TorsionCoset<T>, t: u64) -> Result<BigRational> {
    let comps = BigInt::from(to_u64(&c.group().components(), "component count")?);
    let ord = BigInt::from(to_u64(&c.order(), "coset order")?);
    let d = c.dim() as u32;
    Ok(BigRational::new(comps * BigInt::from(t).pow(d + 1), ord))
}

// ---------------------------------------------------------------------------
// monomial equations

/// All torsion cosets {x : x^U = ζ} for an n×m matrix U. The cosets are
/// translates of G⁰ = H_{Λ̃} with Λ the column span of U, one per connected
/// component of the solution set; the list is empty when there is no solution.
pub fn solve_monomial_equations<T: IntScalar>(
    u: &IntMatrix<T>,
    zeta: &TorsionPoint<T>,
) -> Result<Vec<TorsionCoset<T>>> {
    let (n, m) = (u.rows(), u.cols());
    if zeta.ambient_dim() != m {
        return Err(input!("right-hand side has {} coordinates, expected {}", zeta.ambient_dim(), m));
    }
    let p = zeta.characteristic();
    let a = u.transpose();
    let s = crate::intlat::smith_normal_form(&a);
    let r = s.rank();
    let zp = zeta.monomial_map(&s.u_inv.transpose())?;
    if (r..m).any(|i| !zp.numerators()[i].is_zero()) {
        return Ok(Vec::new());
    }
    let span = IntegerLattice::from_columns(u);
    let group = TorusSubgroup::new(span.saturation(), p)?;
    let big_n = zp.denominator().clone();
    // solve α_i y_i = ζ'_i on prime-to-p torsion
    let mut bases: Vec<(T, T)> = Vec::with_capacity(r);
    for i in 0..r {
        let alpha = s.invariant_factors[i].clone();
        let free = crate::scalar::strip_prime(&alpha, p);
        let ppart = alpha / free.clone();
        let inv = mod_inverse(&modulo(&ppart, &big_n), &big_n);
        let w = modulo(&(zp.numerators()[i].clone() * inv), &big_n);
        bases.push((w, free));
    }
    let back = s.v_inv.transpose();
    let mut out = Vec::new();
    let mut k: Vec<T> = vec![T::zero(); r];
    loop {
        let den = bases.iter().fold(big_n.clone(), |l, (_, f)| l.lcm(&(f.clone() * big_n.clone())));
        let mut nums = vec![T::zero(); n];
        for i in 0..r {
            let (w, f) = &bases[i];
            // (w/N + k)/f
            let scale = den.clone() / (f.clone() * big_n.clone());
            nums[i] = (w.clone() + k[i].clone() * big_n.clone()) * scale;
        }
        let y = TorsionPoint::from_parts(den, nums, p)?;
        let x = y.monomial_map(&back)?;
        out.push(TorsionCoset::new(x, group.clone())?);
        let mut i = 0;
        loop {
            if i == r {
                out.sort_by(|a, b| a.rep.cmp(&b.rep));
                out.dedup();
                return Ok(out);
            }
            k[i] = k[i].clone() + T::one();
            if k[i] < bases[i].1 {
                break;
            }
            k[i] = T::zero();
            i += 1;
        }
    }
}

fn mod_inverse<T: IntScalar>(a: &T, m: &T) -> T {
    if m.is_one() {
        return T::zero();
    }
    let (g, s, _) = crate::scalar::xgcd(a, m);
    debug_assert!(g.is_one());
    modulo(&s, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[(i64, i64)], p: u64) -> TorsionPoint {
        let c: Vec<BigRational> =
            coords.iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect();
        TorsionPoint::new(&c, p).unwrap()
    }

    fn lat(n: usize, gens: &[&[i64]]) -> IntegerLattice<BigInt> {
        IntegerLattice::from_generators(n, &gens.iter().map(|g| g.iter().map(|&x| x.into()).collect()).collect::<Vec<_>>())
            .unwrap()
    }

    #[test]
    fn point_examples() {
        assert_eq!(pt(&[(1, 2), (1, 3)], 0).order(), BigInt::from(6));
        assert_eq!(pt(&[(0, 1), (0, 1)], 0).order(), BigInt::from(1));
        assert_eq!(pt(&[(1, 5), (2, 5)], 0).order(), BigInt::from(5));
        assert!(TorsionPoint::<BigInt>::new(&[BigRational::new(1.into(), 2.into())], 2).is_err());
    }

    #[test]
    fn monomial_map_examples() {
        let z = pt(&[(1, 6), (0, 1)], 0);
        let a = IntMatrix::from_i64_rows(&[&[2], &[0]]);
        assert_eq!(z.monomial_map(&a).unwrap(), pt(&[(1, 3)], 0));
        assert_eq!(z.monomial_map(&IntMatrix::identity(2)).unwrap(), z);
        let z = pt(&[(1, 5), (2, 5)], 0);
        let a = IntMatrix::from_i64_rows(&[&[1], &[2]]);
        assert!(z.monomial_map(&a).unwrap().is_identity());
    }

    #[test]
    fn relation_lattice_examples() {
        let l = pt(&[(1, 5), (2, 5)], 0).relation_lattice();
        assert_eq!(l, lat(2, &[&[5, 0], &[-2, 1]]));
        assert_eq!(l.index().unwrap(), BigInt::from(5));
        assert_eq!(TorsionPoint::<BigInt>::identity(3, 0).relation_lattice(), IntegerLattice::full(3));
        let l = pt(&[(1, 2), (0, 1)], 0).relation_lattice();
        assert_eq!(l, lat(2, &[&[2, 0], &[0, 1]]));
    }

    #[test]
    fn component_examples() {
        let g = TorusSubgroup::new(lat(2, &[&[2, 0]]), 3).unwrap();
        assert_eq!(g.components(), BigInt::from(2));
        let g = TorusSubgroup::new(lat(2, &[&[2, 3]]), 0).unwrap();
        assert_eq!(g.components(), BigInt::from(1));
        let g = TorusSubgroup::new(lat(1, &[&[2]]), 0).unwrap();
        assert_eq!(g.components(), BigInt::from(2));
        let g = TorusSubgroup::new(lat(1, &[&[2]]), 2).unwrap();
        assert_eq!(g.components(), BigInt::from(1));
    }

    #[test]
    fn coset_order_examples() {
        let g = TorusSubgroup::new(lat(2, &[&[1, 0]]), 0).unwrap();
        let c = TorsionCoset::new(pt(&[(1, 3), (1, 2)], 0), g.clone()).unwrap();
        assert_eq!(c.order(), BigInt::from(3));
        assert_eq!(c.rep(), &pt(&[(1, 3), (0, 1)], 0));
        let c = TorsionCoset::new(TorsionPoint::identity(2, 0), g).unwrap();
        assert_eq!(c.order(), BigInt::from(1));
        let c = TorsionCoset::point(pt(&[(1, 4), (1, 6)], 0));
        assert_eq!(c.order(), BigInt::from(12));
    }

    #[test]
    fn coset_canonical_rep_is_set_invariant() {
        let g = TorusSubgroup::new(lat(2, &[&[1, 1]]), 0).unwrap();
        let a = TorsionCoset::new(pt(&[(1, 5), (0, 1)], 0), g.clone()).unwrap();
        let b = TorsionCoset::new(pt(&[(3, 5), (3, 5)], 0), g.clone()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rep(), &pt(&[(0, 1), (1, 5)], 0));
        assert!(a.contains(&pt(&[(4, 5), (2, 5)], 0)));
        assert!(!a.contains(&pt(&[(3, 5), (2, 5)], 0)));
        // a disconnected group: H = {x : x1^2 = 1}
        let g = TorusSubgroup::new(lat(2, &[&[2, 0]]), 0).unwrap();
        let c = TorsionCoset::new(pt(&[(1, 2), (1, 7)], 0), g).unwrap();
        assert_eq!(c.order(), BigInt::from(1));
        assert_eq!(c.connected_pieces().len(), 2);
    }

    #[test]
    fn count_examples() {
        let full: TorsionCoset = TorsionCoset::new(TorsionPoint::identity(1, 0), TorusSubgroup::full_torus(1, 0)).unwrap();
        assert_eq!(count_coset_exact(&full, 6).unwrap(), BigInt::from(12));
        assert_eq!(coset_upper_bound(&full, 6).unwrap(), BigRational::from(BigInt::from(36)));
        let full2: TorsionCoset = TorsionCoset::new(TorsionPoint::identity(1, 2), TorusSubgroup::full_torus(1, 2)).unwrap();
        assert_eq!(count_coset_exact(&full2, 6).unwrap(), BigInt::from(7));
        let g = TorusSubgroup::new(lat(2, &[&[1, 0]]), 0).unwrap();
        let c = TorsionCoset::new(pt(&[(1, 3), (0, 1)], 0), g).unwrap();
        assert_eq!(count_coset_exact(&c, 2).unwrap(), BigInt::zero());
        assert_eq!(coset_upper_bound(&c, 9).unwrap(), BigRational::from(BigInt::from(27)));
        let z = TorsionCoset::point(pt(&[(1, 3)], 0));
        assert_eq!(coset_upper_bound(&z, 6).unwrap(), BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn solve_examples() {
        let two = IntMatrix::scalar(2, BigInt::from(2));
        let sols = solve_monomial_equations(&two, &TorsionPoint::identity(2, 0)).unwrap();
        assert_eq!(sols.len(), 4);
        assert!(sols.iter().all(|c| c.dim() == 0));
        let col: IntMatrix<BigInt> = IntMatrix::from_i64_rows(&[&[2], &[3]]);
        let sols = solve_monomial_equations(&col, &TorsionPoint::identity(1, 0)).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].dim(), 1);
        assert_eq!(sols[0].group().components(), BigInt::one());
        let sols = solve_monomial_equations(&two, &TorsionPoint::identity(2, 2)).unwrap();
        assert_eq!(sols.len(), 1);
        // x^0 = ζ ≠ 1 has no solution
        let zero = IntMatrix::zeros(1, 1);
        assert!(solve_monomial_equations(&zero, &pt(&[(1, 3)], 0)).unwrap().is_empty());
    }

    #[test]
    fn fixed_width_points() {
        let z: TorsionPoint<i64> = TorsionPoint::from_parts(10, vec![2, 4], 0).unwrap();
        assert_eq!(z.order(), 5);
        assert_eq!(z.relation_lattice().index().unwrap(), 5);
        let _ = Ratio::<i64>::one();
    }
}
