use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{domain, input, Result};
use crate::scalar::{strip_prime, xgcd, IntScalar};

/// Subgroup of ℤⁿ, stored by its canonical column Hermite basis: each basis
/// vector starts (first nonzero entry) strictly below the previous one, that
/// leading entry is positive, and earlier vectors are reduced into
/// `[0, pivot)` at every later pivot row. Two lattices are equal iff their
/// stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntegerLattice<T> {
    ambient_dim: usize,
    basis: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

fn leading(v: &[impl IntScalar]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy<T: IntScalar>(y: &mut [T], a: &T, x: &[T]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi = yi.clone() + a.clone() * xi.clone();
    }
}

impl<T: IntScalar> IntegerLattice<T> {
    /// Lattice generated by arbitrary vectors of length `n`.
    pub fn from_generators(n: usize, gens: &[Vec<T>]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.len() != n) {
            return Err(input!("generator of length {} in ambient dimension {}", g.len(), n));
        }
        let mut gens: Vec<Vec<T>> = gens.iter().filter(|g| leading(g).is_some()).cloned().collect();
        let mut basis: Vec<Vec<T>> = Vec::new();
        let mut pivots = Vec::new();
        for row in 0..n {
            let mut active: Vec<usize> = (0..gens.len()).filter(|&i| !gens[i][row].is_zero()).collect();
            if active.is_empty() {
                continue;
            }
            let head = active.remove(0);
            for &i in &active {
                let (x, y) = (gens[head][row].clone(), gens[i][row].clone());
                let (g, s, r) = if y.is_multiple_of(&x) { (x.clone(), T::one(), T::zero()) } else { xgcd(&x, &y) };
                let (xg, yg) = (x / g.clone(), y / g);
                let a = gens[head].clone();
                let b = gens[i].clone();
                for k in 0..n {
                    gens[head][k] = s.clone() * a[k].clone() + r.clone() * b[k].clone();
                    gens[i][k] = xg.clone() * b[k].clone() - yg.clone() * a[k].clone();
                }
            }
            let mut p = gens.swap_remove(head);
            if p[row].is_negative() {
                p.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push(p);
            pivots.push(row);
            gens.retain(|g| leading(g).is_some());
        }
        for j in 0..basis.len() {
            let pr = pivots[j];
            let pv = basis[j][pr].clone();
            let bj = basis[j].clone();
            for b in basis.iter_mut().take(j) {
                let q = b[pr].div_floor(&pv);
                if !q.is_zero() {
                    axpy(b, &-q, &bj);
                }
            }
        }
        Ok(Self { ambient_dim: n, basis, pivots })
    }

    /// Lattice spanned by the columns of `m`.
    pub fn from_columns(m: &IntMatrix<T>) -> Self {
        Self::from_generators(m.rows(), &m.to_columns()).expect("columns have matching length")
    }

    pub fn zero(n: usize) -> Self {
        Self { ambient_dim: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::scaled(n, T::one())
    }

    /// N·ℤⁿ.
    pub fn scaled(n: usize, c: T) -> Self {
        let gens: Vec<Vec<T>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { c.clone() } else { T::zero() }).collect())
            .collect();
        Self::from_generators(n, &gens).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vec<T>] {
        &self.basis
    }

    /// Row index of each basis vector's leading entry.
    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivots
    }

    /// n×r matrix with the basis as columns.
    pub fn basis_matrix(&self) -> IntMatrix<T> {
        IntMatrix::from_columns(self.ambient_dim, &self.basis).unwrap()
    }

    /// Integer coordinates of `v` in the stored basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let mut v = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (b, &pr) in self.basis.iter().zip(&self.pivots) {
            if v[..pr].iter().any(|x| !x.is_zero()) {
                return None;
            }
            if !v[pr].is_multiple_of(&b[pr]) {
                return None;
            }
            let c = v[pr].clone() / b[pr].clone();
            axpy(&mut v, &-c.clone(), b);
            coords.push(c);
        }
        v.iter().all(|x| x.is_zero()).then_some(coords)
    }

    /// Canonical representative of v + Λ: each pivot coordinate reduced into [0, pivot).
    pub fn reduce(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (b, &pr) in self.basis.iter().zip(&self.pivots) {
            let q = v[pr].div_floor(&b[pr]);
            if !q.is_zero() {
                axpy(&mut v, &-q, b);
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_sublattice_of(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Lattice generated by both.
    pub fn join(&self, other: &Self) -> Self {
        let gens: Vec<Vec<T>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::from_generators(self.ambient_dim, &gens).unwrap()
    }

    /// [ℤⁿ : Λ] for a full-rank lattice.
    pub fn index(&self) -> Result<T> {
        if !self.is_full_rank() {
            return Err(domain!(
                "index is infinite: rank {} < ambient dimension {}",
                self.rank(),
                self.ambient_dim
            ));
        }
        Ok(self.basis.iter().zip(&self.pivots).fold(T::one(), |acc, (b, &p)| acc * b[p].clone()))
    }

    /// [M : Λ] for a lattice M ⊇ Λ of the same rank.
    pub fn index_in(&self, sup: &Self) -> Result<T> {
        if self.rank() != sup.rank() || !self.is_sublattice_of(sup) {
            return Err(domain!("index_in needs a superlattice of the same rank"));
        }
        let cols: Vec<Vec<T>> = self.basis.iter().map(|b| sup.coordinates(b).unwrap()).collect();
        Ok(IntMatrix::from_columns(self.rank(), &cols)?.det()?.abs())
    }

    fn rescaled_divisors(&self, f: impl Fn(&T) -> T) -> Self {
        let b = self.basis_matrix();
        let s = smith_normal_form(&b);
        let gens: Vec<Vec<T>> = s
            .elementary_divisors()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let c = f(a);
                s.u.column(i).into_iter().map(|x| x * c.clone()).collect()
            })
            .collect();
        Self::from_generators(self.ambient_dim, &gens).unwrap()
    }

    /// Λ̃ = (Λ ⊗ ℚ) ∩ ℤⁿ.
    pub fn saturation(&self) -> Self {
        self.rescaled_divisors(|_| T::one())
    }

    /// {v : p^k v ∈ Λ for some k}. For `p = 0` this is Λ itself.
    pub fn p_saturation(&self, p: u64) -> Self {
        if p == 0 {
            return self.clone();
        }
        self.rescaled_divisors(|a| strip_prime(a, p))
    }

    pub fn is_primitive(&self) -> bool {
        self.saturation() == *self
    }

    pub fn is_p_full(&self, p: u64) -> bool {
        self.p_saturation(p) == *self
    }
}

/// B ∈ GLₙ(ℤ) with divisors λ₁ | … | λ_r such that λ_i·B·e_i (i ≤ r) is a basis of Λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExtension<T> {
    pub matrix: IntMatrix<T>,
    pub inverse: IntMatrix<T>,
    pub divisors: Vec<T>,
}

pub fn basis_extension<T: IntScalar>(lattice: &IntegerLattice<T>) -> BasisExtension<T> {
    let s = smith_normal_form(&lattice.basis_matrix());
    let divisors = s.elementary_divisors().to_vec();
    BasisExtension { matrix: s.u, inverse: s.u_inv, divisors }
}

/// Saturated basis of {v ∈ ℤ^cols : A·v = 0}.
pub fn kernel_basis<T: IntScalar>(a: &IntMatrix<T>) -> IntegerLattice<T> {
    let s = smith_normal_form(a);
    let r = s.rank();
    let gens: Vec<Vec<T>> = (r..a.cols()).map(|j| s.v_inv.column(j)).collect();
    IntegerLattice::from_generators(a.cols(), &gens).unwrap()
}
