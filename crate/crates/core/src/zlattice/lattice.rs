use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::group::{cokernel, Cokernel, FiniteAbelianGroup};
use super::matrix::IntMatrix;
use super::snf::{hermite_rows, integer_kernel, solve_integer};
use crate::error::{Error, Result};

/// A sublattice of `Z^ambient_rank`, stored by its row Hermite basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Lattice({:?})", self.basis)
    }
}

impl Lattice {
    pub fn full(r: usize) -> Self {
        Lattice {
            ambient_rank: r,
            basis: IntMatrix::identity(r),
        }
    }

    pub fn zero(r: usize) -> Self {
        Lattice {
            ambient_rank: r,
            basis: IntMatrix::zeros(0, r),
        }
    }

    /// `k Z^r`.
    pub fn scaled(r: usize, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(r);
        }
        Self::from_generators_rows(&IntMatrix::identity(r).scale(&k.abs()))
    }

    pub fn from_generators_rows(gens: &IntMatrix) -> Self {
        Lattice {
            ambient_rank: gens.cols(),
            basis: hermite_rows(gens),
        }
    }

    pub fn from_generators_cols(gens: &IntMatrix) -> Self {
        Self::from_generators_rows(&gens.transpose())
    }

    pub fn from_vectors(r: usize, vs: &[Vec<i64>]) -> Self {
        Self::from_generators_rows(&IntMatrix::from_rows_with_cols(vs, r))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// Rows are the basis vectors.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    /// Coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_rank);
        if self.rank() == 0 {
            return v.iter().all(Zero::is_zero).then(Vec::new);
        }
        solve_integer(&self.basis.transpose(), v)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        self.contains(&v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.basis.row_vecs().iter().all(|v| self.contains(v))
    }

    /// `[Z^r : self]`, or `None` if not of full rank.
    pub fn index(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| self.basis.det().abs())
    }

    /// `[self : sub]` for a sublattice of equal rank.
    pub fn index_of(&self, sub: &Lattice) -> Result<BigInt> {
        if !self.contains_lattice(sub) {
            return Err(Error::InvalidDatum("not a sublattice".into()));
        }
        if sub.rank() != self.rank() {
            return Err(Error::InvalidDatum("sublattice of smaller rank has infinite index".into()));
        }
        Ok(self.quotient(sub)?.order().into())
    }

    /// The finite-or-not quotient `self / sub` as a torsion group and free rank.
    pub fn quotient_with_free(&self, sub: &Lattice) -> Result<(FiniteAbelianGroup, usize)> {
        let mut cols = Vec::with_capacity(sub.rank());
        for v in sub.basis.row_vecs() {
            let c = self
                .coords(&v)
                .ok_or_else(|| Error::InvalidDatum("not a sublattice".into()))?;
            cols.push(c);
        }
        let m = IntMatrix::from_cols(&cols, self.rank());
        let ck = cokernel(&m);
        Ok((ck.group, ck.free_rank))
    }

    pub fn quotient(&self, sub: &Lattice) -> Result<FiniteAbelianGroup> {
        let (g, free) = self.quotient_with_free(sub)?;
        if free != 0 {
            return Err(Error::InvalidDatum("quotient is infinite".into()));
        }
        Ok(g)
    }

    pub fn sum(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        Self::from_generators_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Lattice) -> Lattice {
        assert_eq!(self.ambient_rank, other.ambient_rank);
        let (a, b) = (self.rank(), other.rank());
        if a == 0 || b == 0 {
            return Self::zero(self.ambient_rank);
        }
        // Solve x A = y B: kernel of [A; -B]^T.
        let stacked = self.basis.vstack(&other.basis.scale(&-BigInt::one()));
        let k = integer_kernel(&stacked.transpose());
        let gens: Vec<Vec<BigInt>> = (0..k.cols())
            .map(|j| {
                let x: Vec<BigInt> = (0..a).map(|i| k[(i, j)].clone()).collect();
                self.basis.transpose().mul_vec(&x)
            })
            .collect();
        Self::from_generators_rows(&IntMatrix::from_rows_with_cols(&gens, self.ambient_rank))
    }

    /// Image of the lattice under `m` acting on column vectors.
    pub fn image(&self, m: &IntMatrix) -> Lattice {
        let imgs: Vec<Vec<BigInt>> = self.basis.row_vecs().iter().map(|v| m.mul_vec(v)).collect();
        Self::from_generators_rows(&IntMatrix::from_rows_with_cols(&imgs, m.rows()))
    }

    /// `{v in Z^r : m v in target}`.
    pub fn preimage(m: &IntMatrix, target: &Lattice) -> Lattice {
        // v with m v = t B, i.e. kernel of [m | -B^T].
        let r = m.cols();
        let stacked = m.hstack(&target.basis.transpose().scale(&-BigInt::one()));
        let k = integer_kernel(&stacked);
        let gens: Vec<Vec<BigInt>> = (0..k.cols()).map(|j| (0..r).map(|i| k[(i, j)].clone()).collect()).collect();
        Self::from_generators_rows(&IntMatrix::from_rows_with_cols(&gens, r))
    }

    /// `{v : m v ≡ 0 mod k}`.
    pub fn kernel_mod(m: &IntMatrix, k: &BigInt) -> Lattice {
        Self::preimage(m, &Self::scaled(m.rows(), k))
    }

    pub fn is_stable_under(&self, sigma: &IntMatrix) -> bool {
        self.contains_lattice(&self.image(sigma))
    }

    /// The projection `self -> self / sub` with explicit lifts.
    pub fn quotient_map(&self, sub: &Lattice) -> Result<QuotientMap> {
        let mut cols = Vec::with_capacity(sub.rank());
        for v in sub.basis.row_vecs() {
            let c = self
                .coords(&v)
                .ok_or_else(|| Error::InvalidDatum("not a sublattice".into()))?;
            cols.push(c);
        }
        let ck = cokernel(&IntMatrix::from_cols(&cols, self.rank()));
        Ok(QuotientMap {
            outer: self.clone(),
            ck,
        })
    }

    /// Number of classes in `self / sub` fixed by `sigma` (both lattices
    /// sigma-stable, `sub` of full rank in `self`).
    pub fn fixed_point_count(&self, sub: &Lattice, sigma: &IntMatrix) -> Result<BigInt> {
        let r = self.ambient_rank;
        let fixed = self.intersect(&Lattice::preimage(&sigma.sub(&IntMatrix::identity(r)), sub));
        fixed.index_of(sub)
    }
}

/// Quotient of a lattice by a sublattice, with projection and lifting in
/// ambient coordinates.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    outer: Lattice,
    ck: Cokernel,
}

impl QuotientMap {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.ck.group
    }

    pub fn free_rank(&self) -> usize {
        self.ck.free_rank
    }

    /// Torsion class of an ambient vector of the outer lattice.
    pub fn project(&self, v: &[BigInt]) -> Result<Vec<u64>> {
        let c = self
            .outer
            .coords(v)
            .ok_or_else(|| Error::NotInLattice(v.iter().map(|x| x.to_i64().unwrap_or(i64::MAX)).collect()))?;
        Ok(self.ck.project(&c).0)
    }

    /// An ambient representative of a torsion class.
    pub fn lift(&self, a: &[u64]) -> Vec<BigInt> {
        let c = self.ck.lift(a);
        self.outer.basis().transpose().mul_vec(&c)
    }
}

fn check_automorphism(sigma: &IntMatrix) -> Result<()> {
    if !sigma.is_square() {
        return Err(Error::DimensionMismatch("automorphism must be square".into()));
    }
    if !sigma.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    Ok(())
}

/// The sublattice fixed pointwise by `sigma`.
pub fn fixed_sublattice(sigma: &IntMatrix) -> Result<Lattice> {
    check_automorphism(sigma)?;
    let r = sigma.rows();
    let k = integer_kernel(&sigma.sub(&IntMatrix::identity(r)));
    Ok(Lattice::from_generators_cols(&k))
}

/// `H^1(<sigma>, L) = ker(N) / im(sigma - 1)` for `sigma` of order dividing `d`,
/// where `N = 1 + sigma + ... + sigma^{d-1}`. `lattice` must be sigma-stable.
pub fn tate_h1_cyclic(lattice: &Lattice, sigma: &IntMatrix, d: u64) -> Result<FiniteAbelianGroup> {
    check_automorphism(sigma)?;
    let r = sigma.rows();
    if lattice.ambient_rank() != r {
        return Err(Error::DimensionMismatch("lattice and automorphism ranks differ".into()));
    }
    if d == 0 || sigma.pow(d) != IntMatrix::identity(r) {
        return Err(Error::WrongOrder { order: d });
    }
    if !lattice.is_stable_under(sigma) {
        return Err(Error::InvalidDatum("lattice is not sigma-stable".into()));
    }
    // Work in lattice coordinates: sigma restricted to L has matrix S with
    // sigma(b_j) = sum_i S_ij b_i.
    let basis = lattice.basis();
    let k = lattice.rank();
    let mut cols = Vec::with_capacity(k);
    for v in basis.row_vecs() {
        cols.push(lattice.coords(&sigma.mul_vec(&v)).expect("stable lattice"));
    }
    let s = IntMatrix::from_cols(&cols, k);
    let mut norm = IntMatrix::zeros(k, k);
    let mut p = IntMatrix::identity(k);
    for _ in 0..d {
        norm = norm.add(&p);
        p = &p * &s;
    }
    let ker_n = Lattice::from_generators_cols(&integer_kernel(&norm));
    let im = Lattice::full(k).image(&s.sub(&IntMatrix::identity(k)));
    ker_n.quotient(&im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn fixed_sublattice_examples() {
        assert_eq!(fixed_sublattice(&IntMatrix::identity(2)).unwrap(), Lattice::full(2));
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(fixed_sublattice(&swap).unwrap(), Lattice::from_vectors(2, &[vec![1, 1]]));
        assert_eq!(fixed_sublattice(&IntMatrix::from_rows(&[vec![-1]])).unwrap().rank(), 0);
        assert_eq!(
            fixed_sublattice(&IntMatrix::from_rows(&[vec![2]])),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn tate_h1_examples() {
        let h = tate_h1_cyclic(&Lattice::full(1), &IntMatrix::identity(1), 1).unwrap();
        assert!(h.is_trivial());
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert!(tate_h1_cyclic(&Lattice::full(2), &swap, 2).unwrap().is_trivial());
        let neg = IntMatrix::from_rows(&[vec![-1]]);
        assert_eq!(tate_h1_cyclic(&Lattice::full(1), &neg, 2).unwrap().factors(), &[2]);
        assert!(matches!(
            tate_h1_cyclic(&Lattice::full(1), &neg, 3),
            Err(Error::WrongOrder { order: 3 })
        ));
    }

    #[test]
    fn membership_and_index() {
        let l = Lattice::from_vectors(2, &[vec![2, 0], vec![1, 1]]);
        assert!(l.contains(&b(&[3, 1])));
        assert!(!l.contains(&b(&[1, 0])));
        assert_eq!(l.index(), Some(BigInt::from(2)));
        let sub = Lattice::scaled(2, &BigInt::from(2));
        assert_eq!(l.index_of(&sub).unwrap(), BigInt::from(2));
    }

    #[test]
    fn intersections_and_preimages() {
        let a = Lattice::from_vectors(2, &[vec![1, 1]]);
        let b2 = Lattice::scaled(2, &BigInt::from(2));
        assert_eq!(a.intersect(&b2), Lattice::from_vectors(2, &[vec![2, 2]]));
        let m = IntMatrix::from_rows(&[vec![2]]);
        assert_eq!(Lattice::kernel_mod(&m, &BigInt::from(4)), Lattice::from_vectors(1, &[vec![2]]));
    }
}
