//! Lattice-level invariants of a Brylinski–Deligne datum: the bilinear form
//! attached to the quadratic form, the sharp lattices, the finite groups of
//! multiplicative type they determine, the group `R`, and index bounds.
//!
//! Conventions: `Y = Z^r` carries the Frobenius matrix `sigma`; `X = Z^r` is
//! the dual with the contragredient action. A sublattice of `n^{-1} X` is
//! stored by its numerators, i.e. as a sublattice of `Z^r` over the fixed
//! denominator `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::zlattice::{
    fixed_sublattice, tate_h1_cyclic, FiniteAbelianGroup, GroupHom, IntMatrix, Lattice,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusDatum {
    rank: usize,
    frobenius: IntMatrix,
    order: u64,
}

impl TorusDatum {
    pub fn split(rank: usize) -> Self {
        TorusDatum {
            rank,
            frobenius: IntMatrix::identity(rank),
            order: 1,
        }
    }

    pub fn new(rank: usize, frobenius: IntMatrix, order: u64) -> Result<Self> {
        if frobenius.rows() != rank || frobenius.cols() != rank {
            return Err(Error::DimensionMismatch(format!(
                "frobenius is {}x{} for rank {rank}",
                frobenius.rows(),
                frobenius.cols()
            )));
        }
        if !frobenius.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        if order == 0 || frobenius.pow(order) != IntMatrix::identity(rank) {
            return Err(Error::WrongOrder { order });
        }
        Ok(TorusDatum { rank, frobenius, order })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn frobenius(&self) -> &IntMatrix {
        &self.frobenius
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_split(&self) -> bool {
        self.frobenius == IntMatrix::identity(self.rank)
    }

    /// Frobenius action on `X`, the inverse transpose.
    pub fn frobenius_on_x(&self) -> IntMatrix {
        // sigma^{-1} = sigma^{d-1}
        self.frobenius.pow(self.order - 1).transpose()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BDDatum {
    torus: TorusDatum,
    c: IntMatrix,
    n: u64,
}

impl BDDatum {
    pub fn new(torus: TorusDatum, c: IntMatrix, n: u64) -> Result<Self> {
        let r = torus.rank();
        if c.rows() != r || c.cols() != r {
            return Err(Error::DimensionMismatch(format!(
                "incarnation is {}x{} for rank {r}",
                c.rows(),
                c.cols()
            )));
        }
        if n == 0 {
            return Err(Error::InvalidDatum("degree n must be at least 1".into()));
        }
        let b = c.add(&c.transpose());
        let s = torus.frobenius();
        if &(&s.transpose() * &b) * s != b {
            return Err(Error::InvalidDatum("quadratic form is not Frobenius-invariant".into()));
        }
        Ok(BDDatum { torus, c, n })
    }

    pub fn split(c: IntMatrix, n: u64) -> Result<Self> {
        Self::new(TorusDatum::split(c.rows()), c, n)
    }

    pub fn torus(&self) -> &TorusDatum {
        &self.torus
    }

    pub fn rank(&self) -> usize {
        self.torus.rank()
    }

    pub fn incarnation(&self) -> &IntMatrix {
        &self.c
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn n_big(&self) -> BigInt {
        BigInt::from(self.n)
    }

    /// `B = C + C^T`, the integral form `n beta`.
    pub fn b(&self) -> IntMatrix {
        self.c.add(&self.c.transpose())
    }

    pub fn quadratic(&self, y: &[BigInt]) -> BigInt {
        y.iter().zip(self.c.mul_vec(y)).map(|(a, b)| a * b).sum()
    }

    /// The same form on the split torus of the same rank.
    pub fn to_split(&self) -> BDDatum {
        BDDatum {
            torus: TorusDatum::split(self.rank()),
            c: self.c.clone(),
            n: self.n,
        }
    }
}

pub fn beta(d: &BDDatum, y1: &[BigInt], y2: &[BigInt]) -> BigRational {
    let s: Vec<BigInt> = y1.iter().zip(y2).map(|(a, b)| a + b).collect();
    let num = d.quadratic(&s) - d.quadratic(y1) - d.quadratic(y2);
    BigRational::new(num, d.n_big())
}

/// `delta(y) = B y / n` as a rational vector in `n^{-1} X`.
pub fn delta(d: &BDDatum, y: &[BigInt]) -> Vec<BigRational> {
    d.b()
        .mul_vec(y)
        .into_iter()
        .map(|v| BigRational::new(v, d.n_big()))
        .collect()
}

#[derive(Clone, Debug)]
pub struct SharpData {
    pub b: IntMatrix,
    pub ysharp: Lattice,
    /// Numerators of `X♯` over the denominator `n`.
    pub xsharp: Lattice,
    pub n: u64,
}

impl SharpData {
    /// `X` inside `n^{-1} X`, i.e. `n Z^r`.
    pub fn x_lattice(&self) -> Lattice {
        Lattice::scaled(self.b.rows(), &BigInt::from(self.n))
    }

    /// `nY`.
    pub fn ny_lattice(&self) -> Lattice {
        Lattice::scaled(self.b.rows(), &BigInt::from(self.n))
    }

    /// Numerator of `delta(y)`, i.e. `B y`.
    pub fn delta_numerator(&self, y: &[BigInt]) -> Vec<BigInt> {
        self.b.mul_vec(y)
    }
}

pub fn sharp_lattices(d: &BDDatum) -> SharpData {
    let b = d.b();
    let r = d.rank();
    let n = d.n_big();
    let ysharp = Lattice::kernel_mod(&b, &n);
    // x' with <x', y> ≡ 0 mod n for every basis vector y of Y♯.
    let xsharp = if ysharp.rank() == 0 {
        Lattice::full(r)
    } else {
        Lattice::kernel_mod(ysharp.basis(), &n)
    };
    SharpData {
        b,
        ysharp,
        xsharp,
        n: d.n(),
    }
}

pub fn is_sharp(d: &BDDatum) -> bool {
    sharp_lattices(d).ysharp == Lattice::full(d.rank())
}

/// The isomorphism `Y/Y♯ -> X♯/X` induced by `delta`, with the generators
/// used on both sides.
#[derive(Clone, Debug)]
pub struct XqnIsomorphism {
    pub hom: GroupHom,
    pub domain: FiniteAbelianGroup,
    pub codomain: FiniteAbelianGroup,
    /// Representatives in `Y` of the domain generators.
    pub domain_lifts: Vec<Vec<BigInt>>,
    /// Representatives in `n^{-1} X` of the codomain generators.
    pub codomain_lifts: Vec<Vec<BigRational>>,
}

pub fn xqn_isomorphism(d: &BDDatum) -> Result<XqnIsomorphism> {
    let s = sharp_lattices(d);
    let r = d.rank();
    let qy = Lattice::full(r).quotient_map(&s.ysharp)?;
    let qx = s.xsharp.quotient_map(&s.x_lattice())?;
    let (dom, cod) = (qy.group().clone(), qx.group().clone());
    let mut cols = Vec::with_capacity(dom.rank());
    let mut domain_lifts = Vec::with_capacity(dom.rank());
    for i in 0..dom.rank() {
        let mut e = dom.zero();
        e[i] = 1;
        let y = qy.lift(&e);
        let img = qx.project(&s.delta_numerator(&y)).map_err(|_| {
            Error::InternalInvariantViolation("delta(Y) is not contained in X♯".into())
        })?;
        cols.push(img.into_iter().map(BigInt::from).collect::<Vec<_>>());
        domain_lifts.push(y);
    }
    let matrix = IntMatrix::from_cols(&cols, cod.rank());
    let hom = GroupHom::between(&dom, &cod, matrix)
        .map_err(|e| Error::InternalInvariantViolation(format!("delta is not well defined: {e}")))?;
    if dom.order() != cod.order() || !hom.is_injective() {
        return Err(Error::InternalInvariantViolation(format!(
            "delta: {dom} -> {cod} is not bijective"
        )));
    }
    let codomain_lifts = (0..cod.rank())
        .map(|i| {
            let mut e = cod.zero();
            e[i] = 1;
            qx.lift(&e)
                .into_iter()
                .map(|v| BigRational::new(v, d.n_big()))
                .collect()
        })
        .collect();
    Ok(XqnIsomorphism {
        hom,
        domain: dom,
        codomain: cod,
        domain_lifts,
        codomain_lifts,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInvariants {
    pub mu: FiniteAbelianGroup,
    pub nu: FiniteAbelianGroup,
    pub nu_hat: FiniteAbelianGroup,
    pub t_n: FiniteAbelianGroup,
    pub t_hat_n: FiniteAbelianGroup,
}

pub fn finite_invariants(d: &BDDatum) -> Result<FiniteInvariants> {
    let s = sharp_lattices(d);
    let full = Lattice::full(d.rank());
    Ok(FiniteInvariants {
        mu: s.xsharp.quotient(&s.x_lattice())?,
        nu: full.quotient(&s.xsharp)?,
        nu_hat: s.ysharp.quotient(&s.ny_lattice())?,
        t_n: full.quotient(&s.x_lattice())?,
        t_hat_n: full.quotient(&s.ny_lattice())?,
    })
}

/// Character-lattice data of `R = {(t, t̂) : δj(t) = t̂^n}`.
#[derive(Clone, Debug)]
pub struct RGroupData {
    /// Relations of `V = (X ⊕ Y) / <(nδ(y), -ny)>`, one column per basis vector of `Y`,
    /// with the `X` part written in `X`-coordinates (`nδ(y) = B y`).
    pub relations: IntMatrix,
    pub torsion: FiniteAbelianGroup,
    pub free_rank: usize,
    /// `ker(e) / relations`, the character lattice of the component group.
    pub component_group: FiniteAbelianGroup,
    /// Character lattice of `ker p`, i.e. `V / (X ⊕ 0)`.
    pub ker_p: FiniteAbelianGroup,
    /// `x -> (x, 0)`, from `X` to the free cover `X ⊕ Y` of `V`.
    pub map_p: GroupHom,
    /// `(x, y) -> x + δ(y)`, from `X ⊕ Y` to `n^{-1} X` in numerator coordinates.
    pub map_e: GroupHom,
}

pub fn r_group(d: &BDDatum) -> Result<RGroupData> {
    let r = d.rank();
    let n = d.n_big();
    let b = d.b();
    let relations = b.vstack(&IntMatrix::identity(r).scale(&-n.clone()));
    let ck = crate::zlattice::cokernel(&relations);

    let map_e = GroupHom::free(IntMatrix::identity(r).scale(&n).hstack(&b));
    let map_p = GroupHom::free(IntMatrix::identity(r).vstack(&IntMatrix::zeros(r, r)));

    let ker_e = Lattice::from_generators_cols(&map_e.kernel_generators());
    let rel = Lattice::from_generators_cols(&relations);
    let component_group = ker_e.quotient(&rel)?;

    let x_part = Lattice::from_generators_cols(&map_p.matrix);
    let ker_p = Lattice::full(2 * r).quotient(&x_part.sum(&rel))?;

    Ok(RGroupData {
        relations,
        torsion: ck.group,
        free_rank: ck.free_rank,
        component_group,
        ker_p,
        map_p,
        map_e,
    })
}

/// `[Y^σ : Y♯^σ]`.
pub fn zind_lattice(d: &BDDatum) -> Result<u64> {
    let s = sharp_lattices(d);
    let yfix = fixed_sublattice(d.torus().frobenius())?;
    let idx = yfix.index_of(&yfix.intersect(&s.ysharp))?;
    idx.to_u64().ok_or_else(|| Error::Overflow(idx.to_string()))
}

/// Orders of the `F`-points of the groups entering the pouch bound. With
/// `n | q - 1` all `n`-th roots of unity are rational, so the `F`-points of a
/// finite group of multiplicative type are the Frobenius-fixed characters of
/// its character lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CindTerms {
    pub h1_n: u64,
    pub nu_f: u64,
    pub mu_f: u64,
    pub t_hat_n_f: u64,
}

pub fn cind_terms(d: &BDDatum) -> Result<CindTerms> {
    let s = sharp_lattices(d);
    let r = d.rank();
    let sigma_y = d.torus().frobenius();
    let sigma_x = d.torus().frobenius_on_x();
    let full = Lattice::full(r);
    let to_u64 = |v: BigInt| v.to_u64().ok_or_else(|| Error::Overflow(v.to_string()));
    let h1 = tate_h1_cyclic(&full, sigma_y, d.torus().order())?;
    Ok(CindTerms {
        h1_n: h1.torsion_order(d.n()),
        nu_f: to_u64(full.fixed_point_count(&s.xsharp, &sigma_x)?)?,
        mu_f: to_u64(s.xsharp.fixed_point_count(&s.x_lattice(), &sigma_x)?)?,
        t_hat_n_f: to_u64(full.fixed_point_count(&s.ny_lattice(), sigma_y)?)?,
    })
}

/// `#H¹(F,T)_[n] · #ν(F) · #μ(F) / #T̂_[n](F)`.
pub fn cind_bound(d: &BDDatum) -> Result<u64> {
    let t = cind_terms(d)?;
    let num = BigInt::from(t.h1_n) * t.nu_f * t.mu_f;
    let den = BigInt::from(t.t_hat_n_f);
    if !(&num % &den).is_zero() {
        return Err(Error::InternalInvariantViolation(format!(
            "pouch bound {num}/{den} is not integral"
        )));
    }
    let q = num / den;
    if q < BigInt::one() {
        return Err(Error::InternalInvariantViolation("pouch bound below 1".into()));
    }
    q.to_u64().ok_or_else(|| Error::Overflow(q.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zlattice::big_vec;

    fn split(c: &[Vec<i64>], n: u64) -> BDDatum {
        BDDatum::split(IntMatrix::from_rows(c), n).unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn beta_values() {
        let d = split(&[vec![1]], 4);
        assert_eq!(beta(&d, &big_vec(&[1]), &big_vec(&[1])), q(1, 2));
        let d = split(&[vec![1]], 2);
        assert_eq!(beta(&d, &big_vec(&[1]), &big_vec(&[1])), q(1, 1));
        assert_eq!(beta(&d, &big_vec(&[0]), &big_vec(&[5])), q(0, 1));
    }

    #[test]
    fn sharp_lattice_examples() {
        let s = sharp_lattices(&split(&[vec![1]], 2));
        assert_eq!(s.ysharp, Lattice::full(1));
        let s = sharp_lattices(&split(&[vec![1]], 4));
        assert_eq!(s.ysharp, Lattice::from_vectors(1, &[vec![2]]));
        // X♯ = (1/2)Z, numerator 2 over 4.
        assert_eq!(s.xsharp, Lattice::from_vectors(1, &[vec![2]]));
        let s = sharp_lattices(&split(&[vec![0, 0], vec![0, 0]], 3));
        assert_eq!(s.ysharp, Lattice::full(2));
        // Y♯ = Y forces X♯ = X by duality.
        assert_eq!(s.xsharp, Lattice::scaled(2, &BigInt::from(3)));
    }

    #[test]
    fn xqn_examples() {
        let iso = xqn_isomorphism(&split(&[vec![1]], 4)).unwrap();
        assert_eq!(iso.domain.factors(), &[2]);
        assert_eq!(iso.codomain.factors(), &[2]);
        assert_eq!(iso.hom.matrix[(0, 0)], BigInt::from(1));
        // The generator of X♯/X is the class of 1/2.
        let half = &iso.codomain_lifts[0][0] - q(1, 2);
        assert!(half.is_integer());

        let iso = xqn_isomorphism(&split(&[vec![0]], 5)).unwrap();
        assert!(iso.domain.is_trivial() && iso.codomain.is_trivial());

        let iso = xqn_isomorphism(&split(&[vec![1, 0], vec![0, 3]], 3)).unwrap();
        assert_eq!(iso.domain.factors(), &[3]);
        assert_eq!(iso.codomain.factors(), &[3]);
    }

    #[test]
    fn finite_invariant_examples() {
        let f = finite_invariants(&split(&[vec![1]], 4)).unwrap();
        assert_eq!(f.mu.factors(), &[2]);
        assert_eq!(f.nu.factors(), &[2]);
        assert_eq!(f.nu_hat.factors(), &[2]);
        assert_eq!(f.t_n.factors(), &[4]);
        assert_eq!(f.t_hat_n.factors(), &[4]);

        let f = finite_invariants(&split(&[vec![0]], 3)).unwrap();
        assert!(f.mu.is_trivial());
        assert_eq!(f.nu.factors(), &[3]);
        assert_eq!(f.t_hat_n.factors(), &[3]);

        let f = finite_invariants(&split(&[vec![1]], 2)).unwrap();
        assert!(f.mu.is_trivial());
        assert_eq!(f.nu.factors(), &[2]);
    }

    #[test]
    fn r_group_examples() {
        let rg = r_group(&split(&[vec![0, 0], vec![0, 0]], 3)).unwrap();
        assert_eq!(rg.free_rank, 2);
        assert_eq!(rg.component_group.factors(), &[3, 3]);
        assert_eq!(rg.torsion.factors(), &[3, 3]);
        let rg = r_group(&split(&[vec![1]], 4)).unwrap();
        assert_eq!(rg.component_group.factors(), &[2]);
        assert_eq!(rg.ker_p.factors(), &[4]);
        let rg = r_group(&split(&[vec![1]], 2)).unwrap();
        assert_eq!(rg.component_group.factors(), &[2]);
        assert_eq!(rg.free_rank, 1);
    }

    #[test]
    fn sharpness_and_indices() {
        assert!(is_sharp(&split(&[vec![1]], 2)));
        assert!(!is_sharp(&split(&[vec![1]], 4)));
        assert!(is_sharp(&split(&[vec![0]], 7)));
        assert_eq!(zind_lattice(&split(&[vec![1]], 4)).unwrap(), 2);
        assert_eq!(zind_lattice(&split(&[vec![1]], 2)).unwrap(), 1);
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let d = BDDatum::new(
            TorusDatum::new(2, swap, 2).unwrap(),
            IntMatrix::identity(2),
            4,
        )
        .unwrap();
        assert_eq!(zind_lattice(&d).unwrap(), 2);
    }

    #[test]
    fn cind_examples() {
        assert_eq!(cind_bound(&split(&[vec![1]], 2)).unwrap(), 1);
        assert_eq!(cind_bound(&split(&[vec![0, 0], vec![0, 0]], 5)).unwrap(), 1);
        assert_eq!(cind_bound(&split(&[vec![1]], 4)).unwrap(), 1);
        let t = cind_terms(&split(&[vec![1]], 2)).unwrap();
        assert_eq!((t.h1_n, t.nu_f, t.mu_f, t.t_hat_n_f), (1, 2, 1, 2));
    }

    #[test]
    fn invalid_data_are_rejected() {
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let t = TorusDatum::new(2, swap, 2).unwrap();
        assert!(BDDatum::new(t, IntMatrix::from_rows(&[vec![1, 0], vec![0, 0]]), 2).is_err());
        assert!(TorusDatum::new(1, IntMatrix::from_rows(&[vec![-1]]), 1).is_err());
        assert!(BDDatum::split(IntMatrix::from_rows(&[vec![1]]), 0).is_err());
    }
}
