//! The genuine spherical Hecke algebra as a twisted group algebra on
//! `Λ = Y♯^σ`, and the two constructions of its cocycle.
//!
//! Elements of `Λ` are given in `Y`-coordinates. For a nonsplit torus the
//! point-level computations run on the split torus `T_Λ` with cocharacter
//! lattice `Λ` and incarnation `Mᵀ C M`, `M` the basis of `Λ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::bdinv::{sharp_lattices, BDDatum};
use crate::cover::{commutator, multiply, CoverElement, CoverSpec};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::localfield::{hilbert, LocalFieldSpec, MuN, TameElement, TorusPoint};
use crate::zlattice::{big_vec, fixed_sublattice, small_vec, IntMatrix, Lattice};

#[derive(Clone, Debug)]
pub struct HeckeSpec {
    field: LocalFieldSpec,
    datum: BDDatum,
    lambda: Lattice,
    /// Cover on which representatives are multiplied: `T` itself when split,
    /// otherwise `T_Λ`.
    cover: CoverSpec,
    through_lambda: bool,
    c: Vec<Vec<i64>>,
}

impl HeckeSpec {
    pub fn new(field: LocalFieldSpec, datum: BDDatum) -> Result<Self> {
        let ys = sharp_lattices(&datum).ysharp;
        let lambda = fixed_sublattice(datum.torus().frobenius())?.intersect(&ys);
        Self::build(field, datum, lambda)
    }

    /// A spec with an arbitrary `Λ`, which need not be `Y♯^σ`. Only meant for
    /// negative controls.
    pub fn with_forced_lattice(field: LocalFieldSpec, datum: BDDatum, lambda: Lattice) -> Result<Self> {
        if lambda.ambient_rank() != datum.rank() {
            return Err(Error::DimensionMismatch("forced lattice rank".into()));
        }
        Self::build(field, datum, lambda)
    }

    fn build(field: LocalFieldSpec, datum: BDDatum, lambda: Lattice) -> Result<Self> {
        if field.n() != datum.n() {
            return Err(Error::InvalidDatum("field and datum disagree on n".into()));
        }
        let c = datum.incarnation().to_i64_rows()?;
        let (cover, through_lambda) = if datum.torus().is_split() {
            (CoverSpec::new(field.clone(), datum.clone())?, false)
        } else {
            let m = lambda.basis().transpose();
            let cl = &(&m.transpose() * datum.incarnation()) * &m;
            (CoverSpec::new(field.clone(), BDDatum::split(cl, datum.n())?)?, true)
        };
        Ok(HeckeSpec {
            field,
            datum,
            lambda,
            cover,
            through_lambda,
            c,
        })
    }

    pub fn field(&self) -> &LocalFieldSpec {
        &self.field
    }

    pub fn datum(&self) -> &BDDatum {
        &self.datum
    }

    pub fn lambda(&self) -> &Lattice {
        &self.lambda
    }

    pub fn n(&self) -> u64 {
        self.field.n()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn contains(&self, y: &[i64]) -> bool {
        y.len() == self.rank() && self.lambda.contains_i64(y)
    }

    fn check(&self, y: &[i64]) -> Result<()> {
        if !self.contains(y) {
            return Err(Error::NotInLattice(y.to_vec()));
        }
        Ok(())
    }

    /// `y` in the coordinates of the torus that carries the representatives.
    fn cover_coords(&self, y: &[i64]) -> Result<Vec<i64>> {
        if !self.through_lambda {
            return Ok(y.to_vec());
        }
        let c = self.lambda.coords(&big_vec(y)).ok_or_else(|| Error::NotInLattice(y.to_vec()))?;
        small_vec(&c)
    }

    /// Elements `Σ k_i b_i` with `|k_i| <= bound` over the basis of `Λ`.
    pub fn elements_within(&self, bound: i64) -> Vec<Vec<i64>> {
        let basis = self.lambda.basis().to_i64_rows().expect("small basis");
        let r = self.rank();
        let mut out = vec![vec![0i64; r]];
        for b in &basis {
            let mut next = Vec::with_capacity(out.len() * (2 * bound as usize + 1));
            for k in -bound..=bound {
                for v in &out {
                    next.push(v.iter().zip(b).map(|(x, bi)| x + k * bi).collect());
                }
            }
            out = next;
        }
        out
    }

    /// Elements of `Λ` whose coordinates in `Y` are bounded by `bound`.
    pub fn coordinate_box(&self, bound: i64) -> Vec<Vec<i64>> {
        let r = self.rank();
        let side = (2 * bound + 1) as usize;
        (0..side.pow(r as u32))
            .map(|mut idx| {
                (0..r)
                    .map(|_| {
                        let v = (idx % side) as i64 - bound;
                        idx /= side;
                        v
                    })
                    .collect::<Vec<i64>>()
            })
            .filter(|y| self.contains(y))
            .collect()
    }
}

fn ycy(c: &[Vec<i64>], y1: &[i64], y2: &[i64]) -> i128 {
    let mut s = 0i128;
    for (i, row) in c.iter().enumerate() {
        for (j, &cij) in row.iter().enumerate() {
            s += cij as i128 * y1[i] as i128 * y2[j] as i128;
        }
    }
    s
}

/// The closed form `(-1)^{y1ᵀ C y2 · (q-1)/n}` read in `μ_n`.
pub fn cocycle_closed(spec: &HeckeSpec, y1: &[i64], y2: &[i64]) -> Result<MuN> {
    spec.check(y1)?;
    spec.check(y2)?;
    let (q, n) = (spec.field.q(), spec.n());
    let parity = (ycy(&spec.c, y1, y2) * ((q - 1) / n) as i128).rem_euclid(2);
    // -1 is the element of order 2 in μ_n; in characteristic 2 it is 1.
    let minus_one = q % 2 == 1 && parity == 1;
    Ok(MuN::new(if minus_one { (n / 2) as i64 } else { 0 }, n))
}

/// Representatives `y(ϖ)` multiplied in the cover; returns the `μ_n` part of
/// `rep(y1) rep(y2) rep(y1 + y2)^{-1}`.
pub fn cocycle_oracle(spec: &HeckeSpec, y1: &[i64], y2: &[i64]) -> Result<MuN> {
    let r = spec.cover.rank();
    cocycle_oracle_with_units(spec, y1, y2, &vec![0; r], &vec![0; r])
}

/// As [`cocycle_oracle`], with representatives `y_i(ϖ) · Θ(g^{k_i})` taken
/// from other `T°`-cosets. `k1`, `k2` are unit exponents in the coordinates of
/// the torus carrying the representatives.
pub fn cocycle_oracle_with_units(
    spec: &HeckeSpec,
    y1: &[i64],
    y2: &[i64],
    k1: &[i64],
    k2: &[i64],
) -> Result<MuN> {
    spec.check(y1)?;
    spec.check(y2)?;
    let cs = &spec.cover;
    let f = &spec.field;
    let (a, b) = (spec.cover_coords(y1)?, spec.cover_coords(y2)?);
    let sum: Vec<i64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
    let rep = |y: &[i64]| CoverElement::lift(cs, TorusPoint::from_cocharacter(y));
    let unit = |k: &[i64]| CoverElement::lift(cs, TorusPoint::new(k.iter().map(|&e| f.unit(e)).collect()));
    let x1 = multiply(cs, &rep(&a), &unit(k1))?;
    let x2 = multiply(cs, &rep(&b), &unit(k2))?;
    let prod = multiply(cs, &x1, &x2)?;
    let k12: Vec<i64> = k1.iter().zip(k2).map(|(x, y)| x + y).collect();
    let target = multiply(cs, &rep(&sum), &unit(&k12))?;
    if prod.point != target.point {
        return Err(Error::InternalInvariantViolation("representatives do not multiply".into()));
    }
    Ok(prod.zeta.mul(&target.zeta.inv()))
}

/// Formal symbols on `G_m = Spec O[υ^{±1}]` tracked by the residue path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormalSymbol {
    /// `{υ, υ}^k`
    UpsilonUpsilon(i128),
    /// `{υ, w}^k` for the unit `w = Θ(g^e)`, stored as `(k, e)`.
    UpsilonUnit(i128, u64),
}

/// Residue map to `O^×`, as an exponent of `g` modulo `q - 1`:
/// `∂{υ, υ} = -1` and `∂{υ, w} = w`.
pub fn residue(field: &LocalFieldSpec, s: FormalSymbol) -> u64 {
    let m = field.unit_order() as i128;
    match s {
        FormalSymbol::UpsilonUpsilon(k) => (k * field.minus_one_exp() as i128).rem_euclid(m) as u64,
        FormalSymbol::UpsilonUnit(k, e) => (k * e as i128).rem_euclid(m) as u64,
    }
}

/// `h_n(w) = Θ(w̄)^{(q-1)/n}` for `w = Θ(g^e)`, i.e. `ζ^e`.
pub fn h_n(field: &LocalFieldSpec, unit_exp: u64) -> MuN {
    MuN::new((unit_exp % field.n()) as i64, field.n())
}

/// The Brylinski–Deligne path: the cocycle of `D°` collects
/// `∏ {υ, υ}^{c_ij ⟨x_i, y1⟩⟨x_j, y2⟩}`, whose residue is pushed out by `h_n`.
pub fn cocycle_bd(spec: &HeckeSpec, y1: &[i64], y2: &[i64]) -> Result<MuN> {
    spec.check(y1)?;
    spec.check(y2)?;
    let sym = FormalSymbol::UpsilonUpsilon(ycy(&spec.c, y1, y2));
    Ok(h_n(&spec.field, residue(&spec.field, sym)))
}

/// Both sides of the automorphism compatibility for `α_{x ⊗ w}` at `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AutomorphismValues {
    /// `Hilb(x(y(ϖ)), w)`.
    pub hilbert_path: MuN,
    /// `h_n(∂{υ, w}^{⟨x, y⟩})`.
    pub residue_path: MuN,
}

impl AutomorphismValues {
    pub fn agree(&self) -> bool {
        self.hilbert_path == self.residue_path
    }
}

pub fn automorphism_action(
    spec: &HeckeSpec,
    x: &[i64],
    w: &TameElement,
    y: &[i64],
) -> Result<AutomorphismValues> {
    if w.val != 0 {
        return Err(Error::InvalidDatum("automorphism parameter must be a unit".into()));
    }
    if x.len() != spec.rank() {
        return Err(Error::DimensionMismatch("character rank".into()));
    }
    spec.check(y)?;
    let f = &spec.field;
    let pairing: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let xt = f.element(pairing, 0);
    let hilbert_path = hilbert(f, &xt, w);
    let residue_path = h_n(f, residue(f, FormalSymbol::UpsilonUnit(pairing as i128, w.unit_exp)));
    Ok(AutomorphismValues {
        hilbert_path,
        residue_path,
    })
}

/// A finitely supported function on `Λ̃` in the basis `δ_y`, `y ∈ Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    n: u64,
    support: BTreeMap<Vec<i64>, Cyclotomic>,
}

impl HeckeElement {
    pub fn zero(n: u64) -> Self {
        HeckeElement {
            n,
            support: BTreeMap::new(),
        }
    }

    pub fn delta(spec: &HeckeSpec, y: &[i64]) -> Result<Self> {
        spec.check(y)?;
        let mut e = Self::zero(spec.n());
        e.add_term(y.to_vec(), Cyclotomic::one(spec.n()));
        Ok(e)
    }

    fn add_term(&mut self, y: Vec<i64>, c: Cyclotomic) {
        let entry = self.support.entry(y.clone()).or_insert_with(|| Cyclotomic::zero(self.n));
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.support.remove(&y);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (y, c) in &o.support {
            out.add_term(y.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.n);
        for (y, v) in &self.support {
            out.add_term(y.clone(), v.mul(c));
        }
        out
    }

    pub fn support(&self) -> &BTreeMap<Vec<i64>, Cyclotomic> {
        &self.support
    }

    pub fn coefficient(&self, y: &[i64]) -> Option<&Cyclotomic> {
        self.support.get(y)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }
}

/// `δ_{y1} ∗ δ_{y2} = ε(ζ^c)^{-1} δ_{y1+y2}` for `rep(y1) rep(y2) = ζ^c rep(y1+y2)`,
/// extended bilinearly.
pub fn convolve(spec: &HeckeSpec, f1: &HeckeElement, f2: &HeckeElement) -> Result<HeckeElement> {
    let n = spec.n();
    let mut out = HeckeElement::zero(n);
    for (y1, a) in &f1.support {
        for (y2, b) in &f2.support {
            let c = cocycle_closed(spec, y1, y2)?;
            let coeff = a.mul(b).mul(&Cyclotomic::zeta_pow(n, -(c.exponent() as i64)));
            out.add_term(y1.iter().zip(y2).map(|(u, v)| u + v).collect(), coeff);
        }
    }
    Ok(out)
}

/// `(y1, y2, c(y1, y2))`.
pub type StructureEntry = (Vec<i64>, Vec<i64>, MuN);

/// Structure constants `c(y1, y2)` as a table.
pub fn structure_table(spec: &HeckeSpec, bound: i64) -> Result<Vec<StructureEntry>> {
    let els = spec.elements_within(bound);
    let mut out = Vec::with_capacity(els.len() * els.len());
    for y1 in &els {
        for y2 in &els {
            out.push((y1.clone(), y2.clone(), cocycle_closed(spec, y1, y2)?));
        }
    }
    Ok(out)
}

/// `δ_{y1} ∗ δ_{y2} = δ_{y2} ∗ δ_{y1}` for all `y` with `|coords| <= bound`
/// over the basis of `Λ`.
pub fn is_commutative(spec: &HeckeSpec, bound: i64) -> Result<bool> {
    let els = spec.elements_within(bound);
    for y1 in &els {
        let d1 = HeckeElement::delta(spec, y1)?;
        for y2 in &els {
            let d2 = HeckeElement::delta(spec, y2)?;
            if convolve(spec, &d1, &d2)? != convolve(spec, &d2, &d1)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For `y ∉ Λ` (split case), a unit point `k` with `commutator(k, y(ϖ)) ≠ 1`,
/// given by its unit exponents.
pub fn support_witness(spec: &HeckeSpec, y: &[i64]) -> Result<Option<Vec<i64>>> {
    if spec.through_lambda {
        return Err(Error::Unsupported("support witnesses on a nonsplit torus".into()));
    }
    let cs = &spec.cover;
    let f = &spec.field;
    let r = cs.rank();
    let m = f.unit_order() as usize;
    let t = TorusPoint::from_cocharacter(y);
    for idx in 0..m.pow(r as u32) {
        let mut rest = idx;
        let k: Vec<i64> = (0..r)
            .map(|_| {
                let e = (rest % m) as i64;
                rest /= m;
                e
            })
            .collect();
        let kp = TorusPoint::new(k.iter().map(|&e| f.unit(e)).collect());
        if !commutator(cs, &kp, &t)?.is_one() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// The incarnation of `T_Λ`, `Mᵀ C M`.
pub fn restricted_incarnation(spec: &HeckeSpec) -> IntMatrix {
    let m = spec.lambda.basis().transpose();
    &(&m.transpose() * spec.datum.incarnation()) * &m
}

/// `β` restricted to `Λ` is integral.
pub fn restriction_is_sharp(spec: &HeckeSpec) -> bool {
    let cl = restricted_incarnation(spec);
    let b = cl.add(&cl.transpose());
    let n = BigInt::from(spec.n());
    (0..b.rows()).all(|i| (0..b.cols()).all(|j| (&b[(i, j)] % &n).to_i64() == Some(0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bdinv::TorusDatum;

    fn spec(q: u64, n: u64, c: &[Vec<i64>]) -> HeckeSpec {
        HeckeSpec::new(
            LocalFieldSpec::new(q, n).unwrap(),
            BDDatum::split(IntMatrix::from_rows(c), n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn cocycle_examples() {
        let s = spec(7, 2, &[vec![1]]);
        for f in [cocycle_closed, cocycle_oracle, cocycle_bd] {
            assert_eq!(f(&s, &[1], &[1]).unwrap().exponent(), 1);
            assert!(f(&s, &[0], &[1]).unwrap().is_one());
        }
        let s = spec(5, 2, &[vec![1]]);
        for f in [cocycle_closed, cocycle_oracle, cocycle_bd] {
            assert!(f(&s, &[1], &[1]).unwrap().is_one());
        }
        let s = spec(13, 4, &[vec![0]]);
        assert!(cocycle_oracle(&s, &[4], &[8]).unwrap().is_one());
    }

    #[test]
    fn off_lattice_is_rejected() {
        let s = spec(5, 4, &[vec![1]]);
        assert!(matches!(cocycle_closed(&s, &[1], &[2]), Err(Error::NotInLattice(_))));
    }

    #[test]
    fn convolution_examples() {
        let s = spec(7, 2, &[vec![1]]);
        let d0 = HeckeElement::delta(&s, &[0]).unwrap();
        let d1 = HeckeElement::delta(&s, &[1]).unwrap();
        let dm1 = HeckeElement::delta(&s, &[-1]).unwrap();
        assert_eq!(convolve(&s, &d0, &d1).unwrap(), d1);
        let sq = convolve(&s, &d1, &d1).unwrap();
        let d2 = HeckeElement::delta(&s, &[2]).unwrap();
        assert_eq!(sq, d2.scale(&Cyclotomic::from_int(2, -1)));
        // (δ_1 + δ_{-1}) ∗ δ_1 = -δ_2 + ε(c(-1,1))^{-1} δ_0, and c(-1, 1) = (-1)^{-3} = -1.
        let lhs = convolve(&s, &d1.add(&dm1), &d1).unwrap();
        let rhs = d2.scale(&Cyclotomic::from_int(2, -1)).add(&d0.scale(&Cyclotomic::from_int(2, -1)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutativity_and_negative_control() {
        assert!(is_commutative(&spec(5, 4, &[vec![1]]), 3).unwrap());
        assert!(is_commutative(&spec(7, 3, &[vec![0]]), 3).unwrap());
        let field = LocalFieldSpec::new(3, 2).unwrap();
        let d = BDDatum::split(IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]), 2).unwrap();
        let forced = HeckeSpec::with_forced_lattice(field, d, Lattice::full(2)).unwrap();
        assert!(!is_commutative(&forced, 1).unwrap());
        // In rank one every forced lattice still commutes: Comm(ϖ^a, ϖ^b) is trivial.
        let field = LocalFieldSpec::new(5, 4).unwrap();
        let d = BDDatum::split(IntMatrix::from_rows(&[vec![1]]), 4).unwrap();
        let forced = HeckeSpec::with_forced_lattice(field, d, Lattice::full(1)).unwrap();
        assert!(is_commutative(&forced, 3).unwrap());
    }

    #[test]
    fn automorphism_examples() {
        let s = spec(7, 3, &[vec![0]]);
        let f = s.field().clone();
        let v = automorphism_action(&s, &[1], &f.unit(1), &[1]).unwrap();
        assert!(v.agree());
        assert_eq!(v.hilbert_path.exponent(), 1);
        assert!(automorphism_action(&s, &[0], &f.unit(1), &[1]).unwrap().hilbert_path.is_one());
        assert!(automorphism_action(&s, &[1], &f.unit(6), &[1]).unwrap().hilbert_path.is_one());
    }

    #[test]
    fn nonsplit_uses_restricted_torus() {
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let d = BDDatum::new(TorusDatum::new(2, swap, 2).unwrap(), IntMatrix::identity(2), 4).unwrap();
        let s = HeckeSpec::new(LocalFieldSpec::new(5, 4).unwrap(), d).unwrap();
        assert_eq!(s.lambda(), &Lattice::from_vectors(2, &[vec![2, 2]]));
        assert!(restriction_is_sharp(&s));
        for y1 in s.elements_within(2) {
            for y2 in s.elements_within(2) {
                let c = cocycle_closed(&s, &y1, &y2).unwrap();
                assert_eq!(cocycle_oracle(&s, &y1, &y2).unwrap(), c);
                assert_eq!(cocycle_bd(&s, &y1, &y2).unwrap(), c);
            }
        }
    }

    #[test]
    fn support_witnesses() {
        let s = spec(5, 4, &[vec![1]]);
        assert!(support_witness(&s, &[1]).unwrap().is_some());
        assert!(support_witness(&s, &[2]).unwrap().is_none());
    }
}
