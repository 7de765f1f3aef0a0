//! The cover `μ_n → T̃ → T` of a split torus, given by the incarnation
//! cocycle `σ(s, t) = ∏ Hilb(x_i(s), x_j(t))^{c_ij}`, together with its
//! commutator pairing, center, central core and Lagrangian decompositions.
//!
//! Center computations take place in the effective group
//! `T_eff = (Z ⊕ Z/(q-1))^r`, coordinates `(v_1..v_r, u_1..u_r)` for the point
//! `(ϖ^{v_i} Θ(g^{u_i}))_i`. As lattices these live in `Z^{2r}` together with
//! the relations `(0, (q-1) e_j)`.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::ToPrimitive;

use crate::bdinv::{sharp_lattices, BDDatum};
use crate::error::{Error, Result};
use crate::localfield::{
    hilbert, hilbert_pairing_t, LocalFieldSpec, MuN, SymbolConvention, TorusPoint,
};
use crate::zlattice::{big_vec, FiniteAbelianGroup, IntMatrix, Lattice, QmodZ, QuotientMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    field: LocalFieldSpec,
    datum: BDDatum,
    c: Vec<Vec<i64>>,
    b: Vec<Vec<i64>>,
}

impl CoverSpec {
    pub fn new(field: LocalFieldSpec, datum: BDDatum) -> Result<Self> {
        if field.n() != datum.n() {
            return Err(Error::InvalidDatum(format!(
                "field has n = {} but the datum has n = {}",
                field.n(),
                datum.n()
            )));
        }
        if !datum.torus().is_split() {
            return Err(Error::Unsupported("point-level arithmetic on a nonsplit torus".into()));
        }
        let c = datum.incarnation().to_i64_rows()?;
        let b = datum.b().to_i64_rows()?;
        Ok(CoverSpec { field, datum, c, b })
    }

    pub fn field(&self) -> &LocalFieldSpec {
        &self.field
    }

    pub fn datum(&self) -> &BDDatum {
        &self.datum
    }

    pub fn rank(&self) -> usize {
        self.c.len()
    }

    pub fn n(&self) -> u64 {
        self.field.n()
    }

    pub fn c(&self) -> &[Vec<i64>] {
        &self.c
    }

    pub fn b(&self) -> &[Vec<i64>] {
        &self.b
    }

    fn check_rank(&self, t: &TorusPoint) -> Result<()> {
        if t.rank() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "point of rank {} on a torus of rank {}",
                t.rank(),
                self.rank()
            )));
        }
        Ok(())
    }

    /// `[v | u]` coordinates of a point.
    pub fn to_eff(&self, t: &TorusPoint) -> Vec<i64> {
        let mut z: Vec<i64> = t.coords.iter().map(|c| c.val).collect();
        z.extend(t.coords.iter().map(|c| c.unit_exp as i64));
        z
    }

    pub fn from_eff(&self, z: &[i64]) -> TorusPoint {
        let r = self.rank();
        assert_eq!(z.len(), 2 * r);
        TorusPoint::new((0..r).map(|i| self.field.element(z[i], z[r + i])).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverElement {
    pub point: TorusPoint,
    pub zeta: MuN,
}

impl CoverElement {
    pub fn new(point: TorusPoint, zeta: MuN) -> Self {
        CoverElement { point, zeta }
    }

    /// The canonical lift `(t, 1)`.
    pub fn lift(spec: &CoverSpec, point: TorusPoint) -> Self {
        CoverElement {
            point,
            zeta: MuN::one(spec.n()),
        }
    }

    pub fn identity(spec: &CoverSpec) -> Self {
        Self::lift(spec, TorusPoint::identity(spec.rank()))
    }

    pub fn central(spec: &CoverSpec, k: i64) -> Self {
        CoverElement {
            point: TorusPoint::identity(spec.rank()),
            zeta: MuN::new(k, spec.n()),
        }
    }
}

pub fn cocycle(spec: &CoverSpec, s: &TorusPoint, t: &TorusPoint) -> Result<MuN> {
    spec.check_rank(s)?;
    spec.check_rank(t)?;
    let f = &spec.field;
    let mut acc = MuN::one(spec.n());
    for (i, row) in spec.c.iter().enumerate() {
        for (j, &cij) in row.iter().enumerate() {
            if cij != 0 {
                acc = acc.mul(&hilbert(f, &s.coords[i], &t.coords[j]).pow(cij));
            }
        }
    }
    Ok(acc)
}

pub fn multiply(spec: &CoverSpec, a: &CoverElement, b: &CoverElement) -> Result<CoverElement> {
    let sigma = cocycle(spec, &a.point, &b.point)?;
    Ok(CoverElement {
        point: spec.field.torus_mul(&a.point, &b.point),
        zeta: a.zeta.mul(&b.zeta).mul(&sigma),
    })
}

pub fn inverse(spec: &CoverSpec, a: &CoverElement) -> Result<CoverElement> {
    let ti = spec.field.torus_inv(&a.point);
    let sigma = cocycle(spec, &a.point, &ti)?;
    Ok(CoverElement {
        point: ti,
        zeta: a.zeta.inv().mul(&sigma.inv()),
    })
}

pub fn power(spec: &CoverSpec, a: &CoverElement, k: i64) -> Result<CoverElement> {
    let mut base = if k < 0 { inverse(spec, a)? } else { a.clone() };
    let mut e = k.unsigned_abs();
    let mut acc = CoverElement::identity(spec);
    while e > 0 {
        if e & 1 == 1 {
            acc = multiply(spec, &acc, &base)?;
        }
        base = multiply(spec, &base, &base)?;
        e >>= 1;
    }
    Ok(acc)
}

/// `a b a^{-1} b^{-1}` computed in the group, returned as an element of `μ_n`.
pub fn group_commutator(spec: &CoverSpec, a: &CoverElement, b: &CoverElement) -> Result<MuN> {
    let ab = multiply(spec, a, b)?;
    let ba = multiply(spec, b, a)?;
    let c = multiply(spec, &ab, &inverse(spec, &ba)?)?;
    debug_assert_eq!(c.point, TorusPoint::identity(spec.rank()));
    Ok(c.zeta)
}

/// `σ(t1, t2) σ(t2, t1)^{-1}`.
pub fn commutator(spec: &CoverSpec, t1: &TorusPoint, t2: &TorusPoint) -> Result<MuN> {
    Ok(cocycle(spec, t1, t2)?.mul(&cocycle(spec, t2, t1)?.inv()))
}

/// `δj : T → T̂`, induced by `B : Y → X`.
pub fn delta_j(spec: &CoverSpec, t: &TorusPoint) -> Result<TorusPoint> {
    spec.check_rank(t)?;
    let f = &spec.field;
    Ok(TorusPoint::new(
        spec.b
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&t.coords)
                    .fold(f.one(), |acc, (&bij, c)| f.mul(&acc, &f.pow(c, bij)))
            })
            .collect(),
    ))
}

/// `Hilb_T(t1, δj t2)`.
pub fn comm_formula(spec: &CoverSpec, t1: &TorusPoint, t2: &TorusPoint) -> Result<MuN> {
    hilbert_pairing_t(&spec.field, t1, &delta_j(spec, t2)?)
}

/// `Hilb_T(t2, δj t1)^{-1}`.
pub fn comm_formula_transposed(spec: &CoverSpec, t1: &TorusPoint, t2: &TorusPoint) -> Result<MuN> {
    Ok(hilbert_pairing_t(&spec.field, t2, &delta_j(spec, t1)?)?.inv())
}

/// Matrix `Ω` on `Z^{2r}` with `commutator(z, z') = ζ^{zᵀ Ω z'}`.
pub fn commutator_form(spec: &CoverSpec) -> IntMatrix {
    let r = spec.rank();
    let h = if spec.field.is_mutated() {
        0
    } else {
        spec.field.minus_one_exp() as i64
    };
    let s = match spec.field.convention() {
        SymbolConvention::Standard => 1,
        SymbolConvention::Inverse => -1,
    };
    let mut om = IntMatrix::zeros(2 * r, 2 * r);
    for i in 0..r {
        for j in 0..r {
            let bij = spec.b[i][j];
            om[(i, j)] = BigInt::from(h * bij);
            om[(i, r + j)] = BigInt::from(-s * bij);
            om[(r + i, j)] = BigInt::from(s * bij);
        }
    }
    om
}

/// A `Q/Z`-valued bilinear form on a finite abelian group, given on
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPairing {
    group: FiniteAbelianGroup,
    matrix: Vec<Vec<QmodZ>>,
}

impl AlternatingPairing {
    pub fn new(group: FiniteAbelianGroup, matrix: Vec<Vec<QmodZ>>) -> Result<Self> {
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch("pairing matrix shape".into()));
        }
        for i in 0..k {
            if !matrix[i][i].is_zero() {
                return Err(Error::DegeneratePairing(format!("generator {i} pairs nontrivially with itself")));
            }
            for j in 0..k {
                if !(matrix[i][j] + matrix[j][i]).is_zero() {
                    return Err(Error::DegeneratePairing(format!("not skew at ({i}, {j})")));
                }
                if !matrix[i][j].times(group.factors()[i] as i64).is_zero() {
                    return Err(Error::DegeneratePairing(format!("not well defined at ({i}, {j})")));
                }
            }
        }
        Ok(AlternatingPairing { group, matrix })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn matrix(&self) -> &[Vec<QmodZ>] {
        &self.matrix
    }

    pub fn eval(&self, a: &[u64], b: &[u64]) -> QmodZ {
        let mut acc = QmodZ::ZERO;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj != 0 {
                    acc = acc + self.matrix[i][j].times((ai * bj) as i64);
                }
            }
        }
        acc
    }

    /// `(ℤ/m)^{2k}` with `ω(e_i, e_{k+i}) = 1/m`.
    pub fn standard(m: u64, k: usize) -> Result<Self> {
        let group = FiniteAbelianGroup::new(vec![m; 2 * k])?;
        let mut matrix = vec![vec![QmodZ::ZERO; 2 * k]; 2 * k];
        for i in 0..k {
            matrix[i][k + i] = QmodZ::new(1, m as i64);
            matrix[k + i][i] = QmodZ::new(-1, m as i64);
        }
        Self::new(group, matrix)
    }
}

/// Elements of `G` ordered with the first coordinate varying fastest.
pub fn colex_elements(g: &FiniteAbelianGroup) -> Vec<Vec<u64>> {
    let f = g.factors();
    (0..g.order() as usize)
        .map(|mut idx| {
            f.iter()
                .map(|&d| {
                    let x = (idx % d as usize) as u64;
                    idx /= d as usize;
                    x
                })
                .collect()
        })
        .collect()
}

/// A pair of isotropic subgroups `L`, `L*` in duality, spanning `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangianPair {
    pub group: FiniteAbelianGroup,
    /// Generators `e_i` of `L`.
    pub l: Vec<Vec<u64>>,
    /// Generators `f_i` of `L*`, with `ω(e_i, f_j) = δ_ij / orders_i`.
    pub lstar: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
}

impl LagrangianPair {
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// The pair with the roles of `L` and `L*` exchanged.
    pub fn swapped(&self) -> LagrangianPair {
        LagrangianPair {
            group: self.group.clone(),
            l: self.lstar.clone(),
            lstar: self.l.clone(),
            orders: self.orders.clone(),
        }
    }

    fn span(&self, gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let g = &self.group;
        let mut out = vec![g.zero()];
        for (e, &m) in gens.iter().zip(&self.orders) {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for k in 0..m {
                let ke = g.scale(e, k as i64);
                next.extend(out.iter().map(|x| g.add(x, &ke)));
            }
            out = next;
        }
        out
    }

    /// Elements of `L` as `Σ k_i e_i`, with coefficients in mixed radix order.
    pub fn l_elements(&self) -> Vec<Vec<u64>> {
        self.span(&self.l)
    }

    pub fn lstar_elements(&self) -> Vec<Vec<u64>> {
        self.span(&self.lstar)
    }

    /// Coefficient vector of `x ∈ L*` with respect to the `f_i`, read off
    /// from the pairing against the `e_i`.
    pub fn lstar_coords(&self, pairing: &AlternatingPairing, x: &[u64]) -> Vec<u64> {
        self.l
            .iter()
            .zip(&self.orders)
            .map(|(e, &m)| {
                let v = pairing.eval(e, x);
                (v.num() * (m as i64 / v.den())) as u64
            })
            .collect()
    }
}

/// Greedy Darboux decomposition: split off a hyperbolic pair `(e, f)` with
/// `e` of maximal order (first in colex order) and `f` the first element with
/// `ω(e, f) = 1/ord(e)`, then recurse on the orthogonal complement.
pub fn lagrangian_decomposition(pairing: &AlternatingPairing) -> Result<LagrangianPair> {
    let g = pairing.group();
    let mut s = colex_elements(g);
    let (mut l, mut lstar, mut orders) = (Vec::new(), Vec::new(), Vec::new());
    while s.len() > 1 {
        let m = s.iter().map(|x| g.element_order(x)).max().unwrap_or(1);
        let e = s.iter().find(|x| g.element_order(x) == m).unwrap().clone();
        let target = QmodZ::new(1, m as i64);
        let f = s
            .iter()
            .find(|x| pairing.eval(&e, x) == target)
            .cloned()
            .ok_or_else(|| Error::DegeneratePairing(format!("{e:?} has no partner")))?;
        s.retain(|x| pairing.eval(x, &e).is_zero() && pairing.eval(x, &f).is_zero());
        l.push(e);
        lstar.push(f);
        orders.push(m);
    }
    Ok(LagrangianPair {
        group: g.clone(),
        l,
        lstar,
        orders,
    })
}

/// Center, central core and the symplectic quotient `T/Z†`.
#[derive(Clone, Debug)]
pub struct CenterData {
    pub omega: IntMatrix,
    /// `Z†` as a lattice in `Z^{2r}` containing the unit relations.
    pub zdag: Lattice,
    /// `Im(T♯ → T)` in the same coordinates.
    pub core: Lattice,
    pub quotient: QuotientMap,
    pub pairing: AlternatingPairing,
    pub zind: u64,
    pub cind: u64,
    n: u64,
}

impl CenterData {
    pub fn zdag_generators(&self) -> Vec<Vec<i64>> {
        self.zdag.basis().to_i64_rows().expect("small generators")
    }

    pub fn core_generators(&self) -> Vec<Vec<i64>> {
        self.core.basis().to_i64_rows().expect("small generators")
    }

    pub fn is_central_eff(&self, z: &[i64]) -> bool {
        self.zdag.contains_i64(z)
    }

    pub fn is_in_core_eff(&self, z: &[i64]) -> bool {
        self.core.contains_i64(z)
    }

    /// Class of an effective point in `T/Z†`.
    pub fn project(&self, z: &[i64]) -> Vec<u64> {
        self.quotient.project(&big_vec(z)).expect("Z^{2r} contains every point")
    }

    /// A representative in `Z^{2r}` of a class of `T/Z†`.
    pub fn lift(&self, a: &[u64]) -> Vec<i64> {
        self.quotient
            .lift(a)
            .iter()
            .map(|x| x.to_i64().expect("small lift"))
            .collect()
    }

    /// `commutator(z, z')` read from `Ω`.
    pub fn form(&self, z: &[i64], w: &[i64]) -> MuN {
        let e: BigInt = big_vec(z)
            .iter()
            .zip(self.omega.mul_vec(&big_vec(w)))
            .map(|(a, b)| a * b)
            .sum();
        let n = BigInt::from(self.n);
        MuN::new(((e % &n + &n) % &n).to_i64().unwrap(), self.n)
    }
}

pub fn unit_relations(spec: &CoverSpec) -> Vec<Vec<i64>> {
    let r = spec.rank();
    let m = spec.field.unit_order() as i64;
    (0..r)
        .map(|j| {
            let mut z = vec![0; 2 * r];
            z[r + j] = m;
            z
        })
        .collect()
}

pub fn center(spec: &CoverSpec) -> Result<CenterData> {
    let r = spec.rank();
    let n = spec.n();
    let omega = commutator_form(spec);
    let zdag = Lattice::kernel_mod(&omega.transpose(), &BigInt::from(n));

    // The model drops the unit relations; they must be central.
    for rel in unit_relations(spec) {
        if !zdag.contains_i64(&rel) {
            return Err(Error::InternalInvariantViolation(
                "commutator does not factor through the effective group".into(),
            ));
        }
    }

    let ys = sharp_lattices(spec.datum()).ysharp;
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for b in ys.basis().row_vecs() {
        let mut v = b.clone();
        v.extend(std::iter::repeat_n(BigInt::from(0), r));
        gens.push(v);
        let mut u = vec![BigInt::from(0); r];
        u.extend(b);
        gens.push(u);
    }
    gens.extend(unit_relations(spec).iter().map(|z| big_vec(z)));
    let core = Lattice::from_generators_rows(&IntMatrix::from_rows_with_cols(&gens, 2 * r));

    let quotient = Lattice::full(2 * r).quotient_map(&zdag)?;
    let a = quotient.group().clone();
    let lifts: Vec<Vec<BigInt>> = (0..a.rank())
        .map(|i| {
            let mut e = a.zero();
            e[i] = 1;
            quotient.lift(&e)
        })
        .collect();
    let ni = BigInt::from(n);
    let matrix = lifts
        .iter()
        .map(|x| {
            let ox = omega.transpose().mul_vec(x);
            lifts
                .iter()
                .map(|y| {
                    let e: BigInt = ox.iter().zip(y).map(|(p, q)| p * q).sum();
                    let e = ((e % &ni) + &ni) % &ni;
                    QmodZ::new(e.to_i64().unwrap(), n as i64)
                })
                .collect()
        })
        .collect();
    let pairing = AlternatingPairing::new(a.clone(), matrix)?;

    let order = a.order();
    let zind = order.sqrt();
    if zind * zind != order {
        return Err(Error::InternalInvariantViolation(format!("#(T/Z†) = {order} is not a square")));
    }
    let cind = zdag
        .index_of(&core)
        .map_err(|e| Error::InternalInvariantViolation(format!("core is not inside the center: {e}")))?
        .to_u64()
        .ok_or_else(|| Error::Overflow("core index".into()))?;
    Ok(CenterData {
        omega,
        zdag,
        core,
        quotient,
        pairing,
        zind,
        cind,
        n,
    })
}

pub fn is_central(spec: &CoverSpec, t: &TorusPoint) -> Result<bool> {
    spec.check_rank(t)?;
    Ok(center(spec)?.is_central_eff(&spec.to_eff(t)))
}

pub fn is_in_core(spec: &CoverSpec, t: &TorusPoint) -> Result<bool> {
    spec.check_rank(t)?;
    Ok(center(spec)?.is_in_core_eff(&spec.to_eff(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(q: u64, n: u64, c: &[Vec<i64>]) -> CoverSpec {
        CoverSpec::new(
            LocalFieldSpec::new(q, n).unwrap(),
            BDDatum::split(IntMatrix::from_rows(c), n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn multiplication_examples() {
        let s = spec(5, 4, &[vec![1]]);
        let w = CoverElement::lift(&s, TorusPoint::new(vec![s.field().uniformizer()]));
        let w2 = multiply(&s, &w, &w).unwrap();
        assert_eq!(w2.point, TorusPoint::new(vec![s.field().element(2, 0)]));
        assert_eq!(w2.zeta.exponent(), 2);

        let s0 = spec(5, 4, &[vec![0]]);
        let a = CoverElement::new(TorusPoint::new(vec![s0.field().uniformizer()]), MuN::new(1, 4));
        let b = CoverElement::new(TorusPoint::new(vec![s0.field().unit(1)]), MuN::new(2, 4));
        assert_eq!(multiply(&s0, &a, &b).unwrap().zeta.exponent(), 3);
    }

    #[test]
    fn inverse_and_identity() {
        let s = spec(13, 6, &[vec![1, 2], vec![0, -1]]);
        let f = s.field();
        let a = CoverElement::new(
            TorusPoint::new(vec![f.element(3, 5), f.element(-2, 7)]),
            MuN::new(4, 6),
        );
        let e = CoverElement::identity(&s);
        assert_eq!(multiply(&s, &a, &inverse(&s, &a).unwrap()).unwrap(), e);
        assert_eq!(multiply(&s, &e, &a).unwrap(), a);
    }

    #[test]
    fn commutator_examples() {
        let s = spec(7, 2, &[vec![1]]);
        let f = s.field();
        let t1 = TorusPoint::new(vec![f.element(1, 2)]);
        let t2 = TorusPoint::new(vec![f.element(3, 1)]);
        assert!(commutator(&s, &t1, &t2).unwrap().is_one());

        let s = spec(5, 4, &[vec![1]]);
        let f = s.field();
        let w = TorusPoint::new(vec![f.uniformizer()]);
        let g = TorusPoint::new(vec![f.unit(1)]);
        let c = commutator(&s, &w, &g).unwrap();
        assert_eq!(c.exponent(), 2);
        assert_eq!(c, hilbert(f, &f.uniformizer(), &f.unit(1)).pow(2));
        assert!(commutator(&s, &w, &w).unwrap().is_one());
        assert_eq!(comm_formula(&s, &w, &g).unwrap(), c);
        assert_eq!(comm_formula_transposed(&s, &w, &g).unwrap(), c);
    }

    #[test]
    fn center_examples() {
        let cd = center(&spec(7, 2, &[vec![1]])).unwrap();
        assert!(cd.quotient.group().is_trivial());
        assert_eq!(cd.zind, 1);

        let cd = center(&spec(5, 4, &[vec![1]])).unwrap();
        assert_eq!(cd.quotient.group().factors(), &[2, 2]);
        assert_eq!(cd.zind, 2);
        assert_eq!(cd.cind, 1);
        assert_eq!(cd.zdag, cd.core);

        let cd = center(&spec(7, 3, &[vec![0, 0], vec![0, 0]])).unwrap();
        assert_eq!(cd.zdag, Lattice::full(4));
    }

    #[test]
    fn membership_examples() {
        let s = spec(5, 4, &[vec![1]]);
        let f = s.field();
        let id = TorusPoint::identity(1);
        assert!(is_central(&s, &id).unwrap() && is_in_core(&s, &id).unwrap());
        assert!(!is_central(&s, &TorusPoint::new(vec![f.uniformizer()])).unwrap());
        assert!(is_central(&s, &TorusPoint::new(vec![f.element(2, 0)])).unwrap());
    }

    #[test]
    fn lagrangian_examples() {
        let triv = AlternatingPairing::new(FiniteAbelianGroup::trivial(), vec![]).unwrap();
        let lp = lagrangian_decomposition(&triv).unwrap();
        assert!(lp.l.is_empty() && lp.lstar.is_empty());

        let lp = lagrangian_decomposition(&AlternatingPairing::standard(2, 1).unwrap()).unwrap();
        assert_eq!(lp.l, vec![vec![1, 0]]);
        assert_eq!(lp.lstar, vec![vec![0, 1]]);

        let lp = lagrangian_decomposition(&AlternatingPairing::standard(4, 1).unwrap()).unwrap();
        assert_eq!(lp.l, vec![vec![1, 0]]);
        assert_eq!(lp.orders, vec![4]);
    }

    #[test]
    fn degenerate_pairing_is_rejected() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let zero = vec![vec![QmodZ::ZERO; 2]; 2];
        let p = AlternatingPairing::new(g, zero).unwrap();
        assert!(matches!(lagrangian_decomposition(&p), Err(Error::DegeneratePairing(_))));
    }

    #[test]
    fn nonsplit_is_unsupported() {
        use crate::bdinv::TorusDatum;
        let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let d = BDDatum::new(TorusDatum::new(2, swap, 2).unwrap(), IntMatrix::identity(2), 2).unwrap();
        let r = CoverSpec::new(LocalFieldSpec::new(5, 2).unwrap(), d);
        assert!(matches!(r, Err(Error::Unsupported(_))));
    }
}
