//! Genuine irreducible representations of split covers, modelled on the
//! effective group `Z^{2r} × μ_n` (valuation and unit exponents, units read
//! modulo `q - 1`).

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::bdinv::{sharp_lattices, BDDatum};
use crate::cover::{
    center, group_commutator, inverse, lagrangian_decomposition, multiply, power, unit_relations, CenterData,
    CoverElement, CoverSpec, LagrangianPair,
};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::localfield::MuN;
use crate::zlattice::{big_vec, cokernel, smith_normal_form, IntMatrix, Lattice, QmodZ};

fn to_i64(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::Overflow(x.to_string()))
}

/// Extends a finite-order character of `h ⊆ g`, given on the basis of `h`, to
/// the basis of `g`. In Smith-adapted coordinates `h'_i = d_i g'_i` and
/// `χ(g'_i)` is the smallest nonnegative solution of `d_i x = χ(h'_i)`; free
/// directions get 0.
pub fn extend_character(g: &Lattice, h: &Lattice, values: &[QmodZ]) -> Result<Vec<QmodZ>> {
    if values.len() != h.rank() {
        return Err(Error::DimensionMismatch(format!(
            "{} values for a subgroup of rank {}",
            values.len(),
            h.rank()
        )));
    }
    if h.rank() == 0 {
        return Ok(vec![QmodZ::ZERO; g.rank()]);
    }
    let rows = h
        .basis()
        .row_vecs()
        .iter()
        .map(|v| g.coords(v).ok_or(Error::NotInSubgroup))
        .collect::<Result<Vec<_>>>()?;
    let k = IntMatrix::from_rows_with_cols(&rows, g.rank());
    let s = smith_normal_form(&k);
    let diag = s.diagonal();
    let adapted: Vec<QmodZ> = (0..g.rank())
        .map(|i| {
            let d = diag.get(i).map(|d| d.abs()).unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                return Ok(QmodZ::ZERO);
            }
            let mut acc = QmodZ::ZERO;
            for (a, v) in values.iter().enumerate() {
                acc = acc + v.times(to_i64(&s.u_inv[(i, a)])?);
            }
            Ok(acc.divide(to_i64(&d)?))
        })
        .collect::<Result<_>>()?;
    (0..g.rank())
        .map(|j| {
            let mut acc = QmodZ::ZERO;
            for (i, x) in adapted.iter().enumerate() {
                acc = acc + x.times(to_i64(&s.v_inv[(j, i)])?);
            }
            Ok(acc)
        })
        .collect()
}

/// The preimage in the cover of a lattice `H ⊆ Z^{2r}` containing the unit
/// relations, required to be abelian. Elements are reached through the
/// section `z ↦ ∏ (h_i, 1)^{a_i}` for `z = Σ a_i h_i`.
#[derive(Clone, Debug)]
pub struct CoverSubgroup {
    spec: CoverSpec,
    lattice: Lattice,
    gens: Vec<CoverElement>,
}

impl CoverSubgroup {
    pub fn new(spec: &CoverSpec, lattice: Lattice) -> Result<Self> {
        if lattice.ambient_rank() != 2 * spec.rank() {
            return Err(Error::DimensionMismatch("subgroup ambient rank".into()));
        }
        if unit_relations(spec).iter().any(|rel| !lattice.contains_i64(rel)) {
            return Err(Error::InvalidDatum("subgroup misses the unit relations".into()));
        }
        let gens: Vec<CoverElement> = lattice
            .basis()
            .to_i64_rows()?
            .iter()
            .map(|z| CoverElement::lift(spec, spec.from_eff(z)))
            .collect();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if !group_commutator(spec, a, b)?.is_one() {
                    return Err(Error::InvalidDatum("subgroup is not abelian".into()));
                }
            }
        }
        Ok(CoverSubgroup {
            spec: spec.clone(),
            lattice,
            gens,
        })
    }

    pub fn spec(&self) -> &CoverSpec {
        &self.spec
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.lattice.basis().to_i64_rows().expect("small generators")
    }

    pub fn contains_eff(&self, z: &[i64]) -> bool {
        self.lattice.contains_i64(z)
    }

    pub fn coords(&self, z: &[i64]) -> Option<Vec<i64>> {
        self.lattice
            .coords(&big_vec(z))
            .and_then(|c| c.iter().map(|x| x.to_i64()).collect())
    }

    pub fn section(&self, z: &[i64]) -> Result<CoverElement> {
        let a = self.coords(z).ok_or(Error::NotInSubgroup)?;
        self.section_from_coords(&a)
    }

    fn section_from_coords(&self, a: &[i64]) -> Result<CoverElement> {
        let mut acc = CoverElement::identity(&self.spec);
        for (g, &k) in self.gens.iter().zip(a) {
            if k != 0 {
                acc = multiply(&self.spec, &acc, &power(&self.spec, g, k)?)?;
            }
        }
        Ok(acc)
    }
}

/// A finite-order character of a [`CoverSubgroup`] restricting to `ε` on
/// `μ_n`. `values[i]` is the value at the canonical lift of the `i`-th basis
/// vector.
#[derive(Clone, Debug)]
pub struct GenuineCharacter {
    group: CoverSubgroup,
    values: Vec<QmodZ>,
}

impl PartialEq for GenuineCharacter {
    fn eq(&self, o: &Self) -> bool {
        self.group.lattice == o.group.lattice && self.values == o.values
    }
}

impl Eq for GenuineCharacter {}

impl GenuineCharacter {
    /// Checks that the character descends from `Z^{2r} × μ_n` to the cover,
    /// i.e. is trivial on the unit relations.
    pub fn new(group: CoverSubgroup, values: Vec<QmodZ>) -> Result<Self> {
        if values.len() != group.rank() {
            return Err(Error::DimensionMismatch("one value per generator".into()));
        }
        let chi = GenuineCharacter { group, values };
        for rel in unit_relations(&chi.group.spec) {
            let v = chi.eval_eff(&rel, 0)?;
            if !v.is_zero() {
                return Err(Error::NotGenuine(format!("value {v} on the unit relation {rel:?}")));
            }
        }
        Ok(chi)
    }

    pub fn group(&self) -> &CoverSubgroup {
        &self.group
    }

    pub fn values(&self) -> &[QmodZ] {
        &self.values
    }

    pub fn eval(&self, x: &CoverElement) -> Result<QmodZ> {
        let z = self.group.spec.to_eff(&x.point);
        self.eval_eff(&z, x.zeta.exponent() as i64)
    }

    /// Value at the element with effective coordinates `z` and `μ_n` part `ζ^k`.
    pub fn eval_eff(&self, z: &[i64], k: i64) -> Result<QmodZ> {
        let a = self.group.coords(z).ok_or(Error::NotInSubgroup)?;
        let s = self.group.section_from_coords(&a)?;
        let mut acc = MuN::new(k, self.group.spec.n()).mul(&s.zeta.inv()).epsilon();
        for (v, &ai) in self.values.iter().zip(&a) {
            acc = acc + v.times(ai);
        }
        Ok(acc)
    }
}

/// A permutation with phases: column `k` has the single entry
/// `exp(2πi phases[k])` in row `perm[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMatrix {
    pub perm: Vec<usize>,
    pub phases: Vec<QmodZ>,
}

impl MonomialMatrix {
    pub fn identity(d: usize) -> Self {
        MonomialMatrix {
            perm: (0..d).collect(),
            phases: vec![QmodZ::ZERO; d],
        }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    /// `self · o`.
    pub fn compose(&self, o: &MonomialMatrix) -> MonomialMatrix {
        MonomialMatrix {
            perm: o.perm.iter().map(|&j| self.perm[j]).collect(),
            phases: o.perm.iter().zip(&o.phases).map(|(&j, &p)| p + self.phases[j]).collect(),
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        self.perm
            .iter()
            .enumerate()
            .filter(|&(k, &j)| k == j)
            .fold(Cyclotomic::zero(1), |acc, (k, _)| {
                let p = self.phases[k];
                acc.add(&Cyclotomic::root_of_unity(p, p.den() as u64))
            })
    }
}

/// `Ind_{M̃}^{T̃} χ_M` in the monomial basis `t_k ⊗ 1` over coset
/// representatives of `T/M†`.
#[derive(Clone, Debug)]
pub struct GenuineIrrep {
    spec: CoverSpec,
    center: CenterData,
    lagrangian: LagrangianPair,
    m_char: GenuineCharacter,
    central_char: GenuineCharacter,
    coset_reps: Vec<Vec<i64>>,
    coset_lifts: Vec<CoverElement>,
    /// Class in `T/Z†` of each coset representative.
    rep_classes: Vec<Vec<u64>>,
    /// Index of the `M†`-coset containing each class of `T/Z†`.
    coset_of: HashMap<Vec<u64>, usize>,
}

impl GenuineIrrep {
    pub fn dimension(&self) -> usize {
        self.coset_reps.len()
    }

    pub fn spec(&self) -> &CoverSpec {
        &self.spec
    }

    pub fn center(&self) -> &CenterData {
        &self.center
    }

    pub fn lagrangian(&self) -> &LagrangianPair {
        &self.lagrangian
    }

    pub fn central_char(&self) -> &GenuineCharacter {
        &self.central_char
    }

    pub fn inducing_char(&self) -> &GenuineCharacter {
        &self.m_char
    }

    pub fn coset_reps(&self) -> &[Vec<i64>] {
        &self.coset_reps
    }

    pub fn matrix(&self, x: &CoverElement) -> Result<MonomialMatrix> {
        let cs = &self.spec;
        let a = self.center.quotient.group();
        let zx = self.center.project(&cs.to_eff(&x.point));
        let d = self.dimension();
        let mut perm = Vec::with_capacity(d);
        let mut phases = Vec::with_capacity(d);
        for k in 0..d {
            let j = self.coset_of[&a.add(&zx, &self.rep_classes[k])];
            let xt = multiply(cs, x, &self.coset_lifts[k])?;
            let inner = multiply(cs, &inverse(cs, &self.coset_lifts[j])?, &xt)?;
            perm.push(j);
            phases.push(self.m_char.eval(&inner)?);
        }
        Ok(MonomialMatrix { perm, phases })
    }

    pub fn matrix_eff(&self, z: &[i64], k: i64) -> Result<MonomialMatrix> {
        self.matrix(&CoverElement::new(self.spec.from_eff(z), MuN::new(k, self.spec.n())))
    }

    /// Matrices of the canonical lifts of the standard basis of `Z^{2r}`.
    pub fn generator_matrices(&self) -> Result<Vec<(Vec<i64>, MonomialMatrix)>> {
        let r2 = 2 * self.spec.rank();
        (0..r2)
            .map(|i| {
                let mut e = vec![0; r2];
                e[i] = 1;
                let m = self.matrix_eff(&e, 0)?;
                Ok((e, m))
            })
            .collect()
    }
}

pub fn build_irrep(spec: &CoverSpec, chi: &GenuineCharacter) -> Result<GenuineIrrep> {
    let c = center(spec)?;
    let pair = lagrangian_decomposition(&c.pairing)?;
    build_irrep_with(spec, chi, c, pair)
}

/// Builds the irrep from a given Lagrangian decomposition of `T/Z†`.
pub fn build_irrep_with(
    spec: &CoverSpec,
    chi: &GenuineCharacter,
    c: CenterData,
    pair: LagrangianPair,
) -> Result<GenuineIrrep> {
    if chi.group().lattice() != &c.zdag {
        return Err(Error::NotGenuine("character is not defined on the center".into()));
    }
    let r2 = 2 * spec.rank();
    let l_lifts: Vec<Vec<i64>> = pair.l.iter().map(|e| c.lift(e)).collect();
    let m_lat = c.zdag.sum(&Lattice::from_vectors(r2, &l_lifts));
    let m_group = CoverSubgroup::new(spec, m_lat)?;

    // χ_M must agree with χ on Z̃; read χ through the section of M̃.
    let targets = c
        .zdag
        .basis()
        .to_i64_rows()?
        .iter()
        .map(|z| chi.eval(&m_group.section(z)?))
        .collect::<Result<Vec<_>>>()?;
    let ext = extend_character(m_group.lattice(), &c.zdag, &targets)?;
    let m_char = GenuineCharacter::new(m_group, ext)?;

    let mut coset_reps: Vec<Vec<i64>> = pair.lstar_elements().iter().map(|a| c.lift(a)).collect();
    coset_reps.sort();
    let a = c.quotient.group();
    let rep_classes: Vec<Vec<u64>> = coset_reps.iter().map(|z| c.project(z)).collect();
    let l_elements = pair.l_elements();
    let mut coset_of = HashMap::new();
    for (j, rc) in rep_classes.iter().enumerate() {
        for l in &l_elements {
            coset_of.insert(a.add(rc, l), j);
        }
    }
    if coset_of.len() as u64 != a.order() {
        return Err(Error::InternalInvariantViolation("cosets of M† do not tile T/Z†".into()));
    }
    let coset_lifts = coset_reps
        .iter()
        .map(|z| CoverElement::lift(spec, spec.from_eff(z)))
        .collect();
    Ok(GenuineIrrep {
        spec: spec.clone(),
        center: c,
        lagrangian: pair,
        m_char,
        central_char: chi.clone(),
        coset_reps,
        coset_lifts,
        rep_classes,
        coset_of,
    })
}

pub fn character_fn(pi: &GenuineIrrep, x: &CoverElement) -> Result<Cyclotomic> {
    Ok(pi.matrix(x)?.trace())
}

/// `zind · χ(x)` on the center and 0 elsewhere.
pub fn expected_character(pi: &GenuineIrrep, x: &CoverElement) -> Result<Cyclotomic> {
    let z = pi.spec.to_eff(&x.point);
    if !pi.center.is_central_eff(&z) {
        return Ok(Cyclotomic::zero(1));
    }
    let v = pi.central_char.eval(x)?;
    Ok(Cyclotomic::root_of_unity(v, v.den() as u64).scale(&BigRational::from_integer(pi.center.zind.into())))
}

/// `(1/#A) Σ_{a ∈ A} |Tr π(a)|²` over `A = T/Z†`. `|Tr|` is constant on
/// `Z̃`-cosets, so this is the norm over any finite quotient through which `π`
/// factors.
pub fn character_norm(pi: &GenuineIrrep) -> Result<BigRational> {
    let a = pi.center.quotient.group().clone();
    let mut total = Cyclotomic::zero(1);
    for x in a.elements() {
        total = total.add(&pi.matrix_eff(&pi.center.lift(&x), 0)?.trace().norm_sq());
    }
    let total = total
        .as_rational()
        .ok_or_else(|| Error::InternalInvariantViolation("norm is not rational".into()))?;
    Ok(total / BigRational::from_integer(a.order().into()))
}

/// Dimension of the `T°`-fixed subspace, `T°` acting through the canonical
/// lifts of the unit points.
pub fn spherical_fixed_dim(pi: &GenuineIrrep) -> Result<usize> {
    let r = pi.spec.rank();
    let gens = (0..r)
        .map(|j| {
            let mut z = vec![0; 2 * r];
            z[r + j] = 1;
            pi.matrix_eff(&z, 0)
        })
        .collect::<Result<Vec<_>>>()?;
    let d = pi.dimension();
    let mut phase: Vec<Option<QmodZ>> = vec![None; d];
    let mut dim = 0;
    for start in 0..d {
        if phase[start].is_some() {
            continue;
        }
        phase[start] = Some(QmodZ::ZERO);
        let mut consistent = true;
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            let pk = phase[k].expect("visited");
            for g in &gens {
                let j = g.perm[k];
                let want = pk + g.phases[k];
                match phase[j] {
                    None => {
                        phase[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(p) if p != want => consistent = false,
                    Some(_) => {}
                }
            }
        }
        if consistent {
            dim += 1;
        }
    }
    Ok(dim)
}

/// `Z† ∩ (0 ⊕ Z^r)`, the unit part of the center.
pub fn unit_center(spec: &CoverSpec, c: &CenterData) -> Lattice {
    let r = spec.rank();
    let units: Vec<Vec<i64>> = (0..r)
        .map(|j| {
            let mut z = vec![0; 2 * r];
            z[r + j] = 1;
            z
        })
        .collect();
    c.zdag.intersect(&Lattice::from_vectors(2 * r, &units))
}

/// `χ` is trivial on the canonical lifts of the unit part of the center.
pub fn is_unramified(spec: &CoverSpec, c: &CenterData, chi: &GenuineCharacter) -> Result<bool> {
    for z in unit_center(spec, c).basis().to_i64_rows()? {
        if !chi.eval_eff(&z, 0)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Genuine characters of `Z̃` whose values on the valuation directions of
/// `Z†/R` lie in `(1/free_denominator) Z/Z`, `R` the unit relations. The
/// torsion of `Z†/R` is covered exhaustively.
pub fn genuine_characters(spec: &CoverSpec, c: &CenterData, free_denominator: u64) -> Result<Vec<GenuineCharacter>> {
    if free_denominator == 0 {
        return Err(Error::InvalidDatum("denominator must be positive".into()));
    }
    let r2 = 2 * spec.rank();
    let z = CoverSubgroup::new(spec, c.zdag.clone())?;
    let rel = Lattice::from_vectors(r2, &unit_relations(spec));
    let rel_rows = rel.basis().to_i64_rows()?;

    // A particular solution: on R the section lands in μ_n.
    let on_rel = rel_rows
        .iter()
        .map(|rho| Ok(z.section(rho)?.zeta.epsilon()))
        .collect::<Result<Vec<_>>>()?;
    let base = extend_character(&c.zdag, &rel, &on_rel)?;

    let cols: Vec<Vec<BigInt>> = rel_rows
        .iter()
        .map(|rho| big_vec(&z.coords(rho).expect("relations are central")))
        .collect();
    let cok = cokernel(&IntMatrix::from_cols(&cols, z.rank()));
    let unit_vecs: Vec<(Vec<u64>, Vec<BigInt>)> = (0..z.rank())
        .map(|j| {
            let mut e = vec![BigInt::zero(); z.rank()];
            e[j] = BigInt::from(1);
            cok.project(&e)
        })
        .collect();
    let tors = cok.group.clone();
    let free = cok.free_rank;
    let free_count = (free_denominator as usize).pow(free as u32);

    let mut out = Vec::with_capacity(tors.order() as usize * free_count);
    for t in tors.elements() {
        for mut idx in 0..free_count {
            let fv: Vec<i64> = (0..free)
                .map(|_| {
                    let k = (idx % free_denominator as usize) as i64;
                    idx /= free_denominator as usize;
                    k
                })
                .collect();
            let values = unit_vecs
                .iter()
                .zip(&base)
                .map(|((tc, fc), b)| {
                    let mut v = *b;
                    for ((&ti, &d), &ci) in t.iter().zip(tors.factors()).zip(tc) {
                        v = v + QmodZ::new(ti as i64, d as i64).times(ci as i64);
                    }
                    for (k, ci) in fv.iter().zip(fc) {
                        v = v + QmodZ::new(*k, free_denominator as i64).times(to_i64(ci)?);
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(GenuineCharacter::new(z.clone(), values)?);
        }
    }
    Ok(out)
}

/// Image of a central character under the parameterization map, together
/// with the size of its fiber.
#[derive(Clone, Debug)]
pub struct PouchData {
    pub core_char: GenuineCharacter,
    pub fiber_size: u64,
}

/// The cover of `T♯` with incarnation `Mᵀ C M`, `M` a basis of `Y♯`, and `M`.
pub fn sharp_cover(spec: &CoverSpec) -> Result<(CoverSpec, IntMatrix)> {
    let m = sharp_lattices(spec.datum()).ysharp.basis().transpose();
    let cs = &(&m.transpose() * spec.datum().incarnation()) * &m;
    let datum = BDDatum::split(cs, spec.n())?;
    Ok((CoverSpec::new(spec.field().clone(), datum)?, m))
}

/// Pulls `χ` back along `T̃♯ → T̃`, `(a, b) ↦ (M a, M b)` in effective
/// coordinates.
pub fn pouch_map(spec: &CoverSpec, chi: &GenuineCharacter) -> Result<PouchData> {
    let c = center(spec)?;
    let (sharp, m) = sharp_cover(spec)?;
    let r = spec.rank();
    let rs = m.cols();
    let group = CoverSubgroup::new(&sharp, Lattice::full(2 * rs))?;
    let mi = m.to_i64_rows()?;
    let image = |e: &[i64]| -> Vec<i64> {
        let (a, b) = e.split_at(rs);
        let mut z: Vec<i64> = (0..r).map(|i| (0..rs).map(|j| mi[i][j] * a[j]).sum()).collect();
        z.extend((0..r).map(|i| (0..rs).map(|j| mi[i][j] * b[j]).sum::<i64>()));
        z
    };
    let values = (0..2 * rs)
        .map(|i| {
            let mut e = vec![0; 2 * rs];
            e[i] = 1;
            chi.eval_eff(&image(&e), 0)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PouchData {
        core_char: GenuineCharacter::new(group, values)?,
        fiber_size: c.cind,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GlobalBoundInput {
    pub is_split: bool,
    pub ker_sha: Option<u64>,
    pub sha_n: Option<u64>,
}

pub fn global_multiplicity_bound(input: &GlobalBoundInput) -> Result<u64> {
    for v in [input.ker_sha, input.sha_n].into_iter().flatten() {
        if v == 0 {
            return Err(Error::InvalidDatum("cardinalities must be at least 1".into()));
        }
    }
    if input.is_split {
        return Ok(1);
    }
    match (input.ker_sha, input.sha_n) {
        (Some(a), Some(b)) => a.checked_mul(b).ok_or_else(|| Error::Overflow("bound".into())),
        (None, _) => Err(Error::MissingInput("ker_sha".into())),
        (_, None) => Err(Error::MissingInput("sha_n".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::localfield::LocalFieldSpec;
    use crate::zlattice::IntMatrix;

    fn spec(q: u64, n: u64, c: &[Vec<i64>]) -> CoverSpec {
        CoverSpec::new(
            LocalFieldSpec::new(q, n).unwrap(),
            BDDatum::split(IntMatrix::from_rows(c), n).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn extension_examples() {
        let g = Lattice::full(1);
        let h = Lattice::from_vectors(1, &[vec![2]]);
        assert_eq!(extend_character(&g, &h, &[QmodZ::new(1, 2)]).unwrap(), vec![QmodZ::new(1, 4)]);
        assert_eq!(extend_character(&g, &h, &[QmodZ::ZERO]).unwrap(), vec![QmodZ::ZERO]);
        assert_eq!(extend_character(&g, &g, &[QmodZ::new(2, 3)]).unwrap(), vec![QmodZ::new(2, 3)]);
        let g2 = Lattice::full(2);
        let h2 = Lattice::from_vectors(2, &[vec![1, 1], vec![0, 3]]);
        let vals = [QmodZ::new(1, 5), QmodZ::new(1, 2)];
        let ext = extend_character(&g2, &h2, &vals).unwrap();
        assert_eq!(ext[0] + ext[1], vals[0]);
        assert_eq!(ext[1].times(3), vals[1]);
    }

    #[test]
    fn irrep_of_the_q5_n4_example() {
        let s = spec(5, 4, &[vec![1]]);
        let c = center(&s).unwrap();
        let chars = genuine_characters(&s, &c, 8).unwrap();
        assert_eq!(chars.len(), 16);
        let unram: Vec<_> = chars
            .iter()
            .filter(|chi| is_unramified(&s, &c, chi).unwrap())
            .collect();
        assert_eq!(unram.len(), 8);
        for chi in &chars {
            let pi = build_irrep(&s, chi).unwrap();
            assert_eq!(pi.dimension(), 2);
            assert_eq!(character_norm(&pi).unwrap(), BigRational::from_integer(1.into()));
            let id = CoverElement::identity(&s);
            assert_eq!(character_fn(&pi, &id).unwrap().as_rational(), Some(BigRational::from_integer(2.into())));
            let want = usize::from(is_unramified(&s, &c, chi).unwrap());
            assert_eq!(spherical_fixed_dim(&pi).unwrap(), want);
        }
    }

    #[test]
    fn sharp_spec_is_one_dimensional() {
        let s = spec(7, 3, &[vec![0]]);
        let c = center(&s).unwrap();
        let chi = genuine_characters(&s, &c, 3).unwrap().remove(0);
        let pi = build_irrep(&s, &chi).unwrap();
        assert_eq!(pi.dimension(), 1);
        assert_eq!(spherical_fixed_dim(&pi).unwrap(), 1);
    }

    #[test]
    fn ungenuine_values_are_rejected() {
        let s = spec(5, 4, &[vec![1]]);
        let c = center(&s).unwrap();
        let z = CoverSubgroup::new(&s, c.zdag.clone()).unwrap();
        let unit_gen = z.generators().iter().position(|g| g[0] == 0).unwrap();
        let mut vals = vec![QmodZ::ZERO; 2];
        vals[unit_gen] = QmodZ::new(1, 4);
        assert!(matches!(GenuineCharacter::new(z, vals), Err(Error::NotGenuine(_))));
    }

    #[test]
    fn pouches() {
        let s = spec(5, 4, &[vec![1]]);
        let c = center(&s).unwrap();
        let chars = genuine_characters(&s, &c, 8).unwrap();
        let images: Vec<_> = chars.iter().map(|chi| pouch_map(&s, chi).unwrap()).collect();
        assert!(images.iter().all(|p| p.fiber_size == 1));
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                assert_ne!(images[i].core_char.values(), images[j].core_char.values());
            }
        }
    }

    #[test]
    fn multiplicity_bounds() {
        let split = GlobalBoundInput {
            is_split: true,
            ..Default::default()
        };
        assert_eq!(global_multiplicity_bound(&split).unwrap(), 1);
        let b = |a, c| GlobalBoundInput {
            is_split: false,
            ker_sha: Some(a),
            sha_n: Some(c),
        };
        assert_eq!(global_multiplicity_bound(&b(1, 1)).unwrap(), 1);
        assert_eq!(global_multiplicity_bound(&b(2, 4)).unwrap(), 8);
        assert!(matches!(
            global_multiplicity_bound(&GlobalBoundInput::default()),
            Err(Error::MissingInput(_))
        ));
    }
}
