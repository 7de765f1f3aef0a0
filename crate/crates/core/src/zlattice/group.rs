use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::{integer_kernel, smith_normal_form, solve_integer};
use crate::error::{Error, Result};

/// An element of Q/Z in lowest terms, `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodZ {
    num: i64,
    den: i64,
}

impl QmodZ {
    pub const ZERO: QmodZ = QmodZ { num: 0, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        QmodZ {
            num: num / g,
            den: den / g,
        }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Order of this element in Q/Z.
    pub fn order(&self) -> i64 {
        self.den
    }

    pub fn times(&self, k: i64) -> QmodZ {
        let m = (self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64;
        QmodZ::new(m, self.den)
    }

    /// `self / k` with the smallest nonnegative representative, i.e. the
    /// unique `x` in `[0, 1/k)` with `k x = self`.
    pub fn divide(&self, k: i64) -> QmodZ {
        assert!(k > 0);
        QmodZ::new(self.num, self.den * k)
    }
}

impl std::ops::Add for QmodZ {
    type Output = QmodZ;
    fn add(self, o: QmodZ) -> QmodZ {
        let l = self.den.lcm(&o.den);
        QmodZ::new(self.num * (l / self.den) + o.num * (l / o.den), l)
    }
}

impl std::ops::Neg for QmodZ {
    type Output = QmodZ;
    fn neg(self) -> QmodZ {
        QmodZ::new(-self.num, self.den)
    }
}

impl std::ops::Sub for QmodZ {
    type Output = QmodZ;
    fn sub(self, o: QmodZ) -> QmodZ {
        self + (-o)
    }
}

impl std::iter::Sum for QmodZ {
    fn sum<I: Iterator<Item = QmodZ>>(iter: I) -> QmodZ {
        iter.fold(QmodZ::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for QmodZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QmodZ {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: i64 = n.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: i64 = d.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d <= 0 {
            return Err(format!("denominator must be positive in {s:?}"));
        }
        Ok(QmodZ::new(n, d))
    }
}

/// A finite abelian group `Z/d_1 x ... x Z/d_k` with `d_1 | d_2 | ...`, all `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: vec![] }
    }

    /// Builds the group from invariant factors. Factors equal to 1 are
    /// dropped; the remaining list must be a divisibility chain.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        let factors: Vec<u64> = factors.into_iter().filter(|&d| d != 1).collect();
        if factors.contains(&0) {
            return Err(Error::InvalidDatum("zero invariant factor in a finite group".into()));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidDatum(format!("{factors:?} is not a divisibility chain")));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    /// Group isomorphic to `Z/a_1 x ... x Z/a_k` for arbitrary positive `a_i`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let m = IntMatrix::diagonal(&orders.iter().map(|&a| BigInt::from(a)).collect::<Vec<_>>());
        cokernel(&m).group
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }

    pub fn normalize(&self, x: &[i64]) -> Vec<u64> {
        assert_eq!(x.len(), self.factors.len());
        x.iter()
            .zip(&self.factors)
            .map(|(&a, &d)| a.rem_euclid(d as i64) as u64)
            .collect()
    }

    pub fn normalize_big(&self, x: &[BigInt]) -> Vec<u64> {
        assert_eq!(x.len(), self.factors.len());
        x.iter()
            .zip(&self.factors)
            .map(|(a, &d)| a.mod_floor(&BigInt::from(d)).to_u64().unwrap())
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(&x, &d)| (d - x) % d).collect()
    }

    pub fn scale(&self, a: &[u64], k: i64) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| ((x as i128 * k as i128).rem_euclid(d as i128)) as u64)
            .collect()
    }

    pub fn element_order(&self, a: &[u64]) -> u64 {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &d)| d / x.gcd(&d))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Mixed-radix index in `[0, order)`; the last coordinate varies fastest,
    /// so index order agrees with lexicographic order.
    pub fn index_of(&self, a: &[u64]) -> usize {
        a.iter()
            .zip(&self.factors)
            .fold(0usize, |acc, (&x, &d)| acc * d as usize + x as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (idx % d as usize) as u64;
            idx /= d as usize;
        }
        out
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        (0..self.order() as usize).map(move |i| self.element_at(i))
    }

    /// Order of the `n`-torsion subgroup.
    pub fn torsion_order(&self, n: u64) -> u64 {
        self.factors.iter().map(|&d| d.gcd(&n)).product()
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Cokernel of an integer matrix `m : Z^cols -> Z^rows`.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub group: FiniteAbelianGroup,
    pub free_rank: usize,
    /// `(k + free_rank) x rows`: torsion coordinates first (read modulo the
    /// invariant factors), then free coordinates.
    pub projection: IntMatrix,
    /// `rows x (k + free_rank)`: column `i` is a preimage of generator `i`.
    pub lifts: IntMatrix,
}

impl Cokernel {
    pub fn project(&self, x: &[BigInt]) -> (Vec<u64>, Vec<BigInt>) {
        let y = self.projection.mul_vec(x);
        let k = self.group.rank();
        (self.group.normalize_big(&y[..k]), y[k..].to_vec())
    }

    pub fn project_i64(&self, x: &[i64]) -> Vec<u64> {
        let xb: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.project(&xb).0
    }

    /// A preimage in `Z^rows` of a torsion element.
    pub fn lift(&self, a: &[u64]) -> Vec<BigInt> {
        let mut coeffs = vec![BigInt::zero(); self.lifts.cols()];
        for (c, &v) in coeffs.iter_mut().zip(a) {
            *c = BigInt::from(v);
        }
        self.lifts.mul_vec(&coeffs)
    }
}

pub fn cokernel(m: &IntMatrix) -> Cokernel {
    let s = smith_normal_form(m);
    let diag = s.diagonal();
    let rows = m.rows();
    let mut torsion = Vec::new();
    let mut free = Vec::new();
    for i in 0..rows {
        match diag.get(i) {
            Some(d) if d.is_zero() => free.push(i),
            Some(d) if *d == BigInt::from(1) => {}
            Some(d) => torsion.push((i, d.to_u64().expect("invariant factor fits in u64"))),
            None => free.push(i),
        }
    }
    let order: Vec<usize> = torsion.iter().map(|&(i, _)| i).chain(free.iter().copied()).collect();
    let proj_rows: Vec<Vec<BigInt>> = order.iter().map(|&i| s.u_inv.row(i).to_vec()).collect();
    let lift_cols: Vec<Vec<BigInt>> = order.iter().map(|&i| s.u.col(i)).collect();
    Cokernel {
        group: FiniteAbelianGroup {
            factors: torsion.iter().map(|&(_, d)| d).collect(),
        },
        free_rank: free.len(),
        projection: IntMatrix::from_rows_with_cols(&proj_rows, rows),
        lifts: IntMatrix::from_cols(&lift_cols, rows),
    }
}

/// A homomorphism between finitely generated abelian groups given as
/// products of cyclic groups; an order of 0 denotes a copy of Z. The matrix
/// acts on column vectors of generator coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub domain: Vec<u64>,
    pub codomain: Vec<u64>,
    pub matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(domain: Vec<u64>, codomain: Vec<u64>, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.len() || matrix.cols() != domain.len() {
            return Err(Error::DimensionMismatch(format!(
                "matrix {}x{} for hom {} -> {} generators",
                matrix.rows(),
                matrix.cols(),
                domain.len(),
                codomain.len()
            )));
        }
        // Generator of order d must map into the d-torsion.
        for (j, &d) in domain.iter().enumerate() {
            if d == 0 {
                continue;
            }
            for (i, &c) in codomain.iter().enumerate() {
                let img = &matrix[(i, j)] * BigInt::from(d);
                let ok = if c == 0 { img.is_zero() } else { img.is_multiple_of(&BigInt::from(c)) };
                if !ok {
                    return Err(Error::InvalidDatum(format!(
                        "generator {j} of order {d} does not map to a {d}-torsion element"
                    )));
                }
            }
        }
        Ok(GroupHom { domain, codomain, matrix })
    }

    /// Homomorphism between free groups `Z^cols -> Z^rows`.
    pub fn free(matrix: IntMatrix) -> Self {
        GroupHom {
            domain: vec![0; matrix.cols()],
            codomain: vec![0; matrix.rows()],
            matrix,
        }
    }

    pub fn between(
        domain: &FiniteAbelianGroup,
        codomain: &FiniteAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self> {
        Self::new(domain.factors().to_vec(), codomain.factors().to_vec(), matrix)
    }

    /// `[matrix | diag(codomain orders)]`: its image is the preimage of the
    /// image of `self` in the free cover of the codomain.
    fn augmented(&self) -> IntMatrix {
        let rel = IntMatrix::diagonal(&self.codomain.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
        self.matrix.hstack(&rel)
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix
            .mul_vec(x)
            .into_iter()
            .zip(&self.codomain)
            .map(|(v, &c)| if c == 0 { v } else { v.mod_floor(&BigInt::from(c)) })
            .collect()
    }

    pub fn cokernel(&self) -> Cokernel {
        cokernel(&self.augmented())
    }

    /// Generators (columns, in domain coordinates) of the kernel, including
    /// the domain's own relations.
    pub fn kernel_generators(&self) -> IntMatrix {
        let k = integer_kernel(&self.augmented());
        let n = self.domain.len();
        let rows: Vec<Vec<BigInt>> = (0..n).map(|i| k.row(i).to_vec()).collect();
        IntMatrix::from_rows_with_cols(&rows, k.cols())
    }

    /// Order of the kernel when the domain is finite.
    pub fn kernel_order(&self) -> Option<u64> {
        if self.domain.contains(&0) {
            return None;
        }
        let gens = self.kernel_generators();
        let lat = super::lattice::Lattice::from_generators_cols(&gens);
        let full: BigInt = self.domain.iter().map(|&d| BigInt::from(d)).product();
        let idx = lat.index()?;
        (full / idx).to_u64()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_order() == Some(1)
    }

    pub fn solve_in_image(&self, b: &[BigInt]) -> SolveResult {
        match solve_integer(&self.augmented(), b) {
            None => SolveResult::NotInImage,
            Some(z) => {
                let x = z[..self.domain.len()]
                    .iter()
                    .zip(&self.domain)
                    .map(|(v, &d)| if d == 0 { v.clone() } else { v.mod_floor(&BigInt::from(d)) })
                    .collect();
                SolveResult::Preimage(x)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Preimage(Vec<BigInt>),
    NotInImage,
}

/// Pontryagin dual of a finite abelian group, realized on the same
/// invariant factors with the canonical pairing
/// `<chi, a> = sum_i chi_i a_i / d_i`.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: FiniteAbelianGroup,
}

impl CharacterGroup {
    pub fn evaluate(&self, chi: &[u64], a: &[u64]) -> QmodZ {
        chi.iter()
            .zip(a)
            .zip(self.group.factors())
            .map(|((&c, &x), &d)| QmodZ::new(((c as u128 * x as u128) % d as u128) as i64, d as i64))
            .sum()
    }
}

pub fn character_group(g: &FiniteAbelianGroup) -> CharacterGroup {
    CharacterGroup { group: g.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn qmodz_arithmetic() {
        assert_eq!(QmodZ::new(3, 4) + QmodZ::new(1, 2), QmodZ::new(1, 4));
        assert_eq!(QmodZ::new(-1, 4), QmodZ::new(3, 4));
        assert_eq!(QmodZ::new(1, 2).divide(2), QmodZ::new(1, 4));
        assert_eq!("3/6".parse::<QmodZ>().unwrap(), QmodZ::new(1, 2));
        assert_eq!(QmodZ::new(2, 2).to_string(), "0");
    }

    #[test]
    fn cokernel_examples() {
        let c = cokernel(&IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(c.group.factors(), &[2]);
        assert_eq!(c.free_rank, 0);

        let c = cokernel(&IntMatrix::diagonal(&[2, 4]));
        assert_eq!(c.group.factors(), &[2, 4]);

        let c = cokernel(&IntMatrix::from_rows(&[vec![0]]));
        assert!(c.group.is_trivial());
        assert_eq!(c.free_rank, 1);
    }

    #[test]
    fn cokernel_lifts_project_to_generators() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let c = cokernel(&m);
        assert_eq!(c.group.factors(), &[2, 6, 12]);
        for i in 0..c.group.rank() {
            let mut e = c.group.zero();
            e[i] = 1;
            assert_eq!(c.project(&c.lift(&e)).0, e);
        }
    }

    #[test]
    fn solve_examples() {
        let f = GroupHom::free(IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(f.solve_in_image(&b(&[4])), SolveResult::Preimage(b(&[2])));
        assert_eq!(f.solve_in_image(&b(&[3])), SolveResult::NotInImage);
        let f = GroupHom::free(IntMatrix::diagonal(&[2, 4]));
        assert_eq!(f.solve_in_image(&b(&[2, 2])), SolveResult::NotInImage);
    }

    #[test]
    fn solve_respects_codomain_relations() {
        // x -> 3x from Z to Z/4 is onto.
        let f = GroupHom::new(vec![0], vec![4], IntMatrix::from_rows(&[vec![3]])).unwrap();
        match f.solve_in_image(&b(&[1])) {
            SolveResult::Preimage(x) => assert_eq!(f.apply(&x), b(&[1])),
            SolveResult::NotInImage => panic!(),
        }
    }

    #[test]
    fn ill_defined_hom_is_rejected() {
        // Z/2 -> Z/4 sending the generator to 1 is not well defined.
        assert!(GroupHom::new(vec![2], vec![4], IntMatrix::from_rows(&[vec![1]])).is_err());
        assert!(GroupHom::new(vec![2], vec![4], IntMatrix::from_rows(&[vec![2]])).is_ok());
    }

    #[test]
    fn character_pairings() {
        let d = character_group(&FiniteAbelianGroup::new(vec![2]).unwrap());
        assert_eq!(d.evaluate(&[1], &[1]), QmodZ::new(1, 2));
        let d = character_group(&FiniteAbelianGroup::new(vec![2, 4]).unwrap());
        assert_eq!(d.evaluate(&[0, 1], &[0, 1]), QmodZ::new(1, 4));
        let d = character_group(&FiniteAbelianGroup::trivial());
        assert_eq!(d.group.order(), 1);
        assert_eq!(d.evaluate(&[], &[]), QmodZ::ZERO);
    }

    #[test]
    fn element_indexing_is_lexicographic() {
        let g = FiniteAbelianGroup::new(vec![2, 6]).unwrap();
        let all: Vec<_> = g.elements().collect();
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, e) in all.iter().enumerate() {
            assert_eq!(g.index_of(e), i);
        }
        assert_eq!(g.element_order(&[1, 3]), 2);
        assert_eq!(g.torsion_order(2), 4);
    }
}
