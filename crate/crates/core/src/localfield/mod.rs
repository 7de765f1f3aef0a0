//! A tame model of a nonarchimedean local field `F` with residue field `F_q`
//! and `n | q - 1`.
//!
//! Elements are taken modulo the principal units `1 + m`, which are uniquely
//! `n`-divisible, so `F^× / (1 + m) = Z × F_q^×`. The cyclic group `F_q^×` is
//! modeled by exponents of a fixed generator `g`; `ζ = g^{(q-1)/n}` generates
//! `μ_n`.

pub mod residue;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::zlattice::QmodZ;

pub use residue::{prime_power, ResidueField};

/// Orientation of the tame symbol on the mixed terms.
///
/// `Standard` uses `c = (-1)^{v(a)v(b)} a^{v(b)} b^{-v(a)}`; `Inverse` inverts
/// the unit part, giving `Hilb(ϖ, w) = Θ(w̄)^{(q-1)/n}`. Both agree on
/// `Hilb(ϖ, ϖ)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SymbolConvention {
    Standard,
    #[default]
    Inverse,
}

impl FromStr for SymbolConvention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "standard" => Ok(SymbolConvention::Standard),
            "inverse" => Ok(SymbolConvention::Inverse),
            other => Err(format!("unknown symbol convention {other:?}")),
        }
    }
}

impl fmt::Display for SymbolConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymbolConvention::Standard => "standard",
            SymbolConvention::Inverse => "inverse",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalFieldSpec {
    q: u64,
    n: u64,
    convention: SymbolConvention,
    drop_sign: bool,
}

/// An element of `F^× / (1 + m)`: `ϖ^val · Θ(g^unit_exp)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TameElement {
    pub val: i64,
    pub unit_exp: u64,
}

/// `ζ^exponent` in `μ_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MuN {
    exponent: u64,
    n: u64,
}

impl MuN {
    pub fn new(exponent: i64, n: u64) -> Self {
        assert!(n >= 1);
        MuN {
            exponent: exponent.rem_euclid(n as i64) as u64,
            n,
        }
    }

    pub fn one(n: u64) -> Self {
        MuN { exponent: 0, n }
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0
    }

    pub fn mul(&self, o: &MuN) -> MuN {
        assert_eq!(self.n, o.n, "roots of unity of different orders");
        MuN::new((self.exponent + o.exponent) as i64, self.n)
    }

    pub fn inv(&self) -> MuN {
        MuN::new(-(self.exponent as i64), self.n)
    }

    pub fn pow(&self, k: i64) -> MuN {
        let n = self.n as i128;
        MuN::new((self.exponent as i128 * k as i128).rem_euclid(n) as i64, self.n)
    }

    /// `ε(ζ^k) = k/n`.
    pub fn epsilon(&self) -> QmodZ {
        QmodZ::new(self.exponent as i64, self.n as i64)
    }
}

impl fmt::Display for MuN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "zeta^{}", self.exponent)
    }
}

/// A point of the split torus `T = Y ⊗ F^×`, in coordinates dual to `Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    pub coords: Vec<TameElement>,
}

impl TorusPoint {
    pub fn new(coords: Vec<TameElement>) -> Self {
        TorusPoint { coords }
    }

    pub fn identity(r: usize) -> Self {
        TorusPoint {
            coords: vec![TameElement { val: 0, unit_exp: 0 }; r],
        }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// `y(ϖ)` for a cocharacter `y`.
    pub fn from_cocharacter(y: &[i64]) -> Self {
        TorusPoint {
            coords: y.iter().map(|&v| TameElement { val: v, unit_exp: 0 }).collect(),
        }
    }
}

impl LocalFieldSpec {
    pub fn new(q: u64, n: u64) -> Result<Self> {
        if prime_power(q).is_none() {
            return Err(Error::InvalidField(format!("q = {q} is not a prime power")));
        }
        if n == 0 || !(q - 1).is_multiple_of(n) {
            return Err(Error::InvalidField(format!("n = {n} does not divide q - 1 = {}", q - 1)));
        }
        Ok(LocalFieldSpec {
            q,
            n,
            convention: SymbolConvention::default(),
            drop_sign: false,
        })
    }

    pub fn with_convention(mut self, convention: SymbolConvention) -> Self {
        self.convention = convention;
        self
    }

    /// Drops the `(-1)^{v(a)v(b)}` factor from the symbol. Only used to check
    /// that the test suites detect a broken symbol.
    #[doc(hidden)]
    pub fn with_sign_mutation(mut self) -> Self {
        self.drop_sign = true;
        self
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn convention(&self) -> SymbolConvention {
        self.convention
    }

    pub fn is_mutated(&self) -> bool {
        self.drop_sign
    }

    /// Order of the residue unit group.
    pub fn unit_order(&self) -> u64 {
        self.q - 1
    }

    /// Exponent of `-1` in the residue unit group.
    pub fn minus_one_exp(&self) -> u64 {
        if self.q.is_multiple_of(2) {
            0
        } else {
            (self.q - 1) / 2
        }
    }

    pub fn element(&self, val: i64, unit_exp: i64) -> TameElement {
        TameElement {
            val,
            unit_exp: unit_exp.rem_euclid(self.unit_order() as i64) as u64,
        }
    }

    pub fn one(&self) -> TameElement {
        self.element(0, 0)
    }

    pub fn uniformizer(&self) -> TameElement {
        self.element(1, 0)
    }

    /// `Θ(g^k)`.
    pub fn unit(&self, k: i64) -> TameElement {
        self.element(0, k)
    }

    pub fn mul(&self, a: &TameElement, b: &TameElement) -> TameElement {
        self.element(a.val + b.val, a.unit_exp as i64 + b.unit_exp as i64)
    }

    pub fn inv(&self, a: &TameElement) -> TameElement {
        self.element(-a.val, -(a.unit_exp as i64))
    }

    pub fn pow(&self, a: &TameElement, k: i64) -> TameElement {
        let m = self.unit_order() as i128;
        self.element(a.val * k, (a.unit_exp as i128 * k as i128).rem_euclid(m) as i64)
    }

    pub fn zeta(&self, k: i64) -> MuN {
        MuN::new(k, self.n)
    }

    /// All classes with `val` in `vals` and every unit exponent.
    pub fn elements(&self, vals: std::ops::Range<i64>) -> Vec<TameElement> {
        let m = self.unit_order() as i64;
        vals.flat_map(|v| (0..m).map(move |e| (v, e)))
            .map(|(v, e)| self.element(v, e))
            .collect()
    }

    /// Representatives of `F^× / (F^×)^n`.
    pub fn power_classes(&self) -> Vec<TameElement> {
        let n = self.n as i64;
        (0..n).flat_map(|v| (0..n).map(move |e| (v, e))).map(|(v, e)| self.element(v, e)).collect()
    }

    pub fn torus_mul(&self, s: &TorusPoint, t: &TorusPoint) -> TorusPoint {
        assert_eq!(s.rank(), t.rank());
        TorusPoint::new(s.coords.iter().zip(&t.coords).map(|(a, b)| self.mul(a, b)).collect())
    }

    pub fn torus_inv(&self, t: &TorusPoint) -> TorusPoint {
        TorusPoint::new(t.coords.iter().map(|a| self.inv(a)).collect())
    }
}

/// The tame `n`-th power Hilbert symbol.
pub fn hilbert(spec: &LocalFieldSpec, a: &TameElement, b: &TameElement) -> MuN {
    let m = spec.unit_order() as i128;
    let (va, vb) = (a.val as i128, b.val as i128);
    let (ea, eb) = (a.unit_exp as i128, b.unit_exp as i128);
    let sign = if spec.drop_sign {
        0
    } else {
        va * vb * spec.minus_one_exp() as i128
    };
    let s = match spec.convention {
        SymbolConvention::Standard => 1,
        SymbolConvention::Inverse => -1,
    };
    // c = g^ec, and c^{(q-1)/n} = ζ^ec.
    let ec = (sign + s * (ea * vb - eb * va)).rem_euclid(m);
    MuN::new((ec % spec.n as i128) as i64, spec.n)
}

pub fn is_nth_power(spec: &LocalFieldSpec, a: &TameElement) -> bool {
    let n = spec.n;
    a.val.rem_euclid(n as i64) == 0 && a.unit_exp.is_multiple_of(n)
}

pub fn val_t(t: &TorusPoint) -> Vec<i64> {
    t.coords.iter().map(|c| c.val).collect()
}

/// `x(t) = ∏ t_i^{x_i}`.
pub fn evaluate_character(spec: &LocalFieldSpec, x: &[i64], t: &TorusPoint) -> Result<TameElement> {
    if x.len() != t.rank() {
        return Err(Error::DimensionMismatch(format!(
            "character of rank {} on a point of rank {}",
            x.len(),
            t.rank()
        )));
    }
    Ok(x.iter()
        .zip(&t.coords)
        .fold(spec.one(), |acc, (&k, c)| spec.mul(&acc, &spec.pow(c, k))))
}

/// `∏_i Hilb(t_i, t̂_i)` for `t ∈ T` and `t̂ ∈ T̂` in dual coordinates.
pub fn hilbert_pairing_t(spec: &LocalFieldSpec, t: &TorusPoint, t_hat: &TorusPoint) -> Result<MuN> {
    if t.rank() != t_hat.rank() {
        return Err(Error::DimensionMismatch(format!(
            "points of rank {} and {}",
            t.rank(),
            t_hat.rank()
        )));
    }
    Ok(t.coords
        .iter()
        .zip(&t_hat.coords)
        .fold(MuN::one(spec.n), |acc, (a, b)| acc.mul(&hilbert(spec, a, b))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_values() {
        let s = LocalFieldSpec::new(7, 2).unwrap();
        let w = s.uniformizer();
        assert_eq!(hilbert(&s, &w, &w).exponent(), 1);
        let s = LocalFieldSpec::new(7, 3).unwrap();
        assert!(hilbert(&s, &s.uniformizer(), &s.uniformizer()).is_one());
        let s = LocalFieldSpec::new(7, 2).unwrap();
        assert_eq!(hilbert(&s, &s.uniformizer(), &s.unit(1)).exponent(), 1);
        assert!(hilbert(&s, &s.unit(3), &s.unit(5)).is_one());
    }

    #[test]
    fn orientation_of_mixed_term() {
        let s = LocalFieldSpec::new(7, 3).unwrap();
        assert_eq!(hilbert(&s, &s.uniformizer(), &s.unit(1)).exponent(), 1);
        let s = s.with_convention(SymbolConvention::Standard);
        assert_eq!(hilbert(&s, &s.uniformizer(), &s.unit(1)).exponent(), 2);
    }

    #[test]
    fn power_tests() {
        let s = LocalFieldSpec::new(7, 2).unwrap();
        assert!(is_nth_power(&s, &s.element(2, 0)));
        assert!(!is_nth_power(&s, &s.unit(1)));
        assert!(is_nth_power(&s, &s.unit(2)));
    }

    #[test]
    fn torus_points() {
        let s = LocalFieldSpec::new(7, 2).unwrap();
        let t = TorusPoint::new(vec![s.uniformizer(), s.one()]);
        assert_eq!(val_t(&t), vec![1, 0]);
        let t = TorusPoint::new(vec![s.unit(1), s.element(3, 0)]);
        assert_eq!(val_t(&t), vec![0, 3]);
        let t = TorusPoint::new(vec![s.uniformizer(), s.element(2, 0)]);
        assert_eq!(evaluate_character(&s, &[1, 1], &t).unwrap().val, 3);
        let t = TorusPoint::new(vec![s.uniformizer(), s.uniformizer()]);
        assert_eq!(evaluate_character(&s, &[1, -1], &t).unwrap(), s.one());
        let t = TorusPoint::new(vec![s.unit(2), s.uniformizer()]);
        assert_eq!(evaluate_character(&s, &[1, 0], &t).unwrap(), s.unit(2));
        assert_eq!(evaluate_character(&s, &[0, 0], &t).unwrap(), s.one());
    }

    #[test]
    fn pairing_expands() {
        let s = LocalFieldSpec::new(7, 2).unwrap();
        let t = TorusPoint::new(vec![s.uniformizer(), s.one()]);
        let th = TorusPoint::new(vec![s.unit(1), s.uniformizer()]);
        assert_eq!(
            hilbert_pairing_t(&s, &t, &th).unwrap(),
            hilbert(&s, &s.uniformizer(), &s.unit(1))
        );
        assert!(hilbert_pairing_t(&s, &TorusPoint::identity(2), &th).unwrap().is_one());
        assert!(hilbert_pairing_t(&s, &t, &TorusPoint::identity(1)).is_err());
    }

    #[test]
    fn invalid_fields() {
        assert!(LocalFieldSpec::new(6, 1).is_err());
        assert!(LocalFieldSpec::new(7, 4).is_err());
        assert!(LocalFieldSpec::new(9, 8).is_ok());
    }
}
