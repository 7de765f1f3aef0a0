//! Exact arithmetic in cyclotomic fields `Q(ζ_m)`, elements stored as
//! rational coefficient vectors reduced modulo the `m`-th cyclotomic
//! polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::zlattice::QmodZ;

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of `Φ_m`, constant term first.
pub fn cyclotomic_polynomial(m: u64) -> Arc<Vec<BigInt>> {
    assert!(m >= 1);
    if let Some(p) = phi_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(num);
    phi_cache().lock().unwrap().insert(m, p.clone());
    p
}

fn exact_div(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    assert!(b[db].is_one());
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] -= &c * bi;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    m: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn degree_of(m: u64) -> usize {
        cyclotomic_polynomial(m).len() - 1
    }

    pub fn zero(m: u64) -> Self {
        Cyclotomic {
            m,
            coeffs: vec![BigRational::zero(); Self::degree_of(m)],
        }
    }

    pub fn from_rational(m: u64, r: BigRational) -> Self {
        let mut z = Self::zero(m);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(m: u64, k: i64) -> Self {
        Self::from_rational(m, BigRational::from_integer(k.into()))
    }

    pub fn one(m: u64) -> Self {
        Self::from_int(m, 1)
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(m: u64, k: i64) -> Self {
        let e = k.rem_euclid(m as i64) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(m, raw)
    }

    /// `exp(2πi x)` for `x ∈ Q/Z` with denominator dividing `m`.
    pub fn root_of_unity(x: QmodZ, m: u64) -> Self {
        assert!(m as i64 % x.den() == 0, "denominator {} does not divide {m}", x.den());
        Self::zeta_pow(m, x.num() * (m as i64 / x.den()))
    }

    fn reduce(m: u64, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(m);
        let d = phi.len() - 1;
        for k in (d..raw.len()).rev() {
            let c = raw[k].clone();
            if c.is_zero() {
                continue;
            }
            for (i, pi) in phi.iter().enumerate() {
                raw[k - d + i] -= &c * BigRational::from_integer(pi.clone());
            }
        }
        raw.resize(d, BigRational::zero());
        Cyclotomic { m, coeffs: raw }
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(Zero::is_zero).then(|| self.coeffs[0].clone())
    }

    /// Image in `Q(ζ_{mk})` under `ζ_m ↦ ζ_{mk}^k`.
    pub fn lift(&self, k: u64) -> Self {
        if k == 1 {
            return self.clone();
        }
        let big = self.m * k;
        let mut raw = vec![BigRational::zero(); (self.coeffs.len().max(1) - 1) * k as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * k as usize] = c.clone();
        }
        Self::reduce(big, raw)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.m == b.m {
            return (a.clone(), b.clone());
        }
        let l = a.m.lcm(&b.m);
        (a.lift(l / a.m), b.lift(l / b.m))
    }

    pub fn add(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        Cyclotomic {
            m: a.m,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = Self::common(self, o);
        let d = a.coeffs.len();
        let mut raw = vec![BigRational::zero(); 2 * d.max(1) - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Self::reduce(a.m, raw)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Cyclotomic {
            m: self.m,
            coeffs: self.coeffs.iter().map(|x| x * r).collect(),
        }
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.m as i64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Self::zero(self.m), |acc, (i, c)| {
                acc.add(&Self::zeta_pow(self.m, m - i as i64).scale(c))
            })
    }

    /// `|z|^2 = z · conj(z)`.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj())
    }

    /// Numerical value, for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let m = self.m as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (i, c)| {
            let v = c.numer().to_f64().unwrap_or(f64::NAN) / c.denom().to_f64().unwrap_or(f64::NAN);
            let t = std::f64::consts::TAU * i as f64 / m;
            (re + v * t.cos(), im + v * t.sin())
        })
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                _ if c.is_one() => format!("z{}^{i}", self.m),
                _ if c.is_negative() && (-c).is_one() => format!("-z{}^{i}", self.m),
                _ => format!("{c}*z{}^{i}", self.m),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(m: u64) -> Vec<i64> {
        cyclotomic_polynomial(m).iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(poly(1), vec![-1, 1]);
        assert_eq!(poly(2), vec![1, 1]);
        assert_eq!(poly(4), vec![1, 0, 1]);
        assert_eq!(poly(6), vec![1, -1, 1]);
        assert_eq!(poly(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_multiply() {
        for m in [1u64, 2, 3, 4, 6, 8, 12] {
            for a in 0..m as i64 {
                for b in 0..m as i64 {
                    assert_eq!(
                        Cyclotomic::zeta_pow(m, a).mul(&Cyclotomic::zeta_pow(m, b)),
                        Cyclotomic::zeta_pow(m, a + b)
                    );
                }
            }
        }
    }

    #[test]
    fn sum_of_roots_vanishes() {
        for m in [2u64, 3, 4, 6, 8] {
            let s = (0..m as i64).fold(Cyclotomic::zero(m), |acc, k| acc.add(&Cyclotomic::zeta_pow(m, k)));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn lifting_and_conjugation() {
        let i = Cyclotomic::zeta_pow(4, 1);
        assert_eq!(i.lift(2), Cyclotomic::zeta_pow(8, 2));
        assert_eq!(i.mul(&i), Cyclotomic::from_int(4, -1));
        assert_eq!(i.conj(), Cyclotomic::zeta_pow(4, 3));
        let z = Cyclotomic::zeta_pow(3, 1).add(&Cyclotomic::zeta_pow(2, 1));
        assert_eq!(z.order(), 6);
        assert_eq!(Cyclotomic::zeta_pow(8, 3).norm_sq(), Cyclotomic::one(8));
        let two = Cyclotomic::from_int(8, 2).mul(&Cyclotomic::zeta_pow(8, 1));
        assert_eq!(two.norm_sq().as_rational(), Some(BigRational::from_integer(4.into())));
    }

    #[test]
    fn from_qmodz() {
        let z = Cyclotomic::root_of_unity(QmodZ::new(1, 2), 8);
        assert_eq!(z, Cyclotomic::from_int(8, -1));
        let (re, im) = Cyclotomic::zeta_pow(4, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
