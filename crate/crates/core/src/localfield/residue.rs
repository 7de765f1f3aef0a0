//! Explicit finite fields `F_q` for small `q`, with a primitive element and
//! discrete-log tables. Elements are encoded as integers `0..q` whose base-`p`
//! digits are polynomial coefficients, constant term first.

use crate::error::{Error, Result};

const MAX_Q: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct ResidueField {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, coefficients of degree `0..k` (the leading 1 omitted).
    modulus: Vec<u64>,
    exp: Vec<u64>,
    log: Vec<u64>,
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d) || d * d > q).map(|d| if q.is_multiple_of(d) { d } else { q })?;
    let mut m = q;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

impl ResidueField {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        if q > MAX_Q {
            return Err(Error::Unsupported(format!("explicit residue field for q = {q}")));
        }
        let mut f = ResidueField {
            p,
            k,
            q,
            modulus: vec![0; k as usize],
            exp: Vec::new(),
            log: Vec::new(),
        };
        // First monic modulus (in the integer encoding) admitting a
        // generator of the multiplicative group; the generator found is the
        // smallest such element, so the table is canonical.
        for code in 0..q {
            f.modulus = f.digits(code);
            if let Some(g) = (1..q).find(|&g| f.order(g) == Some(q - 1)) {
                f.build_tables(g);
                return Ok(f);
            }
        }
        Err(Error::InternalInvariantViolation(format!("no primitive element found for q = {q}")))
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn generator(&self) -> u64 {
        self.exp[1 % (self.q - 1) as usize]
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        let mut d = vec![0; self.k as usize];
        for slot in d.iter_mut() {
            *slot = x % self.p;
            x /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let d: Vec<u64> = self.digits(a).iter().map(|&x| (self.p - x) % self.p).collect();
        self.encode(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    /// Product modulo the current modulus (which need not be irreducible
    /// while the constructor is searching).
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let k = self.k as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % self.p;
            }
        }
        // x^k = -(modulus) reduction, from the top degree down.
        for deg in (k..2 * k).rev() {
            let c = prod[deg];
            if c == 0 {
                continue;
            }
            prod[deg] = 0;
            for (t, &m) in self.modulus.iter().enumerate() {
                let idx = deg - k + t;
                prod[idx] = (prod[idx] + c * (self.p - m)) % self.p;
            }
        }
        self.encode(&prod[..k])
    }

    /// Multiplicative order of `a` if the powers of `a` return to 1.
    fn order(&self, a: u64) -> Option<u64> {
        let mut x = a;
        for i in 1..self.q {
            if x == 1 {
                return Some(i);
            }
            x = self.mul(x, a);
        }
        None
    }

    fn build_tables(&mut self, g: u64) {
        let m = (self.q - 1) as usize;
        self.exp = vec![0; m];
        self.log = vec![0; self.q as usize];
        let mut x = 1;
        for i in 0..m {
            self.exp[i] = x;
            self.log[x as usize] = i as u64;
            x = self.mul(x, g);
        }
    }

    /// `g^e`.
    pub fn pow_g(&self, e: i64) -> u64 {
        self.exp[e.rem_euclid((self.q - 1) as i64) as usize]
    }

    /// Discrete log to base `g` of a nonzero element.
    pub fn log(&self, a: u64) -> u64 {
        assert!(a != 0 && a < self.q, "log of zero or out of range");
        self.log[a as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn tables_are_consistent() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
            let f = ResidueField::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.pow_g(f.log(a) as i64), a);
                for b in 1..q {
                    let lhs = f.log(f.mul(a, b));
                    assert_eq!(lhs, (f.log(a) + f.log(b)) % (q - 1));
                }
            }
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
            }
        }
    }

    #[test]
    fn minus_one_is_the_half_power() {
        for q in [3, 5, 7, 9, 11, 13] {
            let f = ResidueField::new(q).unwrap();
            assert_eq!(f.log(f.neg(1)), (q - 1) / 2);
        }
    }

    #[test]
    fn generator_mod_seven() {
        let f = ResidueField::new(7).unwrap();
        assert_eq!(f.generator(), 3);
    }
}
