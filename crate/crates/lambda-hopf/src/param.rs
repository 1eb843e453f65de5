//! Arithmetic mod p and the fixed parameter alphabet λ, a, c, d.
//!
//! Every polynomial in this crate carries its parameter exponents in the last
//! four slots of its exponent vectors, so the parameter ring F_p[λ, a, c, d]
//! is shared by all algebras of one prime.

use crate::poly::Poly;
use crate::{Error, Result};

/// Display names of the parameter symbols, in exponent-slot order.
pub const PARAM_NAMES: [&str; 4] = ["λ", "a", "c", "d"];
/// Number of parameter slots appended to every exponent vector.
pub const N_PARAMS: usize = 4;
/// Parameter slot of the deformation scalar λ.
pub const P_LAMBDA: usize = 0;
/// Parameter slot of the torsor parameter a.
pub const P_A: usize = 1;
/// Parameter slot of the torsor parameter c.
pub const P_C: usize = 2;
/// Parameter slot of the torsor parameter d.
pub const P_D: usize = 3;

/// A checked prime modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct Prime(u32);

impl Prime {
    /// Validates primality by trial division.
    pub fn new(p: u32) -> Result<Self> {
        if p < 2 {
            return Err(Error::NotPrime(p));
        }
        let mut d = 2u32;
        while d.saturating_mul(d) <= p {
            if p % d == 0 {
                return Err(Error::NotPrime(p));
            }
            d += 1;
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Least nonnegative residue of a possibly negative integer.
    pub fn reduce(self, n: i64) -> u32 {
        let p = self.0 as i64;
        (((n % p) + p) % p) as u32
    }

    pub fn add(self, x: u32, y: u32) -> u32 {
        (x + y) % self.0
    }

    pub fn sub(self, x: u32, y: u32) -> u32 {
        (x + self.0 - y % self.0) % self.0
    }

    pub fn neg(self, x: u32) -> u32 {
        (self.0 - x % self.0) % self.0
    }

    pub fn mul(self, x: u32, y: u32) -> u32 {
        ((x as u64 * y as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, x: u32, mut e: u64) -> u32 {
        let mut base = x % self.0;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat; zero is rejected.
    pub fn inv(self, x: u32) -> Result<u32> {
        let x = x % self.0;
        if x == 0 {
            return Err(Error::NotInvertible {
                reason: "zero scalar".into(),
                rendered: "0".into(),
            });
        }
        Ok(self.pow(x, (self.0 - 2) as u64))
    }
}

/// C(n, k) mod p for digit arguments below p, by the multiplicative formula.
fn binom_below_p(n: u32, k: u32, p: Prime) -> u32 {
    if k > n {
        return 0;
    }
    let mut num = 1u32;
    let mut den = 1u32;
    for i in 0..k {
        num = p.mul(num, (n - i) % p.get());
        den = p.mul(den, i + 1);
    }
    // den is a product of 1..k < p, hence a unit
    p.mul(num, p.inv(den).expect("unit by construction"))
}

/// Binomial coefficient C(n, k) mod p by Lucas' digit product; 0 when k > n.
pub fn binom(mut n: u64, mut k: u64, p: Prime) -> u32 {
    let q = p.get() as u64;
    let mut acc = 1u32;
    while k > 0 || n > 0 {
        let (nd, kd) = ((n % q) as u32, (k % q) as u32);
        acc = p.mul(acc, binom_below_p(nd, kd, p));
        if acc == 0 {
            return 0;
        }
        n /= q;
        k /= q;
    }
    acc
}

/// The deformation scalar: a free symbol, or a concrete scalar of F_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda {
    Generic,
    Scalar(u32),
}

impl Lambda {
    /// Label used in reports and filenames.
    pub fn label(&self) -> String {
        match self {
            Lambda::Generic => "generic".into(),
            Lambda::Scalar(0) => "zero".into(),
            Lambda::Scalar(k) => k.to_string(),
        }
    }

    /// The value as a parameter-ring polynomial (arity `N_PARAMS`).
    pub fn poly(&self, p: Prime) -> Poly {
        match self {
            Lambda::Generic => Poly::param(p, P_LAMBDA),
            Lambda::Scalar(k) => Poly::params_scalar(p, k % p.get()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composites_and_units() {
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(9).is_err());
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(13).is_ok());
    }

    #[test]
    fn binom_of_zero_is_one() {
        let p = Prime::new(3).unwrap();
        assert_eq!(binom(7, 0, p), 1);
    }

    #[test]
    fn binom_4_2_vanishes_mod_2() {
        let p = Prime::new(2).unwrap();
        assert_eq!(binom(4, 2, p), 0);
    }

    #[test]
    fn binom_5_2_mod_3() {
        let p = Prime::new(3).unwrap();
        assert_eq!(binom(5, 2, p), 1);
    }

    #[test]
    fn binom_rejects_k_above_n() {
        let p = Prime::new(5).unwrap();
        assert_eq!(binom(3, 7, p), 0);
    }

    #[test]
    fn scalar_inverse_roundtrips() {
        let p = Prime::new(5).unwrap();
        for x in 1..5 {
            assert_eq!(p.mul(x, p.inv(x).unwrap()), 1);
        }
        assert!(p.inv(0).is_err());
    }

    #[test]
    fn lambda_labels() {
        assert_eq!(Lambda::Generic.label(), "generic");
        assert_eq!(Lambda::Scalar(0).label(), "zero");
        assert_eq!(Lambda::Scalar(2).label(), "2");
    }
}
