//! Sparse exact polynomials over F_p in a flat variable alphabet.
//!
//! One exponent vector covers both algebra generators (the leading slots) and
//! the four parameter symbols (the trailing slots). Terms live in a `BTreeMap`
//! keyed by exponent vector, so the canonical form is unique and iteration
//! order is deterministic; structural equality is ring equality.

use std::collections::BTreeMap;

use crate::param::{Prime, N_PARAMS, PARAM_NAMES};

/// Sparse multivariate polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    p: Prime,
    arity: usize,
    terms: BTreeMap<Box<[u16]>, u32>,
}

impl Poly {
    pub fn zero(p: Prime, arity: usize) -> Self {
        Poly { p, arity, terms: BTreeMap::new() }
    }

    pub fn scalar(p: Prime, arity: usize, c: u32) -> Self {
        let mut poly = Poly::zero(p, arity);
        let c = c % p.get();
        if c != 0 {
            poly.terms.insert(vec![0u16; arity].into_boxed_slice(), c);
        }
        poly
    }

    pub fn one(p: Prime, arity: usize) -> Self {
        Poly::scalar(p, arity, 1)
    }

    /// The single variable at `slot`, exponent 1.
    pub fn var(p: Prime, arity: usize, slot: usize) -> Self {
        Poly::monomial(p, arity, &[(slot, 1)], 1)
    }

    /// c · ∏ slotᵉ for the listed (slot, exponent) pairs.
    pub fn monomial(p: Prime, arity: usize, powers: &[(usize, u16)], c: u32) -> Self {
        let mut poly = Poly::zero(p, arity);
        let c = c % p.get();
        if c == 0 {
            return poly;
        }
        let mut key = vec![0u16; arity];
        for &(slot, e) in powers {
            assert!(slot < arity, "variable slot out of range");
            key[slot] += e;
        }
        poly.terms.insert(key.into_boxed_slice(), c);
        poly
    }

    /// A parameter-ring scalar (arity `N_PARAMS`).
    pub fn params_scalar(p: Prime, c: u32) -> Self {
        Poly::scalar(p, N_PARAMS, c)
    }

    /// A single parameter symbol as a parameter-ring polynomial.
    pub fn param(p: Prime, param_slot: usize) -> Self {
        assert!(param_slot < N_PARAMS);
        Poly::var(p, N_PARAMS, param_slot)
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Number of generator slots (everything before the parameter tail).
    pub fn n_gens(&self) -> usize {
        self.arity - N_PARAMS
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) iff the polynomial is the constant c (possibly 0).
    pub fn as_scalar(&self) -> Option<u32> {
        match self.terms.len() {
            0 => Some(0),
            1 => {
                let (key, &c) = self.terms.iter().next().unwrap();
                key.iter().all(|&e| e == 0).then_some(c)
            }
            _ => None,
        }
    }

    /// True when no generator slot is used (parameter-only value).
    pub fn is_param_only(&self) -> bool {
        let n = self.n_gens();
        self.terms.keys().all(|k| k[..n].iter().all(|&e| e == 0))
    }

    /// Generator slots with a nonzero exponent somewhere.
    pub fn gen_support(&self) -> Vec<usize> {
        let n = self.n_gens();
        let mut used = vec![false; n];
        for key in self.terms.keys() {
            for (i, &e) in key[..n].iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], u32)> {
        self.terms.iter().map(|(k, &c)| (k.as_ref(), c))
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    fn assert_compatible(&self, other: &Poly) {
        assert_eq!(self.p, other.p, "prime mismatch");
        assert_eq!(self.arity, other.arity, "arity mismatch");
    }

    pub(crate) fn add_term(&mut self, key: &[u16], c: u32) {
        let c = c % self.p.get();
        if c == 0 {
            return;
        }
        match self.terms.get_mut(key) {
            Some(existing) => {
                let s = self.p.add(*existing, c);
                if s == 0 {
                    self.terms.remove(key);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(key.to_vec().into_boxed_slice(), c);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (key, c) in other.terms() {
            out.add_term(key, c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.p.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: u32) -> Poly {
        let c = c % self.p.get();
        if c == 0 {
            return Poly::zero(self.p, self.arity);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.p.mul(*v, c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_compatible(other);
        let mut out = Poly::zero(self.p, self.arity);
        let mut key = vec![0u16; self.arity];
        for (ka, ca) in self.terms() {
            for (kb, cb) in other.terms() {
                for i in 0..self.arity {
                    key[i] = ka[i]
                        .checked_add(kb[i])
                        .expect("exponent overflow");
                }
                out.add_term(&key, self.p.mul(ca, cb));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.p, self.arity);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading (lex-largest) term.
    pub fn leading(&self) -> Option<(&[u16], u32)> {
        self.terms.iter().next_back().map(|(k, &c)| (k.as_ref(), c))
    }

    /// Exact quotient self / d in the free flat ring, or None when the
    /// division leaves a remainder. Long division by the lex leading term;
    /// exact over a field coefficient ring, so failure means "not divisible".
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        self.assert_compatible(d);
        let (dk, dc) = d.leading()?; // division by zero: None
        let dk = dk.to_vec();
        let dc_inv = self.p.inv(dc).ok()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.p, self.arity);
        let mut key = vec![0u16; self.arity];
        while let Some((rk, rc)) = rem.leading() {
            for i in 0..self.arity {
                key[i] = rk[i].checked_sub(dk[i])?;
            }
            let qc = self.p.mul(rc, dc_inv);
            let step = Poly::monomial(self.p, self.arity, &slots_of(&key), qc);
            quot = quot.add(&step);
            rem = rem.sub(&step.mul(d));
        }
        Some(quot)
    }

    /// Reinterpret into a wider (or re-sliced) alphabet: generator slot i
    /// moves to `gen_offset + i`, parameters stay in the trailing slots.
    pub fn embed(&self, new_arity: usize, gen_offset: usize) -> Poly {
        let n = self.n_gens();
        assert!(gen_offset + n + N_PARAMS <= new_arity, "embed out of range");
        let mut out = Poly::zero(self.p, new_arity);
        let mut key = vec![0u16; new_arity];
        for (k, c) in self.terms() {
            key.iter_mut().for_each(|e| *e = 0);
            for i in 0..n {
                key[gen_offset + i] = k[i];
            }
            for j in 0..N_PARAMS {
                key[new_arity - N_PARAMS + j] = k[self.arity - N_PARAMS + j];
            }
            out.add_term(&key, c);
        }
        out
    }

    /// Shrinks a parameter-only poly back to parameter arity.
    pub fn params_part(&self) -> Poly {
        assert!(self.is_param_only(), "generator slots are occupied");
        let mut out = Poly::zero(self.p, N_PARAMS);
        for (k, c) in self.terms() {
            out.add_term(&k[self.arity - N_PARAMS..], c);
        }
        out
    }

    /// Renders with the given generator names; parameters use λ, a, c, d.
    pub fn render(&self, gen_names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let n = self.n_gens();
        assert_eq!(gen_names.len(), n, "name count mismatch");
        let mut parts = Vec::with_capacity(self.terms.len());
        // leading term first
        for (key, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            if c != &1 || key.iter().all(|&e| e == 0) {
                factors.push(c.to_string());
            }
            for (i, &e) in key.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if i < n {
                    gen_names[i].as_str()
                } else {
                    PARAM_NAMES[i - n]
                };
                if e == 1 {
                    factors.push(name.to_string());
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// (slot, exponent) pairs of a dense exponent vector.
pub(crate) fn slots_of(key: &[u16]) -> Vec<(usize, u16)> {
    key.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i, e))
        .collect()
}
