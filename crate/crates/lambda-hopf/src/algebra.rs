//! Presented commutative algebras: polynomial algebras over F_p[λ, a, c, d]
//! modulo power relations on single generators, localized at a declared
//! multiplicative set. Elements are formal fractions.
//!
//! Soundness of fraction arithmetic rests on one invariant, enforced at
//! construction: every declared denominator is a nonzerodivisor. In a
//! relation-free algebra the ring is an integral domain and any nonzero
//! denominator qualifies. In a truncated algebra each denominator must be
//! certified, either by support on relation-free generators, or by a
//! Frobenius certificate: some p-power of it reduces to a nonzero
//! parameter-only value (a unit when that value is a scalar).

use std::ops::Range;
use std::sync::Arc;

use crate::param::{Prime, N_PARAMS};
use crate::poly::Poly;
use crate::{Error, Result};

pub type ARef = Arc<Algebra>;

/// genᵉ = replacement, with a parameter-only replacement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerRelation {
    pub exponent: u16,
    pub replacement: Poly,
}

/// Why a declared denominator is a nonzerodivisor.
#[derive(Clone, Debug)]
pub enum DenCert {
    /// Supported on relation-free generators only (and nonzero).
    FreeSupport,
    /// An actual unit: den · inv = 1.
    Unit { inv: Poly },
    /// den^(p^rounds) reduces to `frob`, a nonzero parameter-only value.
    NonZeroDivisor { rounds: u32, frob: Poly },
}

/// Tensor-leg bookkeeping for algebras built as tensor products.
#[derive(Clone, Debug)]
pub struct LegInfo {
    pub factor: ARef,
    pub gen_range: Range<usize>,
    pub den_range: Range<usize>,
}

#[derive(Debug)]
pub struct Algebra {
    pub name: String,
    p: Prime,
    gen_names: Vec<String>,
    relations: Vec<Option<PowerRelation>>,
    dens: Vec<Poly>,
    certs: Vec<DenCert>,
    legs: Option<Vec<LegInfo>>,
}

impl Algebra {
    /// Builds and validates an algebra presentation. Relation replacements
    /// are parameter-ring values (arity `N_PARAMS`); denominators are given
    /// at the full arity `gens.len() + N_PARAMS`.
    pub fn new(
        name: &str,
        p: Prime,
        gens: &[&str],
        relations: Vec<Option<PowerRelation>>,
        dens: Vec<Poly>,
    ) -> Result<ARef> {
        Algebra::new_internal(name, p, gens, relations, dens, None)
    }

    fn new_internal(
        name: &str,
        p: Prime,
        gens: &[&str],
        relations: Vec<Option<PowerRelation>>,
        dens: Vec<Poly>,
        legs: Option<Vec<LegInfo>>,
    ) -> Result<ARef> {
        let gen_names: Vec<String> = gens.iter().map(|s| s.to_string()).collect();
        for (i, g) in gen_names.iter().enumerate() {
            if gen_names[..i].contains(g) {
                return Err(Error::DuplicateGenerator(g.clone()));
            }
        }
        assert_eq!(relations.len(), gen_names.len(), "one relation slot per generator");
        let arity = gen_names.len() + N_PARAMS;
        let relations: Vec<Option<PowerRelation>> = relations
            .into_iter()
            .map(|r| {
                r.map(|rel| {
                    assert!(rel.exponent >= 1, "relation exponent must be positive");
                    assert!(rel.replacement.is_param_only(), "replacement must be parameter-only");
                    PowerRelation {
                        exponent: rel.exponent,
                        replacement: rel.replacement.embed(arity, 0),
                    }
                })
            })
            .collect();
        let mut alg = Algebra {
            name: name.to_string(),
            p,
            gen_names,
            relations,
            dens: Vec::new(),
            certs: Vec::new(),
            legs,
        };
        for den in dens {
            assert_eq!(den.arity(), arity, "denominator arity mismatch");
            let den = alg.reduce_poly(&den);
            if den.is_zero() {
                return Err(Error::ZeroDenominator(format!("in `{}`", alg.name)));
            }
            let cert = alg.certify(&den)?;
            alg.dens.push(den);
            alg.certs.push(cert);
        }
        Ok(Arc::new(alg))
    }

    /// Certifies one reduced, nonzero denominator as a nonzerodivisor.
    fn certify(&self, den: &Poly) -> Result<DenCert> {
        let free = den
            .gen_support()
            .iter()
            .all(|&i| self.relations[i].is_none());
        if free {
            return Ok(DenCert::FreeSupport);
        }
        let p = self.p.get();
        let mut e = den.clone();
        for rounds in 1..=3u32 {
            e = self.reduce_poly(&e.pow(p));
            if !e.is_param_only() {
                continue;
            }
            if e.is_zero() {
                return Err(Error::BadDenominator(format!(
                    "nilpotent: {}",
                    den.render(&self.gen_names)
                )));
            }
            return Ok(match e.as_scalar() {
                Some(s) => {
                    let order = p.pow(rounds) - 1;
                    let inv = self
                        .reduce_poly(&den.pow(order))
                        .mul_scalar(self.p.inv(s)?);
                    debug_assert!(self
                        .reduce_poly(&den.mul(&inv))
                        .as_scalar()
                        .is_some_and(|v| v == 1));
                    DenCert::Unit { inv }
                }
                None => DenCert::NonZeroDivisor { rounds, frob: e },
            });
        }
        Err(Error::BadDenominator(format!(
            "no p-power certificate: {}",
            den.render(&self.gen_names)
        )))
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.gen_names.len() + N_PARAMS
    }

    pub fn n_gens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gen_names.iter().position(|g| g == name)
    }

    pub fn relation(&self, i: usize) -> Option<&PowerRelation> {
        self.relations[i].as_ref()
    }

    pub fn is_domain(&self) -> bool {
        self.relations.iter().all(|r| r.is_none())
    }

    pub fn n_dens(&self) -> usize {
        self.dens.len()
    }

    pub fn den_poly(&self, j: usize) -> &Poly {
        &self.dens[j]
    }

    pub fn cert(&self, j: usize) -> &DenCert {
        &self.certs[j]
    }

    pub fn legs(&self) -> Option<&[LegInfo]> {
        self.legs.as_deref()
    }

    /// Structural interchangeability (names aside).
    pub fn same(&self, other: &Algebra) -> bool {
        self.p == other.p
            && self.gen_names == other.gen_names
            && self.relations == other.relations
            && self.dens == other.dens
    }

    /// Canonical form modulo the power relations.
    pub fn reduce_poly(&self, poly: &Poly) -> Poly {
        assert_eq!(poly.arity(), self.arity(), "arity mismatch in reduction");
        if self.is_domain() {
            return poly.clone();
        }
        let mut out = Poly::zero(self.p, self.arity());
        let mut key = vec![0u16; self.arity()];
        for (k, c) in poly.terms() {
            key.copy_from_slice(k);
            let mut carry = Poly::scalar(self.p, self.arity(), c);
            for (i, rel) in self.relations.iter().enumerate() {
                if let Some(rel) = rel {
                    let q = key[i] / rel.exponent;
                    if q > 0 {
                        key[i] %= rel.exponent;
                        carry = carry.mul(&rel.replacement.pow(q as u32));
                        if carry.is_zero() {
                            break;
                        }
                    }
                }
            }
            if carry.is_zero() {
                continue;
            }
            let mono = Poly::monomial(self.p, self.arity(), &slots(&key), 1);
            out = out.add(&mono.mul(&carry));
        }
        out
    }

    /// ∏ dens[j] over a multiset of denominator indices, reduced.
    pub fn den_multiset_poly(&self, multiset: &[u32]) -> Poly {
        let mut acc = Poly::one(self.p, self.arity());
        for &j in multiset {
            acc = self.reduce_poly(&acc.mul(&self.dens[j as usize]));
        }
        acc
    }

    fn den_free_supported(&self, j: usize) -> bool {
        matches!(self.certs[j], DenCert::FreeSupport)
    }

    /// Renders one reduced polynomial in this algebra's alphabet.
    pub fn render_poly(&self, poly: &Poly) -> String {
        if let Some(legs) = &self.legs {
            return render_tensor(self, legs, poly);
        }
        poly.render(&self.gen_names)
    }
}

fn slots(key: &[u16]) -> Vec<(usize, u16)> {
    key.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i, e))
        .collect()
}

/// Renders a polynomial of a tensor algebra term by term as c·(m₀)⊗(m₁)⊗….
fn render_tensor(alg: &Algebra, legs: &[LegInfo], poly: &Poly) -> String {
    if poly.is_zero() {
        return "0".into();
    }
    let n = alg.n_gens();
    let mut parts = Vec::new();
    for (key, c) in poly.terms().collect::<Vec<_>>().into_iter().rev() {
        let mut factors = Vec::new();
        let param_part = Poly::monomial(
            alg.prime(),
            N_PARAMS,
            &slots(&key[n..]),
            c,
        );
        let coeff = param_part.render(&[]);
        if coeff != "1" {
            factors.push(coeff);
        }
        let mono = legs
            .iter()
            .map(|leg| {
                let names = leg.factor.gen_names();
                let sub = &key[leg.gen_range.clone()];
                mono_string(sub, names)
            })
            .collect::<Vec<_>>()
            .join("⊗");
        factors.push(mono);
        parts.push(factors.join("*"));
    }
    parts.join(" + ")
}

/// "X^2*Y" style monomial rendering; "1" when empty.
pub fn mono_string(key: &[u16], names: &[String]) -> String {
    let mut factors = Vec::new();
    for (i, &e) in key.iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(names[i].clone()),
            _ => factors.push(format!("{}^{e}", names[i])),
        }
    }
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Tensor product of algebras: disjointly renamed generators, relations and
/// denominators duplicated leg by leg. Inclusion maps live in `hom`.
pub fn tensor(name: &str, factors: &[&ARef]) -> Result<ARef> {
    assert!(!factors.is_empty());
    let p = factors[0].prime();
    let mut gen_names: Vec<String> = Vec::new();
    let mut relations = Vec::new();
    let mut dens = Vec::new();
    let mut legs = Vec::new();
    let total_gens: usize = factors.iter().map(|f| f.n_gens()).sum();
    let arity = total_gens + N_PARAMS;
    let mut gen_offset = 0usize;
    let mut den_offset = 0usize;
    for (leg, f) in factors.iter().enumerate() {
        assert_eq!(f.prime(), p, "tensor factors share one prime");
        for g in f.gen_names() {
            gen_names.push(format!("{g}@{leg}"));
        }
        for i in 0..f.n_gens() {
            // replacement is parameter-only; `new_internal` re-anchors it
            relations.push(f.relation(i).cloned());
        }
        for j in 0..f.n_dens() {
            dens.push(f.den_poly(j).embed(arity, gen_offset));
        }
        legs.push(LegInfo {
            factor: (*f).clone(),
            gen_range: gen_offset..gen_offset + f.n_gens(),
            den_range: den_offset..den_offset + f.n_dens(),
        });
        gen_offset += f.n_gens();
        den_offset += f.n_dens();
    }
    let gen_refs: Vec<&str> = gen_names.iter().map(|s| s.as_str()).collect();
    Algebra::new_internal(name, p, &gen_refs, relations, dens, Some(legs))
}

/// A formal fraction num / ∏ dens[j], j ranging over a sorted multiset of
/// declared denominator indices.
#[derive(Clone, Debug)]
pub struct Element {
    alg: ARef,
    num: Poly,
    den: Vec<u32>,
}

impl Element {
    pub fn from_poly(alg: &ARef, num: Poly) -> Element {
        let num = alg.reduce_poly(&num);
        Element { alg: alg.clone(), num, den: Vec::new() }
    }

    pub fn zero(alg: &ARef) -> Element {
        Element::from_poly(alg, Poly::zero(alg.prime(), alg.arity()))
    }

    pub fn one(alg: &ARef) -> Element {
        Element::from_poly(alg, Poly::one(alg.prime(), alg.arity()))
    }

    pub fn scalar(alg: &ARef, c: u32) -> Element {
        Element::from_poly(alg, Poly::scalar(alg.prime(), alg.arity(), c))
    }

    pub fn gen(alg: &ARef, i: usize) -> Element {
        Element::from_poly(alg, Poly::var(alg.prime(), alg.arity(), i))
    }

    pub fn gen_named(alg: &ARef, name: &str) -> Element {
        let i = alg.gen_index(name).unwrap_or_else(|| panic!("no generator `{name}`"));
        Element::gen(alg, i)
    }

    /// Embeds a parameter-ring value (arity `N_PARAMS`).
    pub fn param_value(alg: &ARef, value: &Poly) -> Element {
        assert_eq!(value.arity(), N_PARAMS);
        Element::from_poly(alg, value.embed(alg.arity(), 0))
    }

    /// A formal fraction with the given denominator multiset.
    pub fn fraction(alg: &ARef, num: Poly, mut den: Vec<u32>) -> Element {
        den.sort_unstable();
        assert!(den.iter().all(|&j| (j as usize) < alg.n_dens()));
        Element { alg: alg.clone(), num: alg.reduce_poly(&num), den }
    }

    pub fn algebra(&self) -> &ARef {
        &self.alg
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn den_counts(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.alg.n_dens()];
        for &j in &self.den {
            counts[j as usize] += 1;
        }
        counts
    }

    fn counts_to_multiset(counts: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        for (j, &m) in counts.iter().enumerate() {
            for _ in 0..m {
                out.push(j as u32);
            }
        }
        out
    }

    fn assert_same_algebra(&self, other: &Element) {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg) || self.alg.same(&other.alg),
            "algebra mismatch: `{}` vs `{}`",
            self.alg.name,
            other.alg.name
        );
    }

    /// Checked variant of the arithmetic entry points; `op` one of add/sub/mul.
    pub fn checked_binop(op: &str, x: &Element, y: &Element) -> Result<Element> {
        if !(Arc::ptr_eq(&x.alg, &y.alg) || x.alg.same(&y.alg)) {
            return Err(Error::Mismatch(format!(
                "`{}` on elements of `{}` and `{}`",
                op, x.alg.name, y.alg.name
            )));
        }
        Ok(match op {
            "add" => x.add(y),
            "sub" => x.sub(y),
            "mul" => x.mul(y),
            other => return Err(Error::Mismatch(format!("unknown operation `{other}`"))),
        })
    }

    pub fn add(&self, other: &Element) -> Element {
        self.assert_same_algebra(other);
        let (ca, cb) = (self.den_counts(), other.den_counts());
        let max: Vec<u32> = ca.iter().zip(&cb).map(|(&a, &b)| a.max(b)).collect();
        let lift = |from: &[u32]| {
            let extra: Vec<u32> = max
                .iter()
                .zip(from)
                .enumerate()
                .flat_map(|(j, (&m, &f))| std::iter::repeat(j as u32).take((m - f) as usize))
                .collect();
            self.alg.den_multiset_poly(&extra)
        };
        let num = self
            .alg
            .reduce_poly(&self.num.mul(&lift(&ca)).add(&other.num.mul(&lift(&cb))));
        Element {
            alg: self.alg.clone(),
            num,
            den: Element::counts_to_multiset(&max),
        }
    }

    pub fn neg(&self) -> Element {
        Element { alg: self.alg.clone(), num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Element) -> Element {
        self.assert_same_algebra(other);
        let num = self.alg.reduce_poly(&self.num.mul(&other.num));
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        den.sort_unstable();
        Element { alg: self.alg.clone(), num, den }
    }

    pub fn mul_scalar(&self, c: u32) -> Element {
        Element {
            alg: self.alg.clone(),
            num: self.num.mul_scalar(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(&self.alg);
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

    /// Ring equality by cross-multiplication over the common denominator core.
    pub fn eq_elem(&self, other: &Element) -> bool {
        self.assert_same_algebra(other);
        let (ca, cb) = (self.den_counts(), other.den_counts());
        let lift_against = |counts: &[u32], target: &[u32]| {
            let extra: Vec<u32> = counts
                .iter()
                .zip(target)
                .enumerate()
                .flat_map(|(j, (&mine, &theirs))| {
                    std::iter::repeat(j as u32).take(theirs.saturating_sub(mine) as usize)
                })
                .collect();
            self.alg.den_multiset_poly(&extra)
        };
        let left = self.alg.reduce_poly(&self.num.mul(&lift_against(&ca, &cb)));
        let right = self.alg.reduce_poly(&other.num.mul(&lift_against(&cb, &ca)));
        left == right
    }

    pub fn is_one(&self) -> bool {
        self.eq_elem(&Element::one(&self.alg))
    }

    /// Cheap normalization: clears unit and scalar denominator factors, and
    /// cancels relation-free denominator factors that divide the numerator
    /// exactly. No gcd machinery; exact division only.
    pub fn reduced(&self) -> Element {
        let alg = &self.alg;
        let mut num = self.num.clone();
        let mut den: Vec<u32> = Vec::with_capacity(self.den.len());
        for &j in &self.den {
            let dp = alg.den_poly(j as usize);
            if let Some(s) = dp.as_scalar() {
                num = num.mul_scalar(alg.prime().inv(s).expect("validated nonzero"));
            } else if let DenCert::Unit { inv } = alg.cert(j as usize) {
                num = alg.reduce_poly(&num.mul(inv));
            } else {
                den.push(j);
            }
        }
        loop {
            let mut progressed = false;
            for idx in 0..den.len() {
                let j = den[idx] as usize;
                if !alg.den_free_supported(j) {
                    continue;
                }
                if let Some(q) = num.exact_div(alg.den_poly(j)) {
                    num = q;
                    den.remove(idx);
                    progressed = true;
                    break;
                }
            }
            if !progressed {
                break;
            }
        }
        Element { alg: alg.clone(), num, den }
    }

    /// Multiplicative inverse. Succeeds when the numerator splits into a unit
    /// scalar, declared denominator factors, and (in truncated algebras) a
    /// factor whose p-power certificate is a unit scalar. The product
    /// x · x⁻¹ = 1 is verified before returning.
    pub fn invert(&self) -> Result<Element> {
        let alg = self.alg.clone();
        let p = alg.prime();
        let x = self.reduced();
        if x.num.is_zero() {
            return Err(Error::NotInvertible {
                reason: "zero".into(),
                rendered: "0".into(),
            });
        }
        let den_prod = alg.den_multiset_poly(&x.den);
        let mut n = x.num.clone();
        let mut peeled: Vec<u32> = Vec::new();
        let mut guard = 0usize;
        loop {
            guard += 1;
            assert!(guard < 10_000, "denominator peeling did not terminate");
            let mut progressed = false;
            for j in 0..alg.n_dens() {
                let d = alg.den_poly(j);
                if d.as_scalar().is_some() {
                    continue;
                }
                match alg.cert(j) {
                    DenCert::FreeSupport => {
                        if let Some(q) = n.exact_div(d) {
                            n = q;
                            peeled.push(j as u32);
                            progressed = true;
                        }
                    }
                    DenCert::NonZeroDivisor { rounds, frob } => {
                        let order = p.get().pow(*rounds) - 1;
                        let m = alg.reduce_poly(&n.mul(&alg.reduce_poly(&d.pow(order))));
                        if let Some(q) = m.exact_div(frob) {
                            let q = alg.reduce_poly(&q);
                            if alg.reduce_poly(&q.mul(d)) == n {
                                n = q;
                                peeled.push(j as u32);
                                progressed = true;
                            }
                        }
                    }
                    DenCert::Unit { .. } => {}
                }
                if progressed {
                    break;
                }
            }
            if !progressed {
                break;
            }
        }
        let inv_n: Poly = if let Some(s) = n.as_scalar() {
            Poly::scalar(p, alg.arity(), p.inv(s)?)
        } else if alg.is_domain() {
            return Err(Error::NotInvertible {
                reason: "not in the multiplicative set".into(),
                rendered: alg.render_poly(&n),
            });
        } else {
            let mut e = n.clone();
            let mut rounds = 0u32;
            for r in 1..=3u32 {
                e = alg.reduce_poly(&e.pow(p.get()));
                rounds = r;
                if e.is_param_only() {
                    break;
                }
            }
            if !e.is_param_only() {
                return Err(Error::NotInvertible {
                    reason: "no p-power certificate".into(),
                    rendered: alg.render_poly(&n),
                });
            }
            if e.is_zero() {
                return Err(Error::NotInvertible {
                    reason: "nilpotent (zero constant behavior)".into(),
                    rendered: alg.render_poly(&n),
                });
            }
            match e.as_scalar() {
                Some(s) => {
                    let order = p.get().pow(rounds) - 1;
                    alg.reduce_poly(&n.pow(order)).mul_scalar(p.inv(s)?)
                }
                None => {
                    return Err(Error::NotInvertible {
                        reason: "p-power is a non-unit parameter value".into(),
                        rendered: alg.render_poly(&e),
                    })
                }
            }
        };
        let out = Element {
            alg: alg.clone(),
            num: alg.reduce_poly(&den_prod.mul(&inv_n)),
            den: {
                let mut d = peeled;
                d.sort_unstable();
                d
            },
        };
        if !self.mul(&out).is_one() {
            return Err(Error::NotInvertible {
                reason: "inverse verification failed".into(),
                rendered: self.render(),
            });
        }
        Ok(out.reduced())
    }

    /// Deterministic rendering: reduced numerator, then the formal
    /// denominator product if present.
    pub fn render(&self) -> String {
        let num = self.alg.render_poly(&self.num);
        if self.den.is_empty() {
            return num;
        }
        let mut counts: Vec<(u32, u32)> = Vec::new();
        for &j in &self.den {
            match counts.last_mut() {
                Some((idx, m)) if *idx == j => *m += 1,
                _ => counts.push((j, 1)),
            }
        }
        let den = counts
            .iter()
            .map(|&(j, m)| {
                let poly = self.alg.den_poly(j as usize);
                let body = self.alg.render_poly(poly);
                let wrapped = if poly.n_terms() > 1 { format!("({body})") } else { body };
                if m == 1 {
                    wrapped
                } else {
                    format!("{wrapped}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join("*");
        let num_wrapped = if self.num.n_terms() > 1 { format!("({num})") } else { num };
        format!("{num_wrapped} / {den}")
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.eq_elem(other)
    }
}
