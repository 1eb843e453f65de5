//! The unit-group bialgebra of the group algebra of the finite deformed
//! kernel: comultiplication structure constants against the monomial basis,
//! the triangular regular representation and its determinant, the coordinate
//! bialgebra on the T-variables localized at the diagonal factors, and the
//! splitting morphisms relating it to the deformed plane.

use crate::algebra::{tensor, ARef, Algebra, Element};
use crate::hom::Hom;
use crate::hopf::{structure_tensor, Hopf, StructureTensor};
use crate::param::{binom, Lambda, Prime, N_PARAMS};
use crate::poly::Poly;
use crate::schemes::{build_scheme_at, SchemeTag};
use crate::Result;

/// Coordinate name of the basis monomial X^{r1}Y^{r2}: T1, TX, TX2, TY,
/// TXY, TX2Y2, ...
pub fn t_name(r1: u16, r2: u16) -> String {
    if r1 == 0 && r2 == 0 {
        return "T1".into();
    }
    let mut s = String::from("T");
    if r1 == 1 {
        s.push('X');
    } else if r1 > 1 {
        s.push_str(&format!("X{r1}"));
    }
    if r2 == 1 {
        s.push('Y');
    } else if r2 > 1 {
        s.push_str(&format!("Y{r2}"));
    }
    s
}

/// d_r = Σ_{k=0}^{r} C(r,k) λ^k T_{X^k} at the coordinate-algebra arity.
pub fn diag_poly(p: Prime, arity: usize, lam: &Poly, r: u16) -> Poly {
    let mut acc = Poly::zero(p, arity);
    for k in 0..=r {
        let c = binom(r as u64, k as u64, p);
        let term = Poly::monomial(p, arity, &[(k as usize, 1)], c)
            .mul(&lam.pow(k as u32).embed(arity, 0));
        acc = acc.add(&term);
    }
    acc
}

pub struct UnitGroup {
    pub lambda: Lambda,
    pub lam: Poly,
    pub kernel: Hopf,
    pub st: StructureTensor,
    /// Bialgebra on S = R[T_j][1/d_0, …, 1/d_{p−1}] (no antipode hom).
    pub hopf: Hopf,
    /// r ↦ index of d_r among the declared denominators (deduplicated).
    pub diag_den: Vec<usize>,
    /// S → A, T_j ↦ e_j.
    pub i_sharp: Hom,
}

pub fn build_unit_group(p: Prime, lambda: &Lambda) -> Result<UnitGroup> {
    let lam = lambda.poly(p);
    let kernel = build_scheme_at(SchemeTag::FrobeniusKernel, p, &lam)?;
    let st = structure_tensor(&kernel)?;
    let q = p.get() as u16;
    let n = (q * q) as usize;
    let arity = n + N_PARAMS;

    let mut names = Vec::with_capacity(n);
    for r2 in 0..q {
        for r1 in 0..q {
            names.push(t_name(r1, r2));
        }
    }
    let mut dens: Vec<Poly> = Vec::new();
    let mut diag_den = Vec::with_capacity(q as usize);
    for r in 0..q {
        let d = diag_poly(p, arity, &lam, r);
        match dens.iter().position(|e| *e == d) {
            Some(pos) => diag_den.push(pos),
            None => {
                dens.push(d);
                diag_den.push(dens.len() - 1);
            }
        }
    }
    let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let s_alg = Algebra::new("S", p, &name_refs, vec![None; n], dens)?;
    let t2 = tensor("S⊗2", &[&s_alg, &s_alg])?;

    // Δ_U(T_j) = Σ T_i ⊗ R_ij(T), straight from the structure constants
    let t2_arity = t2.arity();
    let mut comult_images = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = Poly::zero(p, t2_arity);
        for (i, k, c) in &st.cols[j] {
            let term = Poly::monomial(p, t2_arity, &[(*i, 1), (n + *k, 1)], 1)
                .mul(&c.embed(t2_arity, 0));
            acc = acc.add(&term);
        }
        comult_images.push(Element::from_poly(&t2, acc));
    }
    let comult = Hom::new("Δ", &s_alg, &t2, comult_images)?;

    let basis = kernel.basis.as_ref().expect("kernel carries a basis");
    let counit_images = (0..n)
        .map(|j| kernel.counit.apply(&basis.mono_elem(&kernel.carrier, j)))
        .collect();
    let counit = Hom::new("ε", &s_alg, &kernel.counit.target().clone(), counit_images)?;

    let i_images = (0..n)
        .map(|j| basis.mono_elem(&kernel.carrier, j))
        .collect();
    let i_sharp = Hom::new("i#", &s_alg, &kernel.carrier, i_images)?;

    let hopf = Hopf::assemble("unit-group", s_alg, t2, comult, counit, None, None);
    Ok(UnitGroup { lambda: lambda.clone(), lam, kernel, st, hopf, diag_den, i_sharp })
}

impl UnitGroup {
    pub fn coords(&self) -> &ARef {
        &self.hopf.carrier
    }

    pub fn prime(&self) -> Prime {
        self.coords().prime()
    }

    /// d_r as an element of S.
    pub fn diag_elem(&self, r: u16) -> Element {
        let s = self.coords();
        Element::from_poly(s, s.den_poly(self.diag_den[r as usize]).clone())
    }

    /// The regular-representation entry R_ij as a polynomial in the T's.
    pub fn reg_rep_entry(&self, i: usize, j: usize) -> Element {
        let s = self.coords();
        let mut acc = Poly::zero(self.prime(), s.arity());
        for (i2, k, c) in &self.st.cols[j] {
            if *i2 == i {
                let term = Poly::monomial(self.prime(), s.arity(), &[(*k, 1)], 1)
                    .mul(&c.embed(s.arity(), 0));
                acc = acc.add(&term);
            }
        }
        Element::from_poly(s, acc)
    }

    /// det(R) as the product of diagonal entries; valid once the matrix has
    /// been verified upper triangular.
    pub fn determinant_via_diagonal(&self) -> Element {
        let n = self.st.n;
        let mut acc = Element::one(self.coords());
        for j in 0..n {
            acc = acc.mul(&self.reg_rep_entry(j, j));
        }
        acc
    }

    /// D = ∏_{r=0}^{p−1} d_r^p.
    pub fn determinant_closed_form(&self) -> Element {
        let p = self.prime().get();
        let mut acc = Element::one(self.coords());
        for r in 0..p as u16 {
            acc = acc.mul(&self.diag_elem(r).pow(p));
        }
        acc
    }
}

/// Δ(X^{r1}Y^{r2}) by the closed quadruple-sum formula, as an element of
/// the kernel's tensor square. Monomials with an X-exponent ≥ p vanish by
/// reduction, which realizes the stated coefficient cutoff.
pub fn comult_closed_form(kernel: &Hopf, lam: &Poly, r1: u16, r2: u16) -> Element {
    let p = kernel.carrier.prime();
    let t2 = &kernel.t2;
    let arity = t2.arity();
    let mut acc = Poly::zero(p, arity);
    for k in 0..=r1 {
        for k2 in 0..=k {
            for l in 0..=r2 {
                for l2 in 0..=l {
                    let c = p.mul(
                        p.mul(binom(r1 as u64, k as u64, p), binom(k as u64, k2 as u64, p)),
                        p.mul(binom(r2 as u64, l as u64, p), binom(l as u64, l2 as u64, p)),
                    );
                    if c == 0 {
                        continue;
                    }
                    // X^{r1−k+k'+l'} Y^{r2−l} ⊗ X^k Y^l, coefficient λ^{k'+l'}
                    let slots = [
                        (0usize, r1 - k + k2 + l2),
                        (1usize, r2 - l),
                        (2usize, k),
                        (3usize, l),
                    ];
                    let nz: Vec<(usize, u16)> =
                        slots.iter().copied().filter(|&(_, e)| e > 0).collect();
                    let term = Poly::monomial(p, arity, &nz, c)
                        .mul(&lam.pow((k2 + l2) as u32).embed(arity, 0));
                    acc = acc.add(&term);
                }
            }
        }
    }
    Element::from_poly(t2, acc)
}

/// Δ(e_j) rebuilt from the extracted structure constants: Σ c·e_i⊗e_k.
pub fn comult_from_structure(kernel: &Hopf, st: &StructureTensor, j: usize) -> Element {
    let basis = kernel.basis.as_ref().expect("kernel carries a basis");
    let t2 = &kernel.t2;
    let p = t2.prime();
    let arity = t2.arity();
    let ngen = kernel.carrier.n_gens();
    let mut acc = Poly::zero(p, arity);
    for (i, k, c) in &st.cols[j] {
        let (ki, kk) = (basis.gen_key(*i), basis.gen_key(*k));
        let mut slots = Vec::new();
        for (s, &e) in ki.iter().enumerate() {
            if e > 0 {
                slots.push((s, e));
            }
        }
        for (s, &e) in kk.iter().enumerate() {
            if e > 0 {
                slots.push((ngen + s, e));
            }
        }
        acc = acc.add(&Poly::monomial(p, arity, &slots, 1).mul(&c.embed(arity, 0)));
    }
    Element::from_poly(t2, acc)
}

/// Δ(X)^{r1}·Δ(Y)^{r2}: the defining expansion, independent of the closed
/// formula and of the structure-constant extraction.
pub fn comult_oracle(kernel: &Hopf, r1: u16, r2: u16) -> Element {
    kernel
        .comult
        .image(0)
        .pow(r1 as u32)
        .mul(&kernel.comult.image(1).pow(r2 as u32))
}

/// Determinant by first-column cofactor expansion. Exponential; intended
/// as an independent oracle for small matrices.
pub fn laplace_det(m: &[Vec<Element>]) -> Element {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n));
    if n == 1 {
        return m[0][0].clone();
    }
    let alg = m[0][0].algebra().clone();
    let mut acc = Element::zero(&alg);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Element>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let term = m[i][0].mul(&laplace_det(&minor));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The section of the splitting: S → plane carrier, T_{X^{r1}Y^{r2}} ↦
/// X^{r1}Y^{r2}. Well defined because each diagonal factor maps to a power
/// of the declared unit 1+λX.
pub fn sigma_hom(u: &UnitGroup, plane: &Hopf) -> Result<Hom> {
    let p = u.prime();
    let q = p.get() as u16;
    let carrier = &plane.carrier;
    let mut images = Vec::new();
    for r2 in 0..q {
        for r1 in 0..q {
            let poly = Poly::monomial(
                p,
                carrier.arity(),
                &[(0, r1), (1, r2)]
                    .iter()
                    .copied()
                    .filter(|&(_, e)| e > 0)
                    .collect::<Vec<_>>(),
                1,
            );
            images.push(Element::from_poly(carrier, poly));
        }
    }
    Hom::new("σ̃#", u.coords(), carrier, images)
}

/// The retraction: plane carrier → S, X ↦ T_X/T_1, Y ↦ T_Y/T_1.
pub fn chi_hom(u: &UnitGroup, plane: &Hopf) -> Result<Hom> {
    let s = u.coords();
    let p = u.prime();
    let d0 = u.diag_den[0] as u32;
    let tx = s.gen_index(&t_name(1, 0)).expect("TX exists");
    let ty = s.gen_index(&t_name(0, 1)).expect("TY exists");
    let images = vec![
        Element::fraction(s, Poly::var(p, s.arity(), tx), vec![d0]),
        Element::fraction(s, Poly::var(p, s.arity(), ty), vec![d0]),
    ];
    Hom::new("χ̃#", &plane.carrier, s, images)
}

/// σ̃(D) = ∏_{r=0}^{p−1} (1+λX)^{rp} in the plane carrier.
pub fn sigma_of_determinant_closed_form(u: &UnitGroup, plane: &Hopf) -> Element {
    let p = u.prime();
    let carrier = &plane.carrier;
    let one_lx = Element::one(carrier).add(
        &Element::param_value(carrier, &u.lam).mul(&Element::gen_named(carrier, "X")),
    );
    let mut acc = Element::one(carrier);
    for r in 0..p.get() {
        acc = acc.mul(&one_lx.pow(r * p.get()));
    }
    acc
}
