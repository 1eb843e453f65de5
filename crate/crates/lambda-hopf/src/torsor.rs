//! Deformed torsor algebras: the localized plane D = R[U,V,1/(a+λU)] as a
//! comodule algebra over the deformed plane, its truncated quotient
//! D̃ = R[U,V]/(U^p−c, V^p−d) over the Frobenius kernel, the descent
//! bijections with their printed inverses, the comparison map into the
//! cotensor product, and the constructive point witness for cleftness.

use crate::algebra::{tensor, ARef, Algebra, Element, PowerRelation};
use crate::hom::{tensor_hom, Hom};
use crate::hopf::{scalar_algebra, Comodule, GenCheck, Hopf};
use crate::param::{Lambda, Prime, N_PARAMS, P_A, P_C, P_D, P_LAMBDA};
use crate::poly::Poly;
use crate::schemes::{build_scheme_at, SchemeTag};
use crate::{Error, Result};

/// Which of the four parameters stay formal and which are pinned scalars.
#[derive(Clone, Debug)]
pub struct TorsorParams {
    pub lam: Lambda,
    pub a: Lambda,
    pub c: Lambda,
    pub d: Lambda,
}

impl Default for TorsorParams {
    fn default() -> Self {
        TorsorParams {
            lam: Lambda::Generic,
            a: Lambda::Generic,
            c: Lambda::Generic,
            d: Lambda::Generic,
        }
    }
}

fn mode_poly(mode: &Lambda, p: Prime, slot: usize) -> Poly {
    match mode {
        Lambda::Generic => Poly::param(p, slot),
        Lambda::Scalar(k) => Poly::params_scalar(p, k % p.get()),
    }
}

impl TorsorParams {
    pub fn lam_poly(&self, p: Prime) -> Poly {
        mode_poly(&self.lam, p, P_LAMBDA)
    }
    pub fn a_poly(&self, p: Prime) -> Poly {
        mode_poly(&self.a, p, P_A)
    }
    pub fn c_poly(&self, p: Prime) -> Poly {
        mode_poly(&self.c, p, P_C)
    }
    pub fn d_poly(&self, p: Prime) -> Poly {
        mode_poly(&self.d, p, P_D)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsorKind {
    /// D = R[U,V, 1/(a+λU)], coacted on by the deformed plane.
    Full,
    /// D̃ = R[U,V]/(U^p−c, V^p−d), coacted on by the Frobenius kernel.
    Truncated,
}

/// A comodule algebra carrying one of the two torsor presentations.
pub struct TorsorAlgebra {
    pub kind: TorsorKind,
    pub params: TorsorParams,
    pub carrier: ARef,
    pub comodule: Comodule,
}

impl TorsorAlgebra {
    pub fn hopf(&self) -> &Hopf {
        &self.comodule.hopf
    }

    /// a + λU in the carrier.
    pub fn au(&self) -> Element {
        let p = self.carrier.prime();
        let a = Element::param_value(&self.carrier, &self.params.a_poly(p));
        let lam = Element::param_value(&self.carrier, &self.params.lam_poly(p));
        a.add(&lam.mul(&Element::gen(&self.carrier, 0)))
    }
}

/// Builds the torsor algebra of the given kind with its validated coaction.
/// For the truncated kind the parameter value a^p+λ^pc is declared as a
/// denominator, making a+λU a certified nonzerodivisor with inverse
/// (a+λU)^{p-1}/(a^p+λ^pc).
pub fn build_torsor_algebra(
    kind: TorsorKind,
    p: Prime,
    params: &TorsorParams,
) -> Result<TorsorAlgebra> {
    let lam = params.lam_poly(p);
    let a = params.a_poly(p);
    let arity = 2 + N_PARAMS;
    let au_poly = a
        .embed(arity, 0)
        .add(&lam.embed(arity, 0).mul(&Poly::var(p, arity, 0)));
    let (carrier, hopf) = match kind {
        TorsorKind::Full => {
            let hopf = build_scheme_at(SchemeTag::LambdaPlane, p, &lam)?;
            let carrier = Algebra::new("D", p, &["U", "V"], vec![None, None], vec![au_poly])?;
            (carrier, hopf)
        }
        TorsorKind::Truncated => {
            let hopf = build_scheme_at(SchemeTag::FrobeniusKernel, p, &lam)?;
            let e = p.get() as u16;
            let c = params.c_poly(p);
            let d = params.d_poly(p);
            let frob = a.pow(p.get()).add(&lam.pow(p.get()).mul(&c));
            let relations = vec![
                Some(PowerRelation { exponent: e, replacement: c }),
                Some(PowerRelation { exponent: e, replacement: d }),
            ];
            let carrier = Algebra::new(
                "D~",
                p,
                &["U", "V"],
                relations,
                vec![frob.embed(arity, 0), au_poly],
            )?;
            (carrier, hopf)
        }
    };
    let tensor_name = match kind {
        TorsorKind::Full => "D⊗H",
        TorsorKind::Truncated => "D~⊗A",
    };
    let target = tensor(tensor_name, &[&carrier, &hopf.carrier])?;
    let u0 = Element::gen_named(&target, "U@0");
    let v0 = Element::gen_named(&target, "V@0");
    let x1 = Element::gen_named(&target, "X@1");
    let y1 = Element::gen_named(&target, "Y@1");
    let au = Element::param_value(&target, &params.a_poly(p)).add(
        &Element::param_value(&target, &params.lam_poly(p)).mul(&u0),
    );
    let coaction = Hom::new(
        "ρ",
        &carrier,
        &target,
        vec![u0.add(&au.mul(&x1)), v0.add(&au.mul(&y1))],
    )?;
    let comodule = Comodule {
        name: match kind {
            TorsorKind::Full => "D".into(),
            TorsorKind::Truncated => "D~".into(),
        },
        carrier: carrier.clone(),
        target,
        hopf,
        coaction,
    };
    Ok(TorsorAlgebra { kind, params: params.clone(), carrier, comodule })
}

/// The descent map r: D⊗D → D⊗H (resp. r̃ over the kernel) and its printed
/// inverse, with the shared source and target rings.
pub struct DescentBijection {
    pub src: ARef,
    pub dst: ARef,
    pub fwd: Hom,
    pub inv: Hom,
}

pub fn descent_bijection(t: &TorsorAlgebra) -> Result<DescentBijection> {
    let d = &t.carrier;
    let src_name = match t.kind {
        TorsorKind::Full => "D⊗D",
        TorsorKind::Truncated => "D~⊗D~",
    };
    let src = tensor(src_name, &[d, d])?;
    let dst = t.comodule.target.clone();
    let name = match t.kind {
        TorsorKind::Full => ("r", "r⁻¹"),
        TorsorKind::Truncated => ("r~", "r~⁻¹"),
    };
    let fwd = Hom::new(
        name.0,
        &src,
        &dst,
        vec![
            Element::gen_named(&dst, "U@0"),
            Element::gen_named(&dst, "V@0"),
            t.comodule.coaction.image(0).clone(),
            t.comodule.coaction.image(1).clone(),
        ],
    )?;
    let p = d.prime();
    let u0 = Element::gen_named(&src, "U@0");
    let v0 = Element::gen_named(&src, "V@0");
    let u1 = Element::gen_named(&src, "U@1");
    let v1 = Element::gen_named(&src, "V@1");
    let au0 = Element::param_value(&src, &t.params.a_poly(p))
        .add(&Element::param_value(&src, &t.params.lam_poly(p)).mul(&u0));
    let au0_inv = au0.invert()?;
    let inv = Hom::new(
        name.1,
        &dst,
        &src,
        vec![
            u0.clone(),
            v0.clone(),
            u1.sub(&u0).mul(&au0_inv),
            v1.sub(&v0).mul(&au0_inv),
        ],
    )?;
    Ok(DescentBijection { src, dst, fwd, inv })
}

/// Per-generator identity rows for both descent composites.
pub fn descent_composite_checks(b: &DescentBijection) -> Result<Vec<GenCheck>> {
    let mut out = Vec::new();
    let back = b.inv.compose(&b.fwd)?;
    for i in 0..b.src.n_gens() {
        let g = Element::gen(&b.src, i);
        let img = back.image(i);
        out.push(GenCheck {
            label: format!("inv-fwd/{}", b.src.gen_names()[i]),
            ok: img.eq_elem(&g),
            left: img.render(),
            right: g.render(),
        });
    }
    let forth = b.fwd.compose(&b.inv)?;
    for i in 0..b.dst.n_gens() {
        let g = Element::gen(&b.dst, i);
        let img = forth.image(i);
        out.push(GenCheck {
            label: format!("fwd-inv/{}", b.dst.gen_names()[i]),
            ok: img.eq_elem(&g),
            left: img.render(),
            right: g.render(),
        });
    }
    Ok(out)
}

/// Normal-form freeness of the truncated carrier: the p² monomials
/// U^{r1}V^{r2} are pairwise-distinct basis keys, and the p-th powers reduce
/// to the parameter scalars c, d.
pub fn truncated_rank_witness(t: &TorsorAlgebra) -> Result<(bool, String)> {
    if t.kind != TorsorKind::Truncated {
        return Err(Error::Mismatch("rank witness needs the truncated kind".into()));
    }
    let p = t.carrier.prime().get();
    let u = Element::gen(&t.carrier, 0);
    let v = Element::gen(&t.carrier, 1);
    let mut keys = Vec::new();
    let mut ok = true;
    for r1 in 0..p {
        for r2 in 0..p {
            let m = u.pow(r1).mul(&v.pow(r2));
            let single = m.den().is_empty() && m.num().n_terms() == 1;
            let key = m.num().leading().map(|(k, c)| (k.to_vec(), c));
            match (single, key) {
                (true, Some((k, 1))) if !keys.contains(&k) => keys.push(k),
                _ => ok = false,
            }
        }
    }
    let prime = t.carrier.prime();
    let c_val = Element::param_value(&t.carrier, &t.params.c_poly(prime));
    let d_val = Element::param_value(&t.carrier, &t.params.d_poly(prime));
    let powers_ok = u.pow(p).eq_elem(&c_val) && v.pow(p).eq_elem(&d_val);
    ok = ok && powers_ok;
    let witness = format!(
        "{} distinct basis monomials; U^{p} = {}, V^{p} = {}",
        keys.len(),
        u.pow(p).render(),
        v.pow(p).render()
    );
    Ok((ok, witness))
}

/// The comparison map φ: D → D̃⊗H and the rings supporting the cotensor
/// condition over the kernel.
pub struct Cotensor {
    pub full: TorsorAlgebra,
    pub trunc: TorsorAlgebra,
    /// D̃⊗H.
    pub dh: ARef,
    pub phi: Hom,
    /// Quotient of the plane onto the kernel, X ↦ X, Y ↦ Y.
    pub pi: Hom,
}

pub fn build_cotensor(p: Prime, params: &TorsorParams) -> Result<Cotensor> {
    let full = build_torsor_algebra(TorsorKind::Full, p, params)?;
    let trunc = build_torsor_algebra(TorsorKind::Truncated, p, params)?;
    let h = &full.comodule.hopf;
    let dh = tensor("D~⊗H", &[&trunc.carrier, &h.carrier])?;
    let u0 = Element::gen_named(&dh, "U@0");
    let x1 = Element::gen_named(&dh, "X@1");
    let y1 = Element::gen_named(&dh, "Y@1");
    let au = Element::param_value(&dh, &params.a_poly(p))
        .add(&Element::param_value(&dh, &params.lam_poly(p)).mul(&u0));
    let phi = Hom::new(
        "φ",
        &full.carrier,
        &dh,
        vec![
            u0.add(&au.mul(&x1)),
            Element::gen_named(&dh, "V@0").add(&au.mul(&y1)),
        ],
    )?;
    let a = &trunc.comodule.hopf.carrier;
    let pi = Hom::new(
        "π",
        &h.carrier,
        a,
        vec![Element::gen_named(a, "X"), Element::gen_named(a, "Y")],
    )?;
    Ok(Cotensor { full, trunc, dh, phi, pi })
}

impl Cotensor {
    /// φ(a+λU) in D̃⊗H, which must equal (a+λU)⊗(1+λX).
    pub fn phi_of_au(&self) -> (Element, Element) {
        let p = self.dh.prime();
        let lhs = self.phi.apply(&self.full.au());
        let au = Element::param_value(&self.dh, &self.full.params.a_poly(p)).add(
            &Element::param_value(&self.dh, &self.full.params.lam_poly(p))
                .mul(&Element::gen_named(&self.dh, "U@0")),
        );
        let unit = Element::one(&self.dh).add(
            &Element::param_value(&self.dh, &self.full.params.lam_poly(p))
                .mul(&Element::gen_named(&self.dh, "X@1")),
        );
        (lhs, au.mul(&unit))
    }

    /// φ intertwines the right coactions: (id⊗Δ)∘φ = (φ⊗id)∘ρ on generators.
    pub fn comodule_map_checks(&self) -> Result<Vec<GenCheck>> {
        let h = &self.full.comodule.hopf;
        let dt = &self.trunc.carrier;
        let dhh = tensor("D~⊗H⊗H", &[dt, &h.carrier, &h.carrier])?;
        let lhs = tensor_hom("id⊗Δ", &self.dh, &[&Hom::identity(dt), &h.comult], &dhh)?
            .compose(&self.phi)?;
        let rhs = tensor_hom(
            "φ⊗id",
            &self.full.comodule.target,
            &[&self.phi, &Hom::identity(&h.carrier)],
            &dhh,
        )?
        .compose(&self.full.comodule.coaction)?;
        let mut out = Vec::new();
        for i in 0..self.full.carrier.n_gens() {
            out.push(GenCheck {
                label: format!("comodule-map/{}", self.full.carrier.gen_names()[i]),
                ok: lhs.image(i).eq_elem(rhs.image(i)),
                left: lhs.image(i).render(),
                right: rhs.image(i).render(),
            });
        }
        Ok(out)
    }

    /// The cotensor condition (ρ̃⊗id)(t) = (id⊗Δ_left)(t) on t = φ(U), φ(V),
    /// where Δ_left = (π⊗id)∘Δ is the left kernel-coaction of the plane.
    pub fn cotensor_condition_checks(&self) -> Result<Vec<GenCheck>> {
        let h = &self.full.comodule.hopf;
        let a = &self.trunc.comodule.hopf.carrier;
        let dt = &self.trunc.carrier;
        let dah = tensor("D~⊗A⊗H", &[dt, a, &h.carrier])?;
        let lhs_map = tensor_hom(
            "ρ~⊗id",
            &self.dh,
            &[&self.trunc.comodule.coaction, &Hom::identity(&h.carrier)],
            &dah,
        )?;
        let ah = tensor("ah", &[a, &h.carrier])?;
        let delta_left =
            tensor_hom("π⊗id", &h.t2, &[&self.pi, &Hom::identity(&h.carrier)], &ah)?
                .compose(&h.comult)?;
        let rhs_map = tensor_hom("id⊗Δl", &self.dh, &[&Hom::identity(dt), &delta_left], &dah)?;
        let mut out = Vec::new();
        for i in 0..self.full.carrier.n_gens() {
            let t = self.phi.image(i);
            let l = lhs_map.apply(t);
            let r = rhs_map.apply(t);
            out.push(GenCheck {
                label: format!("cotensor/{}", self.full.carrier.gen_names()[i]),
                ok: l.eq_elem(&r),
                left: l.render(),
                right: r.render(),
            });
        }
        Ok(out)
    }
}

/// The point of the full torsor with U ↦ b, V ↦ v: exists exactly when the
/// denominator image a+λb is invertible.
pub fn cleft_witness(t: &TorsorAlgebra, b: &Poly, v: &Poly) -> Result<Hom> {
    if t.kind != TorsorKind::Full {
        return Err(Error::Mismatch("point witness needs the full kind".into()));
    }
    let base = scalar_algebra(t.carrier.prime());
    Hom::new(
        "point",
        &t.carrier,
        &base,
        vec![
            Element::param_value(&base, b),
            Element::param_value(&base, v),
        ],
    )
}

/// The base ring 𝔽_p[X,Y][1/(Y^p+(X+1)^pY+X^p)] of the worked
/// non-injectivity example; built as a constructibility witness only.
pub fn demo_base_ring(p: Prime) -> Result<ARef> {
    let arity = 2 + N_PARAMS;
    let x = Poly::var(p, arity, 0);
    let y = Poly::var(p, arity, 1);
    let den = y
        .pow(p.get())
        .add(&x.add(&Poly::one(p, arity)).pow(p.get()).mul(&y))
        .add(&x.pow(p.get()));
    Algebra::new("R-demo", p, &["X", "Y"], vec![None, None], vec![den])
}
