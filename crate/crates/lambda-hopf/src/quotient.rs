//! Coinvariant presentation of the unit-group coordinate algebra: the
//! generating family with coinvariance witnesses, the localizing-element
//! identities, remainder extraction with subring bounds, and the inverse
//! pair of isomorphisms onto a localized polynomial ring together with its
//! Frobenius comparison map.

use crate::algebra::{ARef, Algebra, Element};
use crate::cleft::Cleft;
use crate::hom::Hom;
use crate::param::{binom, Prime, N_PARAMS};
use crate::poly::{slots_of, Poly};
use crate::unit_group::{t_name, UnitGroup};
use crate::{Error, Result};

/// Polynomial-model coordinate name for the same basis slot as `t_name`:
/// Z1, ZX, ZX2, ZY, ZXY, ...
pub fn z_name(r1: u16, r2: u16) -> String {
    format!("Z{}", &t_name(r1, r2)[1..])
}

/// ℓ_s in the model coordinates:
/// Z_1^{s-1} + Σ_{k=2}^{s-1} C(s,k) λ^k Z_1^{s-k} Z_{X^k} + λ^s Z_{X^s}.
pub fn z_localizer(p: Prime, arity: usize, lam: &Poly, s: u16) -> Poly {
    let mut acc = Poly::monomial(p, arity, &[(0, s - 1)], 1);
    for k in 2..=s {
        let c = binom(s as u64, k as u64, p);
        let mut slots = vec![(k as usize, 1)];
        if s > k {
            slots.push((0, s - k));
        }
        let term = Poly::monomial(p, arity, &slots, c).mul(&lam.pow(k as u32).embed(arity, 0));
        acc = acc.add(&term);
    }
    acc
}

/// The same combination on the coordinate-algebra side, with each Z_{X^k}
/// replaced by the coinvariant projection of T_X^k.
pub fn t_localizer(u: &UnitGroup, cl: &Cleft, s: u16) -> Result<Element> {
    let sref = u.coords();
    let t1 = Element::gen(sref, 0);
    let tx = Element::gen(sref, 1);
    let mut acc = t1.pow(s as u32 - 1);
    for k in 2..=s {
        let c = binom(s as u64, k as u64, u.prime());
        let lam_k = Element::param_value(sref, &u.lam.pow(k as u32));
        let p_k = cl.coinvariant_part(&tx.pow(k as u32))?;
        acc = acc.add(&lam_k.mul(&t1.pow((s - k) as u32)).mul(&p_k).mul_scalar(c));
    }
    Ok(acc.reduced())
}

/// Unit identities ℓ_s·d_s = (T_1+λT_X)^s for 2 ≤ s ≤ p−1, as (s, lhs, rhs).
pub fn localizer_identities(u: &UnitGroup, cl: &Cleft) -> Result<Vec<(u16, Element, Element)>> {
    let d1 = u.diag_elem(1);
    let mut rows = Vec::new();
    for s in 2..u.prime().get() as u16 {
        let lhs = t_localizer(u, cl, s)?.mul(&u.diag_elem(s));
        rows.push((s, lhs.reduced(), d1.pow(s as u32)));
    }
    Ok(rows)
}

/// Q_s := P(T_X^s)·d_s + (ℓ_s − λ^s P(T_X^s))·T_{X^s}: eliminating the
/// coordinate T_{X^s} from the projection of the s-th power leaves Q_s over
/// the earlier pure-power coordinates.
pub fn pure_remainder(u: &UnitGroup, cl: &Cleft, s: u16) -> Result<Element> {
    let sref = u.coords();
    let tx = Element::gen(sref, 1);
    let txs_var = Element::gen(sref, s as usize);
    let p_s = cl.coinvariant_part(&tx.pow(s as u32))?;
    let lam_s = Element::param_value(sref, &u.lam.pow(s as u32));
    let ell = t_localizer(u, cl, s)?;
    Ok(p_s
        .mul(&u.diag_elem(s))
        .add(&ell.sub(&lam_s.mul(&p_s)).mul(&txs_var))
        .reduced())
}

/// Q_s must lie in the subring generated by T_1, …, T_{X^{s-1}} with
/// denominators among T_1, d_1, …, d_{s-1}.
pub fn pure_remainder_bound(u: &UnitGroup, s: u16, q: &Element) -> (bool, String) {
    let q = q.reduced();
    let allowed_dens: Vec<u32> = (0..s).map(|r| u.diag_den[r as usize] as u32).collect();
    let vars_ok = q.num().gen_support().iter().all(|&g| g < s as usize);
    let dens_ok = q.den().iter().all(|d| allowed_dens.contains(d));
    (vars_ok && dens_ok, q.render())
}

/// Splits P(T_X^{r1}T_Y^{r2}) = c·T_{X^{r1}Y^{r2}} + Q': the target
/// coordinate appears in degree at most one, and (c, Q') is returned.
pub fn mixed_extraction(
    u: &UnitGroup,
    cl: &Cleft,
    r1: u16,
    r2: u16,
) -> Result<(Element, Element)> {
    let sref = u.coords();
    let p = u.prime();
    let pp = p.get() as u16;
    let tx = Element::gen(sref, 1);
    let ty = Element::gen(sref, pp as usize);
    let x = tx.pow(r1 as u32).mul(&ty.pow(r2 as u32));
    let proj = cl.coinvariant_part(&x)?.reduced();
    let v = (r1 + pp * r2) as usize;
    let arity = sref.arity();
    let mut cof = Poly::zero(p, arity);
    let mut rem = Poly::zero(p, arity);
    for (key, coeff) in proj.num().terms() {
        match key.get(v).copied().unwrap_or(0) {
            0 => rem = rem.add(&Poly::monomial(p, arity, &slots_of(key), coeff)),
            1 => {
                let mut slots = slots_of(key);
                slots.retain(|&(g, _)| g != v);
                cof = cof.add(&Poly::monomial(p, arity, &slots, coeff));
            }
            _ => {
                return Err(Error::BasisExpansion(format!(
                    "{} has degree above 1 in the projection of {}",
                    sref.gen_names()[v],
                    sref.render_poly(x.num())
                )));
            }
        }
    }
    let den = proj.den().to_vec();
    Ok((
        Element::fraction(sref, cof, den.clone()).reduced(),
        Element::fraction(sref, rem, den).reduced(),
    ))
}

/// Closed form the extracted cofactor must equal:
/// −d_1^{r1+r2} / (d_{r1} · d_{(r1+r2) mod p}).
pub fn cofactor_closed_form(u: &UnitGroup, r1: u16, r2: u16) -> Result<Element> {
    let pp = u.prime().get() as u16;
    let s = r1 + r2;
    let den = u.diag_elem(r1).mul(&u.diag_elem(s % pp));
    Ok(u.diag_elem(1).pow(s as u32).mul(&den.invert()?).neg().reduced())
}

/// Q'_{r1 r2} must only involve coordinates T_{X^{l1}Y^{l2}} with (l2, l1)
/// lexicographically below (r2, r1).
pub fn mixed_remainder_bound(u: &UnitGroup, r1: u16, r2: u16, q: &Element) -> (bool, String) {
    let q = q.reduced();
    let pp = u.prime().get() as u16;
    let ok = q.num().gen_support().iter().all(|&g| {
        let l1 = (g as u16) % pp;
        let l2 = (g as u16) / pp;
        l2 < r2 || (l2 == r2 && l1 < r1)
    });
    (ok, q.render())
}

/// One labeled member of the coinvariant generating family.
pub struct GeneratorEntry {
    pub label: String,
    pub elem: Element,
}

/// The generating family of the coinvariant subalgebra: T_1, T_X^p, T_Y^p,
/// the projections of the pure and mixed powers, and the inverted
/// localizing elements 1/T_1, 1/d_1^p, d_s/d_1^s.
pub fn coinvariant_generators(u: &UnitGroup, cl: &Cleft) -> Result<Vec<GeneratorEntry>> {
    let sref = u.coords();
    let pp = u.prime().get() as u16;
    let t1 = Element::gen(sref, 0);
    let tx = Element::gen(sref, 1);
    let ty = Element::gen(sref, pp as usize);
    let mut out = vec![
        GeneratorEntry { label: "T1".into(), elem: t1.clone() },
        GeneratorEntry { label: "TX-pow-p".into(), elem: tx.pow(pp as u32) },
        GeneratorEntry { label: "TY-pow-p".into(), elem: ty.pow(pp as u32) },
    ];
    for s in 2..pp {
        out.push(GeneratorEntry {
            label: format!("P-{}", t_name(s, 0)),
            elem: cl.coinvariant_part(&tx.pow(s as u32))?,
        });
    }
    for r2 in 1..pp {
        for r1 in 1..pp {
            out.push(GeneratorEntry {
                label: format!("P-{}", t_name(r1, r2)),
                elem: cl.coinvariant_part(&tx.pow(r1 as u32).mul(&ty.pow(r2 as u32)))?,
            });
        }
    }
    out.push(GeneratorEntry { label: "inv-T1".into(), elem: t1.invert()? });
    let d1 = u.diag_elem(1);
    out.push(GeneratorEntry {
        label: "inv-d1-pow-p".into(),
        elem: d1.pow(pp as u32).invert()?,
    });
    for s in 2..pp {
        out.push(GeneratorEntry {
            label: format!("d{s}-over-d1-{s}"),
            elem: u.diag_elem(s).mul(&d1.pow(s as u32).invert()?).reduced(),
        });
    }
    Ok(out)
}

fn z_ring(name: &str, u: &UnitGroup, frobenius: bool) -> Result<ARef> {
    let p = u.prime();
    let pp = p.get() as u16;
    let mut names = Vec::new();
    for r2 in 0..pp {
        for r1 in 0..pp {
            names.push(z_name(r1, r2));
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let arity = names.len() + N_PARAMS;
    let head = if frobenius { pp } else { 1 };
    let lam_pow = u.lam.pow(head as u32).embed(arity, 0);
    let mut dens = vec![Poly::var(p, arity, 0)];
    dens.push(Poly::monomial(p, arity, &[(0, head)], 1).add(&lam_pow.mul(&Poly::var(p, arity, 1))));
    for s in 2..pp {
        dens.push(z_localizer(p, arity, &u.lam, s));
    }
    Algebra::new(name, p, &refs, vec![None; names.len()], dens)
}

/// Applies a partially specified coordinate assignment, requiring an image
/// for every coordinate in the support of the numerator and denominators.
fn apply_partial(images: &[Option<Element>], target: &ARef, x: &Element) -> Result<Element> {
    let src = x.algebra().clone();
    let mut out = apply_partial_poly(images, target, &src, x.num())?;
    for &dj in x.den() {
        let img = apply_partial_poly(images, target, &src, src.den_poly(dj as usize))?;
        out = out.mul(&img.invert()?);
    }
    Ok(out.reduced())
}

fn apply_partial_poly(
    images: &[Option<Element>],
    target: &ARef,
    src: &ARef,
    poly: &Poly,
) -> Result<Element> {
    let p = src.prime();
    let ng = src.n_gens();
    let mut out = Element::zero(target);
    for (key, coeff) in poly.terms() {
        let params = Poly::monomial(p, N_PARAMS, &slots_of(&key[ng..]), coeff);
        let mut term = Element::param_value(target, &params);
        for (g, e) in slots_of(&key[..ng]) {
            let img = images[g].as_ref().ok_or_else(|| {
                Error::IllDefinedHom("partial assignment".into(), src.gen_names()[g].clone())
            })?;
            term = term.mul(&img.pow(e as u32));
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// The localized polynomial models of the coinvariant subalgebra and the
/// maps between them and the coordinate algebra.
pub struct QuotientModel {
    /// R[Z_j][1/Z_1, 1/(Z_1+λZ_X), 1/ℓ_s].
    pub a_w: ARef,
    /// R[Z_j][1/Z_1, 1/(Z_1^p+λ^pZ_X), 1/ℓ_s].
    pub a_v: ARef,
    /// Coordinate algebra → polynomial model.
    pub chi: Hom,
    /// Polynomial model → coordinate algebra, Z_j ↦ P(T_X^{r1}T_Y^{r2}).
    pub xi: Hom,
    /// Frobenius comparison A_V → A_W.
    pub omega: Hom,
}

/// Builds both models and the maps χ, ξ, ω. The coordinate images of χ are
/// assembled one basis slot at a time: the pure-power tower by eliminating
/// Q_s, then the mixed coordinates in lexicographic (r2, r1) order by
/// eliminating Q'; validation of the assembled homs certifies that every
/// localizing element stays invertible on both sides.
pub fn build_quotient_model(u: &UnitGroup, cl: &Cleft) -> Result<QuotientModel> {
    let sref = u.coords();
    let p = u.prime();
    let pp = p.get() as u16;
    let n = (pp as usize) * (pp as usize);
    let a_w = z_ring("A_W", u, false)?;
    let a_v = z_ring("A_V", u, true)?;

    let mut imgs: Vec<Option<Element>> = vec![None; n];
    imgs[0] = Some(Element::gen(&a_w, 0));
    imgs[1] = Some(Element::gen(&a_w, 1));
    for s in 2..pp {
        let chi_q = apply_partial(&imgs, &a_w, &pure_remainder(u, cl, s)?)?;
        let mut head = Element::zero(&a_w);
        for k in 0..s {
            let lam_k = Element::param_value(&a_w, &u.lam.pow(k as u32));
            let img = imgs[k as usize].as_ref().unwrap();
            head = head.add(&lam_k.mul(img).mul_scalar(binom(s as u64, k as u64, p)));
        }
        let ell = Element::from_poly(&a_w, z_localizer(p, a_w.arity(), &u.lam, s));
        let zxs = Element::gen(&a_w, s as usize);
        imgs[s as usize] = Some(chi_q.sub(&head.mul(&zxs)).mul(&ell.invert()?).reduced());
    }
    imgs[pp as usize] = Some(Element::gen(&a_w, pp as usize));
    for r2 in 1..pp {
        for r1 in 0..pp {
            if r2 == 1 && r1 == 0 {
                continue;
            }
            let (cof, rem) = mixed_extraction(u, cl, r1, r2)?;
            let chi_rem = apply_partial(&imgs, &a_w, &rem)?;
            let chi_cof = apply_partial(&imgs, &a_w, &cof)?;
            let idx = (r1 + pp * r2) as usize;
            let zj = Element::gen(&a_w, idx);
            imgs[idx] = Some(zj.sub(&chi_rem).mul(&chi_cof.invert()?).reduced());
        }
    }
    let chi = Hom::new("χ", sref, &a_w, imgs.into_iter().map(|o| o.unwrap()).collect())?;

    let tx = Element::gen(sref, 1);
    let ty = Element::gen(sref, pp as usize);
    let mut xi_imgs = Vec::with_capacity(n);
    for r2 in 0..pp {
        for r1 in 0..pp {
            xi_imgs.push(match (r1, r2) {
                (0, 0) => Element::gen(sref, 0),
                (1, 0) => tx.clone(),
                (0, 1) => ty.clone(),
                _ => cl.coinvariant_part(&tx.pow(r1 as u32).mul(&ty.pow(r2 as u32)))?,
            });
        }
    }
    let xi = Hom::new("ξ", &a_w, sref, xi_imgs)?;

    let mut om_imgs = Vec::with_capacity(n);
    for r2 in 0..pp {
        for r1 in 0..pp {
            let g = Element::gen(&a_w, (r1 + pp * r2) as usize);
            om_imgs.push(if (r1, r2) == (1, 0) || (r1, r2) == (0, 1) {
                g.pow(p.get())
            } else {
                g
            });
        }
    }
    let omega = Hom::new("ω", &a_v, &a_w, om_imgs)?;

    Ok(QuotientModel { a_w, a_v, chi, xi, omega })
}

/// χ(d_s)·ℓ_s = (Z_1+λZ_X)^s in the polynomial model, 2 ≤ s ≤ p−1.
pub fn reciprocal_identities(u: &UnitGroup, m: &QuotientModel) -> Vec<(u16, Element, Element)> {
    let p = u.prime();
    let d1z = Element::from_poly(&m.a_w, m.a_w.den_poly(1).clone());
    let mut rows = Vec::new();
    for s in 2..p.get() as u16 {
        let ell = Element::from_poly(&m.a_w, z_localizer(p, m.a_w.arity(), &u.lam, s));
        let lhs = m.chi.apply(&u.diag_elem(s)).mul(&ell);
        rows.push((s, lhs.reduced(), d1z.pow(s as u32)));
    }
    rows
}

/// Every generator image must be a coefficient-one power of a single
/// coordinate, no two generators sharing one; distinct monomials then map to
/// distinct monomials.
pub fn monomial_injectivity(h: &Hom) -> (bool, String) {
    let mut seen = Vec::new();
    let mut desc = Vec::new();
    let mut ok = true;
    for i in 0..h.source().n_gens() {
        let img = h.image(i).reduced();
        let mut var = None;
        if img.den().is_empty() && img.num().n_terms() == 1 {
            if let Some((key, c)) = img.num().leading() {
                let slots = slots_of(key);
                if c == 1 && slots.len() == 1 && slots[0].0 < h.target().n_gens() {
                    var = Some(slots[0].0);
                }
            }
        }
        let name = &h.source().gen_names()[i];
        match var {
            Some(v) if !seen.contains(&v) => {
                seen.push(v);
                desc.push(format!("{}↦{}", name, img.render()));
            }
            _ => {
                ok = false;
                desc.push(format!("{}↦{} (collision or non-monomial)", name, img.render()));
            }
        }
    }
    (ok, desc.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cleft::build_cleft;
    use crate::param::Lambda;
    use crate::unit_group::build_unit_group;

    fn setup(p: u32) -> (UnitGroup, Cleft) {
        let u = build_unit_group(Prime::new(p).unwrap(), &Lambda::Generic).unwrap();
        let cl = build_cleft(&u).unwrap();
        (u, cl)
    }

    #[test]
    fn mixed_extraction_matches_frozen_values_p2() {
        let (u, cl) = setup(2);
        let sref = u.coords();
        let t1 = Element::gen(sref, 0);
        let tx = Element::gen(sref, 1);
        let ty = Element::gen(sref, 2);
        let d1 = u.diag_elem(1);
        let (cof, rem) = mixed_extraction(&u, &cl, 1, 1).unwrap();
        let t1_inv = t1.invert().unwrap();
        assert!(cof.eq_elem(&d1.mul(&t1_inv)));
        assert!(cof.eq_elem(&cofactor_closed_form(&u, 1, 1).unwrap()));
        assert!(rem.eq_elem(&tx.mul(&ty).mul(&t1_inv)));
        let (ok, w) = mixed_remainder_bound(&u, 1, 1, &rem);
        assert!(ok, "{w}");
    }

    #[test]
    fn mixed_extraction_matches_frozen_values_p3() {
        let (u, cl) = setup(3);
        let sref = u.coords();
        let t1 = Element::gen(sref, 0);
        let tx = Element::gen(sref, 1);
        let tx2 = Element::gen(sref, 2);
        let ty = Element::gen(sref, 3);
        let txy = Element::gen(sref, 4);
        let lam = Element::param_value(sref, &u.lam);
        let d1 = u.diag_elem(1);
        let d2 = u.diag_elem(2);

        let (cof, rem) = mixed_extraction(&u, &cl, 1, 1).unwrap();
        assert!(cof.eq_elem(&d1.mul(&d2.invert().unwrap()).neg()));
        assert!(cof.eq_elem(&cofactor_closed_form(&u, 1, 1).unwrap()));
        let expect = tx.mul(&ty).add(&lam.mul(&tx2).mul(&ty)).mul(&d2.invert().unwrap());
        assert!(rem.eq_elem(&expect));
        let (ok, w) = mixed_remainder_bound(&u, 1, 1, &rem);
        assert!(ok, "{w}");

        let (cof, rem) = mixed_extraction(&u, &cl, 0, 2).unwrap();
        assert!(cof.eq_elem(&cofactor_closed_form(&u, 0, 2).unwrap()));
        let t1d2_inv = t1.mul(&d2).invert().unwrap();
        let expect = ty
            .pow(2)
            .mul(&t1.sub(&lam.pow(2).mul(&tx2)))
            .add(&lam.mul(&d1).mul(&ty).mul(&txy).mul_scalar(2))
            .mul(&t1d2_inv);
        assert!(rem.eq_elem(&expect));
        let (ok, w) = mixed_remainder_bound(&u, 0, 2, &rem);
        assert!(ok, "{w}");

        for r2 in 1..3u16 {
            for r1 in 0..3u16 {
                if (r1, r2) == (0, 1) {
                    continue;
                }
                let (cof, rem) = mixed_extraction(&u, &cl, r1, r2).unwrap();
                assert!(
                    cof.eq_elem(&cofactor_closed_form(&u, r1, r2).unwrap()),
                    "cofactor at ({r1},{r2})"
                );
                let (ok, w) = mixed_remainder_bound(&u, r1, r2, &rem);
                assert!(ok, "remainder bound at ({r1},{r2}): {w}");
            }
        }
    }

    #[test]
    fn pure_remainder_and_identities_p3() {
        let (u, cl) = setup(3);
        let sref = u.coords();
        let tx = Element::gen(sref, 1);
        let q2 = pure_remainder(&u, &cl, 2).unwrap();
        assert!(q2.eq_elem(&tx.pow(2)));
        let (ok, w) = pure_remainder_bound(&u, 2, &q2);
        assert!(ok, "{w}");
        for (s, lhs, rhs) in localizer_identities(&u, &cl).unwrap() {
            assert!(lhs.eq_elem(&rhs), "localizer identity at s={s}");
        }
    }

    #[test]
    fn generator_family_is_coinvariant_p3() {
        let (u, cl) = setup(3);
        let gens = coinvariant_generators(&u, &cl).unwrap();
        let labels: Vec<&str> = gens.iter().map(|g| g.label.as_str()).collect();
        assert_eq!(
            labels,
            [
                "T1",
                "TX-pow-p",
                "TY-pow-p",
                "P-TX2",
                "P-TXY",
                "P-TX2Y",
                "P-TXY2",
                "P-TX2Y2",
                "inv-T1",
                "inv-d1-pow-p",
                "d2-over-d1-2",
            ]
        );
        for g in &gens {
            let (ok, l, r) = cl.coinvariant(&g.elem);
            assert!(ok, "{}: {} vs {}", g.label, l, r);
        }
    }

    #[test]
    fn polynomial_model_p2() {
        let (u, cl) = setup(2);
        let m = build_quotient_model(&u, &cl).unwrap();
        let aw = &m.a_w;
        let z1 = Element::gen(aw, 0);
        let zx = Element::gen(aw, 1);
        let zy = Element::gen(aw, 2);
        let zxy = Element::gen(aw, 3);
        let lam = Element::param_value(aw, &u.lam);
        let d1z = z1.add(&lam.mul(&zx));
        assert!(m.chi.image(0).eq_elem(&z1));
        assert!(m.chi.image(1).eq_elem(&zx));
        assert!(m.chi.image(2).eq_elem(&zy));
        let expect = z1.mul(&zxy).add(&zx.mul(&zy)).mul(&d1z.invert().unwrap());
        assert!(m.chi.image(3).eq_elem(&expect));

        assert!(m.xi.compose(&m.chi).unwrap().agrees_with(&Hom::identity(u.coords())));
        assert!(m.chi.compose(&m.xi).unwrap().agrees_with(&Hom::identity(aw)));

        assert_eq!(m.a_v.n_dens(), 2);
        let arity = m.a_v.arity();
        let expect_den = Poly::monomial(u.prime(), arity, &[(0, 2)], 1)
            .add(&u.lam.pow(2).embed(arity, 0).mul(&Poly::var(u.prime(), arity, 1)));
        assert_eq!(m.a_v.den_poly(1), &expect_den);

        assert!(m.omega.image(1).eq_elem(&zx.pow(2)));
        assert!(m.omega.image(2).eq_elem(&zy.pow(2)));
        assert!(m.omega.image(3).eq_elem(&zxy));
        let (ok, w) = monomial_injectivity(&m.omega);
        assert!(ok, "{w}");
        let dv = Element::from_poly(&m.a_v, m.a_v.den_poly(1).clone());
        assert!(m.omega.apply(&dv).eq_elem(&d1z.pow(2)));

        let xo = m.xi.compose(&m.omega).unwrap();
        let ty = Element::gen(u.coords(), 2);
        assert!(xo.image(2).eq_elem(&ty.pow(2)));
        for i in 0..4 {
            let (ok, l, r) = cl.coinvariant(xo.image(i));
            assert!(ok, "gen {i}: {l} vs {r}");
        }
    }

    #[test]
    fn polynomial_model_p3() {
        let (u, cl) = setup(3);
        let m = build_quotient_model(&u, &cl).unwrap();
        let aw = &m.a_w;
        let z1 = Element::gen(aw, 0);
        let zx = Element::gen(aw, 1);
        let zx2 = Element::gen(aw, 2);
        let lam = Element::param_value(aw, &u.lam);

        let ell2 = Element::from_poly(aw, z_localizer(u.prime(), aw.arity(), &u.lam, 2));
        assert!(m.xi.apply(&ell2).eq_elem(&t_localizer(&u, &cl, 2).unwrap()));
        let num = zx.pow(2).sub(&z1.add(&lam.mul(&zx).mul_scalar(2)).mul(&zx2));
        assert!(m.chi.image(2).eq_elem(&num.mul(&ell2.invert().unwrap())));

        for (s, lhs, rhs) in reciprocal_identities(&u, &m) {
            assert!(lhs.eq_elem(&rhs), "reciprocal identity at s={s}");
        }

        assert!(m.xi.compose(&m.chi).unwrap().agrees_with(&Hom::identity(u.coords())));
        assert!(m.chi.compose(&m.xi).unwrap().agrees_with(&Hom::identity(aw)));

        let (ok, w) = monomial_injectivity(&m.omega);
        assert!(ok, "{w}");
        let d1z = Element::from_poly(aw, aw.den_poly(1).clone());
        let dv = Element::from_poly(&m.a_v, m.a_v.den_poly(1).clone());
        assert!(m.omega.apply(&dv).eq_elem(&d1z.pow(3)));
        let xo = m.xi.compose(&m.omega).unwrap();
        for i in 0..9 {
            let (ok, l, r) = cl.coinvariant(xo.image(i));
            assert!(ok, "gen {i}: {l} vs {r}");
        }
    }

    #[test]
    fn polynomial_model_degenerate_lambda_p3() {
        let u = build_unit_group(Prime::new(3).unwrap(), &Lambda::Scalar(0)).unwrap();
        let cl = build_cleft(&u).unwrap();
        let m = build_quotient_model(&u, &cl).unwrap();
        assert!(m.xi.compose(&m.chi).unwrap().agrees_with(&Hom::identity(u.coords())));
        assert!(m.chi.compose(&m.xi).unwrap().agrees_with(&Hom::identity(&m.a_w)));
        let (ok, w) = monomial_injectivity(&m.omega);
        assert!(ok, "{w}");
    }
}
