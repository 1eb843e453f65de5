//! The catalog of affine group schemes over F_p[λ]: the additive and
//! multiplicative lines, the λ-deformed line and plane, and the finite
//! λ-deformed kernel of Frobenius on the plane, together with the relating
//! morphisms (Frobenius, the inclusion/projection pair of the plane
//! extension, and the λ-scaling map from the multiplicative line).

use crate::algebra::{tensor, ARef, Algebra, Element, PowerRelation};
use crate::hom::Hom;
use crate::hopf::{scalar_algebra, Basis, Hopf};
use crate::param::{Lambda, Prime, N_PARAMS};
use crate::poly::Poly;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchemeTag {
    Additive,
    Multiplicative,
    LambdaLine,
    LambdaPlane,
    FrobeniusKernel,
}

pub const ALL_TAGS: [SchemeTag; 5] = [
    SchemeTag::Additive,
    SchemeTag::Multiplicative,
    SchemeTag::LambdaLine,
    SchemeTag::LambdaPlane,
    SchemeTag::FrobeniusKernel,
];

impl SchemeTag {
    pub fn name(self) -> &'static str {
        match self {
            SchemeTag::Additive => "additive-group",
            SchemeTag::Multiplicative => "multiplicative-group",
            SchemeTag::LambdaLine => "deformed-line",
            SchemeTag::LambdaPlane => "deformed-plane",
            SchemeTag::FrobeniusKernel => "frobenius-kernel",
        }
    }
}

/// 1 + λ·g at the given generator slot, λ given at parameter arity.
fn one_plus_lam(p: Prime, arity: usize, lam: &Poly, slot: usize) -> Poly {
    let l = lam.embed(arity, 0);
    Poly::one(p, arity).add(&l.mul(&Poly::var(p, arity, slot)))
}

pub fn build_scheme(tag: SchemeTag, p: Prime, lambda: &Lambda) -> Result<Hopf> {
    build_scheme_at(tag, p, &lambda.poly(p))
}

/// Internal builder over an arbitrary parameter-ring value of λ, so the
/// Frobenius source can be constructed at λ^p.
pub fn build_scheme_at(tag: SchemeTag, p: Prime, lam: &Poly) -> Result<Hopf> {
    let scalars = scalar_algebra(p);
    let name = tag.name();
    match tag {
        SchemeTag::Additive => {
            let carrier = Algebra::new(name, p, &["T"], vec![None], vec![])?;
            let t2 = tensor(&format!("{name}⊗2"), &[&carrier, &carrier])?;
            let dt = Element::gen_named(&t2, "T@0").add(&Element::gen_named(&t2, "T@1"));
            let comult = Hom::new("Δ", &carrier, &t2, vec![dt])?;
            let counit = Hom::new("ε", &carrier, &scalars, vec![Element::zero(&scalars)])?;
            let s = Hom::new("S", &carrier, &carrier, vec![Element::gen(&carrier, 0).neg()])?;
            Ok(Hopf::assemble(name, carrier, t2, comult, counit, Some(s), None))
        }
        SchemeTag::Multiplicative => {
            let arity = 1 + N_PARAMS;
            let carrier =
                Algebra::new(name, p, &["T"], vec![None], vec![Poly::var(p, arity, 0)])?;
            let t2 = tensor(&format!("{name}⊗2"), &[&carrier, &carrier])?;
            let dt = Element::gen_named(&t2, "T@0").mul(&Element::gen_named(&t2, "T@1"));
            let comult = Hom::new("Δ", &carrier, &t2, vec![dt])?;
            let counit = Hom::new("ε", &carrier, &scalars, vec![Element::one(&scalars)])?;
            let sinv = Element::fraction(&carrier, Poly::one(p, arity), vec![0]);
            let s = Hom::new("S", &carrier, &carrier, vec![sinv])?;
            Ok(Hopf::assemble(name, carrier, t2, comult, counit, Some(s), None))
        }
        SchemeTag::LambdaLine => {
            let arity = 1 + N_PARAMS;
            let den = one_plus_lam(p, arity, lam, 0);
            let carrier = Algebra::new(name, p, &["T"], vec![None], vec![den])?;
            let t2 = tensor(&format!("{name}⊗2"), &[&carrier, &carrier])?;
            let (t0, t1) = (Element::gen_named(&t2, "T@0"), Element::gen_named(&t2, "T@1"));
            let l2 = Element::param_value(&t2, lam);
            let dt = t0.add(&t1).add(&l2.mul(&t0).mul(&t1));
            let comult = Hom::new("Δ", &carrier, &t2, vec![dt])?;
            let counit = Hom::new("ε", &carrier, &scalars, vec![Element::zero(&scalars)])?;
            let st = Element::fraction(&carrier, Poly::var(p, arity, 0).neg(), vec![0]);
            let s = Hom::new("S", &carrier, &carrier, vec![st])?;
            Ok(Hopf::assemble(name, carrier, t2, comult, counit, Some(s), None))
        }
        SchemeTag::LambdaPlane => {
            let arity = 2 + N_PARAMS;
            let den = one_plus_lam(p, arity, lam, 0);
            let carrier = Algebra::new(name, p, &["X", "Y"], vec![None, None], vec![den])?;
            let (comult, counit, s) = plane_maps(&carrier, lam, true)?;
            let t2 = comult.target().clone();
            Ok(Hopf::assemble(name, carrier, t2, comult, counit, Some(s), None))
        }
        SchemeTag::FrobeniusKernel => {
            let e = p.get() as u16;
            let rel = Some(PowerRelation { exponent: e, replacement: Poly::zero(p, N_PARAMS) });
            let carrier = Algebra::new(name, p, &["X", "Y"], vec![rel.clone(), rel], vec![])?;
            let (comult, counit, s) = plane_maps(&carrier, lam, false)?;
            let t2 = comult.target().clone();
            let basis = kernel_basis(&carrier, p);
            Ok(Hopf::assemble(name, carrier, t2, comult, counit, Some(s), Some(basis)))
        }
    }
}

/// Shared structure maps of the deformed plane and its Frobenius kernel:
/// Δ(X) = X⊗1 + (1+λX)⊗X, Δ(Y) = Y⊗1 + (1+λX)⊗Y, ε = 0,
/// S(X) = −X/(1+λX), S(Y) = −Y/(1+λX). In the kernel the divisor is a unit
/// and the antipode images expand to polynomials.
fn plane_maps(carrier: &ARef, lam: &Poly, fraction_antipode: bool) -> Result<(Hom, Hom, Hom)> {
    let p = carrier.prime();
    let scalars = scalar_algebra(p);
    let t2 = tensor(&format!("{}⊗2", carrier.name), &[carrier, carrier])?;
    let (x0, x1) = (Element::gen_named(&t2, "X@0"), Element::gen_named(&t2, "X@1"));
    let (y0, y1) = (Element::gen_named(&t2, "Y@0"), Element::gen_named(&t2, "Y@1"));
    let l2 = Element::param_value(&t2, lam);
    let one_lx0 = Element::one(&t2).add(&l2.mul(&x0));
    let dx = x0.add(&one_lx0.mul(&x1));
    let dy = y0.add(&one_lx0.mul(&y1));
    let comult = Hom::new("Δ", carrier, &t2, vec![dx, dy])?;
    let counit = Hom::new(
        "ε",
        carrier,
        &scalars,
        vec![Element::zero(&scalars), Element::zero(&scalars)],
    )?;
    let x = Element::gen_named(carrier, "X");
    let y = Element::gen_named(carrier, "Y");
    let s = if fraction_antipode {
        let sx = Element::fraction(carrier, x.num().neg(), vec![0]);
        let sy = Element::fraction(carrier, y.num().neg(), vec![0]);
        Hom::new("S", carrier, carrier, vec![sx, sy])?
    } else {
        let inv = Element::one(carrier)
            .add(&Element::param_value(carrier, lam).mul(&x))
            .invert()?;
        Hom::new("S", carrier, carrier, vec![x.neg().mul(&inv), y.neg().mul(&inv)])?
    };
    Ok((comult, counit, s))
}

/// Monomial basis X^{r1}·Y^{r2}, 0 ≤ r1, r2 < p, at index r1 + p·r2.
fn kernel_basis(carrier: &ARef, p: Prime) -> Basis {
    let q = p.get() as u16;
    let mut monos = Vec::new();
    let mut names = Vec::new();
    for r2 in 0..q {
        for r1 in 0..q {
            monos.push(vec![(0usize, r1), (1usize, r2)]);
            names.push(crate::algebra::mono_string(
                &[r1, r2],
                carrier.gen_names(),
            ));
        }
    }
    Basis::new(carrier, monos, names)
}

/// The relative Frobenius on the deformed plane, as the carrier map from
/// the plane at λ^p to the plane at λ: X ↦ X^p, Y ↦ Y^p.
pub fn frobenius_hom(p: Prime, lambda: &Lambda) -> Result<(Hopf, Hopf, Hom)> {
    let lam = lambda.poly(p);
    let lam_p = lam.pow(p.get());
    let source = build_scheme_at(SchemeTag::LambdaPlane, p, &lam_p)?;
    let target = build_scheme_at(SchemeTag::LambdaPlane, p, &lam)?;
    let e = p.get();
    let f = Hom::new(
        "F",
        &source.carrier,
        &target.carrier,
        vec![
            Element::gen_named(&target.carrier, "X").pow(e),
            Element::gen_named(&target.carrier, "Y").pow(e),
        ],
    )?;
    Ok((source, target, f))
}

/// Carrier maps of the short exact sequence of the deformed plane:
/// the projection onto the additive line (X ↦ 0, Y ↦ T) and the section
/// of the deformed line (T ↦ X). Their composite is the trivial map.
pub fn exact_sequence_maps(
    plane: &Hopf,
    additive: &Hopf,
    line: &Hopf,
) -> Result<(Hom, Hom)> {
    let i_sharp = Hom::new(
        "i♮",
        &plane.carrier,
        &additive.carrier,
        vec![
            Element::zero(&additive.carrier),
            Element::gen_named(&additive.carrier, "T"),
        ],
    )?;
    let epi_sharp = Hom::new(
        "epi♮",
        &line.carrier,
        &plane.carrier,
        vec![Element::gen_named(&plane.carrier, "X")],
    )?;
    Ok((i_sharp, epi_sharp))
}

/// The λ-scaling comparison with the multiplicative line: T ↦ 1 + λT on
/// carriers. Its inverse exists exactly when λ is an invertible scalar.
pub fn alpha_lambda(
    mult: &Hopf,
    line: &Hopf,
    p: Prime,
    lambda: &Lambda,
) -> Result<(Hom, Option<Hom>)> {
    let lam = lambda.poly(p);
    let t = Element::gen_named(&line.carrier, "T");
    let img = Element::one(&line.carrier).add(&Element::param_value(&line.carrier, &lam).mul(&t));
    let fwd = Hom::new("α", &mult.carrier, &line.carrier, vec![img])?;
    let inverse = match lambda {
        Lambda::Scalar(k) if *k != 0 => {
            let kinv = p.inv(*k)?;
            let tm = Element::gen_named(&mult.carrier, "T");
            let img = tm.sub(&Element::one(&mult.carrier)).mul_scalar(kinv);
            Some(Hom::new("α⁻¹", &line.carrier, &mult.carrier, vec![img])?)
        }
        _ => None,
    };
    Ok((fwd, inverse))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_bialgebra_hom, check_hopf_axioms, Point};

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    fn assert_all_ok(checks: &[crate::hopf::GenCheck]) {
        for c in checks {
            assert!(c.ok, "{}: {} vs {}", c.label, c.left, c.right);
        }
    }

    #[test]
    fn catalog_satisfies_axioms_at_p3_generic() {
        for tag in ALL_TAGS {
            let h = build_scheme(tag, p(3), &Lambda::Generic).unwrap();
            assert_all_ok(&check_hopf_axioms(&h).unwrap());
        }
    }

    #[test]
    fn catalog_satisfies_axioms_at_p2_lambda_zero() {
        for tag in ALL_TAGS {
            let h = build_scheme(tag, p(2), &Lambda::Scalar(0)).unwrap();
            assert_all_ok(&check_hopf_axioms(&h).unwrap());
        }
    }

    #[test]
    fn frobenius_is_a_bialgebra_hom() {
        let (src, dst, f) = frobenius_hom(p(2), &Lambda::Generic).unwrap();
        assert_all_ok(&check_bialgebra_hom(&f, &src, &dst).unwrap());
    }

    #[test]
    fn exact_sequence_maps_are_bialgebra_homs_with_trivial_composite() {
        let pr = p(3);
        let lam = Lambda::Generic;
        let plane = build_scheme(SchemeTag::LambdaPlane, pr, &lam).unwrap();
        let add = build_scheme(SchemeTag::Additive, pr, &lam).unwrap();
        let line = build_scheme(SchemeTag::LambdaLine, pr, &lam).unwrap();
        let (i_sharp, epi_sharp) = exact_sequence_maps(&plane, &add, &line).unwrap();
        assert_all_ok(&check_bialgebra_hom(&i_sharp, &plane, &add).unwrap());
        assert_all_ok(&check_bialgebra_hom(&epi_sharp, &line, &plane).unwrap());
        let composite = i_sharp.compose(&epi_sharp).unwrap();
        assert!(composite.image(0).is_zero());
    }

    #[test]
    fn alpha_compares_multiplicative_and_deformed_lines() {
        let pr = p(5);
        let mult = build_scheme(SchemeTag::Multiplicative, pr, &Lambda::Generic).unwrap();
        let line = build_scheme(SchemeTag::LambdaLine, pr, &Lambda::Generic).unwrap();
        let (fwd, inv) = alpha_lambda(&mult, &line, pr, &Lambda::Generic).unwrap();
        assert!(inv.is_none());
        assert_all_ok(&check_bialgebra_hom(&fwd, &mult, &line).unwrap());

        let line2 = build_scheme(SchemeTag::LambdaLine, pr, &Lambda::Scalar(2)).unwrap();
        let (fwd2, inv2) = alpha_lambda(&mult, &line2, pr, &Lambda::Scalar(2)).unwrap();
        let inv2 = inv2.unwrap();
        let rt = inv2.compose(&fwd2).unwrap();
        assert!(rt.agrees_with(&Hom::identity(&mult.carrier)));
        let rt2 = fwd2.compose(&inv2).unwrap();
        assert!(rt2.agrees_with(&Hom::identity(&line2.carrier)));
    }

    #[test]
    fn deformed_line_group_law_is_associative_on_points() {
        let pr = p(3);
        let line = build_scheme(SchemeTag::LambdaLine, pr, &Lambda::Generic).unwrap();
        // point values must keep 1+λ·value invertible, so declare each
        let arity = 3 + N_PARAMS;
        let lam = Lambda::Generic.poly(pr);
        let dens = (0..3).map(|i| one_plus_lam(pr, arity, &lam, i)).collect();
        let b = Algebra::new("B", pr, &["s", "t", "u"], vec![None, None, None], dens)
            .unwrap();
        let pt = |name: &str| {
            Point::new(&line, &b, name, vec![Element::gen_named(&b, name)]).unwrap()
        };
        let (x, y, z) = (pt("s"), pt("t"), pt("u"));
        // group law: s + t + λst
        let xy = Point::mul(&line, &x, &y).unwrap();
        let lam = Element::param_value(&b, &Lambda::Generic.poly(pr));
        let s = Element::gen_named(&b, "s");
        let t = Element::gen_named(&b, "t");
        assert!(xy.hom.image(0).eq_elem(&s.add(&t).add(&lam.mul(&s).mul(&t))));
        let left = Point::mul(&line, &xy, &z).unwrap();
        let right = Point::mul(&line, &x, &Point::mul(&line, &y, &z).unwrap()).unwrap();
        assert!(left.agrees(&right));
        let e = Point::identity(&line, &b).unwrap();
        let xinv = Point::inv_via_antipode(&line, &x).unwrap();
        assert!(Point::mul(&line, &x, &xinv).unwrap().agrees(&e));
    }

    #[test]
    fn kernel_inherits_the_plane_structure() {
        let pr = p(3);
        let plane = build_scheme(SchemeTag::LambdaPlane, pr, &Lambda::Generic).unwrap();
        let kernel = build_scheme(SchemeTag::FrobeniusKernel, pr, &Lambda::Generic).unwrap();
        let q = Hom::new(
            "q",
            &plane.carrier,
            &kernel.carrier,
            vec![
                Element::gen_named(&kernel.carrier, "X"),
                Element::gen_named(&kernel.carrier, "Y"),
            ],
        )
        .unwrap();
        assert_all_ok(&check_bialgebra_hom(&q, &plane, &kernel).unwrap());
        // the kernel antipode is the image of the plane antipode
        let via_plane = q.compose(plane.antipode.as_ref().unwrap()).unwrap();
        let direct = kernel.antipode.as_ref().unwrap().compose(&q).unwrap();
        assert!(via_plane.agrees_with(&direct));
    }

    #[test]
    fn kernel_at_lambda_zero_is_a_product_of_additive_kernels() {
        let pr = p(2);
        let kernel = build_scheme(SchemeTag::FrobeniusKernel, pr, &Lambda::Scalar(0)).unwrap();
        let t2 = &kernel.t2;
        let dx = kernel.comult.image(0);
        let expect = Element::gen_named(t2, "X@0").add(&Element::gen_named(t2, "X@1"));
        assert!(dx.eq_elem(&expect));
    }
}
