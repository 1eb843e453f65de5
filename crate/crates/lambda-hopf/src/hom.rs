//! Algebra homomorphisms between presented algebras, validated at
//! construction: generator images must satisfy the source relations, and
//! every declared source denominator must map to an invertible element.

use crate::algebra::{ARef, Element};
use crate::poly::Poly;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Hom {
    pub name: String,
    source: ARef,
    target: ARef,
    images: Vec<Element>,
    den_inv: Vec<Element>,
}

impl Hom {
    /// Validates and builds: one image per source generator.
    pub fn new(name: &str, source: &ARef, target: &ARef, images: Vec<Element>) -> Result<Hom> {
        if images.len() != source.n_gens() {
            return Err(Error::IllDefinedHom(
                name.into(),
                format!("{} images for {} generators", images.len(), source.n_gens()),
            ));
        }
        for (i, img) in images.iter().enumerate() {
            assert!(
                img.algebra().same(target),
                "image of `{}` lives in `{}`, not `{}`",
                source.gen_names()[i],
                img.algebra().name,
                target.name
            );
            if let Some(rel) = source.relation(i) {
                let lhs = img.pow(rel.exponent as u32);
                let rhs = Element::param_value(target, &rel.replacement.params_part());
                if !lhs.eq_elem(&rhs) {
                    return Err(Error::IllDefinedHom(
                        name.into(),
                        format!(
                            "image of `{}` violates its power relation: {} vs {}",
                            source.gen_names()[i],
                            lhs.render(),
                            rhs.render()
                        ),
                    ));
                }
            }
        }
        let mut hom = Hom {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            images,
            den_inv: Vec::new(),
        };
        for j in 0..source.n_dens() {
            let mapped = hom.apply_poly(source.den_poly(j));
            let inv = mapped.invert().map_err(|e| {
                Error::IllDefinedHom(
                    name.into(),
                    format!(
                        "denominator {} maps to a non-invertible element: {e}",
                        source.render_poly(source.den_poly(j))
                    ),
                )
            })?;
            hom.den_inv.push(inv);
        }
        Ok(hom)
    }

    pub fn source(&self) -> &ARef {
        &self.source
    }

    pub fn target(&self) -> &ARef {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    /// Substitutes generator images into a reduced numerator polynomial.
    /// Power tables are memoized per call.
    pub fn apply_poly(&self, poly: &Poly) -> Element {
        assert_eq!(poly.arity(), self.source.arity(), "arity mismatch");
        let n = self.source.n_gens();
        let mut pows: Vec<Vec<Element>> = (0..n).map(|_| vec![Element::one(&self.target)]).collect();
        let mut acc = Element::zero(&self.target);
        for (key, c) in poly.terms() {
            let param_mono = Poly::monomial(
                poly.prime(),
                crate::param::N_PARAMS,
                &key[n..]
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| (i, e))
                    .collect::<Vec<_>>(),
                c,
            );
            let mut term = Element::param_value(&self.target, &param_mono);
            for (i, &e) in key[..n].iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e as usize {
                    let next = pows[i].last().unwrap().mul(&self.images[i]);
                    pows[i].push(next);
                }
                term = term.mul(&pows[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Applies to a formal fraction: numerator by substitution, denominator
    /// factors by their precomputed inverses.
    pub fn apply(&self, x: &Element) -> Element {
        assert!(
            x.algebra().same(&self.source),
            "`{}` applied to an element of `{}`",
            self.name,
            x.algebra().name
        );
        let mut out = self.apply_poly(x.num());
        for &j in x.den() {
            out = out.mul(&self.den_inv[j as usize]);
        }
        out.reduced()
    }

    pub fn identity(alg: &ARef) -> Hom {
        let images = (0..alg.n_gens()).map(|i| Element::gen(alg, i)).collect();
        Hom::new("id", alg, alg, images).expect("identity is always well defined")
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &Hom) -> Result<Hom> {
        if !inner.target.same(&self.source) {
            return Err(Error::IllDefinedHom(
                format!("{}∘{}", self.name, inner.name),
                format!(
                    "codomain `{}` does not match domain `{}`",
                    inner.target.name, self.source.name
                ),
            ));
        }
        let images = inner.images.iter().map(|x| self.apply(x)).collect();
        Hom::new(
            &format!("{}∘{}", self.name, inner.name),
            &inner.source,
            &self.target,
            images,
        )
    }

    /// Do two homs with equal domains agree on every generator?
    pub fn agrees_with(&self, other: &Hom) -> bool {
        assert!(self.source.same(&other.source) && self.target.same(&other.target));
        (0..self.source.n_gens()).all(|i| self.images[i].eq_elem(&other.images[i]))
    }
}

/// Shifts an element of one tensor block into a wider tensor algebra.
fn shift_element(x: &Element, dst: &ARef, gen_off: usize, den_off: usize) -> Element {
    let num = x.num().embed(dst.arity(), gen_off);
    let den: Vec<u32> = x.den().iter().map(|&j| j + den_off as u32).collect();
    Element::fraction(dst, num, den)
}

/// Inclusion homs of each tensor leg into the tensor algebra.
pub fn inclusions(t: &ARef) -> Vec<Hom> {
    let legs = t.legs().expect("inclusions of a non-tensor algebra");
    legs.iter()
        .enumerate()
        .map(|(k, leg)| {
            let images = (0..leg.factor.n_gens())
                .map(|i| Element::gen(t, leg.gen_range.start + i))
                .collect();
            Hom::new(&format!("incl{k}"), &leg.factor, t, images)
                .expect("leg inclusion is always well defined")
        })
        .collect()
}

/// f₀⊗f₁⊗…: acts leg by leg from a tensor source into `dst`, which must be
/// the tensor of the leg targets in order (flattened).
pub fn tensor_hom(name: &str, src: &ARef, leg_homs: &[&Hom], dst: &ARef) -> Result<Hom> {
    let legs = src.legs().expect("tensor_hom needs a tensor source");
    assert_eq!(legs.len(), leg_homs.len(), "one hom per tensor leg");
    let mut images = Vec::with_capacity(src.n_gens());
    let mut gen_off = 0usize;
    let mut den_off = 0usize;
    for (leg, h) in legs.iter().zip(leg_homs) {
        if !h.source().same(&leg.factor) {
            return Err(Error::IllDefinedHom(
                name.into(),
                format!("leg hom `{}` does not start at the leg factor", h.name),
            ));
        }
        let tgt = h.target();
        // the target block of dst must replicate this leg target's dens
        for j in 0..tgt.n_dens() {
            let expected = tgt.den_poly(j).embed(dst.arity(), gen_off);
            let got = dst.den_poly(den_off + j);
            if *got != dst.reduce_poly(&expected) {
                return Err(Error::IllDefinedHom(
                    name.into(),
                    format!("denominator layout mismatch in `{}`", dst.name),
                ));
            }
        }
        for i in 0..leg.factor.n_gens() {
            images.push(shift_element(h.image(i), dst, gen_off, den_off));
        }
        gen_off += tgt.n_gens();
        den_off += tgt.n_dens();
    }
    if gen_off != dst.n_gens() || den_off != dst.n_dens() {
        return Err(Error::IllDefinedHom(
            name.into(),
            format!("leg targets do not fill `{}`", dst.name),
        ));
    }
    Hom::new(name, src, dst, images)
}

/// The multiplication map A⊗A → A (or any tensor power collapsing to A):
/// every copy of a generator maps to the generator itself.
pub fn mult_hom(t: &ARef, alg: &ARef) -> Result<Hom> {
    let legs = t.legs().expect("mult_hom needs a tensor source");
    let mut images = Vec::with_capacity(t.n_gens());
    for leg in legs {
        assert!(leg.factor.same(alg), "mult legs must match the target algebra");
        for i in 0..alg.n_gens() {
            images.push(Element::gen(alg, i));
        }
    }
    Hom::new("mult", t, alg, images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{tensor, Algebra, PowerRelation};
    use crate::param::{Prime, N_PARAMS, P_LAMBDA};

    fn p3() -> Prime {
        Prime::new(3).unwrap()
    }

    fn trunc(pr: Prime) -> ARef {
        let rel = Some(PowerRelation {
            exponent: pr.get() as u16,
            replacement: Poly::zero(pr, N_PARAMS),
        });
        Algebra::new("A", pr, &["X", "Y"], vec![rel.clone(), rel], vec![]).unwrap()
    }

    #[test]
    fn substitution_respects_relations() {
        let pr = p3();
        let a = trunc(pr);
        // X ↦ 0, Y ↦ T is fine into a free algebra with T³ unconstrained? No:
        // X³ = 0 forces the image cubed to vanish, so map into A itself.
        let f = Hom::new(
            "swap",
            &a,
            &a,
            vec![Element::gen_named(&a, "Y"), Element::gen_named(&a, "X")],
        )
        .unwrap();
        let x = Element::gen_named(&a, "X");
        let y = Element::gen_named(&a, "Y");
        assert!(f.apply(&x).eq_elem(&y));
        let xy2 = x.mul(&y.pow(2));
        assert!(f.apply(&xy2).eq_elem(&y.mul(&x.pow(2))));
    }

    #[test]
    fn relation_violation_is_rejected() {
        let pr = p3();
        let a = trunc(pr);
        let free = Algebra::new("free", pr, &["T"], vec![None], vec![]).unwrap();
        let bad = Hom::new(
            "bad",
            &a,
            &free,
            vec![Element::gen_named(&free, "T"), Element::zero(&free)],
        );
        assert!(matches!(bad, Err(Error::IllDefinedHom(_, _))));
    }

    #[test]
    fn denominator_must_stay_invertible() {
        let pr = p3();
        let arity = 1 + N_PARAMS;
        let gm = Algebra::new("Gm", pr, &["T"], vec![None], vec![Poly::var(pr, arity, 0)])
            .unwrap();
        let a = trunc(pr);
        // T ↦ X maps the declared denominator to a nilpotent
        let bad = Hom::new("bad", &gm, &a, vec![Element::gen_named(&a, "X")]);
        assert!(matches!(bad, Err(Error::IllDefinedHom(_, _))));
        // T ↦ 1 + λX maps it to a unit
        let lam_x = Poly::monomial(pr, a.arity(), &[(0, 1), (2 + P_LAMBDA, 1)], 1);
        let ok = Hom::new(
            "unit",
            &gm,
            &a,
            vec![Element::from_poly(&a, Poly::one(pr, a.arity()).add(&lam_x))],
        )
        .unwrap();
        let tinv = Element::fraction(&gm, Poly::one(pr, arity), vec![0]);
        let img = ok.apply(&tinv);
        assert!(img.den().is_empty(), "unit denominator expands: {}", img.render());
    }

    #[test]
    fn composition_and_identity() {
        let pr = p3();
        let a = trunc(pr);
        let f = Hom::new(
            "swap",
            &a,
            &a,
            vec![Element::gen_named(&a, "Y"), Element::gen_named(&a, "X")],
        )
        .unwrap();
        let ff = f.compose(&f).unwrap();
        assert!(ff.agrees_with(&Hom::identity(&a)));
    }

    #[test]
    fn tensor_hom_shifts_legs() {
        let pr = p3();
        let a = trunc(pr);
        let t2 = tensor("A⊗A", &[&a, &a]).unwrap();
        let f = Hom::new(
            "swap",
            &a,
            &a,
            vec![Element::gen_named(&a, "Y"), Element::gen_named(&a, "X")],
        )
        .unwrap();
        let id = Hom::identity(&a);
        let fid = tensor_hom("swap⊗id", &t2, &[&f, &id], &t2).unwrap();
        let x0 = Element::gen_named(&t2, "X@0");
        let y1 = Element::gen_named(&t2, "Y@1");
        assert!(fid.apply(&x0).eq_elem(&Element::gen_named(&t2, "Y@0")));
        assert!(fid.apply(&y1).eq_elem(&y1));
    }

    #[test]
    fn mult_collapses_legs() {
        let pr = p3();
        let a = trunc(pr);
        let t2 = tensor("A⊗A", &[&a, &a]).unwrap();
        let m = mult_hom(&t2, &a).unwrap();
        let x0 = Element::gen_named(&t2, "X@0");
        let x1 = Element::gen_named(&t2, "X@1");
        let x = Element::gen_named(&a, "X");
        assert!(m.apply(&x0.mul(&x1)).eq_elem(&x.pow(2)));
    }
}
