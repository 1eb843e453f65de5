//! Hopf and bialgebra structure on a presented carrier, with mechanical
//! axiom checks, the structure tensor of a distinguished linear basis,
//! convolution of basis functionals, group-like points, and comodule
//! algebra checks. Every structure map is a validated algebra hom, so
//! multiplicativity is never checked separately; axioms are compared on
//! generators, which determine algebra homs.

use std::collections::BTreeMap;

use crate::algebra::{tensor, ARef, Algebra, Element};
use crate::hom::{inclusions, mult_hom, tensor_hom, Hom};
use crate::param::{Prime, N_PARAMS};
use crate::poly::{slots_of, Poly};
use crate::{Error, Result};

/// The 0-generator coefficient algebra F_p[λ, a, c, d].
pub fn scalar_algebra(p: Prime) -> ARef {
    Algebra::new("R", p, &[], vec![], vec![]).expect("scalar algebra is valid")
}

/// A distinguished module basis of monomials in the carrier generators.
#[derive(Clone, Debug)]
pub struct Basis {
    monos: Vec<Box<[u16]>>,
    names: Vec<String>,
    index: BTreeMap<Box<[u16]>, usize>,
}

impl Basis {
    /// `monos[j]` as (slot, exponent) pairs over carrier generators.
    pub fn new(carrier: &ARef, monos: Vec<Vec<(usize, u16)>>, names: Vec<String>) -> Basis {
        assert_eq!(monos.len(), names.len());
        let n = carrier.n_gens();
        let mut keys = Vec::with_capacity(monos.len());
        let mut index = BTreeMap::new();
        for (j, m) in monos.iter().enumerate() {
            let mut key = vec![0u16; n];
            for &(slot, e) in m {
                key[slot] = e;
            }
            let key: Box<[u16]> = key.into_boxed_slice();
            assert!(index.insert(key.clone(), j).is_none(), "duplicate basis monomial");
            keys.push(key);
        }
        Basis { monos: keys, names, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn name(&self, j: usize) -> &str {
        &self.names[j]
    }

    pub fn gen_key(&self, j: usize) -> &[u16] {
        &self.monos[j]
    }

    /// Index of a generator-part exponent vector.
    pub fn index_of(&self, gen_key: &[u16]) -> Option<usize> {
        self.index.get(gen_key).copied()
    }

    /// The monomial as a carrier polynomial.
    pub fn mono_poly(&self, carrier: &ARef, j: usize) -> Poly {
        Poly::monomial(carrier.prime(), carrier.arity(), &slots_of(&self.monos[j]), 1)
    }

    pub fn mono_elem(&self, carrier: &ARef, j: usize) -> Element {
        Element::from_poly(carrier, self.mono_poly(carrier, j))
    }
}

/// A bialgebra (antipode absent) or Hopf algebra (antipode present) on a
/// presented carrier.
#[derive(Clone, Debug)]
pub struct Hopf {
    pub name: String,
    pub carrier: ARef,
    pub t2: ARef,
    pub scalars: ARef,
    pub comult: Hom,
    pub counit: Hom,
    pub antipode: Option<Hom>,
    pub basis: Option<Basis>,
}

impl Hopf {
    pub fn assemble(
        name: &str,
        carrier: ARef,
        t2: ARef,
        comult: Hom,
        counit: Hom,
        antipode: Option<Hom>,
        basis: Option<Basis>,
    ) -> Hopf {
        assert!(comult.source().same(&carrier) && comult.target().same(&t2));
        assert!(counit.source().same(&carrier) && counit.target().n_gens() == 0);
        if let Some(s) = &antipode {
            assert!(s.source().same(&carrier) && s.target().same(&carrier));
        }
        Hopf {
            name: name.into(),
            carrier,
            t2,
            scalars: counit.target().clone(),
            comult,
            counit,
            antipode,
            basis,
        }
    }

    /// ε followed by the unit: carrier → carrier, g ↦ ε(g)·1.
    pub fn counit_endo(&self) -> Result<Hom> {
        let u = Hom::new("u", &self.scalars, &self.carrier, vec![])?;
        u.compose(&self.counit)
    }

    /// ε of a carrier element as a parameter-ring value in `target`.
    pub fn counit_value(&self, x: &Element, target: &ARef) -> Element {
        let v = self.counit.apply(x);
        assert!(v.den().is_empty(), "counit values are polynomial");
        Element::param_value(target, &v.num().params_part())
    }
}

/// One generator-level comparison of two composite maps.
#[derive(Clone, Debug)]
pub struct GenCheck {
    pub label: String,
    pub ok: bool,
    pub left: String,
    pub right: String,
}

fn compare_homs(family: &str, f: &Hom, g: &Hom) -> Vec<GenCheck> {
    assert!(f.source().same(g.source()));
    let src = f.source();
    (0..src.n_gens())
        .map(|i| {
            let (l, r) = (f.image(i), g.image(i));
            GenCheck {
                label: format!("{family}/{}", src.gen_names()[i]),
                ok: l.eq_elem(r),
                left: l.render(),
                right: r.render(),
            }
        })
        .collect()
}

/// Coassociativity, both counit laws, and (when an antipode is present)
/// both antipode laws, each compared on every carrier generator.
pub fn check_hopf_axioms(h: &Hopf) -> Result<Vec<GenCheck>> {
    let c = &h.carrier;
    let id = Hom::identity(c);
    let t3 = tensor(&format!("{}^⊗3", c.name), &[c, c, c])?;
    let mut out = Vec::new();

    let left = tensor_hom("Δ⊗id", &h.t2, &[&h.comult, &id], &t3)?.compose(&h.comult)?;
    let right = tensor_hom("id⊗Δ", &h.t2, &[&id, &h.comult], &t3)?.compose(&h.comult)?;
    out.extend(compare_homs("coassoc", &left, &right));

    let m = mult_hom(&h.t2, c)?;
    let eps_endo = h.counit_endo()?;
    let cl = m
        .compose(&tensor_hom("ε⊗id", &h.t2, &[&eps_endo, &id], &h.t2)?)?
        .compose(&h.comult)?;
    out.extend(compare_homs("counit-left", &cl, &id));
    let cr = m
        .compose(&tensor_hom("id⊗ε", &h.t2, &[&id, &eps_endo], &h.t2)?)?
        .compose(&h.comult)?;
    out.extend(compare_homs("counit-right", &cr, &id));

    if let Some(s) = &h.antipode {
        let al = m
            .compose(&tensor_hom("S⊗id", &h.t2, &[s, &id], &h.t2)?)?
            .compose(&h.comult)?;
        out.extend(compare_homs("antipode-left", &al, &eps_endo));
        let ar = m
            .compose(&tensor_hom("id⊗S", &h.t2, &[&id, s], &h.t2)?)?
            .compose(&h.comult)?;
        out.extend(compare_homs("antipode-right", &ar, &eps_endo));
    }
    Ok(out)
}

/// Does `f` commute with comultiplication and counit? Compared on
/// generators of the source carrier.
pub fn check_bialgebra_hom(f: &Hom, src: &Hopf, dst: &Hopf) -> Result<Vec<GenCheck>> {
    assert!(f.source().same(&src.carrier) && f.target().same(&dst.carrier));
    let mut out = Vec::new();
    let ff = tensor_hom(&format!("{0}⊗{0}", f.name), &src.t2, &[f, f], &dst.t2)?;
    let lhs = dst.comult.compose(f)?;
    let rhs = ff.compose(&src.comult)?;
    out.extend(compare_homs("comult", &lhs, &rhs));
    let le = dst.counit.compose(f)?;
    out.extend(compare_homs("counit", &le, &src.counit));
    Ok(out)
}

/// Splits a denominator-free element of a tensor algebra into
/// (per-leg monomials at factor arity, parameter coefficient) terms.
pub fn split_terms(t: &ARef, x: &Element) -> Result<Vec<(Vec<Poly>, Poly)>> {
    if !x.den().is_empty() {
        return Err(Error::BasisExpansion(format!(
            "fraction where a plain tensor was needed: {}",
            x.render()
        )));
    }
    let legs = t
        .legs()
        .ok_or_else(|| Error::BasisExpansion(format!("`{}` is not a tensor algebra", t.name)))?;
    let p = t.prime();
    let mut out = Vec::new();
    for (key, c) in x.num().terms() {
        let polys = legs
            .iter()
            .map(|leg| {
                Poly::monomial(
                    p,
                    leg.factor.arity(),
                    &slots_of(&key[leg.gen_range.clone()]),
                    1,
                )
            })
            .collect();
        let param = Poly::monomial(p, N_PARAMS, &slots_of(&key[t.n_gens()..]), c);
        out.push((polys, param));
    }
    Ok(out)
}

/// c[j] = {(i, k, coeff)}: Δ(b_j) = Σ coeff · b_i ⊗ b_k, coefficients in
/// the parameter ring.
#[derive(Clone, Debug)]
pub struct StructureTensor {
    pub n: usize,
    pub cols: Vec<Vec<(usize, usize, Poly)>>,
}

pub fn structure_tensor(h: &Hopf) -> Result<StructureTensor> {
    let basis = h
        .basis
        .as_ref()
        .ok_or_else(|| Error::BasisExpansion(format!("`{}` carries no basis", h.name)))?;
    let n = basis.len();
    let ngen = h.carrier.n_gens();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let dj = h.comult.apply(&basis.mono_elem(&h.carrier, j));
        let mut col = Vec::new();
        for (legs, c) in split_terms(&h.t2, &dj)? {
            let mut idx = [0usize; 2];
            for (slot, leg_poly) in legs.iter().enumerate() {
                let (key, coeff) = leg_poly.leading().expect("legs are monomials");
                assert_eq!(coeff, 1);
                idx[slot] = basis.index_of(&key[..ngen]).ok_or_else(|| {
                    Error::BasisExpansion(format!(
                        "comultiplication of {} leaves the declared basis",
                        basis.name(j)
                    ))
                })?;
            }
            col.push((idx[0], idx[1], c));
        }
        col.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        cols.push(col);
    }
    Ok(StructureTensor { n, cols })
}

impl StructureTensor {
    /// Right legs never exceed the column index (the property that drives
    /// the convolution-inverse recursion).
    pub fn right_triangular(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.iter().all(|&(_, k, _)| k <= j))
    }

    /// Left legs never exceed the column index: the matrix of Δ against the
    /// basis is upper triangular.
    pub fn left_triangular(&self) -> bool {
        self.cols
            .iter()
            .enumerate()
            .all(|(j, col)| col.iter().all(|&(i, _, _)| i <= j))
    }
}

/// A module map out of the based carrier: one target element per basis
/// monomial.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub name: String,
    pub images: Vec<Element>,
}

impl LinearMap {
    /// Expands a denominator-free carrier element over the basis and maps it.
    pub fn apply_expand(&self, h: &Hopf, x: &Element, target: &ARef) -> Result<Element> {
        let basis = h.basis.as_ref().expect("based carrier");
        if !x.den().is_empty() {
            return Err(Error::BasisExpansion(format!(
                "fraction where a basis expansion was needed: {}",
                x.render()
            )));
        }
        let ngen = h.carrier.n_gens();
        let mut acc = Element::zero(target);
        for (key, c) in x.num().terms() {
            let j = basis.index_of(&key[..ngen]).ok_or_else(|| {
                Error::BasisExpansion("element leaves the declared basis".into())
            })?;
            let param = Poly::monomial(x.num().prime(), N_PARAMS, &slots_of(&key[ngen..]), c);
            acc = acc.add(&Element::param_value(target, &param).mul(&self.images[j]));
        }
        Ok(acc)
    }
}

/// The convolution unit b_j ↦ ε(b_j)·1.
pub fn conv_unit(h: &Hopf, target: &ARef) -> LinearMap {
    let basis = h.basis.as_ref().expect("based carrier");
    let images = (0..basis.len())
        .map(|j| h.counit_value(&basis.mono_elem(&h.carrier, j), target))
        .collect();
    LinearMap { name: "uε".into(), images }
}

/// (f*g)(b_j) = Σ coeff · f(b_i) · g(b_k) over Δ(b_j) = Σ coeff · b_i⊗b_k.
pub fn convolve(
    st: &StructureTensor,
    f: &LinearMap,
    g: &LinearMap,
    target: &ARef,
) -> LinearMap {
    let images = (0..st.n)
        .map(|j| {
            let mut acc = Element::zero(target);
            for (i, k, c) in &st.cols[j] {
                let term = Element::param_value(target, c)
                    .mul(&f.images[*i])
                    .mul(&g.images[*k]);
                acc = acc.add(&term);
            }
            acc.reduced()
        })
        .collect();
    LinearMap { name: format!("{}*{}", f.name, g.name), images }
}

/// Solves (f*g) = uε for g column by column, peeling the diagonal cofactor.
/// Requires the right-triangular property.
pub fn convolution_inverse(
    h: &Hopf,
    st: &StructureTensor,
    f: &LinearMap,
    target: &ARef,
) -> Result<LinearMap> {
    if !st.right_triangular() {
        return Err(Error::ConvolutionStuck(
            "structure tensor is not right-triangular".into(),
        ));
    }
    let basis = h.basis.as_ref().expect("based carrier");
    let mut images: Vec<Element> = Vec::with_capacity(st.n);
    for j in 0..st.n {
        let mut partial = Element::zero(target);
        let mut cof = Element::zero(target);
        for (i, k, c) in &st.cols[j] {
            let fc = Element::param_value(target, c).mul(&f.images[*i]);
            if *k == j {
                cof = cof.add(&fc);
            } else {
                partial = partial.add(&fc.mul(&images[*k]));
            }
        }
        let eps = h.counit_value(&basis.mono_elem(&h.carrier, j), target);
        let cof_inv = cof.invert().map_err(|e| {
            Error::ConvolutionStuck(format!(
                "diagonal cofactor at {} is not invertible: {e}",
                basis.name(j)
            ))
        })?;
        images.push(eps.sub(&partial).mul(&cof_inv).reduced());
    }
    Ok(LinearMap { name: format!("{}⁻¹", f.name), images })
}

/// A point of the represented group: an algebra hom from the carrier.
#[derive(Clone, Debug)]
pub struct Point {
    pub hom: Hom,
}

impl Point {
    pub fn new(h: &Hopf, target: &ARef, name: &str, images: Vec<Element>) -> Result<Point> {
        Ok(Point { hom: Hom::new(name, &h.carrier, target, images)? })
    }

    pub fn identity(h: &Hopf, target: &ARef) -> Result<Point> {
        let images = (0..h.carrier.n_gens())
            .map(|i| h.counit_value(&Element::gen(&h.carrier, i), target))
            .collect();
        Point::new(h, target, "e", images)
    }

    /// Group law: (x·y)(g) = Σ x(g₍₁₎)·y(g₍₂₎) over Δ(g).
    pub fn mul(h: &Hopf, x: &Point, y: &Point) -> Result<Point> {
        let target = x.hom.target().clone();
        assert!(target.same(y.hom.target()));
        let mut images = Vec::with_capacity(h.carrier.n_gens());
        for i in 0..h.carrier.n_gens() {
            let d = h.comult.image(i);
            let mut acc = Element::zero(&target);
            for (legs, c) in split_terms(&h.t2, d)? {
                let term = Element::param_value(&target, &c)
                    .mul(&x.hom.apply_poly(&legs[0]))
                    .mul(&y.hom.apply_poly(&legs[1]));
                acc = acc.add(&term);
            }
            images.push(acc.reduced());
        }
        Point::new(
            h,
            &target,
            &format!("{}·{}", x.hom.name, y.hom.name),
            images,
        )
    }

    pub fn inv_via_antipode(h: &Hopf, x: &Point) -> Result<Point> {
        let s = h
            .antipode
            .as_ref()
            .ok_or_else(|| Error::Mismatch(format!("`{}` has no antipode", h.name)))?;
        Ok(Point { hom: x.hom.compose(s)? })
    }

    /// The point as a basis functional b_j ↦ x(b_j).
    pub fn as_functional(&self, h: &Hopf) -> LinearMap {
        let basis = h.basis.as_ref().expect("based carrier");
        let images = (0..basis.len())
            .map(|j| self.hom.apply_poly(&basis.mono_poly(&h.carrier, j)).reduced())
            .collect();
        LinearMap { name: format!("pt:{}", self.hom.name), images }
    }

    pub fn agrees(&self, other: &Point) -> bool {
        self.hom.agrees_with(&other.hom)
    }
}

/// A comodule algebra: carrier C with coaction ρ: C → C⊗H.
#[derive(Clone, Debug)]
pub struct Comodule {
    pub name: String,
    pub carrier: ARef,
    pub target: ARef,
    pub hopf: Hopf,
    pub coaction: Hom,
}

/// Coassociativity into C⊗H⊗H and the counit contraction, per generator.
pub fn check_comodule(cm: &Comodule) -> Result<Vec<GenCheck>> {
    let c = &cm.carrier;
    let hc = &cm.hopf.carrier;
    let id_c = Hom::identity(c);
    let id_h = Hom::identity(hc);
    let t_chh = tensor(&format!("{}⊗{}⊗{}", c.name, hc.name, hc.name), &[c, hc, hc])?;
    let mut out = Vec::new();

    let lhs = tensor_hom("ρ⊗id", &cm.target, &[&cm.coaction, &id_h], &t_chh)?
        .compose(&cm.coaction)?;
    let rhs = tensor_hom("id⊗Δ", &cm.target, &[&id_c, &cm.hopf.comult], &t_chh)?
        .compose(&cm.coaction)?;
    out.extend(compare_homs("coassoc", &lhs, &rhs));

    for i in 0..c.n_gens() {
        let rho_g = cm.coaction.image(i);
        let mut acc = Element::zero(c);
        for (legs, coeff) in split_terms(&cm.target, rho_g)? {
            let eps = cm
                .hopf
                .counit_value(&Element::from_poly(hc, legs[1].clone()), c);
            acc = acc.add(
                &Element::param_value(c, &coeff)
                    .mul(&Element::from_poly(c, legs[0].clone()))
                    .mul(&eps),
            );
        }
        let g = Element::gen(c, i);
        out.push(GenCheck {
            label: format!("counit/{}", c.gen_names()[i]),
            ok: acc.eq_elem(&g),
            left: acc.render(),
            right: g.render(),
        });
    }
    Ok(out)
}

/// Is ρ(x) = x⊗1?
pub fn coinvariance_witness(cm: &Comodule, x: &Element) -> (bool, String, String) {
    let lhs = cm.coaction.apply(x);
    let rhs = inclusions(&cm.target)[0].apply(x);
    (lhs.eq_elem(&rhs), lhs.render(), rhs.render())
}
