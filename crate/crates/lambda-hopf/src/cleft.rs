//! Cleft-extension machinery on the unit-group coordinate algebra: the
//! coaction over the finite kernel, the cleaving map sending each basis
//! monomial to its coordinate, its convolution inverse, the projection onto
//! the coinvariant subalgebra, and the inverse of the normal-basis
//! isomorphism b⊗a ↦ b·φ(a).

use crate::algebra::{tensor, ARef, Element};
use crate::hom::Hom;
use crate::hopf::{
    coinvariance_witness, convolution_inverse, split_terms, Comodule, LinearMap,
};
use crate::poly::{slots_of, Poly};
use crate::unit_group::UnitGroup;
use crate::{Error, Result};

/// The coordinate algebra of the unit group as a comodule algebra over the
/// kernel, together with the cleaving data.
pub struct Cleft {
    /// Coaction target: coordinate algebra ⊗ kernel carrier.
    pub sa: ARef,
    /// ρ(T_j) = Σ c^j_{ik} T_i ⊗ b_k over the comultiplication structure
    /// constants of the kernel, the right leg taken in the kernel itself.
    pub rho: Hom,
    pub comodule: Comodule,
    /// Cleaving map on the kernel basis: b_j ↦ T_j.
    pub phi: LinearMap,
    /// Convolution inverse of the cleaving map.
    pub phi_inv: LinearMap,
}

pub fn build_cleft(u: &UnitGroup) -> Result<Cleft> {
    let s = &u.hopf.carrier;
    let a = &u.kernel.carrier;
    let p = s.prime();
    let sa = tensor(&format!("{}⊗{}", s.name, a.name), &[s, a])?;
    let basis = u.kernel.basis.as_ref().expect("kernel carries a basis");
    let n = u.st.n;
    let mut images = Vec::with_capacity(n);
    for col in &u.st.cols {
        let mut acc = Poly::zero(p, sa.arity());
        for (i, k, coeff) in col {
            let mut slots = vec![(*i, 1u16)];
            for (g, e) in slots_of(basis.gen_key(*k)) {
                slots.push((n + g, e));
            }
            let mono = Poly::monomial(p, sa.arity(), &slots, 1);
            acc = acc.add(&mono.mul(&coeff.embed(sa.arity(), 0)));
        }
        images.push(Element::from_poly(&sa, acc));
    }
    let rho = Hom::new("ρ", s, &sa, images)?;
    let comodule = Comodule {
        name: format!("{} over {}", s.name, a.name),
        carrier: s.clone(),
        target: sa.clone(),
        hopf: u.kernel.clone(),
        coaction: rho.clone(),
    };
    let phi = LinearMap {
        name: "φ".into(),
        images: (0..n).map(|j| Element::gen(s, j)).collect(),
    };
    let phi_inv = convolution_inverse(&u.kernel, &u.st, &phi, s)?;
    Ok(Cleft { sa, rho, comodule, phi, phi_inv })
}

impl Cleft {
    pub fn carrier(&self) -> &ARef {
        &self.comodule.carrier
    }

    /// Splits ρ(x) into (left-leg element of the coordinate algebra, kernel
    /// basis index) terms. Requires denominator-free x.
    fn coaction_terms(&self, x: &Element) -> Result<Vec<(Element, usize)>> {
        let s = self.carrier().clone();
        let basis = self.comodule.hopf.basis.as_ref().expect("based kernel");
        let ng = self.comodule.hopf.carrier.n_gens();
        let rx = self.rho.apply(x);
        let mut out = Vec::new();
        for (legs, coeff) in split_terms(&self.sa, &rx)? {
            let (key, _) = legs[1].leading().expect("split term is a monomial");
            let idx = basis.index_of(&key[..ng]).ok_or_else(|| {
                Error::BasisExpansion(format!(
                    "coaction leg is not a basis monomial: {}",
                    legs[1].render(self.comodule.hopf.carrier.gen_names())
                ))
            })?;
            let x0 = Element::from_poly(&s, legs[0].clone())
                .mul(&Element::param_value(&s, &coeff));
            out.push((x0, idx));
        }
        Ok(out)
    }

    /// x ↦ Σ x₍₀₎·φ⁻¹(x₍₁₎): projects onto the coinvariant subalgebra.
    pub fn coinvariant_part(&self, x: &Element) -> Result<Element> {
        let mut acc = Element::zero(self.carrier());
        for (x0, idx) in self.coaction_terms(x)? {
            acc = acc.add(&x0.mul(&self.phi_inv.images[idx]));
        }
        Ok(acc.reduced())
    }

    /// Coefficients of the inverse normal-basis image of x, indexed by the
    /// kernel basis: x ↦ Σ_b P(x₍₀₎)·coeff ⊗ b with Σ_b out[b]·φ(b) = x.
    pub fn normal_basis_inverse(&self, x: &Element) -> Result<Vec<Element>> {
        let basis = self.comodule.hopf.basis.as_ref().expect("based kernel");
        let mut out = vec![Element::zero(self.carrier()); basis.len()];
        for (x0, idx) in self.coaction_terms(x)? {
            out[idx] = out[idx].add(&self.coinvariant_part(&x0)?);
        }
        Ok(out)
    }

    /// Reassembles Σ_b coeffs[b]·φ(b).
    pub fn normal_basis_assemble(&self, coeffs: &[Element]) -> Element {
        let mut acc = Element::zero(self.carrier());
        for (c, img) in coeffs.iter().zip(&self.phi.images) {
            acc = acc.add(&c.mul(img));
        }
        acc
    }

    /// Is ρ(x) = x⊗1?
    pub fn coinvariant(&self, x: &Element) -> (bool, String, String) {
        coinvariance_witness(&self.comodule, x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{check_comodule, convolve, conv_unit};
    use crate::param::{Lambda, Prime};
    use crate::unit_group::build_unit_group;

    fn setup(p: u32) -> (UnitGroup, Cleft) {
        let u = build_unit_group(Prime::new(p).unwrap(), &Lambda::Generic).unwrap();
        let c = build_cleft(&u).unwrap();
        (u, c)
    }

    fn tvar(u: &UnitGroup, r1: u16, r2: u16) -> Element {
        let idx = r1 as usize + u.prime().get() as usize * r2 as usize;
        Element::gen(&u.hopf.carrier, idx)
    }

    #[test]
    fn coaction_printed_images_and_comodule_axioms() {
        for p in [2u32, 3] {
            let (u, c) = setup(p);
            let s = &u.hopf.carrier;
            let incl = crate::hom::inclusions(&c.sa);
            let d1 = incl[0].apply(&u.diag_elem(1));
            let x_leg = Element::gen_named(&c.sa, "X@1");
            let y_leg = Element::gen_named(&c.sa, "Y@1");
            // ρ(T_1) = T_1⊗1, ρ(T_X) = T_X⊗1 + d_1⊗X, ρ(T_Y) = T_Y⊗1 + d_1⊗Y
            let t1 = incl[0].apply(&tvar(&u, 0, 0));
            assert!(c.rho.apply(&tvar(&u, 0, 0)).eq_elem(&t1));
            let tx = incl[0].apply(&tvar(&u, 1, 0));
            assert!(c.rho.apply(&tvar(&u, 1, 0)).eq_elem(&tx.add(&d1.mul(&x_leg))));
            let ty = incl[0].apply(&tvar(&u, 0, 1));
            assert!(c.rho.apply(&tvar(&u, 0, 1)).eq_elem(&ty.add(&d1.mul(&y_leg))));
            for chk in check_comodule(&c.comodule).unwrap() {
                assert!(chk.ok, "p={p} {}: {} vs {}", chk.label, chk.left, chk.right);
            }
            let _ = s;
        }
    }

    #[test]
    fn cleaving_map_inverse_printed_values_p3() {
        let (u, c) = setup(3);
        let s = &u.hopf.carrier;
        let t1 = tvar(&u, 0, 0);
        let tx = tvar(&u, 1, 0);
        let ty = tvar(&u, 0, 1);
        let tx2 = tvar(&u, 2, 0);
        let txy = tvar(&u, 1, 1);
        let d1 = u.diag_elem(1);
        let d2 = u.diag_elem(2);
        let lam = Element::param_value(s, &u.lam);
        // φ⁻¹(1) = 1/T_1, φ⁻¹(X) = −T_X/(T_1·d_1), φ⁻¹(Y) = −T_Y/(T_1·d_1)
        assert!(c.phi_inv.images[0].eq_elem(&t1.invert().unwrap()));
        let den = t1.mul(&d1).invert().unwrap();
        assert!(c.phi_inv.images[1].eq_elem(&tx.neg().mul(&den)));
        assert!(c.phi_inv.images[3].eq_elem(&ty.neg().mul(&den)));
        // φ⁻¹(X²) = (2T_X² + λT_XT_{X²} − T_1T_{X²}) / (T_1·d_1·d_2)
        let den2 = t1.mul(&d1).mul(&d2).invert().unwrap();
        let num_x2 = tx
            .pow(2)
            .mul_scalar(2)
            .add(&lam.mul(&tx).mul(&tx2))
            .sub(&t1.mul(&tx2));
        assert!(c.phi_inv.images[2].eq_elem(&num_x2.mul(&den2)));
        // φ⁻¹(XY) = (2T_XT_Y + λT_{X²}T_Y − T_1T_XY) / (T_1·d_1·d_2)
        let num_xy = tx
            .mul(&ty)
            .mul_scalar(2)
            .add(&lam.mul(&tx2).mul(&ty))
            .sub(&t1.mul(&txy));
        assert!(c.phi_inv.images[4].eq_elem(&num_xy.mul(&den2)));
        // φ⁻¹ of the grouplike (1+λX)^r collapses to 1/d_r
        let kernel = &u.kernel;
        let one_lx = Element::one(&kernel.carrier).add(
            &Element::param_value(&kernel.carrier, &u.lam)
                .mul(&Element::gen_named(&kernel.carrier, "X")),
        );
        for r in 1u32..3 {
            let img = c
                .phi_inv
                .apply_expand(kernel, &one_lx.pow(r), s)
                .unwrap();
            assert!(img.eq_elem(&u.diag_elem(r as u16).invert().unwrap()), "r={r}");
        }
    }

    #[test]
    fn cleaving_map_convolution_laws() {
        for p in [2u32, 3] {
            let (u, c) = setup(p);
            let s = &u.hopf.carrier;
            let unit = conv_unit(&u.kernel, s);
            let lhs = convolve(&u.st, &c.phi, &c.phi_inv, s);
            let rhs = convolve(&u.st, &c.phi_inv, &c.phi, s);
            for j in 0..u.st.n {
                assert!(lhs.images[j].eq_elem(&unit.images[j]), "p={p} φ*φ⁻¹ at {j}");
                assert!(rhs.images[j].eq_elem(&unit.images[j]), "p={p} φ⁻¹*φ at {j}");
            }
        }
    }

    #[test]
    fn coinvariant_projection_values_p3() {
        let (u, c) = setup(3);
        let s = &u.hopf.carrier;
        let t1 = tvar(&u, 0, 0);
        let tx = tvar(&u, 1, 0);
        let ty = tvar(&u, 0, 1);
        let tx2 = tvar(&u, 2, 0);
        let txy = tvar(&u, 1, 1);
        let lam = Element::param_value(s, &u.lam);
        let d1 = u.diag_elem(1);
        let d2inv = u.diag_elem(2).invert().unwrap();
        assert!(c.coinvariant_part(&t1).unwrap().eq_elem(&Element::one(s)));
        assert!(c.coinvariant_part(&tx).unwrap().is_zero());
        assert!(c.coinvariant_part(&ty).unwrap().is_zero());
        // P(T_X²) = (T_X² − T_1·T_{X²}) / d_2
        let p_x2 = c.coinvariant_part(&tx.pow(2)).unwrap();
        assert!(p_x2.eq_elem(&tx.pow(2).sub(&t1.mul(&tx2)).mul(&d2inv)));
        // P(T_X·T_Y) = (T_XT_Y + λT_{X²}T_Y − d_1·T_XY) / d_2
        let p_xy = c.coinvariant_part(&tx.mul(&ty)).unwrap();
        let expect = tx
            .mul(&ty)
            .add(&lam.mul(&tx2).mul(&ty))
            .sub(&d1.mul(&txy))
            .mul(&d2inv);
        assert!(p_xy.eq_elem(&expect));
        // P(T_Y²) = (T_Y²(T_1 − λ²T_{X²}) + 2λd_1T_YT_XY − d_1²T_{Y²}) / (T_1·d_2)
        let ty2 = tvar(&u, 0, 2);
        let p_y2 = c.coinvariant_part(&ty.pow(2)).unwrap();
        let num = ty
            .pow(2)
            .mul(&t1.sub(&lam.pow(2).mul(&tx2)))
            .add(&lam.mul(&d1).mul(&ty).mul(&txy).mul_scalar(2))
            .sub(&d1.pow(2).mul(&ty2));
        assert!(p_y2.eq_elem(&num.mul(&t1.invert().unwrap()).mul(&d2inv)));
        // the s = 2 reciprocity: (T_1 + λ²P(T_X²))·d_2 = d_1²
        let lhs = t1.add(&lam.pow(2).mul(&p_x2)).mul(&u.diag_elem(2));
        assert!(lhs.eq_elem(&d1.pow(2)));
        // projections land in the coinvariant subalgebra
        for x in [&p_x2, &p_xy, &p_y2] {
            let (ok, l, r) = c.coinvariant(x);
            assert!(ok, "{l} vs {r}");
        }
        // powers of the pure coordinates are already coinvariant
        assert!(c.coinvariant(&tx.pow(3)).0);
        assert!(c.coinvariant(&ty.pow(3)).0);
        assert!(c.coinvariant_part(&tx.pow(3)).unwrap().eq_elem(
            &tx.pow(3).mul(&t1.invert().unwrap())
        ));
    }

    #[test]
    fn coinvariant_projection_values_p2() {
        let (u, c) = setup(2);
        let t1 = tvar(&u, 0, 0);
        let tx = tvar(&u, 1, 0);
        let ty = tvar(&u, 0, 1);
        let txy = tvar(&u, 1, 1);
        let d1 = u.diag_elem(1);
        // φ⁻¹(XY) = T_XY / (T_1·d_1)
        let den = t1.mul(&d1).invert().unwrap();
        assert!(c.phi_inv.images[3].eq_elem(&txy.mul(&den)));
        // P(T_X·T_Y) = (T_XT_Y + d_1·T_XY) / T_1
        let p_xy = c.coinvariant_part(&tx.mul(&ty)).unwrap();
        let expect = tx
            .mul(&ty)
            .add(&d1.mul(&txy))
            .mul(&t1.invert().unwrap());
        assert!(p_xy.eq_elem(&expect));
        assert!(c.coinvariant(&p_xy).0);
        assert!(c.coinvariant(&tx.pow(2)).0);
        assert!(c.coinvariant(&ty.pow(2)).0);
    }

    #[test]
    fn normal_basis_roundtrip() {
        for p in [2u32, 3] {
            let (u, c) = setup(p);
            let s = &u.hopf.carrier;
            let lam = Element::param_value(s, &u.lam);
            let n = u.st.n;
            let mut samples: Vec<Element> = (0..n).map(|j| Element::gen(s, j)).collect();
            samples.push(
                Element::gen(s, 1)
                    .mul(&Element::gen(s, n - 1))
                    .add(&lam.mul(&Element::gen(s, 0).pow(2))),
            );
            samples.push(u.diag_elem(1).mul(&Element::gen(s, n - 1)));
            for x in &samples {
                let coeffs = c.normal_basis_inverse(x).unwrap();
                let back = c.normal_basis_assemble(&coeffs);
                assert!(back.eq_elem(x), "p={p} roundtrip of {}", x.render());
                for (b, cb) in coeffs.iter().enumerate() {
                    let (ok, l, r) = c.coinvariant(cb);
                    assert!(ok, "p={p} coefficient {b}: {l} vs {r}");
                }
            }
        }
    }
}
