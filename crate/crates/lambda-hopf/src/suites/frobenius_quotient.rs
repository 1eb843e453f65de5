//! Suite `thm-4.4`: the Frobenius comparison ω between the two localized
//! polynomial models is well defined on the distinguished denominator,
//! injective on monomials, and lands in the coinvariant subalgebra after
//! composing with ξ.

use crate::algebra::Element;
use crate::cleft::build_cleft;
use crate::quotient::{build_quotient_model, monomial_injectivity};
use crate::report::Check;
use crate::unit_group::build_unit_group;
use crate::Result;

use super::SuiteConfig;

pub fn run(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let p = cfg.prime;
    if p.get() >= 5 {
        // Shares the quotient-model build, which is pinned to p ≤ 3.
        return Ok(vec![Check::skip("thm-4.4/prime-gate", "Thm 4.4")]);
    }
    let u = build_unit_group(p, &cfg.lambda)?;
    let cl = build_cleft(&u)?;
    let m = build_quotient_model(&u, &cl)?;
    let mut rows = Vec::new();

    // ω(Z_1^p + λ^p·Z_X) = (Z_1 + λ·Z_X)^p, so the distinguished
    // denominator of the source stays invertible in the target.
    let source_den = Element::from_poly(&m.a_v, m.a_v.den_poly(1).clone());
    let got = m.omega.apply(&source_den);
    let lam = Element::param_value(&m.a_w, &u.lam);
    let expect = Element::gen_named(&m.a_w, "Z1")
        .add(&lam.mul(&Element::gen_named(&m.a_w, "ZX")))
        .pow(p.get());
    rows.push(Check::witnessed(
        "thm-4.4/omega/well-defined",
        "Thm 4.4",
        got.eq_elem(&expect),
        got.render(),
        expect.render(),
    ));

    let (ok, desc) = monomial_injectivity(&m.omega);
    rows.push(Check::witnessed(
        "thm-4.4/omega/monomial-injective",
        "Thm 4.4",
        ok,
        desc,
        "pairwise distinct single-variable monomial images".into(),
    ));

    let composite = m.xi.compose(&m.omega)?;
    for i in 0..m.a_v.n_gens() {
        let (ok, l, r) = cl.coinvariant(composite.image(i));
        rows.push(Check::eq(
            format!("thm-4.4/coinvariant/{}", m.a_v.gen_names()[i]),
            "Thm 4.4",
            ok,
            l,
            r,
        ));
    }

    let dens: Vec<String> = (0..m.a_v.n_dens())
        .map(|i| m.a_v.render_poly(m.a_v.den_poly(i)))
        .collect();
    rows.push(Check::witnessed(
        "thm-4.4/localizing-list",
        "Thm 4.4",
        m.a_v.n_dens() == p.get() as usize,
        dens.join("; "),
        format!("{} localizing elements", p.get()),
    ));

    Ok(rows)
}
