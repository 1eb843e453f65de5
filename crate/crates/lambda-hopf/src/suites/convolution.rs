//! Suite `notation-4.1`: the kernel coaction on the unit-group coordinates
//! is a comodule structure, the cleaving map and its convolution inverse
//! satisfy φ*φ⁻¹ = uε = φ⁻¹*φ on the whole monomial basis, the printed
//! inverse images are reproduced exactly, and the normal-basis roundtrip
//! recovers every generator and a seeded batch of random elements with
//! coinvariant coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ARef, Element};
use crate::cleft::{build_cleft, Cleft};
use crate::exec::Job;
use crate::hopf::{check_comodule, conv_unit, convolve};
use crate::poly::Poly;
use crate::report::{gen_rows, Check};
use crate::unit_group::{build_unit_group, t_name, UnitGroup};
use crate::Result;

use super::{collect, deep_gate, SuiteConfig};

/// Roundtrip and coefficient-coinvariance rows for one element.
fn normal_basis_rows(cl: &Cleft, tag: &str, x: &Element) -> Result<Vec<Check>> {
    let coeffs = cl.normal_basis_inverse(x)?;
    let back = cl.normal_basis_assemble(&coeffs);
    let mut rows = vec![Check::eq(
        format!("notation-4.1/normal-basis/{tag}/roundtrip"),
        "formula (*)",
        back.eq_elem(x),
        back.render(),
        x.render(),
    )];
    let mut offender = None;
    for (j, c) in coeffs.iter().enumerate() {
        let (ok, l, r) = cl.coinvariant(c);
        if !ok {
            offender = Some((j, l, r));
            break;
        }
    }
    rows.push(match offender {
        None => Check::pass(
            format!("notation-4.1/normal-basis/{tag}/coinvariant"),
            "formula (*)",
        ),
        Some((j, l, r)) => Check::eq(
            format!("notation-4.1/normal-basis/{tag}/coinvariant"),
            "formula (*)",
            false,
            format!("coefficient {j}: ρ gives {l}"),
            r,
        ),
    });
    Ok(rows)
}

/// A seeded polynomial of total degree ≤ 3 in the coordinate generators.
fn random_element(s: &ARef, rng: &mut ChaCha8Rng) -> Element {
    let p = s.prime().get();
    let n = s.n_gens();
    let terms = 1 + rng.random_range(0..3);
    let mut acc = Element::zero(s);
    for _ in 0..terms {
        let coeff = 1 + rng.random_range(0..p - 1);
        let mut term = Element::scalar(s, coeff);
        for _ in 0..rng.random_range(0..=3u32) {
            term = term.mul(&Element::gen(s, rng.random_range(0..n)));
        }
        acc = acc.add(&term);
    }
    acc
}

fn phi_inv_expected(u: &UnitGroup, r1: u16, r2: u16) -> Element {
    let s = u.coords();
    let idx = s.gen_index(&t_name(r1, r2)).expect("coordinate exists");
    let num = Poly::var(s.prime(), s.arity(), idx).neg();
    Element::fraction(
        s,
        num,
        vec![u.diag_den[0] as u32, u.diag_den[1] as u32],
    )
}

pub fn run(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let p = cfg.prime;
    if p.get() >= 5 && !cfg.deep {
        return Ok(vec![deep_gate("notation-4.1", "Notation 4.1")]);
    }
    let u = build_unit_group(p, &cfg.lambda)?;
    let cl = build_cleft(&u)?;
    let s = cl.carrier().clone();
    let mut rows = gen_rows(
        "notation-4.1/comodule",
        "Sec 4",
        &check_comodule(&cl.comodule)?,
    );

    let ue = conv_unit(&u.kernel, &s);
    let left = convolve(&u.st, &cl.phi_inv, &cl.phi, &s);
    let right = convolve(&u.st, &cl.phi, &cl.phi_inv, &s);
    let basis = u.kernel.basis.as_ref().expect("kernel basis");
    for j in 0..u.st.n {
        let name = basis.name(j);
        rows.push(Check::eq(
            format!("notation-4.1/convolution/left-inverse/{name}"),
            "Notation 4.1",
            left.images[j].eq_elem(&ue.images[j]),
            left.images[j].render(),
            ue.images[j].render(),
        ));
        rows.push(Check::eq(
            format!("notation-4.1/convolution/right-inverse/{name}"),
            "Notation 4.1",
            right.images[j].eq_elem(&ue.images[j]),
            right.images[j].render(),
            ue.images[j].render(),
        ));
    }

    // φ⁻¹(1) = 1/T_1; φ⁻¹(X) and φ⁻¹(Y) are −T_X/(T_1·d_1), −T_Y/(T_1·d_1).
    let one_inv = Element::fraction(
        &s,
        Poly::one(p, s.arity()),
        vec![u.diag_den[0] as u32],
    );
    rows.push(Check::witnessed(
        "notation-4.1/phi-inv/unit",
        "Notation 4.1",
        cl.phi_inv.images[0].eq_elem(&one_inv),
        cl.phi_inv.images[0].render(),
        one_inv.render(),
    ));
    for (label, r1, r2) in [("X", 1u16, 0u16), ("Y", 0, 1)] {
        let j = (r1 + p.get() as u16 * r2) as usize;
        let expect = phi_inv_expected(&u, r1, r2);
        rows.push(Check::witnessed(
            format!("notation-4.1/phi-inv/{label}"),
            "Notation 4.1",
            cl.phi_inv.images[j].eq_elem(&expect),
            cl.phi_inv.images[j].render(),
            expect.render(),
        ));
    }

    let clref = &cl;
    let mut jobs: Vec<Job<'_, Result<Vec<Check>>>> = Vec::new();
    for i in 0..s.n_gens() {
        let x = Element::gen(&s, i);
        let tag = s.gen_names()[i].clone();
        jobs.push(Box::new(move || normal_basis_rows(clref, &tag, &x)));
    }
    if p.get() <= 3 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        for i in 0..20 {
            let x = random_element(&s, &mut rng);
            jobs.push(Box::new(move || {
                normal_basis_rows(clref, &format!("random-{i:02}"), &x)
            }));
        }
    }
    rows.extend(collect(cfg, jobs)?);
    Ok(rows)
}
