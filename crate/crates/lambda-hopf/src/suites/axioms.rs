//! Suite `hopf-axioms`: the five axiom families on every scheme in the
//! catalog, the Frobenius comparison map, the exact-sequence carrier maps,
//! and the multiplicative comparison α.

use crate::hom::Hom;
use crate::hopf::{check_bialgebra_hom, check_hopf_axioms};
use crate::param::Lambda;
use crate::report::{gen_rows, Check};
use crate::schemes::{
    alpha_lambda, build_scheme, exact_sequence_maps, frobenius_hom, SchemeTag, ALL_TAGS,
};
use crate::exec::Job;
use crate::Result;

use super::{collect, SuiteConfig};

fn tag_ref(tag: SchemeTag) -> &'static str {
    match tag {
        SchemeTag::Additive | SchemeTag::Multiplicative => "Def 2.1",
        SchemeTag::LambdaLine => "Def 2.2",
        SchemeTag::LambdaPlane => "Def 2.3",
        SchemeTag::FrobeniusKernel => "Def 2.4",
    }
}

pub fn run(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let p = cfg.prime;
    let mut jobs: Vec<Job<'_, Result<Vec<Check>>>> = Vec::new();

    for tag in ALL_TAGS {
        let lam = cfg.lambda.clone();
        jobs.push(Box::new(move || {
            let h = build_scheme(tag, p, &lam)?;
            Ok(gen_rows(
                &format!("hopf-axioms/{}", tag.name()),
                tag_ref(tag),
                &check_hopf_axioms(&h)?,
            ))
        }));
    }

    let lam = cfg.lambda.clone();
    jobs.push(Box::new(move || {
        let (src, dst, f) = frobenius_hom(p, &lam)?;
        Ok(gen_rows(
            "hopf-axioms/frobenius",
            "Def 2.4",
            &check_bialgebra_hom(&f, &src, &dst)?,
        ))
    }));

    let lam = cfg.lambda.clone();
    jobs.push(Box::new(move || exact_sequence_rows(p, &lam)));

    let lam = cfg.lambda.clone();
    jobs.push(Box::new(move || alpha_rows(p, &lam)));

    collect(cfg, jobs)
}

fn exact_sequence_rows(p: crate::param::Prime, lam: &Lambda) -> Result<Vec<Check>> {
    let plane = build_scheme(SchemeTag::LambdaPlane, p, lam)?;
    let additive = build_scheme(SchemeTag::Additive, p, lam)?;
    let line = build_scheme(SchemeTag::LambdaLine, p, lam)?;
    let (proj, incl) = exact_sequence_maps(&plane, &additive, &line)?;
    let mut rows = gen_rows(
        "hopf-axioms/exact-seq/onto-additive",
        "Def 2.3",
        &check_bialgebra_hom(&proj, &plane, &additive)?,
    );
    rows.extend(gen_rows(
        "hopf-axioms/exact-seq/from-line",
        "Def 2.3",
        &check_bialgebra_hom(&incl, &line, &plane)?,
    ));
    let composite = proj.compose(&incl)?;
    let img = composite.image(0);
    rows.push(Check::eq(
        "hopf-axioms/exact-seq/composite-trivial",
        "Def 2.3",
        img.is_zero(),
        img.render(),
        "0".into(),
    ));
    Ok(rows)
}

fn alpha_rows(p: crate::param::Prime, lam: &Lambda) -> Result<Vec<Check>> {
    let mult = build_scheme(SchemeTag::Multiplicative, p, lam)?;
    let line = build_scheme(SchemeTag::LambdaLine, p, lam)?;
    let (fwd, inv) = alpha_lambda(&mult, &line, p, lam)?;
    let mut rows = gen_rows(
        "hopf-axioms/alpha",
        "Def 2.2",
        &check_bialgebra_hom(&fwd, &mult, &line)?,
    );
    match inv {
        Some(inv) => {
            rows.extend(gen_rows(
                "hopf-axioms/alpha-inverse",
                "Def 2.2",
                &check_bialgebra_hom(&inv, &line, &mult)?,
            ));
            let on_mult = inv.compose(&fwd)?;
            rows.push(Check::eq(
                "hopf-axioms/alpha-roundtrip/multiplicative",
                "Def 2.2",
                on_mult.agrees_with(&Hom::identity(&mult.carrier)),
                on_mult.image(0).render(),
                "T".into(),
            ));
            let on_line = fwd.compose(&inv)?;
            rows.push(Check::eq(
                "hopf-axioms/alpha-roundtrip/line",
                "Def 2.2",
                on_line.agrees_with(&Hom::identity(&line.carrier)),
                on_line.image(0).render(),
                "T".into(),
            ));
        }
        // α is an isomorphism only for an invertible scalar λ.
        None => rows.push(Check::skip("hopf-axioms/alpha-inverse", "Def 2.2")),
    }
    Ok(rows)
}
