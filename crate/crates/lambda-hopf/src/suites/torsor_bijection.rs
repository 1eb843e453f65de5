//! Suite `prop-3.10`: both torsor presentations carry verified coactions,
//! the descent maps compose to the identity in both orders, the truncated
//! algebra is free of rank p², and the comparison map φ is a comodule map
//! landing in the cotensor product.

use crate::exec::Job;
use crate::hopf::check_comodule;
use crate::report::{gen_rows, Check};
use crate::torsor::{
    build_cotensor, build_torsor_algebra, descent_bijection, descent_composite_checks,
    truncated_rank_witness, TorsorKind, TorsorParams,
};
use crate::Result;

use super::{collect, deep_gate, SuiteConfig};

pub fn run(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let p = cfg.prime;
    if p.get() >= 5 && !cfg.deep {
        return Ok(vec![deep_gate("prop-3.10", "Prop 3.10")]);
    }
    let params = TorsorParams {
        lam: cfg.lambda.clone(),
        ..TorsorParams::default()
    };

    let mut jobs: Vec<Job<'_, Result<Vec<Check>>>> = Vec::new();
    for (kind, label) in [(TorsorKind::Full, "full"), (TorsorKind::Truncated, "truncated")] {
        let params = params.clone();
        jobs.push(Box::new(move || {
            let t = build_torsor_algebra(kind, p, &params)?;
            let mut rows = gen_rows(
                &format!("prop-3.10/{label}/comodule"),
                "Notation 3.9",
                &check_comodule(&t.comodule)?,
            );
            let b = descent_bijection(&t)?;
            rows.extend(gen_rows(
                &format!("prop-3.10/{label}/descent"),
                "Prop 3.10",
                &descent_composite_checks(&b)?,
            ));
            if kind == TorsorKind::Truncated {
                let (ok, desc) = truncated_rank_witness(&t)?;
                rows.push(Check::witnessed(
                    format!("prop-3.10/{label}/rank"),
                    "Prop 3.10",
                    ok,
                    desc,
                    format!("free of rank {}", p.get() * p.get()),
                ));
            }
            Ok(rows)
        }));
    }

    {
        let params = params.clone();
        jobs.push(Box::new(move || {
            let ct = build_cotensor(p, &params)?;
            let (image, expect) = ct.phi_of_au();
            let mut rows = vec![
                Check::witnessed(
                    "prop-3.10/comparison/unit-image",
                    "Notation 3.9",
                    image.eq_elem(&expect),
                    image.render(),
                    expect.render(),
                ),
                Check::eq(
                    "prop-3.10/comparison/unit-invertible",
                    "Notation 3.9",
                    image.invert().is_ok(),
                    image.render(),
                    "a unit".into(),
                ),
            ];
            rows.extend(gen_rows(
                "prop-3.10/comparison",
                "Prop 3.10",
                &ct.comodule_map_checks()?,
            ));
            rows.extend(gen_rows(
                "prop-3.10/comparison",
                "Prop 3.10",
                &ct.cotensor_condition_checks()?,
            ));
            Ok(rows)
        }));
    }

    collect(cfg, jobs)
}
