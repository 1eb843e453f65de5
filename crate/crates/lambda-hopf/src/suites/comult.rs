//! Suite `prop-3.1`: the closed-form comultiplication of the unit-group
//! coordinates against the direct-expansion oracle, and the structure-tensor
//! route against the same oracle, basis monomial by basis monomial.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exec::Job;
use crate::report::Check;
use crate::unit_group::{
    build_unit_group, comult_closed_form, comult_from_structure, comult_oracle, t_name,
};
use crate::Result;

use super::{collect, deep_gate, SuiteConfig};

pub fn run(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let p = cfg.prime.get() as u16;
    let mut pairs: Vec<(u16, u16)> = (0..p)
        .flat_map(|r2| (0..p).map(move |r1| (r1, r2)))
        .collect();
    if p >= 5 {
        if !cfg.deep {
            return Ok(vec![deep_gate("prop-3.1", "Prop 3.1")]);
        }
        // Seeded spot check: ten of the p² monomials.
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        pairs.shuffle(&mut rng);
        pairs.truncate(10);
    }

    let u = build_unit_group(cfg.prime, &cfg.lambda)?;
    let uref = &u;
    let jobs: Vec<Job<'_, Result<Vec<Check>>>> = pairs
        .into_iter()
        .map(|(r1, r2)| {
            Box::new(move || {
                let name = t_name(r1, r2);
                let j = (r1 + p * r2) as usize;
                let closed = comult_closed_form(&uref.kernel, &uref.lam, r1, r2);
                let oracle = comult_oracle(&uref.kernel, r1, r2);
                let st = comult_from_structure(&uref.kernel, &uref.st, j);
                Ok(vec![
                    Check::eq(
                        format!("prop-3.1/closed-vs-oracle/{name}"),
                        "Prop 3.1",
                        closed.eq_elem(&oracle),
                        closed.render(),
                        oracle.render(),
                    ),
                    Check::eq(
                        format!("prop-3.1/structure-vs-oracle/{name}"),
                        "Sec 3.1",
                        st.eq_elem(&oracle),
                        st.render(),
                        oracle.render(),
                    ),
                ])
            }) as Job<'_, _>
        })
        .collect();
    collect(cfg, jobs)
}
