//! Verification reports: named check rows with a canonical, diff-stable
//! rendering.
//!
//! The canonical form is deterministic for a fixed selector: checks are
//! sorted by name, no timestamps or timings appear anywhere, and JSON key
//! order follows struct order. Two identical runs produce identical bytes.

use serde::Serialize;

use crate::hopf::GenCheck;

/// Rendered left/right expressions backing a comparison.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub left: String,
    pub right: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The check's hypothesis is empty under the current selector (wrong
    /// prime, missing --deep, non-invertible parameter mode).
    #[serde(rename = "skipped-vacuous")]
    SkippedVacuous,
}

/// One check row. Fail rows always carry a witness; pass rows carry one
/// exactly when the rendered value itself is the point of the row.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(name: impl Into<String>, paper_ref: &str) -> Check {
        Check {
            name: name.into(),
            paper_ref: paper_ref.to_string(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn skip(name: impl Into<String>, paper_ref: &str) -> Check {
        Check {
            name: name.into(),
            paper_ref: paper_ref.to_string(),
            status: Status::SkippedVacuous,
            witness: None,
        }
    }

    /// Pass/fail from a comparison; the witness is kept only on failure.
    pub fn eq(
        name: impl Into<String>,
        paper_ref: &str,
        ok: bool,
        left: String,
        right: String,
    ) -> Check {
        Check {
            name: name.into(),
            paper_ref: paper_ref.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: (!ok).then_some(Witness { left, right }),
        }
    }

    /// Pass/fail from a comparison whose rendered sides are themselves the
    /// deliverable; the witness is kept on both outcomes.
    pub fn witnessed(
        name: impl Into<String>,
        paper_ref: &str,
        ok: bool,
        left: String,
        right: String,
    ) -> Check {
        Check {
            name: name.into(),
            paper_ref: paper_ref.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: Some(Witness { left, right }),
        }
    }

    pub fn from_gen(prefix: &str, paper_ref: &str, g: &GenCheck) -> Check {
        Check::eq(
            format!("{prefix}/{}", g.label),
            paper_ref,
            g.ok,
            g.left.clone(),
            g.right.clone(),
        )
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Maps a slice of generator-level comparisons to prefixed check rows.
pub fn gen_rows(prefix: &str, paper_ref: &str, rows: &[GenCheck]) -> Vec<Check> {
    rows.iter()
        .map(|g| Check::from_gen(prefix, paper_ref, g))
        .collect()
}

/// A full run: the selector echoed back plus sorted check rows.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    pub suite: String,
    pub prime: u32,
    pub lambda_mode: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(
        suite: &str,
        prime: u32,
        lambda_mode: String,
        seed: u64,
        mut checks: Vec<Check>,
    ) -> Report {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        debug_assert!(
            checks.windows(2).all(|w| w[0].name != w[1].name),
            "duplicate check name"
        );
        Report {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            prime,
            lambda_mode,
            seed,
            checks,
        }
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(Check::is_fail)
    }

    /// (pass, fail, skipped) totals.
    pub fn counts(&self) -> (usize, usize, usize) {
        let mut c = (0, 0, 0);
        for ch in &self.checks {
            match ch.status {
                Status::Pass => c.0 += 1,
                Status::Fail => c.1 += 1,
                Status::SkippedVacuous => c.2 += 1,
            }
        }
        c
    }

    /// Canonical structured form: pretty JSON plus a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Line-per-check text form with witnesses indented under their row.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for ch in &self.checks {
            let tag = match ch.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::SkippedVacuous => "SKIP",
            };
            out.push_str(&format!("{tag} {}  [{}]\n", ch.name, ch.paper_ref));
            if let Some(w) = &ch.witness {
                out.push_str(&format!("     left:  {}\n", w.left));
                out.push_str(&format!("     right: {}\n", w.right));
            }
        }
        let (np, nf, ns) = self.counts();
        out.push_str(&format!(
            "{}: {np} pass, {nf} fail, {ns} skipped (p={}, lambda={}, seed={})\n",
            self.suite, self.prime, self.lambda_mode, self.seed
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        Report::new(
            "demo",
            3,
            "generic".into(),
            7,
            vec![
                Check::eq("b/second", "Prop 3.1", false, "x".into(), "y".into()),
                Check::pass("a/first", "Prop 3.1"),
                Check::skip("c/gate", "Prop 4.2"),
            ],
        )
    }

    #[test]
    fn checks_sorted_and_counted() {
        let r = sample();
        let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["a/first", "b/second", "c/gate"]);
        assert_eq!(r.counts(), (1, 1, 1));
        assert!(r.any_fail());
    }

    #[test]
    fn json_is_stable_and_omits_empty_witness() {
        let r = sample();
        assert_eq!(r.to_json(), r.to_json());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let checks = v["checks"].as_array().unwrap();
        assert_eq!(checks[0]["status"], "pass");
        assert!(checks[0].get("witness").is_none());
        assert_eq!(checks[1]["status"], "fail");
        assert_eq!(checks[1]["witness"]["left"], "x");
        assert_eq!(checks[2]["status"], "skipped-vacuous");
        assert!(v.get("elapsed").is_none());
    }

    #[test]
    fn text_render_flags_failures() {
        let text = sample().render_text();
        assert!(text.contains("PASS a/first  [Prop 3.1]"));
        assert!(text.contains("FAIL b/second"));
        assert!(text.contains("     left:  x"));
        assert!(text.contains("SKIP c/gate"));
        assert!(text.ends_with("demo: 1 pass, 1 fail, 1 skipped (p=3, lambda=generic, seed=7)\n"));
    }
}
