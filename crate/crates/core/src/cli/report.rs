//! Verification records and the suites behind `parasym verify`.

use std::fmt;
use std::time::Instant;

use crate::enumeration::RegularGroup;
use crate::error::{Error, Result};
use crate::group::{abelianization, factorial, FiniteGroup, WreathGroup};
use crate::homology::{c_symbol_subgroup_check, exterior_square_group, schur_abelian};
use crate::morphisms::{
    implication_outcome, kernel_of_mu, mu_images, presentation_chain, tau_base_case, verify_action_well_defined,
    verify_central, verify_cm1, verify_cm2, verify_homomorphism, verify_implication, verify_isomorphism,
    verify_split_decomposition, verify_tau_properties, AmalgamModel, CheckOutcome, GenMap,
};
use crate::presentation::{h_presentation, hn_presentation, hs_presentation, Family, HRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Timeout,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Timeout => "timeout",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One line of a verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub check_id: String,
    pub params: Vec<(String, String)>,
    pub verdict: Verdict,
    pub witness: Option<String>,
    pub elapsed_ms: u128,
}

impl VerificationRecord {
    /// A failing record always carries a witness.
    pub fn new(
        check_id: impl Into<String>,
        params: Vec<(String, String)>,
        verdict: Verdict,
        witness: Option<String>,
        elapsed_ms: u128,
    ) -> Self {
        let witness = match (verdict, witness) {
            (Verdict::Fail, None) => Some("unspecified".to_string()),
            (_, w) => w,
        };
        VerificationRecord { check_id: check_id.into(), params, verdict, witness, elapsed_ms }
    }
}

/// Field values may not contain tabs or newlines; parameter values may not
/// contain `,`.
fn clean(s: &str) -> String {
    s.replace(['\t', '\n', '\r'], " ")
}

impl fmt::Display for VerificationRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> =
            self.params.iter().map(|(k, v)| format!("{}={}", clean(k), clean(v).replace(',', ";"))).collect();
        write!(
            f,
            "check={}\tparams={}\tverdict={}\twitness={}\tms={}",
            clean(&self.check_id),
            params.join(","),
            self.verdict,
            self.witness.as_deref().map(clean).unwrap_or_else(|| "-".into()),
            self.elapsed_ms
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Theorem1,
    CrossedModule,
    Equivalences,
    Rewriting,
    HImplications,
    Schur,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Theorem1, Suite::CrossedModule, Suite::Equivalences, Suite::Rewriting, Suite::HImplications, Suite::Schur];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::CrossedModule => "crossed-module",
            Suite::Equivalences => "equivalences",
            Suite::Rewriting => "rewriting",
            Suite::HImplications => "h-implications",
            Suite::Schur => "schur",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Collects records, turning coset overflow into `timeout`.
struct Recorder<'a> {
    suite: Suite,
    base: Vec<(String, String)>,
    max_cosets: usize,
    out: &'a mut Vec<VerificationRecord>,
}

type Checked = (Verdict, Option<String>, Vec<(String, String)>);

fn kv(k: &str, v: impl fmt::Display) -> (String, String) {
    (k.to_string(), v.to_string())
}

fn got<T>(r: &Result<T>) -> Result<&T> {
    r.as_ref().map_err(Clone::clone)
}

fn outcome(o: &CheckOutcome) -> Checked {
    let v = if o.passed { Verdict::Pass } else { Verdict::Fail };
    (v, o.witness.clone(), vec![kv("cases", o.cases)])
}

fn equal<T: PartialEq + fmt::Display>(what: &str, got: T, expected: T) -> Checked {
    let extra = vec![kv(what, &got), kv("expected", &expected)];
    if got == expected {
        (Verdict::Pass, None, extra)
    } else {
        (Verdict::Fail, Some(format!("{what} {got} != {expected}")), extra)
    }
}

impl Recorder<'_> {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<Checked>) -> Result<()> {
        let start = Instant::now();
        let (verdict, witness, extra) = match f() {
            Ok(c) => c,
            Err(Error::CapacityExceeded(cap)) => {
                (Verdict::Timeout, Some(format!("coset enumeration exceeded {cap} cosets")), vec![])
            }
            Err(e @ Error::SizeCapExceeded { .. }) => (Verdict::Timeout, Some(e.to_string()), vec![]),
            Err(e) => return Err(e),
        };
        let mut params = self.base.clone();
        params.extend(extra);
        self.out.push(VerificationRecord::new(
            format!("{}.{name}", self.suite.name()),
            params,
            verdict,
            witness,
            start.elapsed().as_millis(),
        ));
        Ok(())
    }
}

/// Runs one suite on `(n, G)`. `spec` is the group specification echoed in
/// the parameters.
pub fn run_suite(suite: Suite, spec: &str, n: usize, g: &FiniteGroup, max_cosets: usize) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    let mut r = Recorder { suite, base: vec![kv("group", spec), kv("n", n)], max_cosets, out: &mut out };
    match suite {
        Suite::Theorem1 => theorem1(&mut r, n, g)?,
        Suite::CrossedModule => crossed_module(&mut r, n, g)?,
        Suite::Equivalences => equivalences(&mut r, n, g)?,
        Suite::Rewriting => rewriting(&mut r, n, g)?,
        Suite::HImplications => h_implications(&mut r, n, g)?,
        Suite::Schur => schur(&mut r, n, g)?,
    }
    Ok(out)
}

fn theorem1(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let cap = r.max_cosets;
    let mu = kernel_of_mu(n, g, cap);
    let ext = exterior_square_group(g, cap);
    let h1 = abelianization(g);
    let h1_order = h1.order().expect("finite group") as u128;
    r.check("order", || {
        let (mu, ext) = (got(&mu)?, got(&ext)?);
        let expected = ext.kernel.len() as u128 * (g.order() as u128).pow(n as u32) * factorial(n) / h1_order;
        Ok(equal("order", mu.order() as u128, expected))
    })?;
    r.check("image-index", || {
        let mu = got(&mu)?;
        let wreath = WreathGroup::new(g, n).order();
        Ok(equal("index", wreath / mu.image_order as u128, h1_order))
    })?;
    r.check("kernel-invariants", || {
        let (mu, ext) = (got(&mu)?, got(&ext)?);
        let mut res = equal("invariants", &mu.kernel_invariants, &ext.kernel_invariants);
        let formula;
        if g.is_abelian() && res.0 == Verdict::Pass {
            formula = schur_abelian(h1.factors())?;
            res = equal("invariants", &mu.kernel_invariants, &formula);
        }
        Ok(res)
    })?;
    r.check("mu-homomorphism", || {
        let mu = got(&mu)?;
        let images = mu_images(&mu.presentation, n, g)?;
        Ok(outcome(&verify_homomorphism(&mu.presentation, &WreathGroup::new(g, n), &images)))
    })?;
    r.check("kernel-central", || {
        let mu = got(&mu)?;
        Ok(outcome(&verify_central(&mu.group, &mu.kernel)))
    })
}

fn crossed_module(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let model = AmalgamModel::new(n, g, r.max_cosets);
    r.check("action-well-defined", || Ok(outcome(&verify_action_well_defined(got(&model)?)?)))?;
    r.check("cm1", || Ok(outcome(&verify_cm1(got(&model)?)?)))?;
    r.check("cm2", || Ok(outcome(&verify_cm2(got(&model)?)?)))?;
    let cap = r.max_cosets;
    r.check("kernel-central", || {
        let mu = kernel_of_mu(n, g, cap)?;
        Ok(outcome(&verify_central(&mu.group, &mu.kernel)))
    })
}

fn short(f: &Family) -> String {
    match f {
        Family::Interpolating { t } => format!("t{t}"),
        other => other.to_string(),
    }
}

fn equivalences(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let cap = r.max_cosets;
    for link in presentation_chain(n, g)? {
        let id = format!("{}-{}", short(link.source.family()), short(link.target.family()));
        r.check(&id, || {
            let cert = link.certify(cap)?;
            let order = |o: Option<usize>| o.map_or("-".to_string(), |x| x.to_string());
            let extra = vec![kv("source-order", order(cert.source_order)), kv("target-order", order(cert.target_order))];
            let verdict = if cert.is_valid() {
                Verdict::Pass
            } else if cert.is_inconclusive() {
                Verdict::Inconclusive
            } else {
                Verdict::Fail
            };
            Ok((verdict, cert.failure, extra))
        })?;
    }
    Ok(())
}

fn rewriting(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let cap = r.max_cosets;
    r.check("tau-properties", || {
        let rep = verify_tau_properties(n, g, 200, 1, cap)?;
        let failed = [("multiplicative", &rep.multiplicative), ("evaluation", &rep.evaluation), ("free-equality", &rep.free_equality)]
            .into_iter()
            .find(|(_, o)| !o.passed);
        Ok(match failed {
            None => (Verdict::Pass, None, vec![kv("samples", rep.samples), kv("seed", 1)]),
            Some((what, o)) => (
                Verdict::Fail,
                Some(format!("{what}: {}", o.witness.clone().unwrap_or_default())),
                vec![kv("samples", rep.samples), kv("seed", 1)],
            ),
        })
    })?;
    r.check("tau-base-case", || Ok(outcome(&tau_base_case(n, g)?)))?;
    r.check("split-decomposition", || {
        let rep = verify_split_decomposition(n, g, cap)?;
        let extra = vec![kv("order", rep.order), kv("hs-order", rep.hs_order), kv("index", rep.index)];
        Ok(if rep.holds(n) {
            (Verdict::Pass, None, extra)
        } else {
            (Verdict::Fail, Some(format!("{rep:?}")), extra)
        })
    })
}

fn h_implications(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let cap = r.max_cosets;
    let hs = hs_presentation(n, g)?;
    let hn = hn_presentation(n, g, &HRelation::H)?;
    let r03 = h_presentation(n, g, &HRelation::R[..4])?;
    let implies = |source, targets| -> Result<Checked> {
        let res = verify_implication(source, targets, cap)?;
        Ok(outcome(&implication_outcome(&res)))
    };
    r.check("r-implies-h", || implies(&hs, hn.relators()))?;
    if n >= 4 {
        r.check("r03-implies-h", || implies(&r03, hn.relators()))?;
        r.check("h-implies-r03", || implies(&hn, r03.relators()))?;
    }
    r.check("quotient-by-r4", || {
        let r4 = h_presentation(n, g, &[HRelation::R4])?;
        let mut fams = HRelation::H.to_vec();
        fams.push(HRelation::R4);
        let quotient = hn.with_extra_relators(r4.relators().iter().cloned(), Family::H(fams))?;
        let cert = verify_isomorphism(&quotient, &hs, GenMap::identity(&quotient), GenMap::identity(&hs), cap)?;
        let hn_order = RegularGroup::enumerate(&hn, cap).map(|x| x.order().to_string()).unwrap_or_else(|_| "-".into());
        let order = |o: Option<usize>| o.map_or("-".to_string(), |x| x.to_string());
        let extra = vec![kv("hn-order", hn_order), kv("quotient-order", order(cert.source_order)), kv("hs-order", order(cert.target_order))];
        Ok(if cert.is_valid() {
            (Verdict::Pass, None, extra)
        } else if cert.is_inconclusive() {
            (Verdict::Inconclusive, cert.failure, extra)
        } else {
            (Verdict::Fail, cert.failure, extra)
        })
    })
}

fn schur(r: &mut Recorder, n: usize, g: &FiniteGroup) -> Result<()> {
    let cap = r.max_cosets;
    let mu = kernel_of_mu(n, g, cap);
    let ext = exterior_square_group(g, cap);
    r.check("kernel-vs-exterior", || {
        let (mu, ext) = (got(&mu)?, got(&ext)?);
        Ok(equal("invariants", &mu.kernel_invariants, &ext.kernel_invariants))
    })?;
    if g.is_abelian() {
        r.check("exterior-vs-abelian", || {
            let ext = got(&ext)?;
            Ok(equal("invariants", &ext.kernel_invariants, &schur_abelian(abelianization(g).factors())?))
        })?;
    }
    r.check("exterior-order", || {
        let ext = got(&ext)?;
        Ok(equal("order", ext.order(), ext.image_order() * ext.kernel.len()))
    })?;
    r.check("c-symbols", || {
        let rep = c_symbol_subgroup_check(n, g, cap)?;
        let orders: Vec<String> = rep.subgroup_orders.iter().map(usize::to_string).collect();
        let extra = vec![kv("subgroup-orders", orders.join(" ")), kv("exterior-order", rep.exterior_order)];
        Ok(if rep.passed() {
            (Verdict::Pass, None, extra)
        } else {
            (Verdict::Fail, Some(format!("{rep:?}")), extra)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::DEFAULT_MAX_COSETS;
    use crate::group::make_builtin;

    #[test]
    fn record_line() {
        let r = VerificationRecord::new("x.y", vec![kv("group", "builtin:c2"), kv("inv", "[2,2]")], Verdict::Pass, None, 7);
        assert_eq!(r.to_string(), "check=x.y\tparams=group=builtin:c2,inv=[2;2]\tverdict=pass\twitness=-\tms=7");
        let f = VerificationRecord::new("x", vec![], Verdict::Fail, None, 0);
        assert!(f.witness.is_some());
    }

    #[test]
    fn suites_pass_for_c2() {
        let g = make_builtin("c2").unwrap();
        for s in Suite::ALL {
            let recs = run_suite(s, "builtin:c2", 3, &g, DEFAULT_MAX_COSETS).unwrap();
            assert!(!recs.is_empty());
            for rec in recs {
                assert_eq!(rec.verdict, Verdict::Pass, "{rec}");
            }
        }
    }

    #[test]
    fn overflow_is_a_timeout() {
        let g = make_builtin("klein").unwrap();
        let recs = run_suite(Suite::Theorem1, "builtin:klein", 3, &g, 50).unwrap();
        assert!(recs.iter().all(|r| r.verdict == Verdict::Timeout));
    }
}
