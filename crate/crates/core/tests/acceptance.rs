//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Expected values are never hard-coded here. Orders come from
//! `|H₂(G)| · |G|ⁿ · n! / |G^ab|` with `H₂` from the exterior-square oracle
//! (and the invariant-factor formula when `G` is abelian) and `G^ab` from
//! the multiplication table.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use parasym::enumeration::{todd_coxeter, EnumerationStatus, DEFAULT_MAX_COSETS};
use parasym::group::{abelianization, factorial, make_builtin, AbelianInvariants, FiniteGroup, WreathGroup};
use parasym::homology::{c_symbol_subgroup_check, exterior_square_group, schur_abelian};
use parasym::morphisms::{
    image_subgroup_order, implication_outcome, kernel_of_mu, presentation_chain, tau_base_case,
    verify_action_well_defined, verify_central, verify_cm1, verify_cm2, verify_implication, verify_isomorphism,
    verify_split_decomposition, verify_tau_properties, AmalgamModel, GenMap,
};
use parasym::presentation::{
    abelian_invariants_of_presentation, coxeter_presentation, h_presentation, hn_presentation, hs_presentation,
    transposition_presentation, HRelation,
};

const TABLE: [(&str, usize); 12] = [
    ("c2", 3),
    ("c2", 4),
    ("c3", 3),
    ("c4", 3),
    ("klein", 3),
    ("klein", 4),
    ("c4xc2", 3),
    ("c2cubed", 3),
    ("s3", 3),
    ("d4", 3),
    ("q8", 3),
    ("a4", 3),
];

const CAP: usize = DEFAULT_MAX_COSETS;
const TIME_LIMIT: Duration = Duration::from_secs(300);

type Check = Result<String, String>;

fn group(name: &str) -> Result<FiniteGroup, String> {
    make_builtin(name).map_err(|e| e.to_string())
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// `H₂(G)` from the exterior square, cross-checked against the gcd formula
/// for abelian `G`.
fn h2_oracle(g: &FiniteGroup) -> Result<AbelianInvariants, String> {
    let ext = exterior_square_group(g, CAP).map_err(err)?;
    if g.is_abelian() {
        let formula = schur_abelian(abelianization(g).factors()).map_err(err)?;
        if formula != ext.kernel_invariants {
            return Err(format!("oracles disagree: exterior {} vs formula {formula}", ext.kernel_invariants));
        }
    }
    Ok(ext.kernel_invariants)
}

fn order_formula(g: &FiniteGroup, n: usize) -> Result<u128, String> {
    let h2 = h2_oracle(g)?.order().ok_or("infinite H2")? as u128;
    let ab = abelianization(g).order().ok_or("infinite abelianization")? as u128;
    Ok(h2 * (g.order() as u128).pow(n as u32) * factorial(n) / ab)
}

fn criterion1() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (name, n) in TABLE {
        let g = group(name)?;
        let expected = order_formula(&g, n)?;
        let table = todd_coxeter(&transposition_presentation(n, &g).map_err(err)?, &[], CAP).map_err(err)?;
        if !table.is_complete() {
            return Err(format!("({name},{n}): enumeration exceeded {CAP} cosets"));
        }
        if table.coset_count() as u128 != expected {
            return Err(format!("({name},{n}): enumerated {} but formula gives {expected}", table.coset_count()));
        }
        parts.push(format!("{name}/{n}={expected}"));
    }
    let elapsed = start.elapsed();
    if elapsed > TIME_LIMIT {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("{} in {:.1}s", parts.join(" "), elapsed.as_secs_f64()))
}

fn criterion2() -> Check {
    let mut parts = Vec::new();
    for (name, n) in TABLE {
        let g = group(name)?;
        let oracle = h2_oracle(&g)?;
        let mu = kernel_of_mu(n, &g, CAP).map_err(err)?;
        if mu.kernel_invariants != oracle {
            return Err(format!("({name},{n}): ker μ {} vs H₂ {oracle}", mu.kernel_invariants));
        }
        parts.push(format!("{name}/{n}:{oracle}"));
    }
    Ok(parts.join(" "))
}

fn criterion3() -> Check {
    let mut parts = Vec::new();
    for (name, n) in TABLE {
        let g = group(name)?;
        let mu = kernel_of_mu(n, &g, CAP).map_err(err)?;
        // image computed twice: from the elements of S_n(G) and by closing
        // the generator images inside G ≀ S_n
        let closure = image_subgroup_order(n, &g);
        if closure != mu.image_order {
            return Err(format!("({name},{n}): image {} vs closure {closure}", mu.image_order));
        }
        let wreath = WreathGroup::new(&g, n).order();
        let ab = abelianization(&g).order().unwrap_or(0) as u128;
        if wreath % closure as u128 != 0 || wreath / closure as u128 != ab {
            return Err(format!("({name},{n}): |G≀S_n|/|Im μ| = {wreath}/{closure}, |G^ab| = {ab}"));
        }
        parts.push(format!("{name}/{n}:{ab}"));
    }
    Ok(parts.join(" "))
}

fn criterion4() -> Check {
    let mut parts = Vec::new();
    for name in ["c2", "klein", "c3", "s3"] {
        let g = group(name)?;
        let model = AmalgamModel::new(3, &g, CAP).map_err(err)?;
        for (what, o) in [
            ("action", verify_action_well_defined(&model).map_err(err)?),
            ("CM1", verify_cm1(&model).map_err(err)?),
            ("CM2", verify_cm2(&model).map_err(err)?),
        ] {
            if !o.passed {
                return Err(format!("({name},3) {what}: {}", o.witness.unwrap_or_default()));
            }
        }
        let mu = kernel_of_mu(3, &g, CAP).map_err(err)?;
        let central = verify_central(&mu.group, &mu.kernel);
        if !central.passed {
            return Err(format!("({name},3) kernel not central: {}", central.witness.unwrap_or_default()));
        }
        parts.push(format!("{name}/3"));
    }
    Ok(parts.join(" "))
}

fn criterion5() -> Check {
    let mut parts = Vec::new();
    for (name, n) in [("c2", 3), ("c2", 4), ("klein", 3)] {
        let g = group(name)?;
        let links = presentation_chain(n, &g).map_err(err)?;
        let count = links.len();
        for link in links {
            let label = link.name();
            let cert = link.certify(CAP).map_err(err)?;
            if !cert.is_valid() {
                return Err(format!("({name},{n}) {label}: {}", cert.failure.unwrap_or_default()));
            }
            if cert.source_order.is_none() || cert.source_order != cert.target_order {
                return Err(format!("({name},{n}) {label}: orders {:?}/{:?}", cert.source_order, cert.target_order));
            }
        }
        parts.push(format!("{name}/{n}:{count} links"));
    }
    Ok(parts.join(" "))
}

fn criterion6() -> Check {
    let mut parts = Vec::new();
    for (name, n) in TABLE {
        let g = group(name)?;
        if order_formula(&g, n)? > 10_000 {
            continue;
        }
        let rep = verify_split_decomposition(n, &g, CAP).map_err(err)?;
        if !rep.holds(n) {
            return Err(format!("({name},{n}): {rep:?}"));
        }
        parts.push(format!("{name}/{n}:{}", rep.hs_order));
    }
    Ok(parts.join(" "))
}

fn criterion7() -> Check {
    let mut parts = Vec::new();
    for (name, n) in [("c2", 3), ("klein", 3), ("c4", 3), ("c2", 4), ("klein", 4)] {
        let g = group(name)?;
        let hs = hs_presentation(n, &g).map_err(err)?;
        let hn = hn_presentation(n, &g, &HRelation::H).map_err(err)?;
        let implies = |src, tgt| -> Result<bool, String> {
            Ok(implication_outcome(&verify_implication(src, tgt, CAP).map_err(err)?).passed)
        };
        if !implies(&hs, hn.relators())? {
            return Err(format!("({name},{n}): R0–R4 do not imply H1–H5"));
        }
        if n >= 4 {
            let r03 = h_presentation(n, &g, &HRelation::R[..4]).map_err(err)?;
            if !implies(&r03, hn.relators())? || !implies(&hn, r03.relators())? {
                return Err(format!("({name},{n}): R0–R3 and H1–H5 are not equivalent"));
            }
        }
        let r4 = h_presentation(n, &g, &[HRelation::R4]).map_err(err)?;
        let quotient = hn.with_extra_relators(r4.relators().iter().cloned(), hn.family().clone()).map_err(err)?;
        let cert = verify_isomorphism(&quotient, &hs, GenMap::identity(&quotient), GenMap::identity(&hs), CAP)
            .map_err(err)?;
        if !cert.is_valid() || cert.source_order != cert.target_order {
            return Err(format!("({name},{n}): H_n/R4 vs HS_n: {:?}", cert.failure));
        }
        parts.push(format!("{name}/{n}:{}", cert.target_order.unwrap_or(0)));
    }
    Ok(parts.join(" "))
}

fn criterion8() -> Check {
    for name in ["c2", "klein"] {
        let g = group(name)?;
        let rep = verify_tau_properties(3, &g, 200, 2024, CAP).map_err(err)?;
        if !rep.passed() {
            return Err(format!("({name},3): {rep:?}"));
        }
        let base = tau_base_case(3, &g).map_err(err)?;
        if !base.passed {
            return Err(format!("({name},3) base case: {}", base.witness.unwrap_or_default()));
        }
    }
    Ok("200 samples each for c2/3 and klein/3, base case holds".into())
}

fn criterion9() -> Check {
    let mut parts = Vec::new();
    for name in ["klein", "d4", "s3"] {
        let g = group(name)?;
        let rep = c_symbol_subgroup_check(3, &g, CAP).map_err(err)?;
        if !rep.passed() {
            return Err(format!("({name},3): {rep:?}"));
        }
        parts.push(format!("{name}/3:{}", rep.exterior_order));
    }
    Ok(parts.join(" "))
}

fn criterion10() -> Check {
    let mut parts = Vec::new();
    for name in ["c2", "c3", "klein"] {
        let g = group(name)?;
        let ab = abelian_invariants_of_presentation(&coxeter_presentation(2, &g).map_err(err)?).map_err(err)?;
        // a free product of |G| copies of ℤ/2
        let expected = AbelianInvariants::from_cyclic_orders(&vec![2; g.order()]);
        if ab != expected {
            return Err(format!("S_2({name}): abelianization {ab}, expected {expected}"));
        }
        parts.push(format!("{name}:{ab}"));
    }
    let g = group("c2")?;
    let table = todd_coxeter(&coxeter_presentation(2, &g).map_err(err)?, &[], 10_000).map_err(err)?;
    if table.status() != EnumerationStatus::CapacityExceeded {
        return Err(format!("S_2(c2) enumerated to {} cosets", table.coset_count()));
    }
    parts.push("S_2(c2) capacity-exceeded at 10^4".into());
    Ok(parts.join(" "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("order table", criterion1),
        ("kernel of mu = H2", criterion2),
        ("cokernel of mu = H1", criterion3),
        ("crossed module axioms", criterion4),
        ("presentation equivalences", criterion5),
        ("HS presentation and split decomposition", criterion6),
        ("R/H implications", criterion7),
        ("rewriting tau", criterion8),
        ("c-symbols and exterior square", criterion9),
        ("S2(G) free product", criterion10),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let ms = start.elapsed().as_millis();
        match res {
            Ok(detail) => println!("PASS criterion {}: {title} ({ms} ms) {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title} ({ms} ms) {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
