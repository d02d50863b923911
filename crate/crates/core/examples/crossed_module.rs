//! The crossed module μ: S_n(G) → G ≀ S_n.
//!
//! Realizes S_n(G) from the amalgam presentation, checks that G ≀ S_n acts
//! on it, checks both crossed-module axioms on generators, and reports the
//! kernel and image of μ.
//!
//!     cargo run --release --example crossed_module -- s3 3

use parasym::enumeration::DEFAULT_MAX_COSETS;
use parasym::group::{abelianization, make_builtin, WreathGroup};
use parasym::morphisms::{
    kernel_of_mu, verify_action_well_defined, verify_central, verify_cm1, verify_cm2, AmalgamModel,
};

fn main() -> parasym::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "klein".into());
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let g = make_builtin(&name)?;

    let model = AmalgamModel::new(n, &g, DEFAULT_MAX_COSETS)?;
    println!(
        "S_{n}({name}) from {} amalgam generators: order {}",
        model.presentation.generator_count(),
        model.regular.order()
    );
    for (label, outcome) in [
        ("action well defined", verify_action_well_defined(&model)?),
        ("CM1  μ(m^x) = x⁻¹ μ(m) x", verify_cm1(&model)?),
        ("CM2  m'⁻¹ m m' = m^μ(m')", verify_cm2(&model)?),
    ] {
        println!("{label:<28} {} ({} cases)", if outcome.passed { "ok" } else { "FAILED" }, outcome.cases);
    }

    let mu = kernel_of_mu(n, &g, DEFAULT_MAX_COSETS)?;
    let wreath = WreathGroup::new(&g, n).order();
    println!("|ker μ| = {}, invariants {}", mu.kernel.len(), mu.kernel_invariants);
    println!("kernel central: {}", verify_central(&mu.group, &mu.kernel).passed);
    println!(
        "|G ≀ S_n| / |im μ| = {} / {} = {}   (|G^ab| = {})",
        wreath,
        mu.image_order,
        wreath / mu.image_order as u128,
        abelianization(&g).order().unwrap_or(0)
    );
    Ok(())
}
