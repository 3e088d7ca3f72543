//! Building, checking and inspecting 3-cocycles: verification, the class
//! function `omega~_n`, cohomological orders and restriction.

use std::sync::Arc;

use fsind::cocycle::OmegaTilde;
use fsind::{FiniteGroup, GroupElement, ThreeCocycle, VerifyMode};

fn main() -> fsind::Result<()> {
    let w = ThreeCocycle::psi(6, 1)?;
    let report = w.verify(VerifyMode::Full)?;
    println!(
        "{}: {} quadruples checked",
        w.label(),
        report.quadruples_checked
    );
    println!("c(omega) = {}", w.c_omega());
    for g in w.group().elements() {
        let t = match w.omega_tilde(6, g) {
            OmegaTilde::Zero => "0".to_string(),
            OmegaTilde::Root(z) => z.to_string(),
        };
        println!(
            "  g={}  ord={}  omega~_6(g)={t}  c(omega|<g>)={}",
            g.0,
            w.group().element_order(g),
            w.cohomological_order_cyclic(g)
        );
    }
    let sub = w.group().cyclic_subgroup(GroupElement(3));
    println!(
        "restricted to <3>: trivial = {}",
        w.restrict(&sub)?.is_identically_trivial()
    );

    let z3 = Arc::new(FiniteGroup::cyclic(3)?);
    let broken = ThreeCocycle::from_fn(
        z3,
        3,
        |a, b, c| u64::from(a.0 == 1 && b.0 == 1 && c.0 == 1),
        "delta",
    );
    match broken.verify(VerifyMode::Full) {
        Ok(_) => println!("delta: accepted"),
        Err(e) => println!("delta: rejected ({e})"),
    }
    Ok(())
}
