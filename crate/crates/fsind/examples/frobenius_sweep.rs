//! Runs the divisibility test `n | nu_n` over a few families. Extensions
//! always pass; pointed categories with a nontrivial cocycle can fail.

use fsind::extension::{family_h2n2, family_hn3, family_suzuki_cyclic, omega_from_extension};
use fsind::indicator::frobenius_check;
use fsind::{GTCategory, ThreeCocycle, VerifyMode};

fn main() -> fsind::Result<()> {
    let cats = vec![
        omega_from_extension(&family_h2n2(4, 1)?)?,
        omega_from_extension(&family_hn3(3, 1, 2)?)?,
        family_suzuki_cyclic(2, 3, -1, -1)?,
        GTCategory::pointed(ThreeCocycle::psi(6, 1)?, VerifyMode::Full)?,
        GTCategory::pointed(ThreeCocycle::psi(9, 2)?, VerifyMode::Full)?,
    ];
    for cat in &cats {
        let report = frobenius_check(cat);
        let failing: Vec<u64> = report.failures().map(|e| e.n).collect();
        println!(
            "{:<24} dim={:<4} c(omega)={:<3} verdict={:<5} failing n: {:?}",
            report.label, report.dimension, report.c_omega, report.verdict, failing
        );
    }
    Ok(())
}
