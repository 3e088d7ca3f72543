//! `Vec` on `Z_p` twisted by the cocycle `psi_p` has `nu_p = S(1, p)`. For
//! `p = 1 mod 4` this is `sqrt(p)`, so `p` does not divide `nu_p`, while
//! `sqrt(p)` still does.

use fsind::cyclotomic::sqrt_int;
use fsind::indicator::{frobenius_check, nu};
use fsind::{GTCategory, ThreeCocycle, VerifyMode};

fn main() -> fsind::Result<()> {
    for p in [3usize, 5, 7, 13] {
        let cat = GTCategory::pointed(ThreeCocycle::psi(p, 1)?, VerifyMode::Full)?;
        let v = nu(&cat, p);
        let report = frobenius_check(&cat);
        println!(
            "p={p:<2} nu_p = {v}  equals sqrt(p): {}  frobenius: {}  n/sqrt(p) refinement: {}",
            v == sqrt_int(p as u64)?,
            if report.verdict { "pass" } else { "fail" },
            if report.refined_bound_holds() {
                "holds"
            } else {
                "fails"
            },
        );
    }
    Ok(())
}
