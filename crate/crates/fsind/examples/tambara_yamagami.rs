//! Second indicator of the regular object of a Tambara-Yamagami category
//! `TY(A, chi, sign)`: `|A| + sign * sqrt(|A|)`.

use fsind::indicator::nu2_tambara_yamagami;
use fsind::FiniteGroup;

fn main() -> fsind::Result<()> {
    for n in [2usize, 3, 4, 5, 9] {
        let a = FiniteGroup::cyclic(n)?;
        for sign in [1, -1] {
            let v = nu2_tambara_yamagami(&a, sign)?;
            let (re, _) = v.approx();
            println!(
                "A=Z_{n} sign={sign:+}  nu_2 = {v}  ~ {re:.4}  integer: {}",
                v.as_integer().is_some()
            );
        }
    }
    Ok(())
}
