//! Indicators of a Drinfeld center are `|nu_n|^2`, and indicators of a
//! product category multiply. Both are checked against brute force on
//! `Z_N x Z_N` with the cocycle `psi_N^r` times its inverse.

use fsind::indicator::{nu_brute, nu_center, nu_product};
use fsind::ThreeCocycle;

fn main() -> fsind::Result<()> {
    for (n_big, r) in [(4usize, 1i64), (5, 2), (6, 1)] {
        let w = ThreeCocycle::psi(n_big, r)?;
        let doubled = ThreeCocycle::product(&w, &w.inverse())?;
        for n in 1..=n_big {
            let v = nu_brute(&w, n);
            let center = nu_center(&v);
            assert_eq!(center, nu_brute(&doubled, n));
            assert_eq!(nu_product(&v, &nu_brute(&w.inverse(), n)), center);
            println!("psi_{n_big}^{r}  n={n}  nu={v}  |nu|^2={center}");
        }
    }
    Ok(())
}
