//! Quadratic Gauss sums `S(a, m)`, once by summing `m` roots of unity and once
//! from the closed form built on Jacobi symbols.

use fsind::cyclotomic::{gauss_sum_closed, gauss_sum_direct, jacobi_symbol, sqrt_int};

fn main() -> fsind::Result<()> {
    for (a, m) in [
        (1, 2),
        (1, 4),
        (1, 5),
        (2, 5),
        (1, 7),
        (3, 12),
        (5, 24),
        (-1, 9),
    ] {
        let direct = gauss_sum_direct(a, m)?;
        let closed = gauss_sum_closed(a, m)?;
        let (re, im) = closed.approx();
        println!(
            "S({a}, {m}) = {closed}  ~ {re:.4} + {im:.4}i  agree={}",
            direct == closed
        );
    }
    println!(
        "(2/15) = {}, (7/9) = {}",
        jacobi_symbol(2, 15)?,
        jacobi_symbol(7, 9)?
    );
    for m in [2, 3, 5, 12] {
        let s = sqrt_int(m)?;
        println!("sqrt({m}) = {s}, squared = {}", &s * &s);
    }
    Ok(())
}
