//! Suzuki's Hopf algebras `A_{4NL}` (cyclic base) and `B_{4NL}` (base
//! `Z_N x Z_2`): closed-form indicators next to the brute-force sum.

use fsind::arith::divisors;
use fsind::extension::{family_suzuki_cyclic, family_suzuki_noncyclic};
use fsind::indicator::{nu, nu_suzuki_cyclic_closed, nu_suzuki_noncyclic_closed};
use fsind::CyclotomicInteger;

fn main() -> fsind::Result<()> {
    for (n_big, l, alpha, beta) in [
        (1usize, 2usize, -1i64, -1i64),
        (1, 3, 1, 1),
        (2, 3, -1, 1),
        (3, 2, 1, -1),
    ] {
        let cat = family_suzuki_cyclic(n_big, l, alpha, beta)?;
        print!("{:<28}", cat.label());
        for n in divisors(4 * (n_big * l) as u64) {
            let closed = nu_suzuki_cyclic_closed(n_big as u64, l as u64, alpha, beta, n)?;
            assert_eq!(nu(&cat, n as usize), CyclotomicInteger::from_int(closed));
            print!(" {n}:{closed}");
        }
        println!();
    }
    for (n_big, l, beta) in [(2usize, 2usize, 1i64), (2, 3, -1), (4, 2, 1)] {
        let cat = family_suzuki_noncyclic(n_big, l, beta)?;
        print!("{:<28}", cat.label());
        for n in divisors(4 * (n_big * l) as u64) {
            let closed = nu_suzuki_noncyclic_closed(n_big as u64, l as u64, beta, n)?;
            assert_eq!(nu(&cat, n as usize), CyclotomicInteger::from_int(closed));
            print!(" {n}:{closed}");
        }
        println!();
    }
    Ok(())
}
