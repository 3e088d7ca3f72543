//! A hand-built matched pair: `Z_2` acting on `Z_5` by inversion. The
//! bicrossed product is `D_10`, and iterating the pair actions computes
//! powers without a multiplication table.

use fsind::extension::{bicrossed_product, family_bismash, power_iteration};
use fsind::indicator::{frobenius_check, nu, nu_group_algebra};
use fsind::{FiniteGroup, GroupElement, MatchedPair};

fn main() -> fsind::Result<()> {
    let f = FiniteGroup::cyclic(5)?;
    let g = FiniteGroup::cyclic(2)?;
    // g acts on F by x -> -x when g = 1; F acts trivially on G.
    let pair = MatchedPair::new(
        f,
        g,
        |g, _| g,
        |g, x| GroupElement(if g.0 == 1 { (5 - x.0) % 5 } else { x.0 }),
    )?;
    let gamma = bicrossed_product(&pair)?;
    println!(
        "|F bowtie G| = {}, abelian: {}",
        gamma.order(),
        gamma.is_abelian()
    );
    let (x, h) = (GroupElement(2), GroupElement(1));
    for n in 1..=4 {
        let (xn, hn) = power_iteration(&pair, x, h, n);
        let direct = gamma.power(pair.join(x, h), n as i64);
        assert_eq!(pair.join(xn, hn), direct);
        println!("(x^2 b)^{n} = (x^{}, b^{})", xn.0, hn.0);
    }
    let cat = family_bismash(&pair)?;
    for n in [1usize, 2, 5, 10] {
        assert_eq!(nu(&cat, n), nu_group_algebra(&gamma, n));
        println!("bismash nu_{n} = {}", nu(&cat, n));
    }
    println!("frobenius verdict: {}", frobenius_check(&cat).verdict);
    Ok(())
}
