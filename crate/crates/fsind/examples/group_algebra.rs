//! Indicators of group algebras count solutions of `g^n = 1`, which is
//! already enough to tell `D_8` from `Q_8`.

use fsind::arith::divisors;
use fsind::indicator::nu_group_algebra;
use fsind::FiniteGroup;

fn main() -> fsind::Result<()> {
    let q8 = FiniteGroup::from_table_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/q8.txt"))?;
    let groups = [
        FiniteGroup::cyclic(8)?,
        FiniteGroup::direct_product(&FiniteGroup::cyclic(2)?, &FiniteGroup::cyclic(4)?)?,
        FiniteGroup::dihedral(8)?,
        q8,
    ];
    for g in &groups {
        let row: Vec<String> = divisors(g.order() as u64)
            .into_iter()
            .map(|n| format!("nu_{n}={}", nu_group_algebra(g, n as usize)))
            .collect();
        println!("{:<24} {}", g.label(), row.join("  "));
    }
    Ok(())
}
