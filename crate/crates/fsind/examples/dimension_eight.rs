//! Three semisimple Hopf algebras of dimension 8 with pairwise distinct
//! indicator sequences: `H_8(-1)`, `C[D_8] = H_8(1)` and `C[Q_8]`.

use fsind::extension::{family_h2n2, omega_from_extension};
use fsind::indicator::{nu, nu_group_algebra};
use fsind::FiniteGroup;

fn main() -> fsind::Result<()> {
    let b8 = omega_from_extension(&family_h2n2(2, 1)?)?;
    let h8_plus = omega_from_extension(&family_h2n2(2, 0)?)?;
    let q8 = FiniteGroup::from_table_file(concat!(env!("CARGO_MANIFEST_DIR"), "/data/q8.txt"))?;
    for n in [1usize, 2, 4, 8] {
        println!(
            "n={n}  H_8(-1): {:<3} H_8(1): {:<3} C[D_8]: {:<3} C[Q_8]: {}",
            nu(&b8, n).to_string(),
            nu(&h8_plus, n).to_string(),
            nu_group_algebra(&FiniteGroup::dihedral(8)?, n).to_string(),
            nu_group_algebra(&q8, n),
        );
    }
    Ok(())
}
