//! The six Hopf algebras `H_27(xi, zeta)` of dimension 27, with `beta` a
//! primitive cube root of unity. `nu_3` separates all six.

use fsind::indicator::{format_beta, table27};

fn main() -> fsind::Result<()> {
    println!(
        "{:<12} {:>6} {:>14} {:>6} {:>6}",
        "", "nu_1", "nu_3", "nu_9", "nu_27"
    );
    for row in table27()? {
        let cells: Vec<String> = row
            .values
            .iter()
            .map(|(_, v)| format_beta(v).unwrap_or_else(|| v.to_string()))
            .collect();
        println!(
            "{:<12} {:>6} {:>14} {:>6} {:>6}",
            row.label, cells[0], cells[1], cells[2], cells[3]
        );
    }
    Ok(())
}
