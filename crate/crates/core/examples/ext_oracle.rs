//! Brute-force Ext¹ and End computations for the local models I_n.

use ribbon_moduli::local::{endo_quotient_dim, ext1_dim};

fn main() -> ribbon_moduli::Result<()> {
    println!("{:>2} {:>4} {:>6} {:>6}", "n", "p", "ext1", "end/O");
    for p in [5, 101] {
        for n in 0..=5 {
            let ext = ext1_dim(n, p, 4 * n + 4)?;
            let endo = endo_quotient_dim(n, p, 2 * n + 2)?;
            println!("{n:>2} {p:>4} {ext:>6} {endo:>6}");
        }
    }
    Ok(())
}
