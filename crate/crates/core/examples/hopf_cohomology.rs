//! H⁰ and H¹ of the Taft algebra with coefficients in its subalgebra E_n.

use hopfcoh::cohomology::{build_c, check_diagram, compute_h1};
use hopfcoh::models::taft_pair;
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    for (n, p) in [(2, 5), (3, 7)] {
        let pair = taft_pair(n, make_prime_field(p)?)?;
        let d = build_c(&pair.taft, &pair.e_n)?;
        println!("{}", check_diagram(&d).summary());
        let r = compute_h1(&d, 10_000_000)?;
        println!("{}: |H⁰| = {}, |Z¹| = {}, |H¹| = {}", r.diagram, r.h0.len(), r.z1.len(), r.classes.len());
        for c in &r.classes {
            let mark = if c.distinguished { " (distinguished)" } else { "" };
            println!("  class of {} with {} cocycles{mark}", c.rep.display(), c.members.len());
        }
    }
    Ok(())
}
