//! The exact sequence through the E-coinvariants, on the Taft line and on
//! k^{Z/3} over k^{Z/2}.

use hopfcoh::catalog::{parse_instance, Coefficients, Instance};
use hopfcoh::cohomology::verify_exact_sequence;

fn main() -> hopfcoh::Result<()> {
    for spec in ["taft:2:5", "kD:s3:5"] {
        let Instance::Hopf(inst) = parse_instance(spec, None, None)? else { unreachable!() };
        let r = verify_exact_sequence(&inst.e, &inst.radford_coefficients(Coefficients::E)?, 10_000_000)?;
        println!("{spec}:");
        for (k, v) in &r.counts {
            println!("  {k} = {v}");
        }
        for item in &r.items {
            println!("  {} {}", if item.passed { "ok  " } else { "FAIL" }, item.name);
        }
    }
    Ok(())
}
