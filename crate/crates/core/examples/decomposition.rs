//! Cocycles on H⋆E as compatible pairs of an H-cocycle and an E-cocycle.

use hopfcoh::cohomology::{build_box_set, verify_decomposition};
use hopfcoh::models::taft_pair;
use hopfcoh::radford::ComoduleAlgebraData;
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    let pair = taft_pair(2, make_prime_field(5)?)?;
    let fa = ComoduleAlgebraData::from_braided(&pair.braided)?;

    let pairs = build_box_set(&pair.braided, &fa, 10_000_000)?;
    println!("{} compatible pairs", pairs.pairs.len());

    let r = verify_decomposition(&pair.braided, &fa, 10_000_000)?;
    for (k, v) in &r.counts {
        println!("{k} = {v}");
    }
    println!("{}", r.summary());
    Ok(())
}
