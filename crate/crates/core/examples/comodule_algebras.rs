//! Coefficient algebras over H⋆E: split a coaction into its H and E parts,
//! assemble it back, and extend by E.

use hopfcoh::models::taft_pair;
use hopfcoh::radford::{
    assemble_coaction, check_radford_comodule_algebra, radford_product, split_coaction, star_extension,
    ComoduleAlgebraData,
};
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    let pair = taft_pair(2, make_prime_field(5)?)?;
    let e = &pair.braided;
    let he = radford_product(&pair.group_algebra, e)?;

    let fa = ComoduleAlgebraData::from_braided(e)?;
    println!("{}", check_radford_comodule_algebra(&fa, e).summary());

    let assembled = assemble_coaction(&fa, &he, e)?;
    let split = split_coaction(&assembled, &he, e)?;
    println!("split after assemble recovers the E-coaction: {}", split.e_coaction == fa.e_coaction);
    println!("split after assemble recovers the H-coaction: {}", split.h_coaction == fa.h_coaction);

    let ext = star_extension(&fa, e)?;
    println!("{}: dim {}", ext.name, ext.algebra.dim());
    println!("{}", check_radford_comodule_algebra(&ext, e).summary());
    Ok(())
}
