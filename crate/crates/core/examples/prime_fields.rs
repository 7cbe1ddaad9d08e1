//! Arithmetic in F_p: roots of unity and Gaussian binomials.

use hopfcoh::scalars::{make_prime_field, primitive_root_of_unity, zeta_binomial};

fn main() -> hopfcoh::Result<()> {
    let f = make_prime_field(7)?;
    let zeta = primitive_root_of_unity(f, 3)?;
    println!("F_7: primitive cube root of unity {zeta}, order {:?}", f.order(zeta));

    // (n choose s)_zeta vanishes for 0 < s < n when zeta has order n.
    for s in 0..=3 {
        println!("(3 choose {s})_zeta = {}", zeta_binomial(f, 3, s, zeta));
    }

    match make_prime_field(9) {
        Ok(_) => println!("9 accepted?"),
        Err(e) => println!("F_9 rejected: {e}"),
    }
    Ok(())
}
