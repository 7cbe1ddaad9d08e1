//! k[Z/n]⋆E is a Hopf algebra with the structure constants of H_{n²}.

use hopfcoh::hopf_core::check_hopf;
use hopfcoh::models::{check_taft_isomorphism, taft_pair};
use hopfcoh::radford::{check_braided_hopf, check_projection_maps, radford_product};
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    for (n, p) in [(2, 5), (3, 7)] {
        let pair = taft_pair(n, make_prime_field(p)?)?;
        println!("{}", check_braided_hopf(&pair.braided).summary());
        let he = radford_product(&pair.group_algebra, &pair.braided)?;
        println!("{}: dim {}, {}", he.name, he.dim(), check_hopf(&he, true).summary());
        println!("{}", check_projection_maps(&he, &pair.braided).summary());
        println!("{}", check_taft_isomorphism(&pair).summary());
    }
    Ok(())
}
