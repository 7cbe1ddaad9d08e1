//! k^D with coefficients k^C against D with coefficients (k^C)^×.

use hopfcoh::group_cohom::{cross_check_hopf_vs_group, cross_check_semidirect, SemidirectAction};
use hopfcoh::models::{check_function_isomorphism, ka_in_yd, FiniteGroup, GroupAction};
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    let f = make_prime_field(3)?;
    let z3 = FiniteGroup::cyclic(3);
    let inv = GroupAction::inversion(z3.clone())?;

    let pair = ka_in_yd(&inv, f)?;
    println!("{}", check_function_isomorphism(&pair).summary());

    let r = cross_check_hopf_vs_group(&inv, f, 10_000_000)?;
    println!("{}: {:?}", r.summary(), r.counts);

    let sd = SemidirectAction::new(inv.clone(), inv, GroupAction::trivial(z3.clone(), z3))?;
    let r = cross_check_semidirect(&sd, f, 10_000_000)?;
    println!("{}", r.summary());
    Ok(())
}
