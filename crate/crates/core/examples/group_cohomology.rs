//! Non-abelian group cohomology and the semidirect decomposition on S3 = Z/2⋉Z/3.

use hopfcoh::group_cohom::{group_h0, group_h1, verify_group_decomposition, SemidirectAction};
use hopfcoh::models::{FiniteGroup, GroupAction};

fn main() -> hopfcoh::Result<()> {
    // Z/2 acting trivially on S3: cocycles are homomorphisms, classes are
    // their conjugacy classes.
    let act = GroupAction::trivial(FiniteGroup::cyclic(2), FiniteGroup::s3());
    let h1 = group_h1(&act, 1_000_000)?;
    println!("H¹(Z/2, S3): |H⁰| = {}, |Z¹| = {}, |H¹| = {}", group_h0(&act).len(), h1.z1.len(), h1.classes.len());

    let z3 = FiniteGroup::cyclic(3);
    let sd = SemidirectAction::new(
        GroupAction::inversion(z3.clone())?,
        GroupAction::inversion(z3.clone())?,
        GroupAction::trivial(z3.clone(), z3),
    )?;
    let r = verify_group_decomposition(&sd, 1_000_000)?;
    for (k, v) in &r.counts {
        println!("{k} = {v}");
    }
    println!("{}", r.summary());
    Ok(())
}
