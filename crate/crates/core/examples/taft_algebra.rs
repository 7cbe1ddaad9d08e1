//! The Taft algebra H_{n²}: axioms, grouplikes and a failing corruption.

use hopfcoh::hopf_core::{check_hopf, grouplikes};
use hopfcoh::linalg::LinearMap;
use hopfcoh::models::taft_algebra;
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    let f = make_prime_field(7)?;
    let h = taft_algebra(3, f)?;
    let report = check_hopf(&h, true);
    println!("{}: dim {}, {}", h.name, h.dim(), report.summary());

    // Grouplikes by exhaustive search: 7^9 candidates exceed the budget for
    // H9, so search H4 over F_5 instead.
    let small = taft_algebra(2, make_prime_field(5)?)?;
    let gr = grouplikes(&small, 10_000_000)?;
    println!("grouplikes of {}: {}", small.name, gr.iter().map(|g| g.display()).collect::<Vec<_>>().join(", "));
    if let Err(e) = grouplikes(&h, 10_000_000) {
        println!("grouplikes of {}: {e}", h.name);
    }

    // Replace the antipode by the identity: the antipode axioms fail with witnesses.
    let broken = h.with_antipode(LinearMap::identity(f, h.shape().to_vec()))?;
    for item in check_hopf(&broken, false).failures() {
        println!("FAIL {}: {}", item.name, item.witness.as_deref().unwrap_or(""));
    }
    Ok(())
}
