//! Hopf algebras as JSON files: write one, read it back, check it.

use hopfcoh::hopf_core::check_hopf;
use hopfcoh::io::{read_hopf, write_hopf};
use hopfcoh::models::taft_algebra;
use hopfcoh::scalars::make_prime_field;

fn main() -> hopfcoh::Result<()> {
    let h = taft_algebra(2, make_prime_field(5)?)?;
    let path = std::env::temp_dir().join("hopfcoh_h4.json");
    write_hopf(&path, &h)?;
    let back = read_hopf(&path)?;
    println!("wrote {}; round trip equal: {}", path.display(), back == h);
    println!("{}", check_hopf(&back, true).summary());
    println!("try: hopfcoh check file:{}", path.display());
    Ok(())
}
