//! Driving the command line in-process and reading its JSON.

use hopfcoh::cli::{run, Cli};

use clap::Parser;

fn main() -> hopfcoh::Result<()> {
    for args in [
        &["hopfcoh", "check", "kD:s3:5"][..],
        &["hopfcoh", "cohomology", "taft", "--n", "3", "--p", "7"],
        &["hopfcoh", "verify", "normalization", "kG:cyclic:3:7"],
        &["hopfcoh", "verify", "cross-check", "z2:inv", "--p", "2"],
    ] {
        let cli = Cli::try_parse_from(args).expect("valid arguments");
        let outcome = run(&cli)?;
        println!(
            "{} {} ({} bytes of JSON)",
            if outcome.passed { "PASS" } else { "FAIL" },
            args[1..].join(" "),
            outcome.json.len()
        );
    }
    Ok(())
}
