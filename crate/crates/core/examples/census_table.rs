//! Prints the exhaustive census for the small cases as CSV.
//!
//! `cargo run --release -p dtournament --example census_table`

use dtournament::census::{self, CensusOptions};

fn main() -> dtournament::Result<()> {
    let opts = CensusOptions {
        degree_sequences: false,
        ..CensusOptions::default()
    };
    let mut header = true;
    for (n, d) in [(3, 1), (4, 1), (5, 1), (4, 2), (5, 2), (5, 3)] {
        let csv = census::enumerate(n, d, &opts)?.to_csv();
        let mut lines = csv.lines();
        let head = lines.next().unwrap_or_default();
        if header {
            println!("{head}");
            header = false;
        }
        for line in lines {
            println!("{line}");
        }
    }
    Ok(())
}
