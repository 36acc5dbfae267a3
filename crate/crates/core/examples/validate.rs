//! Runs the full validation battery and prints one verdict per criterion.
//! Build with `--release`; the battery takes a while in debug builds.

use kmachine::harness::validate_all;

fn main() {
    let seed = std::env::args().nth(1).map_or(7, |s| s.parse().expect("seed"));
    let report = validate_all(seed).expect("battery");
    for c in &report.criteria {
        println!("{c}");
    }
    println!("{} rows", report.rows.len());
}
