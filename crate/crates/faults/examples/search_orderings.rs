//! Searches for face-circuit CNOT orderings satisfying the plane
//! conditions and prints the first solution found.
//!
//! Usage: cargo run --release --example search_orderings -- [d]

use ccv_codes::CappedCode;
use ccv_faults::search::search_orderings;

fn main() {
    let d: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("d must be an odd integer"))
        .unwrap_or(5);
    let ccc = CappedCode::build(d).expect("valid distance");
    let start = std::time::Instant::now();
    match search_orderings(&ccc, false) {
        Some((o, checks)) => {
            println!(
                "found after {checks} condition checks in {:.2?}",
                start.elapsed()
            );
            for (j, f) in o.faces.iter().enumerate() {
                println!("face {j}: {f:?}");
            }
            println!("cap: 0..={}", ccc.n_2d());
        }
        None => {
            println!(
                "no counterclockwise-rotation assignment for d={d}; retrying with reversed cycles"
            );
            match search_orderings(&ccc, true) {
                Some((o, checks)) => {
                    println!("found (with reversals) after {checks} checks");
                    for (j, f) in o.faces.iter().enumerate() {
                        println!("face {j}: {f:?}");
                    }
                }
                None => println!("no solution in the rotation/reversal family for d={d}"),
            }
        }
    }
}
