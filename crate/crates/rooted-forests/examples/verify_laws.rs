//! Runs the full law battery at a small bound and prints one report line per
//! law, exactly as the `verify` subcommand does.
//!
//! Run with: `cargo run --release --example verify_laws [max_vertices]`
//!
//! Expected outcome: every law passes except `delta-comodule-morphism`,
//! whose naive form is genuinely false (the verifier prints the smallest
//! counterexample); its corrected form is the `xi-diagram` law, which passes.

use rooted_forests::verify::{verify_laws, Law};

fn main() {
    let max_vertices: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    println!("verifying all laws on trees with up to {max_vertices} vertices");
    let start = std::time::Instant::now();
    for report in verify_laws(&Law::ALL, max_vertices, 4) {
        println!("  {report}");
    }
    println!("done in {:?}", start.elapsed());
}
