//! Enumeration of trees and pair classes by size.
//!
//! Run with: `cargo run --example enumerate`

use rooted_forests::doubling::{enumerate_vpairs, enumerate_wpairs};
use rooted_forests::enumerate_trees;

fn main() {
    let counts: Vec<usize> = (1..=8).map(|n| enumerate_trees(n).len()).collect();
    println!("trees per size 1..8: {counts:?}");

    for t in enumerate_trees(4) {
        println!("  {t}");
    }

    println!("cut-pair classes on 3 vertices:");
    for p in enumerate_vpairs(3) {
        println!("  {p}  (pruning {})", p.pruning());
    }

    println!("selection-pair classes on 3 vertices:");
    for p in enumerate_wpairs(3) {
        println!("  {p}  (subforest {})", p.selected());
    }
}
