//! The two classical coproducts on one worked tree, and the degree-zero
//! quotient that identifies edgeless forests with the unit.
//!
//! Run with: `cargo run --example classic_coproducts`

use rooted_forests::classic::{
    coaction_phi, coproduct_ck, coproduct_contract, project_hprime_forest,
};
use rooted_forests::lincomb::LinComb;
use rooted_forests::Forest;

fn main() {
    // The 4-vertex tree with a leaf child and a 2-chain child.
    let t = Forest::parse("[[[]][]]").unwrap();

    // Admissible cuts: prune above the cut, keep the root component.
    println!("Δ_ck({t})       = {}", coproduct_ck(&t).render());

    // Covering subforests: select edges, contract each component.
    // Note the coefficient 2: two selections produce the same class.
    println!("Δ_contract({t}) = {}", coproduct_contract(&t).render());

    // Identifying every edgeless forest with the unit turns the left legs
    // into the quotient algebra.
    let projected = coproduct_contract(&t).map_basis(|(a, b)| {
        LinComb::from_basis((project_hprime_forest(a), b.clone()))
    });
    println!("projected       = {}", projected.render());

    // The coaction sends the unit to bullet ⊗ unit and otherwise agrees with
    // the contraction coproduct.
    println!("Φ(1)            = {}", coaction_phi(&Forest::unit()).render());
}
