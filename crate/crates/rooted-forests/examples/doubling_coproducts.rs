//! The two doubling bialgebras: pairs of a tree with an admissible cut
//! (written `(t, P^c(t))`) and pairs of a tree with an edge selection.
//!
//! Run with: `cargo run --example doubling_coproducts`

use rooted_forests::doubling::{
    counit_vpair, delta_monomial, delta_pair, gamma_pair, project_p2_v, VMonomial, VPair, WPair,
};
use rooted_forests::MarkedTree;

fn main() {
    // The 3-chain with its root edge cut: the pruning is the upper 2-chain.
    let p = VPair::new(MarkedTree::parse("[*[[]]]").unwrap()).unwrap();
    println!("pair        : {p} with pruning {}", p.pruning());
    println!("degree      : {} (vertices of the pruning)", p.degree());
    println!("Δ({p}) = {}", delta_pair(&p).render());
    println!("ε({p}) = {}", counit_vpair(&p));
    println!("P₂({p}) = {}", project_p2_v(&p));

    // The contraction doubling accepts any edge selection, admissible or not.
    let w = WPair::new(MarkedTree::parse("[*[*[]]]").unwrap());
    println!("Γ({w}) = {}", gamma_pair(&w).render());

    // Both coproducts extend multiplicatively to monomials of pairs.
    let m = VMonomial::from_factors(vec![
        p.clone(),
        VPair::new(MarkedTree::parse("[*[]]").unwrap()).unwrap(),
    ]);
    println!("Δ({m}) = {}", delta_monomial(&m).render());
}
