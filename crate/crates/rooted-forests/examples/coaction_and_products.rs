//! The maps tying the two doublings together: the coaction φ, the partial
//! products ⊛ and ♯, the action ψ, and ξ in search mode.
//!
//! Run with: `cargo run --example coaction_and_products`

use rooted_forests::interplay::{phi_pair, psi, sharp, star, xi_search};
use rooted_forests::doubling::{VPair, WPair};
use rooted_forests::MarkedTree;

fn v(text: &str) -> VPair {
    VPair::new(MarkedTree::parse(text).unwrap()).unwrap()
}

fn w(text: &str) -> WPair {
    WPair::new(MarkedTree::parse(text).unwrap())
}

fn show<T: std::fmt::Display>(label: &str, value: Option<T>) {
    match value {
        Some(v) => println!("{label} = {v}"),
        None => println!("{label} = 0"),
    }
}

fn main() {
    // φ selects subforests of the pruning and contracts them away.
    let p = v("[*[[]]]");
    println!("φ({p}) = {}", phi_pair(&p).render());

    // ⊛ composes a pair with a pair on its trunk; the result's pruning is
    // the union of both prunings.
    show("(ℓ₃,{top}) ⊛ (ℓ₂,{e})", star(&v("[[*[]]]"), &v("[*[]]")));
    show("(ℓ₃,{top}) ⊛ (ℓ₃,{top})", star(&v("[[*[]]]"), &v("[[*[]]]")));

    // ♯ composes a selection with a selection on the quotient.
    show("(ℓ₃,{bottom}) ♯ (ℓ₂,{e})", sharp(&w("[*[[]]]"), &w("[*[]]")));

    // ψ lets a selection act on a cut of the quotient by raising it.
    show("ψ((ℓ₃,{bottom}) ⊗ (ℓ₂,{e}))", psi(&w("[*[[]]]"), &v("[*[]]")));

    // ξ reassembles a selection pair, a trunk selection and a quotient cut.
    match xi_search(&w("[*[[]]]"), &w("[[]]"), &v("[*[]]")) {
        Some((a, b)) => println!("ξ example = {a} ⊗ {b}"),
        None => println!("ξ example = 0"),
    }
}
