//! Maps between the two doublings: the coaction `φ`, the products `⊛` and
//! `♯`, the action `ψ` and the map `ξ`.
//!
//! Each binary map must identify one argument with a trunk or a quotient of
//! the other. The public functions on canonical pairs use the deterministic
//! identification induced by canonical labeling; the law verifier instead
//! threads the concrete edge indices of one base tree through whole diagrams
//! (`ξ`'s aligned mode, chain enumeration for the product laws), which is the
//! form in which the identities are actually proved.

use crate::cut::{
    admissible_cuts, admissible_subsets, contract, edges_above, trunk_unchecked, EdgeMap,
};
use crate::doubling::{Monomial, VMonomial, VPair, WMonomial, WPair};
use crate::lincomb::LinComb;
use crate::tree::{EdgeSet, RootedTree};

/// Coaction of the contraction doubling on the cut doubling:
/// `φ(t,c) = Σ_{S′ ⊆ edges(P^c(t))} (t, S′) ⊗ (t/S′, image of c)`.
pub fn phi_pair(p: &VPair) -> LinComb<(WPair, VPair)> {
    let tree = p.tree();
    let mut out = LinComb::zero();
    for s in edges_above(tree, p.cut()).subsets() {
        let left = WPair::from_parts(tree.clone(), s.clone());
        let (q, emap) = contract(tree, &s);
        let right = VPair::from_parts(q, emap.lower(p.cut()));
        out.add_term((left, right), 1);
    }
    out
}

/// Multiplicative extension of `φ` to monomials of the cut doubling.
pub fn phi_monomial(m: &VMonomial) -> LinComb<(WMonomial, VMonomial)> {
    let mut acc = LinComb::from_basis((Monomial::unit(), Monomial::unit()));
    for factor in m.factors() {
        let f = phi_pair(factor).map_basis(|(a, b)| {
            LinComb::from_basis((Monomial::single(a.clone()), Monomial::single(b.clone())))
        });
        acc = acc.mul(&f);
    }
    acc
}

/// Combines a cut `upper` of the base tree with an already-raised cut
/// `lower` of its trunk: the result is the admissible cut whose pruning is
/// the union of both prunings. Edges of `upper` sitting strictly above a
/// `lower` edge are absorbed by it.
pub(crate) fn recombine_cut(tree: &RootedTree, upper: &EdgeSet, lower: &EdgeSet) -> EdgeSet {
    let kept: EdgeSet = upper
        .iter()
        .filter(|&e| !lower.iter().any(|d| tree.is_strict_ancestor(d, e)))
        .collect();
    lower.union(&kept)
}

/// The product dual to `Δ|_V`:
/// `(t,s) ⊛ (t′,s′) = (t, s ∪ s′)` when `t′ = R^c(t)`, and zero otherwise.
/// The union of prunings is realized by raising `s′`'s cut through the trunk
/// identification and recombining it with `c`.
pub fn star(a: &VPair, b: &VPair) -> Option<VPair> {
    let tree = a.tree();
    let (trunk_tree, emap) = trunk_unchecked(tree, a.cut());
    if trunk_tree != *b.tree() {
        return None;
    }
    let raised = emap.raise(b.cut());
    Some(VPair::from_parts(
        tree.clone(),
        recombine_cut(tree, a.cut(), &raised),
    ))
}

/// The product dual to `Γ|_Ṽ`:
/// `(t,s) ♯ (t′,s′) = (t, s ∪ s′)` when `t′ = t/s`, and zero otherwise.
pub fn sharp(a: &WPair, b: &WPair) -> Option<WPair> {
    let tree = a.tree();
    let (q, emap) = contract(tree, a.edges());
    if q != *b.tree() {
        return None;
    }
    Some(WPair::from_parts(
        tree.clone(),
        a.edges().union(&emap.raise(b.edges())),
    ))
}

/// Action of the contraction doubling on the cut doubling:
/// `ψ((t,s) ⊗ (u, P^c(u))) = (t, P^{c̃}(t))` when `u = t/s`, where `c̃` is
/// the raising of `c` to `t`; zero otherwise.
pub fn psi(a: &WPair, b: &VPair) -> Option<VPair> {
    let tree = a.tree();
    let (q, emap) = contract(tree, a.edges());
    if q != *b.tree() {
        return None;
    }
    Some(VPair::from_parts(tree.clone(), emap.raise(b.cut())))
}

/// `ξ` evaluated with every identification supplied by shared edge indices of
/// one base tree `t`:
///
/// * first argument `(t, s1)`,
/// * second argument `(R^c(t), s2)` described by the admissible cut `c` and
///   edges `s2` of the trunk (edges of `t`),
/// * third argument `(t/s1, cut)` with `cut` given as edges of `t` avoiding
///   `s1`.
///
/// Returns `(t, s1 ∪ s2) ⊗ (t/(s1 ∪ s2), image of cut)` when the alignment
/// conditions hold, `None` otherwise.
pub fn xi_aligned(
    tree: &RootedTree,
    s1: &EdgeSet,
    c: &EdgeSet,
    s2: &EdgeSet,
    cut: &EdgeSet,
) -> Option<(WPair, VPair)> {
    if !crate::cut::is_admissible(tree, c) || !crate::cut::is_admissible(tree, cut) {
        return None;
    }
    // s2 must select edges of the trunk of c.
    if !s2.is_subset(&crate::cut::trunk_edges(tree, c)) {
        return None;
    }
    let union = s1.union(s2);
    if !cut.is_disjoint(&union) {
        return None;
    }
    let (q, emap) = contract(tree, &union);
    let out_cut = emap.lower(cut);
    Some((
        WPair::from_parts(tree.clone(), union),
        VPair::from_parts(q, out_cut),
    ))
}

/// `ξ` on canonical classes: reconstructs the identifications, scanning the
/// admissible cuts of the first tree in ascending order and returning the
/// first complete match.
///
/// `ξ((t′,s′) ⊗ (t″,s″) ⊗ (u,v)) = (t′, s′∪s″) ⊗ (t′/(s′∪s″), v)` requires
/// `u = t′/s′`, `t″ = R^c(t′)` for an admissible cut `c`, and the raising of
/// `v`'s cut to `t′` to avoid `s′ ∪ s″`.
pub fn xi_search(a: &WPair, b: &WPair, c: &VPair) -> Option<(WPair, VPair)> {
    let tree = a.tree();
    let (q, emap) = contract(tree, a.edges());
    if q != *c.tree() {
        return None;
    }
    let raised_cut = emap.raise(c.cut());
    for candidate in admissible_cuts(tree) {
        let (trunk_tree, trunk_map) = trunk_unchecked(tree, &candidate);
        if trunk_tree != *b.tree() {
            continue;
        }
        let s2 = trunk_map.raise(b.edges());
        if let Some(result) = xi_aligned(tree, a.edges(), &candidate, &s2, &raised_cut) {
            return Some(result);
        }
    }
    None
}

/// Concrete data of one cut-coproduct term, used by the verifier to keep all
/// identifications inside the base tree: `Δ(t,c₀)`'s term for the realization
/// cut `c` has left factor `(t, c)` and right factor the trunk of `c` carrying
/// the surviving part of `c₀`.
pub(crate) struct DeltaTermData {
    /// Realization cut of the term (left factor's cut).
    pub cut: EdgeSet,
    /// Edges of `c₀` surviving in the trunk, as edges of the base tree.
    pub surviving: EdgeSet,
    /// Canonical trunk and its edge bijection into the base tree.
    pub trunk: RootedTree,
    pub trunk_map: EdgeMap,
}

pub(crate) fn delta_term_data(p: &VPair) -> Vec<DeltaTermData> {
    let tree = p.tree();
    let zone = p.cut().union(&edges_above(tree, p.cut()));
    admissible_subsets(tree, &zone)
        .into_iter()
        .map(|cut| {
            let (trunk, trunk_map) = trunk_unchecked(tree, &cut);
            let surviving = p.cut().intersection(&trunk_map.base_edges());
            DeltaTermData {
                cut,
                surviving,
                trunk,
                trunk_map,
            }
        })
        .collect()
}

/// Right-hand side of the `ξ` diagram
/// `(ξ ⊗ id) ∘ τ²³ ∘ (φ⊗φ) ∘ Δ` on one pair, evaluated with `ξ` in aligned
/// mode: every identification is the concrete inclusion or contraction map
/// inside the base tree.
pub fn xi_diagram_rhs(p: &VPair) -> LinComb<(WPair, VPair, VPair)> {
    let tree = p.tree();
    let mut out = LinComb::zero();
    for term in delta_term_data(p) {
        // φ on the left factor (t, c): S′ ranges over edges above c.
        for s1 in edges_above(tree, &term.cut).subsets() {
            // φ on the right factor (trunk, surviving), in trunk coordinates.
            let surviving_local = term.trunk_map.lower(&term.surviving);
            for s2_local in edges_above(&term.trunk, &surviving_local).subsets() {
                let (q2, em2) = contract(&term.trunk, &s2_local);
                let id_part = VPair::from_parts(q2, em2.lower(&surviving_local));

                let s2 = term.trunk_map.raise(&s2_local);
                let (w, v) = xi_aligned(tree, &s1, &term.cut, &s2, &term.cut)
                    .expect("diagram terms satisfy the alignment conditions");
                out.add_term((w, v, id_part), 1);
            }
        }
    }
    out
}

/// Left-hand side of the `ξ` diagram: `(id ⊗ Δ) ∘ φ`.
pub fn xi_diagram_lhs(p: &VPair) -> LinComb<(WPair, VPair, VPair)> {
    phi_pair(p).map_basis(|(w, v)| {
        crate::doubling::delta_pair(v).map_basis(|(x, y)| {
            LinComb::from_basis((w.clone(), x.clone(), y.clone()))
        })
    })
}

/// As `xi_diagram_rhs`, for a monomial: all maps act factor-wise and the
/// slot-wise products assemble the monomial tensors.
pub fn xi_diagram_rhs_monomial(m: &VMonomial) -> LinComb<(WMonomial, VMonomial, VMonomial)> {
    let mut acc = LinComb::from_basis((Monomial::unit(), Monomial::unit(), Monomial::unit()));
    for factor in m.factors() {
        let per = xi_diagram_rhs(factor).map_basis(|(w, v, y)| {
            LinComb::from_basis((
                Monomial::single(w.clone()),
                Monomial::single(v.clone()),
                Monomial::single(y.clone()),
            ))
        });
        acc = acc.mul(&per);
    }
    acc
}

/// Left-hand side of the `ξ` diagram on a monomial, from the multiplicative
/// extensions of `φ` and `Δ`.
pub fn xi_diagram_lhs_monomial(m: &VMonomial) -> LinComb<(WMonomial, VMonomial, VMonomial)> {
    phi_monomial(m).map_basis(|(w, v)| {
        crate::doubling::delta_monomial(v).map_basis(|(x, y)| {
            LinComb::from_basis((w.clone(), x.clone(), y.clone()))
        })
    })
}

/// One aligned `ξ` instance together with the canonical classes of its three
/// inputs, used to compare aligned and search evaluation.
pub struct XiInstance {
    pub a: WPair,
    pub b: WPair,
    pub c: VPair,
    pub aligned: Option<(WPair, VPair)>,
}

/// All aligned `ξ` instances arising from the diagram pipeline over pairs on
/// trees with up to `max_vertices` vertices.
pub fn aligned_xi_instances(max_vertices: usize) -> Vec<XiInstance> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for p in crate::doubling::enumerate_vpairs(n) {
            let tree = p.tree();
            for term in delta_term_data(&p) {
                for s1 in edges_above(tree, &term.cut).subsets() {
                    let surviving_local = term.trunk_map.lower(&term.surviving);
                    for s2_local in edges_above(&term.trunk, &surviving_local).subsets() {
                        let s2 = term.trunk_map.raise(&s2_local);
                        let (q1, em1) = contract(tree, &s1);
                        let c_class = VPair::from_parts(q1, em1.lower(&term.cut));
                        out.push(XiInstance {
                            a: WPair::from_parts(tree.clone(), s1.clone()),
                            b: WPair::from_parts(term.trunk.clone(), s2_local.clone()),
                            c: c_class,
                            aligned: xi_aligned(tree, &s1, &term.cut, &s2, &term.cut),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Agreement statistics between `ξ`'s search mode and aligned mode.
pub struct XiModeAgreement {
    pub instances: u64,
    pub disagreements: u64,
    pub first_disagreement: Option<String>,
}

/// Compares search-mode and aligned-mode evaluation of `ξ` on every aligned
/// triple from trees up to `max_vertices`. The modes may legitimately differ
/// when a tree automorphism leaves room for the identification choice; this
/// is reported, not asserted.
pub fn xi_mode_agreement(max_vertices: usize) -> XiModeAgreement {
    let mut stats = XiModeAgreement {
        instances: 0,
        disagreements: 0,
        first_disagreement: None,
    };
    for inst in aligned_xi_instances(max_vertices) {
        stats.instances += 1;
        let search = xi_search(&inst.a, &inst.b, &inst.c);
        if search != inst.aligned {
            stats.disagreements += 1;
            if stats.first_disagreement.is_none() {
                stats.first_disagreement = Some(format!(
                    "ξ({} ⊗ {} ⊗ {}): search {:?} vs aligned {:?}",
                    inst.a,
                    inst.b,
                    inst.c,
                    search.map(|(w, v)| format!("{w} ⊗ {v}")),
                    inst.aligned.map(|(w, v)| format!("{w} ⊗ {v}")),
                ));
            }
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doubling::{enumerate_vpairs, enumerate_wpairs};
    use crate::marked::MarkedTree;

    fn v(text: &str) -> VPair {
        VPair::new(MarkedTree::parse(text).unwrap()).unwrap()
    }

    fn w(text: &str) -> WPair {
        WPair::new(MarkedTree::parse(text).unwrap())
    }

    #[test]
    fn phi_examples() {
        let f = phi_pair(&v("[]"));
        assert_eq!(f.term_count(), 1);
        assert_eq!(f.coeff(&(w("[]"), v("[]"))), 1.into());

        let f = phi_pair(&v("[*[]]"));
        assert_eq!(f.term_count(), 1);
        assert_eq!(f.coeff(&(w("[[]]"), v("[*[]]"))), 1.into());

        let f = phi_pair(&v("[*[[]]]"));
        assert_eq!(f.term_count(), 2);
        assert_eq!(f.coeff(&(w("[[[]]]"), v("[*[[]]]"))), 1.into());
        assert_eq!(f.coeff(&(w("[[*[]]]"), v("[*[]]"))), 1.into());
    }

    #[test]
    fn phi_restricts_to_admissible_pairs() {
        // Every φ output second factor is built through VPair::from_parts,
        // which asserts admissibility of the contracted cut.
        for n in 1..=5 {
            for p in enumerate_vpairs(n) {
                let _ = phi_pair(&p);
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&v("[[*[]]]"), &v("[*[]]")), Some(v("[*[[]]]")));
        for n in 1..=3 {
            for p in enumerate_vpairs(n) {
                let trivial = VPair::from_parts(p.tree().clone(), EdgeSet::empty());
                assert_eq!(star(&trivial, &p).as_ref(), Some(&p));
            }
        }
        assert_eq!(star(&v("[[*[]]]"), &v("[[[]]]")), None);
        assert_eq!(star(&v("[[*[]]]"), &v("[*[[]]]")), None);
    }

    #[test]
    fn star_total_cut_recombination() {
        // The second factor of the total-cut term recombines to the original
        // pair: (ℓ₂,{e}) ⊛ (•,∅) = (ℓ₂,{e}).
        assert_eq!(star(&v("[*[]]"), &v("[]")), Some(v("[*[]]")));
    }

    #[test]
    fn sharp_examples() {
        assert_eq!(sharp(&w("[*[[]]]"), &w("[*[]]")), Some(w("[*[*[]]]")));
        for n in 1..=3 {
            for p in enumerate_wpairs(n) {
                let trivial = WPair::from_parts(p.tree().clone(), EdgeSet::empty());
                assert_eq!(sharp(&trivial, &p).as_ref(), Some(&p));
            }
        }
        assert_eq!(sharp(&w("[*[]]"), &w("[[]]")), None);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&w("[*[[]]]"), &v("[*[]]")), Some(v("[[*[]]]")));
        for n in 1..=3 {
            for p in enumerate_vpairs(n) {
                let trivial = WPair::from_parts(p.tree().clone(), EdgeSet::empty());
                assert_eq!(psi(&trivial, &p).as_ref(), Some(&p));
            }
        }
        assert_eq!(psi(&w("[*[]]"), &v("[*[]]")), None);
    }

    #[test]
    fn xi_search_examples() {
        let result = xi_search(&w("[*[[]]]"), &w("[[]]"), &v("[*[]]"));
        assert_eq!(result, Some((w("[*[[]]]"), v("[*[]]"))));

        // u must equal t′/s′.
        assert_eq!(xi_search(&w("[*[]]"), &w("[]"), &v("[*[]]")), None);
        // No cut of the 3-chain has a corolla trunk.
        assert_eq!(
            xi_search(&w("[[[]]]"), &w("[[][]]"), &v("[[[]]]")),
            None
        );
    }

    #[test]
    fn xi_diagram_on_small_pairs() {
        for n in 1..=4 {
            for p in enumerate_vpairs(n) {
                assert_eq!(xi_diagram_lhs(&p), xi_diagram_rhs(&p), "{p}");
            }
        }
    }

    #[test]
    fn phi_is_an_algebra_morphism_on_monomials() {
        use crate::doubling::VMonomial;
        let pairs: Vec<VPair> = (1..=3).flat_map(enumerate_vpairs).collect();
        for a in &pairs {
            for b in &pairs {
                let m = VMonomial::from_factors(vec![a.clone(), b.clone()]);
                let lhs = phi_monomial(&m);
                let rhs = phi_monomial(&VMonomial::single(a.clone()))
                    .mul(&phi_monomial(&VMonomial::single(b.clone())));
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }

    #[test]
    fn products_emit_valid_pairs() {
        // Nonzero ⊛ and ψ outputs pass the admissibility assertion inside
        // VPair::from_parts; exercise them across a range.
        for n in 1..=4 {
            let vs = enumerate_vpairs(n);
            for a in &vs {
                for b in &vs {
                    let _ = star(a, b);
                }
            }
            let ws = enumerate_wpairs(n);
            for a in &ws {
                for b in &vs {
                    let _ = psi(a, b);
                }
            }
        }
    }
}
