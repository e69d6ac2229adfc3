//! The doubling bialgebras.
//!
//! `VPair` is a tree with an admissible cut `(t, c)`, standing for the couple
//! `(t, P^c(t))`; the span of these pairs carries the coproduct
//!
//! `Δ(t,s) = Σ_{c ∈ Adm(s)} (t, P^c(s)) ⊗ (R^c(t), R^c(s))`,   `s = P^{c₀}(t)`.
//!
//! `WPair` is a tree with an arbitrary edge subset `(t, S)`, standing for the
//! couple `(t, s)` with `s` the covering subforest selected by `S`; its
//! coproduct is
//!
//! `Γ(t,s) = Σ_{s′ ⊆ s} (t, s′) ⊗ (t/s′, s/s′)`.
//!
//! Both extend multiplicatively to monomials (multisets of pairs), giving the
//! free commutative algebras over the pair bases. The counit is `ε(t,s) = ε(s)`
//! and the second projection `(t,s) ↦ s` intertwines each coproduct with the
//! matching classical one.

use crate::cut::{
    admissible_subsets, contract, edges_above, is_admissible, prune_unchecked, subforest,
    trunk_unchecked,
};
use crate::error::Error;
use crate::lincomb::{BasisMul, KeyParts, LinComb};
use crate::marked::MarkedTree;
use crate::tree::{enumerate_trees, EdgeSet, Forest, RootedTree};
use std::cmp::Ordering;
use std::fmt;

/// Flavor tag used in rendered keys.
pub trait Flavored: Clone + Ord {
    const TAG: &'static str;
    fn marked(&self) -> &MarkedTree;
}

/// A tree with an admissible cut; basis element of the cut doubling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VPair(MarkedTree);

/// A tree with a covering-subforest edge selection; basis element of the
/// contraction doubling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WPair(MarkedTree);

impl VPair {
    /// Validates admissibility of the mark set.
    pub fn new(marked: MarkedTree) -> Result<Self, Error> {
        if marked.is_admissible() {
            Ok(VPair(marked))
        } else {
            Err(Error::InadmissibleCut {
                tree: marked.tree().key().to_string(),
                cut: marked.marks().to_string(),
            })
        }
    }

    /// Internal constructor for cuts produced by the algebra itself; the
    /// admissibility assertion backs the closure properties of the maps.
    pub(crate) fn from_parts(tree: RootedTree, cut: EdgeSet) -> Self {
        assert!(
            is_admissible(&tree, &cut),
            "produced an inadmissible cut {cut} on {tree}"
        );
        VPair(MarkedTree::new(tree, cut))
    }

    pub fn tree(&self) -> &RootedTree {
        self.0.tree()
    }

    pub fn cut(&self) -> &EdgeSet {
        self.0.marks()
    }

    /// The pruning `P^c(t)` (the second member of the couple).
    pub fn pruning(&self) -> Forest {
        prune_unchecked(self.tree(), self.cut())
    }

    /// Vertex count of the pruning; the grading of the cut doubling.
    pub fn degree(&self) -> usize {
        self.pruning().vertex_degree()
    }

    pub fn key(&self) -> &str {
        self.0.key()
    }
}

impl WPair {
    pub fn new(marked: MarkedTree) -> Self {
        WPair(marked)
    }

    pub fn from_parts(tree: RootedTree, edges: EdgeSet) -> Self {
        WPair(MarkedTree::new(tree, edges))
    }

    pub fn tree(&self) -> &RootedTree {
        self.0.tree()
    }

    pub fn edges(&self) -> &EdgeSet {
        self.0.marks()
    }

    /// The covering subforest selected by the edge set.
    pub fn selected(&self) -> Forest {
        subforest(self.tree(), self.edges())
    }

    /// Edge count of the selection; the grading of the contraction doubling.
    pub fn degree(&self) -> usize {
        self.edges().len()
    }

    pub fn key(&self) -> &str {
        self.0.key()
    }
}

impl Flavored for VPair {
    const TAG: &'static str = "V";
    fn marked(&self) -> &MarkedTree {
        &self.0
    }
}

impl Flavored for WPair {
    const TAG: &'static str = "W";
    fn marked(&self) -> &MarkedTree {
        &self.0
    }
}

impl fmt::Display for VPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V:{}", self.key())
    }
}

impl fmt::Display for WPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W:{}", self.key())
    }
}

impl KeyParts for VPair {
    fn push_parts(&self, out: &mut Vec<String>) {
        out.push(self.to_string());
    }
}

impl KeyParts for WPair {
    fn push_parts(&self, out: &mut Vec<String>) {
        out.push(self.to_string());
    }
}

/// A commutative monomial of pairs of one flavor; the empty monomial is the
/// unit of the doubling algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<P: Flavored> {
    factors: Vec<P>,
}

impl<P: Flavored> PartialOrd for Monomial<P> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<P: Flavored> Ord for Monomial<P> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.factors.cmp(&other.factors)
    }
}

impl<P: Flavored> Monomial<P> {
    pub fn unit() -> Self {
        Monomial {
            factors: Vec::new(),
        }
    }

    pub fn single(pair: P) -> Self {
        Monomial {
            factors: vec![pair],
        }
    }

    pub fn from_factors(mut factors: Vec<P>) -> Self {
        factors.sort();
        Monomial { factors }
    }

    pub fn factors(&self) -> &[P] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// The product `(t,s)(t′,s′) = (tt′, ss′)`: multiset union of factors.
    pub fn product(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Monomial::from_factors(factors)
    }

    pub fn render(&self) -> String {
        if self.is_unit() {
            "1".to_string()
        } else {
            let body: String = self.factors.iter().map(|p| p.marked().key()).collect();
            format!("{}:{}", P::TAG, body)
        }
    }
}

impl<P: Flavored> fmt::Display for Monomial<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<P: Flavored> BasisMul for Monomial<P> {
    fn basis_mul(&self, other: &Self) -> Self {
        self.product(other)
    }
}

impl<P: Flavored> KeyParts for Monomial<P> {
    fn push_parts(&self, out: &mut Vec<String>) {
        out.push(self.render());
    }
}

pub type VMonomial = Monomial<VPair>;
pub type WMonomial = Monomial<WPair>;

/// Coproduct of the cut doubling on one pair `(t, c₀)`, in edge coordinates:
/// the cuts of `s = P^{c₀}(t)` (per-component total cuts included) are
/// exactly the admissible cuts `c` of `t` contained in `c₀ ∪ edges(s)`, and
///
/// `Δ(t,c₀) = Σ_c (t, c) ⊗ (R^c(t), c₀ ∩ edges(R^c(t)))`.
pub fn delta_pair(p: &VPair) -> LinComb<(VPair, VPair)> {
    let tree = p.tree();
    let zone = p.cut().union(&edges_above(tree, p.cut()));
    let mut out = LinComb::zero();
    for c in admissible_subsets(tree, &zone) {
        let left = VPair::from_parts(tree.clone(), c.clone());
        let (trunk_tree, emap) = trunk_unchecked(tree, &c);
        let surviving = p.cut().intersection(&emap.base_edges());
        let right = VPair::from_parts(trunk_tree, emap.lower(&surviving));
        out.add_term((left, right), 1);
    }
    out
}

/// Coproduct of the contraction doubling on one pair:
/// `Γ(t,S) = Σ_{S′ ⊆ S} (t, S′) ⊗ (t/S′, image of S∖S′)`.
pub fn gamma_pair(p: &WPair) -> LinComb<(WPair, WPair)> {
    let tree = p.tree();
    let mut out = LinComb::zero();
    for s in p.edges().subsets() {
        let left = WPair::from_parts(tree.clone(), s.clone());
        let (q, emap) = contract(tree, &s);
        let rest = emap.lower(&p.edges().difference(&s));
        let right = WPair::from_parts(q, rest);
        out.add_term((left, right), 1);
    }
    out
}

/// Multiplicative extension of `Δ` to monomials.
pub fn delta_monomial(m: &VMonomial) -> LinComb<(VMonomial, VMonomial)> {
    extend_coproduct(m, delta_pair)
}

/// Multiplicative extension of `Γ` to monomials.
pub fn gamma_monomial(m: &WMonomial) -> LinComb<(WMonomial, WMonomial)> {
    extend_coproduct(m, gamma_pair)
}

fn extend_coproduct<P: Flavored>(
    m: &Monomial<P>,
    pair_coproduct: impl Fn(&P) -> LinComb<(P, P)>,
) -> LinComb<(Monomial<P>, Monomial<P>)> {
    let mut acc = LinComb::from_basis((Monomial::unit(), Monomial::unit()));
    for factor in m.factors() {
        let d = pair_coproduct(factor).map_basis(|(a, b)| {
            LinComb::from_basis((Monomial::single(a.clone()), Monomial::single(b.clone())))
        });
        acc = acc.mul(&d);
    }
    acc
}

/// Counit `ε(t,s) = ε(s)`: 1 exactly when the selection is empty.
pub fn counit_vpair(p: &VPair) -> i64 {
    if p.cut().is_empty() {
        1
    } else {
        0
    }
}

pub fn counit_wpair(p: &WPair) -> i64 {
    if p.edges().is_empty() {
        1
    } else {
        0
    }
}

/// Multiplicative extension of the counit to monomials.
pub fn counit_monomial<P: Flavored>(m: &Monomial<P>) -> i64 {
    if m.factors().iter().all(|p| p.marked().marks().is_empty()) {
        1
    } else {
        0
    }
}

/// Second projection `(t,s) ↦ s` on the cut doubling: the pruning forest.
pub fn project_p2_v(p: &VPair) -> Forest {
    p.pruning()
}

/// Second projection on the contraction doubling: the covering subforest.
pub fn project_p2_w(p: &WPair) -> Forest {
    p.selected()
}

/// Second projection extended multiplicatively to monomials.
pub fn project_p2_monomial_v(m: &VMonomial) -> Forest {
    m.factors()
        .iter()
        .fold(Forest::unit(), |acc, p| acc.product(&project_p2_v(p)))
}

pub fn project_p2_monomial_w(m: &WMonomial) -> Forest {
    m.factors()
        .iter()
        .fold(Forest::unit(), |acc, p| acc.product(&project_p2_w(p)))
}

/// All cut-doubling basis classes on trees with exactly `n` vertices,
/// in ascending key order.
pub fn enumerate_vpairs(n: usize) -> Vec<VPair> {
    let mut out = std::collections::BTreeSet::new();
    for t in enumerate_trees(n) {
        for c in crate::cut::admissible_cuts(&t) {
            out.insert(VPair::from_parts(t.clone(), c));
        }
    }
    out.into_iter().collect()
}

/// All contraction-doubling basis classes on trees with exactly `n` vertices.
pub fn enumerate_wpairs(n: usize) -> Vec<WPair> {
    let mut out = std::collections::BTreeSet::new();
    for t in enumerate_trees(n) {
        for s in t.edges().subsets() {
            out.insert(WPair::from_parts(t.clone(), s));
        }
    }
    out.into_iter().collect()
}

/// Parses a monomial of V-flavored pairs, validating admissibility per factor.
pub fn parse_vmonomial(text: &str) -> Result<VMonomial, Error> {
    let factors = crate::marked::parse_marked_forest(text)?
        .into_iter()
        .map(VPair::new)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Monomial::from_factors(factors))
}

/// Parses a monomial of W-flavored pairs.
pub fn parse_wmonomial(text: &str) -> Result<WMonomial, Error> {
    let factors = crate::marked::parse_marked_forest(text)?
        .into_iter()
        .map(WPair::new)
        .collect();
    Ok(Monomial::from_factors(factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{expand_first, expand_second};

    fn v(text: &str) -> VPair {
        VPair::new(MarkedTree::parse(text).unwrap()).unwrap()
    }

    fn w(text: &str) -> WPair {
        WPair::new(MarkedTree::parse(text).unwrap())
    }

    #[test]
    fn vpair_rejects_inadmissible_marks() {
        assert!(VPair::new(MarkedTree::parse("[*[*[]]]").unwrap()).is_err());
        // Corolla-like cuts touch distinct root-leaf paths and are fine.
        assert!(VPair::new(MarkedTree::parse("[[*[]][*[]]]").unwrap()).is_ok());
    }

    #[test]
    fn delta_of_trivial_cut_is_grouplike() {
        for n in 1..=4 {
            for t in enumerate_trees(n) {
                let p = VPair::from_parts(t, EdgeSet::empty());
                let d = delta_pair(&p);
                assert_eq!(d.term_count(), 1);
                assert_eq!(d.coeff(&(p.clone(), p.clone())), 1.into());
            }
        }
    }

    #[test]
    fn delta_of_marked_chain2() {
        let d = delta_pair(&v("[*[]]"));
        assert_eq!(d.term_count(), 2);
        assert_eq!(d.coeff(&(v("[[]]"), v("[*[]]"))), 1.into());
        assert_eq!(d.coeff(&(v("[*[]]"), v("[]"))), 1.into());
    }

    #[test]
    fn delta_of_bottom_marked_chain3() {
        let d = delta_pair(&v("[*[[]]]"));
        assert_eq!(d.term_count(), 3);
        assert_eq!(d.coeff(&(v("[[[]]]"), v("[*[[]]]"))), 1.into());
        assert_eq!(d.coeff(&(v("[[*[]]]"), v("[*[]]"))), 1.into());
        assert_eq!(d.coeff(&(v("[*[[]]]"), v("[]"))), 1.into());
    }

    #[test]
    fn gamma_examples() {
        for n in 1..=4 {
            for t in enumerate_trees(n) {
                let p = WPair::from_parts(t, EdgeSet::empty());
                let g = gamma_pair(&p);
                assert_eq!(g.term_count(), 1);
                assert_eq!(g.coeff(&(p.clone(), p.clone())), 1.into());
            }
        }

        let g = gamma_pair(&w("[*[]]"));
        assert_eq!(g.coeff(&(w("[[]]"), w("[*[]]"))), 1.into());
        assert_eq!(g.coeff(&(w("[*[]]"), w("[]"))), 1.into());

        let g = gamma_pair(&w("[*[*[]]]"));
        assert_eq!(g.term_count(), 4);
        assert_eq!(g.coeff(&(w("[[[]]]"), w("[*[*[]]]"))), 1.into());
        assert_eq!(g.coeff(&(w("[*[[]]]"), w("[*[]]"))), 1.into());
        assert_eq!(g.coeff(&(w("[[*[]]]"), w("[*[]]"))), 1.into());
        assert_eq!(g.coeff(&(w("[*[*[]]]"), w("[]"))), 1.into());
    }

    #[test]
    fn gamma_term_count() {
        for n in 1..=5 {
            for p in enumerate_wpairs(n) {
                let g = gamma_pair(&p);
                let expected = num_bigint::BigInt::from(1) << p.edges().len();
                assert_eq!(g.multiplicity_count(), expected, "{p}");
            }
        }
    }

    #[test]
    fn counit_examples() {
        let t = RootedTree::chain(2);
        assert_eq!(counit_vpair(&VPair::from_parts(t.clone(), EdgeSet::empty())), 1);
        assert_eq!(counit_wpair(&WPair::from_parts(t.clone(), EdgeSet::empty())), 1);
        assert_eq!(counit_vpair(&v("[*[]]")), 0);
        assert_eq!(counit_wpair(&w("[*[]]")), 0);
        let m = VMonomial::from_factors(vec![
            VPair::from_parts(t, EdgeSet::empty()),
            v("[*[]]"),
        ]);
        assert_eq!(counit_monomial(&m), 0);
    }

    #[test]
    fn counit_laws_for_both_doublings() {
        for n in 1..=4 {
            for p in enumerate_vpairs(n) {
                let d = delta_pair(&p);
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for ((a, b), c) in d.iter() {
                    left.add_term(b.clone(), c.clone() * counit_vpair(a));
                    right.add_term(a.clone(), c.clone() * counit_vpair(b));
                }
                assert_eq!(left, LinComb::from_basis(p.clone()), "{p}");
                assert_eq!(right, LinComb::from_basis(p.clone()), "{p}");
            }
            for p in enumerate_wpairs(n) {
                let g = gamma_pair(&p);
                let mut left = LinComb::zero();
                let mut right = LinComb::zero();
                for ((a, b), c) in g.iter() {
                    left.add_term(b.clone(), c.clone() * counit_wpair(a));
                    right.add_term(a.clone(), c.clone() * counit_wpair(b));
                }
                assert_eq!(left, LinComb::from_basis(p.clone()), "{p}");
                assert_eq!(right, LinComb::from_basis(p.clone()), "{p}");
            }
        }
    }

    #[test]
    fn product_laws() {
        let a = VMonomial::single(v("[*[]]"));
        let b = VMonomial::single(v("[[]]"));
        assert_eq!(VMonomial::unit().product(&a), a);
        assert_eq!(a.product(&b), b.product(&a));
        let degree =
            |m: &VMonomial| m.factors().iter().map(VPair::degree).sum::<usize>();
        assert_eq!(degree(&a.product(&b)), degree(&a) + degree(&b));
    }

    #[test]
    fn coassociativity_small() {
        for n in 1..=4 {
            for p in enumerate_vpairs(n) {
                let d = delta_pair(&p);
                assert_eq!(
                    expand_first(&d, delta_pair),
                    expand_second(&d, delta_pair),
                    "{p}"
                );
            }
            for p in enumerate_wpairs(n) {
                let g = gamma_pair(&p);
                assert_eq!(
                    expand_first(&g, gamma_pair),
                    expand_second(&g, gamma_pair),
                    "{p}"
                );
            }
        }
    }

    #[test]
    fn delta_is_algebra_morphism_on_monomials() {
        let pairs: Vec<VPair> = (1..=3).flat_map(enumerate_vpairs).collect();
        for a in &pairs {
            for b in &pairs {
                let m = VMonomial::from_factors(vec![a.clone(), b.clone()]);
                let lhs = delta_monomial(&m);
                let rhs = delta_monomial(&VMonomial::single(a.clone()))
                    .mul(&delta_monomial(&VMonomial::single(b.clone())));
                assert_eq!(lhs, rhs, "{a} {b}");
            }
        }
    }

    #[test]
    fn grading_preserved_by_coproducts() {
        for n in 1..=5 {
            for p in enumerate_vpairs(n) {
                for ((a, b), _) in delta_pair(&p).iter() {
                    assert_eq!(a.degree() + b.degree(), p.degree(), "{p}");
                }
            }
            for p in enumerate_wpairs(n) {
                for ((a, b), _) in gamma_pair(&p).iter() {
                    assert_eq!(a.degree() + b.degree(), p.degree(), "{p}");
                }
            }
        }
    }

    #[test]
    fn p2_examples() {
        let tree = RootedTree::parse("[[[]][]]").unwrap();
        let p = VPair::from_parts(tree.clone(), EdgeSet::singleton(1));
        assert_eq!(project_p2_v(&p).key(), "[[]]");
        let trivial = VPair::from_parts(tree.clone(), EdgeSet::empty());
        assert!(project_p2_v(&trivial).is_unit());
        let wtrivial = WPair::from_parts(tree, EdgeSet::empty());
        assert_eq!(project_p2_w(&wtrivial).key(), "[][][][]");
    }

    #[test]
    fn p2_intertwines_small() {
        for n in 1..=4 {
            for p in enumerate_vpairs(n) {
                let lhs = delta_pair(&p).map_basis(|(a, b)| {
                    LinComb::from_basis((project_p2_v(a), project_p2_v(b)))
                });
                let rhs = crate::classic::coproduct_ck(&project_p2_v(&p));
                assert_eq!(lhs, rhs, "{p}");
            }
            for p in enumerate_wpairs(n) {
                let lhs = gamma_pair(&p).map_basis(|(a, b)| {
                    LinComb::from_basis((project_p2_w(a), project_p2_w(b)))
                });
                let rhs = crate::classic::coproduct_contract(&project_p2_w(&p));
                assert_eq!(lhs, rhs, "{p}");
            }
        }
    }

    #[test]
    fn vpair_class_listing_for_three_vertices() {
        let keys: Vec<String> = enumerate_vpairs(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(
            keys,
            vec![
                "V:[*[[]]]",
                "V:[*[]*[]]",
                "V:[*[][]]",
                "V:[[*[]]]",
                "V:[[[]]]",
                "V:[[][]]",
            ]
        );
        assert_eq!(enumerate_wpairs(2).len(), 2);
    }

    #[test]
    fn monomial_parsing() {
        let m = parse_vmonomial("[*[]][[]]").unwrap();
        assert_eq!(m.factors().len(), 2);
        assert_eq!(m.render(), "V:[*[]][[]]");
        assert!(parse_vmonomial("[*[*[]]]").is_err());
        assert!(parse_wmonomial("[*[*[]]]").is_ok());
        assert_eq!(parse_vmonomial("1").unwrap(), VMonomial::unit());
    }
}
