//! The two classical bialgebra structures on rooted forests: the
//! Connes–Kreimer coproduct (admissible cuts, vertex grading) and the
//! contraction coproduct (covering subforests, edge grading), together with
//! the degree-zero quotient and the coaction relating them.

use crate::cut::{admissible_cuts, contract, prune_trunk, subforest};
use crate::lincomb::{expand_second, m13, tensor, LinComb};
use crate::tree::{enumerate_trees, Forest, RootedTree};
use crate::verify::{Counterexample, LawReport};

/// Grading flavor of the forest algebra; also selects the counit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    /// Vertex grading (Connes–Kreimer); degree 0 is the empty forest only.
    Vertices,
    /// Edge grading (contraction); degree 0 forests are the edgeless ones.
    Edges,
}

impl Grading {
    pub fn degree(&self, f: &Forest) -> usize {
        match self {
            Grading::Vertices => f.vertex_degree(),
            Grading::Edges => f.edge_degree(),
        }
    }

    /// 1 on degree-zero basis forests of the flavor, 0 elsewhere.
    pub fn counit(&self, f: &Forest) -> i64 {
        if self.degree(f) == 0 {
            1
        } else {
            0
        }
    }
}

/// Connes–Kreimer coproduct on one tree:
/// `Δ(t) = t⊗1 + 1⊗t + Σ_{c nonempty admissible} P^c(t) ⊗ R^c(t)`.
fn coproduct_ck_tree(t: &RootedTree) -> LinComb<(Forest, Forest)> {
    let mut out = LinComb::zero();
    out.add_term((Forest::single(t.clone()), Forest::unit()), 1);
    out.add_term((Forest::unit(), Forest::single(t.clone())), 1);
    for c in admissible_cuts(t) {
        if c.is_empty() {
            continue;
        }
        let (p, r) = prune_trunk(t, &c).expect("enumerated cut is admissible");
        out.add_term((p, Forest::single(r)), 1);
    }
    out
}

/// Connes–Kreimer coproduct, extended multiplicatively to forests;
/// `Δ(1) = 1⊗1`.
pub fn coproduct_ck(f: &Forest) -> LinComb<(Forest, Forest)> {
    let mut acc = LinComb::from_basis((Forest::unit(), Forest::unit()));
    for t in f.trees() {
        acc = acc.mul(&coproduct_ck_tree(t));
    }
    acc
}

/// Contraction coproduct on one tree: `Δ(t) = Σ_{s ⊆ edges} s ⊗ t/s`,
/// one term per edge subset (2^edges terms with multiplicity).
fn coproduct_contract_tree(t: &RootedTree) -> LinComb<(Forest, Forest)> {
    let mut out = LinComb::zero();
    for s in t.edges().subsets() {
        let sub = subforest(t, &s);
        let (q, _) = contract(t, &s);
        out.add_term((sub, Forest::single(q)), 1);
    }
    out
}

/// Contraction coproduct, extended multiplicatively to forests.
pub fn coproduct_contract(f: &Forest) -> LinComb<(Forest, Forest)> {
    let mut acc = LinComb::from_basis((Forest::unit(), Forest::unit()));
    for t in f.trees() {
        acc = acc.mul(&coproduct_contract_tree(t));
    }
    acc
}

/// The degree-zero quotient projector: deletes every edgeless tree factor
/// from a forest monomial. Idempotent algebra morphism.
pub fn project_hprime_forest(f: &Forest) -> Forest {
    Forest::from_trees(
        f.trees()
            .iter()
            .filter(|t| t.edge_count() > 0)
            .cloned()
            .collect(),
    )
}

/// Linear extension of the degree-zero quotient projector.
pub fn project_hprime(x: &LinComb<Forest>) -> LinComb<Forest> {
    x.map_basis(|f| LinComb::from_basis(project_hprime_forest(f)))
}

/// The coaction: `Φ(1) = •⊗1` and `Φ(f) = Δ_contract(f)` on nonempty forests.
pub fn coaction_phi(f: &Forest) -> LinComb<(Forest, Forest)> {
    if f.is_unit() {
        LinComb::from_basis((Forest::single(RootedTree::single()), Forest::unit()))
    } else {
        coproduct_contract(f)
    }
}

/// Checks the codistributivity law
/// `(id ⊗ Δ_ck) ∘ Φ = m^{1,3} ∘ (Φ⊗Φ) ∘ Δ_ck`
/// on the unit and on every tree up to `max_vertices`, comparing both sides
/// after projecting the contraction-side factor to the degree-zero quotient.
pub fn check_ckm_codistributivity(max_vertices: usize) -> LawReport {
    assert!(max_vertices >= 1);
    let mut instances: Vec<Forest> = vec![Forest::unit()];
    for n in 1..=max_vertices {
        instances.extend(enumerate_trees(n).into_iter().map(Forest::single));
    }

    let mut failures = Vec::new();
    for f in &instances {
        let lhs = project_first(&expand_second(&coaction_phi(f), coproduct_ck));

        let four = coproduct_ck(f).map_basis(|(p, r)| {
            tensor(&coaction_phi(p), &coaction_phi(r))
                .map_basis(|((a, b), (c, d))| {
                    LinComb::from_basis((a.clone(), b.clone(), c.clone(), d.clone()))
                })
        });
        let rhs = project_first(&m13(&four));

        if lhs != rhs {
            failures.push(Counterexample {
                instance: f.key().to_string(),
                lhs: lhs.render(),
                rhs: rhs.render(),
            });
        }
    }
    LawReport::from_failures("ckm-codistributivity", instances.len() as u64, failures)
}

fn project_first(
    x: &LinComb<(Forest, Forest, Forest)>,
) -> LinComb<(Forest, Forest, Forest)> {
    x.map_basis(|(a, b, c)| {
        LinComb::from_basis((project_hprime_forest(a), b.clone(), c.clone()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::expand_first;
    use crate::tree::enumerate_forests;

    fn f(text: &str) -> Forest {
        Forest::parse(text).unwrap()
    }

    fn pair(a: &str, b: &str) -> (Forest, Forest) {
        (f(a), f(b))
    }

    #[test]
    fn ck_coproduct_of_example_tree() {
        let d = coproduct_ck(&f("[[[]][]]"));
        assert_eq!(d.term_count(), 7);
        for (key, coeff) in [
            pair("1", "[[[]][]]"),
            pair("[[[]][]]", "1"),
            pair("[]", "[[[]]]"),
            pair("[[]]", "[[]]"),
            pair("[]", "[[][]]"),
            pair("[[]][]", "[]"),
            pair("[][]", "[[]]"),
        ]
        .iter()
        .map(|k| (k, 1))
        {
            assert_eq!(d.coeff(key), coeff.into(), "term {key:?}");
        }
    }

    #[test]
    fn ck_coproduct_of_bullets() {
        let d = coproduct_ck(&f("[]"));
        assert_eq!(d.term_count(), 2);
        assert_eq!(d.coeff(&pair("[]", "1")), 1.into());
        assert_eq!(d.coeff(&pair("1", "[]")), 1.into());

        let d = coproduct_ck(&f("[][]"));
        assert_eq!(d.coeff(&pair("[][]", "1")), 1.into());
        assert_eq!(d.coeff(&pair("[]", "[]")), 2.into());
        assert_eq!(d.coeff(&pair("1", "[][]")), 1.into());
        assert_eq!(d.term_count(), 3);
    }

    #[test]
    fn contract_coproduct_of_example_tree() {
        let d = coproduct_contract(&f("[[[]][]]"));
        assert_eq!(d.term_count(), 7);
        assert_eq!(d.coeff(&pair("[][][][]", "[[[]][]]")), 1.into());
        assert_eq!(d.coeff(&pair("[[[]][]]", "[]")), 1.into());
        assert_eq!(d.coeff(&pair("[[]][][]", "[[][]]")), 2.into());
        assert_eq!(d.coeff(&pair("[[]][][]", "[[[]]]")), 1.into());
        assert_eq!(d.coeff(&pair("[[[]]][]", "[[]]")), 1.into());
        assert_eq!(d.coeff(&pair("[[][]][]", "[[]]")), 1.into());
        assert_eq!(d.coeff(&pair("[[]][[]]", "[[]]")), 1.into());
    }

    #[test]
    fn contract_coproduct_small() {
        let d = coproduct_contract(&f("[]"));
        assert_eq!(d.term_count(), 1);
        assert_eq!(d.coeff(&pair("[]", "[]")), 1.into());

        let d = coproduct_contract(&f("[[]]"));
        assert_eq!(d.coeff(&pair("[][]", "[[]]")), 1.into());
        assert_eq!(d.coeff(&pair("[[]]", "[]")), 1.into());
        assert_eq!(d.term_count(), 2);
    }

    #[test]
    fn contract_term_count_is_two_to_the_edges() {
        for n in 1..=5 {
            for t in enumerate_trees(n) {
                let d = coproduct_contract(&Forest::single(t.clone()));
                let expected = num_bigint::BigInt::from(1) << t.edge_count();
                assert_eq!(d.multiplicity_count(), expected);
            }
        }
    }

    #[test]
    fn hprime_projector() {
        assert_eq!(project_hprime_forest(&f("[][][][]")), Forest::unit());
        assert_eq!(project_hprime_forest(&f("[[]][][]")), f("[[]]"));
        // Idempotent and multiplicative.
        for forest in enumerate_forests(4) {
            let once = project_hprime_forest(&forest);
            assert_eq!(project_hprime_forest(&once), once);
        }
        let a = f("[[]][]");
        let b = f("[][]");
        assert_eq!(
            project_hprime_forest(&a.product(&b)),
            project_hprime_forest(&a).product(&project_hprime_forest(&b))
        );
    }

    #[test]
    fn hprime_projection_of_contract_coproduct_matches_quotient_line() {
        let d = coproduct_contract(&f("[[[]][]]"));
        let projected = d.map_basis(|(a, b)| {
            LinComb::from_basis((project_hprime_forest(a), b.clone()))
        });
        assert_eq!(projected.coeff(&pair("1", "[[[]][]]")), 1.into());
        assert_eq!(projected.coeff(&pair("[[[]][]]", "[]")), 1.into());
        assert_eq!(projected.coeff(&pair("[[]]", "[[][]]")), 2.into());
        assert_eq!(projected.coeff(&pair("[[]]", "[[[]]]")), 1.into());
        assert_eq!(projected.coeff(&pair("[[[]]]", "[[]]")), 1.into());
        assert_eq!(projected.coeff(&pair("[[][]]", "[[]]")), 1.into());
        assert_eq!(projected.coeff(&pair("[[]][[]]", "[[]]")), 1.into());
        assert_eq!(projected.term_count(), 7);
    }

    #[test]
    fn phi_examples() {
        let phi1 = coaction_phi(&Forest::unit());
        assert_eq!(phi1.term_count(), 1);
        assert_eq!(phi1.coeff(&pair("[]", "1")), 1.into());

        let phib = coaction_phi(&f("[]"));
        assert_eq!(phib.coeff(&pair("[]", "[]")), 1.into());
        assert_eq!(phib.term_count(), 1);

        let phil2 = coaction_phi(&f("[[]]"));
        assert_eq!(phil2.coeff(&pair("[][]", "[[]]")), 1.into());
        assert_eq!(phil2.coeff(&pair("[[]]", "[]")), 1.into());
    }

    fn check_coassoc(
        delta: impl Fn(&Forest) -> LinComb<(Forest, Forest)>,
        f: &Forest,
    ) -> bool {
        let d = delta(f);
        let left = expand_first(&d, &delta);
        let right = expand_second(&d, &delta);
        left == right
    }

    #[test]
    fn coassociativity_small() {
        for n in 0..=5 {
            for forest in enumerate_forests(n) {
                assert!(check_coassoc(coproduct_ck, &forest), "ck {forest}");
                assert!(check_coassoc(coproduct_contract, &forest), "contract {forest}");
            }
        }
    }

    #[test]
    fn counit_laws() {
        for n in 0..=5 {
            for forest in enumerate_forests(n) {
                type Coproduct = fn(&Forest) -> LinComb<(Forest, Forest)>;
                for (delta, grading) in [
                    (coproduct_ck as Coproduct, Grading::Vertices),
                    (coproduct_contract as Coproduct, Grading::Edges),
                ] {
                    let d = delta(&forest);
                    let mut left = LinComb::zero();
                    let mut right = LinComb::zero();
                    for ((a, b), c) in d.iter() {
                        left.add_term(b.clone(), c.clone() * grading.counit(a));
                        right.add_term(a.clone(), c.clone() * grading.counit(b));
                    }
                    assert_eq!(left, LinComb::from_basis(forest.clone()), "{forest}");
                    assert_eq!(right, LinComb::from_basis(forest.clone()), "{forest}");
                }
            }
        }
    }

    #[test]
    fn multiplicativity_on_forest_pairs() {
        let forests: Vec<Forest> = (0..=4).flat_map(enumerate_forests).collect();
        for a in &forests {
            for b in &forests {
                let product = a.product(b);
                assert_eq!(
                    coproduct_ck(&product),
                    coproduct_ck(a).mul(&coproduct_ck(b)),
                );
                assert_eq!(
                    coproduct_contract(&product),
                    coproduct_contract(a).mul(&coproduct_contract(b)),
                );
            }
        }
    }

    #[test]
    fn grading_homogeneity() {
        for n in 1..=5 {
            for t in enumerate_trees(n) {
                let forest = Forest::single(t);
                for ((a, b), _) in coproduct_ck(&forest).iter() {
                    assert_eq!(
                        a.vertex_degree() + b.vertex_degree(),
                        forest.vertex_degree()
                    );
                }
                for ((a, b), _) in coproduct_contract(&forest).iter() {
                    assert_eq!(a.edge_degree() + b.edge_degree(), forest.edge_degree());
                }
            }
        }
    }

    #[test]
    fn ckm_base_case_by_hand() {
        // For the single vertex both sides reduce to 1⊗•⊗1 + 1⊗1⊗• after the
        // degree-zero projection.
        let report = check_ckm_codistributivity(1);
        assert!(report.passed(), "{report:?}");

        let lhs = project_first(&expand_second(&coaction_phi(&f("[]")), coproduct_ck));
        let mut expected = LinComb::zero();
        expected.add_term((Forest::unit(), f("[]"), Forest::unit()), 1);
        expected.add_term((Forest::unit(), Forest::unit(), f("[]")), 1);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn ckm_codistributivity_to_four_vertices() {
        let report = check_ckm_codistributivity(4);
        assert!(report.passed(), "{report:?}");
    }
}
