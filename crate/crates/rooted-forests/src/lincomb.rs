//! Exact integer linear combinations over an ordered basis-key sort, plus the
//! structural tensor maps `τ²³` and `m^{1,3}`.

use crate::tree::Forest;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported map from basis keys to nonzero integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, BigInt>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis keys.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Number of terms counted with multiplicity, used by grading checks.
    pub fn multiplicity_count(&self) -> BigInt {
        self.terms.values().map(|c| c.magnitude().clone()).sum::<num_bigint::BigUint>().into()
    }

    pub fn coeff(&self, key: &K) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, key: K, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff == BigInt::from(0) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == BigInt::from(0) {
                    e.remove();
                }
            }
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn from_basis(key: K) -> Self {
        let mut c = Self::zero();
        c.add_term(key, 1);
        c
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: impl Into<BigInt>) -> Self {
        let factor = factor.into();
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c.clone() * &factor);
        }
        out
    }

    /// Linear extension of a basis-level map `f`.
    pub fn map_basis<K2: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c.clone() * c2);
            }
        }
        out
    }
}

/// Linear extension of a basis-level map; `Σ coeff·f(key)`.
pub fn extend_linearly<K: Ord + Clone, K2: Ord + Clone>(
    x: &LinComb<K>,
    f: impl Fn(&K) -> LinComb<K2>,
) -> LinComb<K2> {
    x.map_basis(f)
}

/// Basis-level product used to extend `LinComb` to an algebra.
pub trait BasisMul {
    fn basis_mul(&self, other: &Self) -> Self;
}

impl BasisMul for Forest {
    fn basis_mul(&self, other: &Self) -> Self {
        self.product(other)
    }
}

impl<A: BasisMul, B: BasisMul> BasisMul for (A, B) {
    fn basis_mul(&self, other: &Self) -> Self {
        (self.0.basis_mul(&other.0), self.1.basis_mul(&other.1))
    }
}

impl<A: BasisMul, B: BasisMul, C: BasisMul> BasisMul for (A, B, C) {
    fn basis_mul(&self, other: &Self) -> Self {
        (
            self.0.basis_mul(&other.0),
            self.1.basis_mul(&other.1),
            self.2.basis_mul(&other.2),
        )
    }
}

impl<A: BasisMul, B: BasisMul, C: BasisMul, D: BasisMul> BasisMul for (A, B, C, D) {
    fn basis_mul(&self, other: &Self) -> Self {
        (
            self.0.basis_mul(&other.0),
            self.1.basis_mul(&other.1),
            self.2.basis_mul(&other.2),
            self.3.basis_mul(&other.3),
        )
    }
}

impl<K: Ord + Clone + BasisMul> LinComb<K> {
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(a.basis_mul(b), ca.clone() * cb);
            }
        }
        out
    }
}

/// Tensor product of two combinations: keys are paired componentwise.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca.clone() * cb);
        }
    }
    out
}

/// Expands the first component of a 2-tensor into a 2-tensor, yielding a
/// 3-tensor: `(a ⊗ d) ↦ f(a) ⊗ d`.
pub fn expand_first<A, D, X, Y>(
    x: &LinComb<(A, D)>,
    f: impl Fn(&A) -> LinComb<(X, Y)>,
) -> LinComb<(X, Y, D)>
where
    A: Ord + Clone,
    D: Ord + Clone,
    X: Ord + Clone,
    Y: Ord + Clone,
{
    x.map_basis(|(a, d)| {
        f(a).map_basis(|(p, q)| LinComb::from_basis((p.clone(), q.clone(), d.clone())))
    })
}

/// Expands the second component of a 2-tensor: `(a ⊗ d) ↦ a ⊗ f(d)`.
pub fn expand_second<A, D, X, Y>(
    x: &LinComb<(A, D)>,
    f: impl Fn(&D) -> LinComb<(X, Y)>,
) -> LinComb<(A, X, Y)>
where
    A: Ord + Clone,
    D: Ord + Clone,
    X: Ord + Clone,
    Y: Ord + Clone,
{
    x.map_basis(|(a, d)| {
        f(d).map_basis(|(p, q)| LinComb::from_basis((a.clone(), p.clone(), q.clone())))
    })
}

/// Swaps the middle two components of a 4-tensor: `a⊗b⊗c⊗d ↦ a⊗c⊗b⊗d`.
pub fn tau23<A, B, C, D>(x: &LinComb<(A, B, C, D)>) -> LinComb<(A, C, B, D)>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    D: Ord + Clone,
{
    x.map_basis(|(a, b, c, d)| LinComb::from_basis((a.clone(), c.clone(), b.clone(), d.clone())))
}

/// Multiplies tensor factors 1 and 3 (forest concatenation), keeping 2 and 4:
/// `a⊗b⊗c⊗d ↦ ac⊗b⊗d`.
pub fn m13<B, D>(x: &LinComb<(Forest, B, Forest, D)>) -> LinComb<(Forest, B, D)>
where
    B: Ord + Clone,
    D: Ord + Clone,
{
    x.map_basis(|(a, b, c, d)| LinComb::from_basis((a.product(c), b.clone(), d.clone())))
}

/// Canonical text of a basis key, one string per tensor component.
pub trait KeyParts {
    fn push_parts(&self, out: &mut Vec<String>);

    fn parts(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.push_parts(&mut out);
        out
    }
}

impl KeyParts for Forest {
    fn push_parts(&self, out: &mut Vec<String>) {
        out.push(self.key().to_string());
    }
}

impl<A: KeyParts, B: KeyParts> KeyParts for (A, B) {
    fn push_parts(&self, out: &mut Vec<String>) {
        self.0.push_parts(out);
        self.1.push_parts(out);
    }
}

impl<A: KeyParts, B: KeyParts, C: KeyParts> KeyParts for (A, B, C) {
    fn push_parts(&self, out: &mut Vec<String>) {
        self.0.push_parts(out);
        self.1.push_parts(out);
        self.2.push_parts(out);
    }
}

impl<A: KeyParts, B: KeyParts, C: KeyParts, D: KeyParts> KeyParts for (A, B, C, D) {
    fn push_parts(&self, out: &mut Vec<String>) {
        self.0.push_parts(out);
        self.1.push_parts(out);
        self.2.push_parts(out);
        self.3.push_parts(out);
    }
}

impl<K: Ord + KeyParts> LinComb<K> {
    /// Deterministic single-line rendering: `k·(a ⊗ b) + ...`, terms in
    /// ascending key order, `0` for the zero combination.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut pieces = Vec::new();
        for (k, c) in self.iter() {
            pieces.push(format!("{}·({})", c, k.parts().join(" ⊗ ")));
        }
        pieces.join(" + ")
    }

    /// JSON value `{"terms":[{"coeff":k,"key":[...]}]}` with terms in
    /// ascending key order and exact integer coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .iter()
            .map(|(k, c)| {
                let coeff: serde_json::Number = c
                    .to_string()
                    .parse()
                    .expect("integer literal is a valid JSON number");
                serde_json::json!({ "coeff": coeff, "key": k.parts() })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl<K: Ord + KeyParts> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::RootedTree;
    use proptest::prelude::*;

    fn bullet() -> Forest {
        Forest::single(RootedTree::single())
    }

    #[test]
    fn extend_linearly_examples() {
        let mut x: LinComb<String> = LinComb::zero();
        x.add_term("a".to_string(), 2);
        x.add_term("b".to_string(), -1);

        let id = extend_linearly(&x, |k| LinComb::from_basis(k.clone()));
        assert_eq!(id, x);

        let zero = extend_linearly(&x, |_| LinComb::<String>::zero());
        assert!(zero.is_zero());

        let doubled = extend_linearly(&x, |k| LinComb::from_basis(k.clone()).scale(2));
        assert_eq!(doubled, x.scale(2));
    }

    #[test]
    fn extend_respects_composition() {
        let f = |k: &String| {
            let mut out = LinComb::zero();
            out.add_term(format!("{k}l"), 1);
            out.add_term(format!("{k}r"), 1);
            out
        };
        let g = |k: &String| LinComb::from_basis(format!("{k}!")).scale(3);
        for n in 1..=4 {
            for t in crate::tree::enumerate_trees(n) {
                let x = LinComb::from_basis(t.key().to_string()).scale(2);
                let two_step = extend_linearly(&extend_linearly(&x, f), g);
                let one_step = extend_linearly(&x, |k| extend_linearly(&f(k), g));
                assert_eq!(two_step, one_step);
            }
        }
    }

    #[test]
    fn tau23_swaps_and_is_involutive() {
        let key = ("a", "b", "c", "d");
        let x = LinComb::from_basis(key);
        let swapped = tau23(&x);
        assert_eq!(swapped.coeff(&("a", "c", "b", "d")), 1.into());
        assert_eq!(tau23(&swapped), x);

        let mut y = LinComb::zero();
        y.add_term(("a", "b", "c", "d"), 2);
        y.add_term(("d", "c", "b", "a"), -1);
        let sy = tau23(&y);
        assert_eq!(sy.coeff(&("a", "c", "b", "d")), 2.into());
        assert_eq!(sy.coeff(&("d", "b", "c", "a")), (-1).into());
    }

    #[test]
    fn m13_examples() {
        let t = Forest::parse("[[[]][]]").unwrap();
        let one = Forest::unit();
        let x = LinComb::from_basis((bullet(), t.clone(), bullet(), one.clone()));
        let y = m13(&x);
        assert_eq!(
            y.coeff(&(bullet().product(&bullet()), t.clone(), one.clone())),
            1.into()
        );

        // Unit law in factor 1.
        let x = LinComb::from_basis((one.clone(), t.clone(), bullet(), one.clone()));
        assert_eq!(m13(&x).coeff(&(bullet(), t.clone(), one.clone())), 1.into());

        // Commutativity of the forest product merges symmetric terms.
        let a = Forest::parse("[[]]").unwrap();
        let c = Forest::parse("[]").unwrap();
        let mut x = LinComb::zero();
        x.add_term((a.clone(), t.clone(), c.clone(), one.clone()), 1);
        x.add_term((c.clone(), t.clone(), a.clone(), one.clone()), 1);
        let y = m13(&x);
        assert_eq!(y.term_count(), 1);
        assert_eq!(y.coeff(&(a.product(&c), t, one)), 2.into());
    }

    #[test]
    fn render_is_sorted_and_exact() {
        let mut x = LinComb::zero();
        x.add_term((Forest::parse("[]").unwrap(), Forest::unit()), 2);
        x.add_term((Forest::unit(), Forest::parse("[]").unwrap()), 1);
        assert_eq!(x.render(), "1·(1 ⊗ []) + 2·([] ⊗ 1)");
        assert_eq!(LinComb::<Forest>::zero().render(), "0");
    }

    #[test]
    fn json_shape() {
        let x = LinComb::from_basis((bullet(), Forest::unit())).scale(3);
        let v = x.to_json();
        assert_eq!(v["terms"][0]["coeff"], serde_json::json!(3));
        assert_eq!(v["terms"][0]["key"], serde_json::json!(["[]", "1"]));
    }

    proptest! {
        #[test]
        fn ring_axioms(
            a in proptest::collection::vec(("[a-d]", -3i64..4), 0..5),
            b in proptest::collection::vec(("[a-d]", -3i64..4), 0..5),
            c in proptest::collection::vec(("[a-d]", -3i64..4), 0..5),
            k in -3i64..4,
        ) {
            let build = |v: &[(String, i64)]| {
                let mut x = LinComb::zero();
                for (key, coeff) in v {
                    x.add_term(key.clone(), *coeff);
                }
                x
            };
            let (a, b, c) = (build(&a), build(&b), build(&c));
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.add(&b).scale(k), a.scale(k).add(&b.scale(k)));
            prop_assert_eq!(a.sub(&a), LinComb::zero());
        }
    }
}
