//! Edge-marked trees.
//!
//! A mark lives on an edge and is rendered as `*` immediately before the
//! opening bracket of the child subtree. Marks participate in
//! canonicalization: equality of marked trees is equality of the canonical
//! encoding of the edge-2-colored tree.
//!
//! Whether the mark set is read as an admissible cut or as an arbitrary
//! covering-subforest selection is decided by the wrapper types in
//! [`crate::doubling`]; the marked tree itself is flavor-free.

use crate::error::Error;
use crate::tree::{canonicalize, parse_marked_forest_text, EdgeSet, RootedTree};
use std::cmp::Ordering;
use std::fmt;

/// A rooted tree together with a distinguished edge subset.
///
/// The underlying tree is kept in the plain (unmarked) canonical numbering so
/// that all marked variants of one tree share vertex and edge ids; the mark
/// set is stored as a normalized orbit representative, making the
/// representation unique per isomorphism class.
#[derive(Clone, Debug)]
pub struct MarkedTree {
    tree: RootedTree,
    marks: EdgeSet,
    key: String,
}

impl PartialEq for MarkedTree {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for MarkedTree {}
impl PartialOrd for MarkedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for MarkedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}
impl std::hash::Hash for MarkedTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl fmt::Display for MarkedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

impl MarkedTree {
    /// Wraps `tree` with the given mark set. Panics if a mark is not an edge
    /// of the tree.
    pub fn new(tree: RootedTree, marks: EdgeSet) -> Self {
        let n = tree.vertex_count();
        assert!(
            marks.iter().all(|e| e >= 1 && e < n),
            "mark {marks} out of range for {tree}"
        );

        // Canonicalize with marks to obtain the class key and the
        // class-canonical concrete form, then renumber that form back into
        // the unmarked canonical numbering. The resulting mark set is the
        // same for every representative of the class.
        let raw = tree.raw();
        let mut flags = vec![false; n];
        for e in marks.iter() {
            flags[e] = true;
        }
        let (_, marked_children, to_marked, key) = canonicalize(&raw, &flags);
        let marked_marks = marks.map(|e| to_marked[e]);

        let marked_raw = crate::tree::RawTree {
            root: 0,
            children: marked_children,
        };
        let (tree_back, to_plain) = RootedTree::from_raw(&marked_raw);
        debug_assert_eq!(tree_back, tree);
        let normalized = marked_marks.map(|e| to_plain[e]);

        MarkedTree {
            tree: tree_back,
            marks: normalized,
            key,
        }
    }

    /// Parses a single marked tree.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let items = parse_marked_forest_text(text)?;
        match items.len() {
            1 => Ok(marked_from_parsed(&items[0].0, &items[0].1)),
            _ => Err(Error::parse(0, "expected exactly one tree")),
        }
    }

    pub fn tree(&self) -> &RootedTree {
        &self.tree
    }

    pub fn marks(&self) -> &EdgeSet {
        &self.marks
    }

    /// Canonical encoding of the 2-colored tree.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// True when no two marked edges lie on a common root-to-leaf path.
    pub fn is_admissible(&self) -> bool {
        crate::cut::is_admissible(&self.tree, &self.marks)
    }
}

/// Parses a whole marked forest into individual marked trees.
pub fn parse_marked_forest(text: &str) -> Result<Vec<MarkedTree>, Error> {
    let items = parse_marked_forest_text(text)?;
    Ok(items
        .iter()
        .map(|(raw, flags, _)| marked_from_parsed(raw, flags))
        .collect())
}

fn marked_from_parsed(raw: &crate::tree::RawTree, flags: &[bool]) -> MarkedTree {
    let (tree, map) = RootedTree::from_raw(raw);
    let marks = (0..flags.len()).filter(|&v| flags[v]).map(|v| map[v]).collect();
    MarkedTree::new(tree, marks)
}
