//! Rooted trees and forests with a canonical bracket encoding.
//!
//! A tree is stored with vertices numbered in canonical preorder: the root is
//! vertex `0`, every child list is sorted ascending by the bracket encoding of
//! the child subtree, and `parent(v) < v` for every non-root vertex. Under
//! this numbering two isomorphic trees are represented by identical data, so
//! equality of isomorphism classes is plain equality.
//!
//! Each non-root vertex `v` names the edge `(parent(v), v)`; edge ids are
//! therefore the integers `1..vertex_count`.

use crate::error::Error;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A sorted, duplicate-free set of edge ids of some tree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct EdgeSet(Vec<usize>);

impl EdgeSet {
    pub fn empty() -> Self {
        EdgeSet(Vec::new())
    }

    pub fn singleton(edge: usize) -> Self {
        EdgeSet(vec![edge])
    }

    pub fn from_vec(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        EdgeSet(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0.binary_search(&edge).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        EdgeSet::from_vec(v)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.iter().filter(|&e| other.contains(e)).collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.iter().filter(|&e| !other.contains(e)).collect())
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| !other.contains(e))
    }

    /// All subsets, in binary counting order over the sorted element list
    /// (the empty set first, the full set last).
    pub fn subsets(&self) -> Vec<EdgeSet> {
        assert!(self.len() < 63, "subset enumeration limited to 62 edges");
        let n = self.len();
        (0u64..(1u64 << n))
            .map(|mask| {
                EdgeSet(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// Applies a bijective relabelling to every edge.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> EdgeSet {
        EdgeSet::from_vec(self.iter().map(f).collect())
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        EdgeSet::from_vec(iter.into_iter().collect())
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Adjacency of a tree in an arbitrary vertex numbering, used while building
/// canonical forms.
#[derive(Clone, Debug)]
pub(crate) struct RawTree {
    pub root: usize,
    pub children: Vec<Vec<usize>>,
}

impl RawTree {
    pub(crate) fn len(&self) -> usize {
        self.children.len()
    }
}

/// Canonicalizes `raw` with the given per-vertex mark flags participating in
/// the sibling order. Returns the canonical children/parent arrays, the map
/// from raw vertex ids to canonical ids, and the bracket encoding.
pub(crate) fn canonicalize(raw: &RawTree, marked: &[bool]) -> (Vec<usize>, Vec<Vec<usize>>, Vec<usize>, String) {
    let n = raw.len();
    debug_assert_eq!(marked.len(), n);

    // Subtree keys, bottom-up (post-order via explicit stack).
    let mut keys: Vec<Option<String>> = vec![None; n];
    let mut order: Vec<Vec<usize>> = raw.children.clone();
    let mut stack = vec![(raw.root, false)];
    while let Some((v, expanded)) = stack.pop() {
        if expanded {
            order[v].sort_by(|&a, &b| keys[a].as_ref().unwrap().cmp(keys[b].as_ref().unwrap()));
            let mut key = String::new();
            if marked[v] {
                key.push('*');
            }
            key.push('[');
            for &c in &order[v] {
                key.push_str(keys[c].as_ref().unwrap());
            }
            key.push(']');
            keys[v] = Some(key);
        } else {
            stack.push((v, true));
            for &c in &raw.children[v] {
                stack.push((c, false));
            }
        }
    }

    // Preorder renumbering along the sorted child lists.
    let mut map = vec![usize::MAX; n];
    let mut parent = vec![0usize; n];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next = 0usize;
    let mut dfs = vec![(raw.root, 0usize)];
    while let Some((v, new_parent)) = dfs.pop() {
        let id = next;
        next += 1;
        map[v] = id;
        parent[id] = new_parent;
        if id != 0 {
            children[new_parent].push(id);
        }
        for &c in order[v].iter().rev() {
            dfs.push((c, id));
        }
    }
    // Preorder along sorted lists visits children in sorted order, so each
    // canonical child list is already ascending.
    let key = keys[raw.root].take().unwrap();
    (parent, children, map, key)
}

/// An unlabeled rooted tree, stored canonically (see the module docs).
#[derive(Clone, Debug)]
pub struct RootedTree {
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
    key: String,
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for RootedTree {}
impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}
impl std::hash::Hash for RootedTree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

impl RootedTree {
    pub(crate) fn from_raw(raw: &RawTree) -> (RootedTree, Vec<usize>) {
        let marks = vec![false; raw.len()];
        let (parent, children, map, key) = canonicalize(raw, &marks);
        (
            RootedTree {
                parent,
                children,
                key,
            },
            map,
        )
    }

    /// The single-vertex tree `[]`.
    pub fn single() -> Self {
        RootedTree {
            parent: vec![0],
            children: vec![Vec::new()],
            key: "[]".to_string(),
        }
    }

    /// The chain with `n` vertices (`n >= 1`), each vertex having one child.
    pub fn chain(n: usize) -> Self {
        assert!(n >= 1);
        let children = (0..n)
            .map(|v| if v + 1 < n { vec![v + 1] } else { vec![] })
            .collect();
        RootedTree::from_raw(&RawTree { root: 0, children }).0
    }

    /// The corolla: a root with `k` leaf children.
    pub fn corolla(k: usize) -> Self {
        let mut children = vec![(1..=k).collect::<Vec<_>>()];
        children.extend(std::iter::repeat_n(Vec::new(), k));
        RootedTree::from_raw(&RawTree { root: 0, children }).0
    }

    /// Builds a tree from a parent array in any numbering. Exactly one entry
    /// must be `None` (the root); the remaining entries must describe an
    /// acyclic graph.
    pub fn from_parent_array(parents: &[Option<usize>]) -> Result<Self, Error> {
        let n = parents.len();
        if n == 0 {
            return Err(Error::parse(0, "a tree needs at least one vertex"));
        }
        let mut root = None;
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate() {
            match p {
                None => {
                    if root.replace(v).is_some() {
                        return Err(Error::parse(0, "more than one root"));
                    }
                }
                Some(p) => {
                    if *p >= n || *p == v {
                        return Err(Error::parse(0, format!("bad parent for vertex {v}")));
                    }
                    children[*p].push(v);
                }
            }
        }
        let root = root.ok_or_else(|| Error::parse(0, "no root"))?;
        // Reject cycles: every vertex must reach the root.
        for start in 0..n {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = parents[v] {
                v = p;
                steps += 1;
                if steps > n {
                    return Err(Error::parse(0, "parent array contains a cycle"));
                }
            }
        }
        Ok(RootedTree::from_raw(&RawTree { root, children }).0)
    }

    /// Parses a single unmarked tree.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let forest = Forest::parse(text)?;
        match forest.trees() {
            [t] => Ok(t.clone()),
            _ => Err(Error::parse(0, "expected exactly one tree")),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.len() - 1
    }

    /// Edge ids, i.e. the non-root vertex ids `1..vertex_count`.
    pub fn edges(&self) -> EdgeSet {
        EdgeSet((1..self.vertex_count()).collect())
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        if v == 0 {
            None
        } else {
            Some(self.parent[v])
        }
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Canonical bracket encoding; equal keys characterize isomorphic trees.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// True when `a` is a strict ancestor of `b`.
    pub fn is_strict_ancestor(&self, a: usize, b: usize) -> bool {
        let mut v = b;
        while let Some(p) = self.parent(v) {
            if p == a {
                return true;
            }
            v = p;
        }
        false
    }

    /// Vertices of the subtree rooted at `v`, in increasing id order.
    /// Canonical preorder numbers a subtree contiguously.
    pub fn subtree_vertices(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            out.push(u);
            stack.extend_from_slice(&self.children[u]);
        }
        out.sort_unstable();
        out
    }

    pub(crate) fn raw(&self) -> RawTree {
        RawTree {
            root: 0,
            children: self.children.clone(),
        }
    }
}

/// A commutative monomial of rooted trees: a multiset, with the empty multiset
/// acting as the unit `1`.
#[derive(Clone, Debug)]
pub struct Forest {
    trees: Vec<RootedTree>,
    key: String,
}

impl PartialEq for Forest {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}
impl Eq for Forest {}
impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Forest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}
impl std::hash::Hash for Forest {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state);
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

fn forest_key(trees: &[RootedTree]) -> String {
    if trees.is_empty() {
        "1".to_string()
    } else {
        trees.iter().map(|t| t.key()).collect()
    }
}

impl Forest {
    /// The unit `1` (empty forest).
    pub fn unit() -> Self {
        Forest {
            trees: Vec::new(),
            key: "1".to_string(),
        }
    }

    pub fn single(tree: RootedTree) -> Self {
        Forest::from_trees(vec![tree])
    }

    pub fn from_trees(mut trees: Vec<RootedTree>) -> Self {
        trees.sort();
        let key = forest_key(&trees);
        Forest { trees, key }
    }

    /// Concatenation product (multiset union).
    pub fn product(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend_from_slice(&other.trees);
        Forest::from_trees(trees)
    }

    pub fn trees(&self) -> &[RootedTree] {
        &self.trees
    }

    pub fn is_unit(&self) -> bool {
        self.trees.is_empty()
    }

    /// Total number of vertices.
    pub fn vertex_degree(&self) -> usize {
        self.trees.iter().map(|t| t.vertex_count()).sum()
    }

    /// Total number of edges.
    pub fn edge_degree(&self) -> usize {
        self.trees.iter().map(|t| t.edge_count()).sum()
    }

    /// Canonical text: "1" for the unit, otherwise the tree encodings sorted
    /// ascending and concatenated.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// Parses a forest; cut marks are rejected.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let items = parse_marked_forest_text(text)?;
        let mut trees = Vec::new();
        for (raw, marks, mark_offsets) in items {
            if let Some(&off) = mark_offsets.first() {
                return Err(Error::parse(off, "cut marks are not allowed here"));
            }
            let _ = marks;
            trees.push(RootedTree::from_raw(&raw).0);
        }
        Ok(Forest::from_trees(trees))
    }
}

/// Adjacency, per-vertex mark flags and mark byte offsets of one parsed
/// tree; vertex ids are in input order.
pub(crate) type ParsedTree = (RawTree, Vec<bool>, Vec<usize>);

/// Parses `text` against the grammar `forest := tree*`,
/// `tree := ('*')? '[' tree* ']'`, with `"1"` accepted for the empty forest.
pub(crate) fn parse_marked_forest_text(text: &str) -> Result<Vec<ParsedTree>, Error> {
    let bytes = text.as_bytes();
    if text == "1" {
        return Ok(Vec::new());
    }
    let mut items = Vec::new();
    let mut pos = 0usize;
    while pos < bytes.len() {
        let (item, next) = parse_tree_item(bytes, pos)?;
        items.push(item);
        pos = next;
    }
    Ok(items)
}

fn parse_tree_item(bytes: &[u8], start: usize) -> Result<(ParsedTree, usize), Error> {
    if bytes.get(start) == Some(&b'*') {
        return Err(Error::parse(start, "cut mark on a root position"));
    }
    if bytes.get(start) != Some(&b'[') {
        return Err(Error::parse(start, "expected '['"));
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut marked = vec![false];
    let mut mark_offsets = Vec::new();
    // Stack of open vertices.
    let mut open = vec![0usize];
    let mut pos = start + 1;
    loop {
        match bytes.get(pos) {
            Some(b'*') => {
                if bytes.get(pos + 1) != Some(&b'[') {
                    return Err(Error::parse(pos + 1, "expected '[' after '*'"));
                }
                let v = children.len();
                children.push(Vec::new());
                marked.push(true);
                mark_offsets.push(pos);
                let top = *open.last().unwrap();
                children[top].push(v);
                open.push(v);
                pos += 2;
            }
            Some(b'[') => {
                let v = children.len();
                children.push(Vec::new());
                marked.push(false);
                let top = *open.last().unwrap();
                children[top].push(v);
                open.push(v);
                pos += 1;
            }
            Some(b']') => {
                open.pop();
                pos += 1;
                if open.is_empty() {
                    let raw = RawTree { root: 0, children };
                    return Ok(((raw, marked, mark_offsets), pos));
                }
            }
            Some(_) => return Err(Error::parse(pos, "expected '[', ']' or '*'")),
            None => return Err(Error::parse(pos, "unbalanced brackets")),
        }
    }
}

/// All isomorphism classes of rooted trees with exactly `n` vertices, in
/// ascending key order.
///
/// Panics when `n == 0`; the empty object is the unit forest, not a tree.
#[allow(clippy::needless_range_loop)]
pub fn enumerate_trees(n: usize) -> Vec<RootedTree> {
    assert!(n >= 1, "there is no rooted tree with 0 vertices");
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new(); n + 1];
    for size in 1..=n {
        let mut out: BTreeMap<String, RootedTree> = BTreeMap::new();
        for forest in forests_of_total(size - 1, &by_size) {
            let tree = attach_root(&forest);
            out.insert(tree.key().to_string(), tree);
        }
        by_size[size] = out.into_values().collect();
    }
    by_size.pop().unwrap()
}

/// All forests with total vertex count exactly `n` (the unit for `n == 0`),
/// in ascending key order.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    let mut by_size: Vec<Vec<RootedTree>> = vec![Vec::new(); n + 1];
    for (size, slot) in by_size.iter_mut().enumerate().skip(1) {
        *slot = enumerate_trees(size);
    }
    let mut out: Vec<Forest> = forests_of_total(n, &by_size)
        .into_iter()
        .map(Forest::from_trees)
        .collect();
    out.sort();
    out.dedup();
    out
}

fn attach_root(forest: &[RootedTree]) -> RootedTree {
    let mut children: Vec<Vec<usize>> = vec![Vec::new()];
    let mut root_children = Vec::new();
    for tree in forest {
        let offset = children.len();
        root_children.push(offset);
        for v in 0..tree.vertex_count() {
            children.push(tree.children(v).iter().map(|c| c + offset).collect());
        }
    }
    children[0] = root_children;
    RootedTree::from_raw(&RawTree { root: 0, children }).0
}

/// Multisets of trees with the given total size; parts are non-increasing in
/// `(size, index)` order so each multiset is produced once.
fn forests_of_total(total: usize, by_size: &[Vec<RootedTree>]) -> Vec<Vec<RootedTree>> {
    fn go(
        total: usize,
        max_part: (usize, usize),
        by_size: &[Vec<RootedTree>],
        acc: &mut Vec<RootedTree>,
        out: &mut Vec<Vec<RootedTree>>,
    ) {
        if total == 0 {
            out.push(acc.clone());
            return;
        }
        let (max_size, max_idx) = max_part;
        for size in (1..=total.min(max_size)).rev() {
            let trees = &by_size[size];
            let idx_bound = if size == max_size {
                max_idx.min(trees.len())
            } else {
                trees.len()
            };
            for (idx, tree) in trees.iter().enumerate().take(idx_bound) {
                acc.push(tree.clone());
                go(total - size, (size, idx + 1), by_size, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    go(total, (total, usize::MAX), by_size, &mut acc, &mut out);
    out
}
