//! Admissible cuts, prunings, trunks, covering subforests and edge
//! contractions, together with the edge bijections used to raise cuts from a
//! quotient or a subtree back to the ambient tree.

use crate::error::Error;
use crate::tree::{EdgeSet, Forest, RawTree, RootedTree};
use std::collections::BTreeMap;

/// Bijection between the edges of a derived tree (a contraction `t/s` or a
/// subtree of `t`) and a subset of the edges of the base tree `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMap {
    to_base: BTreeMap<usize, usize>,
    from_base: BTreeMap<usize, usize>,
}

impl EdgeMap {
    fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let to_base: BTreeMap<usize, usize> = pairs.into_iter().collect();
        let from_base = to_base.iter().map(|(&a, &b)| (b, a)).collect();
        EdgeMap { to_base, from_base }
    }

    /// Maps edges of the derived tree to edges of the base tree.
    pub fn raise(&self, edges: &EdgeSet) -> EdgeSet {
        edges
            .iter()
            .map(|e| *self.to_base.get(&e).expect("edge not in map"))
            .collect()
    }

    /// Maps base edges (which must all survive in the derived tree) down.
    pub fn lower(&self, edges: &EdgeSet) -> EdgeSet {
        edges
            .iter()
            .map(|e| *self.from_base.get(&e).expect("edge not in map"))
            .collect()
    }

    /// Base edges covered by this map.
    pub fn base_edges(&self) -> EdgeSet {
        self.from_base.keys().copied().collect()
    }
}

/// Raises an edge subset of the derived tree through the bijection.
pub fn raise_edges(map: &EdgeMap, edges: &EdgeSet) -> EdgeSet {
    map.raise(edges)
}

/// True when no two edges of `cut` lie on a common root-to-leaf path,
/// i.e. no edge of the set is a strict ancestor of another.
pub fn is_admissible(tree: &RootedTree, cut: &EdgeSet) -> bool {
    cut.iter().all(|e| {
        let mut v = tree.parent(e).unwrap();
        loop {
            if cut.contains(v) {
                return false;
            }
            match tree.parent(v) {
                Some(p) => v = p,
                None => return true,
            }
        }
    })
}

/// All admissible cuts of `tree`, the empty cut included, in binary counting
/// order over ascending edge ids.
pub fn admissible_cuts(tree: &RootedTree) -> Vec<EdgeSet> {
    admissible_subsets(tree, &tree.edges())
}

/// All admissible cuts contained in `zone`.
pub fn admissible_subsets(tree: &RootedTree, zone: &EdgeSet) -> Vec<EdgeSet> {
    zone.subsets()
        .into_iter()
        .filter(|s| is_admissible(tree, s))
        .collect()
}

/// Per-vertex flags: `true` when some cut edge lies weakly below the vertex,
/// i.e. the vertex belongs to the pruned part.
fn pruned_flags(tree: &RootedTree, cut: &EdgeSet) -> Vec<bool> {
    let n = tree.vertex_count();
    let mut pruned = vec![false; n];
    for v in 1..n {
        pruned[v] = pruned[tree.parent(v).unwrap()] || cut.contains(v);
    }
    pruned
}

/// Edges strictly above the cut: the edge set of the pruning `P^c(t)`.
pub fn edges_above(tree: &RootedTree, cut: &EdgeSet) -> EdgeSet {
    let pruned = pruned_flags(tree, cut);
    (1..tree.vertex_count())
        .filter(|&e| pruned[tree.parent(e).unwrap()])
        .collect()
}

/// Edges of the trunk `R^c(t)`, as edges of `t`.
pub fn trunk_edges(tree: &RootedTree, cut: &EdgeSet) -> EdgeSet {
    let pruned = pruned_flags(tree, cut);
    (1..tree.vertex_count()).filter(|&e| !pruned[e]).collect()
}

/// Extracts the subtree rooted at `root` spanning exactly `vertices`
/// (which must be closed under taking children within the selection as this
/// is only called with full subtrees or trunks). Returns the canonical tree
/// and the bijection between its edges and the original edge ids.
fn extract(tree: &RootedTree, root: usize, keep: &[bool]) -> (RootedTree, EdgeMap) {
    let n = tree.vertex_count();
    let mut local = vec![usize::MAX; n];
    let mut verts = Vec::new();
    for v in 0..n {
        if keep[v] {
            local[v] = verts.len();
            verts.push(v);
        }
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for &v in &verts {
        if v != root {
            let p = tree.parent(v).unwrap();
            debug_assert!(keep[p]);
            children[local[p]].push(local[v]);
        }
    }
    let raw = RawTree {
        root: local[root],
        children,
    };
    let (canon, map) = RootedTree::from_raw(&raw);
    let pairs = verts
        .iter()
        .filter(|&&v| v != root)
        .map(|&v| (map[local[v]], v));
    (canon, EdgeMap::from_pairs(pairs))
}

/// The pruning `P^c(t)`: the forest of subtrees hanging strictly above each
/// cut edge. Requires `cut` to be admissible.
pub fn prune(tree: &RootedTree, cut: &EdgeSet) -> Result<Forest, Error> {
    if !is_admissible(tree, cut) {
        return Err(Error::InadmissibleCut {
            tree: tree.key().to_string(),
            cut: cut.to_string(),
        });
    }
    Ok(prune_unchecked(tree, cut))
}

pub(crate) fn prune_unchecked(tree: &RootedTree, cut: &EdgeSet) -> Forest {
    let n = tree.vertex_count();
    let mut trees = Vec::new();
    for e in cut.iter() {
        let mut keep = vec![false; n];
        for v in tree.subtree_vertices(e) {
            keep[v] = true;
        }
        trees.push(extract(tree, e, &keep).0);
    }
    Forest::from_trees(trees)
}

/// The trunk `R^c(t)`: the root component after removing everything strictly
/// above the cut. Also returns the edge bijection into `t`.
pub fn trunk(tree: &RootedTree, cut: &EdgeSet) -> Result<(RootedTree, EdgeMap), Error> {
    if !is_admissible(tree, cut) {
        return Err(Error::InadmissibleCut {
            tree: tree.key().to_string(),
            cut: cut.to_string(),
        });
    }
    Ok(trunk_unchecked(tree, cut))
}

pub(crate) fn trunk_unchecked(tree: &RootedTree, cut: &EdgeSet) -> (RootedTree, EdgeMap) {
    let pruned = pruned_flags(tree, cut);
    let keep: Vec<bool> = pruned.iter().map(|&p| !p).collect();
    extract(tree, 0, &keep)
}

/// `(P^c(t), R^c(t))` for an admissible cut.
pub fn prune_trunk(tree: &RootedTree, cut: &EdgeSet) -> Result<(Forest, RootedTree), Error> {
    let pruning = prune(tree, cut)?;
    let (trunk, _) = trunk_unchecked(tree, cut);
    Ok((pruning, trunk))
}

/// The covering subforest selected by an arbitrary edge subset: keep all
/// vertices and exactly the edges of `kept`; isolated vertices become
/// single-vertex trees.
pub fn subforest(tree: &RootedTree, kept: &EdgeSet) -> Forest {
    let n = tree.vertex_count();
    // Component top: a vertex whose parent edge is absent.
    let mut trees = Vec::new();
    for top in 0..n {
        if top != 0 && kept.contains(top) {
            continue;
        }
        let mut keep = vec![false; n];
        let mut stack = vec![top];
        while let Some(v) = stack.pop() {
            keep[v] = true;
            for &c in tree.children(v) {
                if kept.contains(c) {
                    stack.push(c);
                }
            }
        }
        trees.push(extract(tree, top, &keep).0);
    }
    Forest::from_trees(trees)
}

/// Contracts every connected component of the selected subforest onto a
/// vertex. Returns the canonical quotient `t/s` and the bijection between its
/// edges and the surviving base edges.
pub fn contract(tree: &RootedTree, contracted: &EdgeSet) -> (RootedTree, EdgeMap) {
    let n = tree.vertex_count();
    // Component representative: topmost vertex reachable upward through
    // contracted edges. Preorder ids guarantee parent(v) < v.
    let mut rep = vec![0usize; n];
    for v in 0..n {
        rep[v] = if v != 0 && contracted.contains(v) {
            rep[tree.parent(v).unwrap()]
        } else {
            v
        };
    }
    let mut local = vec![usize::MAX; n];
    let mut verts = Vec::new();
    for v in 0..n {
        if rep[v] == v {
            local[v] = verts.len();
            verts.push(v);
        }
    }
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
    for v in 1..n {
        if !contracted.contains(v) {
            let p = rep[tree.parent(v).unwrap()];
            children[local[p]].push(local[v]);
        }
    }
    let raw = RawTree {
        root: local[0],
        children,
    };
    let (canon, map) = RootedTree::from_raw(&raw);
    let pairs = verts
        .iter()
        .filter(|&&v| v != 0 && !contracted.contains(v))
        .map(|&v| (map[local[v]], v));
    (canon, EdgeMap::from_pairs(pairs))
}
