//! Generic merge trees and the Elder rule.
//!
//! Heights increase toward the root, which sits at `+∞` and is stored with no
//! height at all. The root has exactly one child; every other internal node
//! has exactly two. Finite heights are pairwise distinct.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::barcode::{Bar, StrictBarcode};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeError {
    #[error("root {0:?} is not a node of the tree")]
    UnknownRoot(String),
    #[error("node {node:?} has unknown parent {parent:?}")]
    UnknownParent { node: String, parent: String },
    #[error("root {0:?} must have a null parent")]
    RootHasParent(String),
    #[error("root {0:?} must have a null height")]
    RootHasHeight(String),
    #[error("nodes {0:?} and {1:?} both lack a parent")]
    MultipleRoots(String, String),
    #[error("non-root node {0:?} has no height")]
    MissingHeight(String),
    #[error("node {node:?} has non-finite height {height}")]
    NonFinite { node: String, height: f64 },
    #[error("cycle through node {0:?}")]
    Cycle(String),
    #[error("root must have exactly one child, found {0}")]
    RootDegree(usize),
    #[error("internal node {node:?} has {children} children, expected 2")]
    NonBinary { node: String, children: usize },
    #[error("node {child:?} at height {child_height} lies above its parent {parent:?} at {parent_height}")]
    HeightInversion {
        child: String,
        child_height: f64,
        parent: String,
        parent_height: f64,
    },
    #[error("nodes {0:?} and {1:?} share height {2}; the tree is not generic")]
    DuplicateHeight(String, String, f64),
}

/// One node of the JSON form. `height` and `parent` are `null` for the root.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawNode {
    pub parent: Option<String>,
    pub height: Option<f64>,
}

/// Unvalidated node/parent/height table, mirroring the JSON format
/// `{"root": "r", "nodes": {"r": {"parent": null, "height": null}, ...}}`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct RawMergeTree {
    pub root: String,
    pub nodes: BTreeMap<String, RawNode>,
}

impl RawMergeTree {
    /// Starts a table holding only the root.
    pub fn new(root: impl Into<String>) -> Self {
        let root = root.into();
        let mut nodes = BTreeMap::new();
        nodes.insert(
            root.clone(),
            RawNode {
                parent: None,
                height: None,
            },
        );
        RawMergeTree { root, nodes }
    }

    pub fn node(mut self, name: impl Into<String>, parent: impl Into<String>, height: f64) -> Self {
        self.nodes.insert(
            name.into(),
            RawNode {
                parent: Some(parent.into()),
                height: Some(height),
            },
        );
        self
    }

    pub fn validate(self) -> Result<MergeTree, TreeError> {
        validate(self)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMergeTree", into = "RawMergeTree")]
pub struct MergeTree {
    names: Vec<String>,
    parent: Vec<Option<usize>>,
    height: Vec<Option<f64>>,
    children: Vec<Vec<usize>>,
    root: usize,
    /// Leaves sorted by height.
    births: Vec<usize>,
    /// Non-root internal nodes sorted by height.
    deaths: Vec<usize>,
}

/// Checks every structural invariant and builds the tree.
pub fn validate(raw: RawMergeTree) -> Result<MergeTree, TreeError> {
    let names: Vec<String> = raw.nodes.keys().cloned().collect();
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let root = *index
        .get(raw.root.as_str())
        .ok_or_else(|| TreeError::UnknownRoot(raw.root.clone()))?;

    let mut parent = vec![None; names.len()];
    let mut height = vec![None; names.len()];
    for (i, (name, node)) in raw.nodes.iter().enumerate() {
        if i == root {
            if node.parent.is_some() {
                return Err(TreeError::RootHasParent(name.clone()));
            }
            if node.height.is_some() {
                return Err(TreeError::RootHasHeight(name.clone()));
            }
            continue;
        }
        match &node.parent {
            None => return Err(TreeError::MultipleRoots(raw.root.clone(), name.clone())),
            Some(p) => {
                let &pi = index
                    .get(p.as_str())
                    .ok_or_else(|| TreeError::UnknownParent {
                        node: name.clone(),
                        parent: p.clone(),
                    })?;
                parent[i] = Some(pi);
            }
        }
        let h = node
            .height
            .ok_or_else(|| TreeError::MissingHeight(name.clone()))?;
        if !h.is_finite() {
            return Err(TreeError::NonFinite {
                node: name.clone(),
                height: h,
            });
        }
        height[i] = Some(h);
    }

    // every node must reach the root
    let mut state = vec![0u8; names.len()]; // 0 unseen, 1 on path, 2 reaches root
    state[root] = 2;
    for start in 0..names.len() {
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = parent[v].expect("only the root lacks a parent");
        }
        if state[v] == 1 {
            return Err(TreeError::Cycle(names[v].clone()));
        }
        for u in path {
            state[u] = 2;
        }
    }

    let mut children = vec![Vec::new(); names.len()];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(v);
        }
    }
    if children[root].len() != 1 {
        return Err(TreeError::RootDegree(children[root].len()));
    }
    for (v, ch) in children.iter().enumerate() {
        if v != root && !ch.is_empty() && ch.len() != 2 {
            return Err(TreeError::NonBinary {
                node: names[v].clone(),
                children: ch.len(),
            });
        }
    }
    for v in 0..names.len() {
        if let (Some(p), Some(hv)) = (parent[v], height[v]) {
            if let Some(hp) = height[p] {
                if hv > hp {
                    return Err(TreeError::HeightInversion {
                        child: names[v].clone(),
                        child_height: hv,
                        parent: names[p].clone(),
                        parent_height: hp,
                    });
                }
            }
        }
    }
    let mut by_height: Vec<usize> = (0..names.len()).filter(|&v| v != root).collect();
    by_height.sort_by(|&a, &b| height[a].unwrap().total_cmp(&height[b].unwrap()));
    if let Some(w) = by_height.windows(2).find(|w| height[w[0]] == height[w[1]]) {
        return Err(TreeError::DuplicateHeight(
            names[w[0]].clone(),
            names[w[1]].clone(),
            height[w[0]].unwrap(),
        ));
    }

    let births = by_height
        .iter()
        .copied()
        .filter(|&v| children[v].is_empty())
        .collect();
    let deaths = by_height
        .iter()
        .copied()
        .filter(|&v| !children[v].is_empty())
        .collect();
    Ok(MergeTree {
        names,
        parent,
        height,
        children,
        root,
        births,
        deaths,
    })
}

impl TryFrom<RawMergeTree> for MergeTree {
    type Error = TreeError;

    fn try_from(raw: RawMergeTree) -> Result<Self, Self::Error> {
        validate(raw)
    }
}

impl From<MergeTree> for RawMergeTree {
    fn from(t: MergeTree) -> Self {
        t.to_raw()
    }
}

/// Node handle: an index into the tree's node table.
pub type NodeId = usize;

impl MergeTree {
    pub fn to_raw(&self) -> RawMergeTree {
        RawMergeTree {
            root: self.names[self.root].clone(),
            nodes: (0..self.names.len())
                .map(|v| {
                    (
                        self.names[v].clone(),
                        RawNode {
                            parent: self.parent[v].map(|p| self.names[p].clone()),
                            height: self.height[v],
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn root_child(&self) -> NodeId {
        self.children[self.root][0]
    }

    pub fn name(&self, v: NodeId) -> &str {
        &self.names[v]
    }

    pub fn find(&self, name: &str) -> Option<NodeId> {
        self.names.iter().position(|n| n == name)
    }

    /// `None` for the root.
    pub fn height(&self, v: NodeId) -> Option<f64> {
        self.height[v]
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        self.parent[v]
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        v != self.root && self.children[v].is_empty()
    }

    /// Leaves in birth (height) order.
    pub fn leaves(&self) -> &[NodeId] {
        &self.births
    }

    /// Non-root internal nodes in death (height) order.
    pub fn internals(&self) -> &[NodeId] {
        &self.deaths
    }

    /// Number of finite bars in the Elder-rule barcode: leaves minus one.
    pub fn bar_count(&self) -> usize {
        self.births.len() - 1
    }

    /// Shifts every finite height by `delta`.
    pub fn translate(&self, delta: f64) -> MergeTree {
        let mut t = self.clone();
        for h in t.height.iter_mut().flatten() {
            *h += delta;
        }
        t
    }

    /// Leaves at heights `0..=n` and internal nodes at `n+1..=2n`.
    pub fn is_standard_form(&self) -> bool {
        let n = self.bar_count();
        self.births
            .iter()
            .enumerate()
            .all(|(i, &v)| self.height[v] == Some(i as f64))
            && self
                .deaths
                .iter()
                .enumerate()
                .all(|(j, &v)| self.height[v] == Some((n + j + 1) as f64))
    }
}

/// Each leaf is paired with the internal node where its bar dies; the elder
/// leaf is unpaired and returned separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElderPairing {
    pub essential: NodeId,
    /// `(leaf, merge node)` in order of increasing merge height.
    pub pairs: Vec<(NodeId, NodeId)>,
}

/// Sweeps nodes by increasing height with a union–find that tracks the
/// eldest leaf of each component.
pub fn elder_pairing(tree: &MergeTree) -> ElderPairing {
    let mut sets = DisjointSets::new(tree.node_count());
    let mut elder: Vec<NodeId> = (0..tree.node_count()).collect();
    let mut pairs = Vec::with_capacity(tree.deaths.len());
    for &k in &tree.deaths {
        let (a, b) = match tree.children[k][..] {
            [a, b] => (sets.find(a), sets.find(b)),
            _ => unreachable!("validated binary"),
        };
        let (ea, eb) = (elder[a], elder[b]);
        let (old, young) = if tree.height[ea] < tree.height[eb] {
            (ea, eb)
        } else {
            (eb, ea)
        };
        pairs.push((young, k));
        let merged = sets.union(a, b);
        let top = sets.union(merged, k);
        elder[top] = old;
    }
    let essential = elder[sets.find(tree.root_child())];
    ElderPairing { essential, pairs }
}

/// The degree-0 barcode of the tree under the Elder rule.
pub fn elder_rule(tree: &MergeTree) -> StrictBarcode {
    let pairing = elder_pairing(tree);
    let h = |v: NodeId| tree.height[v].expect("non-root");
    StrictBarcode::new(
        h(pairing.essential),
        pairing
            .pairs
            .iter()
            .map(|&(leaf, node)| Bar::new(h(leaf), h(node))),
    )
    .expect("a generic merge tree has a strict barcode")
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> usize {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return a;
        }
        let (big, small) = if self.rank[a] >= self.rank[b] {
            (a, b)
        } else {
            (b, a)
        };
        self.parent[small] = big;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        big
    }
}

/// Where a node hangs in the rank-relabelled tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Attach {
    Root,
    /// Internal node of the given death rank (0-based).
    Death(usize),
}

/// Complete invariant of combinatorial equivalence: the parent map after
/// renaming leaves by birth rank and internal nodes by death rank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    /// Indexed by birth rank.
    pub leaf_parents: Vec<Attach>,
    /// Indexed by death rank.
    pub internal_parents: Vec<Attach>,
}

/// A canonical code together with the node names realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComboClassWitness {
    pub birth_order: Vec<String>,
    pub death_order: Vec<String>,
    pub code: CanonicalCode,
}

pub fn canonical_code(tree: &MergeTree) -> CanonicalCode {
    let mut death_rank = vec![usize::MAX; tree.node_count()];
    for (j, &v) in tree.deaths.iter().enumerate() {
        death_rank[v] = j;
    }
    let attach = |v: NodeId| match tree.parent[v] {
        Some(p) if p == tree.root => Attach::Root,
        Some(p) => Attach::Death(death_rank[p]),
        None => unreachable!("only the root lacks a parent"),
    };
    CanonicalCode {
        leaf_parents: tree.births.iter().map(|&v| attach(v)).collect(),
        internal_parents: tree.deaths.iter().map(|&v| attach(v)).collect(),
    }
}

pub fn class_witness(tree: &MergeTree) -> ComboClassWitness {
    ComboClassWitness {
        birth_order: tree.births.iter().map(|&v| tree.names[v].clone()).collect(),
        death_order: tree.deaths.iter().map(|&v| tree.names[v].clone()).collect(),
        code: canonical_code(tree),
    }
}

/// Isomorphic as graphs through a map preserving birth order and death order
/// separately.
pub fn combinatorially_equivalent(a: &MergeTree, b: &MergeTree) -> bool {
    canonical_code(a) == canonical_code(b)
}

/// Replaces heights by ranks: the leaf of birth rank `i` goes to `i`, the
/// internal node of death rank `j` (1-based) goes to `n + j`.
pub fn standardize(tree: &MergeTree) -> MergeTree {
    let n = tree.bar_count();
    let mut t = tree.clone();
    for (i, &v) in tree.births.iter().enumerate() {
        t.height[v] = Some(i as f64);
    }
    for (j, &v) in tree.deaths.iter().enumerate() {
        t.height[v] = Some((n + j + 1) as f64);
    }
    t
}
