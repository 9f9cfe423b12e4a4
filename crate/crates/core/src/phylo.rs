//! Rooted binary phylogenetic trees, their relation to merge trees, and the
//! count of merge-tree classes a phylogenetic tree cannot tell apart.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::mergetree::{MergeTree, NodeId, RawMergeTree, TreeError};
use crate::realization::factorial;

/// Largest internal-node count accepted by [`eta_brute_force`].
pub const ETA_MAX_INTERNAL: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PhyloError {
    #[error("newick parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("root must have exactly one child, found {0}")]
    RootDegree(usize),
    #[error("internal node has {0} children, expected 2")]
    NonBinary(usize),
    #[error("leaf without a label")]
    UnlabelledLeaf,
    #[error("leaf label {0:?} used twice")]
    DuplicateLabel(String),
    #[error("edge weight {0} is negative or not finite")]
    BadWeight(f64),
    #[error("edge above a node has no weight; a metric tree is required")]
    MissingWeight,
    #[error("root edge length must be non-negative, got {0}")]
    NegativeDelta(f64),
    #[error("{count} internal nodes exceed the brute-force limit of {max}")]
    TooLarge { count: usize, max: usize },
    #[error("a phylogenetic tree class needs at least 2 leaves, got {0}")]
    TooFewLeaves(usize),
    #[error(transparent)]
    Tree(#[from] TreeError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhyloNode {
    pub label: Option<String>,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Weight of the edge to the parent.
    pub length: Option<f64>,
}

/// A rooted binary tree whose root has a single child. Leaves carry distinct
/// labels; when every non-root node has an edge weight the tree is metric.
#[derive(Debug, Clone, PartialEq)]
pub struct PhyloTree {
    nodes: Vec<PhyloNode>,
    root: usize,
}

impl PhyloTree {
    pub fn new(nodes: Vec<PhyloNode>, root: usize) -> Result<Self, PhyloError> {
        if nodes[root].children.len() != 1 {
            return Err(PhyloError::RootDegree(nodes[root].children.len()));
        }
        let mut labels = HashSet::new();
        for (i, node) in nodes.iter().enumerate() {
            if i != root {
                if !node.children.is_empty() && node.children.len() != 2 {
                    return Err(PhyloError::NonBinary(node.children.len()));
                }
                if let Some(w) = node.length {
                    if !(w.is_finite() && w >= 0.0) {
                        return Err(PhyloError::BadWeight(w));
                    }
                }
            }
            if node.children.is_empty() {
                let label = node.label.as_ref().ok_or(PhyloError::UnlabelledLeaf)?;
                if !labels.insert(label.clone()) {
                    return Err(PhyloError::DuplicateLabel(label.clone()));
                }
            }
        }
        Ok(PhyloTree { nodes, root })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// The root's unique child.
    pub fn root_child(&self) -> usize {
        self.nodes[self.root].children[0]
    }

    pub fn nodes(&self) -> &[PhyloNode] {
        &self.nodes
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.children.is_empty()).count()
    }

    /// Non-root nodes with children.
    pub fn internal_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| i != self.root && !self.nodes[i].children.is_empty())
    }

    pub fn is_metric(&self) -> bool {
        (0..self.nodes.len()).all(|i| i == self.root || self.nodes[i].length.is_some())
    }

    /// Drops all edge weights.
    pub fn combinatorial(&self) -> PhyloTree {
        let mut t = self.clone();
        for node in &mut t.nodes {
            node.length = None;
        }
        t
    }

    /// Renames leaves through `f`; labels must stay distinct.
    pub fn relabel(&self, f: impl Fn(&str) -> String) -> Result<PhyloTree, PhyloError> {
        let mut nodes = self.nodes.clone();
        for node in &mut nodes {
            if node.children.is_empty() {
                node.label = node.label.as_deref().map(&f);
            }
        }
        PhyloTree::new(nodes, self.root)
    }

    /// Newick text with an explicit single-child root, e.g.
    /// `((A:1,B:2):1)R;`.
    pub fn to_newick(&self) -> String {
        let mut out = String::new();
        self.write_node(self.root, &mut out, false);
        out.push(';');
        out
    }

    /// Label-and-shape invariant: Newick without lengths, children sorted,
    /// internal labels dropped. Two trees share a split topology iff their
    /// keys agree.
    pub fn topology_key(&self) -> String {
        fn key(t: &PhyloTree, v: usize) -> String {
            let node = &t.nodes[v];
            if node.children.is_empty() {
                return node.label.clone().unwrap_or_default();
            }
            let mut parts: Vec<String> = node.children.iter().map(|&c| key(t, c)).collect();
            parts.sort();
            format!("({})", parts.join(","))
        }
        format!("{};", key(self, self.root))
    }

    fn write_node(&self, v: usize, out: &mut String, with_length: bool) {
        let node = &self.nodes[v];
        if !node.children.is_empty() {
            out.push('(');
            for (k, &c) in node.children.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                self.write_node(c, out, true);
            }
            out.push(')');
        }
        if let Some(label) = &node.label {
            out.push_str(&quote_label(label));
        }
        if with_length {
            if let Some(w) = node.length {
                let _ = write!(out, ":{w}");
            }
        }
    }
}

fn quote_label(label: &str) -> String {
    if label.is_empty() || label.chars().any(|c| "()[]':;, \t\n".contains(c)) {
        format!("'{}'", label.replace('\'', "''"))
    } else {
        label.to_string()
    }
}

/// Parses Newick. A top-level node with one child is taken as the root; any
/// other top-level node gets an implicit root above it, and its own branch
/// length (if any) becomes the root edge.
pub fn parse_newick(text: &str) -> Result<PhyloTree, PhyloError> {
    let mut p = NewickParser {
        src: text.as_bytes(),
        pos: 0,
        nodes: Vec::new(),
    };
    let top = p.subtree(None)?;
    p.skip_ws();
    p.expect(b';')?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input after ';'"));
    }
    let mut nodes = p.nodes;
    let root = if nodes[top].children.len() == 1 {
        top
    } else {
        let root = nodes.len();
        nodes.push(PhyloNode {
            label: None,
            parent: None,
            children: vec![top],
            length: None,
        });
        nodes[top].parent = Some(root);
        root
    };
    PhyloTree::new(nodes, root)
}

struct NewickParser<'a> {
    src: &'a [u8],
    pos: usize,
    nodes: Vec<PhyloNode>,
}

impl NewickParser<'_> {
    fn error(&self, msg: &str) -> PhyloError {
        PhyloError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_ascii_whitespace() {
                self.pos += 1;
            } else if c == b'[' {
                // comment
                while let Some(c) = self.peek() {
                    self.pos += 1;
                    if c == b']' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), PhyloError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn subtree(&mut self, parent: Option<usize>) -> Result<usize, PhyloError> {
        self.skip_ws();
        let id = self.nodes.len();
        self.nodes.push(PhyloNode {
            label: None,
            parent,
            children: Vec::new(),
            length: None,
        });
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                let child = self.subtree(Some(id))?;
                self.nodes[id].children.push(child);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')'")),
                }
            }
        }
        self.skip_ws();
        self.nodes[id].label = self.label()?;
        self.skip_ws();
        if self.peek() == Some(b':') {
            self.pos += 1;
            self.skip_ws();
            self.nodes[id].length = Some(self.number()?);
        }
        Ok(id)
    }

    fn label(&mut self) -> Result<Option<String>, PhyloError> {
        if self.peek() == Some(b'\'') {
            self.pos += 1;
            let mut out = Vec::new();
            loop {
                match self.peek() {
                    None => return Err(self.error("unterminated quoted label")),
                    Some(b'\'') if self.src.get(self.pos + 1) == Some(&b'\'') => {
                        out.push(b'\'');
                        self.pos += 2;
                    }
                    Some(b'\'') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => {
                        out.push(c);
                        self.pos += 1;
                    }
                }
            }
            return String::from_utf8(out)
                .map(Some)
                .map_err(|_| self.error("label is not UTF-8"));
        }
        let start = self.pos;
        while let Some(c) = self.peek() {
            if b"()[]':;,".contains(&c) || c.is_ascii_whitespace() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .map(|s| Some(s.to_string()))
            .map_err(|_| self.error("label is not UTF-8"))
    }

    fn number(&mut self) -> Result<f64, PhyloError> {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() || b"+-.eE".contains(&c) {
                self.pos += 1;
            } else {
                break;
            }
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse::<f64>().ok())
            .ok_or_else(|| PhyloError::Parse {
                pos: start,
                msg: "invalid branch length".into(),
            })
    }
}

/// A merge tree whose leaves carry labels from a phylogenetic tree.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelledMergeTree {
    pub tree: MergeTree,
    pub labels: BTreeMap<NodeId, String>,
}

impl LabelledMergeTree {
    /// Leaf labels listed by birth order.
    pub fn labels_by_birth(&self) -> Vec<String> {
        self.tree
            .leaves()
            .iter()
            .map(|v| self.labels[v].clone())
            .collect()
    }
}

/// `h(v) = Δ − d(r, v)` with `d` the weighted path distance from the root.
/// Node `i` of the phylogenetic tree becomes merge-tree node `v{i}`.
pub fn h_delta(tree: &PhyloTree, delta: f64) -> Result<LabelledMergeTree, PhyloError> {
    if !tree.is_metric() {
        return Err(PhyloError::MissingWeight);
    }
    let name = |i: usize| format!("v{i}");
    let mut raw = RawMergeTree::new(name(tree.root));
    let mut queue = VecDeque::from([(tree.root, 0.0)]);
    while let Some((v, dist)) = queue.pop_front() {
        for &c in &tree.nodes[v].children {
            let d = dist + tree.nodes[c].length.expect("metric");
            raw = raw.node(name(c), name(v), delta - d);
            queue.push_back((c, d));
        }
    }
    let merge_tree = raw.validate()?;
    let labels = (0..tree.nodes.len())
        .filter_map(|i| {
            let label = tree.nodes[i].label.clone()?;
            let id = merge_tree.find(&name(i))?;
            merge_tree.is_leaf(id).then_some((id, label))
        })
        .collect();
    Ok(LabelledMergeTree {
        tree: merge_tree,
        labels,
    })
}

/// Labels leaves by birth rank `0..=n`, weights each edge by the height
/// difference of its endpoints and gives the root edge weight `Δ`.
pub fn t_delta(tree: &MergeTree, delta: f64) -> Result<PhyloTree, PhyloError> {
    if !(delta.is_finite() && delta >= 0.0) {
        return Err(PhyloError::NegativeDelta(delta));
    }
    let mut rank = vec![None; tree.node_count()];
    for (i, &v) in tree.leaves().iter().enumerate() {
        rank[v] = Some(i.to_string());
    }
    let nodes = (0..tree.node_count())
        .map(|v| {
            let length = match tree.parent(v) {
                None => None,
                Some(p) if p == tree.root() => Some(delta),
                Some(p) => Some(tree.height(p).unwrap() - tree.height(v).unwrap()),
            };
            PhyloNode {
                label: rank[v].clone(),
                parent: tree.parent(v),
                children: tree.children(v).to_vec(),
                length,
            }
        })
        .collect();
    PhyloTree::new(nodes, tree.root())
}

/// `(2n−1)!!` combinatorial phylogenetic trees on `n+1` labelled leaves.
pub fn count_phylo_classes(leaves: usize) -> Result<BigUint, PhyloError> {
    if leaves < 2 {
        return Err(PhyloError::TooFewLeaves(leaves));
    }
    Ok((1..leaves)
        .map(|k| 2 * k - 1)
        .fold(BigUint::one(), |acc, odd| acc * odd))
}

/// `∏_j |A_j|!` where `A_j` holds the internal nodes at hop distance `j`
/// from the root's child.
pub fn eta_lower_bound(tree: &PhyloTree) -> BigUint {
    let mut level_sizes: Vec<usize> = Vec::new();
    let mut frontier = vec![tree.root_child()];
    while !frontier.is_empty() {
        let internal: Vec<usize> = frontier
            .into_iter()
            .filter(|&v| !tree.nodes[v].children.is_empty())
            .collect();
        if internal.is_empty() {
            break;
        }
        level_sizes.push(internal.len());
        frontier = internal
            .iter()
            .flat_map(|&v| tree.nodes[v].children.iter().copied())
            .collect();
    }
    level_sizes
        .into_iter()
        .fold(BigUint::one(), |acc, k| acc * factorial(k))
}

/// Number of total orders on the internal nodes in which every node comes
/// after its ancestors, i.e. the death orders compatible with the tree's
/// shape and leaf labelling. Counted exhaustively over down-closed subsets.
pub fn eta_brute_force(tree: &PhyloTree) -> Result<BigUint, PhyloError> {
    let internal: Vec<usize> = tree.internal_nodes().collect();
    let m = internal.len();
    if m > ETA_MAX_INTERNAL {
        return Err(PhyloError::TooLarge {
            count: m,
            max: ETA_MAX_INTERNAL,
        });
    }
    let mut bit = vec![usize::MAX; tree.nodes.len()];
    for (k, &v) in internal.iter().enumerate() {
        bit[v] = k;
    }
    // bitmask of the internal parent, empty for the root's child
    let requires: Vec<u32> = internal
        .iter()
        .map(|&v| match tree.nodes[v].parent {
            Some(p) if bit[p] != usize::MAX => 1u32 << bit[p],
            _ => 0,
        })
        .collect();
    let mut ways = vec![0u64; 1 << m];
    ways[0] = 1;
    for mask in 0..(1u32 << m) {
        let w = ways[mask as usize];
        if w == 0 {
            continue;
        }
        for k in 0..m {
            if mask & (1 << k) == 0 && mask & requires[k] == requires[k] {
                ways[(mask | (1 << k)) as usize] += w;
            }
        }
    }
    Ok(BigUint::from(ways[(1usize << m) - 1]))
}

/// Every rooted binary tree with leaves labelled `0..leaves`, built by
/// inserting leaf `k` on each of the `2k−1` existing edges in turn.
pub fn all_labelled_trees(leaves: usize) -> Vec<PhyloTree> {
    if leaves == 0 {
        return Vec::new();
    }
    let leaf = |label: usize, parent: usize| PhyloNode {
        label: Some(label.to_string()),
        parent: Some(parent),
        children: Vec::new(),
        length: None,
    };
    let start = vec![
        PhyloNode {
            label: None,
            parent: None,
            children: vec![1],
            length: None,
        },
        leaf(0, 0),
    ];
    let mut trees = vec![start];
    for k in 1..leaves {
        let mut next = Vec::with_capacity(trees.len() * (2 * k - 1));
        for nodes in &trees {
            for e in 1..nodes.len() {
                let mut t = nodes.clone();
                let above = t[e].parent.unwrap();
                let (w, new_leaf) = (t.len(), t.len() + 1);
                let slot = t[above].children.iter().position(|&c| c == e).unwrap();
                t[above].children[slot] = w;
                t[e].parent = Some(w);
                t.push(PhyloNode {
                    label: None,
                    parent: Some(above),
                    children: vec![e, new_leaf],
                    length: None,
                });
                t.push(leaf(k, w));
                next.push(t);
            }
        }
        trees = next;
    }
    trees
        .into_iter()
        .map(|nodes| PhyloTree::new(nodes, 0).expect("insertion keeps the tree binary"))
        .collect()
}
