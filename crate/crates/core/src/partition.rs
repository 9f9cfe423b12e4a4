//! Set partitions of `{0,…,n}` under refinement and the maximal chains of
//! that lattice, which are in bijection with standard-form merge trees.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::mergetree::{MergeTree, RawMergeTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("block element {element} outside the ground set 0..={max}")]
    OutOfRange { element: usize, max: usize },
    #[error("element {0} appears twice")]
    Repeated(usize),
    #[error("element {0} is not covered by any block")]
    Uncovered(usize),
    #[error("empty block")]
    EmptyBlock,
    #[error("ground sets differ: {left} vs {right} elements")]
    GroundMismatch { left: usize, right: usize },
    #[error("chain step {step} does not merge exactly two blocks")]
    NotACover { step: usize },
    #[error("chain must run from the bottom to the top partition")]
    BadEnds,
    #[error("chain is empty")]
    EmptyChain,
    #[error("merge tree is not in standard form")]
    NotStandard,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A partition of `{0,…,n}`, blocks sorted internally and by their minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// `ground` is the number of elements, so the ground set is `0..ground`.
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; ground];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e >= ground {
                    return Err(PartitionError::OutOfRange {
                        element: e,
                        max: ground.saturating_sub(1),
                    });
                }
                if seen[e] {
                    return Err(PartitionError::Repeated(e));
                }
                seen[e] = true;
            }
        }
        if let Some(e) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered(e));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { ground, blocks })
    }

    /// `{0|1|…|n}`.
    pub fn bottom(n: usize) -> Self {
        SetPartition {
            ground: n + 1,
            blocks: (0..=n).map(|i| vec![i]).collect(),
        }
    }

    /// `{01…n}`.
    pub fn top(n: usize) -> Self {
        SetPartition {
            ground: n + 1,
            blocks: vec![(0..=n).collect()],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block holding `e`.
    pub fn block_of(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&e).is_ok())
    }

    /// Joins blocks `a` and `b` (indices into [`blocks`](Self::blocks)).
    pub fn merge(&self, a: usize, b: usize) -> SetPartition {
        let mut blocks = self.blocks.clone();
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let moved = blocks.remove(hi);
        blocks[lo].extend(moved);
        blocks[lo].sort_unstable();
        SetPartition {
            ground: self.ground,
            blocks,
        }
    }
}

/// Every block of `u` lies inside a block of `v`.
pub fn refines(u: &SetPartition, v: &SetPartition) -> Result<bool, PartitionError> {
    if u.ground != v.ground {
        return Err(PartitionError::GroundMismatch {
            left: u.ground,
            right: v.ground,
        });
    }
    let mut owner = vec![0; v.ground];
    for (k, block) in v.blocks.iter().enumerate() {
        for &e in block {
            owner[e] = k;
        }
    }
    Ok(u.blocks
        .iter()
        .all(|block| block.iter().all(|&e| owner[e] == owner[block[0]])))
}

/// `0|1,2` for `{0|12}`.
impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, "|")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// The ground set is `0..=m` where `m` is the largest element mentioned.
impl FromStr for SetPartition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: String| PartitionError::Parse {
            input: s.to_string(),
            reason,
        };
        let blocks = s
            .trim()
            .split('|')
            .map(|block| {
                block
                    .split(',')
                    .map(|tok| {
                        tok.trim()
                            .parse::<usize>()
                            .map_err(|e| parse_err(format!("{tok:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ground = blocks.iter().flatten().max().map_or(0, |m| m + 1);
        SetPartition::new(ground, blocks)
    }
}

/// Bottom-to-top chain in which each step merges exactly two blocks. Holds
/// `n + 1` partitions for the ground set `{0,…,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaximalChain {
    partitions: Vec<SetPartition>,
}

impl MaximalChain {
    pub fn new(partitions: Vec<SetPartition>) -> Result<Self, PartitionError> {
        let first = partitions.first().ok_or(PartitionError::EmptyChain)?;
        let n = first.ground - 1;
        if *first != SetPartition::bottom(n) || *partitions.last().unwrap() != SetPartition::top(n)
        {
            return Err(PartitionError::BadEnds);
        }
        for (step, w) in partitions.windows(2).enumerate() {
            let covers = w[1].block_count() + 1 == w[0].block_count() && refines(&w[0], &w[1])?;
            if !covers {
                return Err(PartitionError::NotACover { step: step + 1 });
            }
        }
        Ok(MaximalChain { partitions })
    }

    pub fn partitions(&self) -> &[SetPartition] {
        &self.partitions
    }

    /// The `n` of the ground set `{0,…,n}`.
    pub fn n(&self) -> usize {
        self.partitions.len() - 1
    }

    /// For step `k` (1-based), the two blocks of partition `k` that merge.
    fn merged_blocks(&self, k: usize) -> (usize, usize) {
        let (before, after) = (&self.partitions[k - 1], &self.partitions[k]);
        let mut joined = before
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| !after.blocks.contains(b))
            .map(|(i, _)| i);
        let a = joined.next().expect("a cover merges two blocks");
        let b = joined.next().expect("a cover merges two blocks");
        (a, b)
    }
}

/// One partition per line.
impl fmt::Display for MaximalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.partitions {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for MaximalChain {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let ground = lines
            .first()
            .ok_or(PartitionError::EmptyChain)?
            .parse::<SetPartition>()?
            .ground;
        let partitions = lines
            .iter()
            .map(|line| {
                let p = line.parse::<SetPartition>()?;
                // later lines may not mention every element explicitly
                SetPartition::new(ground, p.blocks)
            })
            .collect::<Result<Vec<_>, _>>()?;
        MaximalChain::new(partitions)
    }
}

/// Partition `k` of the chain groups the leaves (labelled by height) into the
/// connected components of the sublevel set at height `n + k`.
pub fn tree_to_chain(tree: &MergeTree) -> Result<MaximalChain, PartitionError> {
    if !tree.is_standard_form() {
        return Err(PartitionError::NotStandard);
    }
    let n = tree.bar_count();
    let label = |v| tree.height(v).expect("non-root") as usize;
    let some_leaf = |mut v| {
        while !tree.is_leaf(v) {
            v = tree.children(v)[0];
        }
        label(v)
    };
    let mut current = SetPartition::bottom(n);
    let mut partitions = vec![current.clone()];
    for &k in tree.internals() {
        let (a, b) = match tree.children(k) {
            [a, b] => (some_leaf(*a), some_leaf(*b)),
            _ => unreachable!("binary"),
        };
        let (ba, bb) = (current.block_of(a).unwrap(), current.block_of(b).unwrap());
        current = current.merge(ba, bb);
        partitions.push(current.clone());
    }
    Ok(MaximalChain { partitions })
}

/// Builds the standard-form tree of a chain: leaf `i` at height `i`, the
/// merge of step `k` at height `n + k`. Leaves are named `l{i}`, merges
/// `m{k}`, the root `r`.
pub fn chain_to_tree(chain: &MaximalChain) -> MergeTree {
    let n = chain.n();
    let mut raw = RawMergeTree::new("r");
    // top node of each block, keyed by the block's minimum element
    let mut top: Vec<String> = (0..=n).map(|i| format!("l{i}")).collect();
    for i in 0..=n {
        raw = raw.node(format!("l{i}"), "", i as f64);
    }
    for k in 1..=n {
        let (a, b) = chain.merged_blocks(k);
        let before = &chain.partitions[k - 1];
        let (ma, mb) = (before.blocks[a][0], before.blocks[b][0]);
        let node = format!("m{k}");
        raw.nodes.get_mut(&top[ma]).unwrap().parent = Some(node.clone());
        raw.nodes.get_mut(&top[mb]).unwrap().parent = Some(node.clone());
        raw = raw.node(node.clone(), "", (n + k) as f64);
        top[ma.min(mb)] = node;
    }
    raw.nodes.get_mut(&top[0]).unwrap().parent = Some("r".into());
    raw.validate()
        .expect("a maximal chain describes a valid merge tree")
}

/// Depth-first enumeration of all maximal chains of the partition lattice on
/// `{0,…,n}`; at each step block pairs `(a, b)`, `a < b`, are tried in
/// lexicographic order.
pub fn enumerate_maximal_chains(n: usize) -> MaximalChains {
    MaximalChains {
        stack: vec![(SetPartition::bottom(n), 0)],
    }
}

#[derive(Debug, Clone)]
pub struct MaximalChains {
    stack: Vec<(SetPartition, usize)>,
}

impl Iterator for MaximalChains {
    type Item = MaximalChain;

    fn next(&mut self) -> Option<MaximalChain> {
        loop {
            let (part, next_pair) = self.stack.last_mut()?;
            let k = part.block_count();
            if k == 1 {
                let chain = MaximalChain {
                    partitions: self.stack.iter().map(|(p, _)| p.clone()).collect(),
                };
                self.stack.pop();
                return Some(chain);
            }
            if *next_pair == k * (k - 1) / 2 {
                self.stack.pop();
                continue;
            }
            let (a, b) = nth_pair(k, *next_pair);
            *next_pair += 1;
            let merged = part.merge(a, b);
            self.stack.push((merged, 0));
        }
    }
}

fn nth_pair(k: usize, mut idx: usize) -> (usize, usize) {
    for a in 0..k {
        let row = k - a - 1;
        if idx < row {
            return (a, a + 1 + idx);
        }
        idx -= row;
    }
    unreachable!("pair index in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mergetree::canonical_code;
    use crate::realization::count_combinatorial_merge_trees;
    use num_bigint::BigUint;
    use std::collections::HashSet;

    fn part(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn refines_examples() {
        assert!(refines(&part("0|1|2"), &part("0,1|2")).unwrap());
        assert!(!refines(&part("0,1|2"), &part("0|1,2")).unwrap());
        assert!(!refines(&part("0|1,2"), &part("0,1|2")).unwrap());
        let u = part("0,2|1|3");
        assert!(refines(&u, &u).unwrap());
        assert!(matches!(
            refines(&part("0|1"), &part("0|1|2")),
            Err(PartitionError::GroundMismatch { .. })
        ));
    }

    #[test]
    fn partition_text_format() {
        let p = part("2,1|0");
        assert_eq!(p.to_string(), "0|1,2");
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2]]);
        assert!(matches!(
            "0|0".parse::<SetPartition>(),
            Err(PartitionError::Repeated(0))
        ));
        assert!(matches!(
            "0|2".parse::<SetPartition>(),
            Err(PartitionError::Uncovered(1))
        ));
        assert!("0|x".parse::<SetPartition>().is_err());
    }

    fn n2_tree(first: (usize, usize)) -> MergeTree {
        let lone = (0..3).find(|&i| i != first.0 && i != first.1).unwrap();
        RawMergeTree::new("r")
            .node("top", "r", 4.0)
            .node("m", "top", 3.0)
            .node(format!("l{}", first.0), "m", first.0 as f64)
            .node(format!("l{}", first.1), "m", first.1 as f64)
            .node(format!("l{lone}"), "top", lone as f64)
            .validate()
            .unwrap()
    }

    fn chain(lines: &[&str]) -> MaximalChain {
        MaximalChain::new(lines.iter().map(|l| part(l)).collect()).unwrap()
    }

    #[test]
    fn tree_to_chain_examples() {
        let c = tree_to_chain(&n2_tree((1, 2))).unwrap();
        assert_eq!(c, chain(&["0|1|2", "0|1,2", "0,1,2"]));
        let c = tree_to_chain(&n2_tree((0, 1))).unwrap();
        assert_eq!(c, chain(&["0|1|2", "0,1|2", "0,1,2"]));
        let single = RawMergeTree::new("r")
            .node("a", "r", 0.0)
            .validate()
            .unwrap();
        let c = tree_to_chain(&single).unwrap();
        assert_eq!(c.partitions(), &[part("0")]);
        let shifted = single.translate(1.0);
        assert_eq!(tree_to_chain(&shifted), Err(PartitionError::NotStandard));
    }

    #[test]
    fn chain_to_tree_examples() {
        let t = chain_to_tree(&chain(&["0"]));
        assert_eq!(t.bar_count(), 0);
        let t = chain_to_tree(&chain(&["0|1|2", "0|1,2", "0,1,2"]));
        assert_eq!(canonical_code(&t), canonical_code(&n2_tree((1, 2))));
        assert!(t.is_standard_form());
        for c in enumerate_maximal_chains(2) {
            assert_eq!(tree_to_chain(&chain_to_tree(&c)).unwrap(), c);
        }
    }

    #[test]
    fn malformed_chains_are_rejected() {
        let skip = vec![part("0|1|2"), part("0,1,2")];
        assert_eq!(
            MaximalChain::new(skip),
            Err(PartitionError::NotACover { step: 1 })
        );
        let wrong_end = vec![part("0|1|2"), part("0,1|2")];
        assert_eq!(MaximalChain::new(wrong_end), Err(PartitionError::BadEnds));
        let not_refining = vec![
            part("0|1|2|3"),
            part("0,1|2|3"),
            part("0,2|1,3"),
            part("0,1,2,3"),
        ];
        assert!(matches!(
            MaximalChain::new(not_refining),
            Err(PartitionError::NotACover { step: 2 })
        ));
        assert_eq!(MaximalChain::new(vec![]), Err(PartitionError::EmptyChain));
    }

    #[test]
    fn chain_text_round_trip() {
        let c = chain(&["0|1|2", "0|1,2", "0,1,2"]);
        assert_eq!(c.to_string(), "0|1|2\n0|1,2\n0,1,2\n");
        assert_eq!(c.to_string().parse::<MaximalChain>().unwrap(), c);
    }

    #[test]
    fn chain_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| enumerate_maximal_chains(n).count())
            .collect();
        assert_eq!(counts, [1, 1, 3, 18, 180, 2700]);
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(count_combinatorial_merge_trees(n), BigUint::from(c));
        }
    }

    #[test]
    fn chains_are_distinct_and_round_trip() {
        for n in 0..=4 {
            let chains: Vec<_> = enumerate_maximal_chains(n).collect();
            let distinct: HashSet<_> = chains.iter().cloned().collect();
            assert_eq!(distinct.len(), chains.len());
            for c in &chains {
                assert_eq!(MaximalChain::new(c.partitions().to_vec()).as_ref(), Ok(c));
                let t = chain_to_tree(c);
                assert_eq!(&tree_to_chain(&t).unwrap(), c);
                assert_eq!(chain_to_tree(&tree_to_chain(&t).unwrap()), t);
            }
        }
    }
}
