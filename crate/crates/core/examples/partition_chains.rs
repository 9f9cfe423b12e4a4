//! Maximal chains in the lattice of partitions of {0,…,n} and the merge trees
//! they encode.
//!
//!     cargo run --example partition_chains -- 3

use treecode::mergetree::{canonical_code, elder_rule};
use treecode::partition::{chain_to_tree, enumerate_maximal_chains, tree_to_chain};
use treecode::realization::count_combinatorial_merge_trees;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);

    let chains: Vec<_> = enumerate_maximal_chains(n).collect();
    println!(
        "{} maximal chains for n = {n}; closed form gives {}",
        chains.len(),
        count_combinatorial_merge_trees(n)
    );

    let chain = &chains[chains.len() / 2];
    println!("\na chain:\n{chain}");
    let tree = chain_to_tree(chain);
    println!("its merge tree: {}", serde_json::to_string(&tree)?);
    println!("Elder rule:     {}", elder_rule(&tree));
    assert_eq!(&tree_to_chain(&tree)?, chain);

    let mut codes: Vec<_> = chains
        .iter()
        .map(|c| canonical_code(&chain_to_tree(c)))
        .collect();
    codes.sort();
    codes.dedup();
    println!("\nall {} chains give distinct tree classes", codes.len());
    Ok(())
}
