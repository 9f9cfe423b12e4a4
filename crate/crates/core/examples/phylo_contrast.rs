//! Compares phylogenetic trees, which only see leaf labels and topology, with
//! combinatorial merge trees, which also order the merges in time.
//!
//!     cargo run --example phylo_contrast -- 4

use std::collections::BTreeMap;

use treecode::phylo::{
    all_labelled_trees, count_phylo_classes, eta_brute_force, eta_lower_bound, PhyloTree,
};
use treecode::realization::count_combinatorial_merge_trees;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let leaves: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    println!(
        "{leaves} leaves: {} phylogenetic trees, {} combinatorial merge trees",
        count_phylo_classes(leaves)?,
        count_combinatorial_merge_trees(leaves - 1)
    );

    // Group labelled trees by their unlabelled shape.
    let mut shapes: BTreeMap<String, (usize, String, String)> = BTreeMap::new();
    let mut total = num_bigint::BigUint::default();
    for tree in all_labelled_trees(leaves) {
        let eta = eta_brute_force(&tree)?;
        total += &eta;
        let shape = shape(&tree, tree.root_child());
        let entry = shapes
            .entry(shape)
            .or_insert_with(|| (0, eta.to_string(), eta_lower_bound(&tree).to_string()));
        entry.0 += 1;
    }
    println!(
        "\n{:<32} {:>8} {:>5} {:>6}",
        "shape", "labelled", "η", "bound"
    );
    for (shape, (count, eta, bound)) in &shapes {
        println!("{shape:<32} {count:>8} {eta:>5} {bound:>6}");
    }
    println!("\nΣ η over labelled trees = {total}");
    Ok(())
}

/// Unlabelled shape in Newick-like notation, children sorted.
fn shape(tree: &PhyloTree, v: usize) -> String {
    let mut parts: Vec<String> = tree.nodes()[v]
        .children
        .iter()
        .map(|&c| shape(tree, c))
        .collect();
    if parts.is_empty() {
        return "x".into();
    }
    parts.sort();
    format!("({})", parts.join(","))
}
