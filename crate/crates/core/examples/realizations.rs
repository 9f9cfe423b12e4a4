//! Lists every combinatorial merge tree whose barcode is the standard
//! barcode of a permutation, and checks the count against the product of
//! the inversion vector.
//!
//!     cargo run --example realizations -- 3,1,4,2

use std::collections::HashSet;

use treecode::barcode::standard_barcode;
use treecode::mergetree::{canonical_code, elder_rule};
use treecode::perm::{left_inversion_vector, Permutation};
use treecode::realization::{enumerate_realizations, trn};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sigma: Permutation = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "3,1,4,2".into())
        .parse()?;
    let barcode = standard_barcode(&sigma);
    println!("σ = {sigma}, l(σ) = {}", left_inversion_vector(&sigma));
    println!("B(σ) = {barcode}");

    let mut codes = HashSet::new();
    for (k, tree) in enumerate_realizations(&barcode).enumerate() {
        assert_eq!(elder_rule(&tree), barcode);
        let code = canonical_code(&tree);
        let parents: Vec<String> = tree
            .leaves()
            .iter()
            .map(|&v| format!("{}→{}", tree.name(v), tree.name(tree.parent(v).unwrap())))
            .collect();
        println!("  #{k:<3} {}", parents.join("  "));
        codes.insert(code);
    }
    println!("{} distinct trees, R(σ) = {}", codes.len(), trn(&sigma));
    Ok(())
}
