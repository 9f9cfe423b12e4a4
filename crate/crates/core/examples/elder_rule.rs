//! Builds a small merge tree by hand, reduces it to a barcode with the Elder
//! rule and reads off the permutation type and realization number.
//!
//!     cargo run --example elder_rule

use treecode::barcode::{barcode_inversion_vector, permutation_type};
use treecode::mergetree::{canonical_code, elder_rule, standardize, RawMergeTree};
use treecode::realization::trn_of_barcode;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Four leaves. The youngest leaf `d` merges into `c` first, then `b`
    // joins the oldest leaf `a`, and finally the two components meet.
    let tree = RawMergeTree::new("root")
        .node("a", "ab", 0.0)
        .node("b", "ab", 1.5)
        .node("c", "cd", 2.25)
        .node("d", "cd", 3.0)
        .node("cd", "top", 4.5)
        .node("ab", "top", 7.0)
        .node("top", "root", 9.0)
        .validate()?;

    let barcode = elder_rule(&tree);
    println!("barcode           {barcode}");
    println!("permutation type  {}", permutation_type(&barcode));
    println!("inversion vector  {}", barcode_inversion_vector(&barcode));
    println!("realizations      {}", trn_of_barcode(&barcode));

    let standard = standardize(&tree);
    println!("standard form     {}", serde_json::to_string(&standard)?);
    println!("canonical code    {:?}", canonical_code(&tree));
    assert_eq!(canonical_code(&tree), canonical_code(&standard));
    Ok(())
}
