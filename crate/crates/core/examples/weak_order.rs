//! Walks the left weak order on S_n and shows the realization number growing
//! along every covering relation.
//!
//!     cargo run --example weak_order -- 4

use treecode::perm::{covering_pairs, left_inversion_vector, word_length, Permutation};
use treecode::realization::trn;

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);

    let mut covers = 0;
    for pair in covering_pairs(n) {
        assert!(trn(&pair.lower) < trn(&pair.upper));
        covers += 1;
    }
    println!("S_{n}: {covers} covering pairs, R strictly increasing on all of them");

    // One maximal chain: repeatedly apply the first adjacent transposition
    // that lengthens the permutation.
    let mut sigma = Permutation::identity(n);
    loop {
        println!(
            "  len {:>2}  {:<14} l = {:<14} R = {}",
            word_length(&sigma),
            sigma.to_string(),
            left_inversion_vector(&sigma).to_string(),
            trn(&sigma)
        );
        let next = (1..n)
            .map(|i| sigma.left_transpose(i).unwrap())
            .find(|t| word_length(t) == word_length(&sigma) + 1);
        match next {
            Some(t) => sigma = t,
            None => break,
        }
    }
    assert_eq!(sigma, Permutation::reversal(n));
}
