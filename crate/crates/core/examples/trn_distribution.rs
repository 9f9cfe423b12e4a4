//! The exact distribution of the realization number over S_n and its
//! moments.
//!
//!     cargo run --release --example trn_distribution -- 6

use treecode::stats::{kth_moment, mean, second_moment, trn_distribution, variance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(6);
    let dist = trn_distribution(n)?;

    println!(
        "π_{n}: {} support points, denominator {}!",
        dist.support_size(),
        n
    );
    for (x, m) in dist.multiplicities().take(12) {
        println!("  P(R = {x:>4}) = {m}/{}", dist.total());
    }
    if dist.support_size() > 12 {
        println!("  …");
    }
    println!("mean           {}", mean(n));
    println!("second moment  {}", second_moment(n));
    println!("variance       {}", variance(n));
    for k in 3..=4 {
        println!("E(R^{k})         {}", kth_moment(n, k));
    }
    assert_eq!(dist.moment(1), mean(n));
    Ok(())
}
