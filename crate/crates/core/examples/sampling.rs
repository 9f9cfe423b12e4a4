//! Random strict barcodes and the permutation types they induce. The
//! separated scheme is uniform on S_n; the conditioned one is not.
//!
//!     cargo run --release --example sampling -- 3 60000

use treecode::perm::Permutation;
use treecode::stats::{chi_square_uniform, pushforward_histogram, BarcodeSampler};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);
    let trials: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(60_000);
    let jobs = std::thread::available_parallelism().map_or(1, |j| j.get());

    for (name, sampler) in [
        ("separated", BarcodeSampler::separated(2024)),
        ("conditioned", BarcodeSampler::conditioned(2024)),
    ] {
        let hist = pushforward_histogram(&sampler, n, trials, jobs)?;
        let test = chi_square_uniform(&hist, n);
        println!(
            "{name}: χ² = {:.1} on {} d.o.f., p = {:.3e}",
            test.statistic, test.degrees_of_freedom, test.p_value
        );
        if n <= 4 {
            for sigma in Permutation::all(n) {
                let c = hist.get(&sigma).copied().unwrap_or(0);
                println!("  {sigma:<10} {:.4}", c as f64 / trials as f64);
            }
        }
    }
    Ok(())
}
