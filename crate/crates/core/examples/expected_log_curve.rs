//! Plot data for the expected log realization number of a uniformly random
//! permutation type, next to the Jensen bound log E(R).
//!
//!     cargo run --example expected_log_curve -- 500 > curve.csv

use num_traits::ToPrimitive;
use treecode::stats::{expected_log_trn, mean};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(500);
    println!("n,expected_log,log_mean");
    for n in 1..=max {
        let m = mean(n);
        // ln(p/q) without converting huge integers to f64
        let log_mean = ln_big(m.numer()) - ln_big(m.denom());
        let e = expected_log_trn(n);
        assert!(e <= log_mean + 1e-9);
        println!("{n},{e},{log_mean}");
    }
}

fn ln_big(x: &num_bigint::BigInt) -> f64 {
    let bits = x.bits();
    let shift = bits.saturating_sub(60);
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
