//! Straight-line paths between barcodes of the same permutation type stay
//! inside that type, so each type is a convex region of barcode space.
//!
//!     cargo run --example barcode_paths

use treecode::barcode::{add, interpolate, permutation_type, scale, StrictBarcode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = StrictBarcode::new(0.0, [(1.0, 7.0), (2.0, 5.0), (3.0, 6.0)])?;
    let b = StrictBarcode::new(-2.0, [(0.5, 30.0), (8.0, 11.0), (9.0, 20.0)])?;
    println!("a = {a}  type {}", permutation_type(&a));
    println!("b = {b}  type {}", permutation_type(&b));
    for k in 0..=4 {
        let t = k as f64 / 4.0;
        let c = interpolate(&a, &b, t)?;
        println!("t = {t:.2}  {c}  type {}", permutation_type(&c));
    }

    println!("2·a = {}", scale(&a, 2.0)?);
    println!("a + b strict: {}", add(&a, &b)?.is_strict());

    let other = StrictBarcode::new(0.0, [(1.0, 5.0), (2.0, 7.0), (3.0, 6.0)])?;
    println!(
        "mixing types: {}",
        interpolate(&a, &other, 0.5).unwrap_err()
    );
    Ok(())
}
