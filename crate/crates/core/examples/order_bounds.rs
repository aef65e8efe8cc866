//! Feasible orders for small n, and the J(m) table.
//!
//!     cargo run --example order_bounds -- 40

use kgpart::{j_bound, lower_bound, order_range};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max n must be an integer"))
        .unwrap_or(30);

    println!("m  lower  J(m)");
    for m in 1..=8 {
        println!("{m:<2} {:<6} {}", lower_bound(m), j_bound(m));
    }
    println!();
    for n in 1..=max_n {
        let orders = order_range(n);
        if orders.is_empty() {
            println!("n = {n:>3}: impossible");
        } else {
            println!("n = {n:>3}: orders {orders:?}");
        }
    }
}
