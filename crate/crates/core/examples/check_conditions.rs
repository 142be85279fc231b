//! Evaluate the sufficient conditions for a few parameter sets.

use transversal_lab::conditions::{cond_coupon, cond_coupon_dp, cond_transversals, cor_symmetric, local_sufficient, symmetric_threshold};

fn main() {
    for (k_a, k_b, d_a, d_b) in [(10, 10, 2, 2), (3, 3, 1, 1), (4, 40, 3, 3), (2, 2, 2, 2)] {
        let c1 = cond_transversals(k_a, k_b, d_a, d_b).unwrap();
        let c2 = cond_coupon(k_a, k_b, d_a, d_b).unwrap();
        let c3 = cond_coupon_dp(k_a, k_b, d_a, d_b).unwrap();
        println!("kA={k_a} kB={k_b} dA={d_a} dB={d_b}: cond1 {} cond2 {} cond3 {}", c1.holds, c2.holds, c3.holds);
    }

    for d in [10, 1000, 1_000_000] {
        println!("d={d} eps=0.1 threshold {}", symmetric_threshold(d, 0.1));
    }
    let r = cor_symmetric(1000, 0.1, symmetric_threshold(1000, 0.1)).unwrap();
    println!("symmetric corollary at threshold: {} (margin {:.3})", r.holds, r.margin());

    let r = local_sufficient(100, 10_001, 0.5, None, None).unwrap();
    println!("local rule for dA=100 dB=10001 -> {:?} holds {}", r.details.get("branch"), r.holds);
}
