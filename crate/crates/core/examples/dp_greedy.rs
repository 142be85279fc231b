//! Greedy matching systems on K_{a,k} and the counting direction for small k.

use transversal_lab::conditions::prop8_bounds;
use transversal_lab::constructions::{build_prop8_greedy, verify_counting_direction};
use transversal_lab::solvers::solve_exact;

fn main() {
    for k in 2..=3 {
        let b = prop8_bounds(k as u64).unwrap();
        let a_size = b.upper.ceil() as usize;
        let (c, trace) = build_prop8_greedy(k, a_size, false).unwrap();
        let out = solve_exact(&c.instance, 10_000_000);
        println!(
            "k={k}: lower {} upper {:.2}, greedy with |A|={a_size}: remaining {:?}, solver {}",
            b.lower,
            b.upper,
            trace.remaining,
            out.status.as_str()
        );
    }
    for a in 1..=4 {
        println!("k=3 |A|={a}: {:?}", verify_counting_direction(3, a, 1_000_000).unwrap());
    }
}
