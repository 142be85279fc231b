use proptest::prelude::*;
use transversal_lab::conditions::{
    cond_coupon, cond_coupon_dp, cond_transversals, local_sufficient, prop8_bounds, symmetric_threshold, Param,
};
use transversal_lab::oracle::{cond1_exact, cond2_exact, cond3_exact};

fn grid() -> impl Iterator<Item = [u64; 4]> {
    (1..=20u64).flat_map(|a| (1..=20u64).flat_map(move |b| (1..=20u64).flat_map(move |c| (1..=20u64).map(move |d| [a, b, c, d]))))
}

fn coupon(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> bool {
    cond_coupon(k_a, k_b, d_a, d_b).unwrap().holds
}

#[test]
fn coupon_condition_is_monotone_in_part_sizes() {
    for [k_a, k_b, d_a, d_b] in grid() {
        if k_b == 1 || !coupon(k_a, k_b, d_a, d_b) {
            continue;
        }
        if k_a < 20 {
            assert!(coupon(k_a + 1, k_b, d_a, d_b), "k_A step at {:?}", [k_a, k_b, d_a, d_b]);
        }
        if k_b < 20 {
            assert!(coupon(k_a, k_b + 1, d_a, d_b), "k_B step at {:?}", [k_a, k_b, d_a, d_b]);
        }
    }
}

#[test]
fn coupon_implies_coupon_dp_when_degrees_coincide() {
    for [k_a, k_b, d_a, d_b] in grid() {
        if k_b < k_a || !coupon(k_a, k_b, d_a, d_b) {
            continue;
        }
        assert!(cond_coupon_dp(k_a, k_b, d_a, d_b).unwrap().holds, "at {:?}", [k_a, k_b, d_a, d_b]);
    }
}

/// Bits of the denominator of the exact value: `k_B^{D_A k_A}`.
fn fits_256_bits(k_a: u64, k_b: u64, d_a: u64) -> bool {
    (d_a * k_a) as f64 * (k_b as f64).log2() <= 256.0
}

#[test]
fn log_domain_agrees_with_exact_rationals() {
    let mut compared = 0;
    for [k_a, k_b, d_a, d_b] in grid() {
        if !fits_256_bits(k_a, k_b, d_a) || !fits_256_bits(k_a, k_b, d_b) {
            continue;
        }
        compared += 1;
        let r = cond_coupon(k_a, k_b, d_a, d_b).unwrap();
        let o = cond2_exact(k_a, k_b, d_a, d_b);
        assert!((r.lhs_log - o.ln_value).exp_m1().abs() < 1e-9, "COND2 at {:?}", [k_a, k_b, d_a, d_b]);
        if let Some(h) = o.holds {
            assert_eq!(r.holds, h);
        }
        if k_b >= k_a {
            let r = cond_coupon_dp(k_a, k_b, d_a, d_b).unwrap();
            let o = cond3_exact(k_a, k_b, d_a, d_b);
            assert!((r.lhs_log - o.ln_value).exp_m1().abs() < 1e-9, "COND3 at {:?}", [k_a, k_b, d_a, d_b]);
            assert_eq!(Some(r.holds), o.holds);
        }
        if k_a >= 2 {
            let r = cond_transversals(k_a, k_b, d_a, d_b).unwrap();
            let o = cond1_exact(k_a, k_b, d_a, d_b);
            let ln_ratio = (k_a - 1) as f64 * (r.lhs_log - r.rhs_log);
            assert!((ln_ratio - o.ln_value).exp_m1().abs() < 1e-9, "COND1 at {:?}", [k_a, k_b, d_a, d_b]);
            if let Some(h) = o.holds {
                assert_eq!(r.holds, h, "COND1 verdict at {:?}", [k_a, k_b, d_a, d_b]);
            }
        }
    }
    assert!(compared > 10_000);
}

#[test]
fn fractional_exponent_values_track_the_oracle() {
    for [k_a, k_b, d_a, d_b] in grid().filter(|p| p[1] < p[0]) {
        let r = cond_coupon_dp(k_a, k_b, d_a, d_b).unwrap();
        let o = cond3_exact(k_a, k_b, d_a, d_b);
        assert!((r.lhs_log - o.ln_value).abs() < 1e-9 * o.ln_value.abs().max(1.0), "at {:?}", [k_a, k_b, d_a, d_b]);
    }
}

#[test]
fn invalid_parameters_are_rejected() {
    assert!(cond_transversals(1, 5, 1, 1).is_err());
    assert!(cond_coupon(0, 5, 1, 1).is_err());
    assert!(cond_coupon_dp(1, 1, 0, 1).is_err());
    assert!(local_sufficient(1, 5, 0.5, None, None).is_err());
    assert!(local_sufficient(5, 5, 0.0, None, None).is_err());
    assert!(prop8_bounds(1).is_err());
}

fn branch(r: &transversal_lab::conditions::ConditionReport) -> String {
    match &r.details["branch"] {
        Param::Text(s) => s.clone(),
        other => panic!("branch is {other:?}"),
    }
}

proptest! {
    #[test]
    fn local_branch_follows_the_square_rule(d_a in 2u64..5000, d_b in 2u64..5000, eps in 0.01f64..2.0) {
        let r = local_sufficient(d_a, d_b, eps, None, None).unwrap();
        let (lo, hi) = (d_a.min(d_b), d_a.max(d_b));
        let expected = if hi >= lo * lo { "COND1" } else { "COND2" };
        prop_assert_eq!(branch(&r), expected);
        // symmetric in the two sides
        let s = local_sufficient(d_b, d_a, eps, None, None).unwrap();
        prop_assert_eq!(s.holds, r.holds);
    }

    #[test]
    fn threshold_is_the_ceiling(d in 2u64..10_000_000, eps in 0.001f64..3.0) {
        let t = symmetric_threshold(d, eps) as f64;
        let x = (1.0 + eps) * d as f64 / (d as f64).ln();
        prop_assert!(t >= x && t < x + 1.0);
    }
}
