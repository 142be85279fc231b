//! Reference implementations, kept deliberately naive: brute-force
//! transversal enumeration and exact rational evaluation of the sufficiency
//! conditions. They share no code with the solvers or the log-domain
//! checkers they are used to test.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cover::{CoverInstance, Transversal};

/// Visit every transversal, mixed radix over base vertices in index order.
/// Stops early when `visit` returns `false`.
pub fn for_each_transversal(inst: &CoverInstance, mut visit: impl FnMut(&Transversal) -> bool) {
    let n = inst.num_base();
    let mut digits = vec![0usize; n];
    loop {
        let t = Transversal::new((0..n).map(|v| inst.part(v)[digits[v]]).collect());
        if !visit(&t) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < inst.part(i).len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// First independent transversal in enumeration order, checked by a direct
/// scan of the cover edge list.
pub fn brute_force_transversal(inst: &CoverInstance) -> Option<Transversal> {
    let mut found = None;
    for_each_transversal(inst, |t| {
        let clash = inst
            .cover_edges()
            .iter()
            .any(|&(x, y)| t.choice[inst.owner(x)] == x && t.choice[inst.owner(y)] == y);
        if clash {
            true
        } else {
            found = Some(t.clone());
            false
        }
    });
    found
}

pub fn brute_force_feasible(inst: &CoverInstance) -> bool {
    brute_force_transversal(inst).is_some()
}

fn q(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational lower and upper bounds on `e` from the truncated series; the
/// gap is below `2/(terms+1)!`.
pub fn e_bounds(terms: u64) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    let mut fact = BigUint::one();
    for n in 0..=terms {
        if n > 0 {
            fact *= n;
        }
        sum += BigRational::new(BigInt::one(), fact.clone().into());
    }
    let tail = BigRational::new(BigInt::from(2), (fact * (terms + 1)).into());
    (sum.clone(), sum + tail)
}

/// Natural log of a positive rational, from its numerator and denominator.
pub fn ln_rational(x: &BigRational) -> f64 {
    assert!(x.is_positive(), "logarithm of a non-positive rational");
    ln_big(x.numer().magnitude()) - ln_big(x.denom().magnitude())
}

fn ln_big(n: &BigUint) -> f64 {
    // Scale into f64 range by hand: keep the top 60 bits.
    let bits = n.bits();
    if bits <= 60 {
        return n.to_f64().expect("small").ln();
    }
    let shift = bits - 60;
    (n >> shift).to_f64().expect("60 bits").ln() + shift as f64 * std::f64::consts::LN_2
}

/// Oracle verdict for one condition: the natural log of the compared value
/// (for conditions 2 and 3 the left-hand side, for condition 1 the ratio
/// `k_B^{k_A-1} / (e k_A D_B D_A^{k_A-1})`) and, when it can be decided
/// exactly, whether the condition holds.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleValue {
    pub ln_value: f64,
    pub holds: Option<bool>,
}

/// Decide `e · x <= 1` using rational bounds on `e`; `None` if the bounds
/// straddle the boundary.
fn decide_times_e(x: &BigRational) -> Option<bool> {
    static E: OnceLock<(BigRational, BigRational)> = OnceLock::new();
    let (lo, hi) = E.get_or_init(|| e_bounds(40));
    let one = BigRational::one();
    if x * hi <= one {
        Some(true)
    } else if x * lo > one {
        Some(false)
    } else {
        None
    }
}

/// Condition 1 rearranged to integers: `k_B^{k_A-1} >= e k_A D_B D_A^{k_A-1}`.
pub fn cond1_exact(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> OracleValue {
    let left = num_traits::pow(BigUint::from(k_b), (k_a - 1) as usize);
    let right = BigUint::from(k_a) * d_b * num_traits::pow(BigUint::from(d_a), (k_a - 1) as usize);
    let x = BigRational::new(left.into(), right.into());
    // ratio / e >= 1  ⇔  e · (1/ratio) <= 1
    let holds = decide_times_e(&x.recip());
    OracleValue { ln_value: ln_rational(&x) - 1.0, holds }
}

fn blocked(k_b: u64, exponent: u64) -> BigRational {
    let miss = BigRational::new(BigInt::from(k_b - 1), BigInt::from(k_b));
    BigRational::one() - num_traits::pow(miss, exponent as usize)
}

/// Condition 2 without the factor `e`, as an exact rational.
pub fn cond2_rational(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> BigRational {
    let count = q(k_a) * q(d_a) * (q(k_b) * q(d_b) - q(1)) + q(1);
    count * num_traits::pow(blocked(k_b, d_a), k_a as usize)
}

pub fn cond2_exact(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> OracleValue {
    let x = cond2_rational(k_a, k_b, d_a, d_b);
    let holds = decide_times_e(&x);
    let ln_value = if x.is_zero() { f64::NEG_INFINITY } else { 1.0 + ln_rational(&x) };
    OracleValue { ln_value, holds }
}

/// Condition 3. With `k_B >= k_A` the exponent `Δ_A` is an integer and the
/// value is rational. Otherwise the exponent is `Δ_A k_B / k_A`; the
/// rational `(1-1/k_B)^{Δ_A k_B}` is formed exactly and its `k_A`-th root
/// taken in floating point, and `holds` is left undecided.
pub fn cond3_exact(k_a: u64, k_b: u64, delta_a: u64, delta_b: u64) -> OracleValue {
    let count = q(delta_a) * (q(delta_b) - q(1)) + q(1);
    if k_b >= k_a {
        let x = count * num_traits::pow(blocked(k_b, delta_a), k_a as usize);
        let holds = decide_times_e(&x);
        let ln_value = if x.is_zero() { f64::NEG_INFINITY } else { 1.0 + ln_rational(&x) };
        return OracleValue { ln_value, holds };
    }
    let miss = BigRational::new(BigInt::from(k_b - 1), BigInt::from(k_b));
    let ln_value = if k_b == 1 {
        1.0 + ln_rational(&count)
    } else {
        let power = num_traits::pow(miss, (delta_a * k_b) as usize);
        let root = (ln_rational(&power) / k_a as f64).exp();
        1.0 + ln_rational(&count) + k_a as f64 * (1.0 - root).ln()
    };
    OracleValue { ln_value, holds: None }
}
