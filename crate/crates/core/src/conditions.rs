//! Sufficient conditions for an independent transversal.
//!
//! Every checker is a pure function of integer (and occasionally real)
//! parameters. Comparisons happen between natural logarithms, with integer
//! count terms evaluated exactly before the logarithm is taken. Ties within
//! [`TOLERANCE`] count as holding because all inequalities are non-strict.
//!
//! "log" in the asymptotic thresholds is the natural logarithm; `log_4` is
//! `ln / ln 4`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use thiserror::Error;

use crate::cover::DegreeProfile;

/// Absolute tolerance on log-domain comparisons.
pub const TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConditionId {
    Cond1,
    Cond2,
    Cond3,
    Local,
    CorSymmetric,
    CorAsymLog4,
    CorAsymStar,
    Prop8Lower,
    Prop8Upper,
}

/// Direction of the compared quantities: `lhs <= rhs` or `lhs >= rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Param {
    Int(u64),
    Real(f64),
    Exact(BigRational),
    Text(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub holds: bool,
    pub relation: Relation,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub inputs: BTreeMap<String, Param>,
    pub details: BTreeMap<String, Param>,
    pub notes: Vec<String>,
}

impl ConditionReport {
    fn new(condition: ConditionId, relation: Relation, lhs_log: f64, rhs_log: f64) -> Self {
        let holds = match relation {
            Relation::AtMost => lhs_log <= rhs_log + TOLERANCE,
            Relation::AtLeast => lhs_log >= rhs_log - TOLERANCE,
        };
        ConditionReport {
            condition,
            holds,
            relation,
            lhs_log,
            rhs_log,
            inputs: BTreeMap::new(),
            details: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn input(mut self, name: &str, value: Param) -> Self {
        self.inputs.insert(name.to_string(), value);
        self
    }

    fn detail(mut self, name: &str, value: Param) -> Self {
        self.details.insert(name.to_string(), value);
        self
    }

    fn note(mut self, text: &str) -> Self {
        self.notes.push(text.to_string());
        self
    }

    /// `lhs - rhs` in the log domain, oriented so that positive means "fails"
    /// for `<=` and "holds" for `>=`.
    pub fn margin(&self) -> f64 {
        self.lhs_log - self.rhs_log
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

fn positive(name: &str, value: u64) -> Result<(), ConditionError> {
    if value == 0 {
        Err(ConditionError::InvalidParameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Natural log of an arbitrary-size integer.
pub fn ln_biguint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map_or(f64::INFINITY, f64::ln);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().expect("64-bit value fits in f64");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

fn ln_u64(n: u64) -> f64 {
    (n as f64).ln()
}

/// `ln(1 - (1 - 1/k_b)^exponent)`, the log of the probability that a cover
/// vertex with `exponent` neighbouring parts of size `k_b` is blocked.
pub fn ln_block_probability(k_b: u64, exponent: f64) -> f64 {
    if k_b == 1 {
        return 0.0;
    }
    let ln_q = exponent * (-1.0 / k_b as f64).ln_1p();
    (-ln_q.exp_m1()).ln()
}

/// `k_B >= (e k_A D_B)^{1/(k_A-1)} D_A`.
pub fn cond_transversals(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> Result<ConditionReport, ConditionError> {
    if k_a < 2 {
        return Err(ConditionError::InvalidParameter("k_A must be at least 2".into()));
    }
    positive("k_B", k_b)?;
    positive("D_A", d_a)?;
    positive("D_B", d_b)?;
    let lhs = ln_u64(k_b);
    let rhs = ln_u64(d_a) + (1.0 + ln_u64(k_a) + ln_u64(d_b)) / (k_a - 1) as f64;
    Ok(ConditionReport::new(ConditionId::Cond1, Relation::AtLeast, lhs, rhs)
        .input("k_A", Param::Int(k_a))
        .input("k_B", Param::Int(k_b))
        .input("D_A", Param::Int(d_a))
        .input("D_B", Param::Int(d_b)))
}

/// Dependency count `k_A D_A (k_B D_B - 1) + 1` as an exact integer.
pub fn coupon_count(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> BigUint {
    let kd_b = BigUint::from(k_b) * d_b;
    BigUint::from(k_a) * d_a * (kd_b - 1u32) + 1u32
}

/// `e (k_A D_A (k_B D_B - 1) + 1) (1 - (1 - 1/k_B)^{D_A})^{k_A} <= 1`.
pub fn cond_coupon(k_a: u64, k_b: u64, d_a: u64, d_b: u64) -> Result<ConditionReport, ConditionError> {
    positive("k_A", k_a)?;
    positive("k_B", k_b)?;
    positive("D_A", d_a)?;
    positive("D_B", d_b)?;
    let count = coupon_count(k_a, k_b, d_a, d_b);
    let lhs = 1.0 + ln_biguint(&count) + k_a as f64 * ln_block_probability(k_b, d_a as f64);
    Ok(ConditionReport::new(ConditionId::Cond2, Relation::AtMost, lhs, 0.0)
        .input("k_A", Param::Int(k_a))
        .input("k_B", Param::Int(k_b))
        .input("D_A", Param::Int(d_a))
        .input("D_B", Param::Int(d_b))
        .detail("dependency_count_plus_one", Param::Exact(BigRational::from_integer(count.into())))
        .detail("value", Param::Real(lhs.exp())))
}

/// `e (Δ_A(Δ_B - 1) + 1) (1 - (1 - 1/k_B)^{Δ_A min(1, k_B/k_A)})^{k_A} <= 1`.
pub fn cond_coupon_dp(k_a: u64, k_b: u64, delta_a: u64, delta_b: u64) -> Result<ConditionReport, ConditionError> {
    positive("k_A", k_a)?;
    positive("k_B", k_b)?;
    positive("Delta_A", delta_a)?;
    positive("Delta_B", delta_b)?;
    let count = BigUint::from(delta_a) * (delta_b - 1) + 1u32;
    let exponent = if k_b >= k_a {
        delta_a as f64
    } else {
        delta_a as f64 * k_b as f64 / k_a as f64
    };
    let lhs = 1.0 + ln_biguint(&count) + k_a as f64 * ln_block_probability(k_b, exponent);
    Ok(ConditionReport::new(ConditionId::Cond3, Relation::AtMost, lhs, 0.0)
        .input("k_A", Param::Int(k_a))
        .input("k_B", Param::Int(k_b))
        .input("Delta_A", Param::Int(delta_a))
        .input("Delta_B", Param::Int(delta_b))
        .detail("exponent", Param::Real(exponent))
        .detail("value", Param::Real(lhs.exp())))
}

/// Evaluate all three conditions, with sides as given and with A and B
/// exchanged, against the parameters read off an instance.
pub fn check_profile(profile: &DegreeProfile) -> Vec<ConditionReport> {
    let p = [
        profile.k_a as u64,
        profile.k_b as u64,
        profile.d_a as u64,
        profile.d_b as u64,
        profile.delta_a as u64,
        profile.delta_b as u64,
    ];
    let [k_a, k_b, d_a, d_b, delta_a, delta_b] = p;
    let mut out = Vec::new();
    for (swapped, (ka, kb, da, db, xa, xb)) in [
        (false, (k_a, k_b, d_a, d_b, delta_a, delta_b)),
        (true, (k_b, k_a, d_b, d_a, delta_b, delta_a)),
    ] {
        // Degree zero means the side imposes no constraint; one is the
        // smallest bound the formulas accept.
        let (da, db, xa, xb) = (da.max(1), db.max(1), xa.max(1), xb.max(1));
        let tag = |r: ConditionReport| r.detail("sides_exchanged", Param::Text(swapped.to_string()));
        if let Ok(r) = cond_transversals(ka, kb, da, db) {
            out.push(tag(r));
        }
        if let Ok(r) = cond_coupon(ka, kb, da, db) {
            out.push(tag(r));
        }
        if let Ok(r) = cond_coupon_dp(ka, kb, xa, xb) {
            out.push(tag(r));
        }
    }
    out
}

/// `⌈(1+ε) d / ln d⌉`.
pub fn symmetric_threshold(d: u64, epsilon: f64) -> u64 {
    ((1.0 + epsilon) * d as f64 / (d as f64).ln()).ceil() as u64
}

fn check_epsilon(epsilon: f64) -> Result<(), ConditionError> {
    if epsilon.is_finite() && epsilon > 0.0 {
        Ok(())
    } else {
        Err(ConditionError::InvalidParameter("epsilon must be a positive real".into()))
    }
}

/// Case split used for unequal cover degrees: after ordering the sides so
/// that `D_B >= D_A`, condition 1 is invoked when `D_B >= D_A^2` and
/// condition 2 otherwise. Part sizes default to the symmetric thresholds.
///
/// Sufficiency is certified only when the invoked exact condition holds.
pub fn local_sufficient(
    d_a: u64,
    d_b: u64,
    epsilon: f64,
    k_a: Option<u64>,
    k_b: Option<u64>,
) -> Result<ConditionReport, ConditionError> {
    if d_a < 2 || d_b < 2 {
        return Err(ConditionError::InvalidParameter("D_A and D_B must be at least 2".into()));
    }
    check_epsilon(epsilon)?;
    let threshold_a = symmetric_threshold(d_a, epsilon);
    let threshold_b = symmetric_threshold(d_b, epsilon);
    let mut k_a = k_a.unwrap_or(threshold_a);
    let mut k_b = k_b.unwrap_or(threshold_b);
    let (mut lo, mut hi) = (d_a, d_b);
    let swapped = d_b < d_a;
    if swapped {
        std::mem::swap(&mut lo, &mut hi);
        std::mem::swap(&mut k_a, &mut k_b);
    }
    let first_branch = (hi as u128) >= (lo as u128) * (lo as u128);
    let (branch, invoked) = if first_branch {
        ("COND1", cond_transversals(k_a, k_b, lo, hi))
    } else {
        ("COND2", cond_coupon(k_a, k_b, lo, hi))
    };
    let mut report = match invoked {
        Ok(r) => {
            let mut r2 = ConditionReport::new(ConditionId::Local, r.relation, r.lhs_log, r.rhs_log);
            r2.holds = r.holds;
            r2
        }
        Err(e) => ConditionReport {
            holds: false,
            ..ConditionReport::new(ConditionId::Local, Relation::AtLeast, f64::NAN, f64::NAN)
        }
        .note(&format!("invoked condition not applicable: {e}")),
    };
    report = report
        .input("D_A", Param::Int(d_a))
        .input("D_B", Param::Int(d_b))
        .input("epsilon", Param::Real(epsilon))
        .detail("branch", Param::Text(branch.into()))
        .detail("sides_exchanged", Param::Text(swapped.to_string()))
        .detail("k_A_used", Param::Int(k_a))
        .detail("k_B_used", Param::Int(k_b))
        .detail("threshold_A", Param::Int(threshold_a))
        .detail("threshold_B", Param::Int(threshold_b))
        .note("thresholds use the natural logarithm");
    Ok(report)
}

/// Advisory: `k >= (1+ε) D / ln D`. Only asymptotically sufficient.
pub fn cor_symmetric(d: u64, epsilon: f64, k: u64) -> Result<ConditionReport, ConditionError> {
    if d < 2 {
        return Err(ConditionError::InvalidParameter("D must be at least 2".into()));
    }
    check_epsilon(epsilon)?;
    positive("k", k)?;
    let rhs = (1.0 + epsilon).ln() + ln_u64(d) - (d as f64).ln().ln();
    Ok(ConditionReport::new(ConditionId::CorSymmetric, Relation::AtLeast, ln_u64(k), rhs)
        .input("D", Param::Int(d))
        .input("epsilon", Param::Real(epsilon))
        .input("k", Param::Int(k))
        .detail("threshold", Param::Int(symmetric_threshold(d, epsilon)))
        .note("asymptotic statement: holds only certifies sufficiency for D beyond an unspecified D_0")
        .note("natural logarithm"))
}

/// Advisory: `k_A >= (1+ε) Δ / log_4 Δ` together with `k_B >= 2`.
pub fn cor_asym_log4(delta: u64, epsilon: f64, k_a: u64, k_b: u64) -> Result<ConditionReport, ConditionError> {
    if delta < 2 {
        return Err(ConditionError::InvalidParameter("Delta must be at least 2".into()));
    }
    check_epsilon(epsilon)?;
    positive("k_A", k_a)?;
    positive("k_B", k_b)?;
    let log4 = (delta as f64).ln() / 4f64.ln();
    let rhs = (1.0 + epsilon).ln() + ln_u64(delta) - log4.ln();
    let mut r = ConditionReport::new(ConditionId::CorAsymLog4, Relation::AtLeast, ln_u64(k_a), rhs)
        .input("Delta", Param::Int(delta))
        .input("epsilon", Param::Real(epsilon))
        .input("k_A", Param::Int(k_a))
        .input("k_B", Param::Int(k_b))
        .detail("threshold_A", Param::Int(((1.0 + epsilon) * delta as f64 / log4).ceil() as u64))
        .note("asymptotic statement: holds only certifies sufficiency for Delta beyond an unspecified Delta_0");
    if k_b < 2 {
        r.holds = false;
        r = r.note("k_B must be at least 2");
    }
    Ok(r)
}

/// `D_A <= 1` and `D_B <= k^{k-2}/e` with all parts of size at least `k`.
/// This is condition 1 specialised to `k_A = k_B = k`, so it is exact.
pub fn cor_star(k: u64, d_a: u64, d_b: u64) -> Result<ConditionReport, ConditionError> {
    if k < 2 {
        return Err(ConditionError::InvalidParameter("k must be at least 2".into()));
    }
    positive("D_B", d_b)?;
    let rhs = (k - 2) as f64 * ln_u64(k) - 1.0;
    let mut r = ConditionReport::new(ConditionId::CorAsymStar, Relation::AtMost, ln_u64(d_b), rhs)
        .input("k", Param::Int(k))
        .input("D_A", Param::Int(d_a))
        .input("D_B", Param::Int(d_b));
    if d_a > 1 {
        r.holds = false;
        r = r.note("requires D_A <= 1");
    }
    Ok(r)
}

/// Bounds on the number of A-vertices of `K_{|A|,k}` around `χ_DP = k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Prop8Bounds {
    pub k: u64,
    /// `k^k / k!`: fewer A-vertices guarantees `χ_DP <= k`.
    pub lower: BigRational,
    /// `(k^{k+1} / k!) ln k`: at least this many forces `χ_DP > k`.
    pub upper: f64,
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn prop8_bounds(k: u64) -> Result<Prop8Bounds, ConditionError> {
    if k < 2 {
        return Err(ConditionError::InvalidParameter("k must be at least 2".into()));
    }
    let kk = BigUint::from(k).pow(k as u32);
    let fact = factorial(k);
    let lower = BigRational::new(kk.clone().into(), fact.clone().into());
    let upper = (ln_biguint(&(kk * k)) - ln_biguint(&fact)).exp() * ln_u64(k);
    Ok(Prop8Bounds { k, lower, upper })
}

/// Reports for a concrete `|A|`: `PROP8_LOWER` holds when `|A| < k^k/k!`,
/// `PROP8_UPPER` when `|A| >= (k^{k+1}/k!) ln k`.
pub fn prop8_reports(k: u64, a_size: u64) -> Result<[ConditionReport; 2], ConditionError> {
    let b = prop8_bounds(k)?;
    positive("a_size", a_size)?;
    let lower_ln = b.lower.to_f64().unwrap_or(f64::INFINITY).ln();
    let mut lower = ConditionReport::new(ConditionId::Prop8Lower, Relation::AtMost, ln_u64(a_size), lower_ln);
    // strict inequality, decided exactly
    lower.holds = BigRational::from_integer(a_size.into()) < b.lower;
    let upper = ConditionReport::new(ConditionId::Prop8Upper, Relation::AtLeast, ln_u64(a_size), b.upper.ln());
    let tag = |r: ConditionReport| {
        r.input("k", Param::Int(k))
            .input("a_size", Param::Int(a_size))
            .detail("lower", Param::Exact(b.lower.clone()))
            .detail("upper", Param::Real(b.upper))
    };
    Ok([tag(lower).note("strict: |A| < k^k/k!"), tag(upper)])
}
