//! Bound values against a 256-bit floating-point evaluation of the closed
//! forms.

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigUint;
use proptest::prelude::*;

use kroncover::bounds::{
    bound_check, bound_leq, f_bound, factorial, g_bound, h_bound, stirling_log2_factorial_upper,
    BoundValue, HTable, Verdict,
};

const P: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

struct Oracle {
    cc: Consts,
}

impl Oracle {
    fn new() -> Self {
        Self {
            cc: Consts::new().unwrap(),
        }
    }

    fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, P)
    }

    fn log2(&mut self, x: &BigFloat) -> BigFloat {
        x.log2(P, RM, &mut self.cc)
    }

    /// `2 (log2 m)^2 log2 log2 m`.
    fn exponent(&mut self, log2_m: &BigFloat) -> BigFloat {
        let ll = self.log2(log2_m);
        self.num(2.0)
            .mul(log2_m, P, RM)
            .mul(log2_m, P, RM)
            .mul(&ll, P, RM)
    }

    /// `log2 Gamma(t + 1)` from the Stirling series with two correction terms.
    fn log2_gamma1(&mut self, t: &BigFloat) -> BigFloat {
        let ln_t = t.ln(P, RM, &mut self.cc);
        let pi = self.cc.pi(P, RM);
        let two_pi_t = self.num(2.0).mul(&pi, P, RM).mul(t, P, RM);
        let half_ln = two_pi_t.ln(P, RM, &mut self.cc).div(&self.num(2.0), P, RM);
        let c1 = self.num(1.0).div(&self.num(12.0).mul(t, P, RM), P, RM);
        let t3 = t.mul(t, P, RM).mul(t, P, RM);
        let c3 = self.num(1.0).div(&self.num(360.0).mul(&t3, P, RM), P, RM);
        let ln_g = t
            .mul(&ln_t, P, RM)
            .sub(t, P, RM)
            .add(&half_ln, P, RM)
            .add(&c1, P, RM)
            .sub(&c3, P, RM);
        ln_g.div(&self.cc.ln_2(P, RM), P, RM)
    }
}

/// `ours` bounds `truth` from above with relative slack at most `rel`.
fn tight_upper(ours: f64, truth: &BigFloat, rel: f64) -> bool {
    let o = BigFloat::from_f64(ours, P);
    let hi = truth.mul(&BigFloat::from_f64(1.0 + rel, P), P, RM);
    matches!(o.cmp(truth), Some(c) if c >= 0) && matches!(o.cmp(&hi), Some(c) if c <= 0)
}

fn log2_value(v: &BoundValue) -> f64 {
    v.log2_upper().as_f64().expect("fits in f64")
}

#[test]
fn h6_matches_closed_form() {
    let mut o = Oracle::new();
    let l = o.log2(&o.num(6.0));
    let e = o.exponent(&l);
    let h = h_bound(6, &HTable::default());
    assert!(!h.is_exact());
    assert!(tight_upper(log2_value(&h), &e, 1e-12));
}

#[test]
fn f3_matches_closed_form() {
    let mut o = Oracle::new();
    let l = o.log2(&o.num(3.0));
    let e = o.exponent(&l).mul(&o.num(9.0), P, RM);
    assert!(tight_upper(
        log2_value(&f_bound(3, &HTable::default())),
        &e,
        1e-12
    ));
}

#[test]
fn g22_matches_closed_form() {
    // g(2,1) = f(2) = 2, so g(2,2) = 2 f(24) = 2 h(24)^576
    let mut o = Oracle::new();
    let l = o.log2(&o.num(24.0));
    let e = o
        .exponent(&l)
        .mul(&o.num(576.0), P, RM)
        .add(&o.num(1.0), P, RM);
    let t = HTable::default();
    assert_eq!(f_bound(2, &t), BoundValue::from(2));
    assert!(tight_upper(log2_value(&g_bound(2, 2, &t)), &e, 1e-12));
}

#[test]
fn g32_log_log_matches_closed_form() {
    // g(3,2) = f(3) f(N) with N = (3 f(3))!, so log2 log2 g(3,2) is
    // 2 log2 N + log2 e(N) up to a negligible additive term
    let mut o = Oracle::new();
    let l3 = o.log2(&o.num(3.0));
    let log2_f3 = o.exponent(&l3).mul(&o.num(9.0), P, RM);
    let t = o
        .num(3.0)
        .mul(&o.num(2.0).pow(&log2_f3, P, RM, &mut o.cc), P, RM);
    let big_l = o.log2_gamma1(&t);
    let e = o.exponent(&big_l);
    let truth = o.num(2.0).mul(&big_l, P, RM).add(&o.log2(&e), P, RM);
    let g = g_bound(3, 2, &HTable::default());
    let ll = g.log2_upper().log2().as_f64().unwrap();
    assert!(tight_upper(ll, &truth, 1e-9), "{ll}");
}

#[test]
fn stirling_dominates_exact_log_factorial() {
    let mut o = Oracle::new();
    let mut exact = o.num(0.0);
    for t in 1..=2000u32 {
        let lt = o.log2(&o.num(t as f64));
        exact = exact.add(&lt, P, RM);
        let s = BigFloat::from_f64(stirling_log2_factorial_upper(t as f64), P);
        assert!(matches!(s.cmp(&exact), Some(c) if c >= 0), "t = {t}");
    }
}

#[test]
fn exact_factorials() {
    assert_eq!(factorial(&BoundValue::from(5)), BoundValue::from(120));
    assert_eq!(factorial(&BoundValue::from(1)), BoundValue::one());
    let f20 = factorial(&BoundValue::from(20));
    assert_eq!(f20.as_u64(), Some(2_432_902_008_176_640_000));
}

#[test]
fn base_cases() {
    let t = HTable::default();
    assert_eq!(f_bound(1, &t), BoundValue::one());
    for n in 1..=10 {
        assert_eq!(g_bound(n, 0, &t), BoundValue::one());
        assert_eq!(g_bound(n, 1, &t), f_bound(n, &t));
    }
}

#[test]
fn verdicts() {
    let b = BoundValue::from(6);
    assert_eq!(bound_check(&BigUint::from(6u32), &b), Verdict::Holds);
    assert_eq!(bound_check(&BigUint::from(7u32), &b), Verdict::Violated);
    assert!(bound_leq(2, &g_bound(3, 1, &HTable::default())));
    assert!(!bound_leq(3, &BoundValue::from(2)));
}

proptest! {
    #[test]
    fn g_is_monotone(n in 1u64..=10, c in 0u32..5) {
        let t = HTable::default();
        let g = g_bound(n, c, &t);
        prop_assert!(g.leq(&g_bound(n, c + 1, &t)));
        prop_assert!(g.leq(&g_bound(n + 1, c, &t)));
        prop_assert!(f_bound(n, &t).leq(&g_bound(n, c.max(1), &t)));
    }

    #[test]
    fn h_dominates_empirical_table(m in 1u64..40) {
        let t = HTable::default();
        let h = h_bound(m, &t);
        for (k, order) in t.entries() {
            if *k <= m {
                prop_assert!(bound_leq(*order, &h));
            }
        }
    }

    #[test]
    fn stirling_is_monotone(t in 1.0f64..1e12) {
        prop_assert!(stirling_log2_factorial_upper(t) <= stirling_log2_factorial_upper(t * 1.5));
    }
}
