//! The bound functions `h`, `f` and `g` over [`BoundValue`], a magnitude
//! that is either an exact integer or an upward-rounded base-2 logarithm.
//!
//! `g(n, c)` for `c >= 2` is far beyond `f64` even after one logarithm, so
//! the logarithm itself is a [`Mag`]: an iterated power of two
//! `2^2^...^x` with the height stored alongside `x`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Exact values above this many bits switch to log-scale.
pub const EXACT_BITS: u64 = 4096;

/// Factorials of larger arguments use the Stirling upper bound.
pub const FACTORIAL_SUM_CAP: u64 = 1_000_000;

const LEVEL_UP: f64 = 1000.0;

fn round_up(x: f64) -> f64 {
    (x + x.abs() * 4.0 * f64::EPSILON).next_up()
}

fn round_down(x: f64) -> f64 {
    (x - x.abs() * 4.0 * f64::EPSILON).next_down()
}

/// A nonnegative real `E^level(x)` with `E(y) = 2^y`. In canonical form
/// either `level == 0` and `x < 2^1000`, or `level >= 1` and
/// `1000 <= x < 2^1000`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mag {
    level: u32,
    x: f64,
}

impl Mag {
    pub const ZERO: Mag = Mag { level: 0, x: 0.0 };

    pub fn real(x: f64) -> Self {
        assert!(
            x >= 0.0 && x.is_finite(),
            "magnitudes are finite and nonnegative"
        );
        Self::canon(0, x)
    }

    fn canon(mut level: u32, mut x: f64) -> Self {
        while x >= LEVEL_UP.exp2() {
            x = round_up(x.log2());
            level += 1;
        }
        while level > 0 && x < LEVEL_UP {
            x = round_up(x.exp2());
            level -= 1;
        }
        Self { level, x }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn mantissa(&self) -> f64 {
        self.x
    }

    /// The value as an `f64`, when it fits.
    pub fn as_f64(&self) -> Option<f64> {
        (self.level == 0).then_some(self.x)
    }

    /// An upper bound for `log2` of the value, clamped below at 0.
    pub fn log2(&self) -> Self {
        if self.level > 0 {
            Self::canon(self.level - 1, self.x)
        } else if self.x <= 1.0 {
            Self::ZERO
        } else {
            Self::real(round_up(self.x.log2()))
        }
    }

    /// An upper bound for `2^value`.
    pub fn exp2(&self) -> Self {
        if self.level == 0 && self.x < LEVEL_UP {
            Self::real(round_up(self.x.exp2()))
        } else {
            Self::canon(self.level + 1, self.x)
        }
    }

    /// Smallest representable increase.
    fn bump(&self) -> Self {
        Self::canon(self.level, self.x.next_up())
    }

    /// An upper bound for the sum.
    pub fn add(&self, other: &Self) -> Self {
        let (hi, lo) = if self >= other {
            (self, other)
        } else {
            (other, self)
        };
        if lo.x == 0.0 && lo.level == 0 {
            return *hi;
        }
        if hi.level == 0 {
            return Self::real(round_up(hi.x + lo.x));
        }
        // log2(hi + lo) = log2(hi) + log2(1 + lo/hi)
        let delta = if hi.level == 1 && lo.level <= 1 {
            let llo = if lo.level == 1 { lo.x } else { lo.x.log2() };
            round_up((1.0 + (llo - hi.x).exp2()).log2())
        } else if lo.level == hi.level {
            1.0
        } else {
            f64::MIN_POSITIVE
        };
        let lh = Self::canon(hi.level - 1, hi.x);
        let sum = if lh.level == 0 {
            Self::real(round_up(lh.x + delta))
        } else {
            lh.bump()
        };
        sum.exp2()
    }

    /// An upper bound for `k * value`.
    pub fn scale(&self, k: f64) -> Self {
        if self.level == 0 {
            Self::real(round_up(self.x * k))
        } else {
            self.log2()
                .add(&Self::real(round_up(k.log2().max(0.0))))
                .exp2()
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(
            self.level
                .cmp(&other.level)
                .then(self.x.total_cmp(&other.x)),
        )
    }
}

impl fmt::Display for Mag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 0..self.level {
            f.write_str("2^")?;
        }
        write!(f, "{}", self.x)
    }
}

/// An exact integer, or an upper bound given by its base-2 logarithm.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(BigUint),
    Log2(Mag),
}

/// Outcome of comparing an integer against a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    /// The integer lies within the rounding band of a log-scale bound.
    Inconclusive,
}

fn big_log2_upper(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return round_up((v.to_u64().unwrap() as f64).log2());
    }
    let shift = bits - 64;
    let top = (v >> shift).to_u64().unwrap() as f64 + 1.0;
    round_up(top.log2() + shift as f64)
}

fn big_log2_lower(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        return round_down((v.to_u64().unwrap() as f64).log2()).max(0.0);
    }
    let shift = bits - 64;
    let top = (v >> shift).to_u64().unwrap() as f64;
    round_down(top.log2() + shift as f64)
}

impl BoundValue {
    pub fn one() -> Self {
        Self::Exact(BigUint::one())
    }

    fn exact(v: BigUint) -> Self {
        if v.bits() > EXACT_BITS {
            Self::Log2(Mag::real(big_log2_upper(&v)))
        } else {
            Self::Exact(v)
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Self::Exact(_))
    }

    /// Upper bound for `log2` of the value.
    pub fn log2_upper(&self) -> Mag {
        match self {
            Self::Exact(v) if v.is_zero() => Mag::ZERO,
            Self::Exact(v) => Mag::real(big_log2_upper(v)),
            Self::Log2(m) => *m,
        }
    }

    /// Lower bound for `log2` of the value; for log-scale values this is the
    /// stored (over-approximating) logarithm itself.
    pub fn log2_lower(&self) -> Mag {
        match self {
            Self::Exact(v) if v.is_zero() => Mag::ZERO,
            Self::Exact(v) => Mag::real(big_log2_lower(v)),
            Self::Log2(m) => *m,
        }
    }

    /// The exact value as a `u64`, when it is exact and fits.
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            Self::Exact(v) => v.to_u64(),
            Self::Log2(_) => None,
        }
    }

    /// Upper bound of the product.
    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Self::Exact(a), b) if a.is_one() => b.clone(),
            (a, Self::Exact(b)) if b.is_one() => a.clone(),
            (Self::Exact(a), Self::Exact(b)) if a.bits() + b.bits() <= EXACT_BITS + 1 => {
                Self::exact(a * b)
            }
            (a, b) => Self::Log2(a.log2_upper().add(&b.log2_upper())),
        }
    }

    /// Provably `self <= other`.
    pub fn leq(&self, other: &Self) -> bool {
        match (self, other) {
            (Self::Exact(a), Self::Exact(b)) => a <= b,
            _ => self.log2_upper() <= other.log2_lower(),
        }
    }

    /// A value at least as large as both.
    pub fn max(&self, other: &Self) -> Self {
        if other.leq(self) {
            self.clone()
        } else if self.leq(other) {
            other.clone()
        } else {
            Self::Log2(self.log2_upper().max(other.log2_upper()))
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::Exact(_) => "exact",
            Self::Log2(_) => "log2",
        }
    }

    /// The value for exact bounds, the logarithm otherwise.
    pub fn value_or_log2(&self) -> String {
        match self {
            Self::Exact(v) => v.to_string(),
            Self::Log2(m) => m.to_string(),
        }
    }

    fn key(&self) -> (u8, u32, u64, Vec<u64>) {
        match self {
            Self::Exact(v) => (0, 0, 0, v.to_u64_digits()),
            Self::Log2(m) => (1, m.level, m.x.to_bits(), Vec::new()),
        }
    }
}

impl From<u64> for BoundValue {
    fn from(v: u64) -> Self {
        Self::Exact(BigUint::from(v))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Exact(v) => write!(f, "{v}"),
            Self::Log2(m) => write!(f, "2^({m})"),
        }
    }
}

/// Compares a positive integer against a bound.
pub fn bound_check(x: &BigUint, b: &BoundValue) -> Verdict {
    match b {
        BoundValue::Exact(v) => {
            if x <= v {
                Verdict::Holds
            } else {
                Verdict::Violated
            }
        }
        BoundValue::Log2(m) => {
            if Mag::real(big_log2_upper(x)) <= *m {
                Verdict::Holds
            } else if Mag::real(big_log2_lower(x)) > *m {
                Verdict::Violated
            } else {
                Verdict::Inconclusive
            }
        }
    }
}

/// `x <= b`, counting only a definite pass.
pub fn bound_leq(x: u128, b: &BoundValue) -> bool {
    bound_check(&BigUint::from(x), b) == Verdict::Holds
}

/// Upper bound for `log2(t!)` from Stirling's series,
/// `ln t! <= t ln t - t + ln(2 pi t)/2 + 1/(12 t)`.
pub fn stirling_log2_factorial_upper(t: f64) -> f64 {
    if t < 2.0 {
        return 0.0;
    }
    let ln = t * t.ln() - t + 0.5 * (2.0 * std::f64::consts::PI * t).ln() + 1.0 / (12.0 * t);
    round_up(round_up(ln) / std::f64::consts::LN_2 * (1.0 + 1e-12))
}

/// `t!` as a bound value.
pub fn factorial(t: &BoundValue) -> BoundValue {
    if let Some(n) = t.as_u64() {
        if n <= FACTORIAL_SUM_CAP {
            let mut acc = BigUint::one();
            let mut i = 2u64;
            while i <= n && acc.bits() <= EXACT_BITS {
                acc *= i;
                i += 1;
            }
            if i > n && acc.bits() <= EXACT_BITS {
                return BoundValue::Exact(acc);
            }
            let sum: f64 = (2..=n).map(|i| (i as f64).log2()).sum();
            return BoundValue::Log2(Mag::real(round_up(sum * (1.0 + 1e-12))));
        }
    }
    let l = t.log2_upper();
    match l.as_f64() {
        Some(lx) if lx < LEVEL_UP => BoundValue::Log2(Mag::real(stirling_log2_factorial_upper(
            round_up(lx.exp2()),
        ))),
        // log2 t! <= t log2 t
        _ => BoundValue::Log2(l.add(&l.log2()).exp2()),
    }
}

type BoundKey = (u8, u32, u64, Vec<u64>);

/// Constants and the empirical table behind `h`, with the memo for `g`.
pub struct HTable {
    constant: f64,
    empirical: BTreeMap<u64, u128>,
    empirical_only: bool,
    memo: Mutex<HashMap<(BoundKey, u32), BoundValue>>,
}

impl Clone for HTable {
    fn clone(&self) -> Self {
        Self {
            constant: self.constant,
            empirical: self.empirical.clone(),
            empirical_only: self.empirical_only,
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for HTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HTable")
            .field("constant", &self.constant)
            .field("empirical", &self.empirical)
            .field("empirical_only", &self.empirical_only)
            .finish()
    }
}

/// Default constant in `h(m) = 2^{C (log2 m)^2 log2 log2 m}`.
pub const DEFAULT_H_CONSTANT: f64 = 2.0;

impl Default for HTable {
    /// Constant 2 and the catalogued simple groups: `Alt(5)` with 4
    /// `Aut`-classes, `PSL(2,7)` and `Alt(6)` with 5.
    fn default() -> Self {
        Self::catalogued(DEFAULT_H_CONSTANT)
    }
}

impl HTable {
    pub fn new(constant: f64) -> Self {
        assert!(constant > 0.0 && constant.is_finite());
        Self {
            constant,
            empirical: BTreeMap::new(),
            empirical_only: false,
            memo: Mutex::new(HashMap::new()),
        }
    }

    /// The given constant with the catalogued simple groups.
    pub fn catalogued(constant: f64) -> Self {
        Self::new(constant)
            .with_entry(4, 60)
            .with_entry(5, 168)
            .with_entry(5, 360)
    }

    /// Records a simple group of the given order with `m` `Aut`-classes.
    pub fn with_entry(mut self, m: u64, order: u128) -> Self {
        let e = self.empirical.entry(m).or_insert(0);
        *e = (*e).max(order);
        self.memo.get_mut().unwrap().clear();
        self
    }

    /// Drops the formula, leaving only the empirical running maximum.
    pub fn empirical_only(mut self) -> Self {
        self.empirical_only = true;
        self.memo.get_mut().unwrap().clear();
        self
    }

    pub fn constant(&self) -> f64 {
        self.constant
    }

    pub fn entries(&self) -> &BTreeMap<u64, u128> {
        &self.empirical
    }

    /// Largest catalogued order with at most `m` classes (1 if none).
    fn empirical_max(&self, m: Option<u64>) -> u128 {
        self.empirical
            .iter()
            .filter(|(k, _)| m.is_none_or(|m| **k <= m))
            .map(|(_, v)| *v)
            .max()
            .unwrap_or(1)
    }

    /// Upper bound for the formula exponent `C (log2 m)^2 log2 log2 m`,
    /// clamped at 0 for `m <= 2`.
    pub fn exponent(&self, m: &BoundValue) -> Mag {
        if self.empirical_only {
            return Mag::ZERO;
        }
        match m.as_u64() {
            Some(v) if v <= 2 => Mag::ZERO,
            Some(v) if v < 1 << 53 => {
                let l = round_up((v as f64).log2());
                Mag::real(round_up(
                    round_up(self.constant * l * l) * round_up(l.log2()),
                ))
            }
            _ => {
                let l1 = m.log2_upper().log2();
                let l2 = l1.log2();
                let c = Mag::real(round_up(self.constant.log2().max(0.0)));
                c.add(&l1.scale(2.0)).add(&l2).exp2()
            }
        }
    }

    fn h(&self, m: &BoundValue) -> BoundValue {
        let e = self.exponent(m);
        let emp = BigUint::from(self.empirical_max(m.as_u64()));
        let empv = BoundValue::Exact(emp.clone());
        if e == Mag::ZERO {
            return empv;
        }
        if Mag::real(big_log2_lower(&emp)) >= e {
            empv
        } else {
            BoundValue::Log2(e.max(Mag::real(big_log2_upper(&emp))))
        }
    }

    fn f(&self, n: &BoundValue) -> BoundValue {
        let h = self.h(n);
        if let BoundValue::Exact(hv) = &h {
            if hv.is_one() {
                return n.clone();
            }
            if let Some(nv) = n.as_u64() {
                let sq = (nv as u128) * (nv as u128);
                if (hv.bits() as u128) * sq <= EXACT_BITS as u128 {
                    let p = BoundValue::Exact(hv.pow(sq as u32));
                    return n.max(&p);
                }
            }
        }
        let lh = h.log2_upper();
        let power = match n.as_u64() {
            Some(nv) if nv < 1 << 26 => lh.scale((nv * nv) as f64),
            _ => n.log2_upper().scale(2.0).add(&lh.log2()).exp2(),
        };
        n.max(&BoundValue::Log2(power))
    }

    fn g(&self, n: &BoundValue, c: u32) -> BoundValue {
        if c == 0 {
            return BoundValue::one();
        }
        let key = (n.key(), c);
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let prev = self.g(n, c - 1);
        let arg = factorial(&n.mul(&prev));
        let inner = self.g(&arg, c - 1);
        let value = prev.mul(&inner).max(&self.f(n));
        self.memo.lock().unwrap().insert(key, value.clone());
        value
    }
}

/// `h(m)`: the larger of the formula and the empirical running maximum.
pub fn h_bound(m: u64, table: &HTable) -> BoundValue {
    assert!(m >= 1);
    table.h(&BoundValue::from(m))
}

/// `f(n) = max{n, h(n)^{n^2}}`.
pub fn f_bound(n: u64, table: &HTable) -> BoundValue {
    assert!(n >= 1);
    table.f(&BoundValue::from(n))
}

/// `g(n, 0) = 1`, `g(n, c) = max{g(n,c-1) g((n g(n,c-1))!, c-1), f(n)}`.
pub fn g_bound(n: u64, c: u32, table: &HTable) -> BoundValue {
    assert!(n >= 1);
    table.g(&BoundValue::from(n), c)
}
