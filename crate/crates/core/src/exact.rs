//! Exact comparisons for quantities involving `t(m)` and rational powers.
//!
//! `t(m)` is the nonnegative root of `2t² + t = m`, i.e.
//! `t = (√(8m+1) - 1) / 4`. Anything polynomial in `t` lives in the field
//! `Q(√(8m+1))` and is compared exactly through [`Surd`]. Powers with a
//! non-integral exponent `p/q` are bracketed by rational intervals that are
//! refined until a comparison is decided; past [`MAX_PRECISION_BITS`] the
//! values are reported equal with [`Comparison::exact`] cleared.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Interval refinement stops at this many fractional bits.
pub const MAX_PRECISION_BITS: u64 = 4096;
const START_PRECISION_BITS: u64 = 64;

/// A rational exponent `λ = num/den ≥ 1` in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Lambda {
    num: u32,
    den: u32,
}

impl Lambda {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 || num < den {
            return Err(Error::Precondition(format!("λ = {num}/{den} must be a rational ≥ 1")));
        }
        let g = num.gcd(&den);
        Ok(Self {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(p: u32) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    pub fn as_integer(self) -> Option<u32> {
        (self.den == 1).then_some(self.num)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Lambda {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad λ component {x:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Lambda::new(parse(n)?, parse(d)?),
            None => Lambda::integer(parse(s)?),
        }
    }
}

impl Serialize for Lambda {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Outcome of a comparison; `exact` is false when interval refinement hit
/// the precision cap and equality was assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub ordering: Ordering,
    pub exact: bool,
}

impl Comparison {
    fn exact(ordering: Ordering) -> Self {
        Self { ordering, exact: true }
    }
}

/// Renders a rational as `"p/q"` (or `"p"` when integral).
pub fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Compares `u` with `t(m)` exactly: for `u ≥ 0`, `u ≤ t(m)` iff
/// `2u² + u ≤ m`.
pub fn compare_to_t(u: &BigRational, m: u64) -> Ordering {
    if u.is_negative() {
        return Ordering::Less;
    }
    let lhs = u * u * BigInt::from(2) + u;
    lhs.cmp(&BigRational::from_integer(BigInt::from(m)))
}

/// `t(m) = √(m/2 + 1/16) - 1/4` in floating point, for display.
pub fn t_of_m(m: u64) -> f64 {
    ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 4.0
}

/// Element `a + b√d` of `Q(√d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surd {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigInt,
}

impl Surd {
    pub fn rational(a: BigRational, d: &BigInt) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: d.clone(),
        }
    }

    /// `t(m)` as `-1/4 + (1/4)√(8m+1)`.
    pub fn t_of_m(m: u64) -> Self {
        Self {
            a: rat(-1, 4),
            b: rat(1, 4),
            d: BigInt::from(8 * m + 1),
        }
    }

    pub fn add(&self, o: &Surd) -> Surd {
        Surd {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            d: self.d.clone(),
        }
    }

    pub fn sub(&self, o: &Surd) -> Surd {
        Surd {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            d: self.d.clone(),
        }
    }

    pub fn mul(&self, o: &Surd) -> Surd {
        let d = BigRational::from_integer(self.d.clone());
        Surd {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
            d: self.d.clone(),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Surd {
        Surd {
            a: &self.a * r,
            b: &self.b * r,
            d: self.d.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Surd {
        let mut acc = Surd::rational(BigRational::one(), &self.d);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Sign of `a + b√d`, decided by comparing `a²` with `b²d`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sb == Ordering::Equal || sa == sb {
            return if sa == Ordering::Equal { sb } else { sa };
        }
        if sa == Ordering::Equal {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        // Opposite signs: the term with the larger square wins.
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        f(&self.a) + f(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

/// `C(x, 2) = x(x-1)/2` on surds.
pub fn choose2_surd(x: &Surd) -> Surd {
    let one = Surd::rational(BigRational::one(), &x.d);
    x.mul(&x.sub(&one)).scale(&rat(1, 2))
}

/// Closed rational interval `[lo, hi]`.
#[derive(Clone, Debug)]
struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    fn add(&self, o: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn cmp(&self, o: &Interval) -> Option<Ordering> {
        if self.hi < o.lo {
            Some(Ordering::Less)
        } else if self.lo > o.hi {
            Some(Ordering::Greater)
        } else if self.lo == self.hi && o.lo == o.hi && self.lo == o.lo {
            Some(Ordering::Equal)
        } else {
            None
        }
    }
}

fn floor_biguint(x: &BigRational) -> BigUint {
    x.floor().to_integer().to_biguint().unwrap_or_default()
}

/// `floor(2^bits · x^λ)` for `x ≥ 0`.
fn scaled_root_floor(x: &BigRational, lambda: Lambda, bits: u64) -> BigUint {
    let p = lambda.num;
    let q = lambda.den;
    let scaled = x.pow(p as i32) * BigRational::from_integer(BigInt::one() << (bits * q as u64));
    let m = floor_biguint(&scaled);
    m.nth_root(q)
}

/// Interval containing `x^λ` for `x` in `[lo, hi]`, `0 ≤ lo`.
fn pow_interval(x: &Interval, lambda: Lambda, bits: u64) -> Interval {
    if let Some(p) = lambda.as_integer() {
        return Interval {
            lo: x.lo.pow(p as i32),
            hi: x.hi.pow(p as i32),
        };
    }
    let denom = BigRational::from_integer(BigInt::one() << bits);
    let lo = BigRational::from_integer(BigInt::from(scaled_root_floor(&x.lo, lambda, bits))) / &denom;
    let hi_floor = scaled_root_floor(&x.hi, lambda, bits);
    let hi_exact = x.lo == x.hi && {
        // The root is attained exactly at this scale.
        let back = BigRational::from_integer(BigInt::from(hi_floor.clone())) / &denom;
        back.pow(lambda.den as i32) == x.hi.pow(lambda.num as i32)
    };
    let hi = if hi_exact {
        BigRational::from_integer(BigInt::from(hi_floor)) / &denom
    } else {
        BigRational::from_integer(BigInt::from(hi_floor + 1u32)) / &denom
    };
    Interval { lo, hi }
}

fn power_sum_interval(terms: &[BigRational], lambda: Lambda, bits: u64) -> Interval {
    terms.iter().fold(Interval::point(BigRational::zero()), |acc, t| {
        acc.add(&pow_interval(&Interval::point(t.clone()), lambda, bits))
    })
}

fn sorted_desc(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// `Σ terms_i^λ` for integer `λ`, exactly.
pub fn power_sum_exact(terms: &[u64], lambda: Lambda) -> Option<BigUint> {
    let p = lambda.as_integer()?;
    Some(terms.iter().map(|&t| BigUint::from(t).pow(p)).sum())
}

pub fn power_sum_f64(terms: &[u64], lambda: Lambda) -> f64 {
    let l = lambda.to_f64();
    terms.iter().map(|&t| (t as f64).powf(l)).sum()
}

/// Compares `Σ a_i^λ` with `Σ b_i^λ`.
pub fn cmp_power_sums(a: &[u64], b: &[u64], lambda: Lambda) -> Comparison {
    if let (Some(x), Some(y)) = (power_sum_exact(a, lambda), power_sum_exact(b, lambda)) {
        return Comparison::exact(x.cmp(&y));
    }
    let (sa, sb) = (sorted_desc(a), sorted_desc(b));
    let strip = |v: &[u64]| v.iter().copied().filter(|&x| x != 0).collect::<Vec<_>>();
    if strip(&sa) == strip(&sb) {
        return Comparison::exact(Ordering::Equal);
    }
    let to_rat = |v: &[u64]| v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect::<Vec<_>>();
    let (ra, rb) = (to_rat(a), to_rat(b));
    let mut bits = START_PRECISION_BITS;
    while bits <= MAX_PRECISION_BITS {
        let ia = power_sum_interval(&ra, lambda, bits);
        let ib = power_sum_interval(&rb, lambda, bits);
        if let Some(o) = ia.cmp(&ib) {
            return Comparison::exact(o);
        }
        bits *= 2;
    }
    Comparison {
        ordering: Ordering::Equal,
        exact: false,
    }
}

/// `C(t(m),2)^λ + C(t(m)+1,2)^λ` as a surd, for integer `λ`.
pub fn norm_bound_surd(m: u64, p: u32) -> Surd {
    let t = Surd::t_of_m(m);
    let one = Surd::rational(BigRational::one(), &t.d);
    choose2_surd(&t).pow(p).add(&choose2_surd(&t.add(&one)).pow(p))
}

/// Interval around `√d` with `bits` fractional bits.
fn sqrt_interval(d: &BigInt, bits: u64) -> Interval {
    let scaled = (d.to_biguint().expect("nonnegative") << (2 * bits)).sqrt();
    let denom = BigRational::from_integer(BigInt::one() << bits);
    let lo = BigRational::from_integer(BigInt::from(scaled.clone())) / &denom;
    let exact = &scaled * &scaled == d.to_biguint().unwrap() << (2 * bits);
    let hi = if exact {
        lo.clone()
    } else {
        BigRational::from_integer(BigInt::from(scaled + 1u32)) / &denom
    };
    Interval { lo, hi }
}

fn choose2_interval(x: &Interval) -> Interval {
    // Increasing for x ≥ 1/2.
    let f = |v: &BigRational| v * (v - BigRational::one()) / BigRational::from_integer(BigInt::from(2));
    Interval {
        lo: f(&x.lo),
        hi: f(&x.hi),
    }
}

/// Compares `Σ terms_i^λ` with `C(t(m),2)^λ + C(t(m)+1,2)^λ`.
///
/// For `m ≤ 2` the first binomial is negative; that is fine for integer
/// `λ` but has no real power otherwise, which is reported as an error.
pub fn cmp_power_sum_to_bound(terms: &[u64], m: u64, lambda: Lambda) -> Result<Comparison> {
    if m == 0 {
        return Err(Error::Precondition("the bound needs m ≥ 1".into()));
    }
    if let Some(p) = lambda.as_integer() {
        let value = power_sum_exact(terms, lambda).expect("integer λ");
        let diff = Surd::rational(BigRational::from_integer(BigInt::from_biguint(Sign::Plus, value)), &BigInt::from(8 * m + 1))
            .sub(&norm_bound_surd(m, p));
        return Ok(Comparison::exact(diff.signum()));
    }
    if m <= 2 {
        return Err(Error::Precondition(format!(
            "C(t({m}), 2) is negative and has no real power {lambda}"
        )));
    }
    let d = BigInt::from(8 * m + 1);
    let root = d.sqrt();
    if &root * &root == d && (&root - 1i32).is_multiple_of(&BigInt::from(4)) {
        // t(m) is an integer: the bound is itself a sum of integer powers.
        let t = ((&root - 1i32) / 4i32).to_u64().expect("small t");
        return Ok(cmp_power_sums(terms, &[t * (t.saturating_sub(1)) / 2, t * (t + 1) / 2], lambda));
    }
    let to_rat = terms.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect::<Vec<_>>();
    let mut bits = START_PRECISION_BITS;
    while bits <= MAX_PRECISION_BITS {
        let s = sqrt_interval(&d, bits);
        let quarter = rat(1, 4);
        let t = Interval {
            lo: (&s.lo - BigRational::one()) * &quarter,
            hi: (&s.hi - BigRational::one()) * &quarter,
        };
        let t1 = Interval {
            lo: &t.lo + BigRational::one(),
            hi: &t.hi + BigRational::one(),
        };
        let bound = pow_interval(&choose2_interval(&t), lambda, bits).add(&pow_interval(&choose2_interval(&t1), lambda, bits));
        let value = power_sum_interval(&to_rat, lambda, bits);
        if let Some(o) = value.cmp(&bound) {
            return Ok(Comparison::exact(o));
        }
        bits *= 2;
    }
    Ok(Comparison {
        ordering: Ordering::Equal,
        exact: false,
    })
}
