//! Directed-rounding interval arithmetic over MPFR floats.
//!
//! Every operation returns an enclosure of the exact real result: the lower
//! endpoint is rounded toward −∞, the upper toward +∞. MPFR's elementary
//! functions are correctly rounded, so each call widens the enclosure by at
//! most one ulp per endpoint (relative slack 2^(1-precision), about 1e-38 at
//! the default 128 bits).

use std::cmp::Ordering as CmpOrdering;
use std::fmt;
use std::sync::atomic::{AtomicU32, Ordering};

use rug::float::{Constant, Round};
use rug::ops::{
    AddAssignRound, AssignRound, DivAssignRound, MulAssignRound, PowAssignRound, SubAssignRound,
};
use rug::{Float, Integer, Rational};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Default significand precision in bits. Overridable once at startup via the
/// `ZETA_BOUNDS_PREC` environment variable or [`set_precision`].
const DEFAULT_PRECISION: u32 = 128;

static PRECISION: AtomicU32 = AtomicU32::new(0);

/// Working precision in bits for all newly constructed intervals.
pub fn precision() -> u32 {
    let p = PRECISION.load(Ordering::Relaxed);
    if p != 0 {
        return p;
    }
    let p = std::env::var("ZETA_BOUNDS_PREC")
        .ok()
        .and_then(|s| s.parse::<u32>().ok())
        .filter(|&b| (64..=16384).contains(&b))
        .unwrap_or(DEFAULT_PRECISION);
    PRECISION.store(p, Ordering::Relaxed);
    p
}

/// Override the working precision (bits). Values outside 64..=16384 are ignored.
pub fn set_precision(bits: u32) {
    if (64..=16384).contains(&bits) {
        PRECISION.store(bits, Ordering::Relaxed);
    }
}

/// Outcome of a certified comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertStatus {
    Proven,
    Refuted,
    Undecided,
}

/// A certified comparison result with the signed separation of the enclosures.
///
/// For a claim "lhs ≤ rhs": `Proven` requires strict separation
/// `hi(lhs) < lo(rhs)`, `Refuted` requires `lo(lhs) > hi(rhs)`, anything else
/// (overlap, equality within width) is `Undecided`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CertOutcome {
    pub status: CertStatus,
    pub margin: f64,
}

impl CertOutcome {
    pub fn proven(&self) -> bool {
        self.status == CertStatus::Proven
    }
}

impl fmt::Display for CertOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (margin {:.3e})", self.status, self.margin)
    }
}

/// A closed interval `[lo, hi]` enclosing an exact real value.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

fn f_down(x: f64) -> Float {
    Float::with_val_round(precision(), x, Round::Down).0
}

impl Interval {
    fn from_endpoints(lo: Float, hi: Float) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order: {lo} > {hi}");
        Interval { lo, hi }
    }

    /// Exact point interval from an `f64` (always representable).
    pub fn point(x: f64) -> Self {
        assert!(x.is_finite(), "point interval from non-finite f64");
        Interval::from_endpoints(f_down(x), f_down(x))
    }

    pub fn from_u64(n: u64) -> Self {
        let v = Float::with_val(precision(), n);
        Interval::from_endpoints(v.clone(), v)
    }

    pub fn from_i64(n: i64) -> Self {
        let v = Float::with_val(precision(), n);
        Interval::from_endpoints(v.clone(), v)
    }

    pub fn from_integer(n: &Integer) -> Self {
        let p = precision();
        let lo = Float::with_val_round(p, n, Round::Down).0;
        let hi = Float::with_val_round(p, n, Round::Up).0;
        Interval::from_endpoints(lo, hi)
    }

    /// Tight enclosure of an exact rational.
    pub fn from_rational(q: &Rational) -> Self {
        let p = precision();
        let lo = Float::with_val_round(p, q, Round::Down).0;
        let hi = Float::with_val_round(p, q, Round::Up).0;
        Interval::from_endpoints(lo, hi)
    }

    /// Enclosure of `num/den` for machine integers.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "ratio with zero denominator");
        Interval::from_rational(&Rational::from((num, den)))
    }

    /// Parse a decimal literal into a width-≤-2-ulp enclosure of its exact value.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let parsed = Float::parse(s.trim())
            .map_err(|e| Error::Parse(format!("invalid decimal literal {s:?}: {e}")))?;
        let p = precision();
        let lo = Float::with_val_round(p, parsed, Round::Down).0;
        let parsed2 = Float::parse(s.trim()).unwrap();
        let hi = Float::with_val_round(p, parsed2, Round::Up).0;
        if !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Parse(format!("literal {s:?} is not finite")));
        }
        Ok(Interval::from_endpoints(lo, hi))
    }

    /// Enclosure spanning two decimal literals (for hand-entered outer bounds).
    pub fn from_decimals(lo: &str, hi: &str) -> Result<Self, Error> {
        let l = Interval::parse(lo)?;
        let h = Interval::parse(hi)?;
        if l.lo > h.hi {
            return Err(Error::Parse(format!("interval [{lo}, {hi}] is empty")));
        }
        Ok(Interval::from_endpoints(l.lo, h.hi))
    }

    pub fn pi() -> Self {
        let p = precision();
        let mut lo = Float::new(p);
        lo.assign_round(Constant::Pi, Round::Down);
        let mut hi = Float::new(p);
        hi.assign_round(Constant::Pi, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn two_pi() -> Self {
        Interval::pi().scale2(1)
    }

    /// Euler's constant γ.
    pub fn euler_gamma() -> Self {
        let p = precision();
        let mut lo = Float::new(p);
        lo.assign_round(Constant::Euler, Round::Down);
        let mut hi = Float::new(p);
        hi.assign_round(Constant::Euler, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn ln2() -> Self {
        let p = precision();
        let mut lo = Float::new(p);
        lo.assign_round(Constant::Log2, Round::Down);
        let mut hi = Float::new(p);
        hi.assign_round(Constant::Log2, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn euler_e() -> Self {
        Interval::from_u64(1).exp()
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64_round(Round::Down)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64_round(Round::Up)
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo_f64() + self.hi_f64()) / 2.0
    }

    pub fn width(&self) -> f64 {
        let mut w = self.hi.clone();
        let _ = w.sub_assign_round(&self.lo, Round::Up);
        w.to_f64_round(Round::Up)
    }

    /// Width divided by the smallest magnitude in the interval (∞ if it spans 0).
    pub fn rel_width(&self) -> f64 {
        let m = if self.lo.is_sign_positive() {
            self.lo_f64()
        } else if self.hi.is_sign_negative() {
            -self.hi_f64()
        } else {
            return f64::INFINITY;
        };
        if m == 0.0 {
            f64::INFINITY
        } else {
            self.width() / m
        }
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_positive(&self) -> bool {
        self.lo.is_sign_positive() && !self.lo.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    /// Smallest interval containing both operands.
    pub fn hull(&self, other: &Interval) -> Interval {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Interval::from_endpoints(lo, hi)
    }

    /// Interval spanning `[self.lo, other.hi]`; endpoints must be ordered.
    pub fn span(&self, other: &Interval) -> Interval {
        debug_assert!(self.lo <= other.hi);
        Interval::from_endpoints(self.lo.clone(), other.hi.clone())
    }

    pub fn add(&self, rhs: &Interval) -> Interval {
        let mut lo = self.lo.clone();
        let _ = lo.add_assign_round(&rhs.lo, Round::Down);
        let mut hi = self.hi.clone();
        let _ = hi.add_assign_round(&rhs.hi, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn sub(&self, rhs: &Interval) -> Interval {
        let mut lo = self.lo.clone();
        let _ = lo.sub_assign_round(&rhs.hi, Round::Down);
        let mut hi = self.hi.clone();
        let _ = hi.sub_assign_round(&rhs.lo, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn neg(&self) -> Interval {
        Interval::from_endpoints(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, rhs: &Interval) -> Interval {
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut d = a.clone();
            let _ = d.mul_assign_round(b, Round::Down);
            let mut u = a.clone();
            let _ = u.mul_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(cur) => cur.min(&d),
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(&u),
                None => u,
            });
        }
        Interval::from_endpoints(lo.unwrap(), hi.unwrap())
    }

    /// Multiply by an exact power of two (error-free).
    pub fn scale2(&self, k: i32) -> Interval {
        let mut lo = self.lo.clone();
        lo <<= k;
        let mut hi = self.hi.clone();
        hi <<= k;
        Interval::from_endpoints(lo, hi)
    }

    pub fn div(&self, rhs: &Interval) -> Result<Interval, Error> {
        if rhs.lo.is_sign_negative() != rhs.hi.is_sign_negative()
            || rhs.lo.is_zero()
            || rhs.hi.is_zero()
        {
            return Err(Error::domain("div", "divisor interval contains zero"));
        }
        let pairs = [
            (&self.lo, &rhs.lo),
            (&self.lo, &rhs.hi),
            (&self.hi, &rhs.lo),
            (&self.hi, &rhs.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut d = a.clone();
            let _ = d.div_assign_round(b, Round::Down);
            let mut u = a.clone();
            let _ = u.div_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(cur) => cur.min(&d),
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(&u),
                None => u,
            });
        }
        Ok(Interval::from_endpoints(lo.unwrap(), hi.unwrap()))
    }

    pub fn recip(&self) -> Result<Interval, Error> {
        Interval::from_u64(1).div(self)
    }

    pub fn abs(&self) -> Interval {
        if self.lo.is_sign_positive() {
            self.clone()
        } else if self.hi.is_sign_negative() {
            self.neg()
        } else {
            let a = self.neg();
            let hi = if a.hi >= self.hi { a.hi } else { self.hi.clone() };
            Interval::from_endpoints(Float::new(precision()), hi)
        }
    }

    pub fn min_with(&self, other: &Interval) -> Interval {
        let lo = if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi <= other.hi { self.hi.clone() } else { other.hi.clone() };
        Interval::from_endpoints(lo, hi)
    }

    pub fn max_with(&self, other: &Interval) -> Interval {
        let lo = if self.lo >= other.lo { self.lo.clone() } else { other.lo.clone() };
        let hi = if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() };
        Interval::from_endpoints(lo, hi)
    }

    fn monotone_incr(&self, f: impl Fn(&mut Float, Round)) -> Interval {
        let mut lo = self.lo.clone();
        f(&mut lo, Round::Down);
        let mut hi = self.hi.clone();
        f(&mut hi, Round::Up);
        Interval::from_endpoints(lo, hi)
    }

    pub fn exp(&self) -> Interval {
        self.monotone_incr(|x, r| {
            let _ = x.exp_round(r);
        })
    }

    /// `2^self`.
    pub fn exp2(&self) -> Interval {
        self.monotone_incr(|x, r| {
            let _ = x.exp2_round(r);
        })
    }

    pub fn ln(&self) -> Result<Interval, Error> {
        if !self.is_positive() {
            return Err(Error::domain("ln", "argument must be strictly positive"));
        }
        Ok(self.monotone_incr(|x, r| {
            let _ = x.ln_round(r);
        }))
    }

    pub fn sqrt(&self) -> Result<Interval, Error> {
        if self.lo.is_sign_negative() && !self.lo.is_zero() {
            return Err(Error::domain("sqrt", "argument must be nonnegative"));
        }
        Ok(self.monotone_incr(|x, r| {
            let _ = x.sqrt_round(r);
        }))
    }

    /// `self^exponent` for a strictly positive base, via endpoint analysis of
    /// the correctly rounded MPFR pow.
    pub fn pow(&self, exponent: &Interval) -> Result<Interval, Error> {
        if !self.is_positive() {
            return Err(Error::domain("pow", "base must be strictly positive"));
        }
        let pairs = [
            (&self.lo, &exponent.lo),
            (&self.lo, &exponent.hi),
            (&self.hi, &exponent.lo),
            (&self.hi, &exponent.hi),
        ];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let mut d = a.clone();
            let _ = d.pow_assign_round(b, Round::Down);
            let mut u = a.clone();
            let _ = u.pow_assign_round(b, Round::Up);
            lo = Some(match lo {
                Some(cur) => cur.min(&d),
                None => d,
            });
            hi = Some(match hi {
                Some(cur) => cur.max(&u),
                None => u,
            });
        }
        Ok(Interval::from_endpoints(lo.unwrap(), hi.unwrap()))
    }

    /// Integer power of a strictly positive base.
    pub fn powi(&self, n: i64) -> Result<Interval, Error> {
        self.pow(&Interval::from_i64(n))
    }

    /// Natural log of the gamma function at a strictly positive point value.
    pub fn ln_gamma(&self) -> Result<Interval, Error> {
        if !self.is_positive() {
            return Err(Error::domain("ln_gamma", "argument must be strictly positive"));
        }
        // lngamma is not monotone below ~1.4616; split via the endpoint hull
        // plus the global minimum bracket when the interval crosses it.
        let at = |v: &Float, r: Round| {
            let mut x = v.clone();
            let _ = x.ln_gamma_round(r);
            x
        };
        let lo_l = at(&self.lo, Round::Down);
        let lo_h = at(&self.hi, Round::Down);
        let hi_l = at(&self.lo, Round::Up);
        let hi_h = at(&self.hi, Round::Up);
        let crosses_min = self.lo < 1.47 && self.hi > 1.46;
        let mut lo = lo_l.clone().min(&lo_h);
        if crosses_min {
            // lngamma(x) > -0.1215 everywhere on (0, inf)
            let floor = Float::with_val(precision(), -0.1215f64);
            if lo > floor {
                lo = floor;
            }
        }
        let hi = hi_l.max(&hi_h);
        Ok(Interval::from_endpoints(lo, hi))
    }

    /// Cotangent on an interval strictly inside (0, π), where cot is decreasing.
    pub fn cot(&self) -> Result<Interval, Error> {
        let pi_lo = Interval::pi();
        if !self.is_positive() || !(self.hi < pi_lo.lo) {
            return Err(Error::domain("cot", "argument must lie strictly inside (0, pi)"));
        }
        let mut lo = self.hi.clone();
        let _ = lo.cot_round(Round::Down);
        let mut hi = self.lo.clone();
        let _ = hi.cot_round(Round::Up);
        Ok(Interval::from_endpoints(lo, hi))
    }

    /// Decimal string of the lower endpoint, rounded down.
    pub fn lo_string(&self) -> String {
        format_float(&self.lo, Round::Down)
    }

    /// Decimal string of the upper endpoint, rounded up.
    pub fn hi_string(&self) -> String {
        format_float(&self.hi, Round::Up)
    }
}

/// Deterministic decimal rendering with enough digits to round-trip.
fn format_float(x: &Float, round: Round) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    // 40 significant digits: more than 128-bit precision can distinguish.
    let (sign, digits, exp) = x.to_sign_string_exp_round(10, Some(40), round);
    let s = if sign { "-" } else { "" };
    format!("{s}0.{digits}e{}", exp.unwrap_or(0))
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_string(), self.hi_string())
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = ser.serialize_struct("Interval", 2)?;
        st.serialize_field("lo", &self.lo_string())?;
        st.serialize_field("hi", &self.hi_string())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Pair { lo: String, hi: String },
            Single(String),
            Number(f64),
        }
        match Repr::deserialize(de)? {
            Repr::Pair { lo, hi } => {
                Interval::from_decimals(&lo, &hi).map_err(|e| D::Error::custom(e.to_string()))
            }
            Repr::Single(s) => Interval::parse(&s).map_err(|e| D::Error::custom(e.to_string())),
            Repr::Number(x) => {
                if x.is_finite() {
                    Ok(Interval::point(x))
                } else {
                    Err(D::Error::custom("non-finite numeric interval"))
                }
            }
        }
    }
}

/// Certify the claim `lhs ≤ rhs` with the strict-separation policy.
pub fn certify_leq(lhs: &Interval, rhs: &Interval) -> CertOutcome {
    let sep = rhs.lo.partial_cmp(&lhs.hi);
    if sep == Some(CmpOrdering::Greater) {
        let mut m = rhs.lo.clone();
        let _ = m.sub_assign_round(&lhs.hi, Round::Down);
        return CertOutcome {
            status: CertStatus::Proven,
            margin: m.to_f64_round(Round::Down),
        };
    }
    if lhs.lo > rhs.hi {
        let mut m = rhs.hi.clone();
        let _ = m.sub_assign_round(&lhs.lo, Round::Down);
        return CertOutcome {
            status: CertStatus::Refuted,
            margin: m.to_f64_round(Round::Down),
        };
    }
    let mut m = rhs.lo.clone();
    let _ = m.sub_assign_round(&lhs.hi, Round::Down);
    CertOutcome {
        status: CertStatus::Undecided,
        margin: m.to_f64_round(Round::Down),
    }
}

/// Certify `x > 0`.
pub fn certify_positive(x: &Interval) -> CertOutcome {
    certify_leq(&Interval::from_u64(0), x)
}

/// Certify `lhs ≤ rhs` in the non-strict sense: `Proven` when
/// `hi(lhs) ≤ lo(rhs)` (every pair of enclosed values satisfies ≤, equality
/// included). Used for hypothesis checks where the stated inequality is
/// non-strict; genuine equality of two independently rounded transcendental
/// quantities still reports `Undecided`.
pub fn certify_leq_nonstrict(lhs: &Interval, rhs: &Interval) -> CertOutcome {
    if lhs.hi <= rhs.lo {
        let mut m = rhs.lo.clone();
        let _ = m.sub_assign_round(&lhs.hi, Round::Down);
        return CertOutcome { status: CertStatus::Proven, margin: m.to_f64_round(Round::Down) };
    }
    if lhs.lo > rhs.hi {
        let mut m = rhs.hi.clone();
        let _ = m.sub_assign_round(&lhs.lo, Round::Down);
        return CertOutcome { status: CertStatus::Refuted, margin: m.to_f64_round(Round::Down) };
    }
    let mut m = rhs.lo.clone();
    let _ = m.sub_assign_round(&lhs.hi, Round::Down);
    CertOutcome { status: CertStatus::Undecided, margin: m.to_f64_round(Round::Down) }
}

/// Enclosure of `log(k!)` for `k ≥ 1`, via lngamma at the exact point `k+1`.
pub fn log_factorial(k: u64) -> Result<Interval, Error> {
    if k < 1 {
        return Err(Error::domain("log_factorial", "k must be >= 1"));
    }
    Interval::from_u64(k + 1).ln_gamma()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn dyadic_literal_is_exact() {
        let x = Interval::parse("0.5").unwrap();
        assert_eq!(x.lo(), x.hi());
        assert_eq!(x.lo_f64(), 0.5);
    }

    #[test]
    fn non_dyadic_literal_straddles() {
        let x = Interval::parse("0.1").unwrap();
        assert!(x.lo() < x.hi());
        assert!(x.lo_f64() < 0.1 + 1e-17 && x.hi_f64() > 0.1 - 1e-17);
        assert!(x.rel_width() < 1e-37);
    }

    fn close(x: &Interval, v: f64, tol: f64) -> bool {
        (x.mid_f64() - v).abs() <= tol * v.abs().max(1e-300)
    }

    #[test]
    fn paper_literal_width() {
        let x = Interval::parse("1.0072318915891114").unwrap();
        assert!(x.rel_width() < 1e-37);
        // the f64 nearest the literal sits within one double ulp of the
        // enclosure of the exact decimal
        assert!(close(&x, 1.0072318915891114, 1e-15));
    }

    #[test]
    fn malformed_literal_rejected() {
        assert!(Interval::parse("not-a-number").is_err());
        assert!(Interval::parse("1e999999999999999999").is_err());
    }

    #[test]
    fn log_factorial_values() {
        let lf1 = log_factorial(1).unwrap();
        assert!(lf1.contains_f64(0.0) && lf1.width() < 1e-30);
        // oracle: exact integer factorial then log (mpmath, 40 digits)
        let lf10 = log_factorial(10).unwrap();
        assert!(close(&lf10, 15.104412573075515295, 1e-15));
        assert!(lf10.rel_width() < 1e-30);
        let lf170 = log_factorial(170).unwrap();
        assert!(lf170.is_finite());
        assert!(close(&lf170, 706.5730622457873471, 1e-15));
        assert!(log_factorial(0).is_err());
    }

    #[test]
    fn log_factorial_matches_stirling_series() {
        // independent Stirling oracle: ln k! = (k+1/2)ln k - k + ln(2pi)/2
        //   + 1/(12k) - 1/(360k^3) + 1/(1260k^5) - ..., remainder below the
        // first omitted term.
        for k in [20u64, 57, 170, 400, 1000] {
            let kf = k as f64;
            let stirling = (kf + 0.5) * kf.ln() - kf
                + 0.5 * (2.0 * std::f64::consts::PI).ln()
                + 1.0 / (12.0 * kf)
                - 1.0 / (360.0 * kf.powi(3))
                + 1.0 / (1260.0 * kf.powi(5));
            let got = log_factorial(k).unwrap();
            let rel = (got.mid_f64() - stirling).abs() / stirling;
            assert!(rel < 1e-12, "k={k}: {} vs {stirling}", got.mid_f64());
        }
    }

    #[test]
    fn certify_examples() {
        let a = Interval::from_decimals("1", "2").unwrap();
        let b = Interval::from_decimals("3", "4").unwrap();
        let out = certify_leq(&a, &b);
        assert_eq!(out.status, CertStatus::Proven);
        assert!((out.margin - 1.0).abs() < 1e-12);

        let c = Interval::from_decimals("1", "3").unwrap();
        let d = Interval::from_decimals("2", "4").unwrap();
        assert_eq!(certify_leq(&c, &d).status, CertStatus::Undecided);

        let e = Interval::from_decimals("5", "6").unwrap();
        let f = Interval::from_decimals("1", "2").unwrap();
        let out = certify_leq(&e, &f);
        assert_eq!(out.status, CertStatus::Refuted);
        assert!(out.margin < 0.0);
    }

    #[test]
    fn certify_never_proven_and_refuted() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let a = rng.gen_range(-5.0..5.0);
            let b = a + rng.gen_range(0.0..3.0);
            let c = rng.gen_range(-5.0..5.0);
            let d = c + rng.gen_range(0.0..3.0);
            let x = Interval::point(a).hull(&Interval::point(b));
            let y = Interval::point(c).hull(&Interval::point(d));
            let fwd = certify_leq(&x, &y);
            let bwd = certify_leq(&y, &x);
            // antisymmetric on disjoint intervals
            if fwd.status == CertStatus::Proven {
                assert_eq!(bwd.status, CertStatus::Refuted);
            }
            if fwd.status == CertStatus::Refuted {
                assert_eq!(bwd.status, CertStatus::Proven);
            }
        }
    }

    #[test]
    fn inclusion_monotonicity_random() {
        // f(x) in f([lo,hi]) for random x in [lo,hi], over 1e5 random cases.
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for i in 0..100_000 {
            let a = rng.gen_range(0.01..100.0);
            let w = rng.gen_range(0.0..1.0);
            let x = Interval::point(a).hull(&Interval::point(a + w));
            let t = rng.gen_range(0.0..=1.0);
            let v = a + t * w;
            let op = i % 8;
            match op {
                0 | 1 | 2 | 3 => {
                    let b = rng.gen_range(0.01..100.0);
                    let u = rng.gen_range(0.0..1.0);
                    let y = Interval::point(b).hull(&Interval::point(b + u));
                    let s = rng.gen_range(0.0..=1.0);
                    let w2 = b + s * u;
                    let (z, exact) = match op {
                        0 => (x.add(&y), v + w2),
                        1 => (x.sub(&y), v - w2),
                        2 => (x.mul(&y), v * w2),
                        _ => (x.div(&y).unwrap(), v / w2),
                    };
                    assert!(
                        z.lo_f64() <= exact && exact <= z.hi_f64(),
                        "op {op}: {exact} not in {z}"
                    );
                }
                4 => {
                    let z = x.exp();
                    let exact = v.exp();
                    assert!(z.lo_f64() <= exact && exact <= z.hi_f64());
                }
                5 => {
                    let z = x.ln().unwrap();
                    let exact = v.ln();
                    assert!(z.lo_f64() <= exact && exact <= z.hi_f64());
                }
                6 => {
                    let z = x.sqrt().unwrap();
                    let exact = v.sqrt();
                    assert!(z.lo_f64() <= exact && exact <= z.hi_f64());
                }
                _ => {
                    let e = rng.gen_range(-3.0..3.0);
                    let z = x.pow(&Interval::point(e)).unwrap();
                    let exact = v.powf(e);
                    // f64 powf itself errs by ~1 ulp; allow that slack
                    let pad = exact.abs() * 1e-14 + 1e-300;
                    assert!(
                        z.lo_f64() - pad <= exact && exact <= z.hi_f64() + pad,
                        "pow: {v}^{e} = {exact} not in {z}"
                    );
                }
            }
        }
    }

    #[test]
    fn inclusion_ln_gamma() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..2000 {
            let a = rng.gen_range(0.1..50.0);
            let x = Interval::point(a).hull(&Interval::point(a + rng.gen_range(0.0..0.5)));
            let z = x.ln_gamma().unwrap();
            // check at both endpoints using MPFR itself at higher precision
            let exact = Float::with_val(256, a).ln_gamma();
            assert!(z.lo() <= &exact && &exact <= z.hi());
        }
    }

    #[test]
    fn print_reparse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..500 {
            let a: f64 = rng.gen_range(-1e6..1e6);
            let x = Interval::point(a).exp();
            let re = Interval::from_decimals(&x.lo_string(), &x.hi_string()).unwrap();
            assert!(re.lo() <= x.lo() && x.hi() <= re.hi());
        }
    }

    #[test]
    fn cot_enclosure() {
        let x = Interval::point(2.0);
        let c = x.cot().unwrap();
        assert!(close(&c, -0.45765755436028576375, 1e-15));
        assert!(Interval::point(4.0).cot().is_err());
    }
}
