//! Places of **Q**, p-adic valuations and magnitudes with exact
//! fractional-exponent comparison, and the naive height.
//!
//! Rationals are arbitrary-precision reduced fractions ([`Rational`], an
//! alias for `num_rational::BigRational`); the denominator is always
//! positive and zero is `0/1`, so the representation invariants hold by
//! construction. They parse and print as `num/den` or plain `num`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::{primes, Error, Result};

/// The universal scalar: an arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;

/// Exact exponents of p-adic magnitudes (`p^e` with `e` rational).
pub type Exponent = Ratio<i64>;

pub fn rat<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn rat_int<N: Into<BigInt>>(num: N) -> Rational {
    Rational::from_integer(num.into())
}

/// Parses `num/den` or `num`, base 10, optional leading `-`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::Parse(format!("invalid rational {s:?}: {e}")))
}

/// A place of **Q**: the archimedean absolute value or a p-adic one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    /// Finite place attached to the prime `p` (ordered before the
    /// archimedean place so bad-place sets list primes in ascending order).
    Finite(u64),
    Archimedean,
}

impl Place {
    /// Finite place constructor; primality is checked here.
    pub fn finite(p: u64) -> Result<Place> {
        if primes::is_prime(p) {
            Ok(Place::Finite(p))
        } else {
            Err(Error::Domain(format!("{p} is not prime")))
        }
    }

    pub fn is_archimedean(&self) -> bool {
        matches!(self, Place::Archimedean)
    }
}

impl std::fmt::Display for Place {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Place::Archimedean => write!(f, "oo"),
            Place::Finite(p) => write!(f, "{p}"),
        }
    }
}

/// A p-adic magnitude `p^exponent` with an exact rational exponent.
///
/// Magnitudes of nonzero rationals have integer exponents `-v_p(x)`;
/// fractional exponents arise only from roots such as `|a|_p^{1/2}`.
/// Comparison at the same prime reduces to exact comparison of exponents;
/// no floating point is involved anywhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicMagnitude {
    pub prime: u64,
    pub exponent: Exponent,
}

impl PadicMagnitude {
    pub fn new(prime: u64, exponent: Exponent) -> Self {
        PadicMagnitude { prime, exponent }
    }

    /// `|x|_p` of a nonzero rational.
    pub fn of(x: &Rational, prime: u64) -> Result<Self> {
        let v = padic_valuation(x, prime)?;
        Ok(PadicMagnitude {
            prime,
            exponent: Exponent::from_integer(-v),
        })
    }

    /// Raises the magnitude to a rational power (exact on exponents).
    pub fn pow(&self, e: Exponent) -> Self {
        PadicMagnitude {
            prime: self.prime,
            exponent: self.exponent * e,
        }
    }

    /// Natural log, for use in real-valued constants only.
    pub fn ln(&self) -> f64 {
        self.exponent.to_f64().unwrap() * (self.prime as f64).ln()
    }
}

impl PartialOrd for PadicMagnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.prime != other.prime {
            return None; // magnitudes at different primes are incomparable
        }
        Some(self.exponent.cmp(&other.exponent))
    }
}

/// `v_p(x)` for nonzero `x`: the exponent with `|x|_p = p^{-v}`.
///
/// `v = v_p(numerator) - v_p(denominator)`. Zero is a domain error (the
/// valuation is infinite; callers must branch first).
pub fn padic_valuation(x: &Rational, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::Domain("valuation of zero is infinite".into()));
    }
    if !primes::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let vn = int_valuation(&x.numer().magnitude(), p);
    let vd = int_valuation(&x.denom().magnitude(), p);
    Ok(vn - vd)
}

/// `v_p(n)` for a nonzero natural number.
pub fn int_valuation(n: &BigUint, p: u64) -> i64 {
    debug_assert!(!n.is_zero());
    let p = BigUint::from(p);
    let mut v = 0i64;
    let mut cur = n.clone();
    loop {
        let (q, r) = cur.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        v += 1;
        cur = q;
    }
}

/// Naive height `h(x) = log max(|numerator|, denominator)`.
///
/// Equals the sum of `log max(1, |x|_v)` over all places.
pub fn naive_height(x: &Rational) -> f64 {
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    ln_big(if n >= d { n } else { d })
}

/// Natural log of a big natural number via exponent + mantissa split.
///
/// Accurate to a few ulps at any size; callers that need a conservative
/// bound widen with [`widen_up`]/[`widen_down`].
pub fn ln_big(n: &BigUint) -> f64 {
    if n.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = n.bits();
    if bits <= 53 {
        return n.to_f64().unwrap().ln();
    }
    let shift = bits - 53;
    let top = (n >> shift).to_f64().unwrap();
    top.ln() + (shift as f64) * std::f64::consts::LN_2
}

/// `log max(|numerator|, denominator)` split off so height code can reuse it
/// on already-reduced fractions.
pub fn ln_height_of(x: &Rational) -> f64 {
    naive_height(x)
}

const REL_SLACK: f64 = 1.0 / (1u64 << 40) as f64;

/// Widens a nonnegative bound upward by a relative `2^-40` (plus one ulp of
/// absolute slack so zero-crossing values stay conservative).
pub fn widen_up(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    x * (1.0 + REL_SLACK) + f64::MIN_POSITIVE
}

/// Widens a nonnegative bound downward by a relative `2^-40`.
pub fn widen_down(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    (x * (1.0 - REL_SLACK) - f64::MIN_POSITIVE).max(0.0)
}

/// Approximate `f64` value of a rational of any size (mantissa/exponent
/// split on both numerator and denominator, so no overflow to infinity
/// until the true magnitude exceeds the f64 range).
pub fn to_f64_approx(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    let ln = ln_big(x.numer().magnitude()) - ln_big(x.denom().magnitude());
    sign * ln.exp()
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// Ceiling of a rational as a `BigInt`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

/// `p^e` for integer `e` (possibly negative) as an exact rational.
pub fn prime_power(p: u64, e: i64) -> Rational {
    let base = BigInt::from(p);
    if e >= 0 {
        Rational::from_integer(base.pow(e as u32))
    } else {
        Rational::new(BigInt::one(), base.pow((-e) as u32))
    }
}

/// Two-sided dyadic bounds `lo <= sqrt(x) <= hi` for a nonnegative rational,
/// with `hi - lo <= 2^-precision_bits * max(1, sqrt(x))`.
pub fn sqrt_bounds(x: &Rational, precision_bits: u32) -> Result<(Rational, Rational)> {
    if x.is_negative() {
        return Err(Error::Domain("square root of a negative rational".into()));
    }
    if x.is_zero() {
        return Ok((Rational::zero(), Rational::zero()));
    }
    // sqrt(n/d) = sqrt(n * 4^k / d) / 2^k, bounded via integer sqrt.
    let k = precision_bits;
    let scaled: BigUint = (x.numer().magnitude() << (2 * k)) / x.denom().magnitude();
    let root = scaled.sqrt();
    let denom = BigInt::one() << k;
    let lo = Rational::new(BigInt::from(root.clone()), denom.clone());
    let hi = Rational::new(BigInt::from(root + 1u32), denom);
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&rat(12, 1), 2).unwrap(), 2);
        assert_eq!(padic_valuation(&rat(-25, 24), 3).unwrap(), -1);
        // 2560 = 2^9 * 5
        assert_eq!(padic_valuation(&rat(4323, 2560), 5).unwrap(), -1);
    }

    #[test]
    fn valuation_of_zero_is_domain_error() {
        assert!(matches!(
            padic_valuation(&Rational::zero(), 2),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn valuation_rejects_composite() {
        assert!(padic_valuation(&rat(3, 1), 6).is_err());
    }

    #[test]
    fn naive_height_examples() {
        assert_eq!(naive_height(&Rational::zero()), 0.0);
        assert!((naive_height(&rat(7, 12)) - (12f64).ln()).abs() < 1e-15);
        assert!((naive_height(&rat(-377, 324)) - (377f64).ln()).abs() < 1e-15);
    }

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["0", "-25/24", "7/12", "3", "-1"] {
            let x = parse_rational(s).unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        // non-reduced input normalizes
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
    }

    #[test]
    fn magnitude_comparison_is_exact() {
        // |12|_2^{1/2} = 2^{-1} vs |12|_2^{1/3} = 2^{-2/3}
        let m = PadicMagnitude::of(&rat(12, 1), 2).unwrap();
        let half = m.pow(Exponent::new(1, 2));
        let third = m.pow(Exponent::new(1, 3));
        assert!(half < third);
        assert_eq!(half.exponent, Exponent::new(-1, 1));
    }

    #[test]
    fn ln_big_matches_f64_for_large_values() {
        let n = BigUint::from(10u32).pow(50);
        assert!((ln_big(&n) - 50.0 * 10f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let (lo, hi) = sqrt_bounds(&rat(2, 1), 30).unwrap();
        assert!(lo.clone() * lo.clone() <= rat(2, 1));
        assert!(hi.clone() * hi.clone() >= rat(2, 1));
        assert!(hi - lo <= rat(1, 1 << 30));
    }

    proptest! {
        #[test]
        fn valuation_is_a_homomorphism(
            xn in -1_000_000i64..1_000_000, xd in 1i64..1_000_000,
            yn in -1_000_000i64..1_000_000, yd in 1i64..1_000_000,
            pi in 0usize..4,
        ) {
            prop_assume!(xn != 0 && yn != 0);
            let p = [2u64, 3, 5, 7][pi];
            let x = rat(xn, xd);
            let y = rat(yn, yd);
            let vx = padic_valuation(&x, p).unwrap();
            let vy = padic_valuation(&y, p).unwrap();
            let vxy = padic_valuation(&(x * y), p).unwrap();
            prop_assert_eq!(vxy, vx + vy);
        }

        #[test]
        fn product_formula_exact(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            prop_assume!(n != 0);
            let x = rat(n, d);
            // Reconstruct |x| from its valuations at every prime dividing
            // numerator or denominator: the identity must hold exactly.
            let mut probe = Rational::one();
            let mut ps = primes::factor_u64(x.numer().magnitude().to_u64().unwrap_or(1).max(1));
            ps.extend(primes::factor_u64(x.denom().magnitude().to_u64().unwrap()));
            ps.sort_unstable();
            ps.dedup_by_key(|(p, _)| *p);
            for (p, _) in ps {
                let v = padic_valuation(&x, p).unwrap();
                probe *= prime_power(p, v);
            }
            prop_assert_eq!(probe, x.abs());
        }

        #[test]
        fn height_matches_place_decomposition(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            prop_assume!(n != 0);
            let x = rat(n, d);
            let mut total = to_f64_approx(&x).abs().ln().max(0.0);
            for (p, _) in primes::factor_u64(x.denom().magnitude().to_u64().unwrap()) {
                let v = padic_valuation(&x, p).unwrap();
                if v < 0 {
                    total += (-v) as f64 * (p as f64).ln();
                }
            }
            let h = naive_height(&x);
            prop_assert!((total - h).abs() <= 1e-12 * h.max(1.0));
        }

        #[test]
        fn parse_print_identity(n in any::<i64>(), d in 1u64..u64::MAX) {
            let x = rat(BigInt::from_i64(n).unwrap(), BigInt::from(d));
            let s = x.to_string();
            prop_assert_eq!(parse_rational(&s).unwrap(), x);
        }
    }
}
