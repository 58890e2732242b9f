//! Dense univariate polynomials over the rationals and integers.
//!
//! Coefficients are stored little-endian (index = exponent). Just enough
//! machinery for the pipeline: evaluation, composition, derivatives,
//! denominator clearing, content/primitive parts, and exact sign evaluation
//! at rational points for Sturm sequences.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;

/// Polynomial with rational coefficients, little-endian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect();
        RatPoly::new(coeffs)
    }

    /// `self(g(z))` by Horner on polynomials.
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g);
            acc = acc.add(&RatPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RatPoly::new(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::new(coeffs)
    }

    /// Clears denominators and strips content, preserving sign: the integer
    /// polynomial returned is a positive rational multiple of `self`.
    pub fn clear_denominators(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        IntPoly::new(ints).strip_content()
    }
}

/// Polynomial with integer coefficients, little-endian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::new(coeffs)
    }

    /// Content: gcd of coefficients (positive).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divides out the content, preserving the sign of the polynomial.
    pub fn strip_content(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact sign of `f(p/q)` (`q > 0`) via the homogeneous integer form
    /// `sum c_i p^i q^{n-i}`; no rational arithmetic.
    pub fn sign_at(&self, x: &Rational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let n = self.degree().unwrap();
        let p = x.numer();
        let q = x.denom();
        let mut ppow = BigInt::one();
        let mut acc = BigInt::zero();
        // acc = sum_i c_i p^i q^{n-i}; build q powers from the top down.
        let mut qpows = Vec::with_capacity(n + 1);
        let mut qp = BigInt::one();
        for _ in 0..=n {
            qpows.push(qp.clone());
            qp *= q;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &ppow * &qpows[n - i];
            }
            ppow *= p;
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    /// Pseudo-remainder scaled so the result is a positive multiple of the
    /// true remainder `rem(self, g)` (sign preserved for Sturm chains).
    pub fn signed_pseudo_rem(&self, g: &IntPoly) -> IntPoly {
        let df = self.degree().expect("nonzero dividend");
        let dg = g.degree().expect("nonzero divisor");
        debug_assert!(df >= dg);
        let lc = g.leading().unwrap().clone();
        let mut r = self.clone();
        let mut scale_sign_flips = 0u32;
        while let Some(dr) = r.degree() {
            if dr < dg || r.is_zero() {
                break;
            }
            // r <- lc * r - lead(r) * z^(dr-dg) * g
            let lead = r.coeffs[dr].clone();
            let mut coeffs = vec![BigInt::zero(); dr + 1];
            for (i, c) in r.coeffs.iter().enumerate() {
                coeffs[i] = c * &lc;
            }
            for (i, c) in g.coeffs.iter().enumerate() {
                coeffs[i + dr - dg] -= c * &lead;
            }
            if lc.is_negative() {
                scale_sign_flips += 1;
            }
            r = IntPoly::new(coeffs);
            if r.is_zero() {
                break;
            }
        }
        if scale_sign_flips % 2 == 1 {
            r = r.neg();
        }
        r
    }

    /// Exact polynomial division, returning the true integer quotient;
    /// panics unless `g` divides `self` exactly over the integers.
    pub fn exact_div(&self, g: &IntPoly) -> IntPoly {
        let fr = RatPoly::new(self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
        let gr = RatPoly::new(g.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
        let (q, r) = rat_div_rem(&fr, &gr);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        IntPoly::new(
            q.coeffs()
                .iter()
                .map(|c| {
                    assert!(c.denom().is_one(), "exact_div quotient must be integral");
                    c.numer().clone()
                })
                .collect(),
        )
    }

    /// Primitive gcd via the Euclidean pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive();
        let mut b = other.primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.signed_pseudo_rem(&b).primitive();
            a = b;
            b = r;
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
        }
        a.primitive()
    }

    /// Largest power of `z` dividing the polynomial.
    pub fn trailing_zero_roots(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides by `z^k`.
    pub fn shift_down(&self, k: usize) -> IntPoly {
        IntPoly::new(self.coeffs[k..].to_vec())
    }

    /// A power-of-two bound `B` with every real root in `(-B, B)` (Cauchy).
    pub fn root_bound_pow2(&self) -> BigInt {
        let lc = self.leading().expect("nonzero polynomial").magnitude();
        let mut max: BigUint = BigUint::zero();
        for c in &self.coeffs {
            let m = c.magnitude();
            if *m > max {
                max = m.clone();
            }
        }
        // 1 + max|c_i|/|lc| <= 2^k
        let ratio_bits = (max / lc).bits() + 2;
        BigInt::one() << ratio_bits
    }
}

/// Quotient and remainder over the rationals.
pub fn rat_div_rem(f: &RatPoly, g: &RatPoly) -> (RatPoly, RatPoly) {
    let dg = g.degree().expect("division by zero polynomial");
    let glc = g.leading().unwrap().clone();
    let mut r = f.clone();
    let mut q = vec![Rational::zero(); f.coeffs.len().saturating_sub(dg)];
    while let Some(dr) = r.degree() {
        if dr < dg {
            break;
        }
        let c = r.leading().unwrap() / &glc;
        q[dr - dg] = c.clone();
        let mut coeffs = r.coeffs.clone();
        for (i, gc) in g.coeffs.iter().enumerate() {
            coeffs[i + dr - dg] -= &c * gc;
        }
        // the leading term cancels exactly
        coeffs[dr] = Rational::zero();
        r = RatPoly::new(coeffs);
    }
    (RatPoly::new(q), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn p(cs: &[i64]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn eval_and_compose() {
        // f = z^3 - 25 z + 12
        let f = p(&[12, -25, 0, 1]);
        assert_eq!(f.eval(&rat_int(2)), rat_int(8 - 50 + 12));
        // f(z+1) via compose
        let shifted = f.compose(&p(&[1, 1]));
        assert_eq!(shifted.eval(&rat_int(1)), f.eval(&rat_int(2)));
        assert_eq!(f.derivative(), p(&[-25, 0, 3]));
    }

    #[test]
    fn clearing_and_content() {
        let f = RatPoly::new(vec![rat(1, 6), rat(-5, 4), rat_int(0), rat(1, 2)]);
        let g = f.clear_denominators();
        // 12 * (1/6 - 5/4 z + 1/2 z^3) = 2 - 15 z + 6 z^3
        assert_eq!(g.coeffs(), &[BigInt::from(2), BigInt::from(-15), BigInt::from(0), BigInt::from(6)]);
        assert_eq!(g.content(), BigInt::from(1));
    }

    #[test]
    fn sign_at_is_exact() {
        let f = p(&[12, -25, 0, 1]).clear_denominators();
        assert_eq!(f.sign_at(&rat(1, 3)), 1);
        assert_eq!(f.sign_at(&rat(1, 2)), -1);
        assert_eq!(f.sign_at(&rat_int(6)), 1);
        // exact root of z^2 - 4
        let g = p(&[-4, 0, 1]).clear_denominators();
        assert_eq!(g.sign_at(&rat_int(2)), 0);
    }

    #[test]
    fn gcd_detects_multiplicity() {
        // (z-1)^2 (z+2)
        let f = p(&[2, -3, 0, 1]).clear_denominators();
        let g = f.gcd(&f.derivative());
        assert_eq!(g.degree(), Some(1));
        assert_eq!(g.sign_at(&rat_int(1)), 0);
    }

    #[test]
    fn pseudo_rem_tracks_sign() {
        let f = IntPoly::new(vec![1, -2, 0, 1].into_iter().map(BigInt::from).collect());
        let g = IntPoly::new(vec![1, 0, -1].into_iter().map(BigInt::from).collect());
        let r = f.signed_pseudo_rem(&g);
        let (_, true_rem) = rat_div_rem(&p(&[1, -2, 0, 1]), &p(&[1, 0, -1]));
        // r must be a positive multiple of the true remainder
        let want = true_rem.clear_denominators();
        assert_eq!(r.strip_content(), want);
    }
}
