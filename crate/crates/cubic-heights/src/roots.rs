//! Exact real-root isolation by Sturm sequences, with bisection refinement,
//! multiplicity tracking, rational-root detection, and certified bounds on
//! the maximum complex-root modulus of a cubic.
//!
//! Everything here is exact: signs are evaluated homogeneously over the
//! integers and all interval endpoints are dyadic rationals, so downstream
//! consumers can widen them outward without ever trusting floating point.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat, sqrt_bounds, Rational};
use crate::poly::{IntPoly, RatPoly};
use crate::{Error, Result};

/// One distinct real root: `lo <= root <= hi`, exact when `lo == hi`.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    pub lo: Rational,
    pub hi: Rational,
    pub multiplicity: u32,
}

impl IsolatedRoot {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Sturm chain of a squarefree integer polynomial.
struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    fn new(f: &IntPoly) -> SturmChain {
        let mut chain = vec![f.clone(), f.derivative()];
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.is_zero() || a.degree() < b.degree() {
                break;
            }
            let r = a.signed_pseudo_rem(b).strip_content().neg();
            if r.is_zero() {
                break;
            }
            chain.push(r);
        }
        SturmChain { chain }
    }

    fn variations_at(&self, x: &Rational) -> u32 {
        let mut count = 0;
        let mut last = 0i32;
        for f in &self.chain {
            let s = f.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    fn count_half_open(&self, a: &Rational, b: &Rational) -> u32 {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Distinct real roots of an integer polynomial with multiplicities, plus
/// the squarefree part used for refinement.
pub struct RealRoots {
    squarefree: IntPoly,
    pub roots: Vec<IsolatedRoot>,
}

impl RealRoots {
    /// Isolates all distinct real roots; errors on the zero polynomial.
    pub fn isolate(f: &IntPoly) -> Result<RealRoots> {
        if f.is_zero() {
            return Err(Error::Domain("cannot isolate roots of the zero polynomial".into()));
        }
        if f.degree() == Some(0) {
            return Ok(RealRoots { squarefree: f.clone(), roots: Vec::new() });
        }
        let factors = squarefree_decomposition(f);
        let mut squarefree = IntPoly::new(vec![BigInt::one()]);
        for (g, _) in &factors {
            squarefree = mul_int(&squarefree, g);
        }
        let squarefree = squarefree.primitive();
        let mut roots = isolate_squarefree(&squarefree);
        // Attach multiplicities: exactly one factor vanishes per interval.
        for root in &mut roots {
            let mut mult = 0;
            for (g, m) in &factors {
                if g.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let vanishes = if root.is_exact() {
                    g.sign_at(&root.lo) == 0
                } else {
                    g.sign_at(&root.lo) * g.sign_at(&root.hi) < 0
                };
                if vanishes {
                    mult = *m;
                    break;
                }
            }
            debug_assert!(mult >= 1);
            root.multiplicity = mult.max(1);
        }
        let mut out = RealRoots { squarefree, roots };
        out.separate();
        Ok(out)
    }

    /// Number of distinct real roots.
    pub fn count(&self) -> usize {
        self.roots.len()
    }

    /// Real roots counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> u32 {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    /// Bisects the `i`-th root's interval until its width is at most `width`.
    pub fn refine_to_width(&mut self, i: usize, width: &Rational) {
        while !self.roots[i].is_exact() && self.roots[i].width() > *width {
            self.bisect(i);
        }
    }

    /// Bisects until the interval does not contain `x` in its interior
    /// unless `x` is the root itself.
    pub fn refine_away_from(&mut self, i: usize, x: &Rational) {
        loop {
            let r = &self.roots[i];
            if r.is_exact() || *x <= r.lo || *x >= r.hi {
                return;
            }
            self.bisect(i);
        }
    }

    fn bisect(&mut self, i: usize) {
        let r = &mut self.roots[i];
        let mid = (&r.lo + &r.hi) / rat(2, 1);
        let sm = self.squarefree.sign_at(&mid);
        if sm == 0 {
            r.lo = mid.clone();
            r.hi = mid;
            return;
        }
        let slo = self.squarefree.sign_at(&r.lo);
        debug_assert!(slo != 0, "isolating interval endpoints avoid roots");
        if slo * sm < 0 {
            r.hi = mid;
        } else {
            r.lo = mid;
        }
    }

    /// Makes the isolating intervals pairwise disjoint.
    fn separate(&mut self) {
        for i in 1..self.roots.len() {
            while self.roots[i].lo < self.roots[i - 1].hi {
                if !self.roots[i].is_exact() {
                    self.bisect(i);
                }
                if !self.roots[i - 1].is_exact() && self.roots[i].lo < self.roots[i - 1].hi {
                    self.bisect(i - 1);
                }
            }
        }
    }
}

/// Isolates the distinct real roots of a squarefree polynomial.
fn isolate_squarefree(g: &IntPoly) -> Vec<IsolatedRoot> {
    if g.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let bound = g.root_bound_pow2();
    let lo = Rational::from_integer(-bound.clone());
    let hi = Rational::from_integer(bound);
    let chain = SturmChain::new(g);
    // Endpoints are strictly outside the root range, so open == half-open.
    let total = chain.count_half_open(&lo, &hi);
    let mut out = Vec::new();
    split(g, &chain, &lo, &hi, total, &mut out);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Recursive bisection; `count` is the number of roots strictly inside
/// `(lo, hi)`, whose endpoints are never roots.
fn split(
    g: &IntPoly,
    chain: &SturmChain,
    lo: &Rational,
    hi: &Rational,
    count: u32,
    out: &mut Vec<IsolatedRoot>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push(IsolatedRoot { lo: lo.clone(), hi: hi.clone(), multiplicity: 1 });
        return;
    }
    let mid = (lo + hi) / rat(2, 1);
    let mid_is_root = g.sign_at(&mid) == 0;
    if !mid_is_root {
        let left = chain.count_half_open(lo, &mid);
        split(g, chain, lo, &mid, left, out);
        split(g, chain, &mid, hi, count - left, out);
        return;
    }
    out.push(IsolatedRoot { lo: mid.clone(), hi: mid.clone(), multiplicity: 1 });
    let left = chain.count_half_open(lo, &mid) - 1;
    let right = count - left - 1;
    // Pull the endpoints off the recorded root without crossing any other
    // root, so the recursion invariant (non-root endpoints) holds.
    let mut dl = (&mid - lo) / rat(2, 1);
    loop {
        let cand = &mid - &dl;
        if g.sign_at(&cand) != 0 && chain.count_half_open(&cand, &mid) == 1 {
            break;
        }
        dl /= rat(2, 1);
    }
    let mut dr = (hi - &mid) / rat(2, 1);
    loop {
        let cand = &mid + &dr;
        if g.sign_at(&cand) != 0 && chain.count_half_open(&mid, &cand) == 0 {
            break;
        }
        dr /= rat(2, 1);
    }
    split(g, chain, lo, &(&mid - dl), left, out);
    split(g, chain, &(&mid + dr), hi, right, out);
}

/// Yun's squarefree decomposition: returns pairwise-coprime squarefree
/// factors with their multiplicities, `f ~ prod g_i^{m_i}`.
fn squarefree_decomposition(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let f = f.primitive();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree().unwrap_or(0) == 0 {
        return vec![(f, 1)];
    }
    let mut out = Vec::new();
    let mut c = f.exact_div(&g);
    let mut d = sub_int(&df.exact_div(&g), &c.derivative());
    let mut i = 1u32;
    while c.degree().unwrap_or(0) >= 1 {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) >= 1 {
            out.push((a.clone(), i));
        }
        c = c.exact_div(&a);
        d = sub_int(&d.exact_div(&a), &c.derivative());
        i += 1;
    }
    out
}

fn mul_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() || b.is_zero() {
        return IntPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, x) in a.coeffs().iter().enumerate() {
        for (j, y) in b.coeffs().iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    IntPoly::new(coeffs)
}

fn sub_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let n = a.coeffs().len().max(b.coeffs().len());
    IntPoly::new((0..n).map(|i| a.coeff(i) - b.coeff(i)).collect())
}

/// All rational roots, by the rational root theorem on the primitive part.
pub fn rational_roots(f: &IntPoly) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::Domain("zero polynomial".into()));
    }
    let zeros = f.trailing_zero_roots();
    let g = f.shift_down(zeros).primitive();
    let mut out = Vec::new();
    if zeros > 0 {
        out.push(Rational::zero());
    }
    if g.degree().unwrap_or(0) >= 1 {
        let a0 = g.coeff(0).magnitude().clone();
        let lead = g.leading().unwrap().magnitude().clone();
        let num_divs = divisors(&a0)?;
        let den_divs = divisors(&lead)?;
        for n in &num_divs {
            for d in &den_divs {
                let cand = Rational::new(BigInt::from(n.clone()), BigInt::from(d.clone()));
                for c in [cand.clone(), -cand] {
                    if g.sign_at(&c) == 0 && !out.contains(&c) {
                        out.push(c);
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn divisors(n: &num_bigint::BigUint) -> Result<Vec<num_bigint::BigUint>> {
    use num_bigint::BigUint;
    let mut divs = vec![BigUint::one()];
    for (p, e) in crate::primes::factor_big(n)? {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        let mut pe = BigUint::one();
        for _ in 0..=e {
            for d in &divs {
                next.push(d * &pe);
            }
            pe *= BigUint::from(p);
        }
        divs = next;
    }
    Ok(divs)
}

/// Certified bounds `lo <= max |root| <= hi` over the complex roots of a
/// polynomial of degree at most 3, with relative width about `2^-rel_bits`.
///
/// The all-real case reads the bound off refined isolating intervals; a
/// complex-conjugate pair is handled through the root product, which pins
/// the pair modulus as `sqrt(|a_0/a_3| / |real root|)`.
pub fn max_root_modulus(f: &RatPoly, rel_bits: u32) -> Result<(Rational, Rational)> {
    let deg = f.degree().ok_or_else(|| Error::Domain("zero polynomial".into()))?;
    if deg == 0 {
        return Err(Error::Domain("constant polynomial has no roots".into()));
    }
    if deg > 3 {
        return Err(Error::Domain("max_root_modulus supports degree <= 3".into()));
    }
    let fi = f.clear_denominators();
    let zeros = fi.trailing_zero_roots();
    let g = fi.shift_down(zeros);
    let gdeg = g.degree().unwrap();
    if gdeg == 0 {
        return Ok((Rational::zero(), Rational::zero()));
    }
    match gdeg {
        1 => {
            let m = (Rational::new(g.coeff(0), g.coeff(1))).abs();
            Ok((m.clone(), m))
        }
        2 => {
            let disc = g.coeff(1).pow(2u32) - BigInt::from(4) * g.coeff(2) * g.coeff(0);
            if disc.is_negative() {
                let m2 = Rational::new(g.coeff(0), g.coeff(2)).abs();
                sqrt_bounds(&m2, rel_bits + 4)
            } else {
                real_max_abs(&g, rel_bits)
            }
        }
        3 => {
            let mut roots = RealRoots::isolate(&g)?;
            if roots.count_with_multiplicity() == 3 {
                real_max_abs(&g, rel_bits)
            } else {
                // One simple real root plus a conjugate pair.
                debug_assert_eq!(roots.count(), 1);
                refine_excluding_zero(&mut roots, 0, rel_bits);
                let r = &roots.roots[0];
                let (rho_lo, rho_hi) = abs_interval(r);
                let prod = Rational::new(g.coeff(0), g.coeff(3)).abs();
                let pair_sq_lo = &prod / &rho_hi;
                let pair_sq_hi = &prod / &rho_lo;
                let (pl, _) = sqrt_bounds(&pair_sq_lo, rel_bits + 4)?;
                let (_, ph) = sqrt_bounds(&pair_sq_hi, rel_bits + 4)?;
                Ok((rho_lo.max(pl), rho_hi.max(ph)))
            }
        }
        _ => unreachable!(),
    }
}

/// Max |root| over the (all-real) roots of `g`.
fn real_max_abs(g: &IntPoly, rel_bits: u32) -> Result<(Rational, Rational)> {
    let mut roots = RealRoots::isolate(g)?;
    let mut lo = Rational::zero();
    let mut hi = Rational::zero();
    for i in 0..roots.count() {
        refine_excluding_zero(&mut roots, i, rel_bits);
        let (alo, ahi) = abs_interval(&roots.roots[i]);
        if alo > lo {
            lo = alo;
        }
        if ahi > hi {
            hi = ahi;
        }
    }
    Ok((lo, hi))
}

/// Refines root `i` until its interval excludes zero (unless the root is
/// zero itself) and has relative width about `2^-rel_bits`.
fn refine_excluding_zero(roots: &mut RealRoots, i: usize, rel_bits: u32) {
    roots.refine_away_from(i, &Rational::zero());
    loop {
        let (exact, width, scale) = {
            let r = &roots.roots[i];
            (r.is_exact(), r.width(), r.lo.abs().max(r.hi.abs()))
        };
        if exact || width.clone() * Rational::from_integer(BigInt::one() << rel_bits) <= scale {
            return;
        }
        roots.refine_to_width(i, &(width / rat(2, 1)));
    }
}

fn abs_interval(r: &IsolatedRoot) -> (Rational, Rational) {
    if r.lo >= Rational::zero() {
        (r.lo.clone(), r.hi.clone())
    } else if r.hi <= Rational::zero() {
        (-r.hi.clone(), -r.lo.clone())
    } else {
        (Rational::zero(), r.lo.abs().max(r.hi.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat_int, to_f64_approx};

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn rp(cs: &[i64]) -> RatPoly {
        RatPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn isolates_simple_cubic() {
        // z^3 + 1: one real root, -1
        let mut roots = RealRoots::isolate(&ip(&[1, 0, 0, 1])).unwrap();
        assert_eq!(roots.count(), 1);
        roots.refine_to_width(0, &rat(1, 64));
        let r = &roots.roots[0];
        assert!(r.lo >= rat_int(-2) && r.hi <= rat_int(0));
        assert!(r.lo <= rat_int(-1) && rat_int(-1) <= r.hi);
    }

    #[test]
    fn isolates_three_roots_to_width() {
        // z^3 - 37 z + 12: roots near -6.25, 0.33, 5.92
        let mut roots = RealRoots::isolate(&ip(&[12, -37, 0, 1])).unwrap();
        assert_eq!(roots.count(), 3);
        let w = rat(1, 64);
        for i in 0..3 {
            roots.refine_to_width(i, &w);
        }
        let approx: Vec<f64> = roots.roots.iter().map(|r| to_f64_approx(&r.lo)).collect();
        assert!((approx[0] + 6.2527).abs() < 0.02);
        assert!((approx[1] - 0.3251).abs() < 0.02);
        assert!((approx[2] - 5.9276).abs() < 0.02);
    }

    #[test]
    fn multiplicity_of_double_root() {
        // (z-1)^2 (z+2) = z^3 - 3z + 2
        let roots = RealRoots::isolate(&ip(&[2, -3, 0, 1])).unwrap();
        assert_eq!(roots.count(), 2);
        let mults: Vec<u32> = roots.roots.iter().map(|r| r.multiplicity).collect();
        assert_eq!(mults, vec![1, 2]); // -2 first, then the double root 1
        assert!(roots.roots[1].is_exact() || (roots.roots[1].lo <= rat_int(1) && roots.roots[1].hi >= rat_int(1)));
    }

    #[test]
    fn exact_dyadic_roots_found() {
        // roots at 0, 1/2, -3 (dyadic midpoints likely hit 1/2 exactly)
        // (2z - 1)(z + 3) z = 2z^3 + 5z^2 - 3z
        let roots = RealRoots::isolate(&ip(&[0, -3, 5, 2])).unwrap();
        assert_eq!(roots.count(), 3);
    }

    #[test]
    fn rational_roots_examples() {
        // z^3 - 37z + 12 has no rational roots
        assert!(rational_roots(&ip(&[12, -37, 0, 1])).unwrap().is_empty());
        // (3z - 1)(z + 2)(z - 5) = 3z^3 - 10z^2 - 27z + 10
        let rs = rational_roots(&ip(&[10, -27, -10, 3])).unwrap();
        assert_eq!(rs, vec![rat_int(-2), rat(1, 3), rat_int(5)]);
        // zero root
        let rs = rational_roots(&ip(&[0, 1, 1])).unwrap();
        assert_eq!(rs, vec![rat_int(-1), rat_int(0)]);
    }

    #[test]
    fn maxmod_all_real() {
        // z^3 - 37 z + 12: max |root| ~ 6.2527
        let (lo, hi) = max_root_modulus(&rp(&[12, -37, 0, 1]), 40).unwrap();
        let (flo, fhi) = (to_f64_approx(&lo), to_f64_approx(&hi));
        assert!(flo <= 6.2528 && 6.2526 <= fhi, "got [{flo}, {fhi}]");
        assert!(fhi - flo < 1e-9);
    }

    #[test]
    fn maxmod_complex_pair() {
        // 3z^3 - 2z - 3: unique real root alpha ~ 1.2197; pair modulus
        // sqrt(1/alpha) ~ 0.9055 < alpha.
        let (lo, hi) = max_root_modulus(&rp(&[-3, -2, 0, 3]), 40).unwrap();
        let (flo, fhi) = (to_f64_approx(&lo), to_f64_approx(&hi));
        assert!(flo <= 1.2198 && 1.2196 <= fhi, "got [{flo}, {fhi}]");
        // z^2 + 1: pair modulus exactly 1
        let (lo, hi) = max_root_modulus(&rp(&[1, 0, 1]), 40).unwrap();
        assert!(lo <= rat_int(1) && rat_int(1) <= hi);
    }

    #[test]
    fn maxmod_pure_power() {
        let (lo, hi) = max_root_modulus(&rp(&[0, 0, 0, 2]), 40).unwrap();
        assert!(lo.is_zero() && hi.is_zero());
    }
}
