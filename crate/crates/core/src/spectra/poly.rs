//! Dense integer polynomials with the exact operations needed for
//! root counting: content/primitive parts, pseudo-remainders, GCD by a
//! primitive remainder sequence, Yun square-free decomposition, and Sturm
//! chains evaluated at rational points. No floating point anywhere.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Zero};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// (`coeffs[k]` multiplies `x^k`). The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    coeffs: Vec<BigInt>,
}

impl std::fmt::Debug for IntegerPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}*x^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl IntegerPolynomial {
    pub fn zero() -> Self {
        IntegerPolynomial { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, trimming leading zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntegerPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntegerPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monic linear polynomial q·x − p with root p/q (q > 0, lowest terms).
    pub fn linear_with_root(r: &BigRational) -> Self {
        IntegerPolynomial::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        !self.is_zero() && self.leading().is_one()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntegerPolynomial::zero();
        }
        IntegerPolynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// GCD of coefficient magnitudes; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, keeping the leading-coefficient sign.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntegerPolynomial::zero();
        }
        let content = self.content();
        if content.is_one() {
            return self.clone();
        }
        IntegerPolynomial::new(self.coeffs.iter().map(|c| c / &content).collect())
    }

    pub fn neg(&self) -> Self {
        IntegerPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// Exact quotient self / divisor; panics if the division is not exact.
    /// Used only where exactness is an invariant (GCD factors, known roots).
    pub fn div_exact(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntegerPolynomial::zero();
        }
        let dn = divisor.degree().unwrap();
        let n = self.degree().unwrap();
        assert!(n >= dn, "exact division of lower-degree polynomial");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - dn + 1];
        let lead = divisor.leading();
        for k in (0..=n - dn).rev() {
            let (q, r) = rem[k + dn].div_rem(lead);
            assert!(r.is_zero(), "inexact polynomial division");
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = dc * &q;
                rem[k + i] -= prod;
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Zero::is_zero), "nonzero remainder in exact division");
        IntegerPolynomial::new(quot)
    }

    /// Pseudo-remainder scaled so that it is a *positive* rational multiple
    /// of the true remainder of self / divisor. Keeps Sturm sign semantics.
    fn signed_pseudo_rem(&self, divisor: &Self) -> Self {
        let m = divisor.degree().expect("pseudo-remainder by zero");
        debug_assert!(self.degree() >= Some(m));
        let lead = divisor.leading().clone();
        let mut rem = self.coeffs.clone();
        let mut steps = 0usize;
        loop {
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            if rem.len() <= m {
                break;
            }
            // rem <- lead * rem - top * x^(deg rem - m) * divisor,
            // which cancels the top term and scales the invariant by lead.
            let shift = rem.len() - 1 - m;
            let top = rem.last().unwrap().clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                let prod = dc * &top;
                rem[shift + i] -= prod;
            }
            steps += 1;
        }
        let r = IntegerPolynomial::new(rem);
        // r equals lead^steps times the true remainder; flip the sign when
        // that multiplier is negative.
        if lead.sign() == Sign::Minus && steps % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }

    /// Primitive GCD with positive leading coefficient (constant 1 for
    /// coprime inputs).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b.abs_lc();
        }
        if b.is_zero() {
            return a.abs_lc();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return IntegerPolynomial::new(vec![BigInt::one()]);
            }
            let r = a.signed_pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.abs_lc()
    }

    fn abs_lc(&self) -> Self {
        if !self.is_zero() && self.leading().sign() == Sign::Minus {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at p/q without building rationals: evaluates
    /// the integer q^deg · self(p/q) by Horner (q > 0 in lowest terms, so
    /// the sign is unchanged by the scaling).
    pub fn sign_at(&self, x: &BigRational) -> i8 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom();
        let mut acc = self.coeffs.last().unwrap().clone();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev().skip(1) {
            qpow *= q;
            acc = acc * p + c * &qpow;
        }
        match acc.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// Multiplicity of the rational `r` as a root (0 when not a root).
    pub fn root_multiplicity(&self, r: &BigRational) -> usize {
        let lin = IntegerPolynomial::linear_with_root(r);
        let mut p = self.clone();
        let mut m = 0;
        while !p.is_zero() && p.sign_at(r) == 0 {
            p = p.div_exact(&lin);
            m += 1;
        }
        m
    }

    /// Coefficients rendered as decimal strings, ascending.
    pub fn decimal_coeffs(&self) -> Vec<String> {
        self.coeffs.iter().map(BigInt::to_string).collect()
    }
}

/// Square-free decomposition by Yun's algorithm: returns pairs
/// `(multiplicity, factor)` with pairwise-coprime square-free factors and
/// `∏ factor^multiplicity` equal to the input up to a constant.
pub fn square_free_decomposition(f: &IntegerPolynomial) -> Vec<(usize, IntegerPolynomial)> {
    assert!(!f.is_zero(), "square-free decomposition of zero");
    if f.degree() == Some(0) {
        return Vec::new();
    }
    let f = f.primitive_part();
    let df = f.derivative();
    let g = f.gcd(&df);
    if g.degree() == Some(0) {
        return vec![(1, f)];
    }
    let mut out = Vec::new();
    let mut b = f.div_exact(&g);
    let mut d = df.div_exact(&g).sub(&b.derivative());
    let mut i = 1;
    while b.degree() > Some(0) {
        let a = b.gcd(&d);
        if a.degree() > Some(0) {
            out.push((i, a.clone()));
        }
        let b_next = b.div_exact(&a);
        let c = d.div_exact(&a);
        d = c.sub(&b_next.derivative());
        b = b_next;
        i += 1;
    }
    debug_assert_eq!(
        out.iter().map(|(k, p)| k * p.degree().unwrap()).sum::<usize>(),
        f.degree().unwrap()
    );
    out
}

impl IntegerPolynomial {
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntegerPolynomial::new(coeffs)
    }
}

/// Sturm chain of a square-free polynomial, with primitive integer entries.
pub struct SturmChain {
    chain: Vec<IntegerPolynomial>,
}

impl SturmChain {
    /// Builds the chain s, s', -prem(...), ... The input must be
    /// square-free so the chain ends in a nonzero constant.
    pub fn new(square_free: &IntegerPolynomial) -> Self {
        let mut chain = vec![square_free.clone()];
        let d = square_free.derivative();
        if !d.is_zero() {
            chain.push(d);
        }
        loop {
            let len = chain.len();
            if len < 2 || chain[len - 1].degree() == Some(0) {
                break;
            }
            let r = chain[len - 2].signed_pseudo_rem(&chain[len - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().primitive_part());
        }
        SturmChain { chain }
    }

    /// Sign variations of the chain at `x`, zeros skipped.
    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: i8 = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    /// Endpoints must not be roots of the underlying polynomial.
    pub fn count_open(&self, lo: &BigRational, hi: &BigRational) -> usize {
        debug_assert!(lo < hi);
        debug_assert!(self.chain[0].sign_at(lo) != 0 && self.chain[0].sign_at(hi) != 0);
        self.variations(lo) - self.variations(hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn div_exact_and_derivative() {
        // (x - 1)(x + 2) = x^2 + x - 2
        let prod = IntegerPolynomial::from_i64(&[-2, 1, 1]);
        let q = prod.div_exact(&IntegerPolynomial::from_i64(&[-1, 1]));
        assert_eq!(q, IntegerPolynomial::from_i64(&[2, 1]));
        assert_eq!(prod.derivative(), IntegerPolynomial::from_i64(&[1, 2]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // gcd((x-1)(x-2), (x-1)(x-3)) = x - 1
        let a = IntegerPolynomial::from_i64(&[2, -3, 1]);
        let b = IntegerPolynomial::from_i64(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), IntegerPolynomial::from_i64(&[-1, 1]));

        // coprime
        let c = IntegerPolynomial::from_i64(&[1, 1]);
        let d = IntegerPolynomial::from_i64(&[2, 1]);
        assert_eq!(c.gcd(&d), IntegerPolynomial::from_i64(&[1]));
    }

    #[test]
    fn square_free_structure() {
        // x (x - 3)^2  = x^3 - 6x^2 + 9x : the K_3 characteristic polynomial
        let p = IntegerPolynomial::from_i64(&[0, 9, -6, 1]);
        let parts = square_free_decomposition(&p);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (1, IntegerPolynomial::from_i64(&[0, 1])));
        assert_eq!(parts[1], (2, IntegerPolynomial::from_i64(&[-3, 1])));

        // Already square-free: x^2 - 2
        let sf = IntegerPolynomial::from_i64(&[-2, 0, 1]);
        assert_eq!(square_free_decomposition(&sf), vec![(1, sf)]);
    }

    #[test]
    fn sturm_counts_roots_of_x2_minus_2() {
        let p = IntegerPolynomial::from_i64(&[-2, 0, 1]);
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_open(&rat(-2, 1), &rat(2, 1)), 2);
        assert_eq!(chain.count_open(&rat(0, 1), &rat(2, 1)), 1);
        assert_eq!(chain.count_open(&rat(0, 1), &rat(7, 5)), 0); // sqrt2 > 1.4
        assert_eq!(chain.count_open(&rat(7, 5), &rat(3, 2)), 1);
    }

    #[test]
    fn sturm_with_negative_leading_terms() {
        // -(x-1)(x-2)(x-4) has negative leading coefficient.
        let p = IntegerPolynomial::from_i64(&[-8, 14, -7, 1]).neg();
        let chain = SturmChain::new(&p);
        assert_eq!(chain.count_open(&rat(0, 1), &rat(5, 1)), 3);
        assert_eq!(chain.count_open(&rat(3, 2), &rat(3, 1)), 1);
    }

    #[test]
    fn sign_at_and_multiplicity() {
        let p = IntegerPolynomial::from_i64(&[0, 9, -6, 1]); // x(x-3)^2
        assert_eq!(p.sign_at(&rat(0, 1)), 0);
        assert_eq!(p.sign_at(&rat(3, 1)), 0);
        assert_eq!(p.sign_at(&rat(1, 2)), 1);
        assert_eq!(p.sign_at(&rat(-1, 3)), -1);
        assert_eq!(p.root_multiplicity(&rat(3, 1)), 2);
        assert_eq!(p.root_multiplicity(&rat(0, 1)), 1);
        assert_eq!(p.root_multiplicity(&rat(1, 1)), 0);
    }

    #[test]
    fn eval_matches_sign() {
        let p = IntegerPolynomial::from_i64(&[3, -4, 1]); // (x-1)(x-3)
        let x = rat(5, 2);
        let v = p.eval(&x);
        assert_eq!(v, BigRational::from_f64(-0.75).unwrap());
        assert_eq!(p.sign_at(&x), -1);
    }
}
