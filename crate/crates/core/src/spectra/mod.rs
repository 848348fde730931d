//! Laplacian assembly, floating-point spectra, and exact eigenvalue
//! counting over rational intervals.
//!
//! Verdicts about bounds always come from the exact path (characteristic
//! polynomial, square-free decomposition, Sturm chains); floats are
//! informational and for cross-validation only.

mod jacobi;
pub mod poly;

use std::cmp::Ordering;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;
use poly::{square_free_decomposition, IntegerPolynomial, SturmChain};

pub use jacobi::symmetric_eigenvalues;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpectraError {
    #[error("eigenvalue index {index} out of range 1..={order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("interval endpoints out of order: {lo} > {hi}")]
    EndpointsOutOfOrder { lo: String, hi: String },
    #[error("malformed rational '{input}': {reason}")]
    BadRational { input: String, reason: String },
}

/// Parses "p/q" or a plain integer into a rational in lowest terms.
pub fn parse_rational(s: &str) -> Result<BigRational, SpectraError> {
    let bad = |reason: &str| SpectraError::BadRational {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let mut split = s.splitn(2, '/');
    let numer: BigInt = split
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    match split.next() {
        None => Ok(BigRational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d.trim().parse().map_err(|_| bad("denominator is not an integer"))?;
            if denom.is_zero() {
                return Err(bad("denominator is zero"));
            }
            Ok(BigRational::new(numer, denom))
        }
    }
}

/// Renders a rational as "p" or "p/q".
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An interval with rational endpoints and independent open/closed ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalQuery {
    lo: BigRational,
    lo_closed: bool,
    hi: BigRational,
    hi_closed: bool,
}

impl IntervalQuery {
    pub fn new(
        lo: BigRational,
        lo_closed: bool,
        hi: BigRational,
        hi_closed: bool,
    ) -> Result<Self, SpectraError> {
        if lo > hi {
            return Err(SpectraError::EndpointsOutOfOrder {
                lo: rational_to_string(&lo),
                hi: rational_to_string(&hi),
            });
        }
        Ok(IntervalQuery { lo, lo_closed, hi, hi_closed })
    }

    /// [lo, hi]
    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self, SpectraError> {
        IntervalQuery::new(lo, true, hi, true)
    }

    /// (lo, hi]
    pub fn open_closed(lo: BigRational, hi: BigRational) -> Result<Self, SpectraError> {
        IntervalQuery::new(lo, false, hi, true)
    }

    /// [a, b] with integer endpoints.
    pub fn closed_ints(lo: i64, hi: i64) -> Self {
        IntervalQuery::closed(BigRational::from_integer(lo.into()), BigRational::from_integer(hi.into()))
            .expect("ordered integer endpoints")
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn lo_closed(&self) -> bool {
        self.lo_closed
    }

    pub fn hi_closed(&self) -> bool {
        self.hi_closed
    }

    /// Membership test for a float value; used only by cross-validation.
    pub fn contains_f64(&self, x: f64) -> bool {
        let lo = self.lo.to_f64().unwrap();
        let hi = self.hi.to_f64().unwrap();
        let above = if self.lo_closed { x >= lo } else { x > lo };
        let below = if self.hi_closed { x <= hi } else { x < hi };
        above && below
    }
}

impl std::fmt::Display for IntervalQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            rational_to_string(&self.lo),
            rational_to_string(&self.hi),
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

/// Dense symmetric integer Laplacian: degrees on the diagonal, -1 for
/// edges. Row sums are zero by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&x| x as f64).collect()
    }

    /// Principal submatrix after deleting one vertex's row and column.
    pub fn delete_row_col(&self, v: usize) -> Vec<f64> {
        let keep: Vec<usize> = (0..self.n).filter(|&i| i != v).collect();
        let mut out = Vec::with_capacity(keep.len() * keep.len());
        for &i in &keep {
            for &j in &keep {
                out.push(self.entry(i, j) as f64);
            }
        }
        out
    }
}

/// L(G) = D(G) - A(G).
pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    let n = g.order();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for w in g.neighbors(v) {
            entries[v * n + w] = -1;
        }
    }
    LaplacianMatrix { n, entries }
}

/// Full Laplacian spectrum, sorted non-increasing, with the solver's
/// certified absolute error bound.
#[derive(Debug, Clone)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The j-th largest eigenvalue, 1-indexed.
    pub fn mu(&self, j: usize) -> f64 {
        self.values[j - 1]
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }
}

/// Floating-point Laplacian spectrum via cyclic Jacobi.
pub fn spectrum_float(g: &Graph) -> Spectrum {
    let l = laplacian(g);
    let (values, tolerance) = symmetric_eigenvalues(&l.to_f64(), l.order());
    Spectrum { values, tolerance }
}

/// Closed-form j-th largest Laplacian eigenvalue of the path P_n:
/// 4 sin^2((n-j) pi / (2n)).
pub fn path_eigenvalue(n: usize, j: usize) -> Result<f64, SpectraError> {
    if j == 0 || j > n {
        return Err(SpectraError::IndexOutOfRange { index: j, order: n });
    }
    let angle = (n - j) as f64 * std::f64::consts::PI / (2 * n) as f64;
    Ok(4.0 * angle.sin().powi(2))
}

/// Forced eigenvector profile on a pendant path when the eigenvalue is
/// exactly 4: entry i is (-1)^(i-1) (2i-1) times the leaf value.
pub fn pendant_path_profile(len: usize) -> Vec<i64> {
    (1..=len as i64)
        .map(|i| if i % 2 == 1 { 2 * i - 1 } else { -(2 * i - 1) })
        .collect()
}

/// Characteristic polynomial det(xI - L(G)), computed exactly by
/// Faddeev-LeVerrier; every division is an exact integer division.
pub fn char_poly(g: &Graph) -> IntegerPolynomial {
    let l = laplacian(g);
    let n = l.order();
    let a: Vec<BigInt> = l.entries.iter().map(|&x| BigInt::from(x)).collect();

    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = a.clone();
    for k in 1..=n {
        let trace: BigInt = (0..n).map(|i| m[i * n + i].clone()).sum();
        let (c, rem) = num::Integer::div_rem(&-trace, &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier trace not divisible");
        coeffs[n - k] = c.clone();
        if k == n {
            break;
        }
        // m <- a * (m + c I)
        for i in 0..n {
            m[i * n + i] += &c;
        }
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for t in 0..n {
                let aij = &a[i * n + t];
                if aij.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = aij * &m[t * n + j];
                    next[i * n + j] += prod;
                }
            }
        }
        m = next;
    }
    IntegerPolynomial::new(coeffs)
}

/// Exact eigenvalue counter for one graph: the square-free decomposition
/// of its characteristic polynomial plus a Sturm chain per factor.
/// Construction is the expensive part; each query is cheap thereafter.
pub struct ExactCounter {
    parts: Vec<CounterPart>,
}

struct CounterPart {
    multiplicity: usize,
    poly: IntegerPolynomial,
    chain: SturmChain,
    /// Strict upper bound for the factor's roots (Cauchy bound).
    root_bound: BigRational,
}

impl ExactCounter {
    pub fn new(g: &Graph) -> Self {
        Self::from_char_poly(char_poly(g))
    }

    pub fn from_char_poly(p: IntegerPolynomial) -> Self {
        let parts = square_free_decomposition(&p)
            .into_iter()
            .map(|(multiplicity, poly)| {
                let chain = SturmChain::new(&poly);
                let root_bound = cauchy_bound(&poly);
                CounterPart { multiplicity, poly, chain, root_bound }
            })
            .collect();
        ExactCounter { parts }
    }

    /// Exact number of roots in the interval, counted with multiplicity.
    pub fn count(&self, q: &IntervalQuery) -> usize {
        let lo = q.lo();
        let hi = q.hi();
        if lo == hi {
            return if q.lo_closed() && q.hi_closed() { self.multiplicity_at(lo) } else { 0 };
        }
        let mut total = 0;
        for part in &self.parts {
            let mut count = part.count_strictly_inside(lo, hi);
            if q.lo_closed() && part.poly.sign_at(lo) == 0 {
                count += 1;
            }
            if q.hi_closed() && part.poly.sign_at(hi) == 0 {
                count += 1;
            }
            total += part.multiplicity * count;
        }
        total
    }

    /// Multiplicity of `r` as an eigenvalue.
    pub fn multiplicity_at(&self, r: &BigRational) -> usize {
        self.parts
            .iter()
            .filter(|p| p.poly.sign_at(r) == 0)
            .map(|p| p.multiplicity)
            .sum()
    }

    /// Number of eigenvalues strictly greater than `r`.
    pub fn count_greater_than(&self, r: &BigRational) -> usize {
        self.parts
            .iter()
            .map(|part| {
                if *r >= part.root_bound {
                    return 0;
                }
                part.multiplicity * part.count_strictly_inside(r, &part.root_bound)
            })
            .sum()
    }

    /// Number of eigenvalues greater than or equal to `r`.
    pub fn count_greater_equal(&self, r: &BigRational) -> usize {
        self.count_greater_than(r) + self.multiplicity_at(r)
    }

    /// Total root count (the matrix order, for a characteristic polynomial).
    pub fn total(&self) -> usize {
        self.parts
            .iter()
            .map(|p| p.multiplicity * p.poly.degree().unwrap())
            .sum()
    }
}

impl CounterPart {
    /// Distinct roots of the square-free factor strictly inside (lo, hi).
    fn count_strictly_inside(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let lo_is_root = self.poly.sign_at(lo) == 0;
        let hi_is_root = self.poly.sign_at(hi) == 0;
        if !lo_is_root && !hi_is_root {
            return self.chain.count_open(lo, hi);
        }
        // Divide out the endpoint roots, then apply Sturm to the rest;
        // interior roots are untouched.
        let mut reduced = self.poly.clone();
        if lo_is_root {
            reduced = reduced.div_exact(&IntegerPolynomial::linear_with_root(lo));
        }
        if hi_is_root {
            reduced = reduced.div_exact(&IntegerPolynomial::linear_with_root(hi));
        }
        if reduced.degree() == Some(0) {
            return 0;
        }
        SturmChain::new(&reduced).count_open(lo, hi)
    }
}

/// Strict upper bound on root magnitudes: 1 + max |c_i| / |lead|.
fn cauchy_bound(p: &IntegerPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .expect("nonzero polynomial");
    BigRational::one() + BigRational::new(max, lead)
}

/// Exact m_G(I): eigenvalues of L(G) in the interval, with multiplicity.
pub fn count_interval_exact(g: &Graph, q: &IntervalQuery) -> usize {
    ExactCounter::new(g).count(q)
}

/// Decides mu_j(G) versus the rational r exactly. The result ordering is
/// `mu_j.cmp(r)`: `Greater` means mu_j > r.
pub fn eigenvalue_rank_test(g: &Graph, j: usize, r: &BigRational) -> Result<Ordering, SpectraError> {
    let n = g.order();
    if j == 0 || j > n {
        return Err(SpectraError::IndexOutOfRange { index: j, order: n });
    }
    let counter = ExactCounter::new(g);
    let greater = counter.count_greater_than(r);
    if j <= greater {
        return Ok(Ordering::Greater);
    }
    if j <= greater + counter.multiplicity_at(r) {
        return Ok(Ordering::Equal);
    }
    Ok(Ordering::Less)
}
