//! Exact counts of W(m,n) and T(m,n).
//!
//! Two routes that never touch enumeration: the binomial sum
//! `sum_{k=1}^{n} C(m+k, k) C(n-1, k-1)` and the coefficient of `x^n` in
//! `((1-x)/(1-2x))^(m+1)`, extracted from dense truncated power series.
//! Both return 1 for `n = 0`, matching the single empty word.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision nonnegative count.
pub type BigCount = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("operand truncated at order {have}, product needs order {needed}")]
    TruncationTooShort { needed: usize, have: usize },
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigCount {
    if b < 0 || b as u64 > a {
        return BigCount::zero();
    }
    let b = (b as u64).min(a - b as u64);
    // Each partial product is C(a-b+i, i), so the division is exact.
    let mut acc = BigCount::one();
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// `sum_{k=1}^{n} C(m+k, k) C(n-1, k-1)`, or 1 when `n = 0`.
pub fn closed_form_count(m: usize, n: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    let (m, n) = (m as u64, n as u64);
    (1..=n)
        .map(|k| binomial(m + k, k as i64) * binomial(n - 1, k as i64 - 1))
        .sum()
}

/// A formal power series `c_0 + c_1 x + ... + c_N x^N + O(x^(N+1))` with
/// exact integer coefficients. The truncation order `N` is always explicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// A series whose known coefficients are exactly `coeffs`, so the order
    /// is `coeffs.len() - 1`. Panics on an empty vector.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self { coeffs }
    }

    /// A polynomial viewed as a series truncated at `order`: padded with
    /// zeros or cut as needed.
    pub fn polynomial<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut c: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        c.resize(order + 1, BigInt::zero());
        Self { coeffs: c }
    }

    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        Self::polynomial([1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `[x^i]`, or `None` beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Option<&BigInt> {
        self.coeffs.get(i)
    }

    /// Drops coefficients above `order`.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        self.require(order)?;
        Ok(Self {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn require(&self, order: usize) -> Result<(), SeriesError> {
        if self.order() < order {
            return Err(SeriesError::TruncationTooShort {
                needed: order,
                have: self.order(),
            });
        }
        Ok(())
    }
}

/// Expansion of `1/(1 - scale*x)` up to `x^order`.
pub fn series_geometric(scale: i64, order: usize) -> IntSeries {
    let scale = BigInt::from(scale);
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigInt::one();
    for _ in 0..=order {
        let next = &term * &scale;
        coeffs.push(term);
        term = next;
    }
    IntSeries { coeffs }
}

/// Cauchy product truncated at `order`.
pub fn series_mul(a: &IntSeries, b: &IntSeries, order: usize) -> Result<IntSeries, SeriesError> {
    a.require(order)?;
    b.require(order)?;
    let mut coeffs = vec![BigInt::zero(); order + 1];
    for (i, x) in a.coeffs[..=order].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs[..=order - i].iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    Ok(IntSeries { coeffs })
}

/// `a^e` truncated at `order`, by repeated squaring.
pub fn series_pow(a: &IntSeries, e: u64, order: usize) -> Result<IntSeries, SeriesError> {
    let mut base = a.truncate(order)?;
    let mut acc = IntSeries::one(order);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = series_mul(&acc, &base, order)?;
        }
        e >>= 1;
        if e > 0 {
            base = series_mul(&base, &base, order)?;
        }
    }
    Ok(acc)
}

/// `[x^n] ((1-x)/(1-2x))^(m+1)`.
pub fn gf_coefficient(m: usize, n: usize) -> BigCount {
    let one_minus_x = IntSeries::polynomial([1, -1], n);
    let ratio =
        series_mul(&one_minus_x, &series_geometric(2, n), n).expect("operands built at order n");
    let power = series_pow(&ratio, m as u64 + 1, n).expect("operand built at order n");
    let c = &power.coeffs[n];
    debug_assert!(!c.is_negative());
    c.magnitude().clone()
}
