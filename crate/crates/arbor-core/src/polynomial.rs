use crate::error::{Error, Result};
use std::fmt;

/// Univariate polynomial in `k` with exact `i128` coefficients, ascending
/// degree, trailing zeros trimmed (the zero polynomial is the empty list).
///
/// Every operation checks for overflow; nothing wraps silently.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

fn add_i(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow)
}

fn sub_i(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

fn mul_i(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn constant(c: i128) -> Self {
        IntPolynomial { coeffs: vec![c] }.trimmed()
    }

    /// `coeffs[i]` is the coefficient of `k^i`.
    pub fn from_coeffs(coeffs: Vec<i128>) -> Self {
        IntPolynomial { coeffs }.trimmed()
    }

    /// The monomial `c * k^degree`.
    pub fn monomial(c: i128, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        IntPolynomial { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i128 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(add_i(self.coeff(i), other.coeff(i))?);
        }
        Ok(IntPolynomial { coeffs: out }.trimmed())
    }

    pub fn sub(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(sub_i(self.coeff(i), other.coeff(i))?);
        }
        Ok(IntPolynomial { coeffs: out }.trimmed())
    }

    pub fn mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_i(out[i + j], mul_i(a, b)?)?;
            }
        }
        Ok(IntPolynomial { coeffs: out }.trimmed())
    }

    pub fn scale(&self, c: i128) -> Result<IntPolynomial> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            out.push(mul_i(a, c)?);
        }
        Ok(IntPolynomial { coeffs: out }.trimmed())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, k: i128) -> Result<i128> {
        let mut acc = 0i128;
        for &c in self.coeffs.iter().rev() {
            acc = add_i(mul_i(acc, k)?, c)?;
        }
        Ok(acc)
    }

    /// Divides every coefficient by `d` exactly; `None` if any remainder.
    pub fn div_exact(&self, d: i128) -> Option<IntPolynomial> {
        assert!(d != 0, "division by zero");
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            if c % d != 0 {
                return None;
            }
            out.push(c / d);
        }
        Some(IntPolynomial { coeffs: out })
    }

    /// Sum of the coefficients, i.e. the value at `k = 1`.
    pub fn coeff_sum(&self) -> Result<i128> {
        self.eval(1)
    }

    /// Machine form: `coeffs: c0 c1 c2 ...` ascending; the zero polynomial
    /// prints a bare `coeffs:`.
    pub fn coeffs_line(&self) -> String {
        let mut s = String::from("coeffs:");
        for c in &self.coeffs {
            s.push(' ');
            s.push_str(&c.to_string());
        }
        s
    }
}

/// Canonical human rendering: descending powers, explicit signs, zero terms
/// omitted, e.g. `k^4 - 4k^2 + 3k`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for deg in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[deg];
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                1 => {
                    if mag == 1 {
                        write!(f, "k")?;
                    } else {
                        write!(f, "{mag}k")?;
                    }
                }
                _ => {
                    if mag == 1 {
                        write!(f, "k^{deg}")?;
                    } else {
                        write!(f, "{mag}k^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// The falling factorial `k(k-1)...(k-i+1)` as a polynomial; `(k)_0 = 1`.
pub fn falling_factorial(i: usize) -> Result<IntPolynomial> {
    let mut p = IntPolynomial::one();
    for j in 0..i {
        let factor = IntPolynomial::from_coeffs(vec![-(j as i128), 1]);
        p = p.mul(&factor)?;
    }
    Ok(p)
}

pub fn factorial(i: usize) -> Result<i128> {
    let mut acc = 1i128;
    for j in 2..=i {
        acc = mul_i(acc, j as i128)?;
    }
    Ok(acc)
}

/// Binomial coefficient as an exact integer (Pascal recurrence).
pub fn binomial(n: u64, k: u64) -> Result<i128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc = 1i128;
    for j in 0..k {
        acc = mul_i(acc, (n - j) as i128)?;
        acc /= (j + 1) as i128; // exact: product of j+1 consecutive integers
    }
    Ok(acc)
}

/// Maximum `n` accepted by [`stirling2`].
pub const MAX_STIRLING_N: usize = 20;

/// Stirling number of the second kind `S(n, m)`: partitions of an `n`-set
/// into `m` nonempty blocks. Requires `m <= n <= 20`.
pub fn stirling2(n: usize, m: usize) -> i128 {
    assert!(
        m <= n && n <= MAX_STIRLING_N,
        "stirling2 requires 0 <= m <= n <= {MAX_STIRLING_N}, got S({n},{m})"
    );
    // S(n,m) = m*S(n-1,m) + S(n-1,m-1), S(0,0) = 1.
    let mut row = vec![0i128; m + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=m.min(i)).rev() {
            row[j] = (j as i128) * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[m]
}

/// Expands block counts into the cover-counting polynomial
/// `sum_i p_i * k(k-1)...(k-i+1)`, where `p_i = p[i-1]` is the number of
/// unordered partitions with `i` blocks. Equals `sum_i i!*p_i*C(k,i)`.
pub fn from_block_counts(p: &[u64]) -> Result<IntPolynomial> {
    let mut acc = IntPolynomial::zero();
    for (idx, &count) in p.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let term = falling_factorial(idx + 1)?.scale(count as i128)?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}
