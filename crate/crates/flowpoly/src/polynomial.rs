//! Exact univariate polynomial arithmetic with arbitrary-precision
//! integer coefficients.
//!
//! Everything in the crate that looks like a polynomial — flow
//! polynomials, their sign-normalized transforms, coefficient bounds —
//! is an [`IntPoly`]: a dense coefficient vector over `BigInt`, constant
//! term first. The zero polynomial is the empty vector and reports
//! degree `None`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::{Error, Result};

/// Dense univariate polynomial with exact integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; the highest index is always
/// nonzero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from constant-term-first coefficients,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::from_i64(&[1])
    }

    /// The monomial c·t^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The linear factor t + a.
    pub fn linear_shift(a: i64) -> Self {
        IntPoly::from_i64(&[a, 1])
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

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        let mut acc = IntPoly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: returns `r` with `self = divisor · r`, or
    /// [`Error::InexactDivision`] when no such integer polynomial exists.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let nd = self.degree().unwrap();
        if nd < dd {
            return Err(Error::InexactDivision);
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, &lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    /// Derivative with respect to t.
    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point: -1, 0 or +1.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let v = self.eval_rational(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    /// Substitutes -t and multiplies by (-1)^(m-n+1).
    ///
    /// Applied to the flow polynomial of a connected bridgeless
    /// (n,m)-graph this yields the sign-normalized form whose
    /// coefficients are all positive.
    pub fn tau_transform(&self, m: usize, n: usize) -> IntPoly {
        let global_negate = (m + n + 1) % 2 == 1; // parity of m-n+1
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut v = c.clone();
                if i % 2 == 1 {
                    v = -v;
                }
                if global_negate {
                    v = -v;
                }
                v
            })
            .collect();
        IntPoly::new(out)
    }

    /// Coefficient-wise partial order: true iff every coefficient of
    /// `self` is at most the matching coefficient of `other` (shorter
    /// side padded with zeros).
    pub fn leq_c(&self, other: &IntPoly) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) <= other.coeff(i))
    }

    /// Absolute values of the coefficients, constant term first.
    pub fn abs_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.abs()).collect()
    }

    /// Space-separated coefficients from the constant term upward;
    /// `"0"` for the zero polynomial.
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses the space-separated coefficient form.
    pub fn from_coeff_string(s: &str) -> Result<IntPoly> {
        let mut coeffs = Vec::new();
        for tok in s.split_whitespace() {
            let v: BigInt = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
            coeffs.push(v);
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Coefficients as decimal strings, constant term first.
    pub fn coeff_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly[{}]", self.to_coeff_string())
    }
}

impl fmt::Display for IntPoly {
    /// Human form, highest power first, e.g. `t^2 - 3t + 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// A product of shifted linear factors ∏ (t + a)^e.
///
/// All coefficient bounds handled by the crate have this shape; `expand`
/// turns the product into an explicit [`IntPoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundSpec {
    /// (shift, exponent) pairs; the empty list is the constant 1.
    pub factors: Vec<(i64, u32)>,
}

impl BoundSpec {
    pub fn new(factors: Vec<(i64, u32)>) -> Self {
        BoundSpec { factors }
    }

    /// Exact expansion of the product.
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for &(shift, exp) in &self.factors {
            acc = acc.mul(&IntPoly::linear_shift(shift).pow(exp as usize));
        }
        acc
    }

    /// Compact display such as `(t+1)(t+2)^3`.
    pub fn product_string(&self) -> String {
        if self.factors.iter().all(|&(_, e)| e == 0) {
            return "1".to_string();
        }
        let mut s = String::new();
        for &(shift, exp) in &self.factors {
            if exp == 0 {
                continue;
            }
            let base = if shift >= 0 {
                format!("(t+{shift})")
            } else {
                format!("(t{shift})")
            };
            s.push_str(&base);
            if exp > 1 {
                s.push_str(&format!("^{exp}"));
            }
        }
        s
    }
}
