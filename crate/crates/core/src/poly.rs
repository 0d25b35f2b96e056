//! Polynomials in `q` with exact rational coefficients and the coefficient-wise
//! dominance order `P ≪ R` (every coefficient of `R − P` is non-negative).

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::rational::Rational;
use crate::verdict::{Side, Verdict, Witness};

/// Dense coefficients, lowest degree first, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| crate::rational::int(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `q^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, q: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// `c0 c1 c2 …`; the zero polynomial prints as `0`.
    pub fn to_coeff_string(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        parts.join(" ")
    }

    /// Parses the space-separated coefficient form.
    pub fn parse_coeffs(s: &str) -> Result<Self, String> {
        s.split_whitespace()
            .map(crate::rational::parse_signed)
            .collect::<Result<Vec<_>, _>>()
            .map(Self::new)
    }

    /// Human form such as `q+2q²+q³`.
    pub fn to_q_string(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            let coef = if a.is_integer() {
                a.to_string()
            } else {
                format!("({a})")
            };
            match k {
                0 => out.push_str(&coef),
                _ => {
                    if !a.is_one() {
                        out.push_str(&coef);
                    }
                    out.push('q');
                    if k > 1 {
                        out.push_str(&superscript(k));
                    }
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_coeff_string())
    }
}

impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

/// `P ≪ R`: every coefficient of `R − P` is non-negative. The witness is the
/// lowest offending power with both coefficients.
pub fn poly_dominates(p: &QPolynomial, r: &QPolynomial) -> Verdict {
    let n = p.coeffs.len().max(r.coeffs.len());
    for k in 0..n {
        let (pk, rk) = (p.coeff(k), r.coeff(k));
        if pk > rk {
            return Verdict::fail(Witness::at_index(
                "dominance",
                k,
                Side::Rational(pk),
                Side::Rational(rk),
            ));
        }
    }
    Verdict::pass()
}
