use std::fmt;

use num_bigint::BigInt;

use super::{factorial, Monomial, Polynomial, Rational, Symbol};
use crate::error::{Error, Result};

/// Power series in one distinguished variable, truncated after `order`.
///
/// Coefficient `i` multiplies `variable^i` and never mentions `variable`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable: Symbol,
    coefficients: Vec<Polynomial>,
}

impl TruncatedSeries {
    /// Builds a series from `order + 1` coefficients.
    pub fn new(variable: Symbol, coefficients: Vec<Polynomial>) -> Result<Self> {
        assert!(!coefficients.is_empty(), "a series keeps at least one coefficient");
        if coefficients.iter().any(|c| c.contains(&variable)) {
            return Err(Error::VariableInCoefficient(variable));
        }
        Ok(TruncatedSeries {
            variable,
            coefficients,
        })
    }

    pub fn zero(variable: Symbol, order: usize) -> Self {
        TruncatedSeries {
            variable,
            coefficients: vec![Polynomial::zero(); order + 1],
        }
    }

    /// Truncates a polynomial in `variable` to the given order.
    pub fn from_polynomial(p: &Polynomial, variable: Symbol, order: usize) -> Self {
        let mut coefficients = p.coefficients_in(&variable);
        coefficients.resize(order + 1, Polynomial::zero());
        TruncatedSeries {
            variable,
            coefficients,
        }
    }

    /// The series with `n!`-scaled coefficients, i.e. `sum_n c_n v^n / n!`.
    pub fn from_egf(variable: Symbol, egf: Vec<Polynomial>) -> Result<Self> {
        let coefficients = egf
            .into_iter()
            .enumerate()
            .map(|(n, c)| c.scale(&Rational::new(BigInt::from(1), factorial(n as u32))))
            .collect();
        TruncatedSeries::new(variable, coefficients)
    }

    pub fn variable(&self) -> &Symbol {
        &self.variable
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    /// Coefficient of `variable^n`; zero beyond the truncation order.
    pub fn coefficient(&self, n: usize) -> Polynomial {
        self.coefficients.get(n).cloned().unwrap_or_default()
    }

    /// `n!` times the coefficient of `variable^n`.
    pub fn egf_coefficient(&self, n: usize) -> Polynomial {
        self.coefficient(n)
            .scale(&Rational::from_integer(factorial(n as u32)))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(order + 1, Polynomial::zero());
        TruncatedSeries {
            variable: self.variable.clone(),
            coefficients,
        }
    }

    fn check_variable(&self, other: &TruncatedSeries) -> Result<()> {
        if self.variable != other.variable {
            return Err(Error::VariableMismatch(
                self.variable.clone(),
                other.variable.clone(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_variable(other)?;
        let order = self.order().min(other.order());
        let coefficients = (0..=order)
            .map(|i| &self.coefficients[i] + &other.coefficients[i])
            .collect();
        Ok(TruncatedSeries {
            variable: self.variable.clone(),
            coefficients,
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<Self> {
        self.add(&other.scale_rational(&Rational::from_integer((-1).into())))
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<Self> {
        self.check_variable(other)?;
        let order = self.order().min(other.order());
        let mut coefficients = vec![Polynomial::zero(); order + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(order + 1 - i) {
                coefficients[i + j] += a * b;
            }
        }
        Ok(TruncatedSeries {
            variable: self.variable.clone(),
            coefficients,
        })
    }

    /// Multiplies every coefficient by a polynomial free of the series variable.
    pub fn scale(&self, factor: &Polynomial) -> Result<Self> {
        if factor.contains(&self.variable) {
            return Err(Error::VariableInCoefficient(self.variable.clone()));
        }
        Ok(TruncatedSeries {
            variable: self.variable.clone(),
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        })
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        TruncatedSeries {
            variable: self.variable.clone(),
            coefficients: self.coefficients.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut one = TruncatedSeries::zero(self.variable.clone(), self.order());
        one.coefficients[0] = Polynomial::one();
        (0..k).fold(one, |acc, _| acc.mul(self).expect("same variable"))
    }

    /// `exp(self)` for a series with zero constant term.
    ///
    /// With `f = exp(a)` we have `f' = a' f`, which gives
    /// `n f_n = sum_{k=1..n} k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coefficients[0].is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let order = self.order();
        let mut f: Vec<Polynomial> = Vec::with_capacity(order + 1);
        f.push(Polynomial::one());
        for n in 1..=order {
            let mut acc = Polynomial::zero();
            for k in 1..=n {
                let a = &self.coefficients[k];
                if a.is_zero() {
                    continue;
                }
                acc += (a * &f[n - k]).scale(&Rational::from_integer(BigInt::from(k)));
            }
            f.push(acc.scale(&Rational::new(BigInt::from(1), BigInt::from(n))));
        }
        Ok(TruncatedSeries {
            variable: self.variable.clone(),
            coefficients: f,
        })
    }

    /// The truncated sum as an ordinary polynomial.
    pub fn to_polynomial(&self) -> Polynomial {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul_monomial(&Monomial::power(self.variable.clone(), i as u32)))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Polynomial::is_zero)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O({}^{})", self.to_polynomial(), self.variable, self.order() + 1)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn lam(coeffs: &[&str]) -> TruncatedSeries {
        TruncatedSeries::new(Symbol::new("lambda"), coeffs.iter().map(|c| p(c)).collect()).unwrap()
    }

    #[test]
    fn product_of_conjugates() {
        let s = lam(&["1", "1", "0"]).mul(&lam(&["1", "-1", "0"])).unwrap();
        assert_eq!(s, lam(&["1", "0", "-1"]));
    }

    #[test]
    fn scaling_exp_series() {
        let e = lam(&["0", "1", "0", "0"]).exp().unwrap();
        assert_eq!(e, lam(&["1", "1", "1/2", "1/6"]));
        assert_eq!(e.scale(&p("y")).unwrap(), lam(&["y", "y", "1/2*y", "1/6*y"]));
    }

    #[test]
    fn mul_truncates_to_smaller_order() {
        let a = lam(&["1", "1", "1"]);
        let b = lam(&["1", "2", "3", "4", "5"]);
        assert_eq!(a.mul(&b).unwrap().order(), 2);
    }

    #[test]
    fn exp_of_bell_series() {
        // (e^lambda - 1) y at order 2 -> 1 + y lambda + (y + y^2) lambda^2 / 2
        let inner = lam(&["0", "y", "1/2*y"]);
        assert_eq!(inner.exp().unwrap(), lam(&["1", "y", "1/2*y + 1/2*y^2"]));
    }

    #[test]
    fn exp_edge_cases() {
        assert_eq!(lam(&["0", "0"]).exp().unwrap(), lam(&["1", "0"]));
        assert_eq!(lam(&["1", "1"]).exp(), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn variable_checks() {
        let a = lam(&["1"]);
        let b = TruncatedSeries::new(Symbol::new("z"), vec![p("1")]).unwrap();
        assert!(matches!(a.add(&b), Err(Error::VariableMismatch(..))));
        assert!(matches!(a.mul(&b), Err(Error::VariableMismatch(..))));
        assert!(TruncatedSeries::new(Symbol::new("z"), vec![p("z")]).is_err());
        assert!(a.scale(&p("lambda")).is_err());
    }

    #[test]
    fn egf_round_trip() {
        let s = TruncatedSeries::from_egf(Symbol::new("z"), vec![p("1"), p("1"), p("2")]).unwrap();
        assert_eq!(s.coefficient(2).constant_value(), Some(rational(1, 1)));
        assert_eq!(s.egf_coefficient(2), p("2"));
    }
}
