use std::collections::BTreeMap;
use std::fmt;
use std::ops::AddAssign;

use num_rational::BigRational;

use crate::ring::{binomial, factorial, Polynomial, Symbol};

/// `sum c_ij (b†)^i b^j`, keyed by `(i, j)`. Zero coefficients are dropped.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NormalForm {
    terms: BTreeMap<(u32, u32), Polynomial>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    pub fn identity() -> Self {
        NormalForm::monomial(0, 0, Polynomial::one())
    }

    pub fn monomial(creation: u32, annihilation: u32, c: Polynomial) -> Self {
        let mut nf = NormalForm::zero();
        nf.add_term(creation, annihilation, c);
        nf
    }

    pub fn add_term(&mut self, creation: u32, annihilation: u32, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let key = (creation, annihilation);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn coefficient(&self, creation: u32, annihilation: u32) -> Polynomial {
        self.terms
            .get(&(creation, annihilation))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending `(creation, annihilation)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Polynomial)> + '_ {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn substitute(&self, v: &Symbol, value: &Polynomial) -> NormalForm {
        let mut out = NormalForm::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c.substitute(v, value));
        }
        out
    }

    /// Coefficients of the diagonal terms `(k, k)` for `k = 0..=n`.
    pub fn diagonal(&self, n: u32) -> Vec<Polynomial> {
        (0..=n).map(|k| self.coefficient(k, k)).collect()
    }
}

impl AddAssign<&NormalForm> for NormalForm {
    fn add_assign(&mut self, rhs: &NormalForm) {
        for (&(i, j), c) in &rhs.terms {
            self.add_term(i, j, c.clone());
        }
    }
}

/// Product of two normal forms, reordered with
/// `b^j (b†)^k = sum_t t! C(j,t) C(k,t) (b†)^(k-t) b^(j-t)`.
pub fn nf_multiply(a: &NormalForm, b: &NormalForm) -> NormalForm {
    let mut out = NormalForm::zero();
    for (&(i, j), ca) in &a.terms {
        for (&(k, l), cb) in &b.terms {
            let coef = ca * cb;
            for t in 0..=j.min(k) {
                let w = binomial(j as i64, t as i64) * binomial(k as i64, t as i64) * factorial(t);
                out.add_term(
                    i + k - t,
                    j + l - t,
                    coef.scale(&BigRational::from_integer(w)),
                );
            }
        }
    }
    out
}

fn write_power(f: &mut fmt::Formatter<'_>, letter: char, e: u32) -> fmt::Result {
    match e {
        1 => write!(f, "{letter}"),
        _ => write!(f, "{letter}^{e}"),
    }
}

/// Renders as e.g. `c*a + 3*c^2*a^2 + c^3*a^3`, with `c = b†` and `a = b`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (&(i, j), c)) in self.terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let bare = i == 0 && j == 0;
            if bare {
                if c.len() > 1 {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                continue;
            }
            if !c.is_one() {
                if c.len() > 1 {
                    write!(f, "({c})*")?;
                } else {
                    write!(f, "{c}*")?;
                }
            }
            if i > 0 {
                write_power(f, 'c', i)?;
                if j > 0 {
                    f.write_str("*")?;
                }
            }
            if j > 0 {
                write_power(f, 'a', j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NormalForm({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_operator_squared() {
        let n = NormalForm::monomial(1, 1, Polynomial::one());
        let mut want = NormalForm::monomial(2, 2, Polynomial::one());
        want.add_term(1, 1, Polynomial::one());
        assert_eq!(nf_multiply(&n, &n), want);
    }

    #[test]
    fn identity_is_neutral() {
        let mut a = NormalForm::monomial(3, 1, "p".parse().unwrap());
        a.add_term(0, 2, Polynomial::from_int(5));
        assert_eq!(nf_multiply(&NormalForm::identity(), &a), a);
        assert_eq!(nf_multiply(&a, &NormalForm::identity()), a);
    }

    #[test]
    fn rendering() {
        let mut a = NormalForm::monomial(3, 3, Polynomial::one());
        a.add_term(2, 2, "2*p + 1".parse().unwrap());
        a.add_term(1, 1, "p^2".parse().unwrap());
        a.add_term(0, 0, Polynomial::one());
        assert_eq!(a.to_string(), "1 + p^2*c*a + (1 + 2*p)*c^2*a^2 + c^3*a^3");
        assert_eq!(NormalForm::zero().to_string(), "0");
        assert_eq!(NormalForm::monomial(0, 2, Polynomial::one()).to_string(), "a^2");
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut a = NormalForm::monomial(1, 0, Polynomial::one());
        a.add_term(1, 0, Polynomial::from_int(-1));
        assert!(a.is_zero());
    }
}
