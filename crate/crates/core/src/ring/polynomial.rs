use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::{Monomial, Parser, Rational, Symbol};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered graded-lexicographically, with no zero
/// coefficients, so structural equality is mathematical equality and the
/// textual rendering is canonical.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(Monomial::one(), c)
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Polynomial::constant(Rational::from_integer(n.into()))
    }

    pub fn var(s: &str) -> Self {
        Polynomial::symbol(Symbol::new(s))
    }

    pub fn symbol(s: Symbol) -> Self {
        Polynomial::term(Monomial::var(s), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    /// The constant as an integer, if the polynomial is an integer constant.
    pub fn integer_value(&self) -> Option<BigInt> {
        self.constant_value()
            .filter(|c| c.is_integer())
            .map(|c| c.to_integer())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.symbols().cloned())
            .collect()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.terms.keys().any(|m| m.exponent(s) > 0)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, s: &Symbol) -> u32 {
        self.terms.keys().map(|m| m.exponent(s)).max().unwrap_or(0)
    }

    /// View as a polynomial in `s`: entry `e` holds the coefficient of `s^e`.
    pub fn coefficients_in(&self, s: &Symbol) -> Vec<Polynomial> {
        let mut out = vec![Polynomial::zero(); self.degree_in(s) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(s);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: &Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.lower(v) {
                out.add_term(rest, c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Replaces every occurrence of `v` by `value`.
    pub fn substitute(&self, v: &Symbol, value: &Polynomial) -> Polynomial {
        if !self.contains(v) {
            return self.clone();
        }
        let mut powers: Vec<Polynomial> = vec![Polynomial::one()];
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            while powers.len() <= e as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            out += powers[e as usize].mul_monomial(&rest).scale(c);
        }
        out
    }

    /// Substitutes several symbols one after another.
    pub fn substitute_all(&self, bindings: &[(Symbol, Polynomial)]) -> Polynomial {
        bindings
            .iter()
            .fold(self.clone(), |acc, (s, v)| acc.substitute(s, v))
    }

    /// Rendering that groups terms by their monomial in `vars`, with the
    /// remaining factors collected into a coefficient, e.g.
    /// `p^2*x + (2*p + 1)*x*y + x*y^2` for `vars = {x, y}`.
    pub fn render_grouped(&self, vars: &BTreeSet<Symbol>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut groups: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut outer = Monomial::one();
            let mut inner = Monomial::one();
            for (s, e) in m.exponents() {
                let part = Monomial::power(s.clone(), e);
                if vars.contains(s) {
                    outer = outer.mul(&part);
                } else {
                    inner = inner.mul(&part);
                }
            }
            groups
                .entry(outer)
                .or_default()
                .add_term(inner, c.clone());
        }
        let mut out = String::new();
        for (i, (outer, coef)) in groups.iter().enumerate() {
            let single = coef.len() == 1;
            let (sign, body) = if single {
                let (im, ic) = coef.terms().next().unwrap();
                let neg = ic.is_negative();
                let joined = Polynomial::term(im.mul(outer), ic.abs());
                (neg, joined.to_string())
            } else if outer.is_one() {
                (false, format!("({coef})"))
            } else {
                (false, format!("({coef})*{outer}"))
            };
            match (i, sign) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
        }
        out
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, m: &Monomial, c: &Rational) -> fmt::Result {
    if m.is_one() {
        write!(f, "{c}")
    } else if c.is_one() {
        write!(f, "{m}")
    } else {
        write!(f, "{c}*{m}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_term(f, m, &c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Serialized as its canonical rendering.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser::new(s)?;
        let p = parser.expression()?;
        parser.expect_end()?;
        Ok(p)
    }
}

impl From<Symbol> for Polynomial {
    fn from(s: Symbol) -> Self {
        Polynomial::symbol(s)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::from_int(n)
    }
}

impl From<BigInt> for Polynomial {
    fn from(n: BigInt) -> Self {
        Polynomial::from_int(n)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::integer;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn like_terms_collect() {
        assert_eq!(&p("x*y") + &p("x*y"), p("2*x*y"));
        assert!((&p("x*y") - &p("x*y")).is_zero());
    }

    #[test]
    fn product_matches_p_grammar_derivative() {
        assert_eq!(&p("p + y") * &p("x"), p("p*x + x*y"));
        assert_eq!(p("r + y").pow(2), p("r^2 + 2*r*y + y^2"));
    }

    #[test]
    fn partial_derivatives() {
        let y = Symbol::new("y");
        assert_eq!(p("x*y^2").partial_derivative(&y), p("2*x*y"));
        assert_eq!(p("x*y^2").partial_derivative(&Symbol::new("x")), p("y^2"));
        assert_eq!(p("r + y").partial_derivative(&y), Polynomial::one());
    }

    #[test]
    fn substitution() {
        let one = Polynomial::one();
        assert_eq!(
            p("p^2*x + (2*p+1)*x*y + x*y^2").substitute(&Symbol::new("p"), &one),
            p("x + 3*x*y + x*y^2")
        );
        assert_eq!(
            p("x*y").substitute(&Symbol::new("z"), &Polynomial::from_int(7)),
            p("x*y")
        );
        assert_eq!(
            p("q + y").substitute(&Symbol::new("q"), &Polynomial::zero()),
            p("y")
        );
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(p("x*y^2 + p^2*x + 2*p*x*y + x*y").to_string(), "x*y + x*y^2 + 2*p*x*y + p^2*x");
        assert_eq!(p("3/2*x - 1").to_string(), "-1 + 3/2*x");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-x").to_string(), "-x");
    }

    #[test]
    fn grouped_rendering() {
        let vars: BTreeSet<Symbol> = ["x", "y"].into_iter().map(Symbol::new).collect();
        let d2 = p("p^2*x + (2*p+1)*x*y + x*y^2");
        let text = d2.render_grouped(&vars);
        assert_eq!(text, "p^2*x + (1 + 2*p)*x*y + x*y^2");
        assert_eq!(text.parse::<Polynomial>().unwrap(), d2);
    }

    #[test]
    fn constant_queries() {
        assert_eq!(p("7").integer_value(), Some(BigInt::from(7)));
        assert_eq!(p("7/2").integer_value(), None);
        assert_eq!(p("0").constant_value(), Some(integer(0)));
        assert!(p("x").constant_value().is_none());
    }

    #[test]
    fn coefficients_in_variable() {
        let v = Symbol::new("y");
        let cs = p("x + 3*x*y + x*y^2").coefficients_in(&v);
        assert_eq!(cs, vec![p("x"), p("3*x"), p("x")]);
    }
}
