use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::Symbol;

/// A power product of symbols. Zero exponents are never stored, so the empty
/// map is the constant monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<Symbol, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(s: Symbol) -> Self {
        Monomial::power(s, 1)
    }

    pub fn power(s: Symbol, e: u32) -> Self {
        let mut exponents = BTreeMap::new();
        if e > 0 {
            exponents.insert(s, e);
        }
        Monomial { exponents }
    }

    pub fn from_exponents<I: IntoIterator<Item = (Symbol, u32)>>(it: I) -> Self {
        let mut m = Monomial::one();
        for (s, e) in it {
            m = m.mul(&Monomial::power(s, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.exponents.get(s).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Symbol, u32)> + '_ {
        self.exponents.iter().map(|(s, &e)| (s, e))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &Symbol> + '_ {
        self.exponents.keys()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (s, &e) in &other.exponents {
            *exponents.entry(s.clone()).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    /// Splits off the power of `s`: returns `(e, rest)` with `self = s^e * rest`.
    pub fn split(&self, s: &Symbol) -> (u32, Monomial) {
        let mut rest = self.clone();
        let e = rest.exponents.remove(s).unwrap_or(0);
        (e, rest)
    }

    /// Lowers the exponent of `s` by one; `None` when `s` is absent.
    pub(crate) fn lower(&self, s: &Symbol) -> Option<(u32, Monomial)> {
        let e = self.exponent(s);
        if e == 0 {
            return None;
        }
        let mut rest = self.clone();
        if e == 1 {
            rest.exponents.remove(s);
        } else {
            rest.exponents.insert(s.clone(), e - 1);
        }
        Some((e, rest))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: total degree first, then the exponent vectors
    /// compared symbol by symbol in name order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let mut a = self.exponents.iter().peekable();
            let mut b = other.exponents.iter().peekable();
            loop {
                match (a.peek(), b.peek()) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((sa, ea)), Some((sb, eb))) => match sa.cmp(sb) {
                        // `a` has a positive exponent where `b` has zero.
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => {
                                a.next();
                                b.next();
                            }
                            ord => return ord,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (s, e)) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().map(|&(s, e)| (Symbol::new(s), e)))
    }

    #[test]
    fn graded_before_lex() {
        assert!(m(&[("x", 1), ("y", 1)]) < m(&[("p", 2), ("x", 1)]));
        assert!(m(&[("z", 3)]) > m(&[("a", 2)]));
    }

    #[test]
    fn lex_within_degree() {
        // exponent vectors over (p, x, y): (0,1,2) < (1,1,1) < (2,1,0)
        let a = m(&[("x", 1), ("y", 2)]);
        let b = m(&[("p", 1), ("x", 1), ("y", 1)]);
        let c = m(&[("p", 2), ("x", 1)]);
        assert!(a < b && b < c);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn zero_exponents_vanish() {
        assert!(m(&[("x", 0)]).is_one());
        assert_eq!(m(&[("x", 2), ("x", 3)]).exponent(&Symbol::new("x")), 5);
    }
}
