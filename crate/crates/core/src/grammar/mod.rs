//! Context-free grammars in Chen's sense and their formal derivatives.
//!
//! A grammar maps some symbols to polynomials. Its formal derivative `D` is
//! the derivation of the polynomial ring extending those substitutions:
//! `D(a) = sum_v (da/dv) * rule(v)`, where unmapped symbols are constants.

mod generation;

pub use generation::{enumerate_generations, generate, GenSequence, GenerationRecord, Semantics};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ring::{Parser, Polynomial, Symbol, TokenKind, TruncatedSeries};

/// The symbol used for the shift-operator parameter.
pub const LAMBDA: &str = "lambda";

#[derive(Clone, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Symbol, Polynomial>,
}

impl Grammar {
    pub fn new<I: IntoIterator<Item = (Symbol, Polynomial)>>(rules: I) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (s, image) in rules {
            if map.insert(s.clone(), image).is_some() {
                return Err(Error::DuplicateRule(s));
            }
        }
        if map.is_empty() {
            return Err(Error::EmptyGrammar);
        }
        Ok(Grammar { rules: map })
    }

    /// Convenience constructor from `(symbol, polynomial text)` pairs.
    ///
    /// Panics on malformed input; meant for built-in grammars and tests.
    pub fn from_rules(rules: &[(&str, &str)]) -> Self {
        Grammar::new(
            rules
                .iter()
                .map(|(s, p)| (Symbol::new(s), p.parse().expect("well-formed rule image"))),
        )
        .expect("well-formed grammar")
    }

    /// `{x -> x*y, y -> y}`.
    pub fn stirling() -> Self {
        Grammar::from_rules(&[("x", "x*y"), ("y", "y")])
    }

    /// `{x -> c*x + x*y, y -> y}` for a constant `c`.
    pub fn shifted_stirling(c: &Polynomial) -> Self {
        let x = Polynomial::var("x");
        let y = Polynomial::var("y");
        Grammar {
            rules: BTreeMap::from([
                (Symbol::new("x"), &(c * &x) + &(&x * &y)),
                (Symbol::new("y"), y),
            ]),
        }
    }

    /// `G_n = {x -> (n-1)*x + x*y, y -> y}`.
    pub fn indexed(n: i64) -> Self {
        Grammar::shifted_stirling(&Polynomial::from_int(n - 1))
    }

    /// `G_n = {x -> q^n*x + x*y, y -> y}`.
    pub fn q_indexed(n: u32, q: &Symbol) -> Self {
        Grammar::shifted_stirling(&Polynomial::symbol(q.clone()).pow(n))
    }

    /// `{x -> r*x + x*y, y -> m*y}`.
    pub fn dowling(m: &Polynomial, r: &Polynomial) -> Self {
        let x = Polynomial::var("x");
        let y = Polynomial::var("y");
        Grammar {
            rules: BTreeMap::from([
                (Symbol::new("x"), &(r * &x) + &(&x * &y)),
                (Symbol::new("y"), m * &y),
            ]),
        }
    }

    pub fn rule(&self, s: &Symbol) -> Option<&Polynomial> {
        self.rules.get(s)
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Symbol, &Polynomial)> + '_ {
        self.rules.iter()
    }

    /// Symbols with a substitution rule.
    pub fn variables(&self) -> BTreeSet<Symbol> {
        self.rules.keys().cloned().collect()
    }

    /// One application of the formal derivative.
    pub fn derive(&self, a: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for v in a.symbols() {
            if let Some(image) = self.rules.get(&v) {
                let partial = a.partial_derivative(&v);
                if !partial.is_zero() {
                    out += &partial * image;
                }
            }
        }
        out
    }

    /// `D^n(a)`.
    pub fn derive_n(&self, a: &Polynomial, n: usize) -> Polynomial {
        (0..n).fold(a.clone(), |acc, _| self.derive(&acc))
    }

    /// `a, D(a), ..., D^n(a)`.
    pub fn derivatives(&self, a: &Polynomial, n: usize) -> Vec<Polynomial> {
        let mut out = Vec::with_capacity(n + 1);
        out.push(a.clone());
        for i in 0..n {
            let next = self.derive(&out[i]);
            out.push(next);
        }
        out
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, image)) in self.rules.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{s} -> {image}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grammar({self})")
    }
}

impl FromStr for Grammar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_grammar(s)
    }
}

/// Parses `sym -> polynomial; sym -> polynomial; ...`.
///
/// Rules are separated by `;`, or simply follow each other (a new rule starts
/// at `ident ->`). A trailing `;` is allowed.
pub fn parse_grammar(text: &str) -> Result<Grammar> {
    let mut parser = Parser::new(text)?;
    let mut rules: BTreeMap<Symbol, Polynomial> = BTreeMap::new();
    loop {
        while parser.peek().kind == TokenKind::Semi {
            parser.next();
        }
        if parser.at_end() {
            break;
        }
        let lhs = match parser.peek().kind.clone() {
            TokenKind::Ident(name) => {
                parser.next();
                Symbol::new(&name)
            }
            _ => return Err(parser.error_here("expected a symbol on the left of `->`")),
        };
        if parser.peek().kind != TokenKind::Arrow {
            return Err(parser.error_here("expected `->`"));
        }
        parser.next();
        let image = parser.expression()?;
        match parser.peek().kind {
            TokenKind::Semi | TokenKind::End | TokenKind::Ident(_) => {}
            _ => return Err(parser.error_here("expected `;` or the next rule")),
        }
        if rules.insert(lhs.clone(), image).is_some() {
            return Err(Error::DuplicateRule(lhs));
        }
    }
    Grammar::new(rules)
}

/// Applies a product of derivatives written in operator order: the last
/// grammar in `chain` acts first, so `[D5, D3, D1]` computes `D5(D3(D1(a)))`.
pub fn derive_chain(chain: &[Grammar], a: &Polynomial) -> Result<Polynomial> {
    if chain.is_empty() {
        return Err(Error::UnsupportedParameters("empty derivative chain".into()));
    }
    Ok(chain.iter().rev().fold(a.clone(), |acc, g| g.derive(&acc)))
}

/// `[G_{i_n}, ..., G_{i_2}, G_{i_1}]` with `i_j = (j-1)(r-1) + 1`, i.e. the
/// operator `D_{(n-1)r-(n-2)} ... D_{2r-1} D_r D_1`.
pub fn chain_s1(r: i64, n: usize) -> Vec<Grammar> {
    (1..=n as i64).rev().map(|j| Grammar::indexed((j - 1) * (r - 1) + 1)).collect()
}

/// The operator `D_1 (D_r D_{r-1} ... D_1)^(n-1)`.
pub fn chain_rr(r: i64, n: usize) -> Vec<Grammar> {
    let mut chain = vec![Grammar::indexed(1)];
    for _ in 1..n {
        chain.extend((1..=r).rev().map(Grammar::indexed));
    }
    chain
}

/// The operator `D_{n-1} ... D_2 D_1` over the `q`-indexed grammars.
pub fn chain_q(n: u32, q: &Symbol) -> Vec<Grammar> {
    (1..n).rev().map(|i| Grammar::q_indexed(i, q)).collect()
}

/// `sum_{n <= order} lambda^n / n! * D^n(a)` as a series in `lambda`.
pub fn shift_apply(g: &Grammar, a: &Polynomial, order: usize) -> Result<TruncatedSeries> {
    TruncatedSeries::from_egf(Symbol::new(LAMBDA), g.derivatives(a, order))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parses_stirling_and_p_grammars() {
        assert_eq!(parse_grammar("x -> x*y; y -> y").unwrap(), Grammar::stirling());
        assert_eq!(
            parse_grammar("x -> p*x + x*y; y -> y").unwrap(),
            Grammar::shifted_stirling(&p("p"))
        );
        // newline separated, comments, trailing separator
        let g = parse_grammar("# Stirling\nx -> x y\ny -> y;\n").unwrap();
        assert_eq!(g, Grammar::stirling());
    }

    #[test]
    fn grammar_syntax_errors() {
        assert!(matches!(parse_grammar("x ->"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_grammar("x y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_grammar("-> y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_grammar("x -> y )"), Err(Error::Syntax { .. })));
        assert_eq!(
            parse_grammar("x -> y; x -> x"),
            Err(Error::DuplicateRule(Symbol::new("x")))
        );
        assert_eq!(parse_grammar("  # nothing\n"), Err(Error::EmptyGrammar));
        match parse_grammar("x -> x*y;\ny -> ") {
            Err(Error::Syntax { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stirling_derivative() {
        assert_eq!(Grammar::stirling().derive(&p("x")), p("x*y"));
    }

    #[test]
    fn p_grammar_second_derivative() {
        let g = Grammar::shifted_stirling(&p("p"));
        assert_eq!(g.derive_n(&p("x"), 2), p("p^2*x + (2*p+1)*x*y + x*y^2"));
    }

    #[test]
    fn dowling_second_derivative() {
        let g = parse_grammar("x -> r*x + x*y; y -> m*y").unwrap();
        assert_eq!(g.derive_n(&p("x"), 2), p("x*(r^2 + (m + 2*r)*y + y^2)"));
    }

    #[test]
    fn chains_apply_right_to_left() {
        let g = |n| Grammar::indexed(n);
        assert_eq!(
            derive_chain(&[g(5), g(3), g(1)], &p("x")).unwrap(),
            p("x*(15*y + 9*y^2 + y^3)")
        );
        assert_eq!(
            derive_chain(&[g(1), g(3), g(2), g(1)], &p("x")).unwrap(),
            p("x*(6*y + 18*y^2 + 9*y^3 + y^4)")
        );
        let q = Symbol::new("q");
        assert_eq!(
            derive_chain(&[Grammar::q_indexed(2, &q), Grammar::q_indexed(1, &q)], &p("x")).unwrap(),
            p("x*(q^3 + (q^2 + q + 1)*y + y^2)")
        );
        assert!(derive_chain(&[], &p("x")).is_err());
    }

    #[test]
    fn constants_and_zero() {
        let g = Grammar::stirling();
        assert!(g.derive(&p("p^3 + 7")).is_zero());
        assert!(g.derive(&Polynomial::zero()).is_zero());
        assert_eq!(g.derive_n(&p("x"), 0), p("x"));
    }

    #[test]
    fn shift_of_x_and_y() {
        let g = Grammar::stirling();
        let s = shift_apply(&g, &p("x"), 2).unwrap();
        assert_eq!(s.coefficients(), &[p("x"), p("x*y"), p("1/2*x*y + 1/2*x*y^2")]);
        let s = shift_apply(&g, &p("y"), 3).unwrap();
        assert_eq!(s.coefficients(), &[p("y"), p("y"), p("1/2*y"), p("1/6*y")]);
        assert!(shift_apply(&g, &Polynomial::zero(), 4).unwrap().is_zero());
    }

    #[test]
    fn display_round_trips() {
        let g = parse_grammar("x -> p*x + x*y; y -> y").unwrap();
        assert_eq!(parse_grammar(&g.to_string()).unwrap(), g);
    }
}
