use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// `A` is the annihilation operator `b` (a white vertex), `C` the creation
/// operator `b†` (a black vertex).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    C,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::C => 'c',
        }
    }
}

/// A word over `{a, c}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylWord {
    letters: Vec<Letter>,
}

impl WeylWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        WeylWord { letters }
    }

    /// `(ca)^n`, i.e. `(b† b)^n`.
    pub fn number_power(n: usize) -> Self {
        WeylWord::repeat(&[Letter::C, Letter::A], n)
    }

    /// `(c^r a^s)^n`.
    pub fn generalized_power(r: usize, s: usize, n: usize) -> Self {
        let mut block = vec![Letter::C; r];
        block.extend(std::iter::repeat_n(Letter::A, s));
        WeylWord::repeat(&block, n)
    }

    fn repeat(block: &[Letter], n: usize) -> Self {
        WeylWord {
            letters: block.iter().copied().cycle().take(block.len() * n).collect(),
        }
    }

    /// All `2^len` words of the given length, in lexicographic order (`a < c`).
    pub fn all_of_length(len: usize) -> impl Iterator<Item = WeylWord> {
        (0u64..(1u64 << len)).map(move |bits| WeylWord {
            letters: (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        Letter::C
                    } else {
                        Letter::A
                    }
                })
                .collect(),
        })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.letters.iter().filter(|&&x| x == l).count()
    }

    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord { letters }
    }

    /// `Some(n)` when the word is `(ca)^n`.
    pub fn number_power_exponent(&self) -> Option<usize> {
        (self.len().is_multiple_of(2) && *self == WeylWord::number_power(self.len() / 2))
            .then_some(self.len() / 2)
    }
}

impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylWord({self})")
    }
}

impl Serialize for WeylWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Word syntax: letters `a`/`c` (case-insensitive), whitespace ignored, and
/// groups `( ... )^n` which may nest, e.g. `(ca)^3` or `c(ca)^2a`.
/// The operator reading `x` (multiplication by x) and `d` (d/dx) is accepted
/// too: `x` is a creation letter and `d` an annihilation letter.
impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let letters = parse_seq(&chars, &mut pos, 0)?;
        if pos < chars.len() {
            return Err(word_error(pos, "unbalanced `)`"));
        }
        Ok(WeylWord { letters })
    }
}

fn word_error(pos: usize, msg: &str) -> Error {
    Error::Syntax {
        line: 1,
        column: pos + 1,
        message: msg.to_string(),
    }
}

fn parse_seq(chars: &[char], pos: &mut usize, depth: usize) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    while *pos < chars.len() {
        let c = chars[*pos];
        match c {
            'a' | 'A' | 'd' | 'D' => {
                out.push(Letter::A);
                *pos += 1;
            }
            'c' | 'C' | 'x' | 'X' => {
                out.push(Letter::C);
                *pos += 1;
            }
            c if c.is_whitespace() => *pos += 1,
            '(' => {
                let open = *pos;
                *pos += 1;
                let inner = parse_seq(chars, pos, depth + 1)?;
                if chars.get(*pos) != Some(&')') {
                    return Err(word_error(open, "unclosed `(`"));
                }
                *pos += 1;
                let mut times = 1usize;
                if chars.get(*pos) == Some(&'^') {
                    *pos += 1;
                    let start = *pos;
                    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                        *pos += 1;
                    }
                    if start == *pos {
                        return Err(word_error(start, "expected a repetition count"));
                    }
                    let digits: String = chars[start..*pos].iter().collect();
                    times = digits
                        .parse()
                        .map_err(|_| word_error(start, "repetition count too large"))?;
                }
                for _ in 0..times {
                    out.extend_from_slice(&inner);
                }
            }
            ')' if depth > 0 => return Ok(out),
            _ => return Err(word_error(*pos, &format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_shorthand() {
        let w: WeylWord = "(ca)^3".parse().unwrap();
        assert_eq!(w, WeylWord::number_power(3));
        assert_eq!(w.to_string(), "cacaca");
        let w: WeylWord = "c (ca)^2 a".parse().unwrap();
        assert_eq!(w.to_string(), "ccacaa");
        let w: WeylWord = "((ca)^2 a)^2".parse().unwrap();
        assert_eq!(w.to_string(), "cacaacacaa");
        assert!("".parse::<WeylWord>().unwrap().is_empty());
        assert_eq!("(ca)^0".parse::<WeylWord>().unwrap().len(), 0);
        assert_eq!("(XD)^3".parse::<WeylWord>().unwrap(), WeylWord::number_power(3));
    }

    #[test]
    fn parse_errors() {
        assert!("cab".parse::<WeylWord>().is_err());
        assert!("(ca".parse::<WeylWord>().is_err());
        assert!("ca)".parse::<WeylWord>().is_err());
        assert!("(ca)^".parse::<WeylWord>().is_err());
    }

    #[test]
    fn enumeration_and_shape() {
        let words: Vec<String> = WeylWord::all_of_length(2).map(|w| w.to_string()).collect();
        assert_eq!(words, ["aa", "ac", "ca", "cc"]);
        assert_eq!(WeylWord::number_power(4).number_power_exponent(), Some(4));
        assert_eq!("ac".parse::<WeylWord>().unwrap().number_power_exponent(), None);
        assert_eq!(WeylWord::generalized_power(2, 1, 2).to_string(), "ccacca");
    }
}
