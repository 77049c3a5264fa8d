use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};

/// Column heights `h_1 <= h_2 <= ... <= h_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FerrersBoard {
    heights: Vec<u32>,
}

impl FerrersBoard {
    pub fn new(heights: Vec<u32>) -> Result<Self> {
        if let Some(w) = heights.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::InvalidBoard(format!(
                "heights must be nondecreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if heights.last().is_some_and(|&h| h > 64) {
            return Err(Error::TooLarge("column heights above 64".into()));
        }
        Ok(FerrersBoard { heights })
    }

    /// `F(1, 1, 3, 3, ..., 2n-1, 2n-1)`, plus a final column of height `2n`
    /// when `extra` is set.
    pub fn doubled_odd(n: u32, extra: bool) -> Self {
        let mut heights: Vec<u32> = (1..=n).flat_map(|i| [2 * i - 1, 2 * i - 1]).collect();
        if extra {
            heights.push(2 * n);
        }
        FerrersBoard { heights }
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn columns(&self) -> usize {
        self.heights.len()
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.heights.iter().map(u32::to_string).collect();
        write!(f, "F({})", parts.join(","))
    }
}

/// Accepts `1,1,3,3` or `F(1,1,3,3)`.
impl FromStr for FerrersBoard {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix("F(")
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return FerrersBoard::new(Vec::new());
        }
        let heights = inner
            .split(',')
            .map(|h| {
                h.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidBoard(format!("bad height `{}`", h.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        FerrersBoard::new(heights)
    }
}

/// `r_0, ..., r_n` by enumerating every placement: each column holds at most
/// one rook, in a row below its height not taken by an earlier column.
pub fn rook_numbers(board: &FerrersBoard) -> Vec<BigInt> {
    let mut counts = vec![0u64; board.columns() + 1];
    place(&board.heights, 0, 0, 0, &mut counts);
    counts.into_iter().map(BigInt::from).collect()
}

fn place(heights: &[u32], col: usize, used: u64, rooks: usize, counts: &mut [u64]) {
    if col == heights.len() {
        counts[rooks] += 1;
        return;
    }
    place(heights, col + 1, used, rooks, counts);
    for row in 0..heights[col] {
        let bit = 1u64 << row;
        if used & bit == 0 {
            place(heights, col + 1, used | bit, rooks + 1, counts);
        }
    }
}

/// Set partitions of `{1..n+r}` into `k + r` blocks with `1..r` in distinct
/// blocks, counted by enumerating restricted growth strings.
pub fn rstirling_bruteforce(n: u32, k: u32, r: u32) -> Result<BigInt> {
    if n + r > 12 {
        return Err(Error::TooLarge(format!("n + r = {} exceeds 12", n + r)));
    }
    let mut count = 0u64;
    grow(n as usize, r as usize, (k + r) as usize, &mut count);
    Ok(BigInt::from(count))
}

// The first `r` elements open blocks 0..r; each later element joins an
// existing block or opens the next one.
fn grow(remaining: usize, blocks: usize, target: usize, count: &mut u64) {
    if blocks > target {
        return;
    }
    if remaining == 0 {
        if blocks == target {
            *count += 1;
        }
        return;
    }
    for _ in 0..blocks {
        grow(remaining - 1, blocks, target, count);
    }
    grow(remaining - 1, blocks + 1, target, count);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::{stirling2, whitney};
    use crate::Polynomial;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_boards() {
        assert_eq!(rook_numbers(&"1,1".parse().unwrap()), ints(&[1, 2, 0]));
        assert_eq!(rook_numbers(&"F(1,1,3,3)".parse().unwrap()), ints(&[1, 8, 14, 4, 0]));
        assert_eq!(rook_numbers(&"F()".parse().unwrap()), ints(&[1]));
        assert_eq!(FerrersBoard::doubled_odd(2, false).to_string(), "F(1,1,3,3)");
        assert_eq!(FerrersBoard::doubled_odd(1, true).to_string(), "F(1,1,2)");
    }

    #[test]
    fn empty_columns_change_nothing() {
        let with = rook_numbers(&"0,0,1,2".parse().unwrap());
        let without = rook_numbers(&"1,2".parse().unwrap());
        assert_eq!(&with[..without.len()], &without[..]);
        assert!(with[without.len()..].iter().all(|r| *r == BigInt::from(0)));
    }

    #[test]
    fn board_validation() {
        assert!("3,1".parse::<FerrersBoard>().is_err());
        assert!("1,x".parse::<FerrersBoard>().is_err());
    }

    #[test]
    fn r_stirling() {
        assert_eq!(rstirling_bruteforce(1, 1, 2).unwrap(), BigInt::from(1));
        for n in 1..=8 {
            for k in 0..=n {
                assert_eq!(rstirling_bruteforce(n, k, 0).unwrap(), stirling2(n, k));
            }
        }
        for r in 0..=3i64 {
            for n in 0..=5u32 {
                for k in 0..=n {
                    let w = whitney(n, k, &Polynomial::one(), &Polynomial::from_int(r));
                    let bf = rstirling_bruteforce(n, k, r as u32).unwrap();
                    assert_eq!(w, Polynomial::from(bf));
                }
            }
        }
        assert!(rstirling_bruteforce(10, 1, 3).is_err());
    }
}
