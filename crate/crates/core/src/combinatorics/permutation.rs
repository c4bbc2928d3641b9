use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::words::{dc, format_word, parse_word};
use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidWord(format!("{one_line:?} is not a permutation")));
            }
        }
        Ok(Self { one_line })
    }

    pub(crate) fn from_one_line_unchecked(one_line: Vec<usize>) -> Self {
        Self { one_line }
    }

    pub fn identity(n: usize) -> Self {
        Self { one_line: (1..=n).collect() }
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { one_line: inv }
    }

    /// `#{i < j : σ(i) > σ(j)}`.
    pub fn inv(&self) -> usize {
        let s = &self.one_line;
        (0..s.len())
            .map(|i| s[i + 1..].iter().filter(|&&b| b < s[i]).count())
            .sum()
    }

    /// Descent composition.
    pub fn descent_composition(&self) -> Composition {
        dc(&self.one_line).unwrap_or_default()
    }

    /// Descent composition of the inverse.
    pub fn recoil_composition(&self) -> Composition {
        self.inverse().descent_composition()
    }

    /// Letter `i` counts the letters left of the value `i` that exceed `i`.
    pub fn lehmer_inverse_code(&self) -> Vec<usize> {
        let pos = self.inverse();
        (1..=self.len())
            .map(|i| {
                self.one_line[..pos.one_line[i - 1] - 1]
                    .iter()
                    .filter(|&&x| x > i)
                    .count()
            })
            .collect()
    }

    /// The LC composition.
    ///
    /// Read the inverse Lehmer code right to left, growing a set `S`: when
    /// the letter `k` exceeds `|S|`, add the `(k - |S|)`-th smallest element
    /// of `[1..n] \ S`. The result is the mirror of the composition with
    /// descent set `S`.
    pub fn lc(&self) -> Composition {
        let n = self.len();
        let mut set: Vec<usize> = Vec::new();
        for k in self.lehmer_inverse_code().into_iter().rev() {
            if k > set.len() {
                let skip = k - set.len() - 1;
                let v = (1..=n)
                    .filter(|x| !set.contains(x))
                    .nth(skip)
                    .expect("code letters are bounded by n");
                set.push(v);
            }
        }
        Composition::from_descent_set(&set, n)
            .expect("the built set avoids n")
            .mirror()
    }

    /// Values that are descent tops. `σ(n)` is never a top.
    pub fn gdes(&self) -> BTreeSet<usize> {
        self.one_line
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| w[0])
            .collect()
    }

    /// Composition of `n` with descent set `{d - 1 : d in GDes}`.
    pub fn gc(&self) -> Composition {
        let des: Vec<usize> = self.gdes().into_iter().map(|d| d - 1).collect();
        Composition::from_descent_set(&des, self.len()).expect("tops are at least 2")
    }

    /// `{i : σ(i) >= i}`.
    pub fn weak_excedance_set(&self) -> BTreeSet<usize> {
        (1..=self.len()).filter(|&i| self.one_line[i - 1] >= i).collect()
    }

    /// `{σ(i+1) : σ(i) > σ(i+1)}`.
    pub fn descent_bottom_set(&self) -> BTreeSet<usize> {
        self.one_line
            .windows(2)
            .filter(|w| w[0] > w[1])
            .map(|w| w[1])
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.one_line))
    }
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_word(s)?)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.one_line
    }
}

/// All permutations of `{1..n}` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n).collect()) }
}

/// Lexicographic permutation iterator.
#[derive(Debug, Clone)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
            let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
            a.swap(i - 1, j);
            a[i..].reverse();
            self.next = Some(a);
        }
        Some(Permutation::from_one_line_unchecked(current))
    }
}
