use std::fmt;

use serde::{Deserialize, Serialize};

use super::composition::Composition;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// A word over `{1..k}` using every letter at least once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct PackedWord {
    letters: Vec<usize>,
}

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if pack(&letters)? != letters {
            return Err(Error::InvalidWord(format!("{letters:?} is not packed")));
        }
        Ok(Self { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicities of `1..k` as a composition.
    pub fn evaluation(&self) -> Composition {
        let mut counts = vec![0; self.max_letter()];
        for &a in &self.letters {
            counts[a - 1] += 1;
        }
        Composition::from_parts_unchecked(counts)
    }

    pub fn wc(&self) -> Composition {
        wc(self)
    }

    pub fn sinv(&self) -> usize {
        sinv(self)
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.letters))
    }
}

impl TryFrom<Vec<usize>> for PackedWord {
    type Error = Error;
    fn try_from(letters: Vec<usize>) -> Result<Self> {
        Self::new(letters)
    }
}

impl From<PackedWord> for Vec<usize> {
    fn from(w: PackedWord) -> Self {
        w.letters
    }
}

fn check_word(w: &[usize]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::InvalidWord("empty word".into()));
    }
    if w.contains(&0) {
        return Err(Error::InvalidWord(format!("{w:?} contains the letter 0")));
    }
    Ok(())
}

/// Standardization: rank letters by value, breaking ties left to right.
pub fn std(w: &[usize]) -> Result<Permutation> {
    check_word(w)?;
    let mut idx: Vec<usize> = (0..w.len()).collect();
    idx.sort_by_key(|&i| (w[i], i));
    let mut out = vec![0; w.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        out[i] = rank + 1;
    }
    Ok(Permutation::from_one_line_unchecked(out))
}

/// Order-preserving relabeling onto `{1..k}`.
pub fn pack(w: &[usize]) -> Result<Vec<usize>> {
    check_word(w)?;
    let mut values = w.to_vec();
    values.sort_unstable();
    values.dedup();
    Ok(w.iter().map(|a| values.binary_search(a).unwrap() + 1).collect())
}

/// Composition whose descents are the positions of last occurrences of
/// each letter (the final position excluded).
pub fn wc(w: &PackedWord) -> Composition {
    let n = w.len();
    let mut last = vec![0; w.max_letter()];
    for (i, &a) in w.letters.iter().enumerate() {
        last[a - 1] = i + 1;
    }
    let des: Vec<usize> = last.into_iter().filter(|&p| p < n).collect();
    Composition::from_descent_set(&des, n).expect("positions inside 1..n")
}

/// Descent composition with strict descents `w_i > w_{i+1}`.
pub fn dc(w: &[usize]) -> Result<Composition> {
    check_word(w)?;
    let des: Vec<usize> = (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect();
    Composition::from_descent_set(&des, w.len())
}

/// Inversions `i < j`, `w_i > w_j`, where `j` is the rightmost occurrence
/// of its letter.
pub fn sinv(w: &PackedWord) -> usize {
    let l = &w.letters;
    let mut last = vec![0; w.max_letter()];
    for (i, &a) in l.iter().enumerate() {
        last[a - 1] = i;
    }
    (0..l.len())
        .filter(|&j| last[l[j] - 1] == j)
        .map(|j| l[..j].iter().filter(|&&a| a > l[j]).count())
        .sum()
}

/// All packed words of length `n`, in lexicographic order.
pub fn packed_words(n: usize) -> Vec<PackedWord> {
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, seen: &mut [usize], missing: usize, out: &mut Vec<PackedWord>) {
        if cur.len() == n {
            if missing == 0 {
                out.push(PackedWord::from_letters_unchecked(cur.clone()));
            }
            return;
        }
        let remaining = n - cur.len();
        for a in 1..=k {
            let fresh = seen[a - 1] == 0;
            let left = missing - usize::from(fresh);
            if left > remaining - 1 {
                continue;
            }
            seen[a - 1] += 1;
            cur.push(a);
            rec(n, k, cur, seen, left, out);
            cur.pop();
            seen[a - 1] -= 1;
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for k in 1..=n {
        let mut seen = vec![0; k];
        rec(n, k, &mut Vec::with_capacity(n), &mut seen, k, &mut out);
    }
    out.sort();
    out
}

pub(crate) fn format_word(letters: &[usize]) -> String {
    if letters.iter().all(|&a| a < 10) {
        letters.iter().map(usize::to_string).collect()
    } else {
        letters.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
    }
}

/// Parses `221312`, `2 2 1 3 1 2` or `2,2,1,3,1,2`. Digits run together are
/// read one letter each.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let letters: Result<Vec<usize>> = if s.contains([',', ' ', '.']) {
        s.split([',', ' ', '.'])
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
            .collect()
    } else {
        s.chars()
            .map(|ch| {
                ch.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("`{ch}` is not a digit")))
            })
            .collect()
    };
    let letters = letters?;
    check_word(&letters)?;
    Ok(letters)
}
