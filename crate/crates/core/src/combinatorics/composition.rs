use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A composition: a finite sequence of positive integers.
///
/// The empty composition (weight 0) is allowed; it is the base case of
/// several recursions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!(
                "part {} of {:?} is zero",
                pos + 1,
                parts
            )));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        Self { parts }
    }

    /// The composition of `n` with the given descent set.
    pub fn from_descent_set(descents: &[usize], n: usize) -> Result<Self> {
        let mut sorted = descents.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() == Some(&0) || sorted.last().is_some_and(|&d| d >= n) {
            return Err(Error::InvalidArgument(format!(
                "descent set {descents:?} is not inside 1..{n}"
            )));
        }
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for d in sorted.into_iter().chain((n > 0).then_some(n)) {
            parts.push(d - prev);
            prev = d;
        }
        Ok(Self { parts })
    }

    /// The composition with descent set given by the bits of `index`
    /// (see [`Composition::canonical_index`]).
    pub fn from_canonical_index(n: usize, index: usize) -> Result<Self> {
        if n == 0 {
            return if index == 0 {
                Ok(Self::default())
            } else {
                Err(Error::OutOfRange { what: "index", value: index as i64, allowed: "0 for n = 0" })
            };
        }
        if n > usize::BITS as usize || (n - 1 < usize::BITS as usize && index >> (n - 1) != 0) {
            return Err(Error::OutOfRange {
                what: "index",
                value: index as i64,
                allowed: "below 2^(n-1)",
            });
        }
        let des: Vec<usize> = (1..n).filter(|d| index >> (n - 1 - d) & 1 == 1).collect();
        Self::from_descent_set(&des, n)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts, `l(I)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sums `i_1, i_1+i_2, ...` excluding the total, ascending.
    pub fn descent_set(&self) -> Vec<usize> {
        partial_sums(&self.parts)
    }

    /// `sum over descents d of 2^(n-1-d)`; sorting by this index gives the
    /// row order of the printed matrices.
    pub fn canonical_index(&self) -> usize {
        let n = self.weight();
        self.descent_set().iter().map(|d| 1usize << (n - 1 - d)).sum()
    }

    /// Reversed parts.
    pub fn mirror(&self) -> Self {
        Self { parts: self.parts.iter().rev().copied().collect() }
    }

    /// `sum_i (r-i) k_i`.
    pub fn maj(&self) -> usize {
        let r = self.parts.len();
        self.parts.iter().enumerate().map(|(i, k)| (r - 1 - i) * k).sum()
    }

    /// `Des(self) ⊇ Des(other)`, i.e. `self` refines `other`.
    pub fn is_finer_than(&self, other: &Self) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine = self.descent_set();
        other.descent_set().iter().all(|d| mine.binary_search(d).is_ok())
    }

    /// All `J` with `self` finer than `J`, including `self`.
    pub fn coarsenings(&self) -> Vec<Self> {
        coarsening_masks(&self.parts)
            .map(|(_, parts)| Self { parts })
            .collect()
    }

    /// All `J` finer than `self`, including `self`.
    pub fn refinements(&self) -> Vec<Self> {
        let n = self.weight();
        let des = self.descent_set();
        let free: Vec<usize> = (1..n).filter(|d| des.binary_search(d).is_err()).collect();
        (0u64..1 << free.len())
            .map(|mask| {
                let mut d = des.clone();
                d.extend(free.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x));
                Self::from_descent_set(&d, n).expect("descents stay inside 1..n")
            })
            .collect()
    }

    /// `p ▷ I`: `p` added to the first part.
    pub fn add_to_first(&self, p: usize) -> Self {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += p,
            None if p > 0 => parts.push(p),
            None => {}
        }
        Self { parts }
    }

    /// Dotted label such as `2.1.1`.
    pub fn label(&self) -> String {
        join_parts(&self.parts, ".")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for Composition {
    type Err = Error;

    /// Accepts `2.1.1`, `2,1,1` or `2 1 1`.
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

/// A sequence of nonnegative integers. Used for type B shape encodings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Partial sums excluding the last; repeated values are kept.
    pub fn bars(&self) -> Vec<usize> {
        partial_sums(&self.parts)
    }

    pub fn label(&self) -> String {
        join_parts(&self.parts, ".")
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for WeakComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(parse_parts(s)?))
    }
}

impl From<Composition> for WeakComposition {
    fn from(c: Composition) -> Self {
        Self { parts: c.parts }
    }
}

/// Value of `st` or `st'`: a count, or the bottom element used when the first
/// composition is not finer than the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StValue {
    Finite(usize),
    MinusInfinity,
}

impl StValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            StValue::Finite(v) => Some(v),
            StValue::MinusInfinity => None,
        }
    }
}

/// `#{(i, j) in Des(I) x Des(J) : i >= j}` when `I` is finer than `J`.
pub fn st(i: &Composition, j: &Composition) -> StValue {
    pair_count(i, j, |a, b| a >= b)
}

/// `#{(i, j) in Des(I) x Des(J) : i <= j}` when `I` is finer than `J`.
pub fn st_prime(i: &Composition, j: &Composition) -> StValue {
    pair_count(i, j, |a, b| a <= b)
}

fn pair_count(i: &Composition, j: &Composition, keep: impl Fn(usize, usize) -> bool) -> StValue {
    if !i.is_finer_than(j) {
        return StValue::MinusInfinity;
    }
    let (di, dj) = (i.descent_set(), j.descent_set());
    StValue::Finite(
        di.iter()
            .map(|&a| dj.iter().filter(|&&b| keep(a, b)).count())
            .sum(),
    )
}

/// All compositions of `n` in canonical order.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::default()];
    }
    (0..1usize << (n - 1))
        .map(|idx| Composition::from_canonical_index(n, idx).expect("index below 2^(n-1)"))
        .collect()
}

/// Coarsenings of a (weak) composition indexed by the subset of bars kept.
///
/// Yields `(kept bar positions, parts)`: bar `t` sits after part `t`, and
/// dropping it merges parts `t` and `t+1`.
pub(crate) fn coarsening_masks(parts: &[usize]) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> + '_ {
    let bars = parts.len().saturating_sub(1);
    (0u64..1 << bars).map(move |mask| {
        let mut kept = Vec::new();
        let mut out = Vec::new();
        let mut cur = 0;
        for (t, &p) in parts.iter().enumerate() {
            cur += p;
            if t + 1 == parts.len() || mask >> t & 1 == 1 {
                if t + 1 < parts.len() {
                    kept.push(t);
                }
                out.push(cur);
                cur = 0;
            }
        }
        (kept, out)
    })
}

fn partial_sums(parts: &[usize]) -> Vec<usize> {
    let mut s = 0;
    parts
        .iter()
        .take(parts.len().saturating_sub(1))
        .map(|p| {
            s += p;
            s
        })
        .collect()
}

fn join_parts(parts: &[usize], sep: &str) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

pub(crate) fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(|c: char| c == '.' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert!("2.x".parse::<Composition>().is_err());
    }

    #[test]
    fn canonical_order() {
        let labels: Vec<String> = compositions_of(3).iter().map(|c| c.label()).collect();
        assert_eq!(labels, ["3", "2.1", "1.2", "1.1.1"]);
        let labels: Vec<String> = compositions_of(4).iter().map(|c| c.label()).collect();
        assert_eq!(labels, ["4", "3.1", "2.2", "2.1.1", "1.3", "1.2.1", "1.1.2", "1.1.1.1"]);
        assert_eq!(c(&[4]).canonical_index(), 0);
        assert_eq!(c(&[2, 1, 1]).canonical_index(), 3);
    }

    #[test]
    fn maj_examples() {
        assert_eq!(c(&[5]).maj(), 0);
        assert_eq!(c(&[1, 2]).maj(), 1);
        assert_eq!(c(&[2, 1, 2, 3, 1, 2]).maj(), 27);
    }

    #[test]
    fn refinement() {
        assert!(c(&[2, 1, 2, 3, 1, 2]).is_finer_than(&c(&[3, 2, 6])));
        assert!(c(&[2, 1]).is_finer_than(&c(&[2, 1])));
        assert!(!c(&[3]).is_finer_than(&c(&[2, 1])));
        let mut co = c(&[1, 1, 1]).coarsenings();
        co.sort();
        let mut want = vec![c(&[1, 1, 1]), c(&[2, 1]), c(&[1, 2]), c(&[3])];
        want.sort();
        assert_eq!(co, want);
    }

    #[test]
    fn st_examples() {
        assert_eq!(st(&c(&[1, 1, 1]), &c(&[2, 1])), StValue::Finite(1));
        assert_eq!(st(&c(&[3]), &c(&[2, 1])), StValue::MinusInfinity);
        assert_eq!(st(&c(&[1, 2, 1, 1]), &c(&[1, 2, 1, 1])), StValue::Finite(6));
        assert_eq!(st_prime(&c(&[2, 1]), &c(&[2, 1])), StValue::Finite(1));
        assert_eq!(st_prime(&c(&[1, 1, 1]), &c(&[2, 1])), StValue::Finite(2));
        for i in compositions_of(4) {
            assert_eq!(st_prime(&i, &c(&[4])), StValue::Finite(0));
        }
    }

    #[test]
    fn st_pair_identity() {
        for n in 1..=6 {
            let all = compositions_of(n);
            for i in &all {
                for j in &all {
                    let (Some(a), Some(b)) = (st(i, j).finite(), st_prime(i, j).finite()) else {
                        assert!(!i.is_finer_than(j));
                        continue;
                    };
                    let (di, dj) = (i.descent_set(), j.descent_set());
                    let common = dj.iter().filter(|d| di.contains(d)).count();
                    assert_eq!(a + b, (i.len() - 1) * (j.len() - 1) + common);
                }
            }
        }
    }

    #[test]
    fn refinements_mirror_coarsenings() {
        for n in 1..=6 {
            for j in compositions_of(n) {
                let refs = j.refinements();
                let brute: Vec<_> = compositions_of(n).into_iter().filter(|i| i.is_finer_than(&j)).collect();
                assert_eq!(refs.len(), brute.len());
                assert!(refs.iter().all(|i| brute.contains(i)));
            }
        }
    }

    #[test]
    fn parse_and_label() {
        assert_eq!("2.1.1".parse::<Composition>().unwrap(), c(&[2, 1, 1]));
        assert_eq!("3,4,1".parse::<Composition>().unwrap(), c(&[3, 4, 1]));
        assert_eq!("1,2,0".parse::<WeakComposition>().unwrap().parts(), &[1, 2, 0]);
        assert_eq!(c(&[2, 1, 1]).to_string(), "2.1.1");
    }

    proptest! {
        #[test]
        fn descent_round_trip(parts in prop::collection::vec(1usize..5, 1..7)) {
            let comp = c(&parts);
            let back = Composition::from_descent_set(&comp.descent_set(), comp.weight()).unwrap();
            prop_assert_eq!(&back, &comp);
            let idx = comp.canonical_index();
            prop_assert_eq!(Composition::from_canonical_index(comp.weight(), idx).unwrap(), comp.clone());
            prop_assert_eq!(comp.descent_set().len(), comp.len() - 1);
            prop_assert_eq!(comp.coarsenings().len(), 1 << (comp.len() - 1));
        }
    }
}
