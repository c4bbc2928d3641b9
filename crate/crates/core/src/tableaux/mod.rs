//! Permutation tableaux of types A and B.

mod recurrences;
mod type_a;
mod type_b;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::coarsening_masks;
use crate::qpoly::LaurentQPoly;

pub use recurrences::{check_recurrences_a, check_recurrences_b};
pub use type_a::{brute_pt_a, comp_a_to_shape, pt_a_closed, pt_a_count, shape_a_to_comp, ShapeA};
pub use type_b::{brute_pt_b, comp_b_decode, comp_b_encode, ideals_b, pt_b_closed, ShapeB};

/// Largest number of boxes accepted by the brute-force enumerators.
pub const MAX_BRUTE_BOXES: usize = 30;

/// A 0/1 filling, one vector per row in the shape's own row order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filling {
    pub rows: Vec<Vec<bool>>,
}

impl Filling {
    pub fn ones(&self) -> usize {
        self.rows.iter().flatten().filter(|&&b| b).count()
    }

    pub fn columns(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of ones minus number of nonempty columns.
    pub fn rank(&self) -> i64 {
        self.ones() as i64 - self.columns() as i64
    }

    fn get(&self, r: usize, c: usize) -> Option<bool> {
        self.rows.get(r)?.get(c).copied()
    }
}

/// Rows of a diagram ordered so that the column condition looks at earlier
/// rows: a 0 may not have a 1 in an earlier row of its column and a 1 to its
/// left. A row flagged diagonal has a diagonal last box; a 0 there forces
/// the whole row to be 0.
#[derive(Clone, Debug)]
pub(crate) struct Board {
    pub widths: Vec<usize>,
    pub diagonal: Vec<bool>,
}

impl Board {
    #[cfg(test)]
    pub fn boxes(&self) -> usize {
        self.widths.iter().sum()
    }

    /// Checks a filling given in board row order.
    pub fn is_valid(&self, f: &Filling) -> bool {
        let h = self.widths.len();
        if f.rows.len() != h || f.rows.iter().zip(&self.widths).any(|(r, &w)| r.len() != w) {
            return false;
        }
        let cols = self.widths.iter().copied().max().unwrap_or(0);
        for c in 0..cols {
            if !(0..h).any(|r| f.get(r, c) == Some(true)) {
                return false;
            }
        }
        for r in 0..h {
            for c in 0..self.widths[r] {
                if f.rows[r][c] {
                    continue;
                }
                let earlier = (0..r).any(|r2| f.get(r2, c) == Some(true));
                let left = f.rows[r][..c].iter().any(|&b| b);
                if earlier && left {
                    return false;
                }
            }
            if self.diagonal[r] && self.widths[r] > 0 && !f.rows[r][self.widths[r] - 1] && f.rows[r].iter().any(|&b| b) {
                return false;
            }
        }
        true
    }

    /// Fills column by column, abandoning a column as soon as a rule breaks.
    /// Calls `visit` with each valid filling.
    pub fn for_each_valid(&self, visit: &mut dyn FnMut(&Filling)) {
        let cols = self.widths.iter().copied().max().unwrap_or(0);
        let mut f = Filling { rows: self.widths.iter().map(|&w| vec![false; w]).collect() };
        let column_rows: Vec<Vec<usize>> = (0..cols)
            .map(|c| (0..self.widths.len()).filter(|&r| self.widths[r] > c).collect())
            .collect();
        let mut has_one = vec![false; self.widths.len()];
        self.fill(0, &column_rows, &mut f, &mut has_one, visit);
    }

    fn fill(
        &self,
        c: usize,
        column_rows: &[Vec<usize>],
        f: &mut Filling,
        has_one: &mut Vec<bool>,
        visit: &mut dyn FnMut(&Filling),
    ) {
        if c == column_rows.len() {
            visit(f);
            return;
        }
        let rows = &column_rows[c];
        'assign: for mask in 1u64..1 << rows.len() {
            let mut seen_one = false;
            for (b, &r) in rows.iter().enumerate() {
                let one = mask >> b & 1 == 1;
                if !one && seen_one && has_one[r] {
                    continue 'assign;
                }
                if !one && self.diagonal[r] && self.widths[r] == c + 1 && has_one[r] {
                    continue 'assign;
                }
                seen_one |= one;
            }
            let saved = has_one.clone();
            for (b, &r) in rows.iter().enumerate() {
                let one = mask >> b & 1 == 1;
                f.rows[r][c] = one;
                has_one[r] |= one;
            }
            self.fill(c + 1, column_rows, f, has_one, visit);
            for &r in rows {
                f.rows[r][c] = false;
            }
            *has_one = saved;
        }
    }

    /// `sum of q^rank` over valid fillings.
    pub fn rank_polynomial(&self) -> LaurentQPoly {
        let mut counts: Vec<u64> = Vec::new();
        let cols = self.widths.iter().copied().max().unwrap_or(0);
        self.for_each_valid(&mut |f| {
            let r = f.ones() - cols;
            if counts.len() <= r {
                counts.resize(r + 1, 0);
            }
            counts[r] += 1;
        });
        LaurentQPoly::from_coeffs(0, counts.into_iter().map(BigInt::from))
    }
}

/// `sum over coarsenings J of I of (-1/q)^(l(I)-l(J)) q^(-st'(I,J)) qfact(J)`
/// for a weak composition `I`. The bars of `I` are its partial sums, with
/// repetitions; a coarsening keeps a subset of bars and `st'` counts pairs
/// (bar `a` of `I`, kept bar `b`) with `a <= b`.
pub(crate) fn alternating_closed_form(parts: &[usize], qfact: fn(&[usize]) -> LaurentQPoly) -> LaurentQPoly {
    let mut bars = Vec::with_capacity(parts.len());
    let mut s = 0;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        s += p;
        bars.push(s);
    }
    let mut out = LaurentQPoly::zero();
    for (kept, j) in coarsening_masks(parts) {
        let stp: usize = bars.iter().map(|&a| kept.iter().filter(|&&t| a <= bars[t]).count()).sum();
        let d = parts.len() - j.len();
        out += &(&crate::bases::sign_shift(d, stp) * &qfact(&j));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_fillings(board: &Board) -> Vec<Filling> {
        let n = board.boxes();
        let mut out = Vec::new();
        for mask in 0u64..1 << n {
            let mut bit = 0;
            let rows = board
                .widths
                .iter()
                .map(|&w| {
                    (0..w)
                        .map(|_| {
                            bit += 1;
                            mask >> (bit - 1) & 1 == 1
                        })
                        .collect()
                })
                .collect();
            out.push(Filling { rows });
        }
        out
    }

    /// The pruned enumerator visits exactly the fillings that pass the
    /// direct rule check.
    #[test]
    fn pruned_matches_exhaustive() {
        let boards = [
            Board { widths: vec![3, 2, 2, 1], diagonal: vec![false; 4] },
            Board { widths: vec![1, 2, 2, 1], diagonal: vec![true, true, false, false] },
            Board { widths: vec![2, 3, 1, 0], diagonal: vec![false, true, false, true] },
            Board { widths: vec![4, 4, 1], diagonal: vec![false; 3] },
        ];
        for b in &boards {
            let mut pruned = Vec::new();
            b.for_each_valid(&mut |f| pruned.push(f.clone()));
            let mut brute: Vec<Filling> = all_fillings(b).into_iter().filter(|f| b.is_valid(f)).collect();
            pruned.sort_by(|a, c| a.rows.cmp(&c.rows));
            brute.sort_by(|a, c| a.rows.cmp(&c.rows));
            assert_eq!(pruned, brute, "{b:?}");
            assert!(pruned.iter().all(|f| f.rank() >= 0));
        }
    }

    #[test]
    fn empty_board() {
        let b = Board { widths: vec![0], diagonal: vec![false] };
        assert_eq!(b.rank_polynomial(), LaurentQPoly::one());
    }
}
