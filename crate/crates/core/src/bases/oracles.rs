//! Independent combinatorial descriptions of the transition coefficients,
//! by enumeration of packed words, integer matrices and permutations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::coefficients::same_weight;
use crate::combinatorics::{dc, packed_words, permutations, sinv, wc, Composition, PackedWord};
use crate::error::{Error, Result};
use crate::qpoly::LaurentQPoly;

/// Largest weight accepted by the enumerative oracles.
pub const MAX_ORACLE_N: usize = 8;

fn check_oracle_n(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::OutOfRange { what: "weight", value: n as i64, allowed: "at most 8 (7 for matrices)" });
    }
    Ok(())
}

fn word_sum(i: &Composition, j: &Composition, keep: impl Fn(&Composition) -> bool) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    check_oracle_n(i.weight(), MAX_ORACLE_N)?;
    let mut out = LaurentQPoly::zero();
    for w in packed_words(i.weight()) {
        if &wc(&w) == i && keep(&dc(w.letters())?) {
            out.add_term(sinv(&w) as i64, BigInt::one());
        }
    }
    Ok(out)
}

/// `sum of q^sinv(w)` over packed words with `wc(w) = I` and `dc(w)`
/// coarser than or equal to `J`.
pub fn oracle_c_words(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    word_sum(i, j, |d| j.is_finer_than(d))
}

/// `sum of q^sinv(w)` over packed words with `wc(w) = I` and `dc(w) = J`.
pub fn oracle_d_words(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    word_sum(i, j, |d| d == j)
}

/// Reads a nonnegative integer matrix column by column, top to bottom,
/// writing the row index `i` (1-based) `m[i][j]` times.
pub fn column_reading(m: &[Vec<usize>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for c in 0..cols {
        for (r, row) in m.iter().enumerate() {
            out.extend(std::iter::repeat_n(r + 1, row[c]));
        }
    }
    out
}

/// `sum of q^sinv(reading(M))` over nonnegative integer matrices `M` with no
/// zero row, column sums `J` and `wc(reading(M)) = I`.
pub fn oracle_c_matrices(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    check_oracle_n(i.weight(), 7)?;
    let mut out = LaurentQPoly::zero();
    for k in 1..=i.weight() {
        let mut m = vec![vec![0; j.len()]; k];
        fill_column(&mut m, j.parts(), 0, &mut |m| {
            if m.iter().all(|row| row.iter().any(|&v| v > 0)) {
                let w = PackedWord::from_letters_unchecked(column_reading(m));
                if &wc(&w) == i {
                    out.add_term(sinv(&w) as i64, BigInt::one());
                }
            }
        });
    }
    Ok(out)
}

/// Enumerates every way to split `sums[col..]` down the rows of `m`.
fn fill_column(m: &mut Vec<Vec<usize>>, sums: &[usize], col: usize, visit: &mut dyn FnMut(&Vec<Vec<usize>>)) {
    if col == sums.len() {
        visit(m);
        return;
    }
    fn split(m: &mut Vec<Vec<usize>>, sums: &[usize], col: usize, row: usize, left: usize, visit: &mut dyn FnMut(&Vec<Vec<usize>>)) {
        if row + 1 == m.len() {
            m[row][col] = left;
            fill_column(m, sums, col + 1, visit);
            m[row][col] = 0;
            return;
        }
        for v in 0..=left {
            m[row][col] = v;
            split(m, sums, col, row + 1, left - v, visit);
        }
        m[row][col] = 0;
    }
    split(m, sums, col, 0, sums[col], visit);
}

/// Permutation sums for every pair `(I, J)` of weight `n`, computed in one
/// pass over the symmetric group.
#[derive(Clone, Debug)]
pub struct PermOracleTables {
    pub n: usize,
    /// `(LC, recoil) -> q^(-maj(mirror LC)) sum q^inv`.
    exact: BTreeMap<(Composition, Composition), LaurentQPoly>,
}

impl PermOracleTables {
    /// Oracle value for `F_I^J`: recoil composition exactly `J`.
    pub fn f(&self, i: &Composition, j: &Composition) -> LaurentQPoly {
        self.exact.get(&(i.clone(), j.clone())).cloned().unwrap_or_default()
    }

    /// Oracle value for `E_I^J`: recoil composition coarser than or equal
    /// to `J`.
    pub fn e(&self, i: &Composition, j: &Composition) -> LaurentQPoly {
        j.coarsenings().iter().map(|k| self.f(i, k)).sum()
    }
}

/// One pass over `S_n` grouping `q^inv(σ)` by `(LC(σ), recoil(σ))`.
pub fn perm_oracle_tables(n: usize) -> Result<PermOracleTables> {
    check_oracle_n(n, MAX_ORACLE_N)?;
    let mut exact: BTreeMap<(Composition, Composition), LaurentQPoly> = BTreeMap::new();
    for s in permutations(n) {
        let lc = s.lc();
        let shift = -(lc.mirror().maj() as i64);
        exact
            .entry((lc, s.recoil_composition()))
            .or_default()
            .add_term(s.inv() as i64 + shift, BigInt::one());
    }
    Ok(PermOracleTables { n, exact })
}

/// `q^(-maj(mirror I)) sum q^inv(σ)` over `σ` with `LC(σ) = I` and recoil
/// composition coarser than or equal to `J`.
pub fn oracle_e_perms(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    Ok(perm_oracle_tables(i.weight())?.e(i, j))
}

/// As [`oracle_e_perms`] with recoil composition exactly `J`.
pub fn oracle_f_perms(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    Ok(perm_oracle_tables(i.weight())?.f(i, j))
}

/// All pairs of compositions of `n`.
#[cfg(test)]
pub(crate) fn all_pairs(n: usize) -> Vec<(Composition, Composition)> {
    let cs = crate::combinatorics::compositions_of(n);
    cs.iter().flat_map(|i| cs.iter().map(move |j| (i.clone(), j.clone()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{coeff_c, coeff_d, matrix_r_l, matrix_s_l};
    use crate::combinatorics::parse_word;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn six_words_for_211_22() {
        let (i, j) = (c(&[2, 1, 1]), c(&[2, 2]));
        let mut found: Vec<String> = packed_words(4)
            .into_iter()
            .filter(|w| wc(w) == i && j.is_finer_than(&dc(w.letters()).unwrap()))
            .map(|w| w.to_string())
            .collect();
        found.sort();
        assert_eq!(found, ["1123", "1213", "1312", "2213", "2312", "3312"]);
        assert_eq!(oracle_c_words(&i, &j).unwrap(), coeff_c(&i, &j).unwrap());
        assert_eq!(oracle_c_matrices(&i, &j).unwrap(), coeff_c(&i, &j).unwrap());
    }

    #[test]
    fn reading() {
        // columns (1,1) and (1,0,..): rows 1..2
        let m = vec![vec![1, 1], vec![1, 0], vec![0, 1]];
        assert_eq!(column_reading(&m), parse_word("1213").unwrap());
    }

    #[test]
    fn d_oracle_small() {
        assert_eq!(oracle_d_words(&c(&[1, 1]), &c(&[1, 1])).unwrap(), LaurentQPoly::monomial(1, 1));
        for n in 1..=4 {
            for (i, j) in all_pairs(n) {
                assert_eq!(oracle_d_words(&i, &j).unwrap(), coeff_d(&i, &j).unwrap(), "{i} {j}");
            }
        }
    }

    #[test]
    fn c_oracles_small() {
        for n in 1..=4 {
            for (i, j) in all_pairs(n) {
                let c = coeff_c(&i, &j).unwrap();
                assert_eq!(oracle_c_words(&i, &j).unwrap(), c, "{i} {j}");
                assert_eq!(oracle_c_matrices(&i, &j).unwrap(), c, "{i} {j}");
            }
        }
    }

    #[test]
    fn perm_oracles_small() {
        for n in 1..=5 {
            let t = perm_oracle_tables(n).unwrap();
            let (e, f) = (matrix_s_l(n).unwrap(), matrix_r_l(n).unwrap());
            for (i, j) in all_pairs(n) {
                assert_eq!(&t.e(&i, &j), e.entry(&i, &j).unwrap(), "E {i} {j}");
                assert_eq!(&t.f(&i, &j), f.entry(&i, &j).unwrap(), "F {i} {j}");
            }
        }
        assert_eq!(
            oracle_e_perms(&c(&[2, 1]), &c(&[1, 1, 1])).unwrap(),
            LaurentQPoly::from_coeffs(0, [2, 1])
        );
        assert_eq!(oracle_f_perms(&c(&[2, 1]), &c(&[2, 1])).unwrap(), LaurentQPoly::from_coeffs(0, [1, 1]));
    }

    #[test]
    fn size_limits() {
        assert!(oracle_c_matrices(&c(&[8]), &c(&[8])).is_err());
        assert!(perm_oracle_tables(9).is_err());
    }
}
