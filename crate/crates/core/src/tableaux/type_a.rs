use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{alternating_closed_form, Board, Filling, MAX_BRUTE_BOXES};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};
use crate::qpoly::{fact, qfact_a, LaurentQPoly};

/// A Young diagram in a `k x (n-k)` rectangle, longest row first. Rows of
/// length zero are allowed and count towards `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeA {
    rows: Vec<usize>,
}

impl ShapeA {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidShape("a type A shape has at least one row".into()));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("rows {rows:?} are not weakly decreasing")));
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of rows `k`.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Semiperimeter `k + rows[0]`.
    pub fn n(&self) -> usize {
        self.k() + self.rows[0]
    }

    pub fn boxes(&self) -> usize {
        self.rows.iter().sum()
    }

    fn board(&self) -> Board {
        Board { widths: self.rows.clone(), diagonal: vec![false; self.rows.len()] }
    }

    /// Conditions (1) and (2): every column has a 1, and no 0 has a 1 above
    /// it in its column and a 1 to its left in its row.
    pub fn is_valid_filling(&self, f: &Filling) -> bool {
        self.board().is_valid(f)
    }

    /// All valid fillings.
    pub fn valid_fillings(&self) -> Result<Vec<Filling>> {
        check_boxes(self.boxes())?;
        let mut out = Vec::new();
        self.board().for_each_valid(&mut |f| out.push(f.clone()));
        Ok(out)
    }
}

fn check_boxes(boxes: usize) -> Result<()> {
    if boxes > MAX_BRUTE_BOXES {
        return Err(Error::OutOfRange { what: "boxes", value: boxes as i64, allowed: "at most 30" });
    }
    Ok(())
}

/// `l(I)` rows; `i_t - 1` columns of length `l(I) - t + 1`.
pub fn comp_a_to_shape(i: &Composition) -> Result<ShapeA> {
    if i.is_empty() {
        return Err(Error::InvalidComposition("empty composition".into()));
    }
    let p = i.parts();
    let k = p.len();
    let rows = (0..k).map(|r| p[..k - r].iter().map(|x| x - 1).sum()).collect();
    ShapeA::new(rows)
}

/// Inverse of [`comp_a_to_shape`].
pub fn shape_a_to_comp(s: &ShapeA) -> Composition {
    let k = s.k();
    let row = |r: usize| if r < k { s.rows[r] } else { 0 };
    let parts = (1..=k).map(|t| row(k - t) - row(k - t + 1) + 1).collect();
    Composition::from_parts_unchecked(parts)
}

/// `sum of q^rank(T)` over valid fillings of the shape.
pub fn brute_pt_a(s: &ShapeA) -> Result<LaurentQPoly> {
    check_boxes(s.boxes())?;
    Ok(s.board().rank_polynomial())
}

/// `PT^A_I(q) = sum over J coarser than or equal to I of
/// (-1/q)^(l(I)-l(J)) q^(-st'(I,J)) QFact_A(J)`.
pub fn pt_a_closed(i: &Composition) -> Result<LaurentQPoly> {
    if i.is_empty() {
        return Err(Error::InvalidComposition("empty composition".into()));
    }
    let v = alternating_closed_form(i.parts(), qfact_a);
    if !v.is_nonnegative_polynomial() {
        return Err(Error::Consistency(format!("PT^A_{i} = {v} is not in N[q]")));
    }
    Ok(v)
}

/// Number of permutation tableaux of the shape of `I`:
/// `sum over J coarser than or equal to I of (-1)^(l(I)-l(J)) Fact(J)`.
pub fn pt_a_count(i: &Composition) -> Result<BigInt> {
    if i.is_empty() {
        return Err(Error::InvalidComposition("empty composition".into()));
    }
    Ok(i.coarsenings()
        .iter()
        .map(|j| {
            let f = fact(j.parts());
            if (i.len() - j.len()) % 2 == 0 { f } else { -f }
        })
        .sum())
}
