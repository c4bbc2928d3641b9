use serde::{Deserialize, Serialize};

use super::{alternating_closed_form, Board, Filling, MAX_BRUTE_BOXES};
use crate::combinatorics::WeakComposition;
use crate::error::{Error, Result};
use crate::qpoly::{qfact_b, LaurentQPoly};

/// Largest staircase height accepted by [`comp_b_decode`].
pub const MAX_STAIRCASE_HEIGHT: usize = 24;

/// An order ideal of the staircase with `h` rows, listed top to bottom.
/// Row `r` (0-based) is left-justified and has at most `h - r` boxes; a row
/// reaching that bound ends in a diagonal box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapeB {
    widths: Vec<usize>,
}

impl ShapeB {
    /// Validates the staircase bound and the order-ideal condition
    /// `w[r2] >= min(w[r], h - r2)` for `r < r2`.
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        let h = widths.len();
        if h == 0 {
            return Err(Error::InvalidShape("a type B shape has at least one row".into()));
        }
        for (r, &w) in widths.iter().enumerate() {
            if w > h - r {
                return Err(Error::InvalidShape(format!(
                    "row {} has width {w}, above the staircase bound {}",
                    r + 1,
                    h - r
                )));
            }
        }
        if !is_ideal(&widths) {
            return Err(Error::InvalidShape(format!("{widths:?} is not an order ideal of the staircase")));
        }
        Ok(Self { widths })
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn height(&self) -> usize {
        self.widths.len()
    }

    pub fn boxes(&self) -> usize {
        self.widths.iter().sum()
    }

    /// Flags rows whose last box lies on the diagonal.
    pub fn diagonal_rows(&self) -> Vec<bool> {
        let h = self.height();
        self.widths.iter().enumerate().map(|(r, &w)| w > 0 && w == h - r).collect()
    }

    /// The same ideal inside a staircase with `extra` more rows, added on top
    /// as empty rows.
    pub fn padded(&self, extra: usize) -> Self {
        let mut widths = vec![0; extra];
        widths.extend_from_slice(&self.widths);
        Self { widths }
    }

    /// Rows reversed so that the column rule looks at earlier rows.
    fn board(&self) -> Board {
        let mut diagonal = self.diagonal_rows();
        diagonal.reverse();
        Board { widths: self.widths.iter().rev().copied().collect(), diagonal }
    }

    fn flip(f: &Filling) -> Filling {
        Filling { rows: f.rows.iter().rev().cloned().collect() }
    }

    /// Conditions (1), (2) with the 1 below the 0, and (3): a 0 in a
    /// diagonal box forces its row to be 0.
    pub fn is_valid_filling(&self, f: &Filling) -> bool {
        self.board().is_valid(&Self::flip(f))
    }

    pub fn valid_fillings(&self) -> Result<Vec<Filling>> {
        check_boxes(self.boxes())?;
        let mut out = Vec::new();
        self.board().for_each_valid(&mut |f| out.push(Self::flip(f)));
        Ok(out)
    }
}

fn is_ideal(widths: &[usize]) -> bool {
    let h = widths.len();
    (0..h).all(|r| (r + 1..h).all(|r2| widths[r2] >= widths[r].min(h - r2)))
}

fn check_boxes(boxes: usize) -> Result<()> {
    if boxes > MAX_BRUTE_BOXES {
        return Err(Error::OutOfRange { what: "boxes", value: boxes as i64, allowed: "at most 30" });
    }
    Ok(())
}

/// With `k` the largest width: `(#rows of width k) - 1, #rows of width k-1,
/// ..., #rows of width 0`. The parts sum to `h - 1`.
pub fn comp_b_encode(s: &ShapeB) -> WeakComposition {
    let k = s.widths.iter().copied().max().unwrap_or(0);
    let count = |w: usize| s.widths.iter().filter(|&&x| x == w).count();
    let mut parts = vec![count(k) - 1];
    parts.extend((1..=k).map(|t| count(k - t)));
    WeakComposition::new(parts)
}

/// The unique staircase ideal with `i_1 + 1` rows of width `k`, `i_2` rows
/// of width `k - 1`, ..., `i_(k+1)` rows of width 0, found by search.
pub fn comp_b_decode(i: &WeakComposition) -> Result<ShapeB> {
    let parts = i.parts();
    if parts.is_empty() {
        return Err(Error::InvalidComposition("empty weak composition".into()));
    }
    let k = parts.len() - 1;
    let h = i.weight() + 1;
    if h > MAX_STAIRCASE_HEIGHT {
        return Err(Error::OutOfRange { what: "height", value: h as i64, allowed: "at most 24" });
    }
    // remaining[w] = rows of width w still to place
    let mut remaining = vec![0; k + 1];
    remaining[k] = parts[0] + 1;
    for t in 1..=k {
        remaining[k - t] = parts[t];
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    place(h, &mut Vec::with_capacity(h), &mut remaining, &mut found);
    match found.len() {
        0 => Err(Error::InvalidShape(format!("no staircase ideal is encoded by {i}"))),
        1 => ShapeB::new(found.pop().unwrap()),
        n => Err(Error::Consistency(format!("{n} staircase ideals are encoded by {i}"))),
    }
}

fn place(h: usize, cur: &mut Vec<usize>, remaining: &mut [usize], found: &mut Vec<Vec<usize>>) {
    let r = cur.len();
    if r == h {
        found.push(cur.clone());
        return;
    }
    for w in 0..remaining.len() {
        if remaining[w] == 0 || w > h - r {
            continue;
        }
        if cur.iter().any(|&above| w < above.min(h - r)) {
            continue;
        }
        remaining[w] -= 1;
        cur.push(w);
        place(h, cur, remaining, found);
        cur.pop();
        remaining[w] += 1;
        if found.len() > 1 {
            return;
        }
    }
}

/// All staircase ideals of height `h` with at most `max_boxes` boxes.
pub fn ideals_b(h: usize, max_boxes: usize) -> Vec<ShapeB> {
    fn rec(h: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<ShapeB>) {
        let r = cur.len();
        if r == h {
            out.push(ShapeB { widths: cur.clone() });
            return;
        }
        let lo = cur.iter().map(|&above| above.min(h - r)).max().unwrap_or(0);
        for w in lo..=(h - r).min(budget) {
            cur.push(w);
            rec(h, budget - w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if h > 0 {
        rec(h, max_boxes, &mut Vec::with_capacity(h), &mut out);
    }
    out
}

/// `sum of q^rank(T)` over type B permutation tableaux of the shape.
pub fn brute_pt_b(s: &ShapeB) -> Result<LaurentQPoly> {
    check_boxes(s.boxes())?;
    Ok(s.board().rank_polynomial())
}

/// `PT^B_I(q) = sum over J coarser than or equal to I of
/// (-1/q)^(l(I)-l(J)) q^(-st'(I,J)) QFact_B(J)`, where coarsenings and
/// `st'` use the partial sums of `I` including repeats.
pub fn pt_b_closed(i: &WeakComposition) -> Result<LaurentQPoly> {
    if i.is_empty() {
        return Err(Error::InvalidComposition("empty weak composition".into()));
    }
    Ok(alternating_closed_form(i.parts(), qfact_b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(p: &[usize]) -> WeakComposition {
        WeakComposition::new(p.to_vec())
    }

    fn pt120() -> LaurentQPoly {
        LaurentQPoly::from_coeffs(0, [6, 10, 8, 4, 1])
    }

    #[test]
    fn worked_example() {
        let s = comp_b_decode(&wc(&[1, 2, 0])).unwrap();
        assert_eq!(s.widths(), &[1, 2, 2, 1]);
        assert_eq!(comp_b_encode(&s), wc(&[1, 2, 0]));
        assert_eq!(brute_pt_b(&s).unwrap(), pt120());
        assert_eq!(pt_b_closed(&wc(&[1, 2, 0])).unwrap(), pt120());
    }

    #[test]
    fn empty_shape() {
        let s = comp_b_decode(&wc(&[0])).unwrap();
        assert_eq!(s.boxes(), 0);
        assert_eq!(brute_pt_b(&s).unwrap(), LaurentQPoly::one());
        assert_eq!(pt_b_closed(&wc(&[0])).unwrap(), LaurentQPoly::one());
    }

    #[test]
    fn validation() {
        assert!(ShapeB::new(vec![2, 1]).is_ok());
        assert!(ShapeB::new(vec![3, 1]).is_err());
        assert!(ShapeB::new(vec![1, 0]).is_err());
        assert!(comp_b_decode(&wc(&[0, 0, 0])).is_err());
    }

    #[test]
    fn padding_invariance() {
        let s = comp_b_decode(&wc(&[1, 2, 0])).unwrap();
        for extra in 1..=3 {
            let p = s.padded(extra);
            assert!(ShapeB::new(p.widths().to_vec()).is_ok());
            assert_eq!(brute_pt_b(&p).unwrap(), pt120());
            let code = comp_b_encode(&p);
            assert_eq!(pt_b_closed(&code).unwrap(), pt120());
        }
        assert_eq!(pt_b_closed(&wc(&[1, 2, 1])).unwrap(), pt_b_closed(&wc(&[1, 2, 2])).unwrap());
    }

    #[test]
    fn encode_decode_round_trip() {
        for h in 1..=8 {
            for s in ideals_b(h, 10) {
                let code = comp_b_encode(&s);
                assert_eq!(code.weight() + 1, h);
                assert_eq!(comp_b_decode(&code).unwrap(), s, "{code}");
            }
        }
    }

    #[test]
    fn closed_matches_brute_small() {
        for h in 1..=6 {
            for s in ideals_b(h, 7) {
                let code = comp_b_encode(&s);
                let closed = pt_b_closed(&code).unwrap();
                assert_eq!(brute_pt_b(&s).unwrap(), closed, "{code}");
                assert!(closed.is_nonnegative_polynomial());
            }
        }
    }

    #[test]
    fn fillings_are_valid() {
        let s = comp_b_decode(&wc(&[1, 2, 0])).unwrap();
        let fs = s.valid_fillings().unwrap();
        assert_eq!(fs.len(), 29);
        assert!(fs.iter().all(|f| s.is_valid_filling(f)));
    }
}
