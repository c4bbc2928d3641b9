//! Transition matrices between the bases `S(q)`, `R(q)`, `Ψ` and `L(q)`.

mod coefficients;
mod lproduct;
mod oracles;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{compositions_of, st, Composition, StValue};
use crate::error::{Error, Result};
use crate::qpoly::LaurentQPoly;

pub use coefficients::{
    c_vector, check_rec_ei1, coeff_c, coeff_d, coeff_e, coeff_f, e_vector, psi_in_l, psi_to_l_entry,
    sigma_s, sigma_s_brute,
};
pub(crate) use coefficients::{merge_parts, sign_shift};
pub use lproduct::{nested_l_product, qprod_l};
pub use oracles::{
    column_reading, oracle_c_matrices, oracle_c_words, oracle_d_words, oracle_e_perms,
    oracle_f_perms, perm_oracle_tables, PermOracleTables,
};

/// Largest weight accepted by the matrix builders.
pub const MAX_MATRIX_N: usize = 10;

/// The four bases of the degree-`n` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    /// `S^I(q)`
    S,
    /// `R_I(q)`
    R,
    /// `Ψ^I`
    Psi,
    /// `L_I(q)`
    L,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::S => "S",
            Basis::R => "R",
            Basis::Psi => "Psi",
            Basis::L => "L",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "S" | "s" => Ok(Basis::S),
            "R" | "r" => Ok(Basis::R),
            "Psi" | "psi" | "PSI" | "Ψ" => Ok(Basis::Psi),
            "L" | "l" => Ok(Basis::L),
            other => Err(Error::Parse(format!("unknown basis `{other}` (expected S, R, Psi or L)"))),
        }
    }
}

/// Square matrix of Laurent polynomials indexed by the compositions of `n`
/// in canonical order. Entry `(I, J)` is the coefficient of the target basis
/// element `I` in the expansion of the source basis element `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    n: usize,
    from: Basis,
    to: Basis,
    order: Vec<Composition>,
    rows: Vec<Vec<LaurentQPoly>>,
}

impl TransitionMatrix {
    /// Builds a matrix column by column; `column(J)` returns the entries for
    /// all rows in canonical order.
    fn from_columns<F>(n: usize, from: Basis, to: Basis, column: F) -> Self
    where
        F: Fn(&[Composition], &Composition) -> Vec<LaurentQPoly> + Sync,
    {
        let order = compositions_of(n);
        let cols: Vec<Vec<LaurentQPoly>> = order.par_iter().map(|j| column(&order, j)).collect();
        let size = order.len();
        let mut rows = vec![Vec::with_capacity(size); size];
        for col in cols {
            for (r, v) in col.into_iter().enumerate() {
                rows[r].push(v);
            }
        }
        Self { n, from, to, order, rows }
    }

    /// Assembles a matrix from explicit rows. Fails when the shape does not
    /// match the compositions of `n`.
    pub fn from_rows(n: usize, from: Basis, to: Basis, rows: Vec<Vec<LaurentQPoly>>) -> Result<Self> {
        let order = compositions_of(n);
        if rows.len() != order.len() || rows.iter().any(|r| r.len() != order.len()) {
            return Err(Error::InvalidArgument(format!(
                "matrix for n = {n} must be {0}x{0}",
                order.len()
            )));
        }
        Ok(Self { n, from, to, order, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn from_basis(&self) -> Basis {
        self.from
    }

    pub fn to_basis(&self) -> Basis {
        self.to
    }

    /// Row and column labels in canonical order.
    pub fn order(&self) -> &[Composition] {
        &self.order
    }

    pub fn size(&self) -> usize {
        self.order.len()
    }

    pub fn rows(&self) -> &[Vec<LaurentQPoly>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&LaurentQPoly> {
        self.rows.get(row)?.get(col)
    }

    /// Entry for target element `i` and source element `j`.
    pub fn entry(&self, i: &Composition, j: &Composition) -> Option<&LaurentQPoly> {
        if i.weight() != self.n || j.weight() != self.n {
            return None;
        }
        self.get(i.canonical_index(), j.canonical_index())
    }

    /// Column of source element `j`.
    pub fn column(&self, j: &Composition) -> Option<Vec<&LaurentQPoly>> {
        let c = j.canonical_index();
        (j.weight() == self.n).then(|| self.rows.iter().map(|r| &r[c]).collect())
    }

    /// `self * other`: the expansion `other.from -> other.to` followed by
    /// `self.from -> self.to`. Requires `other.to == self.from`.
    pub fn compose(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.n != other.n || other.to != self.from {
            return Err(Error::InvalidArgument(format!(
                "cannot compose M({}, {}) after M({}, {})",
                self.from, self.to, other.from, other.to
            )));
        }
        let size = self.size();
        let rows = (0..size)
            .into_par_iter()
            .map(|r| {
                (0..size)
                    .map(|c| {
                        let mut acc = LaurentQPoly::zero();
                        for k in 0..size {
                            let (a, b) = (&self.rows[r][k], &other.rows[k][c]);
                            if !a.is_zero() && !b.is_zero() {
                                acc += &(a * b);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Ok(TransitionMatrix { n: self.n, from: other.from, to: self.to, order: self.order.clone(), rows })
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, v)| if r == c { v.is_one() } else { v.is_zero() })
        })
    }

    /// First entry that is not a polynomial with nonnegative coefficients.
    pub fn first_negative_entry(&self) -> Option<(Composition, Composition, LaurentQPoly)> {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if !v.is_nonnegative_polynomial() {
                    return Some((self.order[r].clone(), self.order[c].clone(), v.clone()));
                }
            }
        }
        None
    }

    fn ensure_nonnegative(self) -> Result<Self> {
        match self.first_negative_entry() {
            None => Ok(self),
            Some((i, j, v)) => Err(Error::Consistency(format!(
                "M({}, {}) entry ({i}, {j}) = {v} is not in N[q]",
                self.from, self.to
            ))),
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_MATRIX_N {
        return Err(Error::OutOfRange { what: "n", value: n as i64, allowed: "1..=10" });
    }
    Ok(())
}

fn signed_sum<'a>(terms: impl Iterator<Item = (bool, &'a LaurentQPoly)>) -> LaurentQPoly {
    let mut out = LaurentQPoly::zero();
    for (neg, v) in terms {
        if neg {
            out -= v;
        } else {
            out += v;
        }
    }
    out
}

/// Möbius inversion over columns: column `J` becomes
/// `sum over K coarser than or equal to J of (-1)^(l(J)-l(K)) column K`.
fn ribbon_columns(m: &TransitionMatrix, from: Basis) -> TransitionMatrix {
    TransitionMatrix::from_columns(m.n, from, m.to, |order, j| {
        let ks = j.coarsenings();
        (0..order.len())
            .map(|r| {
                signed_sum(ks.iter().map(|k| {
                    ((j.len() - k.len()) % 2 == 1, &m.rows[r][k.canonical_index()])
                }))
            })
            .collect()
    })
}

/// `M(S(q), Ψ)`: entries `C_I^J`.
pub fn matrix_s_psi(n: usize) -> Result<TransitionMatrix> {
    check_n(n)?;
    TransitionMatrix::from_columns(n, Basis::S, Basis::Psi, |order, j| {
        order.iter().map(|i| coefficients::coeff_c_parts(i.parts(), j.parts())).collect()
    })
    .ensure_nonnegative()
}

/// `M(R(q), Ψ)`: entries `D_I^J`.
pub fn matrix_r_psi(n: usize) -> Result<TransitionMatrix> {
    let s = matrix_s_psi(n)?;
    ribbon_columns(&s, Basis::R).ensure_nonnegative()
}

/// `M(L(q), Ψ)`: entry `q^st(I,J)` when `I` is finer than `J`.
pub fn matrix_l_psi(n: usize) -> Result<TransitionMatrix> {
    check_n(n)?;
    TransitionMatrix::from_columns(n, Basis::L, Basis::Psi, |order, j| {
        order
            .iter()
            .map(|i| match st(i, j) {
                StValue::Finite(e) => LaurentQPoly::monomial(e as i64, 1),
                StValue::MinusInfinity => LaurentQPoly::zero(),
            })
            .collect()
    })
    .ensure_nonnegative()
}

/// `M(Ψ, L(q))`, the inverse of [`matrix_l_psi`]. Entries carry signs and
/// negative powers of `q`.
pub fn matrix_psi_l(n: usize) -> Result<TransitionMatrix> {
    check_n(n)?;
    Ok(TransitionMatrix::from_columns(n, Basis::Psi, Basis::L, |order, j| {
        order.iter().map(|i| psi_to_l_entry(i, j)).collect()
    }))
}

/// `M(S(q), L(q))`: entries `E_I^J`, computed as `M(Ψ, L(q)) M(S(q), Ψ)`.
pub fn matrix_s_l(n: usize) -> Result<TransitionMatrix> {
    let c = matrix_s_psi(n)?;
    TransitionMatrix::from_columns(n, Basis::S, Basis::L, |order, j| {
        let jc = j.canonical_index();
        order
            .iter()
            .map(|i| {
                let mut acc = LaurentQPoly::zero();
                for k in i.coarsenings() {
                    let ck = &c.rows[k.canonical_index()][jc];
                    if !ck.is_zero() {
                        acc += &(&psi_to_l_entry(i, &k) * ck);
                    }
                }
                acc
            })
            .collect()
    })
    .ensure_nonnegative()
}

/// `M(R(q), L(q))`: entries `F_I^J`.
pub fn matrix_r_l(n: usize) -> Result<TransitionMatrix> {
    let e = matrix_s_l(n)?;
    ribbon_columns(&e, Basis::R).ensure_nonnegative()
}

/// Dispatches on the basis pair.
pub fn transition_matrix(n: usize, from: Basis, to: Basis) -> Result<TransitionMatrix> {
    match (from, to) {
        (Basis::S, Basis::Psi) => matrix_s_psi(n),
        (Basis::R, Basis::Psi) => matrix_r_psi(n),
        (Basis::L, Basis::Psi) => matrix_l_psi(n),
        (Basis::Psi, Basis::L) => matrix_psi_l(n),
        (Basis::S, Basis::L) => matrix_s_l(n),
        (Basis::R, Basis::L) => matrix_r_l(n),
        _ => Err(Error::UnsupportedBasisPair { from: from.to_string(), to: to.to_string() }),
    }
}

/// Wire form of a matrix.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    from: Basis,
    to: Basis,
    order: Vec<String>,
    rows: Vec<Vec<LaurentQPoly>>,
}

impl Serialize for TransitionMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n,
            from: self.from,
            to: self.to,
            order: self.order.iter().map(Composition::label).collect(),
            rows: self.rows.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TransitionMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(deserializer)?;
        let m = TransitionMatrix::from_rows(repr.n, repr.from, repr.to, repr.rows).map_err(D::Error::custom)?;
        let labels: Vec<String> = m.order.iter().map(Composition::label).collect();
        if labels != repr.order {
            return Err(D::Error::custom("order does not match the canonical composition order"));
        }
        Ok(m)
    }
}
