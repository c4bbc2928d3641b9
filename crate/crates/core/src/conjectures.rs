//! Experimental checks of three conjectured combinatorial interpretations of
//! the `S -> L` and `R -> L` coefficients. A mismatch is reported as a
//! finding; nothing here assumes the conjectures hold.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bases::{matrix_r_l, matrix_s_l, TransitionMatrix};
use crate::combinatorics::{compositions_of, packed_words, pattern_31_2, permutations, std, totg, Composition};
use crate::error::{Error, Result};
use crate::qpoly::LaurentQPoly;
use crate::report::CheckReport;

/// Largest weight for the packed-word sweep.
pub const MAX_WORDS_N: usize = 7;
/// Largest weight for the permutation sweeps.
pub const MAX_PERMS_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConjectureId {
    /// `E_I^J = sum q^totg(w)` over packed words with `GC(Std w) = I` and
    /// evaluation `J`.
    #[serde(rename = "E-words")]
    EWords,
    /// `E_I^J = sum q^(31-2)(σ)` over `σ` with `GC(σ) = I` and recoil
    /// composition coarser than or equal to `J`.
    #[serde(rename = "E-perms")]
    EPerms,
    /// `F_I^J = sum q^(31-2)(σ)` over `σ` with `GC(σ) = I` and recoil
    /// composition `J`.
    #[serde(rename = "F")]
    F,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] = [ConjectureId::EWords, ConjectureId::EPerms, ConjectureId::F];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::EWords => "E-words",
            ConjectureId::EPerms => "E-perms",
            ConjectureId::F => "F",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E-words" | "e-words" | "words" => Ok(ConjectureId::EWords),
            "E-perms" | "e-perms" | "perms" => Ok(ConjectureId::EPerms),
            "F" | "f" => Ok(ConjectureId::F),
            other => Err(Error::Parse(format!("unknown conjecture `{other}` (expected E-words, E-perms or F)"))),
        }
    }
}

/// One `(I, J)` comparison. `lhs` is the matrix coefficient, `rhs` the
/// combinatorial sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCell {
    pub i: Composition,
    pub j: Composition,
    pub lhs: LaurentQPoly,
    pub rhs: LaurentQPoly,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: ConjectureId,
    pub n: usize,
    /// Every pair of compositions of `n`, rows in canonical order of `I`
    /// then `J`.
    pub cells: Vec<ConjectureCell>,
    pub mismatches: usize,
    pub first_counterexample: Option<ConjectureCell>,
}

impl ConjectureReport {
    pub fn all_match(&self) -> bool {
        self.mismatches == 0
    }

    pub fn cell(&self, i: &Composition, j: &Composition) -> Option<&ConjectureCell> {
        self.cells.iter().find(|c| &c.i == i && &c.j == j)
    }

    fn build(conjecture: ConjectureId, n: usize, matrix: &TransitionMatrix, sums: &Sums) -> Self {
        let order = compositions_of(n);
        let cells: Vec<ConjectureCell> = order
            .iter()
            .flat_map(|i| order.iter().map(move |j| (i, j)))
            .map(|(i, j)| {
                let lhs = matrix.entry(i, j).cloned().unwrap_or_default();
                let rhs = sums.get(&(i.clone(), j.clone())).cloned().unwrap_or_default();
                let matches = lhs == rhs;
                ConjectureCell { i: i.clone(), j: j.clone(), lhs, rhs, matches }
            })
            .collect();
        let mismatches = cells.iter().filter(|c| !c.matches).count();
        let first_counterexample = cells.iter().find(|c| !c.matches).cloned();
        Self { conjecture, n, cells, mismatches, first_counterexample }
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {}): {}/{} cells match", self.conjecture, self.n, self.cells.len() - self.mismatches, self.cells.len())?;
        if let Some(c) = &self.first_counterexample {
            write!(f, "; first counterexample I = {}, J = {}: {} vs {}", c.i, c.j, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

type Sums = BTreeMap<(Composition, Composition), LaurentQPoly>;

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            allowed: if max == MAX_WORDS_N { "1..=7" } else { "1..=8" },
        });
    }
    Ok(())
}

/// `sum q^totg(w)` grouped by `(GC(Std w), ev(w))`.
pub fn word_sums(n: usize) -> Result<Sums> {
    check_n(n, MAX_WORDS_N)?;
    let partial: Vec<Sums> = packed_words(n)
        .par_chunks(256)
        .map(|chunk| {
            let mut acc = Sums::new();
            for w in chunk {
                let gc = std(w.letters()).expect("packed words standardize").gc();
                acc.entry((gc, w.evaluation()))
                    .or_default()
                    .add_term(totg(w.letters()) as i64, BigInt::one());
            }
            acc
        })
        .collect();
    Ok(merge(partial))
}

/// `sum q^(31-2)(σ)` grouped by `(GC(σ), recoil(σ))`.
pub fn exact_perm_sums(n: usize) -> Result<Sums> {
    check_n(n, MAX_PERMS_N)?;
    let mut acc = Sums::new();
    for s in permutations(n) {
        acc.entry((s.gc(), s.recoil_composition()))
            .or_default()
            .add_term(pattern_31_2(s.one_line()) as i64, BigInt::one());
    }
    Ok(acc)
}

/// Sums over recoil compositions coarser than or equal to `J`.
fn coarser_sums(exact: &Sums, n: usize) -> Sums {
    let order = compositions_of(n);
    let cells: Vec<((Composition, Composition), LaurentQPoly)> = order
        .par_iter()
        .flat_map_iter(|j| {
            let coarser = j.coarsenings();
            order.iter().map(move |i| {
                let v: LaurentQPoly = coarser
                    .iter()
                    .filter_map(|k| exact.get(&(i.clone(), k.clone())))
                    .sum();
                ((i.clone(), j.clone()), v)
            }).collect::<Vec<_>>()
        })
        .collect();
    cells.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn merge(parts: Vec<Sums>) -> Sums {
    let mut out = Sums::new();
    for p in parts {
        for (k, v) in p {
            *out.entry(k).or_default() += &v;
        }
    }
    out
}

pub fn check_conj_packed_words(n: usize) -> Result<ConjectureReport> {
    let sums = word_sums(n)?;
    Ok(ConjectureReport::build(ConjectureId::EWords, n, &matrix_s_l(n)?, &sums))
}

pub fn check_conj_permutations(n: usize) -> Result<ConjectureReport> {
    let exact = exact_perm_sums(n)?;
    Ok(ConjectureReport::build(ConjectureId::EPerms, n, &matrix_s_l(n)?, &coarser_sums(&exact, n)))
}

#[allow(non_snake_case)]
pub fn check_conj_F(n: usize) -> Result<ConjectureReport> {
    let exact = exact_perm_sums(n)?;
    Ok(ConjectureReport::build(ConjectureId::F, n, &matrix_r_l(n)?, &exact))
}

pub fn check_conjecture(id: ConjectureId, n: usize) -> Result<ConjectureReport> {
    match id {
        ConjectureId::EWords => check_conj_packed_words(n),
        ConjectureId::EPerms => check_conj_permutations(n),
        ConjectureId::F => check_conj_F(n),
    }
}

/// Checks that the right-hand sides fit together regardless of whether the
/// conjectures hold: summing the `F` sums over `K` coarser than or equal to
/// `J` gives the `E-perms` sums, and both sides of each report agree on the
/// column sums.
pub fn check_consistency(f: &ConjectureReport, e: &ConjectureReport) -> CheckReport {
    let mut rep = CheckReport::new(format!("F/E consistency (n = {})", f.n));
    let f_rhs: Sums = f.cells.iter().map(|c| ((c.i.clone(), c.j.clone()), c.rhs.clone())).collect();
    let f_lhs: Sums = f.cells.iter().map(|c| ((c.i.clone(), c.j.clone()), c.lhs.clone())).collect();
    for cell in &e.cells {
        let coarser = cell.j.coarsenings();
        let key = |k: &Composition| (cell.i.clone(), k.clone());
        let rhs: LaurentQPoly = coarser.iter().filter_map(|k| f_rhs.get(&key(k))).sum();
        let lhs: LaurentQPoly = coarser.iter().filter_map(|k| f_lhs.get(&key(k))).sum();
        rep.record(rhs == cell.rhs && lhs == cell.lhs, || format!("I = {}, J = {}", cell.i, cell.j));
    }
    rep
}
