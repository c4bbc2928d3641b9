//! The PASEP on `n` sites with open boundaries: particles hop right at rate
//! 1 and left at rate `q`, enter at the leftmost site at rate 1 and leave
//! from the rightmost site at rate 1.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{crossings, pattern_2_31, permutations, Composition};
use crate::error::{Error, Result};
use crate::qpoly::LaurentQPoly;
use crate::report::CheckReport;
use crate::tableaux::pt_a_closed;

mod exact;

/// Largest `n` for the exact linear solver.
pub const MAX_EXACT_N: usize = 12;
/// Largest `n` for the closed formula and the simulation.
pub const MAX_N: usize = 16;
/// Runs shorter than this are flagged as statistically insufficient.
pub const MIN_RECOMMENDED_STEPS: u64 = 1_000_000;

/// Occupation of the sites, left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PasepState {
    sites: Vec<bool>,
}

impl PasepState {
    pub fn new(sites: Vec<bool>) -> Result<Self> {
        if sites.is_empty() {
            return Err(Error::InvalidState("a state has at least one site".into()));
        }
        Ok(Self { sites })
    }

    pub fn sites(&self) -> &[bool] {
        &self.sites
    }

    pub fn n(&self) -> usize {
        self.sites.len()
    }

    /// All `2^n` states, ordered lexicographically with occupied before
    /// empty: for `n = 2`, `••, •◦, ◦•, ◦◦`.
    pub fn all(n: usize) -> Result<Vec<PasepState>> {
        check_n(n, MAX_N)?;
        Ok((0..1usize << n).map(|t| Self::from_ordinal(n, t)).collect())
    }

    fn from_ordinal(n: usize, t: usize) -> Self {
        Self { sites: (0..n).map(|p| t >> (n - 1 - p) & 1 == 0).collect() }
    }

    /// Position in [`PasepState::all`].
    pub fn ordinal(&self) -> usize {
        let n = self.n();
        self.sites.iter().enumerate().filter(|(_, &o)| !o).map(|(p, _)| 1 << (n - 1 - p)).sum()
    }

    /// Canonical index of the associated composition: bit `p` is set when
    /// site `p` (from the left) is occupied.
    pub fn canonical_index(&self) -> usize {
        self.sites.iter().enumerate().filter(|(_, &o)| o).map(|(p, _)| 1 << p).sum()
    }

    fn from_mask(n: usize, mask: usize) -> Self {
        Self { sites: (0..n).map(|p| mask >> p & 1 == 1).collect() }
    }
}

impl fmt::Display for PasepState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &o in &self.sites {
            f.write_str(if o { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for PasepState {
    type Err = Error;

    /// Accepts `0`/`1` or `◦`/`•` per site.
    fn from_str(s: &str) -> Result<Self> {
        let sites = s
            .trim()
            .chars()
            .map(|ch| match ch {
                '1' | '•' => Ok(true),
                '0' | '◦' => Ok(false),
                other => Err(Error::InvalidState(format!("unexpected character `{other}` in `{s}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sites)
    }
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if n == 0 || n > max {
        return Err(Error::OutOfRange { what: "n", value: n as i64, allowed: "1..=16 (1..=12 for the exact solver)" });
    }
    Ok(())
}

fn check_q(q: &BigRational) -> Result<()> {
    if q.is_negative() {
        return Err(Error::InvalidArgument(format!("q = {q} must be nonnegative")));
    }
    Ok(())
}

/// Composition of `n + 1` whose descent set is the set of occupied sites,
/// numbering sites 1..n from right to left.
pub fn state_to_composition(tau: &PasepState) -> Composition {
    let n = tau.n();
    let des: Vec<usize> = tau.sites.iter().enumerate().filter(|(_, &o)| o).map(|(p, _)| n - p).collect();
    Composition::from_descent_set(&des, n + 1).expect("site numbers lie in 1..n")
}

/// Inverse of [`state_to_composition`].
pub fn composition_to_state(i: &Composition) -> Result<PasepState> {
    let m = i.weight();
    if m < 2 {
        return Err(Error::InvalidComposition(format!("{i} has weight below 2")));
    }
    let n = m - 1;
    let mut sites = vec![false; n];
    for d in i.descent_set() {
        sites[n - d] = true;
    }
    PasepState::new(sites)
}

/// Unnormalized stationary weight `PT^A_{I(τ)}(q)` of every state, in
/// [`PasepState::all`] order.
pub fn stationary_weights(n: usize) -> Result<Vec<(PasepState, LaurentQPoly)>> {
    PasepState::all(n)?
        .into_iter()
        .map(|s| {
            let w = pt_a_closed(&state_to_composition(&s))?;
            Ok((s, w))
        })
        .collect()
}

/// `Z_n(q)`, the sum of all stationary weights.
pub fn partition_polynomial(n: usize) -> Result<LaurentQPoly> {
    Ok(stationary_weights(n)?.into_iter().map(|(_, w)| w).sum())
}

/// `Z_n` evaluated at `q`.
pub fn partition_function(n: usize, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    partition_polynomial(n)?.eval(q)
}

/// Closed-form stationary probability of `τ`.
pub fn steady_state_formula(tau: &PasepState, q: &BigRational) -> Result<BigRational> {
    check_q(q)?;
    let w = pt_a_closed(&state_to_composition(tau))?.eval(q)?;
    Ok(w / partition_function(tau.n(), q)?)
}

/// Closed-form stationary distribution in [`PasepState::all`] order.
pub fn formula_distribution(n: usize, q: &BigRational) -> Result<Vec<BigRational>> {
    check_q(q)?;
    let weights: Vec<BigRational> = stationary_weights(n)?
        .into_iter()
        .map(|(_, w)| w.eval(q))
        .collect::<Result<_>>()?;
    let z: BigRational = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / &z).collect())
}

/// Outgoing transitions of the state with occupation mask `mask` as
/// `(rate is q rather than 1, target mask)`.
fn transitions(n: usize, mask: usize) -> Vec<(bool, usize)> {
    let occ = |p: usize| mask >> p & 1 == 1;
    let mut out = Vec::new();
    if !occ(0) {
        out.push((false, mask | 1));
    }
    if occ(n - 1) {
        out.push((false, mask & !(1 << (n - 1))));
    }
    for p in 0..n.saturating_sub(1) {
        if occ(p) && !occ(p + 1) {
            out.push((false, mask ^ (0b11 << p)));
        }
        if !occ(p) && occ(p + 1) {
            out.push((true, mask ^ (0b11 << p)));
        }
    }
    out
}

/// Stationary distribution of the continuous-time chain: the balance
/// equations with one of them replaced by the normalization, solved exactly
/// over the rationals. Returned in [`PasepState::all`] order.
pub fn exact_stationary_solver(n: usize, q: &BigRational) -> Result<Vec<BigRational>> {
    check_n(n, MAX_EXACT_N)?;
    check_q(q)?;
    let size = 1usize << n;
    // Rows are balance equations indexed by target mask, columns by source.
    let mut a: Vec<BTreeMap<usize, BigRational>> = vec![BTreeMap::new(); size];
    for src in 0..size {
        for (is_q, dst) in transitions(n, src) {
            let rate = if is_q { q.clone() } else { BigRational::one() };
            if rate.is_zero() {
                continue;
            }
            *a[dst].entry(src).or_insert_with(BigRational::zero) += &rate;
            *a[src].entry(src).or_insert_with(BigRational::zero) -= &rate;
        }
    }
    // Replace the last equation by the normalization.
    a[size - 1] = (0..size).map(|c| (c, BigRational::one())).collect();
    let rows: Vec<Vec<(usize, BigRational)>> =
        a.into_iter().map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
    let mut b = vec![BigRational::zero(); size];
    b[size - 1] = BigRational::one();
    let x = exact::solve(&rows, &b)?;
    let mut out = vec![BigRational::zero(); size];
    for (mask, p) in x.into_iter().enumerate() {
        out[PasepState::from_mask(n, mask).ordinal()] = p;
    }
    Ok(out)
}

/// Empirical distribution from a uniformized simulation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloRun {
    pub n: usize,
    pub q: f64,
    pub steps: u64,
    pub burn_in: u64,
    pub seed: u64,
    /// Frequencies in [`PasepState::all`] order.
    pub distribution: Vec<f64>,
    /// True when `steps` is below [`MIN_RECOMMENDED_STEPS`].
    pub insufficient: bool,
}

/// Simulates the jump chain of the uniformized process with constant
/// `n + 1 + q n`, starting from the empty state. The first tenth of the
/// steps is discarded; with `steps = 0` the result is a point mass on the
/// initial state.
pub fn monte_carlo(n: usize, q: f64, steps: u64, seed: u64) -> Result<MonteCarloRun> {
    check_n(n, MAX_N)?;
    if !(q.is_finite() && q >= 0.0) {
        return Err(Error::InvalidArgument(format!("q = {q} must be finite and nonnegative")));
    }
    let size = 1usize << n;
    let lambda = (n + 1) as f64 + q * n as f64;
    let table: Vec<Vec<(f64, usize)>> = (0..size)
        .map(|m| {
            let mut acc = 0.0;
            transitions(n, m)
                .into_iter()
                .map(|(is_q, dst)| {
                    acc += if is_q { q } else { 1.0 };
                    (acc, dst)
                })
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let burn_in = steps / 10;
    let mut counts = vec![0u64; size];
    let mut state = 0usize;
    for step in 0..steps {
        let u = rng.gen::<f64>() * lambda;
        if let Some(&(_, dst)) = table[state].iter().find(|(c, _)| u < *c) {
            state = dst;
        }
        if step >= burn_in {
            counts[state] += 1;
        }
    }
    let counted = steps - burn_in;
    let mut distribution = vec![0.0; size];
    for (mask, &c) in counts.iter().enumerate() {
        let idx = PasepState::from_mask(n, mask).ordinal();
        distribution[idx] = if counted == 0 { 0.0 } else { c as f64 / counted as f64 };
    }
    if counted == 0 {
        distribution[PasepState::from_mask(n, 0).ordinal()] = 1.0;
    }
    Ok(MonteCarloRun { n, q, steps, burn_in, seed, distribution, insufficient: steps < MIN_RECOMMENDED_STEPS })
}

/// Total variation distance `1/2 sum |p - r|`.
pub fn total_variation(p: &[f64], r: &[f64]) -> f64 {
    p.iter().zip(r).map(|(a, b)| (a - b).abs()).sum::<f64>() / 2.0
}

pub fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `1`, `1/2`, `0.25` or `7/3`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        let den: BigInt = den.trim().parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let digits = format!("{int}{frac}");
        let num: BigInt = digits.parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(num, den));
    }
    let num: BigInt = s.parse().map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
    Ok(BigRational::from_integer(num))
}

/// How the solver column of a [`StationaryReport`] was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Formula,
    Exact,
    Mc,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "exact" => Ok(Method::Exact),
            "mc" | "monte-carlo" => Ok(Method::Mc),
            other => Err(Error::Parse(format!("unknown method `{other}`"))),
        }
    }
}

/// One state's probabilities.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateProbability {
    pub state: String,
    pub composition: String,
    /// Exact closed-form probability, as `a/b`.
    pub formula: String,
    pub formula_value: f64,
    /// Exact rational for the linear solver, decimal for the simulation.
    pub solver: Option<String>,
    pub solver_value: Option<f64>,
    pub gap: Option<f64>,
}

/// Closed-form probabilities next to an independent solver.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StationaryReport {
    pub n: usize,
    pub q: String,
    pub method: Method,
    pub states: Vec<StateProbability>,
    /// For the exact solver: all probabilities agree exactly.
    pub exact_match: Option<bool>,
    pub total_variation: Option<f64>,
    pub monte_carlo: Option<MonteCarloSummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloSummary {
    pub steps: u64,
    pub burn_in: u64,
    pub seed: u64,
    pub insufficient: bool,
}

/// Builds a report for every state, or only `only` when given.
pub fn stationary_report(
    n: usize,
    q: &BigRational,
    method: Method,
    seed: u64,
    steps: u64,
    only: Option<&PasepState>,
) -> Result<StationaryReport> {
    if let Some(s) = only {
        if s.n() != n {
            return Err(Error::InvalidState(format!("state {s} has {} sites, expected {n}", s.n())));
        }
    }
    let states = PasepState::all(n)?;
    let formula = formula_distribution(n, q)?;
    let (solver, exact): (Option<Vec<(String, f64)>>, Option<Vec<BigRational>>) = match method {
        Method::Formula => (None, None),
        Method::Exact => {
            let x = exact_stationary_solver(n, q)?;
            (Some(x.iter().map(|v| (v.to_string(), rational_to_f64(v))).collect()), Some(x))
        }
        Method::Mc => {
            let run = monte_carlo(n, rational_to_f64(q), steps, seed)?;
            (Some(run.distribution.iter().map(|v| (format!("{v}"), *v)).collect()), None)
        }
    };
    let mut rows = Vec::new();
    for (idx, s) in states.iter().enumerate() {
        if only.is_some_and(|o| o != s) {
            continue;
        }
        let fv = rational_to_f64(&formula[idx]);
        let (sv, sval) = match &solver {
            Some(v) => (Some(v[idx].0.clone()), Some(v[idx].1)),
            None => (None, None),
        };
        rows.push(StateProbability {
            state: s.to_string(),
            composition: state_to_composition(s).label(),
            formula: formula[idx].to_string(),
            formula_value: fv,
            solver: sv,
            solver_value: sval,
            gap: sval.map(|x| (x - fv).abs()),
        });
    }
    let formula_f: Vec<f64> = formula.iter().map(rational_to_f64).collect();
    let total_variation = solver
        .as_ref()
        .map(|v| total_variation(&v.iter().map(|x| x.1).collect::<Vec<_>>(), &formula_f));
    let monte_carlo = (method == Method::Mc).then(|| MonteCarloSummary {
        steps,
        burn_in: steps / 10,
        seed,
        insufficient: steps < MIN_RECOMMENDED_STEPS,
    });
    Ok(StationaryReport {
        n,
        q: q.to_string(),
        method,
        states: rows,
        exact_match: exact.map(|x| x == formula),
        total_variation,
        monte_carlo,
    })
}

/// `T_I(q)`, `T'_I(q)` and `PT^A_I(q)` for one composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub composition: String,
    /// `sum of q^(2-31)` over permutations with descent bottoms `DB(I)`.
    pub t: LaurentQPoly,
    /// `sum of q^crossings` over permutations with weak excedances `W(I)`.
    pub t_prime: LaurentQPoly,
    pub pt: LaurentQPoly,
}

impl CensusRow {
    pub fn matches(&self) -> bool {
        self.t == self.t_prime && self.t == self.pt
    }
}

/// `DB(I) = Des(mirror I)`.
pub fn descent_bottom_target(i: &Composition) -> Vec<usize> {
    i.mirror().descent_set()
}

/// `W(I) = {1} ∪ (1 + DB(I))`.
pub fn weak_excedance_target(i: &Composition) -> Vec<usize> {
    std::iter::once(1).chain(descent_bottom_target(i).into_iter().map(|d| d + 1)).collect()
}

/// Census rows for every composition of `m`, from one pass over `S_m`.
pub fn census_table(m: usize) -> Result<Vec<CensusRow>> {
    if m == 0 || m > 9 {
        return Err(Error::OutOfRange { what: "weight", value: m as i64, allowed: "1..=9" });
    }
    let mut by_db: BTreeMap<Vec<usize>, LaurentQPoly> = BTreeMap::new();
    let mut by_we: BTreeMap<Vec<usize>, LaurentQPoly> = BTreeMap::new();
    for s in permutations(m) {
        let db: Vec<usize> = s.descent_bottom_set().into_iter().collect();
        let we: Vec<usize> = s.weak_excedance_set().into_iter().collect();
        by_db.entry(db).or_default().add_term(pattern_2_31(s.one_line()) as i64, BigInt::one());
        by_we.entry(we).or_default().add_term(crossings(s.one_line()) as i64, BigInt::one());
    }
    crate::combinatorics::compositions_of(m)
        .into_iter()
        .map(|i| {
            Ok(CensusRow {
                composition: i.label(),
                t: by_db.get(&descent_bottom_target(&i)).cloned().unwrap_or_default(),
                t_prime: by_we.get(&weak_excedance_target(&i)).cloned().unwrap_or_default(),
                pt: pt_a_closed(&i)?,
            })
        })
        .collect()
}

/// Three-way comparison `T_I = T'_I = PT^A_I` for a single composition.
pub fn pattern_census_check(i: &Composition) -> Result<CensusRow> {
    let rows = census_table(i.weight())?;
    Ok(rows.into_iter().find(|r| r.composition == i.label()).expect("every composition has a row"))
}

/// Runs the census for all compositions of weight at most `max_m`.
pub fn census_report(max_m: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("pattern census");
    for m in 1..=max_m {
        for row in census_table(m)? {
            report.record(row.matches(), || {
                format!("I = {}: T = {}, T' = {}, PT = {}", row.composition, row.t, row.t_prime, row.pt)
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn st(s: &str) -> PasepState {
        s.parse().unwrap()
    }

    #[test]
    fn dictionary() {
        assert_eq!(state_to_composition(&st("10")).label(), "2.1");
        assert_eq!(state_to_composition(&st("000")).label(), "4");
        assert_eq!(state_to_composition(&st("110")).label(), "2.1.1");
        assert_eq!(state_to_composition(&st("•◦")).label(), "2.1");
        assert!("10x".parse::<PasepState>().is_err());
        assert!("".parse::<PasepState>().is_err());
        let order: Vec<String> = PasepState::all(2).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(order, ["11", "10", "01", "00"]);
    }

    #[test]
    fn dictionary_matches_canonical_order() {
        for n in 1..=6 {
            for s in PasepState::all(n).unwrap() {
                let i = state_to_composition(&s);
                assert_eq!(i.canonical_index(), s.canonical_index());
                assert_eq!(composition_to_state(&i).unwrap(), s);
            }
        }
    }

    #[test]
    fn n2_symbolic() {
        let w: Vec<LaurentQPoly> = stationary_weights(2).unwrap().into_iter().map(|(_, w)| w).collect();
        let one = LaurentQPoly::one();
        assert_eq!(w, [one.clone(), LaurentQPoly::from_coeffs(0, [2, 1]), one.clone(), one]);
        assert_eq!(partition_polynomial(2).unwrap(), LaurentQPoly::from_coeffs(0, [5, 1]));
    }

    #[test]
    fn n2_at_one() {
        let q = BigRational::one();
        assert_eq!(partition_function(2, &q).unwrap(), r(6, 1));
        assert_eq!(steady_state_formula(&st("10"), &q).unwrap(), r(1, 2));
        let x = exact_stationary_solver(2, &q).unwrap();
        assert_eq!(x, [r(1, 6), r(1, 2), r(1, 6), r(1, 6)]);
    }

    #[test]
    fn n1_is_uniform() {
        for q in [r(0, 1), r(3, 7), r(5, 1)] {
            assert_eq!(exact_stationary_solver(1, &q).unwrap(), [r(1, 2), r(1, 2)]);
            assert_eq!(formula_distribution(1, &q).unwrap(), [r(1, 2), r(1, 2)]);
        }
    }

    #[test]
    fn solver_matches_formula() {
        for n in 1..=4 {
            for q in [r(0, 1), r(1, 2), r(1, 1), r(2, 1), r(7, 3)] {
                let f = formula_distribution(n, &q).unwrap();
                assert_eq!(f.iter().sum::<BigRational>(), BigRational::one());
                assert_eq!(exact_stationary_solver(n, &q).unwrap(), f, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn partition_function_at_one() {
        for n in 1..=7 {
            let z = partition_function(n, &BigRational::one()).unwrap();
            let fact: BigInt = (1..=n + 1).map(BigInt::from).product();
            assert_eq!(z, BigRational::from_integer(fact));
        }
    }

    #[test]
    fn monte_carlo_basics() {
        let a = monte_carlo(2, 1.0, 2_000_000, 7).unwrap();
        let b = monte_carlo(2, 1.0, 2_000_000, 7).unwrap();
        assert_eq!(a, b);
        let exact = [1.0 / 6.0, 0.5, 1.0 / 6.0, 1.0 / 6.0];
        assert!(total_variation(&a.distribution, &exact) < 1e-2);
        let zero = monte_carlo(3, 1.0, 0, 1).unwrap();
        assert!(zero.insufficient);
        assert_eq!(zero.distribution[PasepState::all(3).unwrap().len() - 1], 1.0);
        assert!(monte_carlo(2, -1.0, 10, 1).is_err());
    }

    #[test]
    fn census_examples() {
        let row = pattern_census_check(&"3.4.1".parse().unwrap()).unwrap();
        assert!(row.matches());
        assert_eq!(row.pt, LaurentQPoly::from_coeffs(0, [15, 47, 75, 76, 52, 24, 7, 1]));
        let row = pattern_census_check(&"5".parse().unwrap()).unwrap();
        assert!(row.pt.is_one() && row.matches());
        let rep = census_report(6).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("1/2").unwrap(), r(1, 2));
        assert_eq!(parse_rational("0.25").unwrap(), r(1, 4));
        assert_eq!(parse_rational("7").unwrap(), r(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn report() {
        let rep = stationary_report(2, &BigRational::one(), Method::Exact, 0, 0, None).unwrap();
        assert_eq!(rep.exact_match, Some(true));
        assert_eq!(rep.states.len(), 4);
        assert_eq!(rep.states[1].formula, "1/2");
        let one = stationary_report(3, &BigRational::one(), Method::Formula, 0, 0, Some(&st("110"))).unwrap();
        assert_eq!(one.states.len(), 1);
        assert_eq!(one.states[0].formula, "7/24");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn formula_sums_to_one(n in 1usize..6, a in 0i64..20, b in 1i64..20) {
            let q = r(a, b);
            let f = formula_distribution(n, &q).unwrap();
            prop_assert_eq!(f.iter().sum::<BigRational>(), BigRational::one());
            prop_assert!(f.iter().all(|p| p.is_positive()));
        }
    }
}
