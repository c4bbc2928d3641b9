//! Closed formulas and recursions for individual transition coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::{compositions_of, st_prime, Composition, StValue};
use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, q_int, qfact_a, LaurentQPoly};
use crate::report::CheckReport;

pub(crate) fn same_weight(i: &Composition, j: &Composition) -> Result<()> {
    if i.weight() != j.weight() {
        return Err(Error::InvalidArgument(format!(
            "compositions {i} and {j} have different weights"
        )));
    }
    Ok(())
}

/// `(-1/q)^d q^(-st')`.
pub(crate) fn sign_shift(d: usize, stp: usize) -> LaurentQPoly {
    let sign = if d % 2 == 0 { 1 } else { -1 };
    LaurentQPoly::monomial(-((d + stp) as i64), sign)
}

/// `C_I^J`, the coefficient of `Ψ^I` in `S^J(q)`.
///
/// If `i_1 < j_1` the first two parts of `I` are merged (a single short part
/// gives 0). Otherwise the first `j_1` cells are removed from `I` and the
/// result is multiplied by `[l(I)+j_1-1 choose j_1]`.
pub fn coeff_c(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    Ok(coeff_c_parts(i.parts(), j.parts()))
}

pub(crate) fn coeff_c_parts(i: &[usize], j: &[usize]) -> LaurentQPoly {
    let mut i = i.to_vec();
    let mut out = LaurentQPoly::one();
    let mut start = 0;
    for &j1 in j {
        while i[start] < j1 {
            if start + 1 == i.len() {
                return LaurentQPoly::zero();
            }
            i[start + 1] += i[start];
            start += 1;
        }
        let len = i.len() - start;
        out = &out * &q_binomial(len + j1 - 1, j1 as i64);
        i[start] -= j1;
        if i[start] == 0 {
            start += 1;
        }
    }
    debug_assert_eq!(start, i.len());
    out
}

/// `D_I^J = sum over K coarser than or equal to J of (-1)^(l(J)-l(K)) C_I^K`,
/// the coefficient of `Ψ^I` in `R_J(q)`.
pub fn coeff_d(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    let mut out = LaurentQPoly::zero();
    for k in j.coarsenings() {
        let c = coeff_c_parts(i.parts(), k.parts());
        if (j.len() - k.len()) % 2 == 0 {
            out += &c;
        } else {
            out -= &c;
        }
    }
    Ok(out)
}

/// Coefficient of `L_I(q)` in `Ψ_J`: `(-1/q)^(l(I)-l(J)) q^(-st'(I,J))`
/// when `I` is finer than `J`, else 0.
pub fn psi_to_l_entry(i: &Composition, j: &Composition) -> LaurentQPoly {
    match st_prime(i, j) {
        StValue::Finite(stp) => sign_shift(i.len() - j.len(), stp),
        StValue::MinusInfinity => LaurentQPoly::zero(),
    }
}

/// Expansion of `Ψ_J` in the `L(q)` basis.
pub fn psi_in_l(j: &Composition) -> BTreeMap<Composition, LaurentQPoly> {
    j.refinements()
        .into_iter()
        .map(|i| {
            let c = psi_to_l_entry(&i, j);
            (i, c)
        })
        .collect()
}

/// `E_I^J`, the coefficient of `L_I(q)` in `S^J(q)`.
pub fn coeff_e(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    let mut out = LaurentQPoly::zero();
    for k in i.coarsenings() {
        let c = coeff_c_parts(k.parts(), j.parts());
        if !c.is_zero() {
            out += &psi_to_l_entry(i, &k) * &c;
        }
    }
    Ok(out)
}

/// `F_I^J`, the coefficient of `L_I(q)` in `R_J(q)`.
pub fn coeff_f(i: &Composition, j: &Composition) -> Result<LaurentQPoly> {
    same_weight(i, j)?;
    let mut out = LaurentQPoly::zero();
    for k in j.coarsenings() {
        let e = coeff_e(i, &k)?;
        if (j.len() - k.len()) % 2 == 0 {
            out += &e;
        } else {
            out -= &e;
        }
    }
    Ok(out)
}

/// `c_J = QFact_A(J)`, the coefficient of `Ψ^J` in `S^{1^n}(q)`.
pub fn c_vector(n: usize) -> BTreeMap<Composition, LaurentQPoly> {
    compositions_of(n)
        .into_iter()
        .map(|j| {
            let c = qfact_a(j.parts());
            (j, c)
        })
        .collect()
}

/// `e_I`, the coefficient of `L_I(q)` in `S^{1^n}(q)`.
pub fn e_vector(n: usize) -> BTreeMap<Composition, LaurentQPoly> {
    compositions_of(n)
        .into_iter()
        .map(|i| {
            let e = e_entry(&i);
            (i, e)
        })
        .collect()
}

/// `sum over J coarser than or equal to I of (-1/q)^(l(I)-l(J)) q^(-st'(I,J)) QFact_A(J)`.
pub(crate) fn e_entry(i: &Composition) -> LaurentQPoly {
    i.coarsenings()
        .iter()
        .map(|j| &psi_to_l_entry(i, j) * &qfact_a(j.parts()))
        .sum()
}

/// Checks both recurrences satisfied by `e_I` for every `I` of weight at
/// most `n - 1` (so that all sides have weight at most `n`):
///
/// `e_(1+i_1, i_2, ...) = [r] e_I + sum_{k=1}^{r-1} q^(k-1) e_(I with parts k, k+1 merged)`
/// and `e_(1, I) = e_I`.
pub fn check_rec_ei1(n: usize) -> CheckReport {
    let mut report = CheckReport::new("e_I recurrences");
    let mut e: BTreeMap<Composition, LaurentQPoly> = BTreeMap::new();
    for m in 1..=n {
        e.extend(e_vector(m));
    }
    for m in 1..n {
        for i in compositions_of(m) {
            let r = i.len();
            let lhs = &e[&i.add_to_first(1)];
            let mut rhs = &q_int(r) * &e[&i];
            for k in 1..r {
                rhs.add_scaled(&e[&merge_parts(&i, k)], (k - 1) as i64, &BigInt::one());
            }
            report.record(*lhs == rhs, || format!("I = {i}: {lhs} != {rhs}"));

            let mut with_one = vec![1];
            with_one.extend_from_slice(i.parts());
            let prefixed = &e[&Composition::from_parts_unchecked(with_one)];
            report.record(*prefixed == e[&i], || format!("prefix 1 on I = {i}"));
        }
    }
    report
}

/// Merges parts `k` and `k + 1` (1-based).
pub(crate) fn merge_parts(i: &Composition, k: usize) -> Composition {
    let p = i.parts();
    let mut out = p[..k - 1].to_vec();
    out.push(p[k - 1] + p[k]);
    out.extend_from_slice(&p[k + 1..]);
    Composition::from_parts_unchecked(out)
}

/// `ν(y) = #{z in Z : z >= y} + #{x in X : x <= y}`.
fn nu(x: &[usize], z: &[usize], y: usize) -> usize {
    z.iter().filter(|&&v| v >= y).count() + x.iter().filter(|&&v| v <= y).count()
}

fn check_xyz(x: &[usize], z: &[usize], s: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let mut x = x.to_vec();
    let mut z = z.to_vec();
    x.sort_unstable();
    x.dedup();
    z.sort_unstable();
    z.dedup();
    if !x.iter().all(|v| z.binary_search(v).is_ok()) {
        return Err(Error::InvalidArgument("X must be a subset of Z".into()));
    }
    if s < x.len() || s > z.len() {
        return Err(Error::OutOfRange { what: "s", value: s as i64, allowed: "|X| <= s <= |Z|" });
    }
    Ok((x, z))
}

/// `Σ_s(X, Z) = q^(ν(X) + (r+1)(s-r) + C(s-r, 2)) [m-r choose s-r]`.
pub fn sigma_s(x: &[usize], z: &[usize], s: usize) -> Result<LaurentQPoly> {
    let (x, z) = check_xyz(x, z, s)?;
    let (r, m) = (x.len(), z.len());
    let nu_x: usize = x.iter().map(|&y| nu(&x, &z, y)).sum();
    let d = s - r;
    let exp = nu_x + (r + 1) * d + d * d.saturating_sub(1) / 2;
    Ok(q_binomial(m - r, d as i64).shift(exp as i64))
}

/// `Σ_s(X, Z)` by summing `q^ν(Y)` over all `X ⊆ Y ⊆ Z` with `|Y| = s`.
pub fn sigma_s_brute(x: &[usize], z: &[usize], s: usize) -> Result<LaurentQPoly> {
    let (x, z) = check_xyz(x, z, s)?;
    let free: Vec<usize> = z.iter().copied().filter(|v| x.binary_search(v).is_err()).collect();
    let base: usize = x.iter().map(|&y| nu(&x, &z, y)).sum();
    let mut out = LaurentQPoly::zero();
    for mask in 0u64..1 << free.len() {
        if mask.count_ones() as usize + x.len() != s {
            continue;
        }
        let extra: usize = free
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &y)| nu(&x, &z, y))
            .sum();
        out.add_term((base + extra) as i64, BigInt::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    fn poly(coeffs: &[i64]) -> LaurentQPoly {
        LaurentQPoly::from_coeffs(0, coeffs.iter().copied())
    }

    #[test]
    fn coeff_c_examples() {
        assert_eq!(coeff_c(&c(&[2, 1, 1]), &c(&[2, 2])).unwrap(), poly(&[1, 1, 2, 1, 1]));
        assert_eq!(coeff_c(&c(&[5]), &c(&[5])).unwrap(), LaurentQPoly::one());
        assert_eq!(coeff_c(&c(&[2, 1]), &c(&[1, 1, 1])).unwrap(), poly(&[1, 2, 1]));
        assert!(coeff_c(&c(&[2]), &c(&[1, 2])).is_err());
        assert_eq!(coeff_c(&c(&[1, 2]), &c(&[3])).unwrap(), LaurentQPoly::one());
        assert!(coeff_c(&c(&[1]), &c(&[1])).unwrap().is_one());
    }

    #[test]
    fn coeff_d_example() {
        assert_eq!(coeff_d(&c(&[2, 1, 1]), &c(&[2, 2])).unwrap(), poly(&[0, 1, 2, 1, 1]));
        assert_eq!(coeff_d(&c(&[1, 1]), &c(&[1, 1])).unwrap(), poly(&[0, 1]));
    }

    #[test]
    fn psi_in_l_examples() {
        let exp = psi_in_l(&c(&[2, 1]));
        assert_eq!(exp[&c(&[1, 1, 1])], LaurentQPoly::monomial(-3, -1));
        assert_eq!(exp[&c(&[2, 1])], LaurentQPoly::monomial(-1, 1));
        assert_eq!(exp.len(), 2);
        for (i, v) in psi_in_l(&c(&[3])) {
            let d = i.len() - 1;
            assert_eq!(v, LaurentQPoly::monomial(-(d as i64), if d % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn e_vector_examples() {
        let e = e_vector(3);
        let col: Vec<LaurentQPoly> = compositions_of(3).iter().map(|i| e[i].clone()).collect();
        assert_eq!(col, [poly(&[1]), poly(&[2, 1]), poly(&[1]), poly(&[1])]);
        for n in 1..=8 {
            let total: BigInt = e_vector(n).values().map(|p| p.eval_at_one()).sum();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(total, fact);
        }
    }

    #[test]
    fn c_vector_is_column_of_ones() {
        for n in 1..=6 {
            let ones = Composition::new(vec![1; n]).unwrap();
            for (j, v) in c_vector(n) {
                assert_eq!(coeff_c(&j, &ones).unwrap(), v, "J={j}");
            }
        }
    }

    #[test]
    fn e_recurrences() {
        let r = check_rec_ei1(7);
        assert!(r.passed(), "{r}");
        assert!(r.checked > 0);
    }

    #[test]
    fn sigma_examples() {
        let z: Vec<usize> = (1..=10).collect();
        assert_eq!(sigma_s(&[3, 7], &z, 3).unwrap(), q_binomial(8, 1).shift(18));
        assert_eq!(sigma_s(&[3, 7], &z, 4).unwrap(), q_binomial(8, 2).shift(22));
        assert_eq!(sigma_s(&[3, 7], &z, 2).unwrap(), LaurentQPoly::monomial(15, 1));
        assert!(sigma_s(&[3, 11], &z, 3).is_err());
        assert!(sigma_s(&[3], &z, 11).is_err());
    }

    #[test]
    fn sigma_matches_brute() {
        for m in 0..=8usize {
            let z: Vec<usize> = (1..=m).map(|v| 2 * v).collect();
            for xmask in 0u32..1 << m {
                let x: Vec<usize> = (0..m).filter(|b| xmask >> b & 1 == 1).map(|b| z[b]).collect();
                for s in x.len()..=m {
                    assert_eq!(sigma_s(&x, &z, s).unwrap(), sigma_s_brute(&x, &z, s).unwrap());
                }
            }
        }
    }
}
