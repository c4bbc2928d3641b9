use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::One;

use super::type_a::pt_a_closed;
use super::type_b::{comp_b_encode, ideals_b, pt_b_closed};
use crate::bases::merge_parts;
use crate::combinatorics::{compositions_of, Composition, WeakComposition};
use crate::qpoly::{q_int, LaurentQPoly};
use crate::report::CheckReport;

/// Checks the type A recurrences on the closed form for all compositions of
/// weight at most `n`:
///
/// * `PT(1, I) = PT(I)`;
/// * `PT(1+i_1, i_2, ...) = [r] PT(I) + sum_{k=1}^{r-1} q^(k-1) PT(I with parts k, k+1 merged)`;
/// * for `r >= 2`, `i_1 >= 2`:
///   `PT(I) = q PT(i_1-1, i_2+1, ...) + PT(i_1-1, i_2, ...) + PT(1, i_1+i_2-1, ...)`.
pub fn check_recurrences_a(n: usize) -> Vec<CheckReport> {
    let mut pt: BTreeMap<Composition, LaurentQPoly> = BTreeMap::new();
    for m in 1..=n {
        for i in compositions_of(m) {
            let v = pt_a_closed(&i).unwrap_or_default();
            pt.insert(i, v);
        }
    }
    let get = |parts: Vec<usize>| pt[&Composition::from_parts_unchecked(parts)].clone();

    let mut prefix = CheckReport::new("PT^A prefix 1");
    let mut grow = CheckReport::new("PT^A first part growth");
    let mut useful = CheckReport::new("PT^A three-term recurrence");
    for m in 1..=n {
        for i in compositions_of(m) {
            let p = i.parts();
            let r = p.len();
            if m < n {
                let mut with_one = vec![1];
                with_one.extend_from_slice(p);
                prefix.record(get(with_one) == pt[&i], || format!("I = {i}"));

                let lhs = pt[&i.add_to_first(1)].clone();
                let mut rhs = &q_int(r) * &pt[&i];
                for k in 1..r {
                    rhs.add_scaled(&pt[&merge_parts(&i, k)], (k - 1) as i64, &BigInt::one());
                }
                grow.record(lhs == rhs, || format!("I = {i}: {lhs} != {rhs}"));
            }
            if r >= 2 && p[0] >= 2 {
                let mut a = p.to_vec();
                a[0] -= 1;
                a[1] += 1;
                let mut b = p.to_vec();
                b[0] -= 1;
                let mut c = vec![1, p[0] + p[1] - 1];
                c.extend_from_slice(&p[2..]);
                let rhs = get(a).shift(1) + get(b) + get(c);
                useful.record(pt[&i] == rhs, || format!("I = {i}: {} != {rhs}", pt[&i]));
            }
        }
    }
    vec![prefix, grow, useful]
}

/// Checks the type B recurrences on the closed form for every weak
/// composition that encodes a staircase ideal with at most `n + 1` rows:
///
/// * `PT(0, i_2, ...) = PT(i_2, ...)`;
/// * for `i_1 >= 1`:
///   `PT(I) = PT(i_1-1, i_2, ...) + q PT(i_1-1, i_2+1, ...) + PT(0, i_1+i_2-1, ...)`.
///
/// Weak compositions that encode no shape are skipped: there the closed
/// form does not satisfy the recurrences.
pub fn check_recurrences_b(n: usize) -> Vec<CheckReport> {
    let mut codes: BTreeSet<WeakComposition> = BTreeSet::new();
    for h in 1..=n + 1 {
        for s in ideals_b(h, usize::MAX) {
            codes.insert(comp_b_encode(&s));
        }
    }
    let mut memo: BTreeMap<Vec<usize>, LaurentQPoly> = BTreeMap::new();
    let mut pt = |parts: Vec<usize>| -> LaurentQPoly {
        memo.entry(parts.clone())
            .or_insert_with(|| pt_b_closed(&WeakComposition::new(parts)).unwrap_or_default())
            .clone()
    };

    let mut strip = CheckReport::new("PT^B leading zero");
    let mut three = CheckReport::new("PT^B three-term recurrence");
    for code in &codes {
        let p = code.parts();
        if p.len() < 2 {
            continue;
        }
        let lhs = pt(p.to_vec());
        if p[0] == 0 {
            let rhs = pt(p[1..].to_vec());
            strip.record(lhs == rhs, || format!("I = {code}: {lhs} != {rhs}"));
        } else {
            let mut a = p.to_vec();
            a[0] -= 1;
            let mut b = a.clone();
            b[1] += 1;
            let mut c = vec![0, p[0] + p[1] - 1];
            c.extend_from_slice(&p[2..]);
            let rhs = pt(a) + pt(b).shift(1) + pt(c);
            three.record(lhs == rhs, || format!("I = {code}: {lhs} != {rhs}"));
        }
    }
    vec![strip, three]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a() {
        for r in check_recurrences_a(7) {
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{r}");
        }
    }

    #[test]
    fn type_a_example() {
        let pt = |p: &[usize]| pt_a_closed(&Composition::new(p.to_vec()).unwrap()).unwrap();
        let rhs = pt(&[1, 2]).shift(1) + pt(&[1, 1]) + pt(&[1, 2]);
        assert_eq!(pt(&[2, 1]), rhs);
        assert_eq!(rhs, LaurentQPoly::from_coeffs(0, [2, 1]));
    }

    #[test]
    fn type_b() {
        for r in check_recurrences_b(7) {
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{r}");
        }
    }

    #[test]
    fn type_b_example() {
        let pt = |p: &[usize]| pt_b_closed(&WeakComposition::new(p.to_vec())).unwrap();
        let rhs = pt(&[0, 2, 0]) + pt(&[0, 3, 0]).shift(1) + pt(&[0, 2, 0]);
        assert_eq!(pt(&[1, 2, 0]), rhs);
        assert_eq!(pt(&[0, 2, 0]), pt(&[2, 0]));
        assert_eq!(pt(&[0, 1, 1]), pt(&[1, 1]));
    }
}
