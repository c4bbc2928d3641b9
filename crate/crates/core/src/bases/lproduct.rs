//! The q-product `L_p(q) ⋆_q L_I(q)` expanded on the `L(q)` basis.

use std::collections::BTreeMap;

use crate::combinatorics::{st, Composition};
use crate::error::{Error, Result};
use crate::qpoly::{q_binomial, LaurentQPoly};

fn binom2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// `L_p(q) ⋆_q L_I(q) = sum over J finer than p▷I with j_1 >= p of
/// q^(st(J, p▷I) + C(l(J)-l(I), 2) - C(l(I), 2)) [l(I)+p-1 choose l(J)-1] L_J(q)`.
pub fn qprod_l(p: usize, i: &Composition) -> Result<BTreeMap<Composition, LaurentQPoly>> {
    if p == 0 {
        return Err(Error::InvalidArgument("p must be positive".into()));
    }
    let target = i.add_to_first(p);
    let li = i.len();
    let mut out = BTreeMap::new();
    for j in target.refinements() {
        if j.parts()[0] < p {
            continue;
        }
        let Some(s) = st(&j, &target).finite() else { continue };
        let exp = s as i64 + binom2(j.len() - li) - binom2(li);
        let v = q_binomial(li + p - 1, j.len() as i64 - 1).shift(exp);
        if !v.is_zero() {
            out.insert(j, v);
        }
    }
    Ok(out)
}

/// `L_{j_1} ⋆_q (L_{j_2} ⋆_q (... ⋆_q L_{j_r}))`, which equals `S^J(q)`.
pub fn nested_l_product(j: &Composition) -> Result<BTreeMap<Composition, LaurentQPoly>> {
    let parts = j.parts();
    let Some((&last, rest)) = parts.split_last() else {
        return Err(Error::InvalidComposition("empty composition".into()));
    };
    let mut cur: BTreeMap<Composition, LaurentQPoly> =
        BTreeMap::from([(Composition::from_parts_unchecked(vec![last]), LaurentQPoly::one())]);
    for &p in rest.iter().rev() {
        let mut next: BTreeMap<Composition, LaurentQPoly> = BTreeMap::new();
        for (k, coeff) in &cur {
            for (m, v) in qprod_l(p, k)? {
                *next.entry(m).or_default() += &(coeff * &v);
            }
        }
        next.retain(|_, v| !v.is_zero());
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::matrix_s_l;
    use crate::combinatorics::compositions_of;
    use crate::qpoly::q_int;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn l2_times_l21() {
        let got = qprod_l(2, &c(&[2, 1])).unwrap();
        let want = BTreeMap::from([
            (c(&[4, 1]), q_int(3)),
            (c(&[3, 1, 1]), q_int(3)),
            (c(&[2, 2, 1]), q_int(3)),
            (c(&[2, 1, 1, 1]), LaurentQPoly::q()),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn l2_times_l12() {
        let got = qprod_l(2, &c(&[1, 2])).unwrap();
        let want = BTreeMap::from([
            (c(&[3, 2]), q_int(3)),
            (c(&[3, 1, 1]), q_int(3).shift(1)),
            (c(&[2, 1, 2]), q_int(3)),
            (c(&[2, 1, 1, 1]), LaurentQPoly::monomial(2, 1)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn l3_times_l22() {
        let got = qprod_l(3, &c(&[2, 2])).unwrap();
        let want = BTreeMap::from([
            (c(&[5, 2]), q_int(4)),
            (c(&[5, 1, 1]), q_binomial(4, 2).shift(1)),
            (c(&[4, 1, 2]), q_binomial(4, 2)),
            (c(&[4, 1, 1, 1]), q_int(4).shift(2)),
            (c(&[3, 2, 2]), q_binomial(4, 2)),
            (c(&[3, 2, 1, 1]), q_int(4).shift(2)),
            (c(&[3, 1, 1, 2]), q_int(4).shift(1)),
            (c(&[3, 1, 1, 1, 1]), LaurentQPoly::monomial(4, 1)),
        ]);
        assert_eq!(got, want);
    }

    #[test]
    fn nested_products_give_s_l_columns() {
        for n in 1..=6 {
            let m = matrix_s_l(n).unwrap();
            for j in compositions_of(n) {
                let expansion = nested_l_product(&j).unwrap();
                for i in compositions_of(n) {
                    let v = expansion.get(&i).cloned().unwrap_or_default();
                    assert_eq!(&v, m.entry(&i, &j).unwrap(), "I={i} J={j}");
                }
            }
        }
    }
}
