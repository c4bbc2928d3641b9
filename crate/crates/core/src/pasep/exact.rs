//! Exact solution of sparse nonsingular rational systems.
//!
//! Each row is scaled to integers, the system is solved modulo a sequence of
//! primes below `2^31` with Wiedemann's method, the residues are combined by
//! Chinese remaindering and lifted to rationals by rational reconstruction.
//! A candidate is accepted only once it satisfies the rational system
//! exactly, so an unlucky prime or projection can delay the answer but never
//! corrupt it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const MAX_PRIMES: usize = 400;
const MAX_BAD_PRIMES: usize = 16;

/// Arithmetic modulo a prime `p < 2^31` with Barrett reduction.
#[derive(Clone, Copy, Debug)]
struct Field {
    p: u64,
    m: u64,
}

impl Field {
    fn new(p: u64) -> Self {
        debug_assert!(p < 1 << 31);
        Self { p, m: u64::MAX / p }
    }

    /// `x mod p` for any `x < 2^64`.
    #[inline]
    fn reduce(self, x: u64) -> u64 {
        let q = ((x as u128 * self.m as u128) >> 64) as u64;
        let mut r = x - q * self.p;
        while r >= self.p {
            r -= self.p;
        }
        r
    }

    #[inline]
    fn mul(self, a: u64, b: u64) -> u64 {
        self.reduce(a * b)
    }

    #[inline]
    fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    fn from_bigint(self, x: &BigInt) -> u64 {
        let r = x.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

/// Deterministic Miller-Rabin, valid below `3 215 031 751`.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7] {
        if n % p == 0 {
            return n == p;
        }
    }
    let f = Field::new(n);
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 3, 5, 7] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 30..1 << 31).rev().filter(|&p| is_prime(p))
}

/// Sparse matrix with entries reduced modulo a prime.
struct ModMatrix {
    f: Field,
    rows: Vec<Vec<(usize, u64)>>,
}

impl ModMatrix {
    fn apply(&self, x: &[u64], y: &mut [u64]) {
        let f = self.f;
        for (out, row) in y.iter_mut().zip(&self.rows) {
            let mut acc = 0;
            for &(c, v) in row {
                acc = f.reduce(acc + v * x[c]);
            }
            *out = acc;
        }
    }
}

/// Shortest linear recurrence `c` with `c[0] = 1` and
/// `sum_j c[j] s[i - j] = 0` for all `i >= len(c) - 1`.
fn berlekamp_massey(s: &[u64], f: Field) -> Vec<u64> {
    let mut c = vec![1u64];
    let mut prev = vec![1u64];
    let (mut l, mut shift, mut prev_d) = (0usize, 1usize, 1u64);
    for i in 0..s.len() {
        let mut d = s[i];
        for j in 1..=l.min(c.len() - 1) {
            d = f.add(d, f.mul(c[j], s[i - j]));
        }
        if d == 0 {
            shift += 1;
            continue;
        }
        let coef = f.mul(d, f.inv(prev_d));
        let saved = c.clone();
        if c.len() < prev.len() + shift {
            c.resize(prev.len() + shift, 0);
        }
        for (j, &b) in prev.iter().enumerate() {
            c[j + shift] = f.sub(c[j + shift], f.mul(coef, b));
        }
        if 2 * l <= i {
            l = i + 1 - l;
            prev = saved;
            prev_d = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, 0);
    c
}

/// Solves `A x = b` modulo `p`, or gives up after a few random projections.
fn wiedemann(a: &ModMatrix, b: &[u64], rng: &mut ChaCha8Rng) -> Option<Vec<u64>> {
    let f = a.f;
    let n = b.len();
    let mut tmp = vec![0; n];
    for _ in 0..3 {
        let u: Vec<u64> = (0..n).map(|_| rng.gen_range(0..f.p)).collect();
        let mut v = b.to_vec();
        let mut seq = Vec::with_capacity(2 * n);
        for _ in 0..2 * n {
            seq.push(u.iter().zip(&v).fold(0, |acc, (x, y)| f.reduce(acc + x * y)));
            a.apply(&v, &mut tmp);
            std::mem::swap(&mut v, &mut tmp);
        }
        let c = berlekamp_massey(&seq, f);
        let l = c.len() - 1;
        if l == 0 || c[l] == 0 {
            continue;
        }
        // Minimal polynomial m_k = c[l - k]; x = -(1/m_0) sum_{k>=1} m_k A^{k-1} b.
        let mut y = b.to_vec();
        for k in (1..l).rev() {
            a.apply(&y, &mut tmp);
            let mk = c[l - k];
            for (t, &bi) in tmp.iter_mut().zip(b) {
                *t = f.add(*t, f.mul(mk, bi));
            }
            std::mem::swap(&mut y, &mut tmp);
        }
        let scale = f.sub(0, f.inv(c[l]));
        let x: Vec<u64> = y.iter().map(|&v| f.mul(v, scale)).collect();
        a.apply(&x, &mut tmp);
        if tmp == b {
            return Some(x);
        }
    }
    None
}

/// `r / s` with `|r|, s <= sqrt(m / 2)` and `r = s u (mod m)`, if any.
fn rational_reconstruction(u: &BigInt, m: &BigInt, bound: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), u.clone());
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        (r0, r1, s0, s1) = (r1, r2, s1, s2);
    }
    if s1.is_zero() || &s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(BigRational::new(r1, s1))
}

/// Solves the square system `rows x = rhs` over the rationals. Rows list
/// `(column, value)` pairs.
pub(crate) fn solve(rows: &[Vec<(usize, BigRational)>], rhs: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = rows.len();
    if rhs.len() != n || rows.iter().flatten().any(|(c, _)| *c >= n) {
        return Err(Error::InvalidArgument("system is not square".into()));
    }
    // Clear denominators row by row.
    let mut int_rows: Vec<Vec<(usize, BigInt)>> = Vec::with_capacity(n);
    let mut int_rhs: Vec<BigInt> = Vec::with_capacity(n);
    for (row, b) in rows.iter().zip(rhs) {
        let l = row.iter().map(|(_, v)| v.denom().clone()).fold(b.denom().clone(), |a, d| a.lcm(&d));
        int_rows.push(row.iter().map(|(c, v)| (*c, (v * &l).to_integer())).collect());
        int_rhs.push((b * &l).to_integer());
    }

    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); n];
    let mut bad = 0;
    for (used, p) in primes().enumerate() {
        if used >= MAX_PRIMES {
            break;
        }
        let f = Field::new(p);
        let a = ModMatrix {
            f,
            rows: int_rows.iter().map(|r| r.iter().map(|(c, v)| (*c, f.from_bigint(v))).collect()).collect(),
        };
        let b: Vec<u64> = int_rhs.iter().map(|v| f.from_bigint(v)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        let Some(x) = wiedemann(&a, &b, &mut rng) else {
            bad += 1;
            if bad >= MAX_BAD_PRIMES {
                return Err(Error::SingularSystem);
            }
            continue;
        };
        // Combine: new = old + M * ((x - old) / M mod p).
        let pb = BigInt::from(p);
        let m_inv = f.inv(f.from_bigint(&modulus));
        for (res, &xi) in residues.iter_mut().zip(&x) {
            let delta = f.mul(f.sub(xi, f.from_bigint(res)), m_inv);
            *res += &modulus * BigInt::from(delta);
        }
        modulus *= &pb;

        let bound = (&modulus / BigInt::from(2)).sqrt();
        let candidate: Option<Vec<BigRational>> =
            residues.iter().map(|u| rational_reconstruction(u, &modulus, &bound)).collect();
        if let Some(cand) = candidate {
            if satisfies(rows, rhs, &cand) {
                return Ok(cand);
            }
        }
    }
    Err(Error::Consistency("modular solver did not converge".into()))
}

fn satisfies(rows: &[Vec<(usize, BigRational)>], rhs: &[BigRational], x: &[BigRational]) -> bool {
    rows.iter().zip(rhs).all(|(row, b)| {
        let s: BigRational = row.iter().map(|(c, v)| v * &x[*c]).sum();
        &s == b
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps, [2147483647, 2147483629, 2147483587]);
        assert!(!is_prime(2147483649));
        assert!(is_prime(2) && is_prime(97) && !is_prime(91));
    }

    #[test]
    fn barrett() {
        let f = Field::new(2147483629);
        for x in [0u64, 1, 2147483628, 2147483629, u64::MAX, 1 << 62, 12345678901234567] {
            assert_eq!(f.reduce(x), x % 2147483629);
        }
        assert_eq!(f.mul(f.inv(12345), 12345), 1);
    }

    #[test]
    fn berlekamp_massey_fibonacci() {
        let f = Field::new(1_000_003);
        let mut s = vec![1u64, 1];
        for i in 2..20 {
            s.push((s[i - 1] + s[i - 2]) % f.p);
        }
        let c = berlekamp_massey(&s, f);
        assert_eq!(c, vec![1, f.p - 1, f.p - 1]);
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(999_983u64);
        let bound = (&m / BigInt::from(2)).sqrt();
        // -7/15 mod m
        let inv15 = BigInt::from(15).modinv(&m).unwrap();
        let u = (BigInt::from(-7) * inv15).mod_floor(&m);
        assert_eq!(rational_reconstruction(&u, &m, &bound), Some(r(-7, 15)));
        assert_eq!(rational_reconstruction(&BigInt::from(5), &m, &bound), Some(r(5, 1)));
    }

    #[test]
    fn small_systems() {
        // 2x + y = 1, x - 3y = 2/3
        let rows = vec![vec![(0, r(2, 1)), (1, r(1, 1))], vec![(0, r(1, 1)), (1, r(-3, 1))]];
        let rhs = vec![r(1, 1), r(2, 3)];
        let x = solve(&rows, &rhs).unwrap();
        assert_eq!(x, [r(11, 21), r(-1, 21)]);
        // Rational coefficients and a large answer.
        let big = BigRational::from_integer(BigInt::from(10).pow(40u32));
        let rows = vec![vec![(0, r(1, 7))]];
        let x = solve(&rows, &[big.clone()]).unwrap();
        assert_eq!(x[0], big * BigInt::from(7));
    }

    #[test]
    fn inconsistent_is_reported() {
        let rows = vec![vec![(0, r(1, 1)), (1, r(1, 1))], vec![(0, r(2, 1)), (1, r(2, 1))]];
        assert_eq!(solve(&rows, &[r(1, 1), r(3, 1)]), Err(Error::SingularSystem));
    }
}
