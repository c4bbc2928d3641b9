//! Vincular pattern counts and the crossing statistic.
//!
//! All functions take one-line words; adjacent positions are the undashed
//! pairs of the pattern.

/// Occurrences of `31-2`: `σ(i) > σ(i+1)` and a later `j > i+1` with
/// `σ(i+1) < σ(j) < σ(i)`.
pub fn pattern_31_2(w: &[usize]) -> usize {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .map(|i| w[i + 2..].iter().filter(|&&x| w[i + 1] < x && x < w[i]).count())
        .sum()
}

/// Occurrences of `2-31`: `σ(j) > σ(j+1)` and an earlier `i < j` with
/// `σ(j+1) < σ(i) < σ(j)`.
pub fn pattern_2_31(w: &[usize]) -> usize {
    (0..w.len().saturating_sub(1))
        .filter(|&j| w[j] > w[j + 1])
        .map(|j| w[..j].iter().filter(|&&x| w[j + 1] < x && x < w[j]).count())
        .sum()
}

/// Occurrences of `21-1` in a word: `w_i > w_{i+1}` and a later `j > i+1`
/// with `w_j = w_{i+1}`.
pub fn pattern_21_1(w: &[usize]) -> usize {
    (0..w.len().saturating_sub(1))
        .filter(|&i| w[i] > w[i + 1])
        .map(|i| w[i + 2..].iter().filter(|&&x| x == w[i + 1]).count())
        .sum()
}

/// `21-1` plus `31-2` occurrences.
pub fn totg(w: &[usize]) -> usize {
    pattern_21_1(w) + pattern_31_2(w)
}

/// `#{i < j <= σ(i) < σ(j)} + #{i > j > σ(i) > σ(j)}` with 1-based positions.
pub fn crossings(w: &[usize]) -> usize {
    let n = w.len();
    let s = |i: usize| w[i - 1];
    let mut count = 0;
    for i in 1..=n {
        for j in 1..=n {
            if (i < j && j <= s(i) && s(i) < s(j)) || (i > j && j > s(i) && s(i) > s(j)) {
                count += 1;
            }
        }
    }
    count
}
