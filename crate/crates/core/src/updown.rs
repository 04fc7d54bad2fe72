//! Permutations with a prescribed up-down sequence.
//!
//! Counts come from the MacMahon descent-set determinant
//! `β_n(S) = det[ C(s_{j+1}, s_i) ]` with `s_0 = 0` and `s_{k+1} = n`;
//! a pruned exhaustive search serves as the independent oracle for short
//! words.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tree::CaterpillarType;

/// Longest word the exhaustive counter accepts (permutations of 12).
pub const BRUTE_FORCE_MAX_LEN: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A word over `{U, D}`; a word of length `ℓ` describes permutations of
/// `ℓ + 1` elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownWord {
    steps: Vec<Step>,
}

impl UpDownWord {
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                _ => Err(Error::InvalidWord(s.to_string())),
            })
            .collect::<Result<_>>()?;
        Ok(UpDownWord { steps })
    }

    pub fn from_steps(steps: Vec<Step>) -> Self {
        UpDownWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Length of the permutations this word describes.
    pub fn permutation_len(&self) -> usize {
        self.steps.len() + 1
    }

    /// `(UUDD)^k` or `(UUDD)^k UU`, describing permutations of odd length `k`.
    pub fn two_up_two_down(k: usize) -> Result<Self> {
        if k.is_multiple_of(2) {
            return Err(Error::EvenLength(k));
        }
        let steps = (0..k - 1)
            .map(|i| if i % 4 < 2 { Step::Up } else { Step::Down })
            .collect();
        Ok(UpDownWord { steps })
    }

    /// `UDUD…` of length `len`.
    pub fn alternating(len: usize) -> Self {
        let steps = (0..len)
            .map(|i| if i % 2 == 0 { Step::Up } else { Step::Down })
            .collect();
        UpDownWord { steps }
    }

    /// All `2^len` words of the given length, in lexicographic order (`D < U`
    /// is not used; `U` sorts first).
    pub fn all(len: usize) -> impl Iterator<Item = UpDownWord> {
        (0u64..1 << len).map(move |bits| {
            let steps = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 0 {
                        Step::Up
                    } else {
                        Step::Down
                    }
                })
                .collect();
            UpDownWord { steps }
        })
    }

    /// Descent positions `i` (1-based) where `σ_i > σ_{i+1}`.
    pub fn descent_set(&self) -> Vec<usize> {
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::Down)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The word of the reversed and complemented permutation.
    pub fn reverse_complement(&self) -> Self {
        let mut steps = self.steps.clone();
        steps.reverse();
        UpDownWord { steps }
    }

    /// The word of the complemented permutation `σ_i -> n + 1 - σ_i`.
    pub fn complement(&self) -> Self {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
            })
            .collect();
        UpDownWord { steps }
    }

    /// The up-down word of a sequence of distinct numbers.
    pub fn of_sequence<T: Ord>(seq: &[T]) -> Self {
        let steps = seq
            .windows(2)
            .map(|w| if w[0] < w[1] { Step::Up } else { Step::Down })
            .collect();
        UpDownWord { steps }
    }
}

impl fmt::Display for UpDownWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// Visits every permutation of `1..=len+1` with up-down word `w`.
pub fn for_each_permutation(w: &UpDownWord, mut visit: impl FnMut(&[u32])) {
    fn go(
        w: &[Step],
        n: usize,
        used: &mut [bool],
        perm: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if perm.len() == n {
            visit(perm);
            return;
        }
        for v in 1..=n as u32 {
            if used[v as usize] {
                continue;
            }
            if let Some(&last) = perm.last() {
                let want_up = w[perm.len() - 1] == Step::Up;
                if (v > last) != want_up {
                    continue;
                }
            }
            used[v as usize] = true;
            perm.push(v);
            go(w, n, used, perm, visit);
            perm.pop();
            used[v as usize] = false;
        }
    }
    let n = w.permutation_len();
    let mut used = vec![false; n + 1];
    go(
        &w.steps,
        n,
        &mut used,
        &mut Vec::with_capacity(n),
        &mut visit,
    );
}

/// Counts permutations with word `w` by exhaustive search.
pub fn count_updown_bruteforce(w: &UpDownWord) -> Result<u64> {
    if w.len() > BRUTE_FORCE_MAX_LEN {
        return Err(Error::BruteForceTooLarge {
            max: BRUTE_FORCE_MAX_LEN,
            got: w.len(),
        });
    }
    let mut count = 0u64;
    for_each_permutation(w, |_| count += 1);
    Ok(count)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Exact determinant by fraction-free Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// `det[ C(s_{j+1}, s_i) ]_{0 <= i, j <= k}` for `s = (s_0, …, s_{k+1})`.
pub fn binomial_determinant(s: &[usize]) -> BigInt {
    let k = s.len() - 1;
    let matrix = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| BigInt::from(binomial(s[j + 1], s[i])))
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// Number of permutations with word `w`, via the descent-set determinant.
pub fn count_updown_determinant(w: &UpDownWord) -> BigUint {
    let mut s = vec![0];
    s.extend(w.descent_set());
    s.push(w.permutation_len());
    let det = binomial_determinant(&s);
    assert!(!det.is_negative(), "descent-set determinant is a count");
    det.to_biguint().expect("nonnegative")
}

/// `A(k)`: 2up-2down permutations of odd length `k`.
pub fn two_up_two_down(k: usize) -> Result<BigUint> {
    Ok(count_updown_determinant(&UpDownWord::two_up_two_down(k)?))
}

/// `♯(P_n) = n · A(2n - 1)`.
pub fn sharp_path(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::TooFewChords { min: 1, got: 0 });
    }
    Ok(BigUint::from(n) * two_up_two_down(2 * n - 1)?)
}

/// The multiplier `n*`: `2e / |Aut(D+)|` for orientation-symmetric
/// diagrams, `4e / |Aut(D+)|` otherwise.
pub fn n_star(edges: usize, aut_order: usize, orientation_symmetric: bool) -> Result<usize> {
    let numerator = if orientation_symmetric {
        2 * edges
    } else {
        4 * edges
    };
    if aut_order == 0 || numerator % aut_order != 0 {
        return Err(Error::CrossCheck(format!(
            "|Aut(D+)| = {aut_order} does not divide {numerator}"
        )));
    }
    Ok(numerator / aut_order)
}

/// `♯(D)` for a caterpillar diagram: `n*` times the number of permutations
/// with word `U^{δ_1} D^{δ_2} …`.
pub fn sharp_caterpillar(
    kind: &CaterpillarType,
    aut_order: usize,
    orientation_symmetric: bool,
) -> Result<BigUint> {
    let factor = n_star(kind.edge_count(), aut_order, orientation_symmetric)?;
    Ok(BigUint::from(factor) * count_updown_determinant(&kind.word()))
}

/// The index sequence `0 = s_0 < s_1 < … < 2e - 1` feeding the caterpillar
/// determinant: the positions covered by the even-numbered δ blocks,
/// `ε_{2i-1} + 1, …, ε_{2i}` with `ε_i = δ_1 + … + δ_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SValues {
    values: Vec<usize>,
}

impl SValues {
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn determinant(&self) -> BigInt {
        binomial_determinant(&self.values)
    }
}

pub fn build_svalues(kind: &CaterpillarType) -> Result<SValues> {
    let delta = kind.delta();
    if delta.is_empty() {
        return Err(Error::InvalidCaterpillarType(Vec::new()));
    }
    let mut values = vec![0];
    let mut eps = 0;
    for (i, &d) in delta.iter().enumerate() {
        if i % 2 == 1 {
            values.extend(eps + 1..=eps + d);
        }
        eps += d;
    }
    values.push(2 * kind.edge_count() - 1);
    debug_assert!(values.windows(2).all(|w| w[0] < w[1]));
    Ok(SValues { values })
}

/// `K_k`: alternating permutations of length `k`, with `K_0 = K_1 = 1`.
pub fn euler_bernoulli(k: usize) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    count_updown_determinant(&UpDownWord::alternating(k - 1))
}
