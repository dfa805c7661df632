//! Splitting types of vector bundles on the projective line.
//!
//! A rank `r` bundle on `P^1` is `O(b_1) + ... + O(b_r)` with
//! `b_1 >= ... >= b_r`. Flat specialization moves the type up in the
//! dominance order: the special fiber's prefix sums dominate the general
//! fiber's. Every API here names its arguments `general` / `special` to keep
//! that direction explicit.

use std::fmt;

use crate::error::{Error, Result};

/// Nonincreasing sequence of line-bundle degrees.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    parts: Vec<i64>,
}

impl SplittingType {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSplittingType(parts));
        }
        Ok(Self { parts })
    }

    /// Sorts arbitrary degrees into a splitting type.
    pub fn from_unsorted(mut parts: Vec<i64>) -> Result<Self> {
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn degree(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> i64 {
        self.parts[0]
    }

    pub fn min_part(&self) -> i64 {
        self.parts[self.parts.len() - 1]
    }

    pub fn spread(&self) -> i64 {
        self.max_part() - self.min_part()
    }

    /// Partial sums `b_1, b_1 + b_2, ...`, the Harder-Narasimhan polygon.
    pub fn prefix_sums(&self) -> Vec<i64> {
        self.parts
            .iter()
            .scan(0, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect()
    }

    /// `h^1(End)` of the bundle: sum of `max(0, b_j - b_i - 1)` over ordered pairs.
    pub fn h1_end(&self) -> i64 {
        let mut total = 0;
        for &bi in &self.parts {
            for &bj in &self.parts {
                total += (bj - bi - 1).max(0);
            }
        }
        total
    }

    pub fn is_rigid(&self) -> bool {
        let rigid = self.spread() <= 1;
        debug_assert_eq!(rigid, self.h1_end() == 0);
        rigid
    }

    /// `h^0` of the bundle twisted by `O(k)`.
    pub fn sections(&self, k: i64) -> i64 {
        self.parts.iter().map(|&b| (b + k + 1).max(0)).sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.pad(&format!("({})", parts.join(",")))
    }
}

/// The unique rigid type of rank `r` and degree `d`:
/// `a` repeated `r - x` times then `a - 1` repeated `x` times,
/// with `a = ceil(d / r)` and `x = a r - d`.
pub fn rigid_type(r: i64, d: i64) -> Result<SplittingType> {
    if r < 1 {
        return Err(Error::InvalidRank { rank: r, min: 1 });
    }
    let a = -(-d).div_euclid(r);
    let x = a * r - d;
    debug_assert!((0..r).contains(&x));
    let mut parts = vec![a; (r - x) as usize];
    parts.extend(std::iter::repeat_n(a - 1, x as usize));
    SplittingType::new(parts)
}

/// The jumping type `(a+1, a, ..., a, a-1)` of rank `r`.
pub fn jumping_type(r: i64, a: i64) -> Result<SplittingType> {
    if r < 2 {
        return Err(Error::InvalidRank { rank: r, min: 2 });
    }
    let mut parts = Vec::with_capacity(r as usize);
    parts.push(a + 1);
    parts.extend(std::iter::repeat_n(a, r as usize - 2));
    parts.push(a - 1);
    SplittingType::new(parts)
}

/// Dominance test: `special` arises as a flat limit of `general` iff the
/// ranks and degrees agree and every prefix sum of `special` is at least the
/// matching prefix sum of `general`.
pub fn specializes(general: &SplittingType, special: &SplittingType) -> bool {
    if general.rank() != special.rank() || general.degree() != special.degree() {
        return false;
    }
    general.prefix_sums().iter().zip(special.prefix_sums()).all(|(g, s)| s >= *g)
}

/// Semicontinuity of `h^0(O(k))` along the family, checked over the twist
/// window `-(max part) - 1 <= k <= -(min part) + 1` taken over both types.
/// Outside the window both section counts are 0 or both are `degree + r(k+1)`.
pub fn semicontinuity_oracle(general: &SplittingType, special: &SplittingType) -> Result<bool> {
    if general.rank() != special.rank() || general.degree() != special.degree() {
        return Err(Error::RankDegreeMismatch { general: general.to_string(), special: special.to_string() });
    }
    let hi = general.max_part().max(special.max_part());
    let lo = general.min_part().min(special.min_part());
    let window = (-hi - 1)..=(-lo + 1);
    debug_assert!({
        let below = -hi - 2;
        let above = -lo + 2;
        general.sections(below) == special.sections(below) && general.sections(above) == special.sections(above)
    });
    Ok(window.into_iter().all(|k| special.sections(k) >= general.sections(k)))
}

/// Obstruction dimensions `o_1, ..., o_{n_max}` for lifting a splitting of
/// type `T` from a fiber `D` to its formal neighborhood, where the conormal
/// bundle of `D` is `O(t) + O`. `o_n` is `h^1` of `End` twisted by
/// `J^n / J^{n+1} = O + O(t) + ... + O(nt)`.
pub fn formal_lift_obstructions(t_type: &SplittingType, t: i64, n_max: i64) -> Result<Vec<i64>> {
    if t < 1 {
        return Err(Error::OutOfRange { what: "conormal degree t", value: t, min: 1 });
    }
    if n_max < 1 {
        return Err(Error::OutOfRange { what: "n_max", value: n_max, min: 1 });
    }
    let parts = t_type.parts();
    let level = |k: i64| -> i64 {
        let mut total = 0;
        for &bi in parts {
            for &bj in parts {
                total += (-(k * t + bj - bi) - 1).max(0);
            }
        }
        total
    };
    let mut running = level(0);
    Ok((1..=n_max)
        .map(|n| {
            running += level(n);
            running
        })
        .collect())
}

/// Every nonincreasing sequence of length `r`, sum `d` and spread at most
/// `max_spread`, in ascending lexicographic order.
pub fn enumerate_types(r: i64, d: i64, max_spread: i64) -> Result<Vec<SplittingType>> {
    if r < 1 {
        return Err(Error::InvalidRank { rank: r, min: 1 });
    }
    if max_spread < 0 {
        return Err(Error::OutOfRange { what: "max_spread", value: max_spread, min: 0 });
    }
    let floor = d.div_euclid(r);
    let ceil = -(-d).div_euclid(r);
    let lo = ceil - max_spread;
    let hi = floor + max_spread;

    fn extend(
        prefix: &mut Vec<i64>,
        remaining: usize,
        sum_left: i64,
        cap: i64,
        lo: i64,
        max_spread: i64,
        out: &mut Vec<SplittingType>,
    ) {
        if remaining == 0 {
            if sum_left == 0 && prefix[0] - prefix[prefix.len() - 1] <= max_spread {
                out.push(SplittingType { parts: prefix.clone() });
            }
            return;
        }
        let rem = remaining as i64;
        let floor = prefix.first().map_or(lo, |&first| lo.max(first - max_spread));
        // later parts lie in [floor, v]
        for v in (floor..=cap).rev() {
            if v * rem < sum_left {
                break;
            }
            if sum_left - v < floor * (rem - 1) {
                continue;
            }
            prefix.push(v);
            extend(prefix, remaining - 1, sum_left - v, v, lo, max_spread, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(r as usize), r as usize, d, hi, lo, max_spread, &mut out);
    out.sort();
    Ok(out)
}

/// A chain of elementary moves from the rigid type of the same rank and
/// degree up to `target`, each step a flat specialization of the previous.
///
/// An elementary move raises one part by 1 and lowers a later part by 1,
/// keeping the sequence sorted.
pub fn specialization_chain(target: &SplittingType) -> Vec<SplittingType> {
    let r = target.rank() as i64;
    let start = rigid_type(r, target.degree()).expect("rank of a splitting type is positive");
    assert!(specializes(&start, target), "rigid type must be dominated by every type");

    let target_sums = target.prefix_sums();
    let mut chain = vec![start];
    loop {
        let current = chain.last().expect("chain is nonempty");
        if current == target {
            break;
        }
        let next = elementary_moves(current)
            .find(|cand| cand.prefix_sums().iter().zip(&target_sums).all(|(c, t)| c <= t))
            .expect("a dominated type always admits an elementary move toward its target");
        chain.push(next);
    }
    chain
}

/// All types reachable from `t` by one sorted elementary move, preferring
/// the earliest raised part and the latest lowered part.
pub fn elementary_moves(t: &SplittingType) -> impl Iterator<Item = SplittingType> + '_ {
    let p = t.parts();
    let n = p.len();
    (0..n).flat_map(move |i| {
        (i + 1..n).rev().filter_map(move |j| {
            // raising p[i] keeps order only if it is the first of its value block,
            // lowering p[j] only if it is the last of its block
            if i > 0 && p[i - 1] == p[i] {
                return None;
            }
            if j + 1 < n && p[j + 1] == p[j] {
                return None;
            }
            let mut parts = p.to_vec();
            parts[i] += 1;
            parts[j] -= 1;
            Some(SplittingType { parts })
        })
    })
}
