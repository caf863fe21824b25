//! Manhattan and cyclic-Manhattan distances, breadth, and cyclic breadth.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A breadth value together with the minimizing pair of positions.
///
/// `value: None` is the UNBOUNDED sentinel for `n ≤ 1`, where no pair exists;
/// it compares `≥` any finite bound so that membership predicates need no
/// special case for `K_1 = CK_1 = S_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub value: Option<u32>,
    pub witness: Option<(usize, usize)>,
}

impl MetricReport {
    pub const UNBOUNDED: MetricReport = MetricReport {
        value: None,
        witness: None,
    };

    pub fn at_least(&self, bound: u32) -> bool {
        self.value.map_or(true, |v| v >= bound)
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i > n {
        return Err(Error::PositionOutOfRange { pos: i, n });
    }
    if j == 0 || j > n {
        return Err(Error::PositionOutOfRange { pos: j, n });
    }
    if i == j {
        return Err(Error::EqualPositions(i));
    }
    Ok(())
}

/// `d_σ(i,j) = |i−j| + |σ_i−σ_j|`.
pub fn manhattan_distance(sigma: &Permutation, i: usize, j: usize) -> Result<u32> {
    check_pair(sigma.len(), i, j)?;
    Ok(i.abs_diff(j) as u32 + sigma.at(i).abs_diff(sigma.at(j)))
}

/// `||j−i|| = min(j−i, n−j+i)` for `i < j`: the shorter arc between two
/// positions on the circle.
pub fn cyclic_position_distance(n: usize, i: usize, j: usize) -> Result<u32> {
    check_pair(n, i, j)?;
    if i >= j {
        return Err(Error::UnorderedPositions { i, j });
    }
    Ok((j - i).min(n - j + i) as u32)
}

/// `cd_σ(i,j) = |σ_j−σ_i| + ||j−i||`, extended symmetrically to `i > j`.
pub fn cyclic_distance(sigma: &Permutation, i: usize, j: usize) -> Result<u32> {
    check_pair(sigma.len(), i, j)?;
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    Ok(sigma.at(i).abs_diff(sigma.at(j)) + cyclic_position_distance(sigma.len(), i, j)?)
}

fn min_over_pairs(sigma: &Permutation, dist: impl Fn(usize, usize) -> u32) -> MetricReport {
    let n = sigma.len();
    if n <= 1 {
        return MetricReport::UNBOUNDED;
    }
    let mut best: Option<(u32, (usize, usize))> = None;
    for i in 1..=n {
        for j in i + 1..=n {
            let d = dist(i, j);
            // Strict improvement only: ties keep the lexicographically
            // smallest (i, j).
            if best.map_or(true, |(b, _)| d < b) {
                best = Some((d, (i, j)));
            }
        }
    }
    let (value, witness) = best.unwrap();
    MetricReport {
        value: Some(value),
        witness: Some(witness),
    }
}

/// `br(σ)`: the minimum Manhattan distance over all pairs.
pub fn breadth(sigma: &Permutation) -> MetricReport {
    min_over_pairs(sigma, |i, j| manhattan_distance(sigma, i, j).unwrap())
}

/// `cbr(σ)`: the minimum cyclic distance over all pairs.
pub fn cyclic_breadth(sigma: &Permutation) -> MetricReport {
    min_over_pairs(sigma, |i, j| cyclic_distance(sigma, i, j).unwrap())
}
