//! Cyclic bonds, separators, membership in `K_n` / `CK_n`, and enumeration.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum BondKind {
    Regular,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Orientation {
    Vertical,
    Horizontal,
}

/// An adjacency `(σ_i, σ_{i+1})` whose values differ by 1, under the cyclic
/// convention `σ_{n+1} = σ_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bond {
    pub kind: BondKind,
    /// Position pair: `(i, i+1)` for regular, `(n, 1)` for edge.
    pub positions: (usize, usize),
    pub values: (u32, u32),
}

/// An entry whose deletion creates a new cyclic bond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub value: u32,
    pub position: usize,
    pub kind: BondKind,
    pub orientation: Orientation,
}

/// Which permutation class an operation targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum KingClass {
    King,
    Cylindrical,
}

/// All cyclic bonds of `σ`.
///
/// For `n = 2` the single unordered adjacency `{1,2}` is both a regular and an
/// edge bond; it is reported once, classified REGULAR.
pub fn bonds(sigma: &Permutation) -> Vec<Bond> {
    let n = sigma.len();
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    for i in 1..n {
        if sigma.at(i).abs_diff(sigma.at(i + 1)) == 1 {
            out.push(Bond {
                kind: BondKind::Regular,
                positions: (i, i + 1),
                values: (sigma.at(i), sigma.at(i + 1)),
            });
        }
    }
    if n >= 3 && sigma.at(n).abs_diff(sigma.at(1)) == 1 {
        out.push(Bond {
            kind: BondKind::Edge,
            positions: (n, 1),
            values: (sigma.at(n), sigma.at(1)),
        });
    }
    out
}

/// No regular bonds (`|σ_{i+1} − σ_i| > 1` for all i); equivalently `br ≥ 3`.
pub fn is_king(sigma: &Permutation) -> bool {
    let n = sigma.len();
    if n == 0 {
        return false;
    }
    (1..n).all(|i| sigma.at(i).abs_diff(sigma.at(i + 1)) > 1)
}

/// No cyclic bonds; equivalently `cbr ≥ 3`.
pub fn is_cylindrical_king(sigma: &Permutation) -> bool {
    let n = sigma.len();
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    is_king(sigma) && sigma.at(1).abs_diff(sigma.at(n)) > 1
}

/// Membership test dispatched on the class.
pub fn in_class(sigma: &Permutation, class: KingClass) -> bool {
    match class {
        KingClass::King => is_king(sigma),
        KingClass::Cylindrical => is_cylindrical_king(sigma),
    }
}

fn extend(word: &mut Vec<u32>, used: &mut Vec<bool>, n: usize, class: KingClass, out: &mut Vec<Permutation>) {
    if word.len() == n {
        out.push(Permutation::from_word(word.clone()).unwrap());
        return;
    }
    let last_slot = word.len() + 1 == n;
    for v in 1..=n as u32 {
        if used[v as usize - 1] {
            continue;
        }
        if let Some(&prev) = word.last() {
            if prev.abs_diff(v) <= 1 {
                continue;
            }
        }
        if last_slot && class == KingClass::Cylindrical && n >= 2 && word[0].abs_diff(v) <= 1 {
            continue;
        }
        word.push(v);
        used[v as usize - 1] = true;
        extend(word, used, n, class, out);
        word.pop();
        used[v as usize - 1] = false;
    }
}

fn enumerate_with_first(n: usize, class: KingClass, first: u32) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = vec![first];
    let mut used = vec![false; n];
    used[first as usize - 1] = true;
    if n == 1 {
        out.push(Permutation::from_word(word).unwrap());
        return out;
    }
    extend(&mut word, &mut used, n, class, &mut out);
    out
}

/// Enumerates `K_n` or `CK_n` in lexicographic order of the word.
///
/// Depth-first placement by position: a prefix is pruned as soon as it has a
/// regular bond, and the edge constraint is applied when placing the last
/// element.  The search space is partitioned by first entry; partitions run
/// concurrently and concatenate back in lexicographic order.
pub fn enumerate(n: usize, class: KingClass) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    (1..=n as u32)
        .into_par_iter()
        .map(|first| enumerate_with_first(n, class, first))
        .reduce(Vec::new, |mut acc, mut part| {
            acc.append(&mut part);
            acc
        })
}

/// Number of members of `K_n` or `CK_n`, without materializing them.
pub fn count(n: usize, class: KingClass) -> u64 {
    enumerate(n, class).len() as u64
}

/// All cyclic separators of `σ`, one record per applicable
/// (kind, orientation) classification.
///
/// Classification follows the deletion semantics directly:
/// - REGULAR VERTICAL: the positional neighbors of the entry have values
///   differing by 1, so they form a new regular bond when the entry closes up.
/// - REGULAR HORIZONTAL: the values `a−1` and `a+1` sit at adjacent positions
///   and become value-adjacent once `a` is removed.
/// - EDGE VERTICAL: deleting the first or last entry makes the remaining
///   endpoints a new edge bond.
/// - EDGE HORIZONTAL: `σ_1, σ_i, σ_n` are consecutive values in increasing or
///   decreasing order, so deleting `σ_i` bonds the two endpoints.
pub fn separators(sigma: &Permutation) -> Vec<Separator> {
    let n = sigma.len();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    for i in 1..=n {
        let a = sigma.at(i);
        if i >= 2 && i <= n - 1 && sigma.at(i - 1).abs_diff(sigma.at(i + 1)) == 1 {
            out.push(Separator {
                value: a,
                position: i,
                kind: BondKind::Regular,
                orientation: Orientation::Vertical,
            });
        }
        if a >= 2 && a as usize <= n - 1 {
            let below = sigma.position_of(a - 1).unwrap();
            let above = sigma.position_of(a + 1).unwrap();
            if below.abs_diff(above) == 1 {
                out.push(Separator {
                    value: a,
                    position: i,
                    kind: BondKind::Regular,
                    orientation: Orientation::Horizontal,
                });
            }
        }
        if i == n && sigma.at(1).abs_diff(sigma.at(n - 1)) == 1 {
            out.push(Separator {
                value: a,
                position: i,
                kind: BondKind::Edge,
                orientation: Orientation::Vertical,
            });
        }
        if i == 1 && sigma.at(n).abs_diff(sigma.at(2)) == 1 {
            out.push(Separator {
                value: a,
                position: i,
                kind: BondKind::Edge,
                orientation: Orientation::Vertical,
            });
        }
        if i > 1 && i < n {
            let first = sigma.at(1);
            let last = sigma.at(n);
            let monotone = (first + 1 == a && a + 1 == last) || (last + 1 == a && a + 1 == first);
            if monotone {
                out.push(Separator {
                    value: a,
                    position: i,
                    kind: BondKind::Edge,
                    orientation: Orientation::Horizontal,
                });
            }
        }
    }
    out
}

/// `{ ∇*_a(σ) : a ∈ 1..n } ∩ CK_{n−1}`, deduplicated.
pub fn ck_children(sigma: &Permutation) -> Result<BTreeSet<Permutation>> {
    if !is_cylindrical_king(sigma) || sigma.len() < 2 {
        return Err(Error::NotInClass {
            perm: sigma.to_string(),
            class: format!("CK_{} with n >= 2", sigma.len()),
        });
    }
    let mut out = BTreeSet::new();
    for a in 1..=sigma.len() as u32 {
        let child = sigma.delete_value(a)?;
        if is_cylindrical_king(&child) {
            out.insert(child);
        }
    }
    Ok(out)
}
